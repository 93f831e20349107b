//! Monomial ideals whose Taylor resolution is minimal: Taylor complexes,
//! polarization, Koszul homology, Poincaré series, classification of the
//! Golod and complete-intersection cases, and a brute-force `Tor` oracle.

pub mod classification;
pub mod corpus;
pub mod error;
pub mod exec;
pub mod graph;
pub mod homology;
pub mod ideal;
pub mod monomial;
pub mod oracle;
pub mod parse;
pub mod partitions;
pub mod polarization;
pub mod series;
pub mod taylor;

pub use error::{Error, Result};
pub use exec::Execution;
pub use homology::{homology_hilbert_series, BigradedPolynomial};
pub use ideal::{MonomialIdeal, RingReduction};
pub use monomial::Monomial;
pub use series::{IntPolynomial, RationalSeries};
pub use taylor::{is_taylor_minimal, TaylorComplex};
