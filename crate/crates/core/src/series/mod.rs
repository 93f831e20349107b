//! Exact polynomial and rational-function arithmetic in `z`, and the
//! Poincaré series formulas built on it.

mod poincare;
mod poly;
mod rational;

pub use poincare::{
    poincare_complete_intersection, poincare_formula, poincare_minimal_taylor,
    poincare_minimal_taylor_with, poincare_trivially_golod, substitute_bigraded, PoincareFormula,
};
pub use poly::IntPolynomial;
pub use rational::RationalSeries;
