//! Bigraded Hilbert series of the Koszul homology `H(K^R)` for rings whose
//! Taylor resolution is minimal.
//!
//! The homology has a k-basis indexed by subsets `S` of the generators, in
//! homological degree `|S|`. A basis class factors as a product of the
//! classes of the connected pieces of `S` in the coprimality graph, and a
//! connected `S` is indecomposable. So the class of `S` sits in
//! `X`-degree `c(S)` (number of components) and `Y`-degree `|S|`, giving
//!
//! ```text
//! Hilb(H(K^R))(X, Y) = 1 + Σ_{S ≠ ∅} X^{c(S)} Y^{|S|}.
//! ```

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::exec::{self, Execution};
use crate::graph::CoprimalityGraph;
use crate::ideal::MonomialIdeal;
use crate::taylor::{check_cap, is_taylor_minimal, Subset, DEFAULT_MAX_T};

/// A polynomial `Σ c_{a,b} X^a Y^b` with big-integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BigradedPolynomial {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BigradedPolynomial {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_terms<I: IntoIterator<Item = (u32, u32, i64)>>(terms: I) -> Self {
        let mut p = Self::new();
        for (a, b, c) in terms {
            p.add_term(a, b, BigInt::from(c));
        }
        p
    }

    pub fn add_term(&mut self, a: u32, b: u32, c: BigInt) {
        let slot = self.terms.entry((a, b)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn coeff(&self, a: u32, b: u32) -> BigInt {
        self.terms.get(&(a, b)).cloned().unwrap_or_default()
    }

    /// Nonzero terms `(a, b, c)` ordered by `Y`-degree, then `X`-degree.
    pub fn terms(&self) -> Vec<(u32, u32, BigInt)> {
        let mut out: Vec<_> = self
            .terms
            .iter()
            .map(|(&(a, b), c)| (a, b, c.clone()))
            .collect();
        out.sort_by_key(|&(a, b, _)| (b, a));
        out
    }

    /// Sum of the coefficients of `X^a Y^b` over all `a`.
    pub fn y_slice_sum(&self, b: u32) -> BigInt {
        self.terms
            .iter()
            .filter(|(&(_, bb), _)| bb == b)
            .map(|(_, c)| c)
            .sum()
    }

    pub fn max_y_degree(&self) -> u32 {
        self.terms.keys().map(|&(_, b)| b).max().unwrap_or(0)
    }

    pub fn eval_at_ones(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl fmt::Display for BigradedPolynomial {
    /// `1 + 3*X*Y + 2*X*Y^2 + X^2*Y^2 + X*Y^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (a, b, c)) in terms.iter().enumerate() {
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut factors = Vec::new();
            if !mag.is_one() || (*a == 0 && *b == 0) {
                factors.push(mag.to_string());
            }
            for (name, e) in [("X", *a), ("Y", *b)] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

fn require_minimal(ideal: &MonomialIdeal) -> Result<()> {
    is_taylor_minimal(ideal).map_err(|w| w.into_error())
}

/// Hilbert series of `H(K^R)` with the default lattice cap and strategy.
pub fn homology_hilbert_series(ideal: &MonomialIdeal) -> Result<BigradedPolynomial> {
    homology_hilbert_series_with(ideal, DEFAULT_MAX_T, Execution::default())
}

pub fn homology_hilbert_series_with(
    ideal: &MonomialIdeal,
    cap: usize,
    exec: Execution,
) -> Result<BigradedPolynomial> {
    require_minimal(ideal)?;
    let t = ideal.t();
    check_cap(t, cap)?;
    let graph = CoprimalityGraph::new(ideal);
    let width = t + 1;
    // counts[c * width + |S|]
    let counts = exec::fold_range(
        exec,
        1..1u64 << t,
        || vec![0u64; width * width],
        |mut acc, s| {
            let c = graph.count_components(s) as usize;
            acc[c * width + s.count_ones() as usize] += 1;
            acc
        },
        |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        },
    );
    let mut h = BigradedPolynomial::new();
    h.add_term(0, 0, BigInt::one());
    for c in 0..width {
        for m in 0..width {
            let k = counts[c * width + m];
            if k > 0 {
                h.add_term(c as u32, m as u32, BigInt::from(k));
            }
        }
    }
    Ok(h)
}

/// Subsets whose class is indecomposable: those inducing a connected
/// subgraph of the coprimality graph, in increasing bitmask order.
pub fn indecomposable_generators(ideal: &MonomialIdeal) -> Result<Vec<Subset>> {
    indecomposable_generators_with(ideal, DEFAULT_MAX_T, Execution::default())
}

pub fn indecomposable_generators_with(
    ideal: &MonomialIdeal,
    cap: usize,
    exec: Execution,
) -> Result<Vec<Subset>> {
    require_minimal(ideal)?;
    let t = ideal.t();
    check_cap(t, cap)?;
    let graph = CoprimalityGraph::new(ideal);
    let mut found = exec::fold_range(
        exec,
        1..1u64 << t,
        Vec::new,
        |mut acc, s| {
            if graph.is_connected(s) {
                acc.push(s);
            }
            acc
        },
        |mut a, mut b| {
            a.append(&mut b);
            a
        },
    );
    found.sort_unstable();
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::taylor::subset_from_one_based;

    fn ideal(s: &str) -> MonomialIdeal {
        s.parse().unwrap()
    }

    #[test]
    fn three_generator_example() {
        let h = homology_hilbert_series(&ideal("vars: x,y,z; x^2*y, y^2*z, z^2")).unwrap();
        let expected =
            BigradedPolynomial::from_terms([(0, 0, 1), (1, 1, 3), (1, 2, 2), (2, 2, 1), (1, 3, 1)]);
        assert_eq!(h, expected);
        assert_eq!(h.to_string(), "1 + 3*X*Y + 2*X*Y^2 + X^2*Y^2 + X*Y^3");
    }

    #[test]
    fn coprime_pair() {
        let h = homology_hilbert_series(&ideal("vars: x,y; x^2, y^2")).unwrap();
        assert_eq!(
            h,
            BigradedPolynomial::from_terms([(0, 0, 1), (1, 1, 2), (2, 2, 1)])
        );
    }

    #[test]
    fn five_generator_band() {
        let i = ideal("vars: x,y,z,w,u; x^2*y*z, y^2*z*w, z^2*w*u, w^2*u, u^2");
        let h = homology_hilbert_series(&i).unwrap();
        let expected = BigradedPolynomial::from_terms([
            (0, 0, 1),
            (1, 1, 5),
            (1, 2, 7),
            (2, 2, 3),
            (1, 3, 8),
            (2, 3, 2),
            (1, 4, 5),
            (1, 5, 1),
        ]);
        assert_eq!(h, expected);

        let decomposable: Vec<Subset> = [&[1, 4][..], &[1, 5], &[2, 5], &[1, 2, 5], &[1, 4, 5]]
            .iter()
            .map(|s| subset_from_one_based(s))
            .collect();
        let gens = indecomposable_generators(&i).unwrap();
        let expected: Vec<Subset> = (1..32).filter(|s| !decomposable.contains(s)).collect();
        assert_eq!(gens, expected);
    }

    #[test]
    fn coprime_ideal_has_only_singletons() {
        let gens = indecomposable_generators(&ideal("vars: a,b,c; a^2, b^2, c^3")).unwrap();
        assert_eq!(gens, [1, 2, 4]);
    }

    #[test]
    fn rejects_non_minimal() {
        let err = homology_hilbert_series(&ideal("vars: x,y; x^2, x*y, y^2")).unwrap_err();
        assert!(matches!(err, Error::NotTaylorMinimal { .. }));
    }

    #[test]
    fn strategies_agree() {
        let i = ideal("vars: x,y,z,w,u; x^2*y*z, y^2*z*w, z^2*w*u, w^2*u, u^2");
        assert_eq!(
            homology_hilbert_series_with(&i, 24, Execution::Sequential).unwrap(),
            homology_hilbert_series_with(&i, 24, Execution::Parallel).unwrap()
        );
    }
}
