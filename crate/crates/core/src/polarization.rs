//! Polarization of a monomial ideal into a squarefree one.
//!
//! Variable `x_i` is replaced by a block of `I(x_i)` fresh variables, where
//! `I(x_i)` is the largest exponent of `x_i` among the generators; a factor
//! `x_i^a` becomes the product of the first `a` variables of that block. The
//! original ring is the polarized one modulo a regular sequence of `N - n`
//! linear forms, so `P_R(z) = P_S(z) / (1+z)^(N-n)`.

use std::ops::Range;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::series::{IntPolynomial, RationalSeries};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExponentProfile {
    /// `I(x_i)` per source variable; zero for unused variables.
    pub maxima: Vec<u32>,
    /// `N = Σ I(x_i)`.
    pub total: u32,
}

pub fn exponent_profile(ideal: &MonomialIdeal) -> ExponentProfile {
    let mut maxima = vec![0u32; ideal.n()];
    for g in ideal.generators() {
        for (m, &e) in maxima.iter_mut().zip(g.exponents()) {
            *m = (*m).max(e);
        }
    }
    let total = maxima.iter().sum();
    ExponentProfile { maxima, total }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Polarization {
    pub source: MonomialIdeal,
    pub target: MonomialIdeal,
    /// Target variable block (0-based, half-open) of each source variable.
    pub slots: Vec<Range<usize>>,
}

impl Polarization {
    /// `N - n`, the length of the linear regular sequence.
    pub fn added_variables(&self) -> i64 {
        self.target.n() as i64 - self.source.n() as i64
    }
}

pub fn polarize(ideal: &MonomialIdeal) -> Polarization {
    let profile = exponent_profile(ideal);
    let mut slots = Vec::with_capacity(ideal.n());
    let mut next = 0usize;
    for &m in &profile.maxima {
        slots.push(next..next + m as usize);
        next += m as usize;
    }
    let width = next;
    let variables: Vec<String> = (1..=width).map(|k| format!("y{k}")).collect();
    let generators = ideal
        .generators()
        .iter()
        .map(|g| {
            let mut exps = vec![0u32; width];
            for (i, &a) in g.exponents().iter().enumerate() {
                for e in &mut exps[slots[i].start..slots[i].start + a as usize] {
                    *e = 1;
                }
            }
            Monomial::new(exps)
        })
        .collect();
    // distinct antichain members stay distinct and incomparable
    let target = MonomialIdeal::new(variables, generators)
        .expect("polarization of a minimal generating set is minimal");
    Polarization {
        source: ideal.clone(),
        target,
        slots,
    }
}

/// `P_S / (1+z)^(N-n)`.
pub fn poincare_depolarize(
    p_polarized: &RationalSeries,
    big_n: usize,
    n: usize,
) -> Result<RationalSeries> {
    if big_n < n {
        return Err(Error::InvalidParameter(format!(
            "polarized variable count {big_n} is below the source count {n}"
        )));
    }
    let divisor =
        RationalSeries::from_polynomial(IntPolynomial::one_plus_z_pow((big_n - n) as u32));
    p_polarized.divide(&divisor)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(s: &str) -> MonomialIdeal {
        s.parse().unwrap()
    }

    #[test]
    fn profile_examples() {
        let p = exponent_profile(&ideal("vars: x1,x2,x3; x1^3, x2^2*x3, x1*x2*x3"));
        assert_eq!((p.maxima.as_slice(), p.total), (&[3, 2, 1][..], 6));
        let p = exponent_profile(&ideal("vars: x; x^4"));
        assert_eq!((p.maxima.as_slice(), p.total), (&[4][..], 4));
        let p = exponent_profile(&ideal("vars: a,b,c; a*b, b*c"));
        assert_eq!(p.maxima, [1, 1, 1]);
    }

    #[test]
    fn polarizes_mixed_example() {
        let p = polarize(&ideal("vars: x1,x2,x3; x1^3, x2^2*x3, x1*x2*x3"));
        assert_eq!(p.target.n(), 6);
        assert_eq!(p.target.generators_string(), "y1*y2*y3, y4*y5*y6, y1*y4*y6");
        assert_eq!(p.slots, vec![0..3, 3..5, 5..6]);
        assert_eq!(p.added_variables(), 3);
    }

    #[test]
    fn first_slots_rule() {
        let p = polarize(&ideal("vars: x,y; x^2*y^2"));
        assert_eq!(p.target.generators_string(), "y1*y2*y3*y4");
        assert_eq!(p.slots, vec![0..2, 2..4]);
    }

    #[test]
    fn squarefree_is_fixed_up_to_renaming() {
        let src = ideal("vars: a,b,c; a*b, b*c");
        let p = polarize(&src);
        let exps = |i: &MonomialIdeal| -> Vec<Vec<u32>> {
            i.generators()
                .iter()
                .map(|g| g.exponents().to_vec())
                .collect()
        };
        assert_eq!(exps(&p.target), exps(&src));
        assert_eq!(p.added_variables(), 0);
    }

    #[test]
    fn depolarize() {
        let p = RationalSeries::from_polynomial(IntPolynomial::one_plus_z_pow(2));
        let q = poincare_depolarize(&p, 4, 3).unwrap();
        assert_eq!(
            q,
            RationalSeries::from_polynomial(IntPolynomial::one_plus_z_pow(1))
        );
        assert_eq!(poincare_depolarize(&p, 3, 3).unwrap(), p);
        assert!(poincare_depolarize(&p, 2, 3).is_err());
    }
}
