use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;

use super::{IntPolynomial, RationalSeries};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::homology::{homology_hilbert_series_with, BigradedPolynomial};
use crate::ideal::MonomialIdeal;
use crate::taylor::DEFAULT_MAX_T;

/// `H(X, Y) ↦ H(-z, z)`: the term `c X^a Y^b` becomes `c (-1)^a z^(a+b)`.
pub fn substitute_bigraded(h: &BigradedPolynomial) -> IntPolynomial {
    let terms = h.terms();
    let top = terms
        .iter()
        .map(|&(a, b, _)| (a + b) as usize)
        .max()
        .unwrap_or(0);
    let mut coeffs = vec![BigInt::default(); top + 1];
    for (a, b, c) in terms {
        let k = (a + b) as usize;
        if a % 2 == 0 {
            coeffs[k] += c;
        } else {
            coeffs[k] -= c;
        }
    }
    IntPolynomial::new(coeffs)
}

/// `(1+z)^n / H(-z, z)` before cancelling common factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoincareFormula {
    pub n: u32,
    pub denominator: IntPolynomial,
}

impl PoincareFormula {
    pub fn reduced(&self) -> Result<RationalSeries> {
        RationalSeries::new(
            IntPolynomial::one_plus_z_pow(self.n),
            self.denominator.clone(),
        )
    }
}

impl fmt::Display for PoincareFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.n {
            0 => f.write_str("1")?,
            1 => f.write_str("(1+z)")?,
            n => write!(f, "(1+z)^{n}")?,
        }
        if !self.denominator.is_one() {
            write!(f, " / ({})", self.denominator)?;
        }
        Ok(())
    }
}

/// The unreduced quotient `(1+z)^n / Hilb(H(K^R))(-z, z)`.
///
/// The ring is first reduced to `I ⊆ m²` with every variable used; unused
/// variables contribute `(1+z)` each and linear generators nothing.
pub fn poincare_formula(
    ideal: &MonomialIdeal,
    cap: usize,
    exec: Execution,
) -> Result<PoincareFormula> {
    crate::taylor::is_taylor_minimal(ideal).map_err(|w| w.into_error())?;
    let reduced = ideal.reduce();
    let h = homology_hilbert_series_with(&reduced.ideal, cap, exec)?;
    Ok(PoincareFormula {
        n: (reduced.ideal.n() + reduced.unused_dropped) as u32,
        denominator: substitute_bigraded(&h),
    })
}

/// Poincaré series of `A/I` for a minimal Taylor resolution, in lowest terms.
pub fn poincare_minimal_taylor(ideal: &MonomialIdeal) -> Result<RationalSeries> {
    poincare_minimal_taylor_with(ideal, DEFAULT_MAX_T, Execution::default())
}

pub fn poincare_minimal_taylor_with(
    ideal: &MonomialIdeal,
    cap: usize,
    exec: Execution,
) -> Result<RationalSeries> {
    poincare_formula(ideal, cap, exec)?.reduced()
}

/// Complete intersection of `t` pairwise coprime generators in `n`
/// variables: `(1+z)^n / (1-z^2)^t`.
///
/// The numerator is `(1+z)^n`, not `(1-z)^n`: the principal ideal `(x^2)`
/// in one variable must give `(1+z)/(1-z^2) = 1/(1-z)`.
pub fn poincare_complete_intersection(n: usize, t: usize) -> Result<RationalSeries> {
    if t > n {
        return Err(Error::InvalidParameter(format!(
            "a complete intersection needs t <= n, got t = {t}, n = {n}"
        )));
    }
    let den = IntPolynomial::from_i64(&[1, 0, -1]).pow(t as u32);
    RationalSeries::new(IntPolynomial::one_plus_z_pow(n as u32), den)
}

/// Generators sharing a common factor, minimal Taylor resolution:
/// `(1+z)^n / (1 - Σ_{i=1}^t C(t,i) z^(i+1))`.
pub fn poincare_trivially_golod(n: usize, t: usize) -> Result<RationalSeries> {
    if n == 0 || t == 0 {
        return Err(Error::InvalidParameter(
            "trivially Golod closed form needs n >= 1 and t >= 1".into(),
        ));
    }
    let t64 = t as u64;
    let mut coeffs = vec![BigInt::from(1), BigInt::from(0)];
    coeffs.extend((1..=t64).map(|i| -BigInt::from(binomial(t64, i))));
    RationalSeries::new(
        IntPolynomial::one_plus_z_pow(n as u32),
        IntPolynomial::new(coeffs),
    )
}
