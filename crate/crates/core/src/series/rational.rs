use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntPolynomial;
use crate::error::{Error, Result};

/// A power series given as `numerator / denominator` in lowest terms.
///
/// Normal form: no common polynomial factor, the integer content of both
/// parts together is 1, and the denominator has a positive constant term.
/// Two routes to the same function therefore compare equal with `==`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalSeries {
    numerator: IntPolynomial,
    denominator: IntPolynomial,
}

impl RationalSeries {
    pub fn new(numerator: IntPolynomial, denominator: IntPolynomial) -> Result<Self> {
        if denominator.coeff(0).is_zero() {
            return Err(Error::SingularDenominator);
        }
        if numerator.is_zero() {
            return Ok(RationalSeries {
                numerator,
                denominator: IntPolynomial::one(),
            });
        }
        let g = numerator.gcd(&denominator);
        let mut num = numerator.div_exact(&g).expect("gcd divides the numerator");
        let mut den = denominator
            .div_exact(&g)
            .expect("gcd divides the denominator");
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = num.div_scalar(&c).unwrap();
            den = den.div_scalar(&c).unwrap();
        }
        if den.coeff(0).is_negative() {
            num = -&num;
            den = -&den;
        }
        Ok(RationalSeries {
            numerator: num,
            denominator: den,
        })
    }

    pub fn from_polynomial(p: IntPolynomial) -> Self {
        Self::new(p, IntPolynomial::one()).expect("denominator 1")
    }

    pub fn one() -> Self {
        Self::from_polynomial(IntPolynomial::one())
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.denominator
    }

    pub fn multiply(&self, other: &Self) -> Self {
        Self::new(
            &self.numerator * &other.numerator,
            &self.denominator * &other.denominator,
        )
        .expect("product of nonsingular denominators")
    }

    /// `self / other`; `other` must be invertible as a power series.
    pub fn divide(&self, other: &Self) -> Result<Self> {
        Self::new(
            &self.numerator * &other.denominator,
            &self.denominator * &other.numerator,
        )
    }

    /// Power-series coefficients of `z^0 .. z^order`.
    ///
    /// Uses the recurrence `D_0 S_k = N_k - Σ_{i≥1} D_i S_{k-i}`; fails if a
    /// coefficient is not an integer.
    pub fn expand(&self, order: usize) -> Result<Vec<BigInt>> {
        let d = self.denominator.coeffs();
        let d0 = &d[0];
        let mut out: Vec<BigInt> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut acc = self.numerator.coeff(k);
            for i in 1..d.len().min(k + 1) {
                acc -= &d[i] * &out[k - i];
            }
            let (q, r) = acc.div_rem(d0);
            if !r.is_zero() {
                return Err(Error::NonIntegralExpansion { index: k });
            }
            out.push(q);
        }
        Ok(out)
    }
}

fn paren(p: &IntPolynomial) -> String {
    if p.term_count() > 1 {
        format!("({p})")
    } else {
        p.to_string()
    }
}

impl fmt::Display for RationalSeries {
    /// `(1+z)^3 / (1 - 3*z^2 - 2*z^3)`: powers of `1+z` in the numerator
    /// are shown factored.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (k, rest) = self.numerator.split_one_plus_z();
        let factor = match k {
            0 => String::new(),
            1 => "(1+z)".to_string(),
            _ => format!("(1+z)^{k}"),
        };
        let num = if k == 0 {
            paren(&rest)
        } else if rest.is_one() {
            factor
        } else {
            format!("{factor}*{}", paren(&rest))
        };
        if self.denominator.is_one() {
            f.write_str(&num)
        } else {
            write!(f, "{num} / ({})", self.denominator)
        }
    }
}
