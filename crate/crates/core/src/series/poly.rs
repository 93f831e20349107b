use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Univariate polynomial in `z` with big-integer coefficients.
///
/// Coefficients are stored from the constant term upwards with no trailing
/// zeros; the zero polynomial is the empty vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `(1+z)^k`.
    pub fn one_plus_z_pow(k: u32) -> Self {
        let k = k as u64;
        Self::new(
            (0..=k)
                .map(|i| BigInt::from(num_integer::binomial(k, i)))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `z^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Non-negative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides every coefficient by `c`; `None` unless all are multiples.
    pub fn div_scalar(&self, c: &BigInt) -> Option<Self> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            let (q, r) = a.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(Self::new(out))
    }

    /// Content-free part with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        self.div_scalar(&c)
            .expect("content divides every coefficient")
    }

    /// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
    pub fn pseudo_rem(&self, b: &Self) -> Self {
        let db = b.degree().expect("pseudo-division by zero");
        let lb = b.leading().unwrap().clone();
        let mut r = self.clone();
        let Some(da) = r.degree() else {
            return r;
        };
        if da < db {
            return r;
        }
        let mut steps = da - db + 1;
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading().unwrap().clone();
            let mut shifted = vec![BigInt::zero(); dr - db];
            shifted.extend(b.coeffs.iter().map(|c| c * &lr));
            r = &r.scale(&lb) - &Self::new(shifted);
            steps -= 1;
        }
        let fix = num_traits::pow(lb, steps);
        r.scale(&fix)
    }

    /// Exact quotient `self / b`, `None` if `b` does not divide over the integers.
    pub fn div_exact(&self, b: &Self) -> Option<Self> {
        let db = b.degree()?;
        let lb = b.leading().unwrap();
        let mut r = self.clone();
        let Some(da) = r.degree() else {
            return Some(Self::zero());
        };
        if da < db {
            return None;
        }
        let mut q = vec![BigInt::zero(); da - db + 1];
        while let Some(dr) = r.degree() {
            if dr < db {
                return None;
            }
            let (c, rem) = r.leading().unwrap().div_rem(lb);
            if !rem.is_zero() {
                return None;
            }
            let mut shifted = vec![BigInt::zero(); dr - db];
            shifted.extend(b.coeffs.iter().map(|x| x * &c));
            r = &r - &Self::new(shifted);
            q[dr - db] = c;
        }
        Some(Self::new(q))
    }

    /// Primitive gcd over the rationals (positive leading coefficient),
    /// computed with the subresultant remainder sequence.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        if b.is_zero() {
            return a;
        }
        let mut g = BigInt::one();
        let mut h = BigInt::one();
        loop {
            let delta = (a.degree().unwrap() - b.degree().unwrap()) as u32;
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                return b.primitive_part();
            }
            if r.degree() == Some(0) {
                return Self::one();
            }
            a = b;
            let divisor = &g * num_traits::pow(h.clone(), delta as usize);
            b = r
                .div_scalar(&divisor)
                .expect("subresultant division is exact");
            g = a.leading().unwrap().clone();
            h = if delta == 0 {
                h
            } else {
                let num = num_traits::pow(g.clone(), delta as usize);
                let den = num_traits::pow(h, (delta - 1) as usize);
                num / den
            };
        }
    }

    /// Evaluates at an integer point.
    pub fn eval(&self, z: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * z + c)
    }

    /// Strips the largest power of `(1+z)` that divides this polynomial.
    pub fn split_one_plus_z(&self) -> (u32, Self) {
        let base = Self::one_plus_z_pow(1);
        let mut rest = self.clone();
        let mut k = 0;
        if rest.is_zero() {
            return (0, rest);
        }
        while let Some(q) = rest.div_exact(&base) {
            rest = q;
            k += 1;
        }
        (k, rest)
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for IntPolynomial {
    /// Ascending powers: `1 - 3*z^2 - 2*z^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let var = match i {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{i}"),
            };
            if i == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn trims_and_displays() {
        assert_eq!(p(&[1, 0, 0]).coeffs().len(), 1);
        assert_eq!(p(&[1, 0, -3, -2]).to_string(), "1 - 3*z^2 - 2*z^3");
        assert_eq!(p(&[0, -1, 1]).to_string(), "-z + z^2");
        assert_eq!(p(&[]).to_string(), "0");
        assert_eq!(IntPolynomial::one_plus_z_pow(3), p(&[1, 3, 3, 1]));
    }

    #[test]
    fn gcd_over_rationals() {
        // (1+z)(1-z) and (1+z)^2
        let a = p(&[1, 0, -1]);
        let b = p(&[1, 2, 1]);
        assert_eq!(a.gcd(&b), p(&[1, 1]));
        assert_eq!(p(&[2, 4]).gcd(&p(&[3, 6])), p(&[1, 2]));
        assert_eq!(p(&[1, 1]).gcd(&p(&[1, -1])), p(&[1]));
        assert_eq!(p(&[0]).gcd(&p(&[-2, -4])), p(&[1, 2]));
        // higher-degree remainder sequence with non-unit leading terms
        let f = &(&p(&[1, -3, 2]) * &p(&[5, 0, 7])) * &p(&[-1, 4]);
        let g = &(&p(&[2, 3, 1]) * &p(&[5, 0, 7])) * &p(&[9, 0, 0, 1]);
        assert_eq!(f.gcd(&g), p(&[5, 0, 7]));
    }

    #[test]
    fn exact_division() {
        let a = p(&[1, 0, -1]);
        assert_eq!(a.div_exact(&p(&[1, 1])), Some(p(&[1, -1])));
        assert_eq!(a.div_exact(&p(&[1, 2])), None);
        assert_eq!(p(&[1, 3, 3, 1]).split_one_plus_z(), (3, p(&[1])));
        assert_eq!(p(&[1, 0, -3, -2]).split_one_plus_z(), (2, p(&[1, -2])));
    }

    #[test]
    fn pseudo_remainder() {
        // x^2 + 1 by 2x + 1: 4(x^2+1) = (2x - 1)(2x + 1) + 5
        assert_eq!(p(&[1, 0, 1]).pseudo_rem(&p(&[1, 2])), p(&[5]));
    }
}
