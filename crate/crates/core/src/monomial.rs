//! Monomials as exponent vectors over a fixed, ordered variable list.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};

/// A monomial `x_1^{a_1} ... x_n^{a_n}`, stored as its exponent vector.
///
/// The all-zero vector is the monomial `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// The variable `x_i` in `n` variables.
    pub fn var(n: usize, i: usize) -> Self {
        let mut exps = vec![0; n];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Indices `j` with `x_j | m`.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(j, _)| j)
    }

    /// Largest index in the support, `None` for `1`.
    pub fn max_support(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0)
    }

    /// If this monomial is a single variable `x_j`, returns `j`.
    pub fn as_variable(&self) -> Option<usize> {
        let mut found = None;
        for (j, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 if found.is_none() => found = Some(j),
                _ => return None,
            }
        }
        found
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.exps.len() != other.exps.len() {
            return Err(Error::VariableCountMismatch {
                left: self.exps.len(),
                right: other.exps.len(),
            });
        }
        Ok(())
    }

    /// Componentwise minimum of the exponent vectors.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(self.meet(other))
    }

    /// Componentwise maximum of the exponent vectors.
    pub fn lcm(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(self.join(other))
    }

    // Unchecked variants for callers that already share an ambient ring.
    pub(crate) fn meet(&self, other: &Self) -> Self {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.min(b))
            .collect();
        Monomial { exps }
    }

    pub(crate) fn join(&self, other: &Self) -> Self {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.max(b))
            .collect();
        Monomial { exps }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a + b)
            .collect();
        Monomial { exps }
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_sub(b))
            .collect::<Option<Vec<_>>>()?;
        Some(Monomial { exps })
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Self) -> bool {
        self.exps.len() == other.exps.len()
            && self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    pub fn pow(&self, q: u32) -> Result<Self> {
        let exps = self
            .exps
            .iter()
            .map(|&e| e.checked_mul(q).ok_or(Error::ExponentOverflow(q)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exps })
    }

    /// Whether `gcd(self, other) = 1`.
    pub fn is_coprime(&self, other: &Self) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Renders the monomial as `x^2*y` using the given variable names.
    pub fn display_with(&self, names: &[String]) -> String {
        let mut out = String::new();
        for (j, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push('*');
            }
            out.push_str(&names[j]);
            if e > 1 {
                let _ = write!(out, "^{e}");
            }
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }
}

/// Keeps the divisibility-minimal elements, dropping duplicates.
///
/// The first occurrence order of the survivors is preserved.
pub fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for (i, m) in gens.iter().enumerate() {
        let dominated = gens.iter().enumerate().any(|(j, other)| {
            if i == j || !other.divides(m) {
                return false;
            }
            // equal monomials: keep only the first copy
            other != m || j < i
        });
        if !dominated {
            out.push(m.clone());
        }
    }
    out
}
