//! Monomial ideals `I ⊂ k[x_1, ..., x_n]` given by their minimal generators.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{minimalize, Monomial};
use crate::parse;

/// A monomial ideal over an ordered list of named variables.
///
/// Generators are kept minimal (an antichain under divisibility) and in the
/// order they were supplied. The zero ideal has no generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MonomialIdeal {
    variables: Vec<String>,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds an ideal, minimalizing the generators.
    pub fn new(variables: Vec<String>, generators: Vec<Monomial>) -> Result<Self> {
        for (i, v) in variables.iter().enumerate() {
            if variables[..i].contains(v) {
                return Err(Error::DuplicateVariable(v.clone()));
            }
        }
        for g in &generators {
            if g.nvars() != variables.len() {
                return Err(Error::VariableCountMismatch {
                    left: g.nvars(),
                    right: variables.len(),
                });
            }
            if g.is_one() {
                return Err(Error::UnitGenerator);
            }
        }
        let generators = minimalize(&generators);
        Ok(MonomialIdeal {
            variables,
            generators,
        })
    }

    /// Convenience constructor from exponent rows; variables are `x1..xn`.
    pub fn from_exponents(n: usize, rows: &[&[u32]]) -> Result<Self> {
        let variables = (1..=n).map(|i| format!("x{i}")).collect();
        let gens = rows.iter().map(|r| Monomial::new(r.to_vec())).collect();
        Self::new(variables, gens)
    }

    pub fn zero(variables: Vec<String>) -> Self {
        MonomialIdeal {
            variables,
            generators: Vec::new(),
        }
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    /// Number of variables of the ambient ring.
    pub fn n(&self) -> usize {
        self.variables.len()
    }

    /// Number of minimal generators.
    pub fn t(&self) -> usize {
        self.generators.len()
    }

    pub fn max_degree(&self) -> u32 {
        self.generators
            .iter()
            .map(Monomial::degree)
            .max()
            .unwrap_or(0)
    }

    /// Whether every generator has degree at least two, i.e. `I ⊆ m²`.
    pub fn in_square_of_maximal(&self) -> bool {
        self.generators.iter().all(|g| g.degree() >= 2)
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(Monomial::is_squarefree)
    }

    /// Membership: some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// Mask of variables appearing in some generator.
    pub fn used_variables(&self) -> Vec<bool> {
        let mut used = vec![false; self.n()];
        for g in &self.generators {
            for j in g.support() {
                used[j] = true;
            }
        }
        used
    }

    /// The ideal generated by `m^q` for `m ∈ G(I)`.
    pub fn power(&self, q: u32) -> Result<Self> {
        if q == 0 {
            return Err(Error::InvalidParameter("power q must be at least 1".into()));
        }
        let generators = self
            .generators
            .iter()
            .map(|g| g.pow(q))
            .collect::<Result<Vec<_>>>()?;
        // powers of an antichain stay an antichain
        Ok(MonomialIdeal {
            variables: self.variables.clone(),
            generators,
        })
    }

    /// Restricts to the variables `keep` (ascending indices), dropping the
    /// other coordinates of every generator in `gens`.
    pub(crate) fn restricted(&self, keep: &[usize], gens: &[usize]) -> MonomialIdeal {
        let variables = keep.iter().map(|&j| self.variables[j].clone()).collect();
        let generators = gens
            .iter()
            .map(|&i| {
                let e = self.generators[i].exponents();
                Monomial::new(keep.iter().map(|&j| e[j]).collect())
            })
            .collect();
        MonomialIdeal {
            variables,
            generators,
        }
    }

    /// Removes linear generators with their variables, then unused variables.
    ///
    /// `P(R) = (1+z)^unused_dropped * P(reduced)`.
    pub fn reduce(&self) -> RingReduction {
        // a minimal generator x_j excludes x_j from every other generator
        let linear: Vec<usize> = self
            .generators
            .iter()
            .filter_map(Monomial::as_variable)
            .collect();
        let gens: Vec<usize> = (0..self.t())
            .filter(|&i| self.generators[i].degree() >= 2)
            .collect();
        let mut used = vec![false; self.n()];
        for &i in &gens {
            for j in self.generators[i].support() {
                used[j] = true;
            }
        }
        let keep: Vec<usize> = (0..self.n()).filter(|&j| used[j]).collect();
        let unused_dropped = self.n() - keep.len() - linear.len();
        RingReduction {
            ideal: self.restricted(&keep, &gens),
            unused_dropped,
            linear_dropped: linear.len(),
        }
    }

    /// Renders the generators separated by `", "`.
    pub fn generators_string(&self) -> String {
        self.generators
            .iter()
            .map(|g| g.display_with(&self.variables))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "vars: {};", self.variables.join(","))?;
        if !self.generators.is_empty() {
            write!(f, " {}", self.generators_string())?;
        }
        Ok(())
    }
}

impl FromStr for MonomialIdeal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse::parse_ideal(s)
    }
}

/// Outcome of stripping a ring down to `I ⊆ m²` with every variable used.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingReduction {
    pub ideal: MonomialIdeal,
    /// Variables in no generator; each contributes a factor `1+z`.
    pub unused_dropped: usize,
    /// Degree-one generators removed together with their variable.
    pub linear_dropped: usize,
}
