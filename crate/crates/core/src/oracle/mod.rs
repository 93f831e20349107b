//! Brute-force `dim_k Tor_i^R(k, k)` for `R = A/I`.
//!
//! Builds a minimal free resolution of the residue field over `R`, one
//! multidegree at a time, with exact linear algebra over `GF(p)`. In a fixed
//! multidegree `α` a free module has the basis of generators `g` with
//! `mdeg(g) ≤ α` and `x^{α - mdeg(g)}` nonzero in `R`, so every block is
//! small. New generators of the next syzygy module in degree `α` are kernel
//! vectors independent of the image of the generators already found.
//!
//! This route shares nothing with the Koszul-homology formulas and serves as
//! their independent check.

mod linalg;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::classification::{is_complete_intersection, is_trivially_golod};
use crate::error::{Error, Result};
use crate::exec::{self, Execution};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::series::{
    poincare_complete_intersection, poincare_minimal_taylor, poincare_trivially_golod,
    RationalSeries,
};
use crate::taylor::is_taylor_minimal;

pub use linalg::{is_prime, kernel_basis, Echelon, PrimeField};

pub const DEFAULT_PRIME: u64 = 32003;
pub const SECOND_PRIME: u64 = 65537;

/// Largest linear-algebra block, in rows times columns.
pub const MAX_BLOCK_ENTRIES: usize = 20_000 * 20_000;

/// Largest number of multidegrees visited in one run.
pub const MAX_MULTIDEGREES: usize = 20_000_000;

/// Exponent vectors of total degree `d` in `n` variables, in decreasing
/// lexicographic order (`x^2 > xy > xz > y^2 > ...`).
pub fn exponent_vectors(n: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(n, d, &mut Vec::with_capacity(n), &mut out);
    out
}

/// `R = A/I` truncated at internal degree `max_degree`.
#[derive(Debug, Clone)]
pub struct GradedRing {
    ideal: MonomialIdeal,
    max_degree: u32,
}

impl GradedRing {
    pub fn new(ideal: &MonomialIdeal, max_degree: u32) -> Self {
        GradedRing {
            ideal: ideal.clone(),
            max_degree,
        }
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    /// Whether `x^e` is nonzero in `R`.
    pub fn is_standard(&self, e: &[u32]) -> bool {
        !self
            .ideal
            .generators()
            .iter()
            .any(|g| g.exponents().iter().zip(e).all(|(&a, &b)| a <= b))
    }

    /// Monomials of degree `d` not divisible by any generator.
    pub fn standard_monomials(&self, d: u32) -> Result<Vec<Monomial>> {
        if d > self.max_degree {
            return Err(Error::DegreeCapExceeded {
                requested: d,
                bound: self.max_degree,
            });
        }
        Ok(exponent_vectors(self.ideal.n(), d)
            .into_iter()
            .filter(|e| self.is_standard(e))
            .map(Monomial::new)
            .collect())
    }
}

/// Graded Betti numbers of `k` over `R`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub prime: u64,
    pub max_homological: usize,
    pub max_internal: u32,
    /// `graded[i][d]` = number of degree-`d` generators of the `i`-th module.
    pub graded: Vec<Vec<u64>>,
    /// Whether `b_i` is certainly complete within `max_internal`.
    pub exact: Vec<bool>,
}

impl BettiTable {
    pub fn betti(&self, i: usize) -> u64 {
        self.graded[i].iter().sum()
    }

    pub fn totals(&self) -> Vec<u64> {
        (0..self.graded.len()).map(|i| self.betti(i)).collect()
    }

    pub fn all_exact(&self) -> bool {
        self.exact.iter().all(|&e| e)
    }
}

/// Upper bound on the internal degree of the minimal generators of the
/// `i`-th module: `1 + (i-1)(g-1)` with `g` the largest generator degree.
///
/// This is the rate bound for rings defined by monomials of degree at
/// most `g`.
pub fn internal_degree_bound(ideal: &MonomialIdeal, i: usize) -> u32 {
    if i == 0 {
        return 0;
    }
    let g = ideal.max_degree().max(2);
    1 + (i as u32 - 1) * (g - 1)
}

/// Internal degree needed for exact `b_0..b_h`.
pub fn sufficient_internal_degree(ideal: &MonomialIdeal, h: usize) -> u32 {
    internal_degree_bound(ideal, h).max(h as u32)
}

#[derive(Debug, Clone)]
struct FreeGen {
    mdeg: Vec<u32>,
    /// Image in the previous module: `(generator index, coefficient)`; the
    /// monomial factor is `mdeg - mdeg(previous generator)`.
    image: Vec<(usize, u64)>,
}

fn leq(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn diff(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

struct Step<'a> {
    ring: &'a GradedRing,
    field: PrimeField,
    /// Target of the map whose kernel is resolved.
    lower: &'a [FreeGen],
    /// Source of that map.
    upper: &'a [FreeGen],
}

impl Step<'_> {
    /// Generators of the upper module that are live in degree `alpha`.
    fn live(&self, gens: &[FreeGen], alpha: &[u32]) -> Vec<usize> {
        (0..gens.len())
            .filter(|&g| {
                leq(&gens[g].mdeg, alpha) && self.ring.is_standard(&diff(alpha, &gens[g].mdeg))
            })
            .collect()
    }

    /// New kernel generators in multidegree `alpha`, given the generators
    /// of lower total degree already chosen.
    fn new_generators(&self, alpha: &[u32], found: &[FreeGen]) -> Result<Vec<FreeGen>> {
        let cols = self.live(self.upper, alpha);
        if cols.is_empty() {
            return Ok(Vec::new());
        }
        let rows = self.live(self.lower, alpha);
        if rows.len().saturating_mul(cols.len()) > MAX_BLOCK_ENTRIES {
            return Err(Error::MatrixTooLarge {
                rows: rows.len(),
                cols: cols.len(),
            });
        }
        let mut row_of = vec![usize::MAX; self.lower.len()];
        for (r, &j) in rows.iter().enumerate() {
            row_of[j] = r;
        }
        let mut matrix = vec![vec![0u64; cols.len()]; rows.len()];
        for (c, &g) in cols.iter().enumerate() {
            for &(j, coeff) in &self.upper[g].image {
                // zero when x^{alpha - mdeg(j)} vanishes in R
                if row_of[j] != usize::MAX {
                    let cell = &mut matrix[row_of[j]][c];
                    *cell = (*cell + coeff) % self.field.modulus();
                }
            }
        }
        let kernel = kernel_basis(self.field, matrix, cols.len());
        if kernel.is_empty() {
            return Ok(Vec::new());
        }

        let mut col_of = vec![usize::MAX; self.upper.len()];
        for (c, &g) in cols.iter().enumerate() {
            col_of[g] = c;
        }
        let mut span = Echelon::new(self.field);
        for h in found {
            if !leq(&h.mdeg, alpha) || !self.ring.is_standard(&diff(alpha, &h.mdeg)) {
                continue;
            }
            let mut v = vec![0u64; cols.len()];
            for &(g, coeff) in &h.image {
                if col_of[g] != usize::MAX {
                    v[col_of[g]] = (v[col_of[g]] + coeff) % self.field.modulus();
                }
            }
            span.insert(v);
        }
        let mut fresh = Vec::new();
        for v in kernel {
            if span.insert(v.clone()) {
                let image = v
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x != 0)
                    .map(|(c, &x)| (cols[c], x))
                    .collect();
                fresh.push(FreeGen {
                    mdeg: alpha.to_vec(),
                    image,
                });
            }
        }
        Ok(fresh)
    }
}

/// Betti numbers `b_{i,d}` of `k` over `R` for `i ≤ h`, `d ≤ max_internal`.
pub fn tor_dimensions(
    ideal: &MonomialIdeal,
    h: usize,
    max_internal: u32,
    prime: u64,
) -> Result<BettiTable> {
    tor_dimensions_with(ideal, h, max_internal, prime, Execution::default())
}

pub fn tor_dimensions_with(
    ideal: &MonomialIdeal,
    h: usize,
    max_internal: u32,
    prime: u64,
    exec: Execution,
) -> Result<BettiTable> {
    let field = PrimeField::new(prime).ok_or(Error::NotPrime(prime))?;
    if (max_internal as usize) < h {
        return Err(Error::InvalidParameter(format!(
            "internal degree bound {max_internal} is below the homological bound {h}"
        )));
    }
    let n = ideal.n();
    let ring = GradedRing::new(ideal, max_internal);
    let by_degree: Vec<Vec<Vec<u32>>> =
        (0..=max_internal).map(|d| exponent_vectors(n, d)).collect();
    let total: usize = by_degree.iter().map(Vec::len).sum();
    if total > MAX_MULTIDEGREES {
        return Err(Error::InvalidParameter(format!(
            "{total} multidegrees exceed the guard of {MAX_MULTIDEGREES}"
        )));
    }

    let width = max_internal as usize + 1;
    let degree_row = |gens: &[FreeGen]| {
        let mut row = vec![0u64; width];
        for g in gens {
            row[g.mdeg.iter().sum::<u32>() as usize] += 1;
        }
        row
    };

    // F_0 = R, F_1 = one generator per variable that survives in R.
    let mut modules: Vec<Vec<FreeGen>> = vec![vec![FreeGen {
        mdeg: vec![0; n],
        image: Vec::new(),
    }]];
    if h >= 1 {
        let f1 = (0..n)
            .filter(|&v| ring.is_standard(Monomial::var(n, v).exponents()))
            .map(|v| FreeGen {
                mdeg: Monomial::var(n, v).exponents().to_vec(),
                image: vec![(0, 1)],
            })
            .collect();
        modules.push(f1);
    }
    for i in 1..h {
        let step = Step {
            ring: &ring,
            field,
            lower: &modules[i - 1],
            upper: &modules[i],
        };
        let mut next: Vec<FreeGen> = Vec::new();
        for alphas in &by_degree {
            let batches =
                exec::map_collect(exec, alphas, |alpha| step.new_generators(alpha, &next));
            let mut fresh = Vec::new();
            for b in batches {
                fresh.extend(b?);
            }
            next.extend(fresh);
        }
        modules.push(next);
    }

    let graded: Vec<Vec<u64>> = modules.iter().map(|m| degree_row(m)).collect();
    let exact = (0..graded.len())
        .map(|i| internal_degree_bound(ideal, i) <= max_internal)
        .collect();
    Ok(BettiTable {
        prime,
        max_homological: h,
        max_internal,
        graded,
        exact,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeCheck {
    pub degree: usize,
    pub formula: BigInt,
    pub oracle: u64,
    pub exact: bool,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub series: RationalSeries,
    pub table: BettiTable,
    pub checks: Vec<DegreeCheck>,
    /// Closed forms that apply to this ideal and whether they agree with
    /// the minimal-Taylor series.
    pub closed_forms: BTreeMap<&'static str, bool>,
}

impl VerificationReport {
    pub fn all_match(&self) -> bool {
        self.checks.iter().all(|c| c.matches) && self.closed_forms.values().all(|&b| b)
    }

    pub fn truncated(&self) -> bool {
        self.checks.iter().any(|c| !c.exact)
    }
}

/// Compares the minimal-Taylor Poincaré series with the oracle through
/// homological degree `h`.
pub fn verify_poincare(
    ideal: &MonomialIdeal,
    h: usize,
    max_internal: u32,
    prime: u64,
) -> Result<VerificationReport> {
    if let Err(w) = is_taylor_minimal(ideal) {
        return Err(Error::NoFormulaRoute(format!(
            "Taylor resolution is not minimal ({})",
            w.into_error()
        )));
    }
    let series = poincare_minimal_taylor(ideal)?;
    let expected = series.expand(h)?;
    let table = tor_dimensions(ideal, h, max_internal, prime)?;
    let checks = expected
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let oracle = table.betti(i);
            DegreeCheck {
                degree: i,
                formula: f.clone(),
                oracle,
                exact: table.exact[i],
                matches: *f == BigInt::from(oracle),
            }
        })
        .collect();

    let mut closed_forms = BTreeMap::new();
    let (n, t) = (ideal.n(), ideal.t());
    let in_square = t > 0 && ideal.in_square_of_maximal();
    if in_square && is_complete_intersection(ideal) {
        closed_forms.insert(
            "complete_intersection",
            poincare_complete_intersection(n, t)? == series,
        );
    }
    if in_square && is_trivially_golod(ideal)?.is_some() {
        closed_forms.insert("trivially_golod", poincare_trivially_golod(n, t)? == series);
    }
    Ok(VerificationReport {
        series,
        table,
        checks,
        closed_forms,
    })
}
