//! The Taylor complex of `A/I`: subset lcms, ranks, differentials and the
//! minimality test.
//!
//! Subsets of the generators are bitmasks; bit `i` stands for the generator
//! `m_{i+1}`. Witnesses in errors and reports use 1-based generator numbers.

use std::collections::BTreeMap;

use num_integer::binomial;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

pub type Subset = u64;

/// Default cap on the number of generators for full-lattice operations.
pub const DEFAULT_MAX_T: usize = 24;

// Hard ceiling on the flat lcm table (entries of u32).
const MAX_TABLE_ENTRIES: usize = 1 << 30;

/// Iterates the members of a subset in increasing order.
pub fn members(s: Subset) -> impl Iterator<Item = usize> {
    let mut rest = s;
    std::iter::from_fn(move || {
        if rest == 0 {
            return None;
        }
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        Some(i)
    })
}

/// 1-based member list, for reports.
pub fn members_one_based(s: Subset) -> Vec<usize> {
    members(s).map(|i| i + 1).collect()
}

pub fn subset_from_one_based(items: &[usize]) -> Subset {
    items.iter().fold(0, |acc, &i| acc | 1 << (i - 1))
}

/// All subsets of `{0..t}` with `l` elements, in increasing bitmask order.
pub fn subsets_of_size(t: usize, l: usize) -> Vec<Subset> {
    if l > t {
        return Vec::new();
    }
    if l == 0 {
        return vec![0];
    }
    // Gosper's hack
    let mut out = Vec::new();
    let mut s: u64 = (1 << l) - 1;
    let limit: u64 = 1 << t;
    while s < limit {
        out.push(s);
        let c = s & s.wrapping_neg();
        let r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    out
}

pub(crate) fn check_cap(t: usize, cap: usize) -> Result<()> {
    if t > cap || t > 63 {
        return Err(Error::LatticeTooLarge {
            t,
            cap: cap.min(63),
        });
    }
    Ok(())
}

/// Ranks `C(t, l)` of the Taylor complex for `l = 0..=t`.
pub fn taylor_ranks(ideal: &MonomialIdeal) -> Vec<u64> {
    let t = ideal.t() as u64;
    (0..=t).map(|l| binomial(t, l)).collect()
}

/// A subset `S` and a member `j` with `m_S = m_{S \ {j}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CollapseWitness {
    pub subset: Subset,
    pub removed: usize,
}

impl CollapseWitness {
    pub fn into_error(self) -> Error {
        Error::NotTaylorMinimal {
            subset: members_one_based(self.subset),
            removed: self.removed + 1,
        }
    }
}

/// Decides whether the Taylor resolution of `A/I` is minimal.
///
/// Minimality holds iff every generator has a variable whose exponent is
/// strictly larger than in all other generators. When it fails for `m_j`,
/// the witness collects `j` and, for each variable of `m_j`, the first other
/// generator reaching that exponent; their lcm does not change without `m_j`.
pub fn is_taylor_minimal(ideal: &MonomialIdeal) -> std::result::Result<(), CollapseWitness> {
    let gens = ideal.generators();
    for (j, mj) in gens.iter().enumerate() {
        let e = mj.exponents();
        let private = mj.support().any(|v| {
            gens.iter()
                .enumerate()
                .all(|(i, mi)| i == j || mi.exponents()[v] < e[v])
        });
        if private {
            continue;
        }
        let mut subset: Subset = 1 << j;
        for v in mj.support() {
            let i = (0..gens.len())
                .find(|&i| i != j && gens[i].exponents()[v] >= e[v])
                .expect("a non-private variable is reached by another generator");
            subset |= 1 << i;
        }
        return Err(CollapseWitness { subset, removed: j });
    }
    Ok(())
}

/// The Taylor complex with its full table of subset lcms.
#[derive(Debug, Clone)]
pub struct TaylorComplex {
    ideal: MonomialIdeal,
    lcms: Vec<u32>,
}

impl TaylorComplex {
    pub fn new(ideal: &MonomialIdeal) -> Result<Self> {
        Self::with_cap(ideal, DEFAULT_MAX_T)
    }

    pub fn with_cap(ideal: &MonomialIdeal, cap: usize) -> Result<Self> {
        let (t, n) = (ideal.t(), ideal.n());
        check_cap(t, cap)?;
        let size = 1usize << t;
        if size.saturating_mul(n.max(1)) > MAX_TABLE_ENTRIES {
            return Err(Error::LatticeTooLarge { t, cap });
        }
        let mut lcms = vec![0u32; size * n];
        // m_S = lcm(m_{S \ {min S}}, m_{min S})
        for s in 1..size {
            let low = s.trailing_zeros() as usize;
            let rest = s & (s - 1);
            let g = ideal.generators()[low].exponents();
            for v in 0..n {
                lcms[s * n + v] = lcms[rest * n + v].max(g[v]);
            }
        }
        Ok(TaylorComplex {
            ideal: ideal.clone(),
            lcms,
        })
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    fn lcm_slice(&self, s: Subset) -> &[u32] {
        let n = self.ideal.n();
        let s = s as usize;
        &self.lcms[s * n..(s + 1) * n]
    }

    /// `m_S = lcm(m_i : i ∈ S)`, with `m_∅ = 1`.
    pub fn subset_lcm(&self, s: Subset) -> Result<Monomial> {
        let t = self.ideal.t();
        if t < 64 && s >> t != 0 {
            return Err(Error::IndexOutOfRange {
                index: 64 - s.leading_zeros() as usize,
                limit: t,
            });
        }
        Ok(Monomial::new(self.lcm_slice(s).to_vec()))
    }

    /// Scans the whole lattice for the first `(S, j)` with `m_S = m_{S\{j}}`.
    pub fn first_collapse(&self) -> Option<CollapseWitness> {
        let size: u64 = 1 << self.ideal.t();
        (1..size).find_map(|s| {
            members(s)
                .find(|&j| self.lcm_slice(s) == self.lcm_slice(s & !(1 << j)))
                .map(|j| CollapseWitness {
                    subset: s,
                    removed: j,
                })
        })
    }

    /// The matrix of `d_l : T_l → T_{l-1}`.
    pub fn differential(&self, l: usize) -> Result<DifferentialMatrix> {
        let t = self.ideal.t();
        if l == 0 || l > t {
            return Err(Error::IndexOutOfRange { index: l, limit: t });
        }
        let rows = subsets_of_size(t, l - 1);
        let cols = subsets_of_size(t, l);
        let mut entries = Vec::with_capacity(cols.len() * l);
        for (c, &s) in cols.iter().enumerate() {
            let top = Monomial::new(self.lcm_slice(s).to_vec());
            for (pos, j) in members(s).enumerate() {
                let face = s & !(1 << j);
                let below = Monomial::new(self.lcm_slice(face).to_vec());
                let coefficient = top
                    .checked_div(&below)
                    .expect("lcm of a face divides the lcm of the subset");
                let row = rows.binary_search(&face).expect("face has l-1 elements");
                entries.push(DifferentialEntry {
                    row,
                    col: c,
                    sign: if pos % 2 == 0 { 1 } else { -1 },
                    coefficient,
                });
            }
        }
        Ok(DifferentialMatrix {
            degree: l,
            rows,
            cols,
            entries,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DifferentialEntry {
    pub row: usize,
    pub col: usize,
    pub sign: i8,
    pub coefficient: Monomial,
}

/// Sparse matrix of signed monomials; rows are `(l-1)`-subsets and columns
/// `l`-subsets, both in increasing bitmask order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DifferentialMatrix {
    pub degree: usize,
    pub rows: Vec<Subset>,
    pub cols: Vec<Subset>,
    pub entries: Vec<DifferentialEntry>,
}

impl DifferentialMatrix {
    /// Entry at `(row subset, column subset)` as `(sign, coefficient)`.
    pub fn entry(&self, row: Subset, col: Subset) -> Option<(i8, &Monomial)> {
        let r = self.rows.binary_search(&row).ok()?;
        let c = self.cols.binary_search(&col).ok()?;
        self.entries
            .iter()
            .find(|e| e.row == r && e.col == c)
            .map(|e| (e.sign, &e.coefficient))
    }

    /// Computes `self ∘ higher` with polynomial entries; returns the nonzero
    /// entries (empty when the composition vanishes).
    pub fn compose(
        &self,
        higher: &DifferentialMatrix,
    ) -> BTreeMap<(usize, usize), BTreeMap<Monomial, i64>> {
        assert_eq!(higher.degree, self.degree + 1);
        let mut by_col: Vec<Vec<&DifferentialEntry>> = vec![Vec::new(); self.cols.len()];
        for e in &self.entries {
            by_col[e.col].push(e);
        }
        let mut acc: BTreeMap<(usize, usize), BTreeMap<Monomial, i64>> = BTreeMap::new();
        for h in &higher.entries {
            for l in &by_col[h.row] {
                let coeff = l.coefficient.mul(&h.coefficient);
                let slot = acc.entry((l.row, h.col)).or_default();
                *slot.entry(coeff).or_default() += i64::from(l.sign * h.sign);
            }
        }
        for poly in acc.values_mut() {
            poly.retain(|_, c| *c != 0);
        }
        acc.retain(|_, p| !p.is_empty());
        acc
    }
}
