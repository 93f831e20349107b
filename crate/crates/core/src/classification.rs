//! Structural verdicts for monomial rings: complete intersection, trivially
//! Golod, the stable and linear-resolution generator shapes, the tensor
//! decomposition of quadratic ideals and the d-window band structure.

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::{self, Execution};
use crate::graph::{CoprimalityGraph, DisjointSets};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::taylor::is_taylor_minimal;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    CompleteIntersection,
    TriviallyGolod,
}

/// Pairwise coprime generators (vacuously true for `t ≤ 1`).
pub fn is_complete_intersection(ideal: &MonomialIdeal) -> bool {
    CoprimalityGraph::new(ideal).is_edgeless()
}

/// The gcd of all generators, or `None` when it is `1`.
pub fn is_trivially_golod(ideal: &MonomialIdeal) -> Result<Option<Monomial>> {
    let common = common_factor(ideal)?;
    Ok((!common.is_one()).then_some(common))
}

fn common_factor(ideal: &MonomialIdeal) -> Result<Monomial> {
    let (first, rest) = ideal
        .generators()
        .split_first()
        .ok_or_else(|| Error::InvalidParameter("the zero ideal has no generators".into()))?;
    Ok(rest.iter().fold(first.clone(), |acc, g| acc.meet(g)))
}

/// Stability: for each generator `m` with `i0 = max Supp(m)` and every
/// `i < i0`, `x_i m / x_i0 ∈ I`.
///
/// Checking generators suffices: for `m = g w`, the exchange either acts
/// on `w` (and the result is a multiple of `g`) or on `g`.
pub fn is_stable(ideal: &MonomialIdeal) -> bool {
    ideal.generators().iter().all(|g| {
        let Some(top) = g.max_support() else {
            return true;
        };
        (0..top).all(|i| {
            let mut exps = g.exponents().to_vec();
            exps[top] -= 1;
            exps[i] += 1;
            ideal.contains(&Monomial::new(exps))
        })
    })
}

/// Shared exponents `(n_1, ..., n_t)` with
/// `m_i = x_i · Π_{j ≤ i} x_j^{n_j}` in the given orders.
pub fn stable_minimal_taylor_form(ideal: &MonomialIdeal) -> Option<Vec<u32>> {
    let t = ideal.t();
    if t == 0 || t > ideal.n() {
        return None;
    }
    let mut shared: Vec<u32> = Vec::with_capacity(t);
    for (i, g) in ideal.generators().iter().enumerate() {
        let e = g.exponents();
        if e[i] == 0 || e[i + 1..].iter().any(|&x| x != 0) || e[..i] != shared[..] {
            return None;
        }
        shared.push(e[i] - 1);
    }
    Some(shared)
}

pub fn stable_form_verdict(pattern: &[u32]) -> Option<Verdict> {
    if pattern.iter().all(|&n| n == 0) {
        Some(Verdict::CompleteIntersection)
    } else if pattern.first().is_some_and(|&n| n > 0) {
        Some(Verdict::TriviallyGolod)
    } else {
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinearForm {
    /// The common factor `u`.
    pub common: Monomial,
    /// `j_i` with `m_i = u x_{j_i}`.
    pub variables: Vec<usize>,
}

impl LinearForm {
    pub fn verdict(&self) -> Verdict {
        if self.common.is_one() {
            Verdict::CompleteIntersection
        } else {
            Verdict::TriviallyGolod
        }
    }
}

/// `m_i = u x_{j_i}` with `u = gcd(G(I))`.
pub fn linear_resolution_form(ideal: &MonomialIdeal) -> Option<LinearForm> {
    let common = common_factor(ideal).ok()?;
    let variables = ideal
        .generators()
        .iter()
        .map(|g| g.checked_div(&common)?.as_variable())
        .collect::<Option<Vec<_>>>()?;
    Some(LinearForm { common, variables })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TensorFactor {
    /// Source variable indices, ascending.
    pub variables: Vec<usize>,
    /// Source generator indices, ascending.
    pub generators: Vec<usize>,
    /// The factor ideal over its own variables.
    pub ideal: MonomialIdeal,
    pub verdict: Verdict,
    /// Common variable of a non-principal factor.
    pub common_variable: Option<usize>,
}

/// Splits a quadratic ideal with minimal Taylor resolution into coprime
/// blocks; each block is principal (complete intersection) or has a common
/// variable (trivially Golod).
pub fn quadratic_tensor_decomposition(ideal: &MonomialIdeal) -> Result<Vec<TensorFactor>> {
    for (index, g) in ideal.generators().iter().enumerate() {
        if g.degree() != 2 {
            return Err(Error::NotQuadratic {
                index: index + 1,
                degree: g.degree(),
            });
        }
    }
    is_taylor_minimal(ideal).map_err(|w| w.into_error())?;

    let gens = ideal.generators();
    let mut sets = DisjointSets::new(gens.len());
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            if !gens[i].is_coprime(&gens[j]) {
                sets.union(i, j);
            }
        }
    }
    let mut factors = Vec::new();
    for block in sets.groups() {
        let mut used = vec![false; ideal.n()];
        for &i in &block {
            for v in gens[i].support() {
                used[v] = true;
            }
        }
        let variables: Vec<usize> = (0..ideal.n()).filter(|&v| used[v]).collect();
        let common = block[1..]
            .iter()
            .fold(gens[block[0]].clone(), |acc, &i| acc.meet(&gens[i]));
        let (verdict, common_variable) = if block.len() == 1 {
            (Verdict::CompleteIntersection, None)
        } else {
            let v = common
                .support()
                .next()
                .ok_or_else(|| Error::NoCommonVariable {
                    component: block.iter().map(|i| i + 1).collect(),
                })?;
            (Verdict::TriviallyGolod, Some(v))
        };
        factors.push(TensorFactor {
            ideal: ideal.restricted(&variables, &block),
            variables,
            generators: block,
            verdict,
            common_variable,
        });
    }
    Ok(factors)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum OrderingSearch {
    /// Only the supplied ordering was tried.
    Given,
    /// Every permutation of the generators was tried.
    Exhaustive,
    /// Too many generators to search; the declared order was used.
    DeclaredOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WindowStructure {
    /// `ordering[k]` is the generator placed at position `k` (0-based).
    pub ordering: Vec<usize>,
    pub d: usize,
    /// Every `d` consecutive generators share a factor.
    pub window_gcd_d: bool,
    /// Every `d + 1` consecutive generators share a factor.
    pub window_gcd_d_plus_1: bool,
    pub search: OrderingSearch,
}

/// Largest generator count for the exhaustive ordering search.
pub const MAX_PERMUTATION_T: usize = 8;

// d such that the graph is the band {|i-j| <= d-1} under `order`, if any.
fn band_width(graph: &CoprimalityGraph, order: &[usize]) -> Option<usize> {
    let t = order.len();
    let mut reach = 0;
    for a in 0..t {
        for b in a + 1..t {
            if graph.has_edge(order[a], order[b]) {
                reach = reach.max(b - a);
            }
        }
    }
    let d = reach + 1;
    let is_band =
        (0..t).all(|a| (a + 1..t).all(|b| graph.has_edge(order[a], order[b]) == (b - a < d)));
    is_band.then_some(d)
}

fn windows_share_factor(ideal: &MonomialIdeal, order: &[usize], width: usize) -> bool {
    let gens = ideal.generators();
    if width == 0 || width > order.len() {
        return true;
    }
    order.windows(width).all(|w| {
        let g = w[1..]
            .iter()
            .fold(gens[w[0]].clone(), |acc, &i| acc.meet(&gens[i]));
        !g.is_one()
    })
}

/// Finds an ordering and the least `d` for which the coprimality graph is
/// the band graph `{(i, j) : |i - j| ≤ d - 1}`.
pub fn d_window_structure(
    ideal: &MonomialIdeal,
    ordering: Option<&[usize]>,
) -> Result<Option<WindowStructure>> {
    d_window_structure_with(ideal, ordering, Execution::default())
}

pub fn d_window_structure_with(
    ideal: &MonomialIdeal,
    ordering: Option<&[usize]>,
    exec: Execution,
) -> Result<Option<WindowStructure>> {
    let t = ideal.t();
    if t == 0 {
        return Ok(None);
    }
    let graph = CoprimalityGraph::new(ideal);
    let (best, search) = match ordering {
        Some(order) => {
            let mut seen = order.to_vec();
            seen.sort_unstable();
            if seen != (0..t).collect::<Vec<_>>() {
                return Err(Error::InvalidParameter(format!(
                    "ordering must be a permutation of 0..{t}"
                )));
            }
            (
                band_width(&graph, order).map(|d| (order.to_vec(), d)),
                OrderingSearch::Given,
            )
        }
        None if t <= MAX_PERMUTATION_T => {
            let perms: Vec<Vec<usize>> = (0..t).permutations(t).collect();
            let widths = exec::map_collect(exec, &perms, |p| band_width(&graph, p));
            // least d, first permutation in lexicographic order on ties
            let best = perms
                .into_iter()
                .zip(widths)
                .filter_map(|(p, w)| w.map(|d| (p, d)))
                .min_by_key(|(_, d)| *d);
            (best, OrderingSearch::Exhaustive)
        }
        None => {
            let order: Vec<usize> = (0..t).collect();
            (
                band_width(&graph, &order).map(|d| (order, d)),
                OrderingSearch::DeclaredOnly,
            )
        }
    };
    Ok(best.map(|(order, d)| WindowStructure {
        window_gcd_d: windows_share_factor(ideal, &order, d),
        window_gcd_d_plus_1: windows_share_factor(ideal, &order, d + 1),
        ordering: order,
        d,
        search,
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub is_complete_intersection: bool,
    pub is_trivially_golod: bool,
    pub common_factor: Option<Monomial>,
    pub taylor_minimal: bool,
    pub stable: bool,
    pub stable_minimal_taylor_form: Option<Vec<u32>>,
    pub stable_form_verdict: Option<Verdict>,
    pub linear_resolution_form: Option<LinearForm>,
    /// Present for quadratic ideals with minimal Taylor resolution.
    pub tensor_factors: Option<Vec<TensorFactor>>,
    /// Why the tensor decomposition was not produced, if it was attempted.
    pub tensor_error: Option<String>,
    pub d_window: Option<WindowStructure>,
}

pub fn classify(ideal: &MonomialIdeal) -> Result<ClassificationReport> {
    let common_factor = if ideal.t() == 0 {
        None
    } else {
        is_trivially_golod(ideal)?
    };
    let stable_form = stable_minimal_taylor_form(ideal);
    let quadratic = ideal.t() > 0 && ideal.generators().iter().all(|g| g.degree() == 2);
    let (tensor_factors, tensor_error) = if quadratic {
        match quadratic_tensor_decomposition(ideal) {
            Ok(f) => (Some(f), None),
            Err(e) => (None, Some(e.to_string())),
        }
    } else {
        (None, None)
    };
    Ok(ClassificationReport {
        is_complete_intersection: is_complete_intersection(ideal),
        is_trivially_golod: common_factor.is_some(),
        common_factor,
        taylor_minimal: is_taylor_minimal(ideal).is_ok(),
        stable: is_stable(ideal),
        stable_form_verdict: stable_form.as_deref().and_then(stable_form_verdict),
        stable_minimal_taylor_form: stable_form,
        linear_resolution_form: linear_resolution_form(ideal),
        tensor_factors,
        tensor_error,
        d_window: d_window_structure(ideal, None)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(s: &str) -> MonomialIdeal {
        s.parse().unwrap()
    }

    #[test]
    fn complete_intersection() {
        assert!(is_complete_intersection(&ideal("vars: x,y; x^2, y^2")));
        assert!(!is_complete_intersection(&ideal("vars: x,y; x^2, x*y")));
        assert!(!is_complete_intersection(&ideal(
            "vars: x,y,z; x^2*y, y^2*z, z^2"
        )));
    }

    #[test]
    fn trivially_golod() {
        let i = ideal("vars: x1,x2,x4; x1^2, x1*x2, x1*x4");
        assert_eq!(
            is_trivially_golod(&i).unwrap().unwrap().exponents(),
            [1, 0, 0]
        );
        assert_eq!(
            is_trivially_golod(&ideal("vars: x,y; x^2, y^2")).unwrap(),
            None
        );
        let single = ideal("vars: x,y; x^2*y");
        assert_eq!(
            is_trivially_golod(&single).unwrap().unwrap().exponents(),
            [2, 1]
        );
        assert!(is_trivially_golod(&ideal("vars: x;")).is_err());
    }

    #[test]
    fn stability() {
        assert!(is_stable(&ideal("vars: x1,x2; x1^2, x1*x2")));
        assert!(!is_stable(&ideal("vars: x1,x2; x2^2")));
        assert!(is_stable(&ideal("vars: x1; x1")));
        // x1*x3 needs x1^2 and x1*x2
        assert!(!is_stable(&ideal("vars: x1,x2,x3; x1^2, x1*x3")));
        assert!(is_stable(&ideal("vars: x1,x2,x3; x1^2, x1*x2, x1*x3")));
    }

    #[test]
    fn stable_form() {
        let p = stable_minimal_taylor_form(&ideal("vars: x1,x2; x1^2, x1*x2")).unwrap();
        assert_eq!(p, [1, 0]);
        assert_eq!(stable_form_verdict(&p), Some(Verdict::TriviallyGolod));
        let p = stable_minimal_taylor_form(&ideal("vars: x1,x2; x1, x2")).unwrap();
        assert_eq!(p, [0, 0]);
        assert_eq!(stable_form_verdict(&p), Some(Verdict::CompleteIntersection));
        assert_eq!(
            stable_minimal_taylor_form(&ideal("vars: x1,x2; x1^2, x2^2")),
            None
        );
        assert_eq!(stable_form_verdict(&[0, 1]), None);
    }

    #[test]
    fn linear_form() {
        let f = linear_resolution_form(&ideal("vars: x1,x2,x3,x4; x1^2, x1*x2, x1*x4")).unwrap();
        assert_eq!(f.common.exponents(), [1, 0, 0, 0]);
        assert_eq!(f.variables, [0, 1, 3]);
        assert_eq!(f.verdict(), Verdict::TriviallyGolod);
        let f = linear_resolution_form(&ideal("vars: x1,x2; x1, x2")).unwrap();
        assert!(f.common.is_one());
        assert_eq!(f.verdict(), Verdict::CompleteIntersection);
        assert_eq!(
            linear_resolution_form(&ideal("vars: x1,x2; x1^2, x2^2")),
            None
        );
    }

    #[test]
    fn tensor_decomposition() {
        let i = ideal("vars: x1,x2,x3,x4,x5; x1^2, x1*x2, x1*x4, x3^2, x5^2");
        let f = quadratic_tensor_decomposition(&i).unwrap();
        assert_eq!(f.len(), 3);
        assert_eq!(f[0].generators, [0, 1, 2]);
        assert_eq!(f[0].variables, [0, 1, 3]);
        assert_eq!(f[0].verdict, Verdict::TriviallyGolod);
        assert_eq!(f[0].common_variable, Some(0));
        assert_eq!(f[0].ideal.to_string(), "vars: x1,x2,x4; x1^2, x1*x2, x1*x4");
        assert_eq!(
            (f[1].generators.as_slice(), f[1].verdict),
            (&[3][..], Verdict::CompleteIntersection)
        );
        assert_eq!(
            (f[2].generators.as_slice(), f[2].verdict),
            (&[4][..], Verdict::CompleteIntersection)
        );

        let f = quadratic_tensor_decomposition(&ideal("vars: x,y; x^2, y^2")).unwrap();
        assert!(f.iter().all(|x| x.verdict == Verdict::CompleteIntersection));
        let f = quadratic_tensor_decomposition(&ideal("vars: x,y,z; x*y, y*z")).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(
            (f[0].verdict, f[0].common_variable),
            (Verdict::TriviallyGolod, Some(1))
        );
    }

    #[test]
    fn tensor_decomposition_errors() {
        assert!(matches!(
            quadratic_tensor_decomposition(&ideal("vars: x,y; x^3, y^2")),
            Err(Error::NotQuadratic {
                index: 1,
                degree: 3
            })
        ));
        assert!(matches!(
            quadratic_tensor_decomposition(&ideal("vars: x,y; x^2, x*y, y^2")),
            Err(Error::NotTaylorMinimal { .. })
        ));
    }

    #[test]
    fn window_structure() {
        let i = ideal("vars: x,y,z,w,u; x^2*y*z, y^2*z*w, z^2*w*u, w^2*u, u^2");
        let w = d_window_structure(&i, Some(&[0, 1, 2, 3, 4]))
            .unwrap()
            .unwrap();
        assert_eq!(w.d, 3);
        assert!(w.window_gcd_d);
        assert!(!w.window_gcd_d_plus_1);
        let w = d_window_structure(&i, None).unwrap().unwrap();
        assert_eq!((w.d, w.search), (3, OrderingSearch::Exhaustive));

        let ci = ideal("vars: a,b,c; a^2, b^3, c^2");
        assert_eq!(d_window_structure(&ci, None).unwrap().unwrap().d, 1);
        let golod = ideal("vars: a,b,c,e; a^2*b, a*c, a*e^2");
        assert_eq!(d_window_structure(&golod, None).unwrap().unwrap().d, 3);

        // a star with three leaves is no band graph
        let star = ideal("vars: b,c,e; b*c*e, b^2, c^2, e^2");
        assert_eq!(d_window_structure(&star, None).unwrap(), None);
    }

    #[test]
    fn window_needs_search_when_order_is_scrambled() {
        // path 1-3-2 in declared order
        let i = ideal("vars: a,b,c,e; a^2*b, c^2*e, b*c*e^2");
        let declared = d_window_structure(&i, Some(&[0, 1, 2])).unwrap();
        assert_eq!(declared, None);
        let found = d_window_structure(&i, None).unwrap().unwrap();
        assert_eq!((found.d, found.ordering.as_slice()), (2, &[0, 2, 1][..]));
    }

    #[test]
    fn classify_report() {
        let r = classify(&ideal(
            "vars: x1,x2,x3,x4,x5; x1^2, x1*x2, x1*x4, x3^2, x5^2",
        ))
        .unwrap();
        assert!(!r.is_complete_intersection);
        assert!(!r.is_trivially_golod);
        assert!(r.taylor_minimal);
        assert_eq!(r.tensor_factors.unwrap().len(), 3);
        let r = classify(&ideal("vars: x;")).unwrap();
        assert!(r.is_complete_intersection && !r.is_trivially_golod && r.d_window.is_none());
    }
}
