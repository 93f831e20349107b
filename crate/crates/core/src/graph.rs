//! Coprimality graph on the generators of a monomial ideal.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::taylor::Subset;

/// Vertices are generator indices; `i ~ j` iff `gcd(m_i, m_j) ≠ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoprimalityGraph {
    adjacency: Vec<u64>,
}

impl CoprimalityGraph {
    /// Supports at most 64 generators.
    pub fn new(ideal: &MonomialIdeal) -> Self {
        let gens = ideal.generators();
        assert!(
            gens.len() <= 64,
            "coprimality graph limited to 64 generators"
        );
        let mut adjacency = vec![0u64; gens.len()];
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                if !gens[i].is_coprime(&gens[j]) {
                    adjacency[i] |= 1 << j;
                    adjacency[j] |= 1 << i;
                }
            }
        }
        CoprimalityGraph { adjacency }
    }

    pub fn from_edges(t: usize, edges: &[(usize, usize)]) -> Self {
        let mut adjacency = vec![0u64; t];
        for &(i, j) in edges {
            if i != j {
                adjacency[i] |= 1 << j;
                adjacency[j] |= 1 << i;
            }
        }
        CoprimalityGraph { adjacency }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbours(&self, i: usize) -> u64 {
        self.adjacency[i]
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adjacency[i] >> j & 1 == 1
    }

    /// Edges `(i, j)` with `i < j`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let t = self.vertex_count();
        (0..t)
            .flat_map(|i| (i + 1..t).map(move |j| (i, j)))
            .filter(|&(i, j)| self.has_edge(i, j))
            .collect()
    }

    pub fn is_edgeless(&self) -> bool {
        self.adjacency.iter().all(|&a| a == 0)
    }

    /// The component of the induced subgraph on `within` that contains `seed`.
    pub fn component_of(&self, seed: usize, within: Subset) -> Subset {
        let mut comp: Subset = 1 << seed;
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adjacency[v] & within & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        comp
    }

    /// Connected components of the induced subgraph on `s`, each as a subset,
    /// ordered by smallest member.
    pub fn components(&self, s: Subset) -> Vec<Subset> {
        let mut rest = s;
        let mut out = Vec::new();
        while rest != 0 {
            let comp = self.component_of(rest.trailing_zeros() as usize, rest);
            rest &= !comp;
            out.push(comp);
        }
        out
    }

    /// Number of connected components of the induced subgraph on `s`.
    pub fn component_count(&self, s: Subset) -> Result<u32> {
        if s == 0 {
            return Err(Error::EmptySubset);
        }
        Ok(self.count_components(s))
    }

    pub(crate) fn count_components(&self, s: Subset) -> u32 {
        let mut rest = s;
        let mut count = 0;
        while rest != 0 {
            rest &= !self.component_of(rest.trailing_zeros() as usize, rest);
            count += 1;
        }
        count
    }

    pub fn is_connected(&self, s: Subset) -> bool {
        s != 0 && self.component_of(s.trailing_zeros() as usize, s) == s
    }
}

/// Union-find over `0..len` with path halving and union by size.
#[derive(Debug, Clone)]
pub struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    pub fn new(len: usize) -> Self {
        DisjointSets {
            parent: (0..len).collect(),
            size: vec![1; len],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    /// Groups of elements sharing a root, ordered by smallest member.
    pub fn groups(&mut self) -> Vec<Vec<usize>> {
        let len = self.parent.len();
        let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); len];
        for x in 0..len {
            let r = self.find(x);
            by_root[r].push(x);
        }
        let mut out: Vec<Vec<usize>> = by_root.into_iter().filter(|g| !g.is_empty()).collect();
        out.sort_by_key(|g| g[0]);
        out
    }
}
