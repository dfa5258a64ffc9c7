//! Simple undirected graphs over dense vertex ids `0..n`.

use std::collections::BTreeSet;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// An immutable simple graph. Adjacency is stored twice: as sorted neighbour
/// lists for linear scans and as bitsets for set algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Vec<usize>>,
    adj_bits: Vec<VertexSet>,
}

/// Relation between two distinct vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwinKind {
    /// `N(u) = N(v)` (so `u` and `v` are not adjacent).
    False,
    /// `N(u) ∪ {u} = N(v) ∪ {v}`.
    True,
    Neither,
}

/// The error budgets of an (α, β)-module: at most `alpha` missing edges or at
/// most `beta` extra edges per outside vertex.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbParams {
    pub alpha: usize,
    pub beta: usize,
}

impl AbParams {
    pub const fn new(alpha: usize, beta: usize) -> Self {
        AbParams { alpha, beta }
    }

    /// `α + β + 1`: the largest size of a trivially-module set.
    #[inline]
    pub const fn trivial_size(self) -> usize {
        self.alpha + self.beta + 1
    }

    /// `α + β + 2`: the smallest possible size of a non-trivial module.
    #[inline]
    pub const fn min_nontrivial(self) -> usize {
        self.alpha + self.beta + 2
    }

    /// The budgets with roles exchanged, as seen from the complement graph.
    pub const fn swapped(self) -> Self {
        AbParams { alpha: self.beta, beta: self.alpha }
    }

    /// Checks `max(α, β) < n − 1`.
    pub fn check_for(self, n: usize) -> Result<()> {
        if self.alpha.max(self.beta) + 1 < n {
            Ok(())
        } else {
            Err(Error::ParamsTooLarge { alpha: self.alpha, beta: self.beta, n })
        }
    }
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicate edges and out-of-range ids.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj_bits = vec![VertexSet::new(n); n];
        let mut m = 0;
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !adj_bits[u].insert(v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj_bits[v].insert(u);
            m += 1;
        }
        Ok(Self::from_bits(adj_bits, m))
    }

    /// Builds a graph from a symmetric, loop-free adjacency bitset table.
    fn from_bits(adj_bits: Vec<VertexSet>, m: usize) -> Graph {
        let adj = adj_bits.iter().map(VertexSet::to_vec).collect();
        Graph { n: adj_bits.len(), m, adj, adj_bits }
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Graph {
        Self::from_bits(vec![VertexSet::new(n); n], 0)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn neighbour_set(&self, v: usize) -> &VertexSet {
        &self.adj_bits[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj_bits[u].contains(v)
    }

    /// `|N(v) ∩ s|`.
    #[inline]
    pub fn neighbours_in(&self, v: usize, s: &VertexSet) -> usize {
        self.adj_bits[v].intersection_len(s)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.n)
    }

    /// Rejects sets built over another universe.
    pub fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.universe() == self.n {
            Ok(())
        } else {
            Err(Error::UniverseMismatch { expected: self.n, found: s.universe() })
        }
    }

    pub fn set_from_ids<I: IntoIterator<Item = usize>>(&self, ids: I) -> Result<VertexSet> {
        VertexSet::try_from_ids(self.n, ids)
    }

    pub fn complement(&self) -> Graph {
        let adj_bits: Vec<VertexSet> = (0..self.n)
            .map(|v| {
                let mut s = self.adj_bits[v].complement();
                s.remove(v);
                s
            })
            .collect();
        let m = self.n * self.n.saturating_sub(1) / 2 - self.m;
        Self::from_bits(adj_bits, m)
    }

    /// The subgraph induced by `s`, relabelled to `0..|s|` in ascending order.
    /// The returned map sends each new id to its original vertex.
    pub fn induced(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(s)?;
        let map = s.to_vec();
        let k = map.len();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let mut adj_bits = vec![VertexSet::new(k); k];
        let mut m = 0;
        for (i, &v) in map.iter().enumerate() {
            for &u in &self.adj[v] {
                let j = index[u];
                if j != usize::MAX {
                    adj_bits[i].insert(j);
                    if j > i {
                        m += 1;
                    }
                }
            }
        }
        Ok((Self::from_bits(adj_bits, m), map))
    }

    /// `N(s)`: outside vertices with at least one neighbour in `s`.
    pub fn neighbourhood_of_set(&self, s: &VertexSet) -> Result<VertexSet> {
        self.check_set(s)?;
        let mut out = self.empty_set();
        for v in s {
            out.union_with(&self.adj_bits[v]);
        }
        out.difference_with(s);
        Ok(out)
    }

    /// `N̄(s)`: outside vertices with no neighbour in `s`.
    pub fn non_neighbourhood_of_set(&self, s: &VertexSet) -> Result<VertexSet> {
        let mut out = self.neighbourhood_of_set(s)?.union(s).complement();
        out.difference_with(s);
        Ok(out)
    }

    pub fn twins(&self, u: usize, v: usize) -> Result<TwinKind> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SameVertex(u));
        }
        if self.adj_bits[u] == self.adj_bits[v] {
            return Ok(TwinKind::False);
        }
        let mut cu = self.adj_bits[u].clone();
        cu.insert(u);
        let mut cv = self.adj_bits[v].clone();
        cv.insert(v);
        Ok(if cu == cv { TwinKind::True } else { TwinKind::Neither })
    }

    /// Degrees indexed by vertex id.
    pub fn degree_sequence(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Edge set as an ordered set, convenient for equality checks.
    pub fn edge_set(&self) -> BTreeSet<(usize, usize)> {
        self.edges().collect()
    }
}

/// A few standard graph families.
pub mod families {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).unwrap()
    }

    /// Star with centre 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Graph {
        Graph::new(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()
    }

    /// Triangle 0-1-2 with horns 3 (on 0) and 4 (on 1).
    pub fn bull() -> Graph {
        Graph::new(5, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)]).unwrap()
    }
}
