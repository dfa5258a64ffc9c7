//! Exhaustive (α, β)-cograph recognition with a witness cotree.
//!
//! A set `S` with more than `α + β + 2` vertices is decomposable when it has
//! a partition into modules of `G[S]`, each with at least `α + β + 1`
//! vertices, whose parts are pairwise α-connected (series) or pairwise
//! β-non-connected (parallel) and decomposable in turn. Without the size
//! bound on every part, small parts would pass the connectivity inclusions
//! vacuously often enough to make C5 a (1,1)-cograph. Two-part splits are
//! tried first (largest smaller side first, then lexicographically), series
//! before parallel; then partitions into three or more parts. Results are
//! memoised per vertex set. The search is exponential and limited to small
//! graphs.

use std::collections::HashMap;

use super::tree::{DecompositionTree, NodeKind};
use crate::abmodule::{is_alpha_count, is_beta_count, is_splitter_count};
use crate::bitset::VertexSet;
use crate::enumeration::oracle_cap;
use crate::error::{Error, Result};
use crate::graph::{AbParams, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CographResult {
    pub is_cograph: bool,
    /// A cotree with only series, parallel and degenerate nodes.
    pub cotree: Option<DecompositionTree>,
}

#[derive(Clone, Debug)]
enum Solution {
    Leaf,
    Split(NodeKind, Vec<u64>),
}

struct Search<'g> {
    p: AbParams,
    adj: Vec<u64>,
    memo: HashMap<u64, Option<Solution>>,
    g: &'g Graph,
}

/// Decides whether `g` is an (α, β)-cograph. `max_n` defaults to the oracle
/// cap.
pub fn is_ab_cograph(g: &Graph, p: AbParams, max_n: Option<usize>) -> Result<CographResult> {
    let n = g.n();
    let cap = max_n.unwrap_or_else(oracle_cap).min(63);
    if n > cap {
        return Err(Error::OracleCapExceeded { n, cap });
    }
    let adj = (0..n).map(|v| g.neighbour_set(v).to_mask().expect("n ≤ 63")).collect();
    let mut search = Search { p, adj, memo: HashMap::new(), g };
    let all = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    if search.solve(all).is_none() {
        return Ok(CographResult { is_cograph: false, cotree: None });
    }
    let mut tree = DecompositionTree { nodes: Vec::new(), root: 0, params: p };
    tree.root = search.emit(all, &mut tree);
    Ok(CographResult { is_cograph: true, cotree: Some(tree) })
}

fn members(mask: u64) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            v
        })
    })
}

/// Submasks of `mask`, excluding `0` and `mask`.
fn proper_submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut sub = mask;
    std::iter::from_fn(move || {
        sub = (sub.wrapping_sub(1)) & mask;
        (sub != 0).then_some(sub)
    })
}

impl Search<'_> {
    fn count(&self, v: usize, set: u64) -> usize {
        (self.adj[v] & set).count_ones() as usize
    }

    /// `part` is a module of `G[whole]`.
    fn is_module(&self, part: u64, whole: u64) -> bool {
        let size = part.count_ones() as usize;
        size <= self.p.trivial_size()
            || members(whole & !part).all(|x| !is_splitter_count(self.count(x, part), size, self.p))
    }

    fn related(&self, kind: NodeKind, a: u64, b: u64) -> bool {
        let (sa, sb) = (a.count_ones() as usize, b.count_ones() as usize);
        match kind {
            NodeKind::AlphaSeries => {
                members(a).all(|v| is_alpha_count(self.count(v, b), sb, self.p))
                    && members(b).all(|v| is_alpha_count(self.count(v, a), sa, self.p))
            }
            _ => {
                members(a).all(|v| is_beta_count(self.count(v, b), self.p))
                    && members(b).all(|v| is_beta_count(self.count(v, a), self.p))
            }
        }
    }

    fn solve(&mut self, set: u64) -> Option<Solution> {
        if set.count_ones() as usize <= self.p.min_nontrivial() {
            return Some(Solution::Leaf);
        }
        if let Some(known) = self.memo.get(&set) {
            return known.clone();
        }
        let found = self.find_split(set);
        self.memo.insert(set, found.clone());
        found
    }

    fn find_split(&mut self, set: u64) -> Option<Solution> {
        let low = set & set.wrapping_neg();
        let size = set.count_ones() as usize;
        let large = self.p.trivial_size();
        let modules: Vec<u64> = proper_submasks(set)
            .filter(|&s| s.count_ones() as usize >= large && self.is_module(s, set))
            .collect();

        let mut halves: Vec<u64> = modules.iter().copied().filter(|&a| a & low != 0).collect();
        halves.retain(|&a| (size - a.count_ones() as usize) >= large && self.is_module(set & !a, set));
        halves.sort_by(|&a, &b| {
            let sa = (a.count_ones() as usize).min(size - a.count_ones() as usize);
            let sb = (b.count_ones() as usize).min(size - b.count_ones() as usize);
            sb.cmp(&sa).then_with(|| lex(a).cmp(&lex(b)))
        });
        for kind in [NodeKind::AlphaSeries, NodeKind::BetaParallel] {
            for &a in &halves {
                let b = set & !a;
                if self.related(kind, a, b) && self.solve(a).is_some() && self.solve(b).is_some() {
                    return Some(Solution::Split(kind, vec![a, b]));
                }
            }
        }
        for kind in [NodeKind::AlphaSeries, NodeKind::BetaParallel] {
            let mut chosen = Vec::new();
            if self.cover(kind, set, 0, &modules, &mut chosen) {
                return Some(Solution::Split(kind, chosen));
            }
        }
        None
    }

    /// Exact cover of `set` by at least three pairwise related, solvable
    /// modules.
    fn cover(&mut self, kind: NodeKind, set: u64, covered: u64, modules: &[u64], chosen: &mut Vec<u64>) -> bool {
        if covered == set {
            return chosen.len() >= 3;
        }
        let rest = set & !covered;
        let low = rest & rest.wrapping_neg();
        for &m in modules {
            if m & low == 0 || m & covered != 0 {
                continue;
            }
            if !chosen.iter().all(|&c| self.related(kind, c, m)) {
                continue;
            }
            if self.solve(m).is_none() {
                continue;
            }
            chosen.push(m);
            if self.cover(kind, set, covered | m, modules, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    fn emit(&mut self, set: u64, tree: &mut DecompositionTree) -> usize {
        let n = self.g.n();
        let vertices = VertexSet::from_mask(n, set);
        match self.solve(set).expect("emit follows a successful search") {
            Solution::Leaf => tree.push(NodeKind::AbDegenerate, vertices, Vec::new()),
            Solution::Split(kind, parts) => {
                let children = parts.iter().map(|&part| self.emit(part, tree)).collect();
                tree.push(kind, vertices, children)
            }
        }
    }
}

fn lex(mask: u64) -> Vec<usize> {
    members(mask).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::validate_tree;
    use crate::fixtures;
    use crate::graph::families;

    #[test]
    fn two_p4_join_is_a_11_cograph() {
        let (g, l) = fixtures::two_p4_join();
        let r = is_ab_cograph(&g, AbParams::new(1, 1), None).unwrap();
        assert!(r.is_cograph);
        let t = r.cotree.unwrap();
        validate_tree(&g, &t).unwrap();
        let root = t.root_node();
        assert_eq!(root.kind, NodeKind::AlphaSeries);
        let kids: Vec<_> = t.children(t.root).map(|c| c.vertices.clone()).collect();
        assert_eq!(kids, vec![l.set(&g, "a,b,c,d"), l.set(&g, "e,f,g,h")]);
    }

    #[test]
    fn prime_graphs_are_not_cographs() {
        assert!(!is_ab_cograph(&families::cycle(5), AbParams::new(1, 1), None).unwrap().is_cograph);
        // the literal inclusions do hold for {0,1,3} against {2,4}
        let g = families::cycle(5);
        let (a, b) = (VertexSet::from_ids(5, [0, 1, 3]), VertexSet::from_ids(5, [2, 4]));
        assert!(crate::decomposition::alpha_connected(&g, &a, &b, AbParams::new(1, 1)));
        assert!(!is_ab_cograph(&families::path(4), AbParams::new(0, 0), None).unwrap().is_cograph);
    }

    #[test]
    fn classical_cographs() {
        // complete bipartite graphs and cliques are P4-free
        for g in [families::complete_bipartite(2, 3), families::complete(5), families::star(4)] {
            let r = is_ab_cograph(&g, AbParams::new(0, 0), None).unwrap();
            assert!(r.is_cograph);
            validate_tree(&g, &r.cotree.unwrap()).unwrap();
        }
    }

    #[test]
    fn k_part_series_is_found() {
        // three independent pairs joined completely: no two-part (0,0)
        // split has modules on both sides other than one pair vs the rest,
        // which also works; check that the tree is valid either way
        let g = Graph::new(
            6,
            [(0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 4), (3, 5)],
        )
        .unwrap();
        let r = is_ab_cograph(&g, AbParams::new(0, 0), None).unwrap();
        assert!(r.is_cograph);
        validate_tree(&g, &r.cotree.unwrap()).unwrap();
    }
}
