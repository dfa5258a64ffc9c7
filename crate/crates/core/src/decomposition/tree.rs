//! Constructive (α, β)-modular decomposition trees.
//!
//! Construction at a node with vertex set `S` and induced graph `H`:
//!
//! * `|S| ≤ α + β + 2`: a degenerate leaf;
//! * `H` prime: a prime node whose children are consecutive chunks of
//!   `α + β + 1` vertices, the remainder forming a last, smaller chunk;
//! * otherwise take a maximal non-trivial module `M1` and `R = S ∖ M1`.
//!   If `|R| ≤ α + β`, the node is series when `R` is all α-neighbours of
//!   `M1`, parallel when all β-non-neighbours, and prime over `M1`, `R ∩ N_α`
//!   and `R ∩ N̄_β` otherwise. If `R` is larger, further maximal modules of
//!   `H` inside `R` are peeled off; what is left is chunked as in the prime
//!   case, and the partition is labelled series or parallel when it passes
//!   that predicate, prime otherwise.
//!
//! Degenerate children of size at least two become series or parallel nodes
//! over singletons when their singleton partition passes the predicate (this
//! only happens for `(0, 0)`), and a series (parallel) child whose own
//! children stay modules of the parent is merged into a series (parallel)
//! parent when the merged partition passes the same predicate.

use super::{
    is_parallel_partition, is_series_partition, maximal_module_within, maximal_nontrivial_module, Strategy,
};
use crate::abmodule::{alpha_neighbourhood, beta_non_neighbourhood, is_module_unchecked};
use crate::bitset::VertexSet;
use crate::error::Result;
use crate::graph::{AbParams, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NodeKind {
    AlphaSeries,
    BetaParallel,
    AbPrime,
    AbDegenerate,
}

impl NodeKind {
    pub fn as_str(self) -> &'static str {
        match self {
            NodeKind::AlphaSeries => "alpha_series",
            NodeKind::BetaParallel => "beta_parallel",
            NodeKind::AbPrime => "ab_prime",
            NodeKind::AbDegenerate => "ab_degenerate",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeNode {
    pub kind: NodeKind,
    /// Vertex ids of the original graph.
    pub vertices: VertexSet,
    pub children: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionTree {
    pub nodes: Vec<TreeNode>,
    pub root: usize,
    pub params: AbParams,
}

impl DecompositionTree {
    pub fn root_node(&self) -> &TreeNode {
        &self.nodes[self.root]
    }

    pub fn children(&self, id: usize) -> impl Iterator<Item = &TreeNode> + '_ {
        self.nodes[id].children.iter().map(|&c| &self.nodes[c])
    }

    /// Node ids in depth-first pre-order.
    pub fn preorder(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![self.root];
        while let Some(id) = stack.pop() {
            out.push(id);
            stack.extend(self.nodes[id].children.iter().rev());
        }
        out
    }

    /// The node whose vertex set is exactly `s`, if any.
    pub fn find(&self, s: &VertexSet) -> Option<&TreeNode> {
        self.nodes.iter().find(|node| &node.vertices == s)
    }

    pub fn leaves(&self) -> impl Iterator<Item = &TreeNode> + '_ {
        self.nodes.iter().filter(|node| node.children.is_empty())
    }

    pub(crate) fn push(&mut self, kind: NodeKind, vertices: VertexSet, children: Vec<usize>) -> usize {
        self.nodes.push(TreeNode { kind, vertices, children });
        self.nodes.len() - 1
    }
}

/// Checks the tree invariants; the error names the first violation.
pub fn validate_tree(g: &Graph, tree: &DecompositionTree) -> std::result::Result<(), String> {
    let p = tree.params;
    let root = tree.nodes.get(tree.root).ok_or("root id out of range")?;
    if !root.vertices.is_full() || root.vertices.universe() != g.n() {
        return Err(format!("root covers {} instead of V", root.vertices));
    }
    let mut visited = vec![false; tree.nodes.len()];
    let mut stack = vec![tree.root];
    while let Some(id) = stack.pop() {
        if std::mem::replace(&mut visited[id], true) {
            return Err(format!("node {id} reached twice"));
        }
        let node = &tree.nodes[id];
        if node.children.is_empty() {
            if node.vertices.len() > p.min_nontrivial() {
                return Err(format!("leaf {} has more than α+β+2 vertices", node.vertices));
            }
            if node.kind != NodeKind::AbDegenerate {
                return Err(format!("leaf {} is not degenerate", node.vertices));
            }
            continue;
        }
        if node.children.len() < 2 {
            return Err(format!("node {} has a single child", node.vertices));
        }
        let (h, map) = g.induced(&node.vertices).map_err(|e| e.to_string())?;
        let mut index = vec![usize::MAX; g.n()];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let mut union = g.empty_set();
        for &c in &node.children {
            let child = tree.nodes.get(c).ok_or("child id out of range")?;
            if child.vertices.is_empty() {
                return Err("empty node".into());
            }
            if !union.is_disjoint(&child.vertices) {
                return Err(format!("children of {} overlap", node.vertices));
            }
            union.union_with(&child.vertices);
            let local = VertexSet::from_ids(h.n(), child.vertices.iter().map(|v| index[v]));
            if local.len() != child.vertices.len() {
                return Err(format!("child {} is not inside {}", child.vertices, node.vertices));
            }
            if !is_module_unchecked(&h, &local, p) {
                return Err(format!("{} is not a module of G[{}]", child.vertices, node.vertices));
            }
            stack.push(c);
        }
        if union != node.vertices {
            return Err(format!("children of {} do not cover it", node.vertices));
        }
    }
    Ok(())
}

/// Builds a decomposition tree; deterministic for a fixed strategy.
pub fn decomposition_tree(g: &Graph, p: AbParams, strategy: Strategy) -> Result<DecompositionTree> {
    let mut tree = DecompositionTree { nodes: Vec::new(), root: 0, params: p };
    if g.n() <= p.min_nontrivial() {
        tree.root = tree.push(NodeKind::AbDegenerate, g.vertex_set(), Vec::new());
        return Ok(tree);
    }
    tree.root = build(g, &g.vertex_set(), p, strategy, &mut tree)?;
    Ok(tree)
}

fn to_original(local: &VertexSet, map: &[usize], n: usize) -> VertexSet {
    VertexSet::from_ids(n, local.iter().map(|v| map[v]))
}

/// `s` in consecutive chunks of `size` vertices.
fn chunks(s: &VertexSet, size: usize) -> Vec<VertexSet> {
    s.to_vec().chunks(size).map(|c| VertexSet::from_ids(s.universe(), c.iter().copied())).collect()
}

/// The partition of `h` chosen at one node, in `h`'s ids.
fn split(h: &Graph, p: AbParams, strategy: Strategy) -> Result<(NodeKind, Vec<VertexSet>)> {
    let Some(m1) = maximal_nontrivial_module(h, p, strategy)? else {
        return Ok((NodeKind::AbPrime, chunks(&h.vertex_set(), p.trivial_size())));
    };
    let r = m1.complement();
    if r.len() <= p.alpha + p.beta {
        let near = alpha_neighbourhood(h, &m1, p)?;
        let far = beta_non_neighbourhood(h, &m1, p)?;
        return Ok(if near == r {
            (NodeKind::AlphaSeries, vec![m1, r])
        } else if far == r {
            (NodeKind::BetaParallel, vec![m1, r])
        } else {
            (NodeKind::AbPrime, vec![m1, near, far])
        });
    }
    let mut parts = vec![m1];
    let mut rest = r;
    while rest.len() >= p.min_nontrivial() {
        match maximal_module_within(h, p, strategy, &rest)? {
            Some(m) => {
                rest.difference_with(&m);
                parts.push(m);
            }
            None => break,
        }
    }
    parts.extend(chunks(&rest, p.trivial_size()));
    let kind = if is_series_partition(h, &parts, p) {
        NodeKind::AlphaSeries
    } else if is_parallel_partition(h, &parts, p) {
        NodeKind::BetaParallel
    } else {
        NodeKind::AbPrime
    };
    Ok((kind, parts))
}

fn build(g: &Graph, s: &VertexSet, p: AbParams, strategy: Strategy, tree: &mut DecompositionTree) -> Result<usize> {
    let n = g.n();
    let (h, map) = g.induced(s)?;
    let (kind, parts) = split(&h, p, strategy)?;
    let mut children = Vec::with_capacity(parts.len());
    for part in &parts {
        let original = to_original(part, &map, n);
        let child = if part.len() <= p.min_nontrivial() {
            degenerate(&h, part, &map, n, p, tree)
        } else {
            build(g, &original, p, strategy, tree)?
        };
        children.push(child);
    }
    if matches!(kind, NodeKind::AlphaSeries | NodeKind::BetaParallel) {
        children = flatten(&h, &map, n, kind, children, p, tree);
    }
    Ok(tree.push(kind, s.clone(), children))
}

/// A degenerate part, split into singletons when they form a series or
/// parallel partition of it.
fn degenerate(
    h: &Graph,
    part: &VertexSet,
    map: &[usize],
    n: usize,
    p: AbParams,
    tree: &mut DecompositionTree,
) -> usize {
    let original = to_original(part, map, n);
    if part.len() >= 2 {
        let (sub, sub_map) = h.induced(part).expect("part of h");
        let singles: Vec<VertexSet> = (0..sub.n()).map(|v| VertexSet::from_ids(sub.n(), [v])).collect();
        let kind = if is_series_partition(&sub, &singles, p) {
            Some(NodeKind::AlphaSeries)
        } else if is_parallel_partition(&sub, &singles, p) {
            Some(NodeKind::BetaParallel)
        } else {
            None
        };
        if let Some(kind) = kind {
            let children = sub_map
                .iter()
                .map(|&v| tree.push(NodeKind::AbDegenerate, VertexSet::from_ids(n, [map[v]]), Vec::new()))
                .collect();
            return tree.push(kind, original, children);
        }
    }
    tree.push(NodeKind::AbDegenerate, original, Vec::new())
}

/// Merges same-kind children into the parent while the predicate holds.
fn flatten(
    h: &Graph,
    map: &[usize],
    n: usize,
    kind: NodeKind,
    children: Vec<usize>,
    p: AbParams,
    tree: &DecompositionTree,
) -> Vec<usize> {
    let mut index = vec![usize::MAX; n];
    for (i, &v) in map.iter().enumerate() {
        index[v] = i;
    }
    let local = |id: usize| VertexSet::from_ids(h.n(), tree.nodes[id].vertices.iter().map(|v| index[v]));
    let mut current = children;
    loop {
        let mut changed = false;
        for pos in 0..current.len() {
            let id = current[pos];
            if tree.nodes[id].kind != kind || tree.nodes[id].children.is_empty() {
                continue;
            }
            let mut merged = current.clone();
            merged.splice(pos..=pos, tree.nodes[id].children.iter().copied());
            let parts: Vec<VertexSet> = merged.iter().map(|&c| local(c)).collect();
            let holds = match kind {
                NodeKind::AlphaSeries => is_series_partition(h, &parts, p),
                _ => is_parallel_partition(h, &parts, p),
            };
            if holds && parts.iter().all(|s| is_module_unchecked(h, s, p)) {
                current = merged;
                changed = true;
                break;
            }
        }
        if !changed {
            return current;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::families;

    #[test]
    fn gallai8_standard_tree() {
        let (g, l) = fixtures::gallai8();
        for strategy in [Strategy::Exact, Strategy::Grow] {
            let t = decomposition_tree(&g, AbParams::new(0, 0), strategy).unwrap();
            validate_tree(&g, &t).unwrap();
            assert_eq!(t.root_node().kind, NodeKind::AbPrime);
            let bcd = t.find(&l.set(&g, "b,c,d")).unwrap();
            assert_eq!(bcd.kind, NodeKind::AlphaSeries);
            assert_eq!(t.find(&l.set(&g, "b,d")).unwrap().kind, NodeKind::BetaParallel);
            assert_eq!(t.find(&l.set(&g, "f,g")).unwrap().kind, NodeKind::BetaParallel);
            assert_eq!(t.leaves().count(), 8);
        }
    }

    #[test]
    fn c5_root_chunks() {
        let g = families::cycle(5);
        let t = decomposition_tree(&g, AbParams::new(1, 1), Strategy::Exact).unwrap();
        validate_tree(&g, &t).unwrap();
        assert_eq!(t.root_node().kind, NodeKind::AbPrime);
        let kids: Vec<_> = t.children(t.root).map(|c| c.vertices.to_vec()).collect();
        assert_eq!(kids, vec![vec![0, 1, 2], vec![3, 4]]);
    }

    #[test]
    fn k4_is_one_series_node() {
        let g = families::complete(4);
        let t = decomposition_tree(&g, AbParams::new(0, 0), Strategy::Exact).unwrap();
        validate_tree(&g, &t).unwrap();
        assert_eq!(t.root_node().kind, NodeKind::AlphaSeries);
        assert_eq!(t.root_node().children.len(), 4);
    }

    #[test]
    fn tiny_graphs_are_a_single_degenerate_node() {
        let g = families::path(4);
        let t = decomposition_tree(&g, AbParams::new(1, 1), Strategy::Exact).unwrap();
        assert_eq!(t.nodes.len(), 1);
        assert_eq!(t.root_node().kind, NodeKind::AbDegenerate);
    }

    #[test]
    fn random_trees_are_valid() {
        use rand::Rng;
        let mut rng = crate::io::generate::rng(21);
        for _ in 0..40 {
            let n = rng.gen_range(5..11);
            let density = rng.gen_range(0.1..0.9);
            let g = crate::io::generate::random_with(&mut rng, n, density);
            let p = AbParams::new(rng.gen_range(0..2), rng.gen_range(0..2));
            for strategy in [Strategy::Exact, Strategy::Grow] {
                let t = decomposition_tree(&g, p, strategy).unwrap();
                if let Err(e) = validate_tree(&g, &t) {
                    panic!("{e} in {:?} with {p:?}", g.edges().collect::<Vec<_>>());
                }
            }
        }
    }
}
