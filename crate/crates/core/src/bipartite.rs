//! One-sided modules of bipartite graphs: (α, β)-modules contained in `X`.
//!
//! For `M ⊆ X` with `|M| ≥ α + β + 1` every `y ∈ Y` is either an α-neighbour
//! or a β-non-neighbour of `M`, never both, and all `(α + β + 1)`-subsets of
//! `M` see `y` the same way. So the tuples of `X` are first grouped by their
//! row `y ↦ [y ∈ N_α(T)]`; a set is a module exactly when its tuples share a
//! row `r` and, for every `y`, it has at most `α` non-neighbours of `y` when
//! `r(y)` holds and at most `β` neighbours of `y` otherwise. The maximal
//! one-sided modules are the maximal vertex sets meeting these budgets, one
//! search per row.

use crate::abmodule::{is_alpha_count, is_module_unchecked};
use crate::bitset::VertexSet;
use crate::enumeration::{inclusion_maximal, oracle_cap};
use crate::error::{Error, Result};
use crate::graph::{AbParams, Graph};

/// A graph with a side partition `X ∪ Y` crossed by every edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    graph: Graph,
    x_side: VertexSet,
    y_side: VertexSet,
}

impl BipartiteGraph {
    pub fn new(graph: Graph, x_side: VertexSet) -> Result<BipartiteGraph> {
        graph.check_set(&x_side)?;
        if let Some((u, v)) = graph.edges().find(|&(u, v)| x_side.contains(u) == x_side.contains(v)) {
            return Err(Error::NonCrossingEdge(u, v));
        }
        let y_side = x_side.complement();
        Ok(BipartiteGraph { graph, x_side, y_side })
    }

    /// Two-colours a connected graph, putting vertex 0 in `X`.
    pub fn two_colour(graph: Graph) -> Result<BipartiteGraph> {
        let n = graph.n();
        let mut colour = vec![None; n];
        let mut stack = Vec::new();
        if n > 0 {
            colour[0] = Some(true);
            stack.push(0);
        }
        while let Some(v) = stack.pop() {
            let c = colour[v].unwrap();
            for &u in graph.neighbours(v) {
                match colour[u] {
                    None => {
                        colour[u] = Some(!c);
                        stack.push(u);
                    }
                    Some(cu) if cu == c => return Err(Error::NotBipartite),
                    _ => {}
                }
            }
        }
        if colour.iter().any(Option::is_none) {
            return Err(Error::Disconnected);
        }
        let x = VertexSet::from_ids(n, (0..n).filter(|&v| colour[v] == Some(true)));
        BipartiteGraph::new(graph, x)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn x_side(&self) -> &VertexSet {
        &self.x_side
    }

    pub fn y_side(&self) -> &VertexSet {
        &self.y_side
    }
}

/// The `(α + β + 1)`-subsets of `X` grouped by their rows over `Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinClassification {
    pub tuples: Vec<VertexSet>,
    /// `Y` in ascending order; row and label entries follow this order.
    pub ys: Vec<usize>,
    /// `rows[t][j]`: `ys[j]` is an α-neighbour of `tuples[t]`.
    pub rows: Vec<Vec<bool>>,
    /// `lambda[t][j]`: the members of `tuples[t]` that disagree with the
    /// row entry (non-neighbours of an α-adjacent `y`, neighbours otherwise).
    pub lambda: Vec<Vec<VertexSet>>,
    /// Tuple indices per class, classes ordered by their first tuple.
    pub classes: Vec<Vec<usize>>,
}

impl TwinClassification {
    /// Index of the class holding tuple `t`.
    pub fn class_of(&self, t: usize) -> usize {
        self.classes.iter().position(|c| c.contains(&t)).expect("every tuple has a class")
    }

    pub fn aux_edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.iter().filter(|&&b| b).count()).sum()
    }
}

fn combinations(pool: &[usize], k: usize, mut visit: impl FnMut(&[usize])) {
    let n = pool.len();
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    let mut buf = vec![0; k];
    loop {
        for (b, &i) in buf.iter_mut().zip(&idx) {
            *b = pool[i];
        }
        visit(&buf);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

pub fn twin_classify(bg: &BipartiteGraph, p: AbParams) -> Result<TwinClassification> {
    let g = &bg.graph;
    let k = p.trivial_size();
    let xs = bg.x_side.to_vec();
    if xs.len() < k {
        return Err(Error::SideTooSmall { size: xs.len(), required: k });
    }
    let ys = bg.y_side.to_vec();
    let mut tuples = Vec::new();
    combinations(&xs, k, |t| tuples.push(VertexSet::from_ids(g.n(), t.iter().copied())));
    let mut rows = Vec::with_capacity(tuples.len());
    let mut lambda = Vec::with_capacity(tuples.len());
    for t in &tuples {
        let mut row = Vec::with_capacity(ys.len());
        let mut labels = Vec::with_capacity(ys.len());
        for &y in &ys {
            let hit = t.intersection(g.neighbour_set(y));
            let adjacent = is_alpha_count(hit.len(), k, p);
            labels.push(if adjacent { t.difference(&hit) } else { hit });
            row.push(adjacent);
        }
        rows.push(row);
        lambda.push(labels);
    }
    // refine by one y at a time
    let mut classes: Vec<Vec<usize>> = vec![(0..tuples.len()).collect()];
    #[allow(clippy::needless_range_loop)]
    for j in 0..ys.len() {
        classes = classes
            .into_iter()
            .flat_map(|c| {
                let (a, b): (Vec<usize>, Vec<usize>) = c.into_iter().partition(|&t| rows[t][j]);
                [a, b].into_iter().filter(|part| !part.is_empty())
            })
            .collect();
    }
    classes.sort_by_key(|c| c[0]);
    Ok(TwinClassification { tuples, ys, rows, lambda, classes })
}

/// The three conditions for false (α, β)-twin tuples, with the outside
/// condition taken on the non-adjacency side: every vertex of `a ∖ b` has at
/// most `β` neighbours in `b`, and vice versa.
pub fn is_false_ab_twin(g: &Graph, a: &VertexSet, b: &VertexSet, p: AbParams) -> Result<bool> {
    g.check_set(a)?;
    g.check_set(b)?;
    let k = p.trivial_size();
    if a.len() != k || b.len() != k || a == b {
        return Err(Error::BadTupleSize { expected: k });
    }
    let union = a.union(b);
    let sparse = |from: &VertexSet, to: &VertexSet| from.difference(to).iter().all(|x| g.neighbours_in(x, to) <= p.beta);
    Ok(is_module_unchecked(g, &union, p) && sparse(a, b) && sparse(b, a))
}

/// Module test for `m ⊆ X`.
pub fn one_sided_module_check(bg: &BipartiteGraph, m: &VertexSet, p: AbParams) -> Result<bool> {
    bg.graph.check_set(m)?;
    if !m.is_subset(&bg.x_side) {
        return Err(Error::NotOneSided);
    }
    Ok(is_module_unchecked(&bg.graph, m, p))
}

/// The same test through the tuple classes: `m` is a module iff all of its
/// `(α + β + 1)`-subsets are pairwise false twins.
pub fn module_via_twins(bg: &BipartiteGraph, m: &VertexSet, p: AbParams) -> Result<bool> {
    bg.graph.check_set(m)?;
    if !m.is_subset(&bg.x_side) {
        return Err(Error::NotOneSided);
    }
    let k = p.trivial_size();
    if m.len() <= k {
        return Ok(true);
    }
    let mut tuples = Vec::new();
    combinations(&m.to_vec(), k, |t| tuples.push(VertexSet::from_ids(bg.graph.n(), t.iter().copied())));
    for (i, a) in tuples.iter().enumerate() {
        for b in &tuples[i + 1..] {
            if !is_false_ab_twin(&bg.graph, a, b, p)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneSidedFamily {
    pub maximal_members: Vec<VertexSet>,
    pub params: AbParams,
}

/// Inclusion-maximal (α, β)-modules contained in `X`.
pub fn maximal_one_sided_modules(bg: &BipartiteGraph, p: AbParams) -> Result<OneSidedFamily> {
    let g = &bg.graph;
    if is_module_unchecked(g, &bg.x_side, p) {
        return Ok(OneSidedFamily { maximal_members: vec![bg.x_side.clone()], params: p });
    }
    let tc = twin_classify(bg, p)?;
    let mut found = Vec::new();
    for class in &tc.classes {
        let row = &tc.rows[class[0]];
        let mut candidates = g.empty_set();
        for &t in class {
            candidates.union_with(&tc.tuples[t]);
        }
        found.extend(maximal_within_budgets(bg, &tc.ys, row, &candidates, p));
    }
    Ok(OneSidedFamily { maximal_members: inclusion_maximal(found), params: p })
}

/// Maximal subsets of `candidates` with at most `α` non-neighbours of every
/// `y` whose row entry is set and at most `β` neighbours of every other `y`.
fn maximal_within_budgets(
    bg: &BipartiteGraph,
    ys: &[usize],
    row: &[bool],
    candidates: &VertexSet,
    p: AbParams,
) -> Vec<VertexSet> {
    let g = &bg.graph;
    let limits: Vec<(VertexSet, usize)> = ys
        .iter()
        .zip(row)
        .map(|(&y, &adjacent)| {
            let n_y = g.neighbour_set(y);
            if adjacent {
                (candidates.difference(n_y), p.alpha)
            } else {
                (candidates.intersection(n_y), p.beta)
            }
        })
        .filter(|(d, budget)| d.len() > *budget)
        .collect();
    let mut free = candidates.clone();
    for (d, _) in &limits {
        free.difference_with(d);
    }
    let constrained = candidates.difference(&free).to_vec();
    let mut out = Vec::new();
    let mut used = vec![0usize; limits.len()];
    let mut chosen = free.clone();
    search(&limits, &constrained, 0, &mut used, &mut chosen, &mut out);
    out.retain(|m| m.len() >= p.trivial_size());
    out
}

fn search(
    limits: &[(VertexSet, usize)],
    order: &[usize],
    i: usize,
    used: &mut [usize],
    chosen: &mut VertexSet,
    out: &mut Vec<VertexSet>,
) {
    let fits = |v: usize, used: &[usize]| limits.iter().zip(used).all(|((d, b), &u)| !d.contains(v) || u < *b);
    if i == order.len() {
        // maximal: no skipped vertex can still be added
        if order.iter().all(|&v| chosen.contains(v) || !fits(v, used)) {
            out.push(chosen.clone());
        }
        return;
    }
    let v = order[i];
    if fits(v, used) {
        for (j, (d, _)) in limits.iter().enumerate() {
            if d.contains(v) {
                used[j] += 1;
            }
        }
        chosen.insert(v);
        search(limits, order, i + 1, used, chosen, out);
        chosen.remove(v);
        for (j, (d, _)) in limits.iter().enumerate() {
            if d.contains(v) {
                used[j] -= 1;
            }
        }
    }
    // skipping v only makes sense if some budget it touches can fill up
    search(limits, order, i + 1, used, chosen, out);
}

/// The maximal families along `(0,0) → (1,0) → … → (α,0) → (α,1) → … → (α,β)`.
pub fn budget_path(bg: &BipartiteGraph, p: AbParams) -> Result<Vec<OneSidedFamily>> {
    let mut steps = vec![AbParams::new(0, 0)];
    steps.extend((1..=p.alpha).map(|a| AbParams::new(a, 0)));
    steps.extend((1..=p.beta).map(|b| AbParams::new(p.alpha, b)));
    steps.into_iter().map(|q| maximal_one_sided_modules(bg, q)).collect()
}

/// `true` iff every member of `smaller` lies inside some member of `larger`.
pub fn nested_in(smaller: &OneSidedFamily, larger: &OneSidedFamily) -> bool {
    smaller.maximal_members.iter().all(|m| larger.maximal_members.iter().any(|l| m.is_subset(l)))
}

/// Pairs of one-sided modules whose intersection or differences fall
/// outside the family.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClosureReport {
    pub family_size: usize,
    pub pairs_checked: usize,
    pub violations: Vec<(VertexSet, VertexSet, &'static str)>,
}

/// Exhaustively checks that one-sided modules are closed under `∩` and `∖`.
pub fn one_sided_family_closure_props(
    bg: &BipartiteGraph,
    p: AbParams,
    max_x: Option<usize>,
) -> Result<ClosureReport> {
    let xs = bg.x_side.to_vec();
    let cap = max_x.unwrap_or_else(oracle_cap).min(24);
    if xs.len() > cap {
        return Err(Error::OracleCapExceeded { n: xs.len(), cap });
    }
    let n = bg.graph.n();
    let to_set = |mask: u32| VertexSet::from_ids(n, xs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v));
    let member: Vec<bool> = (0u32..1 << xs.len()).map(|mask| is_module_unchecked(&bg.graph, &to_set(mask), p)).collect();
    let family: Vec<u32> = (0u32..1 << xs.len()).filter(|&m| member[m as usize]).collect();
    let mut report = ClosureReport { family_size: family.len(), ..Default::default() };
    for &a in &family {
        for &b in &family {
            if a >= b {
                continue;
            }
            report.pairs_checked += 1;
            for (result, what) in [(a & b, "intersection"), (a & !b, "A minus B"), (b & !a, "B minus A")] {
                if !member[result as usize] {
                    report.violations.push((to_set(a), to_set(b), what));
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    /// X = {0,1,2,3}, Y = {4,5}; 0,1 see 4 and 2,3 see 5.
    fn two_pairs() -> BipartiteGraph {
        let g = Graph::new(6, [(0, 4), (1, 4), (2, 5), (3, 5)]).unwrap();
        BipartiteGraph::new(g, VertexSet::from_ids(6, 0..4)).unwrap()
    }

    fn ids(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_ids(n, v.iter().copied())
    }

    #[test]
    fn non_crossing_edges_are_rejected() {
        let g = families::path(3);
        assert_eq!(BipartiteGraph::new(g.clone(), ids(3, &[0, 1])), Err(Error::NonCrossingEdge(0, 1)));
        let bg = BipartiteGraph::two_colour(g).unwrap();
        assert_eq!(bg.x_side().to_vec(), vec![0, 2]);
        assert_eq!(BipartiteGraph::two_colour(families::cycle(5)), Err(Error::NotBipartite));
        assert_eq!(BipartiteGraph::two_colour(Graph::empty(2)), Err(Error::Disconnected));
    }

    #[test]
    fn classical_twin_classes() {
        let tc = twin_classify(&two_pairs(), AbParams::new(0, 0)).unwrap();
        let classes: Vec<Vec<Vec<usize>>> =
            tc.classes.iter().map(|c| c.iter().map(|&t| tc.tuples[t].to_vec()).collect()).collect();
        assert_eq!(classes, vec![vec![vec![0], vec![1]], vec![vec![2], vec![3]]]);
        let fam = maximal_one_sided_modules(&two_pairs(), AbParams::new(0, 0)).unwrap();
        assert_eq!(fam.maximal_members, vec![ids(6, &[0, 1]), ids(6, &[2, 3])]);
    }

    #[test]
    fn complete_bipartite_has_one_class() {
        let bg = BipartiteGraph::new(families::complete_bipartite(3, 2), ids(5, &[0, 1, 2])).unwrap();
        for p in [AbParams::new(0, 0), AbParams::new(1, 0), AbParams::new(1, 1)] {
            assert_eq!(twin_classify(&bg, p).unwrap().classes.len(), 1);
        }
    }

    #[test]
    fn star_tuples_share_a_class() {
        // centre 0 in Y, leaves in X
        let g = families::star(4);
        let bg = BipartiteGraph::new(g, ids(5, &[1, 2, 3, 4])).unwrap();
        let tc = twin_classify(&bg, AbParams::new(1, 0)).unwrap();
        assert_eq!(tc.classes.len(), 1);
        assert!(tc.rows.iter().all(|r| r == &vec![true]));
    }

    #[test]
    fn lambda_labels_respect_budgets() {
        let g = Graph::new(7, [(0, 4), (1, 4), (2, 5), (3, 5), (0, 6), (2, 6)]).unwrap();
        let bg = BipartiteGraph::new(g, ids(7, &[0, 1, 2, 3])).unwrap();
        let p = AbParams::new(1, 1);
        let tc = twin_classify(&bg, p).unwrap();
        for (t, tuple) in tc.tuples.iter().enumerate() {
            for j in 0..tc.ys.len() {
                let l = &tc.lambda[t][j];
                assert!(l.is_subset(tuple));
                assert!(l.len() <= if tc.rows[t][j] { p.alpha } else { p.beta });
            }
        }
    }

    #[test]
    fn false_twins() {
        let g = two_pairs().graph().clone();
        let p = AbParams::new(0, 0);
        assert!(is_false_ab_twin(&g, &ids(6, &[0]), &ids(6, &[1]), p).unwrap());
        assert!(!is_false_ab_twin(&g, &ids(6, &[0]), &ids(6, &[2]), p).unwrap());
        assert!(is_false_ab_twin(&g, &ids(6, &[0]), &ids(6, &[0, 1]), p).is_err());
    }

    #[test]
    fn module_checks_agree_with_twin_characterisation() {
        let bg = two_pairs();
        let p = AbParams::new(0, 0);
        for mask in 0u64..16 {
            let m = VertexSet::from_mask(6, mask);
            assert_eq!(one_sided_module_check(&bg, &m, p).unwrap(), module_via_twins(&bg, &m, p).unwrap());
        }
        assert_eq!(one_sided_module_check(&bg, &ids(6, &[0, 4]), p), Err(Error::NotOneSided));
    }

    #[test]
    fn k33_minus_matching_side_is_a_10_module() {
        let edges = (0..3).flat_map(|x| (0..3).filter(move |&y| y != x).map(move |y| (x, 3 + y)));
        let g = Graph::new(6, edges).unwrap();
        let bg = BipartiteGraph::new(g, ids(6, &[0, 1, 2])).unwrap();
        let fam = maximal_one_sided_modules(&bg, AbParams::new(1, 0)).unwrap();
        assert_eq!(fam.maximal_members, vec![ids(6, &[0, 1, 2])]);
    }

    #[test]
    fn closure_properties_hold() {
        let r = one_sided_family_closure_props(&two_pairs(), AbParams::new(0, 0), None).unwrap();
        assert!(r.violations.is_empty());
        assert!(r.pairs_checked > 0);
    }

    /// Inclusion-maximal subsets of `X` passing the module test, by brute force.
    fn oracle(bg: &BipartiteGraph, p: AbParams) -> Vec<VertexSet> {
        let xs = bg.x_side().to_vec();
        let n = bg.graph().n();
        let all = (0u32..1 << xs.len()).map(|mask| {
            VertexSet::from_ids(n, xs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v))
        });
        inclusion_maximal(all.filter(|m| is_module_unchecked(bg.graph(), m, p)))
    }

    #[test]
    fn maximal_members_match_the_oracle() {
        use rand::Rng;
        let mut rng = crate::io::generate::rng(11);
        for _ in 0..150 {
            let nx = rng.gen_range(3..9);
            let ny = rng.gen_range(1..6);
            let density = rng.gen_range(0.1..0.9);
            let (g, x) = crate::io::generate::random_bipartite(&mut rng, nx, ny, density);
            let bg = BipartiteGraph::new(g, x).unwrap();
            for p in [AbParams::new(0, 0), AbParams::new(1, 0), AbParams::new(0, 1), AbParams::new(1, 1)] {
                if nx < p.trivial_size() {
                    continue;
                }
                let fam = maximal_one_sided_modules(&bg, p).unwrap();
                assert_eq!(fam.maximal_members, oracle(&bg, p), "{:?} {:?}", bg, p);
                for m in &fam.maximal_members {
                    assert!(module_via_twins(&bg, m, p).unwrap());
                }
                let path = budget_path(&bg, p).unwrap();
                for w in path.windows(2) {
                    assert!(nested_in(&w[0], &w[1]));
                }
            }
        }
    }
}
