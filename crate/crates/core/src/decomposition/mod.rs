//! Modular partitions and their series / parallel / prime classification,
//! decomposition trees, cotrees, matching cuts and brittle partitions.

mod cograph;
mod matching_cut;
mod tree;

pub use cograph::{is_ab_cograph, CographResult};
pub use matching_cut::{matching_cut, matching_cut_brute, MatchingCut, MATCHING_CUT_CAP};
pub use tree::{decomposition_tree, validate_tree, DecompositionTree, NodeKind, TreeNode};

use crate::abmodule::{closure_refined, is_alpha_count, is_beta_count, is_module_unchecked};
use crate::bitset::VertexSet;
use crate::enumeration::{minimal_nontrivial_modules, oracle_cap};
use crate::error::{Error, Result};
use crate::graph::{AbParams, Graph};

/// Outcome of a pairwise connectivity test. `degenerate` is set when one of
/// the sets has fewer than `α + β + 1` vertices, below the size the notion is
/// defined for; the inclusions are then applied literally.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Connectivity {
    pub holds: bool,
    pub degenerate: bool,
}

fn check_pair(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<()> {
    g.check_set(a)?;
    g.check_set(b)?;
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet);
    }
    if !a.is_disjoint(b) {
        return Err(Error::Overlapping);
    }
    Ok(())
}

/// Every vertex of `a` is an α-neighbour of `b` and vice versa.
pub fn is_alpha_connected(g: &Graph, a: &VertexSet, b: &VertexSet, p: AbParams) -> Result<Connectivity> {
    check_pair(g, a, b)?;
    Ok(Connectivity {
        holds: alpha_connected(g, a, b, p),
        degenerate: a.len().min(b.len()) < p.trivial_size(),
    })
}

/// Every vertex of `a` is a β-non-neighbour of `b` and vice versa.
pub fn is_beta_non_connected(g: &Graph, a: &VertexSet, b: &VertexSet, p: AbParams) -> Result<Connectivity> {
    check_pair(g, a, b)?;
    Ok(Connectivity {
        holds: beta_non_connected(g, a, b, p),
        degenerate: a.len().min(b.len()) < p.trivial_size(),
    })
}

pub(crate) fn alpha_connected(g: &Graph, a: &VertexSet, b: &VertexSet, p: AbParams) -> bool {
    let one_way = |x: &VertexSet, y: &VertexSet| x.iter().all(|v| is_alpha_count(g.neighbours_in(v, y), y.len(), p));
    one_way(a, b) && one_way(b, a)
}

pub(crate) fn beta_non_connected(g: &Graph, a: &VertexSet, b: &VertexSet, p: AbParams) -> bool {
    let one_way = |x: &VertexSet, y: &VertexSet| x.iter().all(|v| is_beta_count(g.neighbours_in(v, y), p));
    one_way(a, b) && one_way(b, a)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PartitionLabel {
    AlphaSeries,
    BetaParallel,
    AbPrime,
    Unclassified,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularPartition {
    pub parts: Vec<VertexSet>,
    pub params: AbParams,
    pub label: PartitionLabel,
}

/// Checks that `parts` are non-empty, pairwise disjoint and cover `V`.
pub fn check_partition(g: &Graph, parts: &[VertexSet]) -> Result<()> {
    let mut seen = g.empty_set();
    for part in parts {
        g.check_set(part)?;
        if part.is_empty() {
            return Err(Error::InvalidPartition("empty part".into()));
        }
        if !seen.is_disjoint(part) {
            return Err(Error::InvalidPartition("parts overlap".into()));
        }
        seen.union_with(part);
    }
    if !seen.is_full() {
        return Err(Error::InvalidPartition("parts do not cover every vertex".into()));
    }
    Ok(())
}

fn has_large_part(parts: &[VertexSet], p: AbParams) -> bool {
    parts.iter().any(|s| s.len() >= p.trivial_size())
}

fn all_pairs(parts: &[VertexSet], test: impl Fn(&VertexSet, &VertexSet) -> bool) -> bool {
    parts.iter().enumerate().all(|(i, a)| parts[i + 1..].iter().all(|b| test(a, b)))
}

fn any_pair(parts: &[VertexSet], test: impl Fn(&VertexSet, &VertexSet) -> bool) -> bool {
    parts.iter().enumerate().any(|(i, a)| parts[i + 1..].iter().any(|b| test(a, b)))
}

/// A large part exists and every two parts are α-connected. Module-ness of
/// the parts is not checked.
pub fn is_series_partition(g: &Graph, parts: &[VertexSet], p: AbParams) -> bool {
    parts.len() >= 2 && has_large_part(parts, p) && all_pairs(parts, |a, b| alpha_connected(g, a, b, p))
}

/// A large part exists and every two parts are β-non-connected.
pub fn is_parallel_partition(g: &Graph, parts: &[VertexSet], p: AbParams) -> bool {
    parts.len() >= 2 && has_large_part(parts, p) && all_pairs(parts, |a, b| beta_non_connected(g, a, b, p))
}

/// `true` iff no module other than `V` strictly contains `m`.
pub fn is_maximal_module(g: &Graph, m: &VertexSet, p: AbParams) -> bool {
    m.complement().iter().all(|v| {
        let mut grown = m.clone();
        grown.insert(v);
        closure_refined(g, &grown, p).expect("same universe").result.is_full()
    })
}

/// Labels an (α, β)-modular partition.
pub fn classify_partition(g: &Graph, parts: &[VertexSet], p: AbParams) -> Result<ModularPartition> {
    let n = g.n();
    if n < p.min_nontrivial() + 1 {
        return Err(Error::GraphTooSmall { n, required: p.min_nontrivial() + 1 });
    }
    check_partition(g, parts)?;
    if parts.len() < 2 {
        return Err(Error::InvalidPartition("at least two parts are needed".into()));
    }
    if let Some(bad) = parts.iter().find(|s| !is_module_unchecked(g, s, p)) {
        return Err(Error::InvalidPartition(format!("part {bad} is not a module")));
    }
    let label = if is_series_partition(g, parts, p) {
        PartitionLabel::AlphaSeries
    } else if is_parallel_partition(g, parts, p) {
        PartitionLabel::BetaParallel
    } else if has_large_part(parts, p)
        && any_pair(parts, |a, b| alpha_connected(g, a, b, p))
        && any_pair(parts, |a, b| beta_non_connected(g, a, b, p))
        && parts.iter().all(|s| is_maximal_module(g, s, p))
    {
        PartitionLabel::AbPrime
    } else {
        PartitionLabel::Unclassified
    };
    Ok(ModularPartition { parts: parts.to_vec(), params: p, label })
}

/// How the tree builder looks for maximal non-trivial modules.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    /// Largest module by descending-size search; exponential, `n ≤ 14`.
    #[default]
    Exact,
    /// Grows each minimal module one vertex at a time through closures.
    /// The result is a module that no single-vertex extension enlarges
    /// without reaching outside the allowed set.
    Grow,
}

/// A maximal non-trivial module, or `None` when the graph is prime.
pub fn maximal_nontrivial_module(g: &Graph, p: AbParams, strategy: Strategy) -> Result<Option<VertexSet>> {
    maximal_module_within(g, p, strategy, &g.vertex_set())
}

/// A non-trivial module of `g` contained in `allowed` (and different from
/// `V`), maximal among such; ties go to the larger, then the lexicographically
/// smaller set.
pub fn maximal_module_within(
    g: &Graph,
    p: AbParams,
    strategy: Strategy,
    allowed: &VertexSet,
) -> Result<Option<VertexSet>> {
    g.check_set(allowed)?;
    let n = g.n();
    let min = p.min_nontrivial();
    let top = if allowed.is_full() { n.saturating_sub(1) } else { allowed.len() };
    if top < min {
        return Ok(None);
    }
    match strategy {
        Strategy::Exact => {
            let cap = oracle_cap();
            if n > cap {
                return Err(Error::OracleCapExceeded { n, cap });
            }
            let pool = allowed.to_vec();
            for size in (min..=top).rev() {
                if let Some(m) = first_module_of_size(g, p, &pool, size) {
                    return Ok(Some(m));
                }
            }
            Ok(None)
        }
        Strategy::Grow => {
            if n <= min {
                return Ok(None);
            }
            let minimal = minimal_nontrivial_modules(g, p)?;
            let mut best: Option<VertexSet> = None;
            for start in minimal.members.into_iter().filter(|m| m.is_subset(allowed)) {
                let grown = grow(g, p, start, allowed);
                let better = match &best {
                    None => true,
                    Some(b) => grown.len() > b.len() || (grown.len() == b.len() && grown < *b),
                };
                if better {
                    best = Some(grown);
                }
            }
            Ok(best)
        }
    }
}

fn grow(g: &Graph, p: AbParams, mut m: VertexSet, allowed: &VertexSet) -> VertexSet {
    'outer: loop {
        for v in allowed.difference(&m).iter() {
            let mut candidate = m.clone();
            candidate.insert(v);
            let c = closure_refined(g, &candidate, p).expect("same universe").result;
            if !c.is_full() && c.is_subset(allowed) {
                m = c;
                continue 'outer;
            }
        }
        return m;
    }
}

/// Lexicographically first `size`-subset of `pool` that is a module.
fn first_module_of_size(g: &Graph, p: AbParams, pool: &[usize], size: usize) -> Option<VertexSet> {
    let k = pool.len();
    if size > k || size == 0 {
        return None;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        let s = VertexSet::from_ids(g.n(), idx.iter().map(|&i| pool[i]));
        if is_module_unchecked(g, &s, p) {
            return Some(s);
        }
        let mut i = size;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if idx[i] != i + k - size {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Largest number of parts for [`brittle_decomposition_check`].
pub const BRITTLE_PART_LIMIT: usize = 20;

/// `true` iff every union of parts is a module.
pub fn brittle_decomposition_check(g: &Graph, parts: &[VertexSet], p: AbParams) -> Result<bool> {
    check_partition(g, parts)?;
    let k = parts.len();
    if k > BRITTLE_PART_LIMIT {
        return Err(Error::TooManyParts { parts: k, limit: BRITTLE_PART_LIMIT });
    }
    for mask in 1u32..1 << k {
        let mut union = g.empty_set();
        for (i, part) in parts.iter().enumerate() {
            if mask >> i & 1 == 1 {
                union.union_with(part);
            }
        }
        if !is_module_unchecked(g, &union, p) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitKind {
    Series,
    Parallel,
}

/// A two-part modular partition passing the series (or parallel) predicate,
/// by exhaustive search over bipartitions. Splits are tried by decreasing
/// smaller side, then lexicographically on the side holding vertex 0.
pub fn two_part_decomposition(g: &Graph, p: AbParams, kind: SplitKind) -> Result<Option<[VertexSet; 2]>> {
    let n = g.n();
    let cap = oracle_cap().min(30);
    if n > cap {
        return Err(Error::OracleCapExceeded { n, cap });
    }
    if n < p.min_nontrivial() + 1 {
        return Ok(None);
    }
    let mut splits: Vec<VertexSet> = (0u64..1 << (n - 1))
        .map(|rest| VertexSet::from_mask(n, rest << 1 | 1))
        .filter(|a| !a.is_full())
        .collect();
    splits.sort_by(|a, b| {
        let sa = a.len().min(n - a.len());
        let sb = b.len().min(n - b.len());
        sb.cmp(&sa).then_with(|| a.cmp(b))
    });
    for a in splits {
        let parts = [a.complement(), a];
        let predicate = match kind {
            SplitKind::Series => is_series_partition(g, &parts, p),
            SplitKind::Parallel => is_parallel_partition(g, &parts, p),
        };
        if predicate && parts.iter().all(|s| is_module_unchecked(g, s, p)) {
            let [b, a] = parts;
            return Ok(Some([a, b]));
        }
    }
    Ok(None)
}
