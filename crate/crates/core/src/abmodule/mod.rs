//! The (α, β)-module predicate and the quantities it is built from.
//!
//! For a set `A` and an outside vertex `x`, everything is decided by the count
//! `|N(x) ∩ A|`:
//!
//! * `x` is an α-neighbour of `A` when the count is at least `|A| − α`,
//! * a β-non-neighbour when it is at most `β`,
//! * a splitter when it is strictly between `β` and `|A| − α`.
//!
//! `A` is an (α, β)-module exactly when it has no splitter.

mod closure;

pub use closure::{
    closure, closure_naive, closure_refined, require_closure_threshold, ClosureAlgorithm,
    ClosureTrace, RefinementState, Tally,
};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{AbParams, Graph};

/// Classification of the outside vertices of a set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitterReport {
    pub n_alpha: VertexSet,
    pub n_bar_beta: VertexSet,
    pub splitters: VertexSet,
    /// `|N(x) ∩ A|` for every vertex `x`; entries for members of `A` are `None`.
    pub counts: Vec<Option<usize>>,
}

#[inline]
pub(crate) fn is_alpha_count(count: usize, size: usize, p: AbParams) -> bool {
    count + p.alpha >= size
}

#[inline]
pub(crate) fn is_beta_count(count: usize, p: AbParams) -> bool {
    count <= p.beta
}

#[inline]
pub(crate) fn is_splitter_count(count: usize, size: usize, p: AbParams) -> bool {
    count > p.beta && count + p.alpha < size
}

/// `N_α(A) = {x ∉ A : |N(x) ∩ A| ≥ |A| − α}`.
pub fn alpha_neighbourhood(g: &Graph, a: &VertexSet, p: AbParams) -> Result<VertexSet> {
    outside_filter(g, a, |count, size| is_alpha_count(count, size, p))
}

/// `N̄_β(A) = {x ∉ A : |N(x) ∩ A| ≤ β}`.
pub fn beta_non_neighbourhood(g: &Graph, a: &VertexSet, p: AbParams) -> Result<VertexSet> {
    outside_filter(g, a, |count, _| is_beta_count(count, p))
}

fn outside_filter(
    g: &Graph,
    a: &VertexSet,
    keep: impl Fn(usize, usize) -> bool,
) -> Result<VertexSet> {
    g.check_set(a)?;
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    let size = a.len();
    let mut out = g.empty_set();
    for x in a.complement().iter() {
        if keep(g.neighbours_in(x, a), size) {
            out.insert(x);
        }
    }
    Ok(out)
}

/// Splits `V ∖ A` into α-neighbours, β-non-neighbours and splitters.
///
/// When `|A| ≤ α + β` a vertex may be both an α-neighbour and a β-non-neighbour;
/// it is then listed in both sets.
pub fn splitter_set(g: &Graph, a: &VertexSet, p: AbParams) -> Result<SplitterReport> {
    g.check_set(a)?;
    let size = a.len();
    let mut report = SplitterReport {
        n_alpha: g.empty_set(),
        n_bar_beta: g.empty_set(),
        splitters: g.empty_set(),
        counts: vec![None; g.n()],
    };
    for x in a.complement().iter() {
        let c = g.neighbours_in(x, a);
        report.counts[x] = Some(c);
        if is_alpha_count(c, size, p) {
            report.n_alpha.insert(x);
        }
        if is_beta_count(c, p) {
            report.n_bar_beta.insert(x);
        }
        if is_splitter_count(c, size, p) {
            report.splitters.insert(x);
        }
    }
    Ok(report)
}

/// `true` iff every outside `x` has `|M ∩ N(x)| ≥ |M| − α` or `≤ β`.
pub fn is_ab_module(g: &Graph, m: &VertexSet, p: AbParams) -> Result<bool> {
    g.check_set(m)?;
    Ok(is_module_unchecked(g, m, p))
}

pub(crate) fn is_module_unchecked(g: &Graph, m: &VertexSet, p: AbParams) -> bool {
    let size = m.len();
    if size <= p.trivial_size() {
        return true;
    }
    m.complement().iter().all(|x| !is_splitter_count(g.neighbours_in(x, m), size, p))
}

/// A module is trivial when it is all of `V` or has at most `α + β + 1` vertices.
pub fn is_trivial_module(m: &VertexSet, p: AbParams, n: usize) -> bool {
    m.len() <= p.trivial_size() || (m.universe() == n && m.is_full())
}
