//! Minimal non-trivial modules, coverings, primality and brittleness, with
//! exhaustive oracles for small graphs.
//!
//! Every minimal non-trivial module is the closure of some `α + β + 2`
//! vertices, so enumeration closes every such tuple. The default driver
//! walks tuples as a prefix tree and shares the refinement state of a common
//! prefix: the first vertices closed for a tuple are exactly its members, in
//! order, so the state after closing a prefix can be cloned instead of
//! recomputed. The per-tuple driver recomputes every closure from scratch
//! and is kept as a reference.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::abmodule::{closure_refined, is_module_unchecked, RefinementState};
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{AbParams, Graph};

/// Exhaustive searches refuse graphs above this size unless
/// `ABMOD_MAX_ORACLE_N` says otherwise.
pub const DEFAULT_ORACLE_CAP: usize = 14;

/// Above this `α + β`, the CLI warns about the number of tuples.
pub const ENUMERATION_WARN_SUM: usize = 3;

pub fn oracle_cap() -> usize {
    std::env::var("ABMOD_MAX_ORACLE_N")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_ORACLE_CAP)
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    // masks are single words
    let cap = cap.min(63);
    if n > cap {
        Err(Error::OracleCapExceeded { n, cap })
    } else {
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    MinimalNontrivial,
    Covering,
    AllModules,
}

/// A deduplicated family of vertex sets, sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleFamily {
    pub members: Vec<VertexSet>,
    pub params: AbParams,
    pub kind: FamilyKind,
}

impl ModuleFamily {
    fn new(mut members: Vec<VertexSet>, params: AbParams, kind: FamilyKind) -> Self {
        members.sort();
        members.dedup();
        ModuleFamily { members, params, kind }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: &VertexSet) -> bool {
        self.members.binary_search(s).is_ok()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Driver {
    #[default]
    Batched,
    PerTuple,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumOptions {
    pub driver: Driver,
    /// Worker threads; `None` uses the global rayon pool, `Some(1)` runs
    /// sequentially.
    pub jobs: Option<usize>,
}

/// Members of `family` that contain no other member.
pub fn inclusion_minimal(family: impl IntoIterator<Item = VertexSet>) -> Vec<VertexSet> {
    let mut all: Vec<VertexSet> = family.into_iter().collect::<HashSet<_>>().into_iter().collect();
    all.sort_by_key(VertexSet::len);
    let mut kept: Vec<VertexSet> = Vec::new();
    for s in all {
        if !kept.iter().any(|k| k.is_subset(&s)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// Members of `family` contained in no other member.
pub fn inclusion_maximal(family: impl IntoIterator<Item = VertexSet>) -> Vec<VertexSet> {
    let mut all: Vec<VertexSet> = family.into_iter().collect::<HashSet<_>>().into_iter().collect();
    all.sort_by_key(|s| std::cmp::Reverse(s.len()));
    let mut kept: Vec<VertexSet> = Vec::new();
    for s in all {
        if !kept.iter().any(|k| s.is_subset(k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

pub fn minimal_nontrivial_modules(g: &Graph, p: AbParams) -> Result<ModuleFamily> {
    minimal_nontrivial_modules_with(g, p, EnumOptions::default())
}

pub fn minimal_nontrivial_modules_with(g: &Graph, p: AbParams, opts: EnumOptions) -> Result<ModuleFamily> {
    let n = g.n();
    let k = p.min_nontrivial();
    if n <= k {
        return Err(Error::GraphTooSmall { n, required: k + 1 });
    }
    let run = || -> Vec<VertexSet> {
        let per_first = |first: usize| -> HashSet<VertexSet> {
            let mut out = HashSet::new();
            match opts.driver {
                Driver::Batched => {
                    let mut state = RefinementState::new(g, p);
                    state.close_now(first);
                    batched(&state, first + 1, k - 1, &mut out);
                }
                Driver::PerTuple => per_tuple(g, p, first, k, &mut out),
            }
            out
        };
        let firsts = 0..=n - k;
        let found: HashSet<VertexSet> = if opts.jobs == Some(1) {
            firsts.flat_map(per_first).collect()
        } else {
            firsts.into_par_iter().map(per_first).reduce(HashSet::new, |mut a, b| {
                a.extend(b);
                a
            })
        };
        inclusion_minimal(found)
    };
    let members = match opts.jobs {
        Some(j) if j > 1 => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map(|pool| pool.install(run))
            .unwrap_or_else(|_| run()),
        _ => run(),
    };
    Ok(ModuleFamily::new(members, p, FamilyKind::MinimalNontrivial))
}

/// Extends the prefix held in `state` by `left` more vertices from `start..`.
fn batched(state: &RefinementState<'_>, start: usize, left: usize, out: &mut HashSet<VertexSet>) {
    let n = state.members().universe();
    for v in start..=n - left {
        let mut next = state.clone();
        next.close_now(v);
        if next.len() == n {
            // every extension of this prefix closes to V
            continue;
        }
        if left == 1 {
            next.run();
            let m = next.members();
            if !m.is_full() {
                out.insert(m);
            }
        } else {
            batched(&next, v + 1, left - 1, out);
        }
    }
}

fn per_tuple(g: &Graph, p: AbParams, first: usize, k: usize, out: &mut HashSet<VertexSet>) {
    let n = g.n();
    let mut tuple: Vec<usize> = (first..first + k).collect();
    loop {
        let a = VertexSet::from_ids(n, tuple.iter().copied());
        let m = closure_refined(g, &a, p).expect("set built over g").result;
        if !m.is_full() {
            out.insert(m);
        }
        // advance all positions but the first
        let mut i = k - 1;
        while i > 0 && tuple[i] == n - k + i {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        tuple[i] += 1;
        for j in i + 1..k {
            tuple[j] = tuple[j - 1] + 1;
        }
    }
}

/// Every subset of `V` (the empty set included) that is an (α, β)-module.
pub fn all_modules_oracle(g: &Graph, p: AbParams, max_n: Option<usize>) -> Result<ModuleFamily> {
    let n = g.n();
    check_cap(n, max_n.unwrap_or_else(oracle_cap))?;
    let members: Vec<VertexSet> = (0..1u64 << n)
        .into_par_iter()
        .map(|mask| VertexSet::from_mask(n, mask))
        .filter(|s| is_module_unchecked(g, s, p))
        .collect();
    Ok(ModuleFamily::new(members, p, FamilyKind::AllModules))
}

/// Minimal non-trivial modules computed from the oracle.
pub fn minimal_nontrivial_oracle(g: &Graph, p: AbParams, max_n: Option<usize>) -> Result<ModuleFamily> {
    let all = all_modules_oracle(g, p, max_n)?;
    let nontrivial = all.members.into_iter().filter(|s| s.len() > p.trivial_size() && !s.is_full());
    Ok(ModuleFamily::new(inclusion_minimal(nontrivial), p, FamilyKind::MinimalNontrivial))
}

/// Minimal non-trivial modules plus a singleton for every vertex they miss.
pub fn covering(g: &Graph, p: AbParams) -> Result<ModuleFamily> {
    let minimal = minimal_nontrivial_modules(g, p)?;
    Ok(covering_from(g, minimal))
}

pub fn covering_from(g: &Graph, minimal: ModuleFamily) -> ModuleFamily {
    let mut covered = g.empty_set();
    for m in &minimal.members {
        covered.union_with(m);
    }
    let mut members = minimal.members;
    members.extend(covered.complement().iter().map(|v| VertexSet::from_ids(g.n(), [v])));
    ModuleFamily::new(members, minimal.params, FamilyKind::Covering)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrimeStatus {
    Prime,
    /// At most `α + β + 2` vertices: every module is trivial by size.
    DegeneratePrime,
    NotPrime { witness: VertexSet },
}

impl PrimeStatus {
    pub fn is_prime(&self) -> bool {
        !matches!(self, PrimeStatus::NotPrime { .. })
    }
}

/// Primality; the witness is the lexicographically first minimal module.
pub fn is_prime(g: &Graph, p: AbParams) -> PrimeStatus {
    is_prime_with(g, p, EnumOptions::default())
}

pub fn is_prime_with(g: &Graph, p: AbParams, opts: EnumOptions) -> PrimeStatus {
    if g.n() <= p.min_nontrivial() {
        return PrimeStatus::DegeneratePrime;
    }
    let family = minimal_nontrivial_modules_with(g, p, opts).expect("size checked above");
    match family.members.into_iter().next() {
        None => PrimeStatus::Prime,
        Some(witness) => PrimeStatus::NotPrime { witness },
    }
}

/// Whether every subset of `V` is a module, by exhaustive check.
pub fn is_brittle_exact(g: &Graph, p: AbParams, max_n: Option<usize>) -> Result<bool> {
    let n = g.n();
    check_cap(n, max_n.unwrap_or_else(oracle_cap))?;
    if n <= p.min_nontrivial() {
        return Ok(true);
    }
    Ok((0..1u64 << n).into_par_iter().all(|mask| {
        let size = mask.count_ones() as usize;
        size <= p.trivial_size() || size == n || is_module_unchecked(g, &VertexSet::from_mask(n, mask), p)
    }))
}

/// A sufficient condition for brittleness: every vertex misses at most `α`
/// others, or sees at most `β`. `None` when neither holds.
pub fn is_brittle_fast(g: &Graph, p: AbParams) -> Option<bool> {
    let n = g.n();
    let dense = (0..n).all(|v| g.degree(v) + 1 + p.alpha >= n);
    let sparse = (0..n).all(|v| g.degree(v) <= p.beta);
    (dense || sparse).then_some(true)
}
