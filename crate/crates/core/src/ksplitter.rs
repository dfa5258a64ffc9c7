//! k-splitter modules: sets with at most `k` classical splitters.
//!
//! This relaxation has no closure operator (minimal k-splitter supersets are
//! not unique), so only the predicate and a checker for its combination laws
//! are provided.

use rand::seq::SliceRandom;

use crate::bitset::VertexSet;
use crate::enumeration::oracle_cap;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KSplitterReport {
    /// Vertices outside `m` adjacent to some but not all of `m`.
    pub classical_splitters: VertexSet,
    pub k: usize,
    pub is_k_module: bool,
}

pub fn k_splitter_report(g: &Graph, m: &VertexSet, k: usize) -> Result<KSplitterReport> {
    g.check_set(m)?;
    let size = m.len();
    let classical_splitters = VertexSet::from_ids(
        g.n(),
        (0..g.n()).filter(|&v| !m.contains(v) && (1..size).contains(&g.neighbours_in(v, m))),
    );
    let is_k_module = classical_splitters.len() <= k;
    Ok(KSplitterReport { classical_splitters, k, is_k_module })
}

/// Largest graph for mask-based law checks.
const MASK_LIMIT: usize = 63;
/// Above this size the sampled checker draws sets instead of listing them.
const POOL_ENUMERATION_LIMIT: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LawMode {
    /// Every pair of k-splitter modules; `n` up to the oracle cap.
    Exhaustive,
    /// `pairs` random pairs drawn with `seed`.
    Sampled { pairs: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawViolation {
    pub law: &'static str,
    pub a: VertexSet,
    pub b: Option<VertexSet>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LawReport {
    pub modules_seen: usize,
    pub pairs_checked: usize,
    pub violations: Vec<LawViolation>,
}

struct Masks {
    n: usize,
    adj: Vec<u64>,
    co_adj: Vec<u64>,
}

impl Masks {
    fn new(g: &Graph) -> Masks {
        let n = g.n();
        let full = full_mask(n);
        let adj: Vec<u64> = (0..n).map(|v| g.neighbour_set(v).to_mask().expect("n ≤ 63")).collect();
        let co_adj = adj.iter().enumerate().map(|(v, &a)| full & !a & !(1 << v)).collect();
        Masks { n, adj, co_adj }
    }

    fn splitters_in(adj: &[u64], n: usize, m: u64) -> u64 {
        let size = m.count_ones();
        (0..n)
            .filter(|&v| m >> v & 1 == 0 && (1..size).contains(&(adj[v] & m).count_ones()))
            .fold(0, |acc, v| acc | 1 << v)
    }

    fn splitters(&self, m: u64) -> u64 {
        Self::splitters_in(&self.adj, self.n, m)
    }

    fn count(&self, m: u64) -> usize {
        self.splitters(m).count_ones() as usize
    }
}

fn full_mask(n: usize) -> u64 {
    if n == 0 {
        0
    } else {
        u64::MAX >> (64 - n)
    }
}

/// Checks the single-set laws (trivial sets, complement invariance, splitter
/// monotonicity over supersets) and the pair laws (union and intersection of
/// overlapping modules have at most `2k` splitters; `A ∖ B` has at most
/// `k + |A ∩ B|`).
pub fn k_splitter_laws_check(g: &Graph, k: usize, mode: LawMode) -> Result<LawReport> {
    let n = g.n();
    let cap = match mode {
        LawMode::Exhaustive => oracle_cap().min(MASK_LIMIT),
        LawMode::Sampled { .. } => MASK_LIMIT,
    };
    if n > cap {
        return Err(Error::OracleCapExceeded { n, cap });
    }
    let masks = Masks::new(g);
    let set = |m: u64| VertexSet::from_mask(n, m);
    let mut report = LawReport::default();
    let mut rng = crate::io::generate::rng(match mode {
        LawMode::Sampled { seed, .. } => seed,
        LawMode::Exhaustive => 0,
    });

    let pool: Vec<u64> = if matches!(mode, LawMode::Exhaustive) || n <= POOL_ENUMERATION_LIMIT {
        (0..=full_mask(n)).filter(|&m| masks.count(m) <= k).collect()
    } else {
        use rand::Rng;
        let mut found = std::collections::BTreeSet::new();
        for _ in 0..20_000 {
            let mask = rng.gen::<u64>() & full_mask(n);
            if masks.count(mask) <= k {
                found.insert(mask);
            }
        }
        found.into_iter().collect()
    };
    report.modules_seen = pool.len();

    let mut violations = Vec::new();
    let mut fail = |law, a: u64, b: Option<u64>| violations.push(LawViolation { law, a: set(a), b: b.map(set) });
    for &a in &pool {
        if Masks::splitters_in(&masks.co_adj, n, a) != masks.splitters(a) {
            fail("complement invariance", a, None);
        }
        // one superset per splitter-free vertex is enough to exercise monotonicity
        let splitters = masks.splitters(a);
        for v in 0..n {
            if (a | splitters) >> v & 1 == 0 && splitters & !masks.splitters(a | 1 << v) != 0 {
                fail("splitter monotonicity", a, Some(a | 1 << v));
            }
        }
    }
    if n <= POOL_ENUMERATION_LIMIT {
        for m in 0..=full_mask(n) {
            let size = m.count_ones() as usize;
            if (size <= 1 || size + k >= n) && masks.count(m) > k {
                fail("trivial sets", m, None);
            }
        }
    }

    let pairs: Vec<(u64, u64)> = match mode {
        LawMode::Exhaustive => {
            let mut all = Vec::new();
            for (i, &a) in pool.iter().enumerate() {
                for &b in &pool[i + 1..] {
                    all.push((a, b));
                    all.push((b, a));
                }
            }
            all
        }
        LawMode::Sampled { pairs, .. } => (0..pairs)
            .filter_map(|_| Some((*pool.choose(&mut rng)?, *pool.choose(&mut rng)?)))
            .collect(),
    };
    report.pairs_checked = pairs.len();
    for (a, b) in pairs {
        if a & b != 0 {
            if masks.count(a | b) > 2 * k {
                fail("union", a, Some(b));
            }
            if masks.count(a & b) > 2 * k {
                fail("intersection", a, Some(b));
            }
        }
        if masks.count(a & !b) > k + (a & b).count_ones() as usize {
            fail("difference", a, Some(b));
        }
    }
    report.violations = violations;
    Ok(report)
}

/// Adding one splitter to `a` does not always give a k-splitter module:
/// doing so can create new splitters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonUniqueness {
    pub set: VertexSet,
    /// Distinct minimal k-splitter modules containing `set`, each one
    /// splitter larger.
    pub minimal_supersets: Vec<VertexSet>,
}

/// Finds a set with exactly `k + 1` splitters such that at least two of the
/// one-splitter extensions are k-splitter modules, which makes minimal
/// k-splitter supersets non-unique.
pub fn non_uniqueness_witness(g: &Graph, k: usize) -> Result<Option<NonUniqueness>> {
    let n = g.n();
    let cap = oracle_cap().min(MASK_LIMIT);
    if n > cap {
        return Err(Error::OracleCapExceeded { n, cap });
    }
    let masks = Masks::new(g);
    for a in 1..=full_mask(n) {
        let splitters = masks.splitters(a);
        if splitters.count_ones() as usize != k + 1 {
            continue;
        }
        let supersets: Vec<VertexSet> = (0..n)
            .filter(|&s| splitters >> s & 1 == 1 && masks.count(a | 1 << s) <= k)
            .map(|s| VertexSet::from_mask(n, a | 1 << s))
            .collect();
        if supersets.len() >= 2 {
            return Ok(Some(NonUniqueness { set: VertexSet::from_mask(n, a), minimal_supersets: supersets }));
        }
    }
    Ok(None)
}
