//! Matching cuts: bipartitions of `V` whose crossing edges form a matching.
//!
//! Deciding whether one exists is NP-complete; the search below assigns
//! vertices to sides in id order and backtracks as soon as some vertex has
//! two neighbours on the other side.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest graph accepted by [`matching_cut`].
pub const MATCHING_CUT_CAP: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingCut {
    /// The side containing vertex 0.
    pub side_a: VertexSet,
    pub side_b: VertexSet,
    /// Crossing edges as `(u, v)` with `u` in `side_a`.
    pub cut_edges: Vec<(usize, usize)>,
}

impl MatchingCut {
    fn from_side(g: &Graph, side_a: VertexSet) -> MatchingCut {
        let side_b = side_a.complement();
        let cut_edges = side_a
            .iter()
            .flat_map(|u| g.neighbours(u).iter().filter(|&&v| side_b.contains(v)).map(move |&v| (u, v)))
            .collect();
        MatchingCut { side_a, side_b, cut_edges }
    }

    /// No vertex meets two crossing edges.
    pub fn is_matching(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.cut_edges.iter().all(|&(u, v)| seen.insert(u) && seen.insert(v))
    }
}

/// A matching cut with both sides non-empty, or `None`.
pub fn matching_cut(g: &Graph) -> Result<Option<MatchingCut>> {
    let n = g.n();
    if n > MATCHING_CUT_CAP {
        return Err(Error::OracleCapExceeded { n, cap: MATCHING_CUT_CAP });
    }
    if n < 2 {
        return Ok(None);
    }
    let mut side = vec![None; n];
    side[0] = Some(false);
    let mut cross = vec![0u8; n];
    Ok(assign(g, 1, &mut side, &mut cross).then(|| {
        let a = VertexSet::from_ids(n, (0..n).filter(|&v| side[v] == Some(false)));
        MatchingCut::from_side(g, a)
    }))
}

fn assign(g: &Graph, v: usize, side: &mut [Option<bool>], cross: &mut [u8]) -> bool {
    let n = side.len();
    if v == n {
        return side.contains(&Some(true));
    }
    for choice in [false, true] {
        let mut ok = true;
        let mut touched = Vec::new();
        let mut mine = 0u8;
        for &u in g.neighbours(v) {
            if let Some(su) = side[u] {
                if su != choice {
                    mine += 1;
                    cross[u] += 1;
                    touched.push(u);
                    if cross[u] > 1 || mine > 1 {
                        ok = false;
                        break;
                    }
                }
            }
        }
        if ok {
            side[v] = Some(choice);
            cross[v] = mine;
            if assign(g, v + 1, side, cross) {
                return true;
            }
            side[v] = None;
            cross[v] = 0;
        }
        for u in touched {
            cross[u] -= 1;
        }
    }
    false
}

/// Exhaustive reference: tries every bipartition with vertex 0 on side A.
pub fn matching_cut_brute(g: &Graph) -> Option<MatchingCut> {
    let n = g.n();
    assert!(n <= 30, "brute-force matching cut is limited to 30 vertices");
    if n < 2 {
        return None;
    }
    // the last mask would put every vertex on side A
    (0u64..(1 << (n - 1)) - 1).find_map(|rest| {
        let cut = MatchingCut::from_side(g, VertexSet::from_mask(n, rest << 1 | 1));
        cut.is_matching().then_some(cut)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    #[test]
    fn c4_has_a_matching_cut() {
        let cut = matching_cut(&families::cycle(4)).unwrap().unwrap();
        assert!(cut.is_matching());
        assert_eq!(cut.cut_edges.len(), 2);
    }

    #[test]
    fn k4_has_none() {
        assert_eq!(matching_cut(&families::complete(4)).unwrap(), None);
        assert_eq!(matching_cut_brute(&families::complete(4)), None);
    }

    #[test]
    fn disconnected_graphs_cut_nothing() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let cut = matching_cut(&g).unwrap().unwrap();
        assert!(cut.cut_edges.len() <= 1);
    }

    #[test]
    fn agrees_with_brute_force() {
        let mut rng = crate::io::generate::rng(3);
        for _ in 0..200 {
            use rand::Rng;
            let n = rng.gen_range(2..10);
            let density = rng.gen_range(0.2..0.9);
            let g = crate::io::generate::random_with(&mut rng, n, density);
            let fast = matching_cut(&g).unwrap();
            assert_eq!(fast.is_some(), matching_cut_brute(&g).is_some());
            if let Some(cut) = fast {
                assert!(cut.is_matching());
                assert!(!cut.side_a.is_empty() && !cut.side_b.is_empty());
            }
        }
    }
}
