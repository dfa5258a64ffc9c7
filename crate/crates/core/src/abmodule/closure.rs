//! Modular closure: the smallest (α, β)-module containing a given set.
//!
//! Two implementations are provided and must always agree:
//!
//! * [`closure_naive`] repeatedly adds the whole splitter set of the current
//!   set until none is left;
//! * [`closure_refined`] is a graph search. Vertices enter the closure one at a
//!   time; every outside vertex keeps a tally of closed neighbours (`edge`)
//!   and closed non-neighbours (`non_edge`), and joins the closure as soon as
//!   `edge > β` and `non_edge > α`, i.e. as soon as it splits the closed set.
//!
//! The tallies are never stored per vertex. Unclosed outside vertices live in
//! the parts of a partition; all members of a part share their tallies. When a
//! vertex `z` is closed, each part `B` is split into `B ∩ N(z)` (edge count
//! goes up) and `B ∖ N(z)` (non-edge count goes up). Only the first half is
//! touched explicitly, in `O(|N(z)|)`; the non-edge count of a part is implied
//! by the global number of closed vertices. A part is re-examined only when
//! its edge count changes (it is then a new part) or when its implied non-edge
//! count reaches `α + 1`, which happens at a single, precomputed step. Parts
//! are not kept sorted by tally.

use std::collections::VecDeque;

use super::is_splitter_count;
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{AbParams, Graph};

/// Closed-neighbour / closed-non-neighbour counts of an outside vertex.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub edge: usize,
    pub non_edge: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosureAlgorithm {
    Naive,
    Refined,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureTrace {
    /// Successive sets `M_0 = A ⊂ M_1 ⊂ … ⊂ M(A)`. The refined search reports
    /// only the input and the result.
    pub stages: Vec<VertexSet>,
    pub result: VertexSet,
    /// Order in which vertices were closed (refined search only).
    pub visited_order: Vec<usize>,
    /// Tallies of the vertices outside the result, against the result.
    pub counters: Vec<Option<Tally>>,
    /// Number of parts created by refinement (refined search only).
    pub refinement_splits: usize,
    /// The input had fewer than `α + β + 2` vertices and was returned as is.
    pub below_threshold: bool,
}

/// Errors when `|a| < α + β + 2`, for callers that want the strict contract.
pub fn require_closure_threshold(a: &VertexSet, p: AbParams) -> Result<()> {
    if a.len() < p.min_nontrivial() {
        Err(Error::BelowThreshold { size: a.len(), required: p.min_nontrivial() })
    } else {
        Ok(())
    }
}

pub fn closure(g: &Graph, a: &VertexSet, p: AbParams, algorithm: ClosureAlgorithm) -> Result<ClosureTrace> {
    match algorithm {
        ClosureAlgorithm::Naive => closure_naive(g, a, p),
        ClosureAlgorithm::Refined => closure_refined(g, a, p),
    }
}

/// Adds every splitter of the current set, round after round.
pub fn closure_naive(g: &Graph, a: &VertexSet, p: AbParams) -> Result<ClosureTrace> {
    g.check_set(a)?;
    let below_threshold = a.len() < p.min_nontrivial();
    let mut current = a.clone();
    let mut stages = vec![current.clone()];
    loop {
        let size = current.len();
        let mut splitters = g.empty_set();
        for x in current.complement().iter() {
            if is_splitter_count(g.neighbours_in(x, &current), size, p) {
                splitters.insert(x);
            }
        }
        if splitters.is_empty() {
            break;
        }
        current.union_with(&splitters);
        stages.push(current.clone());
    }
    let counters = tallies_against(g, &current);
    Ok(ClosureTrace {
        stages,
        result: current,
        visited_order: Vec::new(),
        counters,
        refinement_splits: 0,
        below_threshold,
    })
}

fn tallies_against(g: &Graph, m: &VertexSet) -> Vec<Option<Tally>> {
    let size = m.len();
    (0..g.n())
        .map(|x| {
            (!m.contains(x)).then(|| {
                let edge = g.neighbours_in(x, m);
                Tally { edge, non_edge: size - edge }
            })
        })
        .collect()
}

/// Graph-search closure with partition refinement.
///
/// `OPEN` is a FIFO queue seeded with `a` in ascending order; vertices that
/// become splitters in the same step are queued in ascending order.
pub fn closure_refined(g: &Graph, a: &VertexSet, p: AbParams) -> Result<ClosureTrace> {
    g.check_set(a)?;
    let mut state = RefinementState::new(g, p);
    for v in a {
        state.enqueue(v);
    }
    state.run();
    let result = state.members();
    let stages = if &result == a { vec![result.clone()] } else { vec![a.clone(), result.clone()] };
    Ok(ClosureTrace {
        stages,
        counters: state.tallies(),
        visited_order: state.order,
        refinement_splits: state.splits,
        below_threshold: a.len() < p.min_nontrivial(),
        result,
    })
}

const NONE: usize = usize::MAX;

#[derive(Clone, Debug)]
struct Part {
    members: Vec<usize>,
    edge: usize,
    /// Visit during which this part last received a child.
    stamp: usize,
    child: usize,
}

/// The state of one refined closure computation.
///
/// Cloning is `O(n)`, which lets the enumeration driver share the work done
/// on a common prefix of start vertices.
#[derive(Clone, Debug)]
pub struct RefinementState<'g> {
    g: &'g Graph,
    p: AbParams,
    in_closure: Vec<bool>,
    part_of: Vec<usize>,
    pos: Vec<usize>,
    parts: Vec<Part>,
    /// `due[t]`: parts whose implied non-edge count reaches `α + 1` when the
    /// `t`-th vertex is closed.
    due: Vec<Vec<usize>>,
    queue: VecDeque<usize>,
    closed: usize,
    order: Vec<usize>,
    splits: usize,
    size: usize,
}

impl<'g> RefinementState<'g> {
    pub fn new(g: &'g Graph, p: AbParams) -> Self {
        let n = g.n();
        let mut due = vec![Vec::new(); n + p.alpha + 2];
        let parts = if n > 0 {
            due[p.alpha + 1].push(0);
            vec![Part { members: (0..n).collect(), edge: 0, stamp: 0, child: NONE }]
        } else {
            Vec::new()
        };
        RefinementState {
            g,
            p,
            in_closure: vec![false; n],
            part_of: vec![0; n],
            pos: (0..n).collect(),
            parts,
            due,
            queue: VecDeque::new(),
            closed: 0,
            order: Vec::with_capacity(n),
            splits: 0,
            size: 0,
        }
    }

    /// Number of vertices closed or waiting in `OPEN`.
    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        self.in_closure[v]
    }

    fn detach(&mut self, v: usize) {
        let pid = self.part_of[v];
        let part = &mut self.parts[pid];
        let i = self.pos[v];
        part.members.swap_remove(i);
        if let Some(&moved) = part.members.get(i) {
            self.pos[moved] = i;
        }
        self.part_of[v] = NONE;
    }

    fn admit(&mut self, v: usize) -> bool {
        if self.in_closure[v] {
            return false;
        }
        self.detach(v);
        self.in_closure[v] = true;
        self.size += 1;
        true
    }

    /// Appends `v` to `OPEN` unless it is already in the closure.
    pub fn enqueue(&mut self, v: usize) {
        if self.admit(v) {
            self.queue.push_back(v);
        }
    }

    /// Closes `v` right away, ahead of anything waiting in `OPEN`.
    pub fn close_now(&mut self, v: usize) {
        if self.admit(v) {
            self.visit(v);
        }
    }

    /// Processes `OPEN` until it is empty.
    pub fn run(&mut self) {
        while let Some(z) = self.queue.pop_front() {
            self.visit(z);
        }
    }

    fn visit(&mut self, z: usize) {
        self.closed += 1;
        self.order.push(z);
        let stamp = self.closed;
        let mut fresh = Vec::new();
        for &u in self.g.neighbours(z) {
            let pid = self.part_of[u];
            if pid == NONE {
                continue;
            }
            if self.parts[pid].stamp != stamp {
                let child = self.parts.len();
                let edge = self.parts[pid].edge + 1;
                self.parts.push(Part { members: Vec::new(), edge, stamp, child: NONE });
                self.parts[pid].stamp = stamp;
                self.parts[pid].child = child;
                self.splits += 1;
                fresh.push(child);
            }
            let child = self.parts[pid].child;
            self.detach(u);
            self.pos[u] = self.parts[child].members.len();
            self.parts[child].members.push(u);
            self.part_of[u] = child;
        }

        let mut fired = Vec::new();
        for pid in fresh {
            let edge = self.parts[pid].edge;
            if self.closed - edge > self.p.alpha {
                self.try_fire(pid, &mut fired);
            } else {
                self.due[edge + self.p.alpha + 1].push(pid);
            }
        }
        for pid in std::mem::take(&mut self.due[self.closed]) {
            self.try_fire(pid, &mut fired);
        }
        fired.sort_unstable();
        for v in fired {
            self.in_closure[v] = true;
            self.size += 1;
            self.queue.push_back(v);
        }
    }

    /// Moves a whole part to `OPEN` when its shared tally splits the closed set.
    fn try_fire(&mut self, pid: usize, fired: &mut Vec<usize>) {
        let part = &mut self.parts[pid];
        if part.members.is_empty() || part.edge <= self.p.beta || self.closed - part.edge <= self.p.alpha {
            return;
        }
        for v in part.members.drain(..) {
            self.part_of[v] = NONE;
            fired.push(v);
        }
    }

    pub fn members(&self) -> VertexSet {
        let mut s = self.g.empty_set();
        for (v, &inside) in self.in_closure.iter().enumerate() {
            if inside {
                s.insert(v);
            }
        }
        s
    }

    fn tallies(&self) -> Vec<Option<Tally>> {
        (0..self.g.n())
            .map(|v| {
                let pid = self.part_of[v];
                (pid != NONE).then(|| {
                    let edge = self.parts[pid].edge;
                    Tally { edge, non_edge: self.closed - edge }
                })
            })
            .collect()
    }
}
