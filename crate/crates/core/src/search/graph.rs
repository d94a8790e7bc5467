//! Vertex-by-vertex labeling search for arbitrary graphs.

use super::engine::Backtrack;
use crate::model::{target_label_set, Graph, Label, TargetParams, VertexLabeling};

/// Labels are tracked in a 128-bit mask, so `p + 1` must stay below 128.
pub(crate) const MAX_VERTICES: usize = 126;

pub(crate) struct GraphSearch {
    /// Neighbours of each vertex with a smaller index (0-based).
    earlier: Vec<Vec<usize>>,
    /// Neighbours of each vertex with a larger index (0-based).
    later: Vec<Vec<usize>>,
    candidates: Vec<Label>,
    target: TargetParams,
    pruning: bool,
}

#[derive(Clone)]
pub(crate) struct GraphState {
    labels: Vec<Label>,
    used_labels: u128,
    used_diffs: u128,
}

impl GraphSearch {
    pub(crate) fn new(g: &Graph, target: TargetParams, pruning: bool) -> Self {
        let p = g.order();
        assert!((2..=MAX_VERTICES).contains(&p));
        let mut earlier = vec![Vec::new(); p];
        let mut later = vec![Vec::new(); p];
        for &(u, v) in g.edges() {
            let (lo, hi) = (u.min(v) - 1, u.max(v) - 1);
            earlier[hi].push(lo);
            later[lo].push(hi);
        }
        for list in earlier.iter_mut().chain(later.iter_mut()) {
            list.sort_unstable();
        }
        Self {
            earlier,
            later,
            candidates: target_label_set(p).expect("p >= 2"),
            target,
            pruning,
        }
    }

    /// The difference-index mask that labeling vertex `v` with `label`
    /// would add, or `None` if some new difference is off-target, already
    /// used, or repeated among the new ones.
    fn new_diffs(&self, labels: &[Label], used_diffs: u128, v: usize, label: Label) -> Option<u128> {
        let mut added = 0u128;
        for &u in &self.earlier[v] {
            let Some(&other) = labels.get(u) else {
                continue;
            };
            let j = self.target.index_of((label - other).abs())?;
            let bit = 1u128 << j;
            if (used_diffs | added) & bit != 0 {
                return None;
            }
            added |= bit;
        }
        Some(added)
    }

    /// Every unlabeled vertex adjacent to a labeled one still has a label
    /// compatible with its labeled neighbours.
    fn lookahead(&self, s: &GraphState) -> bool {
        let assigned = s.labels.len();
        let p = self.earlier.len();
        (assigned..p).all(|w| {
            if !self.earlier[w].iter().any(|&u| u < assigned) {
                return true;
            }
            self.candidates.iter().any(|&l| {
                s.used_labels & (1 << l) == 0 && self.new_diffs(&s.labels, s.used_diffs, w, l).is_some()
            })
        })
    }
}

impl Backtrack for GraphSearch {
    type Move = Label;
    type State = GraphState;
    type Solution = VertexLabeling;

    fn root(&self) -> GraphState {
        GraphState {
            labels: Vec::with_capacity(self.earlier.len()),
            used_labels: 0,
            used_diffs: 0,
        }
    }

    fn is_complete(&self, s: &GraphState) -> bool {
        s.labels.len() == self.earlier.len()
    }

    // Vertex 1 first, labels ascending: solutions come out in
    // lexicographic order of the label vector.
    fn moves(&self, s: &GraphState, out: &mut Vec<Label>) {
        let v = s.labels.len();
        for &l in &self.candidates {
            if s.used_labels & (1 << l) != 0 {
                continue;
            }
            let Some(added) = self.new_diffs(&s.labels, s.used_diffs, v, l) else {
                continue;
            };
            if self.pruning && !self.later[v].is_empty() {
                let mut child = s.clone();
                child.labels.push(l);
                child.used_labels |= 1 << l;
                child.used_diffs |= added;
                if !self.lookahead(&child) {
                    continue;
                }
            }
            out.push(l);
        }
    }

    fn apply(&self, s: &mut GraphState, l: Label) {
        let v = s.labels.len();
        let added = self
            .new_diffs(&s.labels, s.used_diffs, v, l)
            .expect("move was generated as legal");
        s.labels.push(l);
        s.used_labels |= 1 << l;
        s.used_diffs |= added;
    }

    fn undo(&self, s: &mut GraphState, l: Label) {
        s.labels.pop();
        let v = s.labels.len();
        s.used_labels &= !(1 << l);
        for &u in &self.earlier[v] {
            let j = self
                .target
                .index_of((l - s.labels[u]).abs())
                .expect("applied move has on-target differences");
            s.used_diffs &= !(1u128 << j);
        }
    }

    fn solution(&self, s: &GraphState) -> VertexLabeling {
        VertexLabeling::new(s.labels.clone())
    }
}
