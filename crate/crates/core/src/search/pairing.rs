//! Perfect matchings of a position set with a prescribed set of differences.
//!
//! Every sequence and `nK2` query reduces to this: split the positions into
//! pairs `(x, x + δ)` using each required `δ` exactly once. Positions and
//! differences are kept as bitmasks, so positions are limited to `1..=127`.

use super::engine::Backtrack;
use crate::model::Label;

/// Largest usable position.
pub(crate) const MAX_POSITION: usize = 127;

pub(crate) struct Pairing {
    positions: u128,
    diffs: u128,
    feasible: bool,
    pruning: bool,
}

#[derive(Clone)]
pub(crate) struct PairState {
    free: u128,
    remaining: u128,
    pairs: Vec<(u8, u8)>,
}

impl Pairing {
    /// `positions` must be distinct and at most [`MAX_POSITION`]; so must
    /// `diffs`, which must number half the positions. A difference too large
    /// to be realized makes the problem infeasible rather than invalid.
    pub(crate) fn new(positions: &[usize], diffs: &[Label], pruning: bool) -> Self {
        debug_assert_eq!(positions.len(), 2 * diffs.len());
        let mut pos_mask = 0u128;
        for &p in positions {
            assert!((1..=MAX_POSITION).contains(&p), "position {p} out of range");
            pos_mask |= 1 << p;
        }
        let mut diff_mask = 0u128;
        let mut feasible = true;
        for &d in diffs {
            if d < 1 || d as usize > MAX_POSITION {
                feasible = false;
            } else {
                feasible &= diff_mask & (1 << d) == 0;
                diff_mask |= 1 << d;
            }
        }
        Self {
            positions: pos_mask,
            diffs: diff_mask,
            feasible,
            pruning,
        }
    }

    /// Every remaining difference still has somewhere to go.
    fn placeable(free: u128, remaining: u128) -> bool {
        let mut rest = remaining;
        while rest != 0 {
            let d = rest.trailing_zeros();
            rest &= rest - 1;
            if free & (free >> d) == 0 {
                return false;
            }
        }
        true
    }
}

impl Backtrack for Pairing {
    /// `(x, δ)`: pair position `x` with `x + δ`.
    type Move = (u8, u8);
    type State = PairState;
    type Solution = Vec<(Label, Label)>;

    fn root(&self) -> PairState {
        PairState {
            free: self.positions,
            remaining: self.diffs,
            pairs: Vec::new(),
        }
    }

    fn is_complete(&self, s: &PairState) -> bool {
        s.free == 0
    }

    // Always match the lowest free position; trying partners in ascending
    // order yields solutions sorted lexicographically by pair list.
    fn moves(&self, s: &PairState, out: &mut Vec<(u8, u8)>) {
        if !self.feasible || s.free == 0 {
            return;
        }
        let x = s.free.trailing_zeros();
        let mut rest = s.remaining;
        while rest != 0 {
            let d = rest.trailing_zeros();
            rest &= rest - 1;
            let y = x + d;
            if y as usize > MAX_POSITION || s.free & (1 << y) == 0 {
                continue;
            }
            if self.pruning {
                let free = s.free & !(1 << x) & !(1 << y);
                if !Self::placeable(free, s.remaining & !(1 << d)) {
                    continue;
                }
            }
            out.push((x as u8, d as u8));
        }
    }

    fn apply(&self, s: &mut PairState, (x, d): (u8, u8)) {
        s.free &= !(1 << x) & !(1 << (x + d));
        s.remaining &= !(1 << d);
        s.pairs.push((x, x + d));
    }

    fn undo(&self, s: &mut PairState, (x, d): (u8, u8)) {
        s.free |= (1 << x) | (1 << (x + d));
        s.remaining |= 1 << d;
        s.pairs.pop();
    }

    fn solution(&self, s: &PairState) -> Vec<(Label, Label)> {
        s.pairs
            .iter()
            .map(|&(a, b)| (Label::from(a), Label::from(b)))
            .collect()
    }
}
