//! Closed-form necessary conditions. Every predicate here is one-directional:
//! `false` rules a labeling or sequence out, `true` only means "feasible".

use crate::error::{Error, Result};
use crate::model::Label;

/// A hooked Skolem graceful graph has at most `p - 1` edges.
pub fn size_necessary(p: usize, q: usize) -> bool {
    q < p
}

/// Number of odd members of `{k, k+d, ..., k+(q-1)d}`, which is the number
/// of edges any `(k, d)` labeling must run between odd and even labels.
pub fn expected_cross_edges(k: Label, d: Label, q: usize) -> Result<usize> {
    match (k % 2 == 1, d % 2 == 1) {
        (true, true) => Ok(q.div_ceil(2)),
        (false, true) => Ok(q / 2),
        (true, false) => Ok(q),
        (false, false) => Err(Error::BothEven),
    }
}

/// `nk + n(n-1)d/2 + 2n^2 + n + 1`, which equals `2 * sum(b_i)` for any
/// `(k, d)` labeling of `nK2`.
pub fn nk2_parity_sum(n: u64, k: Label, d: Label) -> i128 {
    let (n, k, d) = (n as i128, k as i128, d as i128);
    n * k + n * (n - 1) / 2 * d + 2 * n * n + n + 1
}

/// Parity test for `nK2`: the identity above must be even. By residue of
/// `n` mod 4 this means `k` even (1), `d` odd (2), `k ≡ d` mod 2 (3), and
/// never for `n ≡ 0`.
pub fn nk2_parity_feasible(n: u64, k: Label, d: Label) -> bool {
    nk2_parity_sum(n, k, d) % 2 == 0
}

/// Necessary conditions for `{d, ..., d+m-1}` to be a hooked sequence:
/// `m(m+1-2d) + 2 >= 0`, and `m ≡ 2, 3 (mod 4)` for odd `d` or
/// `m ≡ 1, 2 (mod 4)` for even `d`.
pub fn hooked_sequence_necessary(d: Label, m: u64) -> bool {
    let (mi, di) = (m as i128, d as i128);
    let room = mi * (mi + 1 - 2 * di) + 2 >= 0;
    let residue = if d % 2 == 1 {
        matches!(m % 4, 2 | 3)
    } else {
        matches!(m % 4, 1 | 2)
    };
    room && residue
}
