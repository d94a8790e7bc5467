//! Closed-form `(2, 1)`-hooked Skolem graceful labelings of `nK2` for every
//! `n ≡ 1, 2 (mod 4)`.
//!
//! Small orders come from a table of hand-built labelings (`n` in
//! `{1, 2, 5, 6, 10}`); larger orders come from two piecewise families,
//! `n = 4r - 2` for `r >= 4` and `n = 4r - 3` for `r >= 3`. Every output is
//! run through [`verify_pairs`] before it is returned.

use crate::error::{Error, Result};
use crate::model::{Label, PairSystem};
use crate::verify::verify_pairs;

/// Largest `n` accepted by [`construct_nk2_21`].
pub const MAX_ORDER: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstructionCase {
    BaseCase,
    /// `n = 4r - 2`, `r >= 4`.
    EvenFamily {
        r: u64,
    },
    /// `n = 4r - 3`, `r >= 3`.
    OddFamily {
        r: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub case: ConstructionCase,
    /// `(f(a_i), f(b_i))` exactly as produced, before orienting each pair.
    pub raw: Vec<(Label, Label)>,
    pub pairs: PairSystem,
}

impl Construction {
    fn new(case: ConstructionCase, raw: Vec<(Label, Label)>) -> Self {
        let pairs =
            PairSystem::new(raw.iter().copied()).expect("constructed labels are positive and distinct");
        Self { case, raw, pairs }
    }

    pub fn n(&self) -> usize {
        self.raw.len()
    }
}

const BASE_TABLE: [(u64, &[(Label, Label)]); 5] = [
    (1, &[(1, 3)]),
    (2, &[(1, 3), (2, 5)]),
    (5, &[(1, 4), (2, 6), (3, 8), (5, 11), (7, 9)]),
    // The last component is drawn with 13 on top of 11.
    (6, &[(1, 8), (2, 7), (3, 6), (4, 10), (5, 9), (13, 11)]),
    (
        10,
        &[
            (1, 3),
            (2, 6),
            (4, 9),
            (5, 15),
            (7, 14),
            (8, 17),
            (10, 21),
            (11, 19),
            (12, 18),
            (13, 16),
        ],
    ),
];

/// The five hand-built labelings, keyed by `n`.
pub fn base_cases() -> Vec<(u64, Construction)> {
    BASE_TABLE
        .iter()
        .map(|&(n, raw)| (n, Construction::new(ConstructionCase::BaseCase, raw.to_vec())))
        .collect()
}

fn base_case(n: u64) -> Option<Construction> {
    base_cases().into_iter().find(|(m, _)| *m == n).map(|(_, c)| c)
}

/// `n = 4r - 2`, `r >= 4`.
pub fn even_family_labels(r: u64) -> Result<Construction> {
    if r < 4 {
        return Err(Error::UseBaseCase { r });
    }
    let ri = r as Label;
    let n = 4 * ri - 2;
    let a = |i: Label| match i {
        1 | 2 => i,
        _ if i <= 2 * ri - 2 => i + 1,
        _ if i == 2 * ri - 1 => (n + 4) / 2,
        _ if i == 2 * ri => (3 * n + 2) / 4,
        _ => (n - 4) / 2 + i,
    };
    let b = |i: Label| match i {
        1 => 3,
        2 => (n + 2) / 2,
        _ if i <= ri => n + 2 - i,
        _ if i <= 2 * ri - 3 => n + 1 - i,
        _ if i == 2 * ri - 2 => 3 * n / 2,
        _ if i == 2 * ri - 1 => (3 * n - 2) / 2,
        _ if i == 2 * ri => (7 * n - 2) / 4,
        _ if i == 2 * ri + 1 => 2 * n + 1,
        _ if i <= 3 * ri => (5 * n + 4) / 2 - i,
        _ => (5 * n + 2) / 2 - i,
    };
    let raw = (1..=n).map(|i| (a(i), b(i))).collect();
    Ok(Construction::new(ConstructionCase::EvenFamily { r }, raw))
}

/// `n = 4r - 3`, `r >= 3`.
#[allow(clippy::int_plus_one)]
pub fn odd_family_labels(r: u64) -> Result<Construction> {
    if r < 3 {
        return Err(Error::UseBaseCase { r });
    }
    let ri = r as Label;
    let n = 4 * ri - 3;
    let a = |i: Label| match i {
        _ if i <= 2 * ri - 1 => i,
        _ if i <= 3 * ri - 2 => (n - 3) / 2 + i,
        _ => (n - 1) / 2 + i,
    };
    let b = |i: Label| match i {
        _ if i == ri || i == n => n - 1 + i,
        _ if i <= ri - 1 => n - i,
        _ if i <= 2 * ri - 2 => n + 1 - i,
        _ if i == 2 * ri - 1 => (3 * n + 1) / 2,
        _ if i == 2 * ri => 2 * n + 1,
        _ => (5 * n + 1) / 2 - i,
    };
    let raw = (1..=n).map(|i| (a(i), b(i))).collect();
    Ok(Construction::new(ConstructionCase::OddFamily { r }, raw))
}

/// A certified `(2, 1)`-hooked Skolem graceful labeling of `nK2`.
pub fn construct_nk2_21(n: u64) -> Result<Construction> {
    if n == 0 {
        return Err(Error::InvalidParams("n must be positive".into()));
    }
    if n > MAX_ORDER {
        return Err(Error::BoundExceeded {
            what: "n",
            value: n,
            bound: MAX_ORDER,
        });
    }
    let built = match (base_case(n), n % 4) {
        (Some(c), _) => c,
        (None, 2) => even_family_labels((n + 2) / 4)?,
        (None, 1) => odd_family_labels(n.div_ceil(4))?,
        _ => return Err(Error::NotGraceful { n }),
    };

    let report = verify_pairs(&built.pairs, 2, 1)?;
    if !report.is_valid() {
        return Err(Error::ConstructionBug {
            n,
            detail: report.to_string().trim_end().to_owned(),
        });
    }
    Ok(built)
}
