//! Certificates for labelings and sequences.
//!
//! Every check reports all violations it finds (capped at
//! [`MAX_VIOLATIONS`]) rather than stopping at the first one. Within a
//! sequence report, hook placement is listed before multiplicity, and
//! multiplicity before distance.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::Result;
use crate::model::{
    edge_target_set, induced_edge_labels, target_label_set, Graph, Label, PairSystem, SequenceForm,
    SequenceKind, TargetParams, VertexLabeling,
};

pub const MAX_VIOLATIONS: usize = 32;

/// Stable identifiers for the conditions a certificate can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConditionId {
    VertexLabelSet,
    EdgeLabelSet,
    EdgeLabelRepeat,
    HookPosition,
    Multiplicity,
    Distance,
    SumIdentity,
}

impl ConditionId {
    pub fn as_str(&self) -> &'static str {
        match self {
            ConditionId::VertexLabelSet => "vertex_label_set",
            ConditionId::EdgeLabelSet => "edge_label_set",
            ConditionId::EdgeLabelRepeat => "edge_label_repeat",
            ConditionId::HookPosition => "hook_position",
            ConditionId::Multiplicity => "multiplicity",
            ConditionId::Distance => "distance",
            ConditionId::SumIdentity => "sum_identity",
        }
    }
}

impl fmt::Display for ConditionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub condition: ConditionId,
    pub detail: String,
}

/// `|V_o|`, `|V_e|` and the number of edges joining an odd label to an even one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartitionCensus {
    pub odd_count: usize,
    pub even_count: usize,
    pub cross_edges: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerifyReport {
    violations: Vec<Violation>,
    truncated: bool,
    census: Option<PartitionCensus>,
}

impl VerifyReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    /// True when more than [`MAX_VIOLATIONS`] violations were found.
    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    pub fn census(&self) -> Option<PartitionCensus> {
        self.census
    }

    /// Condition ids of the recorded violations, in report order.
    pub fn conditions(&self) -> Vec<ConditionId> {
        self.violations.iter().map(|v| v.condition).collect()
    }

    pub fn first_violation(&self) -> Option<&Violation> {
        self.violations.first()
    }

    fn push(&mut self, condition: ConditionId, detail: impl Into<String>) {
        if self.violations.len() < MAX_VIOLATIONS {
            self.violations.push(Violation {
                condition,
                detail: detail.into(),
            });
        } else {
            self.truncated = true;
        }
    }

    fn merge(&mut self, other: VerifyReport) {
        for v in other.violations {
            self.push(v.condition, v.detail);
        }
        self.truncated |= other.truncated;
    }
}

/// `VALID`, or one `VIOLATION <id>: <detail>` line per violation.
impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return writeln!(f, "VALID");
        }
        for v in &self.violations {
            writeln!(f, "VIOLATION {}: {}", v.condition, v.detail)?;
        }
        Ok(())
    }
}

/// Checks that `f` is a `(k, d)`-hooked Skolem graceful labeling of `g`:
/// the labels are exactly `{1, ..., p-1, p+1}` and the induced edge labels
/// are exactly `{k, k+d, ..., k+(q-1)d}`, each once.
pub fn verify_labeling(g: &Graph, f: &VertexLabeling, k: Label, d: Label) -> Result<VerifyReport> {
    f.check_shape(g)?;
    let target = TargetParams::new(k, d, g.size())?;
    let mut report = VerifyReport::default();

    match target_label_set(g.order()) {
        Ok(expected) => {
            let mut counts: BTreeMap<Label, usize> = BTreeMap::new();
            for &l in f.labels() {
                *counts.entry(l).or_default() += 1;
            }
            let expected: BTreeSet<Label> = expected.into_iter().collect();
            for (&l, &c) in &counts {
                if !expected.contains(&l) {
                    report.push(
                        ConditionId::VertexLabelSet,
                        format!("label {l} is not in {{1..{}, {}}}", g.order() - 1, g.order() + 1),
                    );
                } else if c > 1 {
                    report.push(
                        ConditionId::VertexLabelSet,
                        format!("label {l} is used {c} times"),
                    );
                }
            }
            for l in expected.iter().filter(|l| !counts.contains_key(l)) {
                report.push(ConditionId::VertexLabelSet, format!("label {l} is unused"));
            }
        }
        Err(e) => report.push(ConditionId::VertexLabelSet, e.to_string()),
    }

    let mut counts: BTreeMap<Label, usize> = BTreeMap::new();
    for l in induced_edge_labels(g, f)? {
        *counts.entry(l).or_default() += 1;
    }
    let wanted: BTreeSet<Label> = edge_target_set(&target).into_iter().collect();
    for (&l, &c) in &counts {
        if c > 1 {
            report.push(
                ConditionId::EdgeLabelRepeat,
                format!("edge label {l} occurs {c} times"),
            );
        }
        if !wanted.contains(&l) {
            report.push(
                ConditionId::EdgeLabelSet,
                format!("edge label {l} is not in the progression {k}, {k}+{d}, ..."),
            );
        }
    }
    for l in wanted.iter().filter(|l| !counts.contains_key(l)) {
        report.push(
            ConditionId::EdgeLabelSet,
            format!("edge label {l} is not realized"),
        );
    }

    report.census = Some(partition_census(g, f)?);
    Ok(report)
}

/// Convenience wrapper for `nK2` labelings.
pub fn verify_pairs(ps: &PairSystem, k: Label, d: Label) -> Result<VerifyReport> {
    let (g, f) = ps.to_labeling();
    verify_labeling(&g, &f, k, d)
}

pub fn partition_census(g: &Graph, f: &VertexLabeling) -> Result<PartitionCensus> {
    f.check_shape(g)?;
    let odd = |l: Label| l.rem_euclid(2) == 1;
    let odd_count = f.labels().iter().filter(|&&l| odd(l)).count();
    let cross_edges = g
        .edges()
        .iter()
        .filter(|&&(u, v)| odd(f.get(u)) != odd(f.get(v)))
        .count();
    Ok(PartitionCensus {
        odd_count,
        even_count: g.order() - odd_count,
        cross_edges,
    })
}

/// Skolem sequence of order `m`: length `2m`, each `r` in `1..=m` twice at
/// distance `r`.
pub fn verify_skolem_sequence(s: &SequenceForm) -> VerifyReport {
    verify_sequence_as(s, SequenceKind::Skolem)
}

/// Hooked Skolem sequence of order `m`: length `2m+1`, hook at `2m`, each
/// `r` in `1..=m` twice at distance `r`.
pub fn verify_hooked_skolem_sequence(s: &SequenceForm) -> VerifyReport {
    verify_sequence_as(s, SequenceKind::HookedSkolem)
}

/// Hooked sequence with values `d..=d+m-1`.
pub fn verify_hooked_sequence(s: &SequenceForm, d: Label) -> VerifyReport {
    verify_sequence_as(s, SequenceKind::Hooked { d })
}

/// Verifies `s` against its own kind.
pub fn verify_sequence(s: &SequenceForm) -> VerifyReport {
    verify_sequence_as(s, s.kind())
}

fn verify_sequence_as(s: &SequenceForm, kind: SequenceKind) -> VerifyReport {
    let mut report = VerifyReport::default();
    let len = s.len();
    let m = s.order();

    if kind.is_hooked() {
        if len.is_multiple_of(2) {
            report.push(
                ConditionId::HookPosition,
                format!("length {len} is even; a hooked sequence has length 2m+1"),
            );
        }
        let hooks = s.hook_positions();
        if m >= 1 && !hooks.contains(&(2 * m)) {
            report.push(
                ConditionId::HookPosition,
                format!("position {} must hold the hook", 2 * m),
            );
        }
        for h in hooks.into_iter().filter(|&h| h != 2 * m || len.is_multiple_of(2)) {
            report.push(
                ConditionId::HookPosition,
                format!("hook at position {h}, expected {}", 2 * m),
            );
        }
    } else {
        for h in s.hook_positions() {
            report.push(
                ConditionId::HookPosition,
                format!("hook at position {h}; a Skolem sequence has no hook"),
            );
        }
        if len % 2 == 1 {
            report.push(
                ConditionId::Multiplicity,
                format!("length {len} is odd; a Skolem sequence has length 2m"),
            );
        }
    }
    if m == 0 {
        report.push(ConditionId::Multiplicity, "sequence has order 0");
        return report;
    }

    let lo = kind.first_value();
    let hi = lo + m as Label - 1;
    let occ = s.occurrences();
    for &v in occ.keys() {
        if v < lo || v > hi {
            report.push(
                ConditionId::Multiplicity,
                format!("value {v} is outside {lo}..={hi}"),
            );
        }
    }
    for r in lo..=hi {
        let count = occ.get(&r).map_or(0, Vec::len);
        if count != 2 {
            report.push(
                ConditionId::Multiplicity,
                format!("value {r} occurs {count} times, expected 2"),
            );
        }
    }
    for r in lo..=hi {
        if let Some(&[i, j]) = occ.get(&r).map(Vec::as_slice) {
            if (j - i) as Label != r {
                report.push(
                    ConditionId::Distance,
                    format!("value {r} at positions {i} and {j}: distance {} != {r}", j - i),
                );
            }
        }
    }
    report
}

/// The sum identities that every valid `(k, d)` labeling of `nK2` obeys:
///
/// - `sum(b_i - a_i) = nk + n(n-1)d/2`
/// - `sum(a_i + b_i) = 2n^2 + n + 1`
/// - `2 sum(b_i) = nk + n(n-1)d/2 + 2n^2 + n + 1`
///
/// If `ps` is not itself a valid labeling its labeling violations are
/// included as well, since the identities are then meaningless.
pub fn check_sum_identity(ps: &PairSystem, k: Label, d: Label) -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    report.merge(verify_pairs(ps, k, d)?);

    let n = ps.n() as i128;
    let (k, d) = (k as i128, d as i128);
    let diff_sum: i128 = ps.pairs().iter().map(|&(a, b)| (b - a) as i128).sum();
    let all_sum: i128 = ps.pairs().iter().map(|&(a, b)| (a + b) as i128).sum();
    let b_sum: i128 = ps.pairs().iter().map(|&(_, b)| b as i128).sum();

    let diff_target = n * k + n * (n - 1) * d / 2;
    let all_target = 2 * n * n + n + 1;
    if diff_sum != diff_target {
        report.push(
            ConditionId::SumIdentity,
            format!("sum of differences is {diff_sum}, expected nk + n(n-1)d/2 = {diff_target}"),
        );
    }
    if all_sum != all_target {
        report.push(
            ConditionId::SumIdentity,
            format!("sum of labels is {all_sum}, expected 2n^2 + n + 1 = {all_target}"),
        );
    }
    if 2 * b_sum != diff_target + all_target {
        report.push(
            ConditionId::SumIdentity,
            format!(
                "twice the sum of larger labels is {}, expected {}",
                2 * b_sum,
                diff_target + all_target
            ),
        );
    }
    Ok(report)
}
