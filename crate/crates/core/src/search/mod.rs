//! Exhaustive backtracking oracle for labelings and sequences.
//!
//! All queries share one depth-first engine. Solutions are produced in a
//! fixed canonical order:
//!
//! - pair systems and sequences: pairs sorted by smaller element, pair
//!   lists compared lexicographically (for sequences this is the same as
//!   comparing the sequences themselves);
//! - graph labelings: label vectors compared lexicographically.
//!
//! With the `parallel` feature the tree is split near the root and solved
//! on a rayon pool. Existence, counts, the first solution and the
//! enumeration order are identical for every `jobs` value; only
//! [`SearchStats`] may differ.

mod engine;
mod graph;
mod pairing;

use std::time::Duration;

use crate::conditions::{nk2_parity_feasible, size_necessary};
use crate::error::{Error, Result};
use crate::model::{
    edge_target_set, pairs_to_sequence, Graph, Label, PairSystem, SequenceForm, SequenceKind, TargetParams,
    VertexLabeling,
};

use graph::GraphSearch;
use pairing::Pairing;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    Exists,
    /// The canonically least solution.
    First,
    Count,
    /// Solutions in canonical order, at most `limit` of them.
    Enumerate {
        limit: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBounds {
    pub nk2_n: usize,
    pub graph_vertices: usize,
    pub sequence_order: usize,
}

impl Default for SearchBounds {
    fn default() -> Self {
        Self {
            nk2_n: 10,
            graph_vertices: 16,
            sequence_order: 12,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    /// Worker threads; `1` runs serially, `0` uses every core.
    pub jobs: usize,
    /// Forward checking. Never changes results, only the node count.
    pub pruning: bool,
    /// Ignore [`SearchBounds`]. The hard engine limits still apply.
    pub force: bool,
    pub bounds: SearchBounds,
    /// Depth at which the parallel runner cuts the tree into tasks.
    pub split_depth: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            jobs: if cfg!(feature = "parallel") { 0 } else { 1 },
            pruning: true,
            force: false,
            bounds: SearchBounds::default(),
            split_depth: 2,
        }
    }
}

impl SearchConfig {
    pub fn serial() -> Self {
        Self {
            jobs: 1,
            ..Self::default()
        }
    }

    pub fn with_jobs(jobs: usize) -> Self {
        Self {
            jobs,
            ..Self::default()
        }
    }

    fn check_bound(&self, what: &'static str, value: usize, bound: usize, hard: usize) -> Result<()> {
        let limit = if self.force { hard } else { bound.min(hard) };
        if value > limit {
            return Err(Error::BoundExceeded {
                what,
                value: value as u64,
                bound: limit as u64,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchStats {
    pub nodes_expanded: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome<S> {
    pub exists: bool,
    /// Present for `Count` (all solutions) and `Enumerate` (solutions returned).
    pub count: Option<u64>,
    /// Empty for `Exists` and `Count`, one entry for `First`.
    pub solutions: Vec<S>,
    pub stats: SearchStats,
}

impl<S> SearchOutcome<S> {
    fn empty(mode: SearchMode) -> Self {
        Self {
            exists: false,
            count: match mode {
                SearchMode::Count | SearchMode::Enumerate { .. } => Some(0),
                _ => None,
            },
            solutions: Vec::new(),
            stats: SearchStats::default(),
        }
    }

    fn try_map<T>(self, f: impl FnMut(S) -> Result<T>) -> Result<SearchOutcome<T>> {
        Ok(SearchOutcome {
            exists: self.exists,
            count: self.count,
            solutions: self.solutions.into_iter().map(f).collect::<Result<_>>()?,
            stats: self.stats,
        })
    }
}

fn check_params(k: Label, d: Label) -> Result<()> {
    TargetParams::new(k, d, 0).map(|_| ())
}

/// `(k, d)`-hooked Skolem graceful labelings of `nK2`, as canonical pair
/// systems.
pub fn search_nk2(
    n: usize,
    k: Label,
    d: Label,
    mode: SearchMode,
    config: &SearchConfig,
) -> Result<SearchOutcome<PairSystem>> {
    check_params(k, d)?;
    if n == 0 {
        return Err(Error::InvalidParams("n must be positive".into()));
    }
    config.check_bound("n", n, config.bounds.nk2_n, (pairing::MAX_POSITION - 1) / 2)?;

    let target = TargetParams::new(k, d, n)?;
    let diffs = edge_target_set(&target);
    let positions = SequenceKind::HookedSkolem.positions(n);
    let problem = Pairing::new(&positions, &diffs, config.pruning);
    let outcome = engine::run(&problem, mode, config).try_map(PairSystem::new)?;
    debug_assert!(outcome.solutions.iter().all(|ps| census_matches(
        &ps.to_labeling().0,
        &ps.to_labeling().1,
        k,
        d
    )));
    Ok(outcome)
}

/// `(k, d)`-hooked Skolem graceful labelings of an arbitrary graph.
pub fn search_graph(
    g: &Graph,
    k: Label,
    d: Label,
    mode: SearchMode,
    config: &SearchConfig,
) -> Result<SearchOutcome<VertexLabeling>> {
    check_params(k, d)?;
    let p = g.order();
    if p < 2 {
        return Err(Error::DegenerateOrder(p));
    }
    config.check_bound("p", p, config.bounds.graph_vertices, graph::MAX_VERTICES)?;
    if !size_necessary(p, g.size()) {
        return Ok(SearchOutcome::empty(mode));
    }
    let target = TargetParams::new(k, d, g.size())?;
    let problem = GraphSearch::new(g, target, config.pruning);
    let outcome = engine::run(&problem, mode, config);
    debug_assert!(outcome.solutions.iter().all(|f| census_matches(g, f, k, d)));
    Ok(outcome)
}

fn census_matches(g: &Graph, f: &VertexLabeling, k: Label, d: Label) -> bool {
    match crate::conditions::expected_cross_edges(k, d, g.size()) {
        Ok(expected) => crate::verify::partition_census(g, f).is_ok_and(|c| c.cross_edges == expected),
        Err(_) => true,
    }
}

fn search_sequences(
    kind: SequenceKind,
    m: usize,
    mode: SearchMode,
    config: &SearchConfig,
) -> Result<SearchOutcome<SequenceForm>> {
    if m == 0 {
        return Err(Error::InvalidParams("order must be positive".into()));
    }
    config.check_bound(
        "m",
        m,
        config.bounds.sequence_order,
        (pairing::MAX_POSITION - 1) / 2,
    )?;
    let first = kind.first_value();
    let diffs: Vec<Label> = (first..first + m as Label).collect();
    let problem = Pairing::new(&kind.positions(m), &diffs, config.pruning);
    engine::run(&problem, mode, config).try_map(|pairs| pairs_to_sequence(&PairSystem::new(pairs)?, kind))
}

/// Skolem sequences of order `m`. Mirror images count separately.
pub fn search_skolem(
    m: usize,
    mode: SearchMode,
    config: &SearchConfig,
) -> Result<SearchOutcome<SequenceForm>> {
    search_sequences(SequenceKind::Skolem, m, mode, config)
}

/// Hooked Skolem sequences of order `m` (hook at position `2m`).
pub fn search_hooked_skolem(
    m: usize,
    mode: SearchMode,
    config: &SearchConfig,
) -> Result<SearchOutcome<SequenceForm>> {
    search_sequences(SequenceKind::HookedSkolem, m, mode, config)
}

/// Hooked sequences with difference set `{d, ..., d+m-1}`.
pub fn search_hooked_sequence(
    d: Label,
    m: usize,
    mode: SearchMode,
    config: &SearchConfig,
) -> Result<SearchOutcome<SequenceForm>> {
    check_params(d, 1)?;
    search_sequences(SequenceKind::Hooked { d }, m, mode, config)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurveyRow {
    pub n: usize,
    pub parity_feasible: bool,
    /// `None` when `n` was beyond the search cutoff.
    pub exists: Option<bool>,
}

/// Parity verdict for `n = 1..=n_max`, with an exhaustive verdict for
/// `n <= search_up_to`. A labeling found where the parity condition says
/// none can exist is reported as [`Error::ContradictionDetected`].
pub fn survey_nk2(
    n_max: usize,
    k: Label,
    d: Label,
    search_up_to: usize,
    config: &SearchConfig,
) -> Result<Vec<SurveyRow>> {
    check_params(k, d)?;
    (1..=n_max)
        .map(|n| {
            let parity_feasible = nk2_parity_feasible(n as u64, k, d);
            let exists = if n <= search_up_to {
                Some(search_nk2(n, k, d, SearchMode::Exists, config)?.exists)
            } else {
                None
            };
            if exists == Some(true) && !parity_feasible {
                return Err(Error::ContradictionDetected { n: n as u64, k, d });
            }
            Ok(SurveyRow {
                n,
                parity_feasible,
                exists,
            })
        })
        .collect()
}
