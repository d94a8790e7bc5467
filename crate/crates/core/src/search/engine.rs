//! Generic depth-first engine shared by every search.
//!
//! Problems expose their children in canonical order, so the depth-first
//! visiting order is the canonical solution order. The parallel runner cuts
//! the tree at a shallow depth into prefixes (listed in that same order),
//! solves each prefix independently and merges per-prefix results in prefix
//! order, which makes every mode's output identical to the serial run.

use std::ops::ControlFlow;
use std::time::Instant;

use super::{SearchConfig, SearchMode, SearchOutcome, SearchStats};

pub(crate) trait Backtrack: Sync {
    type Move: Copy + Send + Sync;
    type State: Clone + Send;
    type Solution: Send;

    fn root(&self) -> Self::State;
    fn is_complete(&self, state: &Self::State) -> bool;
    /// Legal moves from `state`, in canonical order.
    fn moves(&self, state: &Self::State, out: &mut Vec<Self::Move>);
    fn apply(&self, state: &mut Self::State, mv: Self::Move);
    fn undo(&self, state: &mut Self::State, mv: Self::Move);
    fn solution(&self, state: &Self::State) -> Self::Solution;
}

struct Walker<'a, P: Backtrack> {
    problem: &'a P,
    state: P::State,
    buffers: Vec<Vec<P::Move>>,
    path: Vec<P::Move>,
    nodes: u64,
}

impl<'a, P: Backtrack> Walker<'a, P> {
    fn new(problem: &'a P) -> Self {
        Self {
            problem,
            state: problem.root(),
            buffers: Vec::new(),
            path: Vec::new(),
            nodes: 0,
        }
    }

    #[cfg(feature = "parallel")]
    fn replay(problem: &'a P, prefix: &[P::Move]) -> Self {
        let mut w = Self::new(problem);
        for &mv in prefix {
            problem.apply(&mut w.state, mv);
            w.path.push(mv);
        }
        w
    }

    /// Visits every complete state below the current one, or every state at
    /// `cutoff` moves below the root when a cutoff is given.
    fn walk(
        &mut self,
        cutoff: Option<usize>,
        visit: &mut dyn FnMut(&Self) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if self.problem.is_complete(&self.state) || cutoff == Some(self.path.len()) {
            return visit(self);
        }
        let depth = self.path.len();
        if self.buffers.len() <= depth {
            self.buffers.resize_with(depth + 1, Vec::new);
        }
        let mut moves = std::mem::take(&mut self.buffers[depth]);
        moves.clear();
        self.problem.moves(&self.state, &mut moves);

        let mut flow = ControlFlow::Continue(());
        for &mv in &moves {
            self.nodes += 1;
            self.problem.apply(&mut self.state, mv);
            self.path.push(mv);
            flow = self.walk(cutoff, visit);
            self.path.pop();
            self.problem.undo(&mut self.state, mv);
            if flow.is_break() {
                break;
            }
        }
        self.buffers[depth] = moves;
        flow
    }

    /// Runs `mode` over the subtree below the current state.
    fn solve(&mut self, mode: SearchMode) -> Partial<P::Solution> {
        let mut out = Partial::default();
        let limit = match mode {
            SearchMode::Exists | SearchMode::First => Some(1),
            SearchMode::Count => None,
            SearchMode::Enumerate { limit } => limit,
        };
        let keep = !matches!(mode, SearchMode::Count | SearchMode::Exists);
        let problem = self.problem;
        let _ = self.walk(None, &mut |w| {
            if !problem.is_complete(&w.state) {
                return ControlFlow::Continue(());
            }
            out.count += 1;
            if keep {
                out.solutions.push(problem.solution(&w.state));
            }
            match limit {
                Some(l) if out.count >= l as u64 => ControlFlow::Break(()),
                _ => ControlFlow::Continue(()),
            }
        });
        out.nodes = self.nodes;
        out
    }
}

struct Partial<S> {
    count: u64,
    solutions: Vec<S>,
    nodes: u64,
}

impl<S> Default for Partial<S> {
    fn default() -> Self {
        Self {
            count: 0,
            solutions: Vec::new(),
            nodes: 0,
        }
    }
}

pub(crate) fn run<P: Backtrack>(
    problem: &P,
    mode: SearchMode,
    config: &SearchConfig,
) -> SearchOutcome<P::Solution> {
    let start = Instant::now();
    let partial = if config.jobs == 1 {
        Walker::new(problem).solve(mode)
    } else {
        run_split(problem, mode, config)
    };
    finish(partial, mode, start)
}

fn finish<S>(partial: Partial<S>, mode: SearchMode, start: Instant) -> SearchOutcome<S> {
    let mut solutions = partial.solutions;
    let count = match mode {
        SearchMode::Count => Some(partial.count),
        SearchMode::Enumerate { limit } => {
            if let Some(l) = limit {
                solutions.truncate(l);
            }
            Some(solutions.len() as u64)
        }
        _ => None,
    };
    SearchOutcome {
        exists: partial.count > 0,
        count,
        solutions,
        stats: SearchStats {
            nodes_expanded: partial.nodes,
            elapsed: start.elapsed(),
        },
    }
}

/// Prefixes at `depth` moves, in canonical order. Complete states reached
/// above the cutoff are listed as their own prefix.
#[cfg(feature = "parallel")]
fn prefixes<P: Backtrack>(problem: &P, depth: usize) -> (Vec<Vec<P::Move>>, u64) {
    let mut out = Vec::new();
    let mut w = Walker::new(problem);
    let _ = w.walk(Some(depth), &mut |w| {
        out.push(w.path.clone());
        ControlFlow::Continue(())
    });
    (out, w.nodes)
}

#[cfg(feature = "parallel")]
fn run_split<P: Backtrack>(problem: &P, mode: SearchMode, config: &SearchConfig) -> Partial<P::Solution> {
    use rayon::prelude::*;

    let pool = match config.jobs {
        0 => rayon::ThreadPoolBuilder::new().build(),
        n => rayon::ThreadPoolBuilder::new().num_threads(n).build(),
    }
    .expect("thread pool");

    let (tasks, split_nodes) = prefixes(problem, config.split_depth);
    let solve = |prefix: &Vec<P::Move>| {
        let mut w = Walker::replay(problem, prefix);
        w.solve(mode)
    };

    pool.install(|| {
        let mut merged = match mode {
            SearchMode::Exists => {
                let found = tasks.par_iter().any(|t| solve(t).count > 0);
                Partial {
                    count: u64::from(found),
                    ..Partial::default()
                }
            }
            SearchMode::First => tasks
                .par_iter()
                .map(solve)
                .find_first(|p| p.count > 0)
                .unwrap_or_default(),
            SearchMode::Count | SearchMode::Enumerate { .. } => {
                let parts: Vec<_> = tasks.par_iter().map(solve).collect();
                let mut merged = Partial::default();
                for p in parts {
                    merged.count += p.count;
                    merged.nodes += p.nodes;
                    merged.solutions.extend(p.solutions);
                }
                merged
            }
        };
        merged.nodes += split_nodes;
        merged
    })
}

#[cfg(not(feature = "parallel"))]
fn run_split<P: Backtrack>(problem: &P, mode: SearchMode, _config: &SearchConfig) -> Partial<P::Solution> {
    Walker::new(problem).solve(mode)
}
