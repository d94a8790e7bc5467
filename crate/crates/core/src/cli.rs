//! Command-line front end.
//!
//! Exit codes: 0 success (or a valid certificate), 1 invalid certificate,
//! 2 no `(2,1)` labeling exists for the requested `n`, 3 search bound
//! exceeded, 64 usage error, 65 unreadable or malformed input, 70 internal
//! contradiction.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use crate::construct::construct_nk2_21;
use crate::error::Error;
use crate::model::{
    format_sequence, pairs_to_sequence, parse_sequence, sequence_to_pairs, Graph, GraphLabelingRecord, Label,
    PairRecord, PairSystem, SequenceKind,
};
use crate::search::{
    search_graph, search_hooked_sequence, search_hooked_skolem, search_nk2, search_skolem, survey_nk2,
    SearchConfig, SearchMode, SearchOutcome,
};
use crate::verify::{verify_labeling, verify_sequence};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_NOT_GRACEFUL: i32 = 2;
pub const EXIT_BOUND: i32 = 3;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;
pub const EXIT_SOFTWARE: i32 = 70;

/// Setting this to a non-empty value other than `0` has the same effect as `--force`.
pub const FORCE_ENV: &str = "HOOKED_SKOLEM_FORCE";

#[derive(Debug, Parser)]
#[command(
    name = "hooked-skolem",
    version,
    about = "Hooked Skolem graceful labelings and Skolem-type sequences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a certified (2,1) labeling from the closed-form families.
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Check a labeling or a sequence.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Exhaustive search.
    #[command(subcommand)]
    Search(SearchCmd),
    /// Tabulate parity feasibility against exhaustive search.
    #[command(subcommand)]
    Survey(SurveyCmd),
    /// Convert between pair systems and sequences.
    Convert(ConvertArgs),
}

#[derive(Debug, Subcommand)]
enum ConstructCmd {
    Nk2 {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum VerifyCmd {
    /// A JSON labeling: a pair record `{"n","k","d","pairs"}` or a graph
    /// record `{"p","edges","labels","k","d"}`.
    Labeling {
        #[arg(long)]
        file: PathBuf,
    },
    Sequence {
        #[command(flatten)]
        kind: KindArgs,
        #[arg(long)]
        seq: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Skolem,
    HookedSkolem,
    Hooked,
}

#[derive(Debug, Args)]
struct KindArgs {
    #[arg(long, value_enum)]
    kind: KindArg,
    /// Smallest value of a hooked sequence; required with `--kind hooked`.
    #[arg(long)]
    d: Option<Label>,
}

impl KindArgs {
    fn resolve(&self) -> Result<SequenceKind, Failure> {
        match (self.kind, self.d) {
            (KindArg::Skolem, _) => Ok(SequenceKind::Skolem),
            (KindArg::HookedSkolem, _) => Ok(SequenceKind::HookedSkolem),
            (KindArg::Hooked, Some(d)) if d >= 1 => Ok(SequenceKind::Hooked { d }),
            (KindArg::Hooked, Some(d)) => Err(Failure::usage(format!("--d must be positive, got {d}"))),
            (KindArg::Hooked, None) => Err(Failure::usage("--kind hooked requires --d")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Exists,
    First,
    Count,
    Enum,
}

#[derive(Debug, Args)]
struct RunArgs {
    #[arg(long, value_enum)]
    mode: ModeArg,
    /// Maximum number of solutions printed by `--mode enum`.
    #[arg(long)]
    limit: Option<usize>,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Allow inputs beyond the default exhaustive bounds.
    #[arg(long)]
    force: bool,
    /// Disable forward checking.
    #[arg(long)]
    no_prune: bool,
    /// Print node counts and timing to stderr.
    #[arg(long)]
    stats: bool,
}

impl RunArgs {
    fn mode(&self) -> SearchMode {
        match self.mode {
            ModeArg::Exists => SearchMode::Exists,
            ModeArg::First => SearchMode::First,
            ModeArg::Count => SearchMode::Count,
            ModeArg::Enum => SearchMode::Enumerate { limit: self.limit },
        }
    }

    fn config(&self) -> SearchConfig {
        SearchConfig {
            jobs: self.jobs,
            pruning: !self.no_prune,
            force: self.force || force_from_env(),
            ..SearchConfig::default()
        }
    }
}

#[derive(Debug, Subcommand)]
enum SearchCmd {
    Nk2 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Label,
        #[arg(long)]
        d: Label,
        #[command(flatten)]
        run: RunArgs,
    },
    Graph {
        /// Edge list: a `p <int>` line, then one `u v` line per edge.
        #[arg(long)]
        edges: PathBuf,
        /// Expected vertex count; must match the file header when given.
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        k: Label,
        #[arg(long)]
        d: Label,
        #[command(flatten)]
        run: RunArgs,
    },
    Sequence {
        #[command(flatten)]
        kind: KindArgs,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Debug, Subcommand)]
enum SurveyCmd {
    Nk2 {
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        k: Label,
        #[arg(long)]
        d: Label,
        /// Run the exhaustive search for n up to this value.
        #[arg(long, default_value_t = 0)]
        search_up_to: usize,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        force: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormArg {
    Pairs,
    Sequence,
}

#[derive(Debug, Args)]
struct ConvertArgs {
    #[arg(long)]
    from: FormArg,
    #[arg(long)]
    to: FormArg,
    #[command(flatten)]
    kind: KindArgs,
    /// A file path, or the input itself.
    #[arg(long = "in")]
    input: String,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum LabelingFile {
    Pairs(PairRecord),
    Graph(GraphLabelingRecord),
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn data(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_DATA,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotGraceful { .. } => EXIT_NOT_GRACEFUL,
            Error::BoundExceeded { .. } => EXIT_BOUND,
            Error::InvalidParams(_) | Error::BothEven | Error::UseBaseCase { .. } => EXIT_USAGE,
            Error::ContradictionDetected { .. } | Error::ConstructionBug { .. } => EXIT_SOFTWARE,
            Error::DegenerateOrder(_)
            | Error::InvalidGraph(_)
            | Error::ShapeMismatch { .. }
            | Error::InvalidPairs(_)
            | Error::PositionSetMismatch { .. }
            | Error::MultiplicityError { .. }
            | Error::ParseError(_) => EXIT_DATA,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::data(e.to_string())
    }
}

fn force_from_env() -> bool {
    std::env::var(FORCE_ENV).is_ok_and(|v| !v.is_empty() && v != "0")
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::data(format!("{}: {e}", path.display())))
}

/// Parses `args` (including the program name) and runs the command,
/// writing results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "{}", f.message);
            f.code
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        Command::Construct(ConstructCmd::Nk2 { n, format }) => {
            let built = construct_nk2_21(n)?;
            match format {
                Format::Text => writeln!(out, "{}", built.pairs)?,
                Format::Json => {
                    let json = serde_json::to_string(&built.pairs.to_record(2, 1))
                        .map_err(|e| Failure::data(e.to_string()))?;
                    writeln!(out, "{json}")?
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify(VerifyCmd::Labeling { file }) => {
            let text = read_file(&file)?;
            let parsed: LabelingFile =
                serde_json::from_str(&text).map_err(|e| Failure::data(format!("{}: {e}", file.display())))?;
            let report = match parsed {
                LabelingFile::Pairs(rec) => {
                    let (g, f) = rec.to_pairs()?.to_labeling();
                    verify_labeling(&g, &f, rec.k, rec.d)?
                }
                LabelingFile::Graph(rec) => {
                    let (g, f) = rec.to_parts()?;
                    verify_labeling(&g, &f, rec.k, rec.d)?
                }
            };
            write!(out, "{report}")?;
            Ok(if report.is_valid() { EXIT_OK } else { EXIT_INVALID })
        }
        Command::Verify(VerifyCmd::Sequence { kind, seq }) => {
            let s = parse_sequence(&seq, kind.resolve()?)?;
            let report = verify_sequence(&s);
            write!(out, "{report}")?;
            Ok(if report.is_valid() { EXIT_OK } else { EXIT_INVALID })
        }
        Command::Search(SearchCmd::Nk2 { n, k, d, run }) => {
            let outcome = search_nk2(n, k, d, run.mode(), &run.config())?;
            print_outcome(&outcome, &run, out, err)
        }
        Command::Search(SearchCmd::Graph { edges, p, k, d, run }) => {
            let g = Graph::parse_edge_list(&read_file(&edges)?)?;
            if let Some(p) = p.filter(|&p| p != g.order()) {
                return Err(Failure::data(format!(
                    "--p {p} does not match the edge list header p {}",
                    g.order()
                )));
            }
            let outcome = search_graph(&g, k, d, run.mode(), &run.config())?;
            print_outcome(&outcome, &run, out, err)
        }
        Command::Search(SearchCmd::Sequence { kind, m, run }) => {
            let config = run.config();
            let outcome = match kind.resolve()? {
                SequenceKind::Skolem => search_skolem(m, run.mode(), &config)?,
                SequenceKind::HookedSkolem => search_hooked_skolem(m, run.mode(), &config)?,
                SequenceKind::Hooked { d } => search_hooked_sequence(d, m, run.mode(), &config)?,
            };
            print_outcome(&outcome, &run, out, err)
        }
        Command::Survey(SurveyCmd::Nk2 {
            n_max,
            k,
            d,
            search_up_to,
            jobs,
            force,
        }) => {
            let config = SearchConfig {
                jobs,
                force: force || force_from_env(),
                ..SearchConfig::default()
            };
            let rows = survey_nk2(n_max, k, d, search_up_to, &config)?;
            writeln!(out, "{:>4}  {:<10}  search", "n", "parity")?;
            for row in rows {
                let parity = if row.parity_feasible {
                    "feasible"
                } else {
                    "infeasible"
                };
                let verdict = match row.exists {
                    Some(true) => "yes",
                    Some(false) => "no",
                    None => "-",
                };
                writeln!(out, "{:>4}  {:<10}  {}", row.n, parity, verdict)?;
            }
            Ok(EXIT_OK)
        }
        Command::Convert(args) => {
            let kind = args.kind.resolve()?;
            let path = Path::new(&args.input);
            let text = if path.is_file() {
                read_file(path)?
            } else {
                args.input.clone()
            };
            let rendered = match args.from {
                FormArg::Pairs => {
                    let ps = parse_pairs(&text)?;
                    match args.to {
                        FormArg::Pairs => ps.to_string(),
                        FormArg::Sequence => format_sequence(&pairs_to_sequence(&ps, kind)?),
                    }
                }
                FormArg::Sequence => {
                    let s = parse_sequence(&text, kind)?;
                    match args.to {
                        FormArg::Pairs => sequence_to_pairs(&s)?.to_string(),
                        FormArg::Sequence => format_sequence(&s),
                    }
                }
            };
            writeln!(out, "{rendered}")?;
            Ok(EXIT_OK)
        }
    }
}

/// `a-b` text or a JSON pair record.
fn parse_pairs(text: &str) -> Result<PairSystem, Failure> {
    if text.trim_start().starts_with('{') {
        let rec: PairRecord = serde_json::from_str(text).map_err(|e| Failure::data(e.to_string()))?;
        Ok(rec.to_pairs()?)
    } else {
        Ok(PairSystem::parse_text(text)?)
    }
}

fn print_outcome<S: std::fmt::Display>(
    outcome: &SearchOutcome<S>,
    run: &RunArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Failure> {
    match run.mode {
        ModeArg::Exists => writeln!(out, "{}", outcome.exists)?,
        ModeArg::First => match outcome.solutions.first() {
            Some(s) => writeln!(out, "{s}")?,
            None => writeln!(out, "none")?,
        },
        ModeArg::Count => writeln!(out, "{}", outcome.count.unwrap_or(0))?,
        ModeArg::Enum => {
            for s in &outcome.solutions {
                writeln!(out, "{s}")?;
            }
            writeln!(out, "{}", outcome.solutions.len())?;
        }
    }
    if run.stats {
        writeln!(
            err,
            "nodes_expanded {} elapsed_ms {:.3}",
            outcome.stats.nodes_expanded,
            outcome.stats.elapsed.as_secs_f64() * 1e3
        )?;
    }
    Ok(EXIT_OK)
}
