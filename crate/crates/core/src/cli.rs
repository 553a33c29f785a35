//! Command-line front end.
//!
//! Exit codes: 0 success (or the checked property holds), 1 a violation was
//! found or the verified predicate is false, 2 usage or input error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::alliance::{
    is_defensive, is_dominating, is_global_defensive, is_global_offensive, is_offensive,
};
use crate::construct::{augment_to_offensive, defensive_certificate, smaller_side_offensive};
use crate::corpus::{corpus, CorpusSpec, MAX_FREE_N};
use crate::error::Error;
use crate::harness::{sweep, write_csv, SweepRecord, TheoremRecord};
use crate::pruefer::{from_pruefer, parse_dump_line};
use crate::solver::{solve, AllianceKind, DEFAULT_MAX_EXACT_N};
use crate::tree::{bipartition, parse_tree, Tree};
use crate::vertex_set::VertexSet;

#[derive(Parser, Debug)]
#[command(name = "tree-alliances", version, about = "Global alliances on trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact minimum global alliance(s) of a tree.
    Solve {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "both")]
        kind: SolveKind,
        #[command(flatten)]
        common: Common,
    },
    /// Evaluate one predicate on a vertex set.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_parser = parse_set)]
        set: IdList,
        #[arg(long, value_enum)]
        kind: Predicate,
        #[command(flatten)]
        common: Common,
    },
    /// Run a construction: the smaller color class, or defensive → offensive augmentation.
    Construct {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum)]
        method: Method,
        #[arg(long, value_parser = parse_set)]
        set: Option<IdList>,
        #[command(flatten)]
        common: Common,
    },
    /// Edge-counting certificate for a global defensive alliance.
    Certificate {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_parser = parse_set)]
        set: IdList,
        #[command(flatten)]
        common: Common,
    },
    /// Print a corpus as `n:p1,...` lines.
    Enumerate {
        #[command(flatten)]
        corpus: CorpusArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Check the inequalities over a corpus.
    Sweep {
        #[command(flatten)]
        corpus: CorpusArgs,
        /// Omit per-tree records from JSON output.
        #[arg(long)]
        summary_only: bool,
        #[command(flatten)]
        common: Common,
    },
    /// List equality instances among free trees.
    Witness {
        #[arg(long)]
        sharp: bool,
        #[arg(long, value_parser = parse_range, default_value = "2..10")]
        n: RangeInclusive<usize>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Tree file in edge-list format.
    #[arg(long)]
    input: PathBuf,
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long, default_value_t = DEFAULT_MAX_EXACT_N)]
    max_exact_n: usize,
}

#[derive(Args, Debug)]
struct CorpusArgs {
    #[arg(long, value_enum, default_value = "free")]
    mode: Mode,
    /// A single n or an inclusive range `a..b`.
    #[arg(long, value_parser = parse_range)]
    n: RangeInclusive<usize>,
    #[arg(long, default_value_t = 100)]
    samples: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl CorpusArgs {
    fn spec(&self) -> CorpusSpec {
        let n = self.n.clone();
        match self.mode {
            Mode::Labeled => CorpusSpec::exhaustive_labeled(n),
            Mode::Free => CorpusSpec::exhaustive_free(n),
            Mode::Random => CorpusSpec::random(n, self.samples, self.seed),
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SolveKind {
    Defensive,
    Offensive,
    Both,
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Predicate {
    Dominating,
    Defensive,
    Offensive,
    GlobalDefensive,
    GlobalOffensive,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    Bipartition,
    Augment,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Labeled,
    Free,
    Random,
}

/// Comma-separated vertex ids, parsed as one argument.
#[derive(Clone, Debug)]
struct IdList(Vec<usize>);

fn parse_set(text: &str) -> Result<IdList, String> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| format!("`{t}` is not a vertex id")))
        .collect::<Result<_, _>>()
        .map(IdList)
}

fn parse_range(text: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("`{t}` is not an integer"))
    };
    match text.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            Ok(num(a)?..=num(b)?)
        }
        None => {
            let n = num(text)?;
            Ok(n..=n)
        }
    }
}

/// Failure of a subcommand.
enum Failure {
    Input(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

/// Output text plus exit code.
struct Outcome {
    body: String,
    code: i32,
}

impl Outcome {
    fn json<T: Serialize>(value: &T, code: i32) -> Self {
        let mut body = serde_json::to_string_pretty(value).expect("reports serialize");
        body.push('\n');
        Self { body, code }
    }
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let out_path = command_common(&cli.command).out.clone();
    match dispatch(cli.command) {
        Ok(outcome) => {
            let written = match &out_path {
                Some(path) => fs::write(path, &outcome.body)
                    .map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => stdout
                    .write_all(outcome.body.as_bytes())
                    .map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => outcome.code,
                Err(msg) => {
                    let _ = writeln!(stderr, "error: {msg}");
                    2
                }
            }
        }
        Err(Failure::Input(msg) | Failure::Io(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
    }
}

fn command_common(command: &Command) -> &Common {
    match command {
        Command::Solve { common, .. }
        | Command::Verify { common, .. }
        | Command::Construct { common, .. }
        | Command::Certificate { common, .. }
        | Command::Enumerate { common, .. }
        | Command::Sweep { common, .. }
        | Command::Witness { common, .. } => common,
    }
}

fn dispatch(command: Command) -> Result<Outcome, Failure> {
    match command {
        Command::Solve {
            input,
            kind,
            common,
        } => {
            json_only(&common, "solve")?;
            let tree = load(&input.input)?;
            let run = |k| solve(&tree, k, common.max_exact_n);
            Ok(match kind {
                SolveKind::Defensive => Outcome::json(&run(AllianceKind::Defensive)?, 0),
                SolveKind::Offensive => Outcome::json(&run(AllianceKind::Offensive)?, 0),
                SolveKind::Both => Outcome::json(
                    &json!({
                        "n": tree.n(),
                        "defensive": run(AllianceKind::Defensive)?,
                        "offensive": run(AllianceKind::Offensive)?,
                    }),
                    0,
                ),
            })
        }
        Command::Verify {
            input,
            set,
            kind,
            common,
        } => {
            json_only(&common, "verify")?;
            let tree = load(&input.input)?;
            let s = vertex_set(&tree, &set)?;
            let holds = match kind {
                Predicate::Dominating => is_dominating(&tree, &s)?,
                Predicate::Defensive => is_defensive(&tree, &s)?,
                Predicate::Offensive => is_offensive(&tree, &s)?,
                Predicate::GlobalDefensive => is_global_defensive(&tree, &s)?,
                Predicate::GlobalOffensive => is_global_offensive(&tree, &s)?,
            };
            Ok(Outcome::json(
                &json!({ "kind": kind, "set": s, "holds": holds }),
                if holds { 0 } else { 1 },
            ))
        }
        Command::Construct {
            input,
            method,
            set,
            common,
        } => {
            json_only(&common, "construct")?;
            let tree = load(&input.input)?;
            match method {
                Method::Bipartition => {
                    let side = smaller_side_offensive(&tree)?;
                    let sides = bipartition(&tree);
                    Ok(Outcome::json(
                        &json!({
                            "method": "bipartition",
                            "result": side,
                            "size": side.len(),
                            "side_a": sides.side_a,
                            "side_b": sides.side_b,
                            "global_offensive": is_global_offensive(&tree, &side)?,
                        }),
                        0,
                    ))
                }
                Method::Augment => {
                    let set = set.ok_or_else(|| {
                        Failure::Input("`construct --method augment` needs --set".into())
                    })?;
                    let s = vertex_set(&tree, &set)?;
                    let aug = augment_to_offensive(&tree, &s)?;
                    Ok(Outcome::json(
                        &json!({
                            "method": "augment",
                            "set": s,
                            "result": aug.result,
                            "added": aug.added,
                            "global_offensive": is_global_offensive(&tree, &aug.result)?,
                        }),
                        0,
                    ))
                }
            }
        }
        Command::Certificate { input, set, common } => {
            json_only(&common, "certificate")?;
            let tree = load(&input.input)?;
            let report = defensive_certificate(&tree, &vertex_set(&tree, &set)?)?;
            let code = if report.all_hold { 0 } else { 1 };
            Ok(Outcome::json(&report, code))
        }
        Command::Enumerate {
            corpus: args,
            common,
        } => {
            let entries = corpus(&args.spec())?;
            let ids: Vec<String> = entries.iter().map(|e| e.instance_id()).collect();
            Ok(match common.format {
                Format::Json => Outcome::json(&ids, 0),
                Format::Csv => {
                    let mut body = ids.join("\n");
                    if !body.is_empty() {
                        body.push('\n');
                    }
                    Outcome { body, code: 0 }
                }
            })
        }
        Command::Sweep {
            corpus: args,
            summary_only,
            common,
        } => {
            let mut report = sweep(&args.spec(), common.max_exact_n)?;
            let code = if report.violations.is_empty() { 0 } else { 1 };
            match common.format {
                Format::Json => {
                    if summary_only {
                        report.records.clear();
                    }
                    Ok(Outcome::json(&report, code))
                }
                Format::Csv => Ok(Outcome {
                    body: csv_body(&report.records)?,
                    code,
                }),
            }
        }
        Command::Witness { sharp, n, common } => {
            if !sharp {
                return Err(Failure::Input("only `witness --sharp` is supported".into()));
            }
            let hi = (*n.end()).min(MAX_FREE_N);
            let lo = (*n.start()).max(2);
            let report = sweep(&CorpusSpec::exhaustive_free(lo..=hi), common.max_exact_n)?;
            let sharp: Vec<SweepRecord> = report
                .records
                .into_iter()
                .filter(|r| r.as_checked().is_some_and(|c| c.sharp))
                .collect();
            match common.format {
                Format::Json => {
                    let items: Vec<_> = sharp
                        .iter()
                        .filter_map(SweepRecord::as_checked)
                        .map(witness_json)
                        .collect::<Result<_, Failure>>()?;
                    Ok(Outcome::json(&items, 0))
                }
                Format::Csv => Ok(Outcome {
                    body: csv_body(&sharp)?,
                    code: 0,
                }),
            }
        }
    }
}

fn witness_json(r: &TheoremRecord) -> Result<serde_json::Value, Failure> {
    let (n, seq) = parse_dump_line(&r.instance_id)?;
    let tree = from_pruefer(&seq, n)?;
    let aug = augment_to_offensive(&tree, &r.gamma_a_witness)?;
    Ok(json!({
        "record": r,
        "edges": tree.edges(),
        "augmented": aug.result,
        "added": aug.added,
    }))
}

fn csv_body(records: &[SweepRecord]) -> Result<String, Failure> {
    let mut buf = Vec::new();
    write_csv(records, &mut buf).map_err(|e| Failure::Io(e.to_string()))?;
    String::from_utf8(buf).map_err(|e| Failure::Io(e.to_string()))
}

fn json_only(common: &Common, command: &str) -> Result<(), Failure> {
    match common.format {
        Format::Json => Ok(()),
        Format::Csv => Err(Failure::Input(format!(
            "`{command}` only supports --format json"
        ))),
    }
}

fn load(path: &Path) -> Result<Tree, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))?;
    parse_tree(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn vertex_set(tree: &Tree, ids: &IdList) -> Result<VertexSet, Failure> {
    Ok(VertexSet::from_vertices(tree.n(), ids.0.iter().copied())?)
}
