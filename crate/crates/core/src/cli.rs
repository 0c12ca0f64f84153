//! `potent` command-line front end.
//!
//! Exit status: 0 on success or a true answer, 1 when the answer is negative
//! (not graphic, not potential, lay-off failure, mismatches found), 2 on usage
//! or domain errors.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::characterize::potential_verdict;
use crate::graph::TargetPattern;
use crate::oracle::{oracle_potential, OracleConfig, OracleMode, DEFAULT_CAP};
use crate::sequence::{enumerate_graphic, DegreeSequence, GraphicMethod, Theorem22};
use crate::sigma::{extremal_sequence, sigma_closed_form, sigma_value, SigmaMethod};
use crate::verify::verify_range;

#[derive(Debug, Parser)]
#[command(
    name = "potent",
    version,
    about = "Graphic and potentially H-graphic degree sequences"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Target {
    K23,
    K5p4,
    K33,
    K6c6,
}

impl From<Target> for TargetPattern {
    fn from(t: Target) -> Self {
        match t {
            Target::K23 => TargetPattern::K23,
            Target::K5p4 => TargetPattern::K5MinusP4,
            Target::K33 => TargetPattern::K33,
            Target::K6c6 => TargetPattern::K6MinusC6,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    Exhaustive,
    TopDegree,
}

impl From<Mode> for OracleMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Exhaustive => OracleMode::Exhaustive,
            Mode::TopDegree => OracleMode::TopDegree,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GraphicTest {
    ErdosGallai,
    KleitmanWang,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Method {
    Predicate,
    Oracle,
}

#[derive(Debug, Args)]
struct SequenceArg {
    /// Degree sequence, e.g. "6^2 4^3 3^2" or "3,3,2"
    #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
    sequence: Vec<String>,
}

impl SequenceArg {
    fn parse(&self) -> Result<DegreeSequence, String> {
        self.sequence.join(" ").parse().map_err(|e| format!("{e}"))
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Graphicality test
    Check {
        /// Test graphicality (the default check)
        #[arg(long)]
        graphic: bool,
        /// Graphicality test to run
        #[arg(long, value_enum, default_value_t = GraphicTest::ErdosGallai)]
        method: GraphicTest,
        /// Also report sum, largest/smallest positive term and length
        #[arg(long)]
        stats: bool,
        #[command(flatten)]
        seq: SequenceArg,
    },
    /// Characterization verdict for a target
    Potential {
        #[arg(long, value_enum)]
        target: Target,
        #[command(flatten)]
        seq: SequenceArg,
    },
    /// Search for a realization containing the target
    Oracle {
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
        mode: Mode,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        max_n: usize,
        #[command(flatten)]
        seq: SequenceArg,
    },
    /// Residual sequence after laying off d_k (default k = n)
    LayOff {
        #[arg(long)]
        k: Option<usize>,
        #[command(flatten)]
        seq: SequenceArg,
    },
    /// List graphic sequences of length n
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Only sequences without zero terms
        #[arg(long)]
        positive: bool,
    },
    /// Compute sigma(H, n) by scanning all positive graphic sequences
    Sigma {
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Predicate)]
        method: Method,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        max_n: usize,
    },
    /// Lower-bound witness sequence for sigma(H, n)
    Extremal {
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long)]
        n: usize,
    },
    /// Compare the characterization with the oracle over a range of lengths
    Verify {
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
        mode: Mode,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        max_n: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutput {
    fn ok(code: i32, stdout: String) -> Self {
        CommandOutput {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(msg: impl std::fmt::Display) -> Self {
        CommandOutput {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run_command<I, T>(argv: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    CommandOutput::ok(0, e.to_string())
                }
                _ => {
                    let rendered = e.to_string();
                    let line = rendered.lines().next().unwrap_or("usage error");
                    CommandOutput::error(line.trim_start_matches("error: "))
                }
            };
        }
    };
    match dispatch(&cli) {
        Ok(out) => out,
        Err(msg) => CommandOutput::error(msg),
    }
}

fn emit<T: Serialize>(
    format: Format,
    code: i32,
    value: &T,
    text: String,
) -> Result<CommandOutput, String> {
    let stdout = match format {
        Format::Json => serde_json::to_string_pretty(value).map_err(|e| e.to_string())? + "\n",
        Format::Text => text,
    };
    Ok(CommandOutput::ok(code, stdout))
}

fn dispatch(cli: &Cli) -> Result<CommandOutput, String> {
    let fmt = cli.format;
    match &cli.command {
        Command::Check {
            graphic: _,
            method,
            stats,
            seq,
        } => {
            let s = seq.parse()?;
            let m = match method {
                GraphicTest::ErdosGallai => GraphicMethod::ErdosGallai,
                GraphicTest::KleitmanWang => GraphicMethod::KleitmanWang,
            };
            let graphic = s.is_graphic_by(m);
            let st = s.stats();
            let t22 = s.theorem22_check();
            let mut value = json!({ "sequence": s, "graphic": graphic });
            let mut text = format!("{s}: {}\n", if graphic { "graphic" } else { "not graphic" });
            if *stats {
                value["stats"] = json!(st);
                value["theorem22"] = json!(t22);
                let _ = writeln!(text, "sigma={} m={} h={} n={}", st.sigma, st.m, st.h, st.n);
                if t22 == Theorem22::AppliesAndGraphic {
                    text.push_str("max term <= 2, min positive term 1, even sum\n");
                }
            }
            emit(fmt, if graphic { 0 } else { 1 }, &value, text)
        }
        Command::Potential { target, seq } => {
            let s = seq.parse()?;
            let t: TargetPattern = (*target).into();
            let v = potential_verdict(&t, &s).map_err(|e| e.to_string())?;
            let mut text = format!(
                "{s}: {}potentially {t}-graphic\n",
                if v.potential { "" } else { "not " }
            );
            for c in &v.violated {
                let _ = writeln!(text, "  violates {c}");
            }
            let value = json!({
                "sequence": s,
                "target": t,
                "potential": v.potential,
                "violated": v.violated,
            });
            emit(fmt, if v.potential { 0 } else { 1 }, &value, text)
        }
        Command::Oracle {
            target,
            mode,
            max_n,
            seq,
        } => {
            let s = seq.parse()?;
            let t: TargetPattern = (*target).into();
            let cfg = OracleConfig::with_cap(*max_n).map_err(|e| e.to_string())?;
            let mode: OracleMode = (*mode).into();
            let out = oracle_potential(&s, &t, mode, &cfg).map_err(|e| e.to_string())?;
            let report = out.report(&s, &t, mode);
            let text = match out.witness() {
                Some(w) => {
                    let edges: Vec<String> = w
                        .graph
                        .edges()
                        .iter()
                        .map(|(u, v)| format!("{}-{}", u + 1, v + 1))
                        .collect();
                    let emb: Vec<String> =
                        w.embedding.0.iter().map(|p| (p + 1).to_string()).collect();
                    format!(
                        "{s}: realization containing {t} found\n  edges: {}\n  embedding: {}\n",
                        edges.join(" "),
                        emb.join(" ")
                    )
                }
                None => format!("{s}: no realization contains {t} (search exhausted)\n"),
            };
            emit(fmt, if out.is_found() { 0 } else { 1 }, &report, text)
        }
        Command::LayOff { k, seq } => {
            let s = seq.parse()?;
            let k = k.unwrap_or(s.len());
            if k == 0 || k > s.len() {
                return Err(format!("position {k} out of range 1..={}", s.len()));
            }
            match s.lay_off(k) {
                Ok(r) => {
                    let value = json!({ "sequence": s, "k": k, "residual": r });
                    emit(fmt, 0, &value, format!("{r}\n"))
                }
                Err(e) => {
                    let value = json!({ "sequence": s, "k": k, "failure": e.to_string() });
                    emit(fmt, 1, &value, format!("lay-off failed: {e}\n"))
                }
            }
        }
        Command::Enumerate { n, positive } => {
            if *n == 0 {
                return Err("n must be at least 1".into());
            }
            let seqs: Vec<DegreeSequence> = enumerate_graphic(*n, *positive).collect();
            let text: String = seqs.iter().map(|s| format!("{s}\n")).collect();
            let value = json!({
                "n": n,
                "positive": positive,
                "count": seqs.len(),
                "sequences": seqs,
            });
            emit(fmt, 0, &value, text)
        }
        Command::Sigma {
            target,
            n,
            method,
            max_n,
        } => {
            let t: TargetPattern = (*target).into();
            let cfg = OracleConfig::with_cap(*max_n).map_err(|e| e.to_string())?;
            let method = match method {
                Method::Predicate => SigmaMethod::Predicate,
                Method::Oracle => SigmaMethod::Oracle,
            };
            let r = sigma_value(&t, *n, method, &cfg).map_err(|e| e.to_string())?;
            let mut text = format!(
                "sigma({t}, {n}) = {} [{method}, {} sequences]\n",
                r.sigma, r.sequences_scanned
            );
            match &r.extremal {
                Some(e) => {
                    let _ = writeln!(text, "  extremal: {e} (sum {})", e.sum());
                }
                None => text.push_str("  degenerate: every sequence is potentially graphic\n"),
            }
            if let Some(c) = sigma_closed_form(&t, *n) {
                let _ = writeln!(
                    text,
                    "  closed form: {c} ({})",
                    if c == r.sigma { "agrees" } else { "DIFFERS" }
                );
            }
            emit(fmt, 0, &r, text)
        }
        Command::Extremal { target, n } => {
            let t: TargetPattern = (*target).into();
            let e = extremal_sequence(&t, *n).map_err(|e| e.to_string())?;
            let graphic = e.is_graphic();
            let potential = potential_verdict(&t, &e)
                .map_err(|e| e.to_string())?
                .potential;
            let value = json!({
                "target": t,
                "n": n,
                "sequence": e,
                "sum": e.sum(),
                "graphic": graphic,
                "potential": potential,
            });
            let text = format!(
                "{e} (sum {}, graphic: {graphic}, potential: {potential})\n",
                e.sum()
            );
            emit(fmt, 0, &value, text)
        }
        Command::Verify {
            target,
            n_min,
            n_max,
            workers,
            mode,
            max_n,
        } => {
            let t: TargetPattern = (*target).into();
            let cfg = OracleConfig::with_cap(*max_n).map_err(|e| e.to_string())?;
            let r = verify_range(&t, *n_min, *n_max, *workers, (*mode).into(), &cfg)
                .map_err(|e| e.to_string())?;
            let mut text = format!(
                "{t} n={}..={}: {} sequences, {} agreements, {} mismatches ({:.2?})\n",
                r.n_min,
                r.n_max,
                r.sequences_tested,
                r.agreements,
                r.mismatches.len(),
                r.elapsed
            );
            for m in &r.mismatches {
                let _ = writeln!(
                    text,
                    "  MISMATCH {}: predicate={} oracle={}",
                    m.sequence,
                    m.predicate_verdict.potential,
                    serde_json::to_string(&m.oracle_result).unwrap_or_default()
                );
            }
            emit(fmt, if r.is_clean() { 0 } else { 1 }, &r, text)
        }
    }
}
