use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use foldbound::geometry::{boundary_start_headings, render_boundary, render_fold};
use foldbound::{
    derive_boundary_system, expand_boundary, expand_fold, BoundarySystem, DirWord, ExpansionCap,
    FoldLetter, FoldingSystem, GridPoint, Heading,
};
use foldbound_cli::{
    parse_catalog, parse_tau, render_svg, verify_levels, CliError, LevelRecord, LevelRun,
    SvgOptions, SystemRecord, BUNDLED_CATALOG,
};
use rayon::prelude::*;

#[derive(Parser)]
#[command(
    name = "foldbound",
    version,
    about = "Boundary L-systems of folding curves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SigmaArg {
    /// σ(A) over A, B, +, -, e.g. "A-B"
    #[arg(long)]
    sigma: String,
}

#[derive(Args)]
struct CapArg {
    /// Largest word, in letters, any expansion may produce
    #[arg(long, default_value_t = ExpansionCap::DEFAULT_LETTERS)]
    cap: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Print the six productions of the boundary rule
    Derive {
        #[command(flatten)]
        sigma: SigmaArg,
    },
    /// Print σⁿ(A) and, optionally, the boundary words τⁿ(R) and τⁿ(L)
    Expand {
        #[command(flatten)]
        sigma: SigmaArg,
        #[arg(long)]
        level: u32,
        #[arg(long)]
        with_boundary: bool,
        #[command(flatten)]
        cap: CapArg,
    },
    /// Draw σⁿ(A) (black) and its boundary (red left, blue right) as SVG
    Render {
        #[command(flatten)]
        sigma: SigmaArg,
        #[arg(long)]
        level: u32,
        #[arg(long)]
        with_boundary: bool,
        /// Pixels per half grid unit
        #[arg(long, default_value_t = 4)]
        scale: i64,
        /// Round the corners of every polyline
        #[arg(long)]
        round_joins: bool,
        /// Output file; standard output if omitted
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        cap: CapArg,
    },
    /// Check the boundary rule against the traced region at levels 0..=N
    Verify {
        #[command(flatten)]
        sigma: SigmaArg,
        #[arg(long)]
        max_level: u32,
        /// Print a JSON summary on standard output; level lines go to stderr
        #[arg(long)]
        json: bool,
        /// Verify this rule, `L=..,R=..,l=..,r=..,S=..,s=..`, instead of the
        /// derived one
        #[arg(long, hide = true)]
        tau: Option<String>,
        #[command(flatten)]
        cap: CapArg,
    },
    /// Derive and verify every system of a catalog file
    Catalog {
        /// Catalog file; the bundled catalog if omitted
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long, default_value_t = 4)]
        max_level: u32,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        cap: CapArg,
    },
}

fn parse_sigma(arg: &SigmaArg) -> Result<FoldingSystem, CliError> {
    FoldingSystem::parse(&arg.sigma).map_err(CliError::Parse)
}

fn boundary_words(
    tau: &BoundarySystem,
    n: u32,
    cap: ExpansionCap,
) -> Result<(DirWord, DirWord), CliError> {
    let axiom = |c: &str| DirWord::parse_finished(c).expect("single letter");
    Ok((
        expand_boundary(tau, &axiom("R"), n, cap)?,
        expand_boundary(tau, &axiom("L"), n, cap)?,
    ))
}

fn write_output(out: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            }),
    }
}

fn level_line(r: &foldbound::VerifyReport) -> String {
    match &r.mismatch {
        None => format!("level {}: PASS ({} segments)", r.level, r.loop_segments),
        Some(m) => format!("level {}: FAIL {m}", r.level),
    }
}

fn run_lines(run: &LevelRun) -> Vec<String> {
    let mut lines: Vec<String> = run.reports.iter().map(level_line).collect();
    if let Some((n, e)) = &run.stopped {
        lines.push(format!("level {n}: stopped, {e}"));
    }
    lines
}

fn to_json(records: &[LevelRecord]) -> String {
    let mut text = serde_json::to_string_pretty(records).expect("records serialize");
    text.push('\n');
    text
}

/// Outcome of one catalog record: printed lines, JSON rows and success.
fn run_record(
    r: &SystemRecord,
    max_level: u32,
    cap: ExpansionCap,
) -> (Vec<String>, Vec<LevelRecord>, bool) {
    let tau = match derive_boundary_system(&r.sigma) {
        Ok(t) => t,
        Err(e) => {
            return (
                vec![format!("{}: FAIL derivation: {e}", r.name)],
                vec![],
                false,
            )
        }
    };
    let mut lines = Vec::new();
    let mut ok = true;
    match &r.expected {
        Some(expected) => {
            let diffs: Vec<String> = expected
                .entries()
                .zip(tau.entries())
                .filter(|((_, e), (_, d))| e != d)
                .map(|((k, e), (_, d))| format!("{k}: expected {e}, derived {d}"))
                .collect();
            if diffs.is_empty() {
                lines.push(format!("{}: rule matches", r.name));
            } else {
                ok = false;
                lines.push(format!(
                    "{}: FAIL rule differs ({})",
                    r.name,
                    diffs.join("; ")
                ));
            }
        }
        None => lines.push(format!("{}: derived {tau}", r.name)),
    }
    let run = verify_levels(&r.sigma, &tau, max_level, cap);
    ok &= run.passed();
    lines.extend(
        run_lines(&run)
            .into_iter()
            .map(|l| format!("{}: {l}", r.name)),
    );
    let records = run
        .reports
        .iter()
        .map(|rep| LevelRecord::new(&r.name, rep))
        .collect();
    (lines, records, ok)
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Derive { sigma } => {
            let tau = derive_boundary_system(&parse_sigma(&sigma)?)?;
            let mut text = String::new();
            for (k, w) in tau.entries() {
                text.push_str(&format!("{k}={w}\n"));
            }
            write_output(None, &text)?;
        }
        Command::Expand {
            sigma,
            level,
            with_boundary,
            cap,
        } => {
            let sys = parse_sigma(&sigma)?;
            let cap = ExpansionCap(cap.cap);
            let tau = if with_boundary {
                Some(derive_boundary_system(&sys)?)
            } else {
                None
            };
            let fold = expand_fold(&sys, FoldLetter::MoveA, level, cap)?;
            let mut text = match tau {
                Some(_) => format!("fold={fold}\n"),
                None => format!("{fold}\n"),
            };
            if let Some(tau) = tau {
                let (left, right) = boundary_words(&tau, level, cap)?;
                text.push_str(&format!("left={left}\nright={right}\n"));
            }
            write_output(None, &text)?;
        }
        Command::Render {
            sigma,
            level,
            with_boundary,
            scale,
            round_joins,
            out,
            cap,
        } => {
            let sys = parse_sigma(&sigma)?;
            let cap = ExpansionCap(cap.cap);
            let tau = if with_boundary {
                Some(derive_boundary_system(&sys)?)
            } else {
                None
            };
            let fold_word = expand_fold(&sys, FoldLetter::MoveA, level, cap)?;
            let fold = render_fold(&fold_word, GridPoint::ORIGIN, Heading::East);
            let boundaries = match tau {
                Some(tau) => {
                    let (left, right) = boundary_words(&tau, level, cap)?;
                    let (lh, rh) = boundary_start_headings(Heading::East);
                    Some((
                        render_boundary(&left, GridPoint::ORIGIN, lh),
                        render_boundary(&right, GridPoint::ORIGIN, rh),
                    ))
                }
                None => None,
            };
            let svg = render_svg(
                &fold,
                boundaries.as_ref().map(|(l, r)| (l, r)),
                SvgOptions { scale, round_joins },
            );
            write_output(out.as_ref(), &svg)?;
        }
        Command::Verify {
            sigma,
            max_level,
            json,
            tau,
            cap,
        } => {
            let sys = parse_sigma(&sigma)?;
            let tau = match tau {
                Some(t) => parse_tau(&t).map_err(CliError::Tau)?,
                None => derive_boundary_system(&sys)?,
            };
            let run = verify_levels(&sys, &tau, max_level, ExpansionCap(cap.cap));
            let lines = run_lines(&run).join("\n") + "\n";
            if json {
                eprint!("{lines}");
                let records: Vec<LevelRecord> = run
                    .reports
                    .iter()
                    .map(|r| LevelRecord::new(&sigma.sigma, r))
                    .collect();
                write_output(None, &to_json(&records))?;
            } else {
                write_output(None, &lines)?;
            }
            if !run.passed() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Catalog {
            file,
            max_level,
            json,
            cap,
        } => {
            let text = match &file {
                Some(path) => fs::read_to_string(path).map_err(|source| CliError::Io {
                    path: path.display().to_string(),
                    source,
                })?,
                None => BUNDLED_CATALOG.to_string(),
            };
            let records = parse_catalog(&text)?;
            let cap = ExpansionCap(cap.cap);
            let outcomes: Vec<_> = records
                .par_iter()
                .map(|r| run_record(r, max_level, cap))
                .collect();
            let failed = outcomes.iter().filter(|o| !o.2).count();
            let mut lines: Vec<String> = outcomes.iter().flat_map(|o| o.0.clone()).collect();
            lines.push(match failed {
                0 => format!("{} systems", records.len()),
                f => format!("{} systems, {f} failed", records.len()),
            });
            let lines = lines.join("\n") + "\n";
            if json {
                eprint!("{lines}");
                let rows: Vec<LevelRecord> = outcomes.into_iter().flat_map(|o| o.1).collect();
                write_output(None, &to_json(&rows))?;
            } else {
                write_output(None, &lines)?;
            }
            if failed > 0 {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
