//! The `om` command line.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::chirotope::{check_chirotope_with, Chirotope, SignMap, VectorConfig};
use crate::covector::{face_census_with, topes};
use crate::error::{OmError, Result};
use crate::hyperline::{check_hyperline_with, from_chirotope, to_chirotope_with, Hls};
use crate::io::{chi, hls_json, vecfile, Format};
use crate::limits::Limits;
use crate::report::ValidationReport;

#[derive(Debug, Parser)]
#[command(
    name = "om",
    version,
    about = "Chirotopes and hyperline sequences of oriented matroids"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the chirotope or hyperline axioms.
    Check {
        #[command(flatten)]
        input: Input,
    },
    /// Convert between chirotope files and hyperline JSON.
    Convert {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        to: Target,
        #[command(flatten)]
        output: Output,
    },
    /// Delete and/or contract elements (deletion first).
    Minor {
        #[command(flatten)]
        input: Input,
        /// Comma-separated element ids, or `auto`.
        #[arg(long)]
        delete: Option<String>,
        /// Comma-separated element ids.
        #[arg(long)]
        contract: Option<String>,
        #[command(flatten)]
        output: Output,
    },
    /// Topes, and the vertex/edge/face census for rank 3.
    Faces {
        #[command(flatten)]
        input: Input,
    },
    /// Count (and optionally list) all chirotopes of rank r on n elements.
    Enumerate {
        n: usize,
        r: usize,
        #[arg(long)]
        uniform: bool,
        #[arg(long)]
        list: bool,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// SVG of a rank-2 hyperline sequence.
    Render {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug, Args)]
pub struct Input {
    /// Input file, or `-` for stdin.
    pub path: PathBuf,
    /// Input format; guessed from the extension or content if omitted.
    #[arg(long, alias = "from", value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Write here instead of stdout.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Target {
    Chi,
    Hls,
}

enum Loaded {
    Chi(SignMap),
    Hls(Hls),
    Vec(VectorConfig),
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(fs::read_to_string(path)?)
    }
}

fn load(input: &Input) -> Result<Loaded> {
    let text = read_input(&input.path)?;
    let format = input
        .format
        .unwrap_or_else(|| Format::detect(&input.path, &text));
    Ok(match format {
        Format::Chi => Loaded::Chi(chi::parse(&text)?),
        Format::Hls => Loaded::Hls(hls_json::parse(&text)?),
        Format::Vec => Loaded::Vec(vecfile::parse(&text)?),
    })
}

fn chirotope_of(loaded: Loaded, limits: &Limits) -> Result<Chirotope> {
    match loaded {
        Loaded::Chi(m) => Chirotope::new_with(m, limits),
        Loaded::Hls(x) => to_chirotope_with(&x, limits),
        Loaded::Vec(v) => v.chirotope(),
    }
}

fn is_standard(labels: &[u32]) -> bool {
    labels.iter().enumerate().all(|(i, &l)| l as usize == i + 1)
}

/// `id map: 1=3 2=4` (new id = original id).
fn id_map(labels: &[u32]) -> String {
    let pairs: Vec<String> = labels
        .iter()
        .enumerate()
        .map(|(i, l)| format!("{}={l}", i + 1))
        .collect();
    format!("id map: {}", pairs.join(" "))
}

fn parse_list(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            let t = t.trim();
            match t.parse::<u32>() {
                Ok(v) if v > 0 && t.bytes().all(|b| b.is_ascii_digit()) => Ok(v),
                _ => Err(OmError::Usage(format!("invalid element id {t:?}"))),
            }
        })
        .collect()
}

fn emit(output: &Output, text: &str, out: &mut dyn Write) -> Result<()> {
    match &output.output {
        Some(p) => fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn report_status(report: &ValidationReport) -> i32 {
    if report.is_valid() {
        0
    } else {
        1
    }
}

fn execute(
    cmd: &Command,
    limits: &Limits,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    match cmd {
        Command::Check { input } => {
            let report = match load(input)? {
                Loaded::Chi(m) => check_chirotope_with(&m, limits)?,
                Loaded::Hls(x) => check_hyperline_with(&x, limits)?,
                Loaded::Vec(v) => check_chirotope_with(v.chirotope()?.as_map(), limits)?,
            };
            write!(out, "{report}")?;
            Ok(report_status(&report))
        }
        Command::Convert { input, to, output } => {
            let loaded = load(input)?;
            let text = match (to, loaded) {
                (Target::Hls, Loaded::Hls(x)) => {
                    let report = check_hyperline_with(&x, limits)?;
                    if !report.is_valid() {
                        return Err(OmError::Invalid(report));
                    }
                    hls_json::serialize(&x)
                }
                (Target::Hls, loaded) => {
                    hls_json::serialize(&from_chirotope(&chirotope_of(loaded, limits)?)?)
                }
                (Target::Chi, loaded) => {
                    let chi = chirotope_of(loaded, limits)?;
                    if !is_standard(chi.labels()) {
                        writeln!(err, "{}", id_map(chi.labels()))?;
                    }
                    chi::serialize(chi.as_map())
                }
            };
            emit(output, &text, out)?;
            Ok(0)
        }
        Command::Minor {
            input,
            delete,
            contract,
            output,
        } => {
            let mut chi = chirotope_of(load(input)?, limits)?;
            if let Some(d) = delete {
                let removed = if d.trim() == "auto" {
                    vec![chi.find_deletable_with(limits)?]
                } else {
                    parse_list(d)?
                };
                chi = chi.delete_with(&removed, limits)?.into_chirotope()?;
            }
            if let Some(c) = contract {
                chi = chi.contract(&parse_list(c)?)?;
            }
            writeln!(err, "{}", id_map(chi.labels()))?;
            emit(output, &chi::serialize(chi.as_map()), out)?;
            Ok(0)
        }
        Command::Faces { input } => {
            let chi = chirotope_of(load(input)?, limits)?;
            if chi.rank() == 3 {
                writeln!(out, "{}", face_census_with(&chi, limits)?)?;
            } else {
                writeln!(err, "note: the face census is computed for rank 3 only")?;
            }
            let topes = topes(&chi)?;
            writeln!(out, "topes={}", topes.len())?;
            for t in &topes {
                writeln!(out, "{t}")?;
            }
            Ok(0)
        }
        Command::Enumerate {
            n,
            r,
            uniform,
            list,
            jobs,
        } => {
            let run = || crate::enumerate::enumerate(*n, *r, *uniform, limits);
            let found = match jobs {
                Some(0) => return Err(OmError::Usage("--jobs must be at least 1".into())),
                Some(j) => rayon::ThreadPoolBuilder::new()
                    .num_threads(*j)
                    .build()
                    .map_err(|e| OmError::Internal(e.to_string()))?
                    .install(run)?,
                None => run()?,
            };
            let mut text = format!("{}\n", found.len());
            if *list {
                for values in &found {
                    let m = SignMap::standard(*n, *r, values.clone())?;
                    text.push_str(&m.body_string());
                    text.push('\n');
                }
            }
            out.write_all(text.as_bytes())?;
            Ok(0)
        }
        Command::Render { input, output } => {
            let x = match load(input)? {
                Loaded::Hls(x) => x,
                other => from_chirotope(&chirotope_of(other, limits)?)?,
            };
            emit(output, &crate::svg::render(&x)?, out)?;
            Ok(0)
        }
    }
}

/// Runs a parsed command line and returns the exit status. Errors are
/// reported on `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let limits = Limits::from_env();
    match execute(&cli.command, &limits, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let stdout = io::stdout();
    let stderr = io::stderr();
    let code = run(&cli, &mut stdout.lock(), &mut stderr.lock());
    let _ = io::stdout().flush();
    code
}
