//! Argument definitions and command implementations for `latbij`.

use std::io::{self, BufRead, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use lattice_bijections_core::enumerate::{
    enumerate_ank, enumerate_bnk, enumerate_d, enumerate_free, enumerate_t, enumerate_x,
    enumerate_y,
};
use lattice_bijections_core::suites::{hockey_suite, identity_suite, soccer_suite, CheckResult};
use lattice_bijections_core::{Bijection, ContractError, Error, Value};
use serde_json::json;

use crate::json::{parse_any, to_json};
use crate::parallel::Parallel;
use crate::render::render_event;
use crate::sample::spot_check_triples;

#[derive(Debug, Parser)]
#[command(name = "latbij", version, about = "Lattice-path bijections for central binomial identities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apply a bijection to a value, or to every line of stdin.
    Apply(InputArgs),
    /// Show every stage of a bijection applied to a value.
    Trace {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Render::None)]
        render: Render,
    },
    /// Run the exhaustive verification suites.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        /// Worker threads for the exhaustive passes.
        #[arg(long, default_value_t = 1)]
        parallel: usize,
    },
    /// List every element of a finite set, one per line.
    Enumerate {
        #[arg(long, value_enum)]
        set: Set,
        #[arg(long)]
        n: usize,
        /// Endpoint column, required for `A` and `B`.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value_t = ListFormat::Text)]
        format: ListFormat,
    },
    /// Round-trip seeded random triples through the hockey bijection.
    SpotCheck {
        #[arg(long, default_value_t = 100_000)]
        n: usize,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// One of soccer, soccer-inv, F, F-inv, g, g-inv.
    #[arg(long, value_parser = parse_bijection)]
    pub bijection: Bijection,
    /// The value, or `-` to read one value per line from stdin.
    #[arg(long)]
    pub input: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

fn parse_bijection(s: &str) -> Result<Bijection, String> {
    s.parse().map_err(|_| {
        let names: Vec<_> = Bijection::ALL.iter().map(|b| b.name()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ListFormat {
    Text,
    Jsonl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Render {
    None,
    Ascii,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Soccer,
    Hockey,
    Identities,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Set {
    #[value(name = "T")]
    T,
    #[value(name = "D")]
    D,
    #[value(name = "X")]
    X,
    #[value(name = "Y")]
    Y,
    #[value(name = "free")]
    Free,
    #[value(name = "A")]
    A,
    #[value(name = "B")]
    B,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("precondition violated: {0}")]
    Contract(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    /// 1 for a failed check, 2 for unreadable input or bad parameters, 3 for
    /// input that parses but violates a precondition.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Contract(_) => 3,
            CliError::Io(_) => 74,
        }
    }

    fn at_line(self, line: Option<usize>) -> Self {
        let Some(line) = line else { return self };
        match self {
            CliError::Parse(m) => CliError::Parse(format!("line {line}: {m}")),
            CliError::Contract(m) => CliError::Contract(format!("line {line}: {m}")),
            other => other,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(p) => CliError::Parse(p.to_string()),
            Error::Contract(c) => CliError::Contract(c.to_string()),
        }
    }
}

pub fn run(cli: Cli, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Apply(args) => apply(&args, stdin, out),
        Command::Trace { input, render } => trace(&input, render, stdin, out),
        Command::Verify {
            suite,
            n_max,
            parallel,
        } => verify(suite, n_max, &Parallel::new(parallel), out),
        Command::Enumerate { set, n, k, format } => enumerate(set, n, k, format, out),
        Command::SpotCheck { n, count, seed } => spot_check(n, count, seed, out),
    }
}

/// Calls `f` on every input value with its stdin line number, if any.
fn for_each_input(
    args: &InputArgs,
    stdin: &mut dyn BufRead,
    mut f: impl FnMut(Value) -> Result<(), CliError>,
) -> Result<(), CliError> {
    let kind = args.bijection.input_kind();
    let mut one = |text: &str, line: Option<usize>| {
        let value = parse_any(kind, text).map_err(|e| CliError::from(e).at_line(line))?;
        f(value).map_err(|e| e.at_line(line))
    };
    if args.input != "-" {
        return one(&args.input, None);
    }
    for (i, line) in stdin.lines().enumerate() {
        let line = line?;
        if !line.trim().is_empty() {
            one(&line, Some(i + 1))?;
        }
    }
    Ok(())
}

fn write_value(out: &mut dyn Write, v: &Value, format: Format) -> io::Result<()> {
    match format {
        Format::Text => writeln!(out, "{v}"),
        Format::Json => writeln!(out, "{}", to_json(v)),
    }
}

fn apply(args: &InputArgs, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Result<(), CliError> {
    for_each_input(args, stdin, |v| {
        let image = args.bijection.apply(&v)?;
        Ok(write_value(out, &image, args.format)?)
    })
}

fn trace(
    args: &InputArgs,
    render: Render,
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    for_each_input(args, stdin, |v| {
        let (image, events) = args.bijection.trace(&v)?;
        for e in &events {
            let drawing = match render {
                Render::Ascii => render_event(e),
                Render::None => None,
            };
            match args.format {
                Format::Text => {
                    writeln!(out, "{e}")?;
                    for line in drawing.iter().flat_map(|d| d.lines()) {
                        writeln!(out, "    {line}")?;
                    }
                }
                Format::Json => {
                    let mut obj = json!({
                        "stage": e.stage.to_string(),
                        "before": e.before,
                        "after": e.after,
                    });
                    if let Some(d) = drawing {
                        obj["drawing"] = json!(d);
                    }
                    writeln!(out, "{obj}")?;
                }
            }
        }
        match args.format {
            Format::Text => writeln!(out, "result: {image}")?,
            Format::Json => writeln!(out, "{}", json!({ "result": to_json(&image) }))?,
        }
        Ok(())
    })
}

fn verify(suite: Suite, n_max: usize, runner: &Parallel, out: &mut dyn Write) -> Result<(), CliError> {
    let (mut total, mut failed) = (0usize, 0usize);
    let mut emit = |results: Vec<CheckResult>| -> io::Result<()> {
        for r in results {
            total += 1;
            failed += !r.passed() as usize;
            writeln!(out, "{r}\n")?;
        }
        out.flush()
    };
    if matches!(suite, Suite::Soccer | Suite::All) {
        for n in 0..=n_max {
            emit(soccer_suite(n, runner))?;
        }
    }
    if matches!(suite, Suite::Hockey | Suite::All) {
        for n in 0..=n_max {
            emit(hockey_suite(n, runner))?;
        }
    }
    if matches!(suite, Suite::Identities | Suite::All) {
        emit(identity_suite(n_max))?;
    }
    writeln!(out, "summary: checks={total} failed={failed}")?;
    if failed > 0 {
        return Err(CliError::Verification(format!("{failed} of {total} checks failed")));
    }
    Ok(())
}

fn enumerate(
    set: Set,
    n: usize,
    k: Option<usize>,
    format: ListFormat,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let need_k = || k.ok_or_else(|| CliError::Parse("--k is required for sets A and B".into()));
    // an out-of-range k is a bad parameter, not bad input
    let bad_k = |e: ContractError| CliError::Parse(e.to_string());
    let values: Box<dyn Iterator<Item = Value>> = match set {
        Set::T => Box::new(enumerate_t(n).map(Value::Triple)),
        Set::D => Box::new(enumerate_d(n).map(Value::Marked)),
        Set::X => Box::new(enumerate_x(n).map(|p| Value::Path(p.into_path()))),
        Set::Y => Box::new(enumerate_y(n).map(|p| Value::Path(p.into_path()))),
        Set::Free => Box::new(enumerate_free(n).map(Value::Path)),
        Set::A => Box::new(enumerate_ank(n, need_k()?).map_err(bad_k)?.map(|p| Value::Path(p.into_path()))),
        Set::B => Box::new(enumerate_bnk(n, need_k()?).map_err(bad_k)?.map(|p| Value::Path(p.into_path()))),
    };
    let format = match format {
        ListFormat::Text => Format::Text,
        ListFormat::Jsonl => Format::Json,
    };
    for v in values {
        write_value(out, &v, format)?;
    }
    Ok(())
}

fn spot_check(n: usize, count: usize, seed: u64, out: &mut dyn Write) -> Result<(), CliError> {
    let r = spot_check_triples(n, count, seed);
    writeln!(
        out,
        "spot-check n={} seed={} checked={} failures={} status={}",
        r.n,
        r.seed,
        r.checked,
        r.failures,
        if r.passed() { "pass" } else { "FAIL" },
    )?;
    match r.first_failure {
        Some(i) => Err(CliError::Verification(format!("sample {i} did not round-trip"))),
        None => Ok(()),
    }
}
