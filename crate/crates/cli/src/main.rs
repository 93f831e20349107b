mod commands;
mod report;

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context as _, Result};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use monres_core::oracle::DEFAULT_PRIME;
use monres_core::taylor::DEFAULT_MAX_T;
use monres_core::{Execution, MonomialIdeal};

use commands::{Settings, VerifyOptions};
use report::{Output, Report, SCHEMA};

/// Poincaré series, Koszul homology and Taylor resolutions of monomial rings.
#[derive(Debug, Parser)]
#[command(name = "monres", version)]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Include wall-clock timing in the report.
    #[arg(long, global = true)]
    timing: bool,
    /// Run every sweep on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Input {
    /// Ideal file; standard input when omitted or `-`.
    input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse and print the minimalized ideal.
    Parse(Input),
    /// Drop linear generators and unused variables.
    Reduce(Input),
    /// Polarize into a squarefree ideal.
    Polarize(Input),
    /// Raise every generator to the q-th power.
    Power {
        #[arg(short, long)]
        q: u32,
        #[command(flatten)]
        input: Input,
    },
    /// Taylor complex ranks, minimality by lattice scan, differentials.
    Taylor {
        /// Print the matrix of d_L.
        #[arg(long, value_name = "L")]
        differential: Option<usize>,
        #[command(flatten)]
        input: Input,
    },
    /// Minimality of the Taylor resolution.
    Minimal(Input),
    /// Bigraded Hilbert series of the Koszul homology.
    Hilbert(Input),
    /// Poincaré series of the residue field.
    Poincare {
        /// Also print coefficients through z^D.
        #[arg(long, value_name = "D")]
        order: Option<usize>,
        #[command(flatten)]
        input: Input,
    },
    /// Complete-intersection, Golod, stability and d-window structure.
    Classify(Input),
    /// Subset counts of {1..t} by canonical partition weight.
    Partitions {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        d: usize,
        /// List every weight instead of the bigraded series.
        #[arg(long)]
        weights: bool,
    },
    /// Betti numbers of the residue field by linear algebra over GF(p).
    Oracle {
        #[arg(long, value_name = "H")]
        hdeg: usize,
        /// Internal degree bound; large enough for exact values by default.
        #[arg(long, value_name = "D")]
        maxdeg: Option<u32>,
        #[arg(long, value_name = "P", default_value_t = DEFAULT_PRIME)]
        prime: u64,
        #[command(flatten)]
        input: Input,
    },
    /// Cross-check the Poincaré series across every applicable route.
    Verify {
        /// Also compare with the q-th power ideal.
        #[arg(short, long)]
        q: Option<u32>,
        #[arg(long, value_name = "D", default_value_t = 6)]
        order: usize,
        /// Oracle depth; min(order, 4) by default.
        #[arg(long, value_name = "H")]
        hdeg: Option<usize>,
        #[arg(long, value_name = "P", default_value_t = DEFAULT_PRIME)]
        prime: u64,
        #[command(flatten)]
        input: Input,
    },
    /// Random minimal-Taylor ideals with the full property suite.
    Corpus {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        count: usize,
    },
}

fn read_ideal(input: &Input) -> Result<MonomialIdeal> {
    let (text, origin) = match &input.input {
        Some(path) if path.as_os_str() != "-" => (
            std::fs::read_to_string(path)
                .with_context(|| format!("cannot read {}", path.display()))?,
            path.display().to_string(),
        ),
        _ => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .context("cannot read standard input")?;
            (s, "<stdin>".to_string())
        }
    };
    text.parse()
        .with_context(|| format!("invalid ideal in {origin}"))
}

fn lattice_cap() -> Result<usize> {
    match std::env::var("MONRES_MAX_T") {
        Ok(v) => v
            .trim()
            .parse()
            .with_context(|| format!("MONRES_MAX_T must be a non-negative integer, got `{v}`")),
        Err(_) => Ok(DEFAULT_MAX_T),
    }
}

fn dispatch(command: &Command, ctx: &Settings) -> Result<Output> {
    Ok(match command {
        Command::Parse(i) => commands::parse(&read_ideal(i)?),
        Command::Reduce(i) => commands::reduce(&read_ideal(i)?),
        Command::Polarize(i) => commands::polarize_cmd(&read_ideal(i)?),
        Command::Power { q, input } => commands::power(&read_ideal(input)?, *q)?,
        Command::Taylor {
            differential,
            input,
        } => commands::taylor(&read_ideal(input)?, *differential, ctx)?,
        Command::Minimal(i) => commands::minimal(&read_ideal(i)?),
        Command::Hilbert(i) => commands::hilbert(&read_ideal(i)?, ctx)?,
        Command::Poincare { order, input } => commands::poincare(&read_ideal(input)?, *order, ctx)?,
        Command::Classify(i) => commands::classify_cmd(&read_ideal(i)?)?,
        Command::Partitions { t, d, weights } => commands::partitions(*t, *d, *weights, ctx)?,
        Command::Oracle {
            hdeg,
            maxdeg,
            prime,
            input,
        } => commands::oracle(&read_ideal(input)?, *hdeg, *maxdeg, *prime, ctx)?,
        Command::Verify {
            q,
            order,
            hdeg,
            prime,
            input,
        } => {
            let opts = VerifyOptions {
                q: *q,
                order: *order,
                hdeg: *hdeg,
                prime: *prime,
            };
            commands::verify(&read_ideal(input)?, &opts, ctx)?
        }
        Command::Corpus { seed, count } => commands::corpus(*seed, *count, ctx)?,
    })
}

fn run(cli: &Cli, argv: &[String]) -> Result<bool> {
    let ctx = Settings {
        cap: lattice_cap()?,
        exec: if cli.sequential {
            Execution::Sequential
        } else {
            Execution::Parallel
        },
    };
    let start = Instant::now();
    let out = dispatch(&cli.command, &ctx)?;
    let elapsed = start.elapsed();

    let stdout = io::stdout();
    let mut w = stdout.lock();
    if cli.json {
        let report = Report {
            schema: SCHEMA,
            command: argv,
            ideal: out.ideal.as_deref(),
            result: &out.result,
            warnings: &out.warnings,
            timing_ms: cli.timing.then_some(elapsed.as_secs_f64() * 1e3),
        };
        serde_json::to_writer_pretty(&mut w, &report)?;
        writeln!(w)?;
    } else {
        w.write_all(out.text.as_bytes())?;
        for warning in &out.warnings {
            eprintln!("warning: {warning}");
        }
        if cli.timing {
            eprintln!("elapsed: {:.3} ms", elapsed.as_secs_f64() * 1e3);
        }
    }
    Ok(!out.mismatch)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let argv: Vec<String> = std::env::args().skip(1).collect();
    match run(&cli, &argv) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
