//! Command-line front end: run a check suite or emit an exact series as JSON.

use bcd_yangian::report::{emit_series, run_suite, LevelSel, RunConfig, Suite, Target};
use bcd_yangian::{Kind, Result};
use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "bcdy", version, about = "Exact checks for the rational R-matrix and double Yangians of types B, C, D")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// P, Q, R(u) and R̄(u) identities.
    Rmatrix(Common),
    /// The normalization series f(u).
    Fseries(Common),
    /// Symmetrizers, fusion and trace reduction.
    Brauer(Common),
    /// Reordering engine against the classical oracle.
    Engine(Common),
    /// Central series, Φ, braiding and the completed double Yangian.
    Center {
        #[command(flatten)]
        common: Common,
        /// Run the expected-failure sweeps at a non-critical level instead.
        #[arg(long)]
        negative: bool,
    },
    /// The classical affine oracle and Segal-Sugawara vectors.
    Classical(Common),
    /// Every suite, or the suite named in the config file.
    Suite(Common),
}

#[derive(Args, Clone)]
struct Common {
    /// JSON configuration; flags given alongside override its fields.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_parser = ["o", "sp"])]
    algebra: Option<String>,
    #[arg(long = "N")]
    n: Option<usize>,
    /// `crit` or a rational `p/q`.
    #[arg(long)]
    level: Option<String>,
    #[arg(long)]
    hord: Option<usize>,
    #[arg(long)]
    deg: Option<u32>,
    #[arg(long)]
    udeg: Option<u32>,
    #[arg(long)]
    forder: Option<usize>,
    /// Fusion order for emitted series.
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    /// Write a series instead of running checks:
    /// fseries, symmetrizer, Tplus, Phi or segal-sugawara.
    #[arg(long)]
    emit: Option<String>,
}

fn build_config(c: &Common, suite: Option<Suite>) -> Result<RunConfig> {
    let mut cfg = match &c.config {
        Some(p) => RunConfig::from_file(p)?,
        None => RunConfig::new(Kind::Orthogonal, 3, Suite::All),
    };
    if let Some(a) = &c.algebra {
        cfg.algebra = Kind::parse(a)?;
    }
    if let Some(n) = c.n {
        cfg.n = n;
    }
    if let Some(l) = &c.level {
        cfg.level = LevelSel::parse(l)?;
    }
    cfg.hord = c.hord.unwrap_or(cfg.hord);
    cfg.deg = c.deg.unwrap_or(cfg.deg);
    cfg.udeg = c.udeg.unwrap_or(cfg.udeg);
    cfg.forder = c.forder.unwrap_or(cfg.forder);
    cfg.seed = c.seed.unwrap_or(cfg.seed);
    if c.m.is_some() {
        cfg.m = c.m;
    }
    if let Some(o) = &c.out {
        cfg.out = Some(o.display().to_string());
    }
    if let Some(s) = suite {
        cfg.suite = s;
    }
    Ok(cfg)
}

fn write(cfg: &RunConfig, text: &str) -> Result<()> {
    match &cfg.out {
        Some(p) => std::fs::write(p, text).map_err(|e| bcd_yangian::Error::Config(format!("cannot write {p}: {e}"))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    let (common, suite) = match cli.command {
        Command::Rmatrix(c) => (c, Some(Suite::Rmatrix)),
        Command::Fseries(c) => (c, Some(Suite::Fseries)),
        Command::Brauer(c) => (c, Some(Suite::Brauer)),
        Command::Engine(c) => (c, Some(Suite::Engine)),
        Command::Center { common, negative } => (common, Some(if negative { Suite::CenterNegative } else { Suite::Center })),
        Command::Classical(c) => (c, Some(Suite::Classical)),
        Command::Suite(c) => {
            let s = if c.config.is_some() { None } else { Some(Suite::All) };
            (c, s)
        }
    };
    let cfg = build_config(&common, suite)?;
    if let Some(t) = &common.emit {
        let emitted = emit_series(&cfg, Target::parse(t)?)?;
        write(&cfg, &emitted.to_json())?;
        return Ok(0);
    }
    let (report, times) = run_suite(&cfg)?;
    for t in &times {
        eprintln!("{:<16} {:>9.3} s", t.group, t.elapsed.as_secs_f64());
    }
    for c in &report.checks {
        eprintln!("{:<5} {} [{}]", format!("{:?}", c.status).to_uppercase(), c.name, c.params.get("algebra").map(String::as_str).unwrap_or(""));
    }
    write(&cfg, &report.to_json())?;
    Ok(report.exit_code() as u8)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("bcdy: {e}");
            ExitCode::from(2)
        }
    }
}
