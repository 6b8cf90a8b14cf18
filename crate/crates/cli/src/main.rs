use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::Parser;
use simatroid::{FieldSpec, SearchStrategy};
use simatroid_cli::{run_command, Command, Density, Options};

/// Simplicial matroids of hyperclique complexes: decide, certify, verify.
///
/// Exit status: 0 decided, 2 inconclusive (a guard was hit), 1 error.
#[derive(Parser, Debug)]
#[command(name = "simatroid", version)]
struct Cli {
    /// analyze | perfect | superdense | supersolvable | triangulate | decompose | dual-check | gen | verify
    command: Command,
    /// Generator for `gen`: projective-plane | dperfect-nine | non-strong | random
    generator: Option<String>,
    /// Field: a prime p for GF(p), or q for the rationals. Overrides the instance.
    #[arg(long)]
    field: Option<FieldSpec>,
    /// Read the instance or certificates from this file instead of stdin.
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Inclusion probability for `gen random`, as a/b or a decimal.
    #[arg(long, default_value = "1/2")]
    density: Density,
    /// greedy | backtrack
    #[arg(long, default_value = "backtrack")]
    strategy: SearchStrategy,
    /// Largest ground set enumerated through independent sets.
    #[arg(long)]
    max_brute: Option<usize>,
    /// Work bound for circuit enumeration beyond --max-brute.
    #[arg(long)]
    budget: Option<f64>,
    /// Largest n accepted by dual-check.
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    /// Write the output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    let defaults = Options::default();
    let opts = Options {
        field: cli.field,
        strategy: cli.strategy,
        max_brute: cli.max_brute.unwrap_or(defaults.max_brute),
        budget: cli.budget.unwrap_or(defaults.budget),
        max_n: cli.max_n.unwrap_or(defaults.max_n),
        seed: cli.seed,
        density: cli.density,
        n: cli.n,
        k: cli.k,
        generator: cli.generator,
    };
    let (input, label) = if !cli.command.needs_input() {
        (None, "-".to_string())
    } else if let Some(path) = &cli.file {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        (Some(text), path.display().to_string())
    } else {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).context("reading stdin")?;
        (Some(text), "stdin".to_string())
    };
    let out = run_command(cli.command, input.as_deref(), &label, &opts)?;
    match &cli.out {
        Some(path) => std::fs::write(path, &out.text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{}", out.text),
    }
    Ok(out.exit)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
