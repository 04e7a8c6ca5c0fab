use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use iterbound_cli::config::{ExperimentConfig, ExperimentKind};
use iterbound_cli::{run, validate, CliError, Level};

#[derive(Parser)]
#[command(name = "iterbound", version, about = "Iteration-limited BER bounds and the experiments that check them")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    config: PathBuf,
    /// Overrides the config's seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Output directory; overrides `out_dir` in the config.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads, 0 for one per core.
    #[arg(long, default_value_t = 0)]
    threads: usize,
}

#[derive(Subcommand)]
enum Command {
    Bounds(RunArgs),
    Simulate(RunArgs),
    De(RunArgs),
    Recursion(RunArgs),
    Tail(RunArgs),
    Oracle(RunArgs),
    Figure5(RunArgs),
    Figure6(RunArgs),
    /// Check a config without running it.
    Validate {
        #[arg(long)]
        config: PathBuf,
    },
}

fn execute(kind: ExperimentKind, args: RunArgs) -> Result<(), CliError> {
    let mut config = ExperimentConfig::load(&args.config)?;
    if config.kind != kind {
        return Err(CliError::Config(format!(
            "kind: config declares '{}' but the '{}' subcommand was used",
            config.kind.as_str(),
            kind.as_str()
        )));
    }
    if let Some(seed) = args.seed {
        config.seed = seed;
    }
    let out = args
        .out
        .or_else(|| config.out_dir.clone())
        .ok_or_else(|| CliError::Config("out_dir: give --out or set out_dir in the config".into()))?;
    for finding in validate(&config) {
        eprintln!("{finding}");
    }
    let manifest = run(&config, &out, args.threads)?;
    for note in &manifest.notes {
        eprintln!("note: {note}");
    }
    for o in &manifest.outputs {
        println!("{}  {} rows  {}", out.join(&o.file).display(), o.rows, o.sha256);
    }
    Ok(())
}

fn main_inner(cli: Cli) -> Result<(), CliError> {
    let (kind, args) = match cli.command {
        Command::Validate { config } => {
            let config = ExperimentConfig::load(&config)?;
            let findings = validate(&config);
            for f in &findings {
                println!("{f}");
            }
            if findings.iter().any(|f| f.level == Level::Error) {
                return Err(CliError::Config("validation failed".into()));
            }
            println!("ok");
            return Ok(());
        }
        Command::Bounds(a) => (ExperimentKind::Bounds, a),
        Command::Simulate(a) => (ExperimentKind::Simulate, a),
        Command::De(a) => (ExperimentKind::De, a),
        Command::Recursion(a) => (ExperimentKind::Recursion, a),
        Command::Tail(a) => (ExperimentKind::Tail, a),
        Command::Oracle(a) => (ExperimentKind::Oracle, a),
        Command::Figure5(a) => (ExperimentKind::Figure5, a),
        Command::Figure6(a) => (ExperimentKind::Figure6, a),
    };
    let config = args.config.clone();
    execute(kind, args).map_err(|e| match e {
        CliError::Other(inner) => CliError::Other(inner.context(format!("running {}", config.display()))),
        other => other,
    })
}

fn main() -> ExitCode {
    match main_inner(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
