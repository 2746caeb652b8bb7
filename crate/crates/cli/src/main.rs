use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgAction, Args, Parser, Subcommand};

use mac_kit::{exit_code, parse_omega, run, Format, RunConfig, Task, DEFAULT_CAP};

/// Homology, products and manifold checks for real moment-angle complexes.
#[derive(Parser)]
#[command(name = "mac-kit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Complex file: `m=<int>` then `facet: ...` or `missing: ...` lines.
    #[arg(long)]
    input: PathBuf,
    /// Comma-separated J tuple, all ones by default.
    #[arg(long = "J", value_name = "J")]
    j: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest vertex count for a subset sweep.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Worker threads.
    #[arg(long)]
    parallel: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Homology of (D¹,S⁰)^{K(J)} with its per-subset decomposition.
    Betti(Common),
    /// Cocycle representatives and the product table of the cohomology ring.
    Ring {
        #[command(flatten)]
        common: Common,
        /// Three label sets, e.g. `--triples 1,6,7 2,4,7 3,5,7`; repeatable.
        #[arg(long, num_args = 3, action = ArgAction::Append, value_name = "OMEGA")]
        triples: Vec<String>,
    },
    /// Cap product of a cochain expression with a chain expression.
    Cap {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        cochain: String,
        /// May use `Gamma` for the fundamental class.
        #[arg(long)]
        chain: String,
        /// Reports whether the result is homologous to this chain.
        #[arg(long)]
        compare: Option<String>,
    },
    /// Homology-manifold verdict.
    Manifold(Common),
    /// Writes K(J) as a complex file.
    Kj(Common),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (common, task) = match cli.command {
        Command::Betti(c) => (c, Ok(Task::Betti)),
        Command::Ring { common, triples } => {
            let sets: Result<Vec<_>, _> = triples.iter().map(|t| parse_omega(t)).collect();
            let task = sets.map(|s| Task::Ring {
                triples: s.chunks(3).map(|c| [c[0], c[1], c[2]]).collect(),
            });
            (common, task)
        }
        Command::Cap {
            common,
            cochain,
            chain,
            compare,
        } => (common, Ok(Task::Cap { cochain, chain, compare })),
        Command::Manifold(c) => (c, Ok(Task::Manifold)),
        Command::Kj(c) => (c, Ok(Task::Kj)),
    };
    let result = task.and_then(|task| {
        run(&RunConfig {
            input: common.input,
            task,
            j: common.j,
            cap: common.cap,
            format: common.format,
            parallel: common.parallel,
        })
    });
    match result {
        Ok(report) => {
            match common.format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => print!("{}", report.to_json()),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("mac-kit: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
