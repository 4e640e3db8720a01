//! `ekk`: command-line access to the E_k models and checks.

mod commands;
mod table;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "ekk", version, about = "Exact Sullivan models and E_k actions")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Output format.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Worker threads for verification (default: all cores).
    #[arg(long, global = true, env = "EKK_JOBS")]
    pub jobs: Option<usize>,
    /// Also write the full report (command, status, payload) as JSON to this path.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Clone, serde::Serialize)]
#[serde(tag = "verb", rename_all = "kebab-case")]
pub enum Verb {
    /// Print a model's generators and differential.
    Model {
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Space::Torus)]
        space: Space,
        /// Keep the decorated generators of degree <= 0.
        #[arg(long)]
        untruncated: bool,
    },
    /// Check the E_k action on the toroidification model.
    Verify {
        #[arg(long)]
        k: usize,
        /// Comma-separated subset of chain,cartan,ef,serre,weight.
        #[arg(long, value_delimiter = ',')]
        checks: Option<Vec<String>>,
    },
    /// Positive roots of E_k.
    Roots {
        #[arg(long)]
        k: usize,
    },
    /// Dimensions of the parabolic split m + a + 2n.
    Parabolic {
        #[arg(long)]
        k: usize,
    },
    /// Dimension of the degree-0 derivations of the toroidification model.
    Derivations {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Mode::Linear)]
        mode: Mode,
        #[arg(long)]
        untruncated: bool,
    },
    /// Seeded run of the toroidification/totalization hom-set bijection.
    AdjunctionDemo {
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        samples: usize,
    },
    /// Per-rank Cartan data and parabolic dimensions.
    Table1 {
        /// Only this rank (default: 0 through 11).
        #[arg(long)]
        k: Option<usize>,
        /// Run the action checks also for ranks 9 to 11 (slow).
        #[arg(long)]
        verify_all: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Latex,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Space {
    Sphere,
    Loop,
    Cyclic,
    Torus,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Linear,
    Full,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(n) = cli.common.jobs {
        if n == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .expect("thread pool configured once");
    }
    let start = Instant::now();
    let outcome = match commands::run(&cli.verb, cli.common.format) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let mut stdout = std::io::stdout().lock();
    if writeln!(stdout, "{}", outcome.rendered.trim_end()).is_err() {
        return ExitCode::from(2);
    }
    if let Some(path) = &cli.common.out {
        let report = serde_json::json!({
            "command": cli.verb,
            "status": if outcome.passed { "pass" } else { "fail" },
            "payload": outcome.payload,
        });
        let text = serde_json::to_string_pretty(&report).expect("report serializes");
        if let Err(e) = std::fs::write(path, text + "\n") {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    eprintln!(
        "status: {}  wall: {:.3}s",
        if outcome.passed { "pass" } else { "fail" },
        start.elapsed().as_secs_f64()
    );
    ExitCode::from(if outcome.passed { 0 } else { 1 })
}
