//! `covers`: enumeration tables, small-cover homology, bipyramitoid
//! splittings, quadric checks and the acceptance suite.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use report::Format;

#[derive(Parser, Debug)]
#[command(name = "covers", version, about = "Pyramitoids, small covers and their homology")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "table", global = true)]
    pub format: Format,
    /// Report wall time (makes output run-dependent).
    #[arg(long, global = true)]
    pub timing: bool,
    /// Directory searched first for `<name>.json` fixtures.
    #[arg(long, global = true)]
    pub fixtures_dir: Option<PathBuf>,
    /// Seed for sampling commands.
    #[arg(long, default_value_t = 20_240_601, global = true)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mirrors {
    All,
    Dome,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyLevel {
    Fast,
    Full,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Triangulation classes of the n-gon, i.e. simple n-pyramitoids.
    Enumerate {
        n: usize,
        /// Identify mirror images as well as rotations.
        #[arg(long)]
        dihedral: bool,
    },
    /// Cell counts and homology of a small cover.
    Cover {
        /// Fixture name, JSON path, or a label such as 020202.
        fixture: String,
        #[arg(long, value_enum, default_value = "all")]
        mirrors: Mirrors,
        /// Compute integral homology.
        #[arg(long)]
        homology: bool,
        /// Write the defining graph (all mirrors) or core graph (dome) as DOT.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Write cell tables and boundary triplets.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Homology and Heegaard data of a bipyramitoid.
    Bipyramitoid {
        /// Fixture with an equator.
        fixture: Option<String>,
        /// North half (fixture or label) when gluing explicitly.
        #[arg(long, requires = "south", conflicts_with = "fixture")]
        north: Option<String>,
        #[arg(long, requires = "north")]
        south: Option<String>,
        #[arg(long, default_value_t = 0)]
        offset: usize,
        #[arg(long)]
        flip: bool,
        /// Write Heegaard data as JSON.
        #[arg(long)]
        heegaard: Option<PathBuf>,
        /// Include the fundamental group presentation.
        #[arg(long)]
        presentation: bool,
    },
    /// Residuals of the polygon and pyramid relations on sampled points.
    Quadrics {
        n: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Include the coefficient matrices.
        #[arg(long)]
        system: bool,
    },
    /// Run the acceptance checks.
    Verify {
        #[arg(long, value_enum, default_value = "fast")]
        level: VerifyLevel,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = commands::run(&cli).and_then(|mut report| {
        if cli.timing {
            report.wall_time = Some(start.elapsed().as_secs_f64());
        }
        let text = report.render(cli.format)?;
        print!("{text}");
        Ok(report.all_passed())
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
