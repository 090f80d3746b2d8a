use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use modcomp::cli::{self, Format, RunConfig, DEFAULT_MAX_VECTORS};
use modcomp::genvec::Signature;
use modcomp::group::DEFAULT_ORDER_CAP;
use modcomp::patch::{Injectivity, SelectionMode};
use modcomp::tiling::CutId;

#[derive(Parser)]
#[command(
    name = "modcomp",
    version,
    about = "Generating vectors, modular strata and partial isometries"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate generating vectors and their automorphism classes.
    Vectors(Common),
    /// Partition classes into orbits of the modular group.
    Strata(Common),
    /// Crossover sequences, degeneracies and graph fingerprints for a cut.
    Tiling(Common),
    /// Partial isometry matrix between class representatives.
    Matrix(Common),
    /// Fixed list of groups and signatures.
    Census(Common),
}

#[derive(Args)]
struct Common {
    /// Preset name (sym3, alt5, psl2_7, sg21_1, cyclic:N) or a group JSON file.
    #[arg(long, default_value = "sym3")]
    group: String,
    /// Four branching orders, e.g. 2,2,3,3.
    #[arg(long)]
    signature: Option<Signature>,
    #[arg(long, default_value = "E4")]
    cut: CutId,
    /// cayley-distance or random.
    #[arg(long, default_value = "cayley-distance")]
    selection: SelectionMode,
    /// Seed for random selection.
    #[arg(long)]
    seed: Option<u64>,
    /// enforced or relaxed.
    #[arg(long, default_value = "enforced")]
    injectivity: Injectivity,
    /// json, csv, dot or text.
    #[arg(long, default_value = "text")]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_ORDER_CAP)]
    max_group_order: usize,
    #[arg(long, default_value_t = DEFAULT_MAX_VECTORS)]
    max_vectors: usize,
    /// Worker threads; 0 uses all cores.
    #[arg(long, default_value_t = 0)]
    threads: usize,
    /// Restrict tiling output to one class.
    #[arg(long)]
    class: Option<usize>,
    /// Restrict the matrix to one modular orbit.
    #[arg(long)]
    orbit: Option<usize>,
    /// Draw the Cayley graph instead of the polygon for tiling DOT output.
    #[arg(long)]
    cayley: bool,
    /// With random selection, also sample this many seeds per matrix entry.
    #[arg(long, default_value_t = 1)]
    runs: usize,
    /// Run census rows marked slow.
    #[arg(long)]
    include_slow: bool,
}

fn run(cli: Cli) -> modcomp::Result<()> {
    let (name, c) = match cli.command {
        Command::Vectors(c) => ("vectors", c),
        Command::Strata(c) => ("strata", c),
        Command::Tiling(c) => ("tiling", c),
        Command::Matrix(c) => ("matrix", c),
        Command::Census(c) => ("census", c),
    };
    if c.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(c.threads)
            .build_global()
            .map_err(|e| modcomp::Error::Config(e.to_string()))?;
    }
    let cfg = RunConfig {
        group: c.group,
        signature: c.signature,
        cut: c.cut,
        selection: c.selection.with_seed(c.seed)?,
        injectivity: c.injectivity,
        format: c.format,
        max_group_order: c.max_group_order,
        max_vectors: c.max_vectors,
        class: c.class,
        orbit: c.orbit,
        include_slow: c.include_slow,
        cayley: c.cayley,
        runs: c.runs,
    };
    let report = match name {
        "vectors" => cli::cmd_vectors(&cfg)?,
        "strata" => cli::cmd_strata(&cfg)?,
        "tiling" => cli::cmd_tiling(&cfg)?,
        "matrix" => cli::cmd_matrix(&cfg)?,
        _ => cli::cmd_census(&cfg)?,
    };
    let out = report.render(cfg.format)?;
    match c.out {
        Some(path) => std::fs::write(path, out)?,
        None => print!("{out}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
