//! `rloop`: analyze right loops and groups given as table files.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "rloop", version, about = "Right loops, inner mappings and twisted automorphisms from Cayley tables")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that a table file is a right loop (or a group, for `type: group`).
    Validate { file: PathBuf },
    /// Full report: inverses, inner mappings, G_S, Aut, TAut, η, identities.
    Analyze { file: PathBuf },
    /// One inner mapping f(y,z).
    Inner { file: PathBuf, y: String, z: String },
    /// σ_y(h) for a permutation h fixing the identity.
    Sigma { file: PathBuf, y: String, perm: String },
    /// The involution η on G_S of a twisted right gyrogroup.
    Eta { file: PathBuf },
    /// Build and verify the group G_S·S; prints it as a group file.
    Extend {
        file: PathBuf,
        /// Write the group file here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decompose a group by a subgroup and transversal, classify, induce.
    Transversal {
        file: PathBuf,
        /// Subgroup element labels (whitespace separated, repeatable).
        #[arg(long, num_args = 1.., required = true)]
        subgroup: Vec<String>,
        /// Transversal element labels (whitespace separated, repeatable).
        #[arg(long, num_args = 1.., required = true)]
        transversal: Vec<String>,
    },
    /// Whether a subset of a group is a twisted subgroup.
    TwistedSubgroup {
        file: PathBuf,
        #[arg(long, num_args = 1.., required = true)]
        subset: Vec<String>,
    },
    /// Both sides of the twisted-subgroup characterization of twisted gyrogroups.
    Equivalence { file: PathBuf },
    /// The deformation x ∘ρ y = ρ(x) ∘ y (y ≠ e) of a right gyrogroup.
    Deform {
        file: PathBuf,
        #[arg(long)]
        rho: String,
    },
    /// The projection right loop of order n.
    Project { n: usize },
    /// The transversal S_h = {hx | x ≠ e} ∪ {e} for a non-central involution h.
    Sh {
        file: PathBuf,
        #[arg(long, num_args = 1.., required = true)]
        subgroup: Vec<String>,
        #[arg(long, num_args = 1.., required = true)]
        transversal: Vec<String>,
        #[arg(long)]
        h: String,
    },
    /// Enumerate right loops of order n.
    Enumerate {
        n: usize,
        /// Predicates every table must satisfy (comma separated or repeated).
        #[arg(long, value_delimiter = ',')]
        filter: Vec<String>,
        /// Count tables per predicate combination instead of listing them.
        #[arg(long)]
        census: bool,
        /// With --census: count isomorphism classes.
        #[arg(long)]
        up_to_iso: bool,
        /// Stop after this many tables.
        #[arg(long)]
        limit: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Validate { file } => commands::validate(&file),
        Command::Analyze { file } => commands::analyze(&file),
        Command::Inner { file, y, z } => commands::inner(&file, &y, &z),
        Command::Sigma { file, y, perm } => commands::sigma(&file, &y, &perm),
        Command::Eta { file } => commands::eta(&file),
        Command::Extend { file, output } => commands::extend(&file, output.as_deref()),
        Command::Transversal {
            file,
            subgroup,
            transversal,
        } => commands::transversal(&file, &subgroup, &transversal),
        Command::TwistedSubgroup { file, subset } => commands::twisted_subgroup(&file, &subset),
        Command::Equivalence { file } => commands::equivalence(&file),
        Command::Deform { file, rho } => commands::deform(&file, &rho),
        Command::Project { n } => commands::project(n),
        Command::Sh {
            file,
            subgroup,
            transversal,
            h,
        } => commands::sh(&file, &subgroup, &transversal, &h),
        Command::Enumerate {
            n,
            filter,
            census,
            up_to_iso,
            limit,
        } => commands::enumerate(n, &filter, census, up_to_iso, limit),
    };
    match result {
        Ok(outcome) => outcome.emit(cli.json),
        Err(failure) => failure.emit(cli.json),
    }
}
