//! `surfkit`: command-line access to the surfkit library.
//!
//! Exit status: 0 on success, 1 on usage errors, 2 on domain errors (the
//! error's name is printed on stderr).

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::output::Format;

#[derive(Parser)]
#[command(
    name = "surfkit",
    version,
    about = "Permutation groups, braids, Hurwitz orbits, Beauville structures, ADE diagrams and surface invariants"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    /// Worker threads for parallel searches (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Permutation arithmetic, closures and conjugator searches.
    #[command(subcommand)]
    Perm(PermCmd),
    /// Braid words acting on the free group.
    #[command(subcommand)]
    Braid(BraidCmd),
    /// Factorizations under the Hurwitz action.
    #[command(subcommand)]
    Hurwitz(HurwitzCmd),
    /// Orbifold signatures and Riemann–Hurwitz arithmetic.
    #[command(subcommand)]
    Orbifold(OrbifoldCmd),
    /// Beauville structures.
    #[command(subcommand)]
    Beauville(BeauvilleCmd),
    /// Configurations of (-2)-curves.
    #[command(subcommand)]
    Dynkin(DynkinCmd),
    /// Numerical invariants of surfaces.
    #[command(subcommand)]
    Inv(InvCmd),
}

#[derive(Subcommand)]
pub enum PermCmd {
    /// Cycles, order, cycle type and inverse of a permutation.
    Info {
        perm: String,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// The composite p ∘ q (q applied first).
    Compose {
        p: String,
        q: String,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// The group generated by the given permutations.
    Closure {
        #[arg(required = true)]
        generators: Vec<String>,
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long, default_value_t = 1_000_000)]
        cap: usize,
        /// Print every element, not just the order.
        #[arg(long)]
        elements: bool,
    },
    /// Searches for g with g a g⁻¹ = a2 and g c g⁻¹ = c2.
    Conjugator {
        #[arg(long)]
        a: String,
        #[arg(long)]
        c: String,
        #[arg(long)]
        a2: String,
        #[arg(long)]
        c2: String,
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long, default_value_t = surfkit::permgroup::DEFAULT_SCAN_DEGREE)]
        bound: usize,
    },
}

#[derive(Subcommand)]
pub enum BraidCmd {
    /// Image of a free-group word under a braid.
    Act {
        #[arg(long)]
        strands: usize,
        /// Braid word such as "s1 s2^-1".
        braid: String,
        /// Free-group word such as "g1 g2^-1".
        word: String,
    },
    /// Whether two braid words are equal.
    Equal {
        #[arg(long)]
        strands: usize,
        left: String,
        right: String,
    },
    /// The permutation induced on the strands.
    Perm {
        #[arg(long)]
        strands: usize,
        braid: String,
    },
    /// The full twist on d strands.
    Twist { strands: usize },
    /// The chain word (σ1)(σ2 σ1) ⋯ (σn ⋯ σ1) on n+1 strands.
    Chain { n: usize },
}

#[derive(Args)]
pub struct FactorizationInput {
    /// JSON factorization file; standard input when omitted or "-".
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Subcommand)]
pub enum HurwitzCmd {
    /// Breadth-first orbit enumeration.
    Orbit {
        #[command(flatten)]
        input: FactorizationInput,
        #[arg(long, default_value_t = surfkit::hurwitz::DEFAULT_ORBIT_CAP)]
        cap: usize,
        /// Identify factorizations that differ by simultaneous conjugation.
        #[arg(long)]
        mod_conjugation: bool,
    },
    /// One elementary move.
    Move {
        #[command(flatten)]
        input: FactorizationInput,
        #[arg(long)]
        i: usize,
        /// "f" (forward) or "b" (backward).
        #[arg(long, default_value = "f")]
        dir: String,
    },
    /// Decides equivalence with a second factorization.
    Equiv {
        #[command(flatten)]
        input: FactorizationInput,
        #[arg(long)]
        other: PathBuf,
        #[arg(long, default_value_t = surfkit::hurwitz::DEFAULT_ORBIT_CAP)]
        cap: usize,
    },
    /// Path from the conjugate by the h-th factor back to the factorization.
    /// Prints a replay record.
    Auroux {
        #[command(flatten)]
        input: FactorizationInput,
        #[arg(long)]
        h: usize,
    },
    /// Re-executes a replay record {"start", "path", "end"} and checks the endpoint.
    Replay {
        #[command(flatten)]
        input: FactorizationInput,
    },
}

#[derive(Subcommand)]
pub enum OrbifoldCmd {
    /// Type of the triangle group (m1, m2, m3), with the order when elliptic.
    Classify { m1: u64, m2: u64, m3: u64 },
    /// Orbifold Euler number of a signature such as "(0; 5,5,5)".
    Euler { signature: String },
    /// Genus of a Galois cover with the given signature and group order.
    Genus {
        signature: String,
        #[arg(long)]
        order: u64,
    },
    /// e, χ and K² of a free quotient of a product of curves.
    Isogenous { g1: u64, g2: u64, order: u64 },
    /// Lower bound 4(g−1)(b−1) for the Euler number of a fibration.
    ZeuthenSegre { g: i64, b: i64 },
    /// Number of singular members of a Lefschetz pencil.
    Pencil {
        e_x: i64,
        e_y: i64,
        e_z: i64,
        #[arg(long, default_value_t = 2)]
        dim: u32,
    },
}

#[derive(Subcommand)]
pub enum BeauvilleCmd {
    /// Verifies a pair of generating pairs inside a group.
    Check {
        /// "sN" for the symmetric group, or "generated" for the group generated by all four elements.
        #[arg(long)]
        group: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        c: String,
        #[arg(long)]
        a2: String,
        #[arg(long)]
        c2: String,
        #[arg(long, default_value_t = 1_000_000)]
        cap: usize,
    },
    /// All structures on (Z/n)² up to automorphism.
    Search {
        n: u64,
        #[arg(long, default_value_t = surfkit::beauville::DEFAULT_ABELIAN_BOUND)]
        bound: u64,
    },
    /// Inner automorphism inverting both a and c, if any.
    Witness {
        #[arg(long)]
        a: String,
        #[arg(long)]
        c: String,
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long, default_value_t = surfkit::permgroup::DEFAULT_SCAN_DEGREE)]
        bound: usize,
    },
    /// Orders of a, b and c.
    Orders {
        #[arg(long)]
        a: String,
        #[arg(long)]
        c: String,
        #[arg(long)]
        degree: Option<usize>,
    },
}

#[derive(Subcommand)]
pub enum DynkinCmd {
    /// Classifies a configuration: ADE label, fundamental cycle and singularity data.
    Classify {
        /// JSON configuration {"count", "edges": [[i, j, mult], ...]}; standard input when omitted.
        #[arg(long, conflicts_with = "label")]
        file: Option<PathBuf>,
        /// Build the standard diagram for a label such as "E8" instead of reading a file.
        #[arg(long)]
        label: Option<String>,
    },
    /// Equation, Milnor number and automorphism group of a rational double point.
    Rdp { label: String },
}

#[derive(Subcommand)]
pub enum InvCmd {
    /// Bidouble cover of type (2a,2b),(2c,2d).
    Bidouble { a: u64, b: u64, c: u64, d: u64 },
    /// (a,b,c)-surface.
    Abc { a: u64, b: u64, c: u64 },
    /// Manetti surface with n triple points.
    Manetti { a: u64, b: u64, n: u64 },
    /// Family of h homeomorphic, pairwise non-diffeomorphic bidouble covers.
    Box {
        #[arg(long)]
        h: usize,
        /// Largest scaling factor tried.
        #[arg(long, default_value_t = 8)]
        bound: u64,
        /// Largest exponent n in 6^n.
        #[arg(long, default_value_t = 6)]
        max_exponent: u32,
    },
    /// Clause-by-clause check of the non-deformation hypotheses.
    Nondef { a: i64, b: i64, c: i64, k: i64 },
    /// m-th plurigenus χ + m(m−1)/2 K².
    Plurigenus {
        chi: i64,
        k2: i64,
        m: i64,
        /// Evaluate h⁰(5mK) instead.
        #[arg(long)]
        five_canonical: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: cannot configure {n} threads: {e}");
            return ExitCode::from(1);
        }
    }
    let result = match cli.command {
        Command::Perm(c) => commands::perm(c),
        Command::Braid(c) => commands::braid(c),
        Command::Hurwitz(c) => commands::hurwitz(c),
        Command::Orbifold(c) => commands::orbifold(c),
        Command::Beauville(c) => commands::beauville(c),
        Command::Dynkin(c) => commands::dynkin(c),
        Command::Inv(c) => commands::inv(c),
    };
    match result {
        Ok(report) => {
            print!("{}", report.render(cli.format));
            ExitCode::SUCCESS
        }
        Err(e @ commands::CliError::Usage(_)) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
        Err(e) => {
            eprintln!("error: {}: {}", e.name(), e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
