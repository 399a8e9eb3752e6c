mod artifacts;
mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "artin", version, about = "Exact induction certificates and explicit analytic bounds")]
struct Cli {
    /// Largest group whose elements may be listed.
    #[arg(long, global = true, default_value_t = 10_000)]
    max_elements: usize,
    /// Largest group whose subgroup lattice may be enumerated.
    #[arg(long, global = true, default_value_t = 2_000)]
    max_lattice: usize,
    /// Largest number of integers an analytic sum may visit.
    #[arg(long, global = true, default_value_t = 10_000_000)]
    budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the character table of a group.
    Table {
        group: String,
        #[arg(long)]
        json: bool,
    },
    /// Solve and verify an induction certificate for one irreducible.
    Certify(CertifyArgs),
    /// Check the induction hypothesis for every nontrivial normal subgroup.
    VerifyTgn(VerifyTgnArgs),
    /// Faithful irreducibles as combinations of characters induced from
    /// nilpotent subgroups, with certificates.
    #[command(name = "verify-faithful", alias = "verify-thm13")]
    VerifyFaithful(VerifyFaithfulArgs),
    /// Check the Mackey formula on random pairs of monomial characters.
    Mackey(MackeyArgs),
    /// Scan prime sums of a Dirichlet character against the envelope.
    ScanBad(ScanArgs),
    /// Evaluate one of the explicit bound formulas.
    Bounds(BoundsArgs),
    /// Bilinear sums over primitive characters against the bounds.
    Bilinear(BilinearArgs),
    /// Run every check over the reference catalog.
    Suite(SuiteArgs),
}

#[derive(Args, Debug)]
struct CertifyArgs {
    group: String,
    /// Irreducible character, 1-based in table order.
    #[arg(long = "char", default_value_t = 1)]
    character: usize,
    /// Subgroup family: all, cyclic, nilpotent, elementary or rank2.
    #[arg(long, default_value = "nilpotent")]
    family: String,
    /// Kernel constraints: minimal (minimal normal subgroups) or none.
    #[arg(long, default_value = "minimal")]
    normals: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyTgnArgs {
    group: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyFaithfulArgs {
    group: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct MackeyArgs {
    group: String,
    #[arg(long, default_value_t = 20)]
    pairs: usize,
    #[arg(long, default_value_t = artin_core::suite::SUITE_SEED)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ScanArgs {
    /// Modulus of the character.
    #[arg(long = "mod")]
    modulus: u64,
    /// Which primitive character of that modulus, 1-based.
    #[arg(long = "char", default_value_t = 1)]
    character: usize,
    #[arg(long, default_value_t = 0.5)]
    eps: f64,
    /// Discriminant of the field cut out by the character.
    #[arg(long)]
    disc: f64,
    /// Grid `a:b:step`; `gate` as the start means the smallest admissible H.
    #[arg(long)]
    grid: String,
    /// Scan `π(H)` instead, a sum with no cancellation.
    #[arg(long)]
    synthetic: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    #[arg(long)]
    which: String,
    #[arg(long, default_value_t = 0.5)]
    eps: f64,
    #[arg(long = "degK", default_value_t = 1)]
    deg_k: u64,
    #[arg(long, default_value_t = 1.0)]
    n: f64,
    #[arg(long, default_value_t = 1.0)]
    d: f64,
    #[arg(long = "Q", default_value_t = 100.0)]
    q: f64,
    #[arg(long = "H", default_value_t = 100.0)]
    h: f64,
    #[arg(long = "M", default_value_t = 100.0)]
    m: f64,
    /// Natural logarithms, overriding --Q, --H and --M for huge values.
    #[arg(long)]
    log_q: Option<f64>,
    #[arg(long)]
    log_h: Option<f64>,
    #[arg(long)]
    log_m: Option<f64>,
    #[arg(long, default_value_t = 1.0)]
    t: f64,
    #[arg(long, default_value_t = 0.25)]
    delta: f64,
    #[arg(long, default_value_t = 0.75)]
    sigma: f64,
    #[arg(long, default_value_t = 0.75)]
    sigma0: f64,
    #[arg(long = "S", default_value_t = 1.0)]
    s_count: f64,
    #[arg(long, default_value_t = 1.0)]
    r: f64,
    #[arg(long, default_value_t = 0.0)]
    log_delta_f: f64,
    #[arg(long, default_value_t = 1e6)]
    disc: f64,
    #[arg(long, default_value_t = 1.0)]
    field_degree: f64,
    #[arg(long, default_value_t = 1.0)]
    a_l1: f64,
    #[arg(long, default_value_t = 1.0)]
    e_sum: f64,
    #[arg(long, default_value_t = 100.0)]
    e_count: f64,
    #[arg(long, default_value_t = 1.0)]
    a0t: f64,
}

#[derive(Args, Debug)]
struct BilinearArgs {
    /// Comma-separated moduli; every primitive character of each is used.
    #[arg(long, value_delimiter = ',')]
    mods: Vec<u64>,
    #[arg(long = "H")]
    h: f64,
    /// Comma-separated coefficients, one per character; all 1 by default.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    coefficients: Option<Vec<f64>>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SuiteArgs {
    #[arg(long)]
    out: PathBuf,
    #[arg(long, default_value_t = artin_core::suite::SUITE_SEED)]
    seed: u64,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

/// Outcome of a command: whether every verdict passed.
pub enum Verdict {
    Pass,
    Fail,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let limits = artin_core::Limits {
        elements: cli.max_elements,
        subgroup_lattice: cli.max_lattice,
        enumeration_budget: cli.budget,
    };
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let result = match cli.command {
        Command::Table { group, json } => commands::table(&group, json, limits),
        Command::Certify(a) => commands::certify(a, limits, &argv),
        Command::VerifyTgn(a) => commands::verify_tgn(a, limits, &argv),
        Command::VerifyFaithful(a) => commands::verify_faithful(a, limits, &argv),
        Command::Mackey(a) => commands::mackey(a, limits, &argv),
        Command::ScanBad(a) => commands::scan_bad(a, limits, &argv),
        Command::Bounds(a) => commands::bounds(a),
        Command::Bilinear(a) => commands::bilinear(a, limits, &argv),
        Command::Suite(a) => commands::suite(a, limits, &argv),
    };
    match result {
        Ok(Verdict::Pass) => ExitCode::SUCCESS,
        Ok(Verdict::Fail) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            match e.downcast_ref::<artin_core::Error>() {
                Some(artin_core::Error::Falsification(_)) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
