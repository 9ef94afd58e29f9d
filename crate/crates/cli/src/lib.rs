//! Command-line front end: parses tree files, runs the library and prints
//! JSON or text.

pub mod json;
pub mod treefile;

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::One;
use thiserror::Error;
use treegf_core::extremal::{
    make_family, phi1, phi2, phi3, phi4, verify_closed_forms, verify_confluence, verify_cor_3_9, verify_oracle,
    verify_theorem_1_1, verify_theorem_3_6, verify_theorem_3_7, FamilySpec, TransformReport, VerifyReport,
};
use treegf_core::{
    pair_gf, pair_profile, rooted_gf, rooted_profile, size_profile, total_gf, BigInt, Poly2, SubtreeProfile,
    VertexId, WeightMode,
};

use json::{CountJson, PolyJson, ProfileJson, TransformJson, VerifyJson};
use treefile::{ParseError, TreeFile};

/// Exit status for usage and input errors.
pub const EXIT_USAGE: i32 = 2;
/// Exit status for a verification that ran and failed.
pub const EXIT_FAILED: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Core(#[from] treegf_core::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Usage(String),
}

#[derive(Debug, Parser)]
#[command(name = "treegf", version, about = "Subtree generating functions and subtree counts of trees")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Vars {
    /// f = g = 1
    None,
    /// f = 1, g = x
    Edge,
    /// f = y, g = 1
    Vertex,
    /// f = y, g = x
    Both,
}

impl Vars {
    fn mode(self) -> WeightMode {
        match self {
            Vars::None => WeightMode::Unit,
            Vars::Edge => WeightMode::EdgeVar,
            Vars::Vertex => WeightMode::VertexVar,
            Vars::Both => WeightMode::Bivariate,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Path,
    Star,
    Broom,
    Tnd,
    Bnd,
    Caterpillar,
    Spider,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckName {
    Oracle,
    Theorem11,
    Theorem36,
    Theorem37,
    Cor39,
    Closedforms,
    Confluence,
}

#[derive(Debug, clap::Args)]
pub struct Input {
    /// Tree file; standard input when omitted.
    pub file: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, clap::Args)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    delta: Option<usize>,
    /// Pendant counts k_i..k_d of a caterpillar.
    #[arg(long, value_delimiter = ',')]
    ks: Option<Vec<usize>>,
    /// First spine vertex carrying pendants in a caterpillar.
    #[arg(long, default_value_t = 1)]
    i: usize,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Number of subtrees. Weights written in the file are applied, then
    /// x = y = 1.
    Count {
        #[command(flatten)]
        input: Input,
    },
    /// Generating function of all subtrees.
    Gf {
        #[command(flatten)]
        input: Input,
        /// Which defaults to use for weights missing from the file.
        #[arg(long, value_enum, default_value = "both")]
        vars: Vars,
    },
    /// Generating function of subtrees containing one vertex.
    Rooted {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        vertex: usize,
        #[arg(long, value_enum, default_value = "both")]
        vars: Vars,
    },
    /// Generating function of subtrees containing two vertices.
    Pair {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        v: usize,
        #[arg(long, value_enum, default_value = "both")]
        vars: Vars,
    },
    /// Subtree counts by number of edges (a) and of vertices (b).
    Profile {
        #[command(flatten)]
        input: Input,
        /// Only subtrees containing this vertex.
        #[arg(long, conflicts_with_all = ["u", "v"])]
        vertex: Option<usize>,
        /// Only subtrees containing --u and --v.
        #[arg(long, requires = "v")]
        u: Option<usize>,
        #[arg(long, requires = "u")]
        v: Option<usize>,
    },
    /// Prints a named tree as a tree file.
    Family(FamilyArgs),
    /// Applies one of the four moves and prints the new tree followed by a
    /// `# report:` comment line. Weights in the input are ignored.
    Transform {
        /// Tree file (moves 1, 2 and 4); standard input when omitted.
        file: Option<PathBuf>,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        phi: u8,
        #[arg(long)]
        u: Option<usize>,
        /// Branch roots: neighbors of --u whose sides are moved.
        #[arg(long, value_delimiter = ',')]
        branch: Option<Vec<usize>>,
        #[arg(long)]
        leg1: Option<usize>,
        #[arg(long)]
        leg2: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        i: Option<usize>,
        #[arg(long, value_delimiter = ',')]
        ks: Option<Vec<usize>>,
    },
    /// Runs an exhaustive or randomized check and prints a JSON report.
    /// Exits with 3 when the check fails.
    Verify {
        #[arg(long, value_enum)]
        check: CheckName,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        delta: Option<usize>,
        /// Spine vertex carrying the extra leaves of the theorem37 target.
        #[arg(long)]
        attach: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// What a command prints to standard output and how the process exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub exit: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, exit: 0 }
    }
}

fn read_input(file: &Option<PathBuf>) -> Result<TreeFile, CliError> {
    let text = match file {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    Ok(TreeFile::parse(&text)?)
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn poly_out(p: &Poly2, format: Format) -> String {
    match format {
        Format::Json => to_json(&PolyJson::from(p)),
        Format::Text => format!("{p}\n"),
    }
}

fn profile_out(p: &SubtreeProfile, format: Format) -> String {
    match format {
        Format::Json => to_json(&ProfileJson::from(p)),
        Format::Text => {
            let mut s = String::from("k\ta(k)\tb(k)\n");
            for k in 0..=p.edge_counts().len() {
                s.push_str(&format!("{k}\t{}\t{}\n", p.a(k), p.b(k)));
            }
            s
        }
    }
}

fn need<T>(value: Option<T>, flag: &str, what: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("{what} needs --{flag}")))
}

fn family_spec(args: FamilyArgs) -> Result<FamilySpec, CliError> {
    let FamilyArgs { kind, n, d, delta, ks, i, s, t } = args;
    let what = "this family";
    Ok(match kind {
        Kind::Path => FamilySpec::Path { n: need(n, "n", what)? },
        Kind::Star => FamilySpec::Star { n: need(n, "n", what)? },
        Kind::Broom => FamilySpec::Broom { n: need(n, "n", what)?, delta: need(delta, "delta", what)? },
        Kind::Tnd => FamilySpec::Tnd { n: need(n, "n", what)?, d: need(d, "d", what)? },
        Kind::Bnd => FamilySpec::Bnd { n: need(n, "n", what)?, d: need(d, "d", what)? },
        Kind::Caterpillar => FamilySpec::Caterpillar { d: need(d, "d", what)?, i, ks: need(ks, "ks", what)? },
        Kind::Spider => FamilySpec::Spider { n: need(n, "n", what)?, s: need(s, "s", what)?, t: need(t, "t", what)? },
    })
}

fn transform_out(report: &TransformReport) -> String {
    format!("{}# report: {}", TreeFile::from_tree(&report.after), to_json(&TransformJson::from(report)))
}

fn verify_out(report: &VerifyReport) -> Outcome {
    Outcome { stdout: to_json(&VerifyJson::from(report)), exit: if report.passed { 0 } else { EXIT_FAILED } }
}

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Count { input } => {
            let file = read_input(&input.file)?;
            let gf = total_gf(&file.weighted(WeightMode::Unit));
            let count = gf.eval(&BigInt::one(), &BigInt::one());
            Ok(Outcome::ok(match input.format {
                Format::Json => to_json(&CountJson::from(&count)),
                Format::Text => format!("{count}\n"),
            }))
        }
        Command::Gf { input, vars } => {
            let file = read_input(&input.file)?;
            Ok(Outcome::ok(poly_out(&total_gf(&file.weighted(vars.mode())), input.format)))
        }
        Command::Rooted { input, vertex, vars } => {
            let file = read_input(&input.file)?;
            let p = rooted_gf(&file.weighted(vars.mode()), VertexId(vertex))?;
            Ok(Outcome::ok(poly_out(&p, input.format)))
        }
        Command::Pair { input, u, v, vars } => {
            let file = read_input(&input.file)?;
            let p = pair_gf(&file.weighted(vars.mode()), VertexId(u), VertexId(v))?;
            Ok(Outcome::ok(poly_out(&p, input.format)))
        }
        Command::Profile { input, vertex, u, v } => {
            let file = read_input(&input.file)?;
            let tree = file.shape();
            let profile = match (vertex, u, v) {
                (Some(r), _, _) => rooted_profile(tree, VertexId(r))?,
                (None, Some(a), Some(b)) => pair_profile(tree, VertexId(a), VertexId(b))?,
                _ => size_profile(tree),
            };
            Ok(Outcome::ok(profile_out(&profile, input.format)))
        }
        Command::Family(args) => {
            let spec = family_spec(args)?;
            Ok(Outcome::ok(TreeFile::from_tree(&make_family(&spec)?).to_string()))
        }
        Command::Transform { file, phi, u, branch, leg1, leg2, d, i, ks } => {
            let report = if phi == 3 {
                let what = "--phi 3";
                phi3(&FamilySpec::Caterpillar { d: need(d, "d", what)?, i: need(i, "i", what)?, ks: need(ks, "ks", what)? })?
            } else {
                let input = read_input(&file)?;
                let tree = input.shape();
                let what = format!("--phi {phi}");
                let u = VertexId(need(u, "u", &what)?);
                match phi {
                    1 | 2 => {
                        let roots: Vec<VertexId> = need(branch, "branch", &what)?.into_iter().map(VertexId).collect();
                        if phi == 1 {
                            phi1(tree, u, &roots)?
                        } else {
                            phi2(tree, u, &roots)?
                        }
                    }
                    _ => phi4(tree, u, VertexId(need(leg1, "leg1", &what)?), VertexId(need(leg2, "leg2", &what)?))?,
                }
            };
            Ok(Outcome::ok(transform_out(&report)))
        }
        Command::Verify { check, n, d, delta, attach, seed } => {
            let report = match check {
                CheckName::Oracle => verify_oracle(n)?,
                CheckName::Theorem11 => verify_theorem_1_1(n)?,
                CheckName::Theorem36 => verify_theorem_3_6(n, delta)?,
                CheckName::Theorem37 => verify_theorem_3_7(n, d, attach)?,
                CheckName::Cor39 => verify_cor_3_9(n)?,
                CheckName::Closedforms => verify_closed_forms(n)?,
                CheckName::Confluence => verify_confluence(n, seed)?,
            };
            Ok(verify_out(&report))
        }
    }
}

/// Sizes the global thread pool from `TREEGF_THREADS` (unset or 0 means
/// automatic).
pub fn configure_threads(value: Option<&str>) -> Result<(), CliError> {
    let Some(raw) = value else { return Ok(()) };
    let threads: usize = raw
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("TREEGF_THREADS must be a non-negative integer, got {raw:?}")))?;
    if threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| CliError::Usage(format!("cannot size the thread pool: {e}")))?;
    }
    Ok(())
}
