//! Command-line surface over the frame library.
//!
//! Exit codes are part of the scripting interface:
//!   0  success (and `feasible`: Exists)
//!   1  `verify`: the file parsed but is not a frame
//!   2  `feasible`: Impossible
//!   3  `feasible`: Unknown
//!   4  infeasible or invalid construction parameters
//!   5  unsupported Hadamard order
//!   6  file read/parse error
//!  64  usage error

mod format;

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use format::{FrameFile, Metadata};
use intframe::analysis::{self, FrameReport};
use intframe::constructors::{self, AlmostTightRequest, ThreeDimFamily};
use intframe::feasibility::{self, FeasibilityStatus};
use intframe::numtheory;
use intframe::{FrameError, FrameMatrix, Int};

const EXIT_NOT_A_FRAME: i32 = 1;
const EXIT_IMPOSSIBLE: i32 = 2;
const EXIT_UNKNOWN: i32 = 3;
const EXIT_INFEASIBLE: i32 = 4;
const EXIT_UNSUPPORTED_ORDER: i32 = 5;
const EXIT_PARSE: i32 = 6;
const EXIT_USAGE: i32 = 64;

#[derive(Parser)]
#[command(
    name = "intframe",
    version,
    about = "Construct, verify and classify equal-norm tight integer frames"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a frame, re-verify it exactly, and write it as a frame file
    Construct(ConstructArgs),
    /// Read a frame file (JSON or CSV) and print its exact report
    Verify {
        file: PathBuf,
        /// Also compute the spark (exponential in the worst case)
        #[arg(long)]
        spark: bool,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether an equal-norm tight integer frame of this size exists
    Feasible {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        json: bool,
    },
    /// Emit a Hadamard matrix of the given order as a frame file
    Hadamard {
        #[arg(long)]
        order: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Combine frame files: column adjoin, block diagonal, or doubling
    Adjoin {
        #[arg(value_enum)]
        mode: AdjoinMode,
        left: PathBuf,
        /// Second operand (required for h and diag)
        right: Option<PathBuf>,
        /// Nonzero scalar for the doubling mode
        #[arg(long = "param-c", default_value_t = 1)]
        c: i64,
        #[arg(long)]
        spark: bool,
        #[arg(long)]
        json: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum AdjoinMode {
    /// Column concatenation [A, B]
    H,
    /// Block diagonal diag(A, B)
    Diag,
    /// [[cA, cA], [cA, -cA]]
    Double,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    /// Full-spark 2 x count frame from two-square representations
    TwoDim,
    /// 3 x count frame from identity or Hadamard blocks
    ThreeDim,
    /// dim x (dim+1) simplex frame
    Simplex,
    /// First dim rows of a Hadamard matrix
    HadamardTruncate,
    #[value(name = "gensqr-1")]
    Gensqr1,
    #[value(name = "gensqr-2")]
    Gensqr2,
    #[value(name = "gensqr-3")]
    Gensqr3,
    #[value(name = "gensqr-4")]
    Gensqr4,
    #[value(name = "gensqr-5")]
    Gensqr5,
    /// One of the two five-dimensional even blocks (5x8 or 5x10)
    Dim5Even,
    /// Coin-problem adjunction of two frame files
    GcdAdjoin,
    /// Equal-norm frame for any count >= dim
    EqualNorm,
    /// Tight frame for any count >= dim
    Tight,
    /// Full-spark equal-norm nearly tight frame
    AlmostTight,
    /// Sylvester Hadamard matrix (order a power of two)
    Sylvester,
    /// Paley I Hadamard matrix (order q+1, q prime, q = 3 mod 4)
    Paley,
}

#[derive(Clone, Copy, ValueEnum)]
enum BlockSide {
    A,
    B,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(value_enum)]
    kind: Kind,
    #[arg(long)]
    dim: Option<usize>,
    #[arg(long)]
    count: Option<usize>,
    /// three-dim family: 3 or 4
    #[arg(long)]
    family: Option<u8>,
    #[arg(long)]
    order: Option<u64>,
    /// Block parameter N for the gensqr families
    #[arg(long)]
    n: Option<usize>,
    #[arg(long = "param-a", default_value_t = 1)]
    a: i64,
    #[arg(long = "param-b", default_value_t = 1)]
    b: i64,
    /// Which dim5-even block to emit
    #[arg(long, value_enum, default_value_t = BlockSide::A)]
    block: BlockSide,
    /// Left operand file for gcd-adjoin
    #[arg(long)]
    left: Option<PathBuf>,
    /// Right operand file for gcd-adjoin
    #[arg(long)]
    right: Option<PathBuf>,
    #[arg(long)]
    epsilon: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Denominator budget for almost-tight
    #[arg(long, default_value_t = 1 << 24)]
    budget: u64,
    #[arg(long)]
    spark: bool,
    #[arg(long)]
    json: bool,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(cli));
}

fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Construct(args) => cmd_construct(args),
        Command::Verify { file, spark, json } => cmd_verify(&file, spark, json),
        Command::Feasible { dim, count, json } => cmd_feasible(dim, count, json),
        Command::Hadamard { order, output } => cmd_hadamard(order, output.as_deref()),
        Command::Adjoin {
            mode,
            left,
            right,
            c,
            spark,
            json,
            output,
        } => cmd_adjoin(mode, &left, right.as_deref(), c, spark, json, output.as_deref()),
    }
}

fn error_exit(err: &FrameError) -> i32 {
    match err {
        FrameError::UnsupportedHadamardOrder(_) => EXIT_UNSUPPORTED_ORDER,
        _ => EXIT_INFEASIBLE,
    }
}

fn usage(msg: &str) -> i32 {
    eprintln!("usage error: {msg}");
    EXIT_USAGE
}

fn cmd_construct(args: ConstructArgs) -> i32 {
    let built = match build(&args) {
        Ok(b) => b,
        Err(BuildError::Usage(msg)) => return usage(&msg),
        Err(BuildError::Parse(msg)) => {
            eprintln!("error: {msg}");
            return EXIT_PARSE;
        }
        Err(BuildError::Frame(e)) => {
            eprintln!("error: {e}");
            return error_exit(&e);
        }
    };
    let report = analysis::analyze(&built.matrix, args.spark);
    emit_frame(&built, &report, args.json, args.output.as_deref())
}

struct Built {
    matrix: FrameMatrix,
    recipe: &'static str,
    parameters: BTreeMap<String, String>,
    scale: Option<Int>,
}

enum BuildError {
    Usage(String),
    Parse(String),
    Frame(FrameError),
}

impl From<FrameError> for BuildError {
    fn from(e: FrameError) -> Self {
        BuildError::Frame(e)
    }
}

fn build(args: &ConstructArgs) -> Result<Built, BuildError> {
    let need_dim = || {
        args.dim
            .ok_or_else(|| BuildError::Usage("--dim is required for this kind".into()))
    };
    let need_count = || {
        args.count
            .ok_or_else(|| BuildError::Usage("--count is required for this kind".into()))
    };
    let mut parameters = BTreeMap::new();
    let mut scale = None;
    let (matrix, recipe): (FrameMatrix, &'static str) = match args.kind {
        Kind::TwoDim => {
            let count = need_count()?;
            if count == 0 || count % 2 != 0 {
                return Err(BuildError::Usage(
                    "two-dim frames need an even positive --count".into(),
                ));
            }
            parameters.insert("count".into(), count.to_string());
            (constructors::entif_2d(count / 2)?, "two-dim")
        }
        Kind::ThreeDim => {
            let count = need_count()?;
            let family = match args.family {
                Some(f) => f,
                None if count % 3 == 0 => 3,
                None if count % 4 == 0 => 4,
                None => {
                    return Err(BuildError::Usage(
                        "--count must be divisible by 3 or 4 (or pass --family)".into(),
                    ))
                }
            };
            let fam = match family {
                3 => ThreeDimFamily::TimesThree,
                4 => ThreeDimFamily::TimesFour,
                _ => return Err(BuildError::Usage("--family must be 3 or 4".into())),
            };
            if count == 0 || count % family as usize != 0 {
                return Err(BuildError::Usage(
                    "--count must be a positive multiple of the family".into(),
                ));
            }
            parameters.insert("count".into(), count.to_string());
            parameters.insert("family".into(), family.to_string());
            (constructors::entif_3d(count / family as usize, fam)?, "three-dim")
        }
        Kind::Simplex => {
            let dim = need_dim()?;
            parameters.insert("dim".into(), dim.to_string());
            let (frame, cert) = constructors::simplex_entif(dim)?;
            scale = Some(cert.result.scale.clone());
            (frame, "simplex")
        }
        Kind::HadamardTruncate => {
            let dim = need_dim()?;
            let order = args
                .order
                .ok_or_else(|| BuildError::Usage("--order is required".into()))?;
            parameters.insert("dim".into(), dim.to_string());
            parameters.insert("order".into(), order.to_string());
            (constructors::hadamard_entif(dim, order)?, "hadamard-truncate")
        }
        Kind::Gensqr1 | Kind::Gensqr2 | Kind::Gensqr3 | Kind::Gensqr4 | Kind::Gensqr5 => {
            let family = match args.kind {
                Kind::Gensqr1 => 1u8,
                Kind::Gensqr2 => 2,
                Kind::Gensqr3 => 3,
                Kind::Gensqr4 => 4,
                _ => 5,
            };
            let n = args.n.unwrap_or(1);
            parameters.insert("family".into(), family.to_string());
            parameters.insert("n".into(), n.to_string());
            parameters.insert("b".into(), args.b.to_string());
            let recipe: &'static str = match family {
                1 => "gensqr-1",
                2 => "gensqr-2",
                3 => "gensqr-3",
                4 => "gensqr-4",
                _ => "gensqr-5",
            };
            (constructors::gensqr(family, n, args.b)?, recipe)
        }
        Kind::Dim5Even => {
            parameters.insert("a".into(), args.a.to_string());
            let (block_a, block_b) = constructors::dim5_even_blocks(args.a)?;
            match args.block {
                BlockSide::A => {
                    parameters.insert("block".into(), "a".into());
                    (block_a, "dim5-even")
                }
                BlockSide::B => {
                    parameters.insert("block".into(), "b".into());
                    (block_b, "dim5-even")
                }
            }
        }
        Kind::GcdAdjoin => {
            let count = need_count()?;
            let left_path = args
                .left
                .as_ref()
                .ok_or_else(|| BuildError::Usage("--left frame file is required".into()))?;
            let right_path = args
                .right
                .as_ref()
                .ok_or_else(|| BuildError::Usage("--right frame file is required".into()))?;
            let left = format::read_frame(left_path).map_err(BuildError::Parse)?;
            let right = format::read_frame(right_path).map_err(BuildError::Parse)?;
            parameters.insert("count".into(), count.to_string());
            parameters.insert("left".into(), left_path.display().to_string());
            parameters.insert("right".into(), right_path.display().to_string());
            (constructors::gcd_adjoin(&left, &right, count as u64)?, "gcd-adjoin")
        }
        Kind::EqualNorm => {
            let (dim, count) = (need_dim()?, need_count()?);
            parameters.insert("dim".into(), dim.to_string());
            parameters.insert("count".into(), count.to_string());
            (constructors::equal_norm_any(dim, count)?, "equal-norm")
        }
        Kind::Tight => {
            let (dim, count) = (need_dim()?, need_count()?);
            parameters.insert("dim".into(), dim.to_string());
            parameters.insert("count".into(), count.to_string());
            (constructors::tight_any(dim, count)?, "tight")
        }
        Kind::AlmostTight => {
            let (dim, count) = (need_dim()?, need_count()?);
            let epsilon = args.epsilon.unwrap_or(0.25);
            parameters.insert("dim".into(), dim.to_string());
            parameters.insert("count".into(), count.to_string());
            parameters.insert("epsilon".into(), epsilon.to_string());
            parameters.insert("seed".into(), args.seed.to_string());
            let req = AlmostTightRequest {
                dim,
                count,
                epsilon,
                seed: args.seed,
                denominator_budget: args.budget,
            };
            let out = constructors::almost_tight(&req)?;
            eprintln!(
                "almost-tight: normalized bounds [{:.9}, {:.9}], target {:.9}",
                out.lower, out.upper, out.target
            );
            scale = Some(out.scale.clone());
            (out.matrix, "almost-tight")
        }
        Kind::Sylvester => {
            let order = args
                .order
                .ok_or_else(|| BuildError::Usage("--order is required".into()))?;
            parameters.insert("order".into(), order.to_string());
            (numtheory::sylvester_hadamard(order)?, "sylvester")
        }
        Kind::Paley => {
            let order = args
                .order
                .ok_or_else(|| BuildError::Usage("--order is required".into()))?;
            parameters.insert("order".into(), order.to_string());
            (numtheory::paley_hadamard(order)?, "paley")
        }
    };
    Ok(Built {
        matrix,
        recipe,
        parameters,
        scale,
    })
}

/// Print the report, then write the frame file to `-o` (or stdout when no
/// output path was given, with the report redirected to stderr).
fn emit_frame(built: &Built, report: &FrameReport, json: bool, output: Option<&Path>) -> i32 {
    let metadata = Metadata {
        recipe: built.recipe.to_string(),
        parameters: built.parameters.clone(),
        scale: built.scale.as_ref().map(|s| s.to_string()),
    };
    let line = if json {
        format::report_json(report)
    } else {
        format!("{}\n", format::report_line(report))
    };
    match output {
        Some(path) => {
            let payload = if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv")) {
                format::matrix_to_csv(&built.matrix)
            } else {
                FrameFile::from_matrix(&built.matrix, Some(metadata)).to_json()
            };
            if let Err(e) = std::fs::write(path, payload) {
                eprintln!("error: {}: {e}", path.display());
                return EXIT_PARSE;
            }
            print!("{line}");
        }
        None => {
            eprint!("{line}");
            print!(
                "{}",
                FrameFile::from_matrix(&built.matrix, Some(metadata)).to_json()
            );
        }
    }
    0
}

fn cmd_verify(file: &Path, spark: bool, json: bool) -> i32 {
    let matrix = match format::read_frame(file) {
        Ok(m) => m,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_PARSE;
        }
    };
    let report = analysis::analyze(&matrix, spark);
    if json {
        print!("{}", format::report_json(&report));
    } else {
        println!("{}", format::report_line(&report));
    }
    if report.is_frame {
        0
    } else {
        EXIT_NOT_A_FRAME
    }
}

fn cmd_feasible(dim: usize, count: usize, json: bool) -> i32 {
    if dim == 0 {
        return usage("--dim must be positive");
    }
    if count < dim {
        return usage("--count must be at least --dim");
    }
    let verdict = match feasibility::entif_feasible(dim, count) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e}");
            return error_exit(&e);
        }
    };
    let status = match verdict.status {
        FeasibilityStatus::Exists => "exists",
        FeasibilityStatus::Impossible => "impossible",
        FeasibilityStatus::Unknown => "unknown",
    };
    let witness = verdict.witness.as_ref().map(|w| w.describe());
    if json {
        let body = serde_json::json!({
            "dim": dim,
            "count": count,
            "status": status,
            "citation": verdict.citation,
            "witness": witness,
        });
        println!("{}", serde_json::to_string_pretty(&body).expect("verdict serializes"));
    } else {
        match &witness {
            Some(w) => println!("{status}: {} [witness: {w}]", verdict.citation),
            None => println!("{status}: {}", verdict.citation),
        }
    }
    match verdict.status {
        FeasibilityStatus::Exists => 0,
        FeasibilityStatus::Impossible => EXIT_IMPOSSIBLE,
        FeasibilityStatus::Unknown => EXIT_UNKNOWN,
    }
}

fn cmd_hadamard(order: u64, output: Option<&Path>) -> i32 {
    let h = match numtheory::hadamard(order) {
        Ok(h) => h,
        Err(e) => {
            eprintln!("error: {e}");
            return error_exit(&e);
        }
    };
    let mut parameters = BTreeMap::new();
    parameters.insert("order".into(), order.to_string());
    let built = Built {
        matrix: h,
        recipe: "hadamard",
        parameters,
        scale: None,
    };
    let report = analysis::analyze(&built.matrix, false);
    emit_frame(&built, &report, false, output)
}

fn cmd_adjoin(
    mode: AdjoinMode,
    left: &Path,
    right: Option<&Path>,
    c: i64,
    spark: bool,
    json: bool,
    output: Option<&Path>,
) -> i32 {
    let a = match format::read_frame(left) {
        Ok(m) => m,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_PARSE;
        }
    };
    let need_right = || -> Result<FrameMatrix, i32> {
        let path = right.ok_or_else(|| usage("this adjoin mode needs two frame files"))?;
        format::read_frame(path).map_err(|e| {
            eprintln!("error: {e}");
            EXIT_PARSE
        })
    };
    let mut parameters = BTreeMap::new();
    parameters.insert("left".into(), left.display().to_string());
    if let Some(r) = right {
        parameters.insert("right".into(), r.display().to_string());
    }
    let result = match mode {
        AdjoinMode::H => match need_right() {
            Ok(b) => constructors::hadjoin(&a, &b),
            Err(code) => return code,
        },
        AdjoinMode::Diag => match need_right() {
            Ok(b) => Ok(constructors::diag_adjoin(&a, &b)),
            Err(code) => return code,
        },
        AdjoinMode::Double => {
            parameters.insert("c".into(), c.to_string());
            constructors::double(&a, &Int::from(c))
        }
    };
    let matrix = match result {
        Ok(m) => m,
        Err(e) => {
            eprintln!("error: {e}");
            return error_exit(&e);
        }
    };
    let recipe = match mode {
        AdjoinMode::H => "adjoin-h",
        AdjoinMode::Diag => "adjoin-diag",
        AdjoinMode::Double => "adjoin-double",
    };
    let built = Built {
        matrix,
        recipe,
        parameters,
        scale: None,
    };
    let report = analysis::analyze(&built.matrix, spark);
    emit_frame(&built, &report, json, output)
}
