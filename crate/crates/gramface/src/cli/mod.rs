//! The command-line surface: `mtable`, `space`, `macaulay`, `enumerate-ss`,
//! `verify`, and `conjecture`.
//!
//! Exit status contract: 0 = all passed/complete, 1 = usage or parse error,
//! 2 = incomplete (work budget exceeded), 3 = mismatch or counterexample.
//! Primary output goes to stdout and is byte-identical for identical
//! arguments and seed, at any parallelism; timings go to stderr.

mod golden;

pub use golden::golden_value;

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num::BigUint;

use crate::formspace::face_dimension;
use crate::harness::{self, conjecture_mkkk, example_gallery, registered_checks, CheckParams};
use crate::hilbert::{base_point_certificate, hilbert_table, BasePointVerdict, BasePointWitness};
use crate::interchange;
use crate::macaulay::{green_restriction_bound, macaulay_growth_bound, macaulay_rep};
use crate::monomial::dim_forms;
use crate::stable::{enumerate_stable_complements, m_table, MCell};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INCOMPLETE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Parser)]
#[command(
    name = "gramface",
    version,
    about = "Exact bounds for face dimensions of Gram spectrahedra",
    disable_help_subcommand = true
)]
struct Cli {
    /// Worker threads (0 = all cores); results are identical at any setting.
    #[arg(long, global = true, default_value_t = 0)]
    parallelism: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tables of the maximal square codimension m(n, d, k)
    Mtable(MtableArgs),
    /// Full report on a subspace interchange file
    Space(SpaceArgs),
    /// Macaulay representation calculus
    Macaulay(MacaulayArgs),
    /// Enumerate strongly stable complements of a given size
    EnumerateSs(EnumerateArgs),
    /// Run a registered check, or `gallery` for the worked examples
    Verify(VerifyArgs),
    /// Observed values of m(k,k,k) and m(3k,k,k) next to their conjectured
    /// closed forms
    Conjecture(ConjectureArgs),
}

/// An inclusive range: `4` or `2..9`.
#[derive(Clone, Debug)]
struct RangeArg(Vec<u32>);

impl FromStr for RangeArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| -> Result<u32, String> {
            t.trim()
                .parse()
                .map_err(|_| format!("`{t}` is not a number"))
        };
        if let Some((lo, hi)) = s.split_once("..") {
            let lo = parse(lo)?;
            let hi = parse(hi.strip_prefix('=').unwrap_or(hi))?;
            if lo > hi {
                return Err(format!("empty range `{s}`"));
            }
            Ok(RangeArg((lo..=hi).collect()))
        } else {
            Ok(RangeArg(vec![parse(s)?]))
        }
    }
}

#[derive(Args)]
struct MtableArgs {
    /// Variable counts, e.g. `4` or `3..6`
    #[arg(long, default_value = "3..6")]
    n: RangeArg,
    /// Degrees, e.g. `2..9`
    #[arg(long, default_value = "2..9")]
    d: RangeArg,
    /// Codimensions, e.g. `1..9`
    #[arg(long, default_value = "1..9")]
    k: RangeArg,
    /// Output format
    #[arg(long, default_value = "markdown", value_parser = ["markdown", "csv"])]
    format: String,
    /// Emit each maximizing complement
    #[arg(long)]
    witnesses: bool,
    /// Diff against the embedded reference table; exit 3 on mismatch
    #[arg(long)]
    check_paper: bool,
    /// Work budget per cell in candidate-times-ambient units; exceeded cells
    /// are reported as not computed and the run exits 2
    #[arg(long)]
    budget: Option<u64>,
    /// Write the table here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SpaceArgs {
    /// Subspace interchange file
    file: PathBuf,
    /// Hilbert truncation degree (default 2d + 2)
    #[arg(long)]
    t_bound: Option<u32>,
}

#[derive(Args)]
struct MacaulayArgs {
    #[command(subcommand)]
    op: MacaulayOp,
}

#[derive(Subcommand)]
enum MacaulayOp {
    /// The degree-d Macaulay representation of a
    Rep { a: BigUint, d: u32 },
    /// The shifted sum with tops offset by s and bottoms by t (s <= t)
    Shift { a: BigUint, d: u32, s: i64, t: i64 },
    /// Largest possible next Hilbert value after h in degree i
    Growth { h: BigUint, i: u32 },
    /// Largest possible generic hyperplane restriction of h in degree d
    Green { h: BigUint, d: u32 },
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    d: u32,
    #[arg(long)]
    k: usize,
    /// Append the square codimension of each complement
    #[arg(long)]
    values: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Registered check id, or `gallery`
    check: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    d: Option<u32>,
    #[arg(long)]
    k: Option<usize>,
    /// Variable cut for var-reduction
    #[arg(long)]
    m: Option<usize>,
    /// Lift levels for lift-formula
    #[arg(long)]
    levels: Option<usize>,
    #[arg(long)]
    trials: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
    /// Coefficient height for random instances
    #[arg(long)]
    height: Option<i64>,
    /// Hilbert truncation override
    #[arg(long)]
    t_bound: Option<u32>,
    /// Genericity retry budget
    #[arg(long)]
    genericity_budget: Option<u32>,
    /// Directory for persisted failing instances
    #[arg(long)]
    artifacts_dir: Option<PathBuf>,
    /// Output format
    #[arg(long, default_value = "text", value_parser = ["text", "records"])]
    format: String,
}

#[derive(Args)]
struct ConjectureArgs {
    /// Largest k to test
    #[arg(long, default_value_t = 4)]
    k_max: usize,
    /// Work budget per table cell; exceeded cells report `not computed`
    #[arg(long, default_value_t = 2_000_000_000)]
    budget: u64,
}

/// Parses and runs; returns the process exit code.
pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version are successes; everything else is usage.
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.parallelism)
        .build();
    let pool = match pool {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let result = pool.install(|| dispatch(cli.command));
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: Command) -> Result<i32, Error> {
    match command {
        Command::Mtable(args) => cmd_mtable(args),
        Command::Space(args) => cmd_space(args),
        Command::Macaulay(args) => cmd_macaulay(args),
        Command::EnumerateSs(args) => cmd_enumerate(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Conjecture(args) => cmd_conjecture(args),
    }
}

fn validate_caps(n: &[u32], d: &[u32], k: &[u32]) -> Result<(), Error> {
    let bad = |msg: &str| Err(Error::InvalidArgument(msg.into()));
    if n.iter().any(|&v| !(1..=16).contains(&v)) {
        return bad("variable counts must lie in 1..=16");
    }
    if d.iter().any(|&v| !(1..=12).contains(&v)) {
        return bad("degrees must lie in 1..=12");
    }
    if k.iter().any(|&v| v > 10_000) {
        return bad("codimensions must lie in 0..=10000");
    }
    Ok(())
}

fn csv_quote(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

fn cmd_mtable(args: MtableArgs) -> Result<i32, Error> {
    validate_caps(&args.n.0, &args.d.0, &args.k.0)?;
    let n_values: Vec<usize> = args.n.0.iter().map(|&v| v as usize).collect();
    let d_values: Vec<u32> = args.d.0.clone();
    let k_values: Vec<usize> = args.k.0.iter().map(|&v| v as usize).collect();
    let started = std::time::Instant::now();
    let table = m_table(&n_values, &d_values, &k_values, args.budget);
    let mut out = String::new();
    if args.format == "csv" {
        out.push_str("n,d,k,value,witness\n");
        for &n in &n_values {
            for &d in &d_values {
                for &k in &k_values {
                    let (value, witness) = match table.cell(n, d, k) {
                        Some(MCell::Computed { value, witness }) => {
                            let members: Vec<String> =
                                witness.members().iter().map(ToString::to_string).collect();
                            (value.to_string(), members.join(", "))
                        }
                        Some(MCell::Infeasible) => ("-".into(), String::new()),
                        Some(MCell::NotComputed { .. }) | None => {
                            ("not computed".into(), String::new())
                        }
                    };
                    let witness = if args.witnesses {
                        witness
                    } else {
                        String::new()
                    };
                    out.push_str(&format!(
                        "{n},{d},{k},{},{}\n",
                        csv_quote(&value),
                        csv_quote(&witness)
                    ));
                }
            }
        }
    } else {
        for &n in &n_values {
            out.push_str(&format!("# m(n, d, k) for n = {n}\n\n"));
            out.push_str("| codim U \\ d |");
            for &d in &d_values {
                out.push_str(&format!(" {d} |"));
            }
            out.push('\n');
            out.push_str("|---|");
            for _ in &d_values {
                out.push_str("---|");
            }
            out.push('\n');
            for &k in &k_values {
                out.push_str(&format!("| {k} |"));
                for &d in &d_values {
                    let cell = match table.cell(n, d, k) {
                        Some(MCell::Computed { value, .. }) => value.to_string(),
                        Some(MCell::Infeasible) => "-".into(),
                        _ => "?".into(),
                    };
                    out.push_str(&format!(" {cell} |"));
                }
                out.push('\n');
            }
            out.push('\n');
            if args.witnesses {
                for &d in &d_values {
                    for &k in &k_values {
                        if let Some(MCell::Computed { witness, .. }) = table.cell(n, d, k) {
                            out.push_str(&format!("witness n={n} d={d} k={k}: {witness}\n"));
                        }
                    }
                }
                out.push('\n');
            }
        }
    }

    let mut exit = EXIT_OK;
    if args.check_paper {
        let mut compared = 0usize;
        let mut mismatches = Vec::new();
        let mut incomplete = Vec::new();
        for &n in &n_values {
            for &d in &d_values {
                for &k in &k_values {
                    let Some(expected) = golden_value(n, d, k) else {
                        continue;
                    };
                    match table.cell(n, d, k) {
                        Some(MCell::Computed { value, .. }) => {
                            compared += 1;
                            if *value as u32 != expected {
                                mismatches.push(format!(
                                    "n={n} d={d} k={k}: computed {value}, published {expected}"
                                ));
                            }
                        }
                        _ => incomplete.push(format!("n={n} d={d} k={k}")),
                    }
                }
            }
        }
        if !mismatches.is_empty() {
            out.push_str("check-paper: MISMATCH\n");
            for m in &mismatches {
                out.push_str(&format!("  {m}\n"));
            }
            exit = EXIT_MISMATCH;
        } else if !incomplete.is_empty() {
            out.push_str(&format!(
                "check-paper: incomplete, {} reference cells not computed\n",
                incomplete.len()
            ));
            exit = EXIT_INCOMPLETE;
        } else {
            out.push_str(&format!(
                "check-paper: all {compared} reference cells match\n"
            ));
        }
    } else if table.has_incomplete() {
        exit = EXIT_INCOMPLETE;
    }

    match &args.out {
        Some(path) => std::fs::write(path, out)?,
        None => print!("{out}"),
    }
    eprintln!("mtable finished in {:?}", started.elapsed());
    Ok(exit)
}

fn cmd_space(args: SpaceArgs) -> Result<i32, Error> {
    let space = interchange::load_space(&args.file)?;
    let n = space.n();
    let d = space.d();
    let t_bound = args.t_bound.unwrap_or(2 * d + 2).max(d);
    println!("file: {}", args.file.display());
    println!(
        "n = {n}, d = {d}, ambient dimension {}",
        space.ambient_dim()
    );
    println!("dim U = {}, codim U = {}", space.dim(), space.codim());
    let square = space.square();
    println!(
        "dim U^2 = {} of {}, codim U^2 = {}",
        square.dim(),
        square.ambient_dim(),
        square.codim()
    );
    let table = hilbert_table(&space, t_bound);
    let values: Vec<String> = table.values().iter().map(ToString::to_string).collect();
    println!(
        "hilbert function of <U> up to degree {t_bound}: {}",
        values.join(" ")
    );
    let certificate = base_point_certificate(&space, t_bound);
    match certificate.verdict {
        BasePointVerdict::BasePointFree { at_degree } => {
            println!("base points: none (ideal reaches everything in degree {at_degree})");
        }
        BasePointVerdict::HasBasePoints { witness } => match witness {
            BasePointWitness::MissingPurePower { var } => println!(
                "base points: yes (monomial space misses x{}^{d}; the x{} coordinate point vanishes on U)",
                var + 1,
                var + 1
            ),
            BasePointWitness::GotzmannPersistent { from_degree, value } => println!(
                "base points: yes (Hilbert value {value} persists from degree {from_degree})"
            ),
        },
        BasePointVerdict::Inconclusive { bound } => {
            println!("base points: inconclusive up to degree {bound}");
        }
    }
    println!(
        "face dimension = C({} + 1, 2) - {} + {} = {}",
        space.dim(),
        dim_forms(n, 2 * d),
        square.codim(),
        face_dimension(space.dim(), n, d, square.codim())
    );
    Ok(EXIT_OK)
}

fn cmd_macaulay(args: MacaulayArgs) -> Result<i32, Error> {
    match args.op {
        MacaulayOp::Rep { a, d } => {
            if d < 1 {
                return Err(Error::InvalidArgument("degree must be positive".into()));
            }
            let rep = macaulay_rep(&a, d);
            let terms: Vec<String> = rep
                .terms()
                .map(|(top, bottom)| format!("C({top},{bottom})"))
                .collect();
            if terms.is_empty() {
                println!("{a} = 0");
            } else {
                println!("{a} = {}", terms.join(" + "));
            }
        }
        MacaulayOp::Shift { a, d, s, t } => {
            if d < 1 {
                return Err(Error::InvalidArgument("degree must be positive".into()));
            }
            if s > t {
                return Err(Error::InvalidArgument(
                    "shift needs s <= t; larger top offsets depend on omitted zero terms".into(),
                ));
            }
            println!("{}", macaulay_rep(&a, d).shift(s, t));
        }
        MacaulayOp::Growth { h, i } => {
            if i < 1 {
                return Err(Error::InvalidArgument("degree must be positive".into()));
            }
            println!("{}", macaulay_growth_bound(&h, i));
        }
        MacaulayOp::Green { h, d } => {
            if d < 1 {
                return Err(Error::InvalidArgument("degree must be positive".into()));
            }
            println!("{}", green_restriction_bound(&h, d));
        }
    }
    Ok(EXIT_OK)
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<i32, Error> {
    validate_caps(&[args.n as u32], &[args.d], &[args.k as u32])?;
    for complement in enumerate_stable_complements(args.n, args.d, args.k) {
        let members: Vec<String> = complement
            .members()
            .iter()
            .map(ToString::to_string)
            .collect();
        if args.values {
            println!("{} -> {}", members.join(", "), complement.square_codim());
        } else {
            println!("{}", members.join(", "));
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(args: VerifyArgs) -> Result<i32, Error> {
    if args.check == "gallery" {
        let report = example_gallery();
        print!("{}", report.render_text());
        return Ok(if report.all_match() {
            EXIT_OK
        } else {
            EXIT_MISMATCH
        });
    }
    let def = match harness::find_check(&args.check) {
        Ok(def) => def,
        Err(e) => {
            eprintln!("error: {e}");
            eprintln!("registered checks:");
            for c in registered_checks() {
                eprintln!("  {:<24} {}", c.id, c.summary);
            }
            return Ok(EXIT_USAGE);
        }
    };
    let mut params: CheckParams = (def.defaults)();
    if let Some(n) = args.n {
        params.n = n;
    }
    if let Some(d) = args.d {
        params.d = d;
    }
    if let Some(k) = args.k {
        params.k = k;
    }
    if args.m.is_some() {
        params.m = args.m;
    }
    if let Some(levels) = args.levels {
        params.levels = levels;
    }
    if let Some(trials) = args.trials {
        params.trials = trials;
    }
    if let Some(seed) = args.seed {
        params.seed = seed;
    }
    if let Some(height) = args.height {
        params.height = height;
    }
    if args.t_bound.is_some() {
        params.t_bound = args.t_bound;
    }
    if let Some(budget) = args.genericity_budget {
        params.genericity_budget = budget;
    }
    params.artifacts_dir = args.artifacts_dir.clone();
    validate_caps(&[params.n as u32], &[params.d], &[params.k as u32])?;
    if params.trials > 100_000 {
        return Err(Error::InvalidArgument("trials capped at 100000".into()));
    }
    if params.levels > 8 {
        return Err(Error::InvalidArgument("levels capped at 8".into()));
    }
    let report = harness::verify(&args.check, &params)?;
    if args.format == "records" {
        print!("{}", report.render_records());
    } else {
        print!("{}", report.render_text());
    }
    eprintln!(
        "verify {} finished in {} ms",
        args.check, report.wall_time_ms
    );
    let failed = report.fails() > 0 || report.candidates() > 0;
    Ok(if failed { EXIT_MISMATCH } else { EXIT_OK })
}

fn cmd_conjecture(args: ConjectureArgs) -> Result<i32, Error> {
    if args.k_max < 1 || args.k_max > 8 {
        return Err(Error::InvalidArgument("k-max must lie in 1..=8".into()));
    }
    let report = conjecture_mkkk(args.k_max, Some(args.budget));
    print!("{}", report.render_text());
    let incomplete = report
        .entries
        .iter()
        .any(|e| e.m_kkk.is_none() || e.m_3kkk.is_none());
    Ok(if incomplete { EXIT_INCOMPLETE } else { EXIT_OK })
}
