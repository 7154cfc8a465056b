//! The `selfdual` command line: construction, table verification, searches
//! and distance/weight tools over matrix files.
//!
//! Exit status is 0 on success, 1 when a verification or construction does
//! not meet its claim, and 2 on usage or input errors.

use std::collections::BTreeSet;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bincode::{
    classify, gray_image, has_word_below, min_distance, min_distance_bz, min_distance_enumeration, summarize, weight_distribution,
    BinaryCode, DistanceEngine, EnumeratorId, Family, KnownParamsRegistry, Novelty,
};
use crate::error::{Error, Result};
use crate::extend::{extension_search_range, psi_code, CodeRecord, SearchBase, SearchConfig};
use crate::lifts::{lift_search, BuiltinCode, LiftBase, LiftBudget};
use crate::matrix::{to_text_with_comment, AnyMatrix, LinearCode};
use crate::qdc::{build_b, build_p, theorem5_codes, BorderSpec, QrCirculantSpec};
use crate::rings::{parse_f4u_expr, parse_vector, Ring, RingKind, F2, F2u, F4, F4u};
use crate::tables::{verify_table, verify_table1, verify_table2, TableReport, VerifyOptions};

#[derive(Debug, Parser)]
#[command(name = "selfdual", version, about = "Self-dual codes from quadratic double circulant constructions")]
pub struct Cli {
    /// Worker threads (default: all cores). Never changes numeric output.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build QDC codes and report the parameters of their binary images.
    Construct(ConstructArgs),
    /// Rebuild the published tables and compare.
    Verify(VerifyArgs),
    /// Search lifts or extensions.
    #[command(subcommand)]
    Search(SearchKind),
    /// Minimum distance of the binary image of a matrix file.
    Distance(DistanceArgs),
    /// Weight distribution of the binary image of a matrix file, as CSV.
    Wdist(MatrixArg),
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    /// The explicit family members for this prime.
    #[arg(long, value_name = "P", conflicts_with_all = ["p_code", "b_code"])]
    pub theorem5: Option<usize>,
    /// Pure double circulant P_p(a, b, c): `--P p a b c`.
    #[arg(long = "P", num_args = 4, value_names = ["P", "A", "B", "C"], allow_hyphen_values = true)]
    pub p_code: Option<Vec<String>>,
    /// Bordered B_p(a, b, c, λ, β, γ): `--B p a b c λ β γ`.
    #[arg(long = "B", num_args = 7, value_names = ["P", "A", "B", "C", "L", "BE", "GA"], conflicts_with = "p_code")]
    pub b_code: Option<Vec<String>>,
    /// Ring of the symbols; by default F4 when every symbol is one of
    /// `0 1 w W`, else F4+uF4.
    #[arg(long, value_enum)]
    pub ring: Option<RingArg>,
    /// Directory for the generator matrix files.
    #[arg(long, short)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RingArg {
    F2,
    F2u,
    F4,
    F4u,
}

/// Ring over which `search extend` adds the two coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExtendRing {
    F2,
    F2u,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Tables to check (1 to 6); repeatable.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=6), required_unless_present = "all")]
    pub table: Vec<u8>,
    /// Check all six tables.
    #[arg(long, conflicts_with = "table")]
    pub all: bool,
    /// Enumerate every codeword of the extended codes as a cross-check.
    #[arg(long)]
    pub full: bool,
    /// One-based rows to check in every selected table, e.g. `1,4,7`.
    #[arg(long, value_delimiter = ',')]
    pub rows: Option<Vec<usize>>,
    /// Print the reports as JSON instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum SearchKind {
    /// Lifts of an F4 double circulant code to F4+uF4.
    Lift(LiftArgs),
    /// Random extensions of a builtin code.
    Extend(ExtendArgs),
}

#[derive(Debug, Args)]
pub struct LiftArgs {
    /// `P7-F4` or `B7-F4`.
    #[arg(long)]
    pub base: String,
    /// Keep lifts whose binary image has at least this distance.
    #[arg(long)]
    pub d_min: Option<usize>,
    /// Keep lifts whose binary image has these parameters.
    #[arg(long, value_parser = parse_target)]
    pub target: Vec<(i64, Option<i64>)>,
    /// Try every assignment regardless of the budget.
    #[arg(long)]
    pub exhaustive: bool,
    #[command(flatten)]
    pub job: JobArgs,
}

#[derive(Debug, Args)]
pub struct ExtendArgs {
    /// Builtin base code (K1..K3, L1..L4).
    #[arg(long)]
    pub base: BuiltinCode,
    /// Extend over F2 (binary image) or F2+uF2 (`ψ` image, L codes only).
    #[arg(long, value_enum, default_value = "f2")]
    pub ring: ExtendRing,
    /// Parameters to report as `β` or `β,γ`; repeatable. Without targets,
    /// parameters new to the registry are reported.
    #[arg(long, value_parser = parse_target)]
    pub target: Vec<(i64, Option<i64>)>,
    /// Registry document to which new parameters are appended.
    #[arg(long)]
    pub registry_out: Option<PathBuf>,
    #[command(flatten)]
    pub job: JobArgs,
}

#[derive(Debug, Args)]
pub struct JobArgs {
    /// Seed for all sampling; generated and logged when absent.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Number of samples or assignments to try.
    #[arg(long, default_value_t = 10_000)]
    pub budget: u64,
    /// Write records to this file instead of stdout.
    #[arg(long, short)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MatrixArg {
    pub file: PathBuf,
}

#[derive(Debug, Args)]
pub struct DistanceArgs {
    pub file: PathBuf,
    #[arg(long, value_enum, default_value = "auto")]
    pub engine: EngineArg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Auto,
    Enumeration,
    Bz,
}

fn parse_target(s: &str) -> std::result::Result<(i64, Option<i64>), String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let num = |t: &str| t.parse::<i64>().map_err(|_| format!("`{t}` is not an integer"));
    match parts.as_slice() {
        [b] => Ok((num(b)?, None)),
        [b, g] => Ok((num(b)?, Some(num(g)?))),
        _ => Err(format!("expected `β` or `β,γ`, got `{s}`")),
    }
}

/// Validated settings shared by the sampling commands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobConfig {
    pub seed: u64,
    pub budget: u64,
    pub threads: Option<usize>,
    pub output: Option<PathBuf>,
}

impl JobConfig {
    pub fn from_args(job: &JobArgs, threads: Option<usize>) -> Result<Self> {
        if threads == Some(0) {
            return Err(Error::InvalidArgument("--threads must be positive".into()));
        }
        let seed = job.seed.unwrap_or_else(|| {
            let s = SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_nanos() as u64);
            eprintln!("seed {s}");
            s
        });
        Ok(JobConfig {
            seed,
            budget: job.budget,
            threads,
            output: job.out.clone(),
        })
    }
}

enum Outcome {
    Ok,
    Mismatch,
}

/// Parses `std::env::args` and runs the command.
pub fn main() -> ExitCode {
    let cli = Cli::parse();
    run(cli)
}

pub fn run(cli: Cli) -> ExitCode {
    if let Some(t) = cli.threads {
        if t == 0 || rayon::ThreadPoolBuilder::new().num_threads(t).build_global().is_err() {
            eprintln!("error: could not start {t} worker threads");
            return ExitCode::from(2);
        }
    }
    let result = match &cli.command {
        Command::Construct(a) => cmd_construct(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Search(SearchKind::Lift(a)) => cmd_search_lift(a, cli.threads),
        Command::Search(SearchKind::Extend(a)) => cmd_search_extend(a, cli.threads),
        Command::Distance(a) => cmd_distance(a),
        Command::Wdist(a) => cmd_wdist(a),
    };
    match result {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::InvalidArgument(_) | Error::Parse(_) | Error::Io(_) | Error::Json(_) | Error::UnknownFamily(_) => 2,
                _ => 1,
            })
        }
    }
}

fn ring_of(args: &[String], explicit: Option<RingArg>) -> RingArg {
    explicit.unwrap_or_else(|| {
        if args.iter().all(|s| matches!(s.as_str(), "0" | "1" | "w" | "W")) {
            RingArg::F4
        } else {
            RingArg::F4u
        }
    })
}

fn parse_symbol<R: Ring>(s: &str) -> Result<R> {
    let v = parse_vector::<R>(s)?;
    match v.as_slice() {
        [x] => Ok(*x),
        _ => Err(Error::Parse(format!("`{s}` is not a single {} symbol", R::KIND))),
    }
}

fn parse_prime(s: &str) -> Result<usize> {
    s.parse().map_err(|_| Error::InvalidArgument(format!("`{s}` is not a prime")))
}

fn build_adhoc<R: Ring>(p_args: Option<&[String]>, b_args: Option<&[String]>, parse: impl Fn(&str) -> Result<R>) -> Result<(String, LinearCode<R>)> {
    if let Some(a) = p_args {
        let spec = QrCirculantSpec::new(parse_prime(&a[0])?, parse(&a[1])?, parse(&a[2])?, parse(&a[3])?)?;
        return Ok((format!("P_{}({}, {}, {})", a[0], a[1], a[2], a[3]), build_p(&spec)));
    }
    let a = b_args.expect("one of --P/--B");
    let spec = QrCirculantSpec::new(parse_prime(&a[0])?, parse(&a[1])?, parse(&a[2])?, parse(&a[3])?)?;
    let border = BorderSpec::new(parse(&a[4])?, parse(&a[5])?, parse(&a[6])?);
    Ok((format!("B_{}({})", a[0], a[1..].join(", ")), build_b(&spec, &border)))
}

fn report_construction<R: crate::rings::GrayImage>(label: &str, code: &LinearCode<R>, out: Option<&Path>, stem: &str) -> Result<bool> {
    let self_dual = code.is_self_dual().unwrap_or(false);
    if let Some(dir) = out {
        fs::create_dir_all(dir)?;
        fs::write(dir.join(format!("{stem}.txt")), to_text_with_comment(code.generator(), label))?;
    }
    if !self_dual {
        println!("{label}: not self-dual");
        return Ok(false);
    }
    let width = code.length() * R::KIND.binary_width();
    if width > crate::bincode::MAX_LENGTH {
        println!("{label}: self-dual over {}; binary length {width} is beyond the analysed range", R::KIND);
        return Ok(true);
    }
    let bin = gray_image(code)?;
    if let Some(dir) = out {
        fs::write(dir.join(format!("{stem}.binary.txt")), to_text_with_comment(&bin.to_matrix(), &format!("binary image of {label}")))?;
    }
    println!("{label}: {}", summarize(&bin));
    Ok(true)
}

fn cmd_construct(a: &ConstructArgs) -> Result<Outcome> {
    let out = a.out.as_deref();
    let mut all_ok = true;
    if let Some(p) = a.theorem5 {
        for (i, c) in theorem5_codes(p)?.into_iter().enumerate() {
            all_ok &= report_construction(&c.label, &c.code, out, &format!("theorem5_p{p}_{}", i + 1))?;
        }
    } else {
        let args = a
            .p_code
            .as_deref()
            .or(a.b_code.as_deref())
            .ok_or_else(|| Error::InvalidArgument("give --theorem5, --P or --B".into()))?;
        let (p_args, b_args) = (a.p_code.as_deref(), a.b_code.as_deref());
        let ring = ring_of(&args[1..], a.ring);
        all_ok = match ring {
            RingArg::F2 => {
                let (l, c) = build_adhoc::<F2>(p_args, b_args, parse_symbol)?;
                report_construction(&l, &c, out, "code")?
            }
            RingArg::F2u => {
                let (l, c) = build_adhoc::<F2u>(p_args, b_args, parse_symbol)?;
                report_construction(&l, &c, out, "code")?
            }
            RingArg::F4 => {
                let (l, c) = build_adhoc::<F4>(p_args, b_args, parse_symbol)?;
                report_construction(&l, &c, out, "code")?
            }
            RingArg::F4u => {
                let (l, c) = build_adhoc::<F4u>(p_args, b_args, parse_f4u_expr)?;
                report_construction(&l, &c, out, "code")?
            }
        };
    }
    Ok(if all_ok { Outcome::Ok } else { Outcome::Mismatch })
}

fn cmd_verify(a: &VerifyArgs) -> Result<Outcome> {
    let tables: Vec<u8> = if a.all { (1..=6).collect() } else { a.table.clone() };
    let options = VerifyOptions {
        full_enumeration: a.full,
        rows: a.rows.as_ref().map(|r| r.iter().filter(|&&i| i > 0).map(|i| i - 1).collect()),
    };
    let mut reports: Vec<TableReport> = Vec::new();
    for t in tables {
        let report = match t {
            1 => verify_table1(&options)?,
            2 => verify_table2(&options)?,
            _ => verify_table(t, &options)?,
        };
        if !a.json {
            println!("{report}");
        }
        reports.push(report);
    }
    if a.json {
        println!("{}", serde_json::to_string_pretty(&reports)?);
    }
    Ok(if reports.iter().all(TableReport::passed) { Outcome::Ok } else { Outcome::Mismatch })
}

fn open_sink(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(fs::File::create(p)?),
        None => Box::new(std::io::stdout().lock()),
    })
}

fn target_ids(family: Option<Family>, targets: &[(i64, Option<i64>)]) -> Result<BTreeSet<EnumeratorId>> {
    if targets.is_empty() {
        return Ok(BTreeSet::new());
    }
    let family = family.ok_or_else(|| Error::InvalidArgument("targets need a base whose extensions have a known family".into()))?;
    targets
        .iter()
        .map(|&(beta, gamma)| {
            if family.has_gamma() != gamma.is_some() {
                return Err(Error::InvalidArgument(format!("{family} targets are written {}", if family.has_gamma() { "β,γ" } else { "β" })));
            }
            Ok(EnumeratorId { family, beta, gamma })
        })
        .collect()
}

fn cmd_search_lift(a: &LiftArgs, threads: Option<usize>) -> Result<Outcome> {
    let job = JobConfig::from_args(&a.job, threads)?;
    let base = LiftBase::named(&a.base)?;
    let image_len = 4 * base.code().length();
    let family = match image_len {
        64 => Some(Family::W64_1),
        _ => None,
    };
    let targets = target_ids(family, &a.target)?;
    let d_min = a.d_min.unwrap_or(0);
    let predicate = |b: &BinaryCode| {
        if has_word_below(b, d_min).unwrap_or(true) {
            return false;
        }
        targets.is_empty() || classify(b).ok().and_then(|c| c.id).is_some_and(|id| targets.contains(&id))
    };
    let budget = LiftBudget {
        max_candidates: if a.exhaustive { u64::MAX } else { job.budget },
        seed: job.seed,
    };
    let result = lift_search(&base, predicate, budget)?;
    let mut sink = open_sink(job.output.as_deref())?;
    for c in &result.candidates {
        let class = classify(&c.binary)?;
        let record = CodeRecord::new(
            RingKind::F4u,
            "lift",
            vec![a.base.clone()],
            c.assignment_hex(),
            String::new(),
            &class,
            false,
            Some(job.seed),
        );
        writeln!(sink, "{}", serde_json::to_string(&record)?)?;
    }
    sink.flush()?;
    eprintln!(
        "examined {} lifts, {} self-dual, {} hits{}",
        result.examined,
        result.self_dual,
        result.candidates.len(),
        if result.truncated { " (sampled)" } else { "" }
    );
    Ok(Outcome::Ok)
}

const SEARCH_CHUNK: u64 = 256;

fn cmd_search_extend(a: &ExtendArgs, threads: Option<usize>) -> Result<Outcome> {
    let job = JobConfig::from_args(&a.job, threads)?;
    let base = match a.ring {
        ExtendRing::F2 => SearchBase::Binary(gray_image(&a.base.code())?),
        ExtendRing::F2u if a.base.is_bordered() => SearchBase::OverF2u(psi_code(&a.base.code())),
        ExtendRing::F2u => return Err(Error::InvalidArgument("F2+uF2 extensions are defined for L1..L4".into())),
    };
    let family = match (a.base.is_bordered(), a.ring) {
        (false, _) => Family::W58_2,
        (true, ExtendRing::F2) => Family::W66_3,
        (true, ExtendRing::F2u) => Family::W68_2,
    };
    let config = SearchConfig {
        name: a.base.to_string(),
        targets: target_ids(Some(family), &a.target)?,
        seed: job.seed,
        budget: job.budget,
    };
    let registry = KnownParamsRegistry::shipped();
    let mut found = match &a.registry_out {
        Some(p) if p.exists() => {
            let mut r = KnownParamsRegistry::default();
            r.load_file(p)?;
            Some(r)
        }
        Some(_) => Some(KnownParamsRegistry::default()),
        None => None,
    };
    let mut sink = open_sink(job.output.as_deref())?;
    let mut hits = 0usize;
    let mut start = 0;
    while start < config.budget {
        let end = (start + SEARCH_CHUNK).min(config.budget);
        for record in extension_search_range(&base, &config, &registry, start..end)? {
            writeln!(sink, "{}", serde_json::to_string(&record)?)?;
            hits += 1;
            if let (Some(reg), true) = (found.as_mut(), record.new) {
                let id = EnumeratorId {
                    family: record.family.as_deref().unwrap_or_default().parse()?,
                    beta: record.beta.unwrap_or_default(),
                    gamma: record.gamma,
                };
                if reg.check(&id).map_or(true, |n| n == Novelty::New) {
                    reg.add(&id);
                }
            }
        }
        sink.flush()?;
        start = end;
    }
    if let (Some(reg), Some(path)) = (found, &a.registry_out) {
        if let Some(doc) = reg.to_documents().remove(&family.length()) {
            fs::write(path, doc)?;
        }
    }
    eprintln!("tried {} extension vectors, {hits} records, truncated by budget", config.budget);
    Ok(Outcome::Ok)
}

fn read_binary(path: &Path) -> Result<BinaryCode> {
    let text = fs::read_to_string(path)?;
    match AnyMatrix::parse_text(&text)? {
        AnyMatrix::F2(m) => BinaryCode::from_matrix(&m),
        AnyMatrix::F2u(m) => gray_image(&LinearCode::new(m)),
        AnyMatrix::F4(m) => gray_image(&LinearCode::new(m)),
        AnyMatrix::F4u(m) => gray_image(&LinearCode::new(m)),
    }
}

fn cmd_distance(a: &DistanceArgs) -> Result<Outcome> {
    let code = read_binary(&a.file)?;
    let start = Instant::now();
    let (d, engine) = match a.engine {
        EngineArg::Auto => {
            let r = min_distance(&code);
            (r.distance, r.engine)
        }
        EngineArg::Enumeration => (min_distance_enumeration(&code), DistanceEngine::Enumeration),
        EngineArg::Bz => (min_distance_bz(&code), DistanceEngine::BrouwerZimmermann),
    };
    println!("[{},{},{d}]_2", code.n(), code.k());
    println!("d={d} engine={engine} time={:.3}s", start.elapsed().as_secs_f64());
    Ok(Outcome::Ok)
}

fn cmd_wdist(a: &MatrixArg) -> Result<Outcome> {
    let code = read_binary(&a.file)?;
    let start = Instant::now();
    let dist = weight_distribution(&code)?;
    print!("{}", dist.to_csv());
    eprintln!("enumerated 2^{} codewords in {:.3}s", code.k(), start.elapsed().as_secs_f64());
    Ok(Outcome::Ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_parses() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
        let c = Cli::try_parse_from(["selfdual", "construct", "--P", "7", "0", "W", "w"]).unwrap();
        let Command::Construct(a) = c.command else { panic!() };
        assert_eq!(ring_of(&a.p_code.unwrap()[1..], None), RingArg::F4);
        assert!(Cli::try_parse_from(["selfdual", "verify"]).is_err());
        assert!(Cli::try_parse_from(["selfdual", "verify", "--table", "7"]).is_err());
        let c = Cli::try_parse_from(["selfdual", "search", "extend", "--base", "K1", "--target", "1,32", "--seed", "7"]).unwrap();
        let Command::Search(SearchKind::Extend(e)) = c.command else { panic!() };
        assert_eq!(e.target, vec![(1, Some(32))]);
        assert_eq!(e.base, BuiltinCode::K1);
    }

    #[test]
    fn targets_validate_shape() {
        assert!(target_ids(Some(Family::W58_2), &[(1, None)]).is_err());
        assert_eq!(target_ids(Some(Family::W66_3), &[(35, None)]).unwrap().len(), 1);
        assert!(target_ids(None, &[]).unwrap().is_empty());
        assert!(parse_target("1,2,3").is_err());
    }

    #[test]
    fn symbols_by_ring() {
        assert_eq!(parse_symbol::<F4>("W").unwrap(), F4::W_BAR);
        assert!(parse_symbol::<F4>("01").is_err());
        assert_eq!(ring_of(&["u".into()], None), RingArg::F4u);
    }
}
