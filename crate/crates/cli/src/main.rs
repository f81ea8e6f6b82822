//! `bds` — exact computations for Borel-de Siebenthal root orders:
//! classification dumps, gradings, strongly orthogonal cascades, symmetric
//! power decompositions, branching, truncated discrete-series type
//! enumeration and the one-shot verification suites.
//!
//! Exit codes: 0 success, 2 usage error, 3 hypothesis violation,
//! 4 dimension guard exceeded.

use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};

use bds_core::bds::{classify, BdsDatum, HermitianPair};
use bds_core::cases::{enumerate_cases, parse_case, CaseKey};
use bds_core::decomp::{algebra_l, branch_oracle, pair_algebra_k, DecompError, DEFAULT_GUARD};
use bds_core::lspath::branch_to_levi;
use bds_core::ratio::{parse_q, q, Q};
use bds_core::report;
use bds_core::rootsys::{TypeLabel, Weight};
use bds_core::series::{
    admissibility_evidence, bds_k_types, common_l_types_quaternionic, common_l_types_tube,
    holo_l_types, SeriesError, SeriesParams, SubgroupTag, DEFAULT_A_MAX, DEFAULT_J_EXTRA,
    DEFAULT_M_MAX, DEFAULT_R_MAX,
};
use bds_core::strongorth::cascade;
use bds_core::verify::run_suite;

#[derive(Parser)]
#[command(name = "bds", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CaseArgs {
    /// Named case, e.g. `so(4,5)`, `sp(2,2)`, `g2;A1,A1`, `e7;A1,D6,2`.
    #[arg(long)]
    case: Option<String>,
    /// Ambient type letter (with --rank and --nu).
    #[arg(long, value_name = "A..G")]
    r#type: Option<String>,
    #[arg(long)]
    rank: Option<usize>,
    /// 1-based Bourbaki index of the non-compact simple root.
    #[arg(long)]
    nu: Option<usize>,
}

impl CaseArgs {
    fn resolve(&self) -> Result<CaseKey, String> {
        if let Some(name) = &self.case {
            return parse_case(name);
        }
        match (&self.r#type, self.rank, self.nu) {
            (Some(t), Some(rank), Some(nu)) => {
                let label: TypeLabel = t.parse()?;
                if nu == 0 {
                    return Err("--nu is 1-based".into());
                }
                Ok(CaseKey {
                    label,
                    rank,
                    nu: nu - 1,
                })
            }
            _ => Err("give either --case or all of --type/--rank/--nu".into()),
        }
    }
}

#[derive(Args, Clone)]
struct GuardArg {
    /// Dimension guard; the BDS_GUARD environment variable overrides the
    /// default.
    #[arg(long)]
    guard: Option<u64>,
}

impl GuardArg {
    fn value(&self) -> u64 {
        if let Some(g) = self.guard {
            return g;
        }
        std::env::var("BDS_GUARD")
            .ok()
            .and_then(|s| s.parse().ok())
            .unwrap_or(DEFAULT_GUARD)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classification table of Borel-de Siebenthal orders.
    Classify {
        #[arg(long, default_value_t = 8)]
        rank_max: usize,
        /// Keep only quaternionic rows.
        #[arg(long)]
        quaternionic: bool,
        /// Keep only tube-type rows.
        #[arg(long)]
        tube_only: bool,
        /// Restrict to a single case.
        #[arg(long)]
        case: Option<String>,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
    },
    /// Grading summary for one case.
    Datum {
        #[command(flatten)]
        case: CaseArgs,
    },
    /// Strongly orthogonal cascade of the Hermitian pair.
    Cascade {
        #[command(flatten)]
        case: CaseArgs,
        /// Standalone Hermitian pair `TYPE:RANK:EPS` (1-based eps) instead
        /// of a graded case.
        #[arg(long, conflicts_with_all = ["case", "type", "rank", "nu"])]
        pair: Option<String>,
    },
    /// Partition-indexed decomposition of S^m of the lower layer.
    Schmid {
        #[command(flatten)]
        case: CaseArgs,
        #[arg(long, default_value_t = 2)]
        m: usize,
    },
    /// Branch an irreducible of k to the Levi, path model against oracle.
    Branch {
        #[command(flatten)]
        case: CaseArgs,
        /// Shape m * eps*.
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[command(flatten)]
        guard: GuardArg,
    },
    /// Truncated discrete-series computations.
    Series {
        #[command(subcommand)]
        what: SeriesCmd,
    },
    /// Run a named verification suite.
    Verify {
        /// One of rootsys, bds, cascade, schmid, lspath, series, all.
        suite: String,
        #[arg(long, default_value_t = 8)]
        rank_max: usize,
        #[command(flatten)]
        guard: GuardArg,
    },
}

#[derive(Args, Clone)]
struct SeriesArgs {
    #[command(flatten)]
    case: CaseArgs,
    /// Levi-fundamental coordinates of gamma0 (comma separated integers,
    /// one per compact simple root in Bourbaki order). Defaults to zero.
    #[arg(long)]
    gamma0: Option<String>,
    /// Central parameter t (rational, e.g. `-4` or `-9/2`).
    #[arg(long, allow_hyphen_values = true)]
    t: String,
    #[arg(long, default_value_t = DEFAULT_M_MAX)]
    m_max: usize,
    #[arg(long, default_value_t = DEFAULT_R_MAX)]
    r_max: usize,
    /// Width of the j-window above the least admissible j (tube reports).
    #[arg(long, default_value_t = DEFAULT_J_EXTRA)]
    j_max: u64,
    /// Largest partition entry in tube reports.
    #[arg(long, default_value_t = DEFAULT_A_MAX)]
    a_max: u32,
    #[command(flatten)]
    guard: GuardArg,
}

#[derive(Subcommand, Clone)]
enum SeriesCmd {
    /// K-type content of the Borel-de Siebenthal series, truncated.
    Ktypes(SeriesArgs),
    /// L-type content of the associated holomorphic series, truncated.
    Ltypes(SeriesArgs),
    /// Common L-types between the two series.
    Common(SeriesArgs),
    /// Growth evidence for restriction to the semisimple Levi factor.
    Admissibility {
        #[command(flatten)]
        args: SeriesArgs,
        /// `bds` or `holo`.
        #[arg(long, default_value = "bds")]
        side: String,
    },
}

const EXIT_USAGE: u8 = 2;
const EXIT_HYPOTHESIS: u8 = 3;
const EXIT_GUARD: u8 = 4;

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn series_error(e: &SeriesError) -> ExitCode {
    eprintln!("error: {e}");
    match e {
        SeriesError::NotSufficientlyNegative { .. }
        | SeriesError::NotQuaternionic
        | SeriesError::NotTube
        | SeriesError::NoRelativeInvariant
        | SeriesError::OutsideHolomorphicRegime(_)
        | SeriesError::NotIntegral(_) => ExitCode::from(EXIT_HYPOTHESIS),
        SeriesError::Decomp(DecompError::GuardExceeded { .. }) => ExitCode::from(EXIT_GUARD),
        SeriesError::Path(bds_core::lspath::PathError::Decomp(DecompError::GuardExceeded {
            ..
        })) => ExitCode::from(EXIT_GUARD),
        SeriesError::Bds(_) | SeriesError::Decomp(_) | SeriesError::Path(_) => {
            ExitCode::from(EXIT_HYPOTHESIS)
        }
    }
}

fn print_json<T: serde::Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}

fn build_datum_for(key: &CaseKey) -> Result<Arc<BdsDatum>, String> {
    bds_core::cases::datum_arc(key).map_err(|e| e.to_string())
}

fn parse_gamma0(datum: &BdsDatum, spec: &Option<String>) -> Result<Weight, String> {
    let rank = datum.sys.rank;
    let coords: Vec<i64> = match spec {
        None => vec![0; rank - 1],
        Some(s) => s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<i64>()
                    .map_err(|_| format!("bad integer `{p}`"))
            })
            .collect::<Result<_, _>>()?,
    };
    if coords.len() != rank - 1 {
        return Err(format!(
            "gamma0 needs {} coordinates (one per compact simple root), got {}",
            rank - 1,
            coords.len()
        ));
    }
    // Levi fundamental weights orthogonal to nu*.
    let ls = bds_core::rootsys::SimpleSystem::new(&datum.sys, datum.l_simples());
    let mut gamma0 = Weight::zero(rank);
    for (i, c) in coords.iter().enumerate() {
        if *c < 0 {
            return Err("gamma0 coordinates must be nonnegative".into());
        }
        if *c > 0 {
            let fw = ls.fundamental_weight(i);
            let central = datum.central_coordinate(&fw);
            let fw0 = fw.sub(&datum.nu_star.scale(&central));
            gamma0 = gamma0.add(&fw0.scale(&q(*c)));
        }
    }
    Ok(gamma0)
}

fn make_params(args: &SeriesArgs) -> Result<SeriesParams, ExitCode> {
    let key = args.case.resolve().map_err(|e| usage_error(&e))?;
    let datum = build_datum_for(&key).map_err(|e| usage_error(&e))?;
    let gamma0 = parse_gamma0(&datum, &args.gamma0).map_err(|e| usage_error(&e))?;
    let t: Q = parse_q(&args.t).map_err(|e| usage_error(&e))?;
    let mut params =
        SeriesParams::new(datum, gamma0, t, args.m_max, args.r_max, args.guard.value())
            .map_err(|e| series_error(&e))?;
    params.j_extra = args.j_max;
    params.a_max = args.a_max;
    Ok(params)
}

fn standalone_pair(spec: &str) -> Result<HermitianPair, String> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err("pair spec is TYPE:RANK:EPS".into());
    }
    let label: TypeLabel = parts[0].parse()?;
    let rank: usize = parts[1].parse().map_err(|_| "bad rank")?;
    let eps: usize = parts[2].parse().map_err(|_| "bad eps index")?;
    if eps == 0 {
        return Err("eps index is 1-based".into());
    }
    HermitianPair::standalone(label, rank, eps - 1).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Classify {
            rank_max,
            quaternionic,
            tube_only,
            case,
            json: _,
            csv,
        } => {
            let keys = match case {
                Some(name) => match parse_case(&name) {
                    Ok(k) => vec![k],
                    Err(e) => return usage_error(&e),
                },
                None => enumerate_cases(rank_max),
            };
            let mut rows = Vec::new();
            for key in keys {
                let datum = match key.build() {
                    Ok(d) => d,
                    Err(e) => return usage_error(&e.to_string()),
                };
                let row = classify(&datum);
                if quaternionic && !row.quaternionic {
                    continue;
                }
                if tube_only && !row.tube_type {
                    continue;
                }
                rows.push(row);
            }
            if csv {
                println!("{}", report::classification_csv_header());
                for row in &rows {
                    println!("{}", report::classification_csv_row(row));
                }
            } else {
                let json_rows: Vec<_> = rows.iter().map(report::classification_row_json).collect();
                print_json(&json_rows);
            }
            ExitCode::SUCCESS
        }
        Command::Datum { case } => {
            let key = match case.resolve() {
                Ok(k) => k,
                Err(e) => return usage_error(&e),
            };
            let datum = match build_datum_for(&key) {
                Ok(d) => d,
                Err(e) => return usage_error(&e),
            };
            print_json(&report::datum_summary_json(&datum));
            ExitCode::SUCCESS
        }
        Command::Cascade { case, pair } => {
            let pair = if let Some(spec) = pair {
                match standalone_pair(&spec) {
                    Ok(p) => p,
                    Err(e) => return usage_error(&e),
                }
            } else {
                let key = match case.resolve() {
                    Ok(k) => k,
                    Err(e) => return usage_error(&e),
                };
                match build_datum_for(&key) {
                    Ok(d) => d.hermitian_pair(),
                    Err(e) => return usage_error(&e),
                }
            };
            let c = cascade(&pair);
            print_json(&report::cascade_report_json(&pair, &c));
            ExitCode::SUCCESS
        }
        Command::Schmid { case, m } => {
            let key = match case.resolve() {
                Ok(k) => k,
                Err(e) => return usage_error(&e),
            };
            let datum = match build_datum_for(&key) {
                Ok(d) => d,
                Err(e) => return usage_error(&e),
            };
            let pair = datum.hermitian_pair();
            let c = cascade(&pair);
            let levi = algebra_l(&datum);
            print_json(&report::schmid_report_json(m, &c, &pair, &levi));
            ExitCode::SUCCESS
        }
        Command::Branch { case, m, guard } => {
            let key = match case.resolve() {
                Ok(k) => k,
                Err(e) => return usage_error(&e),
            };
            let datum = match build_datum_for(&key) {
                Ok(d) => d,
                Err(e) => return usage_error(&e),
            };
            let pair = datum.hermitian_pair();
            let alg_k = pair_algebra_k(&pair);
            let shape = pair.eps_star.scale(&q(m as i64));
            let levi_idx: Vec<usize> = (0..pair.simples.len())
                .filter(|&i| i != pair.eps_pos)
                .collect();
            let via_paths = match branch_to_levi(&alg_k, &shape, &levi_idx, guard.value()) {
                Ok(t) => t,
                Err(bds_core::lspath::PathError::Decomp(DecompError::GuardExceeded {
                    needed,
                    guard,
                })) => {
                    eprintln!("error: dimension {needed} exceeds the guard {guard}");
                    return ExitCode::from(EXIT_GUARD);
                }
                Err(e) => return usage_error(&e.to_string()),
            };
            let levi = bds_core::decomp::pair_algebra_l(&pair);
            let via_oracle =
                branch_oracle(&alg_k, &shape, &levi, guard.value()).expect("oracle within guard");
            assert_eq!(
                via_paths.entries, via_oracle.entries,
                "path model vs oracle"
            );
            print_json(&report::multiset_json(&via_paths));
            ExitCode::SUCCESS
        }
        Command::Series { what } => {
            let (args, mode) = match &what {
                SeriesCmd::Ktypes(a) => (a.clone(), "ktypes"),
                SeriesCmd::Ltypes(a) => (a.clone(), "ltypes"),
                SeriesCmd::Common(a) => (a.clone(), "common"),
                SeriesCmd::Admissibility { args, .. } => (args.clone(), "admissibility"),
            };
            let params = match make_params(&args) {
                Ok(p) => p,
                Err(code) => return code,
            };
            match mode {
                "ktypes" => match bds_k_types(&params) {
                    Ok(t) => {
                        print_json(&report::multiset_json(&t));
                        ExitCode::SUCCESS
                    }
                    Err(e) => series_error(&e),
                },
                "ltypes" => match holo_l_types(&params) {
                    Ok(t) => {
                        print_json(&report::multiset_json(&t));
                        ExitCode::SUCCESS
                    }
                    Err(e) => series_error(&e),
                },
                "common" => {
                    let result = if params.datum.quaternionic() {
                        common_l_types_quaternionic(&params)
                    } else {
                        common_l_types_tube(&params)
                    };
                    match result {
                        Ok(rep) => {
                            print_json(&report::common_report_json(&rep));
                            ExitCode::SUCCESS
                        }
                        Err(e) => series_error(&e),
                    }
                }
                _ => {
                    let side = match &what {
                        SeriesCmd::Admissibility { side, .. } => side.clone(),
                        _ => unreachable!(),
                    };
                    let tag = match side.as_str() {
                        "bds" => SubgroupTag::BdsToLPrime,
                        "holo" => SubgroupTag::HoloToLPrime,
                        other => return usage_error(&format!("unknown side `{other}`")),
                    };
                    match admissibility_evidence(&params, tag) {
                        Ok(rep) => {
                            print_json(&report::growth_report_json(&rep));
                            ExitCode::SUCCESS
                        }
                        Err(e) => series_error(&e),
                    }
                }
            }
        }
        Command::Verify {
            suite,
            rank_max,
            guard,
        } => match run_suite(&suite, rank_max, guard.value()) {
            Ok(rep) => {
                let json = rep.to_json();
                print_json(&json);
                if json.failed == 0 {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::FAILURE
                }
            }
            Err(e) => usage_error(&e),
        },
    }
}
