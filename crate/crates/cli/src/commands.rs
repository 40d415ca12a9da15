use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use fusring::classifier::families::{Family, FamilyParams};
use fusring::classifier::{
    brute_force, search_prop31, search_prop32, search_prop33, ClassifierError, Predicate,
    DEFAULT_MAX_CANDIDATES,
};
use fusring::ring::{induced_unit_image, isomorphism, tensor_product, validate};
use fusring::FusionRing;

use crate::report::{class_id, RingReport, SearchReport};
use crate::ringfile::{emit_ring, parse_ring};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "fusring", version, about = "Exact verification and classification of small fusion rings")]
struct Cli {
    /// Width bound for root enclosures, as a positive rational `num/den`
    #[arg(long, global = true, default_value = "1/1000000000000", value_parser = parse_precision)]
    precision: BigRational,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the ring axioms; exit 1 if any fails
    Validate { file: PathBuf },
    /// FP-dimensions, codegrees, subrings and invertible elements
    Analyze {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
        format: ReportFormat,
    },
    /// Build a named family member
    Family {
        name: String,
        /// Parameters as key=value
        #[arg(long = "param", num_args = 1.., value_parser = parse_param)]
        params: Vec<(String, u64)>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Test two rings for isomorphism; exit 1 if they are not isomorphic
    Iso { a: PathBuf, b: PathBuf },
    /// Tensor product of two rings
    Tensor {
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Image of the unit under induction, `Σ_T T⊗T*`
    Induce { file: PathBuf },
    /// Run a classification search
    Search {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        bound: u64,
        /// Rank (brute mode only)
        #[arg(long)]
        rank: Option<usize>,
        /// `id` or a comma-separated involution such as `0,2,1,3` (brute mode only)
        #[arg(long)]
        dual: Option<String>,
        /// Candidate filter (brute mode only): pointed, proper-subring,
        /// pointed-rank=K, fixed-point-free, fixed-point, fib-subring, commutative
        #[arg(long = "predicate")]
        predicates: Vec<String>,
        #[arg(long, env = "FUSRING_JOBS")]
        jobs: Option<usize>,
        #[arg(long, env = "FUSRING_MAX_CANDIDATES", default_value_t = DEFAULT_MAX_CANDIDATES)]
        max_candidates: u64,
        #[arg(long, value_enum, default_value_t = SearchFormat::Table)]
        format: SearchFormat,
        /// Directory for one ring file per class plus the summary
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReportFormat {
    Table,
    Machine,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SearchFormat {
    Table,
    Csv,
    Machine,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
enum Mode {
    Prop31,
    Prop32,
    Prop33,
    Brute,
}

fn parse_precision(s: &str) -> Result<BigRational, String> {
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n: BigInt = n.trim().parse().map_err(|_| format!("bad numerator in {s:?}"))?;
    let d: BigInt = d.trim().parse().map_err(|_| format!("bad denominator in {s:?}"))?;
    if !d.is_positive() || !n.is_positive() {
        return Err(format!("precision must be a positive rational, got {s:?}"));
    }
    Ok(BigRational::new(n, d))
}

fn parse_param(s: &str) -> Result<(String, u64), String> {
    let (k, v) = s.split_once('=').ok_or_else(|| format!("expected key=value, got {s:?}"))?;
    let v = v.parse().map_err(|_| format!("{k}: expected a non-negative integer, got {v:?}"))?;
    Ok((k.to_string(), v))
}

/// Failure carrying the exit code it maps to.
struct Exit(i32, anyhow::Error);

fn usage(e: impl Into<anyhow::Error>) -> Exit {
    Exit(EXIT_USAGE, e.into())
}

fn read_ring(path: &Path) -> Result<FusionRing, Exit> {
    let bytes = fs::read(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(usage)?;
    parse_ring(&bytes)
        .with_context(|| format!("parsing {}", path.display()))
        .map_err(usage)
}

fn write_or_print(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<(), Exit> {
    match path {
        Some(p) => fs::write(p, text)
            .with_context(|| format!("writing {}", p.display()))
            .map_err(usage),
        None => out.write_all(text.as_bytes()).map_err(usage),
    }
}

/// Runs one command line. Output goes to `out`, diagnostics to `err`; the
/// return value is the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
                EXIT_USAGE
            } else {
                let _ = out.write_all(rendered.as_bytes());
                EXIT_OK
            };
        }
    };
    match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(Exit(code, e)) => {
            let _ = writeln!(err, "error: {e:#}");
            code
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Exit> {
    let precision = cli.precision;
    let emit = |out: &mut dyn Write, s: &str| out.write_all(s.as_bytes()).map_err(usage);
    match cli.command {
        Command::Validate { file } => {
            let ring = read_ring(&file)?;
            let report = validate(&ring);
            emit(out, &format!("{report}\n"))?;
            Ok(if report.is_fusion_ring() { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Analyze { file, format } => {
            let ring = read_ring(&file)?;
            let report = RingReport::build(&ring, &precision).map_err(usage)?;
            match format {
                ReportFormat::Table => emit(out, &report.to_table())?,
                ReportFormat::Machine => emit(out, &report.to_machine())?,
            }
            Ok(EXIT_OK)
        }
        Command::Family { name, params, out: path } => {
            let family = Family::from_name(&name).map_err(|e| {
                let known: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
                usage(anyhow!("{e}; known families: {}", known.join(", ")))
            })?;
            let mut fp = FamilyParams::new();
            for (k, v) in params {
                if !family.param_names().contains(&k.as_str()) {
                    return Err(usage(anyhow!(
                        "family {name} has no parameter {k:?}; expected {:?}",
                        family.param_names()
                    )));
                }
                fp.insert(&k, v);
            }
            let ring = family.build(&fp).map_err(usage)?;
            if let Some(note) = family.external_note() {
                let _ = writeln!(err, "note: {note}");
            }
            write_or_print(out, path.as_deref(), &emit_ring(&ring))?;
            Ok(EXIT_OK)
        }
        Command::Iso { a, b } => {
            let (ra, rb) = (read_ring(&a)?, read_ring(&b)?);
            match isomorphism(&ra, &rb) {
                Some(sigma) => {
                    let mut text = String::from("isomorphic\n");
                    for (i, &s) in sigma.iter().enumerate() {
                        text.push_str(&format!("{} -> {}\n", ra.label(i), rb.label(s)));
                    }
                    emit(out, &text)?;
                    Ok(EXIT_OK)
                }
                None => {
                    emit(out, "not isomorphic\n")?;
                    Ok(EXIT_FAIL)
                }
            }
        }
        Command::Tensor { a, b, out: path } => {
            let product = tensor_product(&read_ring(&a)?, &read_ring(&b)?);
            write_or_print(out, path.as_deref(), &emit_ring(&product))?;
            Ok(EXIT_OK)
        }
        Command::Induce { file } => {
            let ring = read_ring(&file)?;
            emit(out, &format!("{}\n", ring.format_combination(&induced_unit_image(&ring))))?;
            Ok(EXIT_OK)
        }
        Command::Search {
            mode,
            bound,
            rank,
            dual,
            predicates,
            jobs,
            max_candidates,
            format,
            out: dir,
        } => {
            if mode != Mode::Brute && (rank.is_some() || dual.is_some() || !predicates.is_empty()) {
                return Err(usage(anyhow!("--rank, --dual and --predicate apply only to --mode brute")));
            }
            let rank = rank.unwrap_or(4);
            let dual = parse_dual(dual.as_deref().unwrap_or("id"), rank).map_err(usage)?;
            let predicates = predicates
                .iter()
                .map(|p| Predicate::parse(p).ok_or_else(|| anyhow!("unknown predicate {p:?}")))
                .collect::<anyhow::Result<Vec<_>>>()
                .map_err(usage)?;
            let mut pool = rayon::ThreadPoolBuilder::new();
            if let Some(n) = jobs {
                if n == 0 {
                    return Err(usage(anyhow!("--jobs must be at least 1")));
                }
                pool = pool.num_threads(n);
            }
            let pool = pool.build().map_err(usage)?;
            let result = pool
                .install(|| match mode {
                    Mode::Prop31 => Ok(search_prop31(bound)),
                    Mode::Prop32 => Ok(search_prop32(bound)),
                    Mode::Prop33 => Ok(search_prop33(bound)),
                    Mode::Brute => brute_force(rank, &dual, bound, &predicates, max_candidates),
                })
                .map_err(|e: ClassifierError| usage(e))?;
            let report = SearchReport::build(&result, &precision).map_err(usage)?;
            let (summary, ext) = match format {
                SearchFormat::Table => (report.to_table(), "txt"),
                SearchFormat::Csv => (report.to_csv(), "csv"),
                SearchFormat::Machine => (report.to_machine(), "json"),
            };
            if let Some(dir) = dir {
                write_search_dir(&dir, &result.classes, &summary, ext).map_err(usage)?;
            }
            emit(out, &summary)?;
            if result.all_checks_pass() {
                Ok(EXIT_OK)
            } else {
                let _ = writeln!(err, "error: search checks failed");
                Ok(EXIT_FAIL)
            }
        }
    }
}

fn parse_dual(s: &str, rank: usize) -> anyhow::Result<Vec<usize>> {
    if s == "id" {
        return Ok((0..rank).collect());
    }
    let dual = s
        .split(',')
        .map(|x| x.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .with_context(|| format!("--dual expects `id` or a comma-separated list, got {s:?}"))?;
    if dual.len() != rank {
        bail!("--dual has {} entries but rank is {rank}", dual.len());
    }
    Ok(dual)
}

fn write_search_dir(
    dir: &Path,
    classes: &[fusring::classifier::ClassRecord],
    summary: &str,
    ext: &str,
) -> anyhow::Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    for (i, c) in classes.iter().enumerate() {
        let path = dir.join(format!("{}.ring", class_id(i)));
        fs::write(&path, emit_ring(&c.representative))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    let path = dir.join(format!("summary.{ext}"));
    fs::write(&path, summary).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}
