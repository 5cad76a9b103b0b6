//! Command-line front end: loads specs, runs suites, emits reports.
//!
//! Exit codes: `0` every clause passed, `1` some clause failed, `2` the
//! input could not be parsed or validated, `3` an enumeration budget was
//! exceeded.

pub mod spec;

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::budget::{Bound, Sample, DEFAULT_MAX_HOM};
use crate::category::{check_inverse_category, FiniteCategory};
use crate::error::Error;
use crate::exactness::check_exactness;
use crate::monoid::{classify_exactness, MonoidError};
use crate::pbij::{enumerate_pbij, hom_count, FinSet, PbijError, Subset};
use crate::projections::{check_baer_star, Projection};
use crate::report::VerificationReport;
use crate::transfer::fast_paths::check_fast_paths;
use crate::transfer::suites::NamedSquare;
use crate::transfer::{
    apply_p, apply_p_double_prime, apply_p_prime, check_functoriality, check_suite, Functor, Suite,
};

use spec::{build_instance, Budget, CategorySpec, Instance, MonoidFile};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HarnessError {
    #[error("cannot read input: {0}")]
    Io(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("{0}")]
    Budget(String),
}

impl HarnessError {
    pub fn exit_code(&self) -> i32 {
        match self {
            HarnessError::Io(_) | HarnessError::Parse(_) | HarnessError::Invalid(_) => 2,
            HarnessError::Budget(_) => 3,
        }
    }
}

impl From<Error> for HarnessError {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => HarnessError::Budget(e.to_string()),
            _ => HarnessError::Invalid(e.to_string()),
        }
    }
}

impl From<PbijError> for HarnessError {
    fn from(e: PbijError) -> Self {
        match e {
            PbijError::BudgetExceeded { .. } => HarnessError::Budget(e.to_string()),
            _ => HarnessError::Invalid(e.to_string()),
        }
    }
}

impl From<MonoidError> for HarnessError {
    fn from(e: MonoidError) -> Self {
        HarnessError::Invalid(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "invcat",
    version,
    about = "Check inverse-category structure on finite instances"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Largest object size checked exhaustively; larger instances are sampled.
    #[arg(long, global = true, env = "INVCAT_MAX_SIZE", default_value_t = 4)]
    pub max_size: usize,

    /// Morphisms sampled when an instance exceeds --max-size.
    #[arg(long, global = true, default_value_t = 16)]
    pub samples: usize,

    /// Seed for the sampler; equal seeds give identical reports.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Largest hom-set the checkers will enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_HOM)]
    pub max_hom: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Inverse-category and Baer* axioms.
    Axioms {
        /// Category spec (JSON).
        #[arg(long)]
        spec: PathBuf,
    },
    /// Exactness and Baer* checklists, and their agreement.
    Exactness {
        /// Category spec (JSON).
        #[arg(long)]
        spec: PathBuf,
    },
    /// Transfer-functor suites: 2.1 2.2 2.3 3.1 3.3 3.4 3.5 4.1 4.2
    /// connection, or functoriality, fast-paths, all.
    Theorems {
        /// Category spec (JSON).
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        suite: SuiteChoice,
    },
    /// Apply P, P' or P'' of a named morphism to a projection, given as a
    /// comma-separated subset (empty for the zero projection).
    Eval {
        /// Category spec (JSON).
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        functor: Functor,
        #[arg(long)]
        morphism: String,
        #[arg(long, allow_hyphen_values = true)]
        projection: String,
    },
    /// Count (and optionally list) the partial bijections {1..m} -> {1..n}.
    Enumerate {
        /// Two sizes, `m,n`.
        #[arg(long, value_delimiter = ',', num_args = 1, required = true)]
        sizes: Vec<usize>,
        /// Also print every morphism.
        #[arg(long)]
        list: bool,
    },
    /// Decide whether the two-object category of a monoid is exact, and
    /// compare with the monoid being a group.
    Classify {
        /// Cayley-table file (JSON).
        #[arg(long)]
        monoid: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteChoice {
    Theorem(Suite),
    Functoriality,
    FastPaths,
    All,
}

impl FromStr for SuiteChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "functoriality" => Ok(SuiteChoice::Functoriality),
            "fast-paths" => Ok(SuiteChoice::FastPaths),
            "all" => Ok(SuiteChoice::All),
            _ => s
                .parse::<Suite>()
                .map(SuiteChoice::Theorem)
                .map_err(|e| format!("{e}, functoriality, fast-paths or all")),
        }
    }
}

/// A rendered document and whether everything in it passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub document: String,
    pub passed: bool,
}

/// Parses arguments, runs, writes output, and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let _ = e.print();
            e.exit_code()
        }
    }
}

pub fn execute(cli: &Cli) -> i32 {
    let outcome = match run(cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("invcat: {e}");
            return e.exit_code();
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &outcome.document),
        None => std::io::stdout().write_all(outcome.document.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("invcat: cannot write output: {e}");
        return 2;
    }
    if outcome.passed {
        0
    } else {
        1
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, HarnessError> {
    let budget = Budget {
        max_size: cli.max_size,
        max_hom: cli.max_hom,
        sample: Sample {
            seed: cli.seed,
            count: cli.samples,
        },
    };
    let report = match &cli.command {
        Command::Axioms { spec } => on_instance(&load(spec, &budget)?, &Axioms)?,
        Command::Exactness { spec } => on_instance(&load(spec, &budget)?, &Exactness)?,
        Command::Theorems { spec, suite } => theorems(&load(spec, &budget)?, *suite)?,
        Command::Eval {
            spec,
            functor,
            morphism,
            projection,
        } => {
            return eval(
                &load(spec, &budget)?,
                *functor,
                morphism,
                projection,
                cli.format,
            )
        }
        Command::Enumerate { sizes, list } => {
            return enumerate(sizes, *list, cli.max_hom, cli.format)
        }
        Command::Classify { monoid } => classify_exactness(
            &MonoidFile::load(monoid)?,
            &Bound::exhaustive().with_max_hom(cli.max_hom),
        )?,
    };
    Ok(Outcome {
        document: render(&report, cli.format),
        passed: report.passed(),
    })
}

fn render(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => report.to_json() + "\n",
        Format::Text => report.to_text(),
    }
}

fn load(path: &std::path::Path, budget: &Budget) -> Result<Instance, HarnessError> {
    build_instance(&CategorySpec::load(path)?, budget)
}

/// A check that runs on any finite category, so one value can be applied
/// to either kind of instance.
trait Check {
    fn run<C: FiniteCategory>(
        &self,
        cat: &C,
        squares: &[NamedSquare<C::Morphism>],
        bound: &Bound,
    ) -> Result<VerificationReport, Error>;
}

fn on_instance(inst: &Instance, check: &impl Check) -> Result<VerificationReport, HarnessError> {
    Ok(match inst {
        Instance::Exhaustive {
            table,
            squares,
            bound,
            ..
        } => check.run(table, squares, bound)?,
        Instance::Sampled {
            pbij,
            squares,
            bound,
        } => check.run(&pbij.category, squares, bound)?,
    })
}

struct Axioms;

impl Check for Axioms {
    fn run<C: FiniteCategory>(
        &self,
        cat: &C,
        _: &[NamedSquare<C::Morphism>],
        bound: &Bound,
    ) -> Result<VerificationReport, Error> {
        Ok(VerificationReport::merge(
            "axioms",
            vec![
                check_inverse_category(cat, bound)?,
                check_baer_star(cat, bound)?,
            ],
        ))
    }
}

struct Exactness;

impl Check for Exactness {
    fn run<C: FiniteCategory>(
        &self,
        cat: &C,
        _: &[NamedSquare<C::Morphism>],
        bound: &Bound,
    ) -> Result<VerificationReport, Error> {
        check_exactness(cat, bound)
    }
}

/// The generic part of a suite choice; fast paths are added separately.
struct Theorems(SuiteChoice);

impl Check for Theorems {
    fn run<C: FiniteCategory>(
        &self,
        cat: &C,
        squares: &[NamedSquare<C::Morphism>],
        bound: &Bound,
    ) -> Result<VerificationReport, Error> {
        let functoriality = || {
            Functor::ALL
                .iter()
                .map(|&k| check_functoriality(cat, k, bound))
                .collect::<Result<Vec<_>, _>>()
        };
        match self.0 {
            SuiteChoice::Theorem(s) => check_suite(cat, s, bound, squares),
            SuiteChoice::Functoriality => {
                Ok(VerificationReport::merge("functoriality", functoriality()?))
            }
            SuiteChoice::All => {
                let mut reports = functoriality()?;
                for s in Suite::ALL {
                    reports.push(check_suite(cat, s, bound, squares)?);
                }
                Ok(VerificationReport::merge("all", reports))
            }
            SuiteChoice::FastPaths => unreachable!("fast paths need the partial-bijection model"),
        }
    }
}

fn theorems(inst: &Instance, choice: SuiteChoice) -> Result<VerificationReport, HarnessError> {
    let fast = |inst: &Instance| -> Result<VerificationReport, HarnessError> {
        let model = inst.pbij().ok_or_else(|| {
            HarnessError::Invalid("fast-paths needs a partial-bijection spec".into())
        })?;
        Ok(check_fast_paths(&model.category, inst.bound())?)
    };
    match choice {
        SuiteChoice::FastPaths => fast(inst),
        SuiteChoice::All if inst.pbij().is_some() => {
            let generic = on_instance(inst, &Theorems(choice))?;
            Ok(VerificationReport::merge("all", vec![generic, fast(inst)?]))
        }
        _ => on_instance(inst, &Theorems(choice)),
    }
}

fn eval(
    inst: &Instance,
    functor: Functor,
    morphism: &str,
    projection: &str,
    format: Format,
) -> Result<Outcome, HarnessError> {
    let model = inst
        .pbij()
        .ok_or_else(|| HarnessError::Invalid("eval needs a partial-bijection spec".into()))?;
    let cat = &model.category;
    let f = model
        .named
        .get(morphism)
        .ok_or_else(|| HarnessError::Invalid(format!("unknown morphism {morphism:?}")))?;
    let source: &FinSet = if functor.is_covariant() {
        f.dom()
    } else {
        f.cod()
    };
    let labels: Vec<&str> = projection
        .trim_matches(|c| c == '{' || c == '}')
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    let subset = Subset::new(source, &labels)?;
    let p = Projection::new(cat, subset.to_projection())?;
    let value = match functor {
        Functor::P => apply_p(cat, f, &p)?,
        Functor::PPrime => apply_p_prime(cat, f, &p)?,
        Functor::PDoublePrime => apply_p_double_prime(cat, f, &p)?,
    };
    let result = Subset::from_projection(value.morphism())
        .expect("projections of partial bijections are partial identities");
    let closed = match functor {
        Functor::P => f.image_of(&subset),
        Functor::PPrime => f.inverse_image(&subset),
        Functor::PDoublePrime => f.preimage(&subset),
    };
    let agrees = closed == result;

    #[derive(Serialize)]
    struct EvalDoc<'a> {
        format_version: u32,
        functor: String,
        morphism: &'a str,
        projection: Vec<&'a str>,
        result: Vec<&'a str>,
        closed_form_agrees: bool,
    }
    let document = match format {
        Format::Text => {
            let mut s = format!("{result}\n");
            if !agrees {
                let _ = writeln!(s, "closed form disagrees: {closed}");
            }
            s
        }
        Format::Json => {
            let doc = EvalDoc {
                format_version: crate::report::REPORT_FORMAT_VERSION,
                functor: functor.to_string(),
                morphism,
                projection: subset.labels().collect(),
                result: result.labels().collect(),
                closed_form_agrees: agrees,
            };
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
    };
    Ok(Outcome {
        document,
        passed: agrees,
    })
}

fn enumerate(
    sizes: &[usize],
    list: bool,
    max_hom: usize,
    format: Format,
) -> Result<Outcome, HarnessError> {
    let &[m, n] = sizes else {
        return Err(HarnessError::Invalid(format!(
            "--sizes takes two sizes m,n; got {}",
            sizes.len()
        )));
    };
    let oracle = hom_count(m, n);
    let all = enumerate_pbij(&FinSet::canonical(m), &FinSet::canonical(n), max_hom)?;
    let count = all.len() as u128;

    #[derive(Serialize)]
    struct EnumerateDoc {
        format_version: u32,
        sizes: [usize; 2],
        count: u128,
        expected: u128,
        #[serde(skip_serializing_if = "Option::is_none")]
        morphisms: Option<Vec<String>>,
    }
    let document = match format {
        Format::Text => {
            let mut s = format!("{count}\n");
            if list {
                for f in &all {
                    let _ = writeln!(s, "{f}");
                }
            }
            if count != oracle {
                let _ = writeln!(s, "expected {oracle}");
            }
            s
        }
        Format::Json => {
            let doc = EnumerateDoc {
                format_version: crate::report::REPORT_FORMAT_VERSION,
                sizes: [m, n],
                count,
                expected: oracle,
                morphisms: list.then(|| all.iter().map(ToString::to_string).collect()),
            };
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
    };
    Ok(Outcome {
        document,
        passed: count == oracle,
    })
}
