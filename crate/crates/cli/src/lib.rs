//! `nsring` command-line interface.
//!
//! [`run`] parses arguments, executes one command and writes to the given
//! streams, returning the process exit code:
//!
//! | code | meaning                     |
//! |------|-----------------------------|
//! | 0    | success                     |
//! | 1    | verification mismatch       |
//! | 2    | invalid input               |
//! | 3    | method not applicable       |
//! | 4    | size cap exceeded           |

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nsring_core::ci3::{self, frobenius_ci3, n_formula_a, n_formula_b, n_formula_c, CiEdim3Structure};
use nsring_core::claims::reference_claims;
use nsring_core::family::{self, FamilyMember, FamilySpec, GluedSemigroup, GluingStep};
use nsring_core::index::{self, IndexReport, Method};
use nsring_core::semigroup::{AperyEntry, Limits};
use nsring_core::verify::{self, Fault, VerifyConfig};
use nsring_core::{NsError, NumericalSemigroup};
use serde::Serialize;

mod output;

use output::{write_csv, Human};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_INAPPLICABLE: i32 = 3;
pub const EXIT_TOO_LARGE: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Human,
}

#[derive(Debug, Parser)]
#[command(name = "nsring", version, about = "Invariants of numerical semigroup rings")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Cap on the Frobenius number for table-based computations
    /// (default: $NSRING_MAX_FROBENIUS or 10^8).
    #[arg(long, global = true)]
    pub max_frobenius: Option<u64>,
    /// Cap on generator magnitude.
    #[arg(long, global = true)]
    pub max_generator: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GeneratorArgs {
    /// Comma-separated generators, e.g. `4,5,11`.
    #[arg(required_unless_present = "file", conflicts_with = "file")]
    pub generators: Option<String>,
    /// JSON file holding an array of generators.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Apery,
    Direct,
    OrdFormula,
    Ci3,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimal generators, Frobenius number, gaps, symmetry and Apéry set.
    Analyze(GeneratorArgs),
    /// Per-generator N values, index and Ding gap.
    Index {
        #[command(flatten)]
        gens: GeneratorArgs,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Complete-intersection structures of an embedding-dimension-3 semigroup.
    Ci3(GeneratorArgs),
    /// Glue `a` and `p` onto a base semigroup: ⟨a, p·H⟩.
    Glue {
        /// Base generators, comma-separated.
        #[arg(long, required_unless_present = "file")]
        base: Option<String>,
        #[arg(long, required_unless_present = "file")]
        a: Option<u64>,
        #[arg(long, required_unless_present = "file")]
        p: Option<u64>,
        /// JSON gluing step `{"base": [...], "a": .., "p": ..}`.
        #[arg(long, conflicts_with_all = ["base", "a", "p"])]
        file: Option<PathBuf>,
    },
    /// Build family members; emits one JSON line per member.
    Family {
        #[command(subcommand)]
        family: FamilyCommand,
        /// Worker threads for sweeps (default: logical cores).
        #[arg(long, global = true)]
        jobs: Option<usize>,
    },
    /// Formula-versus-oracle sweeps.
    Verify {
        #[arg(long, default_value_t = nsring_core::corpus::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        ci3_count: usize,
        #[arg(long, default_value_t = 100)]
        chain_count: usize,
        #[arg(long, default_value_t = 8)]
        hna_max_n: u32,
        /// Odd values of `a` for the H_{n,a} sweep.
        #[arg(long, value_delimiter = ',', default_value = "1,3,5,7,9")]
        hna_a: Vec<u64>,
        #[arg(long, default_value_t = 6)]
        ding_max_n: u32,
        #[arg(long, default_value_t = 50)]
        hypersurface_count: usize,
        #[arg(long)]
        jobs: Option<usize>,
        /// Harness self-test: corrupt N_b by one.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Recompute the reference values of the worked examples.
    #[command(name = "paper-examples")]
    Examples,
}

#[derive(Debug, Subcommand)]
pub enum FamilyCommand {
    /// H_{n,a} for n in 1..=max-n and each odd a.
    Hna {
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, default_value_t = 1)]
        max_n: u32,
        #[arg(long, value_delimiter = ',', default_value = "1")]
        a: Vec<u64>,
    },
    /// ⟨4n, (4n+1)(2n-1), (4n+1)(2n+1)⟩ for n in min-n..=max-n.
    Ding {
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, default_value_t = 2)]
        min_n: u32,
        #[arg(long, default_value_t = 6)]
        max_n: u32,
    },
    /// Family selector from a JSON file: a single spec or an array of specs.
    File { path: PathBuf },
}

/// A failure to report, with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub kind: String,
    pub message: String,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INVALID,
            kind: "InvalidInput".into(),
            message: message.into(),
        }
    }
}

pub fn exit_code_for(e: &NsError) -> i32 {
    match e {
        NsError::NotGorenstein { .. } | NsError::NotCiEdim3 { .. } | NsError::WrongEdim { .. } => {
            EXIT_INAPPLICABLE
        }
        NsError::TooLarge { .. } => EXIT_TOO_LARGE,
        NsError::Inconsistent(_) => EXIT_MISMATCH,
        _ => EXIT_INVALID,
    }
}

impl From<NsError> for Failure {
    fn from(e: NsError) -> Self {
        Failure {
            code: exit_code_for(&e),
            kind: e.kind().to_string(),
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<i32, Failure>;

struct Ctx<'a> {
    format: Format,
    limits: Limits,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn emit<T: Serialize + Human>(&mut self, value: &T) -> Result<(), Failure> {
        let io = |e: std::io::Error| Failure::invalid(format!("write failed: {e}"));
        match self.format {
            Format::Json => {
                let s = serde_json::to_string_pretty(value).expect("serializable");
                writeln!(self.out, "{s}").map_err(io)
            }
            Format::Human => value.human(self.out).map_err(io),
            Format::Csv => write_csv(value, self.out).map_err(io),
        }
    }

    fn emit_line<T: Serialize>(&mut self, value: &T) -> Result<(), Failure> {
        let s = serde_json::to_string(value).expect("serializable");
        writeln!(self.out, "{s}").map_err(|e| Failure::invalid(format!("write failed: {e}")))
    }

    fn semigroup(&self, args: &GeneratorArgs) -> Result<NumericalSemigroup, Failure> {
        let raw = match (&args.generators, &args.file) {
            (Some(s), _) => parse_generators(s)?,
            (None, Some(path)) => read_json::<Vec<u64>>(path)?,
            (None, None) => return Err(Failure::invalid("no generators given")),
        };
        Ok(NumericalSemigroup::with_limits(&raw, self.limits)?)
    }
}

pub fn parse_generators(s: &str) -> Result<Vec<u64>, Failure> {
    let parts: Vec<&str> = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|p| !p.is_empty())
        .collect();
    if parts.is_empty() {
        return Err(Failure::invalid(format!("no generators in `{s}`")));
    }
    parts
        .iter()
        .map(|p| {
            p.parse::<u64>()
                .map_err(|_| Failure::invalid(format!("`{p}` is not a positive integer")))
        })
        .collect()
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::invalid(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::invalid(format!("cannot parse {}: {e}", path.display())))
}

#[derive(Debug, Serialize)]
pub struct AnalyzeReport {
    pub generators: Vec<u64>,
    pub redundant: Vec<u64>,
    pub edim: usize,
    pub mult: u64,
    pub frobenius: i64,
    pub gap_count: u64,
    pub gorenstein: bool,
    pub apery_modulus: u64,
    /// `Ap(H; a_1)` sorted by element.
    pub apery: Vec<AperyEntry>,
}

fn analyze(h: &NumericalSemigroup) -> Result<AnalyzeReport, NsError> {
    let table = h.apery_set(h.multiplicity())?;
    let mut apery = table.entries.clone();
    apery.sort_by_key(|e| e.element);
    Ok(AnalyzeReport {
        generators: h.generators().to_vec(),
        redundant: h.redundant_inputs().to_vec(),
        edim: h.embedding_dimension(),
        mult: h.multiplicity(),
        frobenius: h.frobenius(),
        gap_count: h.gap_count()?,
        gorenstein: h.is_symmetric(),
        apery_modulus: table.modulus,
        apery,
    })
}

#[derive(Debug, Serialize)]
pub struct Ci3Entry {
    #[serde(flatten)]
    pub structure: CiEdim3Structure,
    pub frobenius: i64,
    pub n_a: u64,
    pub n_b: u64,
    pub n_c: u64,
}

#[derive(Debug, Serialize)]
pub struct Ci3Report {
    pub generators: Vec<u64>,
    pub structures: Vec<Ci3Entry>,
}

fn ci3_report(h: &NumericalSemigroup) -> Result<Ci3Report, NsError> {
    let structures = ci3::detect_ci3(h)?
        .into_iter()
        .map(|s| {
            Ok(Ci3Entry {
                frobenius: frobenius_ci3(&s),
                n_a: n_formula_a(&s),
                n_b: n_formula_b(&s)?,
                n_c: n_formula_c(&s)?,
                structure: s,
            })
        })
        .collect::<Result<Vec<_>, NsError>>()?;
    Ok(Ci3Report {
        generators: h.generators().to_vec(),
        structures,
    })
}

#[derive(Debug, Serialize)]
pub struct GlueReport {
    pub base: Vec<u64>,
    pub a: u64,
    pub p: u64,
    pub generators: Vec<u64>,
    pub frobenius: i64,
    pub frobenius_recurrence: i64,
    pub gorenstein: bool,
}

#[derive(Debug, Serialize)]
pub struct FamilyLine {
    pub family: FamilySpec,
    pub generators: Vec<u64>,
    pub expected_index: u32,
    pub expected_ding_gap: i64,
    pub report: IndexReport,
    #[serde(rename = "match")]
    pub matched: bool,
}

#[derive(Debug, Serialize)]
pub struct VerifySummary {
    pub seed: u64,
    pub ok: bool,
    pub checks: Vec<verify::CheckOutcome>,
}

fn with_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, Failure> {
    match jobs {
        None => Ok(f()),
        Some(0) => Err(Failure::invalid("--jobs must be at least 1")),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map(|pool| pool.install(f))
            .map_err(|e| Failure::invalid(format!("cannot build thread pool: {e}"))),
    }
}

fn family_line(spec: FamilySpec) -> Result<FamilyLine, NsError> {
    let FamilyMember {
        semigroup,
        expected,
    } = spec.build()?;
    let report = index::index_auto(&semigroup)?;
    Ok(FamilyLine {
        family: spec,
        generators: semigroup.generators().to_vec(),
        expected_index: expected.index,
        expected_ding_gap: expected.ding_gap,
        matched: report.index == expected.index && report.ding_gap == expected.ding_gap,
        report,
    })
}

fn run_family(ctx: &mut Ctx, family: &FamilyCommand, jobs: Option<usize>) -> CmdResult {
    let specs: Vec<FamilySpec> = match family {
        FamilyCommand::Hna { n, max_n, a } => {
            let ns: Vec<u32> = match n {
                Some(n) => vec![*n],
                None => (1..=*max_n).collect(),
            };
            ns.iter()
                .flat_map(|&n| a.iter().map(move |&a| FamilySpec::WatanabeHna { n, a }))
                .collect()
        }
        FamilyCommand::Ding { n, min_n, max_n } => match n {
            Some(n) => vec![FamilySpec::DingGap3gen { n: *n }],
            None => (*min_n..=*max_n).map(|n| FamilySpec::DingGap3gen { n }).collect(),
        },
        FamilyCommand::File { path } => {
            let value: serde_json::Value = read_json(path)?;
            let parsed = if value.is_array() {
                serde_json::from_value::<Vec<FamilySpec>>(value)
            } else {
                serde_json::from_value::<FamilySpec>(value).map(|s| vec![s])
            };
            parsed.map_err(|e| Failure::invalid(format!("bad family spec: {e}")))?
        }
    };
    if specs.is_empty() {
        return Err(Failure::invalid("empty family selection"));
    }
    for s in &specs {
        s.validate()?;
    }
    use rayon::prelude::*;
    let lines = with_pool(jobs, || {
        specs
            .par_iter()
            .map(|&s| family_line(s))
            .collect::<Vec<_>>()
    })?;
    let mut code = EXIT_OK;
    for line in lines {
        let line = line?;
        if !line.matched {
            code = EXIT_MISMATCH;
        }
        ctx.emit_line(&line)?;
    }
    Ok(code)
}

fn execute(cli: Cli, out: &mut dyn Write) -> CmdResult {
    let mut limits = Limits::from_env();
    if let Some(cap) = cli.max_frobenius {
        limits.max_frobenius = cap;
    }
    if let Some(cap) = cli.max_generator {
        limits.max_generator = cap;
    }
    let mut ctx = Ctx {
        format: cli.format,
        limits,
        out,
    };
    match cli.command {
        Command::Analyze(args) => {
            let h = ctx.semigroup(&args)?;
            let report = analyze(&h)?;
            ctx.emit(&report)?;
            Ok(EXIT_OK)
        }
        Command::Index { gens, method } => {
            let h = ctx.semigroup(&gens)?;
            let report = match method {
                MethodArg::Auto => index::index_auto(&h)?,
                MethodArg::Apery => index::index(&h, Method::Apery)?,
                MethodArg::Direct => index::index(&h, Method::Direct)?,
                MethodArg::OrdFormula => index::index(&h, Method::OrdFormula)?,
                MethodArg::Ci3 => index::index(&h, Method::Ci3)?,
            };
            ctx.emit(&report)?;
            Ok(EXIT_OK)
        }
        Command::Ci3(args) => {
            let h = ctx.semigroup(&args)?;
            let report = ci3_report(&h)?;
            if report.structures.is_empty() {
                return Err(NsError::NotCiEdim3 {
                    generators: report.generators,
                }
                .into());
            }
            ctx.emit(&report)?;
            Ok(EXIT_OK)
        }
        Command::Glue { base, a, p, file } => {
            let step = match file {
                Some(path) => {
                    let step: GluingStep = read_json(&path)?;
                    // re-validate the base under the active limits
                    let base = NumericalSemigroup::with_limits(step.base.generators(), ctx.limits)?;
                    GluingStep::new(base, step.a, step.p)?
                }
                None => {
                    let base = parse_generators(base.as_deref().unwrap_or_default())?;
                    let base = NumericalSemigroup::with_limits(&base, ctx.limits)?;
                    GluingStep::new(base, a.unwrap_or_default(), p.unwrap_or_default())?
                }
            };
            let glued = GluedSemigroup::root(step.base.clone()).glue(step.a, step.p)?;
            let h = &glued.semigroup;
            let report = GlueReport {
                base: step.base.generators().to_vec(),
                a: step.a,
                p: step.p,
                generators: h.generators().to_vec(),
                frobenius: h.frobenius(),
                frobenius_recurrence: family::frobenius_glued(&step)?,
                gorenstein: h.is_symmetric(),
            };
            let code = if report.frobenius == report.frobenius_recurrence && report.gorenstein {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            };
            ctx.emit(&report)?;
            Ok(code)
        }
        Command::Family { family, jobs } => run_family(&mut ctx, &family, jobs),
        Command::Verify {
            seed,
            ci3_count,
            chain_count,
            hna_max_n,
            hna_a,
            ding_max_n,
            hypersurface_count,
            jobs,
            inject_fault,
        } => {
            if let Some(&even) = hna_a.iter().find(|&&a| a % 2 == 0) {
                return Err(Failure::invalid(format!("--hna-a values must be odd, got {even}")));
            }
            let config = VerifyConfig {
                seed,
                ci3_count,
                chain_count,
                hna_max_n,
                hna_a_values: hna_a,
                ding_max_n,
                hypersurface_count,
                fault: if inject_fault { Fault::NbOffByOne } else { Fault::None },
            };
            let checks = with_pool(jobs, || verify::run(&config))?;
            let ok = checks.iter().all(|c| c.ok());
            ctx.emit(&VerifySummary { seed, ok, checks })?;
            Ok(if ok { EXIT_OK } else { EXIT_MISMATCH })
        }
        Command::Examples => {
            let rows = reference_claims();
            let ok = rows.iter().all(|r| r.matched);
            ctx.emit(&rows)?;
            Ok(if ok { EXIT_OK } else { EXIT_MISMATCH })
        }
    }
}

#[derive(Serialize)]
struct ErrorObject<'a> {
    error: &'a str,
    message: &'a str,
    exit_code: i32,
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let format = cli.format;
    match execute(cli, out) {
        Ok(code) => code,
        Err(failure) => {
            let _ = match format {
                Format::Human => writeln!(err, "error: {}", failure.message),
                _ => writeln!(
                    err,
                    "{}",
                    serde_json::to_string(&ErrorObject {
                        error: &failure.kind,
                        message: &failure.message,
                        exit_code: failure.code,
                    })
                    .expect("serializable")
                ),
            };
            failure.code
        }
    }
}
