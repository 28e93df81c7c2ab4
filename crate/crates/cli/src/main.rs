//! Command-line front end: block partitions, invariants, tableaux, parameter
//! conversion and the engine verification suites, with JSON and human output.
//!
//! Exit codes: 0 success, 1 verification suite failure, 2 invalid input,
//! 3 resource cap hit.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use rrca::blocks::{
    block_invariant, block_partition_gmdn, same_block, BlockError, BlockInvariant, ModuleLabel,
};
use rrca::cherednik::{CherednikAlgebra, CheckReport, EngineError};
use rrca::combin::{enumerate_standard_tableaux, Multipartition};
use rrca::exactnum::{parse::parse_cyclotomic, CycloField, Cyclotomic};
use rrca::params::{h_to_c, NumericParams, ParamSpec};

#[derive(Parser)]
#[command(
    name = "rrca",
    version,
    about = "Block decompositions of restricted rational Cherednik algebras for G(m,d,n), \
             with an exact PBW verification engine"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Block partition of all baby Verma modules of the restricted algebra
    Blocks(BlocksArgs),
    /// Block invariant (multiset of exponents) of one multipartition
    Invariant(InvariantArgs),
    /// Decide whether two multipartitions lie in the same block
    #[command(name = "same-block")]
    SameBlock(SameBlockArgs),
    /// Enumerate the standard tableaux on a multipartition
    Tableaux(TableauxArgs),
    /// Convert parameters between the (kappa, c_l) and (H_j, a_i, C) forms
    Convert(ConvertArgs),
    /// Run an identity-verification suite in the algebra engine
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ParamArgs {
    /// kappa as a cyclotomic literal, e.g. "1", "-1/2", "z^3" (numeric mode)
    #[arg(long, allow_hyphen_values = true)]
    kappa: Option<String>,
    /// comma-separated c_1..c_{m-1} as cyclotomic literals (numeric mode)
    #[arg(long, allow_hyphen_values = true)]
    c: Option<String>,
    /// generic-symbolic mode: kappa and H_1..H_{m-1} as formal symbols
    #[arg(long)]
    generic: bool,
    /// cyclotomic order N for numeric values (default m; m must divide N)
    #[arg(long)]
    zeta_order: Option<u32>,
}

#[derive(Args)]
struct BlocksArgs {
    /// cyclic-group order m of G(m,d,n)
    #[arg(long)]
    m: usize,
    /// divisor of m selecting the normal subgroup G(m,d,n)
    #[arg(long, default_value_t = 1)]
    d: usize,
    /// rank n: the total number of boxes
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    params: ParamArgs,
    /// machine-readable JSON output
    #[arg(long)]
    json: bool,
    /// worker threads for invariant evaluation (output is identical)
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// write output to a file instead of stdout
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct InvariantArgs {
    /// cyclic-group order m
    #[arg(long)]
    m: usize,
    /// expected size of the multipartition
    #[arg(long)]
    n: usize,
    /// multipartition as JSON, e.g. "[[3,3],[2,1,1]]"
    #[arg(long)]
    lambda: String,
    #[command(flatten)]
    params: ParamArgs,
    /// machine-readable JSON output
    #[arg(long)]
    json: bool,
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct SameBlockArgs {
    /// cyclic-group order m
    #[arg(long)]
    m: usize,
    /// optional size check for both multipartitions
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    lambda: String,
    #[arg(long)]
    mu: String,
    #[command(flatten)]
    params: ParamArgs,
    /// machine-readable JSON output
    #[arg(long)]
    json: bool,
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct TableauxArgs {
    /// cyclic-group order m
    #[arg(long)]
    m: usize,
    #[arg(long)]
    lambda: String,
    /// machine-readable JSON output
    #[arg(long)]
    json: bool,
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct ConvertArgs {
    /// cyclic-group order m
    #[arg(long)]
    m: usize,
    /// kappa (optional; enters only through h = -kappa)
    #[arg(long, allow_hyphen_values = true)]
    kappa: Option<String>,
    /// comma-separated c_1..c_{m-1}: convert to the H/a/C form
    #[arg(long, allow_hyphen_values = true, conflicts_with = "h_values")]
    c: Option<String>,
    /// comma-separated H_0..H_{m-1} summing to zero: convert back to c
    #[arg(long = "H", allow_hyphen_values = true)]
    h_values: Option<String>,
    #[arg(long)]
    zeta_order: Option<u32>,
    /// machine-readable JSON output
    #[arg(long)]
    json: bool,
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Suite {
    Hecke,
    Gamma,
    Zcomm,
    Plemmas,
    Central,
    Euler,
    Psi,
    #[value(name = "do-equality")]
    DoEquality,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    /// cyclic-group order m
    #[arg(long)]
    m: usize,
    /// rank n
    #[arg(long)]
    n: usize,
    /// restrict centrality / P-lemma checks to one r
    #[arg(long)]
    r: Option<usize>,
    /// restrict the telescoped P-sum recursion to one k
    #[arg(long)]
    k: Option<usize>,
    /// machine-readable JSON output
    #[arg(long)]
    json: bool,
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

enum CliError {
    Invalid(String),
    Resource(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Resource(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Invalid(m) | CliError::Resource(m) => m,
        }
    }
}

impl From<BlockError> for CliError {
    fn from(e: BlockError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<EngineError> for CliError {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::GroupTooLarge { .. } | EngineError::TooManyTerms { .. } => {
                CliError::Resource(e.to_string())
            }
            EngineError::IndexOutOfRange { .. } => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<rrca::params::ParamError> for CliError {
    fn from(e: rrca::params::ParamError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

fn parse_params(args: &ParamArgs, m: usize) -> Result<ParamSpec, CliError> {
    if m < 1 {
        return Err(CliError::Invalid("m must be >= 1".into()));
    }
    if args.generic {
        if args.kappa.is_some() || args.c.is_some() || args.zeta_order.is_some() {
            return Err(CliError::Invalid(
                "--generic is mutually exclusive with --kappa/--c/--zeta-order".into(),
            ));
        }
        return Ok(ParamSpec::Generic { m });
    }
    let Some(kappa_text) = &args.kappa else {
        return Err(CliError::Invalid(
            "exactly one parameter mode required: pass --kappa (with --c for m >= 2) or --generic"
                .into(),
        ));
    };
    let order = args.zeta_order.unwrap_or(m as u32);
    if order == 0 || !(order as usize).is_multiple_of(m) {
        return Err(CliError::Invalid(format!(
            "--zeta-order {order} must be a positive multiple of m = {m}"
        )));
    }
    let field = CycloField::new(order);
    let kappa = parse_cyclotomic(&field, kappa_text)
        .map_err(|e| CliError::Invalid(format!("--kappa: {e}")))?;
    let c = parse_cyclo_list(&field, args.c.as_deref(), "--c")?;
    if c.len() != m - 1 {
        return Err(CliError::Invalid(format!(
            "--c needs exactly {} comma-separated values for m = {m}, got {}",
            m - 1,
            c.len()
        )));
    }
    Ok(ParamSpec::Numeric(NumericParams::new(m, kappa, c)?))
}

fn parse_cyclo_list(
    field: &CycloField,
    text: Option<&str>,
    flag: &str,
) -> Result<Vec<Cyclotomic>, CliError> {
    let Some(text) = text else {
        return Ok(Vec::new());
    };
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .map(|piece| {
            parse_cyclotomic(field, piece).map_err(|e| CliError::Invalid(format!("{flag}: {e}")))
        })
        .collect()
}

fn parse_multipartition(text: &str, m: usize) -> Result<Multipartition, CliError> {
    let lambda: Multipartition = serde_json::from_str(text)
        .map_err(|e| CliError::Invalid(format!("invalid multipartition `{text}`: {e}")))?;
    if lambda.m() != m {
        return Err(CliError::Invalid(format!(
            "multipartition has {} components, expected m = {m}",
            lambda.m()
        )));
    }
    Ok(lambda)
}

fn emit(out: &Option<std::path::PathBuf>, content: String) -> Result<(), CliError> {
    use std::io::Write;
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| CliError::Invalid(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            match stdout.write_all(content.as_bytes()) {
                Ok(()) => Ok(()),
                // downstream closed the pipe (e.g. head); not an error
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => {
                    std::process::exit(0);
                }
                Err(e) => Err(CliError::Invalid(format!("cannot write to stdout: {e}"))),
            }
        }
    }
}

fn to_json_string<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

fn invariant_entries_human(inv: &BlockInvariant) -> String {
    match inv {
        BlockInvariant::Numeric(v) => {
            let parts: Vec<String> = v.iter().map(|e| e.to_string()).collect();
            format!("[{}]", parts.join(", "))
        }
        BlockInvariant::Generic(v) => {
            let parts: Vec<String> = v.iter().map(|e| e.to_string()).collect();
            format!("[{}]", parts.join(", "))
        }
    }
}

fn run_blocks(args: &BlocksArgs) -> Result<(), CliError> {
    let params = parse_params(&args.params, args.m)?;
    if args.threads == 0 {
        return Err(CliError::Invalid("--threads must be >= 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.threads)
        .build()
        .map_err(|e| CliError::Invalid(format!("thread pool: {e}")))?;
    let partition = pool.install(|| block_partition_gmdn(args.m, args.d, args.n, &params))?;
    let content = if args.json {
        to_json_string(&partition)
    } else {
        let mut s = String::new();
        let mode = match partition.mode {
            rrca::blocks::ParamMode::Numeric => "numeric",
            rrca::blocks::ParamMode::Generic => "generic",
        };
        let _ = writeln!(
            s,
            "group G(m={}, d={}, n={}), {mode} parameters: {} blocks",
            partition.group.m,
            partition.group.d,
            partition.group.n,
            partition.class_count()
        );
        for (i, class) in partition.classes.iter().enumerate() {
            let labels: Vec<String> = class.iter().map(|l| show_label(l, args.d)).collect();
            let _ = writeln!(s, "block {}: {}", i + 1, labels.join("  "));
        }
        s
    };
    emit(&args.out, content)
}

// Human form of a label; orbit labels echo the whole rotation orbit.
fn show_label(label: &ModuleLabel, d: usize) -> String {
    match label {
        ModuleLabel::Wreath(l) => l.to_string(),
        ModuleLabel::Orbit { rep, epsilon } => {
            let members = match rep.orbit(d) {
                Ok((orbit, _)) => orbit
                    .iter()
                    .map(|l| l.to_string())
                    .collect::<Vec<_>>()
                    .join(" ~ "),
                Err(_) => rep.to_string(),
            };
            format!("({{{members}}}, eps={epsilon})")
        }
    }
}

fn run_invariant(args: &InvariantArgs) -> Result<(), CliError> {
    let params = parse_params(&args.params, args.m)?;
    let lambda = parse_multipartition(&args.lambda, args.m)?;
    if lambda.size() != args.n {
        return Err(CliError::Invalid(format!(
            "multipartition has size {}, expected n = {}",
            lambda.size(),
            args.n
        )));
    }
    let inv = block_invariant(&lambda, &params)?;
    let content = if args.json {
        to_json_string(&inv)
    } else {
        format!("invariant of {lambda}: {}\n", invariant_entries_human(&inv))
    };
    emit(&args.out, content)
}

fn run_same_block(args: &SameBlockArgs) -> Result<(), CliError> {
    let params = parse_params(&args.params, args.m)?;
    let lambda = parse_multipartition(&args.lambda, args.m)?;
    let mu = parse_multipartition(&args.mu, args.m)?;
    if let Some(n) = args.n {
        for (name, l) in [("lambda", &lambda), ("mu", &mu)] {
            if l.size() != n {
                return Err(CliError::Invalid(format!(
                    "{name} has size {}, expected n = {n}",
                    l.size()
                )));
            }
        }
    }
    let answer = same_block(&lambda, &mu, &params)?;
    let inv_lambda = block_invariant(&lambda, &params)?;
    let inv_mu = block_invariant(&mu, &params)?;
    let content = if args.json {
        let value = serde_json::json!({
            "same_block": answer,
            "lambda_invariant": inv_lambda,
            "mu_invariant": inv_mu,
        });
        to_json_string(&value)
    } else {
        format!(
            "lambda invariant: {}\nmu invariant:     {}\nsame block: {answer}\n",
            invariant_entries_human(&inv_lambda),
            invariant_entries_human(&inv_mu)
        )
    };
    emit(&args.out, content)
}

fn run_tableaux(args: &TableauxArgs) -> Result<(), CliError> {
    let lambda = parse_multipartition(&args.lambda, args.m)?;
    let tableaux = enumerate_standard_tableaux(&lambda);
    let content = if args.json {
        let listed: Vec<Vec<[u32; 3]>> = tableaux
            .iter()
            .map(|t| {
                t.entries()
                    .iter()
                    .map(|b| [b.component as u32, b.row, b.col])
                    .collect()
            })
            .collect();
        let value = serde_json::json!({
            "shape": lambda,
            "count": tableaux.len(),
            "tableaux": listed,
        });
        to_json_string(&value)
    } else {
        let mut s = String::new();
        let _ = writeln!(s, "{} standard tableaux on {lambda}", tableaux.len());
        for (i, t) in tableaux.iter().enumerate() {
            let cells: Vec<String> = t
                .entries()
                .iter()
                .enumerate()
                .map(|(e, b)| format!("{}->({},{},{})", e + 1, b.component, b.row, b.col))
                .collect();
            let _ = writeln!(s, "T{}: {}", i + 1, cells.join(" "));
        }
        s
    };
    emit(&args.out, content)
}

fn run_convert(args: &ConvertArgs) -> Result<(), CliError> {
    let m = args.m;
    if m < 1 {
        return Err(CliError::Invalid("m must be >= 1".into()));
    }
    let order = args.zeta_order.unwrap_or(m as u32);
    if order == 0 || !(order as usize).is_multiple_of(m) {
        return Err(CliError::Invalid(format!(
            "--zeta-order {order} must be a positive multiple of m = {m}"
        )));
    }
    let field = CycloField::new(order);
    if let Some(h_text) = &args.h_values {
        let big_h = parse_cyclo_list(&field, Some(h_text), "--H")?;
        let c = h_to_c(m, &big_h)?;
        let shown: Vec<String> = c.iter().map(|v| v.to_string()).collect();
        let content = if args.json {
            to_json_string(&serde_json::json!({ "c": shown }))
        } else {
            format!("c = [{}]\n", shown.join(", "))
        };
        return emit(&args.out, content);
    }
    let c = parse_cyclo_list(&field, args.c.as_deref(), "--c")?;
    if c.len() != m - 1 {
        return Err(CliError::Invalid(format!(
            "--c needs exactly {} comma-separated values for m = {m}, got {}",
            m - 1,
            c.len()
        )));
    }
    let kappa = match &args.kappa {
        Some(text) => parse_cyclotomic(&field, text)
            .map_err(|e| CliError::Invalid(format!("--kappa: {e}")))?,
        None => field.zero(),
    };
    let derived = NumericParams::new(m, kappa, c)?.derive();
    let content = if args.json {
        to_json_string(&derived)
    } else {
        let show = |v: &[Cyclotomic]| {
            v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
        };
        format!(
            "H = [{}]\na = [{}]\nC = {}\nh = {}\n",
            show(&derived.big_h),
            show(&derived.a),
            derived.big_c,
            derived.h
        )
    };
    emit(&args.out, content)
}

fn run_verify(args: &VerifyArgs) -> Result<u8, CliError> {
    let alg = CherednikAlgebra::new(args.m, args.n)?;
    if let Some(r) = args.r {
        let max_r = match args.suite {
            Suite::Plemmas => args.n.saturating_sub(1),
            _ => args.n,
        };
        if r < 1 || r > max_r {
            return Err(CliError::Invalid(format!(
                "--r {r} out of range 1..={max_r} for this suite"
            )));
        }
    }
    if let Some(k) = args.k {
        if k < 1 || k >= args.n {
            return Err(CliError::Invalid(format!(
                "--k {k} out of range 1..={}",
                args.n - 1
            )));
        }
    }
    let report: CheckReport = match args.suite {
        Suite::Hecke => alg.hecke_suite()?,
        Suite::Gamma => alg.gamma_suite()?,
        Suite::Zcomm => alg.zcomm_suite()?,
        Suite::Plemmas => alg.p_lemma_suite(args.r, args.k)?,
        Suite::Central => alg.central_suite(args.r)?,
        Suite::Euler => alg.euler_suite()?,
        Suite::Psi => alg.psi_suite()?,
        Suite::DoEquality => alg.do_equality_suite()?,
    };
    let content = if args.json {
        to_json_string(&report)
    } else {
        let mut s = String::new();
        for case in &report.cases {
            let _ = writeln!(s, "{} {}", if case.pass { "PASS" } else { "FAIL" }, case.id);
        }
        let _ = writeln!(
            s,
            "suite {}: {}/{} passed",
            report.suite,
            report.cases.iter().filter(|c| c.pass).count(),
            report.cases.len()
        );
        s
    };
    emit(&args.out, content)?;
    Ok(if report.all_pass() { 0 } else { 1 })
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match &cli.command {
        Command::Blocks(args) => run_blocks(args).map(|()| 0),
        Command::Invariant(args) => run_invariant(args).map(|()| 0),
        Command::SameBlock(args) => run_same_block(args).map(|()| 0),
        Command::Tableaux(args) => run_tableaux(args).map(|()| 0),
        Command::Convert(args) => run_convert(args).map(|()| 0),
        Command::Verify(args) => run_verify(args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
