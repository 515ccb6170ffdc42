//! `koornwinder`: coefficient tables, identity suites and operator order for
//! the symmetric generalized ultraspherical polynomials.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use koornwinder::diffeq::{self, CoeffSet};
use koornwinder::rational::{self, Rational};
use koornwinder::suites::{self, Suite, SuiteConfig};
use koornwinder::ultraspherical::ultra_def1;

use render::Format;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "koornwinder", version, about = "Exact differential equations for generalized ultraspherical polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit a0(n) and a_i, b_i, c_i
    Coeffs(CoeffsArgs),
    /// Run identity suites over the built-in grids
    Verify(VerifyArgs),
    /// Check the full differential equation for one polynomial
    OdeCheck(OdeArgs),
    /// Finite order and leading coefficient for integer alpha
    Order(OrderArgs),
    /// Print P_n^{(a,a)}, C0, C1 and P_n^{a,a,M,M}
    Eval(EvalArgs),
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    rational::parse(s).map_err(|e| e.to_string())
}

#[derive(Args, Debug)]
struct FormatArg {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
enum Route {
    /// closed-form b_i, c_i
    Closed,
    /// solve the shifted derivative system by inversion
    Inversion,
}

#[derive(Args, Debug)]
struct CoeffsArgs {
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    alpha: Rational,
    #[arg(long, default_value_t = 6)]
    max_i: usize,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational, default_value = "0")]
    a01: Rational,
    /// last n of the a0(n) table
    #[arg(long, default_value_t = 10)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Route::Closed)]
    route: Route,
    #[command(flatten)]
    fmt: FormatArg,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value = "all", value_parser = |s: &str| s.parse::<Suite>().map_err(|e| e.to_string()))]
    suite: Suite,
    /// restrict the alpha grid to one value
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    alpha: Option<Rational>,
    /// upper index of each sweep (i, j, or n depending on the suite)
    #[arg(long)]
    max_i: Option<usize>,
    #[command(flatten)]
    fmt: FormatArg,
}

#[derive(Args, Debug)]
struct OdeArgs {
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    alpha: Rational,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    m: Rational,
    #[arg(long)]
    n: usize,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational, default_value = "0")]
    a01: Rational,
    /// add this amount to a0(n) before checking (fault injection)
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    perturb: Option<Rational>,
    #[command(flatten)]
    fmt: FormatArg,
}

#[derive(Args, Debug)]
struct OrderArgs {
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    alpha: Rational,
    /// check c_i = 0 up to this index (default 2*alpha+12)
    #[arg(long)]
    probe: Option<usize>,
    #[command(flatten)]
    fmt: FormatArg,
}

#[derive(Args, Debug)]
struct EvalArgs {
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    alpha: Rational,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational, default_value = "0")]
    m: Rational,
    #[arg(long)]
    n: usize,
    /// also evaluate at this point
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    x: Option<Rational>,
    #[command(flatten)]
    fmt: FormatArg,
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<koornwinder::Error> for Failure {
    fn from(e: koornwinder::Error) -> Self {
        match e {
            koornwinder::Error::Domain(_) | koornwinder::Error::Parse { .. } => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Check(other.to_string()),
        }
    }
}

type CmdResult = Result<ExitCode, Failure>;

fn require_alpha(alpha: &Rational) -> Result<(), Failure> {
    diffeq::check_alpha(alpha).map_err(Failure::from)
}

fn cmd_coeffs(args: &CoeffsArgs) -> CmdResult {
    require_alpha(&args.alpha)?;
    if args.max_i == 0 {
        return Err(Failure::Usage("--max-i must be at least 1".into()));
    }
    let set = match args.route {
        Route::Closed => CoeffSet::closed_form(&args.alpha, &args.a01, args.max_i, args.n)?,
        Route::Inversion => diffeq::coeffs_via_inversion(&args.alpha, &args.a01, args.max_i)?,
    };
    let table: Vec<Rational> = (0..=args.n).map(|n| set.a0(n)).collect();
    print!("{}", render::coeffs(&set, &table, args.fmt.format));
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: &VerifyArgs) -> CmdResult {
    if let Some(a) = &args.alpha {
        require_alpha(a)?;
    }
    let config = SuiteConfig {
        alphas: args.alpha.clone().map(|a| vec![a]),
        bound: args.max_i,
        ..Default::default()
    };
    let reports = suites::run(args.suite, &config)?;
    let passed = reports.iter().all(|r| r.passed());
    print!("{}", render::reports(&reports, args.fmt.format));
    if passed {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(EXIT_FAIL))
    }
}

fn cmd_ode_check(args: &OdeArgs) -> CmdResult {
    diffeq::GenParams::new(args.alpha.clone(), args.m.clone(), args.n)?;
    let residual = match &args.perturb {
        None => diffeq::ode_residual(&args.alpha, &args.m, args.n, &args.a01)?,
        Some(delta) => {
            let set = CoeffSet::closed_form(&args.alpha, &args.a01, args.n.max(1), args.n)?;
            let mut a0 = set.a0_table().to_vec();
            a0[args.n] += delta;
            let bad = CoeffSet::from_parts(
                args.alpha.clone(),
                args.a01.clone(),
                set.b_all().to_vec(),
                set.c_all().to_vec(),
                a0,
            )?;
            diffeq::ode_residual_with(&bad, &args.m, args.n)?
        }
    };
    print!(
        "{}",
        render::ode(&args.alpha, &args.m, args.n, &args.a01, &residual, args.fmt.format)
    );
    if residual.is_zero() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(EXIT_FAIL))
    }
}

fn cmd_order(args: &OrderArgs) -> CmdResult {
    let Some(a) = rational::to_nonneg_usize(&args.alpha) else {
        return Err(Failure::Usage(format!(
            "finite order requires a nonnegative integer alpha and a0(1,alpha) = 0; got alpha = {}",
            rational::format(&args.alpha)
        )));
    };
    let probe = args.probe.unwrap_or(2 * a + 12);
    let fo = diffeq::finite_order(&args.alpha, probe)?;
    print!("{}", render::order(&args.alpha, &fo, probe, args.fmt.format));
    Ok(ExitCode::SUCCESS)
}

fn cmd_eval(args: &EvalArgs) -> CmdResult {
    diffeq::GenParams::new(args.alpha.clone(), args.m.clone(), args.n)?;
    let (c0, c1) = diffeq::gen_c0c1(args.n, &args.alpha, &args.m)?;
    let classical = ultra_def1(args.n, &args.alpha);
    let general = diffeq::gen_poly(args.n, &args.alpha, &args.m)?;
    let doc = render::EvalDoc {
        alpha: &args.alpha,
        m: &args.m,
        n: args.n,
        c0: &c0,
        c1: &c1,
        classical: &classical,
        general: &general,
        x: args.x.as_ref(),
    };
    print!("{}", render::eval(&doc, args.fmt.format));
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::Coeffs(a) => cmd_coeffs(a),
        Command::Verify(a) => cmd_verify(a),
        Command::OdeCheck(a) => cmd_ode_check(a),
        Command::Order(a) => cmd_order(a),
        Command::Eval(a) => cmd_eval(a),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("verification error: {msg}");
            ExitCode::from(EXIT_FAIL)
        }
    }
}
