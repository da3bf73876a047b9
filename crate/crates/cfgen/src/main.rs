//! `cfgen`: build, verify, evaluate, and transform the catalog of
//! continued-fraction expansions, or extract one from a raw power series.

use std::process::ExitCode;
use std::time::Instant;

use cfrac::numerics::Rational;
use cfrac::transform::LftCoeffs;
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cfgen::commands::{self, CmdError, CmdResult};
use cfgen::family::{self, FamilyFlags};
use cfgen::report;

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse::<Rational>()
        .map_err(|_| format!("'{s}' is not an exact rational (use p or p/q)"))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    /// catalog family: arctan, bernoulli, cauchy, cauchy_interleaved,
    /// euler, euler2, harmonic, zeta, ogf_bernoulli, ogf_cauchy
    #[arg(long)]
    family: String,

    /// hypergeometric level (bernoulli, cauchy, cauchy_interleaved, euler, euler2)
    #[arg(long = "N")]
    n: Option<u32>,

    /// deformation parameter, an exact rational like 1/2 or -1/3 (bernoulli, cauchy)
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    lambda: Option<Rational>,

    /// power of the linear terms (harmonic)
    #[arg(long)]
    m: Option<u32>,

    /// arithmetic-progression step (harmonic)
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    a: Option<Rational>,

    /// arithmetic-progression offset (harmonic)
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    b: Option<Rational>,

    /// exponent of the power sums (zeta)
    #[arg(long)]
    s: Option<u32>,
}

impl FamilyArgs {
    fn flags(&self) -> FamilyFlags {
        FamilyFlags {
            family: self.family.clone(),
            n: self.n,
            lambda: self.lambda.clone(),
            m: self.m,
            a: self.a.clone(),
            b: self.b.clone(),
            s: self.s,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "cfgen",
    about = "Exact continued-fraction expansions of classical generating functions",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a fraction's levels and convergent polynomials
    Expand(ExpandArgs),
    /// Run the invariant checks for one family or the whole grid
    Verify(VerifyArgs),
    /// Evaluate the deepest convergent at a rational point
    Eval(EvalArgs),
    /// Apply a linear fractional map (a v + b)/(c v + d) to a fraction
    Transform(TransformArgs),
    /// Extract a C-fraction from a power series
    #[command(name = "series2cf")]
    Series2cf(Series2cfArgs),
    /// List a family's named numbers
    Table(TableArgs),
}

#[derive(Args, Debug)]
struct ExpandArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// number of partial terms
    #[arg(long, default_value_t = 10)]
    depth: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
#[command(group = ArgGroup::new("target").required(true).args(["family", "all"]))]
struct VerifyArgs {
    /// catalog family to check
    #[arg(long)]
    family: Option<String>,

    /// check every instance of the built-in parameter grid
    #[arg(long)]
    all: bool,

    #[arg(long = "N")]
    n: Option<u32>,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    lambda: Option<Rational>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    a: Option<Rational>,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    b: Option<Rational>,
    #[arg(long)]
    s: Option<u32>,

    #[arg(long, default_value_t = 10)]
    depth: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct EvalArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long, default_value_t = 10)]
    depth: usize,
    /// evaluation point, an exact rational
    #[arg(long, default_value = "1", value_parser = parse_rational, allow_hyphen_values = true)]
    x: Rational,
    /// fractional digits of the truncated decimal
    #[arg(long, default_value_t = 28)]
    digits: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct TransformArgs {
    /// family to transform (needs the regular g/h level shape)
    #[arg(long)]
    family: String,
    #[arg(long = "N")]
    n: Option<u32>,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    lambda: Option<Rational>,

    /// map coefficient a in (a v + b)/(c v + d)
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    a: Rational,
    /// map coefficient b
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    b: Rational,
    /// map coefficient c
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    c: Rational,
    /// map coefficient d
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    d: Rational,

    #[arg(long, default_value_t = 10)]
    depth: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct Series2cfArgs {
    /// ogf-cauchy | ogf-bernoulli | egf-bernoulli | egf-cauchy | file:PATH
    /// (file: JSON {"coeffs": ["p/q", ...], "order": K})
    #[arg(long)]
    source: String,
    /// number of levels to extract
    #[arg(long, default_value_t = 10)]
    depth: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// largest index listed (the table runs n = 0..=depth)
    #[arg(long, default_value_t = 10)]
    depth: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn finish<R: Serialize>(result: CmdResult<R>, format: Format, started: Instant) -> u8 {
    match result {
        Ok((rep, text, passed)) => {
            match format {
                Format::Text => print!("{text}"),
                Format::Json => print!(
                    "{}",
                    report::to_json(rep, started.elapsed().as_millis())
                ),
            }
            if passed {
                0
            } else {
                EXIT_FAILED
            }
        }
        Err(CmdError::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(CmdError::Failed(msg)) => {
            eprintln!("error: {msg}");
            EXIT_FAILED
        }
    }
}

fn usage(msg: String) -> u8 {
    eprintln!("error: {msg}");
    EXIT_USAGE
}

fn run(cli: Cli) -> u8 {
    let started = Instant::now();
    match cli.command {
        Command::Expand(args) => {
            let id = match family::resolve(&args.family.flags()) {
                Ok(id) => id,
                Err(m) => return usage(m),
            };
            if let Err(m) = family::check_depth(args.depth) {
                return usage(m);
            }
            finish(commands::cmd_expand(&id, args.depth), args.format, started)
        }
        Command::Verify(args) => {
            if let Err(m) = family::check_depth(args.depth) {
                return usage(m);
            }
            let id = match &args.family {
                Some(name) => {
                    let flags = FamilyFlags {
                        family: name.clone(),
                        n: args.n,
                        lambda: args.lambda.clone(),
                        m: args.m,
                        a: args.a.clone(),
                        b: args.b.clone(),
                        s: args.s,
                    };
                    match family::resolve(&flags) {
                        Ok(id) => Some(id),
                        Err(m) => return usage(m),
                    }
                }
                None => {
                    let stray = [
                        (args.n.is_some(), "--N"),
                        (args.lambda.is_some(), "--lambda"),
                        (args.m.is_some(), "--m"),
                        (args.a.is_some(), "--a"),
                        (args.b.is_some(), "--b"),
                        (args.s.is_some(), "--s"),
                    ]
                    .into_iter()
                    .find_map(|(given, name)| given.then_some(name));
                    if let Some(name) = stray {
                        return usage(format!("--all does not take {name}"));
                    }
                    None
                }
            };
            finish(
                commands::cmd_verify(id.as_ref(), args.depth),
                args.format,
                started,
            )
        }
        Command::Eval(args) => {
            let id = match family::resolve(&args.family.flags()) {
                Ok(id) => id,
                Err(m) => return usage(m),
            };
            if let Err(m) = family::check_depth(args.depth) {
                return usage(m);
            }
            finish(
                commands::cmd_eval(&id, args.depth, &args.x, args.digits),
                args.format,
                started,
            )
        }
        Command::Transform(args) => {
            let flags = FamilyFlags {
                family: args.family.clone(),
                n: args.n,
                lambda: args.lambda.clone(),
                m: None,
                a: None,
                b: None,
                s: None,
            };
            let id = match family::resolve(&flags) {
                Ok(id) => id,
                Err(m) => return usage(m),
            };
            if let Err(m) = family::check_depth(args.depth) {
                return usage(m);
            }
            let map = match LftCoeffs::new(
                args.a.clone(),
                args.b.clone(),
                args.c.clone(),
                args.d.clone(),
            ) {
                Ok(map) => map,
                Err(e) => return usage(e.to_string()),
            };
            finish(
                commands::cmd_transform(&id, &map, args.depth),
                args.format,
                started,
            )
        }
        Command::Series2cf(args) => {
            if let Err(m) = family::check_depth(args.depth) {
                return usage(m);
            }
            finish(
                commands::cmd_series2cf(&args.source, args.depth),
                args.format,
                started,
            )
        }
        Command::Table(args) => {
            let id = match family::resolve(&args.family.flags()) {
                Ok(id) => id,
                Err(m) => return usage(m),
            };
            if let Err(m) = family::check_depth(args.depth) {
                return usage(m);
            }
            finish(commands::cmd_table(&id, args.depth), args.format, started)
        }
    }
}

fn main() -> ExitCode {
    ExitCode::from(run(Cli::parse()))
}
