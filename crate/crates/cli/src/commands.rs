use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mufgl::exactalg::{format_rational, parse_rational};
use mufgl::fgl::{additive_image_check, bmu_series, fgl_exp, fgl_sum, hopf_check, miscenko_log, FglContext};
use mufgl::hurewicz::{
    chern_oracle_cp, cumulants_to_moments, divisibility_report, hurewicz_bmu, hurewicz_cp, integrality_check,
    twist_expansion, twist_expansion_symbolic, HurewiczMap,
};
use mufgl::symfunc::{express, verify_symfunc, Basis};
use mufgl::{Generator, Rational, Report, Series, Twist};
use serde_json::{json, Value};

use crate::json;

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

const DEFAULT_UNIVARIATE_ORDER: usize = 10;
const DEFAULT_BIVARIATE_ORDER: usize = 8;

#[derive(Parser, Debug)]
#[command(name = "mufgl", version, about = "Exact formal-group-law calculus for complex cobordism")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Image {
    /// Substitute CP_k by its characteristic-number image in h_1, h_2, ...
    Hurewicz,
}

#[derive(Args, Debug)]
pub struct SeriesOpts {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    order: Option<u64>,
    #[arg(long, value_enum)]
    image: Option<Image>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Mischenko's logarithm  Σ CP_(k-1)/k · z^k
    Logmu(SeriesOpts),
    /// Compositional inverse of the logarithm
    Expmu(SeriesOpts),
    /// Group sum z0 +_MU z1
    FglSum(SeriesOpts),
    /// b^MU(z) = exp(b · log_MU(z))
    Bmu(SeriesOpts),
    /// Characteristic-number images
    Hurewicz {
        #[command(subcommand)]
        what: HurewiczWhat,
    },
    /// Expansion of CP_n(t·w) in volume classes
    Twist {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        /// Positive rational; symbolic when omitted
        #[arg(long, allow_hyphen_values = true)]
        t: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Moments from cumulants
    Cumulants {
        /// Comma-separated rationals κ_1,κ_2,...
        #[arg(long, allow_hyphen_values = true)]
        kappa: String,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Symmetric-function conversions
    Symfunc {
        #[command(subcommand)]
        what: SymfuncWhat,
    },
    /// Run a verification suite
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        order: Option<u64>,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_n: Option<u32>,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_k: Option<u32>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Subcommand, Debug)]
pub enum HurewiczWhat {
    /// 𝔥(b^MU_n) in divided powers
    Bmu {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// 𝔥(CP_n), with the Chern-number oracle value
    Cp {
        n: u32,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Subcommand, Debug)]
pub enum SymfuncWhat {
    /// Write the degree-N generator of one basis in another
    Convert {
        #[arg(long, value_parser = parse_basis)]
        from: Basis,
        #[arg(long, value_parser = parse_basis)]
        to: Basis,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        degree: u32,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

fn parse_basis(s: &str) -> Result<Basis, String> {
    s.parse().map_err(|e: mufgl::Error| e.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Hopf,
    Additive,
    Integrality,
    Divisibility,
    Symfunc,
    Roundtrip,
}

/// A command failed before producing output.
#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] mufgl::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn emit(out: &mut dyn Write, format: Format, text: String, value: Value) -> std::io::Result<()> {
    match format {
        Format::Text => writeln!(out, "{text}"),
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("serializable")),
    }
}

fn with_image(s: Series, image: Option<Image>) -> Series {
    match image {
        Some(Image::Hurewicz) => HurewiczMap::new(s.order() as u32).apply(&s),
        None => s,
    }
}

/// Runs a parsed command, writing results to `out`. Returns the exit code.
pub fn run(command: &Command, out: &mut dyn Write) -> Result<u8, RunError> {
    match command {
        Command::Logmu(o) | Command::Expmu(o) | Command::Bmu(o) => {
            let order = o.order.map_or(DEFAULT_UNIVARIATE_ORDER, |v| v as usize);
            let s = match command {
                Command::Logmu(_) => miscenko_log(order)?,
                Command::Expmu(_) => fgl_exp(order)?,
                _ => bmu_series(order)?,
            };
            let s = with_image(s, o.image);
            emit(out, o.format, s.to_string(), json::series_to_json(&s))?;
        }
        Command::FglSum(o) => {
            let order = o.order.map_or(DEFAULT_BIVARIATE_ORDER, |v| v as usize);
            let mut f = fgl_sum(order)?;
            if o.image == Some(Image::Hurewicz) {
                f = HurewiczMap::new(order as u32).apply_bi(&f);
            }
            emit(out, o.format, f.to_string(), json::bi_series_to_json(&f))?;
        }
        Command::Hurewicz { what: HurewiczWhat::Bmu { n, format } } => {
            let d = hurewicz_bmu(*n)?;
            emit(out, *format, d.to_string(), json::divided_to_json(&d))?;
        }
        Command::Hurewicz { what: HurewiczWhat::Cp { n, format } } => {
            let value = hurewicz_cp::<Rational>(*n);
            let oracle = chern_oracle_cp::<Rational>(*n);
            let agree = value == oracle;
            let text = format!("h(CP{n}) = {value}\noracle = {oracle}\nagree = {agree}");
            let v = json!({
                "n": n,
                "value": json::poly_to_json(&value),
                "oracle": json::poly_to_json(&oracle),
                "agree": agree,
            });
            emit(out, *format, text, v)?;
            if !agree {
                return Ok(EXIT_VERIFY_FAILED);
            }
        }
        Command::Twist { n, t, format } => {
            let tw: Twist = match t {
                None => twist_expansion_symbolic(*n)?,
                Some(t) => {
                    let t = parse_rational(t).ok_or_else(|| RunError::Usage(format!("invalid rational `{t}`")))?;
                    twist_expansion(*n, &t).map_err(|e| RunError::Usage(e.to_string()))?
                }
            };
            let v = json!({
                "n": tw.n,
                "t": tw.t.as_ref().map(json::rational_to_json),
                "expansion": json::divided_to_json(&tw.expr),
            });
            emit(out, *format, tw.to_string(), v)?;
        }
        Command::Cumulants { kappa, max_n, format } => {
            let mut values = parse_kappa(kappa)?;
            values.resize(*max_n, Rational::from_integer(0.into()));
            let moments = cumulants_to_moments(&values);
            let text = moments
                .iter()
                .enumerate()
                .map(|(n, m)| format!("m{n} = {}", format_rational(m)))
                .collect::<Vec<_>>()
                .join("\n");
            let v = json!({ "moments": moments.iter().map(json::rational_to_json).collect::<Vec<_>>() });
            emit(out, *format, text, v)?;
        }
        Command::Symfunc { what: SymfuncWhat::Convert { from, to, degree, format } } => {
            let value = express::<Rational>(*from, *to, *degree)?;
            let name = Generator::new(from.family(), *degree)?;
            let v = json!({
                "from": from.to_string(),
                "to": to.to_string(),
                "degree": degree,
                "terms": json::terms_to_json(&value),
            });
            emit(out, *format, format!("{name} = {value}"), v)?;
        }
        Command::Verify { suite, order, max_n, max_k, format } => {
            let report = verify(*suite, order.map(|v| v as usize), *max_n, *max_k)?;
            emit(out, *format, report.to_string(), report_to_json(&report))?;
            if !report.passed() {
                return Ok(EXIT_VERIFY_FAILED);
            }
        }
    }
    Ok(EXIT_OK)
}

fn parse_kappa(list: &str) -> Result<Vec<Rational>, RunError> {
    if list.trim().is_empty() {
        return Ok(Vec::new());
    }
    list.split(',')
        .map(|s| parse_rational(s).ok_or_else(|| RunError::Usage(format!("invalid rational `{}`", s.trim()))))
        .collect()
}

fn verify(suite: Suite, order: Option<usize>, max_n: Option<u32>, max_k: Option<u32>) -> Result<Report, RunError> {
    Ok(match suite {
        Suite::Hopf => hopf_check(order.unwrap_or(DEFAULT_BIVARIATE_ORDER))?,
        Suite::Additive => additive_image_check(order.unwrap_or(DEFAULT_BIVARIATE_ORDER))?,
        Suite::Integrality => integrality_check(max_n.unwrap_or(10)),
        Suite::Divisibility => divisibility_report(max_k.unwrap_or(12)),
        Suite::Symfunc => {
            let degree = max_n.or(order.map(|o| o as u32)).unwrap_or(DEFAULT_UNIVARIATE_ORDER as u32);
            verify_symfunc(degree)
        }
        Suite::Roundtrip => FglContext::new(order.unwrap_or(DEFAULT_UNIVARIATE_ORDER))?.roundtrip_check(),
    })
}

pub fn report_to_json(report: &Report) -> Value {
    let failure = report.failure.as_ref().map(|d| {
        json!({
            "location": d.location.to_string(),
            "lhs": json::poly_to_json(&d.lhs),
            "rhs": json::poly_to_json(&d.rhs),
        })
    });
    json!({ "check": report.name, "passed": report.passed(), "cases": report.cases, "failure": failure })
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{rendered}") } else { write!(out, "{rendered}") };
            return code;
        }
    };
    match run(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
