//! Command-line front end: exact JSON, SVG figures and the subcommands.

pub mod json;
pub mod svg;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use equidissect::construction::{build, ngon_additivity, verify_configuration, RightTriangleInput};
use equidissect::dissection::{verify_dissection, Dissection};
use equidissect::exactnum::{BigInt, BigRational, Interval, DEFAULT_MAX_TOWER_DEPTH};
use equidissect::wbg::{equidecompose, pythagorean_dissection, WbgConfig, WbgError};
use num_traits::Signed;

use json::JsonError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "equidissect", version, about = "Exact checks and verified dissections for the Pythagorean configuration")]
pub struct Cli {
    /// Maximum number of square roots adjoined to any number.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_TOWER_DEPTH)]
    pub max_tower_depth: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build the rotated-triangle configuration for legs a, b and check it exactly.
    #[command(alias = "navas")]
    Construct {
        #[arg(long, value_parser = parse_rational)]
        a: BigRational,
        #[arg(long, value_parser = parse_rational)]
        b: BigRational,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        report: ReportFormat,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Regular n-gon additivity for sides a, b, c.
    Ngon {
        #[arg(long, value_parser = parse_rational)]
        a: BigRational,
        #[arg(long, value_parser = parse_rational)]
        b: BigRational,
        #[arg(long, value_parser = parse_rational)]
        c: BigRational,
        #[arg(long)]
        n: u32,
        /// Bits of precision for the certified kappa_n enclosure.
        #[arg(long, default_value_t = 96)]
        precision: u32,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        report: ReportFormat,
    },
    /// Dissect the source polygons onto the target polygons.
    Wbg {
        #[arg(long, num_args = 1.., required = true)]
        source: Vec<PathBuf>,
        #[arg(long, num_args = 1.., required = true)]
        target: Vec<PathBuf>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Dissect the equilateral triangles on the legs onto the one on the hypotenuse.
    Pythagoras {
        #[arg(long, value_parser = parse_rational)]
        a: BigRational,
        #[arg(long, value_parser = parse_rational)]
        b: BigRational,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Check a dissection certificate.
    Verify {
        #[arg(long)]
        dissection: PathBuf,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        report: ReportFormat,
    },
}

fn parse_rational(s: &str) -> Result<BigRational, String> {
    json::parse_rational_str(s).map_err(|e| e.to_string())
}

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Failure {
        Failure { code: EXIT_INVALID, message: message.into() }
    }
}

impl From<JsonError> for Failure {
    fn from(e: JsonError) -> Failure {
        let code = match e {
            JsonError::TowerLimitExceeded { .. } => EXIT_LIMIT,
            JsonError::Invalid(_) => EXIT_INVALID,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<WbgError> for Failure {
    fn from(e: WbgError) -> Failure {
        let code = match e {
            WbgError::TowerLimitExceeded { .. } => EXIT_LIMIT,
            _ => EXIT_INVALID,
        };
        Failure { code, message: e.to_string() }
    }
}

type CmdResult = Result<i32, Failure>;

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents).map_err(|e| Failure::invalid(format!("cannot write {}: {e}", path.display())))
}

fn read_json(path: &Path) -> Result<serde_json::Value, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::invalid(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))
}

fn decimal(q: &BigRational, digits: u32, up: bool) -> String {
    let scale = BigRational::from_integer(BigInt::from(10).pow(digits));
    let scaled = q * &scale;
    let k = if up { scaled.ceil() } else { scaled.floor() }.to_integer();
    let neg = k.is_negative();
    let mag = k.abs().to_string();
    let mag = format!("{:0>width$}", mag, width = digits as usize + 1);
    let (int, frac) = mag.split_at(mag.len() - digits as usize);
    format!("{}{int}.{frac}", if neg { "-" } else { "" })
}

/// `[lo, hi]` rounded outward to `digits` decimal places.
pub fn interval_text(iv: &Interval, digits: u32) -> String {
    format!("[{}, {}]", decimal(&iv.lo, digits, false), decimal(&iv.hi, digits, true))
}

fn print_stats(out: &mut dyn Write, d: &Dissection) {
    let s = d.stats();
    let _ = writeln!(
        out,
        "pieces: {}\ntower depth: {}\nvertices: {}",
        s.piece_count, s.max_tower_depth, s.vertex_count
    );
}

fn emit_dissection(out: &mut dyn Write, d: &Dissection, path: &Path, svg_path: Option<&Path>) -> CmdResult {
    let report = verify_dissection(d);
    write_file(path, &json::to_pretty(&json::dissection_to_json(d)))?;
    if let Some(p) = svg_path {
        write_file(p, &svg::dissection_svg(d))?;
    }
    print_stats(out, d);
    let _ = write!(out, "{}", report.to_text());
    Ok(if report.passed() { EXIT_OK } else { EXIT_FAILED })
}

fn execute(cli: Cli, out: &mut dyn Write) -> CmdResult {
    let limit = cli.max_tower_depth;
    let cfg = WbgConfig { max_tower_depth: limit };
    match cli.command {
        Command::Construct { a, b, report, svg } => {
            let input = RightTriangleInput::new(a, b).map_err(|e| Failure::invalid(e.to_string()))?;
            let fig = build(&input);
            let depth = fig.named_points().iter().map(|(_, p)| p.tower_depth()).max().unwrap_or(0);
            if depth > limit {
                return Err(Failure {
                    code: EXIT_LIMIT,
                    message: format!("tower depth {depth} exceeds the limit {limit}"),
                });
            }
            let r = verify_configuration(&fig);
            match report {
                ReportFormat::Text => {
                    let _ = write!(out, "{}", r.to_text());
                }
                ReportFormat::Json => {
                    let _ = write!(out, "{}", json::to_pretty(&json::report_to_json(&r)));
                }
            }
            if let Some(p) = svg {
                write_file(&p, &svg::configuration_svg(&fig))?;
            }
            Ok(if r.passed() { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Ngon { a, b, c, n, precision, report } => {
            let v = ngon_additivity(&a, &b, &c, n, precision.max(16)).map_err(|e| Failure::invalid(e.to_string()))?;
            match report {
                ReportFormat::Text => {
                    let _ = writeln!(out, "n = {n}");
                    let _ = writeln!(out, "a^2 + b^2 {} c^2", if v.holds { "==" } else { "!=" });
                    let _ = writeln!(out, "kappa_n in {}", interval_text(&v.kappa, 12));
                    let _ = writeln!(out, "residual in {}", interval_text(&v.residual, 12));
                    let _ = writeln!(out, "verdict: {}", if v.holds { "HOLDS" } else { "FAILS" });
                }
                ReportFormat::Json => {
                    let _ = write!(out, "{}", json::to_pretty(&json::ngon_to_json(&v)));
                }
            }
            Ok(if v.holds { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Wbg { source, target, out: path, svg } => {
            let load = |files: &[PathBuf]| -> Result<Vec<_>, Failure> {
                let mut all = Vec::new();
                for f in files {
                    all.extend(json::polygons_from_json(&read_json(f)?, limit)?);
                }
                Ok(all)
            };
            let d = equidecompose(&load(&source)?, &load(&target)?, &cfg)?;
            emit_dissection(out, &d, &path, svg.as_deref())
        }
        Command::Pythagoras { a, b, out: path, svg } => {
            let d = pythagorean_dissection(&a, &b, &cfg)?;
            emit_dissection(out, &d, &path, svg.as_deref())
        }
        Command::Verify { dissection, report } => {
            let d = json::dissection_from_json(&read_json(&dissection)?, limit)?;
            let r = verify_dissection(&d);
            match report {
                ReportFormat::Text => {
                    print_stats(out, &d);
                    let _ = write!(out, "{}", r.to_text());
                }
                ReportFormat::Json => {
                    let _ = write!(out, "{}", json::to_pretty(&json::report_to_json(&r)));
                }
            }
            Ok(if r.passed() { EXIT_OK } else { EXIT_FAILED })
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
