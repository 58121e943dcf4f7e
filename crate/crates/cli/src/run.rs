//! Argument handling and subcommand dispatch.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use homsuper::identities::{
    check_g_hom_associative, check_hom_associative_super, check_hom_leibniz,
    check_hom_lie_admissible, check_hom_lie_super, check_morphism, AdmissibilityMode, SubgroupId,
};
use homsuper::sigma::{
    check_hls_conditions, check_qhl_identity, check_qwitt_hom_lie, check_sigma_derivation,
    QhlConfig, Window,
};
use homsuper::twist::{builtin, yau_twist, BuiltinId};
use homsuper::{CheckReport, Scalar, DEFAULT_MAX_VIOLATIONS};

use crate::error::CliError;
use crate::export::export_algebra;
use crate::parse::{parse_algebra_file, parse_alpha_file, parse_map_file, parse_scalar};
use crate::report::{emit_report, EvalPoint, Format, ReportDocument};

#[derive(Debug, Parser)]
#[command(
    name = "homsuper",
    version,
    about = "Exact checks for graded Hom-algebras"
)]
pub struct Cli {
    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Maximum number of violations listed per report.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_VIOLATIONS)]
    pub max_violations: usize,

    /// Also evaluate residuals at a rational parameter value, e.g. `lambda=2`.
    #[arg(long, global = true, value_parser = parse_eval_point)]
    pub at: Option<EvalPoint>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Identity {
    HomAssoc,
    HomLieSuper,
    HomLeibniz,
    Admissible,
    GAssoc(SubgroupId),
}

fn parse_identity(s: &str) -> Result<Identity, String> {
    match s {
        "hom-assoc" => Ok(Identity::HomAssoc),
        "hom-lie-super" => Ok(Identity::HomLieSuper),
        "hom-leibniz" => Ok(Identity::HomLeibniz),
        "admissible" => Ok(Identity::Admissible),
        _ => match s.strip_prefix("g-assoc:") {
            Some(g) => g.parse().map(Identity::GAssoc).map_err(|e| e.to_string()),
            None => Err(format!(
                "unknown identity `{s}` (expected hom-assoc, hom-lie-super, hom-leibniz, admissible or g-assoc:G1..G6)"
            )),
        },
    }
}

fn parse_eval_point(s: &str) -> Result<EvalPoint, String> {
    let (name, value) = s
        .split_once('=')
        .ok_or("expected NAME=VALUE, e.g. lambda=2")?;
    let v = parse_scalar(value.trim(), None).map_err(|e| e.to_string())?;
    let value = v
        .as_rational()
        .ok_or("the value must be a rational number")?;
    Ok(EvalPoint {
        name: name.trim().to_owned(),
        value,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum QwittCheck {
    /// Graded Hom-Jacobi for the closed-form brackets and the cyclic identity of the σ-bracket.
    Jacobi,
    /// The twisted Leibniz rule for Δ.
    Structure,
    /// The two conditions under which the σ-bracket is defined.
    Conditions,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check an identity on an algebra file.
    Check {
        /// Algebra file.
        file: PathBuf,
        /// hom-assoc, hom-lie-super, hom-leibniz, admissible or g-assoc:G1..G6.
        #[arg(long, value_parser = parse_identity)]
        identity: Identity,
        /// How to decide `admissible`: jacobi or s-criterion.
        #[arg(long, value_parser = |s: &str| s.parse::<AdmissibilityMode>().map_err(|e| e.to_string()))]
        mode: Option<AdmissibilityMode>,
    },
    /// Twist a Lie superalgebra along an even endomorphism.
    Twist {
        /// Algebra file with the untwisted bracket.
        file: PathBuf,
        /// File of `alpha` lines giving the endomorphism.
        #[arg(long)]
        alpha: PathBuf,
        /// Write the twisted algebra here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print or export a builtin algebra.
    Builtin {
        #[arg(value_parser = |s: &str| s.parse::<BuiltinId>().map_err(|e| e.to_string()))]
        /// osp12, osp12-lambda, abelian2 or affine3.
        id: BuiltinId,
        /// Write the algebra file here instead of stdout.
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Check the q-deformed Witt superalgebra on a window of indices.
    Qwitt {
        /// Inclusive index range `lo:hi`.
        #[arg(long, allow_hyphen_values = true)]
        window: String,
        /// Which family of identities to check.
        #[arg(long, value_enum)]
        check: QwittCheck,
    },
    /// Check that a linear map between two algebra files is a morphism.
    Morphism {
        /// Source algebra file.
        a: PathBuf,
        /// Target algebra file.
        b: PathBuf,
        /// File of `map` lines from basis vectors of A to combinations in B.
        #[arg(long)]
        map: PathBuf,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn timed<F>(f: F) -> Result<(CheckReport, std::time::Duration), CliError>
where
    F: FnOnce() -> Result<CheckReport, homsuper::Error>,
{
    let start = Instant::now();
    let r = f()?;
    Ok((r, start.elapsed()))
}

/// What a subcommand produced.
enum Outcome {
    Reports(Vec<(CheckReport, std::time::Duration)>),
    Text(String),
}

fn execute(cli: &Cli, err: &mut dyn Write) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Check {
            file,
            identity,
            mode,
        } => {
            let h = parse_algebra_file(&read(file)?)?;
            if mode.is_some() && *identity != Identity::Admissible {
                return Err(CliError::Usage(
                    "--mode only applies to --identity admissible".into(),
                ));
            }
            let r = timed(|| match identity {
                Identity::HomAssoc => check_hom_associative_super(&h),
                Identity::HomLieSuper => check_hom_lie_super(&h),
                Identity::HomLeibniz => check_hom_leibniz(&h),
                Identity::Admissible => {
                    check_hom_lie_admissible(&h, mode.unwrap_or(AdmissibilityMode::Jacobi))
                }
                Identity::GAssoc(g) => check_g_hom_associative(&h, *g),
            })?;
            Ok(Outcome::Reports(vec![r]))
        }
        Command::Twist { file, alpha, out } => {
            let mut a = parse_algebra_file(&read(file)?)?.algebra;
            let alpha = parse_alpha_file(&read(alpha)?, &a)?;
            if a.parameter.is_none() {
                a.parameter = alpha.param;
            }
            match yau_twist(&a, &alpha.map) {
                Ok(t) => {
                    let text = export_algebra(&t);
                    match out {
                        Some(path) => {
                            write_file(path, &text)?;
                            writeln!(err, "wrote {}", path.display()).ok();
                            Ok(Outcome::Text(String::new()))
                        }
                        None => Ok(Outcome::Text(text)),
                    }
                }
                Err(homsuper::Error::Precondition(r)) => {
                    writeln!(err, "twist refused: `{}` does not hold", r.check).ok();
                    Ok(Outcome::Reports(vec![(*r, Default::default())]))
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Builtin { id, export } => {
            let text = export_algebra(&builtin(*id));
            match export {
                Some(path) => {
                    write_file(path, &text)?;
                    Ok(Outcome::Text(String::new()))
                }
                None => Ok(Outcome::Text(text)),
            }
        }
        Command::Qwitt { window, check } => {
            let w: Window = window.parse()?;
            let cfg = QhlConfig::qwitt(Scalar::one());
            let reports = match check {
                QwittCheck::Jacobi => vec![
                    timed(|| Ok(check_qwitt_hom_lie(w)))?,
                    timed(|| Ok(check_qhl_identity(&cfg, w)))?,
                ],
                QwittCheck::Structure => vec![timed(|| Ok(check_sigma_derivation(&cfg, w)))?],
                QwittCheck::Conditions => vec![timed(|| Ok(check_hls_conditions(&cfg, w)))?],
            };
            Ok(Outcome::Reports(reports))
        }
        Command::Morphism { a, b, map } => {
            let ha = parse_algebra_file(&read(a)?)?;
            let hb = parse_algebra_file(&read(b)?)?;
            let f = parse_map_file(&read(map)?, &ha.algebra, &hb.algebra)?;
            Ok(Outcome::Reports(vec![timed(|| {
                check_morphism(&f, &ha, &hb)
            })?]))
        }
    }
}

/// Run the tool on `args` (program name first). Returns the exit code:
/// 0 when every report passes, 1 when some check fails, 2 on usage, parse
/// or structural errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                write!(out, "{text}").ok();
            } else {
                write!(err, "{text}").ok();
            }
            return code;
        }
    };
    match execute(&cli, err) {
        Ok(Outcome::Text(t)) => {
            write!(out, "{t}").ok();
            0
        }
        Ok(Outcome::Reports(reports)) => {
            let mut all_pass = true;
            for (r, elapsed) in &reports {
                let mut doc = ReportDocument::from_report(r, cli.max_violations, cli.at.as_ref());
                if !elapsed.is_zero() {
                    doc.elapsed = Some(*elapsed);
                }
                all_pass &= doc.passed();
                write!(out, "{}", emit_report(&doc, cli.format)).ok();
            }
            if all_pass {
                0
            } else {
                1
            }
        }
        Err(e) => {
            writeln!(err, "error: {e}").ok();
            if let CliError::Evenness(r) = &e {
                let doc = ReportDocument::from_report(r, cli.max_violations, None);
                write!(err, "{}", emit_report(&doc, Format::Text)).ok();
            }
            2
        }
    }
}
