//! Serialisable form of a [`CheckReport`] and its text and JSON renderings.

use std::fmt::Write;
use std::time::Duration;

use serde::Serialize;

use homsuper::{CheckReport, Rational};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ViolationDoc {
    pub inputs: Vec<String>,
    pub residual: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub evaluated: Option<String>,
}

/// A check outcome with residuals already rendered.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ReportDocument {
    pub check: String,
    pub status: String,
    pub violations: Vec<ViolationDoc>,
    pub examined: usize,
    pub total_violations: usize,
    pub notes: Vec<String>,
    pub version: String,
    /// Wall-clock time, shown in text output only so JSON stays reproducible.
    #[serde(skip)]
    pub elapsed: Option<Duration>,
}

/// Point at which residuals are additionally evaluated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalPoint {
    pub name: String,
    pub value: Rational,
}

impl ReportDocument {
    /// Render the first `max_violations` violations of `r`.
    pub fn from_report(r: &CheckReport, max_violations: usize, at: Option<&EvalPoint>) -> Self {
        let violations = r
            .violations
            .iter()
            .take(max_violations)
            .map(|v| ViolationDoc {
                inputs: v.inputs.clone(),
                residual: r.render_residual(&v.residual),
                evaluated: at.map(|p| {
                    r.evaluate_residual(&v.residual, &p.value)
                        .unwrap_or_else(|e| format!("undefined ({e})"))
                }),
            })
            .collect();
        let mut notes = r.notes.clone();
        if let Some(p) = at {
            notes.push(format!("evaluated at {}={}", p.name, p.value));
        }
        Self {
            check: r.check.clone(),
            status: r.status().to_string(),
            violations,
            examined: r.examined,
            total_violations: r.total_violations,
            notes,
            version: VERSION.to_owned(),
            elapsed: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

pub fn emit_report(doc: &ReportDocument, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string(doc).expect("report serialises");
            s.push('\n');
            s
        }
        Format::Text => render_text(doc),
    }
}

fn render_text(doc: &ReportDocument) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "{}: {} ({} violation(s), {} examined)",
        doc.check, doc.status, doc.total_violations, doc.examined
    )
    .unwrap();
    for v in &doc.violations {
        write!(out, "  ({}): {}", v.inputs.join(", "), v.residual).unwrap();
        if let Some(e) = &v.evaluated {
            write!(out, "  [evaluated: {e}]").unwrap();
        }
        out.push('\n');
    }
    let hidden = doc.total_violations - doc.violations.len();
    if hidden > 0 {
        writeln!(out, "  ... {hidden} more not shown").unwrap();
    }
    for n in &doc.notes {
        writeln!(out, "  note: {n}").unwrap();
    }
    if let Some(t) = doc.elapsed {
        writeln!(out, "  time: {:.3} ms", t.as_secs_f64() * 1e3).unwrap();
    }
    out
}
