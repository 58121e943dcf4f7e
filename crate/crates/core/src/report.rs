//! Outcome of an exhaustive identity check.

use std::fmt;

use crate::error::Result;
use crate::graded::{Element, SuperBasis};
use crate::scalar::{has_top_level_sum, Rational, Scalar};
use crate::sigma::{LgElement, WittCombination};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// A nonzero value left over where an identity should give zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Residual {
    /// Vector in a finite basis.
    Basis(Element),
    /// Element of the Laurent–Grassmann algebra.
    Laurent(LgElement),
    /// Combination of q-Witt generators.
    Witt(WittCombination),
}

impl Residual {
    pub fn is_zero(&self) -> bool {
        match self {
            Residual::Basis(e) => e.is_zero(),
            Residual::Laurent(a) => a.is_zero(),
            Residual::Witt(w) => w.is_empty(),
        }
    }

    /// Labelled coefficients in a deterministic order.
    pub fn terms(&self, basis: Option<&SuperBasis>) -> Vec<(String, Scalar)> {
        match self {
            Residual::Basis(e) => e
                .terms()
                .map(|(i, c)| {
                    let label = match basis {
                        Some(b) if i < b.dim() => b.name(i).to_owned(),
                        _ => format!("e{i}"),
                    };
                    (label, c.clone())
                })
                .collect(),
            Residual::Laurent(a) => a.labelled_terms(),
            Residual::Witt(w) => w.iter().map(|(g, c)| (g.to_string(), c.clone())).collect(),
        }
    }
}

/// Render `Σ c_i * label_i`, e.g. `4*(lambda-1)/lambda^4 * Y - 2 * X`.
pub fn render_combination(terms: &[(String, Scalar)], param: &str) -> String {
    if terms.is_empty() {
        return "0".to_owned();
    }
    let mut out = String::new();
    for (n, (label, c)) in terms.iter().enumerate() {
        let text = c.render(param);
        let (negative, magnitude) = match text.strip_prefix('-') {
            Some(rest) if !has_top_level_sum(&text) => (true, rest.to_owned()),
            _ => (false, text),
        };
        if n == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if magnitude == "1" {
            out.push_str(label);
        } else if has_top_level_sum(&magnitude) {
            out.push_str(&format!("({magnitude}) * {label}"));
        } else {
            out.push_str(&format!("{magnitude} * {label}"));
        }
    }
    out
}

/// Render a combination of rational values, used for evaluated residuals.
pub fn render_evaluated(terms: &[(String, Rational)]) -> String {
    let as_scalars: Vec<(String, Scalar)> = terms
        .iter()
        .filter(|(_, v)| !num_traits::Zero::is_zero(v))
        .map(|(l, v)| (l.clone(), Scalar::from_rational(v.clone())))
        .collect();
    render_combination(&as_scalars, "p")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Names of the inputs (basis vectors, monomials or generators).
    pub inputs: Vec<String>,
    pub residual: Residual,
}

impl Violation {
    pub fn new<I, S>(inputs: I, residual: Residual) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self {
            inputs: inputs.into_iter().map(Into::into).collect(),
            residual,
        }
    }
}

/// Result of running one checker.
///
/// All violations are retained in input order; `truncate` caps the stored
/// list for display while `total_violations` keeps the full count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub check: String,
    pub violations: Vec<Violation>,
    pub total_violations: usize,
    pub examined: usize,
    pub notes: Vec<String>,
    pub basis: Option<SuperBasis>,
    pub parameter: Option<String>,
}

/// Default cap on stored violations when a report is displayed.
pub const DEFAULT_MAX_VIOLATIONS: usize = 16;

impl CheckReport {
    pub fn new(check: impl Into<String>) -> Self {
        Self {
            check: check.into(),
            violations: Vec::new(),
            total_violations: 0,
            examined: 0,
            notes: Vec::new(),
            basis: None,
            parameter: None,
        }
    }

    pub fn with_basis(mut self, basis: SuperBasis) -> Self {
        self.basis = Some(basis);
        self
    }

    pub fn with_parameter(mut self, name: Option<String>) -> Self {
        self.parameter = name;
        self
    }

    /// Record a violation; zero residuals are ignored.
    pub fn push(&mut self, v: Violation) {
        if v.residual.is_zero() {
            return;
        }
        self.total_violations += 1;
        self.violations.push(v);
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn finish(mut self, examined: usize) -> Self {
        self.examined = examined;
        self
    }

    pub fn passed(&self) -> bool {
        self.total_violations == 0
    }

    pub fn status(&self) -> Status {
        if self.passed() {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn truncate(&mut self, limit: usize) {
        self.violations.truncate(limit);
    }

    pub fn param_name(&self) -> &str {
        self.parameter.as_deref().unwrap_or("p")
    }

    pub fn render_residual(&self, r: &Residual) -> String {
        render_combination(&r.terms(self.basis.as_ref()), self.param_name())
    }

    /// Residual with the parameter specialised to `v`.
    pub fn evaluate_residual(&self, r: &Residual, v: &Rational) -> Result<String> {
        let terms = r
            .terms(self.basis.as_ref())
            .into_iter()
            .map(|(l, c)| Ok((l, c.eval_at(v)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(render_evaluated(&terms))
    }

    /// Triples (or pairs) of input names that failed, in report order.
    pub fn failing_inputs(&self) -> Vec<Vec<String>> {
        self.violations.iter().map(|v| v.inputs.clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combination_rendering() {
        let lam = Scalar::param();
        let c = Scalar::from_int(4) * (&lam - &Scalar::one()) / lam.pow(4).unwrap();
        let terms = vec![
            ("Y".to_owned(), c),
            ("X".to_owned(), Scalar::from_int(-2)),
            ("H".to_owned(), &lam + &Scalar::one()),
            ("F".to_owned(), Scalar::from_int(-1)),
        ];
        assert_eq!(
            render_combination(&terms, "lambda"),
            "4*(lambda-1)/lambda^4 * Y - 2 * X + (lambda+1) * H - F"
        );
    }

    #[test]
    fn zero_residuals_are_not_violations() {
        let mut r = CheckReport::new("x");
        r.push(Violation::new(["a"], Residual::Basis(Element::zero())));
        assert!(r.passed());
        assert_eq!(r.status(), Status::Pass);
    }

    #[test]
    fn truncate_keeps_total() {
        let mut r = CheckReport::new("x");
        for _ in 0..5 {
            r.push(Violation::new(["a"], Residual::Basis(Element::basis(0))));
        }
        r.truncate(2);
        assert_eq!(r.violations.len(), 2);
        assert_eq!(r.total_violations, 5);
        assert_eq!(r.status(), Status::Fail);
    }
}
