//! Writer for the algebra file format.

use std::fmt::Write;

use homsuper::report::render_combination;
use homsuper::{AlgebraKind, Element, HomSuperAlgebra, SuperBasis};

fn combo(e: &Element, basis: &SuperBasis, param: &str) -> String {
    let terms: Vec<_> = e
        .terms()
        .map(|(i, c)| (basis.name(i).to_owned(), c.clone()))
        .collect();
    render_combination(&terms, param)
}

/// Render an algebra in the file format. Zero entries are omitted and
/// `alpha` lines are written only when the twist is not the identity. An
/// empty table gets a `kind` line so the vocabulary survives a round trip. A
/// parameter line is added whenever some coefficient depends on it.
pub fn export_algebra(h: &HomSuperAlgebra) -> String {
    let a = &h.algebra;
    let param = a.param_name();
    let mut out = String::new();
    writeln!(out, "algebra {}", a.name).unwrap();
    let parametric = a
        .entries()
        .any(|(_, e)| e.terms().any(|(_, c)| !c.is_constant()))
        || (0..a.dim()).any(|i| h.alpha.image(i).terms().any(|(_, c)| !c.is_constant()));
    if a.parameter.is_some() || parametric {
        writeln!(out, "param {param}").unwrap();
    }
    for (name, parity) in a.basis.names().zip(a.basis.parities()) {
        writeln!(out, "basis {name} : {parity}").unwrap();
    }
    let keyword = match a.kind {
        AlgebraKind::Product => "mul",
        AlgebraKind::Bracket => "bracket",
    };
    if a.entries().next().is_none() {
        writeln!(out, "kind {keyword}").unwrap();
    }
    for ((i, j), e) in a.entries() {
        writeln!(
            out,
            "{keyword} {} {} = {}",
            a.basis.name(i),
            a.basis.name(j),
            combo(e, &a.basis, param)
        )
        .unwrap();
    }
    if !h.alpha.is_identity() {
        for i in 0..a.dim() {
            writeln!(
                out,
                "alpha {} = {}",
                a.basis.name(i),
                combo(&h.alpha.image(i), &a.basis, param)
            )
            .unwrap();
        }
    }
    out
}
