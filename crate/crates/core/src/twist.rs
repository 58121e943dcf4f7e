//! Twisting Lie superalgebras along even endomorphisms, and the builtin corpus.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graded::{
    AlgebraKind, Element, EvenMap, HomSuperAlgebra, Parity, SuperAlgebra, SuperBasis,
};
use crate::identities::{
    check_hom_lie_super, hom_jacobi_residual, CheckReport, Residual, Violation,
};
use crate::scalar::Scalar;

/// `α([x,y]) = [α(x), α(y)]` on every ordered basis pair.
pub fn check_endomorphism(alpha: &EvenMap, a: &SuperAlgebra) -> Result<CheckReport> {
    let n = a.dim();
    if alpha.domain_dim() != n || alpha.codomain_dim() != n {
        return Err(Error::structural("endomorphism dimension mismatch"));
    }
    let mut report = CheckReport::new("endomorphism")
        .with_basis(a.basis.clone())
        .with_parameter(a.parameter.clone());
    for x in 0..n {
        for y in 0..n {
            let lhs = alpha.apply(&a.multiply(&Element::basis(x), &Element::basis(y))?)?;
            let rhs = a.multiply(&alpha.image(x), &alpha.image(y))?;
            report.push(Violation::new(
                [a.basis.name(x), a.basis.name(y)],
                Residual::Basis(lhs.sub(&rhs)),
            ));
        }
    }
    Ok(report.finish(n * n))
}

/// The Hom-Lie superalgebra `(V, α∘[·,·], α)` built from a Lie superalgebra
/// and an even endomorphism.
///
/// Both hypotheses are verified first; a failed check is returned inside
/// [`Error::Precondition`].
pub fn yau_twist(a: &SuperAlgebra, alpha: &EvenMap) -> Result<HomSuperAlgebra> {
    let lie = check_hom_lie_super(&HomSuperAlgebra::untwisted(a.clone()))?;
    if !lie.passed() {
        return Err(Error::Precondition(Box::new(lie)));
    }
    let endo = check_endomorphism(alpha, a)?;
    if !endo.passed() {
        return Err(Error::Precondition(Box::new(endo)));
    }
    let twisted = a.map_table(|e| alpha.apply(e))?;
    HomSuperAlgebra::new(twisted, alpha.clone())
}

/// Graded Jacobi sum with the identity twist,
/// `(-1)^{|x||z|}[x,[y,z]] + (-1)^{|z||y|}[z,[x,y]] + (-1)^{|y||x|}[y,[z,x]]`.
pub fn jacobi_defect(a: &SuperAlgebra, x: usize, y: usize, z: usize) -> Result<Element> {
    let n = a.dim();
    if x >= n || y >= n || z >= n {
        return Err(Error::structural("basis index out of range"));
    }
    hom_jacobi_residual(&HomSuperAlgebra::untwisted(a.clone()), x, y, z)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BuiltinId {
    Osp12,
    Osp12Lambda,
    Abelian2,
    Affine3,
}

impl BuiltinId {
    pub const ALL: [BuiltinId; 4] = [
        BuiltinId::Osp12,
        BuiltinId::Osp12Lambda,
        BuiltinId::Abelian2,
        BuiltinId::Affine3,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BuiltinId::Osp12 => "osp12",
            BuiltinId::Osp12Lambda => "osp12-lambda",
            BuiltinId::Abelian2 => "abelian2",
            BuiltinId::Affine3 => "affine3",
        }
    }
}

impl fmt::Display for BuiltinId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BuiltinId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        BuiltinId::ALL
            .into_iter()
            .find(|b| b.as_str() == s)
            .ok_or_else(|| Error::Unsupported(format!("unknown builtin `{s}`")))
    }
}

/// Index of each osp(1,2) basis vector in the fixed order (H, X, Y, F, G).
pub mod osp {
    pub const H: usize = 0;
    pub const X: usize = 1;
    pub const Y: usize = 2;
    pub const F: usize = 3;
    pub const G: usize = 4;
}

/// Name of the formal parameter of the twisted osp(1,2) family.
pub const LAMBDA: &str = "lambda";

fn set(a: &mut SuperAlgebra, i: usize, j: usize, c: i64, k: usize) {
    a.set_entry(i, j, Element::term(k, Scalar::from_int(c)))
        .expect("index in range");
}

/// Store `[i,j] = c·k` together with its graded-antisymmetric partner.
fn set_bracket(a: &mut SuperAlgebra, i: usize, j: usize, c: i64, k: usize) {
    set(a, i, j, c, k);
    if i != j {
        let sign = -crate::graded::koszul_sign(a.basis.parity(i), a.basis.parity(j));
        set(a, j, i, sign * c, k);
    }
}

/// osp(1,2) with basis (H, X, Y | F, G).
pub fn osp12() -> SuperAlgebra {
    use osp::*;
    let basis = SuperBasis::new([
        ("H", Parity::EVEN),
        ("X", Parity::EVEN),
        ("Y", Parity::EVEN),
        ("F", Parity::ODD),
        ("G", Parity::ODD),
    ])
    .expect("distinct names");
    let mut a = SuperAlgebra::new("osp12", basis, AlgebraKind::Bracket);
    set_bracket(&mut a, H, X, 2, X);
    set_bracket(&mut a, H, Y, -2, Y);
    set_bracket(&mut a, X, Y, 1, H);
    set_bracket(&mut a, Y, G, 1, F);
    set_bracket(&mut a, X, F, 1, G);
    set_bracket(&mut a, H, F, -1, F);
    set_bracket(&mut a, H, G, 1, G);
    set_bracket(&mut a, G, F, 1, H);
    set_bracket(&mut a, G, G, -2, X);
    set_bracket(&mut a, F, F, 2, Y);
    a
}

/// The diagonal endomorphism `H ↦ H, X ↦ λ²X, Y ↦ λ⁻²Y, F ↦ λ⁻¹F, G ↦ λG`.
pub fn osp12_alpha_lambda(basis: &SuperBasis) -> EvenMap {
    let diag = [0, 2, -2, -1, 1].map(Scalar::param_pow).to_vec();
    EvenMap::diagonal(basis, diag).expect("diagonal map is even")
}

fn abelian2() -> HomSuperAlgebra {
    let basis = SuperBasis::new([("x", Parity::EVEN), ("y", Parity::ODD)]).expect("distinct names");
    let alpha = EvenMap::diagonal(&basis, vec![Scalar::from_int(2), Scalar::from_int(-3)])
        .expect("diagonal map is even");
    let a = SuperAlgebra::new("abelian2", basis, AlgebraKind::Bracket);
    HomSuperAlgebra::new(a, alpha).expect("square map")
}

fn affine3() -> HomSuperAlgebra {
    let basis = SuperBasis::new([
        ("e1", Parity::EVEN),
        ("e2", Parity::EVEN),
        ("e3", Parity::ODD),
    ])
    .expect("distinct names");
    let mut a = SuperAlgebra::new("affine3", basis, AlgebraKind::Bracket);
    set_bracket(&mut a, 0, 1, 1, 0);
    let images = [
        Element::term(0, Scalar::from_int(2)),
        Element::from_terms([(0, Scalar::one()), (1, Scalar::one())]),
        Element::term(2, Scalar::from_int(-1)),
    ];
    let alpha = EvenMap::from_images(&a.basis, &a.basis, &images).expect("even images");
    HomSuperAlgebra::new(a, alpha).expect("square map")
}

pub fn builtin(id: BuiltinId) -> HomSuperAlgebra {
    match id {
        BuiltinId::Osp12 => HomSuperAlgebra::untwisted(osp12()),
        BuiltinId::Osp12Lambda => {
            let a = osp12();
            let alpha = osp12_alpha_lambda(&a.basis);
            let mut h = yau_twist(&a, &alpha).expect("α_λ is an endomorphism of osp(1,2)");
            h.algebra.name = "osp12_lambda".into();
            h.algebra.parameter = Some(LAMBDA.into());
            h
        }
        BuiltinId::Abelian2 => abelian2(),
        BuiltinId::Affine3 => affine3(),
    }
}

#[cfg(test)]
mod tests {
    use super::osp::*;
    use super::*;

    #[test]
    fn identity_is_an_endomorphism() {
        let a = osp12();
        assert!(check_endomorphism(&EvenMap::identity(&a.basis), &a)
            .unwrap()
            .passed());
    }

    #[test]
    fn scaling_y_alone_is_not_an_endomorphism() {
        let a = osp12();
        let mut diag = vec![Scalar::one(); 5];
        diag[Y] = Scalar::from_int(2);
        let alpha = EvenMap::diagonal(&a.basis, diag).unwrap();
        let r = check_endomorphism(&alpha, &a).unwrap();
        assert!(!r.passed());
        // α([X,Y]) = H but [αX, αY] = 2H
        let v = r
            .violations
            .iter()
            .find(|v| v.inputs == ["X", "Y"])
            .unwrap();
        assert_eq!(
            v.residual,
            Residual::Basis(Element::term(H, Scalar::from_int(-1)))
        );
    }

    #[test]
    fn twist_by_identity_changes_nothing() {
        let a = osp12();
        let h = yau_twist(&a, &EvenMap::identity(&a.basis)).unwrap();
        assert_eq!(h.algebra, a);
    }

    #[test]
    fn twist_rejects_non_endomorphism() {
        let a = osp12();
        let mut diag = vec![Scalar::one(); 5];
        diag[X] = Scalar::from_int(3);
        let alpha = EvenMap::diagonal(&a.basis, diag).unwrap();
        match yau_twist(&a, &alpha) {
            Err(Error::Precondition(r)) => assert_eq!(r.check, "endomorphism"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn builtin_names_round_trip() {
        for id in BuiltinId::ALL {
            assert_eq!(id.as_str().parse::<BuiltinId>().unwrap(), id);
        }
    }

    #[test]
    fn affine_brackets() {
        let h = builtin(BuiltinId::Affine3);
        assert_eq!(h.algebra.entry(0, 1), Some(&Element::basis(0)));
        for (i, j) in [(0, 2), (1, 2), (2, 2), (2, 0), (2, 1)] {
            assert!(h.algebra.entry(i, j).is_none());
        }
    }
}
