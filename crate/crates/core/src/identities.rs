//! Exhaustive checkers for the Hom-associative, Hom-Leibniz and Hom-Lie
//! identities, Hom-Lie admissibility and G-Hom-associativity.
//!
//! Every identity here is multilinear, so checking it on all ordered tuples
//! of basis vectors is a complete proof for the finite-dimensional algebra.
//! Tuples are evaluated in parallel and reported in lexicographic index
//! order.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graded::{
    alpha_associator, koszul_sign, permutation_parity, supercommutator, Element, EvenMap,
    HomSuperAlgebra, Parity, Perm3, SuperAlgebra, SuperBasis,
};
pub use crate::report::{CheckReport, Residual, Status, Violation, DEFAULT_MAX_VIOLATIONS};

/// Subgroups of S3, up to the choice of transposition for the order-2 ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SubgroupId {
    /// `{id}`: Hom-associative.
    G1,
    /// `{id, σ1}`: Hom-Vinberg.
    G2,
    /// `{id, σ2}`: Hom-pre-Lie.
    G3,
    /// `{id, σ2σ1σ2}`
    G4,
    /// The alternating group A3.
    G5,
    /// All of S3: Hom-Lie admissible.
    G6,
}

impl SubgroupId {
    pub const ALL: [SubgroupId; 6] = [
        SubgroupId::G1,
        SubgroupId::G2,
        SubgroupId::G3,
        SubgroupId::G4,
        SubgroupId::G5,
        SubgroupId::G6,
    ];

    pub fn members(self) -> &'static [Perm3] {
        use Perm3::*;
        match self {
            SubgroupId::G1 => &[Id],
            SubgroupId::G2 => &[Id, S1],
            SubgroupId::G3 => &[Id, S2],
            SubgroupId::G4 => &[Id, S2S1S2],
            SubgroupId::G5 => &[Id, S1S2, S2S1],
            SubgroupId::G6 => &[Id, S1, S2, S1S2, S2S1, S2S1S2],
        }
    }
}

impl fmt::Display for SubgroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for SubgroupId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SubgroupId::ALL
            .into_iter()
            .find(|g| g.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Unsupported(format!("unknown subgroup `{s}` (expected G1..G6)")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdmissibilityMode {
    /// Build the supercommutator and run the Hom-Lie check on it.
    Jacobi,
    /// Compare `S(x,y,z)` with its signed transpose `S(x,z,y)`.
    SCriterion,
}

impl FromStr for AdmissibilityMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "jacobi" => Ok(Self::Jacobi),
            "s-criterion" => Ok(Self::SCriterion),
            _ => Err(Error::Unsupported(format!(
                "unknown admissibility mode `{s}`"
            ))),
        }
    }
}

fn names<const N: usize>(basis: &SuperBasis, idx: [usize; N]) -> [String; N] {
    idx.map(|i| basis.name(i).to_owned())
}

fn report_for(check: &str, h: &SuperAlgebra) -> CheckReport {
    CheckReport::new(check)
        .with_basis(h.basis.clone())
        .with_parameter(h.parameter.clone())
}

/// Evaluate `f` on every ordered triple of basis indices, in index order.
fn sweep_triples<F>(n: usize, f: F) -> Result<Vec<([usize; 3], Element)>>
where
    F: Fn(usize, usize, usize) -> Result<Element> + Sync,
{
    (0..n * n * n)
        .into_par_iter()
        .map(|t| {
            let (i, j, k) = (t / (n * n), (t / n) % n, t % n);
            f(i, j, k).map(|e| ([i, j, k], e))
        })
        .collect()
}

fn sweep_pairs<F>(n: usize, f: F) -> Result<Vec<([usize; 2], Element)>>
where
    F: Fn(usize, usize) -> Result<Element> + Sync,
{
    (0..n * n)
        .into_par_iter()
        .map(|t| f(t / n, t % n).map(|e| ([t / n, t % n], e)))
        .collect()
}

fn push_all<const N: usize>(
    report: &mut CheckReport,
    basis: &SuperBasis,
    rows: Vec<([usize; N], Element)>,
) {
    for (idx, e) in rows {
        report.push(Violation::new(names(basis, idx), Residual::Basis(e)));
    }
}

/// Source of α-associators of basis triples.
trait Associators {
    fn assoc(&self, idx: [usize; 3]) -> Result<Element>;
    fn parity(&self, i: usize) -> Parity;

    fn parity_triple(&self, [i, j, k]: [usize; 3]) -> [Parity; 3] {
        [self.parity(i), self.parity(j), self.parity(k)]
    }

    /// `Σ_{τ∈G} (-1)^ε(τ) (-1)^{|τ(x)|} as_α(τ(x))`
    fn subgroup_sum(&self, g: SubgroupId, idx: [usize; 3]) -> Result<Element> {
        let parities = self.parity_triple(idx);
        let mut out = Element::zero();
        for &tau in g.members() {
            let sign = tau.sign() * permutation_parity(tau, parities).sign();
            out = out.add(&self.assoc(tau.apply(&idx))?.signed(sign));
        }
        Ok(out)
    }

    /// `S(x,y,z) = (-1)^{|x||z|} as(x,y,z) + (-1)^{|y||x|} as(y,z,x) + (-1)^{|z||y|} as(z,x,y)`
    fn s_sum(&self, [x, y, z]: [usize; 3]) -> Result<Element> {
        let [px, py, pz] = self.parity_triple([x, y, z]);
        Ok(self
            .assoc([x, y, z])?
            .signed(koszul_sign(px, pz))
            .add(&self.assoc([y, z, x])?.signed(koszul_sign(py, px)))
            .add(&self.assoc([z, x, y])?.signed(koszul_sign(pz, py))))
    }

    /// Signed six-term combination of α-associators that equals the cyclic
    /// graded Jacobi sum of the supercommutator.
    fn six_term(&self, [x, y, z]: [usize; 3]) -> Result<Element> {
        let [px, py, pz] = self.parity_triple([x, y, z]);
        let s = |a: Parity, b: Parity| koszul_sign(a, b);
        let mut out = self.s_sum([x, y, z])?;
        out = out.sub(&self.assoc([x, z, y])?.signed(s(px, pz) * s(py, pz)));
        out = out.sub(&self.assoc([z, y, x])?.signed(s(px, py) * s(py, pz)));
        out = out.sub(&self.assoc([y, x, z])?.signed(s(px, py) * s(px, pz)));
        Ok(out)
    }
}

/// Associators computed on demand, for single-triple queries.
impl Associators for HomSuperAlgebra {
    fn assoc(&self, [i, j, k]: [usize; 3]) -> Result<Element> {
        let n = self.dim();
        if i >= n || j >= n || k >= n {
            return Err(Error::structural("basis index out of range"));
        }
        alpha_associator(
            self,
            &Element::basis(i),
            &Element::basis(j),
            &Element::basis(k),
        )
    }

    fn parity(&self, i: usize) -> Parity {
        self.basis().parity(i)
    }
}

/// All α-associators of basis triples, indexed by `(i*n + j)*n + k`.
struct AssociatorTable {
    n: usize,
    values: Vec<Element>,
    parities: Vec<Parity>,
}

impl AssociatorTable {
    fn new(h: &HomSuperAlgebra) -> Result<Self> {
        let n = h.dim();
        let values = sweep_triples(n, |i, j, k| h.assoc([i, j, k]))?
            .into_iter()
            .map(|(_, e)| e)
            .collect();
        Ok(Self {
            n,
            values,
            parities: h.basis().parities().collect(),
        })
    }
}

impl Associators for AssociatorTable {
    fn assoc(&self, [i, j, k]: [usize; 3]) -> Result<Element> {
        Ok(self.values[(i * self.n + j) * self.n + k].clone())
    }

    fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }
}

/// `(-1)^{|x||z|}[α(x),[y,z]] + (-1)^{|z||y|}[α(z),[x,y]] + (-1)^{|y||x|}[α(y),[z,x]]`
pub fn hom_jacobi_residual(h: &HomSuperAlgebra, x: usize, y: usize, z: usize) -> Result<Element> {
    let b = h.basis();
    let (px, py, pz) = (b.parity(x), b.parity(y), b.parity(z));
    let term = |a: usize, u: usize, v: usize| -> Result<Element> {
        let inner = h.mul(&Element::basis(u), &Element::basis(v))?;
        h.mul(&h.alpha.image(a), &inner)
    };
    Ok(term(x, y, z)?
        .signed(koszul_sign(px, pz))
        .add(&term(z, x, y)?.signed(koszul_sign(pz, py)))
        .add(&term(y, z, x)?.signed(koszul_sign(py, px))))
}

/// `[x,y] + (-1)^{|x||y|}[y,x]`
fn skew_residual(a: &SuperAlgebra, x: usize, y: usize) -> Element {
    let sign = koszul_sign(a.basis.parity(x), a.basis.parity(y));
    let xy = a.entry(x, y).cloned().unwrap_or_default();
    let yx = a.entry(y, x).cloned().unwrap_or_default();
    xy.add(&yx.signed(sign))
}

pub fn check_hom_associative_super(h: &HomSuperAlgebra) -> Result<CheckReport> {
    let n = h.dim();
    let rows = sweep_triples(n, |i, j, k| {
        alpha_associator(
            h,
            &Element::basis(i),
            &Element::basis(j),
            &Element::basis(k),
        )
    })?;
    let mut report = report_for("hom-assoc", &h.algebra);
    push_all(&mut report, h.basis(), rows);
    Ok(report.finish(n * n * n))
}

/// Ungraded Hom-Leibniz identity `[[x,y],α(z)] = [[x,z],α(y)] + [α(x),[y,z]]`.
pub fn check_hom_leibniz(h: &HomSuperAlgebra) -> Result<CheckReport> {
    if h.basis().has_odd() {
        return Err(Error::Unsupported(
            "the Hom-Leibniz identity is only defined for purely even algebras".into(),
        ));
    }
    let n = h.dim();
    let rows = sweep_triples(n, |x, y, z| {
        let (ex, ey, ez) = (Element::basis(x), Element::basis(y), Element::basis(z));
        let lhs = h.mul(&h.mul(&ex, &ey)?, &h.twist(&ez)?)?;
        let r1 = h.mul(&h.mul(&ex, &ez)?, &h.twist(&ey)?)?;
        let r2 = h.mul(&h.twist(&ex)?, &h.mul(&ey, &ez)?)?;
        Ok(lhs.sub(&r1).sub(&r2))
    })?;
    let mut report = report_for("hom-leibniz", &h.algebra);
    push_all(&mut report, h.basis(), rows);
    Ok(report.finish(n * n * n))
}

/// Graded skew-symmetry on all pairs and the graded Hom-Jacobi identity on
/// all triples.
pub fn check_hom_lie_super(h: &HomSuperAlgebra) -> Result<CheckReport> {
    let n = h.dim();
    let pairs = sweep_pairs(n, |x, y| Ok(skew_residual(&h.algebra, x, y)))?;
    let triples = sweep_triples(n, |x, y, z| hom_jacobi_residual(h, x, y, z))?;
    let mut report = report_for("hom-lie-super", &h.algebra);
    push_all(&mut report, h.basis(), pairs);
    push_all(&mut report, h.basis(), triples);
    Ok(report.finish(n * n + n * n * n))
}

/// Cyclic Jacobi sum of the supercommutator minus the signed six-term
/// α-associator expansion. Zero for every Hom-superalgebra.
pub fn associator_expansion_residual(
    h: &HomSuperAlgebra,
    x: usize,
    y: usize,
    z: usize,
) -> Result<Element> {
    let commutator = HomSuperAlgebra::new(supercommutator(&h.algebra)?, h.alpha.clone())?;
    let lhs = hom_jacobi_residual(&commutator, x, y, z)?;
    Ok(lhs.sub(&h.six_term([x, y, z])?))
}

/// `S(x,y,z)` for basis indices.
pub fn s_sum(h: &HomSuperAlgebra, x: usize, y: usize, z: usize) -> Result<Element> {
    h.s_sum([x, y, z])
}

pub fn check_hom_lie_admissible(
    h: &HomSuperAlgebra,
    mode: AdmissibilityMode,
) -> Result<CheckReport> {
    match mode {
        AdmissibilityMode::Jacobi => {
            let commutator = HomSuperAlgebra::new(supercommutator(&h.algebra)?, h.alpha.clone())?;
            let mut report = check_hom_lie_super(&commutator)?;
            report.check = "admissible".into();
            report.note("mode: jacobi");
            Ok(report)
        }
        AdmissibilityMode::SCriterion => {
            let n = h.dim();
            let table = AssociatorTable::new(h)?;
            let parities = &table.parities;
            let rows = sweep_triples(n, |x, y, z| {
                let sign = (parities[x] * parities[y]
                    + parities[x] * parities[z]
                    + parities[y] * parities[z])
                    .sign();
                Ok(table
                    .s_sum([x, y, z])?
                    .sub(&table.s_sum([x, z, y])?.signed(sign)))
            })?;
            let mut report = report_for("admissible", &h.algebra);
            report.note("mode: s-criterion");
            push_all(&mut report, h.basis(), rows);
            Ok(report.finish(n * n * n))
        }
    }
}

/// Residual of the G-Hom-associativity identity for one basis triple.
pub fn subgroup_residual(
    h: &HomSuperAlgebra,
    g: SubgroupId,
    x: usize,
    y: usize,
    z: usize,
) -> Result<Element> {
    h.subgroup_sum(g, [x, y, z])
}

pub fn check_g_hom_associative(h: &HomSuperAlgebra, g: SubgroupId) -> Result<CheckReport> {
    let n = h.dim();
    let table = AssociatorTable::new(h)?;
    let rows = sweep_triples(n, |x, y, z| table.subgroup_sum(g, [x, y, z]))?;
    let mut report = report_for(&format!("g-assoc:{g}"), &h.algebra);
    push_all(&mut report, h.basis(), rows);
    Ok(report.finish(n * n * n))
}

/// `[f(x), f(y)]' = f([x,y])` on basis pairs and `f∘α = α'∘f` on basis vectors.
pub fn check_morphism(
    f: &EvenMap,
    a: &HomSuperAlgebra,
    b: &HomSuperAlgebra,
) -> Result<CheckReport> {
    let (n, m) = (a.dim(), b.dim());
    if f.domain_dim() != n || f.codomain_dim() != m {
        return Err(Error::structural(format!(
            "morphism must be {m}x{n}, got {}x{}",
            f.codomain_dim(),
            f.domain_dim()
        )));
    }
    for i in 0..n {
        for k in 0..m {
            if !f.entry(k, i).is_zero() && a.basis().parity(i) != b.basis().parity(k) {
                return Err(Error::structural("morphism is not even"));
            }
        }
    }
    let pairs = sweep_pairs(n, |x, y| {
        let lhs = b.mul(&f.image(x), &f.image(y))?;
        let rhs = f.apply(&a.mul(&Element::basis(x), &Element::basis(y))?)?;
        Ok(lhs.sub(&rhs))
    })?;
    let mut report = CheckReport::new("morphism")
        .with_basis(b.basis().clone())
        .with_parameter(
            b.algebra
                .parameter
                .clone()
                .or_else(|| a.algebra.parameter.clone()),
        );
    push_all(&mut report, a.basis(), pairs);
    for x in 0..n {
        let lhs = f.apply(&a.alpha.image(x))?;
        let rhs = b.alpha.apply(&f.image(x))?;
        report.push(Violation::new(
            [a.basis().name(x)],
            Residual::Basis(lhs.sub(&rhs)),
        ));
    }
    Ok(report.finish(n * n + n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::AlgebraKind;
    use crate::scalar::Scalar;

    fn one_dim_product(c: i64) -> SuperAlgebra {
        let b = SuperBasis::new([("e", Parity::EVEN)]).unwrap();
        let mut a = SuperAlgebra::new("one", b, AlgebraKind::Product);
        a.set_entry(0, 0, Element::term(0, Scalar::from_int(c)))
            .unwrap();
        a
    }

    fn zero_product(parities: &[Parity]) -> SuperAlgebra {
        let b = SuperBasis::new(
            parities
                .iter()
                .enumerate()
                .map(|(i, &p)| (format!("b{i}"), p)),
        )
        .unwrap();
        SuperAlgebra::new("zero", b, AlgebraKind::Product)
    }

    #[test]
    fn associative_one_dim_passes() {
        let h = HomSuperAlgebra::untwisted(one_dim_product(1));
        assert!(check_hom_associative_super(&h).unwrap().passed());
    }

    #[test]
    fn zero_product_passes_everything() {
        let a = zero_product(&[Parity::EVEN, Parity::ODD, Parity::ODD]);
        let alpha = EvenMap::diagonal(&a.basis, vec![2.into(), 3.into(), (-1).into()]).unwrap();
        let h = HomSuperAlgebra::new(a, alpha).unwrap();
        assert!(check_hom_associative_super(&h).unwrap().passed());
        for g in SubgroupId::ALL {
            assert!(check_g_hom_associative(&h, g).unwrap().passed());
        }
        for mode in [AdmissibilityMode::Jacobi, AdmissibilityMode::SCriterion] {
            assert!(check_hom_lie_admissible(&h, mode).unwrap().passed());
        }
        assert!(associator_expansion_residual(&h, 0, 1, 2)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn leibniz_rejects_odd_basis() {
        let h = HomSuperAlgebra::untwisted(zero_product(&[Parity::EVEN, Parity::ODD]));
        assert!(matches!(check_hom_leibniz(&h), Err(Error::Unsupported(_))));
    }

    #[test]
    fn leibniz_with_zero_twist() {
        let b = SuperBasis::new([("e1", Parity::EVEN), ("e2", Parity::EVEN)]).unwrap();
        let mut a = SuperAlgebra::new("aff", b.clone(), AlgebraKind::Bracket);
        a.set_entry(0, 1, Element::basis(0)).unwrap();
        a.set_entry(1, 0, Element::term(0, Scalar::from_int(-1)))
            .unwrap();
        let h = HomSuperAlgebra::new(a, EvenMap::zero(&b, &b)).unwrap();
        assert!(check_hom_leibniz(&h).unwrap().passed());
    }

    #[test]
    fn subgroup_names_parse() {
        assert_eq!("g4".parse::<SubgroupId>().unwrap(), SubgroupId::G4);
        assert!("G7".parse::<SubgroupId>().is_err());
    }

    #[test]
    fn morphism_dimension_mismatch() {
        let h = HomSuperAlgebra::untwisted(one_dim_product(1));
        let two = zero_product(&[Parity::EVEN, Parity::EVEN]);
        let f = EvenMap::identity(&two.basis);
        assert!(check_morphism(&f, &h, &h).is_err());
    }
}
