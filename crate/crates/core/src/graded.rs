//! Finite-dimensional Z2-graded spaces and algebras given by structure constants.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::ops::{Add, Mul};

use crate::error::{Error, Result};
use crate::report::{CheckReport, Residual, Violation};
use crate::scalar::Scalar;

/// Degree in Z2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Parity(u8);

impl Parity {
    pub const EVEN: Parity = Parity(0);
    pub const ODD: Parity = Parity(1);

    pub fn new(value: u8) -> Self {
        Parity(value & 1)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn is_odd(self) -> bool {
        self.0 == 1
    }

    /// `(-1)^self` as a machine integer.
    pub fn sign(self) -> i64 {
        if self.is_odd() {
            -1
        } else {
            1
        }
    }
}

// Arithmetic in Z/2.
#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        Parity(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for Parity {
    type Output = Parity;
    fn mul(self, rhs: Parity) -> Parity {
        Parity(self.0 & rhs.0)
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.is_odd() { "odd" } else { "even" })
    }
}

/// `(-1)^{|a||b|}` for parities `a`, `b`.
pub fn koszul_sign(a: Parity, b: Parity) -> i64 {
    (a * b).sign()
}

/// Multiply a scalar by `±1`.
pub(crate) fn signed(sign: i64, s: &Scalar) -> Scalar {
    if sign < 0 {
        -s
    } else {
        s.clone()
    }
}

/// Ordered basis with a parity per vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperBasis {
    entries: Vec<(String, Parity)>,
}

impl SuperBasis {
    pub fn new<I, S>(entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, Parity)>,
        S: Into<String>,
    {
        let entries: Vec<(String, Parity)> =
            entries.into_iter().map(|(n, p)| (n.into(), p)).collect();
        let mut seen = HashSet::new();
        for (name, _) in &entries {
            if !seen.insert(name.as_str()) {
                return Err(Error::structural(format!("duplicate basis name `{name}`")));
            }
        }
        Ok(Self { entries })
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.entries[i].0
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.entries[i].1
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.entries.iter().position(|(n, _)| n == name)
    }

    pub fn parities(&self) -> impl Iterator<Item = Parity> + '_ {
        self.entries.iter().map(|&(_, p)| p)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> + '_ {
        self.entries.iter().map(|(n, _)| n.as_str())
    }

    pub fn has_odd(&self) -> bool {
        self.parities().any(Parity::is_odd)
    }
}

/// A vector in coordinates: basis index to nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Element {
    coords: BTreeMap<usize, Scalar>,
}

impl Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(i: usize) -> Self {
        Self::term(i, Scalar::one())
    }

    pub fn term(i: usize, c: Scalar) -> Self {
        let mut e = Self::zero();
        e.add_term(i, &c);
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (usize, Scalar)>>(terms: I) -> Self {
        let mut e = Self::zero();
        for (i, c) in terms {
            e.add_term(i, &c);
        }
        e
    }

    pub fn add_term(&mut self, i: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let sum = match self.coords.get(&i) {
            Some(old) => old + c,
            None => c.clone(),
        };
        if sum.is_zero() {
            self.coords.remove(&i);
        } else {
            self.coords.insert(i, sum);
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, c: &Scalar, other: &Element) {
        if c.is_zero() {
            return;
        }
        for (&i, v) in &other.coords {
            self.add_term(i, &(c * v));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coords.get(&i).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coords.iter().map(|(&i, c)| (i, c))
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.coords.keys().next_back().copied()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero();
        out.add_scaled(c, self);
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            coords: self.coords.iter().map(|(&i, c)| (i, -c)).collect(),
        }
    }

    pub fn signed(&self, sign: i64) -> Self {
        if sign < 0 {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn add(&self, other: &Element) -> Self {
        let mut out = self.clone();
        out.add_scaled(&Scalar::one(), other);
        out
    }

    pub fn sub(&self, other: &Element) -> Self {
        let mut out = self.clone();
        out.add_scaled(&Scalar::from_int(-1), other);
        out
    }

    /// The common parity of all stored indices, or `None` when the element
    /// mixes parities. The zero element counts as even.
    pub fn homogeneous_parity(&self, basis: &SuperBasis) -> Option<Parity> {
        let mut parities = self.coords.keys().map(|&i| basis.parity(i));
        let first = parities.next().unwrap_or(Parity::EVEN);
        parities.all(|p| p == first).then_some(first)
    }

    pub fn is_homogeneous(&self, basis: &SuperBasis) -> bool {
        self.homogeneous_parity(basis).is_some()
    }

    /// Apply a scalar map to every coefficient, dropping zeros.
    pub fn map_coeffs<F>(&self, mut f: F) -> Result<Self>
    where
        F: FnMut(&Scalar) -> Result<Scalar>,
    {
        let mut out = Self::zero();
        for (&i, c) in &self.coords {
            out.add_term(i, &f(c)?);
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgebraKind {
    Product,
    Bracket,
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlgebraKind::Product => "mul",
            AlgebraKind::Bracket => "bracket",
        })
    }
}

/// Basis plus a sparse table of products (or brackets) of basis vectors.
///
/// Pairs are stored in order; a missing pair means the product is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperAlgebra {
    pub name: String,
    pub basis: SuperBasis,
    pub kind: AlgebraKind,
    pub parameter: Option<String>,
    table: BTreeMap<(usize, usize), Element>,
}

impl SuperAlgebra {
    pub fn new(name: impl Into<String>, basis: SuperBasis, kind: AlgebraKind) -> Self {
        Self {
            name: name.into(),
            basis,
            kind,
            parameter: None,
            table: BTreeMap::new(),
        }
    }

    pub fn with_parameter(mut self, name: impl Into<String>) -> Self {
        self.parameter = Some(name.into());
        self
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    /// Name used when rendering scalars of this algebra.
    pub fn param_name(&self) -> &str {
        self.parameter.as_deref().unwrap_or("p")
    }

    fn check_element(&self, x: &Element) -> Result<()> {
        match x.max_index() {
            Some(i) if i >= self.dim() => Err(Error::structural(format!(
                "basis index {i} out of range for dimension {}",
                self.dim()
            ))),
            _ => Ok(()),
        }
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < self.dim() {
            Ok(())
        } else {
            Err(Error::structural(format!(
                "basis index {i} out of range for dimension {}",
                self.dim()
            )))
        }
    }

    pub fn set_entry(&mut self, i: usize, j: usize, value: Element) -> Result<()> {
        self.check_index(i)?;
        self.check_index(j)?;
        self.check_element(&value)?;
        if value.is_zero() {
            self.table.remove(&(i, j));
        } else {
            self.table.insert((i, j), value);
        }
        Ok(())
    }

    /// Product of basis vectors `i` and `j`; `None` means zero.
    pub fn entry(&self, i: usize, j: usize) -> Option<&Element> {
        self.table.get(&(i, j))
    }

    /// Nonzero table entries in index order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &Element)> {
        self.table.iter().map(|(&k, v)| (k, v))
    }

    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check_element(x)?;
        self.check_element(y)?;
        let mut out = Element::zero();
        for (i, a) in x.terms() {
            for (j, b) in y.terms() {
                if let Some(e) = self.table.get(&(i, j)) {
                    out.add_scaled(&(a * b), e);
                }
            }
        }
        Ok(out)
    }

    /// Same table with every coefficient transformed.
    pub fn map_table<F>(&self, mut f: F) -> Result<Self>
    where
        F: FnMut(&Element) -> Result<Element>,
    {
        let mut out = Self {
            table: BTreeMap::new(),
            ..self.clone()
        };
        for (&(i, j), e) in &self.table {
            out.set_entry(i, j, f(e)?)?;
        }
        Ok(out)
    }
}

/// Bilinear extension of the structure constants.
pub fn multiply(a: &SuperAlgebra, x: &Element, y: &Element) -> Result<Element> {
    a.multiply(x, y)
}

/// A parity-preserving linear map given by its matrix.
///
/// `matrix[k][i]` is the coefficient of codomain vector `k` in the image of
/// domain vector `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenMap {
    matrix: Vec<Vec<Scalar>>,
    cols: usize,
}

impl EvenMap {
    pub fn new(
        domain: &SuperBasis,
        codomain: &SuperBasis,
        matrix: Vec<Vec<Scalar>>,
    ) -> Result<Self> {
        if matrix.len() != codomain.dim() || matrix.iter().any(|row| row.len() != domain.dim()) {
            return Err(Error::structural(format!(
                "map matrix must be {}x{}",
                codomain.dim(),
                domain.dim()
            )));
        }
        for (k, row) in matrix.iter().enumerate() {
            for (i, c) in row.iter().enumerate() {
                if !c.is_zero() && codomain.parity(k) != domain.parity(i) {
                    return Err(Error::structural(format!(
                        "map is not even: `{}` has a component along `{}`",
                        domain.name(i),
                        codomain.name(k)
                    )));
                }
            }
        }
        Ok(Self {
            matrix,
            cols: domain.dim(),
        })
    }

    /// Build from the images of the domain basis vectors.
    pub fn from_images(
        domain: &SuperBasis,
        codomain: &SuperBasis,
        images: &[Element],
    ) -> Result<Self> {
        if images.len() != domain.dim() {
            return Err(Error::structural(format!(
                "expected {} images, got {}",
                domain.dim(),
                images.len()
            )));
        }
        let mut matrix = vec![vec![Scalar::zero(); domain.dim()]; codomain.dim()];
        for (i, img) in images.iter().enumerate() {
            for (k, c) in img.terms() {
                if k >= codomain.dim() {
                    return Err(Error::structural(format!("image index {k} out of range")));
                }
                matrix[k][i] = c.clone();
            }
        }
        Self::new(domain, codomain, matrix)
    }

    pub fn identity(basis: &SuperBasis) -> Self {
        Self::diagonal(basis, vec![Scalar::one(); basis.dim()]).expect("identity is even")
    }

    pub fn zero(domain: &SuperBasis, codomain: &SuperBasis) -> Self {
        Self {
            matrix: vec![vec![Scalar::zero(); domain.dim()]; codomain.dim()],
            cols: domain.dim(),
        }
    }

    pub fn diagonal(basis: &SuperBasis, diag: Vec<Scalar>) -> Result<Self> {
        let n = basis.dim();
        if diag.len() != n {
            return Err(Error::structural(
                "diagonal length does not match dimension",
            ));
        }
        let mut matrix = vec![vec![Scalar::zero(); n]; n];
        for (i, c) in diag.into_iter().enumerate() {
            matrix[i][i] = c;
        }
        Self::new(basis, basis, matrix)
    }

    pub fn domain_dim(&self) -> usize {
        self.cols
    }

    pub fn codomain_dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn entry(&self, k: usize, i: usize) -> &Scalar {
        &self.matrix[k][i]
    }

    pub fn image(&self, i: usize) -> Element {
        Element::from_terms(
            self.matrix
                .iter()
                .enumerate()
                .map(|(k, row)| (k, row[i].clone())),
        )
    }

    pub fn is_identity(&self) -> bool {
        self.cols == self.matrix.len()
            && self.matrix.iter().enumerate().all(|(k, row)| {
                row.iter()
                    .enumerate()
                    .all(|(i, c)| if i == k { c.is_one() } else { c.is_zero() })
            })
    }

    pub fn apply(&self, x: &Element) -> Result<Element> {
        if let Some(i) = x.max_index() {
            if i >= self.cols {
                return Err(Error::structural(format!(
                    "element index {i} out of range for map with {} columns",
                    self.cols
                )));
            }
        }
        let mut out = Element::zero();
        for (i, c) in x.terms() {
            for (k, row) in self.matrix.iter().enumerate() {
                if !row[i].is_zero() {
                    out.add_term(k, &(c * &row[i]));
                }
            }
        }
        Ok(out)
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &EvenMap) -> Result<EvenMap> {
        if self.cols != other.codomain_dim() {
            return Err(Error::structural("composition dimension mismatch"));
        }
        let mut matrix = vec![vec![Scalar::zero(); other.cols]; self.matrix.len()];
        for (k, row) in matrix.iter_mut().enumerate() {
            for (i, slot) in row.iter_mut().enumerate() {
                let mut acc = Scalar::zero();
                for (j, a) in self.matrix[k].iter().enumerate() {
                    if !a.is_zero() && !other.matrix[j][i].is_zero() {
                        acc += &(a * &other.matrix[j][i]);
                    }
                }
                *slot = acc;
            }
        }
        Ok(EvenMap {
            matrix,
            cols: other.cols,
        })
    }

    pub fn map_entries<F>(&self, mut f: F) -> Result<EvenMap>
    where
        F: FnMut(&Scalar) -> Result<Scalar>,
    {
        let matrix = self
            .matrix
            .iter()
            .map(|row| row.iter().map(&mut f).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(EvenMap {
            matrix,
            cols: self.cols,
        })
    }
}

pub fn apply_map(m: &EvenMap, x: &Element) -> Result<Element> {
    m.apply(x)
}

/// An algebra together with its twisting map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomSuperAlgebra {
    pub algebra: SuperAlgebra,
    pub alpha: EvenMap,
}

impl HomSuperAlgebra {
    pub fn new(algebra: SuperAlgebra, alpha: EvenMap) -> Result<Self> {
        let n = algebra.dim();
        if alpha.domain_dim() != n || alpha.codomain_dim() != n {
            return Err(Error::structural(format!(
                "twisting map must be {n}x{n}, got {}x{}",
                alpha.codomain_dim(),
                alpha.domain_dim()
            )));
        }
        Ok(Self { algebra, alpha })
    }

    /// Pair an algebra with the identity map.
    pub fn untwisted(algebra: SuperAlgebra) -> Self {
        let alpha = EvenMap::identity(&algebra.basis);
        Self { algebra, alpha }
    }

    pub fn basis(&self) -> &SuperBasis {
        &self.algebra.basis
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn mul(&self, x: &Element, y: &Element) -> Result<Element> {
        self.algebra.multiply(x, y)
    }

    pub fn twist(&self, x: &Element) -> Result<Element> {
        self.alpha.apply(x)
    }
}

/// Graded commutator of a product: `[x,y] = μ(x,y) - (-1)^{|x||y|} μ(y,x)`.
pub fn supercommutator(a: &SuperAlgebra) -> Result<SuperAlgebra> {
    let n = a.dim();
    let mut out = SuperAlgebra {
        kind: AlgebraKind::Bracket,
        table: BTreeMap::new(),
        ..a.clone()
    };
    for i in 0..n {
        for j in 0..n {
            let sign = koszul_sign(a.basis.parity(i), a.basis.parity(j));
            let mut e = a.entry(i, j).cloned().unwrap_or_default();
            if let Some(rev) = a.entry(j, i) {
                e.add_scaled(&Scalar::from_int(-sign), rev);
            }
            out.set_entry(i, j, e)?;
        }
    }
    Ok(out)
}

/// `as_α(x1,x2,x3) = μ(α(x1), μ(x2,x3)) - μ(μ(x1,x2), α(x3))`.
pub fn alpha_associator(
    h: &HomSuperAlgebra,
    x1: &Element,
    x2: &Element,
    x3: &Element,
) -> Result<Element> {
    let left = h.mul(&h.twist(x1)?, &h.mul(x2, x3)?)?;
    let right = h.mul(&h.mul(x1, x2)?, &h.twist(x3)?)?;
    Ok(left.sub(&right))
}

/// The six elements of S3, acting on triples by
/// `τ(x1,x2,x3) = (x_τ(1), x_τ(2), x_τ(3))`.
///
/// `S1` swaps the first two slots and `S2` the last two; products are read
/// as composition of the tuple maps, so `S1S2 = S1 ∘ S2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Perm3 {
    Id,
    S1,
    S2,
    S1S2,
    S2S1,
    S2S1S2,
}

impl Perm3 {
    pub const ALL: [Perm3; 6] = [
        Perm3::Id,
        Perm3::S1,
        Perm3::S2,
        Perm3::S1S2,
        Perm3::S2S1,
        Perm3::S2S1S2,
    ];

    /// Output slot `k` takes input slot `slots()[k]`.
    pub fn slots(self) -> [usize; 3] {
        match self {
            Perm3::Id => [0, 1, 2],
            Perm3::S1 => [1, 0, 2],
            Perm3::S2 => [0, 2, 1],
            Perm3::S1S2 => [2, 0, 1],
            Perm3::S2S1 => [1, 2, 0],
            Perm3::S2S1S2 => [2, 1, 0],
        }
    }

    fn from_slots(slots: [usize; 3]) -> Perm3 {
        *Self::ALL
            .iter()
            .find(|p| p.slots() == slots)
            .expect("valid permutation")
    }

    /// Signature `(-1)^ε(τ)`.
    pub fn sign(self) -> i64 {
        match self {
            Perm3::Id | Perm3::S1S2 | Perm3::S2S1 => 1,
            Perm3::S1 | Perm3::S2 | Perm3::S2S1S2 => -1,
        }
    }

    pub fn apply<T: Clone>(self, triple: &[T; 3]) -> [T; 3] {
        let s = self.slots();
        [
            triple[s[0]].clone(),
            triple[s[1]].clone(),
            triple[s[2]].clone(),
        ]
    }

    /// `self ∘ other` as maps on triples.
    pub fn compose(self, other: Perm3) -> Perm3 {
        let a = self.slots();
        let b = other.slots();
        Self::from_slots([b[a[0]], b[a[1]], b[a[2]]])
    }

    pub fn name(self) -> &'static str {
        match self {
            Perm3::Id => "id",
            Perm3::S1 => "sigma1",
            Perm3::S2 => "sigma2",
            Perm3::S1S2 => "sigma1sigma2",
            Perm3::S2S1 => "sigma2sigma1",
            Perm3::S2S1S2 => "sigma2sigma1sigma2",
        }
    }
}

/// Parity `|τ(x1,x2,x3)|` of a permutation applied to homogeneous arguments.
pub fn permutation_parity(tau: Perm3, parities: [Parity; 3]) -> Parity {
    let [a, b, c] = parities;
    match tau {
        Perm3::Id => Parity::EVEN,
        Perm3::S1 => a * b,
        Perm3::S2 => b * c,
        Perm3::S1S2 => b * c + a * c,
        Perm3::S2S1 => a * b + a * c,
        Perm3::S2S1S2 => b * c + a * c + a * b,
    }
}

/// Report every table entry whose output has the wrong parity.
pub fn check_even_structure(a: &SuperAlgebra) -> CheckReport {
    let mut report = CheckReport::new("even-structure").with_basis(a.basis.clone());
    let mut examined = 0;
    for ((i, j), e) in a.entries() {
        examined += 1;
        let expected = a.basis.parity(i) + a.basis.parity(j);
        for (k, c) in e.terms() {
            if a.basis.parity(k) != expected {
                report.push(Violation::new(
                    [a.basis.name(i), a.basis.name(j), a.basis.name(k)],
                    Residual::Basis(Element::term(k, c.clone())),
                ));
            }
        }
    }
    report.finish(examined)
}
