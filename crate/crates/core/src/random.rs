//! Random even algebras for property tests.
//!
//! The generated tables are arbitrary: they need not satisfy any identity.
//! Evenness is guaranteed by construction, since every component of
//! `e_i·e_j` and every entry of `α` is drawn only where the parities match.

use rand::Rng;

use crate::graded::{
    AlgebraKind, Element, EvenMap, HomSuperAlgebra, Parity, SuperAlgebra, SuperBasis,
};
use crate::scalar::{rational, Scalar};

/// Shape of the generated algebras.
#[derive(Debug, Clone, Copy)]
pub struct RandomSpec {
    pub max_dim: usize,
    /// Probability that a parity-compatible slot is nonzero.
    pub density: f64,
    /// Numerators and denominators are drawn from `[-bound, bound]`.
    pub bound: i64,
    /// Allow coefficients `c·p^k` with `k ∈ {-1, 0, 1}`.
    pub parametric: bool,
}

impl Default for RandomSpec {
    fn default() -> Self {
        Self {
            max_dim: 4,
            density: 0.5,
            bound: 3,
            parametric: true,
        }
    }
}

pub fn random_scalar<R: Rng + ?Sized>(rng: &mut R, spec: &RandomSpec) -> Scalar {
    let num = loop {
        let n = rng.gen_range(-spec.bound..=spec.bound);
        if n != 0 {
            break n;
        }
    };
    let den = if rng.gen_bool(0.25) {
        rng.gen_range(2..=spec.bound.max(2))
    } else {
        1
    };
    let k = if spec.parametric && rng.gen_bool(0.3) {
        rng.gen_range(-1..=1)
    } else {
        0
    };
    Scalar::monomial(rational(num, den), k)
}

pub fn random_basis<R: Rng + ?Sized>(rng: &mut R, spec: &RandomSpec) -> SuperBasis {
    let dim = rng.gen_range(1..=spec.max_dim.max(1));
    SuperBasis::new((0..dim).map(|i| (format!("e{}", i + 1), Parity::new(rng.gen_range(0..=1)))))
        .expect("distinct names")
}

pub fn random_algebra<R: Rng + ?Sized>(rng: &mut R, spec: &RandomSpec) -> SuperAlgebra {
    let basis = random_basis(rng, spec);
    let n = basis.dim();
    let mut a = SuperAlgebra::new("random", basis, AlgebraKind::Product);
    for i in 0..n {
        for j in 0..n {
            let target = a.basis.parity(i) + a.basis.parity(j);
            let mut value = Element::zero();
            for k in 0..n {
                if a.basis.parity(k) == target && rng.gen_bool(spec.density) {
                    value.add_term(k, &random_scalar(rng, spec));
                }
            }
            a.set_entry(i, j, value).expect("indices in range");
        }
    }
    a
}

pub fn random_even_map<R: Rng + ?Sized>(
    rng: &mut R,
    basis: &SuperBasis,
    spec: &RandomSpec,
) -> EvenMap {
    let n = basis.dim();
    let matrix = (0..n)
        .map(|k| {
            (0..n)
                .map(|i| {
                    if basis.parity(k) == basis.parity(i) && rng.gen_bool(spec.density) {
                        random_scalar(rng, spec)
                    } else {
                        Scalar::zero()
                    }
                })
                .collect()
        })
        .collect();
    EvenMap::new(basis, basis, matrix).expect("even by construction")
}

/// A random even table paired with a random even twist.
pub fn random_hom_algebra<R: Rng + ?Sized>(rng: &mut R, spec: &RandomSpec) -> HomSuperAlgebra {
    let a = random_algebra(rng, spec);
    let alpha = random_even_map(rng, &a.basis, spec);
    HomSuperAlgebra::new(a, alpha).expect("square map")
}

/// Random element with coefficients on at most every basis vector.
pub fn random_element<R: Rng + ?Sized>(
    rng: &mut R,
    basis: &SuperBasis,
    spec: &RandomSpec,
) -> Element {
    let mut x = Element::zero();
    for i in 0..basis.dim() {
        if rng.gen_bool(spec.density) {
            x.add_term(i, &random_scalar(rng, spec));
        }
    }
    x
}
