//! Direct expansions used as oracles. Everything here goes through
//! `multiply` and `apply_map` on elements only, never through the checkers'
//! cached tables.
#![allow(dead_code)]

use homsuper::random::{random_hom_algebra, RandomSpec};
use homsuper::{apply_map, multiply, Element, HomSuperAlgebra, Parity};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_algebras(seed: u64, count: usize) -> Vec<HomSuperAlgebra> {
    let mut r = rng(seed);
    let spec = RandomSpec::default();
    (0..count)
        .map(|_| random_hom_algebra(&mut r, &spec))
        .collect()
}

pub fn sgn(a: Parity, b: Parity) -> i64 {
    if a.is_odd() && b.is_odd() {
        -1
    } else {
        1
    }
}

pub fn mu(h: &HomSuperAlgebra, x: &Element, y: &Element) -> Element {
    multiply(&h.algebra, x, y).unwrap()
}

pub fn twist(h: &HomSuperAlgebra, x: &Element) -> Element {
    apply_map(&h.alpha, x).unwrap()
}

pub fn assoc(h: &HomSuperAlgebra, x: usize, y: usize, z: usize) -> Element {
    let (x, y, z) = (Element::basis(x), Element::basis(y), Element::basis(z));
    mu(h, &twist(h, &x), &mu(h, &y, &z)).sub(&mu(h, &mu(h, &x, &y), &twist(h, &z)))
}

/// Supercommutator of two homogeneous elements of the given parities.
pub fn commutator(
    h: &HomSuperAlgebra,
    x: &Element,
    px: Parity,
    y: &Element,
    py: Parity,
) -> Element {
    mu(h, x, y).sub(&mu(h, y, x).signed(sgn(px, py)))
}

/// Cyclic graded Hom-Jacobi sum of the supercommutator on basis vectors.
pub fn commutator_jacobi(h: &HomSuperAlgebra, x: usize, y: usize, z: usize) -> Element {
    let p = |i: usize| h.basis().parity(i);
    let term = |a: usize, b: usize, c: usize| {
        let inner = commutator(h, &Element::basis(b), p(b), &Element::basis(c), p(c));
        commutator(h, &twist(h, &Element::basis(a)), p(a), &inner, p(b) + p(c))
    };
    term(x, y, z)
        .signed(sgn(p(x), p(z)))
        .add(&term(z, x, y).signed(sgn(p(z), p(y))))
        .add(&term(y, z, x).signed(sgn(p(y), p(x))))
}
