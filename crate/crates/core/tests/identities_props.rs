mod common;

use common::{assoc, commutator_jacobi, random_algebras, sgn};
use homsuper::identities::{
    associator_expansion_residual, check_g_hom_associative, check_hom_associative_super,
    check_hom_lie_admissible, check_hom_lie_super, check_morphism, s_sum, subgroup_residual,
    AdmissibilityMode, SubgroupId,
};
use homsuper::twist::{builtin, yau_twist, BuiltinId};
use homsuper::{
    AlgebraKind, Element, EvenMap, HomSuperAlgebra, Parity, Scalar, SuperAlgebra, SuperBasis,
};

fn corpus() -> Vec<HomSuperAlgebra> {
    BuiltinId::ALL.into_iter().map(builtin).collect()
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))))
}

/// The displayed subgroup identities, written out term by term.
fn subgroup_oracle(h: &HomSuperAlgebra, g: SubgroupId, x: usize, y: usize, z: usize) -> Element {
    let p = |i: usize| h.basis().parity(i);
    let (a, b, c) = (p(x), p(y), p(z));
    let base = assoc(h, x, y, z);
    match g {
        SubgroupId::G1 => base,
        SubgroupId::G2 => base.sub(&assoc(h, y, x, z).signed(sgn(a, b))),
        SubgroupId::G3 => base.sub(&assoc(h, x, z, y).signed(sgn(b, c))),
        SubgroupId::G4 => base.sub(&assoc(h, z, y, x).signed(sgn(a, b) * sgn(a, c) * sgn(b, c))),
        SubgroupId::G5 => base
            .add(&assoc(h, z, x, y).signed(sgn(b, c) * sgn(a, c)))
            .add(&assoc(h, y, z, x).signed(sgn(a, b) * sgn(a, c))),
        // the full alternating sum is the supercommutator's Jacobi sum up to (-1)^{|x||z|}
        SubgroupId::G6 => commutator_jacobi(h, x, y, z).signed(sgn(a, c)),
    }
}

#[test]
fn associator_expansion_vanishes_on_random_algebras() {
    let algebras = random_algebras(1, 120);
    let mut checked = 0;
    for h in &algebras {
        for (x, y, z) in triples(h.dim()) {
            assert!(associator_expansion_residual(h, x, y, z).unwrap().is_zero());
            checked += 1;
        }
    }
    assert!(checked > 1000);
}

#[test]
fn six_term_expansion_matches_direct_jacobi_sum() {
    for h in random_algebras(2, 40) {
        for (x, y, z) in triples(h.dim()) {
            let p = |i: usize| h.basis().parity(i);
            let (a, b, c) = (p(x), p(y), p(z));
            let s = s_sum(&h, x, y, z).unwrap();
            let s_swapped = s_sum(&h, x, z, y).unwrap();
            let expected = s.sub(&s_swapped.signed(sgn(a, b) * sgn(a, c) * sgn(b, c)));
            assert_eq!(commutator_jacobi(&h, x, y, z), expected);
        }
    }
}

#[test]
fn admissibility_modes_agree() {
    let mut algebras = corpus();
    algebras.extend(random_algebras(5, 120));
    let (mut passing, mut failing) = (0, 0);
    for h in &algebras {
        let j = check_hom_lie_admissible(h, AdmissibilityMode::Jacobi).unwrap();
        let s = check_hom_lie_admissible(h, AdmissibilityMode::SCriterion).unwrap();
        assert_eq!(j.passed(), s.passed());
        assert_eq!(j.failing_inputs(), s.failing_inputs());
        if j.passed() {
            passing += 1;
        } else {
            failing += 1;
        }
    }
    assert!(passing > 0 && failing > 0, "both outcomes exercised");
}

#[test]
fn subgroup_residuals_match_displayed_identities() {
    for h in random_algebras(9, 25) {
        for g in SubgroupId::ALL {
            for (x, y, z) in triples(h.dim()) {
                assert_eq!(
                    subgroup_residual(&h, g, x, y, z).unwrap(),
                    subgroup_oracle(&h, g, x, y, z),
                    "{g} at {x},{y},{z}"
                );
            }
        }
    }
}

#[test]
fn extreme_subgroups_match_named_checks() {
    let mut algebras = corpus();
    algebras.extend(random_algebras(13, 20));
    for h in &algebras {
        let g1 = check_g_hom_associative(h, SubgroupId::G1).unwrap();
        let assoc = check_hom_associative_super(h).unwrap();
        assert_eq!(g1.violations, assoc.violations);
        let g6 = check_g_hom_associative(h, SubgroupId::G6).unwrap();
        let adm = check_hom_lie_admissible(h, AdmissibilityMode::SCriterion).unwrap();
        assert_eq!(g6.passed(), adm.passed());
        assert_eq!(g6.failing_inputs(), adm.failing_inputs());
    }
}

/// The 4-dimensional matrix superalgebra `M(1|1)` with basis
/// `E11, E22 | E12, E21`.
fn matrix_superalgebra() -> SuperAlgebra {
    let b = SuperBasis::new([
        ("E11", Parity::EVEN),
        ("E22", Parity::EVEN),
        ("E12", Parity::ODD),
        ("E21", Parity::ODD),
    ])
    .unwrap();
    // (row, col) of each basis matrix
    let rc = [(1, 1), (2, 2), (1, 2), (2, 1)];
    let mut a = SuperAlgebra::new("m11", b, AlgebraKind::Product);
    for (i, &(r1, c1)) in rc.iter().enumerate() {
        for (j, &(r2, c2)) in rc.iter().enumerate() {
            if c1 == r2 {
                let k = rc.iter().position(|&e| e == (r1, c2)).unwrap();
                a.set_entry(i, j, Element::basis(k)).unwrap();
            }
        }
    }
    a
}

#[test]
fn twisted_associative_algebra_is_g_associative_for_every_subgroup() {
    let a = matrix_superalgebra();
    for c in [2, -3, 5] {
        // conjugation by diag(1, c)
        let c = Scalar::from_int(c);
        let diag = vec![
            Scalar::one(),
            Scalar::one(),
            c.inverse().unwrap(),
            c.clone(),
        ];
        let alpha = EvenMap::diagonal(&a.basis, diag).unwrap();
        let twisted = a.map_table(|e| alpha.apply(e)).unwrap();
        let h = HomSuperAlgebra::new(twisted, alpha).unwrap();
        for g in SubgroupId::ALL {
            assert!(check_g_hom_associative(&h, g).unwrap().passed(), "{g}");
        }
        for mode in [AdmissibilityMode::Jacobi, AdmissibilityMode::SCriterion] {
            assert!(check_hom_lie_admissible(&h, mode).unwrap().passed());
        }
    }
}

#[test]
fn subgroup_identity_implies_admissibility_on_random_algebras() {
    // Each subgroup sum vanishing everywhere forces the full alternating sum
    // to vanish, since S3 splits into cosets.
    for h in random_algebras(29, 150) {
        let adm = check_hom_lie_admissible(&h, AdmissibilityMode::Jacobi).unwrap();
        for g in SubgroupId::ALL {
            if check_g_hom_associative(&h, g).unwrap().passed() {
                assert!(adm.passed(), "{g} passed but admissibility failed");
            }
        }
    }
}

#[test]
fn supercommutator_of_twisted_matrices_is_hom_lie() {
    let a = matrix_superalgebra();
    let alpha = EvenMap::diagonal(
        &a.basis,
        vec![
            Scalar::one(),
            Scalar::one(),
            Scalar::from_int(2).inverse().unwrap(),
            Scalar::from_int(2),
        ],
    )
    .unwrap();
    let h = HomSuperAlgebra::new(a.map_table(|e| alpha.apply(e)).unwrap(), alpha).unwrap();
    let bracket = homsuper::graded::supercommutator(&h.algebra).unwrap();
    let lie = HomSuperAlgebra::new(bracket, h.alpha.clone()).unwrap();
    assert!(check_hom_lie_super(&lie).unwrap().passed());
}

#[test]
fn morphisms_transport_identities() {
    let lambda = builtin(BuiltinId::Osp12Lambda);
    let base = homsuper::twist::osp12();
    // another diagonal automorphism commutes with the twist
    let diag = [0, 2, -2, -1, 1]
        .map(|k| Scalar::from_int(3).pow(k).unwrap())
        .to_vec();
    let f = EvenMap::diagonal(&base.basis, diag).unwrap();
    assert!(check_morphism(&f, &lambda, &lambda).unwrap().passed());
    // the identity is a morphism from the Lie algebra to itself but not to the twisted one
    let id = EvenMap::identity(&base.basis);
    let plain = HomSuperAlgebra::untwisted(base.clone());
    assert!(check_morphism(&id, &plain, &plain).unwrap().passed());
    assert!(!check_morphism(&id, &plain, &lambda).unwrap().passed());
    // twisting along f itself gives a second Hom-Lie structure, with α = f a morphism into it
    let h = yau_twist(&base, &f).unwrap();
    assert!(check_morphism(&f, &h, &h).unwrap().passed());
    assert!(check_hom_lie_super(&h).unwrap().passed());
}

mod seeded {
    use super::*;
    use homsuper::random::{random_hom_algebra, RandomSpec};
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn expansion_and_mode_agreement_for_any_seed(seed in any::<u64>()) {
            let mut r = common::rng(seed);
            let h = random_hom_algebra(&mut r, &RandomSpec::default());
            for (x, y, z) in triples(h.dim()) {
                prop_assert!(associator_expansion_residual(&h, x, y, z).unwrap().is_zero());
            }
            let j = check_hom_lie_admissible(&h, AdmissibilityMode::Jacobi).unwrap();
            let s = check_hom_lie_admissible(&h, AdmissibilityMode::SCriterion).unwrap();
            prop_assert_eq!(j.failing_inputs(), s.failing_inputs());
        }
    }
}
