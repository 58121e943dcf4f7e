use homsuper::graded::{koszul_sign, Parity};
use homsuper::sigma::{
    apply_derivation, apply_endo, hls_bracket, lg_multiply, qhl_residual, DiagonalDerivation,
    LgElement, MonomialEndo, QhlConfig,
};
use homsuper::{rational, Scalar};
use proptest::prelude::*;

fn coeff() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, 1i64..=3, -1i64..=1)
        .prop_map(|(n, d, k)| &Scalar::from_rational(rational(n, d)) * &Scalar::param_pow(k))
}

fn parity_of(odd: bool) -> Parity {
    if odd {
        Parity::ODD
    } else {
        Parity::EVEN
    }
}

/// Combination of up to four terms with arbitrary parities.
fn element() -> impl Strategy<Value = LgElement> {
    prop::collection::vec((any::<bool>(), -8i64..=8, coeff()), 0..4).prop_map(|terms| {
        let mut e = LgElement::zero();
        for (odd, n, c) in terms {
            e.add_term(parity_of(odd), n, &c);
        }
        e
    })
}

/// Nonzero homogeneous combination of the given parity.
fn homogeneous(odd: bool) -> impl Strategy<Value = LgElement> {
    prop::collection::vec((-8i64..=8, coeff()), 1..4)
        .prop_map(move |terms| {
            let mut e = LgElement::zero();
            for (n, c) in terms {
                e.add_term(parity_of(odd), n, &c);
            }
            e
        })
        .prop_filter("nonzero", |e| !e.is_zero())
}

fn any_homogeneous() -> impl Strategy<Value = LgElement> {
    any::<bool>().prop_flat_map(homogeneous)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_associative(a in element(), b in element(), c in element()) {
        prop_assert_eq!(
            lg_multiply(&lg_multiply(&a, &b), &c),
            lg_multiply(&a, &lg_multiply(&b, &c))
        );
    }

    #[test]
    fn homogeneous_elements_supercommute(a in any_homogeneous(), b in any_homogeneous()) {
        let s = koszul_sign(a.parity().unwrap(), b.parity().unwrap());
        prop_assert_eq!(lg_multiply(&a, &b), lg_multiply(&b, &a).signed(s));
    }

    #[test]
    fn twist_is_multiplicative(a in element(), b in element()) {
        let s = MonomialEndo::qwitt();
        prop_assert_eq!(apply_endo(&s, &lg_multiply(&a, &b)), lg_multiply(&apply_endo(&s, &a), &apply_endo(&s, &b)));
    }

    #[test]
    fn twisted_leibniz_on_combinations(a in element(), b in element()) {
        let (s, d) = (MonomialEndo::qwitt(), DiagonalDerivation::qwitt());
        let lhs = apply_derivation(&d, &lg_multiply(&a, &b));
        let rhs = lg_multiply(&apply_derivation(&d, &a), &b).add(&lg_multiply(&apply_endo(&s, &a), &apply_derivation(&d, &b)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bracket_is_graded_antisymmetric(a in any_homogeneous(), b in any_homogeneous()) {
        let cfg = QhlConfig::qwitt(Scalar::one());
        let s = koszul_sign(a.parity().unwrap(), b.parity().unwrap());
        let ab = hls_bracket(&cfg, &a, &b).unwrap();
        let ba = hls_bracket(&cfg, &b, &a).unwrap();
        prop_assert_eq!(ab, ba.signed(-s));
    }

    #[test]
    fn qhl_identity_on_combinations(a in any_homogeneous(), b in any_homogeneous(), c in any_homogeneous()) {
        let cfg = QhlConfig::qwitt(Scalar::one());
        prop_assert!(qhl_residual(&cfg, &a, &b, &c).unwrap().is_zero());
    }
}
