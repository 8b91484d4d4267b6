use fibluc_core::idlang::{evaluate, parse_expr, Binding};
use fibluc_core::{BivarPoly, QuadExt, Rat, Ring, RingValue};
use proptest::prelude::*;

/// Sparse polynomials with at most 8 terms, exponents <= 6, coefficients in [-9, 9].
fn poly() -> impl Strategy<Value = BivarPoly> {
    prop::collection::vec((-9i64..=9, 0u32..=6, 0u32..=6), 0..=8)
        .prop_map(|terms| BivarPoly::from_int_terms(&terms))
}

/// Smaller polynomials for use as substitution arguments.
fn small_poly() -> impl Strategy<Value = BivarPoly> {
    prop::collection::vec((-3i64..=3, 0u32..=2, 0u32..=2), 0..=3)
        .prop_map(|terms| BivarPoly::from_int_terms(&terms))
}

fn ext() -> impl Strategy<Value = QuadExt> {
    (poly(), poly()).prop_map(|(a, b)| QuadExt::new(a, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn add_commutative_associative(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    }

    #[test]
    fn mul_commutative_associative(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn distributive(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn identities_and_inverse(a in poly()) {
        prop_assert_eq!(&a + &BivarPoly::zero(), a.clone());
        prop_assert_eq!(&a * &BivarPoly::one(), a.clone());
        prop_assert!((&a + &(-&a)).is_zero());
        prop_assert!((&a * &BivarPoly::zero()).is_zero());
    }

    #[test]
    fn rational_coefficients_stay_canonical(a in poly(), num in -9i64..=9, den in 1i64..=9) {
        let c = Rat::new(num.into(), den.into());
        let scaled = a.scale(&c);
        prop_assert_eq!(scaled.scale(&Rat::from_integer(den.into())), a.scale(&Rat::from_integer(num.into())));
        for (_, coeff) in scaled.terms() {
            prop_assert!(!num_traits::Zero::is_zero(coeff));
        }
    }

    #[test]
    fn substitute_is_homomorphism(p in poly(), q in poly(), xs in small_poly(), ys in small_poly()) {
        prop_assert_eq!((&p + &q).substitute(&xs, &ys), &p.substitute(&xs, &ys) + &q.substitute(&xs, &ys));
        prop_assert_eq!((&p * &q).substitute(&xs, &ys), &p.substitute(&xs, &ys) * &q.substitute(&xs, &ys));
    }

    #[test]
    fn substitute_identity(p in poly()) {
        prop_assert_eq!(p.substitute(&BivarPoly::x(), &BivarPoly::y()), p);
    }

    #[test]
    fn substitute_into_extension_matches_base(p in poly(), xs in small_poly(), ys in small_poly()) {
        let base = p.substitute(&xs, &ys);
        let lifted = p.substitute(&RingValue::Ext(QuadExt::base(xs)), &RingValue::Ext(QuadExt::base(ys)));
        prop_assert_eq!(lifted, RingValue::Base(base));
    }

    #[test]
    fn embedding_is_homomorphism(a in poly(), b in poly()) {
        let (ea, eb) = (QuadExt::base(a.clone()), QuadExt::base(b.clone()));
        prop_assert_eq!(&ea + &eb, QuadExt::base(&a + &b));
        prop_assert_eq!(&ea - &eb, QuadExt::base(&a - &b));
        prop_assert_eq!(&ea * &eb, QuadExt::base(&a * &b));
        let (ra, rb) = (RingValue::Ext(ea), RingValue::Base(b.clone()));
        prop_assert_eq!(&ra * &rb, RingValue::Base(&a * &b));
    }

    #[test]
    fn conjugate_product(a in poly(), b in poly()) {
        let u = QuadExt::new(a.clone(), b.clone());
        let prod = &u * &u.conjugate();
        prop_assert!(prod.b.is_zero());
        prop_assert_eq!(prod.a, &a.square() - &(&b.square() * &BivarPoly::discriminant()));
    }

    #[test]
    fn extension_ring_axioms(u in ext(), v in ext(), w in ext()) {
        prop_assert_eq!(&u * &v, &v * &u);
        prop_assert_eq!(&(&u * &v) * &w, &u * &(&v * &w));
        prop_assert_eq!(&u * &(&v + &w), &(&u * &v) + &(&u * &w));
    }

    #[test]
    fn pow_matches_repeated_mul(a in small_poly(), e in 0u32..6) {
        let mut acc = BivarPoly::one();
        for _ in 0..e {
            acc = &acc * &a;
        }
        prop_assert_eq!(a.pow(e), acc);
    }

    /// Distinct canonical forms render distinctly: the rendering parses back
    /// to the same polynomial.
    #[test]
    fn canonical_text_round_trips(p in poly()) {
        let text = p.canonical_text();
        let back = evaluate(&parse_expr(&text).unwrap(), &Binding::new()).unwrap();
        prop_assert_eq!(back, RingValue::Base(p));
    }

    #[test]
    fn canonical_text_injective(p in poly(), q in poly()) {
        prop_assert_eq!(p == q, p.canonical_text() == q.canonical_text());
    }
}
