use hecke_core::characters::{char_value, eval_char};
use hecke_core::coxeter::{SignVector, SignedPerm};
use hecke_core::hecke::HeckeElt;
use hecke_core::spherical::{orthogonality_hf, phi_via_recurrence};
use hecke_core::vmodule::{ProductTable, VElt};
use hecke_core::{LaurentPoly, Monomial, Params, Rational, Scalar};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use proptest::prelude::*;

/// The worst relative error over the `moderate_rational` grid with n <= 5 is 3.0e-9.
const F64_TOL: f64 = 1e-8;

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(((-3i32..4, -3i32..4), -4i64..5), 1..4).prop_map(|terms| {
        LaurentPoly::from_terms(
            terms
                .into_iter()
                .map(|((a, b), c)| (Monomial::new(a, b), BigInt::from(c))),
        )
    })
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (poly(), poly()).prop_filter_map("zero denominator", |(n, d)| Scalar::new(n, d).ok())
}

/// Rationals away from 0 and 1, where the generic parameters degenerate.
fn generic_rational() -> impl Strategy<Value = Rational> {
    (2i64..40, 1i64..40)
        .prop_map(|(a, b)| Rational::new(a.into(), b.into()))
        .prop_filter("avoid 1", |r| !r.is_one())
}

/// Values in `[1/2, 2]` other than 1.
fn moderate_rational() -> impl Strategy<Value = Rational> {
    (8i64..33)
        .prop_filter("avoid 1", |a| *a != 16)
        .prop_map(|a| Rational::new(a.into(), 16.into()))
}

fn signed_perm(n: usize) -> impl Strategy<Value = SignedPerm> {
    (
        Just((1..=n as i32).collect::<Vec<_>>()).prop_shuffle(),
        prop::collection::vec(any::<bool>(), n),
    )
        .prop_map(|(perm, signs)| {
            let images = perm
                .into_iter()
                .zip(signs)
                .map(|(v, s)| if s { -v } else { v })
                .collect();
            SignedPerm::from_images(images).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn scalar_field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert_eq!((a.clone() + b.clone()) - b.clone(), a.clone());
        if !b.is_zero() {
            prop_assert_eq!(a.clone() * b.clone() * b.inv().unwrap(), a.clone());
        }
    }

    #[test]
    fn scalar_strings_round_trip(a in scalar()) {
        let back: Scalar = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn parameter_inversion_is_an_involution(a in scalar(), b in scalar()) {
        prop_assert_eq!(a.invert_variables().invert_variables(), a.clone());
        prop_assert_eq!((a.clone() * b.clone()).invert_variables(), a.invert_variables() * b.invert_variables());
    }

    #[test]
    fn length_is_inverse_invariant(w in signed_perm(4)) {
        prop_assert_eq!(w.length(), w.inverse().length());
        prop_assert_eq!(w.reduced_word().len(), w.length());
    }

    #[test]
    fn generators_change_length_by_one(w in signed_perm(4), i in 1usize..=4) {
        let s = SignedPerm::generator(i, 4).unwrap();
        let sw = s.multiply(&w).unwrap();
        let diff = sw.length() as i64 - w.length() as i64;
        prop_assert!(diff == 1 || diff == -1);
        prop_assert_eq!(diff == -1, w.has_left_descent(i));
    }

    #[test]
    fn hecke_product_is_associative(
        a in signed_perm(3),
        b in signed_perm(3),
        c in signed_perm(3),
        ph in generic_rational(),
        qh in generic_rational(),
    ) {
        let pr = Params::<Rational>::numeric(&ph, &qh).unwrap();
        let (ta, tb, tc) = (HeckeElt::basis(a), HeckeElt::basis(b), HeckeElt::basis(c));
        let left = ta.multiply(&tb, &pr).unwrap().multiply(&tc, &pr).unwrap();
        let right = ta.multiply(&tb.multiply(&tc, &pr).unwrap(), &pr).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn characters_are_multiplicative(
        x in 0u32..16,
        z in 0u32..16,
        y in 0u32..16,
        ph in generic_rational(),
        qh in generic_rational(),
    ) {
        let pr = Params::<Rational>::numeric(&ph, &qh).unwrap();
        let n = 4;
        let (x, z, y) = (
            SignVector::new(n, x).unwrap(),
            SignVector::new(n, z).unwrap(),
            SignVector::new(n, y).unwrap(),
        );
        let table = ProductTable::new(n, &pr).unwrap();
        let prod = table.product(&VElt::u(x), &VElt::u(z)).unwrap();
        prop_assert_eq!(eval_char(&pr, y, &prod).unwrap(), char_value(&pr, y, x) * char_value(&pr, y, z));
    }

    #[test]
    fn specialization_commutes_with_recurrence(ph in generic_rational(), qh in generic_rational(), n in 1usize..5) {
        let symbolic = phi_via_recurrence(&Params::<Scalar>::symbolic(), n).unwrap();
        let pr = Params::<Rational>::numeric(&ph, &qh).unwrap();
        prop_assert_eq!(symbolic.specialize(&ph, &qh).unwrap(), phi_via_recurrence(&pr, n).unwrap());
    }

    /// The forward recurrence loses roughly a factor `q^-d` of precision, so
    /// the floating comparison stays near `p = q = 1`.
    #[test]
    fn floating_recurrence_tracks_exact(ph in moderate_rational(), qh in moderate_rational(), n in 1usize..6) {
        let exact = phi_via_recurrence(&Params::<Rational>::numeric(&ph, &qh).unwrap(), n).unwrap();
        let approx = phi_via_recurrence(&Params::<f64>::numeric(&ph, &qh).unwrap(), n).unwrap();
        for f in 0..=n {
            for d in 0..=n {
                let want = exact.get(f, d).to_f64().unwrap();
                let got = *approx.get(f, d);
                prop_assert!((want - got).abs() <= F64_TOL * want.abs().max(1.0), "f={} d={}: {} vs {}", f, d, want, got);
            }
        }
    }

    #[test]
    fn orthogonality_at_rational_points(ph in generic_rational(), qh in generic_rational()) {
        let pr = Params::<Rational>::numeric(&ph, &qh).unwrap();
        let t = phi_via_recurrence(&pr, 4).unwrap();
        prop_assert!(orthogonality_hf(&pr, &t).unwrap().passed());
    }
}
