use hecke_core::coxeter::SignVector;
use hecke_core::hecke::{resolve_cap, DEFAULT_SYMMETRIZER_CAP as CAP};
use hecke_core::qgroup::UqGen;
use hecke_core::qseries::{q_krawtchouk, QKrawParams};
use hecke_core::spherical::{
    build_invariant_basis, eigen_value, krawtchouk_table, lemma_product_check, lie_type_preset, phi_dual,
    phi_via_recurrence, weight_hf, LieType, SphericalTable,
};
use hecke_core::vmodule::{ProductTable, VElt};
use hecke_core::{Error, Params, Rational, Scalar, SymTable};
use num_traits::One;

fn sym() -> Params<Scalar> {
    Params::symbolic()
}

fn s(x: &str) -> Scalar {
    x.parse().unwrap()
}

fn r(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

#[test]
fn rank_one_table() {
    let t = phi_via_recurrence(&sym(), 1).unwrap();
    assert_eq!(t.values, vec![vec![s("1"), s("1")], vec![s("1"), s("(-1)/(p)")]]);
    let json = t.to_json();
    assert_eq!(json["n"], 1);
    assert_eq!(json["rows"][1]["f"], 1);
    assert_eq!(json["rows"][1]["values"][1], "(-1)/(p)");
    assert_eq!(t.to_csv(), "f,d0,d1\n0,1,1\n1,1,(-1)/(p)\n");
}

#[test]
fn krawtchouk_values() {
    let pr = sym();
    let k = |f, d, n| q_krawtchouk(&pr, &QKrawParams::new(f, d, pr.p(), n).unwrap()).unwrap();
    assert_eq!(k(0, 5, 7), Scalar::one());
    assert_eq!(k(1, 1, 1), s("(-1)/(p)"));
    assert_eq!(k(1, 0, 3), Scalar::one());
    assert!(QKrawParams::new(4, 0, pr.p(), 3).is_err());
    assert_eq!(krawtchouk_table(&pr, 3).unwrap(), phi_via_recurrence(&pr, 3).unwrap());
}

#[test]
fn boundary_rows_and_columns() {
    let pr = sym();
    let t = phi_via_recurrence(&pr, 4).unwrap();
    for i in 0..=4 {
        assert!(t.get(0, i).is_one());
        assert!(t.get(i, 0).is_one());
    }
}

#[test]
fn action_examples() {
    let pr = sym();
    let b = build_invariant_basis(&pr, 2, CAP).unwrap();
    assert_eq!(*b.w(0), VElt::one(2));
    assert!(b.act_efk(&pr, UqGen::F, 0).unwrap().is_zero());
    let k = b.act_efk(&pr, UqGen::K, 2).unwrap();
    assert_eq!(k, b.w(2).scale(&pr.q()));
    // t(E) kills the top element
    assert!(b.act_efk(&pr, UqGen::E, 2).unwrap().is_zero());
    assert!(b.act_efk(&pr, UqGen::E, 3).is_err());
}

#[test]
fn weights() {
    let pr = sym();
    assert_eq!(weight_hf(&pr, 1, 1).unwrap(), s("(p+1)/(p)"));
    assert_eq!(weight_hf(&pr, 0, 1).unwrap(), s("1+p"));
    let phi = phi_dual(&pr, 0, 2).unwrap();
    assert!(phi.eval(&pr, &VElt::one(2)).unwrap().is_one());
    assert!(phi_dual(&pr, 3, 2).is_err());
}

#[test]
fn eigenvalue_at_weight_zero() {
    let pr = sym();
    let n = 3;
    let num = pr.p_half().clone() * pr.q_pow_half(3) - pr.p_pow_half(-1) * pr.q_pow_half(-3) + pr.p_pow_half(-1)
        - pr.p_half().clone();
    let den = pr.q_half().clone() - pr.q_pow_half(-1);
    assert_eq!(eigen_value(&pr, 0, n).unwrap(), pr.div(&num, &den).unwrap());
}

#[test]
fn lemma_bad_arguments() {
    let pr = sym();
    let table = ProductTable::new(2, &pr).unwrap();
    assert!(lemma_product_check(&pr, &table, 1, &[]).unwrap());
    assert!(lemma_product_check(&pr, &table, 2, &[-1]).unwrap());
    assert!(lemma_product_check(&pr, &table, 2, &[]).is_err());
    assert!(lemma_product_check(&pr, &table, 0, &[]).is_err());
}

#[test]
fn presets_specialize() {
    let t: SymTable = phi_via_recurrence(&sym(), 2).unwrap();
    let (p, q) = lie_type_preset(LieType::B, &r(3)).unwrap();
    let num: SphericalTable<Rational> = t.specialize_pq(&p, &q).unwrap();
    assert_eq!(num.get(1, 1), &Rational::new(1.into(), 6.into()));
    assert!(matches!(
        lie_type_preset(LieType::D2, &r(-2)),
        Err(Error::DomainError(_))
    ));
    for g in LieType::ALL {
        assert_eq!(g.name().parse::<LieType>().unwrap(), g);
    }
}

#[test]
fn half_integral_specialization() {
    let t = phi_via_recurrence(&sym(), 2).unwrap();
    let direct = phi_via_recurrence(&Params::<Rational>::numeric(&r(2), &r(3)).unwrap(), 2).unwrap();
    assert_eq!(t.specialize(&r(2), &r(3)).unwrap(), direct);
    assert_eq!(t.specialize_pq(&r(4), &r(9)).unwrap(), direct);
}

#[test]
fn symmetrizer_cap_enforced() {
    let pr = sym();
    assert!(matches!(
        build_invariant_basis(&pr, 4, 3),
        Err(Error::CapExceeded { n: 4, cap: 3 })
    ));
    assert!(resolve_cap(Some(11)).is_err());
    assert_eq!(resolve_cap(None).unwrap(), CAP);
}

#[test]
fn rank_one_invariants() {
    let pr = sym();
    let b = build_invariant_basis(&pr, 1, CAP).unwrap();
    let minus = SignVector::minus_ones(1);
    assert_eq!(*b.w(1), VElt::v(minus).to_basis(hecke_core::vmodule::Basis::U, &pr));
    assert_eq!(b.form(1, 1).unwrap(), s("(1)/(p)"));
    assert_eq!(b.act_efk(&pr, UqGen::E, 0).unwrap(), b.w(1).scale(pr.p_half()));
}
