use griesskit::gram::{self, block_verdict, orthogonal_blocks};
use griesskit::lattice::{mode_product, VirasoroFamily, WeightCap};
use griesskit::minimal_model::{
    conformal_weight, fusion_dim, kac_reflection, kac_table, KacLabel, ModuleClass,
};
use griesskit::scalar::{rat, Scalar};
use griesskit::{GriessAlgebra, GriessElement};
use proptest::prelude::*;

fn label() -> impl Strategy<Value = KacLabel> {
    (1u32..=12)
        .prop_flat_map(|m| (Just(m), 1..=m + 1, 1..=m + 2))
        .prop_map(|(m, r, s)| KacLabel::new(m, r, s).unwrap())
}

fn class_triple() -> impl Strategy<Value = (KacLabel, KacLabel, KacLabel)> {
    (1u32..=8).prop_flat_map(|m| {
        let l =
            move || (1..=m + 1, 1..=m + 2).prop_map(move |(r, s)| KacLabel::new(m, r, s).unwrap());
        (l(), l(), l())
    })
}

fn small_rational() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| rat(p, q))
}

fn element(n: usize) -> impl Strategy<Value = GriessElement> {
    prop::collection::vec(small_rational(), n * (n - 1) / 2)
        .prop_map(move |c| GriessElement::from_coeffs(n, c))
}

fn algebra_and_elements(
) -> impl Strategy<Value = (GriessAlgebra, GriessElement, GriessElement, GriessElement)> {
    (3usize..=6, 1u32..=10).prop_flat_map(|(n, m)| {
        (
            Just(GriessAlgebra::build(n, m).unwrap()),
            element(n),
            element(n),
            element(n),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reflection_preserves_weight(l in label()) {
        prop_assert_eq!(conformal_weight(&l), conformal_weight(&kac_reflection(&l)));
        prop_assert_eq!(kac_reflection(&kac_reflection(&l)), l);
    }

    #[test]
    fn fusion_symmetric_and_reflection_invariant((a, b, c) in class_triple()) {
        let (ca, cb, cc) = (ModuleClass::of(a), ModuleClass::of(b), ModuleClass::of(c));
        let n = fusion_dim(ca, cb, cc).unwrap();
        prop_assert_eq!(n, fusion_dim(cb, ca, cc).unwrap());
        prop_assert_eq!(n, fusion_dim(ModuleClass::of(a.reflect()), cb, ModuleClass::of(c.reflect())).unwrap());
    }

    #[test]
    fn griess_commutative_and_invariant((alg, a, b, c) in algebra_and_elements()) {
        let ab = alg.product(&a, &b).unwrap();
        prop_assert_eq!(&ab, &alg.product(&b, &a).unwrap());
        let lhs = alg.form(&ab, &c).unwrap();
        let rhs = alg.form(&b, &alg.product(&a, &c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        let omega = alg.conformal_vector();
        prop_assert_eq!(alg.product(&omega, &a).unwrap(), a.scale(&rat(2, 1)));
    }

    #[test]
    fn miyamoto_is_multiplicative((alg, a, b, _) in algebra_and_elements(), k in 0usize..15) {
        let p = alg.pairs()[k % alg.dim()];
        let s = alg.miyamoto(&p);
        let lhs = s.apply(&alg.product(&a, &b).unwrap()).unwrap();
        let rhs = alg.product(&s.apply(&a).unwrap(), &s.apply(&b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(alg.form(&s.apply(&a).unwrap(), &s.apply(&b).unwrap()).unwrap(), alg.form(&a, &b).unwrap());
    }

    #[test]
    fn lattice_grading_and_skew_symmetry(
        x in prop::collection::vec(small_rational(), 6),
        y in prop::collection::vec(small_rational(), 6),
        p in -1i32..=3,
    ) {
        let fam = VirasoroFamily::ising(4).unwrap();
        let (u, v) = (fam.combination(&x), fam.combination(&y));
        let cap = WeightCap(6);
        let r = mode_product(&u, p, &v, cap).unwrap();
        let target = (2 + 2 - p - 1) as u32;
        prop_assert!(r.is_zero() || r.homogeneous_weight() == Some(target));
        let uv = mode_product(&u, 1, &v, cap).unwrap().component(2);
        let vu = mode_product(&v, 1, &u, cap).unwrap().component(2);
        prop_assert_eq!(uv, vu);
    }
}

#[test]
fn vacuum_is_fusion_unit() {
    for m in 1..=8 {
        let classes: Vec<ModuleClass> = kac_table(m).unwrap().into_iter().map(|(c, _)| c).collect();
        let vac = ModuleClass::vacuum(m).unwrap();
        for &b in &classes {
            for &c in &classes {
                assert_eq!(fusion_dim(vac, b, c).unwrap() == 1, b == c, "m={m} {b} {c}");
            }
        }
    }
}

#[test]
fn general_parameters_reproduce_tables() {
    for n in 3..=6 {
        for m in 1..=10 {
            let alg = GriessAlgebra::build(n, m).unwrap();
            let general =
                GriessAlgebra::build_general(n, alg.alpha().clone(), alg.beta().clone()).unwrap();
            assert!(alg.same_tables(&general));
        }
    }
}

#[test]
fn sylvester_agrees_with_block_verdict() {
    for n in 3..=8 {
        for (m, pd) in gram::classify(n, 10).unwrap() {
            assert_eq!(pd, block_verdict(n, m).unwrap(), "n={n} m={m}");
        }
    }
}

#[test]
fn asserted_blocks_are_orthogonal() {
    for n in 3..=7 {
        for m in 1..=6 {
            for (name, zero) in orthogonal_blocks(n, m).unwrap() {
                assert!(zero, "block {name} nonzero at n={n} m={m}");
            }
        }
    }
}
