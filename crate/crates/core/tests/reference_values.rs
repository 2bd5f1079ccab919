//! Reference values and closed forms, checked exactly.

use griesskit::gram::{self, GramReport};
use griesskit::lattice::{ma2_conformal, mode_product, tilde_vector, VOAState, WeightCap};
use griesskit::minimal_model::{central_charge, conformal_weight_of, top_weight};
use griesskit::scalar::{int, rat, Scalar};
use griesskit::GriessAlgebra;

fn q(m: u32) -> Scalar {
    let m = i64::from(m);
    rat(m * (m + 1), 16)
}

fn c_factor(m: u32) -> Scalar {
    let m = i64::from(m);
    rat(m * (m + 5), (m + 2) * (m + 3))
}

#[test]
fn central_charge_closed_form() {
    for m in 1..=12 {
        assert_eq!(central_charge(m).unwrap(), c_factor(m));
    }
}

#[test]
fn m_a2_decomposition_weights() {
    assert_eq!(central_charge(2).unwrap(), rat(7, 10));
    assert_eq!(conformal_weight_of(2, 3, 1).unwrap(), rat(3, 2));
    assert_eq!(conformal_weight_of(1, 2, 1).unwrap(), rat(1, 2));
    assert_eq!(
        central_charge(1).unwrap() + central_charge(2).unwrap(),
        rat(6, 5)
    );
}

#[test]
fn top_weight_is_alpha() {
    for m in 1..=10 {
        assert_eq!(
            &top_weight(m).unwrap(),
            GriessAlgebra::build(3, m).unwrap().alpha()
        );
    }
}

#[test]
fn three_by_three_gram_block() {
    for m in 2..=10 {
        let a = gram::gram_matrix(3, m).unwrap();
        let f = c_factor(m) / int(2);
        for i in 0..3 {
            for j in 0..3 {
                let expected = if i == j { f.clone() } else { &f * q(m) };
                assert_eq!(a[(i, j)], expected);
            }
        }
    }
}

#[test]
fn b_and_c_entries() {
    for m in 2..=10 {
        let (f, q) = (c_factor(m), q(m));
        let b = gram::b_matrix(5, m).unwrap();
        assert_eq!(b[(0, 0)], &f * (int(1) - &q));
        assert_eq!(b[(0, 1)], &f * &q);
        let c = gram::c_matrix(5, m).unwrap();
        let tail = &f * &q * (int(1) - int(2) * &q);
        assert_eq!(c[(0, 0)], &f + &tail);
        assert_eq!(c[(0, 1)], tail);
    }
}

#[test]
fn closed_determinant_formulas() {
    for m in 2..=10 {
        let (f, q) = (c_factor(m), q(m));
        for s in 3..=8usize {
            let detb = num_traits::pow(f.clone(), s - 2)
                * num_traits::pow(int(1) - int(2) * &q, s - 3)
                * (int(1) + int(s as i64 - 4) * &q);
            let detc = num_traits::pow(f.clone(), s - 3)
                * (&f + int(s as i64 - 2) * &f * &q * (int(1) - int(2) * &q));
            assert_eq!(gram::detb_closed(s, m).unwrap(), detb);
            assert_eq!(gram::detc_closed(s, m).unwrap(), detc);
        }
    }
}

#[test]
fn positivity_classification() {
    for n in 3..=8 {
        for m in 2..=10 {
            let expected = if n == 3 { m <= 3 } else { m == 2 };
            assert_eq!(
                GramReport::compute(n, m).unwrap().positive_definite,
                expected,
                "n={n} m={m}"
            );
        }
    }
}

#[test]
fn ma2_vectors() {
    let cap = WeightCap::default();
    let vac = VOAState::vacuum(3);
    let w = ma2_conformal(3).unwrap();
    let total = central_charge(1).unwrap() + central_charge(2).unwrap();
    assert_eq!(
        mode_product(&w, 3, &w, cap).unwrap(),
        vac.scale(&(total / int(2)))
    );
    let t12 = tilde_vector(3, 1, 2).unwrap();
    let t13 = tilde_vector(3, 1, 3).unwrap();
    let (c, h) = (rat(7, 10), rat(3, 2));
    assert_eq!(
        mode_product(&t12, 3, &t12, cap).unwrap(),
        vac.scale(&(&c / int(2)))
    );
    assert_eq!(
        mode_product(&t12, 3, &t13, cap).unwrap(),
        vac.scale(&(&c * &h / int(8)))
    );
}
