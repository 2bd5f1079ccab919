use num_traits::Zero;

use super::{LatticeVector, VOAState, WeightCap};
use crate::error::{Error, Result};
use crate::scalar::{int, rat, Scalar};

fn check_rank(h: &[Scalar], v: &VOAState) {
    assert_eq!(h.len(), v.rank(), "direction and state rank differ");
}

/// `h(k) v` for `k != 0`: a creation operator for `k < 0`, an annihilator
/// for `k > 0`. The zero mode is [`zero_mode`].
pub fn heisenberg_apply(h: &[Scalar], k: i32, v: &VOAState) -> Result<VOAState> {
    if k == 0 {
        return Err(Error::InvalidParameter("use zero_mode for h(0)".into()));
    }
    if h.len() != v.rank() {
        return Err(Error::DimensionMismatch {
            expected: v.rank(),
            found: h.len(),
        });
    }
    Ok(heisenberg(h, k, v))
}

/// `h(0) v`, acting by `(h | gamma)` on the `e^gamma` component.
pub fn zero_mode(h: &[Scalar], v: &VOAState) -> VOAState {
    check_rank(h, v);
    let mut out = VOAState::zero(v.rank());
    for ((mono, lat), c) in v.terms() {
        let eig: Scalar = h
            .iter()
            .zip(lat.coords())
            .fold(Scalar::zero(), |acc, (a, &g)| acc + a * int(g))
            * int(2);
        out.add_term(mono.clone(), lat.clone(), c * eig);
    }
    out
}

pub(crate) fn heisenberg(h: &[Scalar], k: i32, v: &VOAState) -> VOAState {
    if k == 0 {
        return zero_mode(h, v);
    }
    let mut out = VOAState::zero(v.rank());
    let deg = k.unsigned_abs();
    for ((mono, lat), c) in v.terms() {
        if k < 0 {
            for (d, hd) in h.iter().enumerate() {
                if !hd.is_zero() {
                    out.add_term(mono.with_factor(d, deg), lat.clone(), c * hd);
                }
            }
        } else {
            for (idx, &(d, mode)) in mono.factors().iter().enumerate() {
                if mode == deg && !h[d].is_zero() {
                    out.add_term(
                        mono.without(idx),
                        lat.clone(),
                        c * &h[d] * int(2 * i64::from(deg)),
                    );
                }
            }
        }
    }
    out
}

/// Partitions of `n` as `(part, multiplicity)` lists.
fn partitions(n: u32) -> Vec<Vec<(u32, u32)>> {
    fn go(n: u32, max: u32, acc: &mut Vec<(u32, u32)>, out: &mut Vec<Vec<(u32, u32)>>) {
        if n == 0 {
            out.push(acc.clone());
            return;
        }
        for part in (1..=max.min(n)).rev() {
            for mult in 1..=n / part {
                acc.push((part, mult));
                go(n - part * mult, part - 1, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn factorial(n: u32) -> i64 {
    (1..=i64::from(n)).product()
}

/// Degree-`n` part of `exp(sign * sum_k gamma(s k) z^{..} / k)` applied to
/// `v`, with `s = -1` for creation and `s = +1` for annihilation.
fn exp_component(gamma: &[Scalar], n: u32, creation: bool, v: &VOAState) -> VOAState {
    let mut out = VOAState::zero(v.rank());
    for parts in partitions(n) {
        let mut coeff = int(1);
        let mut state = v.clone();
        for &(k, a) in &parts {
            let base = if creation {
                rat(1, i64::from(k))
            } else {
                rat(-1, i64::from(k))
            };
            coeff *= num_traits::pow(base, a as usize) / int(factorial(a));
            let mode = if creation { -(k as i32) } else { k as i32 };
            for _ in 0..a {
                state = heisenberg(gamma, mode, &state);
            }
            if state.is_zero() {
                break;
            }
        }
        out.add_scaled(&state, &coeff);
    }
    out
}

/// `(e^gamma)_p v`, from
/// `Y(e^g, z) = E^-(-g, z) E^+(-g, z) e^g z^{g(0)}` with trivial cocycle.
pub fn exp_vertex_mode(gamma: &LatticeVector, p: i32, v: &VOAState, cap: WeightCap) -> VOAState {
    assert_eq!(gamma.rank(), v.rank(), "lattice rank mismatch");
    let dir = gamma.as_direction();
    let mut out = VOAState::zero(v.rank());
    for ((mono, delta), c) in v.terms() {
        let single = VOAState::term(mono.clone(), delta.clone(), c.clone());
        let e0 = gamma.pairing(delta);
        let target = gamma.add(delta);
        let lat_weight: i64 = target.coords().iter().map(|x| x * x).sum();
        let fock = mono.weight();
        for n in 0..=fock {
            let m = -i64::from(p) - 1 - e0 + i64::from(n);
            if m < 0 {
                continue;
            }
            let weight = i64::from(fock - n) + m + lat_weight;
            if weight > i64::from(cap.0) {
                continue;
            }
            let annihilated = exp_component(&dir, n, false, &single);
            if annihilated.is_zero() {
                continue;
            }
            let created = exp_component(&dir, m as u32, true, &annihilated);
            for ((mono2, _), c2) in created.terms() {
                out.add_term(mono2.clone(), target.clone(), c2.clone());
            }
        }
    }
    out
}

/// `(h(-1) h'(-1) 1)_p v`, the normally ordered quadratic mode
/// `sum_{k<0} h(k) h'(p-1-k) + sum_{k>=0} h'(p-1-k) h(k)`.
pub fn quadratic_mode(h: &[Scalar], h2: &[Scalar], p: i32, v: &VOAState) -> VOAState {
    check_rank(h, v);
    check_rank(h2, v);
    let w = v.max_fock_weight() as i32;
    let mut out = VOAState::zero(v.rank());
    for k in (p - 1 - w)..=w {
        let j = p - 1 - k;
        let term = if k < 0 {
            heisenberg(h, k, &heisenberg(h2, j, v))
        } else {
            heisenberg(h2, j, &heisenberg(h, k, v))
        };
        out.add_scaled(&term, &int(1));
    }
    out
}

/// `u_p v` for `u` a combination of `e^gamma` (including the vacuum) and
/// quadratic states `a_d(-1) a_e(-1) 1`. Terms above `cap` are dropped.
pub fn mode_product(u: &VOAState, p: i32, v: &VOAState, cap: WeightCap) -> Result<VOAState> {
    if u.rank() != v.rank() {
        return Err(Error::DimensionMismatch {
            expected: u.rank(),
            found: v.rank(),
        });
    }
    let mut out = VOAState::zero(v.rank());
    for ((mono, lat), c) in u.terms() {
        let part = match mono.factors() {
            [] => exp_vertex_mode(lat, p, v, cap),
            [(d, 1), (e, 1)] if lat.is_zero() => {
                let unit = |i: usize| {
                    let mut x = vec![Scalar::zero(); v.rank()];
                    x[i] = int(1);
                    x
                };
                quadratic_mode(&unit(*d), &unit(*e), p, v).truncate(cap)
            }
            _ => {
                return Err(Error::UnsupportedShape(format!(
                    "left factor term {:?} e^{:?} is neither e^gamma nor a quadratic",
                    mono.factors(),
                    lat.coords()
                )))
            }
        };
        out.add_scaled(&part, c);
    }
    Ok(out)
}

/// `h(-1) h'(-1) 1`.
pub fn quadratic_state(h: &[Scalar], h2: &[Scalar]) -> VOAState {
    let vac = VOAState::vacuum(h.len());
    heisenberg(h, -1, &heisenberg(h2, -1, &vac))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::basis_weight;

    fn unit(n: usize, i: usize) -> Vec<Scalar> {
        LatticeVector::unit(n, i).as_direction()
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        for n in 0..8 {
            for p in partitions(n) {
                assert_eq!(p.iter().map(|(k, a)| k * a).sum::<u32>(), n);
            }
        }
    }

    #[test]
    fn heisenberg_commutator() {
        let n = 2;
        let vac = VOAState::vacuum(n);
        let h = unit(n, 1);
        let one = heisenberg_apply(&h, -1, &vac).unwrap();
        let back = heisenberg_apply(&h, 1, &one).unwrap();
        assert_eq!(back, VOAState::vacuum(n).scale(&int(2)));
        assert!(heisenberg_apply(&h, 0, &vac).is_err());
        assert!(heisenberg_apply(&unit(3, 1), 1, &vac).is_err());
        let two = heisenberg_apply(&h, -2, &vac).unwrap();
        assert_eq!(heisenberg_apply(&h, 2, &two).unwrap(), vac.scale(&int(4)));
        assert!(heisenberg_apply(&h, 1, &two).unwrap().is_zero());
    }

    #[test]
    fn zero_mode_reads_lattice() {
        let gamma = LatticeVector::root(3, 1, 2);
        let e = VOAState::exp(&gamma);
        assert_eq!(zero_mode(&gamma.as_direction(), &e), e.scale(&int(4)));
        assert!(zero_mode(&unit(3, 3), &e).is_zero());
    }

    #[test]
    fn vertex_operator_edge_cases() {
        let n = 3;
        let gamma = LatticeVector::root(n, 1, 2);
        let vac = VOAState::vacuum(n);
        let cap = WeightCap(6);
        // e^g_{-1} 1 = e^g, higher modes kill the vacuum.
        assert_eq!(
            exp_vertex_mode(&gamma, -1, &vac, cap),
            VOAState::exp(&gamma)
        );
        for p in 0..4 {
            assert!(exp_vertex_mode(&gamma, p, &vac, cap).is_zero());
        }
        // e^g_{-2} 1 = g(-1) e^g.
        let expected = heisenberg(&gamma.as_direction(), -1, &VOAState::exp(&gamma));
        assert_eq!(exp_vertex_mode(&gamma, -2, &vac, cap), expected);
        // e^g_p e^{-g} = 1 at p = 3 since (g|-g) = -4.
        let neg = VOAState::exp(&gamma.neg());
        assert_eq!(exp_vertex_mode(&gamma, 3, &neg, cap), vac);
        assert!(exp_vertex_mode(&gamma, 4, &neg, cap).is_zero());
        // e^g_{-1} e^g lives in weight 8 and is dropped by the cap.
        assert!(exp_vertex_mode(&gamma, -1, &VOAState::exp(&gamma), cap).is_zero());
    }

    #[test]
    fn quadratic_mode_examples() {
        let n = 2;
        let (h, h2) = (unit(n, 1), unit(n, 2));
        let vac = VOAState::vacuum(n);
        assert_eq!(quadratic_mode(&h, &h2, -1, &vac), quadratic_state(&h, &h2));
        // u_0 1 = 0 for every u.
        assert!(quadratic_mode(&h, &h2, 0, &vac).is_zero());
        // The L(-1)-type mode sits at p = -2.
        let expected = heisenberg(&h, -2, &heisenberg(&h2, -1, &vac)).add(&heisenberg(
            &h,
            -1,
            &heisenberg(&h2, -2, &vac),
        ));
        assert_eq!(quadratic_mode(&h, &h2, -2, &vac), expected);
        // (1/4) h(-1)^2 1 acts as a Virasoro vector of central charge 1.
        let omega = quadratic_state(&h, &h).scale(&rat(1, 4));
        let l3 = quadratic_mode(&h, &h, 3, &omega).scale(&rat(1, 4));
        assert_eq!(l3, VOAState::vacuum(n).scale(&rat(1, 2)));
        let l1 = quadratic_mode(&h, &h, 1, &omega).scale(&rat(1, 4));
        assert_eq!(l1, omega.scale(&int(2)));
    }

    #[test]
    fn mode_product_shapes() {
        let n = 2;
        let vac = VOAState::vacuum(n);
        let cap = WeightCap::default();
        let h = unit(n, 1);
        let v = quadratic_state(&h, &unit(n, 2));
        assert_eq!(mode_product(&vac, -1, &v, cap).unwrap(), v);
        assert!(mode_product(&vac, 0, &v, cap).unwrap().is_zero());
        let bad = heisenberg(&h, -1, &vac);
        assert!(matches!(
            mode_product(&bad, 0, &v, cap),
            Err(Error::UnsupportedShape(_))
        ));
        assert!(matches!(
            mode_product(&VOAState::vacuum(3), 0, &v, cap),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn grading_of_products() {
        let n = 3;
        let gamma = LatticeVector::root(n, 1, 3);
        let v = quadratic_state(&unit(n, 1), &unit(n, 2));
        let cap = WeightCap(8);
        let e = VOAState::exp(&gamma);
        for p in -2..4 {
            let r = exp_vertex_mode(&gamma, p, &v, cap);
            let target = 2 + 2 - p - 1;
            for (key, _) in r.terms() {
                assert_eq!(basis_weight(key) as i32, target);
            }
            let r = mode_product(&e, p, &v, cap).unwrap();
            assert!(r
                .homogeneous_weight()
                .map_or(r.is_zero(), |w| w as i32 == target));
        }
    }
}
