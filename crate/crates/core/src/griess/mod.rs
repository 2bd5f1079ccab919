//! The weight-two Griess algebra `V_2` spanned by Virasoro vectors
//! `w^{ij} = w^{ji}`, `1 <= i < j <= n`.
//!
//! Structure constants (for distinct `i, j, k, l`):
//!
//! ```text
//! w^{ij} . w^{ij} = 2 w^{ij}
//! w^{ij} . w^{jl} = (alpha/2) (w^{ij} + w^{jl} - w^{il})
//! w^{ij} . w^{kl} = 0
//! (w^{ij} | w^{ij}) = beta/2,  (w^{ij} | w^{jl}) = alpha beta / 8,  (w^{ij} | w^{kl}) = 0
//! ```
//!
//! For the discrete series, `alpha = h_{m+1,1} = m(m+1)/4` and
//! `beta = c_m`; [`GriessAlgebra::build_general`] accepts any Matsuo
//! parameters away from the degenerate values.

mod automorphism;
mod element;

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

pub use automorphism::LinearEndo;
pub use element::GriessElement;

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::minimal_model::central_charge;
use crate::scalar::{self, int, rat, Scalar};

/// Unordered index pair `{i, j}` stored with `i < j` (1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PairIndex {
    i: usize,
    j: usize,
}

impl PairIndex {
    /// Normalizes the order; `i == j` or a zero index is rejected.
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i == j || i == 0 || j == 0 {
            return Err(Error::InvalidParameter(format!(
                "invalid index pair ({i}, {j})"
            )));
        }
        Ok(PairIndex {
            i: i.min(j),
            j: i.max(j),
        })
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn contains(&self, k: usize) -> bool {
        self.i == k || self.j == k
    }

    pub fn is_disjoint(&self, other: &PairIndex) -> bool {
        !self.contains(other.i) && !self.contains(other.j)
    }

    /// The index shared with `other` when the pairs meet in exactly one point.
    pub fn shared(&self, other: &PairIndex) -> Option<usize> {
        if self == other {
            return None;
        }
        [self.i, self.j].into_iter().find(|&k| other.contains(k))
    }

    /// The index of `self` that is not `k`.
    pub fn other(&self, k: usize) -> usize {
        if self.i == k {
            self.j
        } else {
            self.i
        }
    }

    /// All pairs of `1..=n` in lexicographic order.
    pub fn all(n: usize) -> Vec<PairIndex> {
        (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| PairIndex { i, j }))
            .collect()
    }

    /// Position of the pair in the lexicographic basis of rank `n`.
    pub fn position(&self, n: usize) -> usize {
        let before: usize = (1..self.i).map(|a| n - a).sum();
        before + (self.j - self.i - 1)
    }
}

impl fmt::Display for PairIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.i, self.j)
    }
}

pub fn binomial2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GriessParams {
    pub n: usize,
    pub alpha: Scalar,
    pub beta: Scalar,
    pub m: Option<u32>,
}

impl GriessParams {
    pub fn from_m(n: usize, m: u32) -> Result<Self> {
        let beta = central_charge(m)?;
        let m64 = i64::from(m);
        Ok(GriessParams {
            n,
            alpha: rat(m64 * (m64 + 1), 4),
            beta,
            m: Some(m),
        })
    }
}

#[derive(Clone, Debug)]
pub struct GriessAlgebra {
    params: GriessParams,
    pairs: Vec<PairIndex>,
    /// Sparse `e_a . e_b`, row-major over `(a, b)`.
    products: Vec<Vec<(usize, Scalar)>>,
    gram: Matrix,
}

impl GriessAlgebra {
    pub fn build(n: usize, m: u32) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!("n must be >= 3, got {n}")));
        }
        Self::from_params(GriessParams::from_m(n, m)?)
    }

    pub fn build_general(n: usize, alpha: Scalar, beta: Scalar) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!("n must be >= 3, got {n}")));
        }
        Self::from_params(GriessParams {
            n,
            alpha,
            beta,
            m: None,
        })
    }

    fn from_params(params: GriessParams) -> Result<Self> {
        let GriessParams { n, alpha, beta, .. } = &params;
        if alpha.is_zero() || *alpha == int(2) {
            return Err(Error::DegenerateSpectrum {
                alpha: scalar::format(alpha),
            });
        }
        // Needed for the conformal vector and the triple idempotents.
        if (int(*n as i64 - 2) * alpha + int(2)).is_zero() || (alpha + int(2)).is_zero() {
            return Err(Error::InvalidParameter(format!(
                "alpha = {} makes the conformal normalization singular",
                scalar::format(alpha)
            )));
        }
        let pairs = PairIndex::all(*n);
        let dim = pairs.len();
        let half_alpha = alpha / int(2);
        let self_form = beta / int(2);
        let adjacent_form = alpha * beta / int(8);

        let mut products = Vec::with_capacity(dim * dim);
        let mut gram = Matrix::zeros(dim, dim);
        for (a, p) in pairs.iter().enumerate() {
            for (b, q) in pairs.iter().enumerate() {
                let entry = if p == q {
                    gram[(a, b)] = self_form.clone();
                    vec![(a, int(2))]
                } else if let Some(s) = p.shared(q) {
                    gram[(a, b)] = adjacent_form.clone();
                    let third = PairIndex::new(p.other(s), q.other(s))?.position(*n);
                    let mut e = vec![
                        (a, half_alpha.clone()),
                        (b, half_alpha.clone()),
                        (third, -half_alpha.clone()),
                    ];
                    e.sort_by_key(|(k, _)| *k);
                    e
                } else {
                    Vec::new()
                };
                products.push(entry);
            }
        }
        Ok(GriessAlgebra {
            params,
            pairs,
            products,
            gram,
        })
    }

    pub fn params(&self) -> &GriessParams {
        &self.params
    }

    pub fn n(&self) -> usize {
        self.params.n
    }

    pub fn m(&self) -> Option<u32> {
        self.params.m
    }

    pub fn alpha(&self) -> &Scalar {
        &self.params.alpha
    }

    pub fn beta(&self) -> &Scalar {
        &self.params.beta
    }

    pub fn dim(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> &[PairIndex] {
        &self.pairs
    }

    /// Validated pair for this algebra's index range.
    pub fn pair(&self, i: usize, j: usize) -> Result<PairIndex> {
        let p = PairIndex::new(i, j)?;
        if p.j > self.n() {
            return Err(Error::InvalidParameter(format!(
                "pair ({p}) out of range for n = {}",
                self.n()
            )));
        }
        Ok(p)
    }

    pub fn index_of(&self, p: &PairIndex) -> usize {
        p.position(self.n())
    }

    pub fn basis(&self, p: &PairIndex) -> GriessElement {
        GriessElement::basis(self.n(), self.index_of(p))
    }

    pub fn zero(&self) -> GriessElement {
        GriessElement::zero(self.n())
    }

    /// `e_a . e_b` as a sparse list of `(index, coefficient)`.
    pub fn product_basis(&self, a: usize, b: usize) -> &[(usize, Scalar)] {
        &self.products[a * self.dim() + b]
    }

    pub fn form_basis(&self, a: usize, b: usize) -> &Scalar {
        &self.gram[(a, b)]
    }

    /// The Gram matrix of the invariant form on the `w^{ij}` basis.
    pub fn gram_matrix(&self) -> &Matrix {
        &self.gram
    }

    fn check(&self, x: &GriessElement) -> Result<()> {
        if x.n() != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: x.dim(),
            });
        }
        Ok(())
    }

    pub fn product(&self, a: &GriessElement, b: &GriessElement) -> Result<GriessElement> {
        self.check(a)?;
        self.check(b)?;
        let mut out = vec![Scalar::zero(); self.dim()];
        for (i, x) in a.nonzero() {
            for (j, y) in b.nonzero() {
                let xy = x * y;
                for (k, c) in self.product_basis(i, j) {
                    out[*k] += &xy * c;
                }
            }
        }
        Ok(GriessElement::from_coeffs(self.n(), out))
    }

    pub fn form(&self, a: &GriessElement, b: &GriessElement) -> Result<Scalar> {
        self.check(a)?;
        self.check(b)?;
        let mut acc = Scalar::zero();
        for (i, x) in a.nonzero() {
            for (j, y) in b.nonzero() {
                let g = self.form_basis(i, j);
                if !g.is_zero() {
                    acc += x * y * g;
                }
            }
        }
        Ok(acc)
    }

    /// `2 / ((n-2) alpha + 2)`, the coefficient of each `w^{ij}` in the
    /// conformal vector.
    pub fn conformal_coefficient(&self) -> Scalar {
        int(2) / (int(self.n() as i64 - 2) * self.alpha() + int(2))
    }

    pub fn conformal_vector(&self) -> GriessElement {
        GriessElement::from_coeffs(self.n(), vec![self.conformal_coefficient(); self.dim()])
    }

    /// `2/(alpha+2) (w^{ij} + w^{jl} + w^{il})`; for the discrete series the
    /// coefficient is `8 / (m(m+1) + 8)`.
    pub fn omega_triple(&self, i: usize, j: usize, l: usize) -> Result<GriessElement> {
        if i == j || j == l || i == l {
            return Err(Error::InvalidParameter(format!(
                "indices ({i}, {j}, {l}) are not distinct"
            )));
        }
        let coeff = int(2) / (self.alpha() + int(2));
        let mut out = self.zero();
        for p in [self.pair(i, j)?, self.pair(j, l)?, self.pair(i, l)?] {
            out.coeffs_mut()[self.index_of(&p)] = coeff.clone();
        }
        Ok(out)
    }

    /// Matrix of `x -> w^p . x`; column `b` holds `w^p . e_b`.
    pub fn ad_matrix(&self, p: &PairIndex) -> LinearEndo {
        let a = self.index_of(p);
        let mut m = Matrix::zeros(self.dim(), self.dim());
        for b in 0..self.dim() {
            for (k, c) in self.product_basis(a, b) {
                m[(*k, b)] = c.clone();
            }
        }
        LinearEndo::new(m)
    }

    /// Eigenvalues `2`, `alpha`, `0` of `ad(w^p)` with their multiplicities,
    /// from exact nullities of `ad(w^p) - lambda I`. Anything other than
    /// `(1, n-2, C(n,2)-n+1)` is reported as an internal-consistency error.
    pub fn spectrum(&self, p: &PairIndex) -> Result<Vec<(Scalar, usize)>> {
        let ad = self.ad_matrix(p);
        let candidates = [int(2), self.alpha().clone(), int(0)];
        let found: Vec<(Scalar, usize)> = candidates
            .into_iter()
            .map(|lambda| {
                let k = linalg::nullity(&ad.matrix().shift(&lambda));
                (lambda, k)
            })
            .collect();
        let expected = self.expected_multiplicities();
        let got: Vec<usize> = found.iter().map(|(_, k)| *k).collect();
        if got != expected {
            return Err(Error::InternalConsistency(format!(
                "ad(w^{{{p}}}) multiplicities {got:?}, expected {expected:?}"
            )));
        }
        Ok(found)
    }

    /// `[1, n-2, C(n,2)-n+1]` for eigenvalues `[2, alpha, 0]`.
    pub fn expected_multiplicities(&self) -> Vec<usize> {
        let n = self.n();
        vec![1, n - 2, self.dim() + 1 - n]
    }

    /// Same parameters' tables: products and form agree entry by entry.
    pub fn same_tables(&self, other: &GriessAlgebra) -> bool {
        self.n() == other.n() && self.products == other.products && self.gram == other.gram
    }

    pub fn check_commutativity(&self) -> bool {
        let d = self.dim();
        (0..d).all(|a| (a + 1..d).all(|b| self.product_basis(a, b) == self.product_basis(b, a)))
    }

    /// `w . e_a = 2 e_a` for the conformal vector `w` and every basis vector.
    pub fn check_conformal_action(&self) -> bool {
        let omega = self.conformal_vector();
        (0..self.dim()).all(|a| {
            let e = GriessElement::basis(self.n(), a);
            self.product(&omega, &e)
                .map(|x| x == e.scale(&int(2)))
                .unwrap_or(false)
        })
    }

    /// `(a . b | c) = (b | a . c)` on all basis triples.
    pub fn check_form_invariance(&self) -> bool {
        let d = self.dim();
        let sparse_form = |v: &[(usize, Scalar)], c: usize| -> Scalar {
            v.iter().fold(Scalar::zero(), |acc, (k, x)| {
                acc + x * self.form_basis(*k, c)
            })
        };
        (0..d).all(|a| {
            (0..d).all(|b| {
                let ab = self.product_basis(a, b);
                (0..d).all(|c| sparse_form(ab, c) == sparse_form(self.product_basis(a, c), b))
            })
        })
    }

    /// `M (M - alpha) (M - 2) = 0` for `M = ad(w^p)`, every pair `p`.
    pub fn check_minimal_polynomial(&self) -> bool {
        self.pairs.iter().all(|p| {
            let m = self.ad_matrix(p);
            let m = m.matrix();
            let prod = m
                .mul(&m.shift(self.alpha()))
                .and_then(|x| x.mul(&m.shift(&int(2))));
            prod.map(|x| x.is_zero()).unwrap_or(false)
        })
    }

    pub fn check_spectra(&self) -> bool {
        self.pairs.iter().all(|p| self.spectrum(p).is_ok())
    }

    /// Runs every structural check; `(name, passed)` in a fixed order.
    pub fn verify(&self) -> Vec<(&'static str, bool)> {
        vec![
            ("commutativity", self.check_commutativity()),
            ("conformal_action", self.check_conformal_action()),
            ("form_invariance", self.check_form_invariance()),
            ("minimal_polynomial", self.check_minimal_polynomial()),
            ("spectrum", self.check_spectra()),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(alg: &GriessAlgebra, i: usize, j: usize) -> GriessElement {
        alg.basis(&alg.pair(i, j).unwrap())
    }

    #[test]
    fn pair_positions_are_lexicographic() {
        for n in 2..=8 {
            for (k, p) in PairIndex::all(n).iter().enumerate() {
                assert_eq!(p.position(n), k);
            }
        }
        assert_eq!(PairIndex::new(3, 1).unwrap(), PairIndex::new(1, 3).unwrap());
        assert!(PairIndex::new(2, 2).is_err());
    }

    #[test]
    fn build_parameters() {
        let a = GriessAlgebra::build(3, 1).unwrap();
        assert_eq!((a.dim(), a.alpha(), a.beta()), (3, &rat(1, 2), &rat(1, 2)));
        let b = GriessAlgebra::build(4, 2).unwrap();
        assert_eq!((b.dim(), b.alpha(), b.beta()), (6, &rat(3, 2), &rat(7, 10)));
        assert!(matches!(
            GriessAlgebra::build(3, 0),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            GriessAlgebra::build(2, 1),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn build_general_matches_build() {
        let g = GriessAlgebra::build_general(3, rat(1, 2), rat(1, 2)).unwrap();
        assert!(g.same_tables(&GriessAlgebra::build(3, 1).unwrap()));
        let g = GriessAlgebra::build_general(4, rat(3, 2), rat(7, 10)).unwrap();
        assert!(g.same_tables(&GriessAlgebra::build(4, 2).unwrap()));
        assert!(matches!(
            GriessAlgebra::build_general(3, int(2), int(1)),
            Err(Error::DegenerateSpectrum { .. })
        ));
        assert!(matches!(
            GriessAlgebra::build_general(3, int(0), int(1)),
            Err(Error::DegenerateSpectrum { .. })
        ));
    }

    #[test]
    fn products() {
        let a = GriessAlgebra::build(4, 1).unwrap();
        let w12 = w(&a, 1, 2);
        assert_eq!(a.product(&w12, &w12).unwrap(), w12.scale(&int(2)));
        let expected = w(&a, 1, 2)
            .add(&w(&a, 2, 3))
            .sub(&w(&a, 1, 3))
            .scale(&rat(1, 4));
        assert_eq!(a.product(&w12, &w(&a, 2, 3)).unwrap(), expected);
        assert!(a.product(&w12, &w(&a, 3, 4)).unwrap().is_zero());
        let other = GriessAlgebra::build(3, 1).unwrap();
        assert!(matches!(
            a.product(&w12, &w(&other, 1, 2)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn forms() {
        let a = GriessAlgebra::build(4, 1).unwrap();
        assert_eq!(a.form(&w(&a, 1, 2), &w(&a, 1, 2)).unwrap(), rat(1, 4));
        assert_eq!(a.form(&w(&a, 1, 2), &w(&a, 2, 3)).unwrap(), rat(1, 32));
        assert_eq!(a.form(&w(&a, 1, 2), &w(&a, 3, 4)).unwrap(), int(0));
        // closed forms m(m+5)/(2(m+2)(m+3)) and m^2(m+1)(m+5)/(32(m+2)(m+3))
        for m in 1..=10i64 {
            let alg = GriessAlgebra::build(3, m as u32).unwrap();
            let d = (m + 2) * (m + 3);
            assert_eq!(alg.form_basis(0, 0), &rat(m * (m + 5), 2 * d));
            assert_eq!(
                alg.form_basis(0, 1),
                &rat(m * m * (m + 1) * (m + 5), 32 * d)
            );
        }
    }

    #[test]
    fn conformal_vector_coefficients() {
        assert_eq!(
            GriessAlgebra::build(3, 1).unwrap().conformal_coefficient(),
            rat(4, 5)
        );
        assert_eq!(
            GriessAlgebra::build(3, 2).unwrap().conformal_coefficient(),
            rat(4, 7)
        );
        for n in 3..=8usize {
            for m in 1..=10u32 {
                let a = GriessAlgebra::build(n, m).unwrap();
                let mm = i64::from(m);
                let expected = rat(8, (n as i64 - 2) * mm * (mm + 1) + 8);
                assert_eq!(a.conformal_coefficient(), expected);
                assert!(a.check_conformal_action(), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn omega_triple_kills_difference() {
        for m in 1..=4 {
            let a = GriessAlgebra::build(5, m).unwrap();
            let t = a.omega_triple(1, 2, 4).unwrap();
            let diff = t.sub(&w(&a, 1, 2));
            assert!(a.product(&w(&a, 1, 2), &diff).unwrap().is_zero());
        }
        assert_eq!(
            GriessAlgebra::build(3, 1)
                .unwrap()
                .omega_triple(1, 2, 3)
                .unwrap()
                .coeffs()[0],
            rat(4, 5)
        );
        assert_eq!(
            GriessAlgebra::build(3, 2)
                .unwrap()
                .omega_triple(1, 2, 3)
                .unwrap()
                .coeffs()[0],
            rat(4, 7)
        );
        assert!(GriessAlgebra::build(3, 1)
            .unwrap()
            .omega_triple(1, 1, 3)
            .is_err());
    }

    #[test]
    fn adjoint_action() {
        let a = GriessAlgebra::build(5, 3).unwrap();
        let p = a.pair(1, 2).unwrap();
        let ad = a.ad_matrix(&p);
        let w12 = w(&a, 1, 2);
        assert_eq!(ad.apply(&w12).unwrap(), w12.scale(&int(2)));
        let diff = w(&a, 1, 4).sub(&w(&a, 2, 4));
        assert_eq!(ad.apply(&diff).unwrap(), diff.scale(a.alpha()));
        assert!(ad.apply(&w(&a, 3, 5)).unwrap().is_zero());
    }

    #[test]
    fn spectra() {
        let mults = |n, m| -> Vec<usize> {
            let a = GriessAlgebra::build(n, m).unwrap();
            a.spectrum(&a.pair(1, 2).unwrap())
                .unwrap()
                .into_iter()
                .map(|(_, k)| k)
                .collect()
        };
        assert_eq!(mults(3, 1), vec![1, 1, 1]);
        assert_eq!(mults(4, 1), vec![1, 2, 3]);
        let a = GriessAlgebra::build(5, 2).unwrap();
        let found = a.spectrum(&a.pair(2, 4).unwrap()).unwrap();
        assert_eq!(found, vec![(int(2), 1), (rat(3, 2), 3), (int(0), 6)]);
    }

    #[test]
    fn structural_checks_small_grid() {
        for n in 3..=5 {
            for m in 1..=4 {
                let a = GriessAlgebra::build(n, m).unwrap();
                for (name, ok) in a.verify() {
                    assert!(ok, "{name} failed for n={n} m={m}");
                }
            }
        }
    }

    #[test]
    fn general_parameters_keep_the_structure() {
        let a = GriessAlgebra::build_general(5, rat(-1, 3), rat(5, 7)).unwrap();
        for (name, ok) in a.verify() {
            assert!(ok, "{name}");
        }
    }
}
