//! Miyamoto involutions and automorphism checks on `V_2`.

use std::collections::{HashSet, VecDeque};

use num_traits::{One, Zero};

use super::{GriessAlgebra, GriessElement, PairIndex};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{int, Scalar};

/// Largest `n` for which [`GriessAlgebra::generated_group_order`] will
/// enumerate the group (`8! = 40320` elements).
pub const MAX_CLOSURE_N: usize = 8;

/// Cap on the number of elements in the matrix fallback closure.
const MAX_MATRIX_GROUP: usize = 50_000;

/// A linear map `V_2 -> V_2`; column `b` is the image of basis vector `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearEndo {
    matrix: Matrix,
}

impl LinearEndo {
    /// Panics on a non-square matrix.
    pub fn new(matrix: Matrix) -> Self {
        assert!(matrix.is_square(), "linear endomorphism must be square");
        LinearEndo { matrix }
    }

    pub fn identity(dim: usize) -> Self {
        LinearEndo {
            matrix: Matrix::identity(dim),
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, x: &GriessElement) -> Result<GriessElement> {
        let v = self.matrix.apply(x.coeffs())?;
        GriessElement::try_from_coeffs(x.n(), v)
    }

    /// `self . other` (apply `other` first).
    pub fn compose(&self, other: &LinearEndo) -> Result<LinearEndo> {
        Ok(LinearEndo {
            matrix: self.matrix.mul(&other.matrix)?,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    /// If the matrix permutes the basis, the image index of each basis vector.
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        let d = self.dim();
        let mut images = Vec::with_capacity(d);
        let mut seen = vec![false; d];
        for b in 0..d {
            let mut target = None;
            for a in 0..d {
                let x = &self.matrix[(a, b)];
                if x.is_zero() {
                    continue;
                }
                if !x.is_one() || target.is_some() {
                    return None;
                }
                target = Some(a);
            }
            let a = target?;
            if std::mem::replace(&mut seen[a], true) {
                return None;
            }
            images.push(a);
        }
        Some(images)
    }

    fn from_permutation(images: &[usize]) -> Self {
        let d = images.len();
        let mut m = Matrix::zeros(d, d);
        for (b, &a) in images.iter().enumerate() {
            m[(a, b)] = Scalar::one();
        }
        LinearEndo { matrix: m }
    }
}

impl GriessAlgebra {
    /// The map `w^{kl} -> w^{pi(k) pi(l)}` induced by a permutation of the
    /// indices, given 1-based as `perm[k-1] = pi(k)`.
    pub fn index_permutation(&self, perm: &[usize]) -> Result<LinearEndo> {
        let n = self.n();
        let mut sorted = perm.to_vec();
        sorted.sort_unstable();
        if sorted != (1..=n).collect::<Vec<_>>() {
            return Err(Error::InvalidParameter(format!(
                "{perm:?} is not a permutation of 1..={n}"
            )));
        }
        let images: Vec<usize> = self
            .pairs()
            .iter()
            .map(|p| PairIndex::new(perm[p.i() - 1], perm[p.j() - 1]).map(|q| self.index_of(&q)))
            .collect::<Result<_>>()?;
        Ok(LinearEndo::from_permutation(&images))
    }

    /// `sigma^{ij}`: fixes `w^{ij}` and every `w^{kl}` disjoint from
    /// `{i, j}`, swaps `w^{il} <-> w^{jl}`.
    pub fn miyamoto(&self, p: &PairIndex) -> LinearEndo {
        let mut perm: Vec<usize> = (1..=self.n()).collect();
        perm.swap(p.i() - 1, p.j() - 1);
        self.index_permutation(&perm)
            .expect("transposition is a permutation")
    }

    /// `sigma^{ij}` rebuilt from the adjoint spectrum: `+1` on the `0` and
    /// `2` eigenspaces, `-1` on the `alpha` eigenspace. As a polynomial in
    /// `M = ad(w^{ij})` this is `I - 2 M (M - 2) / (alpha (alpha - 2))`.
    pub fn miyamoto_from_spectrum(&self, p: &PairIndex) -> Result<LinearEndo> {
        let ad = self.ad_matrix(p);
        let m = ad.matrix();
        let a = self.alpha();
        let c = int(2) / (a * (a - int(2)));
        let quad = m.mul(&m.shift(&int(2)))?;
        let matrix = Matrix::identity(self.dim()).sub(&quad.scale(&c))?;
        Ok(LinearEndo::new(matrix))
    }

    /// Checks that `f` preserves the product on all basis pairs, preserves
    /// the form, and fixes the conformal vector.
    pub fn is_automorphism(&self, f: &LinearEndo) -> bool {
        let d = self.dim();
        if f.dim() != d {
            return false;
        }
        let images: Vec<GriessElement> = (0..d)
            .map(|b| GriessElement::from_coeffs(self.n(), f.matrix().column(b)))
            .collect();
        for a in 0..d {
            for b in a..d {
                let ab = GriessElement::from_coeffs(self.n(), {
                    let mut v = vec![Scalar::zero(); d];
                    for (k, c) in self.product_basis(a, b) {
                        v[*k] = c.clone();
                    }
                    v
                });
                let lhs = match f.apply(&ab) {
                    Ok(x) => x,
                    Err(_) => return false,
                };
                let rhs = match self.product(&images[a], &images[b]) {
                    Ok(x) => x,
                    Err(_) => return false,
                };
                if lhs != rhs {
                    return false;
                }
                match self.form(&images[a], &images[b]) {
                    Ok(x) if &x == self.form_basis(a, b) => {}
                    _ => return false,
                }
            }
        }
        let omega = self.conformal_vector();
        f.apply(&omega).map(|x| x == omega).unwrap_or(false)
    }

    /// `sigma^{ij} sigma^{kl} = sigma^{kl} sigma^{ij}` for disjoint pairs and
    /// `sigma^{ij} sigma^{jk} sigma^{ij} = sigma^{ik}` for distinct `i, j, k`.
    pub fn check_miyamoto_relations(&self) -> bool {
        let sigmas: Vec<LinearEndo> = self.pairs().iter().map(|p| self.miyamoto(p)).collect();
        let sigma = |i: usize, j: usize| &sigmas[self.index_of(&PairIndex::new(i, j).unwrap())];
        let pairs = self.pairs();
        for (a, p) in pairs.iter().enumerate() {
            for q in &pairs[a + 1..] {
                if p.is_disjoint(q) {
                    let (sp, sq) = (&sigmas[self.index_of(p)], &sigmas[self.index_of(q)]);
                    if sp.compose(sq).ok() != sq.compose(sp).ok() {
                        return false;
                    }
                }
            }
        }
        let n = self.n();
        for i in 1..=n {
            for j in (1..=n).filter(|&j| j != i) {
                for k in (1..=n).filter(|&k| k != i && k != j) {
                    let lhs = sigma(i, j)
                        .compose(sigma(j, k))
                        .and_then(|x| x.compose(sigma(i, j)));
                    if lhs.ok().as_ref() != Some(sigma(i, k)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Order of the group generated by the Miyamoto involutions of `pairs`.
    ///
    /// The closure runs over the induced basis permutations when every
    /// generator permutes the basis, and over matrices otherwise.
    pub fn generated_group_order(&self, pairs: &[PairIndex]) -> Result<u64> {
        if self.n() > MAX_CLOSURE_N {
            return Err(Error::SizeLimit(format!(
                "group closure limited to n <= {MAX_CLOSURE_N}, got n = {}",
                self.n()
            )));
        }
        let gens: Vec<LinearEndo> = pairs.iter().map(|p| self.miyamoto(p)).collect();
        group_order(&gens, self.dim())
    }
}

/// Order of the group generated by `gens` (all of dimension `dim`).
pub fn group_order(gens: &[LinearEndo], dim: usize) -> Result<u64> {
    let perms: Option<Vec<Vec<usize>>> = gens.iter().map(LinearEndo::as_permutation).collect();
    match perms {
        Some(perms) => Ok(permutation_closure(&perms, dim)),
        None => matrix_closure(gens, dim),
    }
}

fn permutation_closure(gens: &[Vec<usize>], dim: usize) -> u64 {
    let identity: Vec<usize> = (0..dim).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(g) = queue.pop_front() {
        for s in gens {
            // s . g
            let h: Vec<usize> = g.iter().map(|&x| s[x]).collect();
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
    }
    seen.len() as u64
}

fn matrix_closure(gens: &[LinearEndo], dim: usize) -> Result<u64> {
    let identity = LinearEndo::identity(dim);
    let mut seen: Vec<LinearEndo> = vec![identity.clone()];
    let mut queue = VecDeque::from([identity]);
    while let Some(g) = queue.pop_front() {
        for s in gens {
            let h = s.compose(&g)?;
            if !seen.contains(&h) {
                if seen.len() >= MAX_MATRIX_GROUP {
                    return Err(Error::SizeLimit(format!(
                        "matrix group closure exceeded {MAX_MATRIX_GROUP} elements"
                    )));
                }
                seen.push(h.clone());
                queue.push_back(h);
            }
        }
    }
    Ok(seen.len() as u64)
}
