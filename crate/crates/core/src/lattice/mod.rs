//! Low-weight computations in the lattice vertex algebra `V_L`,
//! `L = Z a_1 + ... + Z a_n` with `(a_i | a_j) = 2 delta_ij`.
//!
//! States are finite rational combinations of basis vectors
//! `a_{d1}(-k1) ... a_{dr}(-kr) e^gamma`. All pairings in `L` are even, so
//! the group-algebra cocycle is taken to be identically one.

mod modes;
mod realization;

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::scalar::{self, int, Scalar};

pub use modes::quadratic_state;
pub use modes::{exp_vertex_mode, heisenberg_apply, mode_product, quadratic_mode, zero_mode};
pub use realization::{
    ising_vector, ma2_conformal, tilde_vector, verify_relations, ExtractedTables, FamilyKind,
    RelationCheck, RelationReport, VirasoroFamily,
};

/// Default truncation weight for products of weight-two vectors.
pub const DEFAULT_WEIGHT_CAP: u32 = 4;

/// Terms of weight strictly above `max_weight` are discarded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WeightCap(pub u32);

impl Default for WeightCap {
    fn default() -> Self {
        WeightCap(DEFAULT_WEIGHT_CAP)
    }
}

impl WeightCap {
    pub fn admits(&self, weight: u32) -> bool {
        weight <= self.0
    }
}

/// A point of `L` in the `a_i` coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct LatticeVector(Vec<i64>);

impl LatticeVector {
    pub fn new(coords: Vec<i64>) -> Self {
        LatticeVector(coords)
    }

    pub fn zero(rank: usize) -> Self {
        LatticeVector(vec![0; rank])
    }

    /// `a_i`, 1-based.
    pub fn unit(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        LatticeVector(v)
    }

    /// `a_i - a_j`, 1-based.
    pub fn root(rank: usize, i: usize, j: usize) -> Self {
        let mut v = vec![0; rank];
        v[i - 1] += 1;
        v[j - 1] -= 1;
        LatticeVector(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn pairing(&self, other: &LatticeVector) -> i64 {
        2 * self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum::<i64>()
    }

    pub fn norm(&self) -> i64 {
        self.pairing(self)
    }

    pub fn add(&self, other: &LatticeVector) -> LatticeVector {
        LatticeVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self) -> LatticeVector {
        LatticeVector(self.0.iter().map(|a| -a).collect())
    }

    /// The same vector viewed in the Heisenberg space `h = Q (x) L`.
    pub fn as_direction(&self) -> Vec<Scalar> {
        self.0.iter().map(|&x| int(x)).collect()
    }
}

/// `(h | h')` on rational directions.
pub fn direction_pairing(h: &[Scalar], other: &[Scalar]) -> Scalar {
    h.iter()
        .zip(other)
        .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
        * int(2)
}

/// A product of creation operators `a_d(-k)` applied to the vacuum, stored
/// as `(d, k)` with 0-based coordinate direction `d` and `k >= 1`, sorted
/// by mode descending then direction.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FockMonomial(Vec<(usize, u32)>);

impl FockMonomial {
    pub fn vacuum() -> Self {
        FockMonomial(Vec::new())
    }

    pub fn from_factors(mut factors: Vec<(usize, u32)>) -> Self {
        assert!(
            factors.iter().all(|&(_, k)| k >= 1),
            "creation modes are positive"
        );
        factors.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        FockMonomial(factors)
    }

    pub fn factors(&self) -> &[(usize, u32)] {
        &self.0
    }

    pub fn is_vacuum(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().map(|&(_, k)| k).sum()
    }

    pub(crate) fn with_factor(&self, dir: usize, mode: u32) -> Self {
        let mut f = self.0.clone();
        f.push((dir, mode));
        Self::from_factors(f)
    }

    pub(crate) fn without(&self, idx: usize) -> Self {
        let mut f = self.0.clone();
        f.remove(idx);
        FockMonomial(f)
    }
}

/// A basis vector `monomial (x) e^lattice`.
pub type BasisState = (FockMonomial, LatticeVector);

pub fn basis_weight((mono, lat): &BasisState) -> u32 {
    let lattice_half_norm = lat.coords().iter().map(|x| x * x).sum::<i64>();
    mono.weight() + lattice_half_norm as u32
}

/// A finite rational combination of basis states; zero coefficients are
/// never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VOAState {
    rank: usize,
    terms: BTreeMap<BasisState, Scalar>,
}

impl VOAState {
    pub fn zero(rank: usize) -> Self {
        VOAState {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn vacuum(rank: usize) -> Self {
        Self::term(FockMonomial::vacuum(), LatticeVector::zero(rank), int(1))
    }

    /// `e^gamma`.
    pub fn exp(gamma: &LatticeVector) -> Self {
        Self::term(FockMonomial::vacuum(), gamma.clone(), int(1))
    }

    pub fn term(mono: FockMonomial, lattice: LatticeVector, coeff: Scalar) -> Self {
        let mut s = Self::zero(lattice.rank());
        s.add_term(mono, lattice, coeff);
        s
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisState, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, key: &BasisState) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, mono: FockMonomial, lattice: LatticeVector, coeff: Scalar) {
        assert_eq!(lattice.rank(), self.rank, "lattice rank mismatch");
        if coeff.is_zero() {
            return;
        }
        let key = (mono, lattice);
        let entry = self.terms.entry(key.clone()).or_insert_with(Scalar::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &VOAState, c: &Scalar) {
        assert_eq!(other.rank, self.rank, "rank mismatch");
        if c.is_zero() {
            return;
        }
        for ((mono, lat), x) in &other.terms {
            self.add_term(mono.clone(), lat.clone(), x * c);
        }
    }

    pub fn add(&self, other: &VOAState) -> VOAState {
        let mut out = self.clone();
        out.add_scaled(other, &int(1));
        out
    }

    pub fn sub(&self, other: &VOAState) -> VOAState {
        let mut out = self.clone();
        out.add_scaled(other, &int(-1));
        out
    }

    pub fn scale(&self, c: &Scalar) -> VOAState {
        let mut out = VOAState::zero(self.rank);
        out.add_scaled(self, c);
        out
    }

    /// Weight of every term, if they agree.
    pub fn homogeneous_weight(&self) -> Option<u32> {
        let mut weights = self.terms.keys().map(basis_weight);
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }

    pub fn max_fock_weight(&self) -> u32 {
        self.terms
            .keys()
            .map(|(m, _)| m.weight())
            .max()
            .unwrap_or(0)
    }

    /// The terms of weight exactly `w`.
    pub fn component(&self, w: u32) -> VOAState {
        VOAState {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| basis_weight(k) == w)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    /// Drops terms above the cap.
    pub fn truncate(&self, cap: WeightCap) -> VOAState {
        VOAState {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| cap.admits(basis_weight(k)))
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    /// `Some(c)` if the state equals `c * 1`.
    pub fn as_vacuum_multiple(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => {
                let ((mono, lat), c) = self.terms.iter().next()?;
                (mono.is_vacuum() && lat.is_zero()).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub(crate) fn keys(&self) -> impl Iterator<Item = &BasisState> {
        self.terms.keys()
    }
}

#[derive(Serialize)]
struct SerializedTerm {
    monomial: Vec<(Vec<i64>, u32)>,
    lattice: Vec<i64>,
    coeff: String,
}

impl Serialize for VOAState {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rank = self.rank;
        s.collect_seq(self.terms.iter().map(|((mono, lat), c)| {
            SerializedTerm {
                monomial: mono
                    .factors()
                    .iter()
                    .map(|&(d, k)| {
                        let mut dir = vec![0; rank];
                        dir[d] = 1;
                        (dir, k)
                    })
                    .collect(),
                lattice: lat.coords().to_vec(),
                coeff: scalar::format(c),
            }
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn lattice_pairing() {
        let a = LatticeVector::root(3, 1, 2);
        assert_eq!(a.norm(), 4);
        assert_eq!(a.pairing(&LatticeVector::root(3, 2, 3)), -2);
        assert_eq!(a.pairing(&LatticeVector::unit(3, 3)), 0);
        assert_eq!(basis_weight(&(FockMonomial::vacuum(), a)), 2);
    }

    #[test]
    fn monomials_are_canonical() {
        let a = FockMonomial::from_factors(vec![(1, 1), (0, 2), (0, 1)]);
        let b = FockMonomial::from_factors(vec![(0, 1), (1, 1), (0, 2)]);
        assert_eq!(a, b);
        assert_eq!(a.factors(), &[(0, 2), (0, 1), (1, 1)]);
        assert_eq!(a.weight(), 4);
    }

    #[test]
    fn state_arithmetic_drops_zeros() {
        let e = VOAState::exp(&LatticeVector::root(2, 1, 2));
        let v = VOAState::vacuum(2);
        let s = e.add(&v).sub(&e);
        assert_eq!(s, v);
        assert_eq!(s.as_vacuum_multiple(), Some(int(1)));
        assert_eq!(e.scale(&rat(0, 1)), VOAState::zero(2));
        assert_eq!(e.homogeneous_weight(), Some(2));
        assert_eq!(e.add(&v).homogeneous_weight(), None);
    }

    #[test]
    fn json_layout() {
        let mono = FockMonomial::from_factors(vec![(0, 1), (1, 1)]);
        let s = VOAState::term(mono, LatticeVector::zero(2), rat(-1, 8));
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(
            json,
            r#"[{"monomial":[[[1,0],1],[[0,1],1]],"lattice":[0,0],"coeff":"-1/8"}]"#
        );
    }
}
