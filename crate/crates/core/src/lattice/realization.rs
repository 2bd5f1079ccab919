use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use super::modes::{mode_product, quadratic_state};
use super::{BasisState, LatticeVector, VOAState, WeightCap};
use crate::error::{Error, Result};
use crate::griess::{GriessAlgebra, PairIndex};
use crate::linalg::{solve, Matrix};
use crate::par;
use crate::scalar::{int, rat, Scalar};

fn check_pair(n: usize, i: usize, j: usize) -> Result<PairIndex> {
    if i > n || j > n {
        return Err(Error::InvalidParameter(format!(
            "pair ({i}, {j}) outside 1..={n}"
        )));
    }
    PairIndex::new(i, j)
}

/// `(1/16) g(-1)^2 1 - (1/4)(e^g + e^{-g})` with `g = a_i - a_j`, a
/// Virasoro vector of central charge 1/2.
pub fn ising_vector(n: usize, i: usize, j: usize) -> Result<VOAState> {
    check_pair(n, i, j)?;
    let gamma = LatticeVector::root(n, i, j);
    let h = gamma.as_direction();
    let mut v = quadratic_state(&h, &h).scale(&rat(1, 16));
    v.add_scaled(&VOAState::exp(&gamma), &rat(-1, 4));
    v.add_scaled(&VOAState::exp(&gamma.neg()), &rat(-1, 4));
    Ok(v)
}

fn require_rank_three(n: usize) -> Result<()> {
    if n != 3 {
        return Err(Error::InvalidParameter(format!(
            "the A2 construction needs n = 3, got {n}"
        )));
    }
    Ok(())
}

/// `(4/5) sum_{i<j} w^{ij}`, the conformal vector of `M(A2)`, central charge 6/5.
pub fn ma2_conformal(n: usize) -> Result<VOAState> {
    require_rank_three(n)?;
    let mut v = VOAState::zero(n);
    for p in PairIndex::all(n) {
        v.add_scaled(&ising_vector(n, p.i(), p.j())?, &rat(4, 5));
    }
    Ok(v)
}

/// `w - w^{ij}`, a Virasoro vector of central charge 7/10.
pub fn tilde_vector(n: usize, i: usize, j: usize) -> Result<VOAState> {
    require_rank_three(n)?;
    Ok(ma2_conformal(n)?.sub(&ising_vector(n, i, j)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    Ising,
    Tilde,
}

/// One lattice vector per index pair, expected to span a copy of the Griess
/// algebra with parameter `m`.
#[derive(Clone, Debug)]
pub struct VirasoroFamily {
    n: usize,
    kind: FamilyKind,
    vectors: Vec<VOAState>,
}

impl VirasoroFamily {
    /// `w^{ij}` for all pairs; `m = 1`.
    pub fn ising(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!("n must be >= 2, got {n}")));
        }
        let vectors = PairIndex::all(n)
            .iter()
            .map(|p| ising_vector(n, p.i(), p.j()))
            .collect::<Result<_>>()?;
        Ok(VirasoroFamily {
            n,
            kind: FamilyKind::Ising,
            vectors,
        })
    }

    /// `w~^{ij}` inside `M(A2)`; `n = 3`, `m = 2`.
    pub fn tilde() -> Result<Self> {
        let vectors = PairIndex::all(3)
            .iter()
            .map(|p| tilde_vector(3, p.i(), p.j()))
            .collect::<Result<_>>()?;
        Ok(VirasoroFamily {
            n: 3,
            kind: FamilyKind::Tilde,
            vectors,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn m(&self) -> u32 {
        match self.kind {
            FamilyKind::Ising => 1,
            FamilyKind::Tilde => 2,
        }
    }

    pub fn vectors(&self) -> &[VOAState] {
        &self.vectors
    }

    pub fn vector(&self, p: &PairIndex) -> &VOAState {
        &self.vectors[p.position(self.n)]
    }

    /// `sum_a x_a v_a`.
    pub fn combination(&self, coeffs: &[Scalar]) -> VOAState {
        let mut out = VOAState::zero(self.n);
        for (v, c) in self.vectors.iter().zip(coeffs) {
            out.add_scaled(v, c);
        }
        out
    }

    fn span_keys(&self) -> Vec<BasisState> {
        let mut keys: Vec<BasisState> = self
            .vectors
            .iter()
            .flat_map(|v| v.keys().cloned())
            .collect();
        keys.sort();
        keys.dedup();
        keys
    }

    /// Coordinates of `state` in the family, if it lies in the span.
    pub fn coordinates(&self, state: &VOAState) -> Result<Option<Vec<Scalar>>> {
        let keys = self.span_keys();
        let index: BTreeMap<&BasisState, usize> =
            keys.iter().enumerate().map(|(i, k)| (k, i)).collect();
        if state.keys().any(|k| !index.contains_key(k)) {
            return Ok(None);
        }
        let a = Matrix::from_fn(keys.len(), self.vectors.len(), |r, c| {
            self.vectors[c].coefficient(&keys[r])
        });
        let b: Vec<Scalar> = keys.iter().map(|k| state.coefficient(k)).collect();
        solve(&a, &b)
    }

    /// Reads the algebra product from `u_1 v` and the form from `u_3 v`.
    pub fn extract(&self, cap: WeightCap) -> Result<ExtractedTables> {
        let dim = self.vectors.len();
        let cells: Vec<(usize, usize)> = (0..dim)
            .flat_map(|a| (0..dim).map(move |b| (a, b)))
            .collect();
        let entries = par::try_map(&cells, |&(a, b)| -> Result<_> {
            let (u, v) = (&self.vectors[a], &self.vectors[b]);
            let prod = self.coordinates(&mode_product(u, 1, v, cap)?)?;
            let form = mode_product(u, 3, v, cap)?.as_vacuum_multiple();
            Ok((prod, form))
        })?;
        let (products, forms) = entries.into_iter().unzip();
        Ok(ExtractedTables {
            n: self.n,
            products,
            forms,
        })
    }
}

/// Structure constants read off a realized family, row-major over basis
/// pairs. `None` marks a product outside the span or a non-scalar form.
#[derive(Clone, Debug)]
pub struct ExtractedTables {
    pub n: usize,
    pub products: Vec<Option<Vec<Scalar>>>,
    pub forms: Vec<Option<Scalar>>,
}

impl ExtractedTables {
    pub fn matches(&self, alg: &GriessAlgebra) -> bool {
        let dim = alg.dim();
        if alg.n() != self.n || self.products.len() != dim * dim {
            return false;
        }
        (0..dim).all(|a| {
            (0..dim).all(|b| {
                let cell = a * dim + b;
                let mut expected = vec![Scalar::zero(); dim];
                for (k, c) in alg.product_basis(a, b) {
                    expected[*k] = c.clone();
                }
                self.products[cell].as_ref() == Some(&expected)
                    && self.forms[cell].as_ref() == Some(alg.form_basis(a, b))
            })
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub u: String,
    pub v: String,
    pub mode: i32,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub family: FamilyKind,
    pub n: usize,
    pub m: u32,
    pub weight_cap: u32,
    pub checks: Vec<RelationCheck>,
    pub structure_constants_match: bool,
    pub all_pass: bool,
}

enum Instance {
    Product(usize, usize, usize),
    Form(usize, usize, usize),
    Eigen(usize, usize, usize, i32),
    Idempotent(PairIndex),
    Norm(PairIndex),
    Disjoint(PairIndex, PairIndex, i32),
    Skew(PairIndex, PairIndex),
}

fn instances(n: usize) -> Vec<Instance> {
    let pairs = PairIndex::all(n);
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            for l in 1..=n {
                if i == j || j == l || i == l {
                    continue;
                }
                out.push(Instance::Product(i, j, l));
                out.push(Instance::Form(i, j, l));
                for p in 1..=3 {
                    out.push(Instance::Eigen(i, j, l, p));
                }
            }
        }
    }
    for &p in &pairs {
        out.push(Instance::Idempotent(p));
        out.push(Instance::Norm(p));
        for &q in &pairs {
            if p.is_disjoint(&q) {
                for k in 0..=3 {
                    out.push(Instance::Disjoint(p, q, k));
                }
            }
            out.push(Instance::Skew(p, q));
        }
    }
    out
}

fn pair(i: usize, j: usize) -> PairIndex {
    PairIndex::new(i, j).expect("distinct indices")
}

fn run_instance(
    fam: &VirasoroFamily,
    instance: &Instance,
    alpha: &Scalar,
    beta: &Scalar,
    cap: WeightCap,
) -> Result<RelationCheck> {
    let w = |p: PairIndex| fam.vector(&p);
    let vac = VOAState::vacuum(fam.n);
    let check =
        |relation: &str, u: PairIndex, v: String, mode: i32, lhs: VOAState, rhs: VOAState| {
            RelationCheck {
                relation: relation.to_string(),
                u: u.to_string(),
                v,
                mode,
                pass: lhs == rhs,
            }
        };
    Ok(match *instance {
        Instance::Product(i, j, l) => {
            let (a, b, c) = (pair(i, j), pair(j, l), pair(i, l));
            let lhs = mode_product(w(a), 1, w(b), cap)?;
            let rhs = w(a).add(w(b)).sub(w(c)).scale(&(alpha / int(2)));
            check("product", a, b.to_string(), 1, lhs, rhs)
        }
        Instance::Form(i, j, l) => {
            let (a, b) = (pair(i, j), pair(j, l));
            let lhs = mode_product(w(a), 3, w(b), cap)?;
            check(
                "form",
                a,
                b.to_string(),
                3,
                lhs,
                vac.scale(&(alpha * beta / int(8))),
            )
        }
        Instance::Eigen(i, j, l, p) => {
            let (a, b, c) = (pair(i, j), pair(j, l), pair(i, l));
            let diff = w(b).sub(w(c));
            let lhs = mode_product(w(a), p, &diff, cap)?;
            let rhs = if p == 1 {
                diff.scale(alpha)
            } else {
                VOAState::zero(fam.n)
            };
            check("eigenvector", a, format!("{b} - {c}"), p, lhs, rhs)
        }
        Instance::Idempotent(a) => {
            let lhs = mode_product(w(a), 1, w(a), cap)?;
            check("product", a, a.to_string(), 1, lhs, w(a).scale(&int(2)))
        }
        Instance::Norm(a) => {
            let lhs = mode_product(w(a), 3, w(a), cap)?;
            check(
                "form",
                a,
                a.to_string(),
                3,
                lhs,
                vac.scale(&(beta / int(2))),
            )
        }
        Instance::Disjoint(a, b, p) => {
            let lhs = mode_product(w(a), p, w(b), cap)?;
            check("disjoint", a, b.to_string(), p, lhs, VOAState::zero(fam.n))
        }
        Instance::Skew(a, b) => {
            let lhs = mode_product(w(a), 2, w(b), cap)?;
            check(
                "weight-one",
                a,
                b.to_string(),
                2,
                lhs,
                VOAState::zero(fam.n),
            )
        }
    })
}

/// Checks the defining relations of the Griess algebra with parameter
/// `family.m()` on the realized vectors, then compares the extracted
/// structure constants with the abstract algebra.
pub fn verify_relations(family: &VirasoroFamily, cap: WeightCap) -> Result<RelationReport> {
    let alg = GriessAlgebra::build(family.n, family.m())?;
    let (alpha, beta) = (alg.alpha().clone(), alg.beta().clone());
    let checks = par::try_map(&instances(family.n), |s| {
        run_instance(family, s, &alpha, &beta, cap)
    })?;
    let structure_constants_match = family.extract(cap)?.matches(&alg);
    let all_pass = structure_constants_match && checks.iter().all(|c| c.pass);
    Ok(RelationReport {
        family: family.kind,
        n: family.n,
        m: family.m(),
        weight_cap: cap.0,
        checks,
        structure_constants_match,
        all_pass,
    })
}
