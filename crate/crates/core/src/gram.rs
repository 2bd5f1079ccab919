//! Positive-definiteness of the invariant form on `V_2`.
//!
//! The verdict on the full Gram matrix comes from exact leading principal
//! minors. Independently, the form is split along the `w^{12}`-adapted
//! basis
//!
//! ```text
//! w^{12},  U_2 = span{w^{kl} : 3 <= k < l},
//! b_k = w^{1k} - w^{2k},  c_k = w^{1k} + w^{2k} - (alpha/2) w^{12}   (3 <= k <= n)
//! ```
//!
//! whose `B` and `C` blocks have closed-form determinants.

use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::griess::{GriessAlgebra, GriessElement};
use crate::linalg::{self, Matrix};
use crate::par;
use crate::scalar::{self, int, rat, Scalar};

pub use crate::linalg::is_positive_definite;

fn check_s(s: usize) -> Result<()> {
    if s < 3 {
        return Err(Error::InvalidParameter(format!(
            "block size parameter s must be >= 3, got {s}"
        )));
    }
    Ok(())
}

/// `f = m(m+5) / ((m+2)(m+3))`, which is `c_m`.
fn f(m: i64) -> Scalar {
    rat(m * (m + 5), (m + 2) * (m + 3))
}

/// `q = m(m+1)/16`.
fn q(m: i64) -> Scalar {
    rat(m * (m + 1), 16)
}

/// `1 - m(m+1)/8`.
fn one_minus_2q(m: i64) -> Scalar {
    int(1) - rat(m * (m + 1), 8)
}

fn check_m(m: u32) -> Result<i64> {
    if m < 1 {
        return Err(Error::InvalidParameter(format!("m must be >= 1, got {m}")));
    }
    Ok(i64::from(m))
}

/// Gram matrix `(w^p | w^q)` on the lexicographic pair basis.
pub fn gram_matrix(n: usize, m: u32) -> Result<Matrix> {
    Ok(GriessAlgebra::build(n, m)?.gram_matrix().clone())
}

/// `B` from the closed entry formulas: diagonal `f (1 - q)`, off-diagonal `f q`.
pub fn b_matrix(s: usize, m: u32) -> Result<Matrix> {
    check_s(s)?;
    let m = check_m(m)?;
    let diag = f(m) * (int(1) - q(m));
    let off = f(m) * q(m);
    Ok(Matrix::from_fn(s - 2, s - 2, |i, j| {
        if i == j {
            diag.clone()
        } else {
            off.clone()
        }
    }))
}

/// `C` from the closed entry formulas: diagonal `f + f q (1 - 2q)`,
/// off-diagonal `f q (1 - 2q)`.
pub fn c_matrix(s: usize, m: u32) -> Result<Matrix> {
    check_s(s)?;
    let m = check_m(m)?;
    let off = f(m) * q(m) * one_minus_2q(m);
    let diag = f(m) + &off;
    Ok(Matrix::from_fn(s - 2, s - 2, |i, j| {
        if i == j {
            diag.clone()
        } else {
            off.clone()
        }
    }))
}

/// The vectors `b_k = w^{1k} - w^{2k}`, `k = 3..=n`.
pub fn b_vectors(alg: &GriessAlgebra) -> Result<Vec<GriessElement>> {
    (3..=alg.n())
        .map(|k| {
            Ok(alg
                .basis(&alg.pair(1, k)?)
                .sub(&alg.basis(&alg.pair(2, k)?)))
        })
        .collect()
}

/// The vectors `c_k = w^{1k} + w^{2k} - (alpha/2) w^{12}`, `k = 3..=n`.
pub fn c_vectors(alg: &GriessAlgebra) -> Result<Vec<GriessElement>> {
    let w12 = alg.basis(&alg.pair(1, 2)?);
    let half = alg.alpha() / int(2);
    (3..=alg.n())
        .map(|k| {
            Ok(alg
                .basis(&alg.pair(1, k)?)
                .add(&alg.basis(&alg.pair(2, k)?))
                .sub(&w12.scale(&half)))
        })
        .collect()
}

/// The `w^{kl}` with `3 <= k < l <= n`.
pub fn u2_vectors(alg: &GriessAlgebra) -> Vec<GriessElement> {
    alg.pairs()
        .iter()
        .filter(|p| p.i() >= 3)
        .map(|p| alg.basis(p))
        .collect()
}

fn cross_gram(alg: &GriessAlgebra, xs: &[GriessElement], ys: &[GriessElement]) -> Result<Matrix> {
    let mut out = Matrix::zeros(xs.len(), ys.len());
    for (i, x) in xs.iter().enumerate() {
        for (j, y) in ys.iter().enumerate() {
            out[(i, j)] = alg.form(x, y)?;
        }
    }
    Ok(out)
}

/// `B` evaluated through the algebra's invariant form.
pub fn b_matrix_from_form(s: usize, m: u32) -> Result<Matrix> {
    check_s(s)?;
    let alg = GriessAlgebra::build(s, m)?;
    let b = b_vectors(&alg)?;
    cross_gram(&alg, &b, &b)
}

/// `C` evaluated through the algebra's invariant form.
pub fn c_matrix_from_form(s: usize, m: u32) -> Result<Matrix> {
    check_s(s)?;
    let alg = GriessAlgebra::build(s, m)?;
    let c = c_vectors(&alg)?;
    cross_gram(&alg, &c, &c)
}

/// `det B = f^{s-2} (1 - m(m+1)/8)^{s-3} (1 + (s-4) m(m+1)/16)`.
pub fn detb_closed(s: usize, m: u32) -> Result<Scalar> {
    check_s(s)?;
    let m = check_m(m)?;
    let s = s as i32;
    Ok(pow(&f(m), s - 2) * pow(&one_minus_2q(m), s - 3) * (int(1) + int(i64::from(s) - 4) * q(m)))
}

/// `det C = f^{s-3} (f + (s-2) f m(m+1)/16 (1 - m(m+1)/8))`.
pub fn detc_closed(s: usize, m: u32) -> Result<Scalar> {
    check_s(s)?;
    let m = check_m(m)?;
    let s = s as i32;
    let inner = f(m) + int(i64::from(s) - 2) * f(m) * q(m) * one_minus_2q(m);
    Ok(pow(&f(m), s - 3) * inner)
}

fn pow(x: &Scalar, e: i32) -> Scalar {
    num_traits::pow(x.clone(), e as usize)
}

/// Full positivity report for one `(n, m)`.
#[derive(Clone, Debug, Serialize)]
pub struct GramReport {
    pub n: usize,
    pub m: u32,
    #[serde(serialize_with = "ser_matrix")]
    pub gram: Matrix,
    #[serde(serialize_with = "ser_scalars")]
    pub leading_minors: Vec<Scalar>,
    pub positive_definite: bool,
    /// Indexed by `s = 3..=n`.
    #[serde(rename = "detB_closed", serialize_with = "ser_scalars")]
    pub detb_closed: Vec<Scalar>,
    #[serde(rename = "detB_direct", serialize_with = "ser_scalars")]
    pub detb_direct: Vec<Scalar>,
    #[serde(rename = "detC_closed", serialize_with = "ser_scalars")]
    pub detc_closed: Vec<Scalar>,
    #[serde(rename = "detC_direct", serialize_with = "ser_scalars")]
    pub detc_direct: Vec<Scalar>,
    pub block_verdict: bool,
    /// `false` for `m = 1`, which lies below the classification's `m >= 2`.
    pub within_hypothesis: bool,
}

fn ser_scalars<S: serde::Serializer>(v: &[Scalar], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(scalar::format))
}

pub(crate) fn ser_matrix<S: serde::Serializer>(
    m: &Matrix,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(
        m.to_rows()
            .iter()
            .map(|r| r.iter().map(scalar::format).collect::<Vec<_>>()),
    )
}

impl GramReport {
    pub fn compute(n: usize, m: u32) -> Result<Self> {
        let alg = GriessAlgebra::build(n, m)?;
        let gram = alg.gram_matrix().clone();
        let leading_minors = linalg::leading_minors(&gram)?;
        let positive_definite = leading_minors.iter().all(Signed::is_positive);
        let mut report = GramReport {
            n,
            m,
            gram,
            leading_minors,
            positive_definite,
            detb_closed: Vec::new(),
            detb_direct: Vec::new(),
            detc_closed: Vec::new(),
            detc_direct: Vec::new(),
            block_verdict: block_verdict(n, m)?,
            within_hypothesis: m >= 2,
        };
        for s in 3..=n {
            let b = b_matrix(s, m)?;
            let c = c_matrix(s, m)?;
            if b != b_matrix_from_form(s, m)? || c != c_matrix_from_form(s, m)? {
                return Err(Error::InternalConsistency(format!(
                    "B/C entry formulas disagree with the invariant form at s = {s}, m = {m}"
                )));
            }
            report.detb_closed.push(detb_closed(s, m)?);
            report.detb_direct.push(linalg::determinant(&b)?);
            report.detc_closed.push(detc_closed(s, m)?);
            report.detc_direct.push(linalg::determinant(&c)?);
        }
        Ok(report)
    }

    /// Closed-form determinants agree with the direct ones for every `s`.
    pub fn determinants_agree(&self) -> bool {
        self.detb_closed == self.detb_direct && self.detc_closed == self.detc_direct
    }
}

/// Sylvester verdict on the full `V_2` Gram matrix for each `1 <= m <= m_max`.
pub fn classify(n: usize, m_max: u32) -> Result<Vec<(u32, bool)>> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("n must be >= 3, got {n}")));
    }
    let ms: Vec<u32> = (1..=m_max).collect();
    par::try_map(&ms, |&m| {
        Ok((m, is_positive_definite(&gram_matrix(n, m)?)?))
    })
}

/// Positivity read off the adapted decomposition: `w^{12}` has norm
/// `beta/2`, `B_n` and `C_n` must be positive definite (their leading
/// minors are exactly `det B_s`, `det C_s` for `3 <= s <= n`), and `U_2`
/// is the same problem on the `n - 2` indices `3..=n`.
pub fn block_verdict(n: usize, m: u32) -> Result<bool> {
    check_m(m)?;
    if n < 2 {
        return Ok(true);
    }
    let beta = crate::minimal_model::central_charge(m)?;
    if n == 2 {
        return Ok(beta.is_positive());
    }
    let b_ok = (3..=n)
        .map(|s| detb_closed(s, m))
        .collect::<Result<Vec<_>>>()?;
    let c_ok = (3..=n)
        .map(|s| detc_closed(s, m))
        .collect::<Result<Vec<_>>>()?;
    Ok(beta.is_positive()
        && b_ok.iter().all(Signed::is_positive)
        && c_ok.iter().all(Signed::is_positive)
        && block_verdict(n - 2, m)?)
}

/// Cross-block Gram matrices of the adapted basis that are asserted to
/// vanish: `(w^{12} | U_2)`, `(w^{12} | b)`, `(w^{12} | c)`, `(U_2 | b)`,
/// `(b | c)`. Returns `(name, is_zero)` per block.
pub fn orthogonal_blocks(n: usize, m: u32) -> Result<Vec<(&'static str, bool)>> {
    let alg = GriessAlgebra::build(n, m)?;
    let w12 = vec![alg.basis(&alg.pair(1, 2)?)];
    let u2 = u2_vectors(&alg);
    let b = b_vectors(&alg)?;
    let c = c_vectors(&alg)?;
    Ok(vec![
        ("w12|U2", cross_gram(&alg, &w12, &u2)?.is_zero()),
        ("w12|B", cross_gram(&alg, &w12, &b)?.is_zero()),
        ("w12|C", cross_gram(&alg, &w12, &c)?.is_zero()),
        ("U2|B", cross_gram(&alg, &u2, &b)?.is_zero()),
        ("B|C", cross_gram(&alg, &b, &c)?.is_zero()),
    ])
}

/// `(U_2 | c)`, the one cross block of the adapted basis that does not
/// vanish for `n >= 4`.
pub fn u2_c_block(n: usize, m: u32) -> Result<Matrix> {
    let alg = GriessAlgebra::build(n, m)?;
    cross_gram(&alg, &u2_vectors(&alg), &c_vectors(&alg)?)
}
