//! Discrete-series Virasoro data: central charges `c_m`, Kac-table
//! conformal weights `h_{r,s}`, the Kac reflection and fusion
//! multiplicities from the admissible-triple rule.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{self, int, rat, Scalar};

fn check_m(m: u32) -> Result<()> {
    if m < 1 {
        return Err(Error::InvalidParameter(format!("m must be >= 1, got {m}")));
    }
    Ok(())
}

/// `c_m = 1 - 6 / ((m+2)(m+3))`.
pub fn central_charge(m: u32) -> Result<Scalar> {
    check_m(m)?;
    let m = i64::from(m);
    Ok(int(1) - rat(6, (m + 2) * (m + 3)))
}

/// Label `(m, r, s)` of the irreducible module `L(c_m, h_{r,s})`, with
/// `1 <= r <= m+1` and `1 <= s <= m+2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct KacLabel {
    m: u32,
    r: u32,
    s: u32,
}

impl KacLabel {
    pub fn new(m: u32, r: u32, s: u32) -> Result<Self> {
        check_m(m)?;
        if !(1..=m + 1).contains(&r) || !(1..=m + 2).contains(&s) {
            return Err(Error::InvalidParameter(format!(
                "Kac label (r, s) = ({r}, {s}) outside 1..={} x 1..={} for m = {m}",
                m + 1,
                m + 2
            )));
        }
        Ok(KacLabel { m, r, s })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn reflect(&self) -> KacLabel {
        KacLabel {
            m: self.m,
            r: self.m + 2 - self.r,
            s: self.m + 3 - self.s,
        }
    }

    pub fn weight(&self) -> Scalar {
        let (m, r, s) = (i64::from(self.m), i64::from(self.r), i64::from(self.s));
        let d = r * (m + 3) - s * (m + 2);
        rat(d * d - 1, 4 * (m + 2) * (m + 3))
    }

    /// Every valid label for `m`, row by row.
    pub fn all(m: u32) -> Result<Vec<KacLabel>> {
        check_m(m)?;
        Ok((1..=m + 1)
            .flat_map(|r| (1..=m + 2).map(move |s| KacLabel { m, r, s }))
            .collect())
    }
}

impl fmt::Display for KacLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.r, self.s)
    }
}

/// `h_{r,s} = ([r(m+3) - s(m+2)]^2 - 1) / (4(m+2)(m+3))`.
pub fn conformal_weight(label: &KacLabel) -> Scalar {
    label.weight()
}

/// Validating form of [`conformal_weight`] for raw integers.
pub fn conformal_weight_of(m: u32, r: u32, s: u32) -> Result<Scalar> {
    Ok(KacLabel::new(m, r, s)?.weight())
}

pub fn kac_reflection(label: &KacLabel) -> KacLabel {
    label.reflect()
}

/// `h_{1,m+2}`, which equals `m(m+1)/4`.
pub fn top_weight(m: u32) -> Result<Scalar> {
    Ok(KacLabel::new(m, 1, m + 2)?.weight())
}

/// An isomorphism class of irreducible modules: a label up to reflection.
/// The canonical representative is the lexicographically smaller `(r, s)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ModuleClass {
    canonical: KacLabel,
}

impl ModuleClass {
    pub fn of(label: KacLabel) -> Self {
        let refl = label.reflect();
        ModuleClass {
            canonical: label.min(refl),
        }
    }

    pub fn new(m: u32, r: u32, s: u32) -> Result<Self> {
        Ok(Self::of(KacLabel::new(m, r, s)?))
    }

    pub fn vacuum(m: u32) -> Result<Self> {
        Self::new(m, 1, 1)
    }

    pub fn canonical(&self) -> KacLabel {
        self.canonical
    }

    pub fn m(&self) -> u32 {
        self.canonical.m
    }

    /// Both labels of the class; they are always distinct because
    /// `m+2` and `m+3` cannot both be even.
    pub fn representatives(&self) -> [KacLabel; 2] {
        [self.canonical, self.canonical.reflect()]
    }

    pub fn weight(&self) -> Scalar {
        self.canonical.weight()
    }
}

impl fmt::Display for ModuleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.canonical.fmt(f)
    }
}

/// One entry per module class with its conformal weight, in canonical
/// label order. Fails with an internal-consistency error if two classes
/// share a weight.
pub fn kac_table(m: u32) -> Result<Vec<(ModuleClass, Scalar)>> {
    let mut classes: Vec<ModuleClass> =
        KacLabel::all(m)?.into_iter().map(ModuleClass::of).collect();
    classes.sort();
    classes.dedup();
    let table: Vec<(ModuleClass, Scalar)> = classes.into_iter().map(|c| (c, c.weight())).collect();
    for (i, (a, wa)) in table.iter().enumerate() {
        if let Some((b, _)) = table[i + 1..].iter().find(|(_, wb)| wb == wa) {
            return Err(Error::InternalConsistency(format!(
                "classes {a} and {b} share weight {}",
                scalar::format(wa)
            )));
        }
    }
    Ok(table)
}

fn check_pair(m: u32, (r, s): (u32, u32)) -> Result<()> {
    KacLabel::new(m, r, s).map(|_| ())
}

/// The admissibility test on an ordered triple of `(r, s)` pairs.
pub fn is_admissible(t1: (u32, u32), t2: (u32, u32), t3: (u32, u32), m: u32) -> Result<bool> {
    for t in [t1, t2, t3] {
        check_pair(m, t)?;
    }
    let triangle = |a: u32, b: u32, c: u32| a < b + c && b < a + c && c < a + b;
    let (r, r1, r2) = (t1.0, t2.0, t3.0);
    let (s, s1, s2) = (t1.1, t2.1, t3.1);
    let rsum = r + r1 + r2;
    let ssum = s + s1 + s2;
    Ok(rsum <= 2 * m + 3
        && ssum <= 2 * m + 5
        && triangle(r, r1, r2)
        && triangle(s, s1, s2)
        && rsum % 2 == 1
        && ssum % 2 == 1)
}

/// Fusion multiplicity `N_{a b}^c` between module classes: 1 if some choice
/// of representatives is admissible, else 0.
pub fn fusion_dim(a: ModuleClass, b: ModuleClass, c: ModuleClass) -> Result<u8> {
    let m = a.m();
    if b.m() != m || c.m() != m {
        return Err(Error::InvalidParameter(format!(
            "fusion of classes with different m ({}, {}, {})",
            m,
            b.m(),
            c.m()
        )));
    }
    for x in a.representatives() {
        for y in b.representatives() {
            for z in c.representatives() {
                if is_admissible((x.r, x.s), (y.r, y.s), (z.r, z.s), m)? {
                    return Ok(1);
                }
            }
        }
    }
    Ok(0)
}

/// All classes `c` with `N_{a b}^c = 1`.
pub fn fusion_product(a: ModuleClass, b: ModuleClass) -> Result<Vec<ModuleClass>> {
    let mut out = Vec::new();
    for (c, _) in kac_table(a.m())? {
        if fusion_dim(a, b, c)? == 1 {
            out.push(c);
        }
    }
    Ok(out)
}

/// The class of `L(c_m, m(m+1)/4)`, i.e. label `(m+1, 1)`.
pub fn top_class(m: u32) -> Result<ModuleClass> {
    ModuleClass::new(m, m + 1, 1)
}
