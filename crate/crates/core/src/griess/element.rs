use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{binomial2, PairIndex};
use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// A vector of `V_2` in the `w^{ij}` basis (lexicographic pair order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GriessElement {
    n: usize,
    coeffs: Vec<Scalar>,
}

/// One serialized coordinate: `{"pair": "i,j", "coeff": "p/q"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coordinate {
    pub pair: String,
    pub coeff: String,
}

impl GriessElement {
    pub fn zero(n: usize) -> Self {
        GriessElement {
            n,
            coeffs: vec![Scalar::zero(); binomial2(n)],
        }
    }

    pub fn basis(n: usize, index: usize) -> Self {
        let mut e = Self::zero(n);
        e.coeffs[index] = Scalar::from_integer(1.into());
        e
    }

    /// Panics if `coeffs.len() != C(n, 2)`.
    pub fn from_coeffs(n: usize, coeffs: Vec<Scalar>) -> Self {
        assert_eq!(coeffs.len(), binomial2(n), "coefficient vector length");
        GriessElement { n, coeffs }
    }

    pub fn try_from_coeffs(n: usize, coeffs: Vec<Scalar>) -> Result<Self> {
        if coeffs.len() != binomial2(n) {
            return Err(Error::DimensionMismatch {
                expected: binomial2(n),
                found: coeffs.len(),
            });
        }
        Ok(GriessElement { n, coeffs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub(crate) fn coeffs_mut(&mut self) -> &mut [Scalar] {
        &mut self.coeffs
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        GriessElement { n: self.n, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        GriessElement { n: self.n, coeffs }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        GriessElement {
            n: self.n,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Nonzero coordinates only.
    pub fn to_coordinates(&self) -> Vec<Coordinate> {
        PairIndex::all(self.n)
            .into_iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(p, c)| Coordinate {
                pair: p.to_string(),
                coeff: scalar::format(c),
            })
            .collect()
    }

    pub fn from_coordinates(n: usize, coords: &[Coordinate]) -> Result<Self> {
        let mut e = Self::zero(n);
        for c in coords {
            let (i, j) = c
                .pair
                .split_once(',')
                .ok_or_else(|| Error::InvalidParameter(format!("bad pair {:?}", c.pair)))?;
            let parse = |s: &str| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidParameter(format!("bad pair {:?}", c.pair)))
            };
            let p = PairIndex::new(parse(i)?, parse(j)?)?;
            if p.j() > n {
                return Err(Error::InvalidParameter(format!(
                    "pair {p} out of range for n = {n}"
                )));
            }
            e.coeffs[p.position(n)] += scalar::parse(&c.coeff)?;
        }
        Ok(e)
    }
}

impl Serialize for GriessElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_coordinates().serialize(s)
    }
}

impl fmt::Display for GriessElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (p, c) in PairIndex::all(self.n).into_iter().zip(&self.coeffs) {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            write!(f, "{} w[{p}]", scalar::format(&c.abs()))?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
