//! Integer vectors used for f-, h- and F-vectors.

use std::fmt;
use std::ops::Index;

use serde::{Deserialize, Serialize};

use crate::element_set::binomial;
use crate::error::{Error, Result};

/// A nonnegative integer sequence `(v_0, ..., v_d)` with explicit trailing zeros.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HVector(Vec<u64>);

impl HVector {
    pub fn new(entries: Vec<u64>) -> Self {
        HVector(entries)
    }

    pub fn zeros(len: usize) -> Self {
        HVector(vec![0; len])
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Entry `i`, or 0 past the end.
    pub fn get(&self, i: usize) -> u64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }

    pub(crate) fn bump(&mut self, i: usize) {
        if i >= self.0.len() {
            self.0.resize(i + 1, 0);
        }
        self.0[i] += 1;
    }

    /// Adds `other` shifted right by `shift` places, growing as needed.
    pub(crate) fn add_shifted(&mut self, other: &HVector, shift: usize) {
        let need = other.len() + shift;
        if need > self.0.len() {
            self.0.resize(need, 0);
        }
        for (i, v) in other.0.iter().enumerate() {
            self.0[i + shift] += v;
        }
    }

    pub fn is(&self, entries: &[u64]) -> bool {
        self.0 == entries
    }
}

impl Index<usize> for HVector {
    type Output = u64;
    fn index(&self, i: usize) -> &u64 {
        &self.0[i]
    }
}

impl From<Vec<u64>> for HVector {
    fn from(v: Vec<u64>) -> Self {
        HVector(v)
    }
}

impl<const N: usize> From<[u64; N]> for HVector {
    fn from(v: [u64; N]) -> Self {
        HVector(v.to_vec())
    }
}

impl fmt::Debug for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// Converts an f-vector `(f_0, ..., f_d)` of a rank-`d` complex into its h-vector via
/// `h_k = sum_j (-1)^(k-j) C(d-j, k-j) f_j`.
pub fn h_vector_from_f(f: &HVector) -> Result<HVector> {
    let len = f.len();
    if len == 0 {
        return Ok(HVector::default());
    }
    let d = len - 1;
    let mut h = Vec::with_capacity(len);
    for k in 0..=d {
        let mut acc: i128 = 0;
        for j in 0..=k {
            let term = binomial(d - j, k - j) as i128 * f[j] as i128;
            if (k - j) % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        if acc < 0 {
            return Err(Error::NegativeEntry { index: k });
        }
        h.push(acc as u64);
    }
    Ok(HVector(h))
}
