//! Sparse exact linear algebra on `Z/2`-graded spaces `V⊗k`.
//!
//! Basis vectors of `V = C_q(n|n)` are `u_a` for `a ∈ {−n,…,−1,1,…,n}` with
//! parity `p(a) = 1` exactly when `a < 0`. A basis tuple of `V⊗k` is stored as
//! its index in the lexicographic order induced by `u_{−n} < … < u_{−1} < u_1 < … < u_n`,
//! first slot most significant.

mod elim;
mod matrix;

pub use elim::{column_relations, nullspace, rank, rref, span_union, Rref, Subspace};
pub use matrix::{MatrixJson, SuperMatrix};

use crate::error::{Error, Result};
use crate::qrat::RatFunc;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Parity of `u_a`.
pub fn parity(a: i32) -> u8 {
    u8::from(a < 0)
}

/// The basis of `V⊗k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TensorBasis {
    pub n: usize,
    pub k: usize,
}

impl TensorBasis {
    pub fn new(n: usize, k: usize) -> Self {
        Self { n, k }
    }

    pub fn dim(&self) -> usize {
        (2 * self.n).pow(self.k as u32)
    }

    /// Position of `u_a` in the canonical order of `V`.
    pub fn digit(&self, a: i32) -> usize {
        let n = self.n as i32;
        debug_assert!(a != 0 && a.abs() <= n);
        (if a < 0 { a + n } else { a + n - 1 }) as usize
    }

    /// Inverse of [`digit`](Self::digit).
    pub fn label(&self, d: usize) -> i32 {
        let (d, n) = (d as i32, self.n as i32);
        if d < n {
            d - n
        } else {
            d - n + 1
        }
    }

    pub fn labels(&self) -> Vec<i32> {
        (0..2 * self.n).map(|d| self.label(d)).collect()
    }

    pub fn index(&self, tuple: &[i32]) -> Result<usize> {
        if tuple.len() != self.k {
            return Err(Error::ShapeError(format!("tuple of length {} for k = {}", tuple.len(), self.k)));
        }
        let mut idx = 0;
        for &a in tuple {
            if a == 0 || a.unsigned_abs() as usize > self.n {
                return Err(Error::ShapeError(format!("basis label {a} out of range for n = {}", self.n)));
            }
            idx = idx * 2 * self.n + self.digit(a);
        }
        Ok(idx)
    }

    pub fn tuple(&self, mut idx: usize) -> Vec<i32> {
        let b = 2 * self.n;
        let mut out = vec![0; self.k];
        for slot in (0..self.k).rev() {
            out[slot] = self.label(idx % b);
            idx /= b;
        }
        out
    }

    pub fn parity(&self, idx: usize) -> u8 {
        let b = 2 * self.n;
        let mut idx = idx;
        let mut p = 0;
        for _ in 0..self.k {
            if idx % b < self.n {
                p ^= 1;
            }
            idx /= b;
        }
        p
    }

    pub fn parities(&self) -> Vec<u8> {
        (0..self.dim()).map(|i| self.parity(i)).collect()
    }

    /// Weight `Σ sgn(a_j) ε_{|a_j|}` as an integer `n`-vector.
    pub fn weight(&self, idx: usize) -> Vec<i32> {
        let mut w = vec![0; self.n];
        for a in self.tuple(idx) {
            w[a.unsigned_abs() as usize - 1] += a.signum();
        }
        w
    }
}

/// Vector in `V⊗k` with sparse `RatFunc` coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperVector {
    pub basis: TensorBasis,
    coeffs: BTreeMap<usize, RatFunc>,
}

impl SuperVector {
    pub fn zero(basis: TensorBasis) -> Self {
        Self { basis, coeffs: BTreeMap::new() }
    }

    pub fn basis_vector(basis: TensorBasis, idx: usize) -> Self {
        let mut v = Self::zero(basis);
        v.coeffs.insert(idx, RatFunc::one());
        v
    }

    pub fn from_tuple(basis: TensorBasis, tuple: &[i32]) -> Result<Self> {
        Ok(Self::basis_vector(basis, basis.index(tuple)?))
    }

    pub fn from_entries<I: IntoIterator<Item = (usize, RatFunc)>>(basis: TensorBasis, it: I) -> Self {
        let mut v = Self::zero(basis);
        for (i, c) in it {
            v.add_at(i, &c);
        }
        v
    }

    pub fn from_tuples<I: IntoIterator<Item = (Vec<i32>, RatFunc)>>(basis: TensorBasis, it: I) -> Result<Self> {
        let mut v = Self::zero(basis);
        for (t, c) in it {
            v.add_at(basis.index(&t)?, &c);
        }
        Ok(v)
    }

    pub fn get(&self, idx: usize) -> RatFunc {
        self.coeffs.get(&idx).cloned().unwrap_or_default()
    }

    pub fn add_at(&mut self, idx: usize, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(idx).or_default();
        *e = &*e + c;
        if e.is_zero() {
            self.coeffs.remove(&idx);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &RatFunc)> {
        self.coeffs.iter().map(|(i, c)| (*i, c))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn nnz(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero(self.basis);
        }
        Self { basis: self.basis, coeffs: self.coeffs.iter().map(|(i, x)| (*i, x * c)).collect() }
    }

    pub fn add(&self, o: &SuperVector) -> Self {
        let mut v = self.clone();
        for (i, c) in o.iter() {
            v.add_at(i, c);
        }
        v
    }

    pub fn sub(&self, o: &SuperVector) -> Self {
        self.add(&o.scale(&RatFunc::from_int(-1)))
    }

    /// First nonzero coefficient in canonical order.
    pub fn leading(&self) -> Option<(usize, &RatFunc)> {
        self.coeffs.iter().next().map(|(i, c)| (*i, c))
    }

    /// Scales so the leading coefficient is 1.
    pub fn normalized(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Returns `c` with `self = c·o`, if the vectors are proportional and `o ≠ 0`.
    pub fn ratio_to(&self, o: &SuperVector) -> Option<RatFunc> {
        let (i, c) = o.leading()?;
        let r = self.get(i).div(c).ok()?;
        (o.scale(&r) == *self).then_some(r)
    }

    /// Weight shared by all support tuples, or `None` if inhomogeneous or zero.
    pub fn weight(&self) -> Option<Vec<i32>> {
        let mut it = self.support().map(|i| self.basis.weight(i));
        let w = it.next()?;
        it.all(|x| x == w).then_some(w)
    }

    pub fn to_json(&self) -> VectorJson {
        VectorJson {
            n: self.basis.n,
            k: self.basis.k,
            coeffs: self.iter().map(|(i, c)| (self.basis.tuple(i), c.to_string())).collect(),
        }
    }

    pub fn from_json(j: &VectorJson) -> Result<Self> {
        let basis = TensorBasis::new(j.n, j.k);
        let mut v = Self::zero(basis);
        for (t, c) in &j.coeffs {
            v.add_at(basis.index(t)?, &c.parse()?);
        }
        Ok(v)
    }
}

impl std::fmt::Display for SuperVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .iter()
            .map(|(i, c)| {
                let t: Vec<String> = self.basis.tuple(i).iter().map(|a| format!("u{a}")).collect();
                format!("({c})·{}", t.join("⊗"))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// JSON form of a vector: `coeffs` is a list of `[tuple, value]` pairs in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VectorJson {
    pub n: usize,
    pub k: usize,
    pub coeffs: Vec<(Vec<i32>, String)>,
}
