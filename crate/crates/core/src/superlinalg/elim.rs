//! Fraction-free elimination over `Q[q, q⁻¹]`, blocked by connected components.
//!
//! Rows are split into independent blocks (columns linked through shared
//! rows). Each block has its denominators cleared and is reduced with Bareiss'
//! exact-division scheme; only the final echelon form is normalized with
//! `RatFunc` arithmetic.

use super::{SuperMatrix, SuperVector, TensorBasis};
use crate::qrat::{poly, LaurentPoly, RatFunc};
use rayon::prelude::*;
use std::collections::BTreeMap;

type SparseRow = Vec<(usize, RatFunc)>;

/// Reduced row echelon form: rows sorted by pivot column, pivot entries 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub ncols: usize,
    pub rows: Vec<(usize, SparseRow)>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.0).collect()
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let nx = self.0[y];
            self.0[y] = r;
            y = nx;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo;
        }
    }
}

/// Row echelon form of the given sparse rows over `ncols` columns.
pub fn rref(rows: Vec<SparseRow>, ncols: usize) -> Rref {
    let rows: Vec<SparseRow> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    let mut uf = UnionFind((0..ncols).collect());
    for r in &rows {
        for w in r.windows(2) {
            uf.union(w[0].0, w[1].0);
        }
    }
    let mut blocks: BTreeMap<usize, Vec<SparseRow>> = BTreeMap::new();
    for r in rows {
        let root = uf.find(r[0].0);
        blocks.entry(root).or_default().push(r);
    }
    let blocks: Vec<Vec<SparseRow>> = blocks.into_values().collect();
    let reduced: Vec<Vec<(usize, SparseRow)>> = if blocks.len() > 1 {
        blocks.into_par_iter().map(reduce_block).collect()
    } else {
        blocks.into_iter().map(reduce_block).collect()
    };
    let mut out: Vec<(usize, SparseRow)> = reduced.into_iter().flatten().collect();
    out.sort_by_key(|r| r.0);
    Rref { ncols, rows: out }
}

/// Least common multiple of the row's denominators, as an ordinary polynomial.
fn row_denominator(row: &[(usize, RatFunc)]) -> LaurentPoly {
    let mut l = LaurentPoly::one();
    for (_, c) in row {
        let d = c.den();
        if d.is_one() || l.div_exact(d).is_some() {
            continue;
        }
        let g = poly::gcd(&l.to_dense(), &d.to_dense());
        let g = LaurentPoly::from_dense(&poly::to_rational(&g));
        l = &l * &d.div_exact(&g).expect("gcd divides");
    }
    l
}

fn reduce_block(rows: Vec<SparseRow>) -> Vec<(usize, SparseRow)> {
    let mut cols: Vec<usize> = rows.iter().flat_map(|r| r.iter().map(|e| e.0)).collect();
    cols.sort_unstable();
    cols.dedup();
    let local: BTreeMap<usize, usize> = cols.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let nc = cols.len();
    let mut m: Vec<Vec<LaurentPoly>> = rows
        .iter()
        .map(|r| {
            let l = row_denominator(r);
            let mut dense = vec![LaurentPoly::zero(); nc];
            for (c, v) in r {
                let scaled = if v.is_laurent() {
                    v.num() * &l
                } else {
                    v.num() * &l.div_exact(v.den()).expect("lcm divisible by denominator")
                };
                dense[local[c]] = scaled;
            }
            dense
        })
        .collect();
    let pivots = bareiss(&mut m);
    back_substitute(&m, &pivots)
        .into_iter()
        .map(|(p, row)| (cols[p], row.into_iter().map(|(c, v)| (cols[c], v)).collect()))
        .collect()
}

/// In-place Bareiss elimination; returns `(row, col)` pivots in order.
fn bareiss(m: &mut [Vec<LaurentPoly>]) -> Vec<(usize, usize)> {
    let nr = m.len();
    let nc = if nr == 0 { 0 } else { m[0].len() };
    let mut active: Vec<bool> = vec![true; nr];
    let mut prev = LaurentPoly::one();
    let mut pivots = Vec::new();
    for col in 0..nc {
        let mut best: Option<(usize, usize)> = None;
        for r in 0..nr {
            if !active[r] || m[r][col].is_zero() {
                continue;
            }
            let cost: usize = m[r][col..].iter().map(|x| x.len()).sum();
            if best.is_none_or(|(_, bc)| cost < bc) {
                best = Some((r, cost));
            }
        }
        let Some((pr, _)) = best else { continue };
        active[pr] = false;
        let prow = m[pr].clone();
        let p = prow[col].clone();
        let unit_prev = prev.is_one();
        for r in 0..nr {
            if !active[r] {
                continue;
            }
            let a = std::mem::take(&mut m[r][col]);
            if a.is_zero() && p == prev {
                continue;
            }
            for j in col + 1..nc {
                let x = &m[r][j];
                let y = &prow[j];
                if x.is_zero() && (a.is_zero() || y.is_zero()) {
                    continue;
                }
                let mut v = &p * x;
                if !a.is_zero() && !y.is_zero() {
                    v = &v - &(&a * y);
                }
                m[r][j] = if unit_prev { v } else { v.div_exact(&prev).expect("Bareiss division is exact") };
            }
        }
        prev = p;
        pivots.push((pr, col));
    }
    pivots
}

fn back_substitute(m: &[Vec<LaurentPoly>], pivots: &[(usize, usize)]) -> Vec<(usize, SparseRow)> {
    let mut rows: Vec<Vec<RatFunc>> = pivots
        .iter()
        .map(|(r, c)| {
            let p = RatFunc::from_laurent(m[*r][*c].clone()).inv().expect("nonzero pivot");
            m[*r].iter().map(|x| if x.is_zero() { RatFunc::zero() } else { &RatFunc::from_laurent(x.clone()) * &p }).collect()
        })
        .collect();
    for t in (0..pivots.len()).rev() {
        let ct = pivots[t].1;
        for s in 0..t {
            let f = rows[s][ct].clone();
            if f.is_zero() {
                continue;
            }
            let (head, tail) = rows.split_at_mut(t);
            for (x, y) in head[s].iter_mut().zip(&tail[0]).skip(ct) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
    }
    pivots
        .iter()
        .zip(rows)
        .map(|((_, c), row)| {
            (*c, row.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect())
        })
        .collect()
}

fn matrix_rows(a: &SuperMatrix) -> Vec<SparseRow> {
    let mut rows: Vec<SparseRow> = vec![Vec::new(); a.rows()];
    for c in 0..a.cols() {
        for (r, v) in a.column(c) {
            rows[*r].push((c, v.clone()));
        }
    }
    rows
}

pub fn rank(a: &SuperMatrix) -> usize {
    rref(matrix_rows(a), a.cols()).rank()
}

/// Basis of `ker a`, one vector per free column, in increasing free-column order.
///
/// Each vector has coefficient 1 at its free column and is zero at the other
/// free columns.
pub fn nullspace(a: &SuperMatrix, basis: TensorBasis) -> Vec<SuperVector> {
    assert_eq!(basis.dim(), a.cols(), "basis does not match matrix width");
    kernel_from_rows(matrix_rows(a), a.cols())
        .into_iter()
        .map(|entries| SuperVector::from_entries(basis, entries))
        .collect()
}

/// Linear relations among sparse columns: coefficient lists `c` with `Σ c_j cols[j] = 0`.
pub fn column_relations(cols: &[Vec<(usize, RatFunc)>]) -> Vec<Vec<(usize, RatFunc)>> {
    let mut rows: BTreeMap<usize, SparseRow> = BTreeMap::new();
    for (j, v) in cols.iter().enumerate() {
        for (i, c) in v {
            rows.entry(*i).or_default().push((j, c.clone()));
        }
    }
    kernel_from_rows(rows.into_values().collect(), cols.len())
}

fn kernel_from_rows(rows: Vec<SparseRow>, ncols: usize) -> Vec<Vec<(usize, RatFunc)>> {
    let r = rref(rows, ncols);
    let mut is_pivot = vec![false; ncols];
    for p in r.pivots() {
        is_pivot[p] = true;
    }
    let mut by_free: BTreeMap<usize, Vec<(usize, RatFunc)>> = BTreeMap::new();
    for (p, row) in &r.rows {
        for (c, v) in row {
            if *c != *p {
                by_free.entry(*c).or_default().push((*p, -v));
            }
        }
    }
    (0..ncols)
        .filter(|c| !is_pivot[*c])
        .map(|f| {
            let mut entries = by_free.remove(&f).unwrap_or_default();
            entries.push((f, RatFunc::one()));
            entries
        })
        .collect()
}

/// Echelon basis of the span of `vs` (leading coefficients 1).
pub fn span_union(vs: &[SuperVector]) -> Vec<SuperVector> {
    let Some(first) = vs.first() else { return Vec::new() };
    let basis = first.basis;
    let rows = vs.iter().map(|v| v.iter().map(|(i, c)| (i, c.clone())).collect()).collect();
    rref(rows, basis.dim())
        .rows
        .into_iter()
        .map(|(_, row)| SuperVector::from_entries(basis, row))
        .collect()
}

/// Subspace of `V⊗k` held in reduced echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    pub basis: TensorBasis,
    rows: BTreeMap<usize, SuperVector>,
}

impl Subspace {
    pub fn zero(basis: TensorBasis) -> Self {
        Self { basis, rows: BTreeMap::new() }
    }

    pub fn from_vectors(basis: TensorBasis, vs: &[SuperVector]) -> Self {
        let rows = span_union(vs).into_iter().map(|v| (v.leading().unwrap().0, v)).collect();
        Self { basis, rows }
    }

    pub fn full(basis: TensorBasis) -> Self {
        let rows = (0..basis.dim()).map(|i| (i, SuperVector::basis_vector(basis, i))).collect();
        Self { basis, rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn vectors(&self) -> Vec<SuperVector> {
        self.rows.values().cloned().collect()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.keys().copied().collect()
    }

    /// Remainder of `v` after reduction by the echelon basis.
    pub fn reduce(&self, v: &SuperVector) -> SuperVector {
        let hits: Vec<usize> = v.support().filter(|i| self.rows.contains_key(i)).collect();
        let mut v = v.clone();
        for p in hits {
            let c = v.get(p);
            if !c.is_zero() {
                v = v.sub(&self.rows[&p].scale(&c));
            }
        }
        v
    }

    pub fn contains(&self, v: &SuperVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &SuperVector) -> bool {
        let r = self.reduce(v);
        let Some((p, _)) = r.leading() else { return false };
        let r = r.normalized();
        for row in self.rows.values_mut() {
            let c = row.get(p);
            if !c.is_zero() {
                *row = row.sub(&r.scale(&c));
            }
        }
        self.rows.insert(p, r);
        true
    }

    pub fn sum(&self, o: &Subspace) -> Subspace {
        let mut vs = self.vectors();
        vs.extend(o.vectors());
        Subspace::from_vectors(self.basis, &vs)
    }

    /// `dim(A ∩ B) = dim A + dim B − dim(A + B)`.
    pub fn intersection_dim(&self, o: &Subspace) -> usize {
        self.dim() + o.dim() - self.sum(o).dim()
    }

    pub fn contains_subspace(&self, o: &Subspace) -> bool {
        o.rows.values().all(|v| self.contains(v))
    }
}
