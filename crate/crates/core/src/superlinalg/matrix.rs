use super::{SuperVector, TensorBasis};
use crate::error::{Error, Result};
use crate::qrat::RatFunc;
use serde::{Deserialize, Serialize};

/// Sparse homogeneous operator, stored column by column.
///
/// Each column is a list of `(row, value)` pairs sorted by row with no zero
/// values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperMatrix {
    rows: usize,
    cols: usize,
    parity: u8,
    data: Vec<Vec<(usize, RatFunc)>>,
}

fn merge_col(a: &[(usize, RatFunc)], b: &[(usize, RatFunc)], scale_b: Option<&RatFunc>) -> Vec<(usize, RatFunc)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let sb = |c: &RatFunc| match scale_b {
        Some(s) => c * s,
        None => c.clone(),
    };
    while i < a.len() || j < b.len() {
        if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i >= a.len() || b[j].0 < a[i].0 {
            let v = sb(&b[j].1);
            if !v.is_zero() {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = &a[i].1 + &sb(&b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl SuperMatrix {
    pub fn zero(rows: usize, cols: usize, parity: u8) -> Self {
        Self { rows, cols, parity, data: vec![Vec::new(); cols] }
    }

    pub fn identity(dim: usize) -> Self {
        Self::diagonal((0..dim).map(|_| RatFunc::one()).collect())
    }

    pub fn diagonal(d: Vec<RatFunc>) -> Self {
        let n = d.len();
        Self {
            rows: n,
            cols: n,
            parity: 0,
            data: d.into_iter().enumerate().map(|(i, c)| if c.is_zero() { vec![] } else { vec![(i, c)] }).collect(),
        }
    }

    /// Builds from `(row, col, value)` triples; repeated positions are summed.
    pub fn from_entries<I>(rows: usize, cols: usize, parity: u8, it: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, RatFunc)>,
    {
        let mut buckets: Vec<Vec<(usize, RatFunc)>> = vec![Vec::new(); cols];
        for (r, c, v) in it {
            assert!(r < rows && c < cols, "entry ({r},{c}) outside {rows}x{cols}");
            if !v.is_zero() {
                buckets[c].push((r, v));
            }
        }
        let data = buckets
            .into_iter()
            .map(|mut col| {
                col.sort_by_key(|e| e.0);
                let mut out: Vec<(usize, RatFunc)> = Vec::with_capacity(col.len());
                for (r, v) in col {
                    match out.last_mut() {
                        Some(last) if last.0 == r => last.1 = &last.1 + &v,
                        _ => out.push((r, v)),
                    }
                }
                out.retain(|e| !e.1.is_zero());
                out
            })
            .collect();
        Self { rows, cols, parity, data }
    }

    pub fn from_columns(rows: usize, parity: u8, cols: Vec<SuperVector>) -> Self {
        let n = cols.len();
        Self::from_entries(
            rows,
            n,
            parity,
            cols.into_iter().enumerate().flat_map(|(c, v)| v.iter().map(|(r, x)| (r, c, x.clone())).collect::<Vec<_>>()),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn parity(&self) -> u8 {
        self.parity
    }

    pub fn with_parity(mut self, p: u8) -> Self {
        self.parity = p;
        self
    }

    pub fn column(&self, c: usize) -> &[(usize, RatFunc)] {
        &self.data[c]
    }

    pub fn column_vector(&self, basis: TensorBasis, c: usize) -> SuperVector {
        SuperVector::from_entries(basis, self.data[c].iter().cloned())
    }

    pub fn get(&self, r: usize, c: usize) -> RatFunc {
        match self.data[c].binary_search_by_key(&r, |e| e.0) {
            Ok(i) => self.data[c][i].1.clone(),
            Err(_) => RatFunc::zero(),
        }
    }

    /// All nonzero entries in column-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &RatFunc)> {
        self.data.iter().enumerate().flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v)))
    }

    /// Nonzero entries sorted by `(row, col)`.
    pub fn entries_row_major(&self) -> Vec<(usize, usize, RatFunc)> {
        let mut v: Vec<_> = self.entries().map(|(r, c, x)| (r, c, x.clone())).collect();
        v.sort_by_key(|e| (e.0, e.1));
        v
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn matmul(&self, o: &SuperMatrix) -> Result<SuperMatrix> {
        if self.cols != o.rows {
            return Err(Error::ShapeError(format!(
                "matmul {}x{} by {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let data = o
            .data
            .iter()
            .map(|bcol| {
                let mut acc: Vec<(usize, RatFunc)> = Vec::new();
                for (k, bv) in bcol {
                    acc = merge_col(&acc, &self.data[*k], Some(bv));
                }
                acc
            })
            .collect();
        Ok(SuperMatrix { rows: self.rows, cols: o.cols, parity: (self.parity + o.parity) % 2, data })
    }

    /// Sum of two operators. Parities must agree unless one side is zero.
    pub fn add(&self, o: &SuperMatrix) -> Result<SuperMatrix> {
        self.combine(o, None)
    }

    pub fn sub(&self, o: &SuperMatrix) -> Result<SuperMatrix> {
        self.combine(o, Some(&RatFunc::from_int(-1)))
    }

    /// `self + c·o`.
    pub fn add_scaled(&self, o: &SuperMatrix, c: &RatFunc) -> Result<SuperMatrix> {
        self.combine(o, Some(c))
    }

    fn combine(&self, o: &SuperMatrix, c: Option<&RatFunc>) -> Result<SuperMatrix> {
        if self.dims() != o.dims() {
            return Err(Error::ShapeError(format!(
                "add {}x{} and {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let parity = if self.is_zero() {
            o.parity
        } else if o.is_zero() || self.parity == o.parity {
            self.parity
        } else {
            return Err(Error::ShapeError("sum of operators with different parity".into()));
        };
        let data = self.data.iter().zip(&o.data).map(|(a, b)| merge_col(a, b, c)).collect();
        Ok(SuperMatrix { rows: self.rows, cols: self.cols, parity, data })
    }

    pub fn scale(&self, c: &RatFunc) -> SuperMatrix {
        if c.is_zero() {
            return SuperMatrix::zero(self.rows, self.cols, self.parity);
        }
        SuperMatrix {
            rows: self.rows,
            cols: self.cols,
            parity: self.parity,
            data: self.data.iter().map(|col| col.iter().map(|(r, v)| (*r, v * c)).collect()).collect(),
        }
    }

    pub fn neg(&self) -> SuperMatrix {
        self.scale(&RatFunc::from_int(-1))
    }

    pub fn apply(&self, v: &SuperVector) -> Result<SuperVector> {
        self.apply_into(v, v.basis)
    }

    /// `A v` expressed in the basis `out` of the target space.
    pub fn apply_into(&self, v: &SuperVector, out: TensorBasis) -> Result<SuperVector> {
        if v.basis.dim() != self.cols || out.dim() != self.rows {
            return Err(Error::ShapeError(format!(
                "apply {}x{} to vector of dim {} with target dim {}",
                self.rows,
                self.cols,
                v.basis.dim(),
                out.dim()
            )));
        }
        let mut acc: Vec<(usize, RatFunc)> = Vec::new();
        for (k, x) in v.iter() {
            acc = merge_col(&acc, &self.data[k], Some(x));
        }
        Ok(SuperVector::from_entries(out, acc))
    }

    /// `[A, B] = AB − (−1)^{p(A)p(B)} BA`.
    pub fn supercommutator(&self, o: &SuperMatrix) -> Result<SuperMatrix> {
        let ab = self.matmul(o)?;
        let ba = o.matmul(self)?;
        if self.parity & o.parity == 1 {
            ab.add(&ba)
        } else {
            ab.sub(&ba)
        }
    }

    /// Ordinary commutator `AB − BA`.
    pub fn commutator(&self, o: &SuperMatrix) -> Result<SuperMatrix> {
        self.matmul(o)?.sub(&o.matmul(self)?)
    }

    pub fn transpose(&self) -> SuperMatrix {
        SuperMatrix::from_entries(self.cols, self.rows, self.parity, self.entries().map(|(r, c, v)| (c, r, v.clone())))
    }

    /// Maps every entry through `f`, dropping zeros.
    pub fn map_entries<F: Fn(&RatFunc) -> RatFunc>(&self, f: F) -> SuperMatrix {
        SuperMatrix::from_entries(self.rows, self.cols, self.parity, self.entries().map(|(r, c, v)| (r, c, f(v))))
    }

    /// Graded tensor product `X⊗Y` with `(X⊗Y)(v⊗w) = (−1)^{p(Y)p(v)} Xv⊗Yw`.
    ///
    /// `left_parities[v]` is the parity of the `v`-th basis vector of the
    /// domain of `X`. The first factor is the more significant index.
    pub fn kron(&self, y: &SuperMatrix, left_parities: &[u8]) -> SuperMatrix {
        assert_eq!(left_parities.len(), self.cols);
        let (dr, dc) = (y.rows, y.cols);
        let mut data = Vec::with_capacity(self.cols * dc);
        for (v, xcol) in self.data.iter().enumerate() {
            let flip = y.parity & left_parities[v] == 1;
            for ycol in &y.data {
                let mut col = Vec::with_capacity(xcol.len() * ycol.len());
                for (r1, a) in xcol {
                    for (r2, b) in ycol {
                        let p = a * b;
                        col.push((r1 * dr + r2, if flip { -p } else { p }));
                    }
                }
                data.push(col);
            }
        }
        SuperMatrix { rows: self.rows * dr, cols: self.cols * dc, parity: (self.parity + y.parity) % 2, data }
    }

    /// `L⊗…⊗L⊗x⊗R⊗…⊗R` on `V⊗k` with `x` in slot `position` (1-based).
    ///
    /// The Koszul sign is `(−1)^{p(x)(p(w_1)+…+p(w_{position−1}))}`.
    pub fn place_operator(
        x: &SuperMatrix,
        position: usize,
        k: usize,
        left_diag: &SuperMatrix,
        right_diag: &SuperMatrix,
    ) -> Result<SuperMatrix> {
        if position == 0 || position > k {
            return Err(Error::ShapeError(format!("position {position} outside 1..={k}")));
        }
        let d = x.rows;
        if x.cols != d || left_diag.dims() != (d, d) || right_diag.dims() != (d, d) || d % 2 != 0 {
            return Err(Error::ShapeError("place_operator needs square operators on V".into()));
        }
        let n = d / 2;
        let mut acc: Option<SuperMatrix> = None;
        for slot in 1..=k {
            let f = match slot.cmp(&position) {
                std::cmp::Ordering::Less => left_diag,
                std::cmp::Ordering::Equal => x,
                std::cmp::Ordering::Greater => right_diag,
            };
            acc = Some(match acc {
                None => f.clone(),
                Some(a) => {
                    let pars = TensorBasis::new(n, slot - 1).parities();
                    a.kron(f, &pars)
                }
            });
        }
        Ok(acc.unwrap())
    }

    /// Nonzero entries as `(row tuple, col tuple, value)` in canonical order.
    pub fn to_json(&self, basis: TensorBasis) -> MatrixJson {
        MatrixJson {
            n: basis.n,
            k: basis.k,
            parity: self.parity,
            entries: self
                .entries_row_major()
                .into_iter()
                .map(|(r, c, v)| (basis.tuple(r), basis.tuple(c), v.to_string()))
                .collect(),
        }
    }

    pub fn from_json(j: &MatrixJson) -> Result<SuperMatrix> {
        let basis = TensorBasis::new(j.n, j.k);
        let d = basis.dim();
        let mut es = Vec::with_capacity(j.entries.len());
        for (r, c, v) in &j.entries {
            es.push((basis.index(r)?, basis.index(c)?, v.parse()?));
        }
        Ok(SuperMatrix::from_entries(d, d, j.parity, es))
    }
}

/// JSON form of a square operator on `V⊗k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub n: usize,
    pub k: usize,
    pub parity: u8,
    pub entries: Vec<(Vec<i32>, Vec<i32>, String)>,
}
