//! The centralizer side: `𝔠`, `𝔱`, Hecke elements, q-Young symmetrizers and
//! the contraction vectors `y_τ 𝖼_{r̃,s̃} w_{τ,r̃,s̃}`.

use crate::error::{Error, Result};
use crate::qrat::RatFunc;
use crate::superlinalg::{parity, SuperMatrix, SuperVector, TensorBasis};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

fn sign(odd: bool) -> i64 {
    if odd {
        -1
    } else {
        1
    }
}

/// Operator `Σ c · E_ab ⊗ E_cd` on `V⊗2`, acting with the Koszul sign
/// `(−1)^{(p(c)+p(d)) p(x)}` on `u_x ⊗ u_y`.
fn two_site(n: usize, terms: &[(RatFunc, (i32, i32), (i32, i32))]) -> SuperMatrix {
    let b = TensorBasis::new(n, 2);
    let mut es = Vec::with_capacity(terms.len());
    for (c, (a, bb), (cc, d)) in terms {
        let x = *bb;
        let y = *d;
        let s = sign((parity(*cc) ^ parity(*d)) & parity(x) == 1);
        let col = b.index(&[x, y]).unwrap();
        let row = b.index(&[*a, *cc]).unwrap();
        es.push((row, col, c * &RatFunc::from_int(s)));
    }
    SuperMatrix::from_entries(b.dim(), b.dim(), 0, es)
}

/// `𝔠 = Σ (−1)^{p(a)p(b)} E_ab ⊗ E_{−a,−b}`.
pub fn c_op(n: usize) -> SuperMatrix {
    let labels = TensorBasis::new(n, 1).labels();
    let mut terms = Vec::new();
    for &a in &labels {
        for &b in &labels {
            terms.push((RatFunc::from_int(sign(parity(a) & parity(b) == 1)), (a, b), (-a, -b)));
        }
    }
    two_site(n, &terms)
}

/// The braiding `𝔱` on `V⊗2`.
pub fn t_op(n: usize) -> SuperMatrix {
    let labels = TensorBasis::new(n, 1).labels();
    let q = RatFunc::q();
    let qi = RatFunc::q_pow(-1);
    let one = RatFunc::one();
    let eps = RatFunc::epsilon();
    let mut terms = Vec::new();
    for &i in &labels {
        for &j in &labels {
            terms.push((RatFunc::from_int(sign(parity(j) == 1)), (i, j), (j, i)));
        }
    }
    for i in 1..=n as i32 {
        terms.push((&q - &one, (-i, i), (i, -i)));
        terms.push((&q - &one, (i, i), (i, i)));
        terms.push((&one - &qi, (i, -i), (-i, i)));
        terms.push((&one - &qi, (-i, -i), (-i, -i)));
        terms.push((eps.clone(), (i, i), (-i, -i)));
    }
    for &i in &labels {
        for &j in &labels {
            if j.abs() < i.abs() {
                terms.push((eps.clone(), (j, j), (i, i)));
                let s = RatFunc::from_int(sign(parity(i) & parity(j) == 1));
                terms.push((&eps * &s, (j, i), (-j, -i)));
            }
        }
    }
    two_site(n, &terms)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BrauerOp {
    T,
    C,
}

/// The operator on slots `(i, i+1)` of `V⊗k`, identity elsewhere.
pub fn place_brauer(op: BrauerOp, i: usize, n: usize, k: usize) -> Result<SuperMatrix> {
    if i == 0 || i >= k {
        return Err(Error::ShapeError(format!("slot {i} outside 1..{k}")));
    }
    let base = match op {
        BrauerOp::T => t_op(n),
        BrauerOp::C => c_op(n),
    };
    Ok(embed_two_site(&base, i, n, k))
}

fn embed_two_site(base: &SuperMatrix, i: usize, n: usize, k: usize) -> SuperMatrix {
    let left = TensorBasis::new(n, i - 1);
    let mut m = SuperMatrix::identity(left.dim()).kron(base, &left.parities());
    let right = TensorBasis::new(n, k - i - 1);
    if right.k > 0 {
        m = m.kron(&SuperMatrix::identity(right.dim()), &TensorBasis::new(n, i + 1).parities());
    }
    m
}

/// Permutation of `{1,…,k}` in one-line notation. Composition is of functions:
/// `(a ∘ b)(x) = a(b(x))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(pub Vec<usize>);

impl Permutation {
    pub fn identity(k: usize) -> Self {
        Self((1..=k).collect())
    }

    /// The adjacent transposition `s_i = (i, i+1)`.
    pub fn simple(i: usize, k: usize) -> Self {
        let mut p = Self::identity(k);
        p.0.swap(i - 1, i);
        p
    }

    pub fn transposition(a: usize, b: usize, k: usize) -> Self {
        let mut p = Self::identity(k);
        p.0.swap(a - 1, b - 1);
        p
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x - 1]
    }

    pub fn compose(&self, o: &Permutation) -> Permutation {
        Permutation((1..=o.k()).map(|x| self.apply(o.apply(x))).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut r = vec![0; self.k()];
        for (i, x) in self.0.iter().enumerate() {
            r[x - 1] = i + 1;
        }
        Permutation(r)
    }

    pub fn length(&self) -> usize {
        let a = &self.0;
        (0..a.len()).map(|i| (i + 1..a.len()).filter(|&j| a[i] > a[j]).count()).sum()
    }

    /// Word `[i_1,…,i_ℓ]` with `σ = s_{i_1} ∘ ⋯ ∘ s_{i_ℓ}`, found by bubble sort.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut a = self.0.clone();
        let mut word = Vec::new();
        'outer: loop {
            for i in 0..a.len().saturating_sub(1) {
                if a[i] > a[i + 1] {
                    a.swap(i, i + 1);
                    word.push(i + 1);
                    continue 'outer;
                }
            }
            break;
        }
        word.reverse();
        word
    }

    pub fn from_word(word: &[usize], k: usize) -> Permutation {
        word.iter().fold(Self::identity(k), |acc, &i| acc.compose(&Self::simple(i, k)))
    }

    pub fn all(k: usize) -> Vec<Permutation> {
        fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if prefix.len() == used.len() {
                out.push(Permutation(prefix.clone()));
                return;
            }
            for x in 0..used.len() {
                if !used[x] {
                    used[x] = true;
                    prefix.push(x + 1);
                    go(prefix, used, out);
                    prefix.pop();
                    used[x] = false;
                }
            }
        }
        let mut out = Vec::new();
        go(&mut Vec::new(), &mut vec![false; k], &mut out);
        out
    }
}

/// How `σ_{r,s} = (1,r)(2,s)` is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum Convention {
    /// As functions: `(2,s)` acts first.
    #[default]
    #[serde(rename = "rtl")]
    RightToLeft,
    #[serde(rename = "ltr")]
    LeftToRight,
}

impl std::str::FromStr for Convention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rtl" => Ok(Convention::RightToLeft),
            "ltr" => Ok(Convention::LeftToRight),
            _ => Err(Error::Parse(format!("unknown convention {s:?}, expected rtl or ltr"))),
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::RightToLeft => "rtl",
            Convention::LeftToRight => "ltr",
        })
    }
}

pub fn sigma_rs(r: usize, s: usize, k: usize, conv: Convention) -> Permutation {
    let a = Permutation::transposition(1, r, k);
    let b = Permutation::transposition(2, s, k);
    match conv {
        Convention::RightToLeft => a.compose(&b),
        Convention::LeftToRight => b.compose(&a),
    }
}

/// `𝔱_i`, `𝔠_i` on `V⊗k` with Hecke products.
#[derive(Clone, Debug)]
pub struct Brauer {
    pub n: usize,
    pub k: usize,
    pub basis: TensorBasis,
    pub t: Vec<SuperMatrix>,
    pub c: Vec<SuperMatrix>,
    pub id: SuperMatrix,
}

impl Brauer {
    pub fn new(n: usize, k: usize) -> Self {
        let (tb, cb) = (t_op(n), c_op(n));
        let basis = TensorBasis::new(n, k);
        Self {
            n,
            k,
            basis,
            t: (1..k).map(|i| embed_two_site(&tb, i, n, k)).collect(),
            c: (1..k).map(|i| embed_two_site(&cb, i, n, k)).collect(),
            id: SuperMatrix::identity(basis.dim()),
        }
    }

    /// `h(s_i)^{-1} = 𝔱_i − (q − q⁻¹)`.
    pub fn t_inverse(&self, i: usize) -> SuperMatrix {
        self.t[i - 1].add_scaled(&self.id, &-&RatFunc::epsilon()).unwrap()
    }

    pub fn hecke_word(&self, word: &[usize]) -> SuperMatrix {
        word.iter().rev().fold(self.id.clone(), |acc, &i| self.t[i - 1].matmul(&acc).unwrap())
    }

    pub fn hecke(&self, sigma: &Permutation) -> SuperMatrix {
        self.hecke_word(&sigma.reduced_word())
    }

    pub fn hecke_inverse(&self, sigma: &Permutation) -> SuperMatrix {
        sigma.reduced_word().iter().fold(self.id.clone(), |acc, &i| self.t_inverse(i).matmul(&acc).unwrap())
    }

    pub fn c_rs(&self, r: usize, s: usize, conv: Convention) -> Result<SuperMatrix> {
        if !(1 <= r && r < s && s <= self.k) {
            return Err(Error::PatternError(format!("need 1 ≤ r < s ≤ {}, got ({r},{s})", self.k)));
        }
        let sg = sigma_rs(r, s, self.k, conv);
        self.hecke(&sg).matmul(&self.c[0])?.matmul(&self.hecke_inverse(&sg))
    }

    pub fn c_pattern(&self, p: &ContractionPattern, conv: Convention) -> Result<SuperMatrix> {
        p.validate(self.k)?;
        let mut acc = self.id.clone();
        for &(r, s) in &p.pairs {
            acc = acc.matmul(&self.c_rs(r, s, conv)?)?;
        }
        Ok(acc)
    }

    pub fn young_symmetrizer(&self, t: &StandardTableau) -> Result<Symmetrizer> {
        young_symmetrizer(self, t)
    }

    /// `y_τ 𝖼_{r̃,s̃} w_{τ,r̃,s̃}`.
    pub fn maximal_candidate(&self, tau: &StandardTableau, p: &ContractionPattern, conv: Convention) -> Result<SuperVector> {
        p.validate(self.k)?;
        let used: BTreeSet<usize> = p.pairs.iter().flat_map(|(r, s)| [*r, *s]).collect();
        let comp: BTreeSet<usize> = (1..=self.k).filter(|x| !used.contains(x)).collect();
        if tau.entries() != comp {
            return Err(Error::PatternError("tableau entries must be the complement of the pattern".into()));
        }
        if tau.rows.len() > self.n {
            return Err(Error::SymmetrizerDegenerate(format!("tableau has {} rows but n = {}", tau.rows.len(), self.n)));
        }
        let mut w = vec![0i32; self.k];
        for &(r, s) in &p.pairs {
            w[r - 1] = 1;
            w[s - 1] = -1;
        }
        for (row, entries) in tau.rows.iter().enumerate() {
            for &e in entries {
                w[e - 1] = row as i32 + 1;
            }
        }
        let w = SuperVector::from_tuple(self.basis, &w)?;
        let y = self.young_symmetrizer(tau)?.y;
        y.matmul(&self.c_pattern(p, conv)?)?.apply(&w)
    }

    /// Every `(pattern, tableau)` allowed by the theorem for this `n`, `k`.
    pub fn candidate_labels(&self) -> Vec<(ContractionPattern, StandardTableau)> {
        let mut out = Vec::new();
        for p in ContractionPattern::all(self.k) {
            let used: BTreeSet<usize> = p.pairs.iter().flat_map(|(r, s)| [*r, *s]).collect();
            let comp: Vec<usize> = (1..=self.k).filter(|x| !used.contains(x)).collect();
            for t in StandardTableau::all_on(&comp) {
                if t.rows.len() <= self.n {
                    out.push((p.clone(), t));
                }
            }
        }
        out
    }
}

/// Standard tableau with entries drawn from a subset of `{1,…,k}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct StandardTableau {
    pub rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let t = Self { rows };
        t.validate()?;
        Ok(t)
    }

    pub fn validate(&self) -> Result<()> {
        let err = |m: &str| Err(Error::ShapeError(format!("tableau {self}: {m}")));
        if self.rows.iter().any(Vec::is_empty) {
            return err("empty row");
        }
        if self.rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return err("row lengths must be non-increasing");
        }
        if self.rows.iter().any(|r| r.windows(2).any(|w| w[0] >= w[1])) {
            return err("rows must increase");
        }
        for w in self.rows.windows(2) {
            if w[1].iter().zip(&w[0]).any(|(lo, hi)| lo <= hi) {
                return err("columns must increase");
            }
        }
        let all: Vec<usize> = self.rows.iter().flatten().copied().collect();
        if all.contains(&0) || all.iter().collect::<BTreeSet<_>>().len() != all.len() {
            return err("entries must be distinct positive integers");
        }
        Ok(())
    }

    pub fn entries(&self) -> BTreeSet<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    /// All standard tableaux whose entries are exactly `entries`.
    pub fn all_on(entries: &[usize]) -> Vec<StandardTableau> {
        let mut sorted = entries.to_vec();
        sorted.sort_unstable();
        let mut out = Vec::new();
        fn go(rest: &[usize], rows: &mut Vec<Vec<usize>>, out: &mut Vec<StandardTableau>) {
            let Some((&x, tail)) = rest.split_first() else {
                out.push(StandardTableau { rows: rows.clone() });
                return;
            };
            for r in 0..=rows.len() {
                let ok = r == rows.len() || r == 0 || rows[r - 1].len() > rows[r].len();
                if !ok {
                    continue;
                }
                if r == rows.len() {
                    rows.push(vec![x]);
                    go(tail, rows, out);
                    rows.pop();
                } else {
                    rows[r].push(x);
                    go(tail, rows, out);
                    rows[r].pop();
                }
            }
        }
        go(&sorted, &mut Vec::new(), &mut out);
        out.sort_by(|a, b| b.shape().cmp(&a.shape()).then(a.rows.cmp(&b.rows)));
        out
    }

    /// Short label such as `12,3`.
    pub fn label(&self) -> String {
        self.rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<String>())
            .collect::<Vec<_>>()
            .join(",")
    }

    fn row_of(&self, x: usize) -> Option<usize> {
        self.rows.iter().position(|r| r.contains(&x))
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", serde_json::to_string(&self.rows).unwrap())
    }
}

/// A set of disjoint pairs `(r_m, s_m)`, `r_m < s_m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(transparent)]
pub struct ContractionPattern {
    pub pairs: Vec<(usize, usize)>,
}

impl ContractionPattern {
    pub fn new(pairs: Vec<(usize, usize)>, k: usize) -> Result<Self> {
        let p = Self { pairs };
        p.validate(k)?;
        Ok(p)
    }

    pub fn validate(&self, k: usize) -> Result<()> {
        let mut seen = BTreeSet::new();
        for &(r, s) in &self.pairs {
            if !(1 <= r && r < s && s <= k) {
                return Err(Error::PatternError(format!("pair ({r},{s}) needs 1 ≤ r < s ≤ {k}")));
            }
            if !seen.insert(r) || !seen.insert(s) {
                return Err(Error::PatternError(format!("index reused in pattern {:?}", self.pairs)));
            }
        }
        Ok(())
    }

    /// All patterns with `0 ≤ j ≤ k/2` pairs, pairs listed by increasing `r`.
    pub fn all(k: usize) -> Vec<ContractionPattern> {
        fn go(free: &[usize], acc: &mut Vec<(usize, usize)>, out: &mut Vec<ContractionPattern>) {
            out.push(ContractionPattern { pairs: acc.clone() });
            let last_r = acc.last().map(|p| p.0).unwrap_or(0);
            for (a, &r) in free.iter().enumerate() {
                if r <= last_r {
                    continue;
                }
                for &s in &free[a + 1..] {
                    let rest: Vec<usize> = free.iter().copied().filter(|x| *x != r && *x != s).collect();
                    acc.push((r, s));
                    go(&rest, acc, out);
                    acc.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(&(1..=k).collect::<Vec<_>>(), &mut Vec::new(), &mut out);
        out.sort_by(|a, b| a.pairs.len().cmp(&b.pairs.len()).then(a.pairs.cmp(&b.pairs)));
        out
    }
}

#[derive(Clone, Debug)]
pub struct Symmetrizer {
    pub x: SuperMatrix,
    pub xi: RatFunc,
    pub y: SuperMatrix,
    pub e_plus: SuperMatrix,
    pub e_minus: SuperMatrix,
    pub w_plus: Vec<Permutation>,
    pub w_minus: Vec<Permutation>,
}

/// Tableaux `T_+` (rows filled in order) and `T_−` (columns filled in order)
/// of the given shape, using the sorted entries.
pub fn canonical_tableaux(shape: &[usize], entries: &[usize]) -> (StandardTableau, StandardTableau) {
    let mut e = entries.to_vec();
    e.sort_unstable();
    let mut it = e.iter();
    let plus = shape.iter().map(|&l| (0..l).map(|_| *it.next().unwrap()).collect()).collect();
    let mut minus: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l]).collect();
    let mut it = e.iter();
    for j in 0..shape.first().copied().unwrap_or(0) {
        for (i, &l) in shape.iter().enumerate() {
            if l > j {
                minus[i][j] = *it.next().unwrap();
            }
        }
    }
    (StandardTableau { rows: plus }, StandardTableau { rows: minus })
}

/// Permutation of `{1,…,k}` sending each entry of `from` to the entry of `to` in the same box.
fn perm_between(from: &StandardTableau, to: &StandardTableau, k: usize) -> Permutation {
    let mut p = Permutation::identity(k);
    for (r0, r1) in from.rows.iter().zip(&to.rows) {
        for (x, y) in r0.iter().zip(r1) {
            p.0[x - 1] = *y;
        }
    }
    p
}

/// Permutations of `{1,…,k}` preserving each block and fixing everything outside.
fn block_stabilizer(blocks: &[Vec<usize>], k: usize) -> Vec<Permutation> {
    let block_of = |x: usize| blocks.iter().position(|b| b.contains(&x));
    Permutation::all(k)
        .into_iter()
        .filter(|p| (1..=k).all(|x| match block_of(x) { Some(b) => blocks[b].contains(&p.apply(x)), None => p.apply(x) == x }))
        .collect()
}

pub fn young_symmetrizer(br: &Brauer, t: &StandardTableau) -> Result<Symmetrizer> {
    t.validate()?;
    let k = br.k;
    if t.entries().iter().any(|&x| x > k) {
        return Err(Error::ShapeError(format!("tableau {t} has entries beyond k = {k}")));
    }
    let shape = t.shape();
    let entries: Vec<usize> = t.entries().into_iter().collect();
    let (tp, tm) = canonical_tableaux(&shape, &entries);
    let rows = tp.rows.clone();
    let cols: Vec<Vec<usize>> = (0..shape.first().copied().unwrap_or(0))
        .map(|j| tm.rows.iter().filter_map(|r| r.get(j).copied()).collect())
        .collect();
    let w_plus = block_stabilizer(&rows, k);
    let w_minus = block_stabilizer(&cols, k);
    let d = br.basis.dim();
    let mut e_plus = SuperMatrix::zero(d, d, 0);
    for p in &w_plus {
        e_plus = e_plus.add_scaled(&br.hecke(p), &RatFunc::q_pow(p.length() as i32))?;
    }
    let mut e_minus = SuperMatrix::zero(d, d, 0);
    let mq_inv = RatFunc::from_int(-1).div(&RatFunc::q()).unwrap();
    for p in &w_minus {
        e_minus = e_minus.add_scaled(&br.hecke(p), &mq_inv.pow(p.length() as i32)?)?;
    }
    let sp = perm_between(&tp, t, k);
    let sm = perm_between(&tm, t, k);
    let minus = br.hecke(&sm).matmul(&e_minus)?.matmul(&br.hecke_inverse(&sm))?;
    let plus = br.hecke(&sp).matmul(&e_plus)?.matmul(&br.hecke_inverse(&sp))?;
    let x = minus.matmul(&plus)?;
    let xi = extract_xi(&x)?;
    let y = x.scale(&xi.inv()?);
    Ok(Symmetrizer { x, xi, y, e_plus, e_minus, w_plus, w_minus })
}

/// `ξ` with `x² = ξ x`, read off one entry and then checked globally.
pub fn extract_xi(x: &SuperMatrix) -> Result<RatFunc> {
    if x.is_zero() {
        return Err(Error::SymmetrizerDegenerate("x_T vanishes".into()));
    }
    let x2 = x.matmul(x)?;
    let xi = x
        .entries()
        .find_map(|(r, c, v)| {
            let w = x2.get(r, c);
            (!w.is_zero()).then(|| w.div(v).unwrap())
        })
        .ok_or_else(|| Error::SymmetrizerDegenerate("x_T is nilpotent".into()))?;
    if !x2.sub(&x.scale(&xi))?.is_zero() {
        return Err(Error::SymmetrizerDegenerate("x_T² is not a scalar multiple of x_T".into()));
    }
    Ok(xi)
}

impl StandardTableau {
    /// Row (1-based) containing `x`.
    pub fn row_index(&self, x: usize) -> Option<usize> {
        self.row_of(x).map(|r| r + 1)
    }
}
