//! The action of `U_q(p_n)` on `V⊗k` through the comultiplication.

use crate::error::Result;
use crate::natrep::{dj_matrix, t_matrix, GeneratorLabel as G, GeneratorLabel};
use crate::qrat::RatFunc;
use crate::superlinalg::{parity, SuperMatrix, TensorBasis};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// An element of the weight lattice `P = ⊕ Z ε_i`.
pub type Weight = Vec<i32>;

pub fn alpha(n: usize, i: usize) -> Weight {
    let mut w = vec![0; n];
    w[i - 1] = 1;
    w[i] = -1;
    w
}

pub fn beta(n: usize, i: usize) -> Weight {
    let mut w = vec![0; n];
    w[i - 1] = 2;
    w
}

pub fn gamma(n: usize, i: usize) -> Weight {
    let mut w = vec![0; n];
    w[i - 1] = 1;
    w[i] = 1;
    w
}

/// `μ(h)` for a coweight `h`.
pub fn pairing(mu: &[i32], h: &[i32]) -> i32 {
    mu.iter().zip(h).map(|(a, b)| a * b).sum()
}

/// `μ ≤ λ`, i.e. `λ − μ` lies in the monoid spanned by the `α_i`, `β_i`, `γ_i`.
///
/// Since `γ_i = α_i + β_{i+1}`, membership reduces to the partial sums of
/// `λ − μ` being nonnegative with an even total.
pub fn weight_leq(mu: &[i32], lambda: &[i32]) -> bool {
    let mut s = 0;
    for (l, m) in lambda.iter().zip(mu) {
        s += l - m;
        if s < 0 {
            return false;
        }
    }
    s % 2 == 0
}

pub fn is_dominant(lambda: &[i32]) -> bool {
    lambda.windows(2).all(|w| w[0] >= w[1])
}

/// Which printed form of `Δ(f_i)` to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ComultReading {
    /// Third term `(ε/2) F̄_i ⊗ ē_i`.
    Corrected,
    /// Third term `(ε/2) F̄_i ⊗ ē_{i+1}`, as printed.
    Printed,
}

/// Slot on which the iterated coproduct expands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoproductRoute {
    /// `(Δ ⊗ id)`: `Δ^{(k)}(g) = Σ Δ^{(k−1)}(a) ⊗ b`.
    Left,
    /// `(id ⊗ Δ)`: `Δ^{(k)}(g) = Σ a ⊗ Δ^{(k−1)}(b)`.
    Right,
}

/// `Δ(g) = Σ c · a ⊗ b`.
pub fn coproduct_terms(n: usize, g: &GeneratorLabel, reading: ComultReading) -> Vec<(RatFunc, GeneratorLabel, GeneratorLabel)> {
    let one = RatFunc::one;
    let half_eps = RatFunc::epsilon().scale_rational(&num_rational::BigRational::new(1.into(), 2.into()));
    let k = |i: usize| G::k(i, n);
    match g {
        G::QH(_) => vec![(one(), g.clone(), g.clone())],
        G::E(i) => vec![
            (one(), k(*i), G::E(*i)),
            (one(), G::E(*i), k(i + 1)),
            (-&half_eps, G::EBar(*i), G::FFBar(i + 1)),
        ],
        G::F(i) => {
            let mut v = vec![(one(), k(*i), G::F(*i)), (one(), G::F(*i), k(i + 1))];
            match reading {
                ComultReading::Corrected => v.push((half_eps, G::FFBar(*i), G::EBar(*i))),
                ComultReading::Printed if i + 1 < n => v.push((half_eps, G::FFBar(*i), G::EBar(i + 1))),
                ComultReading::Printed => {}
            }
            v
        }
        G::EBar(i) => vec![(one(), k(*i), G::EBar(*i)), (one(), G::EBar(*i), k(i + 1))],
        G::FBar(i) => vec![
            (one(), k(*i), G::FBar(*i)),
            (one(), G::FBar(*i), k(i + 1)),
            (-&half_eps, G::FFBar(*i), G::E(*i)),
            (half_eps, G::F(*i), G::FFBar(i + 1)),
        ],
        G::FFBar(i) => vec![(one(), k(*i), G::FFBar(*i)), (one(), G::FFBar(*i), k(*i))],
        G::T(..) => panic!("t_ij expands through tij_coproduct_action"),
    }
}

/// Diagonal action of `q^h` on `V⊗k`.
pub fn qh_action(basis: TensorBasis, h: &[i32]) -> SuperMatrix {
    SuperMatrix::diagonal((0..basis.dim()).map(|i| RatFunc::q_pow(pairing(&basis.weight(i), h))).collect())
}

fn dj_closure(n: usize, gens: &[GeneratorLabel], reading: ComultReading) -> Vec<GeneratorLabel> {
    let mut all: Vec<GeneratorLabel> = gens.to_vec();
    let mut i = 0;
    while i < all.len() {
        if !matches!(all[i], G::QH(_)) {
            for (_, a, b) in coproduct_terms(n, &all[i].clone(), reading) {
                for x in [a, b] {
                    if !all.contains(&x) {
                        all.push(x);
                    }
                }
            }
        }
        i += 1;
    }
    all
}

/// Actions of the given Drinfeld–Jimbo generators on `V⊗k`.
pub fn coproduct_actions(
    n: usize,
    k: usize,
    gens: &[GeneratorLabel],
    reading: ComultReading,
    route: CoproductRoute,
) -> Result<BTreeMap<GeneratorLabel, SuperMatrix>> {
    for g in gens {
        g.validate(n)?;
    }
    let closure = dj_closure(n, gens, reading);
    let mut base = BTreeMap::new();
    for g in &closure {
        base.insert(g.clone(), dj_matrix(n, g)?);
    }
    let vpar = TensorBasis::new(n, 1).parities();
    let mut level = base.clone();
    for m in 2..=k {
        let left_par = TensorBasis::new(n, m - 1).parities();
        let mut next = BTreeMap::new();
        for g in &closure {
            let mat = if let G::QH(h) = g {
                qh_action(TensorBasis::new(n, m), h)
            } else {
                let d = TensorBasis::new(n, m).dim();
                let mut acc = SuperMatrix::zero(d, d, g.parity());
                for (c, a, b) in coproduct_terms(n, g, reading) {
                    let term = match route {
                        CoproductRoute::Left => level[&a].kron(&base[&b], &left_par),
                        CoproductRoute::Right => base[&a].kron(&level[&b], &vpar),
                    };
                    acc = acc.add_scaled(&term, &c)?;
                }
                acc
            };
            next.insert(g.clone(), mat);
        }
        level = next;
    }
    Ok(gens.iter().map(|g| (g.clone(), level[g].clone())).collect())
}

/// Action of one Drinfeld–Jimbo generator on `V⊗k` (corrected `Δ(f_i)`, left route).
pub fn coproduct_action(n: usize, k: usize, g: &GeneratorLabel) -> Result<SuperMatrix> {
    let mut m = coproduct_actions(n, k, std::slice::from_ref(g), ComultReading::Corrected, CoproductRoute::Left)?;
    Ok(m.remove(g).unwrap())
}

fn t_sign(i: i32, m: i32, j: i32) -> i32 {
    if (parity(i) ^ parity(m)) & (parity(m) ^ parity(j)) == 1 {
        -1
    } else {
        1
    }
}

/// Actions of all `t_ij` on `V⊗k` from `Δ(t_ij) = Σ_m ± t_im ⊗ t_mj`.
pub fn tij_coproduct_actions(n: usize, k: usize) -> Result<BTreeMap<(i32, i32), SuperMatrix>> {
    let labels = TensorBasis::new(n, 1).labels();
    let mut base = BTreeMap::new();
    for &i in &labels {
        for &j in &labels {
            base.insert((i, j), t_matrix(n, i, j)?);
        }
    }
    let mut level = base.clone();
    for m in 2..=k {
        let left_par = TensorBasis::new(n, m - 1).parities();
        let d = TensorBasis::new(n, m).dim();
        let mut next = BTreeMap::new();
        for &i in &labels {
            for &j in &labels {
                let mut acc = SuperMatrix::zero(d, d, parity(i) ^ parity(j));
                for &mid in &labels {
                    let a: &SuperMatrix = &level[&(i, mid)];
                    let b: &SuperMatrix = &base[&(mid, j)];
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = acc.add_scaled(&a.kron(b, &left_par), &RatFunc::from_int(t_sign(i, mid, j).into()))?;
                }
                next.insert((i, j), acc);
            }
        }
        level = next;
    }
    Ok(level)
}

pub fn tij_coproduct_action(n: usize, k: usize, i: i32, j: i32) -> Result<SuperMatrix> {
    let mut all = tij_coproduct_actions(n, k)?;
    all.remove(&(i, j)).ok_or_else(|| crate::Error::ShapeError(format!("t[{i},{j}] out of range")))
}

/// `(i, j, c)` such that the generator equals `c · t_ij`.
pub fn dictionary(g: &GeneratorLabel) -> Option<(i32, i32, RatFunc)> {
    let inv_eps = RatFunc::epsilon().inv().unwrap();
    let s = |i: usize| i as i32;
    Some(match g {
        G::E(i) => (-s(*i), -s(*i) - 1, -&inv_eps),
        G::F(i) => (s(*i), s(*i) + 1, inv_eps),
        G::EBar(i) => (-s(*i), s(*i) + 1, inv_eps),
        G::FBar(i) => (s(*i), -s(*i) - 1, -&inv_eps),
        G::FFBar(i) => (s(*i), -s(*i), &RatFunc::from_int(-2) * &inv_eps),
        G::QH(h) => {
            let nz: Vec<usize> = h.iter().enumerate().filter(|(_, x)| **x != 0).map(|(i, _)| i).collect();
            match nz[..] {
                [i] if h[i] == 1 => (s(i + 1), s(i + 1), RatFunc::one()),
                _ => return None,
            }
        }
        G::T(i, j) => (*i, *j, RatFunc::one()),
    })
}

/// One weight with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterEntry {
    pub weight: Weight,
    pub multiplicity: usize,
}

/// `V⊗k` with an eagerly built table of generator actions.
#[derive(Clone, Debug)]
pub struct TensorModule {
    pub n: usize,
    pub k: usize,
    pub basis: TensorBasis,
    actions: BTreeMap<GeneratorLabel, SuperMatrix>,
    weights: BTreeMap<Weight, Vec<usize>>,
}

impl TensorModule {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        Self::with_reading(n, k, ComultReading::Corrected)
    }

    pub fn with_reading(n: usize, k: usize, reading: ComultReading) -> Result<Self> {
        if n < 1 || k < 1 {
            return Err(crate::Error::ShapeError(format!("need n ≥ 1 and k ≥ 1, got n = {n}, k = {k}")));
        }
        let gens = GeneratorLabel::dj_generators(n);
        let actions = coproduct_actions(n, k, &gens, reading, CoproductRoute::Left)?;
        let basis = TensorBasis::new(n, k);
        let mut weights: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
        for i in 0..basis.dim() {
            weights.entry(basis.weight(i)).or_default().push(i);
        }
        Ok(Self { n, k, basis, actions, weights })
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    /// Action of a generator; `q^h` for any `h` is built on demand.
    pub fn action(&self, g: &GeneratorLabel) -> Result<SuperMatrix> {
        g.validate(self.n)?;
        if let Some(m) = self.actions.get(g) {
            return Ok(m.clone());
        }
        match g {
            G::QH(h) => Ok(qh_action(self.basis, h)),
            G::T(i, j) => tij_coproduct_action(self.n, self.k, *i, *j),
            _ => unreachable!("every Drinfeld–Jimbo generator is tabulated"),
        }
    }

    pub fn action_ref(&self, g: &GeneratorLabel) -> Option<&SuperMatrix> {
        self.actions.get(g)
    }

    pub fn generators(&self) -> impl Iterator<Item = (&GeneratorLabel, &SuperMatrix)> {
        self.actions.iter()
    }

    pub fn raising(&self) -> Vec<&SuperMatrix> {
        GeneratorLabel::raising(self.n).iter().map(|g| &self.actions[g]).collect()
    }

    pub fn weight_spaces(&self) -> &BTreeMap<Weight, Vec<usize>> {
        &self.weights
    }

    pub fn character(&self) -> Vec<CharacterEntry> {
        self.weights.iter().map(|(w, v)| CharacterEntry { weight: w.clone(), multiplicity: v.len() }).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superlinalg::SuperVector;

    #[test]
    fn weight_order_examples() {
        assert!(weight_leq(&[1, 0], &[1, 0]));
        assert!(weight_leq(&[0, 0], &[1, 1]));
        assert!(!weight_leq(&[1, 1], &[0, 0]));
        assert!(!weight_leq(&[0, 0], &[1, 0]));
        assert!(is_dominant(&[1, 0, 0]));
        assert!(!is_dominant(&[0, 1, 0]));
    }

    /// Brute-force cone membership by enumerating small multisets of positive roots.
    fn leq_bruteforce(mu: &[i32], lambda: &[i32]) -> bool {
        let n = mu.len();
        let mut roots = Vec::new();
        for i in 1..n {
            roots.push(alpha(n, i));
            roots.push(gamma(n, i));
        }
        for j in 1..=n {
            roots.push(beta(n, j));
        }
        let target: Vec<i32> = lambda.iter().zip(mu).map(|(a, b)| a - b).collect();
        fn go(roots: &[Vec<i32>], idx: usize, rest: Vec<i32>, budget: i32) -> bool {
            if rest.iter().all(|x| *x == 0) {
                return true;
            }
            if idx == roots.len() || budget == 0 {
                return false;
            }
            for c in 0..=budget {
                let r: Vec<i32> = rest.iter().zip(&roots[idx]).map(|(x, y)| x - c * y).collect();
                if go(roots, idx + 1, r, budget - c) {
                    return true;
                }
            }
            false
        }
        go(&roots, 0, target, 8)
    }

    #[test]
    fn weight_leq_matches_enumeration() {
        for a in -2..=2 {
            for b in -2..=2 {
                for c in -1..=1 {
                    let lam = [a, b, c];
                    assert_eq!(weight_leq(&[0, 0, 0], &lam), leq_bruteforce(&[0, 0, 0], &lam), "{lam:?}");
                }
            }
        }
    }

    #[test]
    fn characters() {
        let m = TensorModule::new(2, 1).unwrap();
        let ch = m.character();
        assert_eq!(ch.len(), 4);
        assert!(ch.iter().all(|e| e.multiplicity == 1));
        let m = TensorModule::new(2, 2).unwrap();
        let ch = m.character();
        assert_eq!(ch.iter().find(|e| e.weight == vec![0, 0]).unwrap().multiplicity, 4);
        assert_eq!(ch.iter().map(|e| e.multiplicity).sum::<usize>(), 16);
    }

    #[test]
    fn qh_acts_by_weight() {
        let m = TensorModule::new(3, 2).unwrap();
        for (w, idxs) in m.weight_spaces() {
            for i in 1..=3 {
                let k = m.action(&G::k(i, 3)).unwrap();
                for &x in idxs {
                    let v = SuperVector::basis_vector(m.basis, x);
                    assert_eq!(k.apply(&v).unwrap(), v.scale(&RatFunc::q_pow(w[i - 1])));
                }
            }
        }
    }

    #[test]
    fn ebar_is_the_explicit_signed_sum() {
        let (n, k) = (2, 3);
        let m = TensorModule::new(n, k).unwrap();
        let kq = dj_matrix(n, &G::k(1, n)).unwrap();
        let kq1 = dj_matrix(n, &G::k(2, n)).unwrap();
        let eb = dj_matrix(n, &G::EBar(1)).unwrap();
        let mut acc = SuperMatrix::zero(m.dim(), m.dim(), 1);
        for pos in 1..=k {
            acc = acc.add(&SuperMatrix::place_operator(&eb, pos, k, &kq, &kq1).unwrap()).unwrap();
        }
        assert_eq!(m.action(&G::EBar(1)).unwrap(), acc);
    }

    #[test]
    fn e_on_two_factors() {
        let n = 2;
        let m = TensorModule::new(n, 2).unwrap();
        let id = SuperMatrix::identity(4);
        let b = |g: &GeneratorLabel| dj_matrix(n, g).unwrap();
        let k1 = b(&G::k(1, n));
        let k2 = b(&G::k(2, n));
        let place = |x: &SuperMatrix, pos| SuperMatrix::place_operator(x, pos, 2, &id, &id).unwrap();
        let lhs = place(&k1, 1)
            .matmul(&place(&b(&G::E(1)), 2))
            .unwrap()
            .add(&place(&b(&G::E(1)), 1).matmul(&place(&k2, 2)).unwrap())
            .unwrap();
        let half = RatFunc::epsilon().scale_rational(&num_rational::BigRational::new((-1).into(), 2.into()));
        let odd = place(&b(&G::EBar(1)), 1).matmul(&place(&b(&G::FFBar(2)), 2)).unwrap();
        let expect = lhs.add_scaled(&odd, &half).unwrap();
        assert_eq!(m.action(&G::E(1)).unwrap(), expect);
        let q2 = m.action(&G::QH(vec![1, -2])).unwrap();
        let h = b(&G::QH(vec![1, -2]));
        assert_eq!(q2, h.kron(&h, &TensorBasis::new(n, 1).parities()));
    }
}
