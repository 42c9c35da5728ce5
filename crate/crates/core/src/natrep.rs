//! Generators of `U_q(p_n)` and their matrices on the natural module `V`.

use crate::error::{Error, Result};
use crate::qrat::RatFunc;
use crate::superlinalg::{parity, SuperMatrix, TensorBasis};
use std::fmt;
use std::str::FromStr;

/// A generator of the Drinfeld–Jimbo presentation, or an FRT generator `t_ij`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorLabel {
    E(usize),
    F(usize),
    EBar(usize),
    FBar(usize),
    FFBar(usize),
    QH(Vec<i32>),
    T(i32, i32),
}

use GeneratorLabel as G;

impl GeneratorLabel {
    /// `q^{k_i}`.
    pub fn k(i: usize, n: usize) -> Self {
        let mut h = vec![0; n];
        h[i - 1] = 1;
        G::QH(h)
    }

    /// `q^{-k_i}`.
    pub fn k_inv(i: usize, n: usize) -> Self {
        let mut h = vec![0; n];
        h[i - 1] = -1;
        G::QH(h)
    }

    pub fn parity(&self) -> u8 {
        match self {
            G::E(_) | G::F(_) | G::QH(_) => 0,
            G::EBar(_) | G::FBar(_) | G::FFBar(_) => 1,
            G::T(i, j) => parity(*i) ^ parity(*j),
        }
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        let ok = match self {
            G::E(i) | G::F(i) | G::EBar(i) | G::FBar(i) => (1..n).contains(i),
            G::FFBar(j) => (1..=n).contains(j),
            G::QH(h) => h.len() == n,
            G::T(i, j) => *i != 0 && *j != 0 && i.unsigned_abs() as usize <= n && j.unsigned_abs() as usize <= n,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::ShapeError(format!("generator {self} invalid for n = {n}")))
        }
    }

    /// Weight of the generator as a degree in the root lattice.
    pub fn degree(&self, n: usize) -> Vec<i32> {
        let mut d = vec![0; n];
        match self {
            G::E(i) => {
                d[i - 1] += 1;
                d[*i] -= 1;
            }
            G::F(i) => {
                d[i - 1] -= 1;
                d[*i] += 1;
            }
            G::EBar(i) => {
                d[i - 1] += 1;
                d[*i] += 1;
            }
            G::FBar(i) => {
                d[i - 1] -= 1;
                d[*i] -= 1;
            }
            G::FFBar(j) => d[j - 1] -= 2,
            G::QH(_) => {}
            G::T(i, j) => {
                d[j.unsigned_abs() as usize - 1] += j.signum();
                d[i.unsigned_abs() as usize - 1] -= i.signum();
            }
        }
        d
    }

    /// All Drinfeld–Jimbo generators for `n`, with `q^{±k_i}` as toral part.
    pub fn dj_generators(n: usize) -> Vec<GeneratorLabel> {
        let mut out = Vec::new();
        for i in 1..n {
            out.extend([G::E(i), G::F(i), G::EBar(i), G::FBar(i)]);
        }
        for j in 1..=n {
            out.push(G::FFBar(j));
            out.push(G::k(j, n));
            out.push(G::k_inv(j, n));
        }
        out
    }

    /// Raising generators `e_i`, `ē_i`.
    pub fn raising(n: usize) -> Vec<GeneratorLabel> {
        (1..n).flat_map(|i| [G::E(i), G::EBar(i)]).collect()
    }

    /// All `t_ij` with `|i| ≤ |j|`, excluding the identically zero `t_{−i,i}`.
    pub fn t_generators(n: usize) -> Vec<GeneratorLabel> {
        let labels = TensorBasis::new(n, 1).labels();
        let mut out = Vec::new();
        for &i in &labels {
            for &j in &labels {
                if i.abs() <= j.abs() && !(j == -i && i < 0) {
                    out.push(G::T(i, j));
                }
            }
        }
        out
    }
}

impl fmt::Display for GeneratorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            G::E(i) => write!(f, "e{i}"),
            G::F(i) => write!(f, "f{i}"),
            G::EBar(i) => write!(f, "ebar{i}"),
            G::FBar(i) => write!(f, "fbar{i}"),
            G::FFBar(j) => write!(f, "Fbar{j}"),
            G::QH(h) => {
                let parts: Vec<String> = h.iter().map(|x| x.to_string()).collect();
                write!(f, "qh[{}]", parts.join(","))
            }
            G::T(i, j) => write!(f, "t[{i},{j}]"),
        }
    }
}

impl FromStr for GeneratorLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown generator label {s:?}"));
        let bracket = |rest: &str| -> Result<Vec<i32>> {
            let inner = rest.strip_prefix('[').and_then(|r| r.strip_suffix(']')).ok_or_else(bad)?;
            inner.split(',').map(|x| x.trim().parse::<i32>().map_err(|_| bad())).collect()
        };
        let index = |rest: &str| rest.parse::<usize>().map_err(|_| bad());
        if let Some(r) = s.strip_prefix("qh") {
            return Ok(G::QH(bracket(r)?));
        }
        if let Some(r) = s.strip_prefix("t[") {
            let v = bracket(&format!("[{r}"))?;
            return match v[..] {
                [i, j] => Ok(G::T(i, j)),
                _ => Err(bad()),
            };
        }
        if let Some(r) = s.strip_prefix("Fbar") {
            return Ok(G::FFBar(index(r)?));
        }
        if let Some(r) = s.strip_prefix("ebar") {
            return Ok(G::EBar(index(r)?));
        }
        if let Some(r) = s.strip_prefix("fbar") {
            return Ok(G::FBar(index(r)?));
        }
        if let Some(r) = s.strip_prefix('e') {
            return Ok(G::E(index(r)?));
        }
        if let Some(r) = s.strip_prefix('f') {
            return Ok(G::F(index(r)?));
        }
        Err(bad())
    }
}

impl serde::Serialize for GeneratorLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for GeneratorLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn check_index(n: usize, a: i32) -> Result<()> {
    if a == 0 || a.unsigned_abs() as usize > n {
        Err(Error::ShapeError(format!("index {a} out of range for n = {n}")))
    } else {
        Ok(())
    }
}

/// Elementary matrix `E_ab` on `V` with coefficient `c`.
pub fn elementary(n: usize, a: i32, b: i32, c: RatFunc) -> SuperMatrix {
    let bs = TensorBasis::new(n, 1);
    SuperMatrix::from_entries(2 * n, 2 * n, parity(a) ^ parity(b), [(bs.digit(a), bs.digit(b), c)])
}

/// `𝖤_ij = E_ij − (−1)^{p(i)(p(j)+1)} E_{−j,−i}`.
pub fn classical_matrix(n: usize, i: i32, j: i32) -> Result<SuperMatrix> {
    check_index(n, i)?;
    check_index(n, j)?;
    let sign = if parity(i) & (parity(j) ^ 1) == 1 { -1 } else { 1 };
    let bs = TensorBasis::new(n, 1);
    Ok(SuperMatrix::from_entries(
        2 * n,
        2 * n,
        parity(i) ^ parity(j),
        [
            (bs.digit(i), bs.digit(j), RatFunc::one()),
            (bs.digit(-j), bs.digit(-i), RatFunc::from_int(-sign)),
        ],
    ))
}

/// Action of `t_ij` on `V`.
pub fn t_matrix(n: usize, i: i32, j: i32) -> Result<SuperMatrix> {
    check_index(n, i)?;
    check_index(n, j)?;
    let p = parity(i) ^ parity(j);
    let dim = 2 * n;
    if i.abs() > j.abs() {
        return Ok(SuperMatrix::zero(dim, dim, p));
    }
    let eps = RatFunc::epsilon();
    if i == j {
        let m = i.abs();
        let bs = TensorBasis::new(n, 1);
        let d = bs
            .labels()
            .into_iter()
            .map(|b| match b {
                b if b == m => RatFunc::q(),
                b if b == -m => RatFunc::q_pow(-1),
                _ => RatFunc::one(),
            })
            .collect();
        return Ok(SuperMatrix::diagonal(d));
    }
    if j == -i {
        return Ok(if i > 0 { elementary(n, -i, i, eps) } else { SuperMatrix::zero(dim, dim, p) });
    }
    let c = if parity(i) == 1 { -&eps } else { eps };
    Ok(classical_matrix(n, j, i)?.scale(&c))
}

/// Matrix of a generator on `V`.
pub fn dj_matrix(n: usize, g: &GeneratorLabel) -> Result<SuperMatrix> {
    g.validate(n)?;
    let eps = RatFunc::epsilon();
    let inv_eps = eps.inv()?;
    let (i, j, c): (i32, i32, RatFunc) = match g {
        G::QH(h) => {
            let bs = TensorBasis::new(n, 1);
            let d = bs.labels().into_iter().map(|a| RatFunc::q_pow(h[a.unsigned_abs() as usize - 1] * a.signum())).collect();
            return Ok(SuperMatrix::diagonal(d));
        }
        G::T(i, j) => return t_matrix(n, *i, *j),
        G::E(i) => (-(*i as i32), -(*i as i32) - 1, -&inv_eps),
        G::F(i) => (*i as i32, *i as i32 + 1, inv_eps),
        G::EBar(i) => (-(*i as i32), *i as i32 + 1, inv_eps),
        G::FBar(i) => (*i as i32, -(*i as i32) - 1, -&inv_eps),
        G::FFBar(i) => (*i as i32, -(*i as i32), &RatFunc::from_int(-2) * &inv_eps),
    };
    Ok(t_matrix(n, i, j)?.scale(&c))
}

/// `sgn(sgn i + sgn j + sgn k)`.
pub fn theta_sign(i: i32, j: i32, k: i32) -> i32 {
    (i.signum() + j.signum() + k.signum()).signum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superlinalg::SuperVector;

    fn v1(n: usize, a: i32) -> SuperVector {
        SuperVector::from_tuple(TensorBasis::new(n, 1), &[a]).unwrap()
    }

    fn e(n: usize, a: i32, b: i32) -> SuperMatrix {
        elementary(n, a, b, RatFunc::one())
    }

    #[test]
    fn diagonal_t() {
        let t = t_matrix(2, 1, 1).unwrap();
        assert_eq!(t.apply(&v1(2, 1)).unwrap(), v1(2, 1).scale(&RatFunc::q()));
        assert_eq!(t.apply(&v1(2, -1)).unwrap(), v1(2, -1).scale(&RatFunc::q_pow(-1)));
        assert_eq!(t_matrix(2, -1, -1).unwrap(), t);
        assert_eq!(t_matrix(2, 1, -1).unwrap().apply(&v1(2, 1)).unwrap(), v1(2, -1).scale(&RatFunc::epsilon()));
        assert!(t_matrix(2, -1, 1).unwrap().is_zero());
        assert!(t_matrix(2, 2, 1).unwrap().is_zero());
        assert!(t_matrix(2, 3, 3).is_err());
    }

    #[test]
    fn dj_dictionary() {
        let n = 3;
        for i in 1..=n {
            let k = dj_matrix(n, &G::k(i, n)).unwrap();
            let a = i as i32;
            assert_eq!(k.apply(&v1(n, a)).unwrap(), v1(n, a).scale(&RatFunc::q()));
            assert_eq!(k.apply(&v1(n, -a)).unwrap(), v1(n, -a).scale(&RatFunc::q_pow(-1)));
            assert_eq!(dj_matrix(n, &G::FFBar(i)).unwrap(), elementary(n, -a, a, RatFunc::from_int(-2)));
        }
        for i in 1..n as i32 {
            let iu = i as usize;
            // e_i = E_{−i−1,−i} − E_{i,i+1}, a constant matrix
            let expect_e = e(n, -i - 1, -i).sub(&e(n, i, i + 1).with_parity(0)).unwrap();
            assert_eq!(dj_matrix(n, &G::E(iu)).unwrap(), expect_e);
            assert_eq!(dj_matrix(n, &G::E(iu)).unwrap(), classical_matrix(n, -i - 1, -i).unwrap());
            assert_eq!(dj_matrix(n, &G::F(iu)).unwrap(), classical_matrix(n, i + 1, i).unwrap());
            assert_eq!(dj_matrix(n, &G::EBar(iu)).unwrap(), classical_matrix(n, i + 1, -i).unwrap().neg());
            assert_eq!(dj_matrix(n, &G::FBar(iu)).unwrap(), classical_matrix(n, -i - 1, i).unwrap().neg());
        }
    }

    #[test]
    fn classical_examples() {
        let n = 3;
        for i in 1..=3 {
            assert!(classical_matrix(n, i, -i).unwrap().is_zero());
            assert_eq!(classical_matrix(n, -i, i).unwrap(), elementary(n, -i, i, RatFunc::from_int(2)));
            assert_eq!(classical_matrix(n, i, i).unwrap(), e(n, i, i).sub(&e(n, -i, -i)).unwrap());
        }
        // 𝖤_ij = −(−1)^{p(i)(p(j)+1)} 𝖤_{−j,−i}
        for i in [-3, -2, -1, 1, 2, 3] {
            for j in [-3, -2, -1, 1, 2, 3] {
                let s = if parity(i) & (parity(j) ^ 1) == 1 { 1 } else { -1 };
                let lhs = classical_matrix(n, i, j).unwrap();
                let rhs = classical_matrix(n, -j, -i).unwrap().scale(&RatFunc::from_int(s));
                assert_eq!(lhs, rhs, "({i},{j})");
            }
        }
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta_sign(1, 2, 3), 1);
        assert_eq!(theta_sign(-1, -2, -3), -1);
        assert_eq!(theta_sign(1, -1, 2), 1);
    }

    #[test]
    fn labels_roundtrip() {
        for s in ["e1", "f2", "ebar1", "fbar1", "Fbar3", "qh[1,0,-1]", "t[-1,2]"] {
            let g: GeneratorLabel = s.parse().unwrap();
            assert_eq!(g.to_string(), s);
            assert_eq!(serde_json::to_string(&g).unwrap(), format!("\"{s}\""));
        }
        assert!("x1".parse::<GeneratorLabel>().is_err());
        assert!("t[1]".parse::<GeneratorLabel>().is_err());
    }

    #[test]
    fn parity_and_degree_are_respected() {
        for n in 2..=4 {
            let bs = TensorBasis::new(n, 1);
            let mut gens = GeneratorLabel::dj_generators(n);
            gens.extend(GeneratorLabel::t_generators(n));
            for g in gens {
                let m = dj_matrix(n, &g).unwrap();
                assert_eq!(m.parity(), g.parity(), "{g}");
                let d = g.degree(n);
                for (r, c, _) in m.entries() {
                    assert_eq!(bs.parity(r) ^ bs.parity(c), g.parity(), "{g}");
                    let shift: Vec<i32> = bs.weight(r).iter().zip(bs.weight(c)).map(|(a, b)| a - b).collect();
                    assert_eq!(shift, d, "{g}");
                }
                assert!(m.entries().all(|(_, _, v)| v.eval_at_one().is_ok()), "{g}");
            }
        }
    }
}
