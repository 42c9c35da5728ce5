//! Exchange relations among the FRT generators `t_ij`.

use super::expr::{g, Expr};
use super::{run_cases, Case, Evaluator, ExprCase, Suite, SuiteOptions, SuiteReport};
use crate::error::{Error, Result};
use crate::natrep::{theta_sign, GeneratorLabel as G};
use crate::qrat::RatFunc;
use crate::superlinalg::{parity, TensorBasis};
use crate::tensorrep::tij_coproduct_actions;

fn t(i: i32, j: i32) -> Expr {
    g(G::T(i, j))
}

fn d(b: bool) -> i64 {
    b as i64
}

fn sign(e: u8) -> i64 {
    if e % 2 == 1 {
        -1
    } else {
        1
    }
}

/// `t_ij t_kl` against `t_kl t_ij` with all correction terms moved to one side.
///
/// The mutation replaces the `q − 1` factor on the `δ_{jl}` term by `q² − 1`
/// for `j > 0`.
pub fn exchange_residual(n: usize, i: i32, j: i32, k: i32, l: i32, mutate: bool) -> Expr {
    let p = |a: i32| parity(a);
    let eps = RatFunc::epsilon();
    let rf = |x: i64| RatFunc::from_int(x);
    let s = sign((p(i) ^ p(j)) * (p(k) ^ p(l)));
    let th = theta_sign(i, j, k) as i64;
    let qm1 = |a: i32| if a > 0 { "q - 1" } else { "q^-1 - 1" }.parse::<RatFunc>().unwrap();
    let mut r = (t(i, j) * t(k, l)).sc(rf(s)) - t(k, l) * t(i, j);
    let mut add = |coeff: RatFunc, e: Expr| {
        if !coeff.is_zero() {
            r = std::mem::replace(&mut r, Expr::Zero) + e.sc(coeff);
        }
    };
    add(&rf(th * (d(j.abs() < l.abs()) - d(k.abs() < i.abs()))) * &eps, t(i, l) * t(k, j));
    let qj = if mutate && j > 0 { "q^2 - 1".parse().unwrap() } else { qm1(j) };
    add(&rf(s * (d(j == l) + d(j == -l))) * &qj, t(i, j) * t(k, l));
    add(&rf(-(d(i == k) + d(i == -k))) * &qm1(i), t(k, l) * t(i, j));
    add(&rf(th * d(j > 0) * d(j == -l)) * &eps, t(i, -j) * t(k, -l));
    add(&rf(-sign(p(j)) * d(i < 0) * d(i == -k)) * &eps, t(-k, l) * t(-i, j));
    let pre = sign(p(j) * (p(i) ^ 1));
    for a in TensorBasis::new(n, 1).labels() {
        add(&rf(pre * sign(p(i) * p(a)) * th * d(j == -l) * d(a.abs() < l.abs())) * &eps, t(i, -a) * t(k, a));
        add(&rf(pre * sign(p(-j) * p(a)) * d(i == -k) * d(k.abs() < a.abs())) * &eps, t(a, l) * t(-a, j));
    }
    r
}

/// Index pairs `(i, j)` of the nonzero generators `t_ij`.
pub fn generator_pairs(n: usize) -> Vec<(i32, i32)> {
    G::t_generators(n)
        .into_iter()
        .map(|g| match g {
            G::T(i, j) => (i, j),
            _ => unreachable!(),
        })
        .collect()
}

pub(crate) fn cases(n: usize, mutate: bool) -> Vec<ExprCase> {
    let pairs = generator_pairs(n);
    let mut out = Vec::new();
    for &(i, j) in &pairs {
        for &(k, l) in &pairs {
            out.push(ExprCase::new(format!("exprel[{i},{j},{k},{l}]"), "exprel", exchange_residual(n, i, j, k, l, mutate)));
        }
    }
    out
}

pub(crate) fn run(n: usize, k: usize, opts: &SuiteOptions) -> Result<SuiteReport> {
    let actions = tij_coproduct_actions(n, k)?;
    let basis = TensorBasis::new(n, k);
    let ev = Evaluator::new(basis.dim(), |l| match l {
        G::T(i, j) => actions.get(&(*i, *j)).cloned().ok_or_else(|| Error::ShapeError(format!("{l} out of range"))),
        _ => Err(Error::ShapeError(format!("{l} is not an FRT generator"))),
    });
    let bound: Vec<Case> = cases(n, opts.mutate).into_iter().filter(|c| opts.keep(&c.family)).map(|c| c.bind(&ev)).collect();
    Ok(SuiteReport::from_cases(Suite::Exprel, n, k, opts.mutate, run_cases(&bound, n, k, basis)))
}
