//! Expression trees over generator labels and their evaluation as matrices.

use crate::error::Result;
use crate::natrep::GeneratorLabel;
use crate::qrat::RatFunc;
use crate::superlinalg::SuperMatrix;
use std::collections::HashMap;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Mutex;

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Zero,
    One,
    Gen(GeneratorLabel),
    Scale(RatFunc, Box<Expr>),
    Sum(Vec<Expr>),
    Prod(Vec<Expr>),
    /// Supercommutator `[a, b] = ab − (−1)^{p(a)p(b)} ba`.
    Bracket(Box<Expr>, Box<Expr>),
}

pub fn g(label: GeneratorLabel) -> Expr {
    Expr::Gen(label)
}

/// Parses a scalar such as `"q^2 - 1"`; panics on malformed literals in relation tables.
pub fn c(s: &str) -> RatFunc {
    s.parse().unwrap_or_else(|e| panic!("bad scalar literal {s:?}: {e}"))
}

impl Expr {
    pub fn sc(self, c: RatFunc) -> Expr {
        Expr::Scale(c, Box::new(self))
    }

    pub fn bracket(self, o: Expr) -> Expr {
        Expr::Bracket(Box::new(self), Box::new(o))
    }

    pub fn pow(self, m: u32) -> Expr {
        Expr::Prod(vec![self; m as usize])
    }

    /// Every generator occurring in the expression.
    pub fn labels(&self, out: &mut Vec<GeneratorLabel>) {
        match self {
            Expr::Zero | Expr::One => {}
            Expr::Gen(l) => out.push(l.clone()),
            Expr::Scale(_, e) => e.labels(out),
            Expr::Sum(v) | Expr::Prod(v) => v.iter().for_each(|e| e.labels(out)),
            Expr::Bracket(a, b) => {
                a.labels(out);
                b.labels(out);
            }
        }
    }
}

impl Add for Expr {
    type Output = Expr;
    fn add(self, o: Expr) -> Expr {
        match self {
            Expr::Sum(mut v) => {
                v.push(o);
                Expr::Sum(v)
            }
            s => Expr::Sum(vec![s, o]),
        }
    }
}

impl Sub for Expr {
    type Output = Expr;
    fn sub(self, o: Expr) -> Expr {
        self + (-o)
    }
}

impl Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        self.sc(RatFunc::from_int(-1))
    }
}

impl Mul for Expr {
    type Output = Expr;
    fn mul(self, o: Expr) -> Expr {
        match self {
            Expr::Prod(mut v) => {
                v.push(o);
                Expr::Prod(v)
            }
            s => Expr::Prod(vec![s, o]),
        }
    }
}

type Lookup<'a> = Box<dyn Fn(&GeneratorLabel) -> Result<SuperMatrix> + Send + Sync + 'a>;

/// Evaluates expressions against a fixed assignment of generator matrices.
pub struct Evaluator<'a> {
    dim: usize,
    lookup: Lookup<'a>,
    cache: Mutex<HashMap<GeneratorLabel, SuperMatrix>>,
}

impl<'a> Evaluator<'a> {
    pub fn new(dim: usize, lookup: impl Fn(&GeneratorLabel) -> Result<SuperMatrix> + Send + Sync + 'a) -> Self {
        Self { dim, lookup: Box::new(lookup), cache: Mutex::new(HashMap::new()) }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generator(&self, l: &GeneratorLabel) -> Result<SuperMatrix> {
        if let Some(m) = self.cache.lock().unwrap().get(l) {
            return Ok(m.clone());
        }
        let m = (self.lookup)(l)?;
        self.cache.lock().unwrap().insert(l.clone(), m.clone());
        Ok(m)
    }

    pub fn eval(&self, e: &Expr) -> Result<SuperMatrix> {
        Ok(match e {
            Expr::Zero => SuperMatrix::zero(self.dim, self.dim, 0),
            Expr::One => SuperMatrix::identity(self.dim),
            Expr::Gen(l) => self.generator(l)?,
            Expr::Scale(c, x) => self.eval(x)?.scale(c),
            Expr::Sum(v) => {
                let mut acc = SuperMatrix::zero(self.dim, self.dim, 0);
                for x in v {
                    let m = self.eval(x)?;
                    acc = if acc.is_zero() { m } else { acc.add(&m)? };
                }
                acc
            }
            Expr::Prod(v) => {
                let mut acc: Option<SuperMatrix> = None;
                for x in v {
                    let m = self.eval(x)?;
                    acc = Some(match acc {
                        None => m,
                        Some(a) => a.matmul(&m)?,
                    });
                }
                acc.unwrap_or_else(|| SuperMatrix::identity(self.dim))
            }
            Expr::Bracket(a, b) => self.eval(a)?.supercommutator(&self.eval(b)?)?,
        })
    }
}
