use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

/// Laurent polynomial in `q` with rational coefficients.
///
/// Terms are kept sorted by ascending exponent and never store a zero
/// coefficient, so the zero polynomial is the empty term list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: Vec<(i32, BigRational)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn q() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn monomial(c: BigRational, exp: i32) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(exp, c)] }
        }
    }

    /// Builds from arbitrary `(exponent, coefficient)` pairs, merging repeats.
    pub fn from_terms<I: IntoIterator<Item = (i32, BigRational)>>(it: I) -> Self {
        let mut acc: BTreeMap<i32, BigRational> = BTreeMap::new();
        for (e, c) in it {
            *acc.entry(e).or_insert_with(BigRational::zero) += c;
        }
        Self {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Coefficients `c_0, c_1, ...` of an ordinary polynomial.
    pub fn from_dense(coeffs: &[BigRational]) -> Self {
        Self {
            terms: coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (e as i32, c.clone()))
                .collect(),
        }
    }

    pub fn terms(&self) -> &[(i32, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.first().map(|t| t.0)
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.last().map(|t| t.0)
    }

    /// Coefficient of the highest power of `q`.
    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.terms.last().map(|t| &t.1)
    }

    pub fn coeff(&self, exp: i32) -> BigRational {
        match self.terms.binary_search_by(|t| t.0.cmp(&exp)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigRational::zero(),
        }
    }

    /// Multiplication by `q^s`.
    pub fn shift(&self, s: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + s, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Substitution `q -> q^{-1}`.
    pub fn invert_variable(&self) -> Self {
        let mut terms: Vec<_> = self.terms.iter().map(|(e, c)| (-e, c.clone())).collect();
        terms.reverse();
        Self { terms }
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            acc += c * pow_rat(x, *e);
        }
        acc
    }

    pub fn eval_at_one(&self) -> BigRational {
        self.terms.iter().fold(BigRational::zero(), |a, (_, c)| a + c)
    }

    /// Dense coefficient vector `c_0..c_d` of `q^{-min_exp} * self`.
    pub fn to_dense_normalized(&self) -> (i32, Vec<BigRational>) {
        let Some(lo) = self.min_exp() else {
            return (0, Vec::new());
        };
        let hi = self.max_exp().unwrap();
        let mut v = vec![BigRational::zero(); (hi - lo) as usize + 1];
        for (e, c) in &self.terms {
            v[(e - lo) as usize] = c.clone();
        }
        (lo, v)
    }

    /// Coefficient vector of an ordinary polynomial; panics on negative exponents.
    pub fn to_dense(&self) -> Vec<BigRational> {
        let Some(hi) = self.max_exp() else {
            return Vec::new();
        };
        assert!(self.min_exp().unwrap() >= 0, "negative exponent in to_dense");
        let mut v = vec![BigRational::zero(); hi as usize + 1];
        for (e, c) in &self.terms {
            v[*e as usize] = c.clone();
        }
        v
    }

    pub fn total_terms(&self) -> usize {
        self.terms.len()
    }

    /// Exact quotient `self / d` in `Q[q, q^{-1}]`; `None` if `d` does not divide.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.terms.len() == 1 {
            let (e, c) = &d.terms[0];
            let inv = c.recip();
            return Some(Self {
                terms: self.terms.iter().map(|(x, y)| (x - e, y * &inv)).collect(),
            });
        }
        let (la, a) = self.to_dense_normalized();
        let (lb, b) = d.to_dense_normalized();
        let (quo, rem) = super::poly::divrem(&a, &b);
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_dense(&quo).shift(la - lb))
    }
}

pub(crate) fn pow_rat(x: &BigRational, e: i32) -> BigRational {
    match e.cmp(&0) {
        Ordering::Equal => BigRational::one(),
        Ordering::Greater => num_traits::pow(x.clone(), e as usize),
        Ordering::Less => num_traits::pow(x.recip(), (-e) as usize),
    }
}

fn merge(a: &[(i32, BigRational)], b: &[(i32, BigRational)], negate_b: bool) -> LaurentPoly {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take = match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) => x.0.cmp(&y.0),
            (Some(_), None) => Ordering::Less,
            _ => Ordering::Greater,
        };
        match take {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                let c = if negate_b { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    LaurentPoly { terms: out }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        merge(&self.terms, &o.terms, false)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        merge(&self.terms, &o.terms, true)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || o.is_zero() {
            return LaurentPoly::zero();
        }
        if o.terms.len() == 1 {
            let (e, c) = &o.terms[0];
            return LaurentPoly {
                terms: self.terms.iter().map(|(x, y)| (x + e, y * c)).collect(),
            };
        }
        if self.terms.len() == 1 {
            return o * self;
        }
        let lo = self.min_exp().unwrap() + o.min_exp().unwrap();
        let hi = self.max_exp().unwrap() + o.max_exp().unwrap();
        let mut dense = vec![BigRational::zero(); (hi - lo) as usize + 1];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                dense[(ea + eb - lo) as usize] += ca * cb;
            }
        }
        LaurentPoly::from_dense(&dense).shift(lo)
    }
}

impl LaurentPoly {
    /// Sign of the leading coefficient.
    pub fn leading_is_negative(&self) -> bool {
        self.leading_coeff().map(|c| c.is_negative()).unwrap_or(false)
    }
}
