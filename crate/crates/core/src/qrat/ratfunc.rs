use super::laurent::LaurentPoly;
use super::poly;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Element of `Q(q)` in canonical form.
///
/// The denominator is an ordinary polynomial with nonzero constant term,
/// primitive integer coefficients and positive leading coefficient, coprime
/// to the numerator. Under these rules two equal functions have identical
/// representations, so `==` is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        Self { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    pub fn q() -> Self {
        Self::from_laurent(LaurentPoly::q())
    }

    /// `q^e`.
    pub fn q_pow(e: i32) -> Self {
        Self::from_laurent(LaurentPoly::monomial(BigRational::one(), e))
    }

    /// `ε = q − q⁻¹`.
    pub fn epsilon() -> Self {
        Self::from_laurent(&LaurentPoly::q() - &LaurentPoly::monomial(BigRational::one(), -1))
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_laurent(LaurentPoly::from_int(c))
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_laurent(LaurentPoly::constant(c))
    }

    pub fn from_frac(n: i64, d: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        Self { num: p, den: LaurentPoly::one() }
    }

    /// Builds `num/den` and brings it to canonical form.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        canonicalize(num, den)
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// Rough size measure used for pivot selection.
    pub fn term_count(&self) -> usize {
        self.num.len() + self.den.len() - 1
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        canonicalize(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &RatFunc) -> Result<Self> {
        Ok(self * &o.inv()?)
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        Ok(acc)
    }

    pub fn scale_rational(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> Result<BigRational> {
        let d = self.den.eval_at_one();
        if d.is_zero() {
            return Err(Error::PoleAtOne);
        }
        Ok(self.num.eval_at_one() / d)
    }

    /// Value at a rational point `q = x`, `x ≠ 0`.
    pub fn eval(&self, x: &BigRational) -> Result<BigRational> {
        if x.is_zero() && self.num.min_exp().is_some_and(|e| e < 0) {
            return Err(Error::DivisionByZero);
        }
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(x) / d)
    }

    /// Substitution `q ↦ q⁻¹`.
    pub fn substitute_inverse(&self) -> Self {
        canonicalize(self.num.invert_variable(), self.den.invert_variable())
            .expect("nonzero denominator stays nonzero")
    }

    /// Re-canonicalizes; a no-op on values built through the public API.
    pub fn canonicalize(&self) -> Self {
        canonicalize(self.num.clone(), self.den.clone()).expect("canonical denominator is nonzero")
    }
}

fn canonicalize(num: LaurentPoly, den: LaurentPoly) -> Result<RatFunc> {
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if num.is_zero() {
        return Ok(RatFunc::zero());
    }
    let lo = den.min_exp().unwrap();
    let (mut num, den) = if lo != 0 { (num.shift(-lo), den.shift(-lo)) } else { (num, den) };
    if den.len() == 1 {
        let c = den.terms()[0].1.recip();
        return Ok(RatFunc { num: num.scale(&c), den: LaurentPoly::one() });
    }
    let (nlo, nd) = num.to_dense_normalized();
    let dd = den.to_dense();
    let g = poly::gcd(&nd, &dd);
    let den = if g.len() > 1 {
        let gr = LaurentPoly::from_dense(&poly::to_rational(&g));
        num = LaurentPoly::from_dense(&nd).div_exact(&gr).expect("gcd divides").shift(nlo);
        den.div_exact(&gr).expect("gcd divides")
    } else {
        den
    };
    if den.len() == 1 {
        let (e, c) = &den.terms()[0];
        debug_assert_eq!(*e, 0);
        return Ok(RatFunc { num: num.scale(&c.recip()), den: LaurentPoly::one() });
    }
    let prim = poly::primitive_part(&den.to_dense());
    let prim = LaurentPoly::from_dense(&poly::to_rational(&prim));
    let factor = den.leading_coeff().unwrap() / prim.leading_coeff().unwrap();
    let (prim, factor) = if prim.leading_is_negative() { (-&prim, -factor) } else { (prim, factor) };
    Ok(RatFunc { num: num.scale(&factor.recip()), den: prim })
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        if self.den.is_one() && o.den.is_one() {
            return RatFunc::from_laurent(&self.num + &o.num);
        }
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return canonicalize(&self.num + &o.num, self.den.clone()).unwrap();
        }
        let num = &(&self.num * &o.den) + &(&o.num * &self.den);
        canonicalize(num, &self.den * &o.den).unwrap()
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self + &(-o)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFunc::from_laurent(&self.num * &o.num);
        }
        canonicalize(&self.num * &o.num, &self.den * &o.den).unwrap()
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: RatFunc) -> RatFunc {
                (&self).$m(&o)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: &RatFunc) -> RatFunc {
                (&self).$m(o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl std::iter::Sum for RatFunc {
    fn sum<I: Iterator<Item = RatFunc>>(it: I) -> RatFunc {
        it.fold(RatFunc::zero(), |a, b| &a + &b)
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        RatFunc::from_int(c)
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        RatFunc::from_laurent(p)
    }
}

fn fmt_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn fmt_poly(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (e, c)) in p.terms().iter().rev().enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let var = match *e {
            0 => String::new(),
            1 => "q".to_string(),
            _ => format!("q^{e}"),
        };
        if var.is_empty() {
            out.push_str(&fmt_rational(&a));
        } else if a.is_one() {
            out.push_str(&var);
        } else if a.is_integer() {
            out.push_str(&format!("{}{var}", a.numer()));
        } else {
            out.push_str(&format!("({}){var}", fmt_rational(&a)));
        }
    }
    out
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", fmt_poly(&self.num))
        } else {
            write!(f, "({})/({})", fmt_poly(&self.num), fmt_poly(&self.den))
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl std::str::FromStr for RatFunc {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        super::parse::parse(s)
    }
}

impl serde::Serialize for RatFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for RatFunc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
