//! Dense univariate polynomials over `Q` and `Z`, ascending coefficients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

fn trim<T: Zero>(v: &mut Vec<T>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Long division over `Q`: returns `(quotient, remainder)`.
pub fn divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut b = b.to_vec();
    trim(&mut b);
    assert!(!b.is_empty(), "division by the zero polynomial");
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let db = b.len() - 1;
    let lc_inv = b[db].recip();
    let mut quo = vec![BigRational::zero(); r.len() - db];
    while r.len() > db && !r.is_empty() {
        let shift = r.len() - 1 - db;
        let c = &r[r.len() - 1] * &lc_inv;
        for (i, bc) in b.iter().enumerate() {
            let t = &c * bc;
            r[shift + i] -= t;
        }
        quo[shift] = c;
        r.pop();
        trim(&mut r);
    }
    (quo, r)
}

/// Clears denominators: returns the primitive integer polynomial proportional to `a`.
pub fn primitive_part(a: &[BigRational]) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for c in a {
        l = l.lcm(c.denom());
    }
    let ints: Vec<BigInt> = a.iter().map(|c| c.numer() * (&l / c.denom())).collect();
    int_primitive(&ints)
}

fn int_content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn int_primitive(a: &[BigInt]) -> Vec<BigInt> {
    let g = int_content(a);
    if g.is_zero() {
        return Vec::new();
    }
    let mut v: Vec<BigInt> = a.iter().map(|c| c / &g).collect();
    trim(&mut v);
    v
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b` over `Z`.
fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lc = &b[db];
    let mut steps = (a.len() - b.len() + 1) as i64;
    while r.len() > db && !r.is_empty() {
        let shift = r.len() - 1 - db;
        let c = r[r.len() - 1].clone();
        for x in r.iter_mut() {
            *x *= lc;
        }
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &c * bc;
        }
        r.pop();
        trim(&mut r);
        steps -= 1;
    }
    if steps > 0 && !r.is_empty() {
        let f = num_traits::pow(lc.clone(), steps as usize);
        for x in r.iter_mut() {
            *x *= &f;
        }
    }
    r
}

/// Greatest common divisor over `Q[q]` by the subresultant remainder sequence.
///
/// The result is a primitive integer polynomial with positive leading
/// coefficient; the gcd of two zero polynomials is the empty vector.
pub fn gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigInt> {
    let mut a = primitive_part(a);
    let mut b = primitive_part(b);
    if a.is_empty() {
        return normalize_sign(b);
    }
    if b.is_empty() {
        return normalize_sign(a);
    }
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = (a.len() - b.len()) as u32;
        let r = prem(&a, &b);
        if r.is_empty() {
            break;
        }
        if r.len() == 1 {
            return vec![BigInt::one()];
        }
        a = b;
        let denom = &g * num_traits::pow(h.clone(), delta as usize);
        b = r.iter().map(|c| c / &denom).collect();
        g = a[a.len() - 1].clone();
        h = if delta == 0 {
            h
        } else {
            let num = num_traits::pow(g.clone(), delta as usize);
            let den = num_traits::pow(h.clone(), (delta - 1) as usize);
            num / den
        };
    }
    normalize_sign(int_primitive(&b))
}

fn normalize_sign(mut v: Vec<BigInt>) -> Vec<BigInt> {
    if v.last().is_some_and(|c| c.is_negative()) {
        for c in v.iter_mut() {
            *c = -&*c;
        }
    }
    v
}

pub fn to_rational(v: &[BigInt]) -> Vec<BigRational> {
    v.iter().map(|c| BigRational::from_integer(c.clone())).collect()
}
