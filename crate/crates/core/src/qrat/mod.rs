//! Exact scalars: Laurent polynomials and rational functions in `q` over `Q`.

mod laurent;
mod parse;
pub mod poly;
mod ratfunc;

pub use laurent::LaurentPoly;
pub use parse::parse;
pub use ratfunc::RatFunc;

use num_rational::BigRational;
use num_traits::One;

/// `[m]_q = q^{m-1} + q^{m-3} + … + q^{1-m}`; negative `m` gives `-[−m]_q`.
pub fn quantum_integer(m: i64) -> RatFunc {
    if m < 0 {
        return -&quantum_integer(-m);
    }
    let m = m as i32;
    RatFunc::from_laurent(LaurentPoly::from_terms(
        (0..m).map(|j| (m - 1 - 2 * j, BigRational::one())),
    ))
}

/// `[m]_q! = [m]_q [m−1]_q ⋯ [1]_q`, with `[0]_q! = 1`.
pub fn quantum_factorial(m: i64) -> RatFunc {
    (1..=m).fold(RatFunc::one(), |acc, j| &acc * &quantum_integer(j))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn rf(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn add_q_and_inverse() {
        let s = &RatFunc::q() + &RatFunc::q_pow(-1);
        assert_eq!(s.to_string(), "q + q^-1");
        assert_eq!(s, rf("(q^2 + 1)/q"));
    }

    #[test]
    fn epsilon_times_inverse_is_one() {
        let e = RatFunc::epsilon();
        assert!((&e * &e.inv().unwrap()).is_one());
    }

    #[test]
    fn common_denominator() {
        let a = rf("1/(q - 1)");
        let b = rf("1/(q + 1)");
        let s = &a + &b;
        assert_eq!(s.to_string(), "(2q)/(q^2 - 1)");
        // independent check at q = 5: 1/4 + 1/6 = 5/12
        assert_eq!(s.eval(&int(5)).unwrap(), BigRational::new(5.into(), 12.into()));
    }

    #[test]
    fn inverse_of_zero() {
        assert_eq!(RatFunc::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn quantum_integers() {
        assert!(quantum_integer(1).is_one());
        assert_eq!(quantum_integer(2).to_string(), "q + q^-1");
        assert_eq!(quantum_integer(3).to_string(), "q^2 + 1 + q^-2");
        // [3]_q = (q^3 - q^-3)/(q - q^-1)
        let direct = (&RatFunc::q_pow(3) - &RatFunc::q_pow(-3)).div(&RatFunc::epsilon()).unwrap();
        assert_eq!(quantum_integer(3), direct);
        assert!(quantum_integer(0).is_zero());
    }

    #[test]
    fn quantum_factorials() {
        assert!(quantum_factorial(0).is_one());
        assert!(quantum_factorial(1).is_one());
        assert_eq!(quantum_factorial(3), &quantum_integer(2) * &quantum_integer(3));
        assert_eq!(quantum_factorial(3).to_string(), "q^3 + 2q + 2q^-1 + q^-3");
    }

    #[test]
    fn classical_limit() {
        assert_eq!(rf("q^2").eval_at_one().unwrap(), int(1));
        assert_eq!(rf("(q^2 - 1)/(q - 1)").eval_at_one().unwrap(), int(2));
        assert_eq!(rf("1/(q - 1)").eval_at_one(), Err(Error::PoleAtOne));
        for m in 0..=8 {
            assert_eq!(quantum_integer(m).eval_at_one().unwrap(), int(m));
        }
    }

    #[test]
    fn canonical_denominator() {
        let x = rf("(3/2)/((1/2)q - 1/3)");
        // (3/2)/((3q - 2)/6) = 9/(3q - 2)
        assert_eq!(x.to_string(), "(9)/(3q - 2)");
        let y = rf("1/(q^-1 - q)");
        assert_eq!(y.to_string(), "(-q)/(q^2 - 1)");
        assert_eq!(rf("(q^2 - 1)/(q^3 - q)"), rf("q^-1"));
    }

    #[test]
    fn display_formats() {
        assert_eq!(rf("-(3/2)q^2 + 2q - 1/5").to_string(), "-(3/2)q^2 + 2q - 1/5");
        assert_eq!(rf("0").to_string(), "0");
        assert_eq!(rf("q^{-2}").to_string(), "q^-2");
        assert!(parse("q +").is_err());
        assert!(parse("(q").is_err());
        assert!(parse("1/0").is_err());
    }

    #[test]
    fn gcd_of_shared_factors() {
        // (q^2-1)(q^2+q+1) and (q-1)^2(q^2+q+1) share (q-1)(q^2+q+1)
        let a = rf("(q^2 - 1)*(q^2 + q + 1)");
        let b = rf("(q - 1)^2*(q^2 + q + 1)");
        let g = poly::gcd(&a.num().to_dense(), &b.num().to_dense());
        let expect = rf("(q - 1)*(q^2 + q + 1)");
        assert_eq!(RatFunc::from_laurent(LaurentPoly::from_dense(&poly::to_rational(&g))), expect);
        assert_eq!(a.div(&b).unwrap(), rf("(q + 1)/(q - 1)"));
    }

    fn small_ratfunc() -> impl Strategy<Value = RatFunc> {
        let poly = prop::collection::vec((-3i32..4, -4i64..5), 0..4)
            .prop_map(|ts| LaurentPoly::from_terms(ts.into_iter().map(|(e, c)| (e, int(c)))));
        (poly.clone(), poly).prop_map(|(n, d)| {
            if d.is_zero() {
                RatFunc::from_laurent(n)
            } else {
                RatFunc::new(n, d).unwrap()
            }
        })
    }

    proptest! {
        #[test]
        fn field_axioms(a in small_ratfunc(), b in small_ratfunc(), c in small_ratfunc()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn canonicalization_idempotent(a in small_ratfunc()) {
            prop_assert_eq!(a.canonicalize(), a.clone());
        }

        #[test]
        fn display_parse_roundtrip(a in small_ratfunc()) {
            prop_assert_eq!(parse(&a.to_string()).unwrap(), a);
        }

        #[test]
        fn evaluation_is_a_homomorphism(a in small_ratfunc(), b in small_ratfunc()) {
            let x = BigRational::new(7.into(), 3.into());
            if let (Ok(va), Ok(vb)) = (a.eval(&x), b.eval(&x)) {
                prop_assert_eq!((&a * &b).eval(&x).unwrap(), &va * &vb);
                prop_assert_eq!((&a + &b).eval(&x).unwrap(), va + vb);
            }
        }

        #[test]
        fn quantum_integer_bar_invariant(m in 0i64..12) {
            let v = quantum_integer(m);
            prop_assert_eq!(v.substitute_inverse(), v);
        }
    }
}
