//! Exact rational scalars.
//!
//! `num_rational::BigRational` already keeps numerator and denominator in
//! lowest terms with a positive denominator, so it is used as-is.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den`, reduced. Panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::Parse(format!("not a rational number: {text:?}"));
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(text.parse().map_err(|_| bad())?)),
    }
}

/// Integer power, negative exponents allowed for nonzero bases.
pub fn pow_i64(base: &Rational, exp: i64) -> Result<Rational> {
    if exp < 0 {
        if base.is_zero() {
            return Err(Error::DivisionByZero("negative power of zero".into()));
        }
        Ok(num_traits::pow(base.recip(), exp.unsigned_abs() as usize))
    } else {
        Ok(num_traits::pow(base.clone(), exp as usize))
    }
}

pub fn factorial(n: u32) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    Rational::from_integer(acc)
}

pub fn binomial(n: u32, k: u32) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    Rational::from_integer(acc)
}

/// +1, -1 or 0.
pub fn signum(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_reduce() {
        assert_eq!(parse_rational("6/-4").unwrap(), frac(-3, 2));
        assert_eq!(parse_rational(" 7 ").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(frac(0, 5), int(0));
        assert_eq!(*frac(0, -5).denom(), BigInt::one());
    }

    #[test]
    fn powers_and_counts() {
        assert_eq!(pow_i64(&int(2), -3).unwrap(), frac(1, 8));
        assert!(pow_i64(&int(0), -1).is_err());
        assert_eq!(factorial(5), int(120));
        assert_eq!(binomial(5, 2), int(10));
        assert_eq!(binomial(2, 5), int(0));
    }
}
