//! Exact rational helpers shared by every module.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `a`, `-a`, `a/b` with integer `a`, `b` (no floats).
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let bad = || Error::parse(format!("invalid rational `{text}`"));
    if t.is_empty() {
        return Err(bad());
    }
    match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::parse(format!("zero denominator in `{text}`")));
            }
            Ok(Rational::new(n, d))
        }
        None => {
            let n: BigInt = t.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(n))
        }
    }
}

/// `a` for integers, `a/b` otherwise.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Exponent of `p` in the nonzero integer `n`.
pub fn ord_p(n: &BigInt, p: u32) -> u32 {
    debug_assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut k = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return k;
        }
        n = q;
        k += 1;
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn sign_of(q: &Rational) -> i8 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

/// Reduces an angle (in units of pi) into `[0, 2)`.
pub fn reduce_angle(q: &Rational) -> Rational {
    let two = int(2);
    let k = (q / &two).floor();
    q - k * two
}

pub fn half() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("6").unwrap(), int(6));
        assert_eq!(parse_rational(" -7 ").unwrap(), int(-7));
        assert_eq!(parse_rational("2/4").unwrap(), frac(1, 2));
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("1/0").is_err());
        assert_eq!(format_rational(&frac(-1, 3)), "-1/3");
        assert_eq!(format_rational(&int(0)), "0");
    }

    #[test]
    fn angles_wrap_into_range() {
        assert_eq!(reduce_angle(&frac(4, 3).clone()), frac(4, 3));
        assert_eq!(reduce_angle(&frac(8, 3)), frac(2, 3));
        assert_eq!(reduce_angle(&frac(-1, 2)), frac(3, 2));
        assert_eq!(reduce_angle(&int(2)), int(0));
    }

    #[test]
    fn ord_p_by_division() {
        assert_eq!(ord_p(&BigInt::from(-8), 2), 3);
        assert_eq!(ord_p(&BigInt::from(14), 2), 1);
        assert_eq!(ord_p(&BigInt::from(7), 2), 0);
    }

    #[test]
    fn primes() {
        let ps: Vec<u64> = (0..32).filter(|&n| is_prime(n)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]);
    }
}
