use alloc::format;
use alloc::string::String;
use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

pub type Q = num_rational::BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Parses "p/q" or "p".
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Invalid(format!("bad rational '{s}'"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Q::new(n, d))
}

/// Always emits "p/q" with q > 0.
pub fn fmt_q(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn isqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Non-negative rational square root when it exists.
pub fn sqrt_q(x: &Q) -> Option<Q> {
    Some(Q::new(isqrt_exact(x.numer())?, isqrt_exact(x.denom())?))
}

pub fn pow_q(x: &Q, e: i32) -> Q {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), (-e) as usize)
    }
}

/// Bit size used as a pivot/height heuristic.
pub fn height(x: &Q) -> u64 {
    x.numer().bits() + x.denom().bits()
}

pub fn to_f64(x: &Q) -> f64 {
    let n = x.numer();
    let d = x.denom();
    let shift = n.bits().max(d.bits()).saturating_sub(60) as usize;
    let n = n >> shift;
    let d = d >> shift;
    let nf = bigint_f64(&n);
    let df = bigint_f64(&d);
    nf / df
}

fn bigint_f64(n: &BigInt) -> f64 {
    let (sign, digits) = n.to_u64_digits();
    let mut v = 0.0f64;
    for &dg in digits.iter().rev() {
        v = v * 18446744073709551616.0 + dg as f64;
    }
    if sign == Sign::Minus {
        -v
    } else {
        v
    }
}

/// Positive divisors of |n| by trial division; a leftover cofactor is treated as prime.
pub fn divisors(n: &BigInt) -> alloc::vec::Vec<BigInt> {
    let mut n = n.abs();
    let mut out = alloc::vec![BigInt::one()];
    if n.is_zero() {
        return out;
    }
    let mut p = BigInt::from(2u32);
    let limit = BigInt::from(2_000_000u64);
    while &p * &p <= n && p <= limit {
        let mut e = 0;
        while n.is_multiple_of(&p) {
            n /= &p;
            e += 1;
        }
        if e > 0 {
            let cur = out.clone();
            let mut pk = BigInt::one();
            for _ in 0..e {
                pk *= &p;
                out.extend(cur.iter().map(|d| d * &pk));
            }
        }
        p += if p == BigInt::from(2u32) { 1u32 } else { 2u32 };
    }
    if n > BigInt::one() {
        let cur = out.clone();
        out.extend(cur.iter().map(|d| d * &n));
    }
    out.sort();
    out
}

/// Small-height rationals enumerated deterministically: 1, -1, 2, -2, 1/2, -1/2, ...
pub fn small_rationals(count: usize) -> alloc::vec::Vec<Q> {
    let mut out = alloc::vec::Vec::with_capacity(count);
    let mut h = 2i64;
    while out.len() < count {
        for d in 1..h {
            let n = h - d;
            if n.gcd(&d) != 1 {
                continue;
            }
            out.push(q(n, d));
            out.push(q(-n, d));
            if out.len() >= count {
                break;
            }
        }
        h += 1;
    }
    out.truncate(count);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_q("6/4").unwrap(), q(3, 2));
        assert_eq!(parse_q("-5").unwrap(), qi(-5));
        assert_eq!(fmt_q(&q(-3, 6)), "-1/2");
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
    }

    #[test]
    fn squares_and_divisors() {
        assert_eq!(sqrt_q(&q(9, 4)), Some(q(3, 2)));
        assert_eq!(sqrt_q(&q(2, 1)), None);
        let d: alloc::vec::Vec<i64> = divisors(&BigInt::from(12)).iter().map(|b| i64::try_from(b).unwrap()).collect();
        assert_eq!(d, alloc::vec![1, 2, 3, 4, 6, 12]);
        assert!((to_f64(&q(1, 3)) - 1.0 / 3.0).abs() < 1e-15);
    }
}
