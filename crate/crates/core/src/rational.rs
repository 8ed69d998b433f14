//! Exact rational helpers: parsing, printing, square-root brackets and the
//! simplest rational inside an interval.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number used for every coefficient in the crate.
pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Parses `"3/10"`, `"-2"`, or a plain decimal such as `"0.25"`.
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::InvalidInput(format!("not a rational number: `{s}`"));
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Q::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let neg = int.starts_with('-');
        let int_part = if int.is_empty() || int == "-" || int == "+" {
            BigInt::zero()
        } else {
            BigInt::from_str(int).map_err(|_| bad())?
        };
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let frac_part = BigInt::from_str(frac).map_err(|_| bad())?;
        let mag = int_part.abs() * &scale + frac_part;
        let num = if neg { -mag } else { mag };
        return Ok(Q::new(num, scale));
    }
    BigInt::from_str(s).map(Q::from_integer).map_err(|_| bad())
}

/// `"num/den"`, or just `"num"` for integers.
pub fn format_q(v: &Q) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

pub fn to_f64(v: &Q) -> f64 {
    v.to_f64().unwrap_or(f64::NAN)
}

/// Square root of a nonnegative rational when it is itself rational.
pub fn exact_sqrt(v: &Q) -> Option<Q> {
    if v.is_negative() {
        return None;
    }
    let n = v.numer().sqrt();
    let d = v.denom().sqrt();
    if &(&n * &n) == v.numer() && &(&d * &d) == v.denom() {
        Some(Q::new(n, d))
    } else {
        None
    }
}

/// Rational lower and upper brackets of `sqrt(v)` whose gap is at most
/// `2^-bits / denom(v)`.
pub fn sqrt_bounds(v: &Q, bits: u32) -> (Q, Q) {
    assert!(!v.is_negative(), "sqrt of a negative rational");
    if let Some(r) = exact_sqrt(v) {
        return (r.clone(), r);
    }
    let shift = BigInt::one() << (2 * bits as usize);
    let radicand = v.numer() * v.denom() * shift;
    let s = radicand.sqrt();
    let scale = v.denom() * (BigInt::one() << bits as usize);
    (
        Q::new(s.clone(), scale.clone()),
        Q::new(s + BigInt::one(), scale),
    )
}

/// The rational with the smallest denominator in `[lo, hi]`, for `0 <= lo <= hi`.
pub fn simplest_between(lo: &Q, hi: &Q) -> Q {
    debug_assert!(!lo.is_negative() && lo <= hi);
    let fl = lo.floor();
    if &fl == lo {
        return fl;
    }
    let next = &fl + Q::one();
    if &next <= hi {
        return next;
    }
    let inner = simplest_between(&(Q::one() / (hi - &fl)), &(Q::one() / (lo - &fl)));
    fl + Q::one() / inner
}

/// `sqrt(a) / (sqrt(a) + sqrt(b))` for positive `a`, `b`: exact when the ratio
/// `b / a` is a rational square, otherwise the simplest rational within
/// `2^-80` of the true value.
pub fn sqrt_ratio_time(a: &Q, b: &Q) -> Q {
    debug_assert!(a.is_positive() && b.is_positive());
    if let Some(r) = exact_sqrt(&(b / a)) {
        return Q::one() / (Q::one() + r);
    }
    let bits = 96;
    let (alo, ahi) = sqrt_bounds(a, bits);
    let (blo, bhi) = sqrt_bounds(b, bits);
    // t = 1 / (1 + sqrt(b)/sqrt(a)) is decreasing in sqrt(b) and increasing in sqrt(a)
    let lo = &alo / (&alo + &bhi);
    let hi = &ahi / (&ahi + &blo);
    simplest_between(&lo, &hi)
}
