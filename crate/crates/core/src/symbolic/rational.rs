use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational; `BigRational` keeps it reduced with a positive denominator.
pub type RationalNumber = BigRational;

pub fn rat(n: i64, d: i64) -> RationalNumber {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> RationalNumber {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `-3`, `7/4`, `0.25`.
pub fn parse_rational(s: &str) -> Option<RationalNumber> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(BigRational::new(n, d));
    }
    if let Some((ip, fp)) = s.split_once('.') {
        let neg = ip.starts_with('-');
        let ip = ip.trim_start_matches(['-', '+']);
        if !fp.chars().all(|c| c.is_ascii_digit()) || fp.is_empty() {
            return None;
        }
        let digits: BigInt = format!("{}{}", if ip.is_empty() { "0" } else { ip }, fp).parse().ok()?;
        let den = num_traits::pow(BigInt::from(10), fp.len());
        let v = BigRational::new(digits, den);
        return Some(if neg { -v } else { v });
    }
    s.parse::<BigInt>().ok().map(BigRational::from_integer)
}

pub fn fmt_rational(r: &RationalNumber) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn to_f64(r: &RationalNumber) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

pub fn is_one(r: &RationalNumber) -> bool {
    r.is_one()
}
