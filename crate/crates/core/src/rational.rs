//! The exact rational scalar carrying every coordinate in the crate.
//!
//! `Rational` is a reduced big-integer fraction with positive denominator;
//! arithmetic never rounds, so equality, ordering, and the sign of any
//! polynomial expression in coordinates are all decided exactly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseRationalError {
    #[error("empty numeric literal")]
    Empty,
    #[error("invalid numeric literal `{0}`")]
    Invalid(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Shorthand constructor from machine integers. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses an exact fraction `p/q` or a decimal literal such as `-12.375`.
///
/// Decimals are scaled by powers of ten, never routed through binary
/// floating point, so the value read is exactly the value written.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| ParseRationalError::Invalid(s.to_string()))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| ParseRationalError::Invalid(s.to_string()))?;
        if d.is_zero() {
            return Err(ParseRationalError::ZeroDenominator(s.to_string()));
        }
        return Ok(Rational::new(n, d));
    }
    let (sign, digits) = match s.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(ParseRationalError::Invalid(s.to_string()));
    }
    if !int_part.chars().all(|c| c.is_ascii_digit())
        || !frac_part.chars().all(|c| c.is_ascii_digit())
    {
        return Err(ParseRationalError::Invalid(s.to_string()));
    }
    let mut numer: BigInt = if int_part.is_empty() {
        BigInt::zero()
    } else {
        int_part
            .parse()
            .map_err(|_| ParseRationalError::Invalid(s.to_string()))?
    };
    let mut denom = BigInt::from(1);
    for c in frac_part.chars() {
        numer = numer * 10 + (c as u8 - b'0');
        denom *= 10;
    }
    Ok(Rational::new(numer * sign, denom))
}

/// Canonical text form: `p` for integers, `p/q` otherwise. Round-trips
/// bit-exactly through [`parse_rational`].
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Size measure used by the resource caps: the larger of the numerator and
/// denominator bit lengths.
pub fn bit_length(r: &Rational) -> u64 {
    r.numer().bits().max(r.denom().bits())
}

/// Best-effort `f64` approximation, robust to numerators and denominators far
/// beyond `f64` range. Only the renderer consumes this.
pub fn to_f64_approx(r: &Rational) -> f64 {
    let numer = r.numer();
    if numer.is_zero() {
        return 0.0;
    }
    let negative = numer.is_negative();
    let n = numer.magnitude().clone();
    let d = r.denom().magnitude().clone();
    let bn = n.bits() as i64;
    let bd = d.bits() as i64;
    // Keep ~96 significant bits of each side so the quotient fits in f64.
    let sn = (bn - 96).max(0);
    let sd = (bd - 96).max(0);
    let nf = (n >> sn as usize).to_f64().unwrap_or(f64::INFINITY);
    let df = (d >> sd as usize).to_f64().unwrap_or(f64::INFINITY);
    let v = nf / df * 2f64.powi((sn - sd).clamp(i32::MIN as i64, i32::MAX as i64) as i32);
    if negative {
        -v
    } else {
        v
    }
}
