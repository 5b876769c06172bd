//! Exact rational scalars: parsing, canonical formatting, and a few helpers
//! the rest of the crate leans on.

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"`, an integer, or a plain decimal such as `"-0.55"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let bad = || Error::ParseRational(text.to_string());
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| bad())?;
        let den: BigInt = den.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(num, den));
    }
    let (negative, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{whole}{frac}");
    let mut numer: BigInt = digits.parse().map_err(|_| bad())?;
    if negative {
        numer = -numer;
    }
    let denom = num::pow(BigInt::from(10), frac.len());
    Ok(Rational::new(numer, denom))
}

/// Canonical text form: `"p"` for integers, otherwise reduced `"p/q"`.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Square root when it is itself rational.
pub fn sqrt_exact(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| Rational::new(n, d))
}

pub fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

pub fn pow(base: &Rational, exp: u32) -> Rational {
    num::pow(base.clone(), exp as usize)
}

/// Renders `x` with `sig` significant digits, trailing zeros trimmed.
pub fn format_significant(x: f64, sig: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { "0".into() } else { x.to_string() };
    }
    let magnitude = x.abs().log10().floor() as i64;
    let decimals = (sig as i64 - 1 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_decimals_and_fractions() {
        assert_eq!(parse_rational("0.2").unwrap(), ratio(1, 5));
        assert_eq!(parse_rational("-0.55").unwrap(), ratio(-11, 20));
        assert_eq!(parse_rational("9/10").unwrap(), ratio(9, 10));
        assert_eq!(parse_rational("4/2").unwrap(), int(2));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert_eq!(parse_rational(".5").unwrap(), ratio(1, 2));
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "-", "1/0", "abc", "1.2.3", "1e3", "."] {
            assert!(parse_rational(s).is_err(), "{s}");
        }
    }

    #[test]
    fn canonical_format() {
        assert_eq!(format_rational(&ratio(2, 10)), "1/5");
        assert_eq!(format_rational(&ratio(-3, 1)), "-3");
        assert_eq!(format_rational(&int(0)), "0");
    }

    #[test]
    fn exact_square_roots() {
        assert_eq!(sqrt_exact(&ratio(81, 400)), Some(ratio(9, 20)));
        assert_eq!(sqrt_exact(&ratio(1, 2)), None);
        assert_eq!(sqrt_exact(&ratio(-1, 4)), None);
    }

    #[test]
    fn significant_digits() {
        assert_eq!(format_significant(2.0 / 3.0, 6), "0.666667");
        assert_eq!(format_significant(1.0, 6), "1");
        assert_eq!(format_significant(64.0 / 729.0, 6), "0.0877915");
        assert_eq!(format_significant(0.0, 6), "0");
    }
}
