//! Exact decimal text for rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::sexagesimal::{round_rational, Rounding};

/// Parses `[-]digits[.digits]` into an exact rational.
pub fn parse_decimal(text: &str) -> Result<BigRational> {
    let bad = || Error::Number(text.to_string());
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    let all_digits = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
    if (int_part.is_empty() && frac_part.is_empty())
        || !all_digits(int_part)
        || !all_digits(frac_part)
    {
        return Err(bad());
    }
    if body.ends_with('.') || body.starts_with('.') {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let numer: BigInt = digits.parse().map_err(|_| bad())?;
    let denom = BigInt::from(10).pow(frac_part.len() as u32);
    let value = BigRational::new(numer, denom);
    Ok(if negative { -value } else { value })
}

/// Fixed-point text with `frac_digits` decimals, rounded half away from zero,
/// trailing zeros trimmed.
pub fn format_fixed(x: &BigRational, frac_digits: u32) -> String {
    let scale = BigInt::from(10).pow(frac_digits);
    let scaled = round_rational(
        &(x * BigRational::from_integer(scale.clone())),
        Rounding::Nearest,
    );
    let negative = scaled.is_negative();
    let (int_part, frac_part) = scaled.abs().div_rem(&scale);
    let mut frac = frac_part.to_string();
    while frac.len() < frac_digits as usize {
        frac.insert(0, '0');
    }
    let frac = frac.trim_end_matches('0');
    let sign = if negative { "-" } else { "" };
    if frac.is_empty() {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac}")
    }
}

/// Text with `digits` significant digits (trailing zeros trimmed).
pub fn format_significant(x: &BigRational, digits: u32) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    // decimal exponent of the leading digit
    let abs = x.abs();
    let int_digits = abs.numer().div_floor(abs.denom()).to_string();
    let leading = if int_digits != "0" {
        int_digits.len() as i64 - 1
    } else {
        let mut e = 0i64;
        let mut probe = abs.clone();
        let ten = BigRational::from_integer(BigInt::from(10));
        while probe < BigRational::from_integer(BigInt::from(1)) {
            probe *= &ten;
            e -= 1;
        }
        e
    };
    let frac = i64::from(digits) - 1 - leading;
    if frac >= 0 {
        format_fixed(x, frac as u32)
    } else {
        let unit = BigInt::from(10).pow((-frac) as u32);
        let rounded = round_rational(
            &(x / BigRational::from_integer(unit.clone())),
            Rounding::Nearest,
        );
        (rounded * unit).to_string()
    }
}
