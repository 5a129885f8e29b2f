//! Fixed-point rendering of exact rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rounding {
    #[default]
    HalfEven,
    /// Toward zero.
    Truncate,
}

/// Renders `q` with exactly `places` fractional digits.
pub fn render(q: &BigRational, places: usize, rounding: Rounding) -> String {
    render_with_separator(q, places, rounding, '.')
}

/// As [`render`], with a caller-chosen decimal separator.
pub fn render_with_separator(q: &BigRational, places: usize, rounding: Rounding, separator: char) -> String {
    let negative = q.is_negative();
    let scale = BigInt::from(10u32).pow(places as u32);
    let scaled = q.abs() * BigRational::from_integer(scale.clone());
    let (mut digits, rem) = scaled.numer().div_rem(scaled.denom());
    if rounding == Rounding::HalfEven && !rem.is_zero() {
        let twice: BigInt = rem * 2u32;
        let d = scaled.denom();
        if twice > *d || (twice == *d && digits.is_odd()) {
            digits += 1u32;
        }
    }
    let (int_part, frac_part) = digits.div_rem(&scale);
    let mut out = String::new();
    if negative && !digits.is_zero() {
        out.push('-');
    }
    out.push_str(&int_part.to_string());
    if places > 0 {
        out.push(separator);
        let frac = frac_part.to_string();
        out.extend(std::iter::repeat('0').take(places - frac.len()));
        out.push_str(&frac);
    }
    out
}

/// Parses a plain decimal literal (`.` or `,` separator) into an exact
/// rational.
pub fn parse(text: &str) -> Option<BigRational> {
    let text = text.trim();
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (int_part, frac_part) = match body.find(['.', ',']) {
        Some(i) => (&body[..i], &body[i + 1..]),
        None => (body, ""),
    };
    if int_part.is_empty() || !int_part.bytes().all(|b| b.is_ascii_digit()) || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let numer: BigInt = format!("{int_part}{frac_part}").parse().ok()?;
    let denom = BigInt::from(10u32).pow(frac_part.len() as u32);
    let q = BigRational::new(numer, denom);
    Some(if negative { -q } else { q })
}

/// Number of fractional digits in a decimal literal.
pub fn places_of(text: &str) -> usize {
    text.find(['.', ',']).map_or(0, |i| text.len() - i - 1)
}
