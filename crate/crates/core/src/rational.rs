//! Exact rational scalars: parsing, formatting and a few number-theoretic helpers.

use alloc::string::String;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::ParseRationalError;

/// Arbitrary-precision rational number. Always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Shorthand for an integer-valued rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num/den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"a/b"`, an integer, or a decimal literal such as `"-0.01"` or
/// `"2.5e-3"`. Decimals are converted exactly (`"0.01"` is `1/100`).
pub fn parse_rational(input: &str) -> Result<Rational, ParseRationalError> {
    let s = input.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    if let Some((num, den)) = s.split_once('/') {
        let num = parse_int(num.trim(), input)?;
        let den = parse_int(den.trim(), input)?;
        if den.is_zero() {
            return Err(ParseRationalError::ZeroDenominator(input.into()));
        }
        return Ok(Rational::new(num, den));
    }
    parse_decimal(s, input)
}

/// True when the literal uses decimal-point or exponent notation rather than
/// an integer or `a/b` fraction.
pub fn is_decimal_literal(input: &str) -> bool {
    let s = input.trim();
    !s.contains('/') && (s.contains('.') || s.contains('e') || s.contains('E'))
}

fn parse_int(s: &str, whole: &str) -> Result<BigInt, ParseRationalError> {
    let digits = s.strip_prefix('+').unwrap_or(s);
    if digits.is_empty() || digits == "-" {
        return Err(ParseRationalError::Invalid(whole.into()));
    }
    digits
        .parse::<BigInt>()
        .map_err(|_| ParseRationalError::Invalid(whole.into()))
}

fn parse_decimal(s: &str, whole: &str) -> Result<Rational, ParseRationalError> {
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => {
            let exp: i32 = s[pos + 1..]
                .parse()
                .map_err(|_| ParseRationalError::Invalid(whole.into()))?;
            (&s[..pos], exp)
        }
        None => (s, 0),
    };
    let (negative, body) = match mantissa.as_bytes().first() {
        Some(b'-') => (true, &mantissa[1..]),
        Some(b'+') => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(ParseRationalError::Invalid(whole.into()));
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(ParseRationalError::Invalid(whole.into()));
    }
    let mut digits = String::with_capacity(int_part.len() + frac_part.len());
    digits.push_str(int_part);
    digits.push_str(frac_part);
    let mut value = Rational::from_integer(
        digits
            .parse::<BigInt>()
            .map_err(|_| ParseRationalError::Invalid(whole.into()))?,
    );
    let scale = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10u32);
    let factor = Rational::from_integer(num_traits::pow(ten, scale.unsigned_abs() as usize));
    if scale >= 0 {
        value *= factor;
    } else {
        value /= factor;
    }
    Ok(if negative { -value } else { value })
}

/// -1, 0 or 1.
pub fn sign(x: &Rational) -> i32 {
    match x.cmp(&Rational::zero()) {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Exact rational image of a finite float.
pub fn from_f64(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

/// The rational with the smallest denominator in the closed interval
/// `[lo, hi]` (continued-fraction descent of the Stern-Brocot tree).
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    if lo.is_negative() && hi.is_positive() || lo.is_zero() || hi.is_zero() {
        return Rational::zero();
    }
    if hi.is_negative() {
        return -simplest_between(&-hi, &-lo);
    }
    simplest_positive(lo.clone(), hi.clone())
}

fn simplest_positive(lo: Rational, hi: Rational) -> Rational {
    let fl = lo.floor();
    if fl == lo {
        return lo;
    }
    if fl < hi.floor() || hi.is_integer() {
        return fl + Rational::one();
    }
    // Both endpoints share the integer part: recurse on reciprocals of the
    // fractional parts.
    let inner = simplest_positive((hi.clone() - &fl).recip(), (lo - &fl).recip());
    fl + inner.recip()
}

/// Exact square root when `x` is the square of a rational.
pub fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &(&n * &n) == x.numer() && &(&d * &d) == x.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Positive divisors of `n` in ascending order.
pub fn divisors(n: u32) -> alloc::vec::Vec<u32> {
    let mut small = alloc::vec::Vec::new();
    let mut large = alloc::vec::Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}
