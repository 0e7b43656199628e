//! Exact parsing of coefficient lists. Decimal literals are refused unless
//! the caller opts in with `--rationalize`.

use anyhow::{bail, Context, Result};
use bicheb::poly::Poly;
use bicheb::quartic::QuarticCoeffs;
use bicheb::rational::{is_decimal_literal, parse_rational, Rational};
use num_traits::One;

pub fn rational(text: &str, rationalize: bool) -> Result<Rational> {
    if is_decimal_literal(text) && !rationalize {
        bail!("decimal literal `{}` needs --rationalize (decisions are exact)", text.trim());
    }
    parse_rational(text).with_context(|| format!("bad number `{text}`"))
}

/// Comma-separated rationals; the empty string is the empty list.
pub fn list(text: &str, rationalize: bool) -> Result<Vec<Rational>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(|t| rational(t, rationalize)).collect()
}

/// `c1,c2,c3,c4` of `x^4 + c1 x^3 + c2 x^2 + c3 x + c4`.
pub fn quartic(text: &str, rationalize: bool) -> Result<QuarticCoeffs> {
    match <[Rational; 4]>::try_from(list(text, rationalize)?) {
        Ok([c1, c2, c3, c4]) => Ok(QuarticCoeffs::new(c1, c2, c3, c4)),
        Err(v) => bail!("expected four coefficients c1,c2,c3,c4, got {}", v.len()),
    }
}

/// Monic polynomial `x^r + c1 x^(r-1) + ... + cr` from `c1,...,cr`.
pub fn monic(text: &str, rationalize: bool) -> Result<Poly> {
    let mut coeffs = list(text, rationalize)?;
    coeffs.reverse();
    coeffs.push(Rational::one());
    Ok(Poly::new(coeffs))
}

/// `a,b` as floating-point endpoints with `a < b`.
pub fn interval(text: &str) -> Result<(f64, f64)> {
    let (a, b) = text.split_once(',').context("interval must be `a,b`")?;
    let a: f64 = a.trim().parse().with_context(|| format!("bad endpoint `{a}`"))?;
    let b: f64 = b.trim().parse().with_context(|| format!("bad endpoint `{b}`"))?;
    if !(a < b) {
        bail!("interval endpoints must satisfy a < b");
    }
    Ok((a, b))
}

/// Coefficient index from `c1`..`c4`.
pub fn index(text: &str) -> Result<usize> {
    match text.trim() {
        "c1" => Ok(1),
        "c2" => Ok(2),
        "c3" => Ok(3),
        "c4" => Ok(4),
        other => bail!("expected one of c1, c2, c3, c4, got `{other}`"),
    }
}

/// `k=v,k=v,k=v` naming three distinct coefficients; returns them with the
/// missing index set to zero, and the missing index.
pub fn fixed(text: &str, rationalize: bool) -> Result<(QuarticCoeffs, usize)> {
    let mut c = QuarticCoeffs::from_ints([0, 0, 0, 0]);
    let mut seen = [false; 4];
    for item in text.split(',') {
        let (key, value) = item.split_once('=').with_context(|| format!("expected k=v, got `{item}`"))?;
        let i = index(key)?;
        if seen[i - 1] {
            bail!("c{i} given twice");
        }
        seen[i - 1] = true;
        c = c.with(i, rational(value, rationalize)?);
    }
    let missing: Vec<usize> = (1..=4).filter(|&i| !seen[i - 1]).collect();
    match missing[..] {
        [i] => Ok((c, i)),
        _ => bail!("--fix must name exactly three of c1..c4"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use bicheb::rational::ratio;

    #[test]
    fn decimals_are_gated() {
        assert!(rational("0.5", false).is_err());
        assert_eq!(rational("0.5", true).unwrap(), ratio(1, 2));
        assert_eq!(rational("-3/4", false).unwrap(), ratio(-3, 4));
    }

    #[test]
    fn fixed_reports_missing_index() {
        let (c, i) = fixed("c2=-5,c3=0,c4=4", false).unwrap();
        assert_eq!(i, 1);
        assert_eq!(c, QuarticCoeffs::from_ints([0, -5, 0, 4]));
        assert!(fixed("c2=1,c2=1,c4=1", false).is_err());
    }

    #[test]
    fn monic_order() {
        assert_eq!(monic("0,-1", false).unwrap(), Poly::from_ints(&[-1, 0, 1]));
        assert_eq!(monic("", false).unwrap(), Poly::one());
    }
}
