//! CSV samples of a closed form for plotting.

use std::path::Path;

use anyhow::{Context, Result};
use bicheb::elliptic::ClosedForm;

/// Points per piece.
const PER_PIECE: u32 = 64;

/// Writes `x, integrand, antiderivative, function, sigma` rows. Infinite
/// pieces are cut to `[-4, 4]`; each piece keeps a 1% standoff from its ends.
pub fn emit(cf: &ClosedForm, path: &Path) -> Result<usize> {
    let mut w = csv::Writer::from_path(path).with_context(|| format!("cannot create {}", path.display()))?;
    w.write_record(["x", "integrand", "antiderivative", "function", "sigma"])?;
    let coeffs = cf.p.to_f64_coeffs();
    let p = |x: f64| coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c);
    let mut rows = 0;
    for piece in &cf.pieces {
        let (a, b) = (piece.interval.lo.approx().max(-4.0), piece.interval.hi.approx().min(4.0));
        let width = b - a;
        if !(width > 0.0) {
            continue;
        }
        let sign = f64::from(piece.kind.radicand_sign());
        for i in 0..PER_PIECE {
            let x = a + width * (0.01 + 0.98 * f64::from(i) / f64::from(PER_PIECE - 1));
            let integrand = x / (sign * p(x)).sqrt();
            w.write_record([
                format!("{x}"),
                format!("{integrand}"),
                format!("{}", cf.antiderivative(piece, x)),
                piece.kind.name().to_string(),
                piece.sigma.to_string(),
            ])?;
            rows += 1;
        }
    }
    w.flush()?;
    Ok(rows)
}
