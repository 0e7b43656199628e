//! Adaptive Gauss–Kronrod (7/15) quadrature, used only as an independent
//! floating-point check of closed forms.

use alloc::vec::Vec;

use crate::error::QuadratureError;
use crate::poly::Poly;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
/// Gauss weights for the nodes `XGK[1], XGK[3], XGK[5], XGK[7]`.
const WG: [f64; 4] = [0.129_484_966_168_869_7, 0.279_705_391_489_276_7, 0.381_830_050_505_118_9, 0.417_959_183_673_469_4];

const MAX_DEPTH: u32 = 50;

/// An integral value with its error estimate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
}

/// `x/√(sign·p(x))`, evaluated in floating point.
#[derive(Clone, Debug, PartialEq)]
pub struct Integrand {
    coeffs: Vec<f64>,
    sign: f64,
}

impl Integrand {
    /// `sign` is `+1` for `x/√p` and `−1` for `x/√(−p)`.
    pub fn new(p: &Poly, sign: i32) -> Self {
        Integrand { coeffs: p.to_f64_coeffs(), sign: if sign < 0 { -1.0 } else { 1.0 } }
    }

    pub fn radicand(&self, x: f64) -> f64 {
        self.sign * self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn eval(&self, x: f64) -> Result<f64, QuadratureError> {
        let r = self.radicand(x);
        if r > 0.0 {
            Ok(x / libm::sqrt(r))
        } else {
            Err(QuadratureError::RegionViolation(x))
        }
    }
}

/// The 15-point Kronrod value and its difference from the embedded 7-point
/// Gauss value on `[a, b]`.
fn kronrod<E>(f: &mut impl FnMut(f64) -> Result<f64, E>, a: f64, b: f64) -> Result<Estimate, E> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center)?;
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for (n, (&x, &w)) in XGK.iter().zip(&WGK).take(7).enumerate() {
        let dx = half * x;
        let pair = f(center - dx)? + f(center + dx)?;
        kronrod += w * pair;
        if n % 2 == 1 {
            gauss += WG[n / 2] * pair;
        }
    }
    Ok(Estimate { value: kronrod * half, error: ((kronrod - gauss) * half).abs() })
}

/// `∫_a^b f` to absolute tolerance `tol`, bisecting locally (depth at most 50).
/// Fails when the accumulated error estimate still exceeds `tol`.
pub fn integrate_adaptive(mut f: impl FnMut(f64) -> f64, a: f64, b: f64, tol: f64) -> Result<Estimate, QuadratureError> {
    integrate_fallible(|x| Ok(f(x)), a, b, tol)
}

/// `∫_a^b x/√(±p)`, failing if any node leaves the region where the radicand
/// is positive.
pub fn integrate_elliptic(integrand: &Integrand, a: f64, b: f64, tol: f64) -> Result<Estimate, QuadratureError> {
    integrate_fallible(|x| integrand.eval(x), a, b, tol)
}

fn integrate_fallible(
    mut f: impl FnMut(f64) -> Result<f64, QuadratureError>,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<Estimate, QuadratureError> {
    if a == b {
        return Ok(Estimate { value: 0.0, error: 0.0 });
    }
    let whole = kronrod(&mut f, a, b)?;
    let total = recurse(&mut f, a, b, whole, tol, 0)?;
    if total.error > tol {
        return Err(QuadratureError::ToleranceNotReached { tol, estimate: total.error });
    }
    Ok(total)
}

fn recurse(
    f: &mut impl FnMut(f64) -> Result<f64, QuadratureError>,
    a: f64,
    b: f64,
    here: Estimate,
    tol: f64,
    depth: u32,
) -> Result<Estimate, QuadratureError> {
    if here.error <= tol || depth >= MAX_DEPTH {
        return Ok(here);
    }
    let mid = 0.5 * (a + b);
    let left = kronrod(f, a, mid)?;
    let right = kronrod(f, mid, b)?;
    let refined = left.error + right.error;
    // Accept when the two halves agree with the parent to the requested
    // precision and the halves are already tight.
    if refined <= tol && (left.value + right.value - here.value).abs() <= tol {
        return Ok(Estimate { value: left.value + right.value, error: refined });
    }
    let l = recurse(f, a, mid, left, tol / 2.0, depth + 1)?;
    let r = recurse(f, mid, b, right, tol / 2.0, depth + 1)?;
    Ok(Estimate { value: l.value + r.value, error: l.error + r.error })
}
