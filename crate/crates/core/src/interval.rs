//! Real algebraic endpoints and the partition of the line by the real roots
//! of a polynomial and a set of extra split points.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::Poly;
use crate::rational::{int, simplest_between, to_f64, Rational};
use crate::roots::{real_roots_default, sturm_count, RealRoot};

/// A closed form for a real algebraic number of degree at most 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactForm {
    Rational(Rational),
    /// `a + b·√d` with `d > 1` square-free.
    Quadratic { a: Rational, b: Rational, d: BigInt },
}

impl ExactForm {
    /// The root of the monic quadratic `x² + bx + c` on the side of `-b/2`
    /// given by `upper`.
    fn from_monic_quadratic(b: &Rational, c: &Rational, upper: bool) -> Self {
        let a = -b / int(2);
        let disc = &a * &a - c;
        let n = disc.numer() * disc.denom();
        let (k, d) = split_square(&n);
        let coeff = Rational::new(k, disc.denom().clone());
        let coeff = if upper { coeff } else { -coeff };
        if d.is_one() {
            return ExactForm::Rational(a + coeff);
        }
        ExactForm::Quadratic { a, b: coeff, d }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            ExactForm::Rational(r) => to_f64(r),
            ExactForm::Quadratic { a, b, d } => {
                to_f64(a) + to_f64(b) * libm::sqrt(to_f64(&Rational::from_integer(d.clone())))
            }
        }
    }

    pub fn to_latex(&self) -> String {
        match self {
            ExactForm::Rational(r) => latex_rational(r),
            ExactForm::Quadratic { a, b, d } => {
                let root = alloc::format!("\\sqrt{{{d}}}");
                surd_text(a, b, &root, latex_rational)
            }
        }
    }
}

impl fmt::Display for ExactForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactForm::Rational(r) => write!(f, "{r}"),
            ExactForm::Quadratic { a, b, d } => {
                let root = alloc::format!("√{d}");
                f.write_str(&surd_text(a, b, &root, |r| alloc::format!("{r}")))
            }
        }
    }
}

fn latex_rational(r: &Rational) -> String {
    if r.is_integer() {
        alloc::format!("{r}")
    } else if r.is_negative() {
        alloc::format!("-\\frac{{{}}}{{{}}}", -r.numer(), r.denom())
    } else {
        alloc::format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

fn surd_text(a: &Rational, b: &Rational, root: &str, rat: impl Fn(&Rational) -> String) -> String {
    let mut out = String::new();
    let mag = b.abs();
    let term = if mag.is_one() {
        String::from(root)
    } else if mag.is_integer() {
        alloc::format!("{}{root}", rat(&mag))
    } else {
        alloc::format!("({}){root}", rat(&mag))
    };
    if a.is_zero() {
        if b.is_negative() {
            out.push('-');
        }
        out.push_str(&term);
    } else {
        let _ = write!(out, "{} {} {term}", rat(a), if b.is_negative() { "-" } else { "+" });
    }
    out
}

/// `n = k²·d` with `d` free of square factors found below `10⁶`.
fn split_square(n: &BigInt) -> (BigInt, BigInt) {
    let mut rest = n.clone();
    let mut k = BigInt::one();
    let mut f = BigInt::from(2);
    let limit = BigInt::from(1_000_000);
    while &f * &f <= rest && f < limit {
        let sq = &f * &f;
        while rest.is_multiple_of(&sq) {
            rest /= &sq;
            k *= &f;
        }
        f += 1;
    }
    (k, rest)
}

/// A real root of `poly`, isolated by `root`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraicPoint {
    pub root: RealRoot,
    pub poly: Poly,
    pub form: Option<ExactForm>,
}

impl AlgebraicPoint {
    pub fn approx(&self) -> f64 {
        match &self.form {
            Some(f) => f.to_f64(),
            None => self.root.approx(),
        }
    }
}

impl fmt::Display for AlgebraicPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.form {
            Some(form) => write!(f, "{form}"),
            None => write!(f, "≈{:.12}", self.root.approx()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Endpoint {
    NegInfinity,
    PosInfinity,
    Point(AlgebraicPoint),
}

impl Endpoint {
    pub fn approx(&self) -> f64 {
        match self {
            Endpoint::NegInfinity => f64::NEG_INFINITY,
            Endpoint::PosInfinity => f64::INFINITY,
            Endpoint::Point(p) => p.approx(),
        }
    }

    pub fn to_latex(&self) -> String {
        match self {
            Endpoint::NegInfinity => String::from("-\\infty"),
            Endpoint::PosInfinity => String::from("\\infty"),
            Endpoint::Point(p) => match &p.form {
                Some(form) => form.to_latex(),
                None => alloc::format!("\\approx {:.12}", p.root.approx()),
            },
        }
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Endpoint::NegInfinity => f.write_str("-∞"),
            Endpoint::PosInfinity => f.write_str("∞"),
            Endpoint::Point(p) => write!(f, "{p}"),
        }
    }
}

/// An open interval `(lo, hi)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Endpoint,
    pub hi: Endpoint,
}

impl Interval {
    pub fn is_whole_line(&self) -> bool {
        matches!((&self.lo, &self.hi), (Endpoint::NegInfinity, Endpoint::PosInfinity))
    }

    /// Whether `[a, b]` lies strictly inside, judged on the isolating
    /// brackets so the answer is conservative.
    pub fn contains_closed(&self, a: f64, b: f64) -> bool {
        let above_lo = match &self.lo {
            Endpoint::NegInfinity => true,
            Endpoint::PosInfinity => false,
            Endpoint::Point(p) => a > to_f64(&p.root.hi) && a > p.approx(),
        };
        let below_hi = match &self.hi {
            Endpoint::PosInfinity => true,
            Endpoint::NegInfinity => false,
            Endpoint::Point(p) => b < to_f64(&p.root.lo) && b < p.approx(),
        };
        a <= b && above_lo && below_hi
    }

    pub fn to_latex(&self) -> String {
        if self.is_whole_line() {
            return String::from("\\mathbb{R}");
        }
        alloc::format!("({}, {})", self.lo.to_latex(), self.hi.to_latex())
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_whole_line() {
            return f.write_str("ℝ");
        }
        write!(f, "({}, {})", self.lo, self.hi)
    }
}

/// One open cell of the partition built by [`partition_line`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub interval: Interval,
    /// A rational point inside the cell.
    pub sample: Rational,
    /// Whether each endpoint is a root of the base polynomial (rather than a
    /// split point only).
    pub lo_is_root: bool,
    pub hi_is_root: bool,
}

/// Cuts the line at the distinct real roots of `base` and of `splits`.
/// Points that are roots of both count as roots of `base`.
pub fn partition_line(base: &Poly, splits: &Poly) -> Vec<Cell> {
    let base_sf = nonzero_square_free(base);
    let split_sf = nonzero_square_free(splits);
    let common = base_sf.gcd(&split_sf);
    let extra = split_sf.exact_div(&common).expect("gcd divides");
    let all = &base_sf * &extra;
    let roots = if all.degree().unwrap_or(0) == 0 { Vec::new() } else { real_roots_default(&all).expect("nonzero") };

    let base_roots: Vec<RealRoot> = roots.iter().filter(|r| is_root_of(&base_sf, r)).cloned().collect();
    let extra_roots: Vec<RealRoot> = roots.iter().filter(|r| !is_root_of(&base_sf, r)).cloned().collect();
    let points: Vec<(Endpoint, bool)> = roots
        .iter()
        .map(|r| {
            let is_base = is_root_of(&base_sf, r);
            let (poly, siblings) = if is_base { (&base_sf, &base_roots) } else { (&extra, &extra_roots) };
            let form = exact_form(poly, r, siblings);
            (Endpoint::Point(AlgebraicPoint { root: r.clone(), poly: poly.clone(), form }), is_base)
        })
        .collect();

    if roots.is_empty() {
        return alloc::vec![Cell {
            interval: Interval { lo: Endpoint::NegInfinity, hi: Endpoint::PosInfinity },
            sample: Rational::zero(),
            lo_is_root: false,
            hi_is_root: false,
        }];
    }
    let mut cells = Vec::with_capacity(roots.len() + 1);
    cells.push(Cell {
        interval: Interval { lo: Endpoint::NegInfinity, hi: points[0].0.clone() },
        sample: &roots[0].lo - int(1),
        lo_is_root: false,
        hi_is_root: points[0].1,
    });
    for w in 0..roots.len() - 1 {
        cells.push(Cell {
            interval: Interval { lo: points[w].0.clone(), hi: points[w + 1].0.clone() },
            sample: open_sample(&roots[w].hi, &roots[w + 1].lo),
            lo_is_root: points[w].1,
            hi_is_root: points[w + 1].1,
        });
    }
    let last = roots.len() - 1;
    cells.push(Cell {
        interval: Interval { lo: points[last].0.clone(), hi: Endpoint::PosInfinity },
        sample: &roots[last].hi + int(1),
        lo_is_root: points[last].1,
        hi_is_root: false,
    });
    cells
}

/// Maximal open intervals on which `sign·p > 0`.
pub fn validity_intervals(p: &Poly, sign: i32) -> Vec<Interval> {
    let target = if sign < 0 { -1 } else { 1 };
    partition_line(p, &Poly::one())
        .into_iter()
        .filter(|c| p.sign_at(&c.sample) == target)
        .map(|c| c.interval)
        .collect()
}

/// A simple rational strictly between `lo < hi`.
fn open_sample(lo: &Rational, hi: &Rational) -> Rational {
    let quarter = (hi - lo) / int(4);
    simplest_between(&(lo + &quarter), &(hi - &quarter))
}

fn nonzero_square_free(p: &Poly) -> Poly {
    if p.is_zero() {
        Poly::one()
    } else {
        p.square_free()
    }
}

fn is_root_of(p: &Poly, r: &RealRoot) -> bool {
    match &r.exact {
        Some(x) => p.eval(x).is_zero(),
        None => sturm_count(p, &r.lo, &r.hi) > 0,
    }
}

/// A closed form when `r` is rational or a root of a rational quadratic
/// factor of `poly` (found among pairs of real roots).
fn exact_form(poly: &Poly, r: &RealRoot, siblings: &[RealRoot]) -> Option<ExactForm> {
    if let Some(x) = &r.exact {
        return Some(ExactForm::Rational(x.clone()));
    }
    let mut reduced = poly.monic();
    for s in siblings {
        if let Some(x) = &s.exact {
            reduced = reduced.exact_div(&Poly::new(alloc::vec![-x.clone(), Rational::one()]))?;
        }
    }
    let from_quadratic = |q: &Poly| {
        let b = q.coeff(1);
        let upper = r.approx() > to_f64(&(-&b / int(2)));
        ExactForm::from_monic_quadratic(&b, &q.coeff(0), upper)
    };
    if reduced.degree() == Some(2) {
        return Some(from_quadratic(&reduced));
    }
    for other in siblings {
        if other == r || other.exact.is_some() {
            continue;
        }
        let sum = simplest_between(&(&r.lo + &other.lo), &(&r.hi + &other.hi));
        let (plo, phi) = product_bounds(r, other);
        let prod = simplest_between(&plo, &phi);
        let candidate = Poly::new(alloc::vec![prod, -sum, Rational::one()]);
        if reduced.exact_div(&candidate).is_some() {
            return Some(from_quadratic(&candidate));
        }
    }
    None
}

fn product_bounds(a: &RealRoot, b: &RealRoot) -> (Rational, Rational) {
    let corners = [&a.lo * &b.lo, &a.lo * &b.hi, &a.hi * &b.lo, &a.hi * &b.hi];
    let lo = corners.iter().min().expect("four corners").clone();
    let hi = corners.iter().max().expect("four corners").clone();
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn quartic_with_surd_roots() {
        let p = Poly::from_ints(&[2, 2, -3, -2, 1]);
        let neg = validity_intervals(&p, -1);
        let shown: Vec<String> = neg.iter().map(ToString::to_string).collect();
        assert_eq!(shown, ["(-1, 1 - √3)", "(1, 1 + √3)"]);
        assert_eq!(neg[0].to_latex(), "(-1, 1 - \\sqrt{3})");
    }

    #[test]
    fn whole_line_and_empty() {
        let p = Poly::from_ints(&[2, 0, -2, 0, 1]);
        let pos = validity_intervals(&p, 1);
        assert_eq!(pos.len(), 1);
        assert!(pos[0].is_whole_line());
        assert_eq!(pos[0].to_string(), "ℝ");
        let sq = Poly::from_ints(&[1, 0, 2, 0, 1]);
        assert!(validity_intervals(&sq, -1).is_empty());
    }

    #[test]
    fn split_points_inside_cells() {
        let p = Poly::from_ints(&[2, 2, -3, -2, 1]);
        let h = Poly::from_ints(&[-6, 3]);
        let cells = partition_line(&p, &h);
        assert_eq!(cells.len(), 6);
        let split = cells.iter().find(|c| !c.hi_is_root && c.interval.hi != Endpoint::PosInfinity).unwrap();
        assert_eq!(split.interval.hi.to_string(), "2");
    }

    #[test]
    fn paired_irrational_roots() {
        // (x^2 - 2)(x^2 - 3)
        let p = Poly::from_ints(&[6, 0, -5, 0, 1]);
        let shown: Vec<String> = validity_intervals(&p, -1).iter().map(ToString::to_string).collect();
        assert_eq!(shown, ["(-√3, -√2)", "(√2, √3)"]);
        // x^4 - 4x^2 + 1 has roots ±√(2 ± √3) = ±(√6 ± √2)/2, degree 4: no form.
        let q = Poly::from_ints(&[1, 0, -4, 0, 1]);
        let v = validity_intervals(&q, -1);
        assert!(v[0].to_string().starts_with("(≈"));
    }

    #[test]
    fn contains() {
        let p = Poly::from_ints(&[2, 2, -3, -2, 1]);
        let neg = validity_intervals(&p, -1);
        assert!(neg[0].contains_closed(-0.95, -0.75));
        assert!(!neg[0].contains_closed(-0.95, -0.7));
    }
}
