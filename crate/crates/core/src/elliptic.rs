//! Deciding whether `∫ x/√(±p(x)) dx` is elementary for a monic quartic `p`
//! and a target degree `n`, and building the antiderivative when it is.
//!
//! With `h = g′/x` the identity `n²x²(g² ∓ m²) = p·g′²` becomes
//! `n²(g² ∓ m²) = p·h²`, which gives on each cell where `h` and `g` keep
//! their signs:
//!
//! - `p < 0`, `d > 0`: `∫ x/√(−p) = −sgn(h)/n · arccos(g/m)`
//! - `p > 0`, `d > 0`: `∫ x/√p = sgn(g)sgn(h)/n · arccosh(|g|/m)`
//! - `d < 0`: `∫ x/√p = sgn(h)/n · arcsinh(g/m)`
//! - `d = 0`: `∫ x/√p = sgn(g)sgn(h)/n · log|g|`

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::bipartite::{
    build_solution, coefficients_from_recurrence, compose_outer, verify_identity, Branch, Normalization,
};
use crate::chebyshev::Convention;
use crate::error::{BipartiteError, EllipticError};
use crate::fk::fk_table_recurrence;
use crate::interval::{partition_line, Interval};
use crate::poly::Poly;
use crate::quadrature::{integrate_elliptic, Integrand};
use crate::quartic::QuarticCoeffs;
use crate::rational::{divisors, int, rational_sqrt, to_f64, Rational};
use crate::roots::{real_roots_default, RealRoot};

/// The elementary function used on one cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PieceKind {
    /// `arccos(g/m)` where `p < 0`.
    Arccos,
    /// `arccosh(|g|/m)` where `p > 0` on the circular branch.
    Arccosh,
    /// `arcsinh(g/m)`.
    Arcsinh,
    /// `log|g|`.
    Log,
}

impl PieceKind {
    pub fn name(self) -> &'static str {
        match self {
            PieceKind::Arccos => "arccos",
            PieceKind::Arccosh => "arccosh",
            PieceKind::Arcsinh => "arcsinh",
            PieceKind::Log => "log",
        }
    }

    /// Sign of `p` on cells of this kind.
    pub fn radicand_sign(self) -> i32 {
        if self == PieceKind::Arccos {
            -1
        } else {
            1
        }
    }
}

/// `sigma/n · kind(argument)` on `interval`. `kappa` is the sign of `g` there,
/// so `|g| = kappa·g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub kind: PieceKind,
    pub interval: Interval,
    pub sigma: i32,
    pub kappa: i32,
    /// Whether the endpoints are roots of `p` (otherwise they are points
    /// where `g′/x` or `g` vanishes).
    pub lo_is_root: bool,
    pub hi_is_root: bool,
}

/// What happened at one divisor `s` of `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DivisorOutcome {
    /// `s = 1`: a linear `u` cannot have `a_1 = 0`.
    DegreeTooSmall,
    /// `F_1 ≠ 0` or `aux ≠ 0`.
    ConditionsFail,
    /// `d < 0` with `n/s` even.
    EvenOuterOnHyperbolic,
    Accepted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorDiagnostics {
    pub s: u32,
    pub f1: Option<Rational>,
    pub aux: Option<Rational>,
    pub d: Option<Rational>,
    pub outcome: DivisorOutcome,
}

/// An emitted antiderivative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub p: Poly,
    pub n: u32,
    pub s: u32,
    pub branch: Branch,
    pub d: Rational,
    /// `m²` belonging to `g` (and to the unit-leading `u`).
    pub m2: Rational,
    /// The unit-leading inner polynomial.
    pub u: Poly,
    /// `g` or `g/m`, per `convention`.
    pub g: Poly,
    pub convention: Convention,
    pub pieces: Vec<Piece>,
    pub diagnostics: Vec<DivisorDiagnostics>,
}

impl ClosedForm {
    pub fn outer_degree(&self) -> u32 {
        self.n / self.s
    }

    /// `m` when it is rational.
    pub fn m_rational(&self) -> Option<Rational> {
        rational_sqrt(&self.m2)
    }

    /// `g/m` with rational coefficients, when available.
    pub fn g_over_m_rational(&self) -> Option<Poly> {
        if self.branch == Branch::Logarithmic {
            return None;
        }
        match self.convention {
            Convention::GOverM => Some(self.g.clone()),
            Convention::G => self.m_rational().map(|m| self.g.scale(&m.recip())),
        }
    }

    /// `g` with rational coefficients, when available.
    pub fn g_rational(&self) -> Option<Poly> {
        match self.convention {
            Convention::G => Some(self.g.clone()),
            Convention::GOverM => self.m_rational().map(|m| self.g.scale(&m)),
        }
    }

    /// `n²x²(G² ∓ M) − p·G′²`.
    pub fn residual(&self) -> Poly {
        verify_identity(&self.g, self.convention, &self.p, self.n, &self.m2, self.branch)
    }

    /// Argument of the elementary function at `x`: `g/m`, or `g` on the
    /// logarithmic branch.
    pub fn argument(&self, x: f64) -> f64 {
        let value = self.g.eval_f64(x);
        match (self.branch, self.convention) {
            (Branch::Logarithmic, _) | (_, Convention::GOverM) => value,
            (_, Convention::G) => value / libm::sqrt(to_f64(&self.m2)),
        }
    }

    /// The antiderivative of `piece` at `x`, without the constant.
    pub fn antiderivative(&self, piece: &Piece, x: f64) -> f64 {
        let v = self.argument(x);
        let f = match piece.kind {
            PieceKind::Arccos => libm::acos(v.clamp(-1.0, 1.0)),
            PieceKind::Arccosh => libm::acosh((f64::from(piece.kappa) * v).max(1.0)),
            PieceKind::Arcsinh => libm::asinh(v),
            PieceKind::Log => libm::log(f64::from(piece.kappa) * v),
        };
        f64::from(piece.sigma) * f / f64::from(self.n)
    }

    /// The antiderivative at a split point inside a validity interval. There
    /// `h = 0` forces `G² = M`, so arccos and arccosh take their endpoint
    /// values exactly; evaluating them at a rounded `±1` would lose half the
    /// digits.
    fn split_value(&self, piece: &Piece, x: f64) -> f64 {
        let f = match piece.kind {
            PieceKind::Arccos if self.argument(x) < 0.0 => core::f64::consts::PI,
            PieceKind::Arccos | PieceKind::Arccosh => 0.0,
            PieceKind::Arcsinh | PieceKind::Log => return self.antiderivative(piece, x),
        };
        f64::from(piece.sigma) * f / f64::from(self.n)
    }

    /// Maximal intervals of constant sign of `p` covered by pieces, with the
    /// sign of `p` on each.
    pub fn validity_intervals(&self) -> Vec<(Interval, i32)> {
        let mut out: Vec<(Interval, i32)> = Vec::new();
        let mut open = false;
        for piece in &self.pieces {
            let sign = piece.kind.radicand_sign();
            if open && !piece.lo_is_root {
                let last = out.last_mut().expect("open interval");
                last.0.hi = piece.interval.hi.clone();
            } else {
                out.push((piece.interval.clone(), sign));
            }
            open = !piece.hi_is_root;
        }
        out
    }

    /// Sign of `p` on the validity interval containing `[a, b]` strictly.
    fn region_sign(&self, a: f64, b: f64) -> Result<i32, EllipticError> {
        self.validity_intervals()
            .into_iter()
            .find(|(iv, _)| iv.contains_closed(a.min(b), a.max(b)))
            .map(|(_, sign)| sign)
            .ok_or(EllipticError::IntervalNotValid)
    }

    /// `∫_a^b x/√(±p)` from the closed form, summing across split points.
    pub fn definite(&self, a: f64, b: f64) -> Result<f64, EllipticError> {
        let sign = self.region_sign(a, b)?;
        let (lo, hi, orient) = if a <= b { (a, b, 1.0) } else { (b, a, -1.0) };
        let mut total = 0.0;
        for piece in self.pieces.iter().filter(|p| p.kind.radicand_sign() == sign) {
            let l = piece.interval.lo.approx().max(lo);
            let h = piece.interval.hi.approx().min(hi);
            if l < h {
                let upper = if h < hi { self.split_value(piece, h) } else { self.antiderivative(piece, h) };
                let lower = if l > lo { self.split_value(piece, l) } else { self.antiderivative(piece, l) };
                total += upper - lower;
            }
        }
        Ok(orient * total)
    }

    /// Quadrature against the closed form on `[a, b]`, which must lie strictly
    /// inside one validity interval. Returns the largest discrepancy over the
    /// subintervals `[a, a + k(b−a)/8]`, `k = 1..8`.
    pub fn numeric_check(&self, a: f64, b: f64) -> Result<f64, EllipticError> {
        let sign = self.region_sign(a, b)?;
        let integrand = Integrand::new(&self.p, sign);
        let mut worst = 0.0f64;
        for k in 1..=8 {
            let t = a + (b - a) * f64::from(k) / 8.0;
            let quad = integrate_elliptic(&integrand, a, t, 1e-13)?;
            worst = worst.max((quad.value - self.definite(a, t)?).abs());
        }
        Ok(worst)
    }
}

/// Why no closed form was produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Refusal {
    pub n: u32,
    pub diagnostics: Vec<DivisorDiagnostics>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Elementary(ClosedForm),
    Refused(Refusal),
}

impl Decision {
    pub fn closed_form(&self) -> Option<&ClosedForm> {
        match self {
            Decision::Elementary(cf) => Some(cf),
            Decision::Refused(_) => None,
        }
    }

    pub fn diagnostics(&self) -> &[DivisorDiagnostics] {
        match self {
            Decision::Elementary(cf) => &cf.diagnostics,
            Decision::Refused(r) => &r.diagnostics,
        }
    }
}

/// Checks every positive divisor `s` of `n` for `F_1 = 0`, `aux = 0` and, when
/// `d < 0`, odd `n/s`; builds the closed form from the smallest accepted `s`.
pub fn decide(n: u32, c: &QuarticCoeffs) -> Result<Decision, EllipticError> {
    let diagnostics: Vec<DivisorDiagnostics> = divisors(n).into_iter().map(|s| diagnose(n, s, c)).collect();
    let chosen = diagnostics.iter().find(|d| d.outcome == DivisorOutcome::Accepted).map(|d| d.s);
    match chosen {
        Some(s) => Ok(Decision::Elementary(closed_form(n, s, c, diagnostics)?)),
        None => Ok(Decision::Refused(Refusal { n, diagnostics })),
    }
}

/// The closed form built from divisor `s` alone, or `None` when `s` fails
/// the conditions. The diagnostics list holds only `s`.
pub fn closed_form_at(n: u32, s: u32, c: &QuarticCoeffs) -> Result<Option<ClosedForm>, EllipticError> {
    if s == 0 || !n.is_multiple_of(s) {
        return Ok(None);
    }
    let diag = diagnose(n, s, c);
    if diag.outcome != DivisorOutcome::Accepted {
        return Ok(None);
    }
    closed_form(n, s, c, vec![diag]).map(Some)
}

fn diagnose(n: u32, s: u32, c: &QuarticCoeffs) -> DivisorDiagnostics {
    let rec = match coefficients_from_recurrence(s, c) {
        Ok(rec) => rec,
        Err(_) => {
            return DivisorDiagnostics { s, f1: None, aux: None, d: None, outcome: DivisorOutcome::DegreeTooSmall }
        }
    };
    let a3 = rec.a.get(3).cloned().unwrap_or_else(Rational::zero);
    let aux = c.get(3) * &rec.a[2] + int(3) * c.get(4) * a3;
    let s2 = int(i64::from(s) * i64::from(s));
    let d = s2 * &rec.a[0] * &rec.a[0] - int(4) * c.get(4) * &rec.a[2] * &rec.a[2];
    let outcome = if !rec.f1.is_zero() || !aux.is_zero() {
        DivisorOutcome::ConditionsFail
    } else if d < Rational::zero() && (n / s).is_multiple_of(2) {
        DivisorOutcome::EvenOuterOnHyperbolic
    } else {
        DivisorOutcome::Accepted
    };
    DivisorDiagnostics { s, f1: Some(rec.f1), aux: Some(aux), d: Some(d), outcome }
}

fn closed_form(
    n: u32,
    s: u32,
    c: &QuarticCoeffs,
    diagnostics: Vec<DivisorDiagnostics>,
) -> Result<ClosedForm, EllipticError> {
    let guard = |_: BipartiteError| EllipticError::IdentityResidualNonzero(s);
    let sol = build_solution(s, c, Normalization::UnitLeading).map_err(guard)?;
    let (g, convention) = compose_outer(&sol, n / s).map_err(guard)?;
    let p = c.poly();
    let m2 = sol.unit_leading_m2();
    let branch = sol.branch();
    if !verify_identity(&g, convention, &p, n, &m2, branch).is_zero() {
        return Err(EllipticError::IdentityResidualNonzero(s));
    }
    let pieces = build_pieces(&p, &g, branch).ok_or(EllipticError::IdentityResidualNonzero(s))?;
    Ok(ClosedForm {
        p,
        n,
        s,
        branch,
        d: sol.d().clone(),
        m2,
        u: sol.unit_leading_u().clone(),
        g,
        convention,
        pieces,
        diagnostics,
    })
}

/// Cells between consecutive roots of `p` and of `h = g′/x` (and of `g` on
/// the logarithmic branch), each with its exact signs.
fn build_pieces(p: &Poly, g: &Poly, branch: Branch) -> Option<Vec<Piece>> {
    let h = g.derivative().exact_div(&Poly::x())?;
    let splits = if branch == Branch::Logarithmic { &h * g } else { h.clone() };
    let mut pieces = Vec::new();
    for cell in partition_line(p, &splits) {
        let sp = p.sign_at(&cell.sample);
        let sh = h.sign_at(&cell.sample);
        let sg = g.sign_at(&cell.sample);
        let (kind, sigma) = match (branch, sp) {
            (Branch::Circular, -1) => (PieceKind::Arccos, -sh),
            (Branch::Circular, 1) => (PieceKind::Arccosh, sg * sh),
            (Branch::Hyperbolic, 1) => (PieceKind::Arcsinh, sh),
            (Branch::Logarithmic, 1) => (PieceKind::Log, sg * sh),
            _ => continue,
        };
        pieces.push(Piece {
            kind,
            interval: cell.interval,
            sigma,
            kappa: sg,
            lo_is_root: cell.lo_is_root,
            hi_is_root: cell.hi_is_root,
        });
    }
    Some(pieces)
}

/// Whether `F_1` has odd degree in `c_target` with nonzero leading term
/// for every `c` when the inner degree is `s`.
pub fn admissible(s: u32, target: usize) -> bool {
    match target {
        1 => s.is_multiple_of(2),
        2 => s % 4 == 3,
        4 => s % 8 == 5,
        _ => false,
    }
}

/// One real value of the completed coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompletedRoot {
    pub root: RealRoot,
    /// The decision for the completed quartic, present when the root is
    /// rational (decisions are exact-only).
    pub decision: Option<Decision>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Completion {
    pub n: u32,
    pub s: u32,
    pub target: usize,
    /// `F_1` as a polynomial in the target coefficient.
    pub f1: Poly,
    pub roots: Vec<CompletedRoot>,
}

/// Solves `F_1 = 0` for `c_target`, the other coefficients taken from
/// `fixed`. Without `forced_s`, uses the largest divisor of `n` for which the
/// leading term in `c_target` has odd degree.
pub fn complete_coefficient(
    n: u32,
    fixed: &QuarticCoeffs,
    target: usize,
    forced_s: Option<u32>,
) -> Result<Completion, EllipticError> {
    let divs = divisors(n);
    let s = match forced_s {
        Some(s) => s,
        None => {
            if divs.iter().all(|&s| s % 8 == 1) {
                return Err(EllipticError::ClassNotCovered(n));
            }
            *divs
                .iter()
                .rev()
                .find(|&&s| admissible(s, target))
                .ok_or(EllipticError::TargetNotAdmissible { n, target })?
        }
    };
    if s < 2 {
        return Err(EllipticError::TargetNotAdmissible { n, target });
    }
    let f1 = fk_table_recurrence(s).univariate(1, fixed, target);
    let roots = if f1.degree().unwrap_or(0) == 0 { Vec::new() } else { real_roots_default(&f1).unwrap_or_default() };
    let roots = roots
        .into_iter()
        .map(|root| {
            let decision = match &root.exact {
                Some(v) => Some(decide(n, &fixed.with(target, v.clone()))?),
                None => None,
            };
            Ok(CompletedRoot { root, decision })
        })
        .collect::<Result<Vec<_>, EllipticError>>()?;
    Ok(Completion { n, s, target, f1, roots })
}

/// Intervals where `sign·p > 0`.
pub fn validity_intervals(p: &Poly, sign: i32) -> Vec<Interval> {
    crate::interval::validity_intervals(p, sign)
}
