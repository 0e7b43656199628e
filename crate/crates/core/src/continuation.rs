//! Tracking the real roots of `F_1(c1; c2, τ·c3*, τ·c4*)` in `c1` as `τ` runs
//! from 0 to 1.
//!
//! At `τ = 0` the roots come from exact isolation. Paths are advanced together
//! along a shared `τ` grid with an Euler predictor and a Newton corrector in
//! `f64`; at `τ = 1` each path is matched to an exactly isolated root of the
//! target polynomial and verified.

use alloc::vec::Vec;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::bipartite::{
    build_solution, coefficients_from_recurrence, f1_in_c1, solve_c1, verify_identity, BipartiteSolution,
    Branch, Normalization,
};
use crate::chebyshev::Convention;
use crate::error::{BipartiteError, ContinuationError};
use crate::fk::fk_table_recurrence;
use crate::quartic::QuarticCoeffs;
use crate::rational::{int, Rational};
use crate::roots::{real_roots_default, RealRoot};

/// Step control for [`continuation`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Settings {
    pub initial_step: f64,
    /// Paths that still fail at this step size are stopped.
    pub min_step: f64,
    /// Two tracked roots closer than this count as colliding.
    pub collision_guard: f64,
    pub newton_tol: f64,
    pub newton_max_iter: u32,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            initial_step: 1.0 / 16.0,
            min_step: 1.0 / (1u64 << 30) as f64,
            collision_guard: 1e-6,
            newton_tol: 1e-12,
            newton_max_iter: 25,
        }
    }
}

/// Why a path stopped short of `τ = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StopReason {
    /// Came within the collision guard of another tracked root.
    Collision,
    /// The corrector no longer converges (the root is leaving the real line).
    LostRealness,
}

/// Verification of a path that reached `τ = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verification {
    /// The end point is rational and the exact identity holds.
    Exact(BipartiteSolution),
    /// The end point is rational but the identity fails (`aux ≠ 0`).
    ExactFailed { c1: Rational, f1: Rational, aux: Rational },
    /// The end point is irrational. `c1` is a rational inside an isolating
    /// interval of width `width`, and `residual_bound` bounds the sup norm on
    /// `[−2, 2]` of the identity residual built from it.
    CertifiedNumeric { c1: Rational, width: Rational, residual_bound: Rational },
}

impl Verification {
    /// Exact success, or a certified residual bound no larger than `tol`.
    pub fn passes(&self, tol: &Rational) -> bool {
        match self {
            Verification::Exact(_) => true,
            Verification::ExactFailed { .. } => false,
            Verification::CertifiedNumeric { residual_bound, .. } => residual_bound <= tol,
        }
    }
}

/// One tracked path.
#[derive(Clone, Debug, PartialEq)]
pub struct PathResult {
    /// 1-based position of the starting root in ascending order.
    pub index: usize,
    pub start_c1: f64,
    /// Largest `τ` reached.
    pub tau: f64,
    /// `c1` at `tau`.
    pub c1: f64,
    /// `None` when the path reached `τ = 1`.
    pub stopped: Option<StopReason>,
    /// Present exactly when `τ = 1` was reached.
    pub verification: Option<Verification>,
}

impl PathResult {
    pub fn reached_end(&self) -> bool {
        self.stopped.is_none()
    }
}

/// Tracks the `index`-th starting root (1-based, ascending).
pub fn continuation(
    s: u32,
    c2: &Rational,
    target_c3: &Rational,
    target_c4: &Rational,
    index: usize,
    settings: &Settings,
) -> Result<PathResult, ContinuationError> {
    let mut all = continuation_all(s, c2, target_c3, target_c4, settings)?;
    if index == 0 || index > all.len() {
        return Err(ContinuationError::InvalidBranchIndex { index, available: all.len() });
    }
    Ok(all.swap_remove(index - 1))
}

/// Tracks every real starting root simultaneously.
pub fn continuation_all(
    s: u32,
    c2: &Rational,
    target_c3: &Rational,
    target_c4: &Rational,
    settings: &Settings,
) -> Result<Vec<PathResult>, ContinuationError> {
    if s < 2 {
        return Err(BipartiteError::DegreeTooSmall(s).into());
    }
    let zero = Rational::zero();
    let starts = solve_c1(s, c2, &zero, &zero);
    let field = Homotopy::new(s, c2, target_c3, target_c4);
    let mut paths: Vec<Tracked> = starts
        .iter()
        .map(|r| Tracked { c1: r.approx(), tau: 0.0, stopped: None })
        .collect();

    let mut tau = 0.0f64;
    let mut h = settings.initial_step;
    while tau < 1.0 && paths.iter().any(|p| p.stopped.is_none()) {
        let step = h.min(1.0 - tau);
        let next_tau = if step >= 1.0 - tau { 1.0 } else { tau + step };
        let alive: Vec<usize> = (0..paths.len()).filter(|&i| paths[i].stopped.is_none()).collect();
        let mut proposed = Vec::with_capacity(alive.len());
        let mut failed = Vec::new();
        for &i in &alive {
            match field.advance(paths[i].c1, tau, next_tau, settings) {
                Some(c1) => proposed.push((i, c1)),
                None => failed.push(i),
            }
        }
        let colliding = collisions(&proposed, settings.collision_guard);
        if failed.is_empty() && colliding.is_empty() {
            for (i, c1) in proposed {
                paths[i].c1 = c1;
                paths[i].tau = next_tau;
            }
            tau = next_tau;
            h = (2.0 * h).min(settings.initial_step);
        } else if step > settings.min_step {
            h = step / 2.0;
        } else {
            for i in failed {
                paths[i].stopped = Some(StopReason::LostRealness);
            }
            for i in colliding {
                paths[i].stopped = Some(StopReason::Collision);
            }
        }
    }

    let target_roots = if paths.iter().any(|p| p.stopped.is_none()) {
        real_roots_default(&f1_in_c1(s, c2, target_c3, target_c4)).unwrap_or_default()
    } else {
        Vec::new()
    };
    let c = |c1: Rational| QuarticCoeffs::new(c1, c2.clone(), target_c3.clone(), target_c4.clone());
    Ok(paths
        .iter()
        .zip(&starts)
        .enumerate()
        .map(|(n, (p, start))| {
            let verification = match p.stopped {
                Some(_) => None,
                None => nearest_root(&target_roots, p.c1).map(|root| verify_end(s, root, &c)),
            };
            PathResult {
                index: n + 1,
                start_c1: start.approx(),
                tau: p.tau,
                c1: p.c1,
                stopped: p.stopped,
                verification,
            }
        })
        .collect())
}

struct Tracked {
    c1: f64,
    tau: f64,
    stopped: Option<StopReason>,
}

/// Indices whose proposed values lie within `guard` of a neighbor.
fn collisions(proposed: &[(usize, f64)], guard: f64) -> Vec<usize> {
    let mut sorted: Vec<(usize, f64)> = proposed.to_vec();
    sorted.sort_by(|a, b| a.1.total_cmp(&b.1));
    let mut out = Vec::new();
    for w in sorted.windows(2) {
        if (w[1].1 - w[0].1).abs() < guard {
            out.push(w[0].0);
            out.push(w[1].0);
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

fn nearest_root(roots: &[RealRoot], c1: f64) -> Option<&RealRoot> {
    roots.iter().min_by(|a, b| (a.approx() - c1).abs().total_cmp(&(b.approx() - c1).abs()))
}

fn verify_end(s: u32, root: &RealRoot, c: &impl Fn(Rational) -> QuarticCoeffs) -> Verification {
    if let Some(exact) = &root.exact {
        let coeffs = c(exact.clone());
        return match build_solution(s, &coeffs, Normalization::UnitLeading) {
            Ok(sol) => Verification::Exact(sol),
            Err(BipartiteError::ConditionsNotMet { f1, aux }) => {
                Verification::ExactFailed { c1: exact.clone(), f1, aux }
            }
            Err(_) => unreachable!("rational data never breaks the verified identity"),
        };
    }
    let c1 = root.midpoint();
    let coeffs = c(c1.clone());
    let rec = coefficients_from_recurrence(s, &coeffs).expect("s >= 2");
    let u = rec.poly();
    let s2 = int(i64::from(s) * i64::from(s));
    let d = &s2 * &rec.a[0] * &rec.a[0] - int(4) * coeffs.get(4) * &rec.a[2] * &rec.a[2];
    let m2 = d.abs() / &s2;
    let residual = verify_identity(&u, Convention::G, &coeffs.poly(), s, &m2, Branch::from_discriminant(&d));
    Verification::CertifiedNumeric { c1, width: root.width(), residual_bound: residual.sup_norm_bound(&int(2)) }
}

/// `F_1 = Σ A_{jk} c1^j τ^k` in floating point.
struct Homotopy {
    terms: Vec<(i32, i32, f64)>,
}

impl Homotopy {
    fn new(s: u32, c2: &Rational, t3: &Rational, t4: &Rational) -> Self {
        let table = fk_table_recurrence(s);
        let terms = table
            .entry(1)
            .iter()
            .filter_map(|(lambda, m)| {
                let (n2, n3, n4) = (lambda.count(2), lambda.count(3), lambda.count(4));
                let coeff = m * num_traits::pow(c2.clone(), n2) * num_traits::pow(t3.clone(), n3)
                    * num_traits::pow(t4.clone(), n4);
                let value = coeff.to_f64()?;
                (value != 0.0).then_some((lambda.count(1) as i32, (n3 + n4) as i32, value))
            })
            .collect();
        Homotopy { terms }
    }

    /// `(F, ∂F/∂c1, ∂F/∂τ)`.
    fn eval(&self, c1: f64, tau: f64) -> (f64, f64, f64) {
        let (mut f, mut fc, mut ft) = (0.0, 0.0, 0.0);
        for &(j, k, a) in &self.terms {
            let cj = libm::pow(c1, f64::from(j));
            let tk = libm::pow(tau, f64::from(k));
            f += a * cj * tk;
            if j > 0 {
                fc += a * f64::from(j) * libm::pow(c1, f64::from(j - 1)) * tk;
            }
            if k > 0 {
                ft += a * cj * f64::from(k) * libm::pow(tau, f64::from(k - 1));
            }
        }
        (f, fc, ft)
    }

    /// Euler step from `(c1, tau)` to `next_tau`, then Newton at `next_tau`.
    fn advance(&self, c1: f64, tau: f64, next_tau: f64, settings: &Settings) -> Option<f64> {
        let (_, fc, ft) = self.eval(c1, tau);
        if fc == 0.0 {
            return None;
        }
        let predicted = c1 - ft / fc * (next_tau - tau);
        let mut x = predicted;
        for _ in 0..settings.newton_max_iter {
            let (f, fc, _) = self.eval(x, next_tau);
            if fc == 0.0 || !f.is_finite() {
                return None;
            }
            let dx = f / fc;
            x -= dx;
            if !x.is_finite() {
                return None;
            }
            if dx.abs() <= settings.newton_tol * x.abs().max(1.0) {
                // Corrections far beyond the predictor distance signal a jump.
                let drift = (x - predicted).abs();
                let travel = (predicted - c1).abs().max(settings.collision_guard);
                return (drift <= 4.0 * travel + 1e-9).then_some(x);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn constant_paths() {
        let settings = Settings::default();
        let path = continuation(3, &int(-3), &int(2), &int(2), 1, &settings).unwrap();
        assert!(path.reached_end());
        match path.verification {
            Some(Verification::Exact(sol)) => assert_eq!(sol.coeffs().get(1), int(-2)),
            other => panic!("unexpected {other:?}"),
        }
        let path = continuation(2, &int(-2), &int(0), &ratio(1, 100), 1, &settings).unwrap();
        assert!(matches!(path.verification, Some(Verification::Exact(_))));
    }

    #[test]
    fn identity_path_without_targets() {
        let all = continuation_all(4, &int(-2), &int(0), &int(0), &Settings::default()).unwrap();
        assert_eq!(all.len(), 3);
        for p in &all {
            assert!(p.reached_end());
            assert!((p.c1 - p.start_c1).abs() < 1e-12);
        }
    }

    #[test]
    fn invalid_index() {
        let err = continuation(3, &int(-3), &int(0), &int(0), 3, &Settings::default()).unwrap_err();
        assert_eq!(err, ContinuationError::InvalidBranchIndex { index: 3, available: 2 });
    }

    #[test]
    fn irrational_end_points_are_certified() {
        let all = continuation_all(4, &int(-2), &ratio(1, 100), &ratio(1, 100), &Settings::default()).unwrap();
        assert_eq!(all.len(), 3);
        for p in &all {
            assert!(p.reached_end());
            assert!(p.verification.is_some());
        }
    }
}
