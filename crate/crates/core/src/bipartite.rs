//! Bipartite Chebyshev polynomials: degree-`s` solutions `u` of
//! `s²x²(u² ∓ m²) = p·u′²` for a monic quartic `p`.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::chebyshev::{compose_parity_exact, Convention, OuterFamily};
use crate::error::BipartiteError;
use crate::fk::fk_table_recurrence;
use crate::poly::Poly;
use crate::quartic::QuarticCoeffs;
use crate::rational::{int, Rational};
use crate::roots::{real_roots_default, RealRoot};
use crate::surd::Surd;

/// Which identity the solution satisfies, selected by the sign of `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    /// `d > 0`: `s²x²(u² − m²) = p·u′²`.
    Circular,
    /// `d < 0`: `s²x²(u² + m²) = p·u′²`.
    Hyperbolic,
    /// `d = 0`: `s²x²u² = p·u′²`.
    Logarithmic,
}

impl Branch {
    pub fn from_discriminant(d: &Rational) -> Self {
        if d.is_positive() {
            Branch::Circular
        } else if d.is_negative() {
            Branch::Hyperbolic
        } else {
            Branch::Logarithmic
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Branch::Circular => "circular",
            Branch::Hyperbolic => "hyperbolic",
            Branch::Logarithmic => "logarithmic",
        }
    }

    /// Outer family used when composing with this branch.
    pub fn family(self) -> OuterFamily {
        match self {
            Branch::Circular => OuterFamily::Cosine,
            Branch::Hyperbolic => OuterFamily::Sinh,
            Branch::Logarithmic => OuterFamily::Power,
        }
    }
}

/// How the free overall scale of `u` is fixed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Normalization {
    /// `a_s = 1`; every coefficient is rational.
    #[default]
    UnitLeading,
    /// `m = 1`; `a_s = s/√|d|` may be irrational.
    UnitAmplitude,
}

/// Output of the numeric coefficient recurrence with `a_s = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceOutput {
    /// `a_0, ..., a_s`; `a[1]` is always zero.
    pub a: Vec<Rational>,
    /// The value the recurrence produces at `k = 1`.
    pub f1: Rational,
}

impl RecurrenceOutput {
    /// `u = Σ a_k x^k`.
    pub fn poly(&self) -> Poly {
        Poly::new(self.a.clone())
    }
}

/// Runs `2(s²−k²)a_k = Σ_{i=1}^{4} (k+i)(2k+i)c_i a_{k+i}` downward from
/// `a_s = 1`, with `a_j = 0` for `j > s`. The value produced at `k = 1` is
/// reported as `F_1` and then replaced by zero before `a_0` is formed.
pub fn coefficients_from_recurrence(s: u32, c: &QuarticCoeffs) -> Result<RecurrenceOutput, BipartiteError> {
    if s < 2 {
        return Err(BipartiteError::DegreeTooSmall(s));
    }
    let su = s as usize;
    let mut a = vec![Rational::zero(); su + 1];
    a[su] = Rational::one();
    let mut f1 = Rational::zero();
    let s2 = i64::from(s) * i64::from(s);
    for k in (0..su).rev() {
        let mut acc = Rational::zero();
        for i in 1..=4usize {
            if k + i > su {
                break;
            }
            let weight = ((k + i) * (2 * k + i)) as i64;
            acc += c.get(i) * int(weight) * &a[k + i];
        }
        let kk = (k * k) as i64;
        let value = acc / int(2 * (s2 - kk));
        if k == 1 {
            f1 = value;
        } else {
            a[k] = value;
        }
    }
    Ok(RecurrenceOutput { a, f1 })
}

/// `c3·a_2 + 3c4·a_3` with `a_s = 1`; zero iff the `x³` coefficients of the
/// identity match.
pub fn condition_aux(s: u32, c: &QuarticCoeffs) -> Result<Rational, BipartiteError> {
    let rec = coefficients_from_recurrence(s, c)?;
    Ok(aux_from_coefficients(&rec.a, c))
}

fn aux_from_coefficients(a: &[Rational], c: &QuarticCoeffs) -> Rational {
    let a3 = a.get(3).cloned().unwrap_or_else(Rational::zero);
    c.get(3) * &a[2] + int(3) * c.get(4) * a3
}

/// `d = s²F_0² − 4c4·F_2²`.
pub fn discriminant(s: u32, c: &QuarticCoeffs) -> Result<Rational, BipartiteError> {
    let rec = coefficients_from_recurrence(s, c)?;
    Ok(discriminant_from_coefficients(s, &rec.a, c))
}

fn discriminant_from_coefficients(s: u32, a: &[Rational], c: &QuarticCoeffs) -> Rational {
    let s2 = int(i64::from(s) * i64::from(s));
    s2 * &a[0] * &a[0] - int(4) * c.get(4) * &a[2] * &a[2]
}

/// A verified solution of the bipartite identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteSolution {
    s: u32,
    c: QuarticCoeffs,
    unit_u: Poly,
    d: Rational,
    branch: Branch,
    normalization: Normalization,
    leading: Surd,
    m2: Rational,
}

impl BipartiteSolution {
    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn coeffs(&self) -> &QuarticCoeffs {
        &self.c
    }

    pub fn d(&self) -> &Rational {
        &self.d
    }

    pub fn branch(&self) -> Branch {
        self.branch
    }

    pub fn normalization(&self) -> Normalization {
        self.normalization
    }

    /// `m²` in the chosen normalization (`1` for unit amplitude, `0` on the
    /// logarithmic branch).
    pub fn m2(&self) -> &Rational {
        &self.m2
    }

    /// `m²` for the unit-leading `u`, i.e. `|d|/s²`.
    pub fn unit_leading_m2(&self) -> Rational {
        let s = int(i64::from(self.s));
        self.d.abs() / (&s * &s)
    }

    /// `u` with `a_s = 1`.
    pub fn unit_leading_u(&self) -> &Poly {
        &self.unit_u
    }

    /// `a_s` in the chosen normalization.
    pub fn leading(&self) -> &Surd {
        &self.leading
    }

    /// `a_0, ..., a_s` in the chosen normalization.
    pub fn a(&self) -> Vec<Surd> {
        let su = self.s as usize;
        (0..=su)
            .map(|k| self.leading.clone() * Surd::from_rational(self.unit_u.coeff(k)))
            .collect()
    }

    /// `u` in the chosen normalization, when it has rational coefficients.
    pub fn u_rational(&self) -> Option<Poly> {
        self.leading.as_rational().map(|l| self.unit_u.scale(l))
    }

    /// `u` in the chosen normalization over `ℚ(√|d|)`.
    pub fn u_surd(&self) -> Poly<Surd> {
        self.unit_u.map(|v| self.leading.clone() * Surd::from_rational(v.clone()))
    }
}

/// Procedure: check `F_1 = 0` and `aux = 0`, read off `d` and the branch,
/// fix the normalization, and confirm the identity exactly.
pub fn build_solution(
    s: u32,
    c: &QuarticCoeffs,
    normalization: Normalization,
) -> Result<BipartiteSolution, BipartiteError> {
    let rec = coefficients_from_recurrence(s, c)?;
    let aux = aux_from_coefficients(&rec.a, c);
    if !rec.f1.is_zero() || !aux.is_zero() {
        return Err(BipartiteError::ConditionsNotMet { f1: rec.f1, aux });
    }
    let d = discriminant_from_coefficients(s, &rec.a, c);
    let branch = Branch::from_discriminant(&d);
    let unit_u = rec.poly();
    let s_q = int(i64::from(s));
    let unit_m2 = d.abs() / (&s_q * &s_q);
    let p = c.poly();
    let residual = verify_identity(&unit_u, Convention::G, &p, s, &unit_m2, branch);
    if !residual.is_zero() {
        return Err(BipartiteError::IdentityResidualNonzero);
    }
    let (leading, m2) = match normalization {
        Normalization::UnitLeading => (Surd::one(), unit_m2),
        Normalization::UnitAmplitude => {
            if branch == Branch::Logarithmic {
                return Err(BipartiteError::NormalizationUndefined);
            }
            let ad = d.abs();
            (Surd::new(Rational::zero(), &s_q / &ad, ad), Rational::one())
        }
    };
    let solution = BipartiteSolution { s, c: c.clone(), unit_u, d, branch, normalization, leading, m2 };
    if normalization == Normalization::UnitAmplitude {
        let residual = identity_residual_surd(&solution.u_surd(), &p, s, branch);
        if !residual.is_zero() {
            return Err(BipartiteError::IdentityResidualNonzero);
        }
    }
    Ok(solution)
}

/// `n²x²(G² ∓ M) − p·G′²` with `M = m2` for [`Convention::G`] and `M = 1` for
/// [`Convention::GOverM`]; `−` on the circular branch, `+` on the hyperbolic
/// branch, and `M = 0` on the logarithmic branch. Zero iff the identity holds.
pub fn verify_identity(g: &Poly, convention: Convention, p: &Poly, n: u32, m2: &Rational, branch: Branch) -> Poly {
    let big_m = match (branch, convention) {
        (Branch::Logarithmic, _) => Rational::zero(),
        (_, Convention::G) => m2.clone(),
        (_, Convention::GOverM) => Rational::one(),
    };
    let shifted = match branch {
        Branch::Circular => &(g * g) - &Poly::constant(big_m),
        Branch::Hyperbolic => &(g * g) + &Poly::constant(big_m),
        Branch::Logarithmic => g * g,
    };
    let n2 = int(i64::from(n) * i64::from(n));
    let dg = g.derivative();
    &shifted.shift(2).scale(&n2) - &(p * &(&dg * &dg))
}

/// The unit-amplitude (`m = 1`) identity residual over `ℚ(√|d|)`.
fn identity_residual_surd(u: &Poly<Surd>, p: &Poly, s: u32, branch: Branch) -> Poly<Surd> {
    let one = Poly::constant(Surd::one());
    let uu = u * u;
    let shifted = match branch {
        Branch::Circular => &uu - &one,
        Branch::Hyperbolic => &uu + &one,
        Branch::Logarithmic => uu,
    };
    let s2 = Surd::from_rational(int(i64::from(s) * i64::from(s)));
    let du = u.derivative();
    let p_s = p.map(|v| Surd::from_rational(v.clone()));
    &shifted.shift(2).scale(&s2) - &(&p_s * &(&du * &du))
}

/// `T_N(u/m)`, `T̃_N(u/m)` or `u^N` composed in parity-exact form from the
/// unit-leading `u` and `m² = |d|/s²`.
pub fn compose_outer(sol: &BipartiteSolution, n_outer: u32) -> Result<(Poly, Convention), BipartiteError> {
    let m2 = sol.unit_leading_m2();
    Ok(compose_parity_exact(&sol.unit_u, &m2, sol.branch.family(), n_outer)?)
}

/// Exceptional extremum found by [`classify_shape`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exceptional {
    /// Its abscissa (always rational: it is the single root of a linear factor).
    pub location: Rational,
    /// `G` at that point.
    pub value: Rational,
    /// Whether the value lies above `+m` (otherwise below `−m`).
    pub above: bool,
}

/// Why a polynomial is not bipartite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NotBipartite {
    Constant,
    /// Fewer than `deg − 1` distinct real critical points.
    MissingRealCriticalPoints,
    /// A critical point of multiplicity above one.
    DegenerateCriticalPoint,
    /// Every critical value has modulus `m`.
    NoExceptionalExtremum,
    /// More than one critical value leaves the band.
    SeveralExceptional(usize),
    /// The one off-line critical value lies strictly inside `(−m, m)`.
    InsideBand,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Shape {
    Bipartite(Exceptional),
    NotBipartite(NotBipartite),
}

/// Decides whether `G` has `deg G − 1` simple real critical points, all with
/// `G² = M` except exactly one with `G² > M`. Here `M = m2` for
/// [`Convention::G`] and `1` for [`Convention::GOverM`].
pub fn classify_shape(g: &Poly, convention: Convention, m2: &Rational) -> Shape {
    let deg = match g.degree() {
        Some(d) if d >= 1 => d,
        _ => return Shape::NotBipartite(NotBipartite::Constant),
    };
    let big_m = match convention {
        Convention::G => m2.clone(),
        Convention::GOverM => Rational::one(),
    };
    let dg = g.derivative();
    if dg.is_zero() || dg.degree() == Some(0) {
        return Shape::NotBipartite(NotBipartite::NoExceptionalExtremum);
    }
    if dg.square_free().degree() != dg.degree() {
        return Shape::NotBipartite(NotBipartite::DegenerateCriticalPoint);
    }
    let critical = real_roots_default(&dg).expect("nonzero derivative");
    if critical.len() != deg - 1 {
        return Shape::NotBipartite(NotBipartite::MissingRealCriticalPoints);
    }
    let on_lines = dg.gcd(&(&(g * g) - &Poly::constant(big_m.clone())));
    let off = dg.exact_div(&on_lines).expect("gcd divides").monic();
    match off.degree() {
        Some(0) => Shape::NotBipartite(NotBipartite::NoExceptionalExtremum),
        Some(1) => {
            let location = -off.coeff(0);
            let value = g.eval(&location);
            if &value * &value <= big_m {
                return Shape::NotBipartite(NotBipartite::InsideBand);
            }
            let above = value.is_positive();
            Shape::Bipartite(Exceptional { location, value, above })
        }
        Some(k) => Shape::NotBipartite(NotBipartite::SeveralExceptional(k)),
        None => unreachable!("quotient of a nonzero polynomial"),
    }
}

/// `F_1(c1; c2, c3, c4)` as a polynomial in `c1`.
pub fn f1_in_c1(s: u32, c2: &Rational, c3: &Rational, c4: &Rational) -> Poly {
    let c = QuarticCoeffs::new(Rational::zero(), c2.clone(), c3.clone(), c4.clone());
    fk_table_recurrence(s).univariate(1, &c, 1)
}

/// Real roots of `F_1` in `c1`, ascending; rational roots are exact.
pub fn solve_c1(s: u32, c2: &Rational, c3: &Rational, c4: &Rational) -> Vec<RealRoot> {
    let f1 = f1_in_c1(s, c2, c3, c4);
    real_roots_default(&f1).unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn q(c: [i64; 4]) -> QuarticCoeffs {
        QuarticCoeffs::from_ints(c)
    }

    #[test]
    fn recurrence_examples() {
        let r = coefficients_from_recurrence(3, &q([-2, -3, 2, 2])).unwrap();
        assert_eq!(r.a, [int(3), int(0), int(-3), int(1)]);
        assert!(r.f1.is_zero());
        let r = coefficients_from_recurrence(2, &q([0, -5, 0, 4])).unwrap();
        assert_eq!(r.a, [ratio(-5, 2), int(0), int(1)]);
        assert_eq!(coefficients_from_recurrence(2, &q([1, 0, 0, 0])).unwrap().f1, int(1));
        assert_eq!(coefficients_from_recurrence(1, &q([0, 0, 0, 0])), Err(BipartiteError::DegreeTooSmall(1)));
    }

    #[test]
    fn aux_and_discriminant() {
        assert!(condition_aux(3, &q([-2, -3, 2, 2])).unwrap().is_zero());
        assert_eq!(condition_aux(2, &q([0, -3, 1, 1])).unwrap(), int(1));
        assert_eq!(discriminant(3, &q([-2, -3, 2, 2])).unwrap(), int(9));
        assert_eq!(discriminant(2, &q([0, -2, 0, 2])).unwrap(), int(-4));
        assert!(discriminant(2, &q([0, 2, 0, 1])).unwrap().is_zero());
    }

    #[test]
    fn build_examples() {
        let sol = build_solution(3, &q([-2, -3, 2, 2]), Normalization::UnitLeading).unwrap();
        assert_eq!(sol.unit_leading_u(), &Poly::from_ints(&[3, 0, -3, 1]));
        assert_eq!(sol.m2(), &int(1));
        assert_eq!(sol.branch(), Branch::Circular);

        let sol = build_solution(2, &q([0, -2, 0, 2]), Normalization::UnitLeading).unwrap();
        assert_eq!(sol.unit_leading_u(), &Poly::from_ints(&[-1, 0, 1]));
        assert_eq!(sol.branch(), Branch::Hyperbolic);
        assert_eq!(sol.m2(), &int(1));

        let sol = build_solution(2, &q([0, 2, 0, 1]), Normalization::UnitLeading).unwrap();
        assert_eq!(sol.branch(), Branch::Logarithmic);
        assert!(sol.m2().is_zero());
        assert_eq!(
            build_solution(2, &q([0, 2, 0, 1]), Normalization::UnitAmplitude),
            Err(BipartiteError::NormalizationUndefined)
        );
    }

    #[test]
    fn unit_amplitude_with_irrational_leading() {
        // d = 4·(-5/2)^2 - 4·4 = 9 gives a rational a_s = 2/3.
        let sol = build_solution(2, &q([0, -5, 0, 4]), Normalization::UnitAmplitude).unwrap();
        assert_eq!(sol.u_rational().unwrap(), Poly::new(vec![ratio(-5, 3), int(0), ratio(2, 3)]));
        // x^4 - 3x^2 + 2 = (x^2-1)(x^2-2): d = 4·(9/4) - 8 = 1, rational again;
        // x^4 - 4x^2 + 2 has d = 16 - 8 = 8, so a_s = 2/√8 is irrational.
        let sol = build_solution(2, &q([0, -4, 0, 2]), Normalization::UnitAmplitude).unwrap();
        assert!(sol.u_rational().is_none());
        assert_eq!(sol.leading().radicand(), &int(8));
        assert_eq!(sol.m2(), &int(1));
    }

    #[test]
    fn conditions_reported() {
        match build_solution(2, &q([0, -3, 1, 1]), Normalization::UnitLeading) {
            Err(BipartiteError::ConditionsNotMet { f1, aux }) => {
                assert!(f1.is_zero());
                assert_eq!(aux, int(1));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn composition_examples() {
        let sol = build_solution(2, &q([0, -5, 0, 4]), Normalization::UnitLeading).unwrap();
        let (g, conv) = compose_outer(&sol, 2).unwrap();
        assert_eq!(conv, Convention::GOverM);
        let u = sol.unit_leading_u();
        assert_eq!(g, &(u * u).scale(&ratio(8, 9)) - &Poly::one());
        assert!(verify_identity(&g, conv, &sol.coeffs().poly(), 4, sol.m2(), sol.branch()).is_zero());

        let sol = build_solution(2, &q([0, -2, 0, 2]), Normalization::UnitLeading).unwrap();
        let (g, conv) = compose_outer(&sol, 3).unwrap();
        let u = sol.unit_leading_u();
        assert_eq!(conv, Convention::G);
        assert_eq!(g, &u.pow(3).scale(&int(4)) + &u.scale(&int(3)));
        assert!(compose_outer(&sol, 2).is_err());
    }

    #[test]
    fn identity_controls() {
        let g = Poly::from_ints(&[3, 0, -3, 1]);
        let p = Poly::from_ints(&[2, 2, -3, -2, 1]);
        assert!(verify_identity(&g, Convention::G, &p, 3, &int(1), Branch::Circular).is_zero());
        let p5 = Poly::from_ints(&[5, 2, -3, -2, 1]);
        assert!(!verify_identity(&g, Convention::G, &p5, 3, &int(1), Branch::Circular).is_zero());
    }

    #[test]
    fn shapes() {
        let u = Poly::from_ints(&[3, 0, -3, 1]);
        match classify_shape(&u, Convention::G, &int(1)) {
            Shape::Bipartite(e) => {
                assert!(e.location.is_zero());
                assert_eq!(e.value, int(3));
                assert!(e.above);
            }
            other => panic!("unexpected {other:?}"),
        }
        let t3 = Poly::from_ints(&[0, -3, 0, 4]);
        assert_eq!(classify_shape(&t3, Convention::G, &int(1)), Shape::NotBipartite(NotBipartite::NoExceptionalExtremum));
        let cube = Poly::from_ints(&[0, 0, 0, 1]);
        assert_eq!(classify_shape(&cube, Convention::G, &int(1)), Shape::NotBipartite(NotBipartite::DegenerateCriticalPoint));
    }

    #[test]
    fn c1_roots() {
        let roots = solve_c1(3, &int(-3), &int(0), &int(0));
        let exact: Vec<_> = roots.iter().map(|r| r.exact.clone().unwrap()).collect();
        assert_eq!(exact, [int(-2), int(2)]);
        let roots = solve_c1(2, &int(7), &int(1), &int(-1));
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].exact, Some(int(0)));
        assert!(solve_c1(3, &int(3), &int(0), &int(0)).is_empty());
    }

    #[test]
    fn degree_four_solution_for_sinh_quartic() {
        // p = x^4 - 2x^2 + 2 also admits s = 4 with d > 0: u = x^4 - 2x^2 + 3/2.
        let sol = build_solution(4, &q([0, -2, 0, 2]), Normalization::UnitLeading).unwrap();
        assert_eq!(sol.branch(), Branch::Circular);
        assert_eq!(sol.unit_leading_u(), &Poly::new(vec![ratio(3, 2), int(0), int(-2), int(0), int(1)]));
        assert_eq!(sol.m2(), &ratio(1, 4));
    }
}
