//! End-to-end acceptance criteria. Prints one PASS/FAIL line per criterion
//! and exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use bicheb::bipartite::{build_solution, coefficients_from_recurrence, condition_aux, solve_c1, Branch, Normalization};
use bicheb::chebyshev::Convention;
use bicheb::continuation::{continuation_all, Settings};
use bicheb::elliptic::{complete_coefficient, decide, ClosedForm, Decision, DivisorOutcome, PieceKind};
use bicheb::fk::{fk_table_direct, fk_table_recurrence};
use bicheb::multipartite::MultipartiteSystem;
use bicheb::partitions::{partitions_bounded, Partition};
use bicheb::poly::Poly;
use bicheb::quartic::QuarticCoeffs;
use bicheb::rational::{int, ratio, Rational};
use num_traits::{Signed, Zero};
use proptest::prelude::RngExt;
use proptest::test_runner::{RngAlgorithm, TestRng};

type Outcome = Result<String, String>;

fn check(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn within(elapsed: Duration, limit: f64, what: &str) -> Result<(), String> {
    check(
        elapsed.as_secs_f64() < limit,
        format!("{what} took {:.3} s, limit {limit} s", elapsed.as_secs_f64()),
    )
}

fn closed(n: u32, c: [i64; 4]) -> Result<ClosedForm, String> {
    match decide(n, &QuarticCoeffs::from_ints(c)).map_err(|e| e.to_string())? {
        Decision::Elementary(cf) => Ok(cf),
        Decision::Refused(r) => Err(format!("decide(n = {n}) refused: {:?}", r.diagnostics)),
    }
}

fn p_of(coeffs: &[i64]) -> Poly {
    Poly::from_ints(coeffs)
}

fn seeded_rng(tag: u8) -> TestRng {
    let mut seed = [0u8; 32];
    seed[0] = tag;
    TestRng::from_seed(RngAlgorithm::ChaCha, &seed)
}

/// Rational in `[-3, 3]` with denominator at most 6.
fn rational_in_3(rng: &mut TestRng) -> Rational {
    let d = rng.random_range(1..=6i64);
    ratio(rng.random_range(-3 * d..=3 * d), d)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let cf = closed(2, [0, -5, 0, 4])?;
    let elapsed = start.elapsed();
    check(cf.branch == Branch::Circular, "branch is not circular")?;
    let expected = Poly::new(vec![ratio(-5, 3), int(0), ratio(2, 3)]);
    check(cf.g_over_m_rational() == Some(expected), format!("g/m = {}", cf.g))?;
    check(cf.m_rational() == Some(ratio(3, 2)), format!("m^2 = {}", cf.m2))?;
    within(elapsed, 0.1, "decide")?;
    Ok(format!("g/m = (2x^2 - 5)/3, m = 3/2 in {:.1} ms", elapsed.as_secs_f64() * 1e3))
}

fn criterion_2() -> Outcome {
    // Oracle: u' = 3x(x - 2) with u(0) = 3, u(2) = -1.
    let u = p_of(&[3, 0, -3, 1]);
    check(u.derivative() == p_of(&[0, -6, 3]), "oracle derivative")?;
    check(u.eval(&int(0)) == int(3) && u.eval(&int(2)) == int(-1), "oracle critical values")?;
    let factored = &(&p_of(&[-1, 0, 1]) * &p_of(&[-2, -2, 1])) * &p_of(&[4, -4, 1]);
    check(&(&u * &u) - &Poly::one() == factored, "oracle factorization of u^2 - 1")?;
    let p = &p_of(&[-1, 0, 1]) * &p_of(&[-2, -2, 1]);
    check(p == QuarticCoeffs::from_ints([-2, -3, 2, 2]).poly(), "oracle quartic")?;

    let start = Instant::now();
    let cf = closed(3, [-2, -3, 2, 2])?;
    let err = cf.numeric_check(-0.95, -0.75).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    check(cf.g_rational() == Some(u), format!("g = {}", cf.g))?;
    check(cf.m_rational() == Some(int(1)), format!("m^2 = {}", cf.m2))?;
    check(cf.d == int(9), format!("d = {}", cf.d))?;
    check(err <= 1e-8, format!("numeric error {err:e}"))?;
    within(elapsed, 1.0, "decide + numeric check")?;
    Ok(format!("g = x^3 - 3x^2 + 3, m = 1, d = 9, error {err:.1e}"))
}

fn criterion_3() -> Outcome {
    let cf = closed(2, [0, -2, 0, 2])?;
    check(cf.branch == Branch::Hyperbolic, "n = 2 branch is not hyperbolic")?;
    check(cf.pieces.iter().all(|p| p.kind == PieceKind::Arcsinh), "n = 2 pieces are not arcsinh")?;
    let err = cf.numeric_check(0.0, 1.0).map_err(|e| e.to_string())?;
    check(err <= 1e-8, format!("n = 2 numeric error {err:e}"))?;

    let cf6 = closed(6, [0, -2, 0, 2])?;
    let w = p_of(&[-1, 0, 1]);
    let expected = &w.pow(3).scale(&int(4)) + &w.scale(&int(3));
    check(cf6.g_rational() == Some(expected), format!("n = 6 g = {}", cf6.g))?;
    check(cf6.residual().is_zero(), "n = 6 residual nonzero")?;

    match decide(4, &QuarticCoeffs::from_ints([0, -2, 0, 2])).map_err(|e| e.to_string())? {
        Decision::Refused(r) => {
            let at2 = r.diagnostics.iter().find(|d| d.s == 2).map(|d| d.outcome);
            check(at2 == Some(DivisorOutcome::EvenOuterOnHyperbolic), "n = 4 refused for another reason")?;
        }
        Decision::Elementary(cf4) => {
            return Err(format!(
                "n = 4 is not refused: s = {} gives a {} solution with u = {}, m^2 = {}, exact residual zero = {}",
                cf4.s,
                cf4.branch.name(),
                cf4.u,
                cf4.m2,
                cf4.residual().is_zero()
            ))
        }
    }
    Ok(format!("arcsinh error {err:.1e}; n = 6 residual zero; n = 4 refused"))
}

fn criterion_4() -> Outcome {
    let cf = closed(2, [0, 2, 0, 1])?;
    check(cf.branch == Branch::Logarithmic, "branch is not logarithmic")?;
    check(cf.d.is_zero(), format!("d = {}", cf.d))?;
    check(cf.g_rational() == Some(p_of(&[1, 0, 1])), format!("g = {}", cf.g))?;
    check(
        cf.pieces.iter().all(|p| p.kind == PieceKind::Log && p.sigma == 1 && p.kappa == 1),
        "pieces are not +(1/2) log(x^2 + 1)",
    )?;
    let err = cf.numeric_check(1.0, 2.0).map_err(|e| e.to_string())?;
    check(err <= 1e-10, format!("numeric error {err:e}"))?;
    Ok(format!("(1/2) log(x^2 + 1), d = 0, error {err:.1e}"))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    for s in 1..=12 {
        check(fk_table_recurrence(s) == fk_table_direct(s), format!("tables differ at s = {s}"))?;
    }
    let elapsed = start.elapsed();
    within(elapsed, 10.0, "both routes for s <= 12")?;
    Ok(format!("s = 1..12 equal in {:.2} s", elapsed.as_secs_f64()))
}

fn criterion_6() -> Outcome {
    let mut rng = seeded_rng(6);
    for s in 1..=10u32 {
        let table = fk_table_recurrence(s);
        for k in 0..=s {
            let expected: Vec<Partition> = partitions_bounded(s - k, 4)
                .into_iter()
                .filter(|l| k > 0 || *l != Partition::ones(s))
                .collect();
            let mut got: Vec<Partition> = table.entry(k).keys().cloned().collect();
            got.sort();
            let mut want = expected;
            want.sort();
            check(got == want, format!("support differs at s = {s}, k = {k}"))?;
            check(table.entry(k).values().all(Signed::is_positive), format!("nonpositive m at s = {s}, k = {k}"))?;
        }
        check(
            !table.entry(0).contains_key(&Partition::ones(s)),
            format!("c1^{s} present in F_0 at s = {s}"),
        )?;
        let c = QuarticCoeffs::new(rational_in_3(&mut rng), rational_in_3(&mut rng), rational_in_3(&mut rng), rational_in_3(&mut rng));
        let lambda = ratio(rng.random_range(1..=7), rng.random_range(1..=7));
        let base = table.eval(&c);
        let scaled = table.eval(&c.rescaled(&lambda));
        for k in 0..=s as usize {
            let factor = num_traits::pow(lambda.recip(), s as usize - k);
            check(scaled[k] == &base[k] * factor, format!("grading fails at s = {s}, k = {k}"))?;
        }
    }
    Ok("positivity, grading and support hold for s <= 10".into())
}

fn criterion_7() -> Outcome {
    let c = QuarticCoeffs::from_ints([0, -3, 1, 1]);
    let diag = match decide(2, &c).map_err(|e| e.to_string())? {
        Decision::Refused(r) => r.diagnostics,
        Decision::Elementary(_) => return Err("decide(n = 2) did not refuse".into()),
    };
    let at2 = diag.iter().find(|d| d.s == 2).ok_or("no diagnostics for s = 2")?;
    check(at2.f1 == Some(int(0)), format!("F_1 = {:?}", at2.f1))?;
    check(at2.aux == Some(int(1)), format!("aux = {:?}", at2.aux))?;
    check(condition_aux(2, &c).map_err(|e| e.to_string())? == int(1), "condition_aux disagrees")?;
    // 4x^2(u^2 - m^2) - p u'^2 = 4x^2(u^2 - p - m^2); u^2 - p must be nonconstant.
    let u = coefficients_from_recurrence(2, &c).map_err(|e| e.to_string())?.poly();
    let p = c.poly();
    let gap = &(&u * &u) - &p;
    check(gap.degree().unwrap_or(0) >= 1, "u^2 - p is constant")?;
    let m2 = -gap.coeff(0);
    let expansion = &(&(&u * &u) - &Poly::constant(m2)).shift(2).scale(&int(4)) - &(&p * &u.derivative().pow(2));
    check(!expansion.is_zero(), "expansion vanishes at the best constant")?;
    Ok(format!("refused with F_1 = 0, aux = 1; u^2 - p = {gap} is not constant"))
}

fn criterion_8() -> Outcome {
    let c2 = int(-2);
    let zero = Rational::zero();
    let starts = solve_c1(4, &c2, &zero, &zero);
    check(starts.len() == 3, format!("{} starting roots", starts.len()))?;
    let target = ratio(1, 100);
    let paths = continuation_all(4, &c2, &target, &target, &Settings::default()).map_err(|e| e.to_string())?;
    check(paths.len() == 3 && paths.iter().all(|p| p.reached_end()), "not every path reached tau = 1")?;
    let tol = Rational::new(1.into(), 1_000_000_000.into());
    let mut failures = Vec::new();
    for p in &paths {
        let v = p.verification.as_ref().ok_or("missing verification")?;
        if !v.passes(&tol) {
            failures.push(format!("path {} (c1 = {:.6}): {:?}", p.index, p.c1, summarize(v)));
        }
    }
    check(failures.is_empty(), format!("3 roots, all paths reach tau = 1; verification fails: {}", failures.join("; ")))?;
    Ok("3 roots, all paths verified".into())
}

fn summarize(v: &bicheb::continuation::Verification) -> String {
    use bicheb::continuation::Verification;
    match v {
        Verification::Exact(_) => "exact".into(),
        Verification::ExactFailed { c1, f1, aux } => format!("rational c1 = {c1}, F_1 = {f1}, aux = {aux}"),
        Verification::CertifiedNumeric { residual_bound, .. } => {
            format!("irrational c1, residual sup-norm bound {:.3e}", bicheb::rational::to_f64(residual_bound))
        }
    }
}

fn criterion_9() -> Outcome {
    let mut rng = seeded_rng(9);
    for s in 2..=6u32 {
        for _ in 0..5 {
            let c = QuarticCoeffs::new(rational_in_3(&mut rng), rational_in_3(&mut rng), rational_in_3(&mut rng), rational_in_3(&mut rng));
            let sys = MultipartiteSystem::new(s, &c.poly(), &Poly::x()).map_err(|e| e.to_string())?;
            let bi = coefficients_from_recurrence(s, &c).map_err(|e| e.to_string())?;
            let fk = fk_table_recurrence(s).eval(&c);
            let aux = condition_aux(s, &c).map_err(|e| e.to_string())?;
            let multi = sys.coefficients();
            let shift = c.get(1) * &bi.f1 / int(2 * i64::from(s * s));
            for j in 0..=s as usize {
                let bip = match j {
                    0 => &bi.a[0] + &shift,
                    1 => bi.f1.clone(),
                    _ => bi.a[j].clone(),
                };
                check(multi[j] == bip, format!("a_{j} differs at s = {s}, c = {c}"))?;
                let direct = sys.fj_direct(j as u32).map_err(|e| e.to_string())?;
                let table = if j == 0 { &fk[0] + &shift } else { fk[j].clone() };
                check(direct == table, format!("F_{j} differs at s = {s}, c = {c}"))?;
            }
            let expected = [int(2) * &aux, -(c.get(3) * &bi.f1), int(-2) * c.get(4) * &bi.f1];
            check(sys.residuals() == &expected[..], format!("residuals differ at s = {s}, c = {c}"))?;
        }
    }
    Ok("25 instances agree exactly".into())
}

fn criterion_10() -> Outcome {
    let cf = closed(4, [0, -5, 0, 4])?;
    let w = Poly::new(vec![ratio(-5, 2), int(0), int(1)]);
    let g = &(&w * &w).scale(&ratio(4, 3)) - &Poly::constant(ratio(3, 2));
    check(cf.convention == Convention::GOverM, "even outer degree is not stored as g/m")?;
    check(cf.g == g.scale(&ratio(2, 3)), format!("g/m = {}", cf.g))?;
    check(cf.g_rational() == Some(g), "g differs")?;
    check(cf.m_rational() == Some(ratio(3, 2)), format!("m^2 = {}", cf.m2))?;
    check(cf.residual().is_zero(), "residual nonzero")?;
    let inner = build_solution(2, &QuarticCoeffs::from_ints([0, -5, 0, 4]), Normalization::UnitLeading)
        .map_err(|e| e.to_string())?;
    check(*inner.unit_leading_u() == w, "inner u differs from criterion 1")?;
    Ok("g = (4/3)(x^2 - 5/2)^2 - 3/2, m = 3/2, residual zero".into())
}

fn criterion_11() -> Outcome {
    let mut rng = seeded_rng(11);
    for n in (2..=20).step_by(2) {
        for _ in 0..50 {
            let fixed = QuarticCoeffs::new(int(0), rational_in_3(&mut rng), rational_in_3(&mut rng), rational_in_3(&mut rng));
            let done = complete_coefficient(n, &fixed, 1, None).map_err(|e| e.to_string())?;
            check(!done.roots.is_empty(), format!("no real c1 for n = {n}, fixed {fixed}"))?;
        }
    }
    let done = complete_coefficient(3, &QuarticCoeffs::from_ints([-2, 0, 2, 2]), 2, None).map_err(|e| e.to_string())?;
    let roots: Vec<_> = done.roots.iter().map(|r| r.root.exact.clone()).collect();
    check(roots == [Some(int(-3))], format!("n = 3 completion gives {roots:?}"))?;
    Ok("500 completions nonempty; n = 3 gives c2 = -3".into())
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("symmetric quartic reproduction", criterion_1),
        ("worked circular instance", criterion_2),
        ("hyperbolic branch", criterion_3),
        ("logarithmic branch", criterion_4),
        ("dual-route F tables", criterion_5),
        ("F table properties", criterion_6),
        ("soundness negative control", criterion_7),
        ("continuation", criterion_8),
        ("cross-framework consistency", criterion_9),
        ("composition closure", criterion_10),
        ("coefficient completion", criterion_11),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(reason) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {reason}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
