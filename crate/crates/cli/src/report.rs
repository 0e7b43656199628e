//! Text and JSON views of library results. Every view is a pure function of
//! its input, so repeated runs print identical bytes.

use std::fmt::Write as _;

use bicheb::bipartite::BipartiteSolution;
use bicheb::chebyshev::Convention;
use bicheb::continuation::{PathResult, StopReason, Verification};
use bicheb::elliptic::{ClosedForm, Completion, Decision, DivisorDiagnostics, DivisorOutcome};
use bicheb::fk::FkTable;
use bicheb::multipartite::{IntegrationConstant, MultipartiteSystem};
use bicheb::poly::Poly;
use bicheb::rational::{to_f64, Rational};
use bicheb::render::{render, Format};
use bicheb::roots::RealRoot;
use num_traits::Zero;
use serde_json::{json, Value};

pub fn rat(r: &Rational) -> String {
    r.to_string()
}

fn opt_rat(r: &Option<Rational>) -> Value {
    r.as_ref().map_or(Value::Null, |r| Value::String(rat(r)))
}

/// Ascending coefficients as strings.
pub fn coeffs(p: &Poly) -> Value {
    Value::Array(p.coeffs().iter().map(|c| Value::String(rat(c))).collect())
}

fn convention_name(c: Convention) -> &'static str {
    match c {
        Convention::G => "g",
        Convention::GOverM => "g-over-m",
    }
}

fn outcome_name(o: DivisorOutcome) -> &'static str {
    match o {
        DivisorOutcome::DegreeTooSmall => "degree-too-small",
        DivisorOutcome::ConditionsFail => "conditions-fail",
        DivisorOutcome::EvenOuterOnHyperbolic => "even-outer-on-hyperbolic",
        DivisorOutcome::Accepted => "accepted",
    }
}

/// Largest quadrature discrepancy over one window inside each validity
/// interval (clipped to `[-4, 4]`, 5% standoff from the ends).
pub fn self_check(cf: &ClosedForm) -> Option<f64> {
    let mut worst: Option<f64> = None;
    for (iv, _) in cf.validity_intervals() {
        let (a, b) = (iv.lo.approx().max(-4.0), iv.hi.approx().min(4.0));
        let w = b - a;
        if !(w > 1e-6) {
            continue;
        }
        let err = cf.numeric_check(a + 0.05 * w, b - 0.05 * w).ok()?;
        worst = Some(worst.map_or(err, |x: f64| x.max(err)));
    }
    worst
}

pub fn diagnostics_json(diags: &[DivisorDiagnostics]) -> Value {
    Value::Array(
        diags
            .iter()
            .map(|d| {
                json!({
                    "s": d.s,
                    "f1": opt_rat(&d.f1),
                    "aux": opt_rat(&d.aux),
                    "d": opt_rat(&d.d),
                    "outcome": outcome_name(d.outcome),
                })
            })
            .collect(),
    )
}

pub fn diagnostics_text(diags: &[DivisorDiagnostics]) -> String {
    let mut out = String::from("divisors:\n");
    for d in diags {
        match (&d.f1, &d.aux, &d.d) {
            (Some(f1), Some(aux), Some(disc)) => {
                let _ = writeln!(
                    out,
                    "  s = {}: F_1 = {}, aux = {}, d = {} ({})",
                    d.s,
                    rat(f1),
                    rat(aux),
                    rat(disc),
                    outcome_name(d.outcome)
                );
            }
            _ => {
                let _ = writeln!(out, "  s = {}: {}", d.s, outcome_name(d.outcome));
            }
        }
    }
    out
}

pub fn closed_form_json(cf: &ClosedForm, verbose: bool) -> Value {
    let intervals: Vec<Value> = cf
        .pieces
        .iter()
        .map(|p| {
            json!({
                "lo": p.interval.lo.to_string(),
                "hi": p.interval.hi.to_string(),
                "sigma": p.sigma,
                "function": p.kind.name(),
                "radicand_sign": p.kind.radicand_sign(),
            })
        })
        .collect();
    let mut v = json!({
        "status": "elementary",
        "n": cf.n,
        "s": cf.s,
        "branch": cf.branch.name(),
        "d": rat(&cf.d),
        "m2": rat(&cf.m2),
        "u": coeffs(&cf.u),
        "G": { "convention": convention_name(cf.convention), "coeffs": coeffs(&cf.g) },
        "intervals": intervals,
        "residual_zero": cf.residual().is_zero(),
        "numeric_error": self_check(cf),
    });
    if verbose {
        v["diagnostics"] = diagnostics_json(&cf.diagnostics);
    }
    v
}

pub fn decision_json(n: u32, decision: &Decision, verbose: bool) -> Value {
    match decision {
        Decision::Elementary(cf) => closed_form_json(cf, verbose),
        Decision::Refused(r) => json!({
            "status": "refused",
            "n": n,
            "diagnostics": diagnostics_json(&r.diagnostics),
        }),
    }
}

pub fn closed_form_text(cf: &ClosedForm, verbose: bool) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "decision: elementary");
    let _ = writeln!(out, "n = {}, s = {}, N = {}", cf.n, cf.s, cf.outer_degree());
    let _ = writeln!(out, "branch: {}", cf.branch.name());
    let _ = writeln!(out, "d = {}", rat(&cf.d));
    let _ = writeln!(out, "m^2 = {}", rat(&cf.m2));
    let _ = writeln!(out, "u(x) = {}", cf.u);
    match cf.convention {
        Convention::G => {
            let _ = writeln!(out, "g(x) = {}", cf.g);
        }
        Convention::GOverM => {
            let _ = writeln!(out, "g(x)/m = {}", cf.g);
        }
    }
    let _ = writeln!(out, "identity residual zero: {}", cf.residual().is_zero());
    match self_check(cf) {
        Some(err) => {
            let _ = writeln!(out, "quadrature check: max error {err:.3e}");
        }
        None => {
            let _ = writeln!(out, "quadrature check: unavailable");
        }
    }
    out.push_str(&render(cf, Format::Text));
    out.push('\n');
    if verbose {
        out.push_str(&diagnostics_text(&cf.diagnostics));
    }
    out
}

pub fn decision_text(n: u32, decision: &Decision, verbose: bool) -> String {
    match decision {
        Decision::Elementary(cf) => closed_form_text(cf, verbose),
        Decision::Refused(r) => {
            let mut out = format!("decision: not elementary for n = {n}\n");
            out.push_str(&diagnostics_text(&r.diagnostics));
            out
        }
    }
}

pub fn fk_json(table: &FkTable, values: Option<&[Rational]>) -> Value {
    let s = table.s();
    let entries: Vec<Value> = (0..=s)
        .rev()
        .map(|k| {
            let terms: Vec<Value> = table
                .terms(k)
                .map(|(lambda, m)| json!({ "partition": lambda.parts(), "coeff": rat(m) }))
                .collect();
            let mut e = json!({ "k": k, "terms": terms });
            if let Some(v) = values {
                e["value"] = Value::String(rat(&v[k as usize]));
            }
            e
        })
        .collect();
    json!({ "s": s, "entries": entries })
}

pub fn fk_text(table: &FkTable, values: Option<&[Rational]>) -> String {
    let mut out = String::new();
    for k in (0..=table.s()).rev() {
        match values {
            Some(v) => {
                let _ = writeln!(out, "{}    [= {}]", table.format_entry(k), rat(&v[k as usize]));
            }
            None => {
                let _ = writeln!(out, "{}", table.format_entry(k));
            }
        }
    }
    out
}

pub fn root_json(r: &RealRoot) -> Value {
    match &r.exact {
        Some(v) => json!({ "exact": rat(v) }),
        None => json!({ "lo": rat(&r.lo), "hi": rat(&r.hi), "approx": r.approx() }),
    }
}

pub fn root_text(r: &RealRoot) -> String {
    match &r.exact {
        Some(v) => rat(v),
        None => format!("≈{:.12} in [{:.15}, {:.15}]", r.approx(), to_f64(&r.lo), to_f64(&r.hi)),
    }
}

pub fn solution_json(sol: &BipartiteSolution) -> Value {
    json!({
        "s": sol.s(),
        "branch": sol.branch().name(),
        "d": rat(sol.d()),
        "m2": rat(sol.m2()),
        "unit_leading_m2": rat(&sol.unit_leading_m2()),
        "leading": sol.leading().to_string(),
        "a": sol.a().iter().map(|a| a.to_string()).collect::<Vec<_>>(),
    })
}

pub fn solution_text(sol: &BipartiteSolution) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "  branch: {}, d = {}", sol.branch().name(), rat(sol.d()));
    match sol.u_rational() {
        Some(u) => {
            let _ = writeln!(out, "  u(x) = {u}");
        }
        None => {
            let terms: Vec<String> = sol
                .a()
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, a)| !a.is_zero())
                .map(|(k, a)| format!("({a})x^{k}"))
                .collect();
            let _ = writeln!(out, "  u(x) = {}", terms.join(" + "));
        }
    }
    let _ = writeln!(out, "  m^2 = {}", rat(sol.m2()));
    out
}

pub fn completion_json(done: &Completion, verbose: bool) -> Value {
    let roots: Vec<Value> = done
        .roots
        .iter()
        .map(|r| {
            let mut v = root_json(&r.root);
            if let Some(d) = &r.decision {
                v["decision"] = decision_json(done.n, d, verbose);
            }
            v
        })
        .collect();
    json!({
        "n": done.n,
        "s": done.s,
        "target": format!("c{}", done.target),
        "f1": coeffs(&done.f1),
        "roots": roots,
    })
}

pub fn completion_text(done: &Completion, verbose: bool) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n = {}, s = {}, solving for c{}", done.n, done.s, done.target);
    let _ = writeln!(out, "F_1 = {}", done.f1.display_in(&format!("c{}", done.target)));
    if done.roots.is_empty() {
        let _ = writeln!(out, "no real roots");
    }
    for r in &done.roots {
        let _ = writeln!(out, "c{} = {}", done.target, root_text(&r.root));
        if let Some(d) = &r.decision {
            for line in decision_text(done.n, d, verbose).lines() {
                let _ = writeln!(out, "  {line}");
            }
        }
    }
    out
}

pub fn multi_json(sys: &MultipartiteSystem, constant: Option<&IntegrationConstant>) -> Value {
    let mut v = json!({
        "s": sys.s(),
        "p": coeffs(sys.p()),
        "q": coeffs(sys.q()),
        "a": sys.coefficients().iter().map(rat).collect::<Vec<_>>(),
        "residuals": sys.residuals().iter().map(rat).collect::<Vec<_>>(),
        "solvable": sys.is_solvable(),
    });
    if let Some(k) = constant {
        v["m2"] = Value::String(rat(&k.m2));
        v["c"] = Value::String(rat(&k.c));
        v["chebyshev"] = Value::Bool(k.is_chebyshev());
    }
    v
}

pub fn multi_text(sys: &MultipartiteSystem, constant: Option<&IntegrationConstant>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p(x) = {}", sys.p());
    let _ = writeln!(out, "q(x) = {}", sys.q());
    let _ = writeln!(out, "u(x) = {}", sys.u());
    for (i, r) in sys.residuals().iter().enumerate() {
        let _ = writeln!(out, "R_{} = {}", -(i as i64) - 1, rat(r));
    }
    let _ = writeln!(out, "solvable: {}", sys.is_solvable());
    if let Some(k) = constant {
        let _ = writeln!(out, "m^2 = {}, c = {}", rat(&k.m2), rat(&k.c));
        let _ = writeln!(out, "chebyshev (c = 0): {}", k.is_chebyshev());
    }
    out
}

fn stop_name(s: StopReason) -> &'static str {
    match s {
        StopReason::Collision => "collision",
        StopReason::LostRealness => "lost-realness",
    }
}

fn verification_json(v: &Verification) -> Value {
    match v {
        Verification::Exact(sol) => json!({ "kind": "exact", "solution": solution_json(sol) }),
        Verification::ExactFailed { c1, f1, aux } => {
            json!({ "kind": "exact-failed", "c1": rat(c1), "f1": rat(f1), "aux": rat(aux) })
        }
        Verification::CertifiedNumeric { c1, width, residual_bound } => json!({
            "kind": "certified-numeric",
            "c1": rat(c1),
            "width": to_f64(width),
            "residual_bound": to_f64(residual_bound),
        }),
    }
}

pub fn path_json(p: &PathResult) -> Value {
    json!({
        "index": p.index,
        "start_c1": p.start_c1,
        "tau": p.tau,
        "c1": p.c1,
        "stopped": p.stopped.map(stop_name),
        "verification": p.verification.as_ref().map(verification_json),
    })
}

pub fn path_text(p: &PathResult) -> String {
    let mut out = format!("path {}: c1(0) = {:.12}, tau = {}, c1 = {:.12}", p.index, p.start_c1, p.tau, p.c1);
    if let Some(s) = p.stopped {
        let _ = write!(out, ", stopped: {}", stop_name(s));
    }
    match &p.verification {
        Some(Verification::Exact(sol)) => {
            let _ = write!(out, "\n  exact solution\n{}", solution_text(sol).trim_end());
        }
        Some(Verification::ExactFailed { c1, f1, aux }) => {
            let _ = write!(out, "\n  rational c1 = {}, conditions fail: F_1 = {}, aux = {}", rat(c1), rat(f1), rat(aux));
        }
        Some(Verification::CertifiedNumeric { residual_bound, .. }) => {
            let _ = write!(out, "\n  irrational c1, residual sup-norm bound on [-2, 2]: {:.3e}", to_f64(residual_bound));
        }
        None => {}
    }
    out.push('\n');
    out
}
