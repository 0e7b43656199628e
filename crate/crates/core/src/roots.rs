//! Certified real-root isolation for rational polynomials.
//!
//! Roots of each square-free factor are isolated with Descartes' rule of
//! signs on dyadic subintervals (Vincent–Collins–Akritas bisection), then
//! refined by sign bisection. Sturm sequences are provided for independent
//! root counting.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::RootError;
use crate::poly::Poly;
use crate::rational::{int, simplest_between, to_f64, Rational};

/// One real root, bracketed by `lo < root < hi` or known exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealRoot {
    pub lo: Rational,
    pub hi: Rational,
    /// Set when the root is rational and has been confirmed exactly; then
    /// `lo == hi == exact`.
    pub exact: Option<Rational>,
    pub multiplicity: usize,
}

impl RealRoot {
    fn exact_at(r: Rational, multiplicity: usize) -> Self {
        RealRoot { lo: r.clone(), hi: r.clone(), exact: Some(r), multiplicity }
    }

    /// Midpoint of the bracket (the root itself when exact).
    pub fn midpoint(&self) -> Rational {
        match &self.exact {
            Some(r) => r.clone(),
            None => (&self.lo + &self.hi) / int(2),
        }
    }

    pub fn approx(&self) -> f64 {
        to_f64(&self.midpoint())
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }
}

/// Default refinement width, `2^-64`.
pub fn default_width() -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << 64)
}

/// Isolates every distinct real root of `p`, optionally restricted to the
/// closed interval `range`, and refines each bracket to at most `width`.
/// Roots are sorted ascending and brackets are pairwise disjoint.
pub fn real_roots(
    p: &Poly,
    range: Option<(&Rational, &Rational)>,
    width: &Rational,
) -> Result<Vec<RealRoot>, RootError> {
    if p.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    let mut roots: Vec<(RealRoot, Poly)> = Vec::new();
    for (i, factor) in p.square_free_decomposition().into_iter().enumerate() {
        if factor.degree().unwrap_or(0) == 0 {
            continue;
        }
        for root in isolate_square_free(&factor) {
            roots.push((RealRoot { multiplicity: i + 1, ..root }, factor.clone()));
        }
    }
    if let Some((a, b)) = range {
        roots.retain_mut(|(root, f)| restrict(root, f, a, b));
    }
    for (root, f) in roots.iter_mut() {
        refine(root, f, width);
    }
    separate(&mut roots);
    roots.sort_by(|a, b| compare_disjoint(&a.0, &b.0));
    Ok(roots.into_iter().map(|(r, _)| r).collect())
}

/// Same as [`real_roots`] at the default width.
pub fn real_roots_default(p: &Poly) -> Result<Vec<RealRoot>, RootError> {
    real_roots(p, None, &default_width())
}

fn compare_disjoint(a: &RealRoot, b: &RealRoot) -> Ordering {
    if a.hi <= b.lo && a != b {
        Ordering::Less
    } else if b.hi <= a.lo && a != b {
        Ordering::Greater
    } else {
        a.lo.cmp(&b.lo)
    }
}

/// Refines overlapping brackets (roots of distinct factors) until they are
/// disjoint.
fn separate(roots: &mut [(RealRoot, Poly)]) {
    loop {
        let mut changed = false;
        for i in 0..roots.len() {
            for j in (i + 1)..roots.len() {
                let (a, b) = (&roots[i].0, &roots[j].0);
                let overlap = a.lo < b.hi && b.lo < a.hi;
                if overlap {
                    let wa = a.width();
                    let wb = b.width();
                    let target = if wa > wb { wa / int(2) } else { wb / int(2) };
                    let (left, right) = roots.split_at_mut(j);
                    let (ri, fi) = &mut left[i];
                    let (rj, fj) = &mut right[0];
                    refine(ri, fi, &target);
                    refine(rj, fj, &target);
                    changed = true;
                }
            }
        }
        if !changed {
            return;
        }
    }
}

/// Shrinks a bracket until it lies inside `[a, b]` or outside it. Returns
/// whether the root is in `[a, b]`.
fn restrict(root: &mut RealRoot, f: &Poly, a: &Rational, b: &Rational) -> bool {
    loop {
        if let Some(r) = &root.exact {
            return r >= a && r <= b;
        }
        if root.hi <= *a || root.lo >= *b {
            return false;
        }
        if root.lo >= *a && root.hi <= *b {
            return true;
        }
        let e = if root.lo < *a { a } else { b };
        if f.eval(e).is_zero() {
            *root = RealRoot::exact_at(e.clone(), root.multiplicity);
        } else if sign_right_of(f, &root.lo) != f.sign_at(e) {
            root.hi = e.clone();
        } else {
            root.lo = e.clone();
        }
    }
}

/// Sign of `f` just to the right of `x` (f square-free).
fn sign_right_of(f: &Poly, x: &Rational) -> i32 {
    match f.sign_at(x) {
        0 => f.derivative().sign_at(x),
        s => s,
    }
}

/// Sign of `f` just to the left of `x` (f square-free).
fn sign_left_of(f: &Poly, x: &Rational) -> i32 {
    match f.sign_at(x) {
        0 => -f.derivative().sign_at(x),
        s => s,
    }
}

/// Bisects the bracket of a simple root of the square-free `f` down to
/// `width`, checking for an exact rational root along the way.
pub fn refine(root: &mut RealRoot, f: &Poly, width: &Rational) {
    if root.exact.is_some() {
        return;
    }
    let int_f = IntPoly::new(f);
    let left_sign = sign_right_of(f, &root.lo);
    debug_assert_ne!(left_sign, sign_left_of(f, &root.hi));
    let mut steps = 0u32;
    while root.width() > *width {
        let mid = root.midpoint();
        match int_f.sign_at(&mid) {
            0 => {
                *root = RealRoot::exact_at(mid, root.multiplicity);
                return;
            }
            s if s == left_sign => root.lo = mid,
            _ => root.hi = mid,
        }
        steps += 1;
        if steps.is_multiple_of(8) && try_exact(root, &int_f) {
            return;
        }
    }
    try_exact(root, &int_f);
}

/// A rational polynomial scaled to coprime integer coefficients, for fast
/// sign evaluation.
struct IntPoly {
    coeffs: Vec<BigInt>,
    /// Sign of the positive factor removed when clearing denominators.
    flip: bool,
}

impl IntPoly {
    fn new(f: &Poly) -> Self {
        let coeffs = f.primitive_integer_coeffs();
        let flip = match (coeffs.last(), f.leading()) {
            (Some(c), Some(l)) => c.is_negative() != l.is_negative(),
            _ => false,
        };
        IntPoly { coeffs, flip }
    }

    /// Sign of `f(a/b)` via `Σ c_i a^i b^(d−i)`, `b > 0`.
    fn sign_at(&self, x: &Rational) -> i32 {
        let (a, b) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut bpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * a + c * &bpow;
            bpow *= b;
        }
        let s = if acc.is_positive() {
            1
        } else if acc.is_negative() {
            -1
        } else {
            0
        };
        if self.flip {
            -s
        } else {
            s
        }
    }
}

fn try_exact(root: &mut RealRoot, f: &IntPoly) -> bool {
    let candidate = simplest_between(&root.lo, &root.hi);
    if candidate > root.lo && candidate < root.hi && f.sign_at(&candidate) == 0 {
        *root = RealRoot::exact_at(candidate, root.multiplicity);
        return true;
    }
    false
}

/// Isolating brackets (multiplicity 1) for the real roots of a square-free
/// polynomial.
fn isolate_square_free(f: &Poly) -> Vec<RealRoot> {
    let mut out = Vec::new();
    let mut g = f.clone();
    if g.coeff(0).is_zero() {
        out.push(RealRoot::exact_at(Rational::zero(), 1));
        g = Poly::new(g.coeffs()[1..].to_vec());
    }
    if g.degree().unwrap_or(0) == 0 {
        return out;
    }
    let ints = g.primitive_integer_coeffs();
    let bound_exp = root_bound_exponent(&ints);
    let scale = Rational::from_integer(BigInt::one() << bound_exp);

    for negative in [true, false] {
        let mut coeffs = ints.clone();
        if negative {
            for (k, c) in coeffs.iter_mut().enumerate() {
                if k % 2 == 1 {
                    *c = -c.clone();
                }
            }
        }
        // Roots of f(±x) in (0, 2^e) become roots of q(y) = f(±2^e y) in (0, 1).
        for (k, c) in coeffs.iter_mut().enumerate() {
            *c <<= bound_exp * k as u64;
        }
        let mut found = Vec::new();
        descartes_unit(coeffs, BigInt::zero(), 0, &mut found);
        for (lo, hi, exact) in found {
            let (lo, hi) = (lo * &scale, hi * &scale);
            let root = if exact {
                RealRoot::exact_at(if negative { -lo } else { lo }, 1)
            } else if negative {
                RealRoot { lo: -hi, hi: -lo, exact: None, multiplicity: 1 }
            } else {
                RealRoot { lo, hi, exact: None, multiplicity: 1 }
            };
            out.push(root);
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out
}

/// Smallest `e` with every root magnitude `< 2^e` (Cauchy bound).
fn root_bound_exponent(coeffs: &[BigInt]) -> u64 {
    let lead = coeffs.last().expect("nonconstant").abs();
    let max = coeffs[..coeffs.len() - 1]
        .iter()
        .map(Signed::abs)
        .max()
        .unwrap_or_default();
    // 1 + max/lead < 2^e
    let bound = Rational::one() + Rational::new(max, lead);
    let mut e = 0u64;
    let mut pow = Rational::one();
    while pow <= bound {
        pow *= int(2);
        e += 1;
    }
    e
}

/// Descartes bisection for roots of `q` in the open dyadic interval
/// `(c/2^k, (c+1)/2^k)`, where `q` has already been mapped so that this
/// interval corresponds to `(0, 1)`. Pushes `(lo, hi, exact)` triples in
/// unscaled unit coordinates.
fn descartes_unit(
    q: Vec<BigInt>,
    c: BigInt,
    k: u64,
    found: &mut Vec<(Rational, Rational, bool)>,
) {
    let mut stack = vec![(q, c, k)];
    while let Some((q, c, k)) = stack.pop() {
        let v = variations_on_unit(&q);
        if v == 0 {
            continue;
        }
        let denom = BigInt::one() << k;
        if v == 1 {
            found.push((
                Rational::new(c.clone(), denom.clone()),
                Rational::new(c + 1, denom),
                false,
            ));
            continue;
        }
        let d = q.len() - 1;
        // Left half: 2^d q(y/2); right half: left(y + 1).
        let left: Vec<BigInt> = q
            .iter()
            .enumerate()
            .map(|(i, a)| a.clone() << (d - i) as u64)
            .collect();
        let right = taylor_shift_one(&left);
        if right[0].is_zero() {
            // q(1/2) = 0: the midpoint is an exact root.
            found.push((
                Rational::new(2 * &c + 1, &denom << 1),
                Rational::new(2 * &c + 1, &denom << 1),
                true,
            ));
        }
        stack.push((right, 2 * &c + 1, k + 1));
        stack.push((left, 2 * c, k + 1));
    }
}

/// Upper bound (exact for 0 and 1) on the number of roots of `q` in (0, 1):
/// sign variations of `(y+1)^d q(1/(y+1))`.
fn variations_on_unit(q: &[BigInt]) -> usize {
    let reversed: Vec<BigInt> = q.iter().rev().cloned().collect();
    sign_variations(&taylor_shift_one(&reversed))
}

fn sign_variations(coeffs: &[BigInt]) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for c in coeffs {
        let s = if c.is_positive() {
            1
        } else if c.is_negative() {
            -1
        } else {
            continue;
        };
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Coefficients of `q(y + 1)`.
fn taylor_shift_one(q: &[BigInt]) -> Vec<BigInt> {
    let mut a = q.to_vec();
    let n = a.len();
    for i in 0..n {
        for j in (i..n - 1).rev() {
            let t = a[j + 1].clone();
            a[j] += t;
        }
    }
    a
}

/// Sturm sequence `p, p', -rem(p, p'), ...` (with positive rescaling).
pub fn sturm_sequence(p: &Poly) -> Vec<Poly> {
    let mut seq = vec![p.clone(), p.derivative()];
    while !seq[seq.len() - 1].is_zero() {
        let n = seq.len();
        let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(-r.primitive_part());
    }
    if seq.last().is_some_and(Poly::is_zero) {
        seq.pop();
    }
    seq
}

fn sturm_variations(seq: &[Poly], x: &Rational) -> usize {
    let signs: Vec<i32> = seq.iter().map(|q| q.sign_at(x)).filter(|&s| s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of `p` in the half-open interval `(a, b]`
/// by Sturm's theorem.
pub fn sturm_count(p: &Poly, a: &Rational, b: &Rational) -> usize {
    let sq = p.square_free();
    let seq = sturm_sequence(&sq);
    sturm_variations(&seq, a).saturating_sub(sturm_variations(&seq, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn unit_roots() {
        let roots = real_roots_default(&p(&[-1, 0, 1])).unwrap();
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0].exact, Some(int(-1)));
        assert_eq!(roots[1].exact, Some(int(1)));
        assert!(roots.iter().all(|r| r.multiplicity == 1));
    }

    #[test]
    fn quartic_with_surd_roots() {
        // (x^2 - 1)(x^2 - 2x - 2)
        let roots = real_roots_default(&p(&[2, 2, -3, -2, 1])).unwrap();
        let s3 = libm::sqrt(3.0);
        let expected = [-1.0, 1.0 - s3, 1.0, 1.0 + s3];
        assert_eq!(roots.len(), 4);
        for (r, e) in roots.iter().zip(expected) {
            assert!((r.approx() - e).abs() < 1e-15, "{} vs {}", r.approx(), e);
        }
        assert_eq!(roots[0].exact, Some(int(-1)));
        assert_eq!(roots[1].exact, None);
        assert_eq!(roots[2].exact, Some(int(1)));
    }

    #[test]
    fn derivative_roots() {
        let roots = real_roots_default(&p(&[0, -6, 3])).unwrap();
        let exact: Vec<_> = roots.iter().map(|r| r.exact.clone().unwrap()).collect();
        assert_eq!(exact, [int(0), int(2)]);
    }

    #[test]
    fn multiplicities_reported() {
        // (x - 1)^2 (x + 3)^3 x
        let f = &(&p(&[-1, 1]).pow(2) * &p(&[3, 1]).pow(3)) * &p(&[0, 1]);
        let roots = real_roots_default(&f).unwrap();
        let mults: Vec<_> = roots.iter().map(|r| r.multiplicity).collect();
        assert_eq!(mults, [3, 1, 2]);
    }

    #[test]
    fn restricted_range() {
        let f = p(&[2, 2, -3, -2, 1]);
        let roots = real_roots(&f, Some((&int(0), &int(3))), &default_width()).unwrap();
        assert_eq!(roots.len(), 2);
        let roots = real_roots(&f, Some((&int(-1), &int(0))), &default_width()).unwrap();
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0].exact, Some(int(-1)));
    }

    #[test]
    fn no_real_roots() {
        assert!(real_roots_default(&p(&[1, 0, 1])).unwrap().is_empty());
        assert!(real_roots_default(&p(&[5])).unwrap().is_empty());
        assert_eq!(real_roots_default(&Poly::zero()), Err(RootError::ZeroPolynomial));
    }

    #[test]
    fn integer_sign_matches_rational_eval() {
        let f = Poly::new(vec![ratio(-7, 3), ratio(1, 2), int(0), ratio(-5, 4)]);
        let fi = IntPoly::new(&f);
        for x in [ratio(-3, 2), int(0), ratio(7, 5), ratio(-11, 9)] {
            assert_eq!(fi.sign_at(&x), f.sign_at(&x), "x = {x}");
        }
    }

    #[test]
    fn sturm_counts_agree() {
        let f = p(&[2, 2, -3, -2, 1]);
        assert_eq!(sturm_count(&f, &int(-10), &int(10)), 4);
        assert_eq!(sturm_count(&f, &int(0), &int(2)), 1);
        assert_eq!(sturm_count(&f, &int(-1), &int(1)), 2);
    }

    #[test]
    fn close_roots_separated() {
        // (x - 1/1000)(x - 2/1000)(x + 7/3)
        let f = Poly::from_roots(&[ratio(1, 1000), ratio(2, 1000), ratio(-7, 3)]);
        let roots = real_roots_default(&f).unwrap();
        let exact: Vec<_> = roots.iter().map(|r| r.exact.clone().unwrap()).collect();
        assert_eq!(exact, [ratio(-7, 3), ratio(1, 1000), ratio(1, 500)]);
    }
}
