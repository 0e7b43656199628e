//! Dense univariate polynomials over an exact coefficient ring.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::{common_denominator, sign, to_f64, Rational};

/// Coefficient ring for [`Poly`].
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// Polynomial with coefficients in ascending powers. The coefficient vector
/// never has a trailing zero, so the zero polynomial is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<T = Rational> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Poly::monomial(T::one(), 1)
    }

    /// `c·x^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the convention `deg 0 = -1`.
    pub fn signed_degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &T) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, a)| a.clone() * from_usize::<T>(k))
            .collect();
        Poly::new(coeffs)
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, a| acc * x.clone() + a.clone())
    }

    /// `self ∘ inner`, i.e. `x ↦ self(inner(x))`, by Horner's scheme.
    pub fn compose(&self, inner: &Poly<T>) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, a| &(&acc * inner) + &Poly::constant(a.clone()))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

fn from_usize<T: Scalar>(k: usize) -> T {
    // Repeated doubling keeps this generic over any ring.
    let mut result = T::zero();
    let mut power = T::one();
    let mut k = k;
    while k > 0 {
        if k & 1 == 1 {
            result = result + power.clone();
        }
        power = power.clone() + power;
        k >>= 1;
    }
    result
}

impl<T: Scalar> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<T: Scalar> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<T: Scalar> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly { coeffs: self.coeffs.iter().map(|a| -a.clone()).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl<T: Scalar> $tr for Poly<T> {
            type Output = Poly<T>;
            fn $method(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Scalar> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -(&self)
    }
}

impl Poly<Rational> {
    /// Builds a polynomial from integer coefficients in ascending order.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    /// Monic polynomial with the given roots.
    pub fn from_roots(roots: &[Rational]) -> Self {
        roots.iter().fold(Poly::one(), |acc, r| {
            &acc * &Poly::new(vec![-r.clone(), Rational::one()])
        })
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, a| acc * x + to_f64(a))
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(to_f64).collect()
    }

    /// Sign of the value at `x`.
    pub fn sign_at(&self, x: &Rational) -> i32 {
        sign(&self.eval(x))
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale(&lc.recip()),
            None => Poly::zero(),
        }
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly<Rational>) -> (Poly<Rational>, Poly<Rational>) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if !c.is_zero() {
                for (j, b) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * b;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Exact quotient, or `None` if the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Poly<Rational>) -> Option<Poly<Rational>> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &Poly<Rational>) -> Poly<Rational> {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let a = self.primitive_integer_coeffs();
        let b = other.primitive_integer_coeffs();
        if coprime_mod_prime(&a, &b) {
            return Poly::one();
        }
        let g = integer_gcd(a, b);
        Poly::new(g.into_iter().map(Rational::from_integer).collect()).monic()
    }

    /// Square-free part, made monic.
    pub fn square_free(&self) -> Poly<Rational> {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).expect("gcd divides").monic()
    }

    /// Yun's square-free decomposition: monic factors `f_1, f_2, ...` with
    /// `self = lc · Π f_i^i` and each `f_i` square-free and pairwise coprime.
    pub fn square_free_decomposition(&self) -> Vec<Poly<Rational>> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.exact_div(&a0).expect("gcd divides");
        let mut c = df.exact_div(&a0).expect("gcd divides");
        let mut d = &c - &b.derivative();
        loop {
            let a = b.gcd(&d);
            out.push(a.clone());
            b = b.exact_div(&a).expect("gcd divides");
            if b.degree() == Some(0) {
                break;
            }
            c = d.exact_div(&a).expect("gcd divides");
            d = &c - &b.derivative();
        }
        while out.last().is_some_and(|p| p.degree() == Some(0)) {
            out.pop();
        }
        out
    }

    /// Integer coefficients with content 1 and positive leading coefficient,
    /// a positive rational multiple of `self` up to sign.
    pub fn primitive_integer_coeffs(&self) -> Vec<BigInt> {
        let den = common_denominator(self.coeffs.iter());
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if g.is_zero() {
            return ints;
        }
        let flip = ints.last().is_some_and(|c| c.is_negative());
        ints.into_iter()
            .map(|c| {
                let q = c / &g;
                if flip {
                    -q
                } else {
                    q
                }
            })
            .collect()
    }

    /// Positive rational multiple with integer coefficients of content 1.
    /// Keeps the sign of every value.
    pub fn primitive_part(&self) -> Poly<Rational> {
        if self.is_zero() {
            return Poly::zero();
        }
        let den = common_denominator(self.coeffs.iter());
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        Poly::new(ints.into_iter().map(|c| Rational::from_integer(c / &g)).collect())
    }

    /// Bound on `max |self(x)|` over `[-r, r]` via `Σ |a_k| r^k`.
    pub fn sup_norm_bound(&self, r: &Rational) -> Rational {
        let r = r.abs();
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, a| acc * &r + a.abs())
    }

    /// Human-readable rendering in the variable `var`, highest power first.
    pub fn display_in(&self, var: &str) -> String {
        self.render(var, false)
    }

    /// LaTeX rendering in the variable `var`.
    pub fn latex_in(&self, var: &str) -> String {
        self.render(var, true)
    }

    fn render(&self, var: &str, latex: bool) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let a = c.abs();
            if k == 0 || !a.is_one() {
                if a.is_integer() {
                    let _ = write!(out, "{}", a.numer());
                } else if latex {
                    let _ = write!(out, "\\frac{{{}}}{{{}}}", a.numer(), a.denom());
                } else if k == 0 {
                    let _ = write!(out, "{}/{}", a.numer(), a.denom());
                } else {
                    let _ = write!(out, "({}/{})", a.numer(), a.denom());
                }
            }
            match k {
                0 => {}
                1 => out.push_str(var),
                _ if latex => {
                    let _ = write!(out, "{var}^{{{k}}}");
                }
                _ => {
                    let _ = write!(out, "{var}^{k}");
                }
            }
        }
        out
    }
}

/// Prime `2^61 − 1` for the coprimality shortcut.
const MODULUS: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(MODULUS)) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

fn reduce(coeffs: &[BigInt]) -> Vec<u64> {
    let m = BigInt::from(MODULUS);
    let mut out: Vec<u64> = coeffs
        .iter()
        .map(|c| {
            let r = c.mod_floor(&m);
            r.iter_u64_digits().next().unwrap_or(0)
        })
        .collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// True when the images mod `2^61 − 1` are coprime and both leading
/// coefficients survive reduction; then the rational gcd is 1. A `false`
/// answer is inconclusive.
fn coprime_mod_prime(a: &[BigInt], b: &[BigInt]) -> bool {
    let (mut x, mut y) = (reduce(a), reduce(b));
    if x.len() != a.len() || y.len() != b.len() {
        return false;
    }
    if x.len() < y.len() {
        core::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let inv = powmod(*y.last().expect("nonempty"), MODULUS - 2);
        while x.len() >= y.len() {
            let shift = x.len() - y.len();
            let c = mulmod(*x.last().expect("nonempty"), inv);
            for (j, &bj) in y.iter().enumerate() {
                let t = mulmod(c, bj);
                x[shift + j] = (x[shift + j] + MODULUS - t) % MODULUS;
            }
            while x.last() == Some(&0) {
                x.pop();
            }
        }
        core::mem::swap(&mut x, &mut y);
    }
    x.len() == 1
}

fn content_free(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    let g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in v.iter_mut() {
            *c /= &g;
        }
    }
    v
}

/// Primitive pseudo-remainder sequence over the integers.
fn integer_gcd(mut a: Vec<BigInt>, mut b: Vec<BigInt>) -> Vec<BigInt> {
    if a.len() < b.len() {
        core::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let lb = b.last().expect("nonempty").clone();
        while a.len() >= b.len() {
            let shift = a.len() - b.len();
            let la = a.last().expect("nonempty").clone();
            for c in a.iter_mut() {
                *c *= &lb;
            }
            for (j, bj) in b.iter().enumerate() {
                a[shift + j] -= &la * bj;
            }
            a = content_free(a);
            if a.is_empty() {
                break;
            }
        }
        core::mem::swap(&mut a, &mut b);
    }
    a
}

impl fmt::Display for Poly<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}
