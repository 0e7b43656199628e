//! Classical and hyperbolic Chebyshev polynomials, and parity-exact outer
//! composition `m·T_N(u/m)` / `m·T̃_N(u/m)` / `u^N`.

use alloc::vec;

use num_traits::{One, Zero};

use crate::error::ChebyshevError;
use crate::poly::Poly;
use crate::rational::{int, Rational};

/// `T_n` from `T_0 = 1`, `T_1 = x`, `T_{k+1} = 2x·T_k − T_{k−1}`.
pub fn chebyshev_t(n: u32) -> Poly {
    let two_x = Poly::monomial(int(2), 1);
    let mut prev = Poly::one();
    let mut cur = Poly::x();
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &(&two_x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `T̃_n(x) = sinh(n·arcsinh x)`, a polynomial exactly for odd `n`.
///
/// Odd indices step by two: `T̃_{k+2} = 2(1 + 2x²)·T̃_k − T̃_{k−2}`, from
/// `sinh((k+2)θ) + sinh((k−2)θ) = 2·sinh(kθ)·cosh(2θ)`.
pub fn sinh_chebyshev(n: u32) -> Result<Poly, ChebyshevError> {
    if n.is_multiple_of(2) {
        return Err(ChebyshevError::EvenSinhDegree(n));
    }
    let step = Poly::new(vec![int(2), int(0), int(4)]);
    let mut prev = -Poly::x();
    let mut cur = Poly::x();
    for _ in 0..(n / 2) {
        let next = &(&step * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Which polynomial a parity-exact composition returns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Convention {
    /// The composed polynomial `g` itself.
    G,
    /// The ratio `g/m`.
    GOverM,
}

/// Outer function family used in a composition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OuterFamily {
    /// `g = m·T_N(u/m)`, from `u² − m²` identities.
    Cosine,
    /// `g = m·T̃_N(u/m)`, from `u² + m²` identities; `N` must be odd.
    Sinh,
    /// `g = u^N` (the `m = 0` degenerate case).
    Power,
}

/// Composes `u` with the outer polynomial of degree `n`, keeping every
/// coefficient rational even when `m = √m2` is irrational.
///
/// For odd `n` the outer polynomial is odd, so `m·T(u/m) = Σ t_k m2^{(1−k)/2} u^k`
/// is rational and returned as [`Convention::G`]. For even `n` the ratio
/// `T(u/m) = Σ t_k m2^{−k/2} u^k` is rational and returned as
/// [`Convention::GOverM`]. `m2` must be positive for the cosine and sinh
/// families; it is ignored for [`OuterFamily::Power`].
pub fn compose_parity_exact(
    u: &Poly,
    m2: &Rational,
    family: OuterFamily,
    n: u32,
) -> Result<(Poly, Convention), ChebyshevError> {
    if n == 0 {
        return Err(ChebyshevError::ZeroOuterDegree);
    }
    let outer = match family {
        OuterFamily::Power => return Ok((u.pow(n), Convention::G)),
        OuterFamily::Cosine => chebyshev_t(n),
        OuterFamily::Sinh => {
            if n.is_multiple_of(2) {
                return Err(ChebyshevError::EvenOuterOnHyperbolic(n));
            }
            sinh_chebyshev(n)?
        }
    };
    debug_assert!(*m2 > Rational::zero());
    let odd = n % 2 == 1;
    let inv = m2.recip();
    // Scale t_k by m2^{(1-k)/2} (odd n) or m2^{-k/2} (even n); only powers of
    // matching parity are nonzero, so the exponents are integers.
    let mut scaled = vec![Rational::zero(); outer.coeffs().len()];
    let mut factor = Rational::one();
    for (k, t) in outer.coeffs().iter().enumerate() {
        if k % 2 == usize::from(odd) {
            scaled[k] = t * &factor;
            factor = &factor * &inv;
        }
    }
    let scaled = Poly::new(scaled);
    let convention = if odd { Convention::G } else { Convention::GOverM };
    Ok((scaled.compose(u), convention))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn low_degree_chebyshev() {
        assert_eq!(chebyshev_t(0), Poly::from_ints(&[1]));
        assert_eq!(chebyshev_t(1), Poly::from_ints(&[0, 1]));
        assert_eq!(chebyshev_t(2), Poly::from_ints(&[-1, 0, 2]));
        assert_eq!(chebyshev_t(3), Poly::from_ints(&[0, -3, 0, 4]));
    }

    #[test]
    fn leading_coefficient_power_of_two() {
        for n in 1..12u32 {
            assert_eq!(chebyshev_t(n).leading().unwrap(), &int(1 << (n - 1)));
        }
    }

    #[test]
    fn low_degree_sinh_chebyshev() {
        assert_eq!(sinh_chebyshev(1).unwrap(), Poly::from_ints(&[0, 1]));
        assert_eq!(sinh_chebyshev(3).unwrap(), Poly::from_ints(&[0, 3, 0, 4]));
        assert_eq!(sinh_chebyshev(5).unwrap(), Poly::from_ints(&[0, 5, 0, 20, 0, 16]));
        assert_eq!(sinh_chebyshev(4), Err(ChebyshevError::EvenSinhDegree(4)));
    }

    #[test]
    fn sinh_chebyshev_matches_sinh_numerically() {
        for n in [1u32, 3, 5, 7, 9] {
            let p = sinh_chebyshev(n).unwrap();
            for &x in &[-1.3, -0.2, 0.0, 0.45, 2.0] {
                let expected = libm::sinh(n as f64 * libm::asinh(x));
                let got = p.eval_f64(x);
                assert!((got - expected).abs() <= 1e-9 * expected.abs().max(1.0));
            }
        }
    }

    #[test]
    fn parity_exact_even_outer() {
        let u = Poly::new(vec![ratio(-5, 2), int(0), int(1)]);
        let (g_over_m, conv) = compose_parity_exact(&u, &ratio(9, 4), OuterFamily::Cosine, 2).unwrap();
        assert_eq!(conv, Convention::GOverM);
        let expected = &u.pow(2).scale(&ratio(8, 9)) - &Poly::one();
        assert_eq!(g_over_m, expected);
    }

    #[test]
    fn parity_exact_odd_outer() {
        let u = Poly::from_ints(&[-1, 0, 1]);
        let (g, conv) = compose_parity_exact(&u, &int(1), OuterFamily::Sinh, 3).unwrap();
        assert_eq!(conv, Convention::G);
        assert_eq!(g, &u.pow(3).scale(&int(4)) + &u.scale(&int(3)));
        assert_eq!(
            compose_parity_exact(&u, &int(1), OuterFamily::Sinh, 2),
            Err(ChebyshevError::EvenOuterOnHyperbolic(2))
        );
    }
}
