use alloc::vec;
use core::fmt;

use num_traits::One;

use crate::poly::Poly;
use crate::rational::Rational;

/// Coefficients of the monic quartic `p(x) = x⁴ + c1·x³ + c2·x² + c3·x + c4`,
/// always in the order `c1, c2, c3, c4`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuarticCoeffs {
    c: [Rational; 4],
}

impl QuarticCoeffs {
    pub fn new(c1: Rational, c2: Rational, c3: Rational, c4: Rational) -> Self {
        QuarticCoeffs { c: [c1, c2, c3, c4] }
    }

    pub fn from_ints(c: [i64; 4]) -> Self {
        QuarticCoeffs { c: c.map(|v| Rational::from_integer(v.into())) }
    }

    /// `c_i` for `i` in `1..=4`; zero for any other index (the recurrences
    /// treat out-of-range coefficients as absent).
    pub fn get(&self, i: usize) -> Rational {
        match i {
            1..=4 => self.c[i - 1].clone(),
            _ => num_traits::Zero::zero(),
        }
    }

    pub fn as_array(&self) -> &[Rational; 4] {
        &self.c
    }

    pub fn with(&self, i: usize, value: Rational) -> Self {
        let mut c = self.c.clone();
        c[i - 1] = value;
        QuarticCoeffs { c }
    }

    /// The quartic itself.
    pub fn poly(&self) -> Poly {
        Poly::new(vec![
            self.c[3].clone(),
            self.c[2].clone(),
            self.c[1].clone(),
            self.c[0].clone(),
            Rational::one(),
        ])
    }

    /// Coefficients of `λ⁻⁴·p(λx)`, i.e. `c_i ↦ c_i·λ^{-i}`.
    pub fn rescaled(&self, lambda: &Rational) -> Self {
        let inv = lambda.recip();
        let mut factor = Rational::one();
        let c = core::array::from_fn(|i| {
            factor = &factor * &inv;
            &self.c[i] * &factor
        });
        QuarticCoeffs { c }
    }
}

impl fmt::Display for QuarticCoeffs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.c[0], self.c[1], self.c[2], self.c[3])
    }
}
