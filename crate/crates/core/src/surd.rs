//! Elements `a + b·√D` of a real quadratic extension of the rationals.
//!
//! The radicand is carried by every value. Values with `b = 0` are ordinary
//! rationals and combine with any radicand; combining two irrational values
//! with different radicands is a logic error and panics.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::rational::{rational_sqrt, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Surd {
    rational: Rational,
    irrational: Rational,
    radicand: Rational,
}

impl Surd {
    /// `a + b·√D`. When `D` is the square of a rational the surd part is
    /// folded into the rational part, so `b = 0` whenever `√D ∈ ℚ`.
    pub fn new(a: Rational, b: Rational, radicand: Rational) -> Self {
        assert!(radicand >= Rational::zero(), "negative radicand");
        if b.is_zero() {
            return Surd::from_rational(a);
        }
        match rational_sqrt(&radicand) {
            Some(root) => Surd::from_rational(a + b * root),
            None => Surd { rational: a, irrational: b, radicand },
        }
    }

    pub fn from_rational(a: Rational) -> Self {
        Surd { rational: a, irrational: Rational::zero(), radicand: Rational::zero() }
    }

    /// `√D` itself.
    pub fn sqrt(radicand: Rational) -> Self {
        Surd::new(Rational::zero(), Rational::one(), radicand)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.rational
    }

    pub fn surd_part(&self) -> &Rational {
        &self.irrational
    }

    pub fn radicand(&self) -> &Rational {
        &self.radicand
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.irrational.is_zero().then_some(&self.rational)
    }

    fn joint_radicand(&self, other: &Surd) -> Rational {
        match (self.irrational.is_zero(), other.irrational.is_zero()) {
            (true, _) => other.radicand.clone(),
            (_, true) => self.radicand.clone(),
            _ => {
                assert_eq!(self.radicand, other.radicand, "mixed radicands");
                self.radicand.clone()
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        use crate::rational::to_f64;
        to_f64(&self.rational) + to_f64(&self.irrational) * libm::sqrt(to_f64(&self.radicand))
    }
}

impl Add for Surd {
    type Output = Surd;
    fn add(self, rhs: Surd) -> Surd {
        let d = self.joint_radicand(&rhs);
        Surd::new(self.rational + rhs.rational, self.irrational + rhs.irrational, d)
    }
}

impl Sub for Surd {
    type Output = Surd;
    fn sub(self, rhs: Surd) -> Surd {
        self + (-rhs)
    }
}

impl Neg for Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd { rational: -self.rational, irrational: -self.irrational, radicand: self.radicand }
    }
}

impl Mul for Surd {
    type Output = Surd;
    fn mul(self, rhs: Surd) -> Surd {
        let d = self.joint_radicand(&rhs);
        let a = &self.rational * &rhs.rational + &self.irrational * &rhs.irrational * &d;
        let b = &self.rational * &rhs.irrational + &self.irrational * &rhs.rational;
        Surd::new(a, b, d)
    }
}

impl Zero for Surd {
    fn zero() -> Self {
        Surd::from_rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.irrational.is_zero()
    }
}

impl One for Surd {
    fn one() -> Self {
        Surd::from_rational(Rational::one())
    }
}

impl From<Rational> for Surd {
    fn from(a: Rational) -> Self {
        Surd::from_rational(a)
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.irrational.is_zero() {
            return write!(f, "{}", self.rational);
        }
        if !self.rational.is_zero() {
            write!(f, "{} + ", self.rational)?;
        }
        write!(f, "({})*sqrt({})", self.irrational, self.radicand)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn arithmetic_in_quadratic_field() {
        let r2 = Surd::sqrt(int(2));
        assert_eq!(r2.clone() * r2.clone(), Surd::from_rational(int(2)));
        let x = Surd::new(int(1), int(1), int(2));
        let y = Surd::new(int(1), int(-1), int(2));
        assert_eq!(x.clone() * y, Surd::from_rational(int(-1)));
        assert!((x.clone() - x).is_zero());
    }

    #[test]
    fn square_radicand_folds() {
        let s = Surd::new(int(1), int(2), ratio(9, 4));
        assert_eq!(s.as_rational(), Some(&int(4)));
        assert!(s.surd_part().is_zero());
    }

    #[test]
    #[should_panic(expected = "mixed radicands")]
    fn mixed_radicands_panic() {
        let _ = Surd::sqrt(int(2)) + Surd::sqrt(int(3));
    }
}
