//! The polynomials `F_k(c1, c2, c3, c4)` with `a_k = F_k·a_s`.
//!
//! `F_k` is a sum over partitions `λ ⊢ s − k` with parts at most 4 of
//! `m_λ·c_λ`, where `c_λ = Π c_{λ_j}`. Two independent constructions are
//! provided: running the coefficient recurrence symbolically, and the closed
//! product formula over distinct permutations of `λ`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write as _;

use num_traits::{One, Zero};

use crate::error::FkError;
use crate::partitions::{distinct_perms, partitions_bounded, Partition, PermFilter};
use crate::poly::Poly;
use crate::quartic::QuarticCoeffs;
use crate::rational::Rational;

/// `m_i^{(k)} = (s−k+i)(2s−2k+i) / (2k(2s−k))`, the weight with which
/// `c_i·F_{s−k+i}` enters `F_{s−k}`.
pub fn m_small(i: u32, k: u32, s: u32) -> Result<Rational, FkError> {
    if !(1..=4).contains(&i) {
        return Err(FkError::PartOutOfRange(i));
    }
    if k == 0 || k > s {
        return Err(FkError::StepOutOfRange { k, s });
    }
    let (i, k, s) = (i64::from(i), i64::from(k), i64::from(s));
    let num = (s - k + i) * (2 * s - 2 * k + i);
    let den = 2 * k * (2 * s - k);
    Ok(Rational::new(num.into(), den.into()))
}

/// Coefficient of `c_λ` in `F_{s−|λ|}`: the sum over distinct orderings
/// `(i_1, ..., i_r)` of `λ` of `Π_t m_{i_t}^{(i_1+...+i_t)}`. For `|λ| = s`
/// only orderings ending in a part larger than 1 contribute, because
/// `a_1 = 0` cuts the chain through `F_1`.
pub fn m_lambda(lambda: &Partition, s: u32) -> Result<Rational, FkError> {
    let weight = lambda.weight();
    if weight > s {
        return Err(FkError::WeightTooLarge { weight, s });
    }
    if let Some(&p) = lambda.parts().iter().find(|&&p| p > 4) {
        return Err(FkError::PartOutOfRange(p));
    }
    let filter = if weight == s { PermFilter::LastAboveOne } else { PermFilter::All };
    let mut total = Rational::zero();
    for seq in distinct_perms(lambda, filter) {
        let mut prefix = 0;
        let mut product = Rational::one();
        for &i in &seq {
            prefix += i;
            product *= m_small(i, prefix, s)?;
        }
        total += product;
    }
    Ok(total)
}

/// All of `F_0, ..., F_s` for a fixed `s`, each as a map from partition to
/// its (positive) coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FkTable {
    s: u32,
    entries: Vec<BTreeMap<Partition, Rational>>,
}

impl FkTable {
    pub fn s(&self) -> u32 {
        self.s
    }

    /// Terms of `F_k`.
    pub fn entry(&self, k: u32) -> &BTreeMap<Partition, Rational> {
        &self.entries[k as usize]
    }

    /// Terms of `F_k` in reverse-lexicographic partition order.
    pub fn terms(&self, k: u32) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.entries[k as usize].iter().rev()
    }

    /// `F_k(c)`.
    pub fn eval_entry(&self, k: u32, c: &QuarticCoeffs) -> Rational {
        self.entry(k)
            .iter()
            .map(|(lambda, m)| m * monomial_value(lambda, c))
            .fold(Rational::zero(), |acc, v| acc + v)
    }

    /// `(F_0(c), ..., F_s(c))`.
    pub fn eval(&self, c: &QuarticCoeffs) -> Vec<Rational> {
        (0..=self.s).map(|k| self.eval_entry(k, c)).collect()
    }

    /// `F_k` as a polynomial in `c_target`, the other three coefficients
    /// fixed to the values in `c` (whose `target` slot is ignored).
    pub fn univariate(&self, k: u32, c: &QuarticCoeffs, target: usize) -> Poly {
        let mut coeffs: Vec<Rational> = Vec::new();
        for (lambda, m) in self.entry(k) {
            let power = lambda.count(target as u32);
            let rest: Rational = lambda
                .parts()
                .iter()
                .filter(|&&p| p as usize != target)
                .map(|&p| c.get(p as usize))
                .fold(Rational::one(), |acc, v| acc * v);
            if coeffs.len() <= power {
                coeffs.resize(power + 1, Rational::zero());
            }
            coeffs[power] += m * rest;
        }
        Poly::new(coeffs)
    }

    /// `F_k = Σ m_λ · c_λ` as text, e.g. `F_1 = (9/16) c1^2 + (3/4) c2`.
    pub fn format_entry(&self, k: u32) -> String {
        let mut out = String::new();
        let _ = write!(out, "F_{k} = ");
        let mut first = true;
        for (lambda, m) in self.terms(k) {
            if !first {
                out.push_str(" + ");
            }
            first = false;
            let mono = monomial_text(lambda);
            match (m.is_one(), mono.is_empty()) {
                (true, true) => out.push('1'),
                (true, false) => out.push_str(&mono),
                (false, true) => {
                    let _ = write!(out, "{m}");
                }
                (false, false) if m.is_integer() => {
                    let _ = write!(out, "{m} {mono}");
                }
                (false, false) => {
                    let _ = write!(out, "({m}) {mono}");
                }
            }
        }
        if first {
            out.push('0');
        }
        out
    }
}

/// `c_λ` evaluated at `c`.
pub fn monomial_value(lambda: &Partition, c: &QuarticCoeffs) -> Rational {
    lambda
        .parts()
        .iter()
        .map(|&p| c.get(p as usize))
        .fold(Rational::one(), |acc, v| acc * v)
}

/// `c1^2 c2`-style rendering of `c_λ` (empty for the empty partition).
pub fn monomial_text(lambda: &Partition) -> String {
    let mut out = String::new();
    for i in 1..=4u32 {
        let e = lambda.count(i);
        if e == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push(' ');
        }
        let _ = write!(out, "c{i}");
        if e > 1 {
            let _ = write!(out, "^{e}");
        }
    }
    out
}

/// Runs `a_k = Σ_i m_i^{(s−k)} c_i a_{k+i}` with symbolic `c`, from `F_s = 1`
/// down to `F_0`, with `a_1 = 0` when forming `F_0` and `a_j = 0` for `j > s`.
pub fn fk_table_recurrence(s: u32) -> FkTable {
    let mut entries = vec![BTreeMap::new(); s as usize + 1];
    entries[s as usize].insert(Partition::empty(), Rational::one());
    for k in (0..s).rev() {
        let mut acc: BTreeMap<Partition, Rational> = BTreeMap::new();
        for i in 1..=4u32 {
            let src = k + i;
            if src > s || (k == 0 && src == 1) {
                continue;
            }
            let weight = m_small(i, s - k, s).expect("1 <= s-k <= s");
            for (lambda, m) in &entries[src as usize] {
                *acc.entry(lambda.with_part(i)).or_insert_with(Rational::zero) += &weight * m;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        entries[k as usize] = acc;
    }
    FkTable { s, entries }
}

/// Builds every entry from the closed product formula.
pub fn fk_table_direct(s: u32) -> FkTable {
    let entries = (0..=s)
        .map(|k| {
            partitions_bounded(s - k, 4)
                .into_iter()
                .filter_map(|lambda| {
                    let m = m_lambda(&lambda, s).expect("weight <= s, parts <= 4");
                    (!m.is_zero()).then_some((lambda, m))
                })
                .collect()
        })
        .collect();
    FkTable { s, entries }
}

/// The single coefficient of `F_{s-1} = (s/2)·c1`.
pub fn f_s_minus_one_coefficient(s: u32) -> Rational {
    Rational::new(i64::from(s).into(), 2.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec())
    }

    #[test]
    fn small_weights() {
        assert_eq!(m_small(1, 2, 3).unwrap(), ratio(3, 8));
        assert_eq!(m_small(2, 3, 3).unwrap(), ratio(2, 9));
        assert_eq!(m_small(2, 2, 2).unwrap(), ratio(1, 2));
        assert_eq!(m_small(1, 0, 3), Err(FkError::StepOutOfRange { k: 0, s: 3 }));
        assert_eq!(m_small(5, 1, 3), Err(FkError::PartOutOfRange(5)));
    }

    #[test]
    fn lambda_coefficients() {
        assert_eq!(m_lambda(&part(&[1, 1]), 3).unwrap(), ratio(9, 16));
        assert_eq!(m_lambda(&part(&[2]), 3).unwrap(), ratio(3, 4));
        assert!(m_lambda(&Partition::ones(3), 3).unwrap().is_zero());
        assert!(m_lambda(&Partition::ones(4), 3).is_err());
    }

    #[test]
    fn table_for_s2() {
        let t = fk_table_recurrence(2);
        assert_eq!(t.format_entry(2), "F_2 = 1");
        assert_eq!(t.format_entry(1), "F_1 = c1");
        assert_eq!(t.format_entry(0), "F_0 = (1/2) c2");
    }

    #[test]
    fn table_for_s3() {
        let t = fk_table_recurrence(3);
        assert_eq!(t.format_entry(2), "F_2 = (3/2) c1");
        assert_eq!(t.format_entry(1), "F_1 = (3/4) c2 + (9/16) c1^2");
        assert_eq!(t.format_entry(0), "F_0 = (1/2) c3 + (1/3) c1 c2");
    }

    #[test]
    fn next_to_top_entry() {
        for s in 2..10 {
            let t = fk_table_recurrence(s);
            let entry = t.entry(s - 1);
            assert_eq!(entry.len(), 1);
            assert_eq!(entry.get(&part(&[1])), Some(&f_s_minus_one_coefficient(s)));
        }
    }

    #[test]
    fn evaluation_examples() {
        let t3 = fk_table_recurrence(3);
        assert_eq!(t3.eval(&QuarticCoeffs::from_ints([-2, -3, 2, 2])), [int(3), int(0), int(-3), int(1)]);
        let t2 = fk_table_recurrence(2);
        assert_eq!(t2.eval(&QuarticCoeffs::from_ints([0, -5, 0, 4])), [ratio(-5, 2), int(0), int(1)]);
        for s in 1..7 {
            let values = fk_table_recurrence(s).eval(&QuarticCoeffs::from_ints([0, 0, 0, 0]));
            for (k, v) in values.iter().enumerate() {
                assert_eq!(v.is_zero(), k < s as usize);
            }
        }
    }

    #[test]
    fn univariate_slice() {
        let t3 = fk_table_recurrence(3);
        let c = QuarticCoeffs::from_ints([0, -3, 0, 0]);
        let f1 = t3.univariate(1, &c, 1);
        assert_eq!(f1, Poly::new(vec![ratio(-9, 4), int(0), ratio(9, 16)]));
    }
}
