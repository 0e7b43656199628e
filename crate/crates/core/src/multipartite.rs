//! Polynomial solutions `u` of `s²q²(u² − m²) = p·u′²` for monic `p` of
//! degree `r = 2ℓ + 2` and monic square-free `q` of degree `ℓ`.
//!
//! Dividing by `q²` and differentiating gives `2s²q³u = (p′q − 2pq′)u′ + 2pqu″`,
//! whose coefficients at `x^{3ℓ+j}` read
//! `Σ_{i≥0} (t̃c_{ij} − 2s²t̃d_i)·a_{i+j} = 0` with `t̃c_{0j} − 2s² = 2(j² − s²)`.
//! For `j = s−1, ..., 0` this determines `a_j`; for `j = −1, ..., −3ℓ` it is a
//! condition on `p, q`. Everything here works in the cleared form
//! `E_i^{(j)} = t̃c_{ij} − 2s²t̃d_i`, dividing by `2(s² − j²)` only where needed.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::chebyshev::{compose_parity_exact, Convention, OuterFamily};
use crate::error::MultipartiteError;
use crate::partitions::{distinct_perms, partitions_bounded, PermFilter};
use crate::poly::Poly;
use crate::rational::{int, Rational};

/// Abscissae where `g = ±m` transversally (`alphas`, the roots of `p`) and the
/// exceptional extremum abscissae (`betas`, the roots of `q`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OutsideData {
    alphas: Vec<Rational>,
    betas: Vec<Rational>,
}

impl OutsideData {
    pub fn new(alphas: Vec<Rational>, betas: Vec<Rational>) -> Result<Self, MultipartiteError> {
        if alphas.len() != 2 * betas.len() + 2 {
            return Err(MultipartiteError::DegreeMismatch { r: alphas.len(), l: betas.len() });
        }
        let mut all: Vec<&Rational> = alphas.iter().chain(&betas).collect();
        all.sort();
        if all.windows(2).any(|w| w[0] == w[1]) {
            return Err(MultipartiteError::RepeatedAbscissa);
        }
        Ok(OutsideData { alphas, betas })
    }

    pub fn alphas(&self) -> &[Rational] {
        &self.alphas
    }

    pub fn betas(&self) -> &[Rational] {
        &self.betas
    }

    pub fn p(&self) -> Poly {
        Poly::from_roots(&self.alphas)
    }

    pub fn q(&self) -> Poly {
        Poly::from_roots(&self.betas)
    }
}

/// `(p, q)` for which `v` itself solves the identity with `s = deg v`:
/// `q = v′/lc(v′)` and `p = (v² − m²)/lc(v)²`.
pub fn outside_from_inner(v: &Poly, m2: &Rational) -> (Poly, Poly) {
    let lc = v.leading().cloned().unwrap_or_else(Rational::one);
    let q = v.derivative().monic();
    let p = (&(v * v) - &Poly::constant(m2.clone())).scale(&(&lc * &lc).recip());
    (p, q)
}

/// `t̃d_0, ..., t̃d_{3ℓ}`, the coefficients of `q³` from the top down.
pub fn qcube(q: &Poly) -> Vec<Rational> {
    let mut c = q.pow(3).into_coeffs();
    c.reverse();
    c
}

/// `t̃c_{ij} = (i+j)·Σ_{k=0}^{i} (4i+2j−3k)·c_k·d_{i−k}`, with `c_k` and `d_k`
/// the coefficients of `p` and `q` from the top down (zero out of range).
pub fn tc(i: usize, j: i64, p: &Poly, q: &Poly) -> Rational {
    let r = p.degree().unwrap_or(0);
    let l = q.degree().unwrap_or(0);
    let ck = |k: usize| if k <= r { p.coeff(r - k) } else { Rational::zero() };
    let dk = |k: usize| if k <= l { q.coeff(l - k) } else { Rational::zero() };
    let ii = i as i64;
    let mut acc = Rational::zero();
    for k in 0..=i {
        let w = 4 * ii + 2 * j - 3 * k as i64;
        if w != 0 {
            acc += ck(k) * dk(i - k) * int(w);
        }
    }
    acc * int(ii + j)
}

/// The condition system for one `(s, p, q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultipartiteSystem {
    s: u32,
    p: Poly,
    q: Poly,
    l: usize,
    tdq: Vec<Rational>,
    /// `E_i^{(j)}` for `i = 1..=r+ℓ`, `j = −3ℓ..=s−1`, stored at `[j + 3ℓ][i − 1]`.
    e_cleared: Vec<Vec<Rational>>,
    a: Vec<Rational>,
    residuals: Vec<Rational>,
}

impl MultipartiteSystem {
    pub fn new(s: u32, p: &Poly, q: &Poly) -> Result<Self, MultipartiteError> {
        if s == 0 {
            return Err(MultipartiteError::ZeroDegree);
        }
        let (r, l) = match (p.degree(), q.degree()) {
            (Some(r), Some(l)) => (r, l),
            _ => return Err(MultipartiteError::NotMonic),
        };
        if !p.leading().is_some_and(One::is_one) || !q.leading().is_some_and(One::is_one) {
            return Err(MultipartiteError::NotMonic);
        }
        if r != 2 * l + 2 {
            return Err(MultipartiteError::DegreeMismatch { r, l });
        }
        if q.square_free().degree() != Some(l) {
            return Err(MultipartiteError::RepeatedAbscissa);
        }
        let tdq = qcube(q);
        let s2 = int(i64::from(s) * i64::from(s));
        let two_s2 = int(2) * &s2;
        let width = r + l;
        let lo = -(3 * l as i64);
        let e_cleared: Vec<Vec<Rational>> = (lo..i64::from(s))
            .map(|j| {
                (1..=width)
                    .map(|i| {
                        let td = tdq.get(i).cloned().unwrap_or_else(Rational::zero);
                        tc(i, j, p, q) - &two_s2 * td
                    })
                    .collect()
            })
            .collect();

        let su = s as usize;
        let offset = 3 * l;
        // a_j lives at index j + 3ℓ; negative indices stay zero.
        let mut a = vec![Rational::zero(); su + offset + 1];
        a[su + offset] = Rational::one();
        let sum_at = |a: &[Rational], j: i64| -> Rational {
            let row = &e_cleared[(j - lo) as usize];
            let mut acc = Rational::zero();
            for (i, e) in row.iter().enumerate() {
                let idx = j + 1 + i as i64 + offset as i64;
                if idx as usize > su + offset {
                    break;
                }
                acc += e * &a[idx as usize];
            }
            acc
        };
        for j in (0..su as i64).rev() {
            let value = sum_at(&a, j) / (int(2) * (&s2 - int(j * j)));
            a[(j + offset as i64) as usize] = value;
        }
        let residuals = (1..=offset as i64).map(|k| sum_at(&a, -k)).collect();
        let a = a.split_off(offset);
        Ok(MultipartiteSystem { s, p: p.clone(), q: q.clone(), l, tdq, e_cleared, a, residuals })
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn p(&self) -> &Poly {
        &self.p
    }

    pub fn q(&self) -> &Poly {
        &self.q
    }

    /// `t̃d_0, ..., t̃d_{3ℓ}`.
    pub fn tdq(&self) -> &[Rational] {
        &self.tdq
    }

    /// `E_i^{(j)} = t̃c_{ij} − 2s²t̃d_i` for `1 ≤ i ≤ r+ℓ`, `−3ℓ ≤ j < s`.
    pub fn e_cleared(&self, i: usize, j: i64) -> Rational {
        let lo = -(3 * self.l as i64);
        self.e_cleared[(j - lo) as usize][i - 1].clone()
    }

    /// `e_i^{(j)} = E_i^{(j)} / (2(s² − j²))`, or `None` at `j = −s`.
    pub fn e(&self, i: usize, j: i64) -> Option<Rational> {
        let s = i64::from(self.s);
        let den = 2 * (s * s - j * j);
        (den != 0).then(|| self.e_cleared(i, j) / int(den))
    }

    /// `a_0, ..., a_s` with `a_s = 1`, i.e. `F_0, ..., F_s`.
    pub fn coefficients(&self) -> &[Rational] {
        &self.a
    }

    pub fn u(&self) -> Poly {
        Poly::new(self.a.clone())
    }

    /// `R_j = Σ_i E_i^{(j)} a_{i+j}` for `j = −1, ..., −3ℓ` (in that order).
    pub fn residuals(&self) -> &[Rational] {
        &self.residuals
    }

    /// Whether the differentiated equation has a polynomial solution of degree `s`.
    pub fn is_solvable(&self) -> bool {
        self.residuals.iter().all(Zero::is_zero)
    }

    /// `F_j` from the sum over compositions of `s − j` into parts `≤ r + ℓ`
    /// of `Π_t e_{i_t}^{(j + i_1 + ... + i_{t−1})}`.
    pub fn fj_direct(&self, j: u32) -> Result<Rational, MultipartiteError> {
        if j > self.s {
            return Err(MultipartiteError::IndexOutOfRange { j: i64::from(j), s: self.s });
        }
        let width = self.width();
        let mut total = Rational::zero();
        for lambda in partitions_bounded(self.s - j, width as u32) {
            for seq in distinct_perms(&lambda, PermFilter::All) {
                total += self.chain_product(&seq, i64::from(j));
            }
        }
        Ok(total)
    }

    /// For `j = 1, ..., 3ℓ`, the sum over `λ ⊢ s + j` with `j ≤ λ_1 ≤ r + ℓ`
    /// and orderings starting with a part `≥ j` of
    /// `Π_t e_{i_t}^{(i_1 + ... + i_{t−1} − j)}`. At `j = s` the first factor
    /// is taken in cleared form, so the entry equals `R_{−s}`; otherwise it is
    /// `R_{−j} / (2(s² − j²))`.
    pub fn partition_residuals(&self) -> Vec<Rational> {
        let width = self.width() as u32;
        (1..=3 * self.l as u32)
            .map(|j| {
                let mut total = Rational::zero();
                for lambda in partitions_bounded(self.s + j, width) {
                    if lambda.largest().is_some_and(|p| p < j) {
                        continue;
                    }
                    for seq in distinct_perms(&lambda, PermFilter::FirstAtLeast(j)) {
                        total += self.chain_product(&seq, -i64::from(j));
                    }
                }
                total
            })
            .collect()
    }

    fn width(&self) -> usize {
        self.p.degree().unwrap_or(0) + self.l
    }

    /// `Π_t e_{i_t}^{(start + i_1 + ... + i_{t−1})}`, cleared at `−s`.
    fn chain_product(&self, seq: &[u32], start: i64) -> Rational {
        let mut at = start;
        let mut product = Rational::one();
        for &i in seq {
            let factor = self.e(i as usize, at).unwrap_or_else(|| self.e_cleared(i as usize, at));
            if factor.is_zero() {
                return Rational::zero();
            }
            product *= factor;
            at += i64::from(i);
        }
        product
    }
}

/// `(a_0, ..., a_s)` with `a_s = 1` and the residuals `R_{−1}, ..., R_{−3ℓ}`.
pub fn coefficients_general(
    s: u32,
    p: &Poly,
    q: &Poly,
) -> Result<(Vec<Rational>, Vec<Rational>), MultipartiteError> {
    let sys = MultipartiteSystem::new(s, p, q)?;
    Ok((sys.a, sys.residuals))
}

pub fn fj_direct(s: u32, p: &Poly, q: &Poly, j: u32) -> Result<Rational, MultipartiteError> {
    MultipartiteSystem::new(s, p, q)?.fj_direct(j)
}

pub fn partition_residuals(s: u32, p: &Poly, q: &Poly) -> Result<Vec<Rational>, MultipartiteError> {
    Ok(MultipartiteSystem::new(s, p, q)?.partition_residuals())
}

/// Constants with `s²q²(u² − m²) = p·u′² + c·q²` exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegrationConstant {
    pub m2: Rational,
    pub c: Rational,
    /// `(s²q²u² − p·u′²)/q² = c + s²m²`.
    pub k: Rational,
}

impl IntegrationConstant {
    /// `c = 0`: `u` satisfies the undifferentiated identity itself.
    pub fn is_chebyshev(&self) -> bool {
        self.c.is_zero()
    }
}

/// Finds `(c, m²)`. Without `prescribed_m2`, `m²` comes from matching the
/// lowest-degree terms of `s²q²(u² − m²) = p·u′²` (degree `2t`, `t` the
/// order of `q` at 0), and `c` is whatever remains.
pub fn integration_constant(
    s: u32,
    p: &Poly,
    q: &Poly,
    u: &Poly,
    prescribed_m2: Option<&Rational>,
) -> Result<IntegrationConstant, MultipartiteError> {
    let s2 = int(i64::from(s) * i64::from(s));
    let q2 = q * q;
    let du = u.derivative();
    let pu2 = p * &(&du * &du);
    let lhs = &(&q2 * &(u * u)).scale(&s2) - &pu2;
    let k = match lhs.exact_div(&q2) {
        Some(quot) if quot.degree().unwrap_or(0) == 0 => quot.coeff(0),
        _ => return Err(MultipartiteError::NoConsistentConstants),
    };
    let m2 = match prescribed_m2 {
        Some(m2) => m2.clone(),
        None => {
            let t = q.coeffs().iter().position(|c| !c.is_zero()).unwrap_or(0);
            let qt = q.coeff(t);
            let a0 = u.coeff(0);
            &a0 * &a0 - pu2.coeff(2 * t) / (&s2 * &qt * &qt)
        }
    };
    let c = &k - &s2 * &m2;
    let residual = &(&(&q2 * &(&(u * u) - &Poly::constant(m2.clone()))).scale(&s2) - &pu2)
        - &q2.scale(&c);
    if !residual.is_zero() {
        return Err(MultipartiteError::NoConsistentConstants);
    }
    Ok(IntegrationConstant { m2, c, k })
}

/// `m·T_N(u/m)` in parity-exact form.
pub fn compose_outer(u: &Poly, m2: &Rational, n: u32) -> Result<(Poly, Convention), MultipartiteError> {
    Ok(compose_parity_exact(u, m2, OuterFamily::Cosine, n)?)
}

/// Nonzero entries of the `E` table, keyed by `(i, j)`.
pub fn e_table(sys: &MultipartiteSystem) -> BTreeMap<(usize, i64), Rational> {
    let lo = -(3 * sys.l as i64);
    let mut out = BTreeMap::new();
    for (row, j) in sys.e_cleared.iter().zip(lo..) {
        for (n, e) in row.iter().enumerate() {
            if !e.is_zero() {
                out.insert((n + 1, j), e.clone());
            }
        }
    }
    out
}
