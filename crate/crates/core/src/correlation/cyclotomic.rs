//! Exact arithmetic in `Z[w]`, `w = exp(2 pi i / q)`.
//!
//! A value is kept as an integer vector of length `q`, entry `k` being the
//! coefficient of `w^k`. This representation is not unique (for `q = 4`,
//! `w^0 + w^2 = 0`), so equality of values is decided by reducing modulo the
//! cyclotomic polynomial `Phi_q`, the minimal polynomial of `w`.

use std::collections::HashMap;
use std::f64::consts::TAU;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};

/// Integer polynomial, coefficients from the constant term upward.
pub type IntPoly = Vec<i64>;

fn trim(p: &mut IntPoly) {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
}

/// Long division by a monic polynomial. Returns `(quotient, remainder)`.
fn div_monic(num: &[i64], den: &[i64]) -> (IntPoly, IntPoly) {
    debug_assert_eq!(den.last(), Some(&1));
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    if rem.len() <= dd {
        return (vec![0], rem);
    }
    let mut quot = vec![0; rem.len() - dd];
    for k in (dd..rem.len()).rev() {
        let lead = rem[k];
        if lead == 0 {
            continue;
        }
        quot[k - dd] = lead;
        for (j, &d) in den.iter().enumerate() {
            rem[k - dd + j] -= lead * d;
        }
    }
    rem.truncate(dd.max(1));
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

fn compute_phi(q: u32) -> IntPoly {
    // x^q - 1 = prod over d | q of Phi_d
    let mut p = vec![0i64; q as usize + 1];
    p[0] = -1;
    p[q as usize] = 1;
    for d in (1..q).filter(|d| q.is_multiple_of(*d)) {
        let (quot, rem) = div_monic(&p, &phi(d));
        debug_assert!(rem.iter().all(|&c| c == 0));
        p = quot;
    }
    p
}

fn phi(q: u32) -> Arc<[i64]> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<[i64]>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.read().expect("cyclotomic cache poisoned").get(&q) {
        return Arc::clone(p);
    }
    let p: Arc<[i64]> = compute_phi(q).into();
    cache
        .write()
        .expect("cyclotomic cache poisoned")
        .entry(q)
        .or_insert(p)
        .clone()
}

/// The `q`-th cyclotomic polynomial, obtained by dividing `x^q - 1` by
/// `Phi_d` for every proper divisor `d` of `q`.
///
/// # Panics
///
/// Panics if `q == 0`.
pub fn cyclotomic_poly(q: u32) -> IntPoly {
    assert!(q >= 1, "cyclotomic polynomial needs q >= 1");
    phi(q).to_vec()
}

/// An element `sum_k counts[k] * w^k` of `Z[w]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicValue {
    q: u32,
    counts: Vec<i64>,
}

impl CyclotomicValue {
    pub fn zero(q: u32) -> Self {
        assert!(q >= 1, "modulus must be positive");
        Self {
            q,
            counts: vec![0; q as usize],
        }
    }

    /// `w^k`.
    pub fn power(q: u32, k: i64) -> Self {
        let mut v = Self::zero(q);
        v.add_power(k, 1);
        v
    }

    pub fn from_counts(q: u32, counts: Vec<i64>) -> Result<Self> {
        if q == 0 || counts.len() != q as usize {
            return Err(Error::ShapeMismatch(format!(
                "{} counts for modulus {q}",
                counts.len()
            )));
        }
        Ok(Self { q, counts })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn counts(&self) -> &[i64] {
        &self.counts
    }

    pub(crate) fn counts_mut(&mut self) -> &mut [i64] {
        &mut self.counts
    }

    pub fn add_power(&mut self, k: i64, coeff: i64) {
        let idx = k.rem_euclid(self.q as i64) as usize;
        self.counts[idx] += coeff;
    }

    fn check_q(&self, other: &Self) -> Result<()> {
        if self.q != other.q {
            return Err(Error::ShapeMismatch(format!(
                "values over q={} and q={}",
                self.q, other.q
            )));
        }
        Ok(())
    }

    pub fn add_assign(&mut self, other: &Self) -> Result<()> {
        self.check_q(other)?;
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_assign(other)?;
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_q(other)?;
        let counts = self.counts.iter().zip(&other.counts).map(|(a, b)| a - b).collect();
        Ok(Self { q: self.q, counts })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_q(other)?;
        let mut out = Self::zero(self.q);
        let q = self.q as usize;
        for (i, &a) in self.counts.iter().enumerate().filter(|(_, &a)| a != 0) {
            for (j, &b) in other.counts.iter().enumerate() {
                out.counts[(i + j) % q] += a * b;
            }
        }
        Ok(out)
    }

    /// Complex conjugate: `w^k -> w^{-k}`.
    pub fn conj(&self) -> Self {
        let q = self.q as usize;
        let counts = (0..q).map(|k| self.counts[(q - k) % q]).collect();
        Self { q: self.q, counts }
    }

    /// Exact zero test: `Phi_q` divides `sum_k counts[k] x^k`.
    pub fn is_zero(&self) -> bool {
        if self.counts.iter().all(|&c| c == 0) {
            return true;
        }
        let (_, rem) = div_monic(&self.counts, &phi(self.q));
        rem.iter().all(|&c| c == 0)
    }

    /// Exact equality of the complex values.
    pub fn value_eq(&self, other: &Self) -> bool {
        self.sub(other).map(|d| d.is_zero()).unwrap_or(false)
    }

    /// Exact test for `|v| = k`, via `v * conj(v) - k^2 = 0`.
    pub fn has_magnitude(&self, k: u64) -> bool {
        let mut norm = self.mul(&self.conj()).expect("same modulus");
        norm.add_power(0, -((k * k) as i64));
        norm.is_zero()
    }

    /// Floating-point `(re, im)`; used for reports and cross-checks only.
    pub fn to_complex(&self) -> (f64, f64) {
        let q = self.q as f64;
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .fold((0.0, 0.0), |(re, im), (k, &c)| {
                let angle = TAU * k as f64 / q;
                (re + c as f64 * angle.cos(), im + c as f64 * angle.sin())
            })
    }

    pub fn magnitude(&self) -> f64 {
        let (re, im) = self.to_complex();
        re.hypot(im)
    }
}
