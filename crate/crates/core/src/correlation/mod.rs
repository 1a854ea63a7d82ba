//! Aperiodic correlations of phase sequences, computed exactly in `Z[w]`.
//!
//! For length-`L` sequences `a`, `b` and shift `tau`,
//!
//! ```text
//! C(a, b)(tau) = sum_{i=0}^{L-1-tau} w^{a_i - b_{i+tau}}    0 <= tau < L
//!              = sum_{i=0}^{L-1+tau} w^{a_{i-tau} - b_i}    -L < tau < 0
//!              = 0                                          |tau| >= L
//! ```
//!
//! Both branches collect the pairs `(k, l)` with `l - k = tau`, which is
//! what [`accf_table`] exploits to fill every shift in one pass.

use std::io::Write;
use std::ops::RangeInclusive;

use crate::error::{Error, Result};
use crate::gbf::PhaseSequence;

pub mod cyclotomic;

pub use cyclotomic::{cyclotomic_poly, CyclotomicValue};

fn check_pair(a: &PhaseSequence, b: &PhaseSequence) -> Result<()> {
    if a.q() != b.q() || a.len() != b.len() {
        return Err(Error::ShapeMismatch(format!(
            "correlating (q={}, N={}) with (q={}, N={})",
            a.q(),
            a.len(),
            b.q(),
            b.len()
        )));
    }
    Ok(())
}

/// Adds `C(a, b)(tau)` to `acc`. Shapes must already be checked.
fn accumulate(acc: &mut [i64], a: &[u32], b: &[u32], q: u32, tau: i64) {
    let len = a.len() as i64;
    if tau.abs() >= len {
        return;
    }
    let (a, b) = if tau >= 0 {
        (&a[..(len - tau) as usize], &b[tau as usize..])
    } else {
        (&a[(-tau) as usize..], &b[..(len + tau) as usize])
    };
    for (&x, &y) in a.iter().zip(b) {
        acc[((x + q - y) % q) as usize] += 1;
    }
}

/// Aperiodic cross-correlation `C(a, b)(tau)`.
pub fn accf(a: &PhaseSequence, b: &PhaseSequence, tau: i64) -> Result<CyclotomicValue> {
    check_pair(a, b)?;
    let mut v = CyclotomicValue::zero(a.q());
    accumulate(v.counts_mut(), a.phases(), b.phases(), a.q(), tau);
    Ok(v)
}

/// Aperiodic auto-correlation `A(a)(tau) = C(a, a)(tau)`.
pub fn aacf(a: &PhaseSequence, tau: i64) -> CyclotomicValue {
    accf(a, a, tau).expect("a sequence matches itself")
}

/// `C(a, b)(tau)` for every `tau` in `-(L-1)..=L-1`; entry `k` holds shift
/// `k - (L-1)`.
pub fn accf_table(a: &PhaseSequence, b: &PhaseSequence) -> Result<Vec<CyclotomicValue>> {
    check_pair(a, b)?;
    let q = a.q();
    let len = a.len();
    let mut table = vec![CyclotomicValue::zero(q); 2 * len - 1];
    for (k, &x) in a.phases().iter().enumerate() {
        for (l, &y) in b.phases().iter().enumerate() {
            table[l + len - 1 - k].counts_mut()[((x + q - y) % q) as usize] += 1;
        }
    }
    Ok(table)
}

/// Floating-point `C(a, b)(tau)` as `(re, im)`, accumulated directly from
/// complex exponentials. Serves as an independent oracle for the exact path.
pub fn accf_float(a: &PhaseSequence, b: &PhaseSequence, tau: i64) -> Result<(f64, f64)> {
    check_pair(a, b)?;
    let len = a.len() as i64;
    let step = std::f64::consts::TAU / a.q() as f64;
    let mut re = 0.0;
    let mut im = 0.0;
    for i in 0..len {
        let j = i + tau;
        if !(0..len).contains(&j) {
            continue;
        }
        let angle = step * (a.phases()[i as usize] as f64 - b.phases()[j as usize] as f64);
        re += angle.cos();
        im += angle.sin();
    }
    Ok((re, im))
}

fn check_set(set: &[PhaseSequence]) -> Result<()> {
    let first = set
        .first()
        .ok_or_else(|| Error::ShapeMismatch("empty sequence set".into()))?;
    for s in &set[1..] {
        check_pair(first, s)?;
    }
    Ok(())
}

fn check_sets(a: &[PhaseSequence], b: &[PhaseSequence]) -> Result<()> {
    check_set(a)?;
    check_set(b)?;
    if a.len() != b.len() {
        return Err(Error::ShapeMismatch(format!(
            "sets of {} and {} sequences",
            a.len(),
            b.len()
        )));
    }
    check_pair(&a[0], &b[0])
}

/// Sum over `i` of `C(a_i, b_{(i + step) mod M})(tau)`.
fn sum_cross(a: &[PhaseSequence], b: &[PhaseSequence], step: usize, tau: i64) -> CyclotomicValue {
    let q = a[0].q();
    let m = a.len();
    let mut v = CyclotomicValue::zero(q);
    for i in 0..m {
        accumulate(v.counts_mut(), a[i].phases(), b[(i + step) % m].phases(), q, tau);
    }
    v
}

/// `sum_i A(c_i)(tau)`.
pub fn sum_aacf(set: &[PhaseSequence], tau: i64) -> Result<CyclotomicValue> {
    check_set(set)?;
    Ok(sum_cross(set, set, 0, tau))
}

/// `sum_i C(c_i, c_{i+1})(tau)` with `c_M = c_0`.
pub fn sum_accf_adjacent(set: &[PhaseSequence], tau: i64) -> Result<CyclotomicValue> {
    check_set(set)?;
    Ok(sum_cross(set, set, 1, tau))
}

/// `sum_i C(a_i, b_i)(tau)`.
pub fn sum_accf_pointwise(a: &[PhaseSequence], b: &[PhaseSequence], tau: i64) -> Result<CyclotomicValue> {
    check_sets(a, b)?;
    Ok(sum_cross(a, b, 0, tau))
}

/// `sum_i C(a_i, b_{i+1})(tau)` with `b_M = b_0`.
pub fn sum_accf_adjacent_cross(
    a: &[PhaseSequence],
    b: &[PhaseSequence],
    tau: i64,
) -> Result<CyclotomicValue> {
    check_sets(a, b)?;
    Ok(sum_cross(a, b, 1, tau))
}

/// Front- and tail-end shift windows of a width-`Z` zone on length `N`:
/// `{1..Z}` and `{N-Z..N-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShiftWindow {
    z: usize,
    n: usize,
}

impl ShiftWindow {
    pub fn new(z: usize, n: usize) -> Result<Self> {
        if z == 0 || z > n {
            return Err(Error::ZoneOutOfRange { z, max: n });
        }
        Ok(Self { z, n })
    }

    pub fn z(&self) -> usize {
        self.z
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn front(&self) -> RangeInclusive<usize> {
        1..=self.z
    }

    pub fn tail(&self) -> RangeInclusive<usize> {
        self.n - self.z..=self.n - 1
    }

    /// Sorted, deduplicated `front ∪ tail`.
    pub fn front_and_tail(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.front().chain(self.tail()).collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

/// Writes `(tau, value)` rows as CSV with columns
/// `tau, w0..w{q-1}, magnitude, is_zero`.
pub fn write_correlation_csv<W: Write>(out: W, q: u32, rows: &[(i64, CyclotomicValue)]) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["tau".to_string()];
    header.extend((0..q).map(|k| format!("w{k}")));
    header.push("magnitude".into());
    header.push("is_zero".into());
    w.write_record(&header)?;
    for (tau, v) in rows {
        let mut rec = vec![tau.to_string()];
        rec.extend(v.counts().iter().map(|c| c.to_string()));
        rec.push(format!("{:.9}", v.magnitude()));
        rec.push(v.is_zero().to_string());
        w.write_record(&rec)?;
    }
    w.flush()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn seq(q: u32, p: &[u32]) -> PhaseSequence {
        PhaseSequence::new(q, p.to_vec()).unwrap()
    }

    /// Textbook double loop over the two branches of the definition.
    fn reference_accf(a: &PhaseSequence, b: &PhaseSequence, tau: i64) -> Vec<i64> {
        let q = a.q() as i64;
        let l = a.len() as i64;
        let mut counts = vec![0; q as usize];
        if tau >= 0 && tau < l {
            for i in 0..l - tau {
                let e = a.phases()[i as usize] as i64 - b.phases()[(i + tau) as usize] as i64;
                counts[e.rem_euclid(q) as usize] += 1;
            }
        } else if tau < 0 && -tau < l {
            for i in 0..l + tau {
                let e = a.phases()[(i - tau) as usize] as i64 - b.phases()[i as usize] as i64;
                counts[e.rem_euclid(q) as usize] += 1;
            }
        }
        counts
    }

    #[test]
    fn trivial_correlations() {
        let z = seq(4, &[0, 0, 0, 0]);
        assert_eq!(accf(&z, &z, 1).unwrap().counts(), &[3, 0, 0, 0]);
        let a = seq(4, &[0, 1, 2, 3]);
        let b = seq(4, &[3, 3, 0, 1]);
        assert!(accf(&a, &b, 4).unwrap().counts().iter().all(|&c| c == 0));
        assert!(accf(&a, &b, -9).unwrap().is_zero());
        assert_eq!(aacf(&a, 0).counts().iter().sum::<i64>(), 4);
        assert!((aacf(&a, 0).magnitude() - 4.0).abs() < 1e-12);
    }

    #[test]
    fn shape_errors() {
        let a = seq(4, &[0, 1, 2]);
        assert!(accf(&a, &seq(4, &[0, 1]), 0).is_err());
        assert!(accf(&a, &seq(2, &[0, 1, 1]), 0).is_err());
        assert!(sum_aacf(&[], 0).is_err());
        assert!(sum_accf_pointwise(std::slice::from_ref(&a), &[a.clone(), a.clone()], 0).is_err());
    }

    #[test]
    fn singleton_set_sums() {
        let a = seq(4, &[0, 1, 2, 2, 3]);
        for tau in -5..=5 {
            assert_eq!(sum_aacf(std::slice::from_ref(&a), tau).unwrap(), aacf(&a, tau));
            assert_eq!(sum_accf_adjacent(std::slice::from_ref(&a), tau).unwrap(), aacf(&a, tau));
        }
    }

    #[test]
    fn adjacency_wraps_around() {
        let s = vec![seq(2, &[0, 1]), seq(2, &[1, 1]), seq(2, &[0, 0])];
        let expected = accf(&s[0], &s[1], 1)
            .unwrap()
            .add(&accf(&s[1], &s[2], 1).unwrap())
            .unwrap()
            .add(&accf(&s[2], &s[0], 1).unwrap())
            .unwrap();
        assert_eq!(sum_accf_adjacent(&s, 1).unwrap(), expected);
    }

    #[test]
    fn shift_windows() {
        let w = ShiftWindow::new(5, 18).unwrap();
        assert_eq!(w.front(), 1..=5);
        assert_eq!(w.tail(), 13..=17);
        assert_eq!(w.front_and_tail().len(), 10);
        let w = ShiftWindow::new(4, 4).unwrap();
        // the tail reaches down to shift 0 when Z = N
        assert_eq!(w.front_and_tail(), vec![0, 1, 2, 3, 4]);
        assert!(ShiftWindow::new(0, 4).is_err());
        assert!(ShiftWindow::new(5, 4).is_err());
    }

    #[test]
    fn csv_export() {
        let a = seq(4, &[0, 2, 1]);
        let rows: Vec<_> = (-2..=2).map(|t| (t, aacf(&a, t))).collect();
        let mut out = Vec::new();
        write_correlation_csv(&mut out, 4, &rows).unwrap();
        let text = String::from_utf8(out).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("tau,w0,w1,w2,w3,magnitude,is_zero"));
        assert_eq!(lines.nth(2), Some("0,3,0,0,0,3.000000000,false"));
    }

    fn arb_pair() -> impl Strategy<Value = (PhaseSequence, PhaseSequence)> {
        (prop::sample::select(vec![2u32, 4, 6, 8]), 1usize..24).prop_flat_map(|(q, n)| {
            let v = prop::collection::vec(0..q, n);
            (v.clone(), v).prop_map(move |(a, b)| (seq(q, &a), seq(q, &b)))
        })
    }

    proptest! {
        #[test]
        fn matches_reference_double_loop((a, b) in arb_pair(), tau in -30i64..30) {
            let v = accf(&a, &b, tau).unwrap();
            prop_assert_eq!(v.counts(), &reference_accf(&a, &b, tau)[..]);
        }

        #[test]
        fn table_matches_per_shift((a, b) in arb_pair()) {
            let table = accf_table(&a, &b).unwrap();
            let l = a.len() as i64;
            for (k, v) in table.iter().enumerate() {
                prop_assert_eq!(v, &accf(&a, &b, k as i64 - (l - 1)).unwrap());
            }
        }

        #[test]
        fn branches_are_conjugate_mirrors((a, b) in arb_pair(), tau in -30i64..30) {
            prop_assert_eq!(accf(&a, &b, -tau).unwrap(), accf(&b, &a, tau).unwrap().conj());
            prop_assert_eq!(aacf(&a, tau), aacf(&a, -tau).conj());
        }

        #[test]
        fn partial_ranges_add_up((a, b) in arb_pair(), tau in 0i64..24, cut in 0usize..24) {
            // splitting the summation index range and adding the parts gives the whole
            let l = a.len();
            prop_assume!((tau as usize) < l);
            let span = l - tau as usize;
            let cut = cut.min(span);
            let q = a.q();
            let mut acc = vec![0i64; q as usize];
            for range in [0..cut, cut..span] {
                for i in range {
                    let e = (a.phases()[i] + q - b.phases()[i + tau as usize]) % q;
                    acc[e as usize] += 1;
                }
            }
            let v = accf(&a, &b, tau).unwrap();
            prop_assert_eq!(&acc[..], v.counts());
        }

        #[test]
        fn exact_and_float_agree((a, b) in arb_pair(), tau in -24i64..24) {
            let v = accf(&a, &b, tau).unwrap();
            let (re, im) = accf_float(&a, &b, tau).unwrap();
            prop_assert_eq!(v.is_zero(), re.hypot(im) < 1e-9);
            prop_assert!((v.magnitude() - re.hypot(im)).abs() < 1e-9);
        }
    }
}
