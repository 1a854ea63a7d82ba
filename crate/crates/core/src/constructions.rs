//! Sequence constructions from generalized Boolean functions.
//!
//! * [`standard_gcp`]: the quadratic-path Golay pair and its complementary
//!   mate in `m` variables.
//! * [`base_gbf`] / [`seed_gbf`]: the path function `g` on `m - 2` variables
//!   and the gated function `G` on `m` variables built from it.
//! * [`czcp_pair`] / [`czcp_mate_pair`]: truncated projections of
//!   `G_1`, `G_2` (and their `x_{m-2}`-offset versions) giving
//!   `(2^{m-1} + 2, 2^{pi(m-3)} + 1)` cross Z-complementary pairs.
//! * [`czcss`]: the family of `2^{n+1}` sets, each with `2^{n+1}` sequences.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gbf::{Gbf, PhaseSequence, MAX_VARS};

/// Largest `n` accepted by [`czcss`]; a family holds `4^{n+1}` sequences.
pub const MAX_N: usize = 12;

/// A bijection on `{0, .., len-1}`, stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let len = images.len();
        if len == 0 {
            return Err(Error::InvalidPermutation("empty".into()));
        }
        let mut seen = vec![false; len];
        for &v in &images {
            if v >= len || seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection on 0..{len}"
                )));
            }
            seen[v] = true;
        }
        Ok(Self(images))
    }

    pub fn identity(len: usize) -> Self {
        Self((0..len).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `pi(i)`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn last(&self) -> usize {
        *self.0.last().expect("nonempty")
    }

    /// All permutations of `{0, .., len-1}` in lexicographic order.
    pub fn all(len: usize) -> Vec<Self> {
        let mut cur: Vec<usize> = (0..len).collect();
        let mut out = vec![Self(cur.clone())];
        while next_permutation(&mut cur) {
            out.push(Self(cur.clone()));
        }
        out
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

/// Comma-separated images, e.g. `1,0,2` for `pi(0)=1, pi(1)=0, pi(2)=2`.
impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPermutation(format!("bad entry '{t}' in '{s}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(images)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// Parameters shared by the constructions. `pi` permutes `{0..m-3}` for the
/// CZCP/CZCSS constructions and `{0..m-1}` for [`standard_gcp`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionParams {
    pub q: u32,
    pub m: usize,
    #[serde(default = "one")]
    pub n: usize,
    pub pi: Permutation,
    #[serde(default)]
    pub c: u32,
    #[serde(default)]
    pub c_prime: u32,
    #[serde(default)]
    pub c_1: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub linear_coeffs: Option<Vec<u32>>,
}

fn one() -> usize {
    1
}

impl ConstructionParams {
    /// Parameters for the CZCP/CZCSS constructions with zero constants.
    pub fn new(q: u32, m: usize, n: usize, pi: Permutation) -> Self {
        Self {
            q,
            m,
            n,
            pi,
            c: 0,
            c_prime: 0,
            c_1: 0,
            linear_coeffs: None,
        }
    }

    /// Checks the invariants of the CZCP/CZCSS constructions.
    pub fn validate(&self) -> Result<()> {
        check_seed_params(self.q, self.m, &self.pi)?;
        if self.n == 0 || self.n > MAX_N {
            return Err(Error::InvalidParameter(format!("n = {} outside 1..={MAX_N}", self.n)));
        }
        Ok(())
    }

    pub fn claimed_zcz(&self) -> usize {
        claimed_zcz(&self.pi)
    }

    pub fn claimed_length(&self) -> usize {
        czcp_length(self.m)
    }
}

/// Two equal-shape sequences with the `(N, Z)` the construction promises.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequencePair {
    pub first: PhaseSequence,
    pub second: PhaseSequence,
    pub claimed_n: usize,
    pub claimed_z: usize,
}

impl SequencePair {
    pub fn new(first: PhaseSequence, second: PhaseSequence, claimed_z: usize) -> Result<Self> {
        if first.q() != second.q() || first.len() != second.len() {
            return Err(Error::ShapeMismatch("pair members differ in shape".into()));
        }
        let claimed_n = first.len();
        Ok(Self {
            first,
            second,
            claimed_n,
            claimed_z,
        })
    }

    pub fn q(&self) -> u32 {
        self.first.q()
    }

    pub fn len(&self) -> usize {
        self.first.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn as_set(&self) -> [PhaseSequence; 2] {
        [self.first.clone(), self.second.clone()]
    }
}

/// One code: an ordered flock of equal-shape sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeSet {
    pub label: String,
    pub sequences: Vec<PhaseSequence>,
}

impl CodeSet {
    pub fn new(label: impl Into<String>, sequences: Vec<PhaseSequence>) -> Result<Self> {
        let first = sequences
            .first()
            .ok_or_else(|| Error::ShapeMismatch("code set without sequences".into()))?;
        if sequences.iter().any(|s| s.q() != first.q() || s.len() != first.len()) {
            return Err(Error::ShapeMismatch("ragged code set".into()));
        }
        Ok(Self {
            label: label.into(),
            sequences,
        })
    }

    pub fn flock_size(&self) -> usize {
        self.sequences.len()
    }

    pub fn q(&self) -> u32 {
        self.sequences[0].q()
    }

    pub fn seq_len(&self) -> usize {
        self.sequences[0].len()
    }
}

/// The `(K, M, N, Z)` a construction claims.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimedShape {
    #[serde(rename = "K")]
    pub set_size: usize,
    #[serde(rename = "M")]
    pub flock_size: usize,
    #[serde(rename = "N")]
    pub length: usize,
    #[serde(rename = "Z")]
    pub zcz: usize,
}

/// An ordered list of code sets with uniform flock size, length and modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeFamily {
    pub sets: Vec<CodeSet>,
    pub claimed: ClaimedShape,
}

impl CodeFamily {
    /// Builds a family, checking uniformity. `claimed.zcz` is taken as given.
    pub fn new(sets: Vec<CodeSet>, zcz: usize) -> Result<Self> {
        let first = sets
            .first()
            .ok_or_else(|| Error::ShapeMismatch("family without sets".into()))?;
        let (q, m, n) = (first.q(), first.flock_size(), first.seq_len());
        if sets
            .iter()
            .any(|s| s.q() != q || s.flock_size() != m || s.seq_len() != n)
        {
            return Err(Error::ShapeMismatch("ragged family".into()));
        }
        let claimed = ClaimedShape {
            set_size: sets.len(),
            flock_size: m,
            length: n,
            zcz,
        };
        Ok(Self { sets, claimed })
    }

    pub fn q(&self) -> u32 {
        self.sets[0].q()
    }

    pub fn seq_len(&self) -> usize {
        self.sets[0].seq_len()
    }
}

/// `2^{m-1} + 2`.
pub fn czcp_length(m: usize) -> usize {
    (1 << (m - 1)) + 2
}

/// `2^{pi(m-3)} + 1`, with `pi` over `{0..m-3}`.
pub fn claimed_zcz(pi: &Permutation) -> usize {
    (1 << pi.last()) + 1
}

fn check_seed_params(q: u32, m: usize, pi: &Permutation) -> Result<()> {
    if q < 2 || !q.is_multiple_of(2) {
        return Err(Error::InvalidModulus(q));
    }
    if !(4..=MAX_VARS).contains(&m) {
        return Err(Error::InvalidParameter(format!("m = {m} outside 4..={MAX_VARS}")));
    }
    if pi.len() != m - 2 {
        return Err(Error::InvalidPermutation(format!(
            "expected a permutation of 0..{} for m = {m}, got {} entries",
            m - 3,
            pi.len()
        )));
    }
    Ok(())
}

/// Golay pair `(a, b)` and its complementary mate `(c, d)` from
/// `g = (q/2) sum_{i<m-1} x_{pi(i)} x_{pi(i+1)} + sum_i c_i x_i + c`:
///
/// ```text
/// a = Psi(g)                     b = Psi(g + (q/2) x_{pi(0)} + c')
/// c = Psi(g + (q/2) x_{pi(m-1)})  d = Psi(g + (q/2)(x_{pi(0)} + x_{pi(m-1)}) + c')
/// ```
pub fn standard_gcp(
    q: u32,
    m: usize,
    pi: &Permutation,
    linear_coeffs: &[u32],
    c: u32,
    c_prime: u32,
) -> Result<(SequencePair, SequencePair)> {
    if !(2..=MAX_VARS).contains(&m) {
        return Err(Error::InvalidParameter(format!("m = {m} outside 2..={MAX_VARS}")));
    }
    if pi.len() != m {
        return Err(Error::InvalidPermutation(format!(
            "expected a permutation of 0..{} for m = {m}",
            m - 1
        )));
    }
    if linear_coeffs.len() != m {
        return Err(Error::InvalidParameter(format!(
            "{} linear coefficients for m = {m}",
            linear_coeffs.len()
        )));
    }
    let half = (q / 2) as i64;
    let mut g = Gbf::constant(q, m, c as i64)?;
    for i in 0..m - 1 {
        g = g.add(&Gbf::monomial(q, m, &[pi.at(i), pi.at(i + 1)], half)?)?;
    }
    for (i, &ci) in linear_coeffs.iter().enumerate() {
        g = g.add(&Gbf::monomial(q, m, &[i], ci as i64)?)?;
    }
    let first = Gbf::monomial(q, m, &[pi.at(0)], half)?;
    let last = Gbf::monomial(q, m, &[pi.at(m - 1)], half)?;
    let shift = Gbf::constant(q, m, c_prime as i64)?;

    let a = g.project();
    let b = g.add(&first)?.add(&shift)?.project();
    let mc = g.add(&last)?.project();
    let md = g.add(&first)?.add(&last)?.add(&shift)?.project();
    let n = 1usize << m;
    Ok((SequencePair::new(a, b, n)?, SequencePair::new(mc, md, n)?))
}

/// `g = sum_{a=0}^{m-4} x_{pi(a)} x_{pi(a+1)}` in `m - 2` variables.
pub fn base_gbf(q: u32, m: usize, pi: &Permutation) -> Result<Gbf> {
    check_seed_params(q, m, pi)?;
    let v = m - 2;
    let mut g = Gbf::zero(q, v)?;
    for a in 0..m - 3 {
        g = g.add(&Gbf::monomial(q, v, &[pi.at(a), pi.at(a + 1)], 1)?)?;
    }
    Ok(g)
}

/// `G = (q/2)( (1-x_{m-1}) x_{m-2} g + x_{m-1} (1-x_{m-2}) (g + x_{pi(0)} + m - 2) ) + c`
/// in `m` variables.
pub fn seed_gbf(q: u32, m: usize, pi: &Permutation, c: u32) -> Result<Gbf> {
    let g = base_gbf(q, m, pi)?.with_num_vars(m)?;
    let hi = m - 1;
    let lo = m - 2;
    let gate_lo = Gbf::complement(q, m, hi)?.mul(&Gbf::variable(q, m, lo)?)?;
    let gate_hi = Gbf::variable(q, m, hi)?.mul(&Gbf::complement(q, m, lo)?)?;
    let shifted = g
        .add(&Gbf::variable(q, m, pi.at(0))?)?
        .add(&Gbf::constant(q, m, (m - 2) as i64)?)?;
    let inner = gate_lo.mul(&g)?.add(&gate_hi.mul(&shifted)?)?;
    inner.scale((q / 2) as i64).add(&Gbf::constant(q, m, c as i64)?)
}

/// `(G_1, G_2) = (G + (q/2) x_{m-1} x_{m-2}, G + (q/2) x_{pi(m-3)} (x_{m-1} + x_{m-2}))`.
pub fn czcp_functions(q: u32, m: usize, pi: &Permutation, c: u32) -> Result<(Gbf, Gbf)> {
    let big_g = seed_gbf(q, m, pi, c)?;
    let half = (q / 2) as i64;
    let g1 = big_g.add(&Gbf::monomial(q, m, &[m - 1, m - 2], half)?)?;
    let tail = pi.last();
    let g2 = big_g
        .add(&Gbf::monomial(q, m, &[tail, m - 1], half)?)?
        .add(&Gbf::monomial(q, m, &[tail, m - 2], half)?)?;
    Ok((g1, g2))
}

/// Truncation applied to every CZCP/CZCSS projection: `2^{m-2} - 1`.
pub fn truncation(m: usize) -> usize {
    (1 << (m - 2)) - 1
}

/// `(Psi_L(G_1), Psi_L(G_2))` with `L = 2^{m-2} - 1`.
pub fn czcp_pair(q: u32, m: usize, pi: &Permutation, c: u32) -> Result<SequencePair> {
    let (g1, g2) = czcp_functions(q, m, pi, c)?;
    let trim = truncation(m);
    SequencePair::new(
        g1.project_truncated(trim)?,
        g2.project_truncated(trim)?,
        claimed_zcz(pi),
    )
}

/// The mate pair `(Psi_L(G_1 + (q/2) x_{m-2}), Psi_L(G_2 + (q/2) x_{m-2}))`.
pub fn czcp_mate_pair(q: u32, m: usize, pi: &Permutation, c: u32) -> Result<SequencePair> {
    let (g1, g2) = czcp_functions(q, m, pi, c)?;
    let offset = Gbf::monomial(q, m, &[m - 2], (q / 2) as i64)?;
    let trim = truncation(m);
    SequencePair::new(
        g1.add(&offset)?.project_truncated(trim)?,
        g2.add(&offset)?.project_truncated(trim)?,
        claimed_zcz(pi),
    )
}

/// Bits of `t` as `(t_0,t_1,..)`, least significant first.
fn bits_label(t: usize, n: usize) -> String {
    let bits: Vec<String> = (0..n).map(|j| ((t >> j) & 1).to_string()).collect();
    format!("({})", bits.join(","))
}

/// The cross Z-complementary sequence set.
///
/// For each `t` in `{0,1}^n` the set `S_t` holds `Psi_L(G_d + (q/2) t.y)` and
/// `S'_t` holds `Psi_L(G_d + (q/2) x_{m-2} + (q/2) t.y)`, ordered by `d = 1`
/// with `y = 0..2^n-1` and then `d = 2` with the same `y` order. The family
/// lists every `S_t` (ascending `t`) followed by every `S'_t`.
///
/// Since `y` does not index sequence positions, `(q/2) t.y` is a constant
/// phase offset `(q/2) * parity(t & y)` on each member.
pub fn czcss(q: u32, m: usize, n: usize, pi: &Permutation, c: u32) -> Result<CodeFamily> {
    let params = ConstructionParams {
        c,
        ..ConstructionParams::new(q, m, n, pi.clone())
    };
    params.validate()?;
    let base = czcp_pair(q, m, pi, c)?;
    let mate = czcp_mate_pair(q, m, pi, c)?;
    let half = (q / 2) as i64;
    let count = 1usize << n;
    let mut sets = Vec::with_capacity(2 * count);
    for (prefix, pair) in [("S", &base), ("S'", &mate)] {
        for t in 0..count {
            let mut members = Vec::with_capacity(2 * count);
            for seq in [&pair.first, &pair.second] {
                for y in 0..count {
                    let parity = ((t & y).count_ones() % 2) as i64;
                    members.push(seq.offset(half * parity));
                }
            }
            sets.push(CodeSet::new(format!("{prefix}{}", bits_label(t, n)), members)?);
        }
    }
    CodeFamily::new(sets, claimed_zcz(pi))
}

/// The four untruncated length-`2^{m-2}` sequences whose cross-correlation
/// sum vanishes on the shift window `2^{m-2} - 2^{pi(m-3)} ..= 2^{m-2} - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quadruple {
    pub p: PhaseSequence,
    pub q_seq: PhaseSequence,
    pub u: PhaseSequence,
    pub v: PhaseSequence,
}

/// `p = Psi((q/2) g)`, `q = Psi((q/2)(g + x_{pi(0)} + x_{pi(m-3)} + c_1))`,
/// `u = Psi((q/2)(g + x_{pi(m-3)}))`, `v = Psi((q/2)(g + x_{pi(0)} + c_1))`.
pub fn quadruple(q: u32, m: usize, pi: &Permutation, c_1: u32) -> Result<Quadruple> {
    let g = base_gbf(q, m, pi)?;
    let v = m - 2;
    let half = (q / 2) as i64;
    let head = Gbf::variable(q, v, pi.at(0))?;
    let tail = Gbf::variable(q, v, pi.last())?;
    let konst = Gbf::constant(q, v, c_1 as i64)?;
    let proj = |f: Gbf| f.scale(half).project();
    Ok(Quadruple {
        p: proj(g.clone()),
        q_seq: proj(g.add(&head)?.add(&tail)?.add(&konst)?),
        u: proj(g.add(&tail)?),
        v: proj(g.add(&head)?.add(&konst)?),
    })
}

/// Shift window on which [`Quadruple`] cross sums vanish.
pub fn quadruple_window(m: usize, pi: &Permutation) -> std::ops::RangeInclusive<i64> {
    let top = 1i64 << (m - 2);
    (top - (1i64 << pi.last()))..=(top - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correlation::{aacf, accf};

    fn pi(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn permutations() {
        assert_eq!(pi("1,0,2").images(), &[1, 0, 2]);
        assert_eq!(pi("1, 0, 2").to_string(), "1,0,2");
        assert!("1,1,2".parse::<Permutation>().is_err());
        assert!("0,3".parse::<Permutation>().is_err());
        assert!("a".parse::<Permutation>().is_err());
        assert!(Permutation::new(vec![]).is_err());
        let all = Permutation::all(4);
        assert_eq!(all.len(), 24);
        assert_eq!(all[0], Permutation::identity(4));
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn path_function() {
        let g = base_gbf(4, 5, &pi("1,0,2")).unwrap();
        assert_eq!(g, Gbf::parse("x1*x0 + x0*x2", 4, 3).unwrap());
        let g = base_gbf(4, 4, &pi("1,0")).unwrap();
        assert_eq!(g, Gbf::parse("x0*x1", 4, 2).unwrap());
        let g = base_gbf(2, 6, &Permutation::identity(4)).unwrap();
        assert_eq!(g, Gbf::parse("x0*x1 + x1*x2 + x2*x3", 2, 4).unwrap());
        assert!(base_gbf(4, 3, &pi("0")).is_err());
        assert!(base_gbf(4, 5, &pi("1,0")).is_err());
        assert!(base_gbf(3, 5, &pi("1,0,2")).is_err());
    }

    #[test]
    fn seed_function_matches_worked_expansion() {
        // 2( (1-x4) x3 g + x4 (1-x3)(g + x1 + 3) ) with g = x1x0 + x0x2, q = 4
        let big_g = seed_gbf(4, 5, &pi("1,0,2"), 0).unwrap();
        for i in 0..32u64 {
            let x = |j: u64| (i >> j) & 1;
            let g = x(1) * x(0) + x(0) * x(2);
            let val = 2 * ((1 - x(4)) * x(3) * g + x(4) * (1 - x(3)) * (g + x(1) + 3));
            assert_eq!(big_g.evaluate(i).unwrap() as u64, val % 4, "i = {i}");
        }
    }

    #[test]
    fn seed_function_gates() {
        let (q, m, c) = (8, 6, 5);
        let big_g = seed_gbf(q, m, &pi("2,0,3,1"), c).unwrap();
        for i in 0..(1u64 << m) {
            let (hi, lo) = ((i >> (m - 1)) & 1, (i >> (m - 2)) & 1);
            if hi == lo {
                assert_eq!(big_g.evaluate(i).unwrap(), c);
            }
        }
    }

    #[test]
    fn example_sequences() {
        let p = pi("1,0,2");
        let ab = czcp_pair(4, 5, &p, 0).unwrap();
        let cd = czcp_mate_pair(4, 5, &p, 0).unwrap();
        let row = |s: &PhaseSequence| s.to_string();
        assert_eq!(row(&ab.first), "0 0 0 0 2 0 2 0 0 2 2 0 2 2 0 0 0 2");
        assert_eq!(row(&ab.second), "0 0 0 0 2 2 0 2 2 2 2 0 2 0 2 2 2 0");
        assert_eq!(row(&cd.first), "0 2 2 2 0 2 0 2 2 2 2 0 2 2 0 0 0 0");
        assert_eq!(row(&cd.second), "0 2 2 2 0 0 2 0 0 2 2 0 2 0 2 2 2 2");
        assert_eq!((ab.claimed_n, ab.claimed_z), (18, 5));
        assert_eq!((cd.claimed_n, cd.claimed_z), (18, 5));
    }

    #[test]
    fn untruncated_projection_contains_the_pair() {
        let (g1, _) = czcp_functions(4, 5, &pi("1,0,2"), 0).unwrap();
        let full = g1.project();
        assert_eq!(full.len(), 32);
        let a = czcp_pair(4, 5, &pi("1,0,2"), 0).unwrap().first;
        assert_eq!(&full.phases()[7..25], a.phases());
    }

    #[test]
    fn claimed_parameters() {
        assert_eq!(czcp_length(5), 18);
        assert_eq!(claimed_zcz(&pi("0,1,2,3")), 9);
        assert_eq!(czcp_pair(2, 6, &pi("0,1,2,3"), 1).unwrap().claimed_z, 9);
    }

    #[test]
    fn family_shape_and_ordering() {
        let p = pi("1,0,2");
        let fam = czcss(4, 5, 2, &p, 0).unwrap();
        assert_eq!(
            fam.claimed,
            ClaimedShape {
                set_size: 8,
                flock_size: 8,
                length: 18,
                zcz: 5
            }
        );
        let ab = czcp_pair(4, 5, &p, 0).unwrap();
        let cd = czcp_mate_pair(4, 5, &p, 0).unwrap();
        assert_eq!(fam.sets[0].sequences[0], ab.first);
        assert_eq!(fam.sets[0].sequences[4], ab.second);
        assert_eq!(fam.sets[4].sequences[0], cd.first);
        assert_eq!(fam.sets[0].label, "S(0,0)");
        assert_eq!(fam.sets[5].label, "S'(1,0)");
        // t = (1,0), y = (1,0): parity 1 flips every phase by q/2
        assert_eq!(fam.sets[1].sequences[1], ab.first.offset(2));
        assert_eq!(fam.sets[1].sequences[2], ab.first);
        assert!(czcss(4, 5, 0, &p, 0).is_err());
    }

    #[test]
    fn standard_gcp_is_complementary() {
        let (pair, mate) = standard_gcp(2, 2, &Permutation::identity(2), &[0, 0], 0, 0).unwrap();
        assert_eq!(pair.len(), 4);
        for tau in 1..4 {
            let s = aacf(&pair.first, tau).add(&aacf(&pair.second, tau)).unwrap();
            assert!(s.is_zero(), "tau = {tau}");
        }
        for tau in -3..=3 {
            let s = accf(&pair.first, &mate.first, tau)
                .unwrap()
                .add(&accf(&pair.second, &mate.second, tau).unwrap())
                .unwrap();
            assert!(s.is_zero(), "tau = {tau}");
        }
        assert!(standard_gcp(2, 2, &Permutation::identity(3), &[0, 0], 0, 0).is_err());
        assert!(standard_gcp(2, 2, &Permutation::identity(2), &[0], 0, 0).is_err());
        assert!(standard_gcp(2, 1, &Permutation::identity(1), &[0], 0, 0).is_err());
    }

    #[test]
    fn quadruple_shapes() {
        let quad = quadruple(4, 5, &pi("1,0,2"), 3).unwrap();
        assert_eq!(quad.p.len(), 8);
        assert_eq!(quad.v.len(), 8);
        assert_eq!(quadruple_window(5, &pi("1,0,2")), 4..=7);
    }

    #[test]
    fn params_round_trip_through_json() {
        let mut p = ConstructionParams::new(4, 5, 2, pi("1,0,2"));
        p.c = 3;
        let text = serde_json::to_string(&p).unwrap();
        let back: ConstructionParams = serde_json::from_str(&text).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<ConstructionParams>(r#"{"q":4,"m":5,"pi":[0,0,2]}"#).is_err());
    }
}
