//! Exact checkers for the complementary-sequence definitions.
//!
//! Every checker evaluates correlation sums in `Z[w]` and decides zero-ness
//! by cyclotomic reduction. Each zero test is also compared against the
//! floating-point magnitude (`< 1e-9`) and the outcome is tallied in
//! [`OracleTally`]; a disagreement never changes a verdict but is reported.
//!
//! Windows quantified over `|tau|` are tested at both signs. Besides the
//! claimed window, each ZCZ-parameterized property is swept over every
//! shift so the report can state the largest width at which it holds.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::constructions::{quadruple, quadruple_window, CodeFamily, CodeSet, Permutation, Quadruple, SequencePair};
use crate::correlation::{
    aacf, accf, accf_float, sum_aacf, sum_accf_adjacent, sum_accf_adjacent_cross, sum_accf_pointwise,
    CyclotomicValue,
};
use crate::error::{Error, Result};
use crate::gbf::PhaseSequence;

/// Threshold below which a floating-point magnitude counts as zero.
pub const FLOAT_ZERO: f64 = 1e-9;

/// Violations kept per property; the total is always counted.
const MAX_LISTED_VIOLATIONS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SubjectKind {
    Pair,
    Set,
    Family,
    Quadruple,
    MatePairs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Property {
    /// Auto-correlation sum of a pair vanishes for `0 < tau < Z`.
    #[serde(rename = "ZCP")]
    Zcp,
    /// Pair auto-correlation sum on the front and tail windows.
    C1,
    /// Pair cross-correlation sum `C(c,d) + C(d,c)` on the tail window.
    C2,
    /// Per-set auto-correlation sum on the front and tail windows.
    P1,
    /// Per-set cyclic-adjacent cross-correlation sum on the tail window.
    P2,
    /// Pointwise cross-set sum on `{0}`, front and tail windows.
    P3,
    /// Cyclic-adjacent cross-set sum on the tail window.
    P4,
    /// `C(p,q) + C(u,v)` on `2^{m-2} - 2^{pi(m-3)} <= tau <= 2^{m-2} - 1`.
    #[serde(rename = "QUAD_WINDOW")]
    QuadrupleWindow,
    /// `C(a,c) + C(b,d)` for every shift.
    #[serde(rename = "MATE_ALL")]
    MateAll,
    /// `C(a,d) + C(b,c)` for `2^{m-1} - 2^{pi(m-3)} < tau <= 2^{m-1} + 1`.
    #[serde(rename = "MATE_TAIL")]
    MateTail,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Property::Zcp => "ZCP",
            Property::C1 => "C1",
            Property::C2 => "C2",
            Property::P1 => "P1",
            Property::P2 => "P2",
            Property::P3 => "P3",
            Property::P4 => "P4",
            Property::QuadrupleWindow => "QUAD_WINDOW",
            Property::MateAll => "MATE_ALL",
            Property::MateTail => "MATE_TAIL",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    /// Positive representative `|tau|` for windows over `|tau|`, else `tau`.
    pub shift: i64,
    /// The signed shift at which the sum was nonzero.
    pub tau: i64,
    /// `(p, p')` set indices for per-set and cross-set properties.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sets: Option<(usize, usize)>,
    pub magnitude: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PropertyResult {
    pub property: Property,
    pub window: String,
    /// Shifts (positive representatives for `|tau|` windows) in the claimed window.
    pub shifts: Vec<i64>,
    /// Number of correlation sums evaluated inside the claimed window.
    pub sums_tested: usize,
    pub violations: Vec<Violation>,
    pub violation_count: usize,
    pub vacuous: bool,
    /// Largest ZCZ width at which this property alone holds.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_z: Option<usize>,
    pub pass: bool,
}

/// Agreement between exact zero tests and `magnitude < 1e-9`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleTally {
    pub values: u64,
    pub disagreements: u64,
}

impl OracleTally {
    /// Exact zero test, with the floating-point verdict tallied alongside.
    pub fn is_zero(&mut self, v: &CyclotomicValue) -> bool {
        let exact = v.is_zero();
        self.values += 1;
        if exact != (v.magnitude() < FLOAT_ZERO) {
            self.disagreements += 1;
        }
        exact
    }

    pub fn merge(&mut self, other: OracleTally) {
        self.values += other.values;
        self.disagreements += other.disagreements;
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub subject: SubjectKind,
    pub q: u32,
    pub length: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub claimed_z: Option<usize>,
    pub properties: Vec<PropertyResult>,
    pub pass: bool,
    /// Set by [`check_zcp`]: the pair is a Golay pair (`Z = N` passed).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gcp: Option<bool>,
    /// Largest width at which all checked properties hold together.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_z: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub czcz_ratio: Option<f64>,
    pub oracle: OracleTally,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn property(&self, p: Property) -> Option<&PropertyResult> {
        self.properties.iter().find(|r| r.property == p)
    }

    pub fn passes(&self, p: Property) -> bool {
        self.property(p).is_some_and(|r| r.pass)
    }

    /// Aligned-column rendering for terminals.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let subject = serde_json::to_value(self.subject).expect("serializable");
        out.push_str(&format!(
            "subject: {}  q={}  N={}",
            subject.as_str().unwrap_or("?"),
            self.q,
            self.length
        ));
        if let Some(z) = self.claimed_z {
            out.push_str(&format!("  Z={z}"));
        }
        out.push('\n');
        let width = self.properties.iter().map(|p| p.window.len()).max().unwrap_or(6).max(6);
        out.push_str(&format!(
            "{:<12} {:<width$} {:>8} {:>10} {:>6}  {}\n",
            "property", "window", "sums", "violations", "max_z", "status"
        ));
        for p in &self.properties {
            let status = match (p.pass, p.vacuous) {
                (true, true) => "pass (vacuous)",
                (true, false) => "pass",
                (false, _) => "FAIL",
            };
            let max_z = p.max_z.map_or("-".to_string(), |z| z.to_string());
            out.push_str(&format!(
                "{:<12} {:<width$} {:>8} {:>10} {:>6}  {}\n",
                p.property.to_string(),
                p.window,
                p.sums_tested,
                p.violation_count,
                max_z,
                status
            ));
            for v in &p.violations {
                let sets = v.sets.map_or(String::new(), |(a, b)| format!(" sets ({a},{b})"));
                out.push_str(&format!(
                    "    violation at tau={}{} |sum|={:.6}\n",
                    v.tau, sets, v.magnitude
                ));
            }
            if p.violation_count > p.violations.len() {
                out.push_str(&format!(
                    "    ... {} more\n",
                    p.violation_count - p.violations.len()
                ));
            }
        }
        if let Some(z) = self.max_z {
            out.push_str(&format!("max_z: {z}\n"));
        }
        if let Some(r) = self.czcz_ratio {
            out.push_str(&format!("czcz_ratio: {r:.6}\n"));
        }
        if let Some(g) = self.gcp {
            out.push_str(&format!("gcp: {g}\n"));
        }
        for note in &self.notes {
            out.push_str(&format!("note: {note}\n"));
        }
        out.push_str(&format!(
            "oracle: {} values, {} exact/float disagreements\n",
            self.oracle.values, self.oracle.disagreements
        ));
        out.push_str(if self.pass { "overall: PASS\n" } else { "overall: FAIL\n" });
        out
    }
}

/// A property evaluated over a sweep of signed shifts.
struct Run {
    property: Property,
    window: BTreeSet<i64>,
    abs_window: bool,
    failing: BTreeSet<i64>,
    sums_tested: usize,
    violations: Vec<Violation>,
    violation_count: usize,
}

impl Run {
    fn new(property: Property, window: BTreeSet<i64>, abs_window: bool) -> Self {
        Self {
            property,
            window,
            abs_window,
            failing: BTreeSet::new(),
            sums_tested: 0,
            violations: Vec::new(),
            violation_count: 0,
        }
    }

    fn observe(&mut self, tally: &mut OracleTally, tau: i64, sets: Option<(usize, usize)>, v: &CyclotomicValue) {
        let in_window = self.window.contains(&tau);
        if in_window {
            self.sums_tested += 1;
        }
        if tally.is_zero(v) {
            return;
        }
        self.failing.insert(tau);
        if in_window {
            self.violation_count += 1;
            if self.violations.len() < MAX_LISTED_VIOLATIONS {
                self.violations.push(Violation {
                    shift: if self.abs_window { tau.abs() } else { tau },
                    tau,
                    sets,
                    magnitude: v.magnitude(),
                });
            }
        }
    }

    fn finish(self, description: String, vacuous: bool, max_z: Option<usize>) -> PropertyResult {
        let mut shifts: Vec<i64> = if self.abs_window {
            self.window.iter().map(|t| t.abs()).collect()
        } else {
            self.window.iter().copied().collect()
        };
        shifts.sort_unstable();
        shifts.dedup();
        PropertyResult {
            property: self.property,
            window: description,
            shifts,
            sums_tested: self.sums_tested,
            pass: self.violation_count == 0,
            violations: self.violations,
            violation_count: self.violation_count,
            vacuous: vacuous || self.window.is_empty(),
            max_z,
        }
    }
}

fn signed(abs: impl IntoIterator<Item = usize>) -> BTreeSet<i64> {
    abs.into_iter()
        .flat_map(|t| [t as i64, -(t as i64)])
        .collect()
}

/// Shift set claimed by `property` at width `z` on length `n`, both signs.
/// Each arm spells out its own window.
fn window_for(property: Property, z: usize, n: usize) -> BTreeSet<i64> {
    match property {
        // 0 < tau < Z
        Property::Zcp => signed(1..z),
        // |tau| in {1..Z} u {N-Z..N-1}
        Property::C1 => signed((1..=z).chain(n - z..n)),
        // |tau| in {N-Z..N-1}
        Property::C2 => signed(n - z..n),
        Property::P1 => signed((1..=z).chain(n - z..n)),
        Property::P2 => signed(n - z..n),
        // |tau| in {0} u {1..Z} u {N-Z..N-1}
        Property::P3 => signed(std::iter::once(0).chain(1..=z).chain(n - z..n)),
        Property::P4 => signed(n - z..n),
        Property::QuadrupleWindow | Property::MateAll | Property::MateTail => {
            unreachable!("fixed-window property")
        }
    }
}

fn describe(property: Property, z: usize, n: usize) -> String {
    let front = format!("{{1..{z}}}");
    let tail = format!("{{{}..{}}}", n - z, n - 1);
    match property {
        Property::Zcp if z <= 1 => "0<tau<1 (empty)".to_string(),
        Property::Zcp => format!("0<tau<{z}"),
        Property::C1 | Property::P1 => format!("|tau| in {front} u {tail}"),
        Property::C2 | Property::P2 | Property::P4 => format!("|tau| in {tail}"),
        Property::P3 => format!("|tau| in {{0}} u {front} u {tail}"),
        _ => String::new(),
    }
}

/// Largest `z` in `1..=z_max` whose window avoids every failing shift; 0 if none.
fn max_passing(property: Property, failing: &BTreeSet<i64>, n: usize, z_max: usize) -> usize {
    (1..=z_max)
        .rev()
        .find(|&z| window_for(property, z, n).is_disjoint(failing))
        .unwrap_or(0)
}

fn all_shifts(n: usize) -> impl Iterator<Item = i64> {
    let n = n as i64;
    -(n - 1)..n
}

fn pair_sum(a: CyclotomicValue, b: CyclotomicValue) -> CyclotomicValue {
    a.add(&b).expect("same modulus")
}

/// Joint max width: largest `z` at which every listed property passes.
fn joint_max(results: &[(Property, BTreeSet<i64>)], n: usize, z_max: usize) -> usize {
    (1..=z_max)
        .rev()
        .find(|&z| {
            results
                .iter()
                .all(|(p, failing)| window_for(*p, z, n).is_disjoint(failing))
        })
        .unwrap_or(0)
}

fn check_z(z: usize, max: usize) -> Result<()> {
    if z == 0 || z > max {
        return Err(Error::ZoneOutOfRange { z, max });
    }
    Ok(())
}

/// Z-complementary pair test: `A(c)(tau) + A(d)(tau) = 0` for `0 < tau < Z`.
/// Passing at `Z = N` marks the pair as a Golay pair.
pub fn check_zcp(pair: &SequencePair, z: usize) -> Result<VerificationReport> {
    let n = pair.len();
    check_z(z, n)?;
    let mut tally = OracleTally::default();
    let mut run = Run::new(Property::Zcp, window_for(Property::Zcp, z, n), true);
    for tau in all_shifts(n).filter(|&t| t != 0) {
        let v = pair_sum(aacf(&pair.first, tau), aacf(&pair.second, tau));
        run.observe(&mut tally, tau, None, &v);
    }
    let max_z = max_passing(Property::Zcp, &run.failing, n, n);
    let vacuous = z == 1;
    let result = run.finish(describe(Property::Zcp, z, n), vacuous, Some(max_z));
    let pass = result.pass;
    let mut notes = Vec::new();
    if vacuous {
        notes.push("empty window 0<tau<1; passes vacuously".into());
    }
    Ok(VerificationReport {
        subject: SubjectKind::Pair,
        q: pair.q(),
        length: n,
        claimed_z: Some(z),
        properties: vec![result],
        pass,
        gcp: Some(pass && z == n),
        max_z: Some(max_z),
        czcz_ratio: None,
        oracle: tally,
        notes,
    })
}

/// Cross Z-complementary pair test (C1 and C2) at width `1 <= Z <= N/2`.
pub fn check_czcp(pair: &SequencePair, z: usize) -> Result<VerificationReport> {
    let n = pair.len();
    check_z(z, n / 2)?;
    let mut tally = OracleTally::default();
    let mut c1 = Run::new(Property::C1, window_for(Property::C1, z, n), true);
    let mut c2 = Run::new(Property::C2, window_for(Property::C2, z, n), true);
    for tau in all_shifts(n) {
        let auto = pair_sum(aacf(&pair.first, tau), aacf(&pair.second, tau));
        c1.observe(&mut tally, tau, None, &auto);
        let cross = pair_sum(
            accf(&pair.first, &pair.second, tau)?,
            accf(&pair.second, &pair.first, tau)?,
        );
        c2.observe(&mut tally, tau, None, &cross);
    }
    let failing = vec![(Property::C1, c1.failing.clone()), (Property::C2, c2.failing.clone())];
    let max_z = joint_max(&failing, n, n / 2);
    let props = vec![
        {
            let m = max_passing(Property::C1, &c1.failing, n, n / 2);
            c1.finish(describe(Property::C1, z, n), false, Some(m))
        },
        {
            let m = max_passing(Property::C2, &c2.failing, n, n / 2);
            c2.finish(describe(Property::C2, z, n), false, Some(m))
        },
    ];
    let pass = props.iter().all(|p| p.pass);
    Ok(VerificationReport {
        subject: SubjectKind::Pair,
        q: pair.q(),
        length: n,
        claimed_z: Some(z),
        properties: props,
        pass,
        gcp: None,
        max_z: Some(max_z),
        czcz_ratio: Some(max_z as f64 / (n as f64 / 2.0)),
        oracle: tally,
        notes: Vec::new(),
    })
}

/// Runs the requested subset of P1..P4 over `sets`.
fn check_sets(sets: &[&[PhaseSequence]], z: usize, props: &[Property], subject: SubjectKind) -> Result<VerificationReport> {
    let first = sets
        .first()
        .and_then(|s| s.first())
        .ok_or_else(|| Error::ShapeMismatch("nothing to verify".into()))?;
    let (q, n, m) = (first.q(), first.len(), sets[0].len());
    if sets
        .iter()
        .any(|s| s.len() != m || s.iter().any(|c| c.q() != q || c.len() != n))
    {
        return Err(Error::ShapeMismatch("ragged family".into()));
    }
    check_z(z, n)?;
    let mut tally = OracleTally::default();
    let mut results = Vec::new();
    let mut failing = Vec::new();
    let mut notes = Vec::new();
    for &property in props {
        let mut run = Run::new(property, window_for(property, z, n), true);
        let cross_set = matches!(property, Property::P3 | Property::P4);
        for tau in all_shifts(n) {
            if cross_set {
                for (p, a) in sets.iter().enumerate() {
                    for (pp, b) in sets.iter().enumerate().filter(|&(pp, _)| pp != p) {
                        let v = match property {
                            Property::P3 => sum_accf_pointwise(a, b, tau)?,
                            _ => sum_accf_adjacent_cross(a, b, tau)?,
                        };
                        run.observe(&mut tally, tau, Some((p, pp)), &v);
                    }
                }
            } else {
                for (p, s) in sets.iter().enumerate() {
                    let v = match property {
                        Property::P1 => sum_aacf(s, tau)?,
                        _ => sum_accf_adjacent(s, tau)?,
                    };
                    run.observe(&mut tally, tau, Some((p, p)), &v);
                }
            }
        }
        let vacuous = cross_set && sets.len() < 2;
        if vacuous {
            notes.push(format!("{property}: fewer than two sets, no pair p != p' to test"));
        }
        let max_z = max_passing(property, &run.failing, n, n);
        failing.push((property, run.failing.clone()));
        results.push(run.finish(describe(property, z, n), vacuous, Some(max_z)));
    }
    let pass = results.iter().all(|r| r.pass);
    Ok(VerificationReport {
        subject,
        q,
        length: n,
        claimed_z: Some(z),
        properties: results,
        pass,
        gcp: None,
        max_z: Some(joint_max(&failing, n, n)),
        czcz_ratio: None,
        oracle: tally,
        notes,
    })
}

fn family_slices(family: &CodeFamily) -> Vec<&[PhaseSequence]> {
    family.sets.iter().map(|s| s.sequences.as_slice()).collect()
}

/// All four CZCSS properties.
pub fn check_czcss(family: &CodeFamily, z: usize) -> Result<VerificationReport> {
    check_sets(
        &family_slices(family),
        z,
        &[Property::P1, Property::P2, Property::P3, Property::P4],
        SubjectKind::Family,
    )
}

/// Cross Z-complementary set: P1 and P2 on one set.
pub fn check_czcs(set: &CodeSet, z: usize) -> Result<VerificationReport> {
    check_sets(&[set.sequences.as_slice()], z, &[Property::P1, Property::P2], SubjectKind::Set)
}

/// Symmetrical Z-complementary code set: P1 and P3.
pub fn check_szccs(family: &CodeFamily, z: usize) -> Result<VerificationReport> {
    check_sets(&family_slices(family), z, &[Property::P1, Property::P3], SubjectKind::Family)
}

/// Largest `Z` in `1..=N/2` at which `check_czcp` passes, 0 if none.
pub fn max_czcz(pair: &SequencePair) -> usize {
    (1..=pair.len() / 2)
        .rev()
        .find(|&z| check_czcp(pair, z).map(|r| r.pass).unwrap_or(false))
        .unwrap_or(0)
}

/// [`max_czcz`] recomputed from floating-point correlations with the
/// `1e-9` threshold. Shares no code with the exact path beyond the inputs.
pub fn max_czcz_float(pair: &SequencePair) -> usize {
    let n = pair.len();
    let (a, b) = (&pair.first, &pair.second);
    let mag = |x: (f64, f64), y: (f64, f64)| (x.0 + y.0).hypot(x.1 + y.1);
    let zero_at = |t: i64| -> (bool, bool) {
        let auto = mag(accf_float(a, a, t).unwrap(), accf_float(b, b, t).unwrap());
        let cross = mag(accf_float(a, b, t).unwrap(), accf_float(b, a, t).unwrap());
        (auto < FLOAT_ZERO, cross < FLOAT_ZERO)
    };
    let flags: Vec<(bool, bool)> = (0..n as i64)
        .map(|t| {
            let (p, m) = (zero_at(t), zero_at(-t));
            (p.0 && m.0, p.1 && m.1)
        })
        .collect();
    for z in (1..=n / 2).rev() {
        let front_ok = (1..=z).all(|t| flags[t].0);
        let tail_ok = (n - z..n).all(|t| flags[t].0 && flags[t].1);
        if front_ok && tail_ok {
            return z;
        }
    }
    0
}

fn fixed_window_report(
    subject: SubjectKind,
    q: u32,
    length: usize,
    runs: Vec<(Run, String)>,
    tally: OracleTally,
) -> VerificationReport {
    let properties: Vec<PropertyResult> = runs
        .into_iter()
        .map(|(run, desc)| run.finish(desc, false, None))
        .collect();
    let pass = properties.iter().all(|p| p.pass);
    VerificationReport {
        subject,
        q,
        length,
        claimed_z: None,
        properties,
        pass,
        gcp: None,
        max_z: None,
        czcz_ratio: None,
        oracle: tally,
        notes: Vec::new(),
    }
}

/// `C(p,q)(tau) + C(u,v)(tau) = 0` over the quadruple window.
pub fn check_quadruple(quad: &Quadruple, m: usize, pi: &Permutation) -> Result<VerificationReport> {
    let window: BTreeSet<i64> = quadruple_window(m, pi).collect();
    let desc = format!("{}<=tau<={}", window.first().unwrap(), window.last().unwrap());
    let mut tally = OracleTally::default();
    let mut run = Run::new(Property::QuadrupleWindow, window.clone(), false);
    for &tau in &window {
        let v = pair_sum(accf(&quad.p, &quad.q_seq, tau)?, accf(&quad.u, &quad.v, tau)?);
        run.observe(&mut tally, tau, None, &v);
    }
    Ok(fixed_window_report(
        SubjectKind::Quadruple,
        quad.p.q(),
        quad.p.len(),
        vec![(run, desc)],
        tally,
    ))
}

/// Builds the quadruple for `(q, m, pi, c_1)` and checks its window.
pub fn check_quadruple_construction(q: u32, m: usize, pi: &Permutation, c_1: u32) -> Result<VerificationReport> {
    check_quadruple(&quadruple(q, m, pi, c_1)?, m, pi)
}

/// Mate cross-correlations between `(a, b)` and `(c, d)`:
/// `C(a,c) + C(b,d) = 0` for every `tau`, and `C(a,d) + C(b,c) = 0` for
/// `2^{m-1} - 2^{pi(m-3)} < tau <= 2^{m-1} + 1`.
pub fn check_mate_cross(ab: &SequencePair, cd: &SequencePair, m: usize, pi: &Permutation) -> Result<VerificationReport> {
    let n = ab.len();
    if cd.len() != n || cd.q() != ab.q() {
        return Err(Error::ShapeMismatch("mate pairs differ in shape".into()));
    }
    if pi.len() + 2 != m {
        return Err(Error::InvalidPermutation(format!("permutation of length {} for m = {m}", pi.len())));
    }
    let mut tally = OracleTally::default();
    let all: BTreeSet<i64> = (-(n as i64)..=n as i64).collect();
    let mut mate_all = Run::new(Property::MateAll, all.clone(), false);
    for &tau in &all {
        let v = pair_sum(accf(&ab.first, &cd.first, tau)?, accf(&ab.second, &cd.second, tau)?);
        mate_all.observe(&mut tally, tau, None, &v);
    }
    let hi = (1i64 << (m - 1)) + 1;
    let lo = (1i64 << (m - 1)) - (1i64 << pi.last()) + 1;
    let tail: BTreeSet<i64> = (lo..=hi).collect();
    let mut mate_tail = Run::new(Property::MateTail, tail.clone(), false);
    for &tau in &tail {
        let v = pair_sum(accf(&ab.first, &cd.second, tau)?, accf(&ab.second, &cd.first, tau)?);
        mate_tail.observe(&mut tally, tau, None, &v);
    }
    let n_i = n as i64;
    Ok(fixed_window_report(
        SubjectKind::MatePairs,
        ab.q(),
        n,
        vec![
            (mate_all, format!("{}<=tau<={}", -n_i, n_i)),
            (mate_tail, format!("{lo}<=tau<={hi}")),
        ],
        tally,
    ))
}

/// Complementary-mate test for Golay pairs: `C(a,c) + C(b,d) = 0` for
/// every shift.
pub fn check_complementary_mate(ab: &SequencePair, cd: &SequencePair) -> Result<VerificationReport> {
    let n = ab.len();
    if cd.len() != n || cd.q() != ab.q() {
        return Err(Error::ShapeMismatch("mate pairs differ in shape".into()));
    }
    let mut tally = OracleTally::default();
    let all: BTreeSet<i64> = (-(n as i64)..=n as i64).collect();
    let mut run = Run::new(Property::MateAll, all.clone(), false);
    for &tau in &all {
        run.observe(&mut tally, tau, None, &mate_sum(ab, cd, tau)?);
    }
    let n_i = n as i64;
    Ok(fixed_window_report(
        SubjectKind::MatePairs,
        ab.q(),
        n,
        vec![(run, format!("{}<=tau<={}", -n_i, n_i))],
        tally,
    ))
}

/// Cross-correlation sum `C(a,c) + C(b,d)` at one shift, for tables.
pub fn mate_sum(ab: &SequencePair, cd: &SequencePair, tau: i64) -> Result<CyclotomicValue> {
    Ok(pair_sum(accf(&ab.first, &cd.first, tau)?, accf(&ab.second, &cd.second, tau)?))
}

/// Cross-correlation sum `C(a,d) + C(b,c)` at one shift, for tables.
pub fn mate_swap_sum(ab: &SequencePair, cd: &SequencePair, tau: i64) -> Result<CyclotomicValue> {
    Ok(pair_sum(accf(&ab.first, &cd.second, tau)?, accf(&ab.second, &cd.first, tau)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{czcp_mate_pair, czcp_pair, czcss};

    fn seq(q: u32, p: &[u32]) -> PhaseSequence {
        PhaseSequence::new(q, p.to_vec()).unwrap()
    }

    fn pi(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn tiny_pair() -> SequencePair {
        SequencePair::new(seq(2, &[0, 0]), seq(2, &[0, 1]), 2).unwrap()
    }

    fn example1() -> (SequencePair, SequencePair) {
        let p = pi("1,0,2");
        (czcp_pair(4, 5, &p, 0).unwrap(), czcp_mate_pair(4, 5, &p, 0).unwrap())
    }

    #[test]
    fn tiny_golay_pair() {
        let r = check_zcp(&tiny_pair(), 2).unwrap();
        assert!(r.pass);
        assert_eq!(r.gcp, Some(true));
        let r = check_zcp(&tiny_pair(), 1).unwrap();
        assert!(r.pass);
        assert!(r.properties[0].vacuous);
        assert_eq!(r.gcp, Some(false));
        assert!(check_zcp(&tiny_pair(), 0).is_err());
        assert!(check_zcp(&tiny_pair(), 3).is_err());
    }

    #[test]
    fn golay_pairs_and_mates() {
        use crate::constructions::standard_gcp;
        for q in [2u32, 4] {
            for m in 2..=4usize {
                for p in Permutation::all(m) {
                    let coeffs: Vec<u32> = (0..m as u32).map(|i| (i * 3 + 1) % q).collect();
                    let (ab, cd) = standard_gcp(q, m, &p, &coeffs, 1, q / 2).unwrap();
                    let n = 1 << m;
                    assert_eq!(check_zcp(&ab, n).unwrap().gcp, Some(true));
                    assert_eq!(check_zcp(&cd, n).unwrap().gcp, Some(true));
                    assert!(check_complementary_mate(&ab, &cd).unwrap().pass);
                }
            }
        }
        let (ab, _) = standard_gcp(2, 3, &Permutation::identity(3), &[0, 0, 0], 0, 0).unwrap();
        assert!(!check_complementary_mate(&ab, &ab).unwrap().pass);
    }

    #[test]
    fn tiny_pair_is_a_perfect_czcp() {
        // C(a,b)(1) + C(b,a)(1) = w^{0-1} + w^{0-0} = 0, and A(a)(1) + A(b)(1) = 1 + w^{-1} = 0
        let r = check_czcp(&tiny_pair(), 1).unwrap();
        assert!(r.pass, "{}", r.to_text());
        assert_eq!(r.czcz_ratio, Some(1.0));
        assert_eq!(max_czcz(&tiny_pair()), 1);
    }

    #[test]
    fn constant_pair_fails_everywhere() {
        let pair = SequencePair::new(seq(2, &[0, 0]), seq(2, &[0, 0]), 1).unwrap();
        let r = check_czcp(&pair, 1).unwrap();
        assert!(!r.pass);
        let c1 = r.property(Property::C1).unwrap();
        assert_eq!(c1.violation_count, 2);
        assert!(c1.violations.iter().all(|v| v.shift == 1 && (v.magnitude - 2.0).abs() < 1e-12));
        assert_eq!(max_czcz(&pair), 0);
        assert_eq!(max_czcz_float(&pair), 0);
    }

    #[test]
    fn example_pairs() {
        let (ab, cd) = example1();
        let r = check_czcp(&ab, 5).unwrap();
        assert!(r.pass, "{}", r.to_text());
        assert_eq!(r.max_z, Some(5));
        assert!(check_czcp(&cd, 5).unwrap().pass);
        assert_eq!(max_czcz(&ab), 5);
        assert_eq!(max_czcz_float(&ab), 5);
        assert!(!check_czcp(&ab, 6).unwrap().pass);
        assert!(check_czcp(&ab, 10).is_err());
        // the front-end AACS zone alone is wider than the CZCP zone
        let r = check_zcp(&ab, 9).unwrap();
        assert!(r.pass);
        assert_eq!(r.max_z, Some(9));
    }

    #[test]
    fn monotone_windows() {
        let (ab, _) = example1();
        let mut passed = true;
        for z in (1..=9).rev() {
            let now = check_czcp(&ab, z).unwrap().pass;
            assert!(!passed || now || z > 5);
            passed = now;
        }
        assert!((1..=5).all(|z| check_czcp(&ab, z).unwrap().pass));
    }

    #[test]
    fn mate_cross() {
        let (ab, cd) = example1();
        let r = check_mate_cross(&ab, &cd, 5, &pi("1,0,2")).unwrap();
        assert!(r.pass, "{}", r.to_text());
        assert_eq!(r.property(Property::MateTail).unwrap().shifts, vec![13, 14, 15, 16, 17]);
        assert_eq!(r.oracle.disagreements, 0);
    }

    #[test]
    fn quadruple_window() {
        let r = check_quadruple_construction(4, 5, &pi("1,0,2"), 0).unwrap();
        assert!(r.pass);
        assert_eq!(r.property(Property::QuadrupleWindow).unwrap().shifts, vec![4, 5, 6, 7]);
    }

    #[test]
    fn example_family() {
        let fam = czcss(4, 5, 2, &pi("1,0,2"), 0).unwrap();
        let r = check_czcss(&fam, 5).unwrap();
        assert!(r.pass, "{}", r.to_text());
        assert_eq!(r.oracle.disagreements, 0);
        assert!(r.max_z.unwrap() >= 5);
        assert!(check_szccs(&fam, 5).unwrap().pass);
        for set in &fam.sets {
            assert!(check_czcs(set, 5).unwrap().pass);
        }
    }

    #[test]
    fn single_set_family_is_vacuous_across_sets() {
        let fam = czcss(4, 5, 1, &pi("1,0,2"), 0).unwrap();
        let single = CodeFamily::new(vec![fam.sets[0].clone()], 5).unwrap();
        let r = check_czcss(&single, 5).unwrap();
        assert!(r.pass);
        assert!(r.property(Property::P3).unwrap().vacuous);
        assert!(r.property(Property::P4).unwrap().vacuous);
        assert_eq!(r.notes.len(), 2);
    }

    #[test]
    fn corrupted_family_fails() {
        let fam = czcss(4, 5, 2, &pi("1,0,2"), 0).unwrap();
        let mut bad = fam.clone();
        let s = &bad.sets[3].sequences[2];
        let flipped = (s.phases()[6] + 2) % 4;
        bad.sets[3].sequences[2] = s.with_phase(6, flipped).unwrap();
        let r = check_czcss(&bad, 5).unwrap();
        assert!(!r.pass);
        let p1 = r.property(Property::P1).unwrap();
        assert!(!p1.pass);
        assert!(p1.violations.iter().all(|v| v.sets == Some((3, 3))));
        assert!(r.to_text().contains("FAIL"));
    }

    #[test]
    fn ragged_family_rejected() {
        let a = CodeSet::new("a", vec![seq(4, &[0, 1, 2])]).unwrap();
        let b = CodeSet::new("b", vec![seq(4, &[0, 1])]).unwrap();
        assert!(CodeFamily::new(vec![a.clone(), b.clone()], 1).is_err());
        let fam = CodeFamily {
            sets: vec![a, b],
            claimed: CodeFamily::new(vec![CodeSet::new("c", vec![seq(4, &[0])]).unwrap()], 1)
                .unwrap()
                .claimed,
        };
        assert!(check_czcss(&fam, 1).is_err());
    }

    #[test]
    fn report_serializes() {
        let (ab, _) = example1();
        let r = check_czcp(&ab, 5).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"property\":\"C1\""));
        let back: VerificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        let text = r.to_text();
        assert!(text.contains("overall: PASS"));
        assert!(text.contains("|tau| in {1..5} u {13..17}"));
    }
}
