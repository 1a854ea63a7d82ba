//! Generalized Boolean functions over `Z_q` and their phase sequences.
//!
//! A [`Gbf`] in `v` variables maps `{0,1}^v -> Z_q`. It is stored as a
//! sparse map from monomials to coefficients; a monomial is a set of
//! variable indices encoded as a bit mask (bit `j` set means `x_j` occurs),
//! so the empty mask is the constant term.
//!
//! The index `i` of a sequence position is read least-significant bit
//! first: `x_j` takes the value of bit `j` of `i`. With that convention a
//! monomial is active at `i` exactly when `mask & i == mask`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Largest variable count accepted; a projection has `2^v` entries.
pub const MAX_VARS: usize = 30;

fn check_modulus(q: u32) -> Result<()> {
    if q < 2 || !q.is_multiple_of(2) {
        return Err(Error::InvalidModulus(q));
    }
    Ok(())
}

fn check_vars(num_vars: usize) -> Result<()> {
    if num_vars == 0 || num_vars > MAX_VARS {
        return Err(Error::InvalidVarCount(num_vars));
    }
    Ok(())
}

fn reduce(k: i64, q: u32) -> u32 {
    k.rem_euclid(q as i64) as u32
}

/// Binary expansion of an index, least-significant bit first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    bits: Vec<u8>,
}

impl BitVector {
    pub fn from_index(index: u64, width: usize) -> Result<Self> {
        if width > 63 || index >> width != 0 {
            return Err(Error::IndexOutOfRange { index, width });
        }
        let bits = (0..width).map(|j| ((index >> j) & 1) as u8).collect();
        Ok(Self { bits })
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn get(&self, j: usize) -> u8 {
        self.bits[j]
    }

    /// Inverse of [`BitVector::from_index`].
    pub fn to_index(&self) -> u64 {
        self.bits
            .iter()
            .enumerate()
            .map(|(j, &b)| u64::from(b) << j)
            .sum()
    }

    /// Number of ones, used for inner products over `Z_2`.
    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 1).count()
    }
}

/// `bits[j]` is the `j`-th binary digit of `i`.
pub fn bit_vector(i: u64, width: usize) -> Result<BitVector> {
    BitVector::from_index(i, width)
}

/// A sequence of residues in `Z_q`, standing for `(w^p_0, w^p_1, ...)` with
/// `w = exp(2 pi i / q)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PhaseSequence {
    q: u32,
    phases: Vec<u32>,
}

impl PhaseSequence {
    pub fn new(q: u32, phases: Vec<u32>) -> Result<Self> {
        check_modulus(q)?;
        if phases.is_empty() {
            return Err(Error::EmptySequence);
        }
        if let Some(&phase) = phases.iter().find(|&&p| p >= q) {
            return Err(Error::PhaseOutOfRange { phase, q });
        }
        Ok(Self { q, phases })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn len(&self) -> usize {
        self.phases.len()
    }

    /// Always false; a sequence holds at least one phase.
    pub fn is_empty(&self) -> bool {
        self.phases.is_empty()
    }

    pub fn phases(&self) -> &[u32] {
        &self.phases
    }

    /// Drops the first and last `trim` entries.
    pub fn truncate(&self, trim: usize) -> Result<Self> {
        let len = self.phases.len();
        if 2 * trim >= len {
            return Err(Error::TruncationTooLarge { trim, len });
        }
        Ok(Self {
            q: self.q,
            phases: self.phases[trim..len - trim].to_vec(),
        })
    }

    /// Adds `k` to every phase, i.e. multiplies the sequence by `w^k`.
    pub fn offset(&self, k: i64) -> Self {
        let k = reduce(k, self.q);
        Self {
            q: self.q,
            phases: self.phases.iter().map(|&p| (p + k) % self.q).collect(),
        }
    }

    /// Returns a copy with the phase at `position` replaced.
    pub fn with_phase(&self, position: usize, phase: u32) -> Result<Self> {
        if phase >= self.q {
            return Err(Error::PhaseOutOfRange { phase, q: self.q });
        }
        if position >= self.phases.len() {
            return Err(Error::ShapeMismatch(format!(
                "position {position} beyond sequence length {}",
                self.phases.len()
            )));
        }
        let mut phases = self.phases.clone();
        phases[position] = phase;
        Ok(Self { q: self.q, phases })
    }
}

impl fmt::Display for PhaseSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.phases.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Generalized Boolean function `{0,1}^v -> Z_q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Gbf {
    q: u32,
    num_vars: usize,
    // monomial mask -> nonzero coefficient in 1..q
    terms: BTreeMap<u64, u32>,
}

impl Gbf {
    pub fn zero(q: u32, num_vars: usize) -> Result<Self> {
        check_modulus(q)?;
        check_vars(num_vars)?;
        Ok(Self {
            q,
            num_vars,
            terms: BTreeMap::new(),
        })
    }

    pub fn constant(q: u32, num_vars: usize, k: i64) -> Result<Self> {
        Self::monomial(q, num_vars, &[], k)
    }

    /// `coeff * x_{vars[0]} * x_{vars[1]} * ...`; repeated indices collapse
    /// since `x^2 = x` on binary inputs.
    pub fn monomial(q: u32, num_vars: usize, vars: &[usize], coeff: i64) -> Result<Self> {
        let mut f = Self::zero(q, num_vars)?;
        let mut mask = 0u64;
        for &index in vars {
            if index >= num_vars {
                return Err(Error::VariableOutOfRange { index, num_vars });
            }
            mask |= 1 << index;
        }
        f.add_term(mask, reduce(coeff, q));
        Ok(f)
    }

    pub fn variable(q: u32, num_vars: usize, index: usize) -> Result<Self> {
        Self::monomial(q, num_vars, &[index], 1)
    }

    /// `1 - x_index`.
    pub fn complement(q: u32, num_vars: usize, index: usize) -> Result<Self> {
        Self::constant(q, num_vars, 1)?.add(&Self::monomial(q, num_vars, &[index], -1)?)
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Monomials as sorted variable lists with their coefficients.
    pub fn terms(&self) -> impl Iterator<Item = (Vec<usize>, u32)> + '_ {
        self.terms
            .iter()
            .map(|(&mask, &c)| (mask_to_vars(mask), c))
    }

    pub fn coefficient(&self, vars: &[usize]) -> u32 {
        let mask = vars.iter().fold(0u64, |m, &v| m | (1 << v));
        self.terms.get(&mask).copied().unwrap_or(0)
    }

    /// Highest monomial degree, 0 for constants and the zero function.
    pub fn degree(&self) -> usize {
        self.terms
            .keys()
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    fn add_term(&mut self, mask: u64, coeff: u32) {
        let q = self.q;
        let entry = self.terms.entry(mask).or_insert(0);
        *entry = (*entry + coeff) % q;
        if *entry == 0 {
            self.terms.remove(&mask);
        }
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.q != other.q || self.num_vars != other.num_vars {
            return Err(Error::ShapeMismatch(format!(
                "functions over (q={}, v={}) and (q={}, v={})",
                self.q, self.num_vars, other.q, other.num_vars
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (&mask, &c) in &other.terms {
            out.add_term(mask, c);
        }
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> Self {
        let k = reduce(k, self.q) as u64;
        let mut out = Self {
            q: self.q,
            num_vars: self.num_vars,
            terms: BTreeMap::new(),
        };
        for (&mask, &c) in &self.terms {
            out.add_term(mask, ((c as u64 * k) % self.q as u64) as u32);
        }
        out
    }

    /// Product of two functions, with monomials multiplied as sets
    /// (`x_j^2 = x_j`).
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let mut out = Self {
            q: self.q,
            num_vars: self.num_vars,
            terms: BTreeMap::new(),
        };
        let q = self.q as u64;
        for (&ma, &ca) in &self.terms {
            for (&mb, &cb) in &other.terms {
                out.add_term(ma | mb, ((ca as u64 * cb as u64) % q) as u32);
            }
        }
        Ok(out)
    }

    /// Reinterprets the function in `num_vars` variables. Shrinking is
    /// allowed only when no dropped variable occurs.
    pub fn with_num_vars(&self, num_vars: usize) -> Result<Self> {
        check_vars(num_vars)?;
        if let Some(&mask) = self.terms.keys().find(|&&m| m >> num_vars != 0) {
            let index = 63 - mask.leading_zeros() as usize;
            return Err(Error::VariableOutOfRange { index, num_vars });
        }
        Ok(Self {
            q: self.q,
            num_vars,
            terms: self.terms.clone(),
        })
    }

    pub fn evaluate(&self, i: u64) -> Result<u32> {
        if i >> self.num_vars != 0 {
            return Err(Error::IndexOutOfRange {
                index: i,
                width: self.num_vars,
            });
        }
        Ok(self.eval_unchecked(i))
    }

    pub fn evaluate_bits(&self, bits: &BitVector) -> Result<u32> {
        if bits.len() != self.num_vars {
            return Err(Error::ShapeMismatch(format!(
                "{}-bit input for a function in {} variables",
                bits.len(),
                self.num_vars
            )));
        }
        Ok(self.eval_unchecked(bits.to_index()))
    }

    fn eval_unchecked(&self, i: u64) -> u32 {
        let q = self.q as u64;
        let sum: u64 = self
            .terms
            .iter()
            .filter(|(&mask, _)| mask & i == mask)
            .map(|(_, &c)| c as u64)
            .sum();
        (sum % q) as u32
    }

    /// The length-`2^v` phase sequence `(f_0, f_1, ...)`.
    pub fn project(&self) -> PhaseSequence {
        let len = 1u64 << self.num_vars;
        PhaseSequence {
            q: self.q,
            phases: (0..len).map(|i| self.eval_unchecked(i)).collect(),
        }
    }

    /// [`Gbf::project`] with the first and last `trim` entries removed.
    pub fn project_truncated(&self, trim: usize) -> Result<PhaseSequence> {
        let len = 1usize << self.num_vars;
        if 2 * trim >= len {
            return Err(Error::TruncationTooLarge { trim, len });
        }
        let phases = (trim..len - trim)
            .map(|i| self.eval_unchecked(i as u64))
            .collect();
        Ok(PhaseSequence { q: self.q, phases })
    }

    /// Parses the textual form used on the command line.
    ///
    /// ```text
    /// expr   := ['-'] term (('+' | '-') term)*
    /// term   := factor ('*' factor)*
    /// factor := integer | 'x' ['_'] integer
    /// ```
    ///
    /// Whitespace is ignored. Integer factors multiply into the coefficient,
    /// so `2*x1*x0 + 2*x0*x2 + 1` and `x0*2*x1 + 1 + 2*x2*x0` denote the same
    /// function.
    pub fn parse(text: &str, q: u32, num_vars: usize) -> Result<Self> {
        Parser::new(text, q, num_vars)?.parse()
    }
}

fn mask_to_vars(mask: u64) -> Vec<usize> {
    (0..64).filter(|j| mask >> j & 1 == 1).collect()
}

impl fmt::Display for Gbf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // higher degree first, constant last
        let mut terms: Vec<(u64, u32)> = self.terms.iter().map(|(&m, &c)| (m, c)).collect();
        terms.sort_by_key(|&(m, _)| (std::cmp::Reverse(m.count_ones()), m));
        for (k, (mask, coeff)) in terms.into_iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let vars = mask_to_vars(mask);
            if vars.is_empty() {
                write!(f, "{coeff}")?;
                continue;
            }
            if coeff != 1 {
                write!(f, "{coeff}*")?;
            }
            let names: Vec<String> = vars.iter().map(|v| format!("x{v}")).collect();
            f.write_str(&names.join("*"))?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    q: u32,
    num_vars: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, q: u32, num_vars: usize) -> Result<Self> {
        check_modulus(q)?;
        check_vars(num_vars)?;
        Ok(Self {
            bytes: text.as_bytes(),
            pos: 0,
            q,
            num_vars,
        })
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn integer(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected an integer");
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        match digits.parse() {
            Ok(v) => Ok(v),
            Err(_) => {
                self.pos = start;
                self.error("integer too large")
            }
        }
    }

    fn parse(mut self) -> Result<Gbf> {
        let mut f = Gbf::zero(self.q, self.num_vars)?;
        if self.peek().is_none() {
            return self.error("empty expression");
        }
        let mut sign = 1i64;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            sign = -1;
        }
        loop {
            let (mask, coeff) = self.term()?;
            f.add_term(mask, reduce(sign * coeff as i64, self.q));
            match self.peek() {
                None => break,
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                Some(c) => return self.error(format!("unexpected character '{}'", c as char)),
            }
            self.pos += 1;
        }
        Ok(f)
    }

    fn term(&mut self) -> Result<(u64, u64)> {
        let q = self.q as u64;
        let mut mask = 0u64;
        let mut coeff = 1u64;
        loop {
            match self.peek() {
                Some(b'x') => {
                    self.pos += 1;
                    if self.bytes.get(self.pos) == Some(&b'_') {
                        self.pos += 1;
                    }
                    let at = self.pos;
                    let index = self.integer()? as usize;
                    if index >= self.num_vars {
                        self.pos = at;
                        return self.error(format!(
                            "variable x{index} exceeds declared {} variables",
                            self.num_vars
                        ));
                    }
                    mask |= 1 << index;
                }
                Some(c) if c.is_ascii_digit() => {
                    coeff = coeff * (self.integer()? % q) % q;
                }
                _ => return self.error("expected a coefficient or variable"),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok((mask, coeff));
            }
        }
    }
}
