//! Hirzebruch–Jung continued fractions and blow-up / blow-down calculus on
//! weighted linear chains.
//!
//! A chain `[b_1, ..., b_r]` stands for a linear plumbing of spheres with
//! self-intersections `-b_1, ..., -b_r`. Values are computed with the
//! division-free continuant recursion
//!
//! ```text
//! P_{r+2} = 0,  P_{r+1} = 1,  P_i = b_i * P_{i+1} - P_{i+2}
//! ```
//!
//! so `[b_1, ..., b_r] = P_1 / P_2`. Entries equal to `0` or `1` are fine.
//! All arithmetic is checked against `i64::MAX`; nothing wraps.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Reduced pair `n/a` with `gcd(n, a) = 1` and `1 <= a < n`.
///
/// Used for the cyclic quotient type `1/n(1, a)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational {
    n: i64,
    a: i64,
}

impl Rational {
    pub fn new(n: i64, a: i64) -> Result<Self> {
        if n < 2 || a < 1 || a >= n {
            return Err(Error::OutOfRange(format!("{n}/{a} needs 1 <= a < n")));
        }
        if n.gcd(&a) != 1 {
            return Err(Error::NotCoprime { n, a });
        }
        Ok(Rational { n, a })
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    /// `n/(n-a)`, the value of the dual chain.
    pub fn dual(&self) -> Rational {
        Rational {
            n: self.n,
            a: self.n - self.a,
        }
    }

    /// `n/a'` with `a * a' = 1 (mod n)`, the value of the reversed chain.
    pub fn reversed(&self) -> Rational {
        let inv = self.a.extended_gcd(&self.n).x.mod_floor(&self.n);
        Rational { n: self.n, a: inv }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.n, self.a)
    }
}

/// Value `num/den` of a generalized chain, reduced, with `den >= 0`.
///
/// `num == 0` is the value of a zero chain. The empty chain evaluates to
/// `1/0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Continuant {
    pub num: i64,
    pub den: i64,
}

impl Continuant {
    fn reduced(num: i64, den: i64) -> Self {
        let g = num.gcd(&den);
        let (mut num, mut den) = if g == 0 { (num, den) } else { (num / g, den / g) };
        if den < 0 || (den == 0 && num < 0) {
            num = -num;
            den = -den;
        }
        Continuant { num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// Same cyclic quotient type: equal orders and congruent weights.
    ///
    /// A blow-down at the left end of a chain keeps the order but moves the
    /// weight by a multiple of it.
    pub fn same_type(&self, other: &Continuant) -> bool {
        self.num == other.num && (self.num == 0 || (self.den - other.den).mod_floor(&self.num.abs()) == 0)
    }

    /// Convert to a cyclic quotient type, reducing the weight modulo the order.
    pub fn to_rational(&self) -> Result<Rational> {
        if self.num < 2 {
            return Err(Error::OutOfRange(format!(
                "{}/{} is not the value of a cyclic quotient chain",
                self.num, self.den
            )));
        }
        Rational::new(self.num, self.den.mod_floor(&self.num))
    }
}

impl fmt::Display for Continuant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Backward continuant recursion over arbitrary integer entries.
pub fn continuant(entries: &[i64]) -> Result<Continuant> {
    let (mut next, mut next2) = (1i64, 0i64);
    for &b in entries.iter().rev() {
        let p = b
            .checked_mul(next)
            .and_then(|v| v.checked_sub(next2))
            .ok_or(Error::Overflow)?;
        next2 = next;
        next = p;
    }
    Ok(Continuant::reduced(next, next2))
}

fn parse_entries(s: &str) -> Result<Vec<i64>> {
    if s.is_empty() {
        return Err(Error::Parse("empty chain".into()));
    }
    s.split(',')
        .map(|tok| {
            let digits_ok = !tok.is_empty() && tok.bytes().all(|c| c.is_ascii_digit());
            if !digits_ok || (tok.len() > 1 && tok.starts_with('0')) {
                return Err(Error::Parse(format!("bad chain entry {tok:?} in {s:?}")));
            }
            tok.parse::<i64>()
                .map_err(|_| Error::Parse(format!("chain entry {tok:?} too large")))
        })
        .collect()
}

fn write_entries(f: &mut fmt::Formatter<'_>, entries: &[i64]) -> fmt::Result {
    for (idx, b) in entries.iter().enumerate() {
        if idx > 0 {
            f.write_str(",")?;
        }
        write!(f, "{b}")?;
    }
    Ok(())
}

/// Resolution chain `[b_1, ..., b_r]` with every `b_i >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HjChain(Vec<i64>);

impl HjChain {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidChain("empty chain".into()));
        }
        if let Some(b) = entries.iter().find(|&&b| b < 2) {
            return Err(Error::InvalidChain(format!("entry {b} < 2")));
        }
        Ok(HjChain(entries))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The value `n/a` of the chain.
    pub fn value(&self) -> Result<Rational> {
        let c = continuant(&self.0)?;
        Rational::new(c.num, c.den)
    }

    pub fn reverse(&self) -> HjChain {
        HjChain(self.0.iter().rev().copied().collect())
    }

    /// Chain of `n/(n-a)`.
    pub fn dual(&self) -> Result<HjChain> {
        let v = self.value()?;
        expand(v.n, v.n - v.a)
    }

    pub fn to_general(&self) -> GeneralChain {
        GeneralChain(self.0.clone())
    }
}

impl fmt::Display for HjChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_entries(f, &self.0)
    }
}

impl FromStr for HjChain {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        HjChain::new(parse_entries(s)?)
    }
}

impl From<HjChain> for GeneralChain {
    fn from(c: HjChain) -> Self {
        GeneralChain(c.0)
    }
}

impl TryFrom<GeneralChain> for HjChain {
    type Error = Error;

    fn try_from(c: GeneralChain) -> Result<Self> {
        HjChain::new(c.0)
    }
}

/// Hirzebruch–Jung continued fraction of `n/a`.
pub fn expand(n: i64, a: i64) -> Result<HjChain> {
    Rational::new(n, a)?;
    let (mut num, mut den) = (n, a);
    let mut entries = Vec::new();
    while den != 0 {
        // b = ceil(num/den); remainder stays in [0, den)
        let b = Integer::div_ceil(&num, &den);
        let rem = b * den - num;
        entries.push(b);
        num = den;
        den = rem;
    }
    Ok(HjChain(entries))
}

/// Value of a chain by continuants.
pub fn evaluate(chain: &GeneralChain) -> Result<Continuant> {
    if chain.0.is_empty() {
        return Err(Error::InvalidChain("cannot evaluate the empty chain".into()));
    }
    continuant(&chain.0)
}

pub fn dual_chain(chain: &HjChain) -> Result<HjChain> {
    chain.dual()
}

pub fn reverse(chain: &HjChain) -> HjChain {
    chain.reverse()
}

/// Weighted linear chain with entries `>= 0`; `1` marks a (-1)-curve.
///
/// The empty chain only arises from blowing down the singleton `[1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneralChain(Vec<i64>);

impl GeneralChain {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidChain("empty chain".into()));
        }
        if let Some(b) = entries.iter().find(|&&b| b < 0) {
            return Err(Error::InvalidChain(format!("negative entry {b}")));
        }
        Ok(GeneralChain(entries))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &GeneralChain) -> GeneralChain {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        GeneralChain(v)
    }

    pub fn evaluate(&self) -> Result<Continuant> {
        evaluate(self)
    }

    /// Contract the (-1)-curve at `k` (0-based).
    ///
    /// `[.., x, 1, y, ..] -> [.., x-1, y-1, ..]`, at an end only the single
    /// neighbour drops, and `[1]` becomes the empty chain.
    pub fn blow_down(&self, k: usize) -> Result<GeneralChain> {
        let len = self.0.len();
        if k >= len {
            return Err(Error::IndexOutOfRange { index: k, len });
        }
        if self.0[k] != 1 {
            return Err(Error::NotMinusOne {
                index: k,
                value: self.0[k],
            });
        }
        let mut v = self.0.clone();
        v.remove(k);
        // neighbours now sit at k-1 and k
        if k > 0 {
            v[k - 1] -= 1;
            if v[k - 1] < 0 {
                return Err(Error::NegativeWeight { index: k - 1 });
            }
        }
        if k < v.len() {
            v[k] -= 1;
            if v[k] < 0 {
                return Err(Error::NegativeWeight { index: k + 1 });
            }
        }
        Ok(GeneralChain(v))
    }

    /// Insert a (-1)-curve so that it lands at index `at` (0 = left end,
    /// `len` = right end), raising its neighbours by one.
    ///
    /// `blow_down(at)` undoes it.
    pub fn blow_up(&self, at: usize) -> Result<GeneralChain> {
        let len = self.0.len();
        if at > len {
            return Err(Error::IndexOutOfRange { index: at, len });
        }
        let mut v = self.0.clone();
        if at > 0 {
            v[at - 1] = v[at - 1].checked_add(1).ok_or(Error::Overflow)?;
        }
        if at < len {
            v[at] = v[at].checked_add(1).ok_or(Error::Overflow)?;
        }
        v.insert(at, 1);
        Ok(GeneralChain(v))
    }

    /// Blow down (-1)-curves, leftmost first, until none is left.
    pub fn reduce(&self) -> Result<ReductionTrace> {
        let mut current = self.clone();
        let mut steps = Vec::new();
        while let Some(k) = current.0.iter().position(|&b| b == 1) {
            current = current.blow_down(k)?;
            steps.push(k);
        }
        Ok(ReductionTrace {
            initial: self.clone(),
            steps,
            final_chain: current,
        })
    }
}

impl fmt::Display for GeneralChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_entries(f, &self.0)
    }
}

impl FromStr for GeneralChain {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GeneralChain::new(parse_entries(s)?)
    }
}

/// Ordered blow-downs performed by [`reduce_zero`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub initial: GeneralChain,
    /// Index blown down at each step, relative to the chain at that step.
    pub steps: Vec<usize>,
    pub final_chain: GeneralChain,
}

impl ReductionTrace {
    /// Did the reduction end at `[0]`?
    pub fn is_zero(&self) -> bool {
        self.final_chain.0 == [0]
    }

    /// Every chain along the way, starting with the input.
    pub fn chains(&self) -> Result<Vec<GeneralChain>> {
        let mut out = vec![self.initial.clone()];
        for &k in &self.steps {
            let next = out.last().expect("nonempty").blow_down(k)?;
            out.push(next);
        }
        Ok(out)
    }
}

pub fn blow_down(chain: &GeneralChain, k: usize) -> Result<GeneralChain> {
    chain.blow_down(k)
}

pub fn blow_up(chain: &GeneralChain, at: usize) -> Result<GeneralChain> {
    chain.blow_up(at)
}

pub fn reduce_zero(chain: &GeneralChain) -> Result<ReductionTrace> {
    if chain.is_empty() {
        return Err(Error::InvalidChain("empty chain".into()));
    }
    chain.reduce()
}

/// `chain ++ [1] ++ reverse(dual(chain))`, the chain that reduces to `[0]`.
pub fn zero_chain(chain: &HjChain) -> Result<GeneralChain> {
    let mut v = chain.0.clone();
    v.push(1);
    v.extend(chain.dual()?.0.iter().rev());
    Ok(GeneralChain(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gc(v: &[i64]) -> GeneralChain {
        GeneralChain::new(v.to_vec()).unwrap()
    }

    fn hj(v: &[i64]) -> HjChain {
        HjChain::new(v.to_vec()).unwrap()
    }

    // brute-force rational evaluation b1 - 1/(b2 - 1/(...)) as (num, den)
    fn naive_value(entries: &[i64]) -> (i64, i64) {
        let (mut num, mut den) = (*entries.last().unwrap(), 1i64);
        for &b in entries.iter().rev().skip(1) {
            // b - den/num
            let (n2, d2) = (b * num - den, num);
            num = n2;
            den = d2;
        }
        let g = num.gcd(&den);
        (num / g, den / g)
    }

    #[test]
    fn expand_examples() {
        assert_eq!(expand(49, 34).unwrap(), hj(&[2, 2, 5, 4]));
        assert_eq!(expand(2, 1).unwrap(), hj(&[2]));
        assert_eq!(naive_value(&[2, 5]), (9, 5));
        assert_eq!(expand(9, 5).unwrap(), hj(&[2, 5]));
    }

    #[test]
    fn expand_rejects_bad_input() {
        assert_eq!(expand(6, 4), Err(Error::NotCoprime { n: 6, a: 4 }));
        assert!(matches!(expand(5, 5), Err(Error::OutOfRange(_))));
        assert!(matches!(expand(5, 0), Err(Error::OutOfRange(_))));
        assert!(matches!(expand(5, 7), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(evaluate(&gc(&[2, 2, 5, 4])).unwrap(), Continuant { num: 49, den: 34 });
        assert_eq!(evaluate(&gc(&[2])).unwrap(), Continuant { num: 2, den: 1 });
        assert_eq!(naive_value(&[2, 5, 3]), (25, 14));
        assert_eq!(evaluate(&gc(&[2, 5, 3])).unwrap(), Continuant { num: 25, den: 14 });
        // entries 1 and 0 never divide by zero
        assert!(evaluate(&gc(&[2, 1, 2])).unwrap().is_zero());
        assert!(evaluate(&gc(&[0])).unwrap().is_zero());
        assert_eq!(evaluate(&gc(&[1])).unwrap(), Continuant { num: 1, den: 1 });
    }

    #[test]
    fn evaluate_overflow_is_reported() {
        let big = GeneralChain::new(vec![1 << 40, 1 << 40]).unwrap();
        assert_eq!(evaluate(&big), Err(Error::Overflow));
    }

    #[test]
    fn dual_examples() {
        assert_eq!(hj(&[2, 2, 5, 4]).dual().unwrap(), hj(&[4, 2, 2, 3, 2, 2]));
        assert_eq!(hj(&[2]).dual().unwrap(), hj(&[2]));
        assert_eq!(naive_value(&[2, 2, 2]), (4, 3));
        assert_eq!(hj(&[4]).dual().unwrap(), hj(&[2, 2, 2]));
    }

    #[test]
    fn blow_down_examples() {
        assert_eq!(
            gc(&[2, 2, 5, 4, 1, 2, 2]).blow_down(4).unwrap(),
            gc(&[2, 2, 5, 3, 1, 2])
        );
        assert_eq!(gc(&[3, 1]).blow_down(1).unwrap(), gc(&[2]));
        let step = gc(&[2, 1, 2]).blow_down(1).unwrap();
        assert_eq!(step, gc(&[1, 1]));
        let step = step.blow_down(0).unwrap();
        assert_eq!(step, gc(&[0]));
        assert!(gc(&[1]).blow_down(0).unwrap().is_empty());
    }

    #[test]
    fn blow_down_errors() {
        assert_eq!(gc(&[2, 3]).blow_down(1), Err(Error::NotMinusOne { index: 1, value: 3 }));
        assert_eq!(
            gc(&[2, 1]).blow_down(2),
            Err(Error::IndexOutOfRange { index: 2, len: 2 })
        );
        assert_eq!(gc(&[0, 1]).blow_down(1), Err(Error::NegativeWeight { index: 0 }));
    }

    #[test]
    fn blow_up_examples() {
        assert_eq!(gc(&[2, 2, 5, 3, 1, 2]).blow_up(4).unwrap(), gc(&[2, 2, 5, 4, 1, 2, 2]));
        assert_eq!(gc(&[2]).blow_up(1).unwrap(), gc(&[3, 1]));
        let up = gc(&[2, 3]).blow_up(2).unwrap();
        assert_eq!(up, gc(&[2, 4, 1]));
        assert_eq!(up.blow_down(2).unwrap(), gc(&[2, 3]));
        assert_eq!(gc(&[2]).blow_up(2), Err(Error::IndexOutOfRange { index: 2, len: 1 }));
    }

    #[test]
    fn reduce_zero_examples() {
        let t = reduce_zero(&gc(&[2, 2, 5, 4, 1, 2, 2, 3, 2, 2, 4])).unwrap();
        assert!(t.is_zero());
        assert_eq!(zero_chain(&hj(&[2, 2, 5, 4])).unwrap(), t.initial);

        let t = reduce_zero(&gc(&[2, 1, 2])).unwrap();
        assert!(t.is_zero());
        assert_eq!(t.steps, vec![1, 0]);

        let c = gc(&[4, 1, 2, 2, 2]);
        assert!(evaluate(&c).unwrap().is_zero());
        assert!(reduce_zero(&c).unwrap().is_zero());
        assert_eq!(zero_chain(&hj(&[4])).unwrap(), c);
    }

    #[test]
    fn reduce_records_every_chain() {
        let t = reduce_zero(&gc(&[3, 1, 2])).unwrap();
        // [3,1,2] -> [2,1] -> [1] -> []
        assert_eq!(t.steps, vec![1, 1, 0]);
        assert!(t.final_chain.is_empty());
        assert!(!t.is_zero());
        let chains = t.chains().unwrap();
        assert_eq!(chains.first(), Some(&t.initial));
        assert_eq!(chains.last(), Some(&t.final_chain));
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(hj(&[2, 2, 5, 4]).reverse(), hj(&[4, 5, 2, 2]));
        assert_eq!(hj(&[4]).reverse(), hj(&[4]));
        assert_eq!(hj(&[5, 2]).reverse(), hj(&[2, 5]));
    }

    #[test]
    fn text_grammar() {
        assert_eq!("2,2,5,4".parse::<HjChain>().unwrap(), hj(&[2, 2, 5, 4]));
        assert_eq!("2,1,0".parse::<GeneralChain>().unwrap(), gc(&[2, 1, 0]));
        for bad in ["", "2, 2", "02", "2,,2", "+2", "-2", "2,"] {
            assert!(bad.parse::<GeneralChain>().is_err(), "{bad:?}");
        }
        assert!("2,1".parse::<HjChain>().is_err());
        assert_eq!(hj(&[2, 2, 5, 4]).to_string(), "2,2,5,4");
    }

    #[test]
    fn rational_reversal() {
        let r = Rational::new(49, 34).unwrap();
        assert_eq!((r.a() * r.reversed().a()) % 49, 1);
        assert_eq!(hj(&[2, 2, 5, 4]).reverse().value().unwrap(), r.reversed());
    }
}
