//! mk1A flips at the level of minimal resolutions.
//!
//! A Wahl chain `[b_1, ..., b_r]` together with a (-1)-curve `C` meeting
//! `E_i` is written `(b_1, ..., *b_i, ..., b_r)`. Contracting `C` together
//! with the chain gives the cyclic quotient `[b_1, ..., b_i - 1, ..., b_r]`.
//!
//! For the underline on the last entry the flip has a closed form: with `i`
//! the last index carrying `b_i >= 3`, the flipped curve `C+` is the image of
//! `E_1` and carries the Wahl chain `[b_2, ..., b_i - 1]` (or nothing when
//! `i = 1`). The same answer comes out of two independent routes kept here:
//! deleting the last column of the dot diagram, and literally blowing down
//! `r - i + 1` (-1)-curves inside the blown-up configuration
//! `B_1 .. B_r, C, A_e .. A_{j(δ)+2}`.

use std::fmt;
use std::str::FromStr;

use crate::chain::{continuant, GeneralChain, HjChain, Rational, ReductionTrace};
use crate::dot::{delta_half, delta_position, DeltaPosition, DotDiagram};
use crate::error::{Error, Result};
use crate::wahl::{self, bn1_kind, is_class_w, Bn1Kind, WahlParams};

/// A class-W chain with the curve `E_underline` (1-based) met by `C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mk1aData {
    chain: HjChain,
    underline: usize,
}

impl Mk1aData {
    pub fn new(chain: HjChain, underline: usize) -> Result<Self> {
        is_class_w(&chain)?;
        if underline == 0 || underline > chain.len() {
            return Err(Error::IndexOutOfRange {
                index: underline,
                len: chain.len(),
            });
        }
        Ok(Mk1aData { chain, underline })
    }

    /// Data with `C` attached to the last curve.
    pub fn last(chain: HjChain) -> Result<Self> {
        let r = chain.len();
        Mk1aData::new(chain, r)
    }

    pub fn chain(&self) -> &HjChain {
        &self.chain
    }

    pub fn underline(&self) -> usize {
        self.underline
    }

    /// `[b_1, ..., b_i - 1, ..., b_r]`.
    pub fn contracted_chain(&self) -> GeneralChain {
        let mut v = self.chain.entries().to_vec();
        v[self.underline - 1] -= 1;
        GeneralChain::new(v).expect("entries stay >= 1")
    }
}

impl fmt::Display for Mk1aData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, b) in self.chain.entries().iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            if k + 1 == self.underline {
                f.write_str("*")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl FromStr for Mk1aData {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let marks: Vec<usize> = s
            .split(',')
            .enumerate()
            .filter(|(_, tok)| tok.starts_with('*'))
            .map(|(k, _)| k + 1)
            .collect();
        let [underline] = marks[..] else {
            return Err(Error::Parse(format!("{s:?} needs exactly one '*' marker")));
        };
        let chain: HjChain = s.replacen('*', "", 1).parse()?;
        Mk1aData::new(chain, underline)
    }
}

/// `Δ/Ω` of the contraction of `C` with the chain.
///
/// The contracted chain may start with a 1; its value is then read modulo
/// `Δ`, which is what blowing that curve down would give.
pub fn contraction_invariant(data: &Mk1aData) -> Result<Rational> {
    continuant(data.contracted_chain().entries())?.to_rational()
}

/// Largest index `i` (1-based) with `b_i >= 3`.
pub fn flip_index(chain: &HjChain) -> Result<usize> {
    chain
        .entries()
        .iter()
        .rposition(|&b| b >= 3)
        .map(|k| k + 1)
        .ok_or(Error::AllTwos)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FlipOutcome {
    Wahl(WahlParams),
    Smooth,
}

impl FlipOutcome {
    pub fn chain(&self) -> Option<&HjChain> {
        match self {
            FlipOutcome::Wahl(w) => Some(&w.chain),
            FlipOutcome::Smooth => None,
        }
    }

    pub fn params(&self) -> Option<(i64, i64)> {
        match self {
            FlipOutcome::Wahl(w) => Some(w.pq()),
            FlipOutcome::Smooth => None,
        }
    }
}

impl fmt::Display for FlipOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FlipOutcome::Wahl(w) => write!(f, "{}", w.chain),
            FlipOutcome::Smooth => f.write_str("smooth"),
        }
    }
}

/// Result of flipping `(b_1, ..., *b_r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlipResult {
    pub outcome: FlipOutcome,
    /// Weight of `C+`, the image of `E_1`.
    pub c_plus_weight: i64,
    /// The index `i` used by the flip.
    pub flip_index: usize,
}

fn outcome_of(entries: Vec<i64>) -> Result<FlipOutcome> {
    if entries.is_empty() {
        return Ok(FlipOutcome::Smooth);
    }
    let chain = HjChain::new(entries)?;
    Ok(FlipOutcome::Wahl(is_class_w(&chain)?))
}

fn require_last(data: &Mk1aData) -> Result<()> {
    if data.underline != data.chain.len() {
        return Err(Error::UnderlineNotLast {
            underline: data.underline,
            len: data.chain.len(),
        });
    }
    Ok(())
}

/// Closed-form flip: `C+ = E_1` carrying `[b_2, ..., b_i - 1]`.
pub fn flip_last(data: &Mk1aData) -> Result<FlipResult> {
    require_last(data)?;
    let b = data.chain.entries();
    let i = flip_index(&data.chain)?;
    if i == 1 {
        // every E_j with j > 1 is blown down, and E_1 loses one
        return Ok(FlipResult {
            outcome: FlipOutcome::Smooth,
            c_plus_weight: b[0] - 1,
            flip_index: 1,
        });
    }
    let mut rest = b[1..i].to_vec();
    *rest.last_mut().expect("i >= 2") -= 1;
    Ok(FlipResult {
        outcome: outcome_of(rest)?,
        c_plus_weight: b[0],
        flip_index: i,
    })
}

/// Flip read off the dot diagram: drop the last column, set aside the first
/// row for `C+`, and read the rows that remain.
pub fn flip_last_by_diagram(data: &Mk1aData) -> Result<FlipResult> {
    require_last(data)?;
    flip_index(&data.chain)?;
    let rows = DotDiagram::build(&data.chain).without_last_column();
    let c_plus_weight = rows[0] as i64 + 1;
    let mut rest = &rows[1..];
    while let [head @ .., 0] = rest {
        rest = head;
    }
    if rest.contains(&0) {
        return Err(Error::MalformedConfiguration(
            "column deletion emptied an inner row".into(),
        ));
    }
    let entries: Vec<i64> = rest.iter().map(|&len| len as i64 + 1).collect();
    let flip_index = entries.len() + 1;
    Ok(FlipResult {
        outcome: outcome_of(entries)?,
        c_plus_weight,
        flip_index,
    })
}

/// Label of an entry in a configuration chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    /// `C_t^+`, produced by the `t`-th flip.
    CPlus(usize),
    /// `B_k`, curve of the current Wahl chain.
    B(usize),
    /// The flipping (-1)-curve.
    C,
    /// `A_k`, a curve from the dual chain of the current Wahl chain.
    A(usize),
}

/// `C+_1 .. C+_t, B_1 .. B_r, C, A_e .. A_{j(δ)+2}` with weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigurationChain {
    weights: GeneralChain,
    roles: Vec<Role>,
}

impl ConfigurationChain {
    /// Assemble and label a configuration. `A` labels count down from the
    /// length of the dual of the `B` part.
    pub fn from_parts(c_plus: &[i64], b_part: &[i64], has_c: bool, a_part: &[i64]) -> Result<Self> {
        if !has_c && !a_part.is_empty() {
            return Err(Error::MalformedConfiguration("A-part without C".into()));
        }
        let top = if b_part.is_empty() {
            a_part.len()
        } else {
            HjChain::new(b_part.to_vec())?.dual()?.len()
        };
        if a_part.len() > top {
            return Err(Error::MalformedConfiguration(format!(
                "A-part longer than the dual chain ({} > {top})",
                a_part.len()
            )));
        }
        let mut weights = Vec::new();
        let mut roles = Vec::new();
        for (t, &w) in c_plus.iter().enumerate() {
            weights.push(w);
            roles.push(Role::CPlus(t + 1));
        }
        for (k, &w) in b_part.iter().enumerate() {
            weights.push(w);
            roles.push(Role::B(k + 1));
        }
        if has_c {
            weights.push(1);
            roles.push(Role::C);
        }
        for (k, &w) in a_part.iter().enumerate() {
            weights.push(w);
            roles.push(Role::A(top - k));
        }
        let cfg = ConfigurationChain {
            weights: GeneralChain::new(weights)?,
            roles,
        };
        cfg.check()?;
        Ok(cfg)
    }

    fn check(&self) -> Result<()> {
        let ones = self.weights.entries().iter().filter(|&&w| w == 1).count();
        match (ones, self.c_index()) {
            (0, None) => Ok(()),
            (1, Some(k)) if self.weights.entries()[k] == 1 => Ok(()),
            (n, _) if n > 1 => Err(Error::MultipleMinusOnes(n)),
            _ => Err(Error::MalformedConfiguration(
                "the (-1)-curve must be exactly the entry labelled C".into(),
            )),
        }
    }

    pub fn weights(&self) -> &GeneralChain {
        &self.weights
    }

    pub fn roles(&self) -> &[Role] {
        &self.roles
    }

    fn part(&self, pick: impl Fn(&Role) -> bool) -> Vec<i64> {
        self.roles
            .iter()
            .zip(self.weights.entries())
            .filter(|(r, _)| pick(r))
            .map(|(_, &w)| w)
            .collect()
    }

    pub fn c_plus_part(&self) -> Vec<i64> {
        self.part(|r| matches!(r, Role::CPlus(_)))
    }

    /// Current Wahl chain, if any.
    pub fn b_part(&self) -> Option<HjChain> {
        let b = self.part(|r| matches!(r, Role::B(_)));
        HjChain::new(b).ok()
    }

    pub fn a_part(&self) -> Vec<i64> {
        self.part(|r| matches!(r, Role::A(_)))
    }

    pub fn c_index(&self) -> Option<usize> {
        self.roles.iter().position(|r| *r == Role::C)
    }

    pub fn has_minus_one(&self) -> bool {
        self.weights.entries().contains(&1)
    }
}

impl fmt::Display for ConfigurationChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let left: Vec<String> = self
            .roles
            .iter()
            .zip(self.weights.entries())
            .filter_map(|(r, w)| match r {
                Role::CPlus(_) => Some(format!("{w}+")),
                Role::B(_) => Some(w.to_string()),
                _ => None,
            })
            .collect();
        let a: Vec<String> = self.a_part().iter().map(i64::to_string).collect();
        let c = if self.c_index().is_some() { "1" } else { "" };
        write!(f, "{};{};{}", left.join(","), c, a.join(","))
    }
}

impl FromStr for ConfigurationChain {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let fields: Vec<&str> = s.split(';').collect();
        let [left, c, a] = fields[..] else {
            return Err(Error::Parse(format!("{s:?} needs three ';'-separated fields")));
        };
        let has_c = match c {
            "1" => true,
            "" => false,
            _ => return Err(Error::Parse(format!("C field must be \"1\" or empty, got {c:?}"))),
        };
        let parse_list = |field: &str| -> Result<Vec<i64>> {
            if field.is_empty() {
                Ok(Vec::new())
            } else {
                Ok(field.parse::<GeneralChain>()?.entries().to_vec())
            }
        };
        let mut c_plus = Vec::new();
        let mut b_tokens = Vec::new();
        if !left.is_empty() {
            for tok in left.split(',') {
                match tok.strip_suffix('+') {
                    Some(w) if b_tokens.is_empty() => c_plus.push(w),
                    Some(_) => return Err(Error::Parse("C+ entries must precede the B-part".into())),
                    None => b_tokens.push(tok),
                }
            }
        }
        let c_plus = parse_list(&c_plus.join(","))?;
        let b_part = parse_list(&b_tokens.join(","))?;
        if c_plus.iter().chain(&b_part).any(|&w| w < 2) {
            return Err(Error::Parse("C+ and B entries must be >= 2".into()));
        }
        let a_part = parse_list(a)?;
        ConfigurationChain::from_parts(&c_plus, &b_part, has_c, &a_part)
    }
}

/// `wahl_chain(p, q) ++ [1] ++ [a_e, ..., a_{j(δ)+2}]`.
pub fn full_configuration(p: i64, q: i64) -> Result<ConfigurationChain> {
    let chain = wahl::wahl_chain(p, q)?;
    configuration_for(&chain)
}

fn configuration_for(chain: &HjChain) -> Result<ConfigurationChain> {
    let dual = chain.dual()?;
    let delta = delta_position(chain)?;
    let tail: Vec<i64> = dual.entries().iter().skip(delta.col + 1).rev().copied().collect();
    ConfigurationChain::from_parts(&[], chain.entries(), true, &tail)
}

/// One flip done by blowing down (-1)-curves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlipStep {
    pub before: ConfigurationChain,
    /// Index blown down at each stage, relative to the chain at that stage.
    pub blow_downs: Vec<usize>,
    /// Every chain from `before` to `after`.
    pub chains: Vec<GeneralChain>,
    pub after: ConfigurationChain,
    pub new_wahl: FlipOutcome,
    pub c_plus_weight: i64,
}

/// Blow down `C`, then keep blowing down while the new (-1)-curve lies in
/// the `B` part. `B_1` survives as the new `C+`; the rest of `B` is the new
/// Wahl chain and a (-1)-curve left on the `A` side becomes the new `C`.
pub fn flip_oracle_step(config: &ConfigurationChain) -> Result<FlipStep> {
    let ones = config.weights.entries().iter().filter(|&&w| w == 1).count();
    match ones {
        0 => return Err(Error::NoMinusOne),
        1 => {}
        n => return Err(Error::MultipleMinusOnes(n)),
    }
    let mut k = config
        .c_index()
        .ok_or_else(|| Error::MalformedConfiguration("the (-1)-curve is not labelled C".into()))?;
    let mut chain = config.weights.clone();
    let mut roles = config.roles.to_vec();
    let mut chains = vec![chain.clone()];
    let mut blow_downs = Vec::new();
    loop {
        if k == 0 || !matches!(roles[k - 1], Role::B(_)) {
            return Err(Error::MalformedConfiguration(format!(
                "(-1)-curve at {k} has no B-curve on its left"
            )));
        }
        chain = chain.blow_down(k)?;
        roles.remove(k);
        blow_downs.push(k);
        chains.push(chain.clone());
        if chain.entries()[k - 1] == 1 {
            k -= 1;
        } else {
            break;
        }
    }

    let w = chain.entries();
    let t = roles.iter().filter(|r| matches!(r, Role::CPlus(_))).count();
    let b_start = roles
        .iter()
        .position(|r| matches!(r, Role::B(_)))
        .expect("B_i survives");
    let b_end = b_start + roles[b_start..].iter().take_while(|r| matches!(r, Role::B(_))).count();
    let mut c_plus = w[..t].to_vec();
    c_plus.push(w[b_start]);
    let c_plus_weight = w[b_start];
    let b_part = w[b_start + 1..b_end].to_vec();
    let rest = &w[b_end..];
    let (has_c, a_part) = match rest.first() {
        Some(1) => (true, &rest[1..]),
        _ => (false, rest),
    };
    let after = ConfigurationChain::from_parts(&c_plus, &b_part, has_c, a_part)?;
    let new_wahl = outcome_of(b_part)?;
    debug_assert_eq!(after.weights, chain);
    Ok(FlipStep {
        before: config.clone(),
        blow_downs,
        chains,
        after,
        new_wahl,
        c_plus_weight,
    })
}

/// Flip sequence from the full configuration of `(p, q)` down to a chain
/// without (-1)-curves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlipTrace {
    pub source: WahlParams,
    pub dual: HjChain,
    pub delta: DeltaPosition,
    pub delta_half: HjChain,
    pub initial: ConfigurationChain,
    pub steps: Vec<FlipStep>,
    pub final_chain: HjChain,
}

pub type FlipFormula = dyn Fn(&Mk1aData) -> Result<FlipResult>;

pub fn flip_sequence(p: i64, q: i64) -> Result<FlipTrace> {
    flip_sequence_with(p, q, &flip_last)
}

/// As [`flip_sequence`], checking every oracle step against `formula`.
pub fn flip_sequence_with(p: i64, q: i64, formula: &FlipFormula) -> Result<FlipTrace> {
    let source = wahl::wahl_params(p, q)?;
    let initial = full_configuration(p, q)?;
    let mut config = initial.clone();
    let mut steps = Vec::new();
    while config.has_minus_one() {
        let wahl_chain = config.b_part().ok_or_else(|| {
            Error::MalformedConfiguration(format!("(-1)-curve left without a Wahl chain in {config}"))
        })?;
        let r = wahl_chain.len();
        let i = flip_index(&wahl_chain)?;
        let step = flip_oracle_step(&config)?;
        let expected = formula(&Mk1aData::last(wahl_chain.clone())?)?;
        if expected.outcome.chain() != step.new_wahl.chain() || expected.c_plus_weight != step.c_plus_weight {
            return Err(Error::DisagreementWithFormula(format!(
                "({p},{q}) step {}: formula gives {} with C+ {}, blow-downs give {} with C+ {}",
                steps.len() + 1,
                expected.outcome,
                expected.c_plus_weight,
                step.new_wahl,
                step.c_plus_weight
            )));
        }
        if step.blow_downs.len() != r - i + 1 {
            return Err(Error::DisagreementWithFormula(format!(
                "({p},{q}) step {}: {} blow-downs, expected r - i + 1 = {}",
                steps.len() + 1,
                step.blow_downs.len(),
                r - i + 1
            )));
        }
        config = step.after.clone();
        steps.push(step);
    }
    let final_chain = HjChain::try_from(config.weights.clone())?;
    Ok(FlipTrace {
        dual: source.chain.dual()?,
        delta: delta_position(&source.chain)?,
        delta_half: delta_half(&source.chain)?,
        source,
        initial,
        steps,
        final_chain,
    })
}

/// Reduction of `[n+2, 1, 2, ..., 2]` (the chain of `n²/(n-1)` with `C` on
/// the first (-2)-curve, contracted) together with the flipping/divisorial
/// verdict for `B_{n,1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bn1Reduction {
    pub kind: Bn1Kind,
    pub contracted: Rational,
    pub trace: ReductionTrace,
}

impl Bn1Reduction {
    pub fn reaches_minus_four(&self) -> bool {
        self.trace.final_chain.entries() == [4]
    }
}

pub fn bn1_reduction(n: i64) -> Result<Bn1Reduction> {
    let kind = bn1_kind(n)?;
    let data = Mk1aData::new(wahl::wahl_chain(n, 1)?, 2)?;
    let trace = data.contracted_chain().reduce()?;
    Ok(Bn1Reduction {
        kind,
        contracted: contraction_invariant(&data)?,
        trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hj(v: &[i64]) -> HjChain {
        HjChain::new(v.to_vec()).unwrap()
    }

    fn gc(v: &[i64]) -> GeneralChain {
        GeneralChain::new(v.to_vec()).unwrap()
    }

    fn data(v: &[i64], u: usize) -> Mk1aData {
        Mk1aData::new(hj(v), u).unwrap()
    }

    #[test]
    fn contraction_examples() {
        // oracle: continuants of the contracted chains
        assert_eq!(continuant(&[2, 2, 5, 3]).unwrap().num, 36);
        assert_eq!(continuant(&[2, 2, 5, 3]).unwrap().den, 25);
        assert_eq!(
            contraction_invariant(&data(&[2, 2, 5, 4], 4)).unwrap(),
            Rational::new(36, 25).unwrap()
        );
        assert_eq!(
            contraction_invariant(&data(&[2, 2, 5, 4], 3)).unwrap(),
            Rational::new(37, 26).unwrap()
        );
        assert_eq!(
            contraction_invariant(&data(&[4], 1)).unwrap(),
            Rational::new(3, 1).unwrap()
        );
        // [1,5] blows down to [4]
        assert_eq!(
            contraction_invariant(&data(&[2, 5], 1)).unwrap(),
            Rational::new(4, 1).unwrap()
        );
    }

    #[test]
    fn mk1a_text() {
        let d: Mk1aData = "2,2,5,*4".parse().unwrap();
        assert_eq!(d, data(&[2, 2, 5, 4], 4));
        assert_eq!(d.to_string(), "2,2,5,*4");
        assert!("2,2,5,4".parse::<Mk1aData>().is_err());
        assert!("*2,2,5,*4".parse::<Mk1aData>().is_err());
        assert!("2,*3".parse::<Mk1aData>().is_err());
        assert!(Mk1aData::new(hj(&[4]), 2).is_err());
    }

    #[test]
    fn flip_last_examples() {
        let r = flip_last(&data(&[2, 2, 5, 4], 4)).unwrap();
        assert_eq!(r.outcome.chain(), Some(&hj(&[2, 5, 3])));
        assert_eq!(r.outcome.params(), Some((5, 3)));
        assert_eq!(r.c_plus_weight, 2);

        let r = flip_last(&data(&[2, 5, 3], 3)).unwrap();
        assert_eq!(r.outcome.chain(), Some(&hj(&[5, 2])));
        assert_eq!(r.outcome.params(), Some((3, 1)));

        let r = flip_last(&data(&[5, 2], 2)).unwrap();
        assert_eq!(r.outcome, FlipOutcome::Smooth);
        assert_eq!(r.c_plus_weight, 4);

        assert_eq!(
            flip_last(&data(&[2, 2, 5, 4], 3)),
            Err(Error::UnderlineNotLast { underline: 3, len: 4 })
        );
        assert_eq!(flip_index(&hj(&[2, 2])), Err(Error::AllTwos));
    }

    #[test]
    fn flip_by_diagram_examples() {
        let r = flip_last_by_diagram(&data(&[2, 2, 5, 4], 4)).unwrap();
        assert_eq!(r.outcome.chain(), Some(&hj(&[2, 5, 3])));
        let r = flip_last_by_diagram(&data(&[2, 5, 3], 3)).unwrap();
        assert_eq!(r.outcome.chain(), Some(&hj(&[5, 2])));
        let r = flip_last_by_diagram(&data(&[4], 1)).unwrap();
        assert_eq!(r.outcome, FlipOutcome::Smooth);
        assert_eq!(r, flip_last(&data(&[4], 1)).unwrap());
    }

    #[test]
    fn full_configuration_examples() {
        let c = full_configuration(7, 5).unwrap();
        assert_eq!(c.weights(), &gc(&[2, 2, 5, 4, 1, 2, 2]));
        use Role::*;
        assert_eq!(c.roles(), &[B(1), B(2), B(3), B(4), C, A(6), A(5)]);
        assert_eq!(full_configuration(2, 1).unwrap().weights(), &gc(&[4, 1]));
        assert_eq!(full_configuration(3, 2).unwrap().weights(), &gc(&[2, 5, 1, 2]));
    }

    #[test]
    fn configuration_text() {
        let c = full_configuration(7, 5).unwrap();
        assert_eq!(c.to_string(), "2,2,5,4;1;2,2");
        assert_eq!("2,2,5,4;1;2,2".parse::<ConfigurationChain>().unwrap(), c);
        let later: ConfigurationChain = "2+,2,5,3;1;2".parse().unwrap();
        assert_eq!(later.weights(), &gc(&[2, 2, 5, 3, 1, 2]));
        assert_eq!(later.to_string(), "2+,2,5,3;1;2");
        let done: ConfigurationChain = "2+,2+,4+;;".parse().unwrap();
        assert_eq!(done.weights(), &gc(&[2, 2, 4]));
        for bad in [
            "2,2;1",
            "2,2;2;2",
            "2,2+;1;",
            ";;",
            "2,2;;2",
            "2,1;1;2",
            "2,2,5,4;1;2,2,2,2,2,2,2",
        ] {
            assert!(bad.parse::<ConfigurationChain>().is_err(), "{bad}");
        }
    }

    #[test]
    fn oracle_steps_match_figure() {
        let c0 = full_configuration(7, 5).unwrap();
        let s1 = flip_oracle_step(&c0).unwrap();
        assert_eq!(s1.blow_downs.len(), 1);
        assert_eq!(s1.after.weights(), &gc(&[2, 2, 5, 3, 1, 2]));
        let s2 = flip_oracle_step(&s1.after).unwrap();
        assert_eq!(s2.blow_downs.len(), 1);
        assert_eq!(s2.after.weights(), &gc(&[2, 2, 5, 2, 1]));
        let s3 = flip_oracle_step(&s2.after).unwrap();
        assert_eq!(s3.blow_downs.len(), 2);
        assert_eq!(s3.after.weights(), &gc(&[2, 2, 4]));
        assert_eq!(s3.new_wahl, FlipOutcome::Smooth);
        assert_eq!(s3.after.to_string(), "2+,2+,4+;;");
        assert_eq!(flip_oracle_step(&s3.after).unwrap_err(), Error::NoMinusOne);
    }

    #[test]
    fn sequence_examples() {
        let t = flip_sequence(7, 5).unwrap();
        let params: Vec<_> = t.steps.iter().map(|s| s.new_wahl.params()).collect();
        assert_eq!(params, vec![Some((5, 3)), Some((3, 1)), None]);
        assert_eq!(t.final_chain, hj(&[2, 2, 4]));

        let t = flip_sequence(2, 1).unwrap();
        assert_eq!(t.steps.len(), 1);
        assert_eq!(t.final_chain, hj(&[3]));

        let t = flip_sequence(3, 2).unwrap();
        assert_eq!(t.steps.len(), 2);
        assert_eq!(t.steps[0].new_wahl.params(), Some((2, 1)));
        assert_eq!(t.steps[0].after.weights(), &gc(&[2, 4, 1]));
        assert_eq!(t.final_chain, hj(&[2, 3]));
    }

    #[test]
    fn perturbed_formula_is_caught() {
        let bad = |d: &Mk1aData| {
            let mut r = flip_last(d)?;
            r.c_plus_weight += 1;
            Ok(r)
        };
        assert!(matches!(
            flip_sequence_with(7, 5, &bad),
            Err(Error::DisagreementWithFormula(_))
        ));
    }

    #[test]
    fn bn1_examples() {
        let r = bn1_reduction(3).unwrap();
        assert_eq!(r.trace.initial, gc(&[5, 1]));
        assert!(r.reaches_minus_four());
        let r = bn1_reduction(4).unwrap();
        assert_eq!(r.trace.initial, gc(&[6, 1, 2]));
        assert!(r.reaches_minus_four());
        assert_eq!(r.contracted, Rational::new(4, 1).unwrap());
        assert!(bn1_reduction(50).unwrap().reaches_minus_four());
        assert!(bn1_reduction(2).is_err());
    }
}
