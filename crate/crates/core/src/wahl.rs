//! Chains of class W: resolution chains of the Wahl singularities
//! `1/p²(1, pq-1)`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_integer::{Integer, Roots};
use serde::Serialize;

use crate::chain::{expand, HjChain};
use crate::error::{Error, Result};

/// Parameters `(p, q)` of a Wahl chain, `1 <= q < p`, `gcd(p, q) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WahlParams {
    pub p: i64,
    pub q: i64,
    pub chain: HjChain,
}

impl WahlParams {
    pub fn pq(&self) -> (i64, i64) {
        (self.p, self.q)
    }
}

fn check_pq(p: i64, q: i64) -> Result<()> {
    if p < 2 || q < 1 || q >= p {
        return Err(Error::OutOfRange(format!("(p, q) = ({p}, {q}) needs 1 <= q < p")));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::NotCoprime { n: p, a: q });
    }
    Ok(())
}

/// Decide class W arithmetically: `n = p²` and `a = pq - 1`.
pub fn is_class_w(chain: &HjChain) -> Result<WahlParams> {
    let v = chain.value()?;
    let p = v.n().sqrt();
    if p * p != v.n() {
        return Err(Error::NotClassW(format!("{} is not a perfect square", v.n())));
    }
    if (v.a() + 1) % p != 0 {
        return Err(Error::NotClassW(format!("{} + 1 is not divisible by p = {p}", v.a())));
    }
    let q = (v.a() + 1) / p;
    if q >= p || p.gcd(&q) != 1 {
        return Err(Error::NotClassW(format!("q = {q} is not a valid partner of p = {p}")));
    }
    Ok(WahlParams {
        p,
        q,
        chain: chain.clone(),
    })
}

/// Chain of `p²/(pq - 1)`.
pub fn wahl_chain(p: i64, q: i64) -> Result<HjChain> {
    check_pq(p, q)?;
    let n = p.checked_mul(p).ok_or(Error::Overflow)?;
    expand(n, p * q - 1)
}

pub fn wahl_params(p: i64, q: i64) -> Result<WahlParams> {
    Ok(WahlParams {
        p,
        q,
        chain: wahl_chain(p, q)?,
    })
}

/// Prepend a 2 and raise the last entry.
pub fn move_l(chain: &HjChain) -> HjChain {
    let mut v = Vec::with_capacity(chain.len() + 1);
    v.push(2);
    v.extend_from_slice(chain.entries());
    *v.last_mut().expect("nonempty") += 1;
    HjChain::new(v).expect("entries stay >= 2")
}

/// Append a 2 and raise the first entry.
pub fn move_r(chain: &HjChain) -> HjChain {
    let mut v = chain.entries().to_vec();
    v[0] += 1;
    v.push(2);
    HjChain::new(v).expect("entries stay >= 2")
}

/// All class-W chains with `p <= max_p`, obtained from `[4]` by the two moves.
///
/// Each move is checked to land in class W with a strictly larger `p`, so
/// pruning at `max_p` cannot lose anything.
pub fn generate(max_p: i64) -> Result<BTreeSet<HjChain>> {
    if max_p < 2 {
        return Err(Error::OutOfRange(format!("max_p = {max_p} must be at least 2")));
    }
    if max_p > 3_000_000_000 {
        return Err(Error::Overflow);
    }
    let seed = HjChain::new(vec![4]).expect("valid");
    let mut seen = BTreeSet::from([seed.clone()]);
    let mut queue = VecDeque::from([(seed, 2i64)]);
    while let Some((chain, p)) = queue.pop_front() {
        for next in [move_l(&chain), move_r(&chain)] {
            let params =
                is_class_w(&next).map_err(|e| Error::MoveDidNotIncreaseP(format!("{next} left class W: {e}")))?;
            if params.p <= p {
                return Err(Error::MoveDidNotIncreaseP(format!(
                    "{chain} (p = {p}) -> {next} (p = {})",
                    params.p
                )));
            }
            if params.p <= max_p && seen.insert(next.clone()) {
                queue.push_back((next, params.p));
            }
        }
    }
    Ok(seen)
}

/// Generated chains as params, ordered by `(p, q)`.
pub fn generate_params(max_p: i64) -> Result<Vec<WahlParams>> {
    let mut out = generate(max_p)?.iter().map(is_class_w).collect::<Result<Vec<_>>>()?;
    out.sort_by_key(|w| (w.p, w.q));
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NeighborhoodKind {
    Flipping,
    Divisorial,
}

impl fmt::Display for NeighborhoodKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NeighborhoodKind::Flipping => "flipping",
            NeighborhoodKind::Divisorial => "divisorial",
        })
    }
}

/// Kind of the mk1A neighbourhood of `B_{n,1}` over the (-4)-curve, with the
/// embedding it certifies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bn1Kind {
    pub n: i64,
    pub kind: NeighborhoodKind,
    pub embedding: String,
}

pub fn bn1_kind(n: i64) -> Result<Bn1Kind> {
    if n < 3 {
        return Err(Error::OutOfRange(format!("n = {n} must be at least 3")));
    }
    let (kind, embedding) = if n.is_odd() {
        (NeighborhoodKind::Flipping, format!("B_{{{n},1}} embeds in V_{{-4}}"))
    } else {
        (
            NeighborhoodKind::Divisorial,
            format!("B_{{{n},1}} embeds in B_{{2,1}} # -CP^2"),
        )
    };
    Ok(Bn1Kind { n, kind, embedding })
}
