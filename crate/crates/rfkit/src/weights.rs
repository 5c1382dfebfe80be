//! Weight expansions of rational numbers.
//!
//! The weight expansion of `a ≥ 1` is the finite decreasing sequence
//! `w(a) = (1^ℓ0, w1^ℓ1, ..., wN^ℓN)` with `w1 = a − ℓ0`, `w2 = 1 − ℓ1·w1`
//! and so on: the Euclidean algorithm on `(1, a mod 1)`, so the block
//! multiplicities are the continued-fraction partial quotients of `a`.
//! Two identities pin the result exactly: the squares of the flat entries
//! sum to `a`, and the entries themselves sum to `a + 1 − 1/q` where `q`
//! is the denominator of `a` in lowest terms.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::exact::{rat_int, sqrt_enclosure, Rat, RatInterval};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightsError {
    #[error("weight expansion requires a >= 1, got {0}")]
    OutOfDomain(String),
    #[error("weight pair requires positive arguments, got ({0}, {1})")]
    NonPositive(String, String),
}

/// Weight expansion of a rational `a ≥ 1`, with its block structure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightExpansion {
    #[serde(with = "crate::exact::rat::rat_serde")]
    pub input: Rat,
    /// `(weight, multiplicity)` in strictly decreasing weight order.
    #[serde(serialize_with = "serialize_entries")]
    pub entries: Vec<(Rat, u64)>,
    /// Total number of flat entries, `M = Σ ℓ_i = ℓ(a)`.
    pub flat_length: u64,
    /// Block lengths `ℓ0, ℓ1, ..., ℓN` (continued-fraction partial quotients).
    pub block_lengths: Vec<u64>,
    /// Denominator of `a` in lowest terms; also the reciprocal of the last weight.
    #[serde(serialize_with = "serialize_bigint")]
    pub denominator: BigInt,
}

fn serialize_entries<S: serde::Serializer>(v: &[(Rat, u64)], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    #[derive(Serialize)]
    struct Entry<'a> {
        weight: &'a str,
        multiplicity: u64,
    }
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for (w, m) in v {
        seq.serialize_element(&Entry {
            weight: &w.to_string(),
            multiplicity: *m,
        })?;
    }
    seq.end()
}

fn serialize_bigint<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

impl WeightExpansion {
    /// Entries repeated out to the flat list of length `M`.
    pub fn flat(&self) -> Vec<Rat> {
        let mut out = Vec::with_capacity(self.flat_length as usize);
        for (w, mult) in &self.entries {
            for _ in 0..*mult {
                out.push(w.clone());
            }
        }
        out
    }

    pub fn sum(&self) -> Rat {
        self.entries
            .iter()
            .map(|(w, m)| w * rat_int(*m as i64))
            .sum()
    }

    pub fn sum_of_squares(&self) -> Rat {
        self.entries
            .iter()
            .map(|(w, m)| w * w * rat_int(*m as i64))
            .sum()
    }
}

/// Weight expansion of `a ≥ 1` by the continued-fraction recursion,
/// terminating at an exact zero remainder.
pub fn weight_expansion(a: &Rat) -> Result<WeightExpansion, WeightsError> {
    if a < &Rat::one() {
        return Err(WeightsError::OutOfDomain(a.to_string()));
    }
    let mut entries: Vec<(Rat, u64)> = Vec::new();
    let mut blocks: Vec<u64> = Vec::new();

    // Euclidean algorithm on (prev, cur) = (1, a - floor(a)).
    let l0 = a.floor().to_integer();
    let mut prev = Rat::one();
    let mut cur = a - Rat::from_integer(l0.clone());
    entries.push((Rat::one(), big_to_u64(&l0)));
    blocks.push(big_to_u64(&l0));

    while !cur.is_zero() {
        let quot = (&prev / &cur).floor().to_integer();
        let mult = big_to_u64(&quot);
        let next = &prev - &cur * Rat::from_integer(quot);
        entries.push((cur.clone(), mult));
        blocks.push(mult);
        prev = cur;
        cur = next;
    }

    let flat_length = blocks.iter().sum();
    Ok(WeightExpansion {
        input: a.clone(),
        entries,
        flat_length,
        block_lengths: blocks,
        denominator: a.denom().clone(),
    })
}

fn big_to_u64(b: &BigInt) -> u64 {
    b.to_u64().expect("block multiplicity fits in u64")
}

/// Two-argument weight sequence `W(x, y) = min(x,y) · w(max/min)`,
/// flattened. `W(x, 1)` with `x ≥ 1` equals the flat expansion of `x`.
pub fn weight_pair(x: &Rat, y: &Rat) -> Result<Vec<Rat>, WeightsError> {
    if !x.is_positive() || !y.is_positive() {
        return Err(WeightsError::NonPositive(x.to_string(), y.to_string()));
    }
    let (lo, hi) = if x <= y { (x, y) } else { (y, x) };
    let ratio = hi / lo;
    let exp = weight_expansion(&ratio)?;
    Ok(exp.flat().into_iter().map(|w| w * lo).collect())
}

/// Rigorous enclosure of `y(a) = a + 1 − 2·((b+1)/√(2b))·√a`, refined
/// until the width is at most `1e−12 · max(1, |y|)`.
///
/// `y` mixes `√a` and `√(2b)`, so it is enclosed by interval arithmetic
/// rather than represented in a single quadratic field.
pub fn y_interval(a: &Rat, b: &Rat) -> RatInterval {
    let tol = Rat::new(BigInt::one(), BigInt::from(10u8).pow(12));
    let two_b = rat_int(2) * b;
    let two_b1 = rat_int(2) * (b + Rat::one());
    let mut bits = 64;
    loop {
        let root_2b = sqrt_enclosure(&two_b, bits);
        let root_a = sqrt_enclosure(a, bits);
        let coef = RatInterval::point(two_b1.clone()).div(&root_2b);
        let y = RatInterval::point(a + Rat::one()).sub(&coef.mul(&root_a));
        let scale = y.max_abs().max(Rat::one());
        if y.width() <= &tol * scale {
            return y;
        }
        bits *= 2;
        assert!(bits <= 4096, "y(a) enclosure did not converge");
    }
}
