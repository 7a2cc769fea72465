//! Partitions, signed partitions and binary sequences.
//!
//! A [`Partition`] stores its parts in weakly decreasing order. Code that
//! indexes parts from the smallest upward asks for [`Partition::ascending`];
//! code that indexes from the largest uses [`Partition::parts`] directly.
//!
//! The textual form is a comma-separated list of integers, negative parts
//! written with a leading minus: `16,16,-3,-5`. Parsing accepts any order.
//! The empty object renders as `(empty)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Rendering of the empty partition / signed partition.
pub const EMPTY_TEXT: &str = "(empty)";

/// A finite multiset of positive integers, stored weakly decreasing.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition from parts in any order. Zero parts are rejected.
    pub fn new(parts: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut parts: Vec<u32> = parts.into_iter().collect();
        if let Some(index) = parts.iter().position(|&p| p == 0) {
            return Err(Error::NonPositivePart { index, value: 0 });
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    /// Builds a partition from nonnegative entries, dropping the zeros.
    pub fn from_dropping_zeros(parts: impl IntoIterator<Item = u32>) -> Self {
        let mut parts: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    /// Caller guarantees the parts are positive and weakly decreasing.
    pub(crate) fn from_descending_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Self { parts }
    }

    /// Parts from largest to smallest.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Parts from smallest to largest.
    pub fn ascending(&self) -> Vec<u32> {
        self.parts.iter().rev().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn largest(&self) -> Option<u32> {
        self.parts.first().copied()
    }

    pub fn smallest(&self) -> Option<u32> {
        self.parts.last().copied()
    }

    pub fn contains(&self, part: u32) -> bool {
        self.parts.contains(&part)
    }

    pub fn is_distinct(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Transpose of the Ferrers diagram.
    pub fn conjugate(&self) -> Partition {
        let Some(largest) = self.largest() else {
            return Partition::empty();
        };
        // Column c has one cell for every part >= c; parts are decreasing so
        // the count is the length of the prefix of parts >= c.
        let mut conj = Vec::with_capacity(largest as usize);
        let mut count = self.parts.len();
        for column in 1..=largest {
            while count > 0 && self.parts[count - 1] < column {
                count -= 1;
            }
            conj.push(count as u32);
        }
        Partition { parts: conj }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts, &[])
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let signed: SignedPartition = s.parse()?;
        if let Some(&part) = signed.negatives.parts.last() {
            let position = position_of_negative(s, part);
            return Err(Error::Parse {
                position,
                token: format!("-{part}"),
                reason: "negative part in an ordinary partition",
            });
        }
        Ok(signed.positives)
    }
}

fn position_of_negative(s: &str, part: u32) -> usize {
    let needle = format!("-{part}");
    s.split(',').position(|t| t.trim() == needle).map_or(0, |i| i + 1)
}

/// A pair of partitions (positive parts, absolute values of negative parts).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedPartition {
    positives: Partition,
    negatives: Partition,
}

impl SignedPartition {
    pub fn new(positives: Partition, negatives: Partition) -> Self {
        Self { positives, negatives }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds from signed integers in any order; zero is rejected.
    pub fn from_signed_parts(parts: impl IntoIterator<Item = i64>) -> Result<Self> {
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for (index, p) in parts.into_iter().enumerate() {
            let magnitude = u32::try_from(p.unsigned_abs()).map_err(|_| Error::NonPositivePart { index, value: p })?;
            match p.signum() {
                1 => pos.push(magnitude),
                -1 => neg.push(magnitude),
                _ => return Err(Error::NonPositivePart { index, value: 0 }),
            }
        }
        Ok(Self::new(Partition::new(pos)?, Partition::new(neg)?))
    }

    pub fn positives(&self) -> &Partition {
        &self.positives
    }

    /// Absolute values of the negative parts.
    pub fn negatives(&self) -> &Partition {
        &self.negatives
    }

    /// Number of positive parts.
    pub fn positive_count(&self) -> usize {
        self.positives.len()
    }

    pub fn weight(&self) -> i64 {
        weight_of(self)
    }

    pub fn is_empty(&self) -> bool {
        self.positives.is_empty() && self.negatives.is_empty()
    }
}

impl From<Partition> for SignedPartition {
    fn from(positives: Partition) -> Self {
        Self::new(positives, Partition::empty())
    }
}

/// `|positives| - |negatives|`.
pub fn weight_of(s: &SignedPartition) -> i64 {
    s.positives.weight() as i64 - s.negatives.weight() as i64
}

impl fmt::Display for SignedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.positives.parts, &self.negatives.parts)
    }
}

// Positives largest first, then negatives by increasing magnitude.
fn write_parts(f: &mut fmt::Formatter<'_>, positives: &[u32], negatives: &[u32]) -> fmt::Result {
    if positives.is_empty() && negatives.is_empty() {
        return f.write_str(EMPTY_TEXT);
    }
    let mut first = true;
    let mut sep = |f: &mut fmt::Formatter<'_>| {
        if first {
            first = false;
            Ok(())
        } else {
            f.write_str(",")
        }
    };
    for p in positives {
        sep(f)?;
        write!(f, "{p}")?;
    }
    for p in negatives.iter().rev() {
        sep(f)?;
        write!(f, "-{p}")?;
    }
    Ok(())
}

impl FromStr for SignedPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() || trimmed == EMPTY_TEXT {
            return Ok(Self::empty());
        }
        let mut parts = Vec::new();
        for (i, token) in trimmed.split(',').enumerate() {
            let token = token.trim();
            let position = i + 1;
            let value: i64 = token.parse().map_err(|_| Error::Parse {
                position,
                token: token.to_string(),
                reason: "not an integer",
            })?;
            if value == 0 {
                return Err(Error::Parse {
                    position,
                    token: token.to_string(),
                    reason: "zero is not a part",
                });
            }
            if u32::try_from(value.unsigned_abs()).is_err() {
                return Err(Error::Parse {
                    position,
                    token: token.to_string(),
                    reason: "part out of range",
                });
            }
            parts.push(value);
        }
        Self::from_signed_parts(parts)
    }
}

/// A finite 0/1 sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinarySequence {
    bits: Vec<u8>,
}

impl BinarySequence {
    /// Any nonzero entry is read as 1.
    pub fn new(bits: impl IntoIterator<Item = u8>) -> Self {
        Self {
            bits: bits.into_iter().map(|b| u8::from(b != 0)).collect(),
        }
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

    pub fn is_all_zero(&self) -> bool {
        self.bits.iter().all(|&b| b == 0)
    }
}

/// Which residue the parity indicator maps to 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ParityVariant {
    OddIsOne,
    EvenIsOne,
}

impl ParityVariant {
    pub fn indicator(self, k: u32) -> u32 {
        parity_indicator(k, self)
    }
}

pub fn parity_indicator(k: u32, variant: ParityVariant) -> u32 {
    let odd = k % 2;
    match variant {
        ParityVariant::OddIsOne => odd,
        ParityVariant::EvenIsOne => 1 - odd,
    }
}
