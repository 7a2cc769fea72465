//! Membership and exhaustive enumeration for every partition class.
//!
//! Each class is described by a [`ClassRule`]: plain data listing the
//! clauses of its definition. Membership tests check the clauses directly;
//! enumeration generates objects clause by clause. Rules are public values so
//! a verifier can run against a deliberately altered clause.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{Partition, SignedPartition};

/// Above this many positive parts a rule is treated as unbounded.
const MAX_POSITIVE_PARTS: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Side {
    Ordinary,
    Signed,
}

macro_rules! class_ids {
    ($($variant:ident => $name:literal, $side:ident;)*) => {
        /// Every ordinary and signed class.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum ClassId {
            $($variant,)*
        }

        impl ClassId {
            pub const ALL: &'static [ClassId] = &[$(ClassId::$variant,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(ClassId::$variant => $name,)*
                }
            }

            pub fn side(self) -> Side {
                match self {
                    $(ClassId::$variant => Side::$side,)*
                }
            }
        }
    };
}

class_ids! {
    P => "P", Ordinary;
    PSigned => "P_SIGNED", Signed;
    D => "D", Ordinary;
    DSigned => "D_SIGNED", Signed;
    Rr1 => "RR1", Ordinary;
    Rr1Signed => "RR1_SIGNED", Signed;
    Rr2 => "RR2", Ordinary;
    Rr2Signed => "RR2_SIGNED", Signed;
    Gg1 => "GG1", Ordinary;
    Gg1AndrewsSigned => "GG1_ANDREWS_SIGNED", Signed;
    Gg1PrimeSigned => "GG1_PRIME_SIGNED", Signed;
    Gg2 => "GG2", Ordinary;
    Gg2AndrewsSigned => "GG2_ANDREWS_SIGNED", Signed;
    Gg2PrimeSigned => "GG2_PRIME_SIGNED", Signed;
    GgDiff => "GG_DIFF", Ordinary;
    GgDiffSigned => "GG_DIFF_SIGNED", Signed;
    Lg1 => "LG1", Ordinary;
    Lg1ESigned => "LG1_E_SIGNED", Signed;
    Lg1ShiftSigned => "LG1_SHIFT_SIGNED", Signed;
    Lg1PrimeSigned => "LG1_PRIME_SIGNED", Signed;
    Lg2 => "LG2", Ordinary;
    Lg2TSigned => "LG2_T_SIGNED", Signed;
    Lg2AndrewsSigned => "LG2_ANDREWS_SIGNED", Signed;
    Lg2PrimeSigned => "LG2_PRIME_SIGNED", Signed;
    Lg2HSigned => "LG2_H_SIGNED", Signed;
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClassId::ALL
            .iter()
            .copied()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownId {
                kind: "class",
                given: s.to_string(),
                valid: ClassId::ALL.iter().map(|c| c.name()).collect::<Vec<_>>().join(", "),
            })
    }
}

/// Condition on two consecutive parts of an ordinary partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PairRule {
    Any,
    MinDifference(u32),
    /// Difference at least 2, at least 4 when both parts are even.
    EvenPairsFour,
    /// Difference at least 2, at least 4 when both parts are odd.
    OddPairsFour,
}

impl PairRule {
    pub fn admits(self, larger: u32, smaller: u32) -> bool {
        if larger < smaller {
            return false;
        }
        let d = larger - smaller;
        match self {
            PairRule::Any => true,
            PairRule::MinDifference(m) => d >= m,
            PairRule::EvenPairsFour => d >= 2 && (larger % 2 == 1 || smaller % 2 == 1 || d >= 4),
            PairRule::OddPairsFour => d >= 2 && (larger.is_multiple_of(2) || smaller.is_multiple_of(2) || d >= 4),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrdinaryRule {
    pub min_part: u32,
    pub pair: PairRule,
    /// When set, the smallest part must be one of these values.
    pub smallest_one_of: Option<Vec<u32>>,
}

/// `per_part * k + offset`, with `k` the number of positive parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Linear {
    pub per_part: i64,
    pub offset: i64,
}

impl Linear {
    pub const fn new(per_part: i64, offset: i64) -> Self {
        Self { per_part, offset }
    }

    pub fn at(self, k: usize) -> i64 {
        self.per_part * k as i64 + self.offset
    }
}

/// Clauses on the positive parts, read smallest first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PositiveRule {
    pub min_count: usize,
    pub smallest_at_least: Linear,
    /// The smallest part must equal `smallest_at_least` exactly.
    pub smallest_exact: bool,
    pub smallest_parity: Option<u32>,
    /// Consecutive parts differ by at least this much.
    pub min_gap: u32,
    /// Required parity of each consecutive difference.
    pub gap_parity: Option<u32>,
}

/// Clauses on the negative part sizes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NegativeRule {
    pub modulus: u32,
    pub residue: u32,
    pub at_most: Linear,
    /// 1 means distinct.
    pub max_multiplicity: u32,
}

impl NegativeRule {
    /// Admissible sizes for `k` positive parts, increasing.
    pub fn allowed(&self, k: usize) -> Vec<u32> {
        let top = self.at_most.at(k);
        if top < 1 {
            return Vec::new();
        }
        (1..=top as u32).filter(|x| x % self.modulus == self.residue).collect()
    }

    pub fn max_total(&self, k: usize) -> i64 {
        self.allowed(k).iter().map(|&x| i64::from(x)).sum::<i64>() * i64::from(self.max_multiplicity)
    }
}

/// Extra clause tying the smallest positive part to the negatives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Threshold {
    None,
    /// With `t` negatives and `d = [smallest negative is 1]`, the smallest
    /// positive exceeds `2t - d` (vacuous when `t = 0`).
    AboveTwiceCountMinusOne,
    /// Smallest positive exceeds `2t + d`.
    AboveTwiceCountPlusOne,
}

impl Threshold {
    fn holds(self, smallest_positive: Option<u32>, negatives: &Partition) -> bool {
        let t = negatives.len() as i64;
        let delta = i64::from(negatives.smallest() == Some(1));
        let bound = match self {
            Threshold::None => return true,
            Threshold::AboveTwiceCountMinusOne => 2 * t - delta,
            Threshold::AboveTwiceCountPlusOne => 2 * t + delta,
        };
        match smallest_positive {
            Some(s) => i64::from(s) > bound,
            None => t == 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignedRule {
    pub positives: PositiveRule,
    pub negatives: NegativeRule,
    pub threshold: Threshold,
}

impl SignedRule {
    fn first_part(&self, k: usize) -> i64 {
        let r = &self.positives;
        let floor = r.smallest_at_least.at(k);
        if r.smallest_exact {
            return floor;
        }
        let mut s = floor.max(1);
        if let Some(par) = r.smallest_parity {
            if s.rem_euclid(2) != i64::from(par) {
                s += 1;
            }
        }
        s
    }

    fn first_gap(&self) -> i64 {
        let r = &self.positives;
        let mut g = i64::from(r.min_gap);
        if let Some(par) = r.gap_parity {
            if g % 2 != i64::from(par) {
                g += 1;
            }
        }
        g
    }

    /// Least possible sum of `k` positive parts.
    pub fn min_positive_total(&self, k: usize) -> i64 {
        let k = k as i64;
        k * self.first_part(k as usize) + self.first_gap() * k * (k - 1) / 2
    }

    /// Least weight of a member with `k` positive parts.
    pub fn min_weight(&self, k: usize) -> i64 {
        self.min_positive_total(k) - self.negatives.max_total(k)
    }

    /// Largest number of positive parts a member of weight `n` can have:
    /// one less than the first `k` whose least weight exceeds `n`. `None`
    /// when even `k = 0` is too heavy.
    pub fn max_positive_parts(&self, n: i64, class: &'static str) -> Result<Option<usize>> {
        (0..=MAX_POSITIVE_PARTS)
            .find(|&k| self.min_weight(k) > n)
            .map(|k| k.checked_sub(1))
            .ok_or(Error::Unbounded { class })
    }

    pub fn admits(&self, s: &SignedPartition) -> bool {
        let r = &self.positives;
        let asc = s.positives().ascending();
        let k = asc.len();
        if k < r.min_count {
            return false;
        }
        if let Some(&first) = asc.first() {
            let floor = r.smallest_at_least.at(k);
            let first = i64::from(first);
            if first < floor || (r.smallest_exact && first != floor) {
                return false;
            }
            if r.smallest_parity.is_some_and(|par| first % 2 != i64::from(par)) {
                return false;
            }
        }
        for w in asc.windows(2) {
            let gap = w[1] - w[0];
            if gap < r.min_gap || r.gap_parity.is_some_and(|par| gap % 2 != par) {
                return false;
            }
        }
        let neg = &self.negatives;
        let top = neg.at_most.at(k);
        let parts = s.negatives().parts();
        for &x in parts {
            if i64::from(x) > top || x % neg.modulus != neg.residue {
                return false;
            }
        }
        let mut i = 0;
        while i < parts.len() {
            let run = parts[i..].iter().take_while(|&&y| y == parts[i]).count();
            if run as u32 > neg.max_multiplicity {
                return false;
            }
            i += run;
        }
        self.threshold.holds(asc.first().copied(), s.negatives())
    }

    /// All members of weight `n`, in a fixed order.
    pub fn enumerate(&self, n: i64, class: &'static str) -> Result<Vec<SignedPartition>> {
        let mut out = Vec::new();
        let Some(k_max) = self.max_positive_parts(n, class)? else {
            return Ok(out);
        };
        for k in self.positives.min_count..=k_max {
            let allowed = self.negatives.allowed(k);
            let budget = n + self.negatives.max_total(k);
            if budget < 0 {
                continue;
            }
            let mut current = Vec::with_capacity(k);
            self.positive_tuples(k, budget, &mut current, &mut |asc: &[u32]| {
                let total: i64 = asc.iter().map(|&p| i64::from(p)).sum();
                if total < n {
                    return;
                }
                let positives = Partition::from_descending_unchecked(asc.iter().rev().copied().collect());
                let mut negs = Vec::new();
                negative_multisets(
                    &allowed,
                    allowed.len(),
                    self.negatives.max_multiplicity,
                    total - n,
                    &mut negs,
                    &mut |neg: &[u32]| {
                        let negatives = Partition::from_descending_unchecked(neg.to_vec());
                        if self.threshold.holds(asc.first().copied(), &negatives) {
                            out.push(SignedPartition::new(positives.clone(), negatives));
                        }
                    },
                );
            });
        }
        Ok(out)
    }

    // Ascending positive tuples of length k with sum <= budget.
    fn positive_tuples(&self, k: usize, budget: i64, current: &mut Vec<u32>, emit: &mut dyn FnMut(&[u32])) {
        let placed = current.len();
        if placed == k {
            emit(current);
            return;
        }
        let used: i64 = current.iter().map(|&p| i64::from(p)).sum();
        let left = budget - used;
        let remaining = (k - placed) as i64;
        let gap = self.first_gap();
        let (mut x, step, exact) = match current.last() {
            None => {
                let step = if self.positives.smallest_parity.is_some() { 2 } else { 1 };
                (self.first_part(k), step, self.positives.smallest_exact)
            }
            Some(&prev) => {
                let step = if self.positives.gap_parity.is_some() { 2 } else { 1 };
                (i64::from(prev) + gap, step, false)
            }
        };
        if x < 1 {
            return;
        }
        // x for this slot, then each later slot at least `gap` above the last.
        while remaining * x + gap * remaining * (remaining - 1) / 2 <= left {
            current.push(x as u32);
            self.positive_tuples(k, budget, current, emit);
            current.pop();
            if exact {
                break;
            }
            x += step;
        }
    }
}

// Weakly decreasing multisets over allowed[..upto] summing to target.
fn negative_multisets(
    allowed: &[u32],
    upto: usize,
    max_mult: u32,
    target: i64,
    current: &mut Vec<u32>,
    emit: &mut dyn FnMut(&[u32]),
) {
    if target == 0 {
        emit(current);
        return;
    }
    for idx in (0..upto).rev() {
        let x = allowed[idx];
        let capacity: i64 = allowed[..=idx].iter().map(|&y| i64::from(y)).sum::<i64>() * i64::from(max_mult);
        if capacity < target {
            break;
        }
        for m in 1..=max_mult {
            let spent = i64::from(x) * i64::from(m);
            if spent > target {
                break;
            }
            current.extend(std::iter::repeat_n(x, m as usize));
            negative_multisets(allowed, idx, max_mult, target - spent, current, emit);
            current.truncate(current.len() - m as usize);
        }
    }
}

impl OrdinaryRule {
    pub fn admits(&self, p: &Partition) -> bool {
        let parts = p.parts();
        if parts.iter().any(|&x| x < self.min_part) {
            return false;
        }
        if !parts.windows(2).all(|w| self.pair.admits(w[0], w[1])) {
            return false;
        }
        match (&self.smallest_one_of, p.smallest()) {
            (Some(set), Some(s)) => set.contains(&s),
            (Some(_), None) => false,
            (None, _) => true,
        }
    }

    /// All members of weight `n`, largest part first, lexicographically decreasing.
    pub fn enumerate(&self, n: i64) -> Vec<Partition> {
        let mut out = Vec::new();
        if n < 0 {
            return out;
        }
        let mut current = Vec::new();
        self.extend(n as u32, None, &mut current, &mut out);
        out
    }

    fn extend(&self, left: u32, prev: Option<u32>, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if left == 0 {
            let p = Partition::from_descending_unchecked(current.clone());
            if self
                .smallest_one_of
                .as_ref()
                .is_none_or(|set| p.smallest().is_some_and(|s| set.contains(&s)))
            {
                out.push(p);
            }
            return;
        }
        let top = prev.map_or(left, |p| p.min(left));
        for x in (self.min_part.max(1)..=top).rev() {
            if prev.is_some_and(|p| !self.pair.admits(p, x)) {
                continue;
            }
            current.push(x);
            self.extend(left - x, Some(x), current, out);
            current.pop();
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ClassRule {
    Ordinary(OrdinaryRule),
    Signed(SignedRule),
}

/// An object of either side.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Member {
    Ordinary(Partition),
    Signed(SignedPartition),
}

impl Member {
    pub fn weight(&self) -> i64 {
        match self {
            Member::Ordinary(p) => p.weight() as i64,
            Member::Signed(s) => s.weight(),
        }
    }
}

impl fmt::Display for Member {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Member::Ordinary(p) => p.fmt(f),
            Member::Signed(s) => s.fmt(f),
        }
    }
}

impl From<Partition> for Member {
    fn from(p: Partition) -> Self {
        Member::Ordinary(p)
    }
}

impl From<SignedPartition> for Member {
    fn from(s: SignedPartition) -> Self {
        Member::Signed(s)
    }
}

fn ordinary(min_part: u32, pair: PairRule) -> ClassRule {
    ClassRule::Ordinary(OrdinaryRule {
        min_part,
        pair,
        smallest_one_of: None,
    })
}

fn positives(smallest_at_least: Linear, parity: u32, min_gap: u32, gap_parity: u32) -> PositiveRule {
    PositiveRule {
        min_count: 0,
        smallest_at_least,
        smallest_exact: false,
        smallest_parity: Some(parity),
        min_gap,
        gap_parity: Some(gap_parity),
    }
}

fn negatives(modulus: u32, residue: u32, at_most: Linear) -> NegativeRule {
    NegativeRule {
        modulus,
        residue,
        at_most,
        max_multiplicity: 1,
    }
}

fn signed(positives: PositiveRule, negatives: NegativeRule) -> ClassRule {
    ClassRule::Signed(SignedRule {
        positives,
        negatives,
        threshold: Threshold::None,
    })
}

const ONE: Linear = Linear::new(0, 1);
const UP_TO_K: Linear = Linear::new(1, 0);
const UP_TO_2K: Linear = Linear::new(2, 0);
const BELOW_2K: Linear = Linear::new(2, -1);

impl ClassId {
    /// The defining clauses of the class.
    pub fn rule(self) -> ClassRule {
        use ClassId::*;
        match self {
            P => ordinary(1, PairRule::Any),
            D => ordinary(1, PairRule::MinDifference(1)),
            Rr1 => ordinary(1, PairRule::MinDifference(2)),
            Rr2 => ordinary(2, PairRule::MinDifference(2)),
            Gg1 => ordinary(1, PairRule::EvenPairsFour),
            Gg2 => ordinary(3, PairRule::EvenPairsFour),
            GgDiff => ClassRule::Ordinary(OrdinaryRule {
                min_part: 1,
                pair: PairRule::EvenPairsFour,
                smallest_one_of: Some(vec![1, 2]),
            }),
            Lg1 => ordinary(1, PairRule::OddPairsFour),
            Lg2 => ordinary(2, PairRule::OddPairsFour),

            // Alternating parity, smallest even; distinct negatives at most k.
            PSigned => signed(positives(ONE, 0, 1, 1), negatives(1, 0, UP_TO_K)),
            // Even and distinct.
            DSigned => signed(positives(ONE, 0, 2, 0), negatives(1, 0, UP_TO_K)),
            Rr1Signed => signed(positives(ONE, 0, 3, 1), negatives(1, 0, UP_TO_K)),
            // No 1s, smallest odd.
            Rr2Signed => signed(positives(Linear::new(0, 2), 1, 3, 1), negatives(1, 0, UP_TO_K)),
            // Even, each at least 2k; odd distinct negatives at most 2k.
            Gg1AndrewsSigned => signed(positives(UP_TO_2K, 0, 0, 0), negatives(2, 1, UP_TO_2K)),
            Gg1PrimeSigned => signed(positives(ONE, 0, 4, 0), negatives(2, 1, BELOW_2K)),
            Gg2AndrewsSigned => signed(positives(Linear::new(2, 2), 0, 0, 0), negatives(2, 1, UP_TO_2K)),
            Gg2PrimeSigned => signed(positives(Linear::new(0, 4), 0, 4, 0), negatives(2, 1, BELOW_2K)),
            // Even, smallest exactly 2k; odd distinct negatives below 2k.
            GgDiffSigned => ClassRule::Signed(SignedRule {
                positives: PositiveRule {
                    min_count: 1,
                    smallest_exact: true,
                    ..positives(UP_TO_2K, 0, 0, 0)
                },
                negatives: negatives(2, 1, BELOW_2K),
                threshold: Threshold::None,
            }),
            Lg1ESigned => ClassRule::Signed(SignedRule {
                positives: positives(ONE, 0, 2, 0),
                negatives: negatives(2, 1, BELOW_2K),
                threshold: Threshold::AboveTwiceCountMinusOne,
            }),
            Lg2TSigned => ClassRule::Signed(SignedRule {
                positives: positives(ONE, 0, 2, 0),
                negatives: negatives(2, 1, BELOW_2K),
                threshold: Threshold::AboveTwiceCountPlusOne,
            }),
            // Odd, at least 5, differing by at least 4; odd negatives at most 2k+1.
            Lg1ShiftSigned => signed(
                positives(Linear::new(0, 5), 1, 4, 0),
                negatives(2, 1, Linear::new(2, 1)),
            ),
            // Even distinct; negatives 1 mod 4, at most 2k.
            Lg1PrimeSigned => signed(positives(ONE, 0, 2, 0), negatives(4, 1, UP_TO_2K)),
            // Odd, each at least 2k.
            Lg2AndrewsSigned => signed(positives(UP_TO_2K, 1, 0, 0), negatives(2, 1, UP_TO_2K)),
            Lg2PrimeSigned => signed(positives(Linear::new(0, 3), 1, 4, 0), negatives(2, 1, BELOW_2K)),
            // Even distinct; negatives 3 mod 4, below 2k.
            Lg2HSigned => signed(positives(ONE, 0, 2, 0), negatives(4, 3, BELOW_2K)),
        }
    }

    /// Plain-language definition.
    pub fn description(self) -> &'static str {
        use ClassId::*;
        match self {
            P => "all partitions",
            D => "partitions into distinct parts",
            Rr1 => "parts differ by at least 2",
            Rr2 => "parts at least 2, differing by at least 2",
            Gg1 => "parts differ by at least 2, by at least 4 when both are even",
            Gg2 => "as GG1 with every part at least 3",
            GgDiff => "GG1 partitions whose smallest part is 1 or 2",
            Lg1 => "parts differ by at least 2, by at least 4 when both are odd",
            Lg2 => "as LG1 with no part equal to 1",
            PSigned => "positives alternate in parity, smallest even; negatives distinct, at most l+",
            DSigned => "positives even and distinct; negatives distinct, at most l+",
            Rr1Signed => {
                "positives differ by at least 3 and alternate in parity, smallest even; negatives distinct, at most l+"
            }
            Rr2Signed => {
                "positives differ by at least 3 and alternate in parity, smallest odd, no 1s; negatives distinct, at most l+"
            }
            Gg1AndrewsSigned => "positives even, each at least 2l+; negatives odd, distinct, at most 2l+",
            Gg1PrimeSigned => "positives even, differing by at least 4; negatives odd, distinct, at most 2l+ - 1",
            Gg2AndrewsSigned => "positives even, each at least 2(l+ + 1); negatives odd, distinct, at most 2l+",
            Gg2PrimeSigned => {
                "positives even, at least 4, differing by at least 4; negatives odd, distinct, at most 2l+ - 1"
            }
            GgDiffSigned => {
                "positives even, each at least 2l+ with 2l+ a part; negatives odd, distinct, below 2l+"
            }
            Lg1ESigned => {
                "k positives even and distinct; t negatives odd, distinct, below 2k; smallest positive above 2t - [u = 1]"
            }
            Lg2TSigned => {
                "k positives even and distinct; t negatives odd, distinct, below 2k; smallest positive above 2t + [u = 1]"
            }
            Lg1ShiftSigned => {
                "positives odd, at least 5, differing by at least 4; negatives odd, distinct, at most 2l+ + 1"
            }
            Lg1PrimeSigned => "positives even and distinct; negatives distinct, 1 mod 4, at most 2l+",
            Lg2AndrewsSigned => "positives odd, each at least 2l+; negatives odd, distinct, at most 2l+",
            Lg2PrimeSigned => {
                "positives odd, at least 3, differing by at least 4; negatives odd, distinct, at most 2l+ - 1"
            }
            Lg2HSigned => "positives even and distinct; negatives distinct, 3 mod 4, below 2l+",
        }
    }
}

/// Catalog row for a class.
#[derive(Clone, Debug, Serialize)]
pub struct ClassCatalogEntry {
    pub class: &'static str,
    pub side: Side,
    pub description: &'static str,
    pub rule: ClassRule,
}

pub fn catalog_entry(class: ClassId) -> ClassCatalogEntry {
    ClassCatalogEntry {
        class: class.name(),
        side: class.side(),
        description: class.description(),
        rule: class.rule(),
    }
}

impl ClassRule {
    pub fn side(&self) -> Side {
        match self {
            ClassRule::Ordinary(_) => Side::Ordinary,
            ClassRule::Signed(_) => Side::Signed,
        }
    }

    pub fn admits(&self, class: &'static str, object: &Member) -> Result<bool> {
        match (self, object) {
            (ClassRule::Ordinary(r), Member::Ordinary(p)) => Ok(r.admits(p)),
            (ClassRule::Signed(r), Member::Signed(s)) => Ok(r.admits(s)),
            (ClassRule::Ordinary(_), _) => Err(Error::SideMismatch {
                class,
                expected: "ordinary",
            }),
            (ClassRule::Signed(_), _) => Err(Error::SideMismatch {
                class,
                expected: "signed",
            }),
        }
    }

    pub fn enumerate(&self, class: &'static str, n: i64) -> Result<Vec<Member>> {
        Ok(match self {
            ClassRule::Ordinary(r) => r.enumerate(n).into_iter().map(Member::Ordinary).collect(),
            ClassRule::Signed(r) => r.enumerate(n, class)?.into_iter().map(Member::Signed).collect(),
        })
    }

    pub fn count(&self, class: &'static str, n: i64) -> Result<u64> {
        Ok(match self {
            ClassRule::Ordinary(r) => r.enumerate(n).len() as u64,
            ClassRule::Signed(r) => r.enumerate(n, class)?.len() as u64,
        })
    }
}

pub fn is_member(class: ClassId, object: &Member) -> Result<bool> {
    class.rule().admits(class.name(), object)
}

/// Members of weight `n`. Signed classes accept negative `n`.
pub fn enumerate_class(class: ClassId, n: i64) -> Result<Vec<Member>> {
    class.rule().enumerate(class.name(), n)
}

pub fn count_class(class: ClassId, n: i64) -> Result<u64> {
    class.rule().count(class.name(), n)
}

/// Enumerates an ordinary class; side mismatch is an error.
pub fn enumerate_ordinary(class: ClassId, n: i64) -> Result<Vec<Partition>> {
    match class.rule() {
        ClassRule::Ordinary(r) => Ok(r.enumerate(n)),
        ClassRule::Signed(_) => Err(Error::SideMismatch {
            class: class.name(),
            expected: "signed",
        }),
    }
}

/// Enumerates a signed class; side mismatch is an error.
pub fn enumerate_signed(class: ClassId, n: i64) -> Result<Vec<SignedPartition>> {
    match class.rule() {
        ClassRule::Signed(r) => r.enumerate(n, class.name()),
        ClassRule::Ordinary(_) => Err(Error::SideMismatch {
            class: class.name(),
            expected: "ordinary",
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(text: &str) -> Member {
        Member::Signed(text.parse().unwrap())
    }

    fn op(text: &str) -> Member {
        Member::Ordinary(text.parse().unwrap())
    }

    #[test]
    fn ids_round_trip() {
        for &c in ClassId::ALL {
            assert_eq!(c.name().parse::<ClassId>().unwrap(), c);
            assert_eq!(c.rule().side(), c.side());
        }
        let err = "RR9".parse::<ClassId>().unwrap_err();
        assert!(err.to_string().contains("LG2_H_SIGNED"));
    }

    #[test]
    fn membership_examples() {
        assert!(is_member(ClassId::Gg1, &op("20,17,15,12,9,7,4,1")).unwrap());
        assert!(is_member(ClassId::Gg1PrimeSigned, &sp("30,26,22,18,14,10,6,2,-3,-5,-9,-11,-15")).unwrap());
        assert!(is_member(
            ClassId::Gg1AndrewsSigned,
            &sp("16,16,16,16,16,16,16,16,-3,-5,-9,-11,-15")
        )
        .unwrap());
        assert!(!is_member(ClassId::Rr1, &op("2,1")).unwrap());
        assert!(is_member(ClassId::PSigned, &sp("22,15,14,9,6,5,4,3,2,-1,-2,-3,-7,-8,-9")).unwrap());
        assert!(is_member(ClassId::Lg1ESigned, &sp("32,28,26,24,22,20,18,16,14,-3,-5,-9,-11,-17")).unwrap());
    }

    #[test]
    fn membership_rejections() {
        // Negative part larger than the number of positives.
        assert!(!is_member(ClassId::PSigned, &sp("4,-2")).unwrap());
        // Smallest part odd.
        assert!(!is_member(ClassId::PSigned, &sp("3,-1")).unwrap());
        // Repeated negative.
        assert!(!is_member(ClassId::Gg1AndrewsSigned, &sp("4,4,-1,-1")).unwrap());
        // Positive below 2k.
        assert!(!is_member(ClassId::Gg1AndrewsSigned, &sp("4,2")).unwrap());
        // Threshold: one negative (u = 3), smallest positive 2 is not above 2.
        assert!(!is_member(ClassId::Lg1ESigned, &sp("6,2,-3")).unwrap());
        assert!(is_member(ClassId::Lg1ESigned, &sp("6,4,-3")).unwrap());
        assert!(!is_member(ClassId::GgDiffSigned, &SignedPartition::empty().into()).unwrap());
    }

    #[test]
    fn side_mismatch() {
        assert!(matches!(
            is_member(ClassId::Rr1, &sp("4,-1")),
            Err(Error::SideMismatch { .. })
        ));
        assert!(matches!(
            is_member(ClassId::Rr1Signed, &op("4,1")),
            Err(Error::SideMismatch { .. })
        ));
    }

    #[test]
    fn enumeration_examples() {
        let got: Vec<String> = enumerate_class(ClassId::PSigned, 3)
            .unwrap()
            .iter()
            .map(|m| m.to_string())
            .collect();
        let mut got = got;
        got.sort();
        let mut want = vec!["4,-1".to_string(), "3,2,-2".to_string(), "4,3,2,-1,-2,-3".to_string()];
        want.sort();
        assert_eq!(got, want);

        let gg1: Vec<String> = enumerate_class(ClassId::Gg1, 8)
            .unwrap()
            .iter()
            .map(|m| m.to_string())
            .collect();
        assert_eq!(gg1, vec!["8", "7,1", "6,2", "5,3"]);

        for &c in ClassId::ALL {
            let members = enumerate_class(c, 0).unwrap();
            if matches!(c, ClassId::GgDiff | ClassId::GgDiffSigned) {
                assert!(members.is_empty());
            } else {
                assert_eq!(members.len(), 1, "{c}");
                assert_eq!(members[0].to_string(), "(empty)");
            }
        }
    }

    #[test]
    fn counts() {
        assert_eq!(count_class(ClassId::Rr1, 9).unwrap(), 5);
        assert_eq!(count_class(ClassId::P, 5).unwrap(), 7);
        assert_eq!(count_class(ClassId::D, 0).unwrap(), 1);
        assert_eq!(count_class(ClassId::P, -1).unwrap(), 0);
        // The empty object sits at weight 0; (-1) alone at weight -1.
        assert_eq!(count_class(ClassId::Lg1ShiftSigned, -1).unwrap(), 1);
    }

    #[test]
    fn least_weight_is_nondecreasing() {
        for &c in ClassId::ALL {
            if let ClassRule::Signed(r) = c.rule() {
                let w: Vec<i64> = (0..300).map(|k| r.min_weight(k)).collect();
                assert!(w.windows(2).all(|p| p[0] <= p[1]), "{c}: {:?}", &w[..10]);
            }
        }
    }

    #[test]
    fn enumerated_members_are_members_without_duplicates() {
        for &c in ClassId::ALL {
            for n in -1..=14 {
                let members = enumerate_class(c, n).unwrap();
                let mut sorted = members.clone();
                sorted.sort();
                sorted.dedup();
                assert_eq!(sorted.len(), members.len(), "{c} n={n}");
                for m in &members {
                    assert_eq!(m.weight(), n, "{c} {m}");
                    assert!(is_member(c, m).unwrap(), "{c} {m}");
                }
            }
        }
    }

    #[test]
    fn unbounded_rule_is_reported() {
        let ClassRule::Signed(mut rule) = ClassId::Gg1AndrewsSigned.rule() else {
            unreachable!()
        };
        rule.negatives.max_multiplicity = 1000;
        assert_eq!(rule.enumerate(3, "X").unwrap_err(), Error::Unbounded { class: "X" });
    }
}
