//! Explicit maps from ordinary classes onto signed classes, with inverses.
//!
//! The `f` family reads parts smallest first; `h`, `g` and `phi` read them
//! largest first. Each function converts from the canonical storage at its
//! boundary.
//!
//! The free functions are the raw maps: they only fail when the arithmetic
//! itself breaks (a non-positive or misordered part, an inadmissible
//! negative). [`MapId::forward`] and [`MapId::inverse`] additionally check
//! membership of the input and of the result.

use std::fmt;
use std::str::FromStr;

use crate::classes::{ClassId, ClassRule, Member};
use crate::error::{Error, Result};
use crate::model::{BinarySequence, ParityVariant, Partition, SignedPartition};

/// The parity pattern added before taking `t(A)` in the `f` family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BVariant {
    /// (0,1,0,1,...)
    ZeroStart,
    /// (1,0,1,0,...)
    OneStart,
    /// (0,0,0,...)
    AllZero,
}

impl BVariant {
    /// Entry `i`, 0-based.
    pub fn bit(self, i: usize) -> u32 {
        match self {
            BVariant::ZeroStart => (i % 2) as u32,
            BVariant::OneStart => 1 - (i % 2) as u32,
            BVariant::AllZero => 0,
        }
    }
}

/// The least-weight gap-free sequence congruent to `b` termwise.
///
/// `t_1 = b_1`; `t_j` repeats `t_{j-1}` while the bits agree and steps up by
/// one where they differ. A leading run of zeros stays zero.
pub fn t_of(b: &BinarySequence) -> Result<Vec<u32>> {
    let bits = b.bits();
    let (&first, rest) = bits.split_first().ok_or(Error::EmptyBinarySequence)?;
    let mut t = Vec::with_capacity(bits.len());
    t.push(u32::from(first));
    let mut prev = first;
    for &bit in rest {
        let last = *t.last().expect("nonempty");
        t.push(if bit == prev { last } else { last + 1 });
        prev = bit;
    }
    Ok(t)
}

/// The `f` map for the given parity pattern.
pub fn map_f(lambda: &Partition, variant: BVariant) -> SignedPartition {
    let asc = lambda.ascending();
    if asc.is_empty() {
        return SignedPartition::empty();
    }
    let a = BinarySequence::new(
        asc.iter()
            .enumerate()
            .map(|(i, &part)| ((part + variant.bit(i)) % 2) as u8),
    );
    if a.is_all_zero() {
        return lambda.clone().into();
    }
    let t = t_of(&a).expect("nonempty");
    let positives = Partition::from_dropping_zeros(asc.iter().zip(&t).map(|(p, s)| p + s));
    let negatives = Partition::from_dropping_zeros(t).conjugate();
    SignedPartition::new(positives, negatives)
}

/// Inverse of [`map_f`]: subtract the conjugate of the negatives, padded
/// with leading zeros, from the positives (smallest first).
pub fn map_f_inverse(gamma: &SignedPartition) -> Result<Partition> {
    let asc = gamma.positives().ascending();
    let k = asc.len();
    let conj = gamma.negatives().conjugate();
    if conj.len() > k {
        return Err(Error::BadNegativePart {
            part: gamma.negatives().largest().unwrap_or(0),
        });
    }
    let mut t = vec![0u32; k - conj.len()];
    t.extend(conj.ascending());
    let mut parts = Vec::with_capacity(k);
    for (index, (&g, &s)) in asc.iter().zip(&t).enumerate() {
        let value = i64::from(g) - i64::from(s);
        if value <= 0 {
            return Err(Error::NonPositivePart { index, value });
        }
        if parts.last().is_some_and(|&prev| prev > value as u32) {
            return Err(Error::Misordered { index });
        }
        parts.push(value as u32);
    }
    Partition::new(parts)
}

// f_j = 1 iff 2j-1 is a negative part, j = 1..=r. Every negative must be one
// of 1, 3, ..., 2r-1, each at most once.
fn odd_flags(negatives: &Partition, r: usize) -> Result<Vec<u32>> {
    let mut flags = vec![0u32; r];
    for &x in negatives.parts() {
        let j = (x as usize).div_ceil(2);
        if x % 2 == 0 || j > r || flags[j - 1] == 1 {
            return Err(Error::BadNegativePart { part: x });
        }
        flags[j - 1] = 1;
    }
    Ok(flags)
}

// Negative parts 2j-1 for every j with flag 1.
fn flagged_negatives(flags: impl IntoIterator<Item = u32>) -> Partition {
    Partition::from_dropping_zeros(flags.into_iter().enumerate().map(|(i, f)| f * (2 * i as u32 + 1)))
}

fn positive_parts(values: Vec<i64>) -> Result<Partition> {
    if let Some((index, &value)) = values.iter().enumerate().find(|(_, &v)| v <= 0) {
        return Err(Error::NonPositivePart { index, value });
    }
    Partition::new(values.into_iter().map(|v| v as u32))
}

// Checks a recovered partition is strictly decreasing and its parities
// agree with the flags.
fn check_recovered(values: &[i64], flags: &[u32], parity: ParityVariant) -> Result<Partition> {
    for (index, w) in values.windows(2).enumerate() {
        if w[0] <= w[1] {
            return Err(Error::Misordered { index: index + 1 });
        }
    }
    let p = positive_parts(values.to_vec())?;
    for (index, (&v, &f)) in values.iter().zip(flags).enumerate() {
        if parity.indicator(v as u32) != f {
            return Err(Error::ParityMismatch { index });
        }
    }
    Ok(p)
}

// suffix[k] = sum of flags[k+1..]
fn suffix_sums(flags: &[u32]) -> Vec<i64> {
    let mut out = vec![0i64; flags.len()];
    let mut acc = 0i64;
    for k in (0..flags.len()).rev() {
        out[k] = acc;
        acc += i64::from(flags[k]);
    }
    out
}

/// The `h` map: positives `gamma_k + 4k - 2j - 2 + p(gamma_k) + 2 sum_{i>k} p(gamma_i)`,
/// negatives `2k-1` wherever `p(gamma_k) = 1`, indexed largest first.
pub fn map_h(gamma: &Partition, parity: ParityVariant) -> Result<SignedPartition> {
    let parts = gamma.parts();
    let j = parts.len() as i64;
    let flags: Vec<u32> = parts.iter().map(|&g| parity.indicator(g)).collect();
    let tail = suffix_sums(&flags);
    let positives = parts
        .iter()
        .enumerate()
        .map(|(i, &g)| {
            let k = i as i64 + 1;
            i64::from(g) + 4 * k - 2 * j - 2 + i64::from(flags[i]) + 2 * tail[i]
        })
        .collect();
    Ok(SignedPartition::new(
        positive_parts(positives)?,
        flagged_negatives(flags),
    ))
}

/// Inverse of [`map_h`]: `gamma_j = pi_j - 4j + 2r + 2 - f_j - 2 sum_{i>j} f_i`.
pub fn map_h_inverse(pi: &SignedPartition, parity: ParityVariant) -> Result<Partition> {
    let parts = pi.positives().parts();
    let r = parts.len() as i64;
    let flags = odd_flags(pi.negatives(), parts.len())?;
    let tail = suffix_sums(&flags);
    let values: Vec<i64> = parts
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            let j = i as i64 + 1;
            i64::from(p) - 4 * j + 2 * r + 2 - i64::from(flags[i]) - 2 * tail[i]
        })
        .collect();
    check_recovered(&values, &flags, parity)
}

/// The `g` map: `tau_j = lambda_j + p(lambda_j) + 2 sum_{i>j} p(lambda_i)`,
/// negatives `2j-1` wherever `p(lambda_j) = 1`, indexed largest first.
pub fn map_g(lambda: &Partition, parity: ParityVariant) -> Result<SignedPartition> {
    let parts = lambda.parts();
    let flags: Vec<u32> = parts.iter().map(|&g| parity.indicator(g)).collect();
    let tail = suffix_sums(&flags);
    let positives = parts
        .iter()
        .enumerate()
        .map(|(i, &l)| i64::from(l) + i64::from(flags[i]) + 2 * tail[i])
        .collect();
    Ok(SignedPartition::new(
        positive_parts(positives)?,
        flagged_negatives(flags),
    ))
}

/// Inverse of [`map_g`]: `lambda_j = tau_j - f_j - 2 sum_{i>j} f_i`.
pub fn map_g_inverse(tau: &SignedPartition, parity: ParityVariant) -> Result<Partition> {
    let parts = tau.positives().parts();
    let flags = odd_flags(tau.negatives(), parts.len())?;
    let tail = suffix_sums(&flags);
    let values: Vec<i64> = parts
        .iter()
        .enumerate()
        .map(|(i, &t)| i64::from(t) - i64::from(flags[i]) - 2 * tail[i])
        .collect();
    check_recovered(&values, &flags, parity)
}

/// The `phi` map: `pi_j = lambda_j + p(lambda_j) + 2 sum_{i<j} p(lambda_i)`
/// (largest first), and the negative `2m-1` present iff the `m`-th
/// *smallest* part is odd.
pub fn map_phi(lambda: &Partition) -> Result<SignedPartition> {
    let parity = ParityVariant::OddIsOne;
    let parts = lambda.parts();
    let flags: Vec<u32> = parts.iter().map(|&l| parity.indicator(l)).collect();
    let mut head = 0i64;
    let mut positives = Vec::with_capacity(parts.len());
    for (i, &l) in parts.iter().enumerate() {
        positives.push(i64::from(l) + i64::from(flags[i]) + 2 * head);
        head += i64::from(flags[i]);
    }
    let reversed = flags.iter().rev().copied();
    Ok(SignedPartition::new(
        positive_parts(positives)?,
        flagged_negatives(reversed),
    ))
}

/// Inverse of [`map_phi`]: `lambda_j = pi_j - f_{k-j+1} - 2 sum_{i<j} f_{k-i+1}`.
pub fn map_phi_inverse(pi: &SignedPartition) -> Result<Partition> {
    let parts = pi.positives().parts();
    let k = parts.len();
    let flags = odd_flags(pi.negatives(), k)?;
    // flag of the j-th largest part (0-based j) is f_{k-j}.
    let by_part: Vec<u32> = (0..k).map(|j| flags[k - 1 - j]).collect();
    let mut head = 0i64;
    let mut values = Vec::with_capacity(k);
    for (j, &p) in parts.iter().enumerate() {
        values.push(i64::from(p) - i64::from(by_part[j]) - 2 * head);
        head += i64::from(by_part[j]);
    }
    check_recovered(&values, &by_part, ParityVariant::OddIsOne)
}

/// The family a map belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapKind {
    F(BVariant),
    H(ParityVariant),
    G(ParityVariant),
    Phi,
}

macro_rules! map_ids {
    ($($variant:ident => $name:literal, $source:ident -> $target:ident, $kind:expr;)*) => {
        /// Every implemented bijection.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum MapId {
            $($variant,)*
        }

        impl MapId {
            pub const ALL: &'static [MapId] = &[$(MapId::$variant,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(MapId::$variant => $name,)*
                }
            }

            pub fn source(self) -> ClassId {
                match self {
                    $(MapId::$variant => ClassId::$source,)*
                }
            }

            pub fn target(self) -> ClassId {
                match self {
                    $(MapId::$variant => ClassId::$target,)*
                }
            }

            pub fn kind(self) -> MapKind {
                use BVariant::*;
                use ParityVariant::*;
                match self {
                    $(MapId::$variant => $kind,)*
                }
            }
        }
    };
}

map_ids! {
    FP => "F_P", P -> PSigned, MapKind::F(ZeroStart);
    FD => "F_D", D -> DSigned, MapKind::F(AllZero);
    FRr1 => "F_RR1", Rr1 -> Rr1Signed, MapKind::F(ZeroStart);
    FRr2 => "F_RR2", Rr2 -> Rr2Signed, MapKind::F(OneStart);
    HGg1 => "H_GG1", Gg1 -> Gg1AndrewsSigned, MapKind::H(OddIsOne);
    HGg2 => "H_GG2", Gg2 -> Gg2AndrewsSigned, MapKind::H(OddIsOne);
    GGg1 => "G_GG1", Gg1 -> Gg1PrimeSigned, MapKind::G(OddIsOne);
    GGg2 => "G_GG2", Gg2 -> Gg2PrimeSigned, MapKind::G(OddIsOne);
    PhiLg1 => "PHI_LG1", Lg1 -> Lg1ESigned, MapKind::Phi;
    PhiLg2 => "PHI_LG2", Lg2 -> Lg2TSigned, MapKind::Phi;
    HLg2 => "H_LG2", Lg2 -> Lg2AndrewsSigned, MapKind::H(EvenIsOne);
    GLg2 => "G_LG2", Lg2 -> Lg2PrimeSigned, MapKind::G(EvenIsOne);
}

impl fmt::Display for MapId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MapId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MapId::ALL
            .iter()
            .copied()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::UnknownId {
                kind: "map",
                given: s.to_string(),
                valid: MapId::ALL.iter().map(|m| m.name()).collect::<Vec<_>>().join(", "),
            })
    }
}

impl MapId {
    /// The raw forward map, no membership checks.
    pub fn apply(self, lambda: &Partition) -> Result<SignedPartition> {
        match self.kind() {
            MapKind::F(b) => Ok(map_f(lambda, b)),
            MapKind::H(p) => map_h(lambda, p),
            MapKind::G(p) => map_g(lambda, p),
            MapKind::Phi => map_phi(lambda),
        }
    }

    /// The raw inverse map, no membership checks.
    pub fn apply_inverse(self, gamma: &SignedPartition) -> Result<Partition> {
        match self.kind() {
            MapKind::F(_) => map_f_inverse(gamma),
            MapKind::H(p) => map_h_inverse(gamma, p),
            MapKind::G(p) => map_g_inverse(gamma, p),
            MapKind::Phi => map_phi_inverse(gamma),
        }
    }

    /// Forward map with the source and target memberships checked.
    pub fn forward(self, lambda: &Partition) -> Result<SignedPartition> {
        self.forward_with(lambda, &self.source().rule(), &self.target().rule())
    }

    /// Inverse map with the target and source memberships checked.
    pub fn inverse(self, gamma: &SignedPartition) -> Result<Partition> {
        self.inverse_with(gamma, &self.source().rule(), &self.target().rule())
    }

    /// [`MapId::forward`] against explicit class rules.
    pub fn forward_with(self, lambda: &Partition, source: &ClassRule, target: &ClassRule) -> Result<SignedPartition> {
        let src = self.source().name();
        if !source.admits(src, &Member::Ordinary(lambda.clone()))? {
            return Err(Error::NotInClass {
                class: src,
                object: lambda.to_string(),
            });
        }
        let image = self.apply(lambda)?;
        let tgt = self.target().name();
        if !target.admits(tgt, &Member::Signed(image.clone()))? {
            return Err(Error::InvalidImage {
                map: self.name(),
                class: tgt,
                object: image.to_string(),
            });
        }
        Ok(image)
    }

    /// [`MapId::inverse`] against explicit class rules.
    pub fn inverse_with(self, gamma: &SignedPartition, source: &ClassRule, target: &ClassRule) -> Result<Partition> {
        let tgt = self.target().name();
        if !target.admits(tgt, &Member::Signed(gamma.clone()))? {
            return Err(Error::NotInClass {
                class: tgt,
                object: gamma.to_string(),
            });
        }
        let preimage = self.apply_inverse(gamma)?;
        let src = self.source().name();
        if !source.admits(src, &Member::Ordinary(preimage.clone()))? {
            return Err(Error::InvalidImage {
                map: self.name(),
                class: src,
                object: preimage.to_string(),
            });
        }
        Ok(preimage)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> Partition {
        text.parse().unwrap()
    }

    fn sp(text: &str) -> SignedPartition {
        text.parse().unwrap()
    }

    #[test]
    fn t_of_examples() {
        assert_eq!(
            t_of(&BinarySequence::new([0, 1, 1, 0, 1, 0, 0])).unwrap(),
            [0, 1, 1, 2, 3, 4, 4]
        );
        assert_eq!(
            t_of(&BinarySequence::new([1, 1, 0, 0, 0, 1])).unwrap(),
            [1, 1, 2, 2, 2, 3]
        );
        assert_eq!(t_of(&BinarySequence::new([0, 0, 0])).unwrap(), [0, 0, 0]);
        assert_eq!(t_of(&BinarySequence::new([])).unwrap_err(), Error::EmptyBinarySequence);
    }

    #[test]
    fn f_family_examples() {
        let l = p("1,1,1,2,3,6,10,10,16");
        let g = map_f(&l, BVariant::ZeroStart);
        assert_eq!(g, sp("2,3,4,5,6,9,14,15,22,-1,-2,-3,-7,-8,-9"));
        assert_eq!(map_f_inverse(&g).unwrap(), l);

        let l = p("1,2,4,5,13,14");
        let g = map_f(&l, BVariant::AllZero);
        assert_eq!(g, sp("2,4,6,8,16,18,-1,-3,-5,-6"));
        assert_eq!(map_f_inverse(&g).unwrap(), l);

        // 11 + t_4 = 13; an image with 11 there would weigh 50, not 52.
        let l = p("1,4,6,11,14,16");
        let g = map_f(&l, BVariant::ZeroStart);
        assert_eq!(g, sp("2,5,8,13,16,19,-1,-4,-6"));
        assert_eq!(g.weight(), 52);
        assert_eq!(map_f_inverse(&g).unwrap(), l);
    }

    #[test]
    fn f_fixed_point() {
        // Parts alternate in parity from an even smallest part.
        let l = p("2,5,8");
        assert_eq!(map_f(&l, BVariant::ZeroStart), SignedPartition::from(l.clone()));
        assert_eq!(map_f_inverse(&l.clone().into()).unwrap(), l);
    }

    #[test]
    fn f_inverse_rejects_large_negatives() {
        assert!(matches!(
            map_f_inverse(&sp("4,-2")),
            Err(Error::BadNegativePart { part: 2 })
        ));
        assert!(matches!(
            map_f_inverse(&sp("2,-1,-2,-3")),
            Err(Error::BadNegativePart { .. })
        ));
    }

    #[test]
    fn h_examples() {
        let gamma = p("20,17,15,12,9,7,4,1");
        let pi = map_h(&gamma, ParityVariant::OddIsOne).unwrap();
        assert_eq!(pi.to_string(), "16,16,16,16,16,16,16,16,-3,-5,-9,-11,-15");
        assert_eq!(map_h_inverse(&pi, ParityVariant::OddIsOne).unwrap(), gamma);
        assert_eq!(
            map_h(&Partition::empty(), ParityVariant::OddIsOne).unwrap(),
            SignedPartition::empty()
        );
        assert_eq!(
            map_h_inverse(&SignedPartition::empty(), ParityVariant::OddIsOne).unwrap(),
            Partition::empty()
        );
        assert_eq!(map_h(&p("6,2"), ParityVariant::OddIsOne).unwrap(), sp("4,4"));
        assert_eq!(map_h_inverse(&sp("4,4"), ParityVariant::OddIsOne).unwrap(), p("6,2"));
    }

    #[test]
    fn g_examples() {
        let lambda = p("20,17,15,12,9,7,4,1");
        let tau = map_g(&lambda, ParityVariant::OddIsOne).unwrap();
        assert_eq!(tau, sp("30,26,22,18,14,10,6,2,-3,-5,-9,-11,-15"));
        assert_eq!(map_g_inverse(&tau, ParityVariant::OddIsOne).unwrap(), lambda);
        assert_eq!(
            map_g(&Partition::empty(), ParityVariant::OddIsOne).unwrap(),
            SignedPartition::empty()
        );
        assert_eq!(map_g(&p("4"), ParityVariant::OddIsOne).unwrap(), sp("4"));
        assert_eq!(map_g_inverse(&sp("4"), ParityVariant::OddIsOne).unwrap(), p("4"));
    }

    #[test]
    fn phi_examples() {
        let lambda = p("31,26,24,21,17,14,11,7,4");
        let pi = map_phi(&lambda).unwrap();
        assert_eq!(pi, sp("32,28,26,24,22,20,18,16,14,-3,-5,-9,-11,-17"));
        assert_eq!(pi.weight(), 155);
        assert_eq!(map_phi_inverse(&pi).unwrap(), lambda);
        assert_eq!(map_phi(&Partition::empty()).unwrap(), SignedPartition::empty());
        assert_eq!(map_phi(&p("6,4")).unwrap(), sp("6,4"));
        assert_eq!(map_phi_inverse(&sp("6,4")).unwrap(), p("6,4"));
    }

    #[test]
    fn inverse_flags_reject_even_or_large_negatives() {
        assert!(matches!(
            map_g_inverse(&sp("6,-2"), ParityVariant::OddIsOne),
            Err(Error::BadNegativePart { part: 2 })
        ));
        assert!(matches!(
            map_h_inverse(&sp("4,-3"), ParityVariant::OddIsOne),
            Err(Error::BadNegativePart { part: 3 })
        ));
    }

    #[test]
    fn checked_maps_reject_non_members() {
        assert!(matches!(MapId::HGg1.forward(&p("4,2")), Err(Error::NotInClass { .. })));
        assert!(matches!(
            MapId::FRr1.inverse(&sp("3,-1")),
            Err(Error::NotInClass { .. })
        ));
        assert_eq!(MapId::HGg1.forward(&p("20,17,15,12,9,7,4,1")).unwrap().weight(), 85);
    }

    #[test]
    fn map_ids_parse() {
        assert_eq!(MapId::ALL.len(), 12);
        for &m in MapId::ALL {
            assert_eq!(m.name().parse::<MapId>().unwrap(), m);
        }
        assert!("H_GG3".parse::<MapId>().unwrap_err().to_string().contains("PHI_LG1"));
    }
}
