//! The catalog of identities: which classes are equinumerous, which maps
//! realize the equality, and which series sides exist.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bijections::MapId;
use crate::classes::ClassId;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    PSigned,
    DSigned,
    Rr1Signed,
    Rr2Signed,
    Gg1Andrews,
    Gg1Prime,
    Gg2ThreeWay,
    GgDiff,
    Lg1E,
    Lg2T,
    Lg1Shift,
    Lg1Prime,
    Lg2ThreeWay,
    Lg2H,
}

impl IdentityId {
    pub const ALL: [IdentityId; 14] = [
        IdentityId::PSigned,
        IdentityId::DSigned,
        IdentityId::Rr1Signed,
        IdentityId::Rr2Signed,
        IdentityId::Gg1Andrews,
        IdentityId::Gg1Prime,
        IdentityId::Gg2ThreeWay,
        IdentityId::GgDiff,
        IdentityId::Lg1E,
        IdentityId::Lg2T,
        IdentityId::Lg1Shift,
        IdentityId::Lg1Prime,
        IdentityId::Lg2ThreeWay,
        IdentityId::Lg2H,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::PSigned => "P_SIGNED",
            IdentityId::DSigned => "D_SIGNED",
            IdentityId::Rr1Signed => "RR1_SIGNED",
            IdentityId::Rr2Signed => "RR2_SIGNED",
            IdentityId::Gg1Andrews => "GG1_ANDREWS",
            IdentityId::Gg1Prime => "GG1_PRIME",
            IdentityId::Gg2ThreeWay => "GG2_3WAY",
            IdentityId::GgDiff => "GG_DIFF",
            IdentityId::Lg1E => "LG1_E",
            IdentityId::Lg2T => "LG2_T",
            IdentityId::Lg1Shift => "LG1_SHIFT",
            IdentityId::Lg1Prime => "LG1_PRIME",
            IdentityId::Lg2ThreeWay => "LG2_3WAY",
            IdentityId::Lg2H => "LG2_H",
        }
    }

    pub fn descriptor(self) -> IdentityDescriptor {
        descriptor(self)
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Accepts the identity names, and an ordinary class name when exactly one
/// identity is built on that class (`RR1` resolves to `RR1_SIGNED`).
impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Some(id) = IdentityId::ALL.iter().find(|id| id.name() == s) {
            return Ok(*id);
        }
        let by_class: Vec<IdentityId> = IdentityId::ALL
            .iter()
            .copied()
            .filter(|id| id.descriptor().ordinary.name() == s)
            .collect();
        match by_class.as_slice() {
            [only] => Ok(*only),
            _ => Err(Error::UnknownId {
                kind: "identity",
                given: s.to_string(),
                valid: IdentityId::ALL.iter().map(|i| i.name()).collect::<Vec<_>>().join(", "),
            }),
        }
    }
}

/// Catalog entry for one identity.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityDescriptor {
    #[serde(serialize_with = "ser_name")]
    pub id: IdentityId,
    /// The equality in words.
    pub statement: &'static str,
    #[serde(serialize_with = "ser_name")]
    pub ordinary: ClassId,
    #[serde(serialize_with = "ser_names")]
    pub signed: Vec<ClassId>,
    #[serde(serialize_with = "ser_names")]
    pub maps: Vec<MapId>,
    /// Signed weight = ordinary weight + offset.
    pub index_offset: i64,
    pub has_product: bool,
    /// The sum side must also equal the difference of these two sum sides.
    #[serde(serialize_with = "ser_pair")]
    pub difference_of: Option<(IdentityId, IdentityId)>,
    /// How prose/series readings were resolved for this entry.
    pub notes: &'static str,
}

fn ser_name<S: serde::Serializer, T: fmt::Display>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn ser_names<S: serde::Serializer, T: fmt::Display>(v: &[T], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

fn ser_pair<S: serde::Serializer>(v: &Option<(IdentityId, IdentityId)>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some((a, b)) => s.collect_seq([a.name(), b.name()]),
        None => s.serialize_none(),
    }
}

fn descriptor(id: IdentityId) -> IdentityDescriptor {
    use ClassId as C;
    use IdentityId as I;
    let base = |statement, ordinary, signed: &[ClassId], maps: &[MapId]| IdentityDescriptor {
        id,
        statement,
        ordinary,
        signed: signed.to_vec(),
        maps: maps.to_vec(),
        index_offset: 0,
        has_product: crate::qseries::product_residues(id).is_ok(),
        difference_of: None,
        notes: "",
    };
    match id {
        I::PSigned => IdentityDescriptor {
            notes: "negatives distinct and at most l+",
            ..base("p(n) = p_-1(n)", C::P, &[C::PSigned], &[MapId::FP])
        },
        I::DSigned => IdentityDescriptor {
            notes: "negatives read as distinct, as the series factor forces",
            ..base("D(n) = D_-1(n)", C::D, &[C::DSigned], &[MapId::FD])
        },
        I::Rr1Signed => IdentityDescriptor {
            notes: "negatives read as distinct, as the series factor forces",
            ..base("RR_1(n) = RR_-1(n)", C::Rr1, &[C::Rr1Signed], &[MapId::FRr1])
        },
        I::Rr2Signed => IdentityDescriptor {
            notes: "negatives read as distinct, as the series factor forces",
            ..base("RR_2(n) = RR_-2(n)", C::Rr2, &[C::Rr2Signed], &[MapId::FRr2])
        },
        I::Gg1Andrews => base(
            "GG_-1(n) = GG_1(n)",
            C::Gg1,
            &[C::Gg1AndrewsSigned],
            &[MapId::HGg1],
        ),
        I::Gg1Prime => base("GG'_-1(n) = GG_1(n)", C::Gg1, &[C::Gg1PrimeSigned], &[MapId::GGg1]),
        I::Gg2ThreeWay => base(
            "GG_2(n) = GG_-2(n) = GG'_-2(n)",
            C::Gg2,
            &[C::Gg2AndrewsSigned, C::Gg2PrimeSigned],
            &[MapId::HGg2, MapId::GGg2],
        ),
        I::GgDiff => IdentityDescriptor {
            difference_of: Some((I::Gg1Andrews, I::Gg2ThreeWay)),
            notes: "GG1 partitions cannot hold both 1 and 2, so 'exactly one part equals 1 or 2' is 'smallest part is 1 or 2'",
            ..base(
                "GG_1(n) - GG_2(n) = #{GG_1 partitions with a part 1 or 2}",
                C::GgDiff,
                &[C::GgDiffSigned],
                &[],
            )
        },
        I::Lg1E => IdentityDescriptor {
            notes: "threshold vacuous when there are no negatives",
            ..base("LG_1(n) = E(n)", C::Lg1, &[C::Lg1ESigned], &[MapId::PhiLg1])
        },
        I::Lg2T => IdentityDescriptor {
            notes: "u is the smallest negative part",
            ..base("LG_2(n) = T(n)", C::Lg2, &[C::Lg2TSigned], &[MapId::PhiLg2])
        },
        I::Lg1Shift => IdentityDescriptor {
            index_offset: -1,
            notes: "negatives at most 2l+ + 1 with l+ the number of positives; LG_1(0) pairs with the signed partition (-1) of weight -1",
            ..base("LG_1(n) = LG_-1(n - 1)", C::Lg1, &[C::Lg1ShiftSigned], &[])
        },
        I::Lg1Prime => base("LG_1(n) = LG'_-1(n)", C::Lg1, &[C::Lg1PrimeSigned], &[]),
        I::Lg2ThreeWay => base(
            "LG_2(n) = LG_-2(n) = LG'_-2(n)",
            C::Lg2,
            &[C::Lg2AndrewsSigned, C::Lg2PrimeSigned],
            &[MapId::HLg2, MapId::GLg2],
        ),
        I::Lg2H => IdentityDescriptor {
            notes: "negatives read as distinct; count equality",
            ..base("LG_2(n) = H(n)", C::Lg2, &[C::Lg2HSigned], &[])
        },
    }
}

/// All 14 catalog entries.
pub fn catalog() -> Vec<IdentityDescriptor> {
    IdentityId::ALL.iter().map(|id| id.descriptor()).collect()
}
