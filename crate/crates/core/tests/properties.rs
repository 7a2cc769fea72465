use proptest::prelude::*;

use sigpart_core::bijections::{map_f, map_f_inverse, t_of};
use sigpart_core::classes::{is_member, ClassId, Member};
use sigpart_core::harness::verify_bijection;
use sigpart_core::qseries::{series_mul, TruncatedSeries};
use sigpart_core::{sum_side, BVariant, BinarySequence, IdentityId, MapId, Partition, SignedPartition};

fn parts() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(1u32..30, 0..12)
}

fn partition() -> impl Strategy<Value = Partition> {
    parts().prop_map(|p| Partition::new(p).unwrap())
}

fn signed() -> impl Strategy<Value = SignedPartition> {
    (partition(), partition()).prop_map(|(p, n)| SignedPartition::new(p, n))
}

fn series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(-50i64..50, order + 1)
        .prop_map(move |c| TruncatedSeries::from_coefficients(c.into_iter().map(Into::into), order))
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(p in partition()) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().weight(), p.weight());
        prop_assert_eq!(p.conjugate().len() as u32, p.largest().unwrap_or(0));
    }

    #[test]
    fn canonical_form_ignores_order(mut v in parts()) {
        let a = Partition::new(v.clone()).unwrap();
        v.reverse();
        let b = Partition::new(v).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(Partition::new(a.parts().to_vec()).unwrap(), a.clone());
        prop_assert!(a.parts().windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn text_round_trip(s in signed()) {
        let text = s.to_string();
        prop_assert_eq!(text.parse::<SignedPartition>().unwrap(), s.clone());
        prop_assert_eq!(s.weight(), s.positives().weight() as i64 - s.negatives().weight() as i64);
    }

    #[test]
    fn t_is_gap_free_and_congruent(bits in prop::collection::vec(0u8..2, 1..20)) {
        let b = BinarySequence::new(bits.clone());
        let t = t_of(&b).unwrap();
        prop_assert_eq!(t[0], u32::from(bits[0]));
        for (i, w) in t.windows(2).enumerate() {
            prop_assert!(w[1] == w[0] || w[1] == w[0] + 1);
            prop_assert_eq!(w[1] % 2, u32::from(bits[i + 1]));
        }
    }

    #[test]
    fn f_round_trips_on_any_partition(p in partition()) {
        for variant in [BVariant::ZeroStart, BVariant::OneStart, BVariant::AllZero] {
            let img = map_f(&p, variant);
            prop_assert_eq!(img.weight(), p.weight() as i64);
            prop_assert_eq!(map_f_inverse(&img).unwrap(), p.clone());
        }
    }

    #[test]
    fn every_map_round_trips_inside_its_class(p in partition()) {
        for &map in MapId::ALL {
            if !is_member(map.source(), &Member::Ordinary(p.clone())).unwrap() {
                continue;
            }
            let img = map.forward(&p).unwrap();
            prop_assert!(is_member(map.target(), &Member::Signed(img.clone())).unwrap());
            prop_assert_eq!(map.inverse(&img).unwrap(), p.clone());
        }
    }

    #[test]
    fn truncation_commutes_with_products(a in series(15), b in series(15), k in 0usize..15) {
        let full = series_mul(&a, &b).unwrap();
        let short = series_mul(&a.restrict(k), &b.restrict(k)).unwrap();
        prop_assert_eq!(full.restrict(k), short);
    }

    #[test]
    fn sum_sides_are_stable_under_truncation(i in 0usize..14, k in 0usize..30) {
        let id = IdentityId::ALL[i];
        let long = sum_side(id, 30);
        prop_assert_eq!(long.restrict(k), sum_side(id, k));
        prop_assert!(long.is_nonnegative());
    }
}

/// Every partition of weight up to 60, walked without storing any.
#[test]
fn conjugation_exhaustive_to_weight_60() {
    fn walk(n: u32, max: u32, prefix: &mut Vec<u32>, seen: &mut u64) {
        if n == 0 {
            let p = Partition::new(prefix.iter().copied()).unwrap();
            let c = p.conjugate();
            assert_eq!(c.conjugate(), p);
            assert_eq!(c.weight(), p.weight());
            *seen += 1;
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            walk(n - part, part, prefix, seen);
            prefix.pop();
        }
    }
    let mut seen = 0;
    for n in 0..=60 {
        walk(n, n, &mut Vec::new(), &mut seen);
    }
    // Sum of p(n) for n <= 60.
    assert_eq!(seen, 6_639_349);
}

#[test]
fn maps_sweep_small_weights() {
    for &map in MapId::ALL {
        let r = verify_bijection(map, 20);
        assert!(r.passed(), "{}", r.summary());
    }
}

#[test]
fn classes_are_disjoint_by_side() {
    let p = Partition::new([3, 1]).unwrap();
    assert!(is_member(ClassId::P, &Member::Ordinary(p.clone())).is_ok());
    assert!(is_member(ClassId::PSigned, &Member::Ordinary(p)).is_err());
}
