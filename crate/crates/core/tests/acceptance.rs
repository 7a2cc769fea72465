//! One PASS/FAIL line per acceptance criterion, all exact.
//!
//! A plain binary (no libtest harness) so the lines always print:
//! `cargo test -p sigpart-core --test acceptance`.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use sigpart_core::bijections::{
    map_f, map_f_inverse, map_g, map_g_inverse, map_h, map_h_inverse, map_phi, map_phi_inverse, t_of,
};
use sigpart_core::classes::{enumerate_ordinary, ClassId};
use sigpart_core::harness::{mutations, CheckKind, SuiteBounds, Verifier};
use sigpart_core::{
    product_side, sum_side, BVariant, BinarySequence, IdentityId, MapId, ParityVariant, Partition, SignedPartition,
};

const COUNT_MAX: i64 = 40;
const SERIES_ORDER: usize = 60;
const PRODUCT_ORDER: usize = 200;
const BIJECTION_MAX: i64 = 35;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);
type ProductCase = (IdentityId, fn(u32) -> bool);

fn p(text: &str) -> Partition {
    text.parse().unwrap()
}

fn sp(text: &str) -> SignedPartition {
    text.parse().unwrap()
}

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, want {want:?}"))
    }
}

fn worked_examples() -> Outcome {
    expect(
        "t(B)",
        t_of(&BinarySequence::new([0, 1, 1, 0, 1, 0, 0])).unwrap(),
        vec![0, 1, 1, 2, 3, 4, 4],
    )?;

    let l = p("1,1,1,2,3,6,10,10,16");
    let g = map_f(&l, BVariant::ZeroStart);
    expect("p[50]", &g, &sp("2,3,4,5,6,9,14,15,22,-1,-2,-3,-7,-8,-9"))?;
    expect("p[50] back", map_f_inverse(&g).unwrap(), l)?;

    let l = p("1,2,4,5,13,14");
    let g = map_f(&l, BVariant::AllZero);
    expect("D[39]", &g, &sp("2,4,6,8,16,18,-1,-3,-5,-6"))?;
    expect("D[39] back", map_f_inverse(&g).unwrap(), l)?;

    // The fourth positive part is 11 + t_4 = 13. With 11 in its place the
    // image would weigh 50, not 52.
    let l = p("1,4,6,11,14,16");
    expect(
        "RR1[52] t(A)",
        t_of(&BinarySequence::new([1, 1, 0, 0, 0, 1])).unwrap(),
        vec![1, 1, 2, 2, 2, 3],
    )?;
    expect("RR1[52] t(A)'", p("3,2,2,2,1,1").conjugate(), p("6,4,1"))?;
    let g = map_f(&l, BVariant::ZeroStart);
    expect("RR1[52]", &g, &sp("2,5,8,13,16,19,-1,-4,-6"))?;
    expect("RR1[52] weight", g.weight(), 52)?;
    expect("RR1[52] back", map_f_inverse(&g).unwrap(), l)?;
    expect("RR1[52] with 11 for 13", sp("2,5,8,11,16,19,-1,-4,-6").weight(), 50)?;

    let gamma = p("20,17,15,12,9,7,4,1");
    let pi = map_h(&gamma, ParityVariant::OddIsOne).unwrap();
    expect(
        "GG1[85]",
        pi.to_string(),
        "16,16,16,16,16,16,16,16,-3,-5,-9,-11,-15".to_string(),
    )?;
    expect(
        "GG1[85] pre-image",
        map_h_inverse(&pi, ParityVariant::OddIsOne).unwrap(),
        gamma.clone(),
    )?;
    expect("GG1[85] checked", MapId::HGg1.forward(&gamma).unwrap(), pi)?;

    let tau = map_g(&gamma, ParityVariant::OddIsOne).unwrap();
    expect("tau", &tau, &sp("30,26,22,18,14,10,6,2,-3,-5,-9,-11,-15"))?;
    expect("tau back", map_g_inverse(&tau, ParityVariant::OddIsOne).unwrap(), gamma)?;

    let lambda = p("31,26,24,21,17,14,11,7,4");
    let e = map_phi(&lambda).unwrap();
    expect("E[155]", &e, &sp("32,28,26,24,22,20,18,16,14,-3,-5,-9,-11,-17"))?;
    expect("E[155] weight", e.weight(), 155)?;
    expect("E[155] back", map_phi_inverse(&e).unwrap(), lambda)?;
    Ok("7 examples; RR1[52] image read as (2,5,8,13,16,19,-1,-4,-6)".into())
}

fn run_reports(check: CheckKind) -> Outcome {
    let bounds = SuiteBounds {
        count_max: COUNT_MAX,
        series_order: SERIES_ORDER,
        bijection_max: BIJECTION_MAX,
    };
    let reports: Vec<_> = Verifier::new()
        .verify_identities(&IdentityId::ALL, bounds)
        .into_iter()
        .filter(|r| r.check == check)
        .collect();
    let failed: Vec<String> = reports.iter().filter(|r| !r.passed()).map(|r| r.summary()).collect();
    if failed.is_empty() {
        Ok(format!("{} reports", reports.len()))
    } else {
        Err(failed.join("\n    "))
    }
}

fn count_equality() -> Outcome {
    run_reports(CheckKind::Counts)
}

fn series_agreement() -> Outcome {
    run_reports(CheckKind::Series)
}

// Counts partitions into allowed parts by the usual coin recurrence.
fn restricted_partitions(allowed: impl Fn(u32) -> bool, order: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::from(0); order + 1];
    c[0] = BigInt::from(1);
    for part in 1..=order {
        if allowed(part as u32) {
            for n in part..=order {
                let prev = c[n - part].clone();
                c[n] += prev;
            }
        }
    }
    c
}

fn products() -> Outcome {
    let cases: [ProductCase; 4] = [
        (IdentityId::Rr1Signed, |k| matches!(k % 5, 1 | 4)),
        (IdentityId::Gg1Andrews, |k| matches!(k % 8, 1 | 4 | 7)),
        (IdentityId::Gg1Prime, |k| matches!(k % 8, 1 | 4 | 7)),
        (IdentityId::Gg2ThreeWay, |k| matches!(k % 8, 3..=5)),
    ];
    for (id, allowed) in cases {
        let sum = sum_side(id, PRODUCT_ORDER);
        let product = product_side(id, PRODUCT_ORDER).map_err(|e| e.to_string())?;
        expect(
            &format!("{id} sum vs product"),
            sum.coefficients(),
            product.coefficients(),
        )?;
        let direct = restricted_partitions(allowed, PRODUCT_ORDER);
        expect(
            &format!("{id} product vs direct count"),
            product.coefficients(),
            &direct[..],
        )?;
    }
    // Difference-2 partitions against parts 1, 4 mod 5, by enumeration.
    let mod5 = restricted_partitions(|k| matches!(k % 5, 1 | 4), PRODUCT_ORDER);
    for n in 0..=COUNT_MAX {
        let rr1 = enumerate_ordinary(ClassId::Rr1, n).map_err(|e| e.to_string())?;
        expect(
            &format!("RR1({n}) vs parts 1,4 mod 5"),
            BigInt::from(rr1.len()),
            mod5[n as usize].clone(),
        )?;
    }
    Ok(format!(
        "4 products to N={PRODUCT_ORDER}; RR1 restatement to n={COUNT_MAX}"
    ))
}

fn bijections() -> Outcome {
    run_reports(CheckKind::Bijection)
}

fn gg_difference() -> Outcome {
    let gg1 = sum_side(IdentityId::Gg1Andrews, COUNT_MAX as usize);
    let gg2 = sum_side(IdentityId::Gg2ThreeWay, COUNT_MAX as usize);
    let own = sum_side(IdentityId::GgDiff, COUNT_MAX as usize);
    for n in 0..=COUNT_MAX {
        let low = enumerate_ordinary(ClassId::Gg1, n)
            .map_err(|e| e.to_string())?
            .into_iter()
            .filter(|x| matches!(x.smallest(), Some(1 | 2)))
            .count();
        let i = n as usize;
        let diff = gg1.coefficient(i) - gg2.coefficient(i);
        expect(&format!("GG1 - GG2 at {n}"), diff.clone(), BigInt::from(low))?;
        expect(&format!("GG_DIFF sum at {n}"), own.coefficient(i).clone(), diff)?;
    }
    Ok(format!("n=0..={COUNT_MAX}"))
}

fn falsifiability() -> Outcome {
    let mut lines = Vec::new();
    let mut missed = Vec::new();
    let all = mutations();
    for m in &all {
        let witness = m.run(20).into_iter().filter(|r| !r.passed()).find_map(|r| {
            r.failures
                .first()
                .map(|f| format!("{} n={}: {}", r.identity, f.n, f.witness))
        });
        match witness {
            Some(w) if !w.is_empty() => lines.push(format!("{}: {w}", m.name)),
            _ => missed.push(m.name),
        }
    }
    if all.len() < 5 {
        return Err(format!("only {} mutations", all.len()));
    }
    for line in &lines {
        println!("    {line}");
    }
    if missed.is_empty() {
        Ok(format!("{} mutations, each FAIL with a witness", all.len()))
    } else {
        Err(format!("mutations not caught: {}", missed.join(", ")))
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("1 worked examples", worked_examples),
        ("2 count equality n<=40", count_equality),
        ("3 series vs enumeration n<=40, N=60", series_agreement),
        ("4 product sides N=200", products),
        ("5 bijection sweeps weight<=35", bijections),
        ("6 GG1 - GG2 difference n<=40", gg_difference),
        ("7 falsifiability", falsifiability),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {name} ({detail}) [{secs:.2}s]"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name} [{secs:.2}s]\n    {why}");
            }
        }
    }
    if failed == 0 {
        println!("acceptance: 7 of 7 criteria PASS");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 7 criteria FAIL");
        ExitCode::FAILURE
    }
}
