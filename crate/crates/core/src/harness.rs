//! Cross-verification of the catalog.
//!
//! Three oracles are compared: exhaustive enumeration of each class, the
//! sum side (and product side where one exists) as an exact series, and the
//! explicit bijections. Enumeration and series expansion share no counting
//! code, so agreement between them is evidence rather than tautology.
//!
//! A [`Verifier`] normally uses each class's own rule. Overriding a rule
//! with a corrupted clause is how the harness shows it can fail: see
//! [`mutations`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use num_bigint::BigInt;
use serde::Serialize;

use crate::bijections::MapId;
use crate::classes::{ClassId, ClassRule, Member, PairRule, Threshold};
use crate::identity::IdentityId;
use crate::model::SignedPartition;
use crate::qseries::{product_side, sum_side};

/// Reports stop collecting failures after this many.
pub const MAX_FAILURES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    Counts,
    Series,
    Bijection,
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckKind::Counts => "counts",
            CheckKind::Series => "series",
            CheckKind::Bijection => "bijection",
        })
    }
}

/// One disagreement between two oracles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub n: i64,
    pub oracle_a: String,
    pub oracle_b: String,
    pub value_a: String,
    pub value_b: String,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    /// Identity name, or map name for bijection checks.
    pub identity: String,
    pub check: CheckKind,
    /// Inclusive range of `n` checked.
    pub range: [i64; 2],
    pub status: Status,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    fn new(identity: &str, check: CheckKind, range: [i64; 2]) -> Self {
        Self {
            identity: identity.to_string(),
            check,
            range,
            status: Status::Pass,
            failures: Vec::new(),
        }
    }

    fn fail(&mut self, failure: Failure) {
        self.status = Status::Fail;
        if self.failures.len() < MAX_FAILURES {
            self.failures.push(failure);
        }
    }

    fn saturated(&self) -> bool {
        self.failures.len() >= MAX_FAILURES
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// One line: status, check, subject, range and the first failure.
    pub fn summary(&self) -> String {
        let mut line = format!(
            "{} {:<9} {:<12} n={}..={}",
            self.status, self.check, self.identity, self.range[0], self.range[1]
        );
        if let Some(f) = self.failures.first() {
            line.push_str(&format!(
                " first failure at n={}: {}={} vs {}={} ({})",
                f.n, f.oracle_a, f.value_a, f.oracle_b, f.value_b, f.witness
            ));
        }
        line
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

fn failure(
    n: i64,
    a: impl Into<String>,
    b: impl Into<String>,
    va: impl ToString,
    vb: impl ToString,
    w: impl Into<String>,
) -> Failure {
    Failure {
        n,
        oracle_a: a.into(),
        oracle_b: b.into(),
        value_a: va.to_string(),
        value_b: vb.to_string(),
        witness: w.into(),
    }
}

/// Runs checks against class rules, optionally overridden.
#[derive(Clone, Debug, Default)]
pub struct Verifier {
    overrides: BTreeMap<ClassId, ClassRule>,
}

impl Verifier {
    pub fn new() -> Self {
        Self::default()
    }

    /// Replaces a class's rule for every check this verifier runs.
    pub fn with_rule(mut self, class: ClassId, rule: ClassRule) -> Self {
        self.overrides.insert(class, rule);
        self
    }

    pub fn rule(&self, class: ClassId) -> ClassRule {
        self.overrides.get(&class).cloned().unwrap_or_else(|| class.rule())
    }

    fn enumerate(&self, class: ClassId, n: i64) -> std::result::Result<Vec<Member>, String> {
        self.rule(class).enumerate(class.name(), n).map_err(|e| e.to_string())
    }

    /// Count equality of every class of the identity for `0 <= n <= n_max`.
    pub fn verify_counts(&self, id: IdentityId, n_max: i64) -> VerificationReport {
        let d = id.descriptor();
        let mut report = VerificationReport::new(id.name(), CheckKind::Counts, [0, n_max]);
        for n in 0..=n_max {
            let ordinary = match self.enumerate(d.ordinary, n) {
                Ok(m) => m,
                Err(e) => {
                    report.fail(failure(n, d.ordinary.name(), "enumeration", "-", "-", e));
                    break;
                }
            };
            for &class in &d.signed {
                let weight = n + d.index_offset;
                let signed = match self.enumerate(class, weight) {
                    Ok(m) => m,
                    Err(e) => {
                        report.fail(failure(weight, class.name(), "enumeration", "-", "-", e));
                        continue;
                    }
                };
                if signed.len() != ordinary.len() {
                    let map = d.maps.iter().copied().find(|m| m.target() == class);
                    let witness = self.count_witness(map, &ordinary, &signed);
                    report.fail(failure(
                        n,
                        format!("count({})", d.ordinary),
                        format!("count({})@{}", class, shift_label(d.index_offset)),
                        ordinary.len(),
                        signed.len(),
                        witness,
                    ));
                }
            }
            if report.saturated() {
                break;
            }
        }
        report
    }

    // Something concrete behind a count mismatch: an element the map sends
    // outside the signed set, an unreached signed element, or a sample of
    // the larger side.
    fn count_witness(&self, map: Option<MapId>, ordinary: &[Member], signed: &[Member]) -> String {
        if let Some(map) = map {
            let targets: BTreeSet<&Member> = signed.iter().collect();
            let mut images = BTreeSet::new();
            for o in ordinary {
                let Member::Ordinary(p) = o else { continue };
                match map.apply(p) {
                    Ok(img) => {
                        let img = Member::Signed(img);
                        if !targets.contains(&img) {
                            return format!("{map}({p}) = {img} is not in the signed class");
                        }
                        images.insert(img);
                    }
                    Err(e) => return format!("{map}({p}) failed: {e}"),
                }
            }
            if let Some(missed) = signed.iter().find(|s| !images.contains(*s)) {
                return format!("{missed} has no preimage under {map}");
            }
        }
        let (label, larger) = if signed.len() > ordinary.len() {
            ("signed", signed)
        } else {
            ("ordinary", ordinary)
        };
        let sample: Vec<String> = larger.iter().take(3).map(|m| m.to_string()).collect();
        format!("{label} side includes {}", sample.join("; "))
    }

    /// Sum side against enumeration for `n <= min(n_max, order)`, and against
    /// the product side and any stated difference for `n <= order`.
    pub fn verify_series(&self, id: IdentityId, n_max: i64, order: usize) -> VerificationReport {
        let d = id.descriptor();
        let mut report = VerificationReport::new(id.name(), CheckKind::Series, [0, order as i64]);
        let sum = sum_side(id, order);
        let count_top = n_max.min(order as i64);
        for n in 0..=count_top {
            let coefficient = sum.coefficient(n as usize);
            let mut classes = vec![(d.ordinary, n)];
            classes.extend(d.signed.iter().map(|&c| (c, n + d.index_offset)));
            for (class, weight) in classes {
                match self.enumerate(class, weight) {
                    Ok(members) => {
                        if BigInt::from(members.len()) != *coefficient {
                            let sample: Vec<String> = members.iter().take(3).map(|m| m.to_string()).collect();
                            report.fail(failure(
                                n,
                                "sum_side",
                                format!("count({class})"),
                                coefficient,
                                members.len(),
                                format!("{class} at weight {weight} includes [{}]", sample.join("; ")),
                            ));
                        }
                    }
                    Err(e) => report.fail(failure(weight, class.name(), "enumeration", "-", "-", e)),
                }
            }
        }
        if d.has_product {
            let product = product_side(id, order).expect("descriptor says a product exists");
            compare_series(&mut report, "sum_side", &sum, "product_side", &product);
        }
        if let Some((a, b)) = d.difference_of {
            let difference = &sum_side(a, order) - &sum_side(b, order);
            compare_series(
                &mut report,
                "sum_side",
                &sum,
                &format!("sum_side({a}) - sum_side({b})"),
                &difference,
            );
        }
        report
    }

    /// Exhaustive check of a map for source weights `0 <= n <= n_max`:
    /// membership of images and preimages, both round trips, and that the
    /// images exhaust the target class.
    pub fn verify_bijection(&self, map: MapId, n_max: i64) -> VerificationReport {
        let mut report = VerificationReport::new(map.name(), CheckKind::Bijection, [0, n_max]);
        let (source, target) = (map.source(), map.target());
        let (src_rule, tgt_rule) = (self.rule(source), self.rule(target));
        for n in 0..=n_max {
            let (sources, targets) = match (self.enumerate(source, n), self.enumerate(target, n)) {
                (Ok(s), Ok(t)) => (s, t),
                (Err(e), _) | (_, Err(e)) => {
                    report.fail(failure(n, map.name(), "enumeration", "-", "-", e));
                    break;
                }
            };
            let mut images: BTreeSet<SignedPartition> = BTreeSet::new();
            for m in &sources {
                let Member::Ordinary(lambda) = m else { continue };
                match map.forward_with(lambda, &src_rule, &tgt_rule) {
                    Ok(img) => {
                        if img.weight() != n {
                            report.fail(failure(
                                n,
                                map.name(),
                                "weight",
                                img.weight(),
                                n,
                                format!("{lambda} -> {img}"),
                            ));
                        }
                        match map.apply_inverse(&img) {
                            Ok(back) if &back == lambda => {}
                            Ok(back) => report.fail(failure(
                                n,
                                format!("{map}^-1({map}(x))"),
                                "x",
                                &back,
                                lambda,
                                format!("{lambda} -> {img} -> {back}"),
                            )),
                            Err(e) => report.fail(failure(n, format!("{map}^-1"), "x", e, lambda, img.to_string())),
                        }
                        images.insert(img);
                    }
                    Err(e) => report.fail(failure(
                        n,
                        map.name(),
                        format!("member({target})"),
                        e,
                        "-",
                        lambda.to_string(),
                    )),
                }
            }
            if images.len() != sources.len() || images.len() != targets.len() {
                let missed = targets
                    .iter()
                    .find_map(|t| match t {
                        Member::Signed(s) if !images.contains(s) => Some(s.to_string()),
                        _ => None,
                    })
                    .unwrap_or_else(|| "-".to_string());
                report.fail(failure(
                    n,
                    format!("|{map}({source})|"),
                    format!("|{target}|"),
                    images.len(),
                    targets.len(),
                    format!("first target not reached: {missed}"),
                ));
            }
            for m in &targets {
                let Member::Signed(gamma) = m else { continue };
                match map.inverse_with(gamma, &src_rule, &tgt_rule) {
                    Ok(pre) => match map.apply(&pre) {
                        Ok(again) if &again == gamma => {}
                        Ok(again) => report.fail(failure(
                            n,
                            format!("{map}({map}^-1(y))"),
                            "y",
                            again,
                            gamma,
                            format!("{gamma} -> {pre}"),
                        )),
                        Err(e) => report.fail(failure(n, map.name(), "y", e, gamma, pre.to_string())),
                    },
                    Err(e) => report.fail(failure(
                        n,
                        format!("{map}^-1"),
                        format!("member({source})"),
                        e,
                        "-",
                        gamma.to_string(),
                    )),
                }
            }
            if report.saturated() {
                break;
            }
        }
        report
    }
}

fn shift_label(offset: i64) -> String {
    match offset {
        0 => "n".to_string(),
        o if o < 0 => format!("n{o}"),
        o => format!("n+{o}"),
    }
}

fn compare_series(
    report: &mut VerificationReport,
    a: &str,
    left: &crate::qseries::TruncatedSeries,
    b: &str,
    right: &crate::qseries::TruncatedSeries,
) {
    for (n, (x, y)) in left.coefficients().iter().zip(right.coefficients()).enumerate() {
        if x != y {
            report.fail(failure(n as i64, a, b, x, y, format!("coefficient of q^{n}")));
            if report.saturated() {
                return;
            }
        }
    }
}

pub fn verify_counts(id: IdentityId, n_max: i64) -> VerificationReport {
    Verifier::new().verify_counts(id, n_max)
}

pub fn verify_series(id: IdentityId, n_max: i64, order: usize) -> VerificationReport {
    Verifier::new().verify_series(id, n_max, order)
}

pub fn verify_bijection(map: MapId, n_max: i64) -> VerificationReport {
    Verifier::new().verify_bijection(map, n_max)
}

/// Bounds for a full run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteBounds {
    pub count_max: i64,
    pub series_order: usize,
    pub bijection_max: i64,
}

impl Default for SuiteBounds {
    fn default() -> Self {
        Self {
            count_max: 40,
            series_order: 60,
            bijection_max: 35,
        }
    }
}

#[derive(Clone, Copy, Debug)]
enum Job {
    Counts(IdentityId),
    Series(IdentityId),
    Bijection(MapId),
}

impl Verifier {
    /// Counts and series for each given identity, then every map the
    /// identities use. Jobs run on all available cores; the result order is
    /// fixed.
    pub fn verify_identities(&self, ids: &[IdentityId], bounds: SuiteBounds) -> Vec<VerificationReport> {
        let mut jobs: Vec<Job> = ids.iter().map(|&i| Job::Counts(i)).collect();
        jobs.extend(ids.iter().map(|&i| Job::Series(i)));
        let mut maps: Vec<MapId> = ids.iter().flat_map(|i| i.descriptor().maps).collect();
        maps.sort();
        maps.dedup();
        jobs.extend(maps.into_iter().map(Job::Bijection));

        let slots: Vec<Mutex<Option<VerificationReport>>> = jobs.iter().map(|_| Mutex::new(None)).collect();
        let next = AtomicUsize::new(0);
        let workers = std::thread::available_parallelism()
            .map_or(1, |n| n.get())
            .min(jobs.len().max(1));
        std::thread::scope(|scope| {
            for _ in 0..workers {
                scope.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    let Some(job) = jobs.get(i) else { break };
                    let report = match *job {
                        Job::Counts(id) => self.verify_counts(id, bounds.count_max),
                        Job::Series(id) => self.verify_series(id, bounds.count_max, bounds.series_order),
                        Job::Bijection(m) => self.verify_bijection(m, bounds.bijection_max),
                    };
                    *slots[i].lock().expect("no poisoned slot") = Some(report);
                });
            }
        });
        slots
            .into_iter()
            .map(|s| s.into_inner().expect("no poisoned slot").expect("every job ran"))
            .collect()
    }
}

/// The whole catalog: 14 count checks, 14 series checks, 12 bijection sweeps.
pub fn verify_all(bounds: SuiteBounds) -> Vec<VerificationReport> {
    Verifier::new().verify_identities(&IdentityId::ALL, bounds)
}

/// A single corrupted clause of one class.
#[derive(Clone, Debug)]
pub struct Mutation {
    pub name: &'static str,
    pub class: ClassId,
    pub description: &'static str,
    pub rule: ClassRule,
}

impl Mutation {
    pub fn verifier(&self) -> Verifier {
        Verifier::new().with_rule(self.class, self.rule.clone())
    }

    /// Identities whose checks involve the mutated class.
    pub fn affected_identities(&self) -> Vec<IdentityId> {
        IdentityId::ALL
            .iter()
            .copied()
            .filter(|id| {
                let d = id.descriptor();
                d.ordinary == self.class || d.signed.contains(&self.class)
            })
            .collect()
    }

    /// Count checks of every affected identity under the mutation.
    pub fn run(&self, n_max: i64) -> Vec<VerificationReport> {
        let v = self.verifier();
        self.affected_identities()
            .into_iter()
            .map(|id| v.verify_counts(id, n_max))
            .collect()
    }
}

fn signed_rule(class: ClassId) -> crate::classes::SignedRule {
    match class.rule() {
        ClassRule::Signed(r) => r,
        ClassRule::Ordinary(_) => unreachable!("{class} is signed"),
    }
}

fn ordinary_rule(class: ClassId) -> crate::classes::OrdinaryRule {
    match class.rule() {
        ClassRule::Ordinary(r) => r,
        ClassRule::Signed(_) => unreachable!("{class} is ordinary"),
    }
}

/// Documented single-clause corruptions; each must make some check fail.
pub fn mutations() -> Vec<Mutation> {
    use crate::classes::Linear;
    let mut out = Vec::new();

    let mut r = signed_rule(ClassId::Rr1Signed);
    r.negatives.max_multiplicity = 2;
    out.push(Mutation {
        name: "rr1-negatives-not-distinct",
        class: ClassId::Rr1Signed,
        description: "negative parts may repeat (twice)",
        rule: ClassRule::Signed(r),
    });

    let mut r = signed_rule(ClassId::Gg1AndrewsSigned);
    r.positives.smallest_at_least = Linear::new(2, -2);
    out.push(Mutation {
        name: "gg1-andrews-positive-floor",
        class: ClassId::Gg1AndrewsSigned,
        description: "positive parts at least 2l+ - 2 instead of 2l+",
        rule: ClassRule::Signed(r),
    });

    let mut r = signed_rule(ClassId::Gg1PrimeSigned);
    r.positives.min_gap = 2;
    out.push(Mutation {
        name: "gg1-prime-gap-two",
        class: ClassId::Gg1PrimeSigned,
        description: "positive parts differ by at least 2 instead of 4",
        rule: ClassRule::Signed(r),
    });

    let mut r = signed_rule(ClassId::Lg1ESigned);
    r.threshold = Threshold::None;
    out.push(Mutation {
        name: "lg1-e-no-threshold",
        class: ClassId::Lg1ESigned,
        description: "smallest positive part clause dropped",
        rule: ClassRule::Signed(r),
    });

    let mut r = signed_rule(ClassId::DSigned);
    r.negatives.at_most = Linear::new(1, -1);
    out.push(Mutation {
        name: "d-negatives-below-count",
        class: ClassId::DSigned,
        description: "negative parts at most l+ - 1 instead of l+",
        rule: ClassRule::Signed(r),
    });

    let mut r = signed_rule(ClassId::Lg2HSigned);
    r.negatives.residue = 1;
    out.push(Mutation {
        name: "lg2-h-wrong-residue",
        class: ClassId::Lg2HSigned,
        description: "negative parts 1 mod 4 instead of 3 mod 4",
        rule: ClassRule::Signed(r),
    });

    let mut r = signed_rule(ClassId::Rr2Signed);
    r.positives.smallest_at_least = Linear::new(0, 1);
    out.push(Mutation {
        name: "rr2-allows-ones",
        class: ClassId::Rr2Signed,
        description: "no-1s clause dropped",
        rule: ClassRule::Signed(r),
    });

    let mut r = ordinary_rule(ClassId::Gg1);
    r.pair = PairRule::MinDifference(2);
    out.push(Mutation {
        name: "gg1-even-pairs-two",
        class: ClassId::Gg1,
        description: "even parts need only differ by 2",
        rule: ClassRule::Ordinary(r),
    });

    out
}
