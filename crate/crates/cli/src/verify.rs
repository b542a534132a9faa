//! The named checks behind `rectwalk verify`. Each suite returns PASS or the
//! first counterexample it meets, and the order of work is fixed so a failure
//! message is reproducible across runs and thread counts.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::One;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use rectwalk_core::analysis::{proportion_report, verify_insertion_inequality};
use rectwalk_core::geometry::{
    seg_with_frame, strong_equivalent, GeomPattern, Segment, SegmentConfig,
};
use rectwalk_core::pattern::{
    avoids, count_all, extend_overlap_free, insertion_family, is_overlap_free, remove_copies,
    FactorPattern,
};
use rectwalk_core::paving::{pave, procedure};
use rectwalk_core::walk::{completions, enumerate, Walk, WalkClass};

use crate::shards::map_shards;

pub struct SuiteReport {
    pub lines: Vec<String>,
    pub failed: bool,
}

impl SuiteReport {
    fn new() -> SuiteReport {
        SuiteReport { lines: Vec::new(), failed: false }
    }

    fn record(&mut self, name: &str, outcome: Result<(), String>) {
        match outcome {
            Ok(()) => self.lines.push(format!("{name}: PASS")),
            Err(counterexample) => {
                self.lines.push(format!("{name}: FAIL {counterexample}"));
                self.failed = true;
            }
        }
    }
}

const SEED: u64 = 20;
const RANDOM_INSTANCES: usize = 100;

fn pattern(text: &str) -> FactorPattern {
    FactorPattern::new(Walk::parse(text).expect("fixture walk")).expect("fixture pattern")
}

/// The excursion of the worked seven-step example, extended to an
/// overlap-free factor.
fn extended_star() -> FactorPattern {
    let star = pattern("0,0,b;1,0,g;1,1,r;1,0,r;1,1,r;1,0,w");
    extend_overlap_free(&star, star.len()).expect("the example extends")
}

/// Paving followed by reading the procedure back must reproduce every
/// excursion up to length n.
fn roundtrip(n: usize, threads: usize) -> Result<(), String> {
    for m in 1..=n {
        let failures = map_shards(m, WalkClass::Lhqe, threads, |prefix| {
            for e in completions(prefix, m, WalkClass::Lhqe) {
                let r = match pave(&e) {
                    Ok(r) => r,
                    Err(err) => return Some(format!("pave({e}) failed: {err}")),
                };
                match procedure(&r) {
                    Ok(back) if back == e => {}
                    Ok(back) => return Some(format!("procedure(pave({e})) = {back}")),
                    Err(err) => return Some(format!("procedure(pave({e})) failed: {err}")),
                }
            }
            None
        })
        .expect("excursions form a finite class");
        if let Some(counterexample) = failures.into_iter().flatten().next() {
            return Err(counterexample);
        }
    }
    Ok(())
}

/// Distinct excursions must pave to combinatorially distinct
/// rectangulations.
fn distinctness(n: usize) -> Result<(), String> {
    for m in 1..=n {
        let walks: Vec<Walk> = enumerate(m, WalkClass::Lhqe).collect();
        let framed: Vec<SegmentConfig> = walks
            .iter()
            .map(|e| seg_with_frame(&pave(e).expect("excursions pave")))
            .collect();
        for (i, a) in framed.iter().enumerate() {
            for (j, b) in framed.iter().enumerate().skip(i + 1) {
                if strong_equivalent(a, b) {
                    return Err(format!("pavements of {} and {} are equivalent", walks[i], walks[j]));
                }
            }
        }
    }
    Ok(())
}

fn binomial(n: usize, k: usize) -> BigUint {
    num_integer::binomial(BigUint::from(n), BigUint::from(k))
}

/// Random insertion instances: the family has binomial size, every member
/// is a walk of the class avoiding nothing it should not, and removing the
/// inserted copies gives the host back. Families of distinct hosts are
/// then checked to be disjoint exhaustively at small lengths.
fn insertion(n: usize) -> Result<(), String> {
    let host_cap = n.clamp(1, 8);
    let hosts_by_len: Vec<Vec<Walk>> = (0..=host_cap)
        .map(|m| enumerate(m, WalkClass::LhqwAdm).collect())
        .collect();

    let patterns = [pattern("0,0,r"), pattern("0,0,g"), extended_star()];
    for pat in &patterns {
        if !is_overlap_free(pat) {
            return Err(format!("fixture pattern {} is not overlap free", pat.walk()));
        }
    }
    let mut rng = StdRng::seed_from_u64(SEED);
    let mut checked = 0usize;
    while checked < RANDOM_INSTANCES {
        let pat = &patterns[rng.gen_range(0..patterns.len())];
        let m = rng.gen_range(1..=host_cap);
        let candidates: Vec<&Walk> = hosts_by_len[m]
            .iter()
            .filter(|w| avoids(w, pat))
            .collect();
        if candidates.is_empty() {
            continue;
        }
        let host = candidates[rng.gen_range(0..candidates.len())];
        let q = rng.gen_range(0..=3usize);
        let family =
            insertion_family(host, pat, q).map_err(|e| format!("insertion_family: {e}"))?;
        let expected = binomial(m + q, q);
        if BigUint::from(family.len()) != expected {
            return Err(format!(
                "family of {host} with q={q} has {} members, expected {expected}",
                family.len()
            ));
        }
        for member in &family {
            let stripped = remove_copies(member, pat, q)
                .map_err(|e| format!("remove_copies on {member}: {e}"))?;
            if &stripped != host {
                return Err(format!("removal from {member} gave {stripped}, not {host}"));
            }
        }
        checked += 1;
    }

    let p = pattern("0,0,r");
    for m in 1..=host_cap.min(6) {
        let mut seen: HashMap<String, String> = HashMap::new();
        for host in hosts_by_len[m].iter().filter(|w| avoids(w, &p)) {
            let family = insertion_family(host, &p, 1).map_err(|e| format!("{e}"))?;
            for member in family {
                let key = member.to_string();
                if let Some(other) = seen.insert(key.clone(), host.to_string()) {
                    return Err(format!(
                        "{key} arises from both {other} and {host}"
                    ));
                }
            }
        }
    }
    Ok(())
}

/// The insertion counting inequality for the two length one patterns and
/// the extended example factor.
fn inequality(n: usize) -> Result<(), String> {
    for pat in [pattern("0,0,r"), pattern("0,0,g"), extended_star()] {
        let report = verify_insertion_inequality(n, &pat)
            .map_err(|e| format!("pattern {}: {e}", pat.walk()))?;
        if let Some(row) = report.rows().iter().find(|r| !r.holds) {
            return Err(format!(
                "pattern {} at n={}: {} > {}",
                pat.walk(),
                row.n,
                row.lhs,
                row.rhs
            ));
        }
    }
    Ok(())
}

/// Avoider proportions: exactly one pavement avoids a single horizontal
/// segment, and the proportion avoiding the top shape never grows.
fn proportion(n: usize) -> Result<(), String> {
    let single_h =
        GeomPattern::new(SegmentConfig::new(vec![Segment::horizontal(0, 0, 0, 1)]).unwrap());
    for row in proportion_report(n, &single_h) {
        let total = count_all(row.n, WalkClass::Lhqe).expect("finite class");
        if row.avoiders != BigUint::one() || row.total != total {
            return Err(format!(
                "single segment at n={}: {} of {} avoid",
                row.n, row.avoiders, row.total
            ));
        }
    }
    let top = GeomPattern::new(
        SegmentConfig::new(vec![
            Segment::horizontal(0, 2, 0, 2),
            Segment::vertical(1, 1, 0, 2),
        ])
        .unwrap(),
    );
    let rows = proportion_report(n, &top);
    for pair in rows.windows(2) {
        if pair[1].ratio > pair[0].ratio {
            return Err(format!(
                "top shape proportion rises from n={} to n={}",
                pair[0].n, pair[1].n
            ));
        }
    }
    Ok(())
}

pub fn run_roundtrip(n: usize, threads: usize, report: &mut SuiteReport) {
    report.record("roundtrip", roundtrip(n, threads));
}

pub fn run_distinctness(n: usize, report: &mut SuiteReport) {
    report.record("distinctness", distinctness(n));
}

pub fn run_insertion(n: usize, report: &mut SuiteReport) {
    report.record("insertion", insertion(n));
}

pub fn run_inequality(n: usize, report: &mut SuiteReport) {
    report.record("inequality", inequality(n));
}

pub fn run_proportion(n: usize, report: &mut SuiteReport) {
    report.record("proportion", proportion(n));
}

pub fn run_all(n: usize, threads: usize) -> SuiteReport {
    let mut report = SuiteReport::new();
    run_roundtrip(n, threads, &mut report);
    run_distinctness(n.min(6), &mut report);
    run_insertion(n, &mut report);
    run_inequality(n, &mut report);
    run_proportion(n.min(6), &mut report);
    report
}

pub fn run_one(name: &str, n: usize, threads: usize) -> SuiteReport {
    let mut report = SuiteReport::new();
    match name {
        "roundtrip" => run_roundtrip(n, threads, &mut report),
        "distinctness" => run_distinctness(n, &mut report),
        "insertion" => run_insertion(n, &mut report),
        "inequality" => run_inequality(n, &mut report),
        "proportion" => run_proportion(n, &mut report),
        _ => unreachable!("suite names are validated by the argument parser"),
    }
    report
}
