//! End-to-end checks of the counting reports: the shift between excursion
//! and admissible-walk counts, cross-provenance table agreement, the
//! insertion inequality at machine scale, exact growth-ratio bounds, and
//! avoider proportions.

use num_bigint::BigUint;
use rectwalk_core::analysis::{
    count_table, count_table_by_enumeration, growth_report, proportion_report,
    verify_insertion_inequality, CountTable,
};
use rectwalk_core::geometry::{GeomPattern, Segment, SegmentConfig};
use rectwalk_core::pattern::{count_all, extend_overlap_free, FactorPattern};
use rectwalk_core::walk::{Walk, WalkClass};

fn pat(s: &str) -> FactorPattern {
    FactorPattern::new(Walk::parse(s).unwrap()).unwrap()
}

fn admissible_table(n_max: usize, pattern: Option<&FactorPattern>) -> CountTable {
    count_table(WalkClass::LhqwAdm, n_max, pattern).unwrap()
}

#[test]
fn excursion_counts_are_the_shifted_admissible_counts() {
    let a = admissible_table(9, None);
    for n in 1..=10usize {
        let excursions = count_all(n, WalkClass::Lhqe).unwrap();
        assert_eq!(excursions, a.value(n as i64 - 1).unwrap(), "n={n}");
    }
}

#[test]
fn both_provenances_agree_on_free_and_avoiding_counts() {
    let star = pat("0,0,b;1,0,g;1,1,r;1,0,r;1,1,r;1,0,w");
    for pattern in [None, Some(&star)] {
        let dp = count_table(WalkClass::LhqwAdm, 8, pattern).unwrap();
        let enumerated = count_table_by_enumeration(WalkClass::LhqwAdm, 8, pattern).unwrap();
        assert!(dp.agrees_with(&enumerated));
    }
}

#[test]
fn avoiders_never_exceed_the_full_counts() {
    let patterns = [
        pat("0,0,r"),
        pat("0,0,g;0,0,g"),
        pat("0,0,b;1,0,g;1,1,r;1,0,r;1,1,r;1,0,w"),
    ];
    let a = admissible_table(10, None);
    for p in &patterns {
        let b = admissible_table(10, Some(p));
        for n in 0..=10 {
            assert!(b.entries()[n].value <= a.entries()[n].value, "n={n}");
        }
    }
}

#[test]
fn the_insertion_inequality_holds_to_fourteen_for_the_extended_star() {
    let star = pat("0,0,b;1,0,g;1,1,r;1,0,r;1,1,r;1,0,w");
    let extended = extend_overlap_free(&star, star.len()).unwrap();
    let report = verify_insertion_inequality(14, &extended).unwrap();
    assert_eq!(report.rows().len(), 15);
    assert!(report.all_hold());
}

#[test]
fn growth_ratios_increase_and_stay_below_the_growth_constant() {
    let a = admissible_table(16, None);
    let values: Vec<&BigUint> = a.entries().iter().map(|e| &e.value).collect();
    for n in 1..values.len() {
        // ratio below 27/2, exactly
        assert!(values[n] * 2u32 < values[n - 1] * 27u32, "n={n}");
    }
    for n in 1..values.len() - 1 {
        // log-convexity: successive ratios strictly increase
        assert!(values[n] * values[n] < values[n - 1] * values[n + 1], "n={n}");
    }
    let g = growth_report(&a);
    assert_eq!(g.rows.len(), 16);
    assert!(g.rows.iter().all(|r| r.ratio.unwrap() < g.lambda));
}

#[test]
fn top_shape_proportions_never_grow() {
    let top = GeomPattern::new(
        SegmentConfig::new(vec![
            Segment::horizontal(0, 2, 0, 2),
            Segment::vertical(1, 1, 0, 2),
        ])
        .unwrap(),
    );
    let rows = proportion_report(6, &top);
    assert_eq!(rows.len(), 6);
    for pair in rows.windows(2) {
        assert!(pair[1].ratio <= pair[0].ratio, "n={}", pair[1].n);
    }
}
