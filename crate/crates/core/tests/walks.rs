//! Cross-checks enumeration against a brute-force generator that knows
//! nothing about the DFS pruning: it applies the height recurrence, ranges x
//! over 0..=h freely, and keeps whatever the public class predicates accept.

use rectwalk_core::walk::{
    completions, enumerate, for_each_walk, shard_prefixes, Vertex, Walk, WalkClass, COLORS,
};

fn extend_brute(path: &mut Vec<Vertex>, n: usize, class: WalkClass, out: &mut Vec<Walk>) {
    if path.len() == n {
        let w = Walk::new(path.clone());
        if class.contains(&w) {
            out.push(w);
        }
        return;
    }
    let last = *path.last().unwrap();
    let h = last.h + last.c.delta();
    if h < 0 {
        return;
    }
    for x in 0..=h {
        for c in COLORS {
            path.push(Vertex::new(h, x, c));
            extend_brute(path, n, class, out);
            path.pop();
        }
    }
}

fn brute_force(n: usize, class: WalkClass, max_h1: i32) -> Vec<Walk> {
    let mut out = Vec::new();
    if n == 0 {
        let w = Walk::empty();
        if class.contains(&w) {
            out.push(w);
        }
        return out;
    }
    let mut path = Vec::new();
    for h1 in 0..=max_h1 {
        for x in 0..=h1 {
            for c in COLORS {
                path.push(Vertex::new(h1, x, c));
                extend_brute(&mut path, n, class, &mut out);
                path.pop();
            }
        }
    }
    out.sort();
    out
}

#[test]
fn finite_classes_match_brute_force() {
    for class in [WalkClass::LhqwAdm, WalkClass::Lhqe] {
        for n in 0..=5 {
            // h1 = 1 universes only contribute rejections, which checks the
            // predicates and the enumerator agree on where the class starts
            let want = brute_force(n, class, 1);
            let got: Vec<Walk> = enumerate(n, class).collect();
            assert_eq!(got, want, "{} at n={n}", class.name());
        }
    }
}

#[test]
fn open_classes_match_brute_force_below_cutoff() {
    for class in [WalkClass::Hqw, WalkClass::Lhqw] {
        for n in 0..=3 {
            let want = brute_force(n, class, 2);
            let got: Vec<Walk> = enumerate(n, class)
                .take_while(|w| w.get(0).map_or(true, |v| v.h <= 2))
                .collect();
            assert_eq!(got, want, "{} at n={n}", class.name());
        }
    }
}

#[test]
fn excursion_counts_match_frozen_table() {
    let frozen: [(usize, usize); 8] = [
        (1, 1),
        (2, 2),
        (3, 6),
        (4, 24),
        (5, 116),
        (6, 642),
        (7, 3938),
        (8, 26194),
    ];
    for (n, want) in frozen {
        let mut count = 0usize;
        for_each_walk(n, WalkClass::Lhqe, |_| count += 1).unwrap();
        assert_eq!(count, want, "excursion count at n={n}");
    }
}

#[test]
fn bar_is_an_order_isomorphism_onto_excursions() {
    for n in 0..=6 {
        let image: Vec<Walk> = enumerate(n, WalkClass::LhqwAdm)
            .map(|w| w.bar().unwrap())
            .collect();
        let excursions: Vec<Walk> = enumerate(n + 1, WalkClass::Lhqe).collect();
        assert_eq!(image, excursions, "n={n}");
    }
}

#[test]
fn completions_agree_with_filtering() {
    let all: Vec<Walk> = enumerate(5, WalkClass::Lhqe).collect();
    for prefix_len in 0..=3 {
        for p in shard_prefixes(5, WalkClass::Lhqe, prefix_len).unwrap() {
            let want: Vec<&Walk> = all
                .iter()
                .filter(|w| w.vertices().starts_with(p.vertices()))
                .collect();
            let got: Vec<Walk> = completions(&p, 5, WalkClass::Lhqe).collect();
            assert_eq!(got.iter().collect::<Vec<_>>(), want);
        }
    }
    // prefixes that cannot start a walk of the class yield nothing
    let bad = Walk::parse("1,0,b").unwrap();
    assert_eq!(completions(&bad, 3, WalkClass::Lhqe).count(), 0);
}

#[test]
fn text_round_trip_over_enumerated_walks() {
    for w in enumerate(4, WalkClass::Lhqe) {
        assert_eq!(Walk::parse(&w.format()).unwrap(), w);
    }
}
