//! Inserting translated pattern copies into a walk's gaps, and taking them
//! back out.
//!
//! A length-n admissible walk has n + 1 gaps (gap 0 before the first vertex,
//! gap n after the last). Inserting one copy per chosen gap of an admissible
//! pattern keeps the walk admissible: the pattern's net height displacement
//! is zero, so the copy is lifted to the height at its gap, and its x-offset
//! is chosen minimal among those keeping the copy in the quadrant and both
//! seams leftmost.

use alloc::vec::Vec;
use core::fmt;

use super::{avoids, find_occurrences_in, is_overlap_free, FactorPattern};
use crate::walk::{leftmost_lower_bound, Color, Vertex, Walk};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InsertionError {
    HostNotAdmissible,
    HostContainsPattern,
    PatternNotAdmissible,
    PatternNotOverlapFree,
    GapOutOfRange { gap: usize, walk_len: usize },
    NoFeasibleOffset { gap: usize },
    MissingOccurrence { round: usize },
}

impl fmt::Display for InsertionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InsertionError::HostNotAdmissible => write!(f, "host walk is not admissible"),
            InsertionError::HostContainsPattern => {
                write!(f, "host walk already contains the pattern")
            }
            InsertionError::PatternNotAdmissible => write!(f, "pattern walk is not admissible"),
            InsertionError::PatternNotOverlapFree => write!(f, "pattern is not overlap-free"),
            InsertionError::GapOutOfRange { gap, walk_len } => {
                write!(f, "gap {gap} out of range for a length-{walk_len} walk")
            }
            InsertionError::NoFeasibleOffset { gap } => {
                write!(f, "no x-offset satisfies the constraints at gap {gap}")
            }
            InsertionError::MissingOccurrence { round } => {
                write!(f, "no occurrence left to remove in round {round}")
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtendError {
    NotAdmissible,
    /// No (prepend, append) count within the cap produced a usable pattern.
    Exhausted { cap: usize },
}

impl fmt::Display for ExtendError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendError::NotAdmissible => write!(f, "pattern to extend must be admissible"),
            ExtendError::Exhausted { cap } => write!(
                f,
                "no extension by at most {cap} vertices per side is overlap-free and insertable"
            ),
        }
    }
}

/// Whether inserting the pattern succeeds at every gap of every admissible
/// host. The binding constraints are the seams: the left neighbor can force
/// offset >= its own x (when it is b or r and the pattern starts b or g),
/// while the right neighbor caps the offset at its x minus the pattern's
/// last x, plus one unless the pattern ends in r meeting a b or g vertex.
/// Those two can only conflict when the pattern starts b or g and ends with
/// the vertex (1,1,w); every other admissible pattern fits everywhere.
fn fits_every_gap(p: &FactorPattern) -> bool {
    p.first().c == Color::R || p.last() != Vertex::new(1, 1, Color::W)
}

/// Extends an admissible pattern by prepending j copies of (0,0,r) and
/// appending k copies of (0,0,g), choosing (j, k) minimal in (j + k, then j)
/// with j, k <= cap such that the result is overlap-free and insertable at
/// every gap of every admissible host. Patterns already satisfying both come
/// back unchanged. Any walk containing the extension contains the original
/// pattern, so avoidance counts only grow under extension.
pub fn extend_overlap_free(
    p: &FactorPattern,
    cap: usize,
) -> Result<FactorPattern, ExtendError> {
    if !p.walk().is_admissible() {
        return Err(ExtendError::NotAdmissible);
    }
    for total in 0..=2 * cap {
        for j in 0..=total.min(cap) {
            let k = total - j;
            if k > cap {
                continue;
            }
            let mut vs = Vec::with_capacity(j + p.len() + k);
            vs.extend((0..j).map(|_| Vertex::new(0, 0, Color::R)));
            vs.extend_from_slice(p.walk().vertices());
            vs.extend((0..k).map(|_| Vertex::new(0, 0, Color::G)));
            let candidate = match FactorPattern::new(Walk::new(vs)) {
                Ok(c) => c,
                Err(_) => continue,
            };
            debug_assert!(candidate.walk().is_admissible());
            if is_overlap_free(&candidate) && fits_every_gap(&candidate) {
                return Ok(candidate);
            }
        }
    }
    Err(ExtendError::Exhausted { cap })
}

/// Height entering gap `gap` of an admissible vertex sequence.
fn height_at_gap(vs: &[Vertex], gap: usize) -> i32 {
    if gap == 0 {
        0
    } else {
        let v = vs[gap - 1];
        v.h + v.c.delta()
    }
}

fn insert_one(cur: &mut Vec<Vertex>, p: &FactorPattern, gap: usize) -> Result<(), InsertionError> {
    let pv = p.walk().vertices();
    let dh = height_at_gap(cur, gap) - pv[0].h;
    let min_x = pv.iter().map(|v| v.x).min().unwrap();
    let min_slack = pv.iter().map(|v| v.h - v.x).min().unwrap();
    // quadrant: every copy vertex needs x + dx >= 0 and h + dh >= x + dx
    let mut lo = -min_x;
    let mut hi = dh + min_slack;
    if gap > 0 {
        let prev = cur[gap - 1];
        lo = lo.max(leftmost_lower_bound(prev.x, prev.c, pv[0].c) - pv[0].x);
    }
    if gap < cur.len() {
        let next = cur[gap];
        let last = pv[pv.len() - 1];
        let slack =
            if matches!(last.c, Color::B | Color::R) && matches!(next.c, Color::B | Color::G) {
                0
            } else {
                1
            };
        hi = hi.min(next.x - last.x + slack);
    }
    if lo > hi {
        return Err(InsertionError::NoFeasibleOffset { gap });
    }
    let dx = lo;
    cur.splice(
        gap..gap,
        pv.iter().map(|v| Vertex::new(v.h + dh, v.x + dx, v.c)),
    );
    Ok(())
}

fn check_insert_inputs(w: &Walk, p: &FactorPattern) -> Result<(), InsertionError> {
    if !w.is_admissible() {
        return Err(InsertionError::HostNotAdmissible);
    }
    if !p.walk().is_admissible() {
        return Err(InsertionError::PatternNotAdmissible);
    }
    if !is_overlap_free(p) {
        return Err(InsertionError::PatternNotOverlapFree);
    }
    Ok(())
}

/// Inserts one translated copy of the pattern per entry of `gaps` (a
/// multiset over 0..=w.len()). Copies are placed right-to-left; a repeated
/// gap stacks its later copies to the left of the earlier ones. The result
/// is admissible of length w.len() + gaps.len() * p.len().
pub fn insert_copies(
    w: &Walk,
    p: &FactorPattern,
    gaps: &[usize],
) -> Result<Walk, InsertionError> {
    check_insert_inputs(w, p)?;
    for &g in gaps {
        if g > w.len() {
            return Err(InsertionError::GapOutOfRange {
                gap: g,
                walk_len: w.len(),
            });
        }
    }
    let mut sorted: Vec<usize> = gaps.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let mut cur = w.vertices().to_vec();
    for g in sorted {
        insert_one(&mut cur, p, g)?;
    }
    Ok(Walk::new(cur))
}

/// Deletes the leftmost occurrence of the pattern, q times. For a walk
/// built by [`insert_copies`] from a host that avoids the pattern, the
/// occurrences are exactly the inserted copies (overlap-freeness rules out
/// straddling matches), so this recovers the host.
pub fn remove_copies(w: &Walk, p: &FactorPattern, q: usize) -> Result<Walk, InsertionError> {
    if !is_overlap_free(p) {
        return Err(InsertionError::PatternNotOverlapFree);
    }
    let mut cur = w.vertices().to_vec();
    for round in 1..=q {
        let occ = find_occurrences_in(&cur, p);
        match occ.first() {
            None => return Err(InsertionError::MissingOccurrence { round }),
            Some(o) => {
                let s = o.start - 1;
                cur.drain(s..s + p.len());
            }
        }
    }
    Ok(Walk::new(cur))
}

/// All multisets of size q over 0..=n as nondecreasing sequences, in lex
/// order.
fn gap_multisets(n: usize, q: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(q);
    fn rec(lo: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for g in lo..=n {
            cur.push(g);
            rec(g, n, left - 1, cur, out);
            cur.pop();
        }
    }
    rec(0, n, q, &mut cur, &mut out);
    out
}

/// The family of walks obtained by inserting q copies of the pattern into a
/// host that avoids it, one walk per gap multiset, in lex order of the
/// multisets. All results are distinct, so the family has binom(n+q, q)
/// members.
pub fn insertion_family(
    w: &Walk,
    p: &FactorPattern,
    q: usize,
) -> Result<Vec<Walk>, InsertionError> {
    check_insert_inputs(w, p)?;
    if !avoids(w, p) {
        return Err(InsertionError::HostContainsPattern);
    }
    let mut out = Vec::new();
    for gaps in gap_multisets(w.len(), q) {
        let mut cur = w.vertices().to_vec();
        for &g in gaps.iter().rev() {
            insert_one(&mut cur, p, g)?;
        }
        out.push(Walk::new(cur));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Walk {
        Walk::parse(s).unwrap()
    }

    fn pat(s: &str) -> FactorPattern {
        FactorPattern::new(w(s)).unwrap()
    }

    #[test]
    fn extension_fixes_overlapping_patterns() {
        let p = extend_overlap_free(&pat("0,0,r;0,0,r"), 4).unwrap();
        assert_eq!(p.walk(), &w("0,0,r;0,0,r;0,0,g"));
        assert_eq!(
            extend_overlap_free(&pat("0,0,b;1,0,w"), 4).unwrap().walk(),
            &w("0,0,b;1,0,w")
        );
        assert_eq!(
            extend_overlap_free(&pat("0,0,g"), 4).unwrap().walk(),
            &w("0,0,g")
        );
        assert_eq!(
            extend_overlap_free(&pat("1,1,r;1,0,r"), 4),
            Err(ExtendError::NotAdmissible)
        );
    }

    #[test]
    fn extension_makes_corner_ending_patterns_insertable() {
        // overlap-free already, but ends in (1,1,w) while starting with b:
        // gap feasibility can fail, so the extension appends one g
        let p = pat("0,0,b;1,1,w");
        assert!(is_overlap_free(&p));
        assert!(!fits_every_gap(&p));
        let fixed = extend_overlap_free(&p, 4).unwrap();
        assert_eq!(fixed.walk(), &w("0,0,b;1,1,w;0,0,g"));
        assert!(fits_every_gap(&fixed));
    }

    #[test]
    fn single_vertex_insertions_cover_both_gaps() {
        let host = w("0,0,g");
        let p = pat("0,0,r");
        assert_eq!(insert_copies(&host, &p, &[0]).unwrap(), w("0,0,r;0,0,g"));
        assert_eq!(insert_copies(&host, &p, &[1]).unwrap(), w("0,0,g;0,0,r"));
        assert_eq!(insert_copies(&host, &p, &[]).unwrap(), host);
        let fam = insertion_family(&host, &p, 1).unwrap();
        assert_eq!(fam, vec![w("0,0,r;0,0,g"), w("0,0,g;0,0,r")]);
    }

    #[test]
    fn infeasible_gap_is_reported_for_corner_ending_patterns() {
        // the host drops x right after a b vertex; a copy ending at (1,1,w)
        // squeezed into that gap would need an offset that is both >= 1
        // (left seam) and <= 0 (right seam)
        let host = w("0,0,b;1,1,b;2,0,w;1,0,w");
        assert!(host.is_admissible());
        let p = pat("0,0,b;1,1,w");
        assert_eq!(
            insert_copies(&host, &p, &[2]),
            Err(InsertionError::NoFeasibleOffset { gap: 2 })
        );
        // the same pattern fits at other gaps
        assert!(insert_copies(&host, &p, &[0]).is_ok());
        assert!(insert_copies(&host, &p, &[4]).is_ok());
    }

    #[test]
    fn removal_inverts_insertion() {
        assert_eq!(
            remove_copies(&w("0,0,r;0,0,g"), &pat("0,0,r"), 1).unwrap(),
            w("0,0,g")
        );
        let host = w("0,0,b;1,0,g;1,1,r;1,0,r;1,1,r;1,0,w");
        assert_eq!(remove_copies(&host, &pat("0,0,r"), 0).unwrap(), host);
        assert_eq!(
            remove_copies(&w("0,0,g"), &pat("0,0,r"), 1),
            Err(InsertionError::MissingOccurrence { round: 1 })
        );
    }

    #[test]
    fn repeated_gap_stacks_copies() {
        let host = w("0,0,g");
        let p = pat("0,0,r");
        let doubled = insert_copies(&host, &p, &[1, 1]).unwrap();
        assert_eq!(doubled, w("0,0,g;0,0,r;0,0,r"));
        assert_eq!(remove_copies(&doubled, &p, 2).unwrap(), host);
    }

    #[test]
    fn family_rejects_hosts_containing_the_pattern() {
        assert_eq!(
            insertion_family(&w("0,0,r"), &pat("0,0,r"), 1),
            Err(InsertionError::HostContainsPattern)
        );
    }

    #[test]
    fn gap_multisets_have_binomial_size() {
        // multisets of size q over n+1 gaps: C(n+1+q-1, q)
        assert_eq!(gap_multisets(6, 2).len(), 28);
        assert_eq!(gap_multisets(0, 3).len(), 1);
        assert_eq!(gap_multisets(3, 0).len(), 1);
    }
}
