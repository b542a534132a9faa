//! Factor matching on walks, up to translation.
//!
//! A factor of a history walk equals a translate of a pattern exactly when
//! their color sequences and x-difference sequences agree: the colors force
//! the height differences through the recurrence, so the key (colors, x
//! diffs) characterizes the translation class.  Matching is therefore plain
//! string matching over the key alphabet, with the twist that a pattern's
//! first symbol carries no x-difference and is compared on color alone.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::walk::{Color, Vertex, Walk};

mod count;
mod insert;

pub use count::{count_all, count_avoiding};
pub use insert::{
    extend_overlap_free, insert_copies, insertion_family, remove_copies, ExtendError,
    InsertionError,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatternError {
    Empty,
    NotHistoryWalk,
    NotLeftmost,
}

impl fmt::Display for PatternError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternError::Empty => write!(f, "pattern must have at least one vertex"),
            PatternError::NotHistoryWalk => write!(f, "pattern must be a history walk"),
            PatternError::NotLeftmost => write!(f, "pattern must be leftmost"),
        }
    }
}

/// True when `b` is a translate of `a`. Both slices must come from history
/// walks so that equal colors force equal height differences.
fn is_translate(a: &[Vertex], b: &[Vertex]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if !a.iter().zip(b).all(|(u, v)| u.c == v.c) {
        return false;
    }
    a.windows(2)
        .zip(b.windows(2))
        .all(|(u, v)| u[1].x - u[0].x == v[1].x - v[0].x)
}

/// A forbidden factor: a nonempty leftmost history walk, matched in host
/// walks up to translation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorPattern {
    walk: Walk,
    colors: Vec<Color>,
    xdiffs: Vec<i32>,
    /// border[j] = length of the longest proper prefix of the length-j
    /// prefix that is a translate of its suffix; drives the matcher's
    /// fallback on mismatch.
    border: Vec<usize>,
}

impl FactorPattern {
    pub fn new(walk: Walk) -> Result<FactorPattern, PatternError> {
        if walk.is_empty() {
            return Err(PatternError::Empty);
        }
        match walk.is_leftmost() {
            Err(_) => return Err(PatternError::NotHistoryWalk),
            Ok(false) => return Err(PatternError::NotLeftmost),
            Ok(true) => {}
        }
        let vs = walk.vertices();
        let colors = vs.iter().map(|v| v.c).collect();
        let xdiffs = vs.windows(2).map(|p| p[1].x - p[0].x).collect();
        let l = vs.len();
        let mut border = vec![0usize; l + 1];
        for j in 2..=l {
            for k in (1..j).rev() {
                if is_translate(&vs[..k], &vs[j - k..j]) {
                    border[j] = k;
                    break;
                }
            }
        }
        Ok(FactorPattern {
            walk,
            colors,
            xdiffs,
            border,
        })
    }

    pub fn walk(&self) -> &Walk {
        &self.walk
    }

    /// Pattern length; at least 1 by construction.
    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub(crate) fn first(&self) -> Vertex {
        self.walk.vertices()[0]
    }

    pub(crate) fn last(&self) -> Vertex {
        *self.walk.vertices().last().unwrap()
    }

    /// Can the text symbol (color, x-difference from the previous text
    /// vertex) sit at pattern position j? Position 0 matches on color only.
    fn symbol_matches(&self, j: usize, c: Color, xdiff: Option<i32>) -> bool {
        self.colors[j] == c && (j == 0 || xdiff == Some(self.xdiffs[j - 1]))
    }

    /// Matcher transition: longest pattern prefix that ends at the consumed
    /// text symbol. A return of len() means a full occurrence ends here.
    pub(crate) fn step(&self, state: usize, c: Color, xdiff: Option<i32>) -> usize {
        let mut j = state;
        loop {
            if self.symbol_matches(j, c, xdiff) {
                return j + 1;
            }
            if j == 0 {
                return 0;
            }
            j = self.border[j];
        }
    }

    pub(crate) fn match_restart(&self) -> usize {
        self.border[self.len()]
    }
}

/// Location of one factor occurrence. `start` is the 1-based index of the
/// occurrence's first vertex; (dh, dx) is the translation carrying the
/// pattern onto the factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Occurrence {
    pub start: usize,
    pub dh: i32,
    pub dx: i32,
}

fn occurrence_at(vs: &[Vertex], p: &FactorPattern, start0: usize) -> Occurrence {
    Occurrence {
        start: start0 + 1,
        dh: vs[start0].h - p.first().h,
        dx: vs[start0].x - p.first().x,
    }
}

pub(crate) fn find_occurrences_in(vs: &[Vertex], p: &FactorPattern) -> Vec<Occurrence> {
    let l = p.len();
    let mut out = Vec::new();
    let mut j = 0usize;
    for (t, v) in vs.iter().enumerate() {
        let xd = if t == 0 { None } else { Some(v.x - vs[t - 1].x) };
        j = p.step(j, v.c, xd);
        if j == l {
            out.push(occurrence_at(vs, p, t + 1 - l));
            j = p.match_restart();
        }
    }
    out
}

/// All occurrences of the pattern in the walk, ascending by start, overlaps
/// included. The walk must be a history walk.
pub fn find_occurrences(w: &Walk, p: &FactorPattern) -> Vec<Occurrence> {
    find_occurrences_in(w.vertices(), p)
}

/// Reference matcher: literal comparison against the translated pattern at
/// every window. Slow; exists to cross-check [`find_occurrences`].
pub fn find_occurrences_naive(w: &Walk, p: &FactorPattern) -> Vec<Occurrence> {
    let vs = w.vertices();
    let pv = p.walk().vertices();
    let l = pv.len();
    let mut out = Vec::new();
    if l > vs.len() {
        return out;
    }
    for s in 0..=vs.len() - l {
        let dh = vs[s].h - pv[0].h;
        let dx = vs[s].x - pv[0].x;
        let matches = (0..l)
            .all(|i| vs[s + i] == Vertex::new(pv[i].h + dh, pv[i].x + dx, pv[i].c));
        if matches {
            out.push(occurrence_at(vs, p, s));
        }
    }
    out
}

/// True iff the walk has no factor occurrence of the pattern.
pub fn avoids(w: &Walk, p: &FactorPattern) -> bool {
    let vs = w.vertices();
    let l = p.len();
    let mut j = 0usize;
    for (t, v) in vs.iter().enumerate() {
        let xd = if t == 0 { None } else { Some(v.x - vs[t - 1].x) };
        j = p.step(j, v.c, xd);
        if j == l {
            return false;
        }
    }
    true
}

/// True iff no proper prefix of the pattern is a translate of the suffix of
/// the same length. Overlap-free patterns have the property that two
/// occurrences in the same walk are equal or disjoint, which makes removing
/// inserted copies unambiguous.
pub fn is_overlap_free(p: &FactorPattern) -> bool {
    let vs = p.walk().vertices();
    let l = vs.len();
    (1..l).all(|k| !is_translate(&vs[..k], &vs[l - k..l]))
}
