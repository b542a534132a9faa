//! Colored quadrant walks and the operators on them.
//!
//! A vertex is a triple (h, x, c): height, slot position, color.  A history
//! walk obeys h >= x >= 0 pointwise and the height recurrence
//! h_{m+1} = h_m + delta(c_m).  The leftmost condition constrains how far x
//! may fall between consecutive vertices; see [`leftmost_lower_bound`].

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

mod enumerate;
mod text;

pub use enumerate::{
    completions, enumerate, for_each_walk, shard_prefixes, InfiniteClassError, WalkStream,
};
pub use text::{ParseWalkError, ParseWalkErrorKind};

/// Vertex color. The derived order b < r < g < w is the enumeration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    B,
    R,
    G,
    W,
}

pub const COLORS: [Color; 4] = [Color::B, Color::R, Color::G, Color::W];

impl Color {
    /// Height increment applied to the vertex after one of this color.
    pub fn delta(self) -> i32 {
        match self {
            Color::B => 1,
            Color::R | Color::G => 0,
            Color::W => -1,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Color::B => 'b',
            Color::R => 'r',
            Color::G => 'g',
            Color::W => 'w',
        }
    }

    pub fn from_char(ch: char) -> Option<Color> {
        match ch {
            'b' => Some(Color::B),
            'r' => Some(Color::R),
            'g' => Some(Color::G),
            'w' => Some(Color::W),
            _ => None,
        }
    }
}

/// Walk vertex. Coordinates are signed so that translates can leave the
/// quadrant; the class predicates enforce h >= x >= 0 where it matters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    pub h: i32,
    pub x: i32,
    pub c: Color,
}

impl Vertex {
    pub fn new(h: i32, x: i32, c: Color) -> Vertex {
        Vertex { h, x, c }
    }

    pub fn in_quadrant(self) -> bool {
        self.h >= self.x && self.x >= 0
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.h, self.x, self.c.to_char())
    }
}

/// Lower bound on the next x coordinate after a vertex with slot x and color
/// c, when the next vertex has color c2. This is the leftmost condition: the
/// slot may never drop by more than one, and not at all on a (b|r) -> (b|g)
/// pair.
pub fn leftmost_lower_bound(x: i32, c: Color, c2: Color) -> i32 {
    if matches!(c, Color::B | Color::R) && matches!(c2, Color::B | Color::G) {
        x
    } else {
        x - 1
    }
}

fn admissible_start(v: Vertex) -> bool {
    v.h == 0 && v.x == 0 && v.c != Color::W
}

pub(crate) fn admissible_end(v: Vertex) -> bool {
    matches!(
        (v.h, v.x, v.c),
        (0, 0, Color::R) | (0, 0, Color::G) | (1, 0, Color::W) | (1, 1, Color::W)
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WalkError {
    /// The walk violates h >= x >= 0 or the height recurrence.
    NotHistoryWalk,
    /// star() requires an excursion.
    NotExcursion,
    /// bar() requires an admissible walk.
    NotAdmissible,
}

impl fmt::Display for WalkError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WalkError::NotHistoryWalk => write!(f, "not a history walk"),
            WalkError::NotExcursion => write!(f, "not an excursion"),
            WalkError::NotAdmissible => write!(f, "not an admissible walk"),
        }
    }
}

/// A walk: a finite vertex sequence. Ordering is lexicographic, which is the
/// enumeration order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Walk(Vec<Vertex>);

impl Walk {
    pub fn new(vertices: Vec<Vertex>) -> Walk {
        Walk(vertices)
    }

    pub fn empty() -> Walk {
        Walk(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn get(&self, i: usize) -> Option<Vertex> {
        self.0.get(i).copied()
    }

    /// True iff every vertex satisfies h >= x >= 0 and consecutive heights
    /// obey h_{m+1} = h_m + delta(c_m).
    pub fn is_history(&self) -> bool {
        for v in &self.0 {
            if !v.in_quadrant() {
                return false;
            }
        }
        for pair in self.0.windows(2) {
            if pair[1].h != pair[0].h + pair[0].c.delta() {
                return false;
            }
        }
        true
    }

    /// Leftmost condition. Walks that are not history walks are reported as
    /// an error, never as `false`.
    pub fn is_leftmost(&self) -> Result<bool, WalkError> {
        if !self.is_history() {
            return Err(WalkError::NotHistoryWalk);
        }
        Ok(self.leftmost_pairs_hold())
    }

    fn leftmost_pairs_hold(&self) -> bool {
        self.0
            .windows(2)
            .all(|p| p[1].x >= leftmost_lower_bound(p[0].x, p[0].c, p[1].c))
    }

    /// Leftmost history walk whose first vertex is (0,0,b|r|g) and whose last
    /// vertex closes back to height zero. The empty walk is admissible.
    pub fn is_admissible(&self) -> bool {
        if !self.is_history() || !self.leftmost_pairs_hold() {
            return false;
        }
        match (self.0.first(), self.0.last()) {
            (None, None) => true,
            (Some(&f), Some(&l)) => admissible_start(f) && admissible_end(l),
            _ => unreachable!(),
        }
    }

    /// Leftmost history walk from (0,0) ending with the vertex (0,0,w).
    /// Requires length >= 1.
    pub fn is_excursion(&self) -> bool {
        if self.0.is_empty() || !self.is_history() || !self.leftmost_pairs_hold() {
            return false;
        }
        let first = self.0[0];
        let last = self.0[self.0.len() - 1];
        first.h == 0 && first.x == 0 && last == Vertex::new(0, 0, Color::W)
    }

    /// Drops the final (0,0,w) of an excursion, yielding an admissible walk.
    pub fn star(&self) -> Result<Walk, WalkError> {
        if !self.is_excursion() {
            return Err(WalkError::NotExcursion);
        }
        Ok(Walk(self.0[..self.0.len() - 1].to_vec()))
    }

    /// Appends (0,0,w) to an admissible walk, yielding an excursion.
    pub fn bar(&self) -> Result<Walk, WalkError> {
        if !self.is_admissible() {
            return Err(WalkError::NotAdmissible);
        }
        let mut v = self.0.clone();
        v.push(Vertex::new(0, 0, Color::W));
        Ok(Walk(v))
    }

    /// Shifts every vertex by (dh, dx). Pure arithmetic; the result may leave
    /// the quadrant.
    pub fn translate(&self, dh: i32, dx: i32) -> Walk {
        Walk(
            self.0
                .iter()
                .map(|v| Vertex::new(v.h + dh, v.x + dx, v.c))
                .collect(),
        )
    }

    /// Height after consuming the whole walk, starting from the first
    /// vertex's height. None for the empty walk.
    pub fn exit_height(&self) -> Option<i32> {
        self.0.last().map(|l| l.h + l.c.delta())
    }

    /// Canonical text form, parseable by [`Walk::parse`].
    pub fn format(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                s.push(';');
            }
            let _ = write!(s, "{v}");
        }
        s
    }

    pub fn parse(input: &str) -> Result<Walk, ParseWalkError> {
        text::parse(input)
    }
}

impl fmt::Display for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format())
    }
}

impl core::str::FromStr for Walk {
    type Err = ParseWalkError;
    fn from_str(s: &str) -> Result<Walk, ParseWalkError> {
        text::parse(s)
    }
}

/// The four walk classes. Hqw and Lhqw place no constraint on the starting
/// height, so they are infinite at every positive length; LhqwAdm and Lhqe
/// are finite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WalkClass {
    Hqw,
    Lhqw,
    LhqwAdm,
    Lhqe,
}

impl WalkClass {
    pub fn contains(self, w: &Walk) -> bool {
        match self {
            WalkClass::Hqw => w.is_history(),
            WalkClass::Lhqw => w.is_history() && w.leftmost_pairs_hold(),
            WalkClass::LhqwAdm => w.is_admissible(),
            WalkClass::Lhqe => w.is_excursion(),
        }
    }

    /// Whether the class has finitely many walks of each length.
    pub fn is_finite(self) -> bool {
        matches!(self, WalkClass::LhqwAdm | WalkClass::Lhqe)
    }

    pub fn name(self) -> &'static str {
        match self {
            WalkClass::Hqw => "hqw",
            WalkClass::Lhqw => "lhqw",
            WalkClass::LhqwAdm => "lhqwadm",
            WalkClass::Lhqe => "lhqe",
        }
    }
}

impl core::str::FromStr for WalkClass {
    type Err = ();
    fn from_str(s: &str) -> Result<WalkClass, ()> {
        match s {
            "hqw" => Ok(WalkClass::Hqw),
            "lhqw" => Ok(WalkClass::Lhqw),
            "lhqwadm" => Ok(WalkClass::LhqwAdm),
            "lhqe" => Ok(WalkClass::Lhqe),
            _ => Err(()),
        }
    }
}
