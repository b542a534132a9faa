//! Segment configurations of rectangulations and geometric patterns.
//!
//! A rectangulation is represented by its maximal interior segments. Two
//! configurations are weakly equivalent when some orientation-preserving
//! bijection keeps every T-contact with its type and the neighbor order
//! along each segment on each side separately; strong equivalence also keeps
//! the combined left-right order interleaved along every segment. A pattern
//! is a configuration used as the thing to look for: a rectangulation
//! contains it if an injection into its segments preserves orientation, the
//! pattern's contacts, and the combined neighbor orders.
//!
//! Equivalence of interior configurations is coarser than equality of the
//! underlying partitions: ends resting on the bounding box carry no order.
//! [`rectangulations_equivalent`] closes that gap by comparing
//! configurations extended with the four boundary sides.

mod complete;
mod contains;
mod count;
mod equiv;
mod seg;

pub use complete::{complete_pattern, CompleteError};
pub use contains::{config_contains, contains_pattern, contains_pattern_induced};
pub use count::count_avoiding_rect;
pub use equiv::{rectangulations_equivalent, strong_equivalent, weak_equivalent};
pub use seg::{seg, seg_with_frame};

use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Orientation {
    Horizontal,
    Vertical,
}

/// One end of a segment: `Lo` is the left end of a horizontal segment and
/// the bottom end of a vertical one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum End {
    Lo,
    Hi,
}

/// How an endpoint rests on the interior of a perpendicular segment. The
/// first word names the resting end: `VTopOnH` is a vertical segment whose
/// top end touches a horizontal one, so the vertical hangs below it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ContactType {
    VTopOnH,
    VBottomOnH,
    HLeftOnV,
    HRightOnV,
}

/// Axis-parallel open segment. A horizontal segment runs along `y = axis`
/// from `x = lo` to `x = hi`; a vertical one along `x = axis` from `y = lo`
/// to `y = hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Segment {
    pub id: usize,
    pub orientation: Orientation,
    pub axis: i64,
    pub lo: i64,
    pub hi: i64,
}

impl Segment {
    pub fn horizontal(id: usize, axis: i64, lo: i64, hi: i64) -> Segment {
        Segment {
            id,
            orientation: Orientation::Horizontal,
            axis,
            lo,
            hi,
        }
    }

    pub fn vertical(id: usize, axis: i64, lo: i64, hi: i64) -> Segment {
        Segment {
            id,
            orientation: Orientation::Vertical,
            axis,
            lo,
            hi,
        }
    }

    /// Plane coordinates of the given end.
    pub fn endpoint(&self, end: End) -> (i64, i64) {
        let along = match end {
            End::Lo => self.lo,
            End::Hi => self.hi,
        };
        match self.orientation {
            Orientation::Horizontal => (along, self.axis),
            Orientation::Vertical => (self.axis, along),
        }
    }
}

/// A T-junction: `end` of segment `segment` rests strictly inside `host`.
/// `host_position` is the coordinate of the contact point along the host.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Incidence {
    pub segment: usize,
    pub end: End,
    pub host: usize,
    pub contact: ContactType,
    pub host_position: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConfigError {
    /// Some segment has `lo >= hi`.
    EmptySpan { id: usize },
    DuplicateId { id: usize },
    /// Two perpendicular segments pass through each other.
    Crossing { a: usize, b: usize },
    /// Two segments share an endpoint or overlap collinearly.
    Touching { a: usize, b: usize },
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ConfigError::EmptySpan { id } => write!(f, "segment {id} has an empty span"),
            ConfigError::DuplicateId { id } => write!(f, "segment id {id} appears twice"),
            ConfigError::Crossing { a, b } => write!(f, "segments {a} and {b} cross"),
            ConfigError::Touching { a, b } => {
                write!(f, "segments {a} and {b} touch at an endpoint or overlap")
            }
        }
    }
}

/// An entry of a segment's neighbor list: a contact point at `position`
/// along the segment where `neighbor`'s end rests, with its contact type.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NeighborEntry {
    pub position: i64,
    pub neighbor: usize,
    pub contact: ContactType,
}

/// A validated configuration of segments: no two segments cross or share
/// endpoints, so every contact is a T-junction strictly inside its host.
/// Incidences and neighbor orders are derived from the coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentConfig {
    segments: Vec<Segment>,
    incidences: Vec<Incidence>,
    /// Per segment (same order as `segments`): contact points along it,
    /// sorted by position; this is the combined neighbor order, and the
    /// side-restricted orders are its subsequences by contact type.
    neighbors: Vec<Vec<NeighborEntry>>,
}

impl SegmentConfig {
    pub fn new(mut segments: Vec<Segment>) -> Result<SegmentConfig, ConfigError> {
        for s in &segments {
            if s.lo >= s.hi {
                return Err(ConfigError::EmptySpan { id: s.id });
            }
        }
        segments.sort_by_key(|s| s.id);
        for w in segments.windows(2) {
            if w[0].id == w[1].id {
                return Err(ConfigError::DuplicateId { id: w[0].id });
            }
        }

        let mut incidences: Vec<Incidence> = Vec::new();
        for (i, a) in segments.iter().enumerate() {
            for b in segments.iter().skip(i + 1) {
                check_pair(a, b, &mut incidences)?;
            }
        }
        incidences.sort_by_key(|inc| (inc.segment, inc.end));

        let mut neighbors: Vec<Vec<NeighborEntry>> = alloc::vec![Vec::new(); segments.len()];
        for inc in &incidences {
            let host_ix = segments.iter().position(|s| s.id == inc.host).unwrap();
            neighbors[host_ix].push(NeighborEntry {
                position: inc.host_position,
                neighbor: inc.segment,
                contact: inc.contact,
            });
        }
        for list in &mut neighbors {
            list.sort_by_key(|e| e.position);
        }

        Ok(SegmentConfig {
            segments,
            incidences,
            neighbors,
        })
    }

    pub fn empty() -> SegmentConfig {
        SegmentConfig {
            segments: Vec::new(),
            incidences: Vec::new(),
            neighbors: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    /// Segments sorted by id.
    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    /// All T-junctions, sorted by (resting segment, end).
    pub fn incidences(&self) -> &[Incidence] {
        &self.incidences
    }

    /// Contact points along the segment at `index` (position in
    /// [`segments`](Self::segments)), sorted by coordinate.
    pub fn neighbors(&self, index: usize) -> &[NeighborEntry] {
        &self.neighbors[index]
    }

    /// The contact resting the given end of the segment at `index` on some
    /// host, if that end is not free.
    pub fn end_contact(&self, index: usize, end: End) -> Option<ContactType> {
        let id = self.segments[index].id;
        self.incidences
            .iter()
            .find(|inc| inc.segment == id && inc.end == end)
            .map(|inc| inc.contact)
    }
}

fn check_pair(a: &Segment, b: &Segment, incidences: &mut Vec<Incidence>) -> Result<(), ConfigError> {
    use Orientation::{Horizontal, Vertical};
    match (a.orientation, b.orientation) {
        (Horizontal, Horizontal) | (Vertical, Vertical) => {
            if a.axis == b.axis && a.lo <= b.hi && b.lo <= a.hi {
                return Err(ConfigError::Touching { a: a.id, b: b.id });
            }
            Ok(())
        }
        (Horizontal, Vertical) => check_h_v(a, b, incidences),
        (Vertical, Horizontal) => check_h_v(b, a, incidences),
    }
}

fn check_h_v(h: &Segment, v: &Segment, incidences: &mut Vec<Incidence>) -> Result<(), ConfigError> {
    let x_inside = h.lo < v.axis && v.axis < h.hi;
    let y_inside = v.lo < h.axis && h.axis < v.hi;
    if x_inside && y_inside {
        return Err(ConfigError::Crossing { a: h.id, b: v.id });
    }
    let x_touches = v.axis == h.lo || v.axis == h.hi;
    let y_touches = h.axis == v.lo || h.axis == v.hi;
    if x_touches && y_touches {
        return Err(ConfigError::Touching { a: h.id, b: v.id });
    }
    if x_inside && y_touches {
        // an end of the vertical rests inside the horizontal
        let (end, contact) = if h.axis == v.hi {
            (End::Hi, ContactType::VTopOnH)
        } else {
            (End::Lo, ContactType::VBottomOnH)
        };
        incidences.push(Incidence {
            segment: v.id,
            end,
            host: h.id,
            contact,
            host_position: v.axis,
        });
    }
    if y_inside && x_touches {
        // an end of the horizontal rests inside the vertical
        let (end, contact) = if v.axis == h.lo {
            (End::Lo, ContactType::HLeftOnV)
        } else {
            (End::Hi, ContactType::HRightOnV)
        };
        incidences.push(Incidence {
            segment: h.id,
            end,
            host: v.id,
            contact,
            host_position: h.axis,
        });
    }
    Ok(())
}

/// A segment configuration used as the object to search for inside a
/// rectangulation. The size of the pattern is its number of segments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeomPattern {
    config: SegmentConfig,
}

impl GeomPattern {
    pub fn new(config: SegmentConfig) -> GeomPattern {
        GeomPattern { config }
    }

    pub fn empty() -> GeomPattern {
        GeomPattern {
            config: SegmentConfig::empty(),
        }
    }

    pub fn size(&self) -> usize {
        self.config.len()
    }

    pub fn config(&self) -> &SegmentConfig {
        &self.config
    }
}
