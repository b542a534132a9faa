//! Depth-first enumeration of walks in lexicographic order.
//!
//! Enumeration streams lazily. For the admissible and excursion classes the
//! stream is finite; for the open classes (no constraint on the starting
//! vertex) it is infinite but every walk appears at a finite position.
//! Pruning: a vertex at height h with k steps remaining is only generated if
//! the class's closing condition is still reachable (h <= k for excursions,
//! h <= k + 1 for admissible walks).

use alloc::vec::Vec;
use core::fmt;

use super::{admissible_end, leftmost_lower_bound, Color, Vertex, Walk, WalkClass, COLORS};

/// Enumeration over Hqw or Lhqw was asked to do something that requires a
/// finite walk set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InfiniteClassError(pub WalkClass);

impl fmt::Display for InfiniteClassError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "class {} is infinite at positive lengths", self.0.name())
    }
}

/// Candidates for one non-initial position, in lex order (x ascending, then
/// color). The height is forced by the previous vertex; `lb` holds the
/// per-color minimum x.
struct CandIter {
    h: i32,
    x: i32,
    rank: u8,
    lb: [i32; 4],
}

impl CandIter {
    fn next(&mut self) -> Option<Vertex> {
        while self.x <= self.h {
            while self.rank < 4 {
                let r = self.rank as usize;
                self.rank += 1;
                if self.x >= self.lb[r] {
                    return Some(Vertex::new(self.h, self.x, COLORS[r]));
                }
            }
            self.x += 1;
            self.rank = 0;
        }
        None
    }
}

/// Candidates for the first position.
enum FirstIter {
    /// (0,0,c) with c limited to the class's legal starts.
    Fixed { rank: u8, include_w: bool },
    /// Every quadrant vertex, ascending. Never exhausted.
    Open { h: i32, x: i32, rank: u8 },
}

impl FirstIter {
    fn next(&mut self) -> Option<Vertex> {
        match self {
            FirstIter::Fixed { rank, include_w } => {
                while *rank < 4 {
                    let c = COLORS[*rank as usize];
                    *rank += 1;
                    if c == Color::W && !*include_w {
                        continue;
                    }
                    return Some(Vertex::new(0, 0, c));
                }
                None
            }
            FirstIter::Open { h, x, rank } => {
                let v = Vertex::new(*h, *x, COLORS[*rank as usize]);
                *rank += 1;
                if *rank == 4 {
                    *rank = 0;
                    *x += 1;
                    if *x > *h {
                        *x = 0;
                        *h += 1;
                    }
                }
                Some(v)
            }
        }
    }
}

enum Frame {
    First(FirstIter),
    Rest(CandIter),
}

impl Frame {
    fn next(&mut self) -> Option<Vertex> {
        match self {
            Frame::First(it) => it.next(),
            Frame::Rest(it) => it.next(),
        }
    }
}

/// Candidate frame for the vertex at 1-based position `pos`, following
/// `prev`. None when the height leaves the quadrant or the class's closing
/// condition becomes unreachable.
fn frame_after(prev: Vertex, pos: usize, n: usize, class: WalkClass) -> Option<CandIter> {
    let h = prev.h + prev.c.delta();
    if h < 0 {
        return None;
    }
    let rem = (n - pos) as i32;
    match class {
        WalkClass::Lhqe if h > rem => return None,
        WalkClass::LhqwAdm if h > rem + 1 => return None,
        _ => {}
    }
    let mut lb = [0i32; 4];
    if class != WalkClass::Hqw {
        for (i, c2) in COLORS.iter().enumerate() {
            lb[i] = leftmost_lower_bound(prev.x, prev.c, *c2).max(0);
        }
    }
    Some(CandIter { h, x: 0, rank: 0, lb })
}

fn first_frame(class: WalkClass) -> FirstIter {
    match class {
        WalkClass::Hqw | WalkClass::Lhqw => FirstIter::Open { h: 0, x: 0, rank: 0 },
        WalkClass::LhqwAdm => FirstIter::Fixed { rank: 0, include_w: false },
        WalkClass::Lhqe => FirstIter::Fixed { rank: 0, include_w: true },
    }
}

/// Lazy walk stream; see [`enumerate`] and [`completions`].
pub struct WalkStream {
    n: usize,
    target: usize,
    class: WalkClass,
    filter_end: bool,
    base: usize,
    path: Vec<Vertex>,
    frames: Vec<Frame>,
    started: bool,
    done: bool,
}

impl WalkStream {
    fn new(prefix: &Walk, n: usize, target: usize, class: WalkClass, filter_end: bool) -> WalkStream {
        let ok = prefix_viable(prefix, n, class);
        WalkStream {
            n,
            target,
            class,
            filter_end,
            base: prefix.len(),
            path: prefix.vertices().to_vec(),
            frames: Vec::new(),
            started: false,
            done: !ok,
        }
    }

    fn emission_ok(&self) -> bool {
        if !self.filter_end {
            return true;
        }
        match self.class {
            WalkClass::Hqw | WalkClass::Lhqw => true,
            WalkClass::LhqwAdm => self.path.last().map_or(true, |v| admissible_end(*v)),
            WalkClass::Lhqe => self
                .path
                .last()
                .map_or(false, |v| *v == Vertex::new(0, 0, Color::W)),
        }
    }

    /// Moves to the next complete walk, leaving it in `self.path`.
    fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        if !self.started {
            self.started = true;
            if self.path.len() == self.target {
                self.done = true;
                return self.emission_ok();
            }
            if self.base == 0 {
                self.frames.push(Frame::First(first_frame(self.class)));
            } else {
                let prev = self.path[self.base - 1];
                match frame_after(prev, self.base + 1, self.n, self.class) {
                    Some(fr) => self.frames.push(Frame::Rest(fr)),
                    None => {
                        self.done = true;
                        return false;
                    }
                }
            }
        } else if self.path.len() == self.target {
            self.path.pop();
        }
        loop {
            let top = match self.frames.last_mut() {
                Some(f) => f,
                None => {
                    self.done = true;
                    return false;
                }
            };
            match top.next() {
                None => {
                    self.frames.pop();
                    if self.path.len() > self.base {
                        self.path.pop();
                    }
                }
                Some(v) => {
                    self.path.push(v);
                    if self.path.len() == self.target {
                        if self.emission_ok() {
                            return true;
                        }
                        self.path.pop();
                    } else {
                        match frame_after(v, self.path.len() + 1, self.n, self.class) {
                            Some(fr) => self.frames.push(Frame::Rest(fr)),
                            None => {
                                self.path.pop();
                            }
                        }
                    }
                }
            }
        }
    }
}

impl Iterator for WalkStream {
    type Item = Walk;
    fn next(&mut self) -> Option<Walk> {
        if self.advance() {
            Some(Walk::new(self.path.clone()))
        } else {
            None
        }
    }
}

/// Checks that a prefix can begin a length-n walk of the class.
fn prefix_viable(prefix: &Walk, n: usize, class: WalkClass) -> bool {
    if prefix.len() > n || !prefix.is_history() {
        return false;
    }
    if class != WalkClass::Hqw && !prefix.vertices().windows(2).all(|p| {
        p[1].x >= leftmost_lower_bound(p[0].x, p[0].c, p[1].c)
    }) {
        return false;
    }
    if let Some(first) = prefix.get(0) {
        match class {
            WalkClass::Hqw | WalkClass::Lhqw => {}
            WalkClass::LhqwAdm => {
                if !(first.h == 0 && first.x == 0 && first.c != Color::W) {
                    return false;
                }
            }
            WalkClass::Lhqe => {
                if !(first.h == 0 && first.x == 0) {
                    return false;
                }
            }
        }
    }
    for (i, v) in prefix.vertices().iter().enumerate() {
        let rem = (n - (i + 1)) as i32;
        let bound = match class {
            WalkClass::Lhqe => rem,
            WalkClass::LhqwAdm => rem + 1,
            _ => i32::MAX,
        };
        if v.h > bound {
            return false;
        }
    }
    true
}

/// All walks of the class with the given length, in lex order. Infinite for
/// Hqw and Lhqw at n >= 1.
pub fn enumerate(n: usize, class: WalkClass) -> WalkStream {
    WalkStream::new(&Walk::empty(), n, n, class, true)
}

/// All length-n walks of the class extending the prefix, in lex order. An
/// unusable prefix yields an empty stream.
pub fn completions(prefix: &Walk, n: usize, class: WalkClass) -> WalkStream {
    WalkStream::new(prefix, n, n, class, true)
}

/// Visits every walk of a finite class at length n without materializing.
pub fn for_each_walk<F: FnMut(&[Vertex])>(
    n: usize,
    class: WalkClass,
    mut f: F,
) -> Result<(), InfiniteClassError> {
    if !class.is_finite() && n > 0 {
        return Err(InfiniteClassError(class));
    }
    let mut st = enumerate(n, class);
    while st.advance() {
        f(&st.path);
    }
    Ok(())
}

/// Deterministic shard keys: every viable prefix of length min(depth, n).
/// Concatenating `completions` over the keys in order reproduces
/// `enumerate(n, class)` exactly.
pub fn shard_prefixes(
    n: usize,
    class: WalkClass,
    depth: usize,
) -> Result<Vec<Walk>, InfiniteClassError> {
    if !class.is_finite() && n > 0 {
        return Err(InfiniteClassError(class));
    }
    let d = depth.min(n);
    let st = WalkStream::new(&Walk::empty(), n, d, class, false);
    Ok(st.collect())
}
