//! Avoidance counting by dynamic programming.
//!
//! The state after m vertices is (h, x, color, matcher state). Transitions
//! follow the history recurrence and the leftmost bounds; the matcher state
//! advances on (color, x-difference) and any transition completing a full
//! pattern occurrence is dropped. Summing the class's legal end states after
//! n layers counts the avoiding walks exactly.

use alloc::vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::FactorPattern;
use crate::walk::{
    admissible_end, leftmost_lower_bound, Color, InfiniteClassError, Vertex, WalkClass, COLORS,
};

/// Number of avoiding walks of the class at length n. Errors on the classes
/// with unboundedly many walks per length.
pub fn count_avoiding(
    n: usize,
    class: WalkClass,
    p: &FactorPattern,
) -> Result<BigUint, InfiniteClassError> {
    dp(n, class, Some(p))
}

/// Number of all walks of the class at length n.
pub fn count_all(n: usize, class: WalkClass) -> Result<BigUint, InfiniteClassError> {
    dp(n, class, None)
}

fn color_index(c: Color) -> usize {
    match c {
        Color::B => 0,
        Color::R => 1,
        Color::G => 2,
        Color::W => 3,
    }
}

/// Matcher transition that treats a completed occurrence as a dead state.
fn step(p: Option<&FactorPattern>, j: usize, c: Color, xd: Option<i32>) -> Option<usize> {
    match p {
        None => Some(0),
        Some(p) => {
            let nj = p.step(j, c, xd);
            if nj == p.len() {
                None
            } else {
                Some(nj)
            }
        }
    }
}

fn end_accepts(class: WalkClass, v: Vertex) -> bool {
    match class {
        WalkClass::Hqw | WalkClass::Lhqw => true,
        WalkClass::LhqwAdm => admissible_end(v),
        WalkClass::Lhqe => v == Vertex::new(0, 0, Color::W),
    }
}

fn dp(
    n: usize,
    class: WalkClass,
    p: Option<&FactorPattern>,
) -> Result<BigUint, InfiniteClassError> {
    if !class.is_finite() && n > 0 {
        return Err(InfiniteClassError(class));
    }
    if n == 0 {
        // only the excursion class excludes the empty walk
        return Ok(if class == WalkClass::Lhqe {
            BigUint::zero()
        } else {
            BigUint::one()
        });
    }
    let states = p.map_or(1, |p| p.len());
    let tri = |h: usize| h * (h + 1) / 2;
    let idx = |h: i32, x: i32, c: Color, j: usize| {
        ((tri(h as usize) + x as usize) * 4 + color_index(c)) * states + j
    };
    let size = tri(n + 1) * 4 * states;
    let mut cur = vec![BigUint::zero(); size];

    let first_colors: &[Color] = match class {
        WalkClass::LhqwAdm => &[Color::B, Color::R, Color::G],
        _ => &COLORS,
    };
    for &c in first_colors {
        if let Some(j) = step(p, 0, c, None) {
            cur[idx(0, 0, c, j)] += 1u32;
        }
    }

    for m in 2..=n {
        let mut next = vec![BigUint::zero(); size];
        // heights after m vertices still able to close: rem steps remain
        let rem = (n - m) as i32;
        let h_cap = match class {
            WalkClass::Lhqe => rem,
            WalkClass::LhqwAdm => rem + 1,
            _ => n as i32,
        };
        for h in 0..=(m - 2).min(n) as i32 {
            for x in 0..=h {
                for c in COLORS {
                    let h2 = h + c.delta();
                    if h2 < 0 || h2 > h_cap {
                        continue;
                    }
                    for j in 0..states {
                        let v = &cur[idx(h, x, c, j)];
                        if v.is_zero() {
                            continue;
                        }
                        let v = v.clone();
                        for c2 in COLORS {
                            let x_min = leftmost_lower_bound(x, c, c2).max(0);
                            for x2 in x_min..=h2 {
                                if let Some(j2) = step(p, j, c2, Some(x2 - x)) {
                                    next[idx(h2, x2, c2, j2)] += &v;
                                }
                            }
                        }
                    }
                }
            }
        }
        cur = next;
    }

    let mut total = BigUint::zero();
    for h in 0..=n as i32 {
        for x in 0..=h {
            for c in COLORS {
                if !end_accepts(class, Vertex::new(h, x, c)) {
                    continue;
                }
                for j in 0..states {
                    total += &cur[idx(h, x, c, j)];
                }
            }
        }
    }
    Ok(total)
}
