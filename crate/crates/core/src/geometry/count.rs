//! Counting rectangulations that avoid a geometric pattern.

use num_bigint::BigUint;
use num_traits::Zero;

use super::{config_contains, seg, GeomPattern};
use crate::paving::pave;
use crate::walk::{enumerate, WalkClass};

/// Number of rectangulations with `n` rectangles, counted through their
/// excursions, whose pavement does not contain the pattern. Exhaustive
/// over all excursions of length `n`, so the cost grows like the counting
/// sequence itself; callers enforce their own size limits.
pub fn count_avoiding_rect(n: usize, p: &GeomPattern) -> BigUint {
    let mut avoiders = BigUint::zero();
    for e in enumerate(n, WalkClass::Lhqe) {
        let r = pave(&e).expect("excursions pave to rectangulations");
        if !config_contains(&seg(&r), p.config(), false) {
            avoiders += 1u32;
        }
    }
    avoiders
}
