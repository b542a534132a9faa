//! Exact count tables and the reports built on them: growth diagnostics,
//! the bound and radius formulas, the insertion counting inequality, and
//! avoider proportions.
//!
//! Every inequality and identity here is decided with arbitrary-precision
//! integers and rationals. Floating point appears only in the growth
//! diagnostics, which are labeled displays of finite data, not proofs of
//! anything asymptotic.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::geometry::{count_avoiding_rect, GeomPattern};
use crate::pattern::{avoids, count_all, count_avoiding, is_overlap_free, FactorPattern};
use crate::walk::{enumerate, InfiniteClassError, WalkClass};

/// How a table entry was computed. Both routes must agree wherever both
/// have been run; tests compare full tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Enumeration,
    Dp,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub value: BigUint,
    pub provenance: Provenance,
}

/// Counts of walks by length: the number of class members of length n, or
/// of members avoiding the attached pattern. Indices below zero count zero
/// and index zero counts the empty walk, so a table always has an entry
/// for n = 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    class: WalkClass,
    pattern: Option<FactorPattern>,
    entries: Vec<Entry>,
}

impl CountTable {
    pub fn class(&self) -> WalkClass {
        self.class
    }

    pub fn pattern(&self) -> Option<&FactorPattern> {
        self.pattern.as_ref()
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn n_max(&self) -> usize {
        self.entries.len() - 1
    }

    /// The count at n under the convention that negative lengths hold no
    /// walks. None only above the computed range.
    pub fn value(&self, n: i64) -> Option<BigUint> {
        if n < 0 {
            return Some(BigUint::zero());
        }
        self.entries.get(n as usize).map(|e| e.value.clone())
    }

    /// Same class and pattern, and equal values wherever both tables have
    /// an entry, regardless of how each was computed.
    pub fn agrees_with(&self, other: &CountTable) -> bool {
        self.class == other.class
            && self.pattern == other.pattern
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(a, b)| a.value == b.value)
    }
}

/// Counts by dynamic programming for 0 ≤ n ≤ n_max.
pub fn count_table(
    class: WalkClass,
    n_max: usize,
    pattern: Option<&FactorPattern>,
) -> Result<CountTable, InfiniteClassError> {
    let mut entries = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let value = match pattern {
            Some(p) => count_avoiding(n, class, p)?,
            None => count_all(n, class)?,
        };
        entries.push(Entry {
            value,
            provenance: Provenance::Dp,
        });
    }
    Ok(CountTable {
        class,
        pattern: pattern.cloned(),
        entries,
    })
}

/// Counts by filtered enumeration; the independent route for cross-checks.
pub fn count_table_by_enumeration(
    class: WalkClass,
    n_max: usize,
    pattern: Option<&FactorPattern>,
) -> Result<CountTable, InfiniteClassError> {
    if !class.is_finite() && n_max > 0 {
        return Err(InfiniteClassError(class));
    }
    let mut entries = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut value = BigUint::zero();
        for w in enumerate(n, class) {
            if pattern.is_none_or(|p| avoids(&w, p)) {
                value += 1u32;
            }
        }
        entries.push(Entry {
            value,
            provenance: Provenance::Enumeration,
        });
    }
    Ok(CountTable {
        class,
        pattern: pattern.cloned(),
        entries,
    })
}

/// The growth constant 27/2 as an exact rational.
pub fn lambda() -> BigRational {
    BigRational::new(BigInt::from(27), BigInt::from(2))
}

/// The polynomial correction exponent 1 + π/arccos(7/8), rendered from its
/// closed form. Display only; no computation depends on it.
pub fn alpha() -> f64 {
    1.0 + core::f64::consts::PI / libm::acos(0.875)
}

/// (2/27)^k, the reciprocal of lambda to the k-th power.
fn lambda_inv_pow(k: u32) -> BigRational {
    BigRational::new(BigInt::from(2).pow(k), BigInt::from(27).pow(k))
}

/// The two avoidance growth bounds and the series radius, exact. For a
/// pattern of size L completed and extended to a factor of length L_0, the
/// general bound uses the worst-case factor length 3L, the refined one the
/// actual L_0, and 1/radius equals the refined bound identically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub pattern_size: usize,
    pub factor_length: usize,
    pub main_bound: BigRational,
    pub refined_bound: BigRational,
    pub radius: BigRational,
}

/// Requires pattern_size ≥ 1 and factor_length ≥ 1.
pub fn bounds(pattern_size: usize, factor_length: usize) -> BoundReport {
    assert!(pattern_size >= 1 && factor_length >= 1);
    let main_bound = lambda() - lambda_inv_pow(3 * pattern_size as u32 - 1);
    let refined_bound = lambda() - lambda_inv_pow(factor_length as u32 - 1);
    let radius = lambda_inv_pow(1) / (BigRational::one() - lambda_inv_pow(factor_length as u32));
    BoundReport {
        pattern_size,
        factor_length,
        main_bound,
        refined_bound,
        radius,
    }
}

/// Decimal rendering of an exact rational, truncated toward zero to the
/// given number of fractional digits. Display only.
pub fn decimal_string(q: &BigRational, digits: usize) -> String {
    let num = q.numer().abs().to_biguint().expect("absolute value");
    let den = q.denom().to_biguint().expect("canonical denominator");
    let mut out = String::new();
    if q.is_negative() {
        out.push('-');
    }
    write!(out, "{}", &num / &den).expect("string write");
    if digits > 0 {
        out.push('.');
        let mut rem = &num % &den;
        for _ in 0..digits {
            rem *= 10u32;
            write!(out, "{}", &rem / &den).expect("string write");
            rem %= &den;
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InequalityRow {
    pub n: usize,
    pub lhs: BigUint,
    pub rhs: BigUint,
    pub holds: bool,
}

/// Per-length outcome of the insertion counting inequality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InequalityReport {
    rows: Vec<InequalityRow>,
}

impl InequalityReport {
    pub fn rows(&self) -> &[InequalityRow] {
        &self.rows
    }

    pub fn all_hold(&self) -> bool {
        self.rows.iter().all(|r| r.holds)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InequalityError {
    PatternNotAdmissible,
    PatternNotOverlapFree,
}

impl fmt::Display for InequalityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InequalityError::PatternNotAdmissible => {
                write!(f, "the pattern is not an admissible walk")
            }
            InequalityError::PatternNotOverlapFree => {
                write!(f, "the pattern is not overlap-free")
            }
        }
    }
}

/// Checks, for each n ≤ n_max, that the full count a_n dominates the
/// insertion lower bound built from the avoider counts:
/// a_n ≥ Σ_q binom(n − q·L_0 + q, q) · b_{n − q·L_0} with L_0 the pattern
/// length and q up to n/L_0. The pattern must be admissible and
/// overlap-free, the hypotheses under which inserted copies are counted
/// without collision.
pub fn verify_insertion_inequality(
    n_max: usize,
    p: &FactorPattern,
) -> Result<InequalityReport, InequalityError> {
    if !p.walk().is_admissible() {
        return Err(InequalityError::PatternNotAdmissible);
    }
    if !is_overlap_free(p) {
        return Err(InequalityError::PatternNotOverlapFree);
    }
    let len = p.len();
    let all =
        count_table(WalkClass::LhqwAdm, n_max, None).expect("admissible walks form a finite class");
    let avoiding = count_table(WalkClass::LhqwAdm, n_max, Some(p))
        .expect("admissible walks form a finite class");
    let rows = (0..=n_max)
        .map(|n| {
            let lhs = all.entries[n].value.clone();
            let mut rhs = BigUint::zero();
            for q in 0..=n / len {
                let ways = num_integer::binomial(BigUint::from(n - q * len + q), BigUint::from(q));
                rhs += ways * &avoiding.entries[n - q * len].value;
            }
            let holds = lhs >= rhs;
            InequalityRow { n, lhs, rhs, holds }
        })
        .collect();
    Ok(InequalityReport { rows })
}

/// One diagnostic line per length: the successive ratio (None where the
/// previous count is zero) and the n-th root of the count.
#[derive(Debug, Clone, PartialEq)]
pub struct GrowthRow {
    pub n: usize,
    pub ratio: Option<f64>,
    pub nth_root: f64,
}

/// Finite-range growth diagnostics with the reference constants attached.
#[derive(Debug, Clone, PartialEq)]
pub struct GrowthReport {
    pub rows: Vec<GrowthRow>,
    pub lambda: f64,
    pub alpha: f64,
}

pub fn growth_report(t: &CountTable) -> GrowthReport {
    let rows = (1..t.entries.len())
        .map(|n| {
            let prev = &t.entries[n - 1].value;
            let cur = &t.entries[n].value;
            let ratio = if prev.is_zero() {
                None
            } else {
                BigRational::new(BigInt::from(cur.clone()), BigInt::from(prev.clone())).to_f64()
            };
            let nth_root = libm::pow(cur.to_f64().unwrap_or(f64::INFINITY), 1.0 / n as f64);
            GrowthRow { n, ratio, nth_root }
        })
        .collect();
    GrowthReport {
        rows,
        lambda: lambda().to_f64().expect("27/2 is representable"),
        alpha: alpha(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProportionRow {
    pub n: usize,
    pub avoiders: BigUint,
    pub total: BigUint,
    pub ratio: BigRational,
}

/// For each 1 ≤ n ≤ n_max, the excursions whose pavement avoids the
/// geometric pattern, against all excursions of that length. Exhaustive
/// over excursions, so the cost grows like the counts themselves.
pub fn proportion_report(n_max: usize, p: &GeomPattern) -> Vec<ProportionRow> {
    (1..=n_max)
        .map(|n| {
            let avoiders = count_avoiding_rect(n, p);
            let total = count_all(n, WalkClass::Lhqe).expect("excursions form a finite class");
            let ratio =
                BigRational::new(BigInt::from(avoiders.clone()), BigInt::from(total.clone()));
            ProportionRow {
                n,
                avoiders,
                total,
                ratio,
            }
        })
        .collect()
}
