//! Quadrant-walk encodings of strong rectangulations.
//!
//! A strong rectangulation on n rectangles is encoded by a colored lattice
//! walk of length n in the quadrant (a history quadrant excursion).  This
//! crate provides the walk classes and their enumeration, factor avoidance
//! and counting, the pavement construction that turns an excursion into a
//! rectangulation and its inverse, geometric pattern containment between
//! rectangulations, and the exact-arithmetic counting reports built on top.
//!
//! The crate is `no_std` (alloc required); IO and file formats live in the
//! companion CLI crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod analysis;
pub mod geometry;
pub mod pattern;
pub mod paving;
pub mod walk;
