//! Exact-arithmetic sine and arcsine methods of the Kerala school of
//! astronomy: Bhāskara's rational sine, Mādhava's series, Śankara Vāriyar's
//! iteration, Nīlakaṇṭha's table and arc-difference rules, and the
//! circumference refinement.
//!
//! Arcs are counted in thirds (1′ = 60″ = 3600‴) by [`ArcThirds`], or held as
//! exact rational minutes by [`RationalArc`].

pub mod circumference;
pub mod classical;
pub mod cli;
pub mod decimal;
pub mod error;
pub mod large_arc;
pub mod lookup_table;
pub mod oracle;
pub mod sexagesimal;
pub mod small_arc;

pub use error::{Error, Result};
pub use sexagesimal::{ArcThirds, RadiusConstant, RationalArc, Rounding};
