//! Exact computation of the normalized median Genocchi numbers `h_n` and their q-analogues
//! `h_n(q)` by several independent routes: the Seidel triangle, Dellac configurations,
//! admissible subset sequences, Motzkin-path sums, continued fractions and the Han–Zeng
//! recurrence. [`verify::crosscheck`] compares all of them.

pub mod admissible;
pub mod contfrac;
pub mod dellac;
mod error;
pub mod exactalg;
pub mod hanzeng;
pub mod motzkin;
pub mod oracles;
pub mod seidel;
pub mod verify;

pub use error::{Error, Result};
pub use exactalg::{BivarPoly, IntPoly, LaurentPoly, PowerSeries, Rational};
