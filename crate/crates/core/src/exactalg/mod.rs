//! Exact arithmetic: polynomials in `q` (ordinary, Laurent, and with an extra variable `x`),
//! truncated power series in `s`, and the Gaussian binomials.

mod bivar;
mod laurent;
mod poly;
mod qbinom;
mod series;

use std::fmt::Debug;

use num_traits::{One, Zero};

pub use bivar::BivarPoly;
pub use laurent::LaurentPoly;
pub use poly::IntPoly;
pub use qbinom::{q_binomial, q_factorial, q_integer};
pub use series::PowerSeries;

pub type Rational = num_rational::BigRational;

/// Exact coefficient ring usable as a path weight.
pub trait Coefficient: Clone + PartialEq + Debug + Zero + One {}

impl<T: Clone + PartialEq + Debug + Zero + One> Coefficient for T {}

/// `q^d p(1/q)` for `deg p <= d`.
pub fn poly_reverse(p: &IntPoly, d: usize) -> crate::Result<IntPoly> {
    p.reverse(d)
}

/// Quotient of an exact polynomial division.
pub fn poly_exact_div(num: &IntPoly, den: &IntPoly) -> crate::Result<IntPoly> {
    num.exact_div(den)
}

pub fn bivar_exact_div_by_unit_const(num: &BivarPoly, den: &BivarPoly) -> crate::Result<BivarPoly> {
    num.exact_div_by_unit_const(den)
}
