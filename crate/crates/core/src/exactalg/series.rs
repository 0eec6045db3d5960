use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::IntPoly;
use crate::error::{Error, Result};

/// Power series in `s` truncated after `s^order`, with polynomial coefficients in `q`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PowerSeries {
    order: usize,
    coeffs: Vec<IntPoly>,
}

impl PowerSeries {
    pub fn zero(order: usize) -> Self {
        PowerSeries {
            order,
            coeffs: vec![IntPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, IntPoly::one())
    }

    pub fn constant(order: usize, c: IntPoly) -> Self {
        let mut out = Self::zero(order);
        out.coeffs[0] = c;
        out
    }

    /// Builds a series from leading coefficients, padding with zeros or truncating.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<IntPoly>) -> Self {
        coeffs.resize(order + 1, IntPoly::zero());
        PowerSeries { order, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[IntPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &IntPoly {
        &self.coeffs[n]
    }

    /// Re-truncates at a lower order.
    pub fn truncate(&self, order: usize) -> PowerSeries {
        assert!(order <= self.order, "cannot extend a truncated series");
        PowerSeries::from_coeffs(order, self.coeffs[..=order].to_vec())
    }

    pub fn add(&self, rhs: &PowerSeries) -> PowerSeries {
        self.zip(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &PowerSeries) -> PowerSeries {
        self.zip(rhs, |a, b| a - b)
    }

    fn zip(&self, rhs: &PowerSeries, f: impl Fn(&IntPoly, &IntPoly) -> IntPoly) -> PowerSeries {
        assert_eq!(self.order, rhs.order, "series orders differ");
        PowerSeries {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn mul(&self, rhs: &PowerSeries) -> PowerSeries {
        assert_eq!(self.order, rhs.order, "series orders differ");
        let mut out = PowerSeries::zero(self.order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=self.order - i].iter().enumerate() {
                out.coeffs[i + j] += &(a * b);
            }
        }
        out
    }

    pub fn scale(&self, c: &IntPoly) -> PowerSeries {
        PowerSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `s^k`, dropping terms past the truncation order.
    pub fn mul_s_pow(&self, k: usize) -> PowerSeries {
        let mut out = PowerSeries::zero(self.order);
        for n in k..=self.order {
            out.coeffs[n] = self.coeffs[n - k].clone();
        }
        out
    }

    /// Multiplicative inverse of a series with constant term 1.
    ///
    /// `b_0 = 1`, `b_n = -sum_{k=1..n} a_k b_{n-k}`.
    pub fn inverse(&self) -> Result<PowerSeries> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Domain(format!(
                "series inverse needs constant term 1, got {}",
                self.coeffs[0]
            )));
        }
        let mut inv = PowerSeries::zero(self.order);
        inv.coeffs[0] = IntPoly::one();
        for n in 1..=self.order {
            let mut acc = IntPoly::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &(&self.coeffs[k] * &inv.coeffs[n - k]);
                }
            }
            inv.coeffs[n] = -acc;
        }
        Ok(inv)
    }

    /// Applies `f` to each coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&IntPoly) -> IntPoly) -> PowerSeries {
        PowerSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Specializes every coefficient at `q = 1`.
    pub fn at_q_one(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(IntPoly::eval_at_one).collect()
    }

    /// True when every coefficient is a constant polynomial.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(IntPoly::is_constant)
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, c) in self.coeffs.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*s^{n}")?;
        }
        write!(f, " + O(s^{})", self.order + 1)
    }
}

impl fmt::Debug for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PowerSeries({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: i64) -> IntPoly {
        IntPoly::constant(v)
    }

    #[test]
    fn inverse_of_one_minus_s_is_geometric() {
        let a = PowerSeries::from_coeffs(5, vec![c(1), c(-1)]);
        let inv = a.inverse().unwrap();
        assert!(inv.coeffs().iter().all(|x| *x == c(1)));
        assert_eq!(a.mul(&inv), PowerSeries::one(5));
    }

    #[test]
    fn inverse_needs_unit_constant() {
        let a = PowerSeries::from_coeffs(3, vec![c(2), c(1)]);
        assert!(matches!(a.inverse(), Err(Error::Domain(_))));
    }

    #[test]
    fn shift_truncates() {
        let a = PowerSeries::from_coeffs(3, vec![c(1), c(2), c(3), c(4)]);
        assert_eq!(
            a.mul_s_pow(2).coeffs(),
            &[c(0), c(0), c(1), c(2)]
        );
    }
}
