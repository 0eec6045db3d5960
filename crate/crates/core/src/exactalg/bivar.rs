use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::IntPoly;
use crate::error::{Error, Result};

/// Polynomial in `x` whose coefficients are polynomials in `q`.
///
/// `x_coeffs[i]` is the coefficient of `x^i`; the last stored coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BivarPoly {
    x_coeffs: Vec<IntPoly>,
}

impl BivarPoly {
    pub fn new(mut x_coeffs: Vec<IntPoly>) -> Self {
        while x_coeffs.last().is_some_and(Zero::is_zero) {
            x_coeffs.pop();
        }
        BivarPoly { x_coeffs }
    }

    pub fn constant(c: IntPoly) -> Self {
        BivarPoly::new(vec![c])
    }

    pub fn x() -> Self {
        BivarPoly::new(vec![IntPoly::zero(), IntPoly::one()])
    }

    pub fn x_coeffs(&self) -> &[IntPoly] {
        &self.x_coeffs
    }

    /// Coefficient of `x^i`.
    pub fn x_coeff(&self, i: usize) -> IntPoly {
        self.x_coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Degree in `x`; `None` for zero.
    pub fn x_degree(&self) -> Option<usize> {
        self.x_coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &IntPoly) -> BivarPoly {
        BivarPoly::new(self.x_coeffs.iter().map(|a| a * c).collect())
    }

    /// Composes with `x -> s`, leaving `q` untouched.
    pub fn substitute_x(&self, s: &BivarPoly) -> BivarPoly {
        self.x_coeffs
            .iter()
            .rev()
            .fold(BivarPoly::zero(), |acc, c| &(&acc * s) + &BivarPoly::constant(c.clone()))
    }

    /// Evaluates at a value of `x` given as a polynomial in `q`.
    pub fn eval_x(&self, x: &IntPoly) -> IntPoly {
        self.x_coeffs
            .iter()
            .rev()
            .fold(IntPoly::zero(), |acc, c| &(&acc * x) + c)
    }

    /// Exact division by a divisor whose `x^0` coefficient is the constant 1.
    ///
    /// Quotient terms are peeled off in ascending powers of `x`, which needs only the
    /// unit constant term; the remainder is then checked to vanish.
    pub fn exact_div_by_unit_const(&self, den: &BivarPoly) -> Result<BivarPoly> {
        if den.x_coeff(0) != IntPoly::one() {
            return Err(Error::Domain(format!(
                "divisor {den} does not have x-constant term 1"
            )));
        }
        let (Some(dn), Some(dd)) = (self.x_degree(), den.x_degree()) else {
            return Ok(BivarPoly::zero());
        };
        if dn < dd {
            return Err(Error::InexactDivision(format!("({self}) / ({den})")));
        }
        let mut rem: Vec<IntPoly> = self.x_coeffs.clone();
        let mut quot = Vec::with_capacity(dn - dd + 1);
        for i in 0..=dn - dd {
            let qi = rem[i].clone();
            for (j, d) in den.x_coeffs.iter().enumerate() {
                rem[i + j] = &rem[i + j] - &(&qi * d);
            }
            quot.push(qi);
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision(format!("({self}) / ({den})")));
        }
        Ok(BivarPoly::new(quot))
    }
}

impl Zero for BivarPoly {
    fn zero() -> Self {
        BivarPoly { x_coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.x_coeffs.is_empty()
    }
}

impl One for BivarPoly {
    fn one() -> Self {
        BivarPoly::constant(IntPoly::one())
    }
}

impl<'a> Add<&'a BivarPoly> for &'a BivarPoly {
    type Output = BivarPoly;

    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        let len = self.x_coeffs.len().max(rhs.x_coeffs.len());
        BivarPoly::new((0..len).map(|i| self.x_coeff(i) + rhs.x_coeff(i)).collect())
    }
}

impl<'a> Sub<&'a BivarPoly> for &'a BivarPoly {
    type Output = BivarPoly;

    fn sub(self, rhs: &BivarPoly) -> BivarPoly {
        self + &(-rhs)
    }
}

impl Neg for &BivarPoly {
    type Output = BivarPoly;

    fn neg(self) -> BivarPoly {
        BivarPoly::new(self.x_coeffs.iter().map(|c| -c).collect())
    }
}

impl<'a> Mul<&'a BivarPoly> for &'a BivarPoly {
    type Output = BivarPoly;

    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        if self.is_zero() || rhs.is_zero() {
            return BivarPoly::zero();
        }
        let mut out = vec![IntPoly::zero(); self.x_coeffs.len() + rhs.x_coeffs.len() - 1];
        for (i, a) in self.x_coeffs.iter().enumerate() {
            for (j, b) in rhs.x_coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        BivarPoly::new(out)
    }
}

impl Add for BivarPoly {
    type Output = BivarPoly;
    fn add(self, rhs: BivarPoly) -> BivarPoly {
        &self + &rhs
    }
}

impl Mul for BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: BivarPoly) -> BivarPoly {
        &self * &rhs
    }
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.x_coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivarPoly({self})")
    }
}
