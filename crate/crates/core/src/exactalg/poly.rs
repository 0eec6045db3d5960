use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Dense univariate polynomial in `q` with arbitrary-precision integer coefficients.
///
/// `coeffs[i]` is the coefficient of `q^i`. The vector never ends in a zero, so the
/// zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::new(vec![c.into()])
    }

    /// `c * q^degree`.
    pub fn monomial<T: Into<BigInt>>(c: T, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c.into();
        Self::new(coeffs)
    }

    /// The polynomial `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^i`, zero past the end.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Degree of a nonzero polynomial. The zero polynomial has no degree.
    pub fn degree(&self) -> Result<usize> {
        match self.coeffs.len() {
            0 => Err(Error::Domain("degree of the zero polynomial is undefined".into())),
            len => Ok(len - 1),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Sum of coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> IntPoly {
        (0..e).fold(IntPoly::one(), |acc, _| &acc * self)
    }

    /// Returns `q^d * p(1/q)`: coefficient `i` of the result is coefficient `d - i` of `self`.
    pub fn reverse(&self, d: usize) -> Result<IntPoly> {
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let deg = self.coeffs.len() - 1;
        if deg > d {
            return Err(Error::Domain(format!(
                "cannot reverse a degree-{deg} polynomial within degree {d}"
            )));
        }
        let mut coeffs = vec![BigInt::zero(); d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[d - i] = c.clone();
        }
        Ok(IntPoly::new(coeffs))
    }

    /// Exact quotient `self / den` over the integers.
    ///
    /// Fails with [`Error::InexactDivision`] if `den` does not divide `self` in `Z[q]`.
    pub fn exact_div(&self, den: &IntPoly) -> Result<IntPoly> {
        let Some(lead) = den.leading_coeff() else {
            return Err(Error::Domain("division by the zero polynomial".into()));
        };
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let dd = den.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Err(Error::InexactDivision(format!("({self}) / ({den})")));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (qi, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision(format!("({self}) / ({den})")));
            }
            for (j, d) in den.coeffs.iter().enumerate() {
                rem[i + j] -= &qi * d;
            }
            quot[i] = qi;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision(format!("({self}) / ({den})")));
        }
        Ok(IntPoly::new(quot))
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }
}

impl Zero for IntPoly {
    fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for IntPoly {
    fn one() -> Self {
        IntPoly::constant(1)
    }
}

impl From<BigInt> for IntPoly {
    fn from(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }
}

impl From<i64> for IntPoly {
    fn from(c: i64) -> Self {
        IntPoly::constant(c)
    }
}

impl<'a> Add<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        IntPoly::new(coeffs)
    }
}

impl<'a> Sub<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::new(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: &IntPoly) -> IntPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        if rhs.coeffs.len() > self.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl std::iter::Sum for IntPoly {
    fn sum<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl fmt::Display for IntPoly {
    /// Ascending powers, `1 + 2*q + 3*q^2 + q^3`; the zero polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        f.write_str("q")?;
                    } else {
                        write!(f, "q^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    coeffs: Vec<String>,
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            coeffs: self.coeffs.iter().map(ToString::to_string).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = PolyJson::deserialize(deserializer)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(IntPoly::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn canonical_form_strips_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!(p(&[0, 0]).is_zero());
        assert!(IntPoly::zero().degree().is_err());
        assert_eq!(p(&[0, 0, 5]).degree().unwrap(), 2);
    }

    #[test]
    fn rendering() {
        assert_eq!(p(&[1, 2, 3, 1]).to_string(), "1 + 2*q + 3*q^2 + q^3");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(p(&[0, 1]).to_string(), "q");
        assert_eq!(p(&[0, 0, 4]).to_string(), "4*q^2");
        assert_eq!(p(&[-1, 0, -1]).to_string(), "-1 - q^2");
        assert_eq!(p(&[1]).to_string(), "1");
    }

    #[test]
    fn json_shape() {
        let s = serde_json::to_string(&p(&[1, 3, 2, 1])).unwrap();
        assert_eq!(s, r#"{"coeffs":["1","3","2","1"]}"#);
        assert_eq!(serde_json::to_string(&IntPoly::zero()).unwrap(), r#"{"coeffs":[]}"#);
        let back: IntPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p(&[1, 3, 2, 1]));
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(p(&[1, 2, 3, 1]).reverse(3).unwrap(), p(&[1, 3, 2, 1]));
        assert_eq!(p(&[1]).reverse(0).unwrap(), p(&[1]));
        assert_eq!(p(&[1, 1]).reverse(1).unwrap(), p(&[1, 1]));
        assert_eq!(p(&[0, 1]).reverse(3).unwrap(), p(&[0, 0, 1]));
        assert!(matches!(p(&[1, 1, 1]).reverse(1), Err(Error::Domain(_))));
    }

    #[test]
    fn exact_div_examples() {
        let one_q = p(&[1, 1]);
        assert_eq!((&one_q * &one_q).exact_div(&one_q).unwrap(), one_q);
        assert_eq!(one_q.exact_div(&one_q).unwrap(), IntPoly::one());
        assert!(matches!(
            p(&[1, 1, 1]).exact_div(&one_q),
            Err(Error::InexactDivision(_))
        ));
        assert!(matches!(one_q.exact_div(&IntPoly::zero()), Err(Error::Domain(_))));
        // 2q / 4 has a rational quotient only
        assert!(p(&[0, 2]).exact_div(&p(&[4])).is_err());
    }

    #[test]
    fn eval_and_pow() {
        let x = p(&[1, 1]).pow(3);
        assert_eq!(x, p(&[1, 3, 3, 1]));
        assert_eq!(x.eval_at_one(), BigInt::from(8));
        assert_eq!(x.eval(&BigInt::from(2)), BigInt::from(27));
    }

    fn small_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-9i64..=9, 0..7).prop_map(|v| IntPoly::from_i64s(&v))
    }

    proptest! {
        #[test]
        fn reverse_is_an_involution(a in small_poly(), extra in 0usize..4) {
            let d = a.coeffs().len().saturating_sub(1) + extra;
            prop_assert_eq!(a.reverse(d).unwrap().reverse(d).unwrap(), a);
        }

        #[test]
        fn exact_div_recovers_factor(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
        }

        #[test]
        fn json_round_trip(a in small_poly()) {
            let s = serde_json::to_string(&a).unwrap();
            let back: IntPoly = serde_json::from_str(&s).unwrap();
            prop_assert_eq!(serde_json::to_string(&back).unwrap(), s);
        }
    }
}
