use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::IntPoly;

/// A Laurent polynomial `q^offset * body`.
///
/// Canonical: the body has a nonzero constant term, or the body is zero and the offset is 0.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    offset: i64,
    body: IntPoly,
}

impl LaurentPoly {
    pub fn new(offset: i64, body: IntPoly) -> Self {
        if body.is_zero() {
            return LaurentPoly::zero();
        }
        let lead_zeros = body.coeffs().iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == 0 {
            return LaurentPoly { offset, body };
        }
        let stripped = IntPoly::new(body.coeffs()[lead_zeros..].to_vec());
        LaurentPoly {
            offset: offset + lead_zeros as i64,
            body: stripped,
        }
    }

    /// `c * q^k` for any integer `k`.
    pub fn monomial(k: i64) -> Self {
        LaurentPoly::new(k, IntPoly::one())
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn body(&self) -> &IntPoly {
        &self.body
    }

    /// Lowest exponent with a nonzero coefficient, `None` for zero.
    pub fn min_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.offset)
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            offset: self.offset + k,
            body: self.body.clone(),
        }
    }

    /// The ordinary polynomial this equals, if no negative powers remain.
    pub fn to_poly(&self) -> Option<IntPoly> {
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        (self.offset >= 0).then(|| self.body.shift(self.offset as usize))
    }
}

impl From<IntPoly> for LaurentPoly {
    fn from(p: IntPoly) -> Self {
        LaurentPoly::new(0, p)
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly {
            offset: 0,
            body: IntPoly::zero(),
        }
    }

    fn is_zero(&self) -> bool {
        self.body.is_zero()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::monomial(0)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.offset.min(rhs.offset);
        let a = self.body.shift((self.offset - low) as usize);
        let b = rhs.body.shift((rhs.offset - low) as usize);
        LaurentPoly::new(low, a + b)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::new(self.offset + rhs.offset, &self.body * &rhs.body)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly::new(self.offset, -&self.body)
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.offset == 0 {
            write!(f, "{}", self.body)
        } else {
            write!(f, "q^{}*({})", self.offset, self.body)
        }
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}
