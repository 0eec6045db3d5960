//! The Han–Zeng polynomials `C_n(x, q)`:
//!
//! `C_1 = 1`, `C_n = (1 + qx) ((1 + qx) C_{n-1}(1 + qx, q) - x C_{n-1}(x, q)) / (1 + qx - x)`,
//!
//! and their normalizations `c̄_n(q) = C_n(1, q) / (1 + q)^{n-1}`.

use num_traits::One;

use crate::error::{Error, Result};
use crate::exactalg::{BivarPoly, IntPoly};

/// `1 + qx`.
fn one_plus_qx() -> BivarPoly {
    BivarPoly::new(vec![IntPoly::one(), IntPoly::q()])
}

/// `1 + qx - x`.
fn recurrence_divisor() -> BivarPoly {
    BivarPoly::new(vec![IntPoly::one(), IntPoly::from_i64s(&[-1, 1])])
}

/// `p(s(x), q)`.
pub fn substitute_x(p: &BivarPoly, s: &BivarPoly) -> BivarPoly {
    p.substitute_x(s)
}

fn inexact(e: Error, what: String) -> Error {
    match e {
        Error::InexactDivision(msg) => Error::Inconsistency(format!("{what}: {msg}")),
        other => other,
    }
}

/// One recurrence step `C_{n-1} -> C_n`.
fn step(prev: &BivarPoly, n: usize) -> Result<BivarPoly> {
    let a = one_plus_qx();
    let inner = &(&a * &substitute_x(prev, &a)) - &(&BivarPoly::x() * prev);
    let quotient = inner
        .exact_div_by_unit_const(&recurrence_divisor())
        .map_err(|e| inexact(e, format!("C_{n} division by 1+qx-x")))?;
    Ok(&a * &quotient)
}

/// `C_1, ..., C_n`.
pub fn hanzeng_c_sequence(n: usize) -> Result<Vec<BivarPoly>> {
    if n == 0 {
        return Err(Error::Domain("C_n is defined for n >= 1".into()));
    }
    let mut out = vec![BivarPoly::one()];
    for k in 2..=n {
        let next = step(out.last().unwrap(), k)?;
        out.push(next);
    }
    Ok(out)
}

pub fn hanzeng_c(n: usize) -> Result<BivarPoly> {
    Ok(hanzeng_c_sequence(n)?.pop().unwrap())
}

fn barc_from(c: &BivarPoly, n: usize) -> Result<IntPoly> {
    let at_one = c.eval_x(&IntPoly::one());
    let den = IntPoly::from_i64s(&[1, 1]).pow((n - 1) as u32);
    at_one
        .exact_div(&den)
        .map_err(|e| inexact(e, format!("C_{n}(1,q) / (1+q)^{}", n - 1)))
}

/// `c̄_n(q) = C_n(1, q) / (1 + q)^{n-1}`.
pub fn hanzeng_barc(n: usize) -> Result<IntPoly> {
    barc_from(&hanzeng_c(n)?, n)
}

/// `c̄_1, ..., c̄_n` sharing one run of the recurrence.
pub fn hanzeng_barc_sequence(n: usize) -> Result<Vec<IntPoly>> {
    hanzeng_c_sequence(n)?
        .iter()
        .enumerate()
        .map(|(i, c)| barc_from(c, i + 1))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn first_terms() {
        assert_eq!(hanzeng_c(1).unwrap(), BivarPoly::one());
        assert_eq!(hanzeng_c(2).unwrap(), one_plus_qx());
        // worked by hand: C_3 = (1 + q)(1 + qx)^2
        let c3 = (&one_plus_qx() * &one_plus_qx()).scale(&p(&[1, 1]));
        assert_eq!(hanzeng_c(3).unwrap(), c3);
    }

    #[test]
    fn normalized_terms() {
        assert_eq!(hanzeng_barc(1).unwrap(), p(&[1]));
        assert_eq!(hanzeng_barc(2).unwrap(), p(&[1]));
        assert_eq!(hanzeng_barc(3).unwrap(), p(&[1, 1]));
        assert_eq!(hanzeng_barc(4).unwrap(), p(&[1, 3, 2, 1]));
    }

    #[test]
    fn values_at_q_one() {
        let h = [1, 1, 2, 7, 38, 295, 3098, 42271];
        let seq = hanzeng_barc_sequence(8).unwrap();
        for (n, c) in seq.iter().enumerate() {
            assert_eq!(c.eval_at_one(), h[n].into(), "c̄_{}", n + 1);
        }
    }

    #[test]
    fn rejects_zero() {
        assert!(matches!(hanzeng_c(0), Err(Error::Domain(_))));
    }
}
