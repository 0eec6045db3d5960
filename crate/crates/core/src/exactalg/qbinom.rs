use std::cell::RefCell;

use num_traits::{One, Zero};

use super::IntPoly;
use crate::error::{Error, Result};

thread_local! {
    // Row m holds [m choose 0]_q ..= [m choose m]_q.
    static PASCAL: RefCell<Vec<Vec<IntPoly>>> = RefCell::new(vec![vec![IntPoly::one()]]);
}

/// The q-integer `[n]_q = 1 + q + ... + q^(n-1)`.
pub fn q_integer(n: usize) -> IntPoly {
    IntPoly::new(vec![1.into(); n])
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial(n: usize) -> IntPoly {
    (1..=n).fold(IntPoly::one(), |acc, k| acc * q_integer(k))
}

/// The Gaussian binomial coefficient `[m choose n]_q`.
///
/// Built with the Pascal rule `[m,n] = [m-1,n-1] + q^n [m-1,n]`, so every intermediate is an
/// integer polynomial. Rows are memoized per thread.
pub fn q_binomial(m: usize, n: usize) -> Result<IntPoly> {
    if n > m {
        return Err(Error::Domain(format!("q-binomial [{m} choose {n}] needs n <= m")));
    }
    Ok(PASCAL.with(|cell| {
        let mut rows = cell.borrow_mut();
        while rows.len() <= m {
            let prev = rows.last().expect("row 0 is seeded");
            let r = prev.len();
            let row: Vec<IntPoly> = (0..=r)
                .map(|k| {
                    let left = if k == 0 { IntPoly::zero() } else { prev[k - 1].clone() };
                    let up = prev.get(k).map(|p| p.shift(k)).unwrap_or_default();
                    left + up
                })
                .collect();
            rows.push(row);
        }
        rows[m][n].clone()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn binomial(m: u64, n: u64) -> BigInt {
        (0..n).fold(BigInt::one(), |acc, i| acc * (m - i) / (i + 1))
    }

    /// Oracle: q-factorial quotient, the textbook definition.
    fn q_binomial_by_factorials(m: usize, n: usize) -> IntPoly {
        q_factorial(m)
            .exact_div(&(q_factorial(n) * q_factorial(m - n)))
            .unwrap()
    }

    /// Oracle: sum of q^inv over n-subsets of {1..m}, inversions counted against the complement.
    fn q_binomial_by_subsets(m: usize, n: usize) -> IntPoly {
        let mut out = vec![0i64; n * (m - n) + 1];
        for mask in 0u32..(1 << m) {
            if mask.count_ones() as usize != n {
                continue;
            }
            let mut inv = 0;
            for i in 0..m {
                for j in i + 1..m {
                    if mask >> i & 1 == 1 && mask >> j & 1 == 0 {
                        inv += 1;
                    }
                }
            }
            out[inv] += 1;
        }
        IntPoly::from_i64s(&out)
    }

    #[test]
    fn examples() {
        assert_eq!(q_binomial(2, 1).unwrap(), IntPoly::from_i64s(&[1, 1]));
        for m in 0..6 {
            assert_eq!(q_binomial(m, 0).unwrap(), IntPoly::one());
        }
        assert_eq!(q_binomial(4, 2).unwrap(), IntPoly::from_i64s(&[1, 1, 2, 1, 1]));
        assert_eq!(q_binomial_by_subsets(4, 2), IntPoly::from_i64s(&[1, 1, 2, 1, 1]));
        assert!(matches!(q_binomial(2, 3), Err(Error::Domain(_))));
    }

    #[test]
    fn agrees_with_both_oracles() {
        for m in 0..=10 {
            for n in 0..=m {
                let b = q_binomial(m, n).unwrap();
                assert_eq!(b, q_binomial_by_factorials(m, n), "[{m},{n}]");
                assert_eq!(b, q_binomial_by_subsets(m, n), "[{m},{n}]");
            }
        }
    }

    #[test]
    fn degree_symmetry_and_q_one() {
        for m in 0..=12usize {
            for n in 0..=m {
                let b = q_binomial(m, n).unwrap();
                assert_eq!(b.degree().unwrap(), n * (m - n));
                assert!(b.is_palindromic());
                assert!(b.coeffs().iter().all(|c| *c > BigInt::zero()));
                assert_eq!(b.eval_at_one(), binomial(m as u64, n as u64));
                if n >= 1 && n < m {
                    let pascal = q_binomial(m - 1, n - 1).unwrap()
                        + q_binomial(m - 1, n).unwrap().shift(n);
                    assert_eq!(b, pascal);
                }
            }
        }
    }

    #[test]
    fn two_subset_factorizations() {
        // [2n,2] = (1+q^2+...+q^(2n-2))(1+q+...+q^(2n-2))
        // [2n+1,2] = (1+q^2+...+q^(2n-2))(1+q+...+q^(2n))
        for n in 1..=6usize {
            let even: IntPoly = (0..n).map(|i| IntPoly::monomial(1, 2 * i)).sum();
            assert_eq!(q_binomial(2 * n, 2).unwrap(), &even * &q_integer(2 * n - 1));
            assert_eq!(q_binomial(2 * n + 1, 2).unwrap(), &even * &q_integer(2 * n + 1));
        }
    }
}
