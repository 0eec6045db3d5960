//! The Seidel triangle and the Genocchi numbers read off its two edges.
//!
//! Entries `g(k, n)` use the usual indexing: `n = 1, 2, ...` is the column counted from the
//! left and `k` is the row counted from the bottom, `1 <= k <= (n + 1) / 2`. Starting from
//! `g(1, 1) = 1`, even columns take suffix sums of the previous column and odd columns take
//! prefix sums.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeidelTriangle {
    // columns[n - 1][k - 1] = g(k, n)
    columns: Vec<Vec<BigInt>>,
}

impl SeidelTriangle {
    /// Fills columns `1..=n_cols`.
    pub fn build(n_cols: usize) -> Result<Self> {
        if n_cols == 0 {
            return Err(Error::Domain("the Seidel triangle needs at least one column".into()));
        }
        let mut columns = Vec::with_capacity(n_cols);
        columns.push(vec![BigInt::one()]);
        for n in 2..=n_cols {
            let next = Self::next_column(n, columns.last().unwrap());
            columns.push(next);
        }
        Ok(SeidelTriangle { columns })
    }

    /// Column `n` computed from column `n - 1`.
    fn next_column(n: usize, prev: &[BigInt]) -> Vec<BigInt> {
        let height = n.div_ceil(2);
        let mut col = vec![BigInt::zero(); height];
        if n.is_multiple_of(2) {
            // g(k, n) = sum_{i >= k} g(i, n - 1)
            let mut acc = BigInt::zero();
            for k in (0..height).rev() {
                acc += prev.get(k).cloned().unwrap_or_default();
                col[k] = acc.clone();
            }
        } else {
            // g(k, n) = sum_{i <= k} g(i, n - 1)
            let mut acc = BigInt::zero();
            for (k, slot) in col.iter_mut().enumerate() {
                acc += prev.get(k).cloned().unwrap_or_default();
                *slot = acc.clone();
            }
        }
        col
    }

    pub fn num_columns(&self) -> usize {
        self.columns.len()
    }

    /// Entries `g(1, n), g(2, n), ...` of column `n`.
    pub fn column(&self, n: usize) -> Option<&[BigInt]> {
        n.checked_sub(1)
            .and_then(|i| self.columns.get(i))
            .map(Vec::as_slice)
    }

    /// `g(k, n)`, or `None` outside the filled region.
    pub fn get(&self, k: usize, n: usize) -> Option<&BigInt> {
        self.column(n)?.get(k.checked_sub(1)?)
    }

    /// Recomputes every column from its predecessor and compares with storage.
    pub fn check_recurrences(&self) -> bool {
        self.columns[0] == [BigInt::one()]
            && self
                .columns
                .windows(2)
                .enumerate()
                .all(|(i, w)| Self::next_column(i + 2, &w[0]) == w[1])
    }

    fn require(&self, n_col: usize) -> Result<()> {
        if n_col > self.columns.len() {
            return Err(Error::Domain(format!(
                "triangle has {} columns, column {n_col} requested",
                self.columns.len()
            )));
        }
        Ok(())
    }

    /// `G_n = g(n, 2n - 1)`, the Genocchi numbers of the first kind.
    pub fn genocchi_first(&self, n: usize) -> Result<BigInt> {
        if n == 0 {
            return Err(Error::Domain("genocchi_first is indexed from 1".into()));
        }
        self.require(2 * n - 1)?;
        Ok(self.get(n, 2 * n - 1).unwrap().clone())
    }

    /// `H_{2n-1} = g(1, 2n)`, the median Genocchi numbers.
    pub fn median_genocchi(&self, n: usize) -> Result<BigInt> {
        if n == 0 {
            return Err(Error::Domain("median_genocchi is indexed from 1".into()));
        }
        self.require(2 * n)?;
        Ok(self.get(1, 2 * n).unwrap().clone())
    }

    /// `h_n = H_{2n+1} / 2^n`, with divisibility checked first.
    pub fn normalized_h(&self, n: usize) -> Result<BigInt> {
        let big_h = self.median_genocchi(n + 1)?;
        let pow = BigInt::one() << n;
        let (quot, rem) = big_h.div_rem(&pow);
        if !rem.is_zero() {
            return Err(Error::Inconsistency(format!(
                "H_{} = {big_h} is not divisible by 2^{n}",
                2 * n + 1
            )));
        }
        Ok(quot)
    }
}

fn triangle_for_column(n_col: usize) -> Result<SeidelTriangle> {
    SeidelTriangle::build(n_col.max(1))
}

pub fn build_triangle(n_cols: usize) -> Result<SeidelTriangle> {
    SeidelTriangle::build(n_cols)
}

pub fn genocchi_first(n: usize) -> Result<BigInt> {
    triangle_for_column(2 * n)?.genocchi_first(n)
}

pub fn median_genocchi(n: usize) -> Result<BigInt> {
    triangle_for_column(2 * n)?.median_genocchi(n)
}

pub fn normalized_h(n: usize) -> Result<BigInt> {
    triangle_for_column(2 * n + 2)?.normalized_h(n)
}

/// `h_0, ..., h_{count-1}` from a single triangle.
pub fn normalized_h_sequence(count: usize) -> Result<Vec<BigInt>> {
    let t = triangle_for_column(2 * count)?;
    (0..count).map(|n| t.normalized_h(n)).collect()
}

/// `H_1, H_3, ..., H_{2 count - 1}`.
pub fn median_genocchi_sequence(count: usize) -> Result<Vec<BigInt>> {
    let t = triangle_for_column(2 * count)?;
    (1..=count).map(|n| t.median_genocchi(n)).collect()
}

/// `G_1, ..., G_count` (first kind).
pub fn genocchi_first_sequence(count: usize) -> Result<Vec<BigInt>> {
    let t = triangle_for_column(2 * count)?;
    (1..=count).map(|n| t.genocchi_first(n)).collect()
}
