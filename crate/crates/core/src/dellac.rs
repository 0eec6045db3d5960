//! Dellac configurations: `2n` marked boxes in an `n x 2n` grid, two per column, one per row,
//! with every box `(l, j)` inside the band `l <= j <= n + l`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_limit, Error, Result};
use crate::exactalg::IntPoly;

/// Largest `n` the enumerators accept.
pub const DELLAC_MAX_N: usize = 9;

/// Upper edge of the admissible band, `j <= n + l + upper_offset`.
///
/// The standard band has offset 0. Other offsets exist only so that the verification harness
/// can be shown to notice a perturbed model.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DellacWindow {
    pub upper_offset: isize,
}

impl DellacWindow {
    pub const STANDARD: DellacWindow = DellacWindow { upper_offset: 0 };

    fn upper(&self, n: usize, l: usize) -> usize {
        let hi = (n + l) as isize + self.upper_offset;
        hi.clamp(0, 2 * n as isize) as usize
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DellacConfig {
    n: usize,
    /// `(j_low, j_high)` for columns `1..=n`.
    columns: Vec<(usize, usize)>,
}

impl DellacConfig {
    /// Validates the row/column/band constraints.
    pub fn new(columns: Vec<(usize, usize)>) -> Result<Self> {
        let n = columns.len();
        if n == 0 {
            return Err(Error::Domain("a Dellac configuration has at least one column".into()));
        }
        let mut seen = vec![false; 2 * n + 1];
        for (idx, &(lo, hi)) in columns.iter().enumerate() {
            let l = idx + 1;
            if lo >= hi {
                return Err(Error::Domain(format!("column {l}: rows must be increasing")));
            }
            for j in [lo, hi] {
                if j < l || j > n + l {
                    return Err(Error::Domain(format!("box ({l},{j}) lies outside the band")));
                }
                if std::mem::replace(&mut seen[j], true) {
                    return Err(Error::Domain(format!("row {j} is marked twice")));
                }
            }
        }
        Ok(DellacConfig { n, columns })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn columns(&self) -> &[(usize, usize)] {
        &self.columns
    }

    /// Marked boxes `(l, j)` in column order.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(i, &(lo, hi))| [(i + 1, lo), (i + 1, hi)])
    }
}

impl fmt::Display for DellacConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (lo, hi)) in self.columns.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}: {lo} {hi}", i + 1)?;
        }
        Ok(())
    }
}

/// Number of pairs of marked boxes `(l1, j1)`, `(l2, j2)` with `l1 < l2` and `j1 > j2`.
pub fn dellac_length(d: &DellacConfig) -> usize {
    let boxes: Vec<_> = d.boxes().collect();
    let mut count = 0;
    for (a, &(l1, j1)) in boxes.iter().enumerate() {
        for &(l2, j2) in &boxes[a + 1..] {
            if l1 < l2 && j1 > j2 {
                count += 1;
            }
        }
    }
    count
}

/// Visits every configuration of `DC_n` in lexicographic order of the flattened row pairs.
pub fn enumerate_dellac(n: usize, visit: impl FnMut(&DellacConfig)) -> Result<u64> {
    enumerate_dellac_in_window(n, DellacWindow::STANDARD, visit)
}

pub fn enumerate_dellac_in_window(
    n: usize,
    window: DellacWindow,
    mut visit: impl FnMut(&DellacConfig),
) -> Result<u64> {
    if n == 0 {
        return Err(Error::Domain("Dellac configurations need n >= 1".into()));
    }
    check_limit("dellac enumeration", n, DELLAC_MAX_N)?;
    let mut search = Search {
        n,
        window,
        used: vec![false; 2 * n + 1],
        current: DellacConfig {
            n,
            columns: Vec::with_capacity(n),
        },
        count: 0,
    };
    search.column(1, &mut visit);
    Ok(search.count)
}

struct Search {
    n: usize,
    window: DellacWindow,
    used: Vec<bool>,
    current: DellacConfig,
    count: u64,
}

impl Search {
    fn column(&mut self, l: usize, visit: &mut impl FnMut(&DellacConfig)) {
        if l > self.n {
            self.count += 1;
            visit(&self.current);
            return;
        }
        // Rows below l can no longer be reached by any later column.
        if (1..l).any(|j| !self.used[j]) {
            return;
        }
        let hi = self.window.upper(self.n, l);
        for lo in l..=hi {
            if self.used[lo] {
                continue;
            }
            // Row l must be taken now: column l is its last chance.
            if lo > l && !self.used[l] {
                break;
            }
            self.used[lo] = true;
            for up in lo + 1..=hi {
                if self.used[up] {
                    continue;
                }
                self.used[up] = true;
                self.current.columns.push((lo, up));
                self.column(l + 1, visit);
                self.current.columns.pop();
                self.used[up] = false;
            }
            self.used[lo] = false;
        }
    }
}

/// All configurations of `DC_n`, in enumeration order.
pub fn collect_dellac(n: usize) -> Result<Vec<DellacConfig>> {
    let mut out = Vec::new();
    enumerate_dellac(n, |d| out.push(d.clone()))?;
    Ok(out)
}

/// `h_n(q) = sum over DC_n of q^length`.
pub fn h_poly_dellac(n: usize) -> Result<IntPoly> {
    h_poly_dellac_in_window(n, DellacWindow::STANDARD)
}

pub fn h_poly_dellac_in_window(n: usize, window: DellacWindow) -> Result<IntPoly> {
    let mut hist = vec![0i64; n * n.saturating_sub(1) / 2 + 1];
    enumerate_dellac_in_window(n, window, |d| {
        let len = dellac_length(d);
        if len >= hist.len() {
            hist.resize(len + 1, 0);
        }
        hist[len] += 1;
    })?;
    Ok(IntPoly::from_i64s(&hist))
}
