//! Admissible sequences `(I_1, ..., I_{n-1})` of subsets of `{1..n}` with `|I_l| = l` and
//! `I_l ⊆ I_{l+1} ∪ {l+1}`, and the equivalent closed column-graded vertex sets of the grid
//! graph `Γ`.

use serde::{Deserialize, Serialize};

use crate::error::{check_limit, Error, Result};

pub const ADMISSIBLE_MAX_N: usize = 9;

/// Subset of `{1..n}` as a bitmask; bit `j - 1` stands for `j`.
pub type SubsetMask = u64;

fn bit(j: usize) -> SubsetMask {
    1 << (j - 1)
}

fn elements(mask: SubsetMask) -> Vec<usize> {
    (1..=64).filter(|&j| mask & bit(j) != 0).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AdmissibleSequence {
    n: usize,
    /// `sets[l - 1] = I_l`.
    sets: Vec<SubsetMask>,
}

impl AdmissibleSequence {
    pub fn new(n: usize, sets: Vec<SubsetMask>) -> Result<Self> {
        if n == 0 || n > 64 {
            return Err(Error::Domain(format!("admissible sequences need 1 <= n <= 64, got {n}")));
        }
        if sets.len() != n - 1 {
            return Err(Error::Domain(format!("expected {} sets, got {}", n - 1, sets.len())));
        }
        let universe = if n == 64 { !0 } else { (1u64 << n) - 1 };
        for (i, &s) in sets.iter().enumerate() {
            let l = i + 1;
            if s & !universe != 0 || s.count_ones() as usize != l {
                return Err(Error::Domain(format!("I_{l} must be an {l}-subset of 1..{n}")));
            }
            if l + 1 < n && s & !(sets[l] | bit(l + 1)) != 0 {
                return Err(Error::Domain(format!("I_{l} is not inside I_{} ∪ {{{}}}", l + 1, l + 1)));
            }
        }
        Ok(AdmissibleSequence { n, sets })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn masks(&self) -> &[SubsetMask] {
        &self.sets
    }

    /// `I_l` as a sorted list, `1 <= l <= n - 1`.
    pub fn set(&self, l: usize) -> Vec<usize> {
        elements(self.sets[l - 1])
    }

    /// The vertex set `S_I = {(l, j) : j ∈ I_l}` of `Γ`.
    pub fn vertex_set(&self) -> Vec<(usize, usize)> {
        self.sets
            .iter()
            .enumerate()
            .flat_map(|(i, &s)| elements(s).into_iter().map(move |j| (i + 1, j)))
            .collect()
    }
}

#[derive(Serialize, Deserialize)]
struct SequenceJson {
    n: usize,
    sets: Vec<Vec<usize>>,
}

impl Serialize for AdmissibleSequence {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SequenceJson {
            n: self.n,
            sets: self.sets.iter().map(|&s| elements(s)).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for AdmissibleSequence {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = SequenceJson::deserialize(deserializer)?;
        let sets = raw
            .sets
            .iter()
            .map(|s| s.iter().filter(|&&j| (1..=64).contains(&j)).map(|&j| bit(j)).sum())
            .collect();
        AdmissibleSequence::new(raw.n, sets).map_err(serde::de::Error::custom)
    }
}

impl std::fmt::Display for AdmissibleSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for l in 1..self.n {
            if l > 1 {
                f.write_str(" ")?;
            }
            let body: Vec<String> = self.set(l).iter().map(ToString::to_string).collect();
            write!(f, "I_{l}={{{}}}", body.join(","))?;
        }
        Ok(())
    }
}

/// Submasks of `sup` with exactly `k` elements, ascending numerically.
fn k_submasks(sup: SubsetMask, k: usize) -> Vec<SubsetMask> {
    let elems: Vec<SubsetMask> = (0..64).map(|b| 1u64 << b).filter(|b| sup & b != 0).collect();
    let mut out = Vec::new();
    let mut pick = Vec::with_capacity(k);
    fn rec(elems: &[SubsetMask], k: usize, start: usize, pick: &mut Vec<SubsetMask>, out: &mut Vec<SubsetMask>) {
        if pick.len() == k {
            out.push(pick.iter().sum());
            return;
        }
        for i in start..elems.len() {
            pick.push(elems[i]);
            rec(elems, k, i + 1, pick, out);
            pick.pop();
        }
    }
    rec(&elems, k, 0, &mut pick, &mut out);
    out.sort_unstable();
    out
}

/// Visits every admissible sequence, choosing `I_{n-1}` first and then each `I_l` among the
/// `l`-subsets of `I_{l+1} ∪ {l+1}`.
pub fn enumerate_admissible(n: usize, mut visit: impl FnMut(&AdmissibleSequence)) -> Result<u64> {
    if n == 0 {
        return Err(Error::Domain("admissible sequences need n >= 1".into()));
    }
    check_limit("admissible enumeration", n, ADMISSIBLE_MAX_N)?;
    let mut seq = AdmissibleSequence {
        n,
        sets: vec![0; n - 1],
    };
    if n == 1 {
        visit(&seq);
        return Ok(1);
    }
    let universe = (1u64 << n) - 1;
    let mut count = 0;
    fn down(
        l: usize,
        seq: &mut AdmissibleSequence,
        count: &mut u64,
        visit: &mut impl FnMut(&AdmissibleSequence),
    ) {
        if l == 0 {
            *count += 1;
            visit(seq);
            return;
        }
        let sup = seq.sets[l] | bit(l + 1);
        for s in k_submasks(sup, l) {
            seq.sets[l - 1] = s;
            down(l - 1, seq, count, visit);
        }
    }
    for top in k_submasks(universe, n - 1) {
        seq.sets[n - 2] = top;
        down(n - 2, &mut seq, &mut count, &mut visit);
    }
    Ok(count)
}

/// The grid quiver on vertices `(l, j)`, `1 <= l <= n-1`, `1 <= j <= n`, with an arrow
/// `(l, j) -> (l+1, j)` whenever `l+1 <= n-1` and `l+1 != j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GammaGraph {
    n: usize,
}

impl GammaGraph {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > 64 {
            return Err(Error::Domain(format!("Γ needs 1 <= n <= 64, got {n}")));
        }
        Ok(GammaGraph { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, (l, j): (usize, usize)) -> bool {
        (1..self.n).contains(&l) && (1..=self.n).contains(&j)
    }

    /// The head of the unique arrow out of `v`, if any.
    pub fn successor(&self, (l, j): (usize, usize)) -> Option<(usize, usize)> {
        (l + 1 < self.n && l + 1 != j).then_some((l + 1, j))
    }

    pub fn arrows(&self) -> Vec<((usize, usize), (usize, usize))> {
        let mut out = Vec::new();
        for l in 1..self.n {
            for j in 1..=self.n {
                if let Some(t) = self.successor((l, j)) {
                    out.push(((l, j), t));
                }
            }
        }
        out
    }

    /// Closed means every arrow leaving the set lands back in it.
    pub fn is_closed(&self, set: &[(usize, usize)]) -> Result<bool> {
        let mut columns = vec![0u64; self.n];
        for &v in set {
            if !self.contains(v) {
                return Err(Error::Domain(format!("vertex {v:?} is not in Γ for n = {}", self.n)));
            }
            columns[v.0] |= bit(v.1);
        }
        Ok(set.iter().all(|&v| match self.successor(v) {
            Some((l, j)) => columns[l] & bit(j) != 0,
            None => true,
        }))
    }
}

pub fn is_closed_in_gamma(set: &[(usize, usize)], g: &GammaGraph) -> Result<bool> {
    g.is_closed(set)
}

/// Counts closed vertex sets with exactly `l` vertices in column `l` of `Γ`.
///
/// Columns are filled left to right and every arrow out of the finished column is checked
/// against the next one, so this does not reuse the admissibility rule directly.
pub fn count_closed_column_graded(n: usize) -> Result<u64> {
    if n == 0 {
        return Err(Error::Domain("Γ needs n >= 1".into()));
    }
    check_limit("closed-subset count", n, ADMISSIBLE_MAX_N)?;
    let g = GammaGraph::new(n)?;
    if n == 1 {
        return Ok(1);
    }
    let universe = (1u64 << n) - 1;
    let per_column: Vec<Vec<SubsetMask>> = (1..n).map(|l| k_submasks(universe, l)).collect();
    fn rec(g: &GammaGraph, l: usize, prev: SubsetMask, per_column: &[Vec<SubsetMask>]) -> u64 {
        if l == g.n() {
            return 1;
        }
        per_column[l - 1]
            .iter()
            .filter(|&&cur| {
                l == 1
                    || (1..=g.n()).all(|j| {
                        prev & bit(j) == 0
                            || match g.successor((l - 1, j)) {
                                Some((_, tj)) => cur & bit(tj) != 0,
                                None => true,
                            }
                    })
            })
            .map(|&cur| rec(g, l + 1, cur, per_column))
            .sum()
    }
    Ok(rec(&g, 1, 0, &per_column))
}

pub fn collect_admissible(n: usize) -> Result<Vec<AdmissibleSequence>> {
    let mut out = Vec::new();
    enumerate_admissible(n, |s| out.push(s.clone()))?;
    Ok(out)
}
