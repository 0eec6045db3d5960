//! Brute-force counters used only as independent checks: normalized Dumont permutations of
//! the second kind and pairs of binary staircase fillings.

use std::collections::HashMap;

use crate::error::{check_limit, Error, Result};

pub const DUMONT_MAX_N: usize = 4;
pub const TRIANGLE_PAIRS_MAX_N: usize = 6;

/// Counts `σ ∈ S_{2n+2}` (one-based) with `σ(k) < k` for even `k`, `σ(k) > k` for odd `k`,
/// and `σ⁻¹(2k) < σ⁻¹(2k+1)` for `k = 1..=n`.
pub fn count_dumont(n: usize) -> Result<u64> {
    if n == 0 {
        return Err(Error::Domain("count_dumont needs n >= 1".into()));
    }
    check_limit("Dumont permutation count", n, DUMONT_MAX_N)?;
    let size = 2 * n + 2;
    let mut perm = vec![0usize; size + 1];
    let mut used = vec![false; size + 1];
    Ok(extend_dumont(1, size, n, &mut perm, &mut used))
}

fn extend_dumont(k: usize, size: usize, n: usize, perm: &mut [usize], used: &mut [bool]) -> u64 {
    if k > size {
        return u64::from(is_dumont(perm, n));
    }
    let mut total = 0;
    for v in 1..=size {
        if used[v] || (k.is_multiple_of(2) && v >= k) || (!k.is_multiple_of(2) && v <= k) {
            continue;
        }
        used[v] = true;
        perm[k] = v;
        total += extend_dumont(k + 1, size, n, perm, used);
        used[v] = false;
    }
    total
}

fn is_dumont(perm: &[usize], n: usize) -> bool {
    let mut inverse = vec![0usize; perm.len()];
    for (pos, &v) in perm.iter().enumerate().skip(1) {
        inverse[v] = pos;
    }
    (1..=n).all(|k| inverse[2 * k] < inverse[2 * k + 1])
}

/// Counts pairs of fillings `r, m` of the staircase `1 <= i <= j <= n` by non-negative
/// integers with row sums of `r` and column sums of `m` at most 1, and with equal totals over
/// `{(i, j) : i <= k <= j}` for every `k`.
///
/// The sum bounds force 0/1 entries, so `r` is a choice per row of one column (or none) and `m`
/// a choice per column of one row (or none). Both sides are tabulated by their vector of
/// interval totals and matched.
pub fn count_triangle_pairs(n: usize) -> Result<u64> {
    if n == 0 {
        return Err(Error::Domain("count_triangle_pairs needs n >= 1".into()));
    }
    check_limit("triangle-pair count", n, TRIANGLE_PAIRS_MAX_N)?;
    // r: row k marks column j in k..=n, or nothing
    let r_options: Vec<Vec<Option<(usize, usize)>>> = (1..=n)
        .map(|k| std::iter::once(None).chain((k..=n).map(|j| Some((k, j)))).collect())
        .collect();
    // m: column k marks row i in 1..=k, or nothing
    let m_options: Vec<Vec<Option<(usize, usize)>>> = (1..=n)
        .map(|k| std::iter::once(None).chain((1..=k).map(|i| Some((i, k)))).collect())
        .collect();
    let r_profiles = profile_counts(n, &r_options);
    let m_profiles = profile_counts(n, &m_options);
    Ok(r_profiles
        .iter()
        .map(|(profile, &a)| a * m_profiles.get(profile).copied().unwrap_or(0))
        .sum())
}

/// Tallies, over all selections of one option per slot, the vector
/// `k -> #{marked (i, j) : i <= k <= j}`.
fn profile_counts(n: usize, options: &[Vec<Option<(usize, usize)>>]) -> HashMap<Vec<u8>, u64> {
    let mut out = HashMap::new();
    let mut profile = vec![0u8; n + 1];
    fn rec(
        slot: usize,
        options: &[Vec<Option<(usize, usize)>>],
        profile: &mut Vec<u8>,
        out: &mut HashMap<Vec<u8>, u64>,
    ) {
        if slot == options.len() {
            *out.entry(profile.clone()).or_insert(0) += 1;
            return;
        }
        for opt in &options[slot] {
            if let Some((i, j)) = *opt {
                profile[i..=j].iter_mut().for_each(|c| *c += 1);
            }
            rec(slot + 1, options, profile, out);
            if let Some((i, j)) = *opt {
                profile[i..=j].iter_mut().for_each(|c| *c -= 1);
            }
        }
    }
    rec(0, options, &mut profile, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Every permutation of `1..=size`, no pruning.
    fn all_perms(size: usize) -> Vec<Vec<usize>> {
        fn rec(cur: &mut Vec<usize>, left: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if left.is_empty() {
                out.push(cur.clone());
                return;
            }
            for i in 0..left.len() {
                let v = left.remove(i);
                cur.push(v);
                rec(cur, left, out);
                cur.pop();
                left.insert(i, v);
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut (1..=size).collect(), &mut out);
        out
    }

    fn dumont_by_filter(n: usize) -> Vec<Vec<usize>> {
        all_perms(2 * n + 2)
            .into_iter()
            .filter(|p| {
                let sigma = |k: usize| p[k - 1];
                let pos = |v: usize| p.iter().position(|&x| x == v).unwrap() + 1;
                (1..=2 * n + 2).all(|k| if k % 2 == 0 { sigma(k) < k } else { sigma(k) > k })
                    && (1..=n).all(|k| pos(2 * k) < pos(2 * k + 1))
            })
            .collect()
    }

    #[test]
    fn dumont_small() {
        assert_eq!(dumont_by_filter(1), vec![vec![2, 1, 4, 3]]);
        assert_eq!(count_dumont(1).unwrap(), 1);
        assert_eq!(count_dumont(2).unwrap(), 2);
        assert_eq!(dumont_by_filter(2).len(), 2);
        assert_eq!(count_dumont(3).unwrap(), 7);
        assert_eq!(dumont_by_filter(3).len(), 7);
        assert_eq!(count_dumont(4).unwrap(), 38);
    }

    /// Brute force over all 0/1 fillings of both staircases.
    fn triangle_pairs_by_filter(n: usize) -> u64 {
        let cells: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i..=n).map(move |j| (i, j))).collect();
        let fillings = 1u32 << cells.len();
        let totals = |mask: u32| -> Vec<u32> {
            (1..=n)
                .map(|k| {
                    cells
                        .iter()
                        .enumerate()
                        .filter(|&(b, &(i, j))| mask >> b & 1 == 1 && i <= k && k <= j)
                        .count() as u32
                })
                .collect()
        };
        let row_ok = |mask: u32| {
            (1..=n).all(|k| cells.iter().enumerate().filter(|&(b, &(i, _))| mask >> b & 1 == 1 && i == k).count() <= 1)
        };
        let col_ok = |mask: u32| {
            (1..=n).all(|k| cells.iter().enumerate().filter(|&(b, &(_, j))| mask >> b & 1 == 1 && j == k).count() <= 1)
        };
        let rs: Vec<_> = (0..fillings).filter(|&m| row_ok(m)).map(totals).collect();
        let ms: Vec<_> = (0..fillings).filter(|&m| col_ok(m)).map(totals).collect();
        rs.iter().map(|a| ms.iter().filter(|b| *b == a).count() as u64).sum()
    }

    #[test]
    fn triangle_pairs_small() {
        assert_eq!(count_triangle_pairs(1).unwrap(), 2);
        assert_eq!(count_triangle_pairs(2).unwrap(), 7);
        assert_eq!(count_triangle_pairs(3).unwrap(), 38);
        for n in 1..=3 {
            assert_eq!(count_triangle_pairs(n).unwrap(), triangle_pairs_by_filter(n));
        }
    }

    #[test]
    fn limits() {
        assert!(matches!(count_dumont(5), Err(Error::ResourceLimit { .. })));
        assert!(matches!(count_triangle_pairs(7), Err(Error::ResourceLimit { .. })));
        assert!(count_dumont(0).is_err());
    }
}
