//! Motzkin paths and the weighted path sums that produce `h_n` and `h_n(q)`.
//!
//! A step from height `k` has weight `γ_k` (level), `α_k` (rise to `k + 1`) or `β_{k-1}`
//! (fall to `k - 1`). Totals over all paths of length `n` are computed with a level-indexed
//! transfer matrix; explicit enumeration is kept for termwise checks.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{check_limit, Error, Result};
use crate::exactalg::{q_binomial, Coefficient, IntPoly, LaurentPoly, Rational};

/// Largest length accepted for explicit path enumeration.
pub const MOTZKIN_ENUM_MAX_N: usize = 16;
/// Largest length accepted by the transfer-matrix sum.
pub const PATH_SUM_MAX_N: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MotzkinPath {
    heights: Vec<usize>,
}

impl MotzkinPath {
    pub fn new(heights: Vec<usize>) -> Result<Self> {
        if heights.first() != Some(&0) || heights.last() != Some(&0) {
            return Err(Error::Domain("a Motzkin path starts and ends at height 0".into()));
        }
        if heights.windows(2).any(|w| w[0].abs_diff(w[1]) > 1) {
            return Err(Error::Domain("Motzkin steps change height by at most 1".into()));
        }
        Ok(MotzkinPath { heights })
    }

    /// `f_0, ..., f_n`.
    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    /// Number of steps `n`.
    pub fn len(&self) -> usize {
        self.heights.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Rises plus falls.
    pub fn rises_and_falls(&self) -> usize {
        self.heights.windows(2).filter(|w| w[0] != w[1]).count()
    }

    fn steps(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.heights.windows(2).map(|w| (w[0], w[1]))
    }
}

impl fmt::Display for MotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.heights.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Visits every Motzkin path of length `n`; at each position a fall is tried before a level
/// step, and a level step before a rise.
pub fn enumerate_motzkin(n: usize, mut visit: impl FnMut(&MotzkinPath)) -> Result<u64> {
    check_limit("Motzkin enumeration", n, MOTZKIN_ENUM_MAX_N)?;
    let mut path = MotzkinPath {
        heights: Vec::with_capacity(n + 1),
    };
    path.heights.push(0);
    let mut count = 0;
    fn rec(n: usize, path: &mut MotzkinPath, count: &mut u64, visit: &mut impl FnMut(&MotzkinPath)) {
        let pos = path.heights.len() - 1;
        let h = path.heights[pos];
        if pos == n {
            if h == 0 {
                *count += 1;
                visit(path);
            }
            return;
        }
        let remaining = n - pos - 1;
        let candidates = [h.checked_sub(1), Some(h), Some(h + 1)];
        for next in candidates.into_iter().flatten() {
            if next > remaining {
                continue;
            }
            path.heights.push(next);
            rec(n, path, count, visit);
            path.heights.pop();
        }
    }
    rec(n, &mut path, &mut count, &mut visit);
    Ok(count)
}

pub fn collect_motzkin(n: usize) -> Result<Vec<MotzkinPath>> {
    let mut out = Vec::new();
    enumerate_motzkin(n, |p| out.push(p.clone()))?;
    Ok(out)
}

type LevelFn<C> = Arc<dyn Fn(usize) -> C + Send + Sync>;

/// Level-indexed step weights `α_k`, `β_k`, `γ_k` over a single coefficient ring.
#[derive(Clone)]
pub struct WeightSystem<C> {
    alpha: LevelFn<C>,
    beta: LevelFn<C>,
    gamma: LevelFn<C>,
}

impl<C: Coefficient> WeightSystem<C> {
    pub fn new(
        alpha: impl Fn(usize) -> C + Send + Sync + 'static,
        beta: impl Fn(usize) -> C + Send + Sync + 'static,
        gamma: impl Fn(usize) -> C + Send + Sync + 'static,
    ) -> Self {
        WeightSystem {
            alpha: Arc::new(alpha),
            beta: Arc::new(beta),
            gamma: Arc::new(gamma),
        }
    }

    pub fn alpha(&self, k: usize) -> C {
        (self.alpha)(k)
    }

    pub fn beta(&self, k: usize) -> C {
        (self.beta)(k)
    }

    pub fn gamma(&self, k: usize) -> C {
        (self.gamma)(k)
    }

    /// `w(from, to)`; `to` must differ from `from` by at most one.
    pub fn step(&self, from: usize, to: usize) -> C {
        match to as isize - from as isize {
            0 => self.gamma(from),
            1 => self.alpha(from),
            -1 => self.beta(to),
            _ => C::zero(),
        }
    }

    pub fn path_weight(&self, path: &MotzkinPath) -> C {
        path.steps().fold(C::one(), |acc, (a, b)| acc * self.step(a, b))
    }
}

/// `Σ_{f ∈ M_n} Π_k w(f_k, f_{k+1})` by transfer matrix over heights `0..=n/2`.
pub fn weighted_path_sum<C: Coefficient>(n: usize, ws: &WeightSystem<C>) -> Result<C> {
    check_limit("weighted path sum", n, PATH_SUM_MAX_N)?;
    let top = n / 2;
    let alpha: Vec<C> = (0..=top).map(|k| ws.alpha(k)).collect();
    let beta: Vec<C> = (0..=top).map(|k| ws.beta(k)).collect();
    let gamma: Vec<C> = (0..=top).map(|k| ws.gamma(k)).collect();
    let mut cur = vec![C::zero(); top + 2];
    cur[0] = C::one();
    for step in 0..n {
        let remaining = n - step - 1;
        let mut next = vec![C::zero(); top + 2];
        for h in 0..=top {
            if cur[h].is_zero() {
                continue;
            }
            if h <= remaining {
                next[h] = next[h].clone() + cur[h].clone() * gamma[h].clone();
            }
            if h < remaining {
                next[h + 1] = next[h + 1].clone() + cur[h].clone() * alpha[h].clone();
            }
            if h >= 1 {
                next[h - 1] = next[h - 1].clone() + cur[h].clone() * beta[h - 1].clone();
            }
        }
        cur = next;
    }
    Ok(cur.swap_remove(0))
}

/// `α_m = β_m = (m+1)(m+2)/2`, `γ_m = (m+1)²`.
pub fn integer_weights() -> WeightSystem<BigInt> {
    let tri = |m: usize| BigInt::from((m + 1) * (m + 2) / 2);
    WeightSystem::new(tri, tri, |m| BigInt::from((m + 1) * (m + 1)))
}

/// `α_m = q^{-3m}[m+2,2]`, `β_m = q^{-m-1}[m+2,2]`, `γ_m = q^{-2m}[m+1,1]²`.
pub fn laurent_weights() -> WeightSystem<LaurentPoly> {
    let qb = |m: usize, k: usize| q_binomial(m, k).expect("k <= m");
    WeightSystem::new(
        move |m| LaurentPoly::new(-3 * m as i64, qb(m + 2, 2)),
        move |m| LaurentPoly::new(-(m as i64) - 1, qb(m + 2, 2)),
        move |m| {
            let b = qb(m + 1, 1);
            LaurentPoly::new(-2 * m as i64, &b * &b)
        },
    )
}

/// `h_n` as the rational path sum `Σ Π_k (1+f_k)² / 2^{l(f)}`, checked to be an integer.
pub fn h_motzkin_rational(n: usize) -> Result<BigInt> {
    let mut total = Rational::zero();
    enumerate_motzkin(n, |p| total += rational_term(p))?;
    if !total.is_integer() {
        return Err(Error::Inconsistency(format!(
            "rational Motzkin sum for n = {n} is {total}, not an integer"
        )));
    }
    Ok(total.to_integer())
}

/// One path's contribution `Π_k (1+f_k)² / 2^{l(f)}`.
pub fn rational_term(p: &MotzkinPath) -> Rational {
    let num: BigInt = p
        .heights()
        .iter()
        .map(|&f| BigInt::from((1 + f) * (1 + f)))
        .product();
    Rational::new(num, BigInt::one() << p.rises_and_falls())
}

/// `h_n` as the path sum with the integer weights.
pub fn h_motzkin_integer(n: usize) -> Result<BigInt> {
    weighted_path_sum(n, &integer_weights())
}

/// `[m, k]_q`, taken as zero when `k > m`.
fn qbin_or_zero(m: usize, k: usize) -> IntPoly {
    q_binomial(m, k).unwrap_or_default()
}

/// `Σ_{k=1}^{n-1} (k - f_k)(1 - f_k + f_{k+1})`, signed.
pub fn fermionic_exponent(p: &MotzkinPath) -> i64 {
    let f = p.heights();
    (1..p.len())
        .map(|k| (k as i64 - f[k] as i64) * (1 - f[k] as i64 + f[k + 1] as i64))
        .sum()
}

/// `n(n-1)/2 + Σ_{k=1}^{n-1} f_k (f_k - f_{k+1} - 2)`.
pub fn shifted_exponent(p: &MotzkinPath) -> i64 {
    let n = p.len() as i64;
    let f = p.heights();
    n * (n - 1) / 2
        + (1..p.len())
            .map(|k| f[k] as i64 * (f[k] as i64 - f[k + 1] as i64 - 2))
            .sum::<i64>()
}

/// One path's term `q^E Π_{k=1}^{n-1} [1+f_{k-1}, f_k] [1+f_{k+1}, f_k]`.
pub fn fermionic_term(p: &MotzkinPath) -> Result<IntPoly> {
    let exp = fermionic_exponent(p);
    if exp < 0 {
        return Err(Error::Inconsistency(format!("negative exponent {exp} for path {p}")));
    }
    let f = p.heights();
    let product = (1..p.len()).fold(IntPoly::one(), |acc, k| {
        acc * qbin_or_zero(1 + f[k - 1], f[k]) * qbin_or_zero(1 + f[k + 1], f[k])
    });
    Ok(product.shift(exp as usize))
}

/// `h_n(q)` from the fermionic sum over `M_n`.
pub fn h_poly_fermionic(n: usize) -> Result<IntPoly> {
    if n == 0 {
        return Err(Error::Domain("h_n(q) is defined for n >= 1".into()));
    }
    let mut total = IntPoly::zero();
    let mut failure = None;
    enumerate_motzkin(n, |p| match fermionic_term(p) {
        Ok(t) => total += &t,
        Err(e) => {
            failure.get_or_insert(e);
        }
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(total),
    }
}

/// `h_n(q) = q^{n(n-1)/2} Σ_{f ∈ M_n} Π w(f_k, f_{k+1})` with the Laurent weights.
pub fn h_poly_laurent(n: usize) -> Result<IntPoly> {
    if n == 0 {
        return Err(Error::Domain("h_n(q) is defined for n >= 1".into()));
    }
    let sum = weighted_path_sum(n, &laurent_weights())?;
    let shifted = sum.shift((n * (n - 1) / 2) as i64);
    shifted.to_poly().ok_or_else(|| {
        Error::Inconsistency(format!("Laurent path sum for n = {n} keeps negative powers: {shifted}"))
    })
}

/// `h̃_n(q) = q^{n(n-1)/2} h_n(1/q)`, with `h̃_0 = 1`.
pub fn tilde_h(n: usize) -> Result<IntPoly> {
    if n == 0 {
        return Ok(IntPoly::one());
    }
    h_poly_fermionic(n)?.reverse(n * (n - 1) / 2)
}
