//! Cross-check harness. Every independent route to the same value is computed and compared,
//! one pass/fail line per check.

use std::fmt;
use std::fmt::Display;

use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::admissible::{count_closed_column_graded, enumerate_admissible};
use crate::contfrac::{
    contract_s_to_j, contract_s_to_j_affine, expand, f2_coeffs, viennot_coeffs, CFSpec, CoeffGen,
    NamedFraction,
};
use crate::dellac::{enumerate_dellac_in_window, h_poly_dellac_in_window, DellacWindow};
use crate::error::{Error, Result};
use crate::exactalg::IntPoly;
use crate::hanzeng::hanzeng_barc_sequence;
use crate::motzkin::{
    enumerate_motzkin, fermionic_exponent, h_motzkin_integer, h_motzkin_rational, h_poly_fermionic,
    h_poly_laurent, shifted_exponent, tilde_h,
};
use crate::oracles::{count_dumont, count_triangle_pairs};
use crate::seidel::SeidelTriangle;

pub const CROSSCHECK_MAX_N: usize = 8;
pub const DEFAULT_SEED: u64 = 42;

/// Values listed in the literature, used as fixed reference points.
const TABULATED_H: [i64; 7] = [1, 1, 2, 7, 38, 295, 3098];
const TABULATED_H_POLY: [&[i64]; 4] = [&[1], &[1, 1], &[1, 2, 3, 1], &[1, 3, 7, 10, 10, 6, 1]];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub range: String,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub n_max: usize,
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail).count()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name_w = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(4);
        let range_w = self.checks.iter().map(|c| c.range.len()).max().unwrap_or(5);
        writeln!(f, "crosscheck n_max={} seed={}", self.n_max, self.seed)?;
        for c in &self.checks {
            writeln!(
                f,
                "{:<7} {:<name_w$}  {:<range_w$}  {}",
                c.status.to_string(),
                c.name,
                c.range,
                c.detail
            )?;
        }
        write!(
            f,
            "{} checks, {} failed",
            self.checks.len(),
            self.failures()
        )
    }
}

/// Models whose range is capped independently of `n_max`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CappedModel {
    Dumont,
    TrianglePairs,
    Divisibility,
    Exponents,
    Contraction,
}

#[derive(Clone, Debug)]
pub struct CrosscheckOptions {
    pub seed: u64,
    /// Band used by the Dellac enumerator; anything but the standard band should fail.
    pub dellac_window: DellacWindow,
    pub random_instances: usize,
    pub caps: Vec<(CappedModel, usize)>,
}

impl Default for CrosscheckOptions {
    fn default() -> Self {
        CrosscheckOptions {
            seed: DEFAULT_SEED,
            dellac_window: DellacWindow::STANDARD,
            random_instances: 100,
            caps: vec![
                (CappedModel::Dumont, 4),
                (CappedModel::TrianglePairs, 6),
                (CappedModel::Divisibility, 12),
                (CappedModel::Exponents, 10),
                (CappedModel::Contraction, 10),
            ],
        }
    }
}

impl CrosscheckOptions {
    fn cap(&self, model: CappedModel) -> usize {
        self.caps
            .iter()
            .find(|(m, _)| *m == model)
            .map(|&(_, c)| c)
            .unwrap_or(0)
    }
}

type CheckFn = Box<dyn Fn() -> std::result::Result<String, String> + Send + Sync>;

struct PlannedCheck {
    name: &'static str,
    lo: usize,
    hi: usize,
    run: CheckFn,
}

fn range_label(lo: usize, hi: usize) -> String {
    if lo > hi {
        "empty".to_string()
    } else {
        format!("n={lo}..={hi}")
    }
}

/// Compares two routes over `lo..=hi`, reporting every disagreement.
fn agree<T, A, B>(lo: usize, hi: usize, lhs: A, rhs: B) -> std::result::Result<String, String>
where
    T: PartialEq + Display,
    A: Fn(usize) -> Result<T>,
    B: Fn(usize) -> Result<T>,
{
    let mut bad = Vec::new();
    for n in lo..=hi {
        match (lhs(n), rhs(n)) {
            (Ok(a), Ok(b)) if a == b => {}
            (Ok(a), Ok(b)) => bad.push(format!("n={n}: {a} vs {b}")),
            (Err(e), _) | (_, Err(e)) => bad.push(format!("n={n}: {e}")),
        }
    }
    if bad.is_empty() {
        Ok("all agree".into())
    } else {
        Err(bad.join("; "))
    }
}

fn to_big(x: u64) -> BigInt {
    BigInt::from(x)
}

fn random_coeffs(rng: &mut ChaCha8Rng, len: usize) -> Vec<IntPoly> {
    (0..len).map(|_| IntPoly::constant(rng.random_range(1..=5i64))).collect()
}

fn series_equal(a: &CFSpec, b: &CFSpec, order: usize) -> Result<bool> {
    Ok(expand(a, order)? == expand(b, order)?)
}

pub fn crosscheck(n_max: usize) -> Result<CheckReport> {
    crosscheck_with(n_max, &CrosscheckOptions::default())
}

pub fn crosscheck_with(n_max: usize, opts: &CrosscheckOptions) -> Result<CheckReport> {
    if !(1..=CROSSCHECK_MAX_N).contains(&n_max) {
        return Err(Error::Domain(format!(
            "crosscheck needs 1 <= n_max <= {CROSSCHECK_MAX_N}, got {n_max}"
        )));
    }
    let div_cap = opts.cap(CappedModel::Divisibility);
    let triangle = SeidelTriangle::build(2 * (n_max + 2).max(div_cap + 1))?;
    let h = move |n: usize| triangle.normalized_h(n);
    let window = opts.dellac_window;
    let contraction_order = opts.cap(CappedModel::Contraction);

    let mut plan: Vec<PlannedCheck> = Vec::new();
    let mut push = |name: &'static str, lo: usize, hi: usize, run: CheckFn| {
        plan.push(PlannedCheck { name, lo, hi, run })
    };

    {
        let h = h.clone();
        push(
            "sequence/h-values",
            0,
            n_max,
            Box::new(move || {
                let vals: Vec<BigInt> = (0..=n_max).map(&h).collect::<Result<_>>().map_err(|e| e.to_string())?;
                let shown: Vec<String> = vals.iter().map(ToString::to_string).collect();
                for (n, v) in vals.iter().enumerate().take(TABULATED_H.len()) {
                    if *v != BigInt::from(TABULATED_H[n]) {
                        return Err(format!("h_{n} = {v}, tabulated {}", TABULATED_H[n]));
                    }
                }
                Ok(format!("h-values: {}", shown.join(",")))
            }),
        );
    }
    {
        let t = SeidelTriangle::build(24)?;
        push(
            "sequence/seidel-recurrences",
            1,
            24,
            Box::new(move || {
                if t.check_recurrences() {
                    Ok("columns 1..=24 rebuild exactly".into())
                } else {
                    Err("a column disagrees with its recurrence".into())
                }
            }),
        );
    }
    {
        let h = h.clone();
        push(
            "counts/dellac",
            1,
            n_max,
            Box::new(move || {
                agree(1, n_max, &h, |n| enumerate_dellac_in_window(n, window, |_| {}).map(to_big))
            }),
        );
    }
    {
        let h = h.clone();
        push(
            "counts/admissible",
            1,
            n_max,
            Box::new(move || agree(1, n_max, &h, |n| enumerate_admissible(n, |_| {}).map(to_big))),
        );
    }
    {
        let h = h.clone();
        push(
            "counts/closed-subsets",
            1,
            n_max,
            Box::new(move || agree(1, n_max, &h, |n| count_closed_column_graded(n).map(to_big))),
        );
    }
    {
        let h = h.clone();
        push(
            "counts/motzkin-rational",
            1,
            n_max,
            Box::new(move || agree(1, n_max, &h, h_motzkin_rational)),
        );
    }
    {
        let h = h.clone();
        push(
            "counts/motzkin-integer-weights",
            1,
            n_max,
            Box::new(move || agree(1, n_max, &h, h_motzkin_integer)),
        );
    }
    {
        let h = h.clone();
        let hi = n_max.min(opts.cap(CappedModel::Dumont));
        push(
            "oracles/dumont",
            1,
            hi,
            Box::new(move || agree(1, hi, &h, |n| count_dumont(n).map(to_big))),
        );
    }
    {
        let h = h.clone();
        let hi = n_max.min(opts.cap(CappedModel::TrianglePairs));
        push(
            "oracles/triangle-pairs",
            1,
            hi,
            Box::new(move || agree(1, hi, |n| h(n + 1), |n| count_triangle_pairs(n).map(to_big))),
        );
    }
    push(
        "poly/tabulated",
        1,
        n_max.min(TABULATED_H_POLY.len()),
        Box::new(move || {
            let hi = n_max.min(TABULATED_H_POLY.len());
            agree(1, hi, |n| Ok(IntPoly::from_i64s(TABULATED_H_POLY[n - 1])), h_poly_fermionic)
        }),
    );
    push(
        "poly/dellac-vs-fermionic",
        1,
        n_max,
        Box::new(move || agree(1, n_max, |n| h_poly_dellac_in_window(n, window), h_poly_fermionic)),
    );
    push(
        "poly/fermionic-vs-laurent",
        1,
        n_max,
        Box::new(move || agree(1, n_max, h_poly_fermionic, h_poly_laurent)),
    );
    {
        let h = h.clone();
        push(
            "poly/structure",
            1,
            n_max,
            Box::new(move || {
                for n in 1..=n_max {
                    let p = h_poly_fermionic(n).map_err(|e| e.to_string())?;
                    let want = n * (n - 1) / 2;
                    let deg = p.degree().map_err(|e| e.to_string())?;
                    if deg != want {
                        return Err(format!("n={n}: degree {deg}, expected {want}"));
                    }
                    if !p.coeff(0).is_one() || !p.coeff(deg).is_one() {
                        return Err(format!("n={n}: end coefficients of {p} are not 1"));
                    }
                    let at_one = h(n).map_err(|e| e.to_string())?;
                    if p.eval_at_one() != at_one {
                        return Err(format!("n={n}: h_n(1) = {} but h_n = {at_one}", p.eval_at_one()));
                    }
                }
                Ok("degree n(n-1)/2 with unit end coefficients; h_n(1) = h_n".into())
            }),
        );
    }
    push(
        "motzkin/exponent-identity",
        0,
        opts.cap(CappedModel::Exponents),
        Box::new({
            let hi = opts.cap(CappedModel::Exponents);
            move || {
                for n in 0..=hi {
                    let mut bad = None;
                    enumerate_motzkin(n, |p| {
                        let e = fermionic_exponent(p);
                        if bad.is_none() && (e < 0 || e != shifted_exponent(p)) {
                            bad = Some(format!("path {p}: exponent {e}, rewritten {}", shifted_exponent(p)));
                        }
                    })
                    .map_err(|e| e.to_string())?;
                    if let Some(b) = bad {
                        return Err(b);
                    }
                }
                Ok("exponents nonnegative and equal to the shifted form".into())
            }
        }),
    );
    for (name, fraction) in [
        ("series/f1-vs-tilde-h", NamedFraction::F1),
        ("series/f2-vs-tilde-h", NamedFraction::F2),
    ] {
        push(
            name,
            0,
            n_max,
            Box::new(move || {
                let s = expand(&fraction.spec(), n_max).map_err(|e| e.to_string())?;
                agree(0, n_max, |n| Ok(s.coeff(n).clone()), tilde_h)
            }),
        );
    }
    push(
        "hanzeng/barc-vs-tilde-h",
        1,
        n_max,
        Box::new(move || {
            let barc = hanzeng_barc_sequence(n_max + 1).map_err(|e| e.to_string())?;
            agree(1, n_max, |n| Ok(barc[n].clone()), tilde_h)
        }),
    );
    {
        let h = h.clone();
        push(
            "q-one/f1-vs-hn",
            0,
            n_max,
            Box::new(move || {
                let f1 = expand(&NamedFraction::F1.spec(), n_max).map_err(|e| e.to_string())?;
                let hn = expand(&NamedFraction::Hn.spec(), n_max).map_err(|e| e.to_string())?;
                agree(0, n_max, |n| Ok(f1.coeff(n).eval_at_one()), |n| Ok(hn.coeff(n).eval_at_one()))?;
                agree(0, n_max, |n| Ok(hn.coeff(n).eval_at_one()), &h)
            }),
        );
    }
    {
        let h = h.clone();
        push(
            "q-one/viennot-vs-median",
            1,
            n_max,
            Box::new(move || {
                let v = expand(&NamedFraction::Viennot.spec(), n_max).map_err(|e| e.to_string())?;
                agree(
                    1,
                    n_max,
                    |n| Ok(v.coeff(n).eval_at_one()),
                    |n| Ok((BigInt::one() << (n - 1)) * h(n - 1)?),
                )
            }),
        );
    }
    {
        let t = SeidelTriangle::build(2 * div_cap + 2)?;
        push(
            "divisibility/median",
            1,
            div_cap,
            Box::new(move || {
                for n in 1..=div_cap {
                    let big_h = t.median_genocchi(n + 1).map_err(|e| e.to_string())?;
                    if big_h.clone() % (BigInt::one() << n) != BigInt::from(0) {
                        return Err(format!("H_{} = {big_h} is not divisible by 2^{n}", 2 * n + 1));
                    }
                }
                Ok("H_{2n+1} divisible by 2^n".into())
            }),
        );
    }
    push(
        "contraction/f2-to-f1",
        0,
        contraction_order,
        Box::new(move || {
            let f1 = NamedFraction::F1.spec();
            let contracted = contract_s_to_j(f2_coeffs());
            let f2 = NamedFraction::F2.spec();
            match (
                series_equal(&f2, &contracted, contraction_order),
                series_equal(&f1, &contracted, contraction_order),
            ) {
                (Ok(true), Ok(true)) => Ok("contracted f2 equals f1".into()),
                (Err(e), _) | (_, Err(e)) => Err(e.to_string()),
                _ => Err("series differ".into()),
            }
        }),
    );
    push(
        "contraction/viennot-affine",
        0,
        contraction_order,
        Box::new(move || {
            let s = NamedFraction::Viennot.spec();
            let a = contract_s_to_j_affine(viennot_coeffs());
            match series_equal(&s, &a, contraction_order) {
                Ok(true) => Ok("affine contraction agrees".into()),
                Ok(false) => Err("series differ".into()),
                Err(e) => Err(e.to_string()),
            }
        }),
    );
    {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let instances: Vec<Vec<IntPoly>> = (0..opts.random_instances)
            .map(|_| random_coeffs(&mut rng, 2 * contraction_order + 4))
            .collect();
        let count = instances.len();
        push(
            "contraction/random",
            0,
            contraction_order,
            Box::new(move || {
                for (i, c) in instances.iter().enumerate() {
                    let c = c.clone();
                    let g: CoeffGen = std::sync::Arc::new(move |k| c.get(k).cloned().unwrap_or_default());
                    let s = CFSpec::S { c: g.clone() };
                    for (label, other) in [("J", contract_s_to_j(g.clone())), ("affine", contract_s_to_j_affine(g))] {
                        match series_equal(&s, &other, contraction_order) {
                            Ok(true) => {}
                            Ok(false) => return Err(format!("instance {i}: {label} contraction differs")),
                            Err(e) => return Err(format!("instance {i}: {e}")),
                        }
                    }
                }
                Ok(format!("{count} random instances, both contractions agree"))
            }),
        );
    }

    let mut checks: Vec<Check> = std::thread::scope(|scope| {
        let handles: Vec<_> = plan
            .iter()
            .map(|c| {
                scope.spawn(move || {
                    let range = range_label(c.lo, c.hi);
                    if c.lo > c.hi {
                        return Check {
                            name: c.name.into(),
                            range,
                            status: CheckStatus::Skipped,
                            detail: "range is empty".into(),
                        };
                    }
                    let (status, detail) = match (c.run)() {
                        Ok(d) => (CheckStatus::Pass, d),
                        Err(d) => (CheckStatus::Fail, d),
                    };
                    Check {
                        name: c.name.into(),
                        range,
                        status,
                        detail,
                    }
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("check panicked")).collect()
    });
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(CheckReport {
        n_max,
        seed: opts.seed,
        checks,
    })
}
