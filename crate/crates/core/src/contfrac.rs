//! Jacobi- and Stieltjes-type continued fractions expanded as truncated power series in `s`,
//! the two contraction rules that turn an S-fraction into a J-fraction, and the fractions
//! for `h̃_n(q)`, `h_n` and the median Genocchi numbers.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{q_binomial, IntPoly, PowerSeries};
use crate::motzkin::WeightSystem;

/// Coefficient generator indexed by depth.
pub type CoeffGen = Arc<dyn Fn(usize) -> IntPoly + Send + Sync>;

fn gen(f: impl Fn(usize) -> IntPoly + Send + Sync + 'static) -> CoeffGen {
    Arc::new(f)
}

/// Symbolic continued fraction.
#[derive(Clone)]
pub enum CFSpec {
    /// `head / (1 - γ_0 s - λ_1 s² / (1 - γ_1 s - λ_2 s² / ...))`; `lambda(0)` is never read.
    J {
        head: IntPoly,
        gamma: CoeffGen,
        lambda: CoeffGen,
    },
    /// `c_0 / (1 - c_1 s / (1 - c_2 s / ...))`.
    S { c: CoeffGen },
    /// `head + lead s / (1 - γ_1 s - λ_1 s² / (1 - γ_2 s - λ_2 s² / ...))`; `gamma(0)` and
    /// `lambda(0)` are never read.
    SAffine {
        head: IntPoly,
        lead: IntPoly,
        gamma: CoeffGen,
        lambda: CoeffGen,
    },
}

impl fmt::Debug for CFSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |g: &CoeffGen, from: usize| -> Vec<String> { (from..from + 4).map(|k| g(k).to_string()).collect() };
        match self {
            CFSpec::J { head, gamma, lambda } => f
                .debug_struct("J")
                .field("head", head)
                .field("gamma", &show(gamma, 0))
                .field("lambda", &show(lambda, 1))
                .finish(),
            CFSpec::S { c } => f.debug_struct("S").field("c", &show(c, 0)).finish(),
            CFSpec::SAffine { head, lead, gamma, lambda } => f
                .debug_struct("SAffine")
                .field("head", head)
                .field("lead", lead)
                .field("gamma", &show(gamma, 1))
                .field("lambda", &show(lambda, 1))
                .finish(),
        }
    }
}

impl CFSpec {
    pub fn j(
        head: IntPoly,
        gamma: impl Fn(usize) -> IntPoly + Send + Sync + 'static,
        lambda: impl Fn(usize) -> IntPoly + Send + Sync + 'static,
    ) -> Self {
        CFSpec::J {
            head,
            gamma: gen(gamma),
            lambda: gen(lambda),
        }
    }

    pub fn s(c: impl Fn(usize) -> IntPoly + Send + Sync + 'static) -> Self {
        CFSpec::S { c: gen(c) }
    }

    /// S-fraction with `c_0, c_1, ...` from a finite list, zero afterwards.
    pub fn s_from_list(c: Vec<IntPoly>) -> Self {
        CFSpec::s(move |k| c.get(k).cloned().unwrap_or_default())
    }

    /// J-fraction from finite lists: `gamma[k] = γ_k`, `lambda[k] = λ_{k+1}`.
    pub fn j_from_lists(head: IntPoly, gamma: Vec<IntPoly>, lambda: Vec<IntPoly>) -> Self {
        CFSpec::j(
            head,
            move |k| gamma.get(k).cloned().unwrap_or_default(),
            move |k| {
                k.checked_sub(1)
                    .and_then(|i| lambda.get(i).cloned())
                    .unwrap_or_default()
            },
        )
    }

    /// Levels needed so that all coefficients through `s^order` are exact.
    ///
    /// `λ_k` first reaches `s^{2k}` and `c_k` first reaches `s^k`.
    pub fn sufficient_depth(&self, order: usize) -> usize {
        match self {
            CFSpec::J { .. } | CFSpec::SAffine { .. } => order.div_ceil(2) + 1,
            CFSpec::S { .. } => order + 1,
        }
    }

    /// Path weights whose transfer-matrix sum reproduces the J-fraction coefficients
    /// (up to the head factor): `α_k = λ_{k+1}`, `β_k = 1`.
    pub fn j_weights(&self) -> Option<(IntPoly, WeightSystem<IntPoly>)> {
        match self {
            CFSpec::J { head, gamma, lambda } => {
                let (g, l) = (gamma.clone(), lambda.clone());
                Some((
                    head.clone(),
                    WeightSystem::new(move |k| l(k + 1), |_| IntPoly::one(), move |k| g(k)),
                ))
            }
            _ => None,
        }
    }
}

/// `1 / (1 - γ_0 s - λ_1 s² / (1 - γ_1 s - ...))` over `levels` levels.
fn j_tail(gamma: &dyn Fn(usize) -> IntPoly, lambda: &dyn Fn(usize) -> IntPoly, levels: usize, order: usize) -> Result<PowerSeries> {
    let mut below = PowerSeries::zero(order);
    for k in (0..levels).rev() {
        let mut denom = PowerSeries::one(order);
        if order >= 1 {
            denom = denom.sub(&PowerSeries::constant(order, gamma(k)).mul_s_pow(1));
        }
        if k + 1 < levels {
            denom = denom.sub(&below.scale(&lambda(k + 1)).mul_s_pow(2));
        }
        below = denom.inverse()?;
    }
    Ok(below)
}

/// Expands through `s^order` at the depth from [`CFSpec::sufficient_depth`].
pub fn expand(spec: &CFSpec, order: usize) -> Result<PowerSeries> {
    expand_at_depth(spec, order, spec.sufficient_depth(order))
}

/// Expands with an explicit truncation depth (number of levels kept).
pub fn expand_at_depth(spec: &CFSpec, order: usize, depth: usize) -> Result<PowerSeries> {
    match spec {
        CFSpec::J { head, gamma, lambda } => {
            Ok(j_tail(gamma.as_ref(), lambda.as_ref(), depth.max(1), order)?.scale(head))
        }
        CFSpec::S { c } => {
            let mut below = PowerSeries::one(order);
            for k in (1..=depth).rev() {
                let denom = PowerSeries::one(order).sub(&below.scale(&c(k)).mul_s_pow(1));
                below = denom.inverse()?;
            }
            Ok(below.scale(&c(0)))
        }
        CFSpec::SAffine { head, lead, gamma, lambda } => {
            let shifted_gamma = |k: usize| gamma(k + 1);
            let tail = j_tail(&shifted_gamma, lambda.as_ref(), depth.max(1), order)?;
            Ok(PowerSeries::constant(order, head.clone()).add(&tail.scale(lead).mul_s_pow(1)))
        }
    }
}

/// `c_0/(1 - c_1 s/(1 - c_2 s/...))  =  c_0/(1 - c_1 s - c_1c_2 s²/(1 - (c_2+c_3)s - c_3c_4 s²/...))`.
pub fn contract_s_to_j(c: CoeffGen) -> CFSpec {
    let (cg, cl) = (c.clone(), c.clone());
    CFSpec::J {
        head: c(0),
        gamma: gen(move |k| if k == 0 { cg(1) } else { cg(2 * k) + cg(2 * k + 1) }),
        lambda: gen(move |k| {
            if k == 0 {
                IntPoly::zero()
            } else {
                cl(2 * k - 1) * cl(2 * k)
            }
        }),
    }
}

/// `c_0/(1 - c_1 s/(1 - c_2 s/...))  =  c_0 + c_0c_1 s/(1 - (c_1+c_2)s - c_2c_3 s²/(1 - (c_3+c_4)s - ...))`.
pub fn contract_s_to_j_affine(c: CoeffGen) -> CFSpec {
    let (cg, cl) = (c.clone(), c.clone());
    CFSpec::SAffine {
        head: c(0),
        lead: c(0) * c(1),
        gamma: gen(move |k| {
            if k == 0 {
                IntPoly::zero()
            } else {
                cg(2 * k - 1) + cg(2 * k)
            }
        }),
        lambda: gen(move |k| {
            if k == 0 {
                IntPoly::zero()
            } else {
                cl(2 * k) * cl(2 * k + 1)
            }
        }),
    }
}

/// The fractions with closed-form coefficient laws.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedFraction {
    /// J-fraction for `Σ h̃_n(q) s^n`.
    F1,
    /// S-fraction for `Σ h̃_n(q) s^n`.
    F2,
    /// S-fraction for `Σ h_n s^n`.
    Hn,
    /// S-fraction for `1 + Σ H_{2n-1} s^n`.
    Viennot,
}

impl NamedFraction {
    pub const ALL: [NamedFraction; 4] = [
        NamedFraction::F1,
        NamedFraction::F2,
        NamedFraction::Hn,
        NamedFraction::Viennot,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedFraction::F1 => "f1",
            NamedFraction::F2 => "f2",
            NamedFraction::Hn => "hn",
            NamedFraction::Viennot => "viennot",
        }
    }

    pub fn spec(self) -> CFSpec {
        match self {
            NamedFraction::F1 => f1_spec(),
            NamedFraction::F2 => CFSpec::S { c: f2_coeffs() },
            NamedFraction::Hn => CFSpec::S { c: hn_coeffs() },
            NamedFraction::Viennot => CFSpec::S { c: viennot_coeffs() },
        }
    }
}

impl FromStr for NamedFraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NamedFraction::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown fraction `{s}`")))
    }
}

fn qbin(m: usize, k: usize) -> IntPoly {
    q_binomial(m, k).expect("k <= m")
}

/// `γ_k = [k+1,1]²`, `λ_k = q [k+1,2]²`.
pub fn f1_spec() -> CFSpec {
    CFSpec::j(
        IntPoly::one(),
        |k| {
            let b = qbin(k + 1, 1);
            &b * &b
        },
        |k| {
            if k == 0 {
                return IntPoly::zero();
            }
            let b = qbin(k + 1, 2);
            (&b * &b).shift(1)
        },
    )
}

/// `c_0 = 1`, `c_{2k-1} = [k+1,2]`, `c_{2k} = q [k+1,2]`.
pub fn f2_coeffs() -> CoeffGen {
    gen(|i| match i {
        0 => IntPoly::one(),
        _ if i % 2 == 1 => qbin(i.div_ceil(2) + 1, 2),
        _ => qbin(i / 2 + 1, 2).shift(1),
    })
}

/// `c_0 = 1`, `c_{2k-1} = c_{2k} = k(k+1)/2`.
pub fn hn_coeffs() -> CoeffGen {
    gen(|i| {
        if i == 0 {
            return IntPoly::one();
        }
        let k = i.div_ceil(2);
        IntPoly::constant(BigInt::from(k * (k + 1) / 2))
    })
}

/// `c_0 = 1`, `c_{2k-1} = c_{2k} = k²`.
pub fn viennot_coeffs() -> CoeffGen {
    gen(|i| {
        if i == 0 {
            return IntPoly::one();
        }
        let k = i.div_ceil(2);
        IntPoly::constant(BigInt::from(k * k))
    })
}

/// Which fraction to expand for `Σ h̃_n(q) s^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TildeRoute {
    F1,
    F2,
}

pub fn tilde_h_series(order: usize, via: TildeRoute) -> Result<PowerSeries> {
    match via {
        TildeRoute::F1 => expand(&NamedFraction::F1.spec(), order),
        TildeRoute::F2 => expand(&NamedFraction::F2.spec(), order),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::motzkin::weighted_path_sum;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn ints(s: &PowerSeries) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| {
                assert!(c.is_constant());
                i64::try_from(c.coeff(0)).unwrap()
            })
            .collect()
    }

    #[test]
    fn geometric_j_fraction() {
        let spec = CFSpec::j(IntPoly::one(), |_| IntPoly::constant(3), |_| IntPoly::zero());
        assert_eq!(ints(&expand(&spec, 6).unwrap()), vec![1, 3, 9, 27, 81, 243, 729]);
    }

    #[test]
    fn catalan_s_fraction() {
        // all c_k = 1 gives the Catalan numbers
        let spec = CFSpec::s(|_| IntPoly::one());
        assert_eq!(ints(&expand(&spec, 7).unwrap()), vec![1, 1, 2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn named_integer_fractions() {
        assert_eq!(
            ints(&expand(&NamedFraction::Viennot.spec(), 5).unwrap()),
            vec![1, 1, 2, 8, 56, 608]
        );
        assert_eq!(
            ints(&expand(&NamedFraction::Hn.spec(), 6).unwrap()),
            vec![1, 1, 2, 7, 38, 295, 3098]
        );
    }

    #[test]
    fn f1_low_order_coefficients() {
        let s = expand(&f1_spec(), 4).unwrap();
        assert_eq!(s.coeff(0), &p(&[1]));
        assert_eq!(s.coeff(1), &p(&[1]));
        assert_eq!(s.coeff(2), &p(&[1, 1]));
        assert_eq!(s.coeff(3), &p(&[1, 3, 2, 1]));
        // h̃_4 is the reversal of 1+3q+7q²+10q³+10q⁴+6q⁵+q⁶
        assert_eq!(s.coeff(4), &p(&[1, 6, 10, 10, 7, 3, 1]));
        assert_eq!(tilde_h_series(0, TildeRoute::F1).unwrap().coeffs(), &[p(&[1])]);
        assert_eq!(
            tilde_h_series(2, TildeRoute::F1).unwrap().coeffs(),
            &[p(&[1]), p(&[1]), p(&[1, 1])]
        );
    }

    #[test]
    fn f2_coefficient_law() {
        let c = f2_coeffs();
        assert_eq!(c(1), p(&[1]));
        assert_eq!(c(2), p(&[0, 1]));
        assert_eq!(c(3), p(&[1, 1, 1]));
        assert_eq!(c(4), p(&[0, 1, 1, 1]));
        assert_eq!(c(5), qbin(4, 2));
    }

    #[test]
    fn f2_contracts_to_f1() {
        let contracted = contract_s_to_j(f2_coeffs());
        let CFSpec::J { gamma, lambda, .. } = &contracted else { unreachable!() };
        let CFSpec::J { gamma: g1, lambda: l1, .. } = f1_spec() else { unreachable!() };
        assert_eq!(gamma(1), p(&[1, 2, 1]));
        for k in 0..8 {
            assert_eq!(gamma(k), g1(k), "gamma_{k}");
            if k >= 1 {
                assert_eq!(lambda(k), l1(k), "lambda_{k}");
            }
        }
        assert_eq!(expand(&contracted, 8).unwrap(), tilde_h_series(8, TildeRoute::F2).unwrap());
        assert_eq!(
            tilde_h_series(8, TildeRoute::F1).unwrap(),
            tilde_h_series(8, TildeRoute::F2).unwrap()
        );
    }

    #[test]
    fn viennot_affine_form() {
        let affine = contract_s_to_j_affine(viennot_coeffs());
        let CFSpec::SAffine { head, lead, gamma, lambda } = &affine else { unreachable!() };
        assert_eq!(head, &p(&[1]));
        assert_eq!(lead, &p(&[1]));
        let gammas: Vec<_> = (1..=4).map(|k| gamma(k)).collect();
        let lambdas: Vec<_> = (1..=3).map(|k| lambda(k)).collect();
        assert_eq!(gammas, vec![p(&[2]), p(&[8]), p(&[18]), p(&[32])]);
        assert_eq!(lambdas, vec![p(&[4]), p(&[36]), p(&[144])]);
        assert_eq!(
            expand(&affine, 10).unwrap(),
            expand(&NamedFraction::Viennot.spec(), 10).unwrap()
        );
    }

    #[test]
    fn zero_coefficients() {
        let zero = gen(|k| if k == 0 { IntPoly::constant(5) } else { IntPoly::zero() });
        let s = expand(&contract_s_to_j(zero.clone()), 5).unwrap();
        assert_eq!(s, PowerSeries::constant(5, IntPoly::constant(5)));
        let a = expand(&contract_s_to_j_affine(zero), 5).unwrap();
        assert_eq!(a, PowerSeries::constant(5, IntPoly::constant(5)));
    }

    #[test]
    fn depth_stability() {
        for f in NamedFraction::ALL {
            let spec = f.spec();
            for order in 0..=10 {
                let d = spec.sufficient_depth(order);
                assert_eq!(
                    expand_at_depth(&spec, order, d).unwrap(),
                    expand_at_depth(&spec, order, d + 3).unwrap(),
                    "{} order {order}",
                    f.name()
                );
            }
        }
    }

    #[test]
    fn flajolet_path_sums() {
        for f in NamedFraction::ALL {
            let spec = match f.spec() {
                j @ CFSpec::J { .. } => j,
                CFSpec::S { c } => contract_s_to_j(c),
                CFSpec::SAffine { .. } => unreachable!(),
            };
            let series = expand(&f.spec(), 8).unwrap();
            let (head, ws) = spec.j_weights().unwrap();
            for n in 0..=8 {
                let total = weighted_path_sum(n, &ws).unwrap() * &head;
                assert_eq!(&total, series.coeff(n), "{} n={n}", f.name());
            }
        }
    }

    #[test]
    fn q_one_specialization() {
        let f1 = expand(&f1_spec(), 8).unwrap();
        let hn = expand(&NamedFraction::Hn.spec(), 8).unwrap();
        assert_eq!(f1.at_q_one(), hn.at_q_one());
    }

    #[test]
    fn names_parse() {
        for f in NamedFraction::ALL {
            assert_eq!(f.name().parse::<NamedFraction>().unwrap(), f);
        }
        assert!("f3".parse::<NamedFraction>().is_err());
    }
}
