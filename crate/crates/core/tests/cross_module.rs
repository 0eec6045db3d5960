use genocchi::admissible::{collect_admissible, count_closed_column_graded, GammaGraph};
use genocchi::contfrac::{contract_s_to_j, contract_s_to_j_affine, expand, CFSpec, CoeffGen, NamedFraction};
use genocchi::dellac::{collect_dellac, dellac_length, h_poly_dellac, DellacConfig};
use genocchi::exactalg::{poly_reverse, q_binomial, IntPoly};
use genocchi::hanzeng::hanzeng_barc;
use genocchi::motzkin::{h_poly_fermionic, h_poly_laurent, tilde_h};
use genocchi::seidel::{build_triangle, normalized_h};
use genocchi::verify::{crosscheck, CheckStatus};
use num_bigint::BigInt;
use proptest::prelude::*;
use std::sync::Arc;

#[test]
fn seidel_matches_dellac_through_seven() {
    let t = build_triangle(16).unwrap();
    for n in 1..=7 {
        let configs = collect_dellac(n).unwrap();
        assert_eq!(BigInt::from(configs.len()), t.normalized_h(n).unwrap(), "n={n}");
    }
}

#[test]
fn admissible_sequences_are_closed_subsets() {
    for n in 1..=6 {
        let g = GammaGraph::new(n).unwrap();
        let seqs = collect_admissible(n).unwrap();
        for s in &seqs {
            assert!(g.is_closed(&s.vertex_set()).unwrap());
        }
        assert_eq!(seqs.len() as u64, count_closed_column_graded(n).unwrap());
    }
}

#[test]
fn dellac_polynomial_is_length_tally() {
    for n in 1..=5 {
        let mut coeffs = vec![0i64; n * (n - 1) / 2 + 1];
        for d in collect_dellac(n).unwrap() {
            coeffs[dellac_length(&d)] += 1;
        }
        assert_eq!(h_poly_dellac(n).unwrap(), IntPoly::from_i64s(&coeffs));
    }
}

#[test]
fn four_routes_to_tilde_h() {
    let f1 = expand(&NamedFraction::F1.spec(), 6).unwrap();
    let f2 = expand(&NamedFraction::F2.spec(), 6).unwrap();
    for n in 1..=6 {
        let hq = h_poly_fermionic(n).unwrap();
        let rev = poly_reverse(&hq, n * (n - 1) / 2).unwrap();
        assert_eq!(rev, tilde_h(n).unwrap());
        assert_eq!(f1.coeff(n), &rev);
        assert_eq!(f2.coeff(n), &rev);
        assert_eq!(hanzeng_barc(n + 1).unwrap(), rev);
        assert_eq!(h_poly_laurent(n).unwrap(), hq);
    }
}

#[test]
fn full_crosscheck_passes() {
    let r = crosscheck(8).unwrap();
    assert!(r.passed(), "{r}");
    assert!(r.checks.iter().all(|c| c.status == CheckStatus::Pass));
}

#[test]
fn dellac_rejects_out_of_band_columns() {
    assert!(DellacConfig::new(vec![(1, 4), (2, 3)]).is_err());
    assert!(DellacConfig::new(vec![(1, 2), (3, 4)]).is_ok());
}

fn positive_coeffs(len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(1i64..=9, len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn contractions_preserve_series(c in positive_coeffs(16)) {
        let polys: Vec<IntPoly> = c.iter().map(|&v| IntPoly::constant(v)).collect();
        let g: CoeffGen = Arc::new(move |k| polys.get(k).cloned().unwrap_or_default());
        let s = expand(&CFSpec::S { c: g.clone() }, 7).unwrap();
        prop_assert_eq!(&s, &expand(&contract_s_to_j(g.clone()), 7).unwrap());
        prop_assert_eq!(&s, &expand(&contract_s_to_j_affine(g), 7).unwrap());
    }

    #[test]
    fn q_binomial_symmetry_and_value(m in 0usize..14, k in 0usize..14) {
        prop_assume!(k <= m);
        let b = q_binomial(m, k).unwrap();
        prop_assert_eq!(&b, &q_binomial(m, m - k).unwrap());
        let expect: u64 = (0..k as u64).fold(1, |acc, i| acc * (m as u64 - i) / (i + 1));
        prop_assert_eq!(b.eval_at_one(), BigInt::from(expect));
    }

    #[test]
    fn h_poly_at_one_is_h(n in 1usize..=6) {
        prop_assert_eq!(h_poly_fermionic(n).unwrap().eval_at_one(), normalized_h(n).unwrap());
    }
}
