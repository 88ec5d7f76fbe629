use std::collections::BTreeMap;

use handsaw::betti::{fixed_point_polynomial, poincare_product};
use handsaw::diagrams::{enumerate_fixed_points, DimensionVector, FixedPointTuple, FramingVector};
use handsaw::geometry::{attracting_dimensions, base_point, dim_q, tangent_character};
use handsaw::graded::{character_mass, ell_weight, graded_dimensions, gt_character, regrade, unregrade, SpectralData};
use handsaw::kl::{decomposition_matrix, weights_from_drinfeld, KLCache};
use handsaw::{Pyramid, TruncatedSeries};
use proptest::prelude::*;

fn spectral(rows: &[u32], zeros: Vec<Vec<i64>>) -> SpectralData {
    SpectralData::for_pyramid(&Pyramid::from_row_lengths(rows).unwrap(), zeros).unwrap()
}

fn at_one(s: &TruncatedSeries, v: &DimensionVector) -> u64 {
    u64::try_from(s.coefficient(v.as_slice()).eval_at_one()).unwrap()
}

#[test]
fn euler_count_matches_product_at_one() {
    for w in [[1u32, 1, 1], [0, 1, 2], [2, 1, 1], [1, 2, 2]] {
        let w = FramingVector(w.to_vec());
        let vmax = DimensionVector(vec![3, 3]);
        let product = poincare_product(3, &w, &vmax).unwrap();
        for v in vmax.below() {
            let count = enumerate_fixed_points(3, &w, &v).unwrap().len() as u64;
            assert_eq!(count, at_one(&product, &v), "w = {w}, v = {v}");
            let poly = fixed_point_polynomial(3, &w, &v).unwrap();
            assert_eq!(u64::try_from(poly.eval_at_one()).unwrap(), count);
        }
    }
}

fn spectral_cases() -> Vec<SpectralData> {
    vec![
        spectral(&[1, 1], vec![vec![2], vec![0]]),
        spectral(&[1, 1], vec![vec![0], vec![3]]),
        spectral(&[1, 2], vec![vec![1], vec![0, 2]]),
        spectral(&[1, 2], vec![vec![0], vec![0, 0]]),
        spectral(&[1, 1, 1], vec![vec![2], vec![1], vec![0]]),
        spectral(&[1, 1, 1], vec![vec![0], vec![0], vec![0]]),
        spectral(&[1, 1, 2], vec![vec![1], vec![2], vec![0, 3]]),
        spectral(&[1, 2, 2], vec![vec![2], vec![0, 1], vec![1, -1]]),
        spectral(&[2, 2], vec![vec![1, 0], vec![0, 2]]),
    ]
}

#[test]
fn character_mass_equals_fixed_point_count() {
    for s in spectral_cases() {
        let vmax = DimensionVector(vec![3; s.n() - 1]);
        let ch = gt_character(&s, &vmax).unwrap();
        let mass = character_mass(&ch);
        let product = poincare_product(s.n(), &s.framing(), &vmax).unwrap();
        for v in vmax.below() {
            assert_eq!(mass.get(&v).copied().unwrap_or(0), at_one(&product, &v), "{s} at {v}");
        }
        for (e, entry) in &ch {
            assert_eq!(entry.graded_dims.len(), 1, "weight {e} has several gradings");
            assert_eq!(e.product(), s.central_character());
            let p: Vec<i64> = s.zeros().iter().map(|z| z.len() as i64).collect();
            assert_eq!(e.degrees(), p);
        }
    }
}

#[test]
fn strata_have_positive_multiplicity() {
    let mut cache = KLCache::new();
    for s in spectral_cases() {
        let vmax = DimensionVector(vec![3; s.n() - 1]);
        let m = decomposition_matrix(&s, &vmax, &mut cache).unwrap();
        assert!(m[0].0.graded.is_v_zero());
        assert_eq!(m[0].1, 1);
        for (st, k) in &m {
            assert!(*k >= 1, "{s}: stratum {} has multiplicity {k}", st.graded);
        }
    }
}

#[test]
fn within_tier_order_is_irrelevant() {
    let mut cache = KLCache::new();
    let a = spectral(&[1, 2, 2], vec![vec![2], vec![0, 1], vec![1, -1]]);
    let b = spectral(&[1, 2, 2], vec![vec![2], vec![1, 0], vec![-1, 1]]);
    assert_eq!(weights_from_drinfeld(&a).0, weights_from_drinfeld(&b).0);
    let vmax = DimensionVector(vec![2, 3]);
    let counts = |s: &SpectralData| -> BTreeMap<_, _> {
        gt_character(s, &vmax).unwrap().into_iter().map(|(e, entry)| (e, entry.multiplicity)).collect()
    };
    assert_eq!(counts(&a), counts(&b));
    let matrix = |s: &SpectralData, c: &mut KLCache| -> Vec<_> {
        decomposition_matrix(s, &vmax, c).unwrap().into_iter().map(|(st, k)| (st.weight, k)).collect()
    };
    assert_eq!(matrix(&a, &mut cache), matrix(&b, &mut cache));
}

#[test]
fn base_point_is_unique_for_any_framing() {
    for w in [[2u32, 0, 1], [1, 1, 1], [0, 2, 1], [2, 2, 0]] {
        let w = FramingVector(w.to_vec());
        for v in DimensionVector(vec![3, 3]).below() {
            let fixed = enumerate_fixed_points(3, &w, &v).unwrap();
            let zeros = fixed.iter().filter(|t| attracting_dimensions(t).dim_u == 0).count();
            assert_eq!(zeros, usize::from(!fixed.is_empty()), "w = {w}, v = {v}");
            assert_eq!(base_point(3, &w, &v).unwrap().is_some(), !fixed.is_empty());
        }
    }
}

fn framing() -> impl Strategy<Value = (usize, Vec<u32>)> {
    (2usize..=4).prop_flat_map(|n| (Just(n), prop::collection::vec(0u32..=2, n)))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 40, ..ProptestConfig::default() })]

    #[test]
    fn tangent_dimension_and_split((n, w) in framing(), total in 0u32..=4, pick in any::<prop::sample::Index>()) {
        let w = FramingVector(w);
        let vs = DimensionVector::with_total_at_most(n - 1, total);
        let v = &vs[pick.index(vs.len())];
        for t in enumerate_fixed_points(n, &w, v).unwrap() {
            let ch = tangent_character(&t);
            prop_assert_eq!(ch.len() as u64, dim_q(v, &w));
            let a = attracting_dimensions(&t);
            prop_assert_eq!(a.dim_s + a.dim_u, dim_q(v, &w) as i64);
            prop_assert_eq!(ch.ordered_split(), (a.dim_s as u64, a.dim_u as u64));
            prop_assert_eq!(&t.column_counts(), v);
            let again = FixedPointTuple::parse(n, &w, &t.to_string()).unwrap();
            prop_assert_eq!(again, t);
        }
    }

    #[test]
    fn regrade_round_trips(z1 in -3i64..=3, z2 in -3i64..=3, k in 0u32..=4) {
        let s = spectral(&[1, 1], vec![vec![z1], vec![z2]]);
        for t in enumerate_fixed_points(2, &s.framing(), &DimensionVector(vec![k])).unwrap() {
            let g = graded_dimensions(&t, &s).unwrap();
            let p = regrade(&g);
            for &(j, kk) in p.vprime.keys() {
                prop_assert!((j - kk) % 2 == 0);
            }
            for &(j, kk) in p.wprime.keys() {
                prop_assert!((j - kk).rem_euclid(2) == 1);
            }
            prop_assert_eq!(unregrade(&p, 2).unwrap(), g.clone());
            let e = ell_weight(&g);
            prop_assert_eq!(e.product(), s.central_character());
        }
    }
}
