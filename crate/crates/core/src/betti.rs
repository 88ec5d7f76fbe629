//! Poincaré series of the central fibers, computed once from the cell
//! decomposition at torus fixed points and once from the infinite product.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::algebra::{LaurentPolynomial, TruncatedSeries};
use crate::diagrams::{for_each_fixed_point, DimensionVector, FramingVector};
use crate::error::{Error, Result};
use crate::geometry::attracting_dimensions;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiReport {
    pub lhs: TruncatedSeries,
    pub rhs: TruncatedSeries,
    pub equal: bool,
    pub mismatches: Vec<DimensionVector>,
}

fn check_shape(n: usize, w: &FramingVector, vmax: &DimensionVector) -> Result<()> {
    if n < 1 || w.0.len() != n || vmax.0.len() != n - 1 {
        return Err(Error::DimensionMismatch(format!("n = {n}, w = {w}, vmax = {vmax}")));
    }
    Ok(())
}

/// `Σ_Y t^{dim U_Y}` over fixed points with `column_counts = v`.
pub fn fixed_point_polynomial(n: usize, w: &FramingVector, v: &DimensionVector) -> Result<LaurentPolynomial> {
    let mut hist: Vec<u64> = Vec::new();
    let mut negative: HashMap<i64, u64> = HashMap::new();
    for_each_fixed_point(n, w, v, |t| {
        let u = attracting_dimensions(t).dim_u;
        if u >= 0 {
            let u = u as usize;
            if hist.len() <= u {
                hist.resize(u + 1, 0);
            }
            hist[u] += 1;
        } else {
            *negative.entry(u).or_default() += 1;
        }
    })?;
    let mut p = LaurentPolynomial::from_terms(hist.iter().enumerate().map(|(k, &c)| (k as i64, c)));
    for (u, c) in negative {
        p.add_term(u, c.into());
    }
    Ok(p)
}

pub fn poincare_from_fixed_points(n: usize, w: &FramingVector, vmax: &DimensionVector) -> Result<TruncatedSeries> {
    check_shape(n, w, vmax)?;
    fixed_point_series(n, w, vmax.0.clone(), vmax.below())
}

fn fixed_point_series(
    n: usize,
    w: &FramingVector,
    cutoff: Vec<u32>,
    vs: Vec<DimensionVector>,
) -> Result<TruncatedSeries> {
    let polys: Vec<LaurentPolynomial> =
        vs.par_iter().map(|v| fixed_point_polynomial(n, w, v)).collect::<Result<_>>()?;
    let mut s = TruncatedSeries::zero(cutoff);
    for (v, p) in vs.iter().zip(&polys) {
        s.add_term(v.as_slice(), p);
    }
    Ok(s)
}

/// The positive root `α_i + ⋯ + α_j` as a vector of length `n − 1`.
pub fn positive_root(n: usize, i: usize, j: usize) -> Vec<u32> {
    (1..n).map(|k| u32::from(i <= k && k <= j)).collect()
}

pub fn poincare_product(n: usize, w: &FramingVector, vmax: &DimensionVector) -> Result<TruncatedSeries> {
    check_shape(n, w, vmax)?;
    let cutoff = vmax.0.clone();
    let mut s = TruncatedSeries::one(cutoff.clone());
    for i in 1..n {
        for alpha in 1..=w.get(i) {
            for j in i..n {
                let partial: i64 = (i..=j).map(|k| i64::from(w.get(k))).sum();
                let g =
                    TruncatedSeries::geometric(cutoff.clone(), &positive_root(n, i, j), partial - i64::from(alpha))?;
                s = s.multiply(&g)?;
            }
        }
    }
    Ok(s)
}

/// Σ over multisets of positive roots of type `A_{n−1}` summing to `v`, each
/// root weighted by `t^{height − 1}`.
pub fn kostant_q_oracle(n: usize, v: &DimensionVector) -> Result<LaurentPolynomial> {
    if n < 1 || v.0.len() != n - 1 {
        return Err(Error::DimensionMismatch(format!("n = {n}, v = {v}")));
    }
    let roots: Vec<(Vec<u32>, i64)> = (1..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .map(|(i, j)| (positive_root(n, i, j), (j - i) as i64))
        .collect();
    let mut memo = HashMap::new();
    Ok(kostant_rec(&roots, v.0.clone(), 0, &mut memo))
}

fn kostant_rec(
    roots: &[(Vec<u32>, i64)],
    v: Vec<u32>,
    idx: usize,
    memo: &mut HashMap<(Vec<u32>, usize), LaurentPolynomial>,
) -> LaurentPolynomial {
    if v.iter().all(|&x| x == 0) {
        return LaurentPolynomial::one();
    }
    if idx == roots.len() {
        return LaurentPolynomial::zero();
    }
    if let Some(p) = memo.get(&(v.clone(), idx)) {
        return p.clone();
    }
    // either root idx is not used again, or take one more copy of it
    let mut out = kostant_rec(roots, v.clone(), idx + 1, memo);
    let (root, weight) = &roots[idx];
    if v.iter().zip(root).all(|(a, b)| a >= b) {
        let rest: Vec<u32> = v.iter().zip(root).map(|(a, b)| a - b).collect();
        out += &kostant_rec(roots, rest, idx, memo).shift(*weight);
    }
    memo.insert((v, idx), out.clone());
    out
}

fn compare(lhs: TruncatedSeries, rhs: TruncatedSeries, vs: &[DimensionVector]) -> BettiReport {
    let mismatches: Vec<DimensionVector> =
        vs.iter().filter(|v| lhs.coefficient(v.as_slice()) != rhs.coefficient(v.as_slice())).cloned().collect();
    BettiReport { equal: mismatches.is_empty(), lhs, rhs, mismatches }
}

pub fn verify_betti(n: usize, w: &FramingVector, vmax: &DimensionVector) -> Result<BettiReport> {
    let lhs = poincare_from_fixed_points(n, w, vmax)?;
    let rhs = poincare_product(n, w, vmax)?;
    Ok(compare(lhs, rhs, &vmax.below()))
}

/// [`verify_betti`] over all `v` with `|v| ≤ max_total`.
pub fn verify_betti_total(n: usize, w: &FramingVector, max_total: u32) -> Result<BettiReport> {
    let vmax = DimensionVector(vec![max_total; n.saturating_sub(1)]);
    check_shape(n, w, &vmax)?;
    let vs = DimensionVector::with_total_at_most(n - 1, max_total);
    let lhs = fixed_point_series(n, w, vmax.0.clone(), vs.clone())?;
    let rhs = poincare_product(n, w, &vmax)?.filter(|v| v.iter().sum::<u32>() <= max_total);
    Ok(compare(lhs, rhs, &vs))
}
