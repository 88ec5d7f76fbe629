//! Tangent characters at torus fixed points and the dimension counts built
//! from them: attracting cells, stratum dimensions, smallness of the
//! resolution and the unique fixed point with an empty repelling cell.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::diagrams::{for_each_fixed_point, DimensionVector, FixedPointTuple, FramingVector, LineIndex};
use crate::error::{Error, Result};

/// The weight `e_dst (e_src)^{-1} t^tpower`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TangentTerm {
    pub src: LineIndex,
    pub dst: LineIndex,
    pub tpower: i64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CharacterSum {
    terms: Vec<TangentTerm>,
}

impl CharacterSum {
    pub fn terms(&self) -> &[TangentTerm] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms grouped by `(src, dst)`, t-powers ascending.
    pub fn by_pair(&self) -> BTreeMap<(LineIndex, LineIndex), Vec<i64>> {
        let mut out: BTreeMap<_, Vec<i64>> = BTreeMap::new();
        for t in &self.terms {
            out.entry((t.src, t.dst)).or_default().push(t.tpower);
        }
        for powers in out.values_mut() {
            powers.sort_unstable();
        }
        out
    }

    /// `(#terms with src ≤ dst, #terms with src > dst)`.
    pub fn ordered_split(&self) -> (u64, u64) {
        let le = self.terms.iter().filter(|t| t.src <= t.dst).count() as u64;
        (le, self.terms.len() as u64 - le)
    }
}

/// `Σ_i v_i (w_i + w_{i+1})`.
pub fn dim_q(v: &DimensionVector, w: &FramingVector) -> u64 {
    (1..=v.0.len()).map(|i| u64::from(v.get(i)) * u64::from(w.get(i) + w.get(i + 1))).sum()
}

pub fn tangent_character(t: &FixedPointTuple) -> CharacterSum {
    let mut terms = Vec::new();
    for (src, ysrc) in t.lines_with_diagrams() {
        for (dst, ydst) in t.lines_with_diagrams() {
            for s in ysrc.cells() {
                if ydst.leg_length(s) == 0 {
                    terms.push(TangentTerm { src, dst, tpower: ysrc.arm_length(s) + 1 });
                }
            }
            for s in ydst.cells() {
                if ysrc.leg_length(s) == -1 {
                    terms.push(TangentTerm { src, dst, tpower: -ydst.arm_length(s) });
                }
            }
        }
    }
    CharacterSum { terms }
}

/// Rank of the `(src, dst)` summand of the tangent complex:
/// `dim V^dst_{j;i} + dim V^src_{i;j−1}`.
pub fn pair_rank(t: &FixedPointTuple, src: LineIndex, dst: LineIndex) -> u64 {
    u64::from(t.local_dim(dst, src.tier as i64)) + u64::from(t.local_dim(src, dst.tier as i64 - 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AttractingDims {
    pub dim_s: i64,
    pub dim_u: i64,
}

pub fn attracting_dimensions(t: &FixedPointTuple) -> AttractingDims {
    let v = t.column_counts();
    let w = t.framing();
    let mut dim_s = 0i64;
    let mut dim_u = 0i64;
    for i in 1..t.n() {
        dim_s += i64::from(v.get(i)) * i64::from(w.get(i + 1));
        dim_u += i64::from(v.get(i)) * i64::from(w.get(i));
    }
    for (l, d) in t.lines_with_diagrams() {
        let weighted = (l.line * d.num_rows()) as i64;
        dim_s += weighted;
        dim_u -= weighted;
    }
    AttractingDims { dim_s, dim_u }
}

/// Dimension of the stratum `Q_0^reg(v − v', w) × S^{v'}_Γ`.
pub fn stratum_dimension(
    v: &DimensionVector,
    v_prime: &DimensionVector,
    gamma: &[DimensionVector],
    w: &FramingVector,
) -> Result<u64> {
    if !v_prime.le(v) {
        return Err(Error::InvalidStratum(format!("{v_prime} is not below {v}")));
    }
    let mut sum = DimensionVector::zero(v.0.len());
    for g in gamma {
        if g.0.len() != v.0.len() || g.is_zero() {
            return Err(Error::InvalidStratum(format!("bad part {g} of the collection")));
        }
        for (s, x) in sum.0.iter_mut().zip(&g.0) {
            *s += x;
        }
    }
    if &sum != v_prime {
        return Err(Error::InvalidStratum(format!("parts sum to {sum}, expected {v_prime}")));
    }
    let rest = DimensionVector(v.0.iter().zip(&v_prime.0).map(|(a, b)| a - b).collect());
    Ok(dim_q(&rest, w) + gamma.len() as u64)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallnessRow {
    pub v: DimensionVector,
    pub dim_q: u64,
    pub fixed_points: usize,
    pub max_dim_u: i64,
    /// First fixed point (enumeration order) attaining `max_dim_u`.
    pub extremal: FixedPointTuple,
    pub holds: bool,
}

/// A stratum whose fibers are not small enough.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumViolation {
    pub v: DimensionVector,
    pub v_prime: DimensionVector,
    pub gamma: Vec<DimensionVector>,
    pub fiber_dim: u64,
    pub codim: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallnessReport {
    pub rows: Vec<SmallnessRow>,
    pub violations: Vec<DimensionVector>,
    pub stratum_violations: Vec<StratumViolation>,
    pub strata_checked: usize,
}

impl SmallnessReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.stratum_violations.is_empty()
    }

    /// The row with the least slack `dim Q/2 − 1 − max dim U`.
    pub fn tightest(&self) -> Option<&SmallnessRow> {
        self.rows.iter().min_by_key(|r| (r.dim_q as i64 - 2 - 2 * r.max_dim_u, r.v.clone()))
    }
}

/// Maximal `dim U` over the fixed points of `Q(v, w)` and the first tuple
/// attaining it, or `None` when there are no fixed points.
pub fn max_repelling(
    n: usize,
    w: &FramingVector,
    v: &DimensionVector,
) -> Result<Option<(i64, usize, FixedPointTuple)>> {
    let mut best: Option<(i64, FixedPointTuple)> = None;
    let mut count = 0usize;
    for_each_fixed_point(n, w, v, |t| {
        count += 1;
        let u = attracting_dimensions(t).dim_u;
        if best.as_ref().is_none_or(|(b, _)| u > *b) {
            best = Some((u, t.clone()));
        }
    })?;
    Ok(best.map(|(u, t)| (u, count, t)))
}

/// Checks `dim U ≤ dim Q / 2 − 1` at every fixed point with `0 ≠ v ≤ vmax`,
/// and that every stratum of `Q_0(v, w)` has fibers of dimension below half
/// its codimension.
pub fn verify_smallness(n: usize, w: &FramingVector, vmax: &DimensionVector) -> Result<SmallnessReport> {
    if !w.is_weakly_increasing() {
        return Err(Error::NonMonotoneFraming(w.0.clone()));
    }
    let vs: Vec<DimensionVector> = vmax.below().into_iter().filter(|v| !v.is_zero()).collect();
    smallness_over(n, w, &vs)
}

/// [`verify_smallness`] over an explicit list of nonzero dimension vectors.
pub fn smallness_over(n: usize, w: &FramingVector, vs: &[DimensionVector]) -> Result<SmallnessReport> {
    if !w.is_weakly_increasing() {
        return Err(Error::NonMonotoneFraming(w.0.clone()));
    }
    let maxima: Vec<Option<(i64, usize, FixedPointTuple)>> =
        vs.par_iter().map(|v| max_repelling(n, w, v)).collect::<Result<_>>()?;

    let mut rows = Vec::new();
    let mut violations = Vec::new();
    let mut central: BTreeMap<DimensionVector, Option<i64>> = BTreeMap::new();
    for (v, m) in vs.iter().zip(maxima) {
        let Some((max_u, count, extremal)) = m else {
            central.insert(v.clone(), None);
            continue;
        };
        central.insert(v.clone(), Some(max_u));
        let dq = dim_q(v, w);
        let holds = v.is_zero() || 2 * max_u <= dq as i64 - 2;
        if !holds {
            violations.push(v.clone());
        }
        rows.push(SmallnessRow { v: v.clone(), dim_q: dq, fixed_points: count, max_dim_u: max_u, extremal, holds });
    }

    // fiber over a point of the stratum (v', Γ) is ∏ O(v'_α, w)
    let mut stratum_violations = Vec::new();
    let mut strata_checked = 0usize;
    for v in vs {
        for v_prime in v.below().into_iter().filter(|u| !u.is_zero()) {
            for gamma in vector_partitions(&v_prime) {
                let mut fiber = 0i64;
                let mut nonempty = true;
                for g in &gamma {
                    let m = match central.get(g) {
                        Some(m) => *m,
                        None => max_repelling(n, w, g)?.map(|(u, _, _)| u),
                    };
                    match m {
                        Some(u) => fiber += u,
                        None => nonempty = false,
                    }
                }
                if !nonempty {
                    continue;
                }
                strata_checked += 1;
                let codim = dim_q(v, w) - stratum_dimension(v, &v_prime, &gamma, w)?;
                if 2 * fiber as u64 >= codim {
                    stratum_violations.push(StratumViolation {
                        v: v.clone(),
                        v_prime: v_prime.clone(),
                        gamma,
                        fiber_dim: fiber as u64,
                        codim,
                    });
                }
            }
        }
    }

    Ok(SmallnessReport { rows, violations, stratum_violations, strata_checked })
}

/// Multisets of nonzero vectors summing to `v`, each listed in weakly
/// decreasing lexicographic order.
pub fn vector_partitions(v: &DimensionVector) -> Vec<Vec<DimensionVector>> {
    fn go(
        rest: &DimensionVector,
        bound: Option<&DimensionVector>,
        cur: &mut Vec<DimensionVector>,
        out: &mut Vec<Vec<DimensionVector>>,
    ) {
        if rest.is_zero() {
            out.push(cur.clone());
            return;
        }
        for part in rest.below() {
            if part.is_zero() || bound.is_some_and(|b| &part > b) {
                continue;
            }
            let next = DimensionVector(rest.0.iter().zip(&part.0).map(|(a, b)| a - b).collect());
            cur.push(part.clone());
            go(&next, Some(&part), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(v, None, &mut Vec::new(), &mut out);
    out
}

/// The unique fixed point with `dim U = 0`, if `Q(v, w)` has any fixed point.
pub fn base_point(n: usize, w: &FramingVector, v: &DimensionVector) -> Result<Option<FixedPointTuple>> {
    let mut found: Vec<FixedPointTuple> = Vec::new();
    for_each_fixed_point(n, w, v, |t| {
        if attracting_dimensions(t).dim_u == 0 {
            found.push(t.clone());
        }
    })?;
    match found.len() {
        0 => Ok(None),
        1 => Ok(found.pop()),
        _ => Err(Error::MultipleBasePoints(v.0.clone())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::enumerate_fixed_points;

    fn fw(w: &[u32]) -> FramingVector {
        FramingVector(w.to_vec())
    }

    fn dv(v: &[u32]) -> DimensionVector {
        DimensionVector(v.to_vec())
    }

    fn line(tier: usize, line: usize) -> LineIndex {
        LineIndex { tier, line }
    }

    #[test]
    fn character_single_box() {
        let t = FixedPointTuple::parse(2, &fw(&[1, 1]), "1.1:[1]").unwrap();
        let ch = tangent_character(&t);
        let pairs = ch.by_pair();
        assert_eq!(pairs.len(), 2);
        assert_eq!(pairs[&(line(1, 1), line(1, 1))], vec![1]);
        assert_eq!(pairs[&(line(1, 1), line(2, 1))], vec![1]);
        assert_eq!(ch.len() as u64, dim_q(&dv(&[1]), &fw(&[1, 1])));
    }

    #[test]
    fn character_empty_and_column() {
        let t = FixedPointTuple::empty(3, &fw(&[1, 2, 1])).unwrap();
        assert!(tangent_character(&t).is_empty());

        let t = FixedPointTuple::parse(2, &fw(&[1, 1]), "1.1:[1,1]").unwrap();
        let pairs = tangent_character(&t).by_pair();
        assert_eq!(pairs[&(line(1, 1), line(1, 1))], vec![1, 2]);
        assert_eq!(pairs[&(line(1, 1), line(2, 1))], vec![1, 2]);
        assert_eq!(pairs.values().map(Vec::len).sum::<usize>(), 4);
    }

    #[test]
    fn attracting_examples() {
        for k in 0..5u32 {
            let t = &enumerate_fixed_points(2, &fw(&[1, 1]), &dv(&[k])).unwrap()[0];
            assert_eq!(attracting_dimensions(t), AttractingDims { dim_s: 2 * k as i64, dim_u: 0 });
        }
        let t = FixedPointTuple::parse(3, &fw(&[1, 1, 1]), "1.1:[2]").unwrap();
        assert_eq!(attracting_dimensions(&t), AttractingDims { dim_s: 3, dim_u: 1 });
        let t = FixedPointTuple::empty(3, &fw(&[1, 1, 1])).unwrap();
        assert_eq!(attracting_dimensions(&t), AttractingDims { dim_s: 0, dim_u: 0 });
    }

    #[test]
    fn tangent_identities_on_a_grid() {
        for w in [fw(&[1, 1, 1]), fw(&[2, 1, 0]), fw(&[0, 2, 2]), fw(&[1, 2, 1])] {
            for v in DimensionVector::with_total_at_most(2, 4) {
                for t in enumerate_fixed_points(3, &w, &v).unwrap() {
                    let ch = tangent_character(&t);
                    assert_eq!(ch.len() as u64, dim_q(&v, &w));
                    let pairs = ch.by_pair();
                    for src in t.lines() {
                        for dst in t.lines() {
                            let got = pairs.get(&(src, dst)).map_or(0, Vec::len) as u64;
                            assert_eq!(got, pair_rank(&t, src, dst), "{t} {src}->{dst}");
                            if src == dst {
                                assert!(pairs.get(&(src, dst)).is_none_or(|ps| ps.iter().all(|&p| p > 0)));
                            }
                        }
                    }
                    let a = attracting_dimensions(&t);
                    assert_eq!(ch.ordered_split(), (a.dim_s as u64, a.dim_u as u64));
                }
            }
        }
    }

    #[test]
    fn stratum_dimension_examples() {
        let w = fw(&[1, 1]);
        assert_eq!(stratum_dimension(&dv(&[2]), &dv(&[0]), &[], &w).unwrap(), 4);
        assert_eq!(stratum_dimension(&dv(&[2]), &dv(&[2]), &[dv(&[1]), dv(&[1])], &w).unwrap(), 2);
        assert_eq!(stratum_dimension(&dv(&[2]), &dv(&[1]), &[dv(&[1])], &w).unwrap(), 3);
        assert!(stratum_dimension(&dv(&[2]), &dv(&[1]), &[dv(&[2])], &w).is_err());
        assert!(stratum_dimension(&dv(&[2]), &dv(&[3]), &[dv(&[3])], &w).is_err());
        assert!(stratum_dimension(&dv(&[2]), &dv(&[1]), &[dv(&[1]), dv(&[0])], &w).is_err());
    }

    #[test]
    fn smallness_examples() {
        let r = verify_smallness(2, &fw(&[1, 1]), &dv(&[5])).unwrap();
        assert!(r.passed());
        assert!(r.rows.iter().all(|row| row.max_dim_u == 0));
        assert!(r.strata_checked > 0);

        let r = verify_smallness(3, &fw(&[1, 1, 1]), &dv(&[1, 1])).unwrap();
        assert!(r.passed());
        let row = r.rows.iter().find(|row| row.v == dv(&[1, 1])).unwrap();
        assert_eq!((row.max_dim_u, row.dim_q), (1, 4));
        assert_eq!(row.extremal.to_string(), "1.1:[2]");

        let r = verify_smallness(3, &fw(&[1, 1, 1]), &dv(&[0, 0])).unwrap();
        assert!(r.passed() && r.rows.is_empty());

        assert!(matches!(verify_smallness(2, &fw(&[2, 1]), &dv(&[1])), Err(Error::NonMonotoneFraming(_))));
    }

    #[test]
    fn base_points() {
        let b = base_point(3, &fw(&[1, 1, 1]), &dv(&[1, 1])).unwrap().unwrap();
        assert_eq!(b.to_string(), "1.1:[1];2.1:[1]");
        let b = base_point(2, &fw(&[1, 1]), &dv(&[3])).unwrap().unwrap();
        assert_eq!(b.to_string(), "1.1:[1,1,1]");
        let b = base_point(3, &fw(&[1, 1, 1]), &dv(&[0, 0])).unwrap().unwrap();
        assert_eq!(b.to_string(), "-");
        assert_eq!(base_point(2, &fw(&[0, 1]), &dv(&[1])).unwrap(), None);
    }

    #[test]
    fn vector_partition_counts() {
        // partitions of 3 and bipartite partitions of (1,1) and (2,1)
        assert_eq!(vector_partitions(&dv(&[3])).len(), 3);
        assert_eq!(vector_partitions(&dv(&[1, 1])).len(), 2);
        assert_eq!(vector_partitions(&dv(&[2, 1])).len(), 4);
        assert_eq!(vector_partitions(&dv(&[0, 0])), vec![Vec::<DimensionVector>::new()]);
    }
}
