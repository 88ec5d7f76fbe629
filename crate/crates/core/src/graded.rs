//! Graded fixed-point data: eigenvalue gradings of the vector spaces at a
//! fixed point, their ℓ-weights, ℓ-dominant strata and Gelfand-Tsetlin
//! characters of Verma modules.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::algebra::IntRootedRational;
use crate::diagrams::{for_each_fixed_point, DimensionVector, FixedPointTuple, FramingVector};
use crate::error::{Error, Result};
use crate::pyramid::Pyramid;

/// Integer zeros `m_i^1, …` of the polynomials `P_i(u)`, tier by tier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralData {
    zeros: Vec<Vec<i64>>,
    pyramid: Option<Pyramid>,
}

fn parse_tiers<T>(text: &str, mut value: impl FnMut(&str) -> Result<T>) -> Result<Vec<(usize, Vec<T>)>> {
    let mut out = Vec::new();
    for part in text.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let (tier, list) =
            part.split_once(':').ok_or_else(|| Error::Parse(format!("expected tier:values in {part:?}")))?;
        let tier: usize = tier.trim().parse().map_err(|_| Error::Parse(format!("bad tier {tier:?}")))?;
        let vals =
            list.split(',').map(str::trim).filter(|s| !s.is_empty()).map(&mut value).collect::<Result<Vec<T>>>()?;
        out.push((tier, vals));
    }
    Ok(out)
}

fn collect_tiers<T: Clone>(n: usize, parsed: Vec<(usize, Vec<T>)>) -> Result<Vec<Vec<T>>> {
    let mut zeros = vec![Vec::new(); n];
    let mut seen = BTreeSet::new();
    for (tier, vals) in parsed {
        if tier == 0 || tier > n {
            return Err(Error::InvalidSpectralData(format!("tier {tier} outside 1..={n}")));
        }
        if !seen.insert(tier) {
            return Err(Error::InvalidSpectralData(format!("tier {tier} listed twice")));
        }
        zeros[tier - 1] = vals;
    }
    Ok(zeros)
}

impl SpectralData {
    /// Zeros with arbitrary per-tier counts; the framing is read off the counts.
    pub fn new(zeros: Vec<Vec<i64>>) -> Result<Self> {
        if zeros.is_empty() {
            return Err(Error::InvalidSpectralData("no tiers".into()));
        }
        Ok(Self { zeros, pyramid: None })
    }

    pub fn for_pyramid(pyramid: &Pyramid, zeros: Vec<Vec<i64>>) -> Result<Self> {
        let rows = pyramid.rows();
        if zeros.len() != rows.len() {
            return Err(Error::InvalidSpectralData(format!(
                "{} tiers of zeros for a pyramid of height {}",
                zeros.len(),
                rows.len()
            )));
        }
        for (i, (z, &p)) in zeros.iter().zip(rows).enumerate() {
            if z.len() != p as usize {
                return Err(Error::InvalidSpectralData(format!(
                    "tier {} has {} zeros, row length is {p}",
                    i + 1,
                    z.len()
                )));
            }
        }
        Ok(Self { zeros, pyramid: Some(pyramid.clone()) })
    }

    /// Parses `"1:2;2:0"` (semicolon-separated `tier:comma-list`).
    pub fn parse(pyramid: &Pyramid, text: &str) -> Result<Self> {
        let parsed =
            parse_tiers(text, |s| s.parse::<i64>().map_err(|_| Error::Parse(format!("bad integer zero {s:?}"))))?;
        Self::for_pyramid(pyramid, collect_tiers(pyramid.height(), parsed)?)
    }

    pub fn n(&self) -> usize {
        self.zeros.len()
    }

    pub fn zeros(&self) -> &[Vec<i64>] {
        &self.zeros
    }

    /// 1-based tier.
    pub fn tier(&self, i: usize) -> &[i64] {
        &self.zeros[i - 1]
    }

    pub fn pyramid(&self) -> Option<&Pyramid> {
        self.pyramid.as_ref()
    }

    pub fn framing(&self) -> FramingVector {
        FramingVector(self.zeros.iter().map(|z| z.len() as u32).collect())
    }

    /// `P_i(u) = ∏_α (u − m_i^α)`.
    pub fn drinfeld_polynomials(&self) -> Vec<IntRootedRational> {
        self.zeros.iter().map(IntRootedRational::from_roots).collect()
    }

    /// `∏_i P_i(u)`, the value of the central generator `Z_N(u)`.
    pub fn central_character(&self) -> IntRootedRational {
        self.drinfeld_polynomials().into_iter().fold(IntRootedRational::one(), |a, b| a * b)
    }

    /// The ℓ-weight of the highest weight vector, i.e. `(P_1, …, P_n)`.
    pub fn highest_weight(&self) -> EllWeight {
        EllWeight { tiers: self.drinfeld_polynomials() }
    }
}

impl fmt::Display for SpectralData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .zeros
            .iter()
            .enumerate()
            .filter(|(_, z)| !z.is_empty())
            .map(|(i, z)| {
                let vals: Vec<String> = z.iter().map(i64::to_string).collect();
                format!("{}:{}", i + 1, vals.join(","))
            })
            .collect();
        f.write_str(&parts.join(";"))
    }
}

/// Spectral data with rational zeros, before reduction to integer cosets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSpectralData {
    pub zeros: Vec<Vec<BigRational>>,
}

impl RationalSpectralData {
    /// Parses `"1:1/2;2:5/2"` for a given number of tiers.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let parsed = parse_tiers(text, |s| {
            s.parse::<BigRational>().map_err(|_| Error::Parse(format!("bad rational zero {s:?}")))
        })?;
        Ok(Self { zeros: collect_tiers(n, parsed)? })
    }
}

/// One class of zeros with pairwise integral differences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetClass {
    /// Common fractional part, in `[0, 1)`.
    pub shift: BigRational,
    pub data: SpectralData,
}

/// Partitions rational zeros into `ℤ`-cosets and shifts each coset to
/// integers. Classes are ordered by shift.
pub fn split_by_coset(s: &RationalSpectralData) -> Result<Vec<CosetClass>> {
    let n = s.zeros.len();
    let mut classes: BTreeMap<BigRational, Vec<Vec<i64>>> = BTreeMap::new();
    for (i, tier) in s.zeros.iter().enumerate() {
        for z in tier {
            let shift = z - z.floor();
            let m = (z - &shift)
                .to_integer()
                .to_i64()
                .ok_or_else(|| Error::InvalidSpectralData(format!("zero {z} out of range")))?;
            classes.entry(shift).or_insert_with(|| vec![Vec::new(); n])[i].push(m);
        }
    }
    if classes.is_empty() {
        classes.insert(BigRational::from_integer(BigInt::from(0)), vec![Vec::new(); n]);
    }
    classes.into_iter().map(|(shift, zeros)| Ok(CosetClass { shift, data: SpectralData::new(zeros)? })).collect()
}

/// Dimensions of the eigenspaces `V_i(m)` and `W_i(m)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GradedDimVector {
    pub n: usize,
    pub vdims: BTreeMap<(usize, i64), u32>,
    pub wdims: BTreeMap<(usize, i64), u32>,
}

impl GradedDimVector {
    pub fn v(&self, i: usize, m: i64) -> u32 {
        self.vdims.get(&(i, m)).copied().unwrap_or(0)
    }

    pub fn w(&self, i: usize, m: i64) -> u32 {
        self.wdims.get(&(i, m)).copied().unwrap_or(0)
    }

    pub fn underlying(&self) -> DimensionVector {
        let mut v = vec![0u32; self.n.saturating_sub(1)];
        for (&(i, _), &d) in &self.vdims {
            v[i - 1] += d;
        }
        DimensionVector(v)
    }

    pub fn is_v_zero(&self) -> bool {
        self.vdims.is_empty()
    }
}

/// `V_1(2)=1 V_1(1)=1`; an empty grading prints as `0`.
impl fmt::Display for GradedDimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.vdims.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.vdims.iter().map(|((i, m), d)| format!("V_{i}({m})={d}")).collect();
        f.write_str(&parts.join(" "))
    }
}

fn bump(map: &mut BTreeMap<(usize, i64), u32>, key: (usize, i64)) {
    *map.entry(key).or_default() += 1;
}

pub fn graded_dimensions(t: &FixedPointTuple, s: &SpectralData) -> Result<GradedDimVector> {
    if t.n() != s.n() || t.framing() != &s.framing() {
        return Err(Error::DimensionMismatch(format!(
            "fixed point has framing {}, spectral data has {}",
            t.framing(),
            s.framing()
        )));
    }
    let mut g = GradedDimVector { n: s.n(), ..Default::default() };
    for (i, tier) in s.zeros.iter().enumerate() {
        for &m in tier {
            bump(&mut g.wdims, (i + 1, m));
        }
    }
    for (l, y) in t.lines_with_diagrams() {
        let m = s.tier(l.tier)[l.line - 1];
        for c in y.cells() {
            bump(&mut g.vdims, (c.x as usize, m - (c.y - 1)));
        }
    }
    Ok(g)
}

/// The graded pieces renamed as `V'_j(k)` and `W'_j(k)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct PrimedGrading {
    pub vprime: BTreeMap<(i64, i64), u32>,
    pub wprime: BTreeMap<(i64, i64), u32>,
}

pub fn regrade(g: &GradedDimVector) -> PrimedGrading {
    let mut p = PrimedGrading::default();
    for (&(i, m), &d) in &g.vdims {
        let i = i as i64;
        p.vprime.insert((i + m, m - i), d);
    }
    for (&(i, m), &d) in &g.wdims {
        let i = i as i64;
        p.wprime.insert((i + m, m - i + 1), d);
    }
    p
}

/// Inverse of [`regrade`]; rejects pieces of the wrong parity.
pub fn unregrade(p: &PrimedGrading, n: usize) -> Result<GradedDimVector> {
    let mut g = GradedDimVector { n, ..Default::default() };
    for (&(j, k), &d) in &p.vprime {
        if (j - k).is_odd() || j - k <= 0 {
            return Err(Error::InvalidStratum(format!("V'_{j}({k}) has the wrong parity")));
        }
        g.vdims.insert((((j - k) / 2) as usize, (j + k) / 2), d);
    }
    for (&(j, k), &d) in &p.wprime {
        if (j - k).is_even() || j - k < 0 {
            return Err(Error::InvalidStratum(format!("W'_{j}({k}) has the wrong parity")));
        }
        g.wdims.insert((((j - k + 1) / 2) as usize, (j + k - 1) / 2), d);
    }
    Ok(g)
}

/// Eigenvalues `P_i(u) Q_i(u)`, one rational function per tier.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EllWeight {
    pub tiers: Vec<IntRootedRational>,
}

impl EllWeight {
    pub fn degrees(&self) -> Vec<i64> {
        self.tiers.iter().map(IntRootedRational::degree).collect()
    }

    /// `∏_i (P_i Q_i)`.
    pub fn product(&self) -> IntRootedRational {
        self.tiers.iter().fold(IntRootedRational::one(), |a, b| &a * b)
    }
}

/// `[(u)^1 | (u-2)^1]`
impl fmt::Display for EllWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.tiers.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(" | "))
    }
}

pub fn ell_weight(g: &GradedDimVector) -> EllWeight {
    let n = g.n;
    let v = |i: usize, m: i64| -> i64 {
        if i == 0 || i >= n {
            0
        } else {
            i64::from(g.v(i, m))
        }
    };
    let mut tiers = Vec::with_capacity(n);
    for i in 1..=n {
        let mut support: BTreeSet<i64> = g.wdims.keys().filter(|(k, _)| *k == i).map(|&(_, m)| m).collect();
        for &(k, m) in g.vdims.keys() {
            if k == i || k + 1 == i {
                support.insert(m);
                support.insert(m - 1);
            }
        }
        let mut r = IntRootedRational::one();
        for m in support {
            let e = i64::from(g.w(i, m)) + v(i, m + 1) - v(i, m) - v(i - 1, m + 1) + v(i - 1, m);
            r.add_exponent(m, e);
        }
        tiers.push(r);
    }
    EllWeight { tiers }
}

pub fn is_ell_dominant(e: &EllWeight) -> bool {
    e.tiers.iter().all(IntRootedRational::is_polynomial)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stratum {
    pub graded: GradedDimVector,
    pub weight: EllWeight,
}

fn check_cutoff(s: &SpectralData, vmax: &DimensionVector) -> Result<()> {
    if vmax.0.len() + 1 != s.n() {
        return Err(Error::DimensionMismatch(format!("cutoff {vmax} for {} tiers", s.n())));
    }
    Ok(())
}

/// Graded dimension vectors of all fixed points with `v ≤ vmax`, one list
/// per `v`, in enumeration order.
fn graded_grid(s: &SpectralData, vmax: &DimensionVector) -> Result<Vec<Vec<GradedDimVector>>> {
    check_cutoff(s, vmax)?;
    let w = s.framing();
    let n = s.n();
    vmax.below()
        .par_iter()
        .map(|v| {
            let mut out = Vec::new();
            let mut err = None;
            for_each_fixed_point(n, &w, v, |t| match graded_dimensions(t, s) {
                Ok(g) => out.push(g),
                Err(e) => err = Some(e),
            })?;
            err.map_or(Ok(out), Err)
        })
        .collect()
}

/// ℓ-dominant graded dimension vectors realized by fixed points with
/// `v ≤ vmax`, sorted.
pub fn strata(s: &SpectralData, vmax: &DimensionVector) -> Result<Vec<Stratum>> {
    let found: BTreeSet<GradedDimVector> = graded_grid(s, vmax)?.into_iter().flatten().collect();
    Ok(found
        .into_iter()
        .filter_map(|graded| {
            let weight = ell_weight(&graded);
            is_ell_dominant(&weight).then_some(Stratum { graded, weight })
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterEntry {
    pub multiplicity: u64,
    pub graded_dims: Vec<GradedDimVector>,
}

/// Number of fixed points carrying each ℓ-weight, over `v ≤ vmax`.
pub fn gt_character(s: &SpectralData, vmax: &DimensionVector) -> Result<BTreeMap<EllWeight, CharacterEntry>> {
    let mut out: BTreeMap<EllWeight, CharacterEntry> = BTreeMap::new();
    for g in graded_grid(s, vmax)?.into_iter().flatten() {
        let entry =
            out.entry(ell_weight(&g)).or_insert_with(|| CharacterEntry { multiplicity: 0, graded_dims: Vec::new() });
        entry.multiplicity += 1;
        if !entry.graded_dims.contains(&g) {
            entry.graded_dims.push(g);
        }
    }
    for e in out.values_mut() {
        e.graded_dims.sort();
    }
    Ok(out)
}

/// Total character mass per underlying dimension vector.
pub fn character_mass(ch: &BTreeMap<EllWeight, CharacterEntry>) -> BTreeMap<DimensionVector, u64> {
    let mut out = BTreeMap::new();
    for e in ch.values() {
        let v = e.graded_dims[0].underlying();
        *out.entry(v).or_default() += e.multiplicity;
    }
    out
}
