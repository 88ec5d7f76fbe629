//! Kazhdan-Lusztig polynomials of symmetric groups and composition
//! multiplicities of Verma modules.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use num_traits::ToPrimitive;

use crate::algebra::{IntRootedRational, LaurentPolynomial};
use crate::diagrams::DimensionVector;
use crate::error::{Error, Result};
use crate::graded::{strata, EllWeight, SpectralData, Stratum};

/// Largest `N` the packed permutation keys can hold.
pub const MAX_RANK: usize = 16;
pub const DEFAULT_KL_BOUND: usize = 8;

/// A permutation of `1..=N` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        if n > MAX_RANK {
            return Err(Error::InvalidPermutation(format!("rank {n} exceeds {MAX_RANK}")));
        }
        let mut seen = vec![false; n + 1];
        for &a in &one_line {
            if a == 0 || a > n || seen[a] {
                return Err(Error::InvalidPermutation(format!("{one_line:?} is not a permutation")));
            }
            seen[a] = true;
        }
        Ok(Self(one_line.into_iter().map(|a| a as u8).collect()))
    }

    pub fn identity(n: usize) -> Self {
        Self((1..=n as u8).collect())
    }

    /// Parses `"3412"` or `"3,4,1,2"`.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let entries: Vec<usize> = if text.contains(',') {
            text.split(',')
                .map(|s| s.trim().parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::Parse(format!("bad permutation {text:?}")))?
        } else {
            text.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<_>>()
                .ok_or_else(|| Error::Parse(format!("bad permutation {text:?}")))?
        };
        Self::new(entries)
    }

    /// All permutations of `1..=n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut cur: Vec<u8> = (1..=n as u8).collect();
        let mut out = vec![Self(cur.clone())];
        loop {
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
                return out;
            };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
            out.push(Self(cur.clone()));
        }
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.0.iter().map(|&a| a as usize).collect()
    }

    /// `w(b)` for 1-based `b`.
    pub fn apply(&self, b: usize) -> usize {
        self.0[b - 1] as usize
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        inversions(&self.0)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.0.len()];
        for (b, &a) in self.0.iter().enumerate() {
            inv[a as usize - 1] = b as u8 + 1;
        }
        Self(inv)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.rank() != other.rank() {
            return Err(Error::SizeMismatch(self.rank(), other.rank()));
        }
        Ok(Self(other.0.iter().map(|&b| self.0[b as usize - 1]).collect()))
    }

    /// `s_a w`: swaps the values `a` and `a + 1`.
    pub fn left_simple(&self, a: usize) -> Self {
        Self(left_simple(&self.0, a as u8))
    }

    /// `w s_j`: swaps the entries in positions `j` and `j + 1`.
    pub fn right_simple(&self, j: usize) -> Self {
        let mut v = self.0.clone();
        v.swap(j - 1, j);
        Self(v)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() <= 9 {
            for a in &self.0 {
                write!(f, "{a}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(u8::to_string).collect();
            f.write_str(&parts.join(","))
        }
    }
}

fn inversions(p: &[u8]) -> usize {
    let mut count = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                count += 1;
            }
        }
    }
    count
}

fn left_simple(p: &[u8], a: u8) -> Vec<u8> {
    p.iter()
        .map(|&v| {
            if v == a {
                a + 1
            } else if v == a + 1 {
                a
            } else {
                v
            }
        })
        .collect()
}

fn key(p: &[u8]) -> u64 {
    p.iter().fold(0u64, |k, &a| (k << 4) | u64::from(a - 1))
}

fn unkey(mut k: u64, n: usize) -> Vec<u8> {
    let mut p = vec![0u8; n];
    for slot in p.iter_mut().rev() {
        *slot = (k & 0xf) as u8 + 1;
        k >>= 4;
    }
    p
}

fn le_raw(x: &[u8], w: &[u8]) -> bool {
    let n = x.len();
    let mut xs: Vec<u8> = Vec::with_capacity(n);
    let mut ws: Vec<u8> = Vec::with_capacity(n);
    for k in 0..n {
        let pos_x = xs.partition_point(|&a| a < x[k]);
        xs.insert(pos_x, x[k]);
        let pos_w = ws.partition_point(|&a| a < w[k]);
        ws.insert(pos_w, w[k]);
        if xs.iter().zip(&ws).any(|(a, b)| a > b) {
            return false;
        }
    }
    true
}

/// Bruhat order via the sorted-prefix criterion.
pub fn bruhat_le(x: &Permutation, w: &Permutation) -> Result<bool> {
    if x.rank() != w.rank() {
        return Err(Error::SizeMismatch(x.rank(), w.rank()));
    }
    Ok(le_raw(&x.0, &w.0))
}

/// Dense polynomial in `q`, lowest degree first.
type Poly = Vec<i64>;

fn trim(mut p: Poly) -> Poly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn add_shifted(acc: &mut Poly, p: &[i64], shift: usize, scale: i64) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (k, &c) in p.iter().enumerate() {
        acc[k + shift] += scale * c;
    }
}

fn to_laurent(p: &[i64]) -> LaurentPolynomial {
    LaurentPolynomial::from_terms(p.iter().enumerate().map(|(k, &c)| (k as i64, c)))
}

/// Elements `z` with their `μ(z, v)`, one list per `v`.
type MuList = Arc<Vec<(Vec<u8>, i64)>>;

/// Memo table for `P_{x,w}` and the `μ`-lists used by the recursion.
/// Not shared between threads; each worker owns its own cache.
#[derive(Debug)]
pub struct KLCache {
    bound: usize,
    memo: HashMap<(u64, u64), Poly>,
    mu: HashMap<u64, MuList>,
}

impl Default for KLCache {
    fn default() -> Self {
        Self::new()
    }
}

impl KLCache {
    pub fn new() -> Self {
        Self::with_bound(DEFAULT_KL_BOUND)
    }

    pub fn with_bound(bound: usize) -> Self {
        Self { bound: bound.min(MAX_RANK), memo: HashMap::new(), mu: HashMap::new() }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    pub fn polynomial(&mut self, x: &Permutation, w: &Permutation) -> Result<LaurentPolynomial> {
        if x.rank() != w.rank() {
            return Err(Error::SizeMismatch(x.rank(), w.rank()));
        }
        if x.rank() > self.bound {
            return Err(Error::InvalidPermutation(format!(
                "rank {} exceeds the configured bound {}",
                x.rank(),
                self.bound
            )));
        }
        Ok(to_laurent(&self.p(&x.0, &w.0)))
    }

    fn p(&mut self, x: &[u8], w: &[u8]) -> Poly {
        if x == w {
            return vec![1];
        }
        if !le_raw(x, w) {
            return Vec::new();
        }
        let k = (key(x), key(w));
        if let Some(p) = self.memo.get(&k) {
            return p.clone();
        }
        let res = self.compute(x, w);
        self.memo.insert(k, res.clone());
        res
    }

    fn compute(&mut self, x: &[u8], w: &[u8]) -> Poly {
        let pos = |p: &[u8], a: u8| p.iter().position(|&v| v == a).unwrap();
        // left descent s = s_a of w: a + 1 stands before a
        let a = (1..w.len() as u8).find(|&a| pos(w, a + 1) < pos(w, a)).unwrap();
        let sx = left_simple(x, a);
        if pos(x, a) < pos(x, a + 1) {
            return self.p(&sx, w);
        }
        let v = left_simple(w, a);
        let mut out = self.p(&sx, &v);
        add_shifted(&mut out, &self.p(x, &v), 1, 1);
        let lw = inversions(w);
        let mus = self.mu_list(&v);
        for (z, m) in mus.iter() {
            if pos(z, a + 1) < pos(z, a) && le_raw(x, z) {
                let shift = (lw - inversions(z)) / 2;
                let pz = self.p(x, z);
                add_shifted(&mut out, &pz, shift, -m);
            }
        }
        trim(out)
    }

    /// `z < v` with nonzero `μ(z, v)`.
    fn mu_list(&mut self, v: &[u8]) -> MuList {
        let kv = key(v);
        if let Some(l) = self.mu.get(&kv) {
            return l.clone();
        }
        let lv = inversions(v);
        let mut below: Vec<Vec<u8>> = lower_interval(v)
            .into_iter()
            .filter(|z| {
                let lz = inversions(z);
                lz < lv && (lv - lz) % 2 == 1
            })
            .collect();
        below.sort();
        let mut out = Vec::new();
        for z in below {
            let d = (lv - inversions(&z) - 1) / 2;
            let c = self.p(&z, v).get(d).copied().unwrap_or(0);
            if c != 0 {
                out.push((z, c));
            }
        }
        let out = Arc::new(out);
        self.mu.insert(kv, out.clone());
        out
    }
}

/// All `z ≤ v`, reached by length-decreasing transpositions.
fn lower_interval(v: &[u8]) -> Vec<Vec<u8>> {
    let n = v.len();
    let mut seen: HashSet<u64> = HashSet::from([key(v)]);
    let mut queue = VecDeque::from([v.to_vec()]);
    while let Some(z) = queue.pop_front() {
        for i in 0..n {
            for j in i + 1..n {
                if z[i] > z[j] {
                    let mut y = z.clone();
                    y.swap(i, j);
                    if seen.insert(key(&y)) {
                        queue.push_back(y);
                    }
                }
            }
        }
    }
    seen.into_iter().map(|k| unkey(k, n)).collect()
}

pub fn kl_polynomial(x: &Permutation, w: &Permutation, cache: &mut KLCache) -> Result<LaurentPolynomial> {
    cache.polynomial(x, w)
}

/// An integral weight of `gl_N`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntegerWeight(pub Vec<i64>);

impl IntegerWeight {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|p| p[0] >= p[1])
    }

    /// Weakly decreasing rearrangement.
    pub fn dominant(&self) -> IntegerWeight {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        IntegerWeight(v)
    }

    /// Simple reflections `s_a` with equal entries in positions `a`, `a + 1`.
    pub fn stabilizer_reflections(&self) -> Vec<usize> {
        (1..self.0.len()).filter(|&a| self.0[a - 1] == self.0[a]).collect()
    }

    /// `(wκ)_a = κ_{w⁻¹(a)}`.
    pub fn act(&self, w: &Permutation) -> Result<IntegerWeight> {
        if w.rank() != self.len() {
            return Err(Error::SizeMismatch(w.rank(), self.len()));
        }
        let inv = w.inverse();
        Ok(IntegerWeight((1..=self.len()).map(|a| self.0[inv.apply(a) - 1]).collect()))
    }

    /// A permutation `w` with `self = w · dominant`, matching equal entries
    /// in order. `None` if `self` is not a rearrangement of `dominant`.
    pub fn witness(&self, dominant: &IntegerWeight) -> Option<Permutation> {
        if self.len() != dominant.len() {
            return None;
        }
        let mut used = vec![false; self.len()];
        let mut w = vec![0usize; self.len()];
        for (a, val) in self.0.iter().enumerate() {
            let b = (0..dominant.len()).find(|&b| !used[b] && dominant.0[b] == *val)?;
            used[b] = true;
            w[b] = a + 1;
        }
        Permutation::new(w).ok()
    }
}

impl fmt::Display for IntegerWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Maximal-length element of `S_λ w S_μ`, where the parabolic subgroups are
/// generated by the simple reflections fixing `λ` and `μ`.
pub fn longest_double_coset_rep(w: &Permutation, lambda: &IntegerWeight, mu: &IntegerWeight) -> Result<Permutation> {
    if lambda.len() != w.rank() || mu.len() != w.rank() {
        return Err(Error::SizeMismatch(w.rank(), lambda.len().max(mu.len())));
    }
    let left = lambda.stabilizer_reflections();
    let right = mu.stabilizer_reflections();
    let mut cur = w.clone();
    loop {
        let inv = cur.inverse();
        if let Some(&a) = left.iter().find(|&&a| inv.apply(a) < inv.apply(a + 1)) {
            cur = cur.left_simple(a);
            continue;
        }
        if let Some(&j) = right.iter().find(|&&j| cur.apply(j) < cur.apply(j + 1)) {
            cur = cur.right_simple(j);
            continue;
        }
        return Ok(cur);
    }
}

/// `λ = (n^{p_n}, …, 1^{p_1})` and `μ' = (−m_n^1, …, −m_1^{p_1})`.
pub fn weights_from_drinfeld(s: &SpectralData) -> (IntegerWeight, IntegerWeight) {
    let mut lambda = Vec::new();
    let mut mu_prime = Vec::new();
    for i in (1..=s.n()).rev() {
        for &m in s.tier(i) {
            lambda.push(i as i64);
            mu_prime.push(-m);
        }
    }
    (IntegerWeight(lambda), IntegerWeight(mu_prime))
}

/// `ν'` from the tier zeros of an ℓ-dominant weight, tier `n` first.
pub fn weight_from_ell_weight(q: &EllWeight) -> Result<IntegerWeight> {
    if !q.tiers.iter().all(IntRootedRational::is_polynomial) {
        return Err(Error::NotDominant(q.to_string()));
    }
    Ok(IntegerWeight(q.tiers.iter().rev().flat_map(|t| t.roots().into_iter().map(|m| -m)).collect()))
}

/// The ingredients of a multiplicity computation, kept for reporting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityWitness {
    pub lambda: IntegerWeight,
    pub mu: IntegerWeight,
    pub mu_prime: IntegerWeight,
    pub nu_prime: IntegerWeight,
    /// `(w_LR, x_LR)`, absent when `ν'` is not a rearrangement of `μ`.
    pub representatives: Option<(Permutation, Permutation)>,
    pub multiplicity: u64,
}

pub fn composition_multiplicity_detailed(
    p: &SpectralData,
    q: &EllWeight,
    cache: &mut KLCache,
) -> Result<MultiplicityWitness> {
    let expected: Vec<i64> = p.zeros().iter().map(|z| z.len() as i64).collect();
    if q.degrees() != expected {
        return Err(Error::DimensionMismatch(format!("l-weight degrees {:?}, row lengths {expected:?}", q.degrees())));
    }
    let nu_prime = weight_from_ell_weight(q)?;
    let (lambda, mu_prime) = weights_from_drinfeld(p);
    let mu = mu_prime.dominant();
    let mut out = MultiplicityWitness { lambda, mu, mu_prime, nu_prime, representatives: None, multiplicity: 0 };
    let Some(x) = out.nu_prime.witness(&out.mu) else {
        return Ok(out);
    };
    let w = out.mu_prime.witness(&out.mu).expect("dominant rearrangement");
    let w_lr = longest_double_coset_rep(&w, &out.lambda, &out.mu)?;
    let x_lr = longest_double_coset_rep(&x, &out.lambda, &out.mu)?;
    let value = cache.polynomial(&w_lr, &x_lr)?.eval_at_one();
    out.multiplicity =
        value.to_u64().ok_or_else(|| Error::InvalidPermutation(format!("multiplicity {value} out of range")))?;
    out.representatives = Some((w_lr, x_lr));
    Ok(out)
}

/// `[M(P) : L(Q)]`.
pub fn composition_multiplicity(p: &SpectralData, q: &EllWeight, cache: &mut KLCache) -> Result<u64> {
    Ok(composition_multiplicity_detailed(p, q, cache)?.multiplicity)
}

/// Multiplicity of each ℓ-dominant stratum with `v ≤ vmax`.
pub fn decomposition_matrix(
    s: &SpectralData,
    vmax: &DimensionVector,
    cache: &mut KLCache,
) -> Result<Vec<(Stratum, u64)>> {
    strata(s, vmax)?
        .into_iter()
        .map(|st| {
            let m = composition_multiplicity(s, &st.weight, cache)?;
            Ok((st, m))
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Segment {
    pub start: i64,
    pub end: i64,
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.start, self.end)
    }
}

/// A multiset of integer intervals, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multisegment {
    segments: Vec<Segment>,
}

impl Multisegment {
    pub fn new(mut segments: Vec<Segment>) -> Result<Self> {
        if let Some(s) = segments.iter().find(|s| s.start > s.end) {
            return Err(Error::InvalidStratum(format!("empty segment {s}")));
        }
        segments.sort();
        Ok(Self { segments })
    }

    /// Segments `[κ_a + 1, λ_a]`.
    pub fn from_weights(lambda: &IntegerWeight, kappa: &IntegerWeight) -> Result<Self> {
        if lambda.len() != kappa.len() {
            return Err(Error::SizeMismatch(lambda.len(), kappa.len()));
        }
        Self::new(lambda.0.iter().zip(&kappa.0).map(|(&l, &k)| Segment { start: k + 1, end: l }).collect())
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.segments.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// The framing multisegment: one `[−m + 1, i]` per line with `W_i(m)`.
pub fn multisegments(g: &crate::graded::GradedDimVector) -> Result<Multisegment> {
    let mut segs = Vec::new();
    for (&(i, m), &d) in &g.wdims {
        for _ in 0..d {
            segs.push(Segment { start: 1 - m, end: i as i64 });
        }
    }
    Multisegment::new(segs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::FixedPointTuple;
    use crate::graded::graded_dimensions;
    use crate::pyramid::Pyramid;

    fn perm(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    fn w(v: &[i64]) -> IntegerWeight {
        IntegerWeight(v.to_vec())
    }

    fn spectral(rows: &[u32], zeros: &str) -> SpectralData {
        SpectralData::parse(&Pyramid::from_row_lengths(rows).unwrap(), zeros).unwrap()
    }

    #[test]
    fn permutation_basics() {
        let p = perm("3412");
        assert_eq!(p.length(), 4);
        assert_eq!(p.inverse(), perm("3412"));
        assert_eq!(perm("231").inverse(), perm("312"));
        assert_eq!(perm("231").compose(&perm("213")).unwrap(), perm("321"));
        assert_eq!(perm("123").left_simple(1), perm("213"));
        assert_eq!(perm("312").left_simple(1), perm("321"));
        assert_eq!(perm("312").right_simple(1), perm("132"));
        assert_eq!(Permutation::all(4).len(), 24);
        assert!(Permutation::parse("112").is_err());
        assert!(Permutation::parse("1a").is_err());
        assert_eq!(perm("2,1,3"), perm("213"));
        let big = Permutation::new((1..=10).rev().collect()).unwrap();
        assert_eq!(big.to_string(), "10,9,8,7,6,5,4,3,2,1");
        assert_eq!(Permutation::parse(&big.to_string()).unwrap(), big);
    }

    #[test]
    fn bruhat_examples() {
        for x in Permutation::all(3) {
            assert!(bruhat_le(&Permutation::identity(3), &x).unwrap());
        }
        assert!(bruhat_le(&perm("213"), &perm("321")).unwrap());
        assert!(!bruhat_le(&perm("213"), &perm("132")).unwrap());
        assert!(bruhat_le(&perm("12"), &perm("123")).is_err());
    }

    #[test]
    fn kl_examples() {
        let mut c = KLCache::new();
        let e4 = Permutation::identity(4);
        assert_eq!(kl_polynomial(&e4, &perm("3412"), &mut c).unwrap(), LaurentPolynomial::from_dense(&[1, 1]));
        assert_eq!(kl_polynomial(&e4, &perm("4231"), &mut c).unwrap(), LaurentPolynomial::from_dense(&[1, 1]));
        assert_eq!(
            kl_polynomial(&perm("1324"), &perm("3412"), &mut c).unwrap(),
            LaurentPolynomial::from_dense(&[1, 1])
        );
        assert!(kl_polynomial(&perm("3412"), &perm("1234"), &mut c).unwrap().is_zero());
        for x in Permutation::all(3) {
            for y in Permutation::all(3) {
                let p = kl_polynomial(&x, &y, &mut c).unwrap();
                let expect =
                    if bruhat_le(&x, &y).unwrap() { LaurentPolynomial::one() } else { LaurentPolynomial::zero() };
                assert_eq!(p, expect);
            }
        }
        let mut small = KLCache::with_bound(3);
        assert!(kl_polynomial(&e4, &perm("3412"), &mut small).is_err());
    }

    #[test]
    fn double_coset_examples() {
        let e = Permutation::identity(3);
        assert_eq!(longest_double_coset_rep(&e, &w(&[3, 2, 1]), &w(&[3, 2, 1])).unwrap(), e);
        let r = longest_double_coset_rep(&Permutation::identity(2), &w(&[1, 1]), &w(&[5, 0])).unwrap();
        assert_eq!(r, perm("21"));
        let r = longest_double_coset_rep(&perm("1324"), &w(&[2, 2, 1, 1]), &w(&[0, 0, 0, -1])).unwrap();
        assert_eq!(longest_double_coset_rep(&r, &w(&[2, 2, 1, 1]), &w(&[0, 0, 0, -1])).unwrap(), r);
    }

    #[test]
    fn weights_examples() {
        let s = spectral(&[1, 1], "1:2;2:0");
        assert_eq!(weights_from_drinfeld(&s), (w(&[2, 1]), w(&[0, -2])));
        let s = spectral(&[1, 2], "1:0;2:3,1");
        assert_eq!(weights_from_drinfeld(&s), (w(&[2, 2, 1]), w(&[-3, -1, 0])));
        let s = spectral(&[1], "1:4");
        assert_eq!(weights_from_drinfeld(&s), (w(&[1]), w(&[-4])));
    }

    #[test]
    fn witness_action() {
        let mu_prime = w(&[-3, 0, -1, 0]);
        let mu = mu_prime.dominant();
        assert_eq!(mu, w(&[0, 0, -1, -3]));
        let x = mu_prime.witness(&mu).unwrap();
        assert_eq!(mu.act(&x).unwrap(), mu_prime);
        assert!(w(&[1, 2]).witness(&w(&[2, 2])).is_none());
    }

    #[test]
    fn gl2_multiplicities() {
        let s = spectral(&[1, 1], "1:2;2:0");
        let mut c = KLCache::new();
        assert_eq!(composition_multiplicity(&s, &s.highest_weight(), &mut c).unwrap(), 1);
        let q = EllWeight { tiers: vec![IntRootedRational::factor(0, 1), IntRootedRational::factor(2, 1)] };
        let d = composition_multiplicity_detailed(&s, &q, &mut c).unwrap();
        assert_eq!(d.nu_prime, w(&[-2, 0]));
        assert_eq!(d.representatives, Some((perm("12"), perm("21"))));
        assert_eq!(d.multiplicity, 1);

        let q = EllWeight { tiers: vec![IntRootedRational::factor(7, 1), IntRootedRational::factor(2, 1)] };
        assert_eq!(composition_multiplicity(&s, &q, &mut c).unwrap(), 0);

        let mut bad = IntRootedRational::from_roots(&[0, 2]);
        bad.add_exponent(1, -1);
        let q = EllWeight { tiers: vec![IntRootedRational::factor(1, 1), bad] };
        assert!(matches!(composition_multiplicity(&s, &q, &mut c), Err(Error::NotDominant(_))));

        let m = decomposition_matrix(&s, &DimensionVector(vec![4]), &mut c).unwrap();
        assert_eq!(m.iter().map(|(_, k)| *k).collect::<Vec<_>>(), vec![1, 1]);

        let m = decomposition_matrix(&spectral(&[1, 1], "1:0;2:5"), &DimensionVector(vec![4]), &mut c).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].1, 1);
    }

    #[test]
    fn multisegment_examples() {
        let s = spectral(&[1, 1], "1:2;2:0");
        let t = FixedPointTuple::empty(2, &s.framing()).unwrap();
        let g = graded_dimensions(&t, &s).unwrap();
        let ms = multisegments(&g).unwrap();
        assert_eq!(ms.to_string(), "{[-1,1], [1,2]}");
        let (lambda, mu_prime) = weights_from_drinfeld(&s);
        assert_eq!(Multisegment::from_weights(&lambda, &mu_prime).unwrap(), ms);

        let s = SpectralData::new(vec![vec![], vec![], vec![0]]).unwrap();
        let t = FixedPointTuple::empty(3, &s.framing()).unwrap();
        let ms = multisegments(&graded_dimensions(&t, &s).unwrap()).unwrap();
        assert_eq!(ms.segments(), &[Segment { start: 1, end: 3 }]);
        assert!(Multisegment::new(vec![Segment { start: 2, end: 1 }]).is_err());
    }
}
