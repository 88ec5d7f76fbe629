//! Exact polynomial and series arithmetic.
//!
//! Three value types live here:
//!
//! * [`LaurentPolynomial`]: finitely supported integer coefficients indexed by
//!   an integer power of a single variable (`t` for Poincaré polynomials,
//!   `q` for Kazhdan–Lusztig polynomials).
//! * [`TruncatedSeries`]: a formal power series in `e^v` over dimension
//!   vectors `v`, with Laurent polynomial coefficients and a componentwise
//!   cutoff.
//! * [`IntRootedRational`]: a rational function `∏_m (u − m)^{e(m)}` with
//!   integer roots and integer (possibly negative) exponents.
//!
//! All coefficients are arbitrary-precision integers and zero entries are
//! never stored, so structural equality is mathematical equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaurentPolynomial {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `coeff * t^exp`.
    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Dense constructor: `coeffs[k]` is the coefficient of `t^k`.
    pub fn from_dense(coeffs: &[i64]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(k, &c)| (k as i64, c)))
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Substitutes `t -> t^{-1}`.
    pub fn bar(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(&e, c)| (-e, c.clone())).collect() }
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    /// Keeps only the terms with exponent `<= max`.
    pub fn truncate_above(&self, max: i64) -> Self {
        Self { coeffs: self.coeffs.range(..=max).map(|(&e, c)| (e, c.clone())).collect() }
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// Renders with the given variable name, ascending powers:
    /// `1 + 2*t + t^2`, `t^-1 - 3*t`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (&e, c)) in self.coeffs.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let monomial = match e {
                0 => None,
                1 => Some(var.to_string()),
                _ => Some(format!("{var}^{e}")),
            };
            match monomial {
                None => out.push_str(&abs.to_string()),
                Some(m) if abs.is_one() => out.push_str(&m),
                Some(m) => out.push_str(&format!("{abs}*{m}")),
            }
        }
        out
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("t"))
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(mut self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn add_assign(&mut self, rhs: &LaurentPolynomial) {
        for (&e, c) in &rhs.coeffs {
            self.add_term(e, c.clone());
        }
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial { coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        out += &(-rhs);
        out
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (&ea, ca) in &self.coeffs {
            for (&eb, cb) in &rhs.coeffs {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        &self * &rhs
    }
}

/// Formal series `Σ_v c_v(t) e^v`, truncated componentwise at `cutoff`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    cutoff: Vec<u32>,
    terms: BTreeMap<Vec<u32>, LaurentPolynomial>,
}

impl TruncatedSeries {
    pub fn zero(cutoff: Vec<u32>) -> Self {
        Self { cutoff, terms: BTreeMap::new() }
    }

    pub fn one(cutoff: Vec<u32>) -> Self {
        let mut s = Self::zero(cutoff);
        let origin = vec![0; s.cutoff.len()];
        s.add_term(&origin, &LaurentPolynomial::one());
        s
    }

    /// Expansion of `1 / (1 - t^tpower e^root)` up to the cutoff.
    pub fn geometric(cutoff: Vec<u32>, root: &[u32], tpower: i64) -> Result<Self> {
        if root.len() != cutoff.len() {
            return Err(Error::DimensionMismatch(format!(
                "root {root:?} has length {}, cutoff has length {}",
                root.len(),
                cutoff.len()
            )));
        }
        if root.iter().all(|&r| r == 0) {
            return Err(Error::DegenerateGeometric);
        }
        let mut s = Self::zero(cutoff);
        let mut v = vec![0u32; root.len()];
        let mut k = 0i64;
        while s.within_cutoff(&v) {
            s.add_term(&v, &LaurentPolynomial::monomial(k * tpower, 1));
            for (vi, ri) in v.iter_mut().zip(root) {
                *vi += ri;
            }
            k += 1;
        }
        Ok(s)
    }

    pub fn cutoff(&self) -> &[u32] {
        &self.cutoff
    }

    pub fn within_cutoff(&self, v: &[u32]) -> bool {
        v.len() == self.cutoff.len() && v.iter().zip(&self.cutoff).all(|(a, b)| a <= b)
    }

    /// Adds `poly * e^v`; terms beyond the cutoff are discarded.
    pub fn add_term(&mut self, v: &[u32], poly: &LaurentPolynomial) {
        if poly.is_zero() || !self.within_cutoff(v) {
            return;
        }
        let slot = self.terms.entry(v.to_vec()).or_default();
        *slot += poly;
        if slot.is_zero() {
            self.terms.remove(v);
        }
    }

    pub fn coefficient(&self, v: &[u32]) -> LaurentPolynomial {
        self.terms.get(v).cloned().unwrap_or_default()
    }

    /// Nonzero terms in lexicographic order of `v`.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &LaurentPolynomial)> + '_ {
        self.terms.iter().map(|(v, p)| (v.as_slice(), p))
    }

    pub fn multiply(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        if self.cutoff != other.cutoff {
            return Err(Error::CutoffMismatch { left: self.cutoff.clone(), right: other.cutoff.clone() });
        }
        let mut out = Self::zero(self.cutoff.clone());
        let mut sum = vec![0u32; self.cutoff.len()];
        for (va, pa) in &self.terms {
            for (vb, pb) in &other.terms {
                for (k, s) in sum.iter_mut().enumerate() {
                    *s = va[k] + vb[k];
                }
                if out.within_cutoff(&sum) {
                    out.add_term(&sum, &(pa * pb));
                }
            }
        }
        Ok(out)
    }

    /// Restricts to the terms whose `v` satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&[u32]) -> bool) -> TruncatedSeries {
        Self {
            cutoff: self.cutoff.clone(),
            terms: self.terms.iter().filter(|(v, _)| keep(v)).map(|(v, p)| (v.clone(), p.clone())).collect(),
        }
    }
}

/// `∏_m (u − m)^{e(m)}` with integer roots `m`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntRootedRational {
    exponents: BTreeMap<i64, i64>,
}

impl IntRootedRational {
    pub fn one() -> Self {
        Self::default()
    }

    /// `(u − root)^exp`.
    pub fn factor(root: i64, exp: i64) -> Self {
        let mut r = Self::one();
        r.add_exponent(root, exp);
        r
    }

    /// The monic polynomial with the given multiset of roots.
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a i64>) -> Self {
        let mut r = Self::one();
        for &m in roots {
            r.add_exponent(m, 1);
        }
        r
    }

    pub fn add_exponent(&mut self, root: i64, exp: i64) {
        if exp == 0 {
            return;
        }
        let slot = self.exponents.entry(root).or_insert(0);
        *slot += exp;
        if *slot == 0 {
            self.exponents.remove(&root);
        }
    }

    pub fn exponent(&self, root: i64) -> i64 {
        self.exponents.get(&root).copied().unwrap_or(0)
    }

    /// `(root, exponent)` pairs with ascending roots.
    pub fn factors(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.exponents.iter().map(|(&m, &e)| (m, e))
    }

    pub fn degree(&self) -> i64 {
        self.exponents.values().sum()
    }

    pub fn inverse(&self) -> Self {
        Self { exponents: self.exponents.iter().map(|(&m, &e)| (m, -e)).collect() }
    }

    pub fn is_one(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn is_polynomial(&self) -> bool {
        self.exponents.values().all(|&e| e >= 0)
    }

    /// Roots repeated by multiplicity, ascending. Only meaningful for
    /// polynomials; negative exponents contribute nothing.
    pub fn roots(&self) -> Vec<i64> {
        self.exponents.iter().flat_map(|(&m, &e)| std::iter::repeat_n(m, e.max(0) as usize)).collect()
    }
}

impl Mul for &IntRootedRational {
    type Output = IntRootedRational;

    fn mul(self, rhs: &IntRootedRational) -> IntRootedRational {
        let mut out = self.clone();
        for (&m, &e) in &rhs.exponents {
            out.add_exponent(m, e);
        }
        out
    }
}

impl Mul for IntRootedRational {
    type Output = IntRootedRational;

    fn mul(self, rhs: IntRootedRational) -> IntRootedRational {
        &self * &rhs
    }
}

/// `(u)^-1 (u-2)^1`; the empty product renders as `1`.
impl fmt::Display for IntRootedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (k, (&m, &e)) in self.exponents.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            match m.cmp(&0) {
                std::cmp::Ordering::Equal => write!(f, "(u)^{e}")?,
                std::cmp::Ordering::Greater => write!(f, "(u-{m})^{e}")?,
                std::cmp::Ordering::Less => write!(f, "(u+{})^{e}", -m)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp(c: &[i64]) -> LaurentPolynomial {
        LaurentPolynomial::from_dense(c)
    }

    #[test]
    fn laurent_products() {
        assert_eq!(&lp(&[1]) * &lp(&[1, 1]), lp(&[1, 1]));
        assert_eq!(&lp(&[1, 1]) * &lp(&[1, 1]), lp(&[1, 2, 1]));
        let t_inv_plus_one = LaurentPolynomial::from_terms([(-1, 1), (0, 1)]);
        assert_eq!(&t_inv_plus_one * &LaurentPolynomial::monomial(1, 1), lp(&[1, 1]));
    }

    #[test]
    fn laurent_rendering() {
        assert_eq!(lp(&[1, 2, 1]).to_string(), "1 + 2*t + t^2");
        assert_eq!(LaurentPolynomial::zero().to_string(), "0");
        assert_eq!(LaurentPolynomial::from_terms([(-1, 1), (1, -3)]).to_string(), "t^-1 - 3*t");
        assert_eq!(LaurentPolynomial::from_terms([(1, -1)]).to_string(), "-t");
        assert_eq!(lp(&[1, 1]).render("q"), "1 + q");
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let p = &lp(&[1, 1]) - &lp(&[1, 1]);
        assert!(p.is_zero());
        assert_eq!(p, LaurentPolynomial::zero());
    }

    #[test]
    fn series_identity_and_truncation() {
        let cutoff = vec![1];
        let mut s = TruncatedSeries::zero(cutoff.clone());
        s.add_term(&[0], &lp(&[1]));
        s.add_term(&[1], &lp(&[0, 3]));
        let one = TruncatedSeries::one(cutoff.clone());
        assert_eq!(one.multiply(&s).unwrap(), s);

        let mut a = TruncatedSeries::one(cutoff.clone());
        a.add_term(&[1], &lp(&[1]));
        let mut b = TruncatedSeries::one(cutoff.clone());
        b.add_term(&[1], &lp(&[0, 1]));
        let prod = a.multiply(&b).unwrap();
        assert_eq!(prod.coefficient(&[0]), lp(&[1]));
        assert_eq!(prod.coefficient(&[1]), lp(&[1, 1]));
        // e^{2α₁} would be t·e^{2α₁}, beyond the cutoff
        assert_eq!(prod.terms().count(), 2);
    }

    #[test]
    fn series_geometric() {
        let g = TruncatedSeries::geometric(vec![3], &[1], 0).unwrap();
        for k in 0..=3 {
            assert_eq!(g.coefficient(&[k]), lp(&[1]));
        }
        assert_eq!(g.terms().count(), 4);
        assert_eq!(TruncatedSeries::geometric(vec![3], &[0], 1), Err(Error::DegenerateGeometric));
    }

    #[test]
    fn series_cutoff_mismatch() {
        let a = TruncatedSeries::one(vec![1]);
        let b = TruncatedSeries::one(vec![2]);
        assert!(matches!(a.multiply(&b), Err(Error::CutoffMismatch { .. })));
    }

    #[test]
    fn rational_products() {
        let u2 = IntRootedRational::factor(2, 1);
        assert!((&u2 * &u2.inverse()).is_one());

        let a = &IntRootedRational::factor(0, 1) * &IntRootedRational::factor(2, 1);
        let b = IntRootedRational::factor(0, -1);
        assert_eq!(&a * &b, IntRootedRational::factor(2, 1));
        assert_eq!(&IntRootedRational::one() * &a, a);
    }

    #[test]
    fn rational_polynomiality() {
        assert!(IntRootedRational::factor(1, 2).is_polynomial());
        let mut r = IntRootedRational::from_roots(&[0, 2]);
        r.add_exponent(1, -1);
        assert!(!r.is_polynomial());
        assert!(IntRootedRational::one().is_polynomial());
    }

    #[test]
    fn rational_rendering() {
        let mut r = IntRootedRational::factor(2, 1);
        r.add_exponent(0, -1);
        r.add_exponent(-3, 2);
        assert_eq!(r.to_string(), "(u+3)^2 (u)^-1 (u-2)^1");
        assert_eq!(IntRootedRational::one().to_string(), "1");
        assert_eq!(IntRootedRational::from_roots(&[0, 2, 2]).roots(), vec![0, 2, 2]);
    }

    fn arb_lp() -> impl Strategy<Value = LaurentPolynomial> {
        prop::collection::vec((-4i64..5, -6i64..7), 0..5).prop_map(LaurentPolynomial::from_terms)
    }

    fn arb_series() -> impl Strategy<Value = TruncatedSeries> {
        prop::collection::vec(((0u32..4, 0u32..3), arb_lp()), 0..6).prop_map(|terms| {
            let mut s = TruncatedSeries::zero(vec![3, 2]);
            for ((a, b), p) in terms {
                s.add_term(&[a, b], &p);
            }
            s
        })
    }

    fn arb_rational() -> impl Strategy<Value = IntRootedRational> {
        prop::collection::vec((-3i64..4, -3i64..4), 0..5).prop_map(|fs| {
            let mut r = IntRootedRational::one();
            for (m, e) in fs {
                r.add_exponent(m, e);
            }
            r
        })
    }

    proptest! {
        #[test]
        fn laurent_ring_laws(a in arb_lp(), b in arb_lp(), c in arb_lp()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn series_ring_laws(a in arb_series(), b in arb_series(), c in arb_series()) {
            prop_assert_eq!(a.multiply(&b).unwrap(), b.multiply(&a).unwrap());
            prop_assert_eq!(
                a.multiply(&b).unwrap().multiply(&c).unwrap(),
                a.multiply(&b.multiply(&c).unwrap()).unwrap()
            );
        }

        #[test]
        fn rational_group_laws(a in arb_rational(), b in arb_rational()) {
            prop_assert!((&a * &a.inverse()).is_one());
            prop_assert_eq!((&a * &b).degree(), a.degree() + b.degree());
            prop_assert_eq!(&a * &b, &b * &a);
        }
    }
}
