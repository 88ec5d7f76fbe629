//! Brute-force reference computations, kept independent of the fast paths
//! in [`crate::kl`].

use std::collections::HashMap;

use crate::algebra::LaurentPolynomial;
use crate::error::{Error, Result};
use crate::kl::{bruhat_le, IntegerWeight, Permutation};

/// Kazhdan-Lusztig polynomials from R-polynomials: all `P_{x,w}` in `S_n`.
pub struct RPolynomialOracle {
    n: usize,
    r: HashMap<(Permutation, Permutation), LaurentPolynomial>,
    p: HashMap<(Permutation, Permutation), LaurentPolynomial>,
}

impl RPolynomialOracle {
    pub fn new(n: usize) -> Self {
        Self { n, r: HashMap::new(), p: HashMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// `R_{x,w}` by the right-descent recursion.
    pub fn r_polynomial(&mut self, x: &Permutation, w: &Permutation) -> LaurentPolynomial {
        if x == w {
            return LaurentPolynomial::one();
        }
        if !bruhat_le(x, w).unwrap_or(false) {
            return LaurentPolynomial::zero();
        }
        let k = (x.clone(), w.clone());
        if let Some(r) = self.r.get(&k) {
            return r.clone();
        }
        let s = (1..w.rank()).find(|&j| w.apply(j) > w.apply(j + 1)).unwrap();
        let ws = w.right_simple(s);
        let xs = x.right_simple(s);
        let out = if x.apply(s) > x.apply(s + 1) {
            self.r_polynomial(&xs, &ws)
        } else {
            let q_minus_1 = LaurentPolynomial::from_dense(&[-1, 1]);
            let q = LaurentPolynomial::monomial(1, 1);
            &(&q_minus_1 * &self.r_polynomial(x, &ws)) + &(&q * &self.r_polynomial(&xs, &ws))
        };
        self.r.insert(k, out.clone());
        out
    }

    /// `P_{x,w} = −[Σ_{x<y≤w} R_{x,y} P_{y,w}]` truncated to degrees
    /// `≤ (ℓ(w) − ℓ(x) − 1)/2`.
    pub fn kl_polynomial(&mut self, x: &Permutation, w: &Permutation) -> Result<LaurentPolynomial> {
        if x.rank() != self.n || w.rank() != self.n {
            return Err(Error::SizeMismatch(x.rank(), self.n));
        }
        Ok(self.p_rec(x, w))
    }

    fn p_rec(&mut self, x: &Permutation, w: &Permutation) -> LaurentPolynomial {
        if x == w {
            return LaurentPolynomial::one();
        }
        if !bruhat_le(x, w).unwrap_or(false) {
            return LaurentPolynomial::zero();
        }
        let k = (x.clone(), w.clone());
        if let Some(p) = self.p.get(&k) {
            return p.clone();
        }
        let mut sum = LaurentPolynomial::zero();
        for y in Permutation::all(self.n) {
            if y != *x && bruhat_le(x, &y).unwrap() && bruhat_le(&y, w).unwrap() {
                let r = self.r_polynomial(x, &y);
                sum += &(&r * &self.p_rec(&y, w));
            }
        }
        let d = (w.length() - x.length()) as i64;
        let out = -&sum.truncate_above((d - 1).div_euclid(2));
        self.p.insert(k, out.clone());
        out
    }
}

/// Elements of `S_n` fixing the weight under `(uκ)_a = κ_{u⁻¹(a)}`.
pub fn stabilizer(kappa: &IntegerWeight) -> Vec<Permutation> {
    Permutation::all(kappa.len())
        .into_iter()
        .filter(|u| (1..=kappa.len()).all(|a| kappa.0[u.apply(a) - 1] == kappa.0[a - 1]))
        .collect()
}

/// The whole double coset `S_λ w S_μ`.
pub fn double_coset(w: &Permutation, lambda: &IntegerWeight, mu: &IntegerWeight) -> Result<Vec<Permutation>> {
    let left = stabilizer(lambda);
    let right = stabilizer(mu);
    let mut out = Vec::new();
    for u in &left {
        let uw = u.compose(w)?;
        for v in &right {
            out.push(uw.compose(v)?);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Scans the double coset and returns its elements of maximal length.
pub fn longest_in_double_coset(
    w: &Permutation,
    lambda: &IntegerWeight,
    mu: &IntegerWeight,
) -> Result<Vec<Permutation>> {
    let coset = double_coset(w, lambda, mu)?;
    let top = coset.iter().map(Permutation::length).max().unwrap_or(0);
    Ok(coset.into_iter().filter(|p| p.length() == top).collect())
}
