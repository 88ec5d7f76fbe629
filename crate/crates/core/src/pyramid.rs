//! Pyramids, row lengths and shift matrices.
//!
//! A pyramid of level `l` is a unimodal sequence of column heights
//! `q_1 ≤ … ≤ q_k ≥ q_{k+1} ≥ … ≥ q_l`. Its row lengths `p_1 ≤ … ≤ p_n`
//! are the Jordan block sizes of the nilpotent element it encodes, and its
//! shift matrix records how the non-maximal columns split between the two
//! sides of the pivot.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pyramid {
    columns: Vec<u32>,
    pivot: usize,
    rows: Vec<u32>,
}

impl Pyramid {
    pub fn from_columns(columns: &[u32]) -> Result<Self> {
        if columns.is_empty() {
            return Err(Error::InvalidPyramid("no columns".into()));
        }
        if columns.contains(&0) {
            return Err(Error::InvalidPyramid(format!("column heights must be positive: {columns:?}")));
        }
        let pivot = smallest_pivot(columns).ok_or_else(|| Error::NotUnimodal(columns.to_vec()))?;
        let n = *columns.iter().max().expect("nonempty");
        let rows = (1..=n).map(|i| columns.iter().filter(|&&q| q > n - i).count() as u32).collect();
        Ok(Self { columns: columns.to_vec(), pivot, rows })
    }

    /// The pyramid with the given row lengths whose columns all sit left of
    /// the pivot (weakly increasing heights).
    pub fn from_row_lengths(rows: &[u32]) -> Result<Self> {
        if rows.is_empty() || rows[0] == 0 {
            return Err(Error::InvalidPyramid(format!("row lengths must be positive: {rows:?}")));
        }
        if rows.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidPyramid(format!("row lengths must be weakly increasing: {rows:?}")));
        }
        let l = *rows.last().expect("nonempty");
        let columns: Vec<u32> = (1..=l).map(|c| rows.iter().filter(|&&p| p > l - c).count() as u32).collect();
        Self::from_columns(&columns)
    }

    /// Inverse of [`Pyramid::shift_matrix`] given the level `l = p_n`.
    pub fn from_shift_and_level(sigma: &ShiftMatrix, level: u32) -> Result<Self> {
        sigma.validate()?;
        let n = sigma.size();
        let mut left = Vec::new();
        let mut right = Vec::new();
        for i in (1..n).rev() {
            let height = (n - i) as u32;
            left.extend(std::iter::repeat_n(height, sigma.get(i + 1, i) as usize));
        }
        for i in 1..n {
            let height = (n - i) as u32;
            right.extend(std::iter::repeat_n(height, sigma.get(i, i + 1) as usize));
        }
        let short = (left.len() + right.len()) as u32;
        if level <= short {
            return Err(Error::InvalidShiftMatrix(format!(
                "level {level} leaves no column of full height {n} (needs at least {})",
                short + 1
            )));
        }
        let mut columns = left;
        columns.extend(std::iter::repeat_n(n as u32, (level - short) as usize));
        columns.extend(right);
        Self::from_columns(&columns)
    }

    pub fn columns(&self) -> &[u32] {
        &self.columns
    }

    /// Smallest valid pivot `k` (number of columns on the weakly increasing side).
    pub fn pivot(&self) -> usize {
        self.pivot
    }

    /// Maximal column height `n`.
    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn level(&self) -> u32 {
        self.columns.len() as u32
    }

    /// Row lengths `p_1 ≤ … ≤ p_n`.
    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn total(&self) -> u32 {
        self.rows.iter().sum()
    }

    pub fn shift_matrix(&self) -> ShiftMatrix {
        let n = self.height();
        let mut below = vec![0u32; n]; // below[i] = s_{i+1,i}
        let mut above = vec![0u32; n]; // above[i] = s_{i,i+1}
        for (c, &q) in self.columns.iter().enumerate() {
            let i = n - q as usize;
            if i == 0 {
                continue;
            }
            if c < self.pivot {
                below[i] += 1;
            } else {
                above[i] += 1;
            }
        }
        let mut entries = vec![vec![0u32; n]; n];
        #[allow(clippy::needless_range_loop)]
        for i in 0..n {
            for j in i + 1..n {
                // 1-based: s_{i+1, j+1} sums the steps i+1 → j+1
                entries[i][j] = (i + 1..=j).map(|k| above[k]).sum();
                entries[j][i] = (i + 1..=j).map(|k| below[k]).sum();
            }
        }
        ShiftMatrix { entries }
    }

    /// Number of polynomial generators of the associated graded algebra,
    /// counted range by range from the shift matrix.
    pub fn gr_generator_count(&self) -> u64 {
        let sigma = self.shift_matrix();
        let n = self.height();
        let mut count = 0u64;
        for i in 1..=n {
            for j in 1..=n {
                let s = sigma.get(i, j) as u64;
                let upper = sigma.extended(i, j, &self.rows) as u64;
                count += upper - s;
            }
        }
        count
    }

    /// Pyramids give isomorphic W-algebras exactly when row lengths agree.
    pub fn same_w_algebra(&self, other: &Pyramid) -> bool {
        self.rows == other.rows
    }
}

impl fmt::Display for Pyramid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<String> = self.columns.iter().map(u32::to_string).collect();
        write!(f, "({})", cols.join(","))
    }
}

fn smallest_pivot(q: &[u32]) -> Option<usize> {
    // longest weakly increasing prefix and weakly decreasing suffix
    let mut inc = 1;
    while inc < q.len() && q[inc - 1] <= q[inc] {
        inc += 1;
    }
    let mut dec_start = q.len() - 1;
    while dec_start > 0 && q[dec_start - 1] >= q[dec_start] {
        dec_start -= 1;
    }
    // k valid iff q[..k] increasing (k <= inc) and q[k..] decreasing (k >= dec_start)
    (dec_start <= inc).then_some(dec_start)
}

/// `n × n` shift matrix, addressed 1-based as in `s_{ij}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShiftMatrix {
    entries: Vec<Vec<u32>>,
}

impl ShiftMatrix {
    pub fn new(entries: Vec<Vec<u32>>) -> Result<Self> {
        let m = Self { entries };
        m.validate()?;
        Ok(m)
    }

    pub fn zero(n: usize) -> Self {
        Self { entries: vec![vec![0; n]; n] }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i - 1][j - 1]
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.entries
    }

    /// `S_{ij} = s_{ij} + p_{min(i,j)}`.
    pub fn extended(&self, i: usize, j: usize, rows: &[u32]) -> u32 {
        self.get(i, j) + rows[i.min(j) - 1]
    }

    /// Checks the zero diagonal and `s_ij + s_jk = s_ik` for `j` between `i` and `k`.
    pub fn validate(&self) -> Result<()> {
        let n = self.size();
        if n == 0 {
            return Err(Error::InvalidShiftMatrix("empty matrix".into()));
        }
        if self.entries.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidShiftMatrix("matrix is not square".into()));
        }
        for i in 1..=n {
            if self.get(i, i) != 0 {
                return Err(Error::InvalidShiftMatrix(format!("nonzero diagonal at {i}")));
            }
        }
        for i in 1..=n {
            for j in 1..=n {
                for k in 1..=n {
                    if i.abs_diff(j) + j.abs_diff(k) == i.abs_diff(k)
                        && self.get(i, j) + self.get(j, k) != self.get(i, k)
                    {
                        return Err(Error::InvalidShiftMatrix(format!("additivity fails for ({i},{j},{k})")));
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn figure_one_pyramid() {
        let py = Pyramid::from_columns(&[1, 1, 3, 4, 2]).unwrap();
        assert_eq!(py.height(), 4);
        assert_eq!(py.rows(), &[1, 2, 3, 5]);
        assert_eq!(py.total(), 11);
        assert_eq!(py.pivot(), 3);
        let s = py.shift_matrix();
        assert_eq!([s.get(2, 1), s.get(3, 2), s.get(4, 3), s.get(1, 2), s.get(2, 3), s.get(3, 4)], [1, 0, 2, 0, 1, 0]);
        for i in 1..4 {
            assert_eq!(s.get(i + 1, i) + s.get(i, i + 1), py.rows()[i] - py.rows()[i - 1]);
        }
        assert_eq!(Pyramid::from_shift_and_level(&s, 5).unwrap(), py);
    }

    #[test]
    fn rectangle_and_small_cases() {
        let rect = Pyramid::from_columns(&[3, 3, 3]).unwrap();
        assert_eq!(rect.rows(), &[3, 3, 3]);
        assert_eq!(rect.total(), 9);
        assert_eq!(rect.shift_matrix(), ShiftMatrix::zero(3));
        assert_eq!(rect.pivot(), 0);

        let py = Pyramid::from_columns(&[1, 2, 1]).unwrap();
        assert_eq!(py.height(), 2);
        assert_eq!(py.rows(), &[1, 3]);
        assert_eq!(py.total(), 4);

        let back = Pyramid::from_shift_and_level(&ShiftMatrix::zero(3), 4).unwrap();
        assert_eq!(back.columns(), &[3, 3, 3, 3]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(Pyramid::from_columns(&[2, 1, 2]), Err(Error::NotUnimodal(_))));
        assert!(Pyramid::from_columns(&[]).is_err());
        assert!(Pyramid::from_columns(&[1, 0]).is_err());
        let s = Pyramid::from_columns(&[1, 1, 3, 4, 2]).unwrap().shift_matrix();
        assert!(Pyramid::from_shift_and_level(&s, 4).is_err());
        assert!(ShiftMatrix::new(vec![vec![0, 1, 0], vec![0, 0, 0], vec![0, 0, 0]]).is_err());
        assert!(Pyramid::from_row_lengths(&[2, 1]).is_err());
    }

    #[test]
    fn generator_counts() {
        let py = Pyramid::from_row_lengths(&[1, 2, 3, 5]).unwrap();
        assert_eq!(py.gr_generator_count(), 31);
        assert_eq!(Pyramid::from_columns(&[1, 1, 3, 4, 2]).unwrap().gr_generator_count(), 31);
        // one-box columns: U(gl_2)
        assert_eq!(Pyramid::from_row_lengths(&[1, 1]).unwrap().gr_generator_count(), 4);
        // single row: the center of U(gl_5)
        assert_eq!(Pyramid::from_columns(&[1, 1, 1, 1, 1]).unwrap().gr_generator_count(), 5);
    }

    #[test]
    fn same_w_algebra_by_rows() {
        let a = Pyramid::from_columns(&[1, 1, 3, 4, 2]).unwrap();
        let b = Pyramid::from_columns(&[1, 2, 3, 4, 1]).unwrap();
        assert_eq!(b.rows(), a.rows());
        assert!(a.same_w_algebra(&b));
        assert!(a.same_w_algebra(&a));
        let c = Pyramid::from_row_lengths(&[1, 2]).unwrap();
        let d = Pyramid::from_row_lengths(&[1, 3]).unwrap();
        assert!(!c.same_w_algebra(&d));
    }

    fn arb_unimodal() -> impl Strategy<Value = Vec<u32>> {
        (prop::collection::vec(1u32..6, 0..4), 1u32..6, prop::collection::vec(1u32..6, 0..4)).prop_map(
            |(mut up, peak, mut down)| {
                up.iter_mut().for_each(|x| *x = (*x).min(peak));
                down.iter_mut().for_each(|x| *x = (*x).min(peak));
                up.sort();
                down.sort_by(|a, b| b.cmp(a));
                up.push(peak);
                up.extend(down);
                up
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig { cases: 50, ..ProptestConfig::default() })]

        #[test]
        fn shift_round_trip(q in arb_unimodal()) {
            let py = Pyramid::from_columns(&q).unwrap();
            let sigma = py.shift_matrix();
            prop_assert!(sigma.validate().is_ok());
            prop_assert_eq!(py.columns().iter().sum::<u32>(), py.total());
            let back = Pyramid::from_shift_and_level(&sigma, py.rows()[py.height() - 1]).unwrap();
            prop_assert_eq!(back.columns(), py.columns());
        }

        #[test]
        fn generator_count_closed_forms(q in arb_unimodal()) {
            let py = Pyramid::from_columns(&q).unwrap();
            let p = py.rows();
            let grid: u64 = p.iter()
                .flat_map(|a| p.iter().map(move |b| (*a).min(*b) as u64))
                .sum();
            let mut desc = p.to_vec();
            desc.sort_by(|a, b| b.cmp(a));
            let centralizer: u64 = desc.iter().enumerate()
                .map(|(i, &x)| (2 * i as u64 + 1) * x as u64)
                .sum();
            prop_assert_eq!(py.gr_generator_count(), grid);
            prop_assert_eq!(grid, centralizer);
        }
    }
}
