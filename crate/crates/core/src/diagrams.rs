//! Tuples of Young diagrams labelling torus fixed points.
//!
//! Each framing line `(i, α)` carries a Young diagram whose bottom-left box
//! sits at `x = i`. Rows are stacked upward (`y = 1, 2, …`). A box at
//! `x = j` contributes to `dim V_j`, so every diagram anchored at tier `i`
//! has width at most `n − i` and the tier-`n` diagrams are empty.
//!
//! Leg length is measured horizontally along the row, arm length
//! vertically along the column.

use std::fmt;

use crate::error::{Error, Result};

/// Lattice box `(x, y)`, 1-based, `y` increasing upward.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub x: i64,
    pub y: i64,
}

impl Cell {
    pub fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct YoungDiagram {
    rows: Vec<u32>,
    anchor: usize,
}

impl YoungDiagram {
    pub fn new(rows: Vec<u32>, anchor: usize) -> Result<Self> {
        if rows.contains(&0) {
            return Err(Error::InvalidDiagram(format!("zero row length in {rows:?}")));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidDiagram(format!("rows {rows:?} are not weakly decreasing")));
        }
        Ok(Self { rows, anchor })
    }

    pub fn empty(anchor: usize) -> Self {
        Self { rows: Vec::new(), anchor }
    }

    /// Builds the diagram whose column heights (conjugate partition) are `heights`.
    pub fn from_column_heights(heights: &[u32], anchor: usize) -> Self {
        let tallest = heights.first().copied().unwrap_or(0);
        let rows = (1..=tallest).map(|r| heights.iter().filter(|&&h| h >= r).count() as u32).collect();
        Self { rows, anchor }
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn anchor(&self) -> usize {
        self.anchor
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> u32 {
        self.rows.first().copied().unwrap_or(0)
    }

    pub fn num_boxes(&self) -> u32 {
        self.rows.iter().sum()
    }

    /// Number of boxes with x-coordinate `x`.
    pub fn column_height(&self, x: i64) -> u32 {
        let offset = x - self.anchor as i64;
        if offset < 0 {
            return 0;
        }
        self.rows.iter().filter(|&&r| i64::from(r) > offset).count() as u32
    }

    pub fn contains(&self, s: Cell) -> bool {
        s.y >= 1
            && (s.y as usize) <= self.rows.len()
            && s.x >= self.anchor as i64
            && s.x < self.anchor as i64 + i64::from(self.rows[s.y as usize - 1])
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        let a = self.anchor as i64;
        self.rows
            .iter()
            .enumerate()
            .flat_map(move |(r, &len)| (0..i64::from(len)).map(move |h| Cell::new(a + h, r as i64 + 1)))
    }

    /// Horizontal distance from `s` to the rightmost box of this diagram in
    /// row `s.y`, or to `x = anchor − 1` when that row is empty.
    pub fn leg_length(&self, s: Cell) -> i64 {
        let a = self.anchor as i64;
        let marked = if s.y >= 1 && (s.y as usize) <= self.rows.len() {
            a + i64::from(self.rows[s.y as usize - 1]) - 1
        } else {
            a - 1
        };
        marked - s.x
    }

    /// Vertical distance from `s` to the topmost box of this diagram in
    /// column `s.x`, or to `y = 0` when that column is empty.
    pub fn arm_length(&self, s: Cell) -> i64 {
        i64::from(self.column_height(s.x)) - s.y
    }
}

/// Dimension vector `(v_1, …, v_{n−1})` indexed by `I`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DimensionVector(pub Vec<u32>);

impl DimensionVector {
    pub fn zero(len: usize) -> Self {
        Self(vec![0; len])
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// `v_i`, 1-based; zero outside `1..=len`.
    pub fn get(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn le(&self, other: &DimensionVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// All `u ≤ self` componentwise, in lexicographic order.
    pub fn below(&self) -> Vec<DimensionVector> {
        let mut out = vec![Vec::with_capacity(self.0.len())];
        for &bound in &self.0 {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..=bound).map(move |x| {
                        let mut p = prefix.clone();
                        p.push(x);
                        p
                    })
                })
                .collect();
        }
        out.into_iter().map(DimensionVector).collect()
    }

    /// All vectors of length `len` with entry sum at most `max_total`, in
    /// lexicographic order.
    pub fn with_total_at_most(len: usize, max_total: u32) -> Vec<DimensionVector> {
        DimensionVector(vec![max_total; len]).below().into_iter().filter(|v| v.total() <= max_total).collect()
    }
}

impl fmt::Display for DimensionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Framing vector `(w_1, …, w_n)` indexed by `Ĩ`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FramingVector(pub Vec<u32>);

impl FramingVector {
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// `w_i`, 1-based; zero outside `1..=len`.
    pub fn get(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn is_weakly_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl fmt::Display for FramingVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Framing line `(i, α)`, ordered lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LineIndex {
    pub tier: usize,
    pub line: usize,
}

impl fmt::Display for LineIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.tier, self.line)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FixedPointTuple {
    n: usize,
    w: FramingVector,
    diagrams: Vec<Vec<YoungDiagram>>,
}

impl FixedPointTuple {
    pub fn empty(n: usize, w: &FramingVector) -> Result<Self> {
        check_shape(n, w)?;
        let diagrams = (1..=n).map(|i| (0..w.get(i)).map(|_| YoungDiagram::empty(i)).collect()).collect();
        Ok(Self { n, w: w.clone(), diagrams })
    }

    /// `diagrams[i-1][α-1]` holds the rows of `Y_i^α`.
    pub fn new(n: usize, w: &FramingVector, rows: Vec<Vec<Vec<u32>>>) -> Result<Self> {
        check_shape(n, w)?;
        if rows.len() != n {
            return Err(Error::DimensionMismatch(format!("expected {n} tiers of diagrams, got {}", rows.len())));
        }
        let mut diagrams = Vec::with_capacity(n);
        for (k, tier) in rows.into_iter().enumerate() {
            let i = k + 1;
            if tier.len() != w.get(i) as usize {
                return Err(Error::DimensionMismatch(format!(
                    "tier {i} has {} diagrams but w_{i} = {}",
                    tier.len(),
                    w.get(i)
                )));
            }
            let mut ds = Vec::with_capacity(tier.len());
            for r in tier {
                let d = YoungDiagram::new(r, i)?;
                if d.width() as usize > n - i {
                    return Err(Error::InvalidDiagram(format!(
                        "diagram {:?} at tier {i} is wider than {}",
                        d.rows(),
                        n - i
                    )));
                }
                ds.push(d);
            }
            diagrams.push(ds);
        }
        Ok(Self { n, w: w.clone(), diagrams })
    }

    /// Parses `"i.α:[r1,r2,...];…"`; unlisted lines are empty, `""` or `"-"`
    /// is the all-empty tuple.
    pub fn parse(n: usize, w: &FramingVector, text: &str) -> Result<Self> {
        check_shape(n, w)?;
        let mut rows: Vec<Vec<Vec<u32>>> = (1..=n).map(|i| vec![Vec::new(); w.get(i) as usize]).collect();
        let text = text.trim();
        if !(text.is_empty() || text == "-") {
            for item in text.split(';') {
                let bad = || Error::Parse(format!("bad fixed-point item '{item}'"));
                let (line, diagram) = item.trim().split_once(':').ok_or_else(bad)?;
                let (tier, alpha) = line.split_once('.').ok_or_else(bad)?;
                let tier: usize = tier.trim().parse().map_err(|_| bad())?;
                let alpha: usize = alpha.trim().parse().map_err(|_| bad())?;
                let body = diagram.trim().strip_prefix('[').and_then(|s| s.strip_suffix(']')).ok_or_else(bad)?;
                let parts: Vec<u32> = if body.trim().is_empty() {
                    Vec::new()
                } else {
                    body.split(',').map(|x| x.trim().parse().map_err(|_| bad())).collect::<Result<_>>()?
                };
                if tier == 0 || tier > n || alpha == 0 || alpha > w.get(tier) as usize {
                    return Err(Error::Parse(format!("line {tier}.{alpha} does not exist")));
                }
                rows[tier - 1][alpha - 1] = parts;
            }
        }
        Self::new(n, w, rows)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn framing(&self) -> &FramingVector {
        &self.w
    }

    pub fn diagram(&self, line: LineIndex) -> &YoungDiagram {
        &self.diagrams[line.tier - 1][line.line - 1]
    }

    /// All framing lines in lexicographic order, including tier `n`.
    pub fn lines(&self) -> impl Iterator<Item = LineIndex> + '_ {
        self.diagrams
            .iter()
            .enumerate()
            .flat_map(|(k, ds)| (1..=ds.len()).map(move |a| LineIndex { tier: k + 1, line: a }))
    }

    pub fn lines_with_diagrams(&self) -> impl Iterator<Item = (LineIndex, &YoungDiagram)> + '_ {
        self.lines().map(move |l| (l, self.diagram(l)))
    }

    /// `dim V^α_{i;j}`: boxes of `Y_i^α` at `x = j`.
    pub fn local_dim(&self, line: LineIndex, j: i64) -> u32 {
        if j < 1 || j >= self.n as i64 {
            return 0;
        }
        self.diagram(line).column_height(j)
    }

    pub fn column_counts(&self) -> DimensionVector {
        let mut v = vec![0u32; self.n - 1];
        for (_, d) in self.lines_with_diagrams() {
            for c in d.cells() {
                v[c.x as usize - 1] += 1;
            }
        }
        DimensionVector(v)
    }
}

/// `i.α:[r1,...]` joined by `;`, empty diagrams omitted; the all-empty
/// tuple renders as `-`.
impl fmt::Display for FixedPointTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self
            .lines_with_diagrams()
            .filter(|(_, d)| !d.is_empty())
            .map(|(l, d)| {
                let rows: Vec<String> = d.rows().iter().map(u32::to_string).collect();
                format!("{l}:[{}]", rows.join(","))
            })
            .collect();
        if items.is_empty() {
            f.write_str("-")
        } else {
            f.write_str(&items.join(";"))
        }
    }
}

fn check_shape(n: usize, w: &FramingVector) -> Result<()> {
    if n == 0 {
        return Err(Error::DimensionMismatch("n must be positive".into()));
    }
    if w.0.len() != n {
        return Err(Error::DimensionMismatch(format!("framing vector {w} has length {}, expected {n}", w.0.len())));
    }
    Ok(())
}

/// Every fixed point with `column_counts = v`, ordered lexicographically by
/// line and, within a line, by descending column-height sequence.
pub fn enumerate_fixed_points(n: usize, w: &FramingVector, v: &DimensionVector) -> Result<Vec<FixedPointTuple>> {
    let mut out = Vec::new();
    for_each_fixed_point(n, w, v, |t| out.push(t.clone()))?;
    Ok(out)
}

/// Streaming form of [`enumerate_fixed_points`].
pub fn for_each_fixed_point(
    n: usize,
    w: &FramingVector,
    v: &DimensionVector,
    mut visit: impl FnMut(&FixedPointTuple),
) -> Result<()> {
    check_shape(n, w)?;
    if v.0.len() != n - 1 {
        return Err(Error::DimensionMismatch(format!(
            "dimension vector {v} has length {}, expected {}",
            v.0.len(),
            n - 1
        )));
    }
    let mut tuple = FixedPointTuple::empty(n, w)?;
    let lines: Vec<LineIndex> = tuple.lines().filter(|l| l.tier < n).collect();
    let mut search = Search { n, lines: &lines, remaining: v.0.clone(), heights: Vec::new() };
    search.line(0, &mut tuple, &mut visit);
    Ok(())
}

struct Search<'a> {
    n: usize,
    lines: &'a [LineIndex],
    remaining: Vec<u32>,
    heights: Vec<u32>,
}

impl Search<'_> {
    fn line(&mut self, k: usize, tuple: &mut FixedPointTuple, visit: &mut impl FnMut(&FixedPointTuple)) {
        // every tier below the next line's tier must already be exhausted
        let next_tier = self.lines.get(k).map_or(self.n, |l| l.tier);
        if self.remaining[..next_tier - 1].iter().any(|&r| r != 0) {
            return;
        }
        if k == self.lines.len() {
            visit(tuple);
            return;
        }
        let line = self.lines[k];
        let last_of_tier = self.lines.get(k + 1).is_none_or(|l| l.tier != line.tier);
        let width = self.n - line.tier;
        let first_cap = self.remaining[line.tier - 1];
        if last_of_tier {
            // no later line reaches x = tier
            self.column(k, 0, width, first_cap, first_cap, tuple, visit);
        } else {
            self.column(k, 0, width, 0, first_cap, tuple, visit);
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn column(
        &mut self,
        k: usize,
        c: usize,
        width: usize,
        lo: u32,
        hi: u32,
        tuple: &mut FixedPointTuple,
        visit: &mut impl FnMut(&FixedPointTuple),
    ) {
        let line = self.lines[k];
        if c == width {
            let d = YoungDiagram::from_column_heights(&self.heights, line.tier);
            let saved = std::mem::replace(&mut tuple.diagrams[line.tier - 1][line.line - 1], d);
            let heights = std::mem::take(&mut self.heights);
            self.line(k + 1, tuple, visit);
            self.heights = heights;
            tuple.diagrams[line.tier - 1][line.line - 1] = saved;
            return;
        }
        let x = line.tier + c;
        let cap = hi.min(self.remaining[x - 1]);
        if lo > cap {
            return;
        }
        for h in (lo..=cap).rev() {
            self.remaining[x - 1] -= h;
            self.heights.push(h);
            self.column(k, c + 1, width, 0, h, tuple, visit);
            self.heights.pop();
            self.remaining[x - 1] += h;
        }
    }
}
