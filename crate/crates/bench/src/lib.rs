//! Shared inputs for the benchmarks.

use handsaw::{DimensionVector, FramingVector};

/// `(n, w, v)` cases of increasing size for the fixed-point enumeration.
pub fn enumeration_cases() -> Vec<(usize, FramingVector, DimensionVector)> {
    vec![
        (3, FramingVector(vec![1, 1, 1]), DimensionVector(vec![3, 3])),
        (4, FramingVector(vec![1, 1, 1, 1]), DimensionVector(vec![2, 2, 2])),
        (4, FramingVector(vec![1, 2, 2, 0]), DimensionVector(vec![2, 3, 2])),
        (5, FramingVector(vec![1, 1, 1, 1, 1]), DimensionVector(vec![2, 2, 2, 2])),
    ]
}

/// Label such as `n4 w(1,2,2,0) v(2,3,2)`.
pub fn label(n: usize, w: &FramingVector, v: &DimensionVector) -> String {
    format!("n{n} w{w} v{v}")
}
