//! Text and JSON renderings of library values.

use handsaw::graded::GradedDimVector;
use handsaw::{DimensionVector, EllWeight, LaurentPolynomial, TruncatedSeries};
use num_bigint::BigInt;
use serde_json::{json, Value};

pub fn bigint(c: &BigInt) -> Value {
    i64::try_from(c).map_or_else(|_| Value::String(c.to_string()), Value::from)
}

/// `[[exponent, coefficient], …]`, exponents ascending.
pub fn poly(p: &LaurentPolynomial) -> Value {
    Value::Array(p.terms().map(|(e, c)| json!([e, bigint(c)])).collect())
}

pub fn series(s: &TruncatedSeries) -> Value {
    Value::Array(s.terms().map(|(v, p)| json!({"v": v, "poly": p.to_string(), "coefficients": poly(p)})).collect())
}

pub fn series_text(s: &TruncatedSeries, indent: &str) -> String {
    s.terms().map(|(v, p)| format!("{indent}{}: {p}\n", DimensionVector(v.to_vec()))).collect()
}

/// Per tier, a list of `[root, exponent]` pairs.
pub fn weight(e: &EllWeight) -> Value {
    Value::Array(e.tiers.iter().map(|t| Value::Array(t.factors().map(|(m, k)| json!([m, k])).collect())).collect())
}

pub fn graded(g: &GradedDimVector) -> Value {
    let triples = |m: &std::collections::BTreeMap<(usize, i64), u32>| -> Value {
        Value::Array(m.iter().map(|(&(i, k), &d)| json!([i, k, d])).collect())
    };
    json!({
        "v": g.underlying().0,
        "vdims": triples(&g.vdims),
        "wdims": triples(&g.wdims),
    })
}

pub fn dims(v: &DimensionVector) -> Value {
    json!(v.0)
}
