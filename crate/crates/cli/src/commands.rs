use std::fmt::Write as _;

use handsaw::geometry::{attracting_dimensions, dim_q, tangent_character, verify_smallness};
use handsaw::graded::{gt_character, split_by_coset, strata, RationalSpectralData, SpectralData};
use handsaw::kl::{composition_multiplicity_detailed, kl_polynomial, KLCache, Permutation};
use handsaw::{
    enumerate_fixed_points, verify_betti, DimensionVector, Error, FixedPointTuple, FramingVector, LaurentPolynomial,
    Pyramid, Result,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::args::{GridArgs, KlArgs, PyramidArgs, QuiverArgs, SpectralArgs, TangentArgs};
use crate::render;

/// Result of one command: text for the terminal, a JSON object, and
/// whether any check it ran failed.
#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub passed: bool,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Self { text, json, passed: true }
    }
}

fn framing(n: usize, w: &[u32]) -> Result<FramingVector> {
    if n == 0 || w.len() != n {
        return Err(Error::DimensionMismatch(format!("--w needs {n} entries, got {}", w.len())));
    }
    Ok(FramingVector(w.to_vec()))
}

/// A single value is applied to every coordinate.
fn cutoff(n: usize, v: &[u32], flag: &str) -> Result<DimensionVector> {
    let len = n.saturating_sub(1);
    match v.len() {
        l if l == len => Ok(DimensionVector(v.to_vec())),
        1 => Ok(DimensionVector(vec![v[0]; len])),
        0 if len == 0 => Ok(DimensionVector(Vec::new())),
        l => Err(Error::DimensionMismatch(format!("{flag} needs {len} entries, got {l}"))),
    }
}

pub fn pyramid_info(args: &PyramidArgs) -> Result<Outcome> {
    let p = match (&args.columns, &args.rows) {
        (Some(c), _) => Pyramid::from_columns(c)?,
        (None, Some(r)) => Pyramid::from_row_lengths(r)?,
        (None, None) => return Err(Error::InvalidPyramid("give --columns or --pyramid".into())),
    };
    let sigma = p.shift_matrix();
    let n = p.height();
    let mut text = String::new();
    let cols: Vec<String> = p.columns().iter().map(u32::to_string).collect();
    writeln!(text, "columns        {}", cols.join(",")).unwrap();
    writeln!(text, "height n       {n}").unwrap();
    writeln!(text, "level l        {}", p.level()).unwrap();
    writeln!(text, "pivot k        {}", p.pivot()).unwrap();
    writeln!(text, "row lengths p  {}", DimensionVector(p.rows().to_vec())).unwrap();
    writeln!(text, "N              {}", p.total()).unwrap();
    writeln!(text, "shift matrix").unwrap();
    for row in sigma.rows() {
        let cells: Vec<String> = row.iter().map(|s| format!("{s:>3}")).collect();
        writeln!(text, "  {}", cells.join("")).unwrap();
    }
    for i in 1..n {
        writeln!(
            text,
            "  s_{{{},{}}} = {}   s_{{{},{}}} = {}",
            i + 1,
            i,
            sigma.get(i + 1, i),
            i,
            i + 1,
            sigma.get(i, i + 1)
        )
        .unwrap();
    }
    writeln!(text, "gr generators  {}", p.gr_generator_count()).unwrap();
    let json = json!({
        "columns": p.columns(),
        "n": n,
        "level": p.level(),
        "pivot": p.pivot(),
        "rows": p.rows(),
        "N": p.total(),
        "shift_matrix": sigma.rows(),
        "gr_generators": p.gr_generator_count(),
    });
    Ok(Outcome::ok(text, json))
}

pub fn fixed_points(args: &QuiverArgs) -> Result<Outcome> {
    let w = framing(args.n, &args.w)?;
    let v = cutoff(args.n, &args.v, "--v")?;
    let points = enumerate_fixed_points(args.n, &w, &v)?;
    let mut text = format!("Q(v={v}, w={w}): {} fixed points\n", points.len());
    let mut list = Vec::new();
    for t in &points {
        let a = attracting_dimensions(t);
        writeln!(text, "  {:<28} dimS {:>3}  dimU {:>3}", t.to_string(), a.dim_s, a.dim_u).unwrap();
        list.push(json!({"tuple": t.to_string(), "dim_s": a.dim_s, "dim_u": a.dim_u}));
    }
    let json = json!({
        "n": args.n,
        "w": w.0,
        "v": v.0,
        "dim_q": dim_q(&v, &w),
        "count": points.len(),
        "fixed_points": list,
    });
    Ok(Outcome::ok(text, json))
}

pub fn tangent(args: &TangentArgs) -> Result<Outcome> {
    let w = framing(args.n, &args.w)?;
    let t = FixedPointTuple::parse(args.n, &w, &args.tuple)?;
    let v = t.column_counts();
    let ch = tangent_character(&t);
    let a = attracting_dimensions(&t);
    let mut text = format!("fixed point {t}  v = {v}  w = {w}\n");
    for ((src, dst), powers) in ch.by_pair() {
        let p = LaurentPolynomial::from_terms(powers.iter().map(|&k| (k, 1)));
        writeln!(text, "  {src} -> {dst}: {p}").unwrap();
    }
    writeln!(text, "terms {}  dim Q {}  dimS {}  dimU {}", ch.len(), dim_q(&v, &w), a.dim_s, a.dim_u).unwrap();
    let terms: Vec<Value> = ch
        .terms()
        .iter()
        .map(|x| json!({"src": x.src.to_string(), "dst": x.dst.to_string(), "tpower": x.tpower}))
        .collect();
    let json = json!({
        "tuple": t.to_string(),
        "v": v.0,
        "w": w.0,
        "dim_q": dim_q(&v, &w),
        "dim_s": a.dim_s,
        "dim_u": a.dim_u,
        "terms": terms,
    });
    Ok(Outcome::ok(text, json))
}

pub fn smallness(args: &GridArgs) -> Result<Outcome> {
    let w = framing(args.n, &args.w)?;
    let vmax = cutoff(args.n, &args.vmax, "--vmax")?;
    let r = verify_smallness(args.n, &w, &vmax)?;
    let mut text = format!("smallness for w = {w}, v <= {vmax}\n");
    let mut rows = Vec::new();
    for row in &r.rows {
        writeln!(
            text,
            "  v = {:<10} dim Q {:>3}  max dimU {:>3}  fixed points {:>5}  {}  at {}",
            row.v.to_string(),
            row.dim_q,
            row.max_dim_u,
            row.fixed_points,
            if row.holds { "ok" } else { "VIOLATED" },
            row.extremal
        )
        .unwrap();
        rows.push(json!({
            "v": row.v.0,
            "dim_q": row.dim_q,
            "max_dim_u": row.max_dim_u,
            "fixed_points": row.fixed_points,
            "extremal": row.extremal.to_string(),
            "holds": row.holds,
        }));
    }
    let stratum_violations: Vec<Value> = r
        .stratum_violations
        .iter()
        .map(|s| {
            json!({
                "v": s.v.0,
                "v_prime": s.v_prime.0,
                "gamma": s.gamma.iter().map(|g| g.0.clone()).collect::<Vec<_>>(),
                "fiber_dim": s.fiber_dim,
                "codim": s.codim,
            })
        })
        .collect();
    for s in &r.stratum_violations {
        writeln!(text, "  stratum v' = {} in v = {}: fiber {} codim {}", s.v_prime, s.v, s.fiber_dim, s.codim).unwrap();
    }
    writeln!(text, "strata checked {}", r.strata_checked).unwrap();
    writeln!(text, "{}", if r.passed() { "PASS" } else { "FAIL" }).unwrap();
    let json = json!({
        "w": w.0,
        "vmax": vmax.0,
        "passed": r.passed(),
        "rows": rows,
        "violations": r.violations.iter().map(|v| v.0.clone()).collect::<Vec<_>>(),
        "strata_checked": r.strata_checked,
        "stratum_violations": stratum_violations,
    });
    Ok(Outcome { text, json, passed: r.passed() })
}

pub fn betti(args: &GridArgs) -> Result<Outcome> {
    let w = framing(args.n, &args.w)?;
    let vmax = cutoff(args.n, &args.vmax, "--vmax")?;
    let r = verify_betti(args.n, &w, &vmax)?;
    let mut text = format!("Poincare series for n = {}, w = {w}, v <= {vmax}\n", args.n);
    text.push_str("fixed points:\n");
    text.push_str(&render::series_text(&r.lhs, "  "));
    text.push_str("product:\n");
    text.push_str(&render::series_text(&r.rhs, "  "));
    for v in &r.mismatches {
        writeln!(text, "mismatch at {v}").unwrap();
    }
    writeln!(text, "{}", if r.equal { "PASS" } else { "FAIL" }).unwrap();
    let json = json!({
        "lhs": render::series(&r.lhs),
        "rhs": render::series(&r.rhs),
        "equal": r.equal,
        "mismatches": r.mismatches.iter().map(|v| v.0.clone()).collect::<Vec<_>>(),
    });
    Ok(Outcome { text, json, passed: r.equal })
}

/// Integer spectral data, one entry per coset of the zeros.
fn spectral_classes(args: &SpectralArgs) -> Result<(Vec<(BigRational, SpectralData)>, DimensionVector)> {
    let pyramid = match (&args.rows, &args.columns) {
        (Some(r), _) => Pyramid::from_row_lengths(r)?,
        (None, Some(c)) => Pyramid::from_columns(c)?,
        (None, None) => return Err(Error::InvalidPyramid("give --pyramid or --columns".into())),
    };
    let n = pyramid.height();
    let vmax = cutoff(n, &args.vmax, "--vmax")?;
    let raw = RationalSpectralData::parse(n, &args.zeros)?;
    for (i, (z, &p)) in raw.zeros.iter().zip(pyramid.rows()).enumerate() {
        if z.len() != p as usize {
            return Err(Error::InvalidSpectralData(format!("tier {} has {} zeros, row length is {p}", i + 1, z.len())));
        }
    }
    let classes = split_by_coset(&raw)?;
    if let [only] = classes.as_slice() {
        if only.shift == BigRational::from_integer(BigInt::from(0)) {
            let data = SpectralData::for_pyramid(&pyramid, only.data.zeros().to_vec())?;
            return Ok((vec![(only.shift.clone(), data)], vmax));
        }
    }
    Ok((classes.into_iter().map(|c| (c.shift, c.data)).collect(), vmax))
}

fn class_header(text: &mut String, shift: &BigRational, data: &SpectralData, several: bool) {
    if several || *shift != BigRational::from_integer(BigInt::from(0)) {
        writeln!(text, "coset shift {shift}: zeros {data}").unwrap();
    } else {
        writeln!(text, "zeros {data}").unwrap();
    }
}

pub fn strata_cmd(args: &SpectralArgs) -> Result<Outcome> {
    let (classes, vmax) = spectral_classes(args)?;
    let several = classes.len() > 1;
    let mut text = format!("l-dominant strata, v <= {vmax}\n");
    let mut list = Vec::new();
    for (shift, data) in &classes {
        class_header(&mut text, shift, data, several);
        for st in strata(data, &vmax)? {
            writeln!(
                text,
                "  v = {:<8} {:<32} {}",
                st.graded.underlying().to_string(),
                st.graded.to_string(),
                st.weight
            )
            .unwrap();
            list.push(json!({
                "coset_shift": shift.to_string(),
                "graded_dims": render::graded(&st.graded),
                "weight": render::weight(&st.weight),
            }));
        }
    }
    let json = json!({"vmax": vmax.0, "strata": list});
    Ok(Outcome::ok(text, json))
}

pub fn character(args: &SpectralArgs) -> Result<Outcome> {
    let (classes, vmax) = spectral_classes(args)?;
    let several = classes.len() > 1;
    let mut text = format!("Gelfand-Tsetlin character (fixed-point counts), v <= {vmax}\n");
    let mut list = Vec::new();
    for (shift, data) in &classes {
        class_header(&mut text, shift, data, several);
        let mut entries: Vec<_> = gt_character(data, &vmax)?
            .into_iter()
            .map(|(weight, entry)| (entry.graded_dims[0].underlying(), weight, entry))
            .collect();
        entries.sort_by(|a, b| (&a.0, &a.1).cmp(&(&b.0, &b.1)));
        for (v, weight, entry) in entries {
            writeln!(text, "  {:>4} x {}   v = {v}", entry.multiplicity, weight).unwrap();
            list.push(json!({
                "coset_shift": shift.to_string(),
                "weight": render::weight(&weight),
                "multiplicity": entry.multiplicity,
                "graded_dims": entry.graded_dims.iter().map(render::graded).collect::<Vec<_>>(),
            }));
        }
    }
    let json = json!({"vmax": vmax.0, "entries": list});
    Ok(Outcome::ok(text, json))
}

pub fn kl(args: &KlArgs) -> Result<Outcome> {
    let x = Permutation::parse(&args.x)?;
    let w = Permutation::parse(&args.w)?;
    for p in [&x, &w] {
        if p.rank() != args.n {
            return Err(Error::InvalidPermutation(format!("{p} is not in S_{}", args.n)));
        }
    }
    let mut cache = KLCache::new();
    let p = kl_polynomial(&x, &w, &mut cache)?;
    let text = format!("P_{{{x},{w}}}(q) = {}\n", p.render("q"));
    let json = json!({
        "n": args.n,
        "x": x.to_string(),
        "w": w.to_string(),
        "polynomial": p.render("q"),
        "coefficients": render::poly(&p),
        "value_at_one": render::bigint(&p.eval_at_one()),
    });
    Ok(Outcome::ok(text, json))
}

pub fn multiplicity(args: &SpectralArgs) -> Result<Outcome> {
    let (classes, vmax) = spectral_classes(args)?;
    let several = classes.len() > 1;
    let mut cache = KLCache::new();
    let mut text = format!("composition multiplicities [M(P) : L(Q)], v <= {vmax}\n");
    let mut list = Vec::new();
    for (shift, data) in &classes {
        class_header(&mut text, shift, data, several);
        writeln!(text, "  {:<8} {:>4}  {:<10} {:<10} l-weight", "v", "mult", "w_LR", "x_LR").unwrap();
        for st in strata(data, &vmax)? {
            let d = composition_multiplicity_detailed(data, &st.weight, &mut cache)?;
            let (w_lr, x_lr) = d
                .representatives
                .as_ref()
                .map_or((String::from("-"), String::from("-")), |(a, b)| (a.to_string(), b.to_string()));
            writeln!(
                text,
                "  {:<8} {:>4}  {:<10} {:<10} {}",
                st.graded.underlying().to_string(),
                d.multiplicity,
                w_lr,
                x_lr,
                st.weight
            )
            .unwrap();
            list.push(json!({
                "coset_shift": shift.to_string(),
                "weight": render::weight(&st.weight),
                "graded_dims": render::graded(&st.graded),
                "multiplicity": d.multiplicity,
                "w_lr": w_lr,
                "x_lr": x_lr,
            }));
        }
    }
    let json = json!({"vmax": vmax.0, "strata": list});
    Ok(Outcome::ok(text, json))
}
