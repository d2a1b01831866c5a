//! One function per subcommand, each producing a [`Report`].

use std::collections::BTreeMap;
use std::io::Read;
use std::path::Path;

use fistab_core::bounds::{
    abutment_stability, abutment_stability_degenerate, einfty_stability, fisharp_degree,
    page_stability, table1_row,
};
use fistab_core::character::{decompose_with, mn_character, CharacterTable};
use fistab_core::charpoly::fit_char_polynomial;
use fistab_core::dimpoly::fit_dim_polynomial;
use fistab_core::fi::{detect_stability, length_of, quotient_betti, weight_of, FiSequence};
use fistab_core::induction::{
    kunneth_decomposition, kunneth_power, m_module as free_module, m_regular, wreath_invariant_dim,
};
use fistab_core::os;
use fistab_core::{
    BoundParams, CharPolynomial, ClassFunction, IntPolynomial, IrrDecomposition, Partition,
    StabilityType, Table1Example,
};
use serde_json::{json, Map, Value};

use crate::error::{CliError, CliResult};
use crate::formats::{
    bigint_to_json, class_function_from_json, class_function_to_json, decomposition_to_json,
    parse_partition, parse_rational, partition_array, partition_key, rational_to_json,
    sequence_from_json, sequence_to_json, stability_label, stability_to_json,
};
use crate::report::{Report, Table};

/// Environment variable replacing the desk-scale limit on `n` for `os-scan`.
pub const MAX_N_ENV: &str = "FISTAB_MAX_N";

pub fn read_json(path: &Path) -> CliResult<Value> {
    let io_err = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io_err)?;
        s
    } else {
        std::fs::read_to_string(path).map_err(io_err)?
    };
    parse_json(&text)
}

pub fn parse_json(text: &str) -> CliResult<Value> {
    serde_json::from_str(text).map_err(|e| CliError::format(format!("invalid JSON: {e}")))
}

fn stability_json(s: StabilityType) -> Value {
    json!([s.inj, s.surj])
}

fn decomposition_rows(table: &mut Table, n: u32, d: &IrrDecomposition) {
    for (lambda, m) in d.iter() {
        table.row(vec![
            n.to_string(),
            partition_key(lambda),
            partition_key(&lambda.tail()),
            m.to_string(),
        ]);
    }
}

fn sequence_table(title: &str, seq: &FiSequence<IrrDecomposition>) -> Table {
    let mut t = Table::new(title, &["n", "partition", "unpadded", "multiplicity"]);
    for (n, d) in seq.iter() {
        decomposition_rows(&mut t, n, d);
    }
    t
}

pub fn character(lambda: &str, mu: Option<&str>) -> CliResult<Report> {
    let lambda = parse_partition(lambda)?;
    if let Some(mu) = mu {
        let mu = parse_partition(mu)?;
        let value = mn_character(&lambda, &mu)?;
        let mut t = Table::new("character value", &["lambda", "mu", "value"]);
        t.row(vec![
            partition_key(&lambda),
            partition_key(&mu),
            value.to_string(),
        ]);
        return Ok(Report {
            json: json!({
                "lambda": partition_array(&lambda),
                "mu": partition_array(&mu),
                "value": value,
            }),
            tables: vec![t],
        });
    }
    let chi = ClassFunction::irreducible(&lambda);
    let mut t = Table::new(format!("character of V_{lambda}"), &["class", "value"]);
    for (c, v) in chi.iter() {
        t.row(vec![partition_key(c), v.to_string()]);
    }
    Ok(Report {
        json: json!({
            "lambda": partition_array(&lambda),
            "dimension": bigint_to_json(&lambda.dimension()),
            "character": class_function_to_json(&chi),
        }),
        tables: vec![t],
    })
}

pub fn decompose(doc: &Value) -> CliResult<Report> {
    let f = class_function_from_json(doc)?;
    let n = f.n();
    let d = decompose_with(&CharacterTable::new(n), &f)?;
    let mut t = Table::new(
        format!("decomposition over S_{n}"),
        &["n", "partition", "unpadded", "multiplicity"],
    );
    decomposition_rows(&mut t, n, &d);
    Ok(Report {
        json: json!({
            "n": n,
            "dimension": bigint_to_json(&d.dimension()),
            "decomposition": decomposition_to_json(&d),
        }),
        tables: vec![t],
    })
}

fn check_window(n_min: u32, n_max: u32) -> CliResult<()> {
    if n_min > n_max {
        return Err(fistab_core::Error::Domain(format!("empty window [{n_min}, {n_max}]")).into());
    }
    Ok(())
}

pub fn m_module(
    lambda: Option<&str>,
    regular: Option<u32>,
    n_min: u32,
    n_max: u32,
) -> CliResult<Report> {
    check_window(n_min, n_max)?;
    let (label, seq) = match (lambda, regular) {
        (Some(l), _) => {
            let l = parse_partition(l)?;
            let seq = FiSequence::tabulate(n_min, n_max, |n| free_module(&l, n))?;
            (format!("M({l})"), seq)
        }
        (None, Some(m)) => (
            format!("M({m})"),
            FiSequence::tabulate(n_min, n_max, |n| m_regular(m, n))?,
        ),
        (None, None) => unreachable!("clap enforces a module"),
    };
    let mut doc = sequence_to_json(&seq);
    doc["module"] = json!(label);
    Ok(Report {
        json: doc,
        tables: vec![sequence_table(&label, &seq)],
    })
}

pub fn stability_scan(doc: &Value) -> CliResult<Report> {
    let seq = sequence_from_json(doc)?;
    let rep = detect_stability(&seq)?;
    let mut shape = Map::new();
    let mut t = Table::new(
        stability_label(&rep),
        &["n", "weight", "length", "unpadded multiplicities"],
    );
    for ((n, d), (_, table)) in seq.iter().zip(&rep.tables) {
        let length = length_of(d).ok();
        shape.insert(
            n.to_string(),
            json!({ "weight": weight_of(d), "length": length }),
        );
        t.row(vec![
            n.to_string(),
            weight_of(d).to_string(),
            length.map_or("-".into(), |l| l.to_string()),
            table_text(table),
        ]);
    }
    let mut out = stability_to_json(&rep);
    out["shape"] = Value::Object(shape);
    Ok(Report {
        json: out,
        tables: vec![t],
    })
}

fn table_text(t: &BTreeMap<Partition, u64>) -> String {
    let cells: Vec<String> = t.iter().map(|(l, m)| format!("{l}:{m}")).collect();
    cells.join(" ")
}

fn charpoly_json(q: &CharPolynomial) -> Value {
    let terms: Vec<Value> = q
        .terms()
        .iter()
        .map(|(m, c)| json!({ "exponents": m, "coefficient": rational_to_json(c) }))
        .collect();
    json!({
        "polynomial": q.to_string(),
        "terms": terms,
        "weighted_degree": q.weighted_degree(),
        "variable_count": q.variable_count(),
    })
}

fn charpoly_table(q: &CharPolynomial) -> Table {
    let mut t = Table::new(
        format!("character polynomial {q}"),
        &["exponents", "coefficient"],
    );
    for (m, c) in q.terms() {
        let exps: Vec<String> = m.iter().map(u32::to_string).collect();
        t.row(vec![format!("({})", exps.join(",")), c.to_string()]);
    }
    t
}

pub fn fit_charpoly(doc: &Value, degree_bound: u32) -> CliResult<Report> {
    let seq = sequence_from_json(doc)?;
    let (a, b) = seq.window();
    let chars = FiSequence::tabulate(a, b, |n| seq.get(n).expect("in window").character())?;
    let q = fit_char_polynomial(&chars, degree_bound)?;
    let mut out = charpoly_json(&q);
    out["window"] = json!([a, b]);
    out["degree_bound"] = json!(degree_bound);
    Ok(Report {
        json: out,
        tables: vec![charpoly_table(&q)],
    })
}

pub fn dims_from_json(doc: &Value) -> CliResult<BTreeMap<u32, u64>> {
    let obj = doc
        .as_object()
        .ok_or_else(|| CliError::format("dimensions must be a JSON object {\"n\": dim}"))?;
    obj.iter()
        .map(|(k, v)| {
            let n = k
                .parse()
                .map_err(|_| CliError::format(format!("key {k:?} is not an integer")))?;
            let d = v.as_u64().ok_or_else(|| {
                CliError::format(format!("dimension at {k} must be a nonnegative integer"))
            })?;
            Ok((n, d))
        })
        .collect()
}

/// Parses `2:1,3:3,4:6`.
pub fn parse_dims(text: &str) -> CliResult<BTreeMap<u32, u64>> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|pair| {
            let bad = || CliError::format(format!("expected n:dim, got {pair:?}"));
            let (n, d) = pair.split_once(':').ok_or_else(bad)?;
            Ok((
                n.trim().parse().map_err(|_| bad())?,
                d.trim().parse().map_err(|_| bad())?,
            ))
        })
        .collect()
}

fn dimpoly_json(p: &IntPolynomial) -> Value {
    let coeffs: Vec<Value> = p.coefficients().iter().map(rational_to_json).collect();
    json!({ "polynomial": p.to_string(), "binomial_coefficients": coeffs, "degree": p.degree() })
}

pub fn fit_dimpoly(dims: &BTreeMap<u32, u64>, degree_bound: u32) -> CliResult<Report> {
    let p = fit_dim_polynomial(dims, degree_bound)?;
    let mut t = Table::new(
        format!("dimension polynomial {p}"),
        &["n", "dimension", "fitted"],
    );
    for (&n, &d) in dims {
        t.row(vec![
            n.to_string(),
            d.to_string(),
            p.evaluate(n as i64).to_string(),
        ]);
    }
    let mut out = dimpoly_json(&p);
    out["degree_bound"] = json!(degree_bound);
    out["points"] = json!(dims.len());
    Ok(Report {
        json: out,
        tables: vec![t],
    })
}

pub struct BoundsArgs<'a> {
    pub alpha: &'a str,
    pub beta: &'a str,
    pub i: u32,
    /// `(r, p, q)`.
    pub page: Option<(u32, u32, u32)>,
    pub degenerate_at: Option<u32>,
    pub fisharp: bool,
}

pub fn bounds(args: &BoundsArgs<'_>) -> CliResult<Report> {
    let params = BoundParams::new(parse_rational(args.alpha)?, parse_rational(args.beta)?)?;
    let i = args.i;
    let mut out = json!({
        "alpha": rational_to_json(params.alpha()),
        "beta": rational_to_json(params.beta()),
        "i": i,
    });
    let mut t = Table::new(
        format!(
            "bounds for alpha={}, beta={}, i={i}",
            params.alpha(),
            params.beta()
        ),
        &["quantity", "inj", "surj"],
    );
    if args.fisharp {
        let d = fisharp_degree(&params, i)?;
        let ty = StabilityType::new(0, d);
        out["fisharp_degree"] = json!(d);
        out["stability_type"] = stability_json(ty);
        out["stability_degree"] = json!(ty.stability_degree());
        t.row(vec!["FI# abutment".into(), "0".into(), d.to_string()]);
    } else {
        let abut = abutment_stability(&params, i)?;
        out["stability_type"] = stability_json(abut);
        out["stability_degree"] = json!(abut.stability_degree());
        let mut einfty = Vec::new();
        for p in 0..=i {
            let s = einfty_stability(&params, i, p)?;
            einfty.push(json!({ "p": p, "q": i - p, "stability_type": stability_json(s) }));
            t.row(vec![
                format!("E_inf^{{{p},{}}}", i - p),
                s.inj.to_string(),
                s.surj.to_string(),
            ]);
        }
        out["einfty"] = Value::Array(einfty);
        t.row(vec![
            "abutment".into(),
            abut.inj.to_string(),
            abut.surj.to_string(),
        ]);
        if let Some(r) = args.degenerate_at {
            let s = abutment_stability_degenerate(&params, i, r)?;
            out["degenerate"] = json!({ "page": r, "stability_type": stability_json(s) });
            t.row(vec![
                format!("abutment (E_{r} = E_inf)"),
                s.inj.to_string(),
                s.surj.to_string(),
            ]);
        }
    }
    if let Some((r, p, q)) = args.page {
        let s = page_stability(&params, p, q, r)?;
        out["page"] = json!({ "r": r, "p": p, "q": q, "stability_type": stability_json(s) });
        t.row(vec![
            format!("E_{r}^{{{p},{q}}}"),
            s.inj.to_string(),
            s.surj.to_string(),
        ]);
    }
    Ok(Report {
        json: out,
        tables: vec![t],
    })
}

pub fn table1(row: Option<&str>, i: u32, i_max: Option<u32>) -> CliResult<Report> {
    let rows: Vec<Table1Example> = match row {
        Some(name) => vec![name.parse()?],
        None => Table1Example::ALL.to_vec(),
    };
    let top = i_max.unwrap_or(i);
    check_window(i, top)?;
    let mut t = Table::new(
        "stable ranges",
        &[
            "row",
            "i",
            "N",
            "N_derived",
            "length",
            "char_degree",
            "weight",
            "stability_type",
        ],
    );
    let mut docs = Vec::new();
    for ex in &rows {
        for deg in i..=top {
            let r = table1_row(*ex, deg);
            docs.push(json!({
                "row": ex.name(),
                "i": deg,
                "N": r.n_table,
                "N_derived": r.n_derived,
                "length": r.length_bound,
                "char_degree": r.char_degree_bound,
                "weight": r.weight,
                "stability_type": stability_json(r.stability_type),
            }));
            t.row(vec![
                ex.name().into(),
                deg.to_string(),
                r.n_table.to_string(),
                r.n_derived.to_string(),
                r.length_bound.to_string(),
                r.char_degree_bound.to_string(),
                r.weight.to_string(),
                r.stability_type.to_string(),
            ]);
        }
    }
    let json = if docs.len() == 1 {
        docs.pop().expect("one row")
    } else {
        Value::Array(docs)
    };
    Ok(Report {
        json,
        tables: vec![t],
    })
}

/// Largest `n` scanned without `--allow-large`.
pub fn desk_limit(k: usize) -> u32 {
    if let Some(n) = std::env::var(MAX_N_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
    {
        return n;
    }
    if k <= 2 {
        10
    } else {
        8
    }
}

pub fn os_scan(
    n_min: u32,
    n_max: u32,
    k: usize,
    a_max: u32,
    allow_large: bool,
) -> CliResult<Report> {
    check_window(n_min, n_max)?;
    let limit = desk_limit(k);
    if n_max > limit && !allow_large {
        return Err(CliError::Limit(format!(
            "n_max = {n_max} exceeds the desk-scale limit {limit} for k = {k}; \
             pass --allow-large or set {MAX_N_ENV}"
        )));
    }
    if n_min == 0 {
        return Err(fistab_core::Error::Domain("os-scan needs n_min >= 1".into()).into());
    }
    let decomps: Vec<IrrDecomposition> = (n_min..=n_max)
        .map(|n| os::decomposition_with(&CharacterTable::new(n), k))
        .collect::<fistab_core::Result<_>>()?;
    let seq = FiSequence::new(n_min, decomps)?;
    let mut tables = vec![sequence_table(&format!("H^{k}(C_n) decompositions"), &seq)];

    let mut shape = Map::new();
    let mut shape_t = Table::new(
        "weight, length and Betti numbers",
        &["n", "weight", "length", "betti", "quotient_betti"],
    );
    let mut betti = BTreeMap::new();
    for (n, d) in seq.iter() {
        let b = os::betti(n, k);
        betti.insert(n, b);
        let length = length_of(d).ok();
        shape.insert(
            n.to_string(),
            json!({ "weight": weight_of(d), "length": length, "quotient_betti": quotient_betti(d) }),
        );
        shape_t.row(vec![
            n.to_string(),
            weight_of(d).to_string(),
            length.map_or("-".into(), |l| l.to_string()),
            b.to_string(),
            quotient_betti(d).to_string(),
        ]);
    }
    tables.push(shape_t);

    let mut out = json!({ "k": k, "window": [n_min, n_max] });
    out["sequence"] = sequence_to_json(&seq);
    out["shape"] = Value::Object(shape);
    out["betti"] = Value::Object(
        betti
            .iter()
            .map(|(n, b)| (n.to_string(), json!(b)))
            .collect(),
    );

    match detect_stability(&seq) {
        Ok(rep) => {
            let mut st = Table::new(stability_label(&rep), &["unpadded", "multiplicity"]);
            for (l, m) in &rep.stable_multiplicities {
                st.row(vec![partition_key(l), m.to_string()]);
            }
            tables.push(st);
            out["stability"] = stability_to_json(&rep);
            // fit on the range where the multiplicities are already constant
            let degree_bound = 2 * k as u32;
            match rep.stable_from {
                Some(from) => {
                    let chars = FiSequence::tabulate(from, n_max, |n| os::character(n, k))?;
                    match fit_char_polynomial(&chars, degree_bound) {
                        Ok(q) => {
                            let mut doc = charpoly_json(&q);
                            doc["window"] = json!([from, n_max]);
                            doc["degree_bound"] = json!(degree_bound);
                            out["char_polynomial"] = doc;
                            tables.push(charpoly_table(&q));
                        }
                        Err(e) => out["char_polynomial"] = json!({ "error": e.to_string() }),
                    }
                }
                None => {
                    out["char_polynomial"] = json!({ "error": "no stable range inside the window" })
                }
            }
        }
        Err(e) => out["stability"] = json!({ "error": e.to_string() }),
    }
    match fit_dim_polynomial(&betti, 2 * k as u32) {
        Ok(p) => out["dim_polynomial"] = dimpoly_json(&p),
        Err(e) => out["dim_polynomial"] = json!({ "error": e.to_string() }),
    }

    // maps n → n+1 with both ends inside the window
    let mut co = Vec::new();
    let mut co_t = Table::new(
        "coinvariant maps (V_n)_{S_{n-a}} -> (V_{n+1})_{S_{n+1-a}}",
        &[
            "a",
            "n",
            "dim_n",
            "dim_n+1",
            "rank",
            "injective",
            "surjective",
        ],
    );
    for a in 0..=a_max {
        for n in n_min.max(a)..n_max {
            let r = os::coinvariant_report(n, a, k)?;
            co.push(json!({
                "a": a,
                "n": n,
                "dims": [r.dims.0, r.dims.1],
                "image_rank": r.image_rank,
                "injective": r.injective,
                "surjective": r.surjective,
            }));
            co_t.row(vec![
                a.to_string(),
                n.to_string(),
                r.dims.0.to_string(),
                r.dims.1.to_string(),
                r.image_rank.to_string(),
                r.injective.to_string(),
                r.surjective.to_string(),
            ]);
        }
    }
    out["coinvariants"] = Value::Array(co);
    tables.push(co_t);
    Ok(Report { json: out, tables })
}

/// Parses `1,2,1`.
pub fn parse_graded_dims(text: &str) -> CliResult<Vec<u64>> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| CliError::format(format!("malformed graded dimensions {text:?}")))
        })
        .collect()
}

pub fn wreath_scan(graded_dims: &[u64], i_max: u32, n_max: u32) -> CliResult<Report> {
    let mut t = Table::new(
        format!("dim H^i of the wreath product, graded dims {graded_dims:?}"),
        &["i", "n", "dim"],
    );
    let mut rows = Vec::new();
    for i in 0..=i_max {
        let mut values = Map::new();
        let mut seq = Vec::new();
        for n in 1..=n_max {
            let v = wreath_invariant_dim(graded_dims, n, i)?;
            values.insert(n.to_string(), json!(v));
            seq.push((n, v));
            t.row(vec![i.to_string(), n.to_string(), v.to_string()]);
        }
        // smallest N < n_max with constant values on [N, n_max]
        let last = seq.last().map(|&(_, v)| v);
        let mut from = n_max;
        for &(n, v) in seq.iter().rev().skip(1) {
            if Some(v) != last {
                break;
            }
            from = n;
        }
        let constant_from = (from < n_max).then_some(from);
        rows.push(json!({ "i": i, "values": values, "constant_from": constant_from }));
    }
    Ok(Report {
        json: json!({ "graded_dims": graded_dims, "n_max": n_max, "degrees": rows }),
        tables: vec![t],
    })
}

pub fn kunneth(graded_dims: &[u64], n: u32, i: u32) -> CliResult<Report> {
    let chi = kunneth_power(graded_dims, n, i)?;
    let d = kunneth_decomposition(graded_dims, n, i)?;
    let trivial = wreath_invariant_dim(graded_dims, n, i)?;
    let mut t = Table::new(
        format!("H^{i}(X^{n}) for graded dims {graded_dims:?}"),
        &["n", "partition", "unpadded", "multiplicity"],
    );
    decomposition_rows(&mut t, n, &d);
    Ok(Report {
        json: json!({
            "graded_dims": graded_dims,
            "n": n,
            "i": i,
            "dimension": bigint_to_json(&d.dimension()),
            "trivial_multiplicity": trivial,
            "character": class_function_to_json(&chi),
            "decomposition": decomposition_to_json(&d),
        }),
        tables: vec![t],
    })
}
