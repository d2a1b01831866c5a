//! JSON encodings.
//!
//! * A partition on its own is an array of parts, `[3, 2, 1]`; as an object key
//!   it is the string `"3+2+1"`, with `"0"` for the empty partition.
//! * Rationals are JSON integers when integral and strings `"p/q"` otherwise.
//! * A class function is an object from cycle-type keys to values.
//! * A decomposition is an object from partition keys to multiplicities.
//! * An FI sequence is `{"window": [a, b], "entries": {"n": decomposition, …}}`,
//!   keyed by the full partitions of `n`.

use std::collections::BTreeMap;

use fistab_core::fi::{FiSequence, StabilityReport};
use fistab_core::{ClassFunction, IrrDecomposition, Partition, Rational};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::error::{CliError, CliResult};

pub fn bigint_to_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

pub fn rational_to_json(x: &Rational) -> Value {
    if x.is_integer() {
        bigint_to_json(x.numer())
    } else {
        json!(x.to_string())
    }
}

pub fn rational_from_json(v: &Value) -> CliResult<Rational> {
    match v {
        Value::Number(num) => num
            .as_i64()
            .map(|i| Rational::from_integer(i.into()))
            .ok_or_else(|| CliError::format(format!("{num} is not an exact integer"))),
        Value::String(s) => parse_rational(s),
        other => Err(CliError::format(format!("expected a number, got {other}"))),
    }
}

/// Parses `7`, `-3` or `5/2`.
pub fn parse_rational(s: &str) -> CliResult<Rational> {
    let bad = || CliError::format(format!("malformed rational {s:?}"));
    let int = |t: &str| t.trim().parse::<BigInt>().map_err(|_| bad());
    match s.split_once('/') {
        None => Ok(Rational::from_integer(int(s)?)),
        Some((p, q)) => {
            let q = int(q)?;
            if q == BigInt::from(0) {
                return Err(bad());
            }
            Ok(Rational::new(int(p)?, q))
        }
    }
}

pub fn partition_key(p: &Partition) -> String {
    p.to_string()
}

pub fn parse_partition(s: &str) -> CliResult<Partition> {
    s.parse::<Partition>()
        .map_err(|_| CliError::format(format!("malformed partition {s:?}")))
}

pub fn partition_array(p: &Partition) -> Value {
    json!(p.parts())
}

fn as_object<'a>(v: &'a Value, what: &str) -> CliResult<&'a Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| CliError::format(format!("{what} must be a JSON object")))
}

pub fn class_function_to_json(f: &ClassFunction) -> Value {
    let map: Map<String, Value> = f
        .iter()
        .map(|(mu, v)| (partition_key(mu), rational_to_json(v)))
        .collect();
    Value::Object(map)
}

/// `n` is inferred from the keys, which must be exactly the partitions of `n`.
pub fn class_function_from_json(v: &Value) -> CliResult<ClassFunction> {
    let obj = as_object(v, "class function")?;
    let mut values = BTreeMap::new();
    for (key, val) in obj {
        values.insert(parse_partition(key)?, rational_from_json(val)?);
    }
    let n = values
        .keys()
        .next()
        .map(Partition::size)
        .ok_or_else(|| CliError::format("class function has no values"))?;
    Ok(ClassFunction::new(n, values)?)
}

pub fn decomposition_to_json(d: &IrrDecomposition) -> Value {
    let map: Map<String, Value> = d
        .iter()
        .map(|(lambda, m)| (partition_key(lambda), json!(m)))
        .collect();
    Value::Object(map)
}

pub fn decomposition_from_json(n: u32, v: &Value) -> CliResult<IrrDecomposition> {
    let obj = as_object(v, "decomposition")?;
    let mut pairs = Vec::with_capacity(obj.len());
    for (key, val) in obj {
        let m = val.as_u64().ok_or_else(|| {
            CliError::format(format!(
                "multiplicity of {key} must be a nonnegative integer"
            ))
        })?;
        pairs.push((parse_partition(key)?, m));
    }
    Ok(IrrDecomposition::from_multiplicities(n, pairs)?)
}

/// Multiplicity tables keyed by (unpadded) partitions.
pub fn table_to_json(t: &BTreeMap<Partition, u64>) -> Value {
    let map: Map<String, Value> = t
        .iter()
        .map(|(lambda, m)| (partition_key(lambda), json!(m)))
        .collect();
    Value::Object(map)
}

pub fn sequence_to_json(seq: &FiSequence<IrrDecomposition>) -> Value {
    let (a, b) = seq.window();
    let entries: Map<String, Value> = seq
        .iter()
        .map(|(n, d)| (n.to_string(), decomposition_to_json(d)))
        .collect();
    json!({ "window": [a, b], "entries": entries })
}

pub fn sequence_from_json(v: &Value) -> CliResult<FiSequence<IrrDecomposition>> {
    let obj = as_object(v, "FI sequence")?;
    let entries = obj
        .get("entries")
        .ok_or_else(|| CliError::format("FI sequence needs \"entries\""))
        .and_then(|e| as_object(e, "entries"))?;
    let mut map = BTreeMap::new();
    for (key, val) in entries {
        let n: u32 = key
            .parse()
            .map_err(|_| CliError::format(format!("entry key {key:?} is not an integer")))?;
        map.insert(n, decomposition_from_json(n, val)?);
    }
    let seq = FiSequence::from_map(map)?;
    if let Some(window) = obj.get("window") {
        let declared: Option<(u32, u32)> = window.as_array().and_then(|w| match w.as_slice() {
            [a, b] => Some((a.as_u64()? as u32, b.as_u64()? as u32)),
            _ => None,
        });
        if declared != Some(seq.window()) {
            return Err(CliError::format(format!(
                "declared window {window} does not match the entries"
            )));
        }
    }
    Ok(seq)
}

/// The stability report; `label` is the wording shown to readers.
pub fn stability_to_json(rep: &StabilityReport) -> Value {
    let tables: Map<String, Value> = rep
        .tables
        .iter()
        .map(|(n, t)| (n.to_string(), table_to_json(t)))
        .collect();
    json!({
        "window": [rep.window.0, rep.window.1],
        "stable_from": rep.stable_from,
        "label": stability_label(rep),
        "stable_multiplicities": table_to_json(&rep.stable_multiplicities),
        "tables": tables,
    })
}

pub fn stability_label(rep: &StabilityReport) -> String {
    match rep.stable_from {
        Some(n) => format!(
            "consistent with N = {n} on [{}, {}]",
            rep.window.0, rep.window.1
        ),
        None => format!(
            "no stabilization observed on [{}, {}]",
            rep.window.0, rep.window.1
        ),
    }
}
