//! Argument parsing helpers, JSON/CSV emitters and the sample-file format.
//!
//! Floats are always written as `{:.16e}` (17 significant digits) so that
//! identical runs produce byte-identical artifacts. Non-finite values become
//! JSON `null`.

use std::fs;
use std::io::Write;
use std::path::Path;

use fockcanon::{CMatrix, Complex64, RealMatrix2, SampledRealFunction};
use serde::Deserialize;
use serde_json::{Map, Number, Value};

use crate::error::CliError;

pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// A JSON number with the digits of [`fmt_f64`] (serde_json writes the
/// exponent with an explicit sign).
pub fn num(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    let n: Number = fmt_f64(x).parse().expect("formatted float is valid JSON");
    Value::Number(n)
}

/// `[re, im]`.
pub fn cnum(z: Complex64) -> Value {
    Value::Array(vec![num(z.re), num(z.im)])
}

pub fn object<I, K>(fields: I) -> Value
where
    I: IntoIterator<Item = (K, Value)>,
    K: Into<String>,
{
    let mut map = Map::new();
    for (k, v) in fields {
        map.insert(k.into(), v);
    }
    Value::Object(map)
}

/// Indented JSON with sorted keys, newline-terminated.
pub fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

/// `"re,im"` or `"re"`.
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let parse = |p: &str| p.parse::<f64>().map_err(|e| format!("bad number {p:?}: {e}"));
    let z = match parts.as_slice() {
        [re] => Complex64::new(parse(re)?, 0.0),
        [re, im] => Complex64::new(parse(re)?, parse(im)?),
        _ => return Err(format!("expected \"re,im\", got {s:?}")),
    };
    if z.is_finite() {
        Ok(z)
    } else {
        Err(format!("non-finite value {s:?}"))
    }
}

/// `"a,b,c,d"` for `[[a, b], [c, d]]`.
pub fn parse_matrix(s: &str) -> Result<RealMatrix2, String> {
    let v: Vec<f64> = s
        .split(',')
        .map(|p| p.trim().parse::<f64>().map_err(|e| format!("bad number {p:?}: {e}")))
        .collect::<Result<_, _>>()?;
    match v.as_slice() {
        [a, b, c, d] if v.iter().all(|x| x.is_finite()) => Ok(RealMatrix2::new(*a, *b, *c, *d)),
        _ => Err(format!("expected \"a,b,c,d\", got {s:?}")),
    }
}

/// Sample file: `{"grid": [x…], "values": [[re, im]…] | [re…]}`.
///
/// Read through [`Value`]: serde's untagged enums cannot see numbers when
/// serde_json keeps their text (`arbitrary_precision`).
#[derive(Debug, Deserialize)]
pub struct SampleFile {
    pub grid: Vec<f64>,
    pub values: Vec<Value>,
}

fn sample_value(v: &Value) -> Result<Complex64, CliError> {
    let bad = || CliError::Parse(format!("sample value must be a number or [re, im], got {v}"));
    match v {
        Value::Number(n) => Ok(Complex64::new(n.as_f64().ok_or_else(bad)?, 0.0)),
        Value::Array(p) if p.len() == 2 => {
            let re = p[0].as_f64().ok_or_else(bad)?;
            let im = p[1].as_f64().ok_or_else(bad)?;
            Ok(Complex64::new(re, im))
        }
        _ => Err(bad()),
    }
}

pub fn parse_samples(text: &str) -> Result<SampledRealFunction, CliError> {
    let file: SampleFile = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    let values = file.values.iter().map(sample_value).collect::<Result<_, _>>()?;
    Ok(SampledRealFunction::from_samples(file.grid, values)?)
}

pub fn read_samples(path: &Path) -> Result<SampledRealFunction, CliError> {
    parse_samples(&fs::read_to_string(path)?)
}

pub fn samples_json(f: &SampledRealFunction) -> Value {
    object([
        ("grid", Value::Array(f.grid().iter().map(|&x| num(x)).collect())),
        ("values", Value::Array(f.values().iter().map(|&z| cnum(z)).collect())),
    ])
}

fn csv_string<F>(header: &[&str], fill: F) -> Result<String, CliError>
where
    F: FnOnce(&mut csv::Writer<Vec<u8>>) -> csv::Result<()>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    fill(&mut w)?;
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// `x,re,im` rows.
pub fn samples_csv(f: &SampledRealFunction) -> Result<String, CliError> {
    csv_string(&["x", "re", "im"], |w| {
        for (&x, z) in f.grid().iter().zip(f.values()) {
            w.write_record([fmt_f64(x), fmt_f64(z.re), fmt_f64(z.im)])?;
        }
        Ok(())
    })
}

/// `m,n,re,im` rows.
pub fn matrix_csv(m: &CMatrix) -> Result<String, CliError> {
    csv_string(&["m", "n", "re", "im"], |w| {
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                let z = m[(i, j)];
                w.write_record([i.to_string(), j.to_string(), fmt_f64(z.re), fmt_f64(z.im)])?;
            }
        }
        Ok(())
    })
}

pub fn matrix_json(m: &CMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array((0..m.cols()).map(|j| cnum(m[(i, j)])).collect()))
            .collect(),
    )
}

/// Rows of named columns; every row must have the header's length.
pub fn table_csv(header: &[&str], rows: &[Vec<String>]) -> Result<String, CliError> {
    csv_string(header, |w| {
        for r in rows {
            w.write_record(r)?;
        }
        Ok(())
    })
}

/// Writes `content` to `path`, or to stdout when `path` is `None`.
pub fn emit(path: Option<&Path>, content: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, content)?,
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(content.as_bytes())?;
            out.flush()?;
        }
    }
    Ok(())
}
