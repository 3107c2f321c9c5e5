//! Result records and their text, JSON and CSV renderings.

use std::io::{self, Write};

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Value as Json};
use witten::exact::{Polynomial, RationalFunction, Var};
use witten::finite::GaussianRational;

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Complex(Complex64),
    /// Exact rational or Gaussian rational, serialized as `num/den` (plus `...i`).
    Exact(GaussianRational),
    /// Coefficients in ascending degree.
    RationalFunction {
        var: char,
        num: Vec<BigRational>,
        den: Vec<BigRational>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ErrorEstimate {
    Exact,
    Approx(f64),
}

#[derive(Clone, Debug, PartialEq)]
pub struct ResultRecord {
    pub query: String,
    pub value: Value,
    pub error: ErrorEstimate,
    pub ms: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl ResultRecord {
    pub fn float(query: impl Into<String>, z: Complex64, error: f64) -> Self {
        ResultRecord {
            query: query.into(),
            value: Value::Complex(z),
            error: ErrorEstimate::Approx(error),
            ms: 0.0,
        }
    }

    pub fn real(query: impl Into<String>, x: f64, error: f64) -> Self {
        Self::float(query, Complex64::new(x, 0.0), error)
    }

    pub fn exact(query: impl Into<String>, q: GaussianRational) -> Self {
        ResultRecord {
            query: query.into(),
            value: Value::Exact(q),
            error: ErrorEstimate::Exact,
            ms: 0.0,
        }
    }

    pub fn rational(query: impl Into<String>, q: BigRational) -> Self {
        Self::exact(query, GaussianRational::real(q))
    }

    /// Uses the reduced form with a monic denominator.
    pub fn function(query: impl Into<String>, f: &RationalFunction) -> Self {
        Self::function_parts(query, f.variable(), f.numer(), f.denom())
    }

    pub fn function_parts(
        query: impl Into<String>,
        var: Var,
        num: &Polynomial,
        den: &Polynomial,
    ) -> Self {
        ResultRecord {
            query: query.into(),
            value: Value::RationalFunction {
                var: var.0,
                num: num.coeffs().to_vec(),
                den: den.coeffs().to_vec(),
            },
            error: ErrorEstimate::Exact,
            ms: 0.0,
        }
    }

    pub fn to_json(&self) -> Json {
        let value = match &self.value {
            Value::Complex(z) => json!({ "re": z.re, "im": z.im }),
            Value::Exact(q) => Json::String(q.to_string()),
            Value::RationalFunction { var, num, den } => json!({
                "num": coeff_json(num),
                "den": coeff_json(den),
                "var": var.to_string(),
            }),
        };
        let error = match self.error {
            ErrorEstimate::Exact => json!("exact"),
            ErrorEstimate::Approx(e) => json!(e),
        };
        json!({ "query": self.query, "value": value, "error": error, "ms": self.ms })
    }

    pub fn to_json_string(&self) -> String {
        self.to_json().to_string()
    }

    pub fn from_json_str(text: &str) -> Result<Self, String> {
        let v: Json = serde_json::from_str(text).map_err(|e| e.to_string())?;
        Self::from_json(&v)
    }

    pub fn from_json(v: &Json) -> Result<Self, String> {
        let obj = v.as_object().ok_or("record must be an object")?;
        let query = obj
            .get("query")
            .and_then(Json::as_str)
            .ok_or("missing query")?
            .to_string();
        let value = match obj.get("value").ok_or("missing value")? {
            Json::String(s) => Value::Exact(s.parse().map_err(|e| format!("{e}"))?),
            Json::Object(o) if o.contains_key("re") => {
                let part = |k: &str| o.get(k).and_then(Json::as_f64).ok_or(format!("bad {k}"));
                Value::Complex(Complex64::new(part("re")?, part("im")?))
            }
            Json::Object(o) => {
                let var = o
                    .get("var")
                    .and_then(Json::as_str)
                    .and_then(|s| s.chars().next())
                    .ok_or("missing var")?;
                let arr = |k: &str| -> Result<Vec<BigRational>, String> {
                    o.get(k)
                        .and_then(Json::as_array)
                        .ok_or(format!("missing {k}"))?
                        .iter()
                        .map(coeff_from_json)
                        .collect()
                };
                Value::RationalFunction {
                    var,
                    num: arr("num")?,
                    den: arr("den")?,
                }
            }
            _ => return Err("unrecognized value".into()),
        };
        let error = match obj.get("error").ok_or("missing error")? {
            Json::String(s) if s == "exact" => ErrorEstimate::Exact,
            e => ErrorEstimate::Approx(e.as_f64().ok_or("bad error estimate")?),
        };
        let ms = obj.get("ms").and_then(Json::as_f64).ok_or("missing ms")?;
        Ok(ResultRecord {
            query,
            value,
            error,
            ms,
        })
    }

    /// One line: `query = value (error ..., ms)`; floats use `digits` significant digits.
    pub fn to_text(&self, digits: usize) -> String {
        let value = match &self.value {
            Value::Complex(z) => {
                if z.im == 0.0 {
                    fmt_float(z.re, digits)
                } else {
                    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
                    format!(
                        "{} {sign} {}i",
                        fmt_float(z.re, digits),
                        fmt_float(z.im.abs(), digits)
                    )
                }
            }
            Value::Exact(q) => q.to_string(),
            Value::RationalFunction { .. } => self.function_text().unwrap_or_default(),
        };
        let error = match self.error {
            ErrorEstimate::Exact => "exact".to_string(),
            ErrorEstimate::Approx(e) => format!("{e:.1e}"),
        };
        format!(
            "{} = {value}  [error {error}, {:.3} ms]",
            self.query, self.ms
        )
    }

    fn function_text(&self) -> Option<String> {
        let Value::RationalFunction { var, num, den } = &self.value else {
            return None;
        };
        let n = Polynomial::new(Var(*var), num.clone());
        let d = Polynomial::new(Var(*var), den.clone());
        Some(
            if d.is_constant() && d.coeff(0) == BigRational::from_integer(1.into()) {
                n.to_string()
            } else {
                format!("({n}) / ({d})")
            },
        )
    }

    fn csv_row(&self) -> [String; 5] {
        let (re, im) = match &self.value {
            Value::Complex(z) => (format!("{}", z.re), format!("{}", z.im)),
            Value::Exact(q) => (q.re.to_string(), q.im.to_string()),
            Value::RationalFunction { .. } => {
                (self.function_text().unwrap_or_default(), String::new())
            }
        };
        let error = match self.error {
            ErrorEstimate::Exact => "exact".to_string(),
            ErrorEstimate::Approx(e) => format!("{e:e}"),
        };
        [self.query.clone(), re, im, error, format!("{:.3}", self.ms)]
    }
}

/// Integral coefficients become JSON numbers, others `"a/b"` strings.
fn coeff_json(cs: &[BigRational]) -> Json {
    Json::Array(
        cs.iter()
            .map(
                |c| match c.is_integer().then(|| c.to_integer().to_i64()).flatten() {
                    Some(n) => json!(n),
                    None => Json::String(c.to_string()),
                },
            )
            .collect(),
    )
}

fn coeff_from_json(v: &Json) -> Result<BigRational, String> {
    match v {
        Json::Number(n) => n
            .as_i64()
            .map(|k| BigRational::from_integer(k.into()))
            .ok_or_else(|| format!("non-integral coefficient {n}")),
        Json::String(s) => s.parse().map_err(|_| format!("bad coefficient {s}")),
        _ => Err("bad coefficient".into()),
    }
}

/// `digits` significant digits, positional between 1e-4 and 1e10.
pub fn fmt_float(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let mag = x.abs().log10().floor() as i32;
    if (-4..10).contains(&mag) {
        let decimals = (digits as i32 - 1 - mag).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{:.*e}", digits.saturating_sub(1), x)
    }
}

/// Writes records in the chosen format.
pub fn write_records(
    out: &mut impl Write,
    records: &[ResultRecord],
    format: Format,
    digits: usize,
) -> io::Result<()> {
    match format {
        Format::Text => {
            for r in records {
                writeln!(out, "{}", r.to_text(digits))?;
            }
        }
        Format::Json => {
            if let [one] = records {
                writeln!(out, "{}", one.to_json_string())?;
            } else {
                let all: Vec<Json> = records.iter().map(ResultRecord::to_json).collect();
                writeln!(out, "{}", Json::Array(all))?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["query", "value_re", "value_im", "error", "ms"])?;
            for r in records {
                w.write_record(r.csv_row())?;
            }
            w.flush()?;
        }
    }
    Ok(())
}
