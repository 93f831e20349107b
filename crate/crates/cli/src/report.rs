use monres_core::taylor::{members_one_based, Subset};
use monres_core::{IntPolynomial, RationalSeries};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::{json, Value};

pub const SCHEMA: u32 = 1;

/// What a subcommand produced, before rendering.
#[derive(Debug, Default)]
pub struct Output {
    pub text: String,
    pub result: Value,
    pub warnings: Vec<String>,
    /// Normalized input ideal, echoed in the report.
    pub ideal: Option<String>,
    pub mismatch: bool,
}

impl Output {
    pub fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }
}

#[derive(Debug, Serialize)]
pub struct Report<'a> {
    pub schema: u32,
    pub command: &'a [String],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ideal: Option<&'a str>,
    pub result: &'a Value,
    pub warnings: &'a [String],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

/// Integer as a JSON number when it fits in `i64`, otherwise as a string.
pub fn big(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

pub fn bigs(ns: &[BigInt]) -> Value {
    Value::Array(ns.iter().map(big).collect())
}

pub fn poly(p: &IntPolynomial) -> Value {
    bigs(p.coeffs())
}

pub fn series(s: &RationalSeries) -> Value {
    json!({
        "display": s.to_string(),
        "numerator": poly(s.numerator()),
        "denominator": poly(s.denominator()),
    })
}

pub fn subset(s: Subset) -> Value {
    json!(members_one_based(s))
}

pub fn braces(s: Subset) -> String {
    let items: Vec<String> = members_one_based(s).iter().map(usize::to_string).collect();
    format!("{{{}}}", items.join(","))
}

pub fn joined(ns: &[BigInt]) -> String {
    ns.iter()
        .map(BigInt::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_integers() {
        assert_eq!(big(&BigInt::from(-5)), json!(-5));
        let huge: BigInt = "123456789012345678901234567890".parse().unwrap();
        assert_eq!(big(&huge), json!("123456789012345678901234567890"));
    }

    #[test]
    fn subsets() {
        assert_eq!(braces(0b101), "{1,3}");
        assert_eq!(subset(0b110), json!([2, 3]));
    }
}
