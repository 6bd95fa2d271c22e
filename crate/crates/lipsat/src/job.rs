//! Job descriptions: the unit of work for the CLI and for batch files.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::CliError;
use crate::json;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveJob {
    /// Exponent support of each coordinate series.
    pub supports: Vec<Vec<u64>>,
    #[serde(rename = "box", default, skip_serializing_if = "Option::is_none")]
    pub bounds: Option<Vec<u64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductJob {
    /// One support list per factor curve.
    pub curves: Vec<Vec<Vec<u64>>>,
    #[serde(rename = "box", default, skip_serializing_if = "Option::is_none")]
    pub bounds: Option<Vec<u64>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HypersurfaceJob {
    pub alpha: u64,
    pub beta: u64,
    #[serde(rename = "bigN")]
    pub big_n: u64,
    #[serde(rename = "box", default, skip_serializing_if = "Option::is_none")]
    pub bounds: Option<[u64; 2]>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SemigroupOp {
    Contains,
    Mingens,
    Mult,
    Edim,
    Gaps,
    Hull,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SemigroupJob {
    pub op: SemigroupOp,
    pub generators: Vec<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point: Option<Vec<u64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase", deny_unknown_fields)]
pub enum CertifyJob {
    Hypersurface {
        alpha: u64,
        beta: u64,
        #[serde(rename = "bigN")]
        big_n: u64,
        point: [u64; 2],
    },
    Wu {
        r: u64,
    },
    Verify {
        certificate: Value,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BinomialSpec {
    pub lead: Vec<u64>,
    pub trail: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase", deny_unknown_fields)]
pub enum IdealJob {
    Kernel {
        generators: Vec<Vec<u64>>,
    },
    Generators {
        generators: Vec<Vec<u64>>,
        degree_bound: u64,
    },
    Verify {
        generators: Vec<Vec<u64>>,
        binomials: Vec<BinomialSpec>,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub enum Job {
    Curve(CurveJob),
    Product(ProductJob),
    Hypersurface(HypersurfaceJob),
    Semigroup(SemigroupJob),
    Certify(CertifyJob),
    Ideal(IdealJob),
}

impl Job {
    pub fn kind(&self) -> &'static str {
        match self {
            Job::Curve(_) => "curve",
            Job::Product(_) => "product",
            Job::Hypersurface(_) => "hypersurface",
            Job::Semigroup(_) => "semigroup",
            Job::Certify(_) => "certify",
            Job::Ideal(_) => "ideal",
        }
    }

    fn payload(&self) -> Value {
        let v = match self {
            Job::Curve(j) => serde_json::to_value(j),
            Job::Product(j) => serde_json::to_value(j),
            Job::Hypersurface(j) => serde_json::to_value(j),
            Job::Semigroup(j) => serde_json::to_value(j),
            Job::Certify(j) => serde_json::to_value(j),
            Job::Ideal(j) => serde_json::to_value(j),
        };
        v.expect("payloads always serialize")
    }
}

/// A job with its output format.
#[derive(Debug, Clone, PartialEq)]
pub struct JobSpec {
    pub job: Job,
    pub output_format: OutputFormat,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawJob {
    kind: String,
    payload: Value,
    #[serde(default)]
    output_format: OutputFormat,
}

fn parse_payload<T: serde::de::DeserializeOwned>(kind: &str, v: Value) -> Result<T, CliError> {
    serde_json::from_value(v).map_err(|e| CliError::invalid(format!("{kind} payload: {e}")))
}

impl JobSpec {
    pub fn new(job: Job, output_format: OutputFormat) -> Self {
        JobSpec { job, output_format }
    }

    /// Parses and schema-checks a job object.
    pub fn from_json(v: Value) -> Result<Self, CliError> {
        let raw: RawJob = serde_json::from_value(json::decode_big(v))
            .map_err(|e| CliError::invalid(format!("job: {e}")))?;
        let k = raw.kind.as_str();
        let job = match k {
            "curve" => Job::Curve(parse_payload(k, raw.payload)?),
            "product" => Job::Product(parse_payload(k, raw.payload)?),
            "hypersurface" => Job::Hypersurface(parse_payload(k, raw.payload)?),
            "semigroup" => Job::Semigroup(parse_payload(k, raw.payload)?),
            "certify" => Job::Certify(parse_payload(k, raw.payload)?),
            "ideal" => Job::Ideal(parse_payload(k, raw.payload)?),
            other => return Err(CliError::invalid(format!("unknown job kind {other:?}"))),
        };
        Ok(JobSpec {
            job,
            output_format: raw.output_format,
        })
    }

    /// Accepts either a job object or a previous JSON output that embeds one
    /// under `"input"`.
    pub fn from_document(text: &str) -> Result<Self, CliError> {
        let v: Value = serde_json::from_str(text)?;
        match v.get("input") {
            Some(input) if v.get("schema_version").is_some() => Self::from_json(input.clone()),
            _ => Self::from_json(v),
        }
    }

    pub fn to_json(&self) -> Value {
        json::encode_big(json::object([
            ("kind", Value::from(self.job.kind())),
            ("payload", self.job.payload()),
            (
                "output_format",
                serde_json::to_value(self.output_format).expect("enum serializes"),
            ),
        ]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn parses_each_kind() {
        let docs = [
            json!({"kind": "curve", "payload": {"supports": [[6], [9, 11], [9, 11]]}}),
            json!({"kind": "product", "payload": {"curves": [[[4], [6], [7]], [[6], [9], [11]]]}}),
            json!({"kind": "hypersurface", "payload": {"alpha": 3, "beta": 11, "bigN": 5}}),
            json!({"kind": "semigroup", "payload": {"op": "contains", "generators": [[1, 0]], "point": [2, 0]}}),
            json!({"kind": "certify", "payload": {"op": "wu", "r": 5}}),
            json!({"kind": "ideal", "payload": {"op": "generators", "generators": [[2], [3]], "degree_bound": 4}}),
        ];
        for d in docs {
            let spec = JobSpec::from_json(d.clone()).unwrap();
            assert_eq!(spec.output_format, OutputFormat::Text);
            let again = JobSpec::from_json(spec.to_json()).unwrap();
            assert_eq!(again, spec);
            assert_eq!(spec.to_json()["payload"], d["payload"]);
        }
    }

    #[test]
    fn rejects_bad_payloads() {
        let bad = [
            json!({"kind": "curve", "payload": {"supports": [[6]], "extra": 1}}),
            json!({"kind": "hypersurface", "payload": {"alpha": 3, "beta": 11}}),
            json!({"kind": "semigroup", "payload": {"op": "frobenius", "generators": [[2]]}}),
            json!({"kind": "certify", "payload": {"op": "wu"}}),
            json!({"kind": "volume", "payload": {}}),
            json!({"kind": "curve", "payload": {"supports": [[-1]]}}),
        ];
        for d in bad {
            let e = JobSpec::from_json(d.clone()).unwrap_err();
            assert_eq!(e.exit_code(), 1, "{d}");
        }
    }

    #[test]
    fn accepts_previous_output() {
        let out = json!({
            "schema_version": 1,
            "input": {"kind": "certify", "payload": {"op": "wu", "r": 3}, "output_format": "json"},
            "result": {}
        });
        let spec = JobSpec::from_document(&out.to_string()).unwrap();
        assert_eq!(spec.job, Job::Certify(CertifyJob::Wu { r: 3 }));
        assert_eq!(spec.output_format, OutputFormat::Json);
    }
}
