//! JSON form of non-membership certificates.
//!
//! ```text
//! {
//!   "arc": {
//!     "field_order": M,
//!     "coordinates": { "x1": [{"degree": d, "coeffs": ["p/q", ...]}, ...], "x2": ..., "y1": ..., "y2": ... }
//!   },
//!   "ideal_generators": [[a1, a2], ...],
//!   "target": [a1, a2],
//!   "ord_target": n | "infinite",
//!   "ord_ideal": n | "infinite",
//!   "verdict": bool
//! }
//! ```
//!
//! Coefficient vectors live in the basis `1, ζ, …, ζ^{φ(M)−1}` of `ℚ(ζ_M)`
//! and have exactly `φ(M)` entries.

use std::str::FromStr;

use lipsat_core::arccert::{
    Arc, CyclotomicField, CyclotomicNumber, DiagonalIdeal, NonMembershipCertificate, Order,
    TPoly, COORD_NAMES,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{Map, Value};

use crate::error::CliError;
use crate::json;

pub fn order_to_json(o: Order) -> Value {
    match o {
        Order::Finite(n) => Value::from(n),
        Order::Infinite => Value::from("infinite"),
    }
}

fn order_from_json(v: &Value, what: &str) -> Result<Order, CliError> {
    match v {
        Value::String(s) if s == "infinite" => Ok(Order::Infinite),
        other => Ok(Order::Finite(as_u64(other, what)?)),
    }
}

fn as_u64(v: &Value, what: &str) -> Result<u64, CliError> {
    match v {
        Value::Number(n) => n.as_u64(),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
    .ok_or_else(|| CliError::invalid(format!("{what}: expected a non-negative integer")))
}

fn field<'a>(obj: &'a Value, key: &str) -> Result<&'a Value, CliError> {
    obj.get(key)
        .ok_or_else(|| CliError::invalid(format!("certificate: missing {key:?}")))
}

fn pair(v: &Value, what: &str) -> Result<[u64; 2], CliError> {
    match v.as_array().map(Vec::as_slice) {
        Some([a, b]) => Ok([as_u64(a, what)?, as_u64(b, what)?]),
        _ => Err(CliError::invalid(format!("{what}: expected a pair"))),
    }
}

fn rational_to_json(q: &BigRational) -> Value {
    Value::String(q.to_string())
}

fn rational_from_json(v: &Value) -> Result<BigRational, CliError> {
    let bad = || CliError::invalid(format!("certificate: bad rational {v}"));
    match v {
        Value::String(s) => BigRational::from_str(s).map_err(|_| bad()),
        Value::Number(n) => n
            .as_i64()
            .map(|i| BigRational::from_integer(BigInt::from(i)))
            .or_else(|| n.as_u64().map(|u| BigRational::from_integer(BigInt::from(u))))
            .ok_or_else(bad),
        _ => Err(bad()),
    }
}

fn number_to_json(c: &CyclotomicNumber) -> Value {
    Value::Array(c.coeffs().iter().map(rational_to_json).collect())
}

fn poly_to_json(p: &TPoly) -> Value {
    Value::Array(
        p.terms()
            .iter()
            .map(|(&d, c)| json::object([("degree", Value::from(d)), ("coeffs", number_to_json(c))]))
            .collect(),
    )
}

fn poly_from_json(v: &Value, f: &CyclotomicField, name: &str) -> Result<TPoly, CliError> {
    let terms = v
        .as_array()
        .ok_or_else(|| CliError::invalid(format!("certificate: {name} must be a list of terms")))?;
    let mut last = None;
    let mut out = Vec::new();
    for t in terms {
        let d = as_u64(field(t, "degree")?, "degree")?;
        if last.is_some_and(|l| l >= d) {
            return Err(CliError::invalid(format!(
                "certificate: {name} degrees must increase strictly"
            )));
        }
        last = Some(d);
        let coeffs = field(t, "coeffs")?
            .as_array()
            .ok_or_else(|| CliError::invalid("certificate: coeffs must be a list"))?;
        if coeffs.len() != f.degree() {
            return Err(CliError::invalid(format!(
                "certificate: {name} coefficient has {} entries, ℚ(ζ_{}) needs {}",
                coeffs.len(),
                f.order(),
                f.degree()
            )));
        }
        let c = f.element(coeffs.iter().map(rational_from_json).collect::<Result<_, _>>()?);
        if c.is_zero() {
            return Err(CliError::invalid(format!("certificate: {name} has a zero term")));
        }
        out.push((d, c));
    }
    Ok(TPoly::from_terms(out))
}

pub fn arc_to_json(arc: &Arc) -> Value {
    let mut coords = Map::new();
    for (name, p) in COORD_NAMES.iter().zip(arc.coordinates()) {
        coords.insert(name.to_string(), poly_to_json(p));
    }
    json::object([
        ("field_order", Value::from(arc.field().order())),
        ("coordinates", Value::Object(coords)),
    ])
}

pub fn arc_from_json(v: &Value) -> Result<Arc, CliError> {
    let m = as_u64(field(v, "field_order")?, "field_order")?;
    let f = CyclotomicField::new(m)?;
    let coords = field(v, "coordinates")?;
    if let Some(extra) = coords
        .as_object()
        .and_then(|o| o.keys().find(|k| !COORD_NAMES.contains(&k.as_str())))
    {
        return Err(CliError::invalid(format!("certificate: unknown coordinate {extra:?}")));
    }
    let mut polys = Vec::new();
    for name in COORD_NAMES {
        polys.push(poly_from_json(field(coords, name)?, &f, name)?);
    }
    let polys: [TPoly; 4] = polys.try_into().expect("four coordinates");
    Ok(Arc::new(f, polys)?)
}

pub fn to_json(cert: &NonMembershipCertificate) -> Value {
    let gens: Vec<Value> = cert
        .ideal
        .generators()
        .iter()
        .map(|g| Value::from(g.to_vec()))
        .collect();
    json::object([
        ("arc", arc_to_json(&cert.arc)),
        ("ideal_generators", Value::Array(gens)),
        ("target", Value::from(cert.target.to_vec())),
        ("ord_target", order_to_json(cert.ord_target)),
        ("ord_ideal", order_to_json(cert.ord_ideal)),
        ("verdict", Value::from(cert.verdict)),
    ])
}

/// Reads a certificate exactly as recorded, without recomputing anything.
pub fn from_json(v: &Value) -> Result<NonMembershipCertificate, CliError> {
    let arc = arc_from_json(field(v, "arc")?)?;
    let gens = field(v, "ideal_generators")?
        .as_array()
        .ok_or_else(|| CliError::invalid("certificate: ideal_generators must be a list"))?
        .iter()
        .map(|g| pair(g, "ideal generator"))
        .collect::<Result<Vec<_>, _>>()?;
    let verdict = field(v, "verdict")?
        .as_bool()
        .ok_or_else(|| CliError::invalid("certificate: verdict must be a boolean"))?;
    Ok(NonMembershipCertificate {
        arc,
        ideal: DiagonalIdeal::new(gens)?,
        target: pair(field(v, "target")?, "target")?,
        ord_target: order_from_json(field(v, "ord_target")?, "ord_target")?,
        ord_ideal: order_from_json(field(v, "ord_ideal")?, "ord_ideal")?,
        verdict,
    })
}

/// Finds the certificate inside a CLI output, a certify payload, or a bare
/// certificate object.
pub fn locate(v: &Value) -> &Value {
    if let Some(c) = v.get("result").and_then(|r| r.get("certificate")) {
        return c;
    }
    v.get("certificate").unwrap_or(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use lipsat_core::arccert::{self, hyp_certificate};
    use lipsat_core::lipsat::HypersurfaceSpec;

    #[test]
    fn round_trip() {
        let spec = HypersurfaceSpec::new(3, 11, 5).unwrap();
        for p in [[0, 7], [1, 3], [4, 1]] {
            let (_, cert) = hyp_certificate(&spec, p).unwrap();
            let v = to_json(&cert);
            let back = from_json(&v).unwrap();
            assert_eq!(back, cert);
            assert!(back.verify());
        }
    }

    #[test]
    fn tampering_is_detected() {
        let arc = arccert::wu_witness(5).unwrap();
        let ideal = DiagonalIdeal::new(vec![[1, 0], [1, 1], [0, 2]]).unwrap();
        let cert = arccert::certify_nonmembership(arc, [0, 5], ideal).unwrap();
        let mut v = to_json(&cert);
        v["ord_ideal"] = Value::from(5);
        assert!(!from_json(&v).unwrap().verify());
        let mut v = to_json(&cert);
        v["arc"]["coordinates"]["y2"][0]["coeffs"] = Value::from(vec!["1", "0"]);
        assert!(from_json(&v).is_err());
    }
}
