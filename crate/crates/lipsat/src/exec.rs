//! Runs a [`Job`] and renders its result both as JSON and as text.

use std::fmt::Write as _;

use lipsat_core::arccert::{self, DiagonalIdeal, NonMembershipCertificate};
use lipsat_core::lipsat::{self, HypersurfaceSpec, MonomialCurve, SaturationResult};
use lipsat_core::numsg;
use lipsat_core::torideal::{self, Binomial};
use lipsat_core::{AffineSemigroup, NumericalSemigroup};
use serde_json::Value;

use crate::cert;
use crate::error::CliError;
use crate::job::{
    CertifyJob, CurveJob, HypersurfaceJob, IdealJob, Job, ProductJob, SemigroupJob, SemigroupOp,
};
use crate::json;

/// Outcome of a job that ran to completion. `failed` marks a verification
/// job whose object did not check out.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub result: Value,
    pub text: String,
    pub failed: bool,
}

impl Report {
    fn ok(result: Value, text: String) -> Self {
        Report {
            result,
            text,
            failed: false,
        }
    }
}

pub fn execute(job: &Job) -> Result<Report, CliError> {
    match job {
        Job::Curve(j) => curve(j),
        Job::Product(j) => product(j),
        Job::Hypersurface(j) => hypersurface(j),
        Job::Semigroup(j) => semigroup(j),
        Job::Certify(j) => certify(j),
        Job::Ideal(j) => ideal(j),
    }
}

const SUPERSCRIPTS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];

pub fn superscript(n: u64) -> String {
    n.to_string()
        .bytes()
        .map(|b| SUPERSCRIPTS[(b - b'0') as usize])
        .collect()
}

fn variables(dim: usize) -> Vec<String> {
    match dim {
        1 => vec!["τ".into()],
        2 => vec!["u".into(), "v".into()],
        3 => vec!["u".into(), "v".into(), "w".into()],
        d => (1..=d).map(|i| format!("u{i}")).collect(),
    }
}

/// `u³v¹¹`; `1` for the zero exponent.
fn monomial(vars: &[String], e: &[u64]) -> String {
    let mut s = String::new();
    for (x, &k) in vars.iter().zip(e) {
        match k {
            0 => {}
            1 => s.push_str(x),
            k => {
                s.push_str(x);
                s.push_str(&superscript(k));
            }
        }
    }
    if s.is_empty() {
        s.push('1');
    }
    s
}

fn vector(v: &[u64]) -> String {
    match v {
        [x] => x.to_string(),
        _ => {
            let parts: Vec<String> = v.iter().map(u64::to_string).collect();
            format!("({})", parts.join(","))
        }
    }
}

fn span(gens: &[Vec<u64>]) -> String {
    let parts: Vec<String> = gens.iter().map(|g| vector(g)).collect();
    format!("⟨{}⟩", parts.join(", "))
}

fn vectors_json(gens: &[Vec<u64>]) -> Value {
    if gens.first().is_some_and(|g| g.len() == 1) {
        Value::from(gens.iter().map(|g| g[0]).collect::<Vec<_>>())
    } else {
        Value::from(gens.to_vec())
    }
}

fn check_box(bounds: &[u64], dim: usize) -> Result<(), CliError> {
    if bounds.len() != dim {
        return Err(CliError::invalid(format!(
            "box has {} sides, the semigroup lives in dimension {dim}",
            bounds.len()
        )));
    }
    Ok(())
}

/// Re-runs the invariant checks, then renders the result.
fn saturation_report(
    r: &SaturationResult,
    bounds: Vec<u64>,
    extra: Vec<(&'static str, Value)>,
    preamble: String,
) -> Result<Report, CliError> {
    check_box(&bounds, r.semigroup.dim())?;
    r.check_invariants(&bounds)?;
    let dim = r.semigroup.dim();
    let vars = variables(dim);
    let assumptions: Vec<&str> = r.assumptions.iter().map(|a| a.name()).collect();
    let mut entries = vec![
        ("source_generators", vectors_json(r.source.generators())),
        ("min_gens", vectors_json(&r.min_gens)),
        ("multiplicity", Value::from(r.multiplicity)),
        ("edim", Value::from(r.embedding_dimension)),
        ("parametrization", vectors_json(&r.parametrization)),
        ("assumptions", Value::from(assumptions.clone())),
        ("invariant_box", Value::from(bounds.clone())),
    ];
    entries.extend(extra);

    let mut text = preamble;
    let _ = writeln!(text, "Γ = {}", span(r.source.generators()));
    let _ = writeln!(text, "Γ^s = {}", span(&r.parametrization));
    let _ = writeln!(
        text,
        "multiplicity {}, embedding dimension {}",
        r.multiplicity, r.embedding_dimension
    );
    let image: Vec<String> = r.parametrization.iter().map(|g| monomial(&vars, g)).collect();
    let source = if dim == 1 {
        vars[0].clone()
    } else {
        format!("({})", vars.join(","))
    };
    let _ = writeln!(text, "{source} ↦ ({})", image.join(", "));
    if !assumptions.is_empty() {
        let _ = writeln!(text, "assumptions: {}", assumptions.join(", "));
    }
    let sides: Vec<String> = bounds.iter().map(|b| format!("[0,{b}]")).collect();
    let _ = writeln!(text, "invariants checked on {}", sides.join("×"));
    Ok(Report::ok(json::object(entries), text))
}

fn curve(j: &CurveJob) -> Result<Report, CliError> {
    let c = MonomialCurve::new(j.supports.clone())?;
    let (m, support) = c.plane_model();
    let chars = numsg::char_exponents(m, &support)?;
    let r = lipsat::saturate_curve(&c)?;
    let bounds = j.bounds.clone().unwrap_or_else(|| r.default_box());
    let betas = chars.betas().to_vec();
    let preamble = format!(
        "characteristic exponents: {}\n",
        betas.iter().map(u64::to_string).collect::<Vec<_>>().join(", ")
    );
    saturation_report(
        &r,
        bounds,
        vec![("characteristic_exponents", Value::from(betas))],
        preamble,
    )
}

fn product(j: &ProductJob) -> Result<Report, CliError> {
    let curves = j
        .curves
        .iter()
        .map(|s| MonomialCurve::new(s.clone()))
        .collect::<Result<Vec<_>, _>>()?;
    let r = lipsat::saturate_product(&curves)?;
    let bounds = j.bounds.clone().unwrap_or_else(|| r.default_box());
    saturation_report(&r, bounds, Vec::new(), String::new())
}

fn hyp_spec(alpha: u64, beta: u64, big_n: u64) -> Result<HypersurfaceSpec, CliError> {
    Ok(HypersurfaceSpec::new(alpha, beta, big_n)?)
}

fn equation(spec: &HypersurfaceSpec) -> String {
    let (a, b, n) = (spec.alpha(), spec.beta(), spec.big_n());
    let pow = |x: &str, k: u64| if k == 1 { x.to_string() } else { format!("{x}{}", superscript(k)) };
    format!("{} − {}{} = 0", pow("y", n), pow("x", a * n), pow("z", b))
}

fn hypersurface(j: &HypersurfaceJob) -> Result<Report, CliError> {
    let spec = hyp_spec(j.alpha, j.beta, j.big_n)?;
    let bounds = j.bounds.unwrap_or_else(|| spec.validation_box());
    let r = lipsat::hyp_min_generators_in_box(&spec, bounds)?;
    let t = lipsat::hyp_t_saturation(&spec)?;
    let preamble = format!(
        "X: {}\nT^s = {}\n",
        equation(&spec),
        span(&t.min_generators().iter().map(|&g| vec![g]).collect::<Vec<_>>())
    );
    saturation_report(
        &r,
        bounds.to_vec(),
        vec![
            ("equation", Value::from(equation(&spec))),
            ("t_saturation", Value::from(t.min_generators().to_vec())),
        ],
        preamble,
    )
}

fn affine(gens: &[Vec<u64>]) -> Result<AffineSemigroup, CliError> {
    let dim = gens
        .first()
        .map(Vec::len)
        .ok_or_else(|| CliError::invalid("no generators"))?;
    Ok(AffineSemigroup::from_natural(dim, gens.to_vec())?)
}

fn semigroup(j: &SemigroupJob) -> Result<Report, CliError> {
    let s = affine(&j.generators)?;
    if j.op != SemigroupOp::Contains && j.point.is_some() {
        return Err(CliError::invalid("point is only used by contains"));
    }
    let (result, text) = match j.op {
        SemigroupOp::Contains => {
            let p = j
                .point
                .as_ref()
                .ok_or_else(|| CliError::invalid("contains needs a point"))?;
            check_box(p, s.dim())?;
            let inside = s.contains(p)?;
            let rel = if inside { "∈" } else { "∉" };
            (
                json::object([("point", Value::from(p.clone())), ("contains", Value::from(inside))]),
                format!("{} {rel} {}\n", vector(p), span(s.generators())),
            )
        }
        SemigroupOp::Mingens => {
            let g = s.min_generators()?;
            (json::object([("min_gens", vectors_json(&g))]), format!("{}\n", span(&g)))
        }
        SemigroupOp::Mult => {
            let m = s.multiplicity()?;
            (json::object([("multiplicity", Value::from(m))]), format!("multiplicity {m}\n"))
        }
        SemigroupOp::Edim => {
            let e = s.embedding_dimension()?;
            (json::object([("edim", Value::from(e))]), format!("embedding dimension {e}\n"))
        }
        SemigroupOp::Gaps => {
            if s.dim() != 1 {
                return Err(CliError::unsupported("gaps are only listed for numerical semigroups"));
            }
            let flat: Vec<u64> = s.generators().iter().map(|g| g[0]).collect();
            let ns = NumericalSemigroup::new(&flat)?;
            let gaps = ns.gaps();
            let frob = ns.frobenius().map_or(Value::Null, Value::from);
            let text = format!(
                "gaps: {}\nconductor {}\n",
                gaps.iter().map(u64::to_string).collect::<Vec<_>>().join(", "),
                ns.conductor()
            );
            (
                json::object([
                    ("gaps", Value::from(gaps)),
                    ("conductor", Value::from(ns.conductor())),
                    ("frobenius", frob),
                ]),
                text,
            )
        }
        SemigroupOp::Hull => {
            let h = s.hull_complement()?;
            let outside = h.outside_points();
            let text = format!(
                "vertices: {}\nnormalized volume {}\noutside K₊: {}\n",
                h.polygon_vertices().iter().map(|v| vector(v)).collect::<Vec<_>>().join(", "),
                h.normalized_volume(),
                outside.iter().map(|v| vector(v)).collect::<Vec<_>>().join(", ")
            );
            (
                json::object([
                    ("polygon_vertices", Value::from(h.polygon_vertices().to_vec())),
                    ("normalized_volume", Value::from(h.normalized_volume())),
                    ("outside_points", Value::from(outside)),
                ]),
                text,
            )
        }
    };
    Ok(Report::ok(result, text))
}

fn certificate_text(cert: &NonMembershipCertificate) -> String {
    let mut text = String::new();
    let [a, b] = cert.target;
    let _ = writeln!(text, "arc: {}", cert.arc);
    let _ = writeln!(text, "target a = {}", vector(&[a, b]));
    let _ = writeln!(text, "ord φ*(x^a − y^a) = {}", cert.ord_target);
    let _ = writeln!(text, "ord φ*(I_Δ) = {}", cert.ord_ideal);
    let verdict = if cert.verdict { "not in" } else { "inconclusive for" };
    let _ = writeln!(text, "verdict: {} {verdict} the saturation", monomial(&variables(2), &[a, b]));
    text
}

fn certify(j: &CertifyJob) -> Result<Report, CliError> {
    match j {
        CertifyJob::Hypersurface {
            alpha,
            beta,
            big_n,
            point,
        } => {
            let spec = hyp_spec(*alpha, *beta, *big_n)?;
            let (family, c) = arccert::hyp_certificate(&spec, *point)?;
            if !c.verify() {
                return Err(CliError::invariant("certificate failed its own verification"));
            }
            let text = format!("family: {}\n{}", family.name(), certificate_text(&c));
            Ok(Report::ok(
                json::object([
                    ("family", Value::from(family.name())),
                    ("certificate", cert::to_json(&c)),
                ]),
                text,
            ))
        }
        CertifyJob::Wu { r } => {
            let arc = arccert::wu_witness(*r)?;
            let ideal = DiagonalIdeal::new(vec![[1, 0], [1, 1], [0, 2]])?;
            let c = arccert::certify_nonmembership(arc, [0, *r], ideal)?;
            Ok(Report::ok(
                json::object([("family", Value::from("wu")), ("certificate", cert::to_json(&c))]),
                certificate_text(&c),
            ))
        }
        CertifyJob::Verify { certificate } => {
            let recorded = cert::from_json(cert::locate(certificate))?;
            let valid = recorded.verify();
            let again = NonMembershipCertificate::evaluate(
                recorded.arc.clone(),
                recorded.target,
                recorded.ideal.clone(),
            );
            let text = format!(
                "{}\nrecomputed: ord_target {}, ord_ideal {}, verdict {}\n",
                if valid { "certificate valid" } else { "certificate INVALID" },
                again.ord_target,
                again.ord_ideal,
                again.verdict
            );
            Ok(Report {
                result: json::object([
                    ("valid", Value::from(valid)),
                    (
                        "recomputed",
                        json::object([
                            ("ord_target", cert::order_to_json(again.ord_target)),
                            ("ord_ideal", cert::order_to_json(again.ord_ideal)),
                            ("verdict", Value::from(again.verdict)),
                        ]),
                    ),
                ]),
                text,
                failed: !valid,
            })
        }
    }
}

fn ideal_semigroup(gens: &[Vec<u64>]) -> Result<AffineSemigroup, CliError> {
    let s = affine(gens)?;
    if s.generators().len() != gens.len() {
        return Err(CliError::invalid("generators must be distinct"));
    }
    Ok(s)
}

fn binomials_json(bs: &[Binomial]) -> Value {
    Value::Array(
        bs.iter()
            .map(|b| {
                json::object([
                    ("lead", Value::from(b.lead().to_vec())),
                    ("trail", Value::from(b.trail().to_vec())),
                    ("text", Value::from(b.to_string())),
                ])
            })
            .collect(),
    )
}

fn binomials_text(bs: &[Binomial]) -> String {
    bs.iter().map(|b| format!("{b}\n")).collect()
}

fn ideal(j: &IdealJob) -> Result<Report, CliError> {
    match j {
        IdealJob::Kernel { generators } => {
            let s = ideal_semigroup(generators)?;
            let rels = torideal::lattice_kernel(&s)?;
            let bs: Vec<Binomial> = rels.iter().map(|r| r.binomial()).collect();
            let vectors: Vec<Vec<i64>> = rels.iter().map(|r| r.vector().to_vec()).collect();
            Ok(Report::ok(
                json::encode_big(json::object([
                    ("relations", Value::from(vectors)),
                    ("binomials", binomials_json(&bs)),
                ])),
                binomials_text(&bs),
            ))
        }
        IdealJob::Generators {
            generators,
            degree_bound,
        } => {
            let s = ideal_semigroup(generators)?;
            let bs = torideal::degree_bounded_generators(&s, *degree_bound)?;
            if !torideal::verify_vanishing(&bs, &s)? {
                return Err(CliError::invariant("a computed binomial does not vanish"));
            }
            let text = format!(
                "{}(fibers connected up to degree {degree_bound})\n",
                binomials_text(&bs)
            );
            Ok(Report::ok(
                json::object([
                    ("degree_bound", Value::from(*degree_bound)),
                    ("binomials", binomials_json(&bs)),
                ]),
                text,
            ))
        }
        IdealJob::Verify {
            generators,
            binomials,
        } => {
            let s = ideal_semigroup(generators)?;
            let bs: Vec<Binomial> = binomials
                .iter()
                .map(|b| Binomial::new(b.lead.clone(), b.trail.clone()))
                .collect();
            let ok = torideal::verify_vanishing(&bs, &s)?;
            Ok(Report {
                result: json::object([("vanishing", Value::from(ok))]),
                text: format!("{}\n", if ok { "all binomials vanish" } else { "some binomial does not vanish" }),
                failed: !ok,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn superscripts() {
        assert_eq!(superscript(0), "⁰");
        assert_eq!(superscript(11), "¹¹");
        assert_eq!(superscript(309), "³⁰⁹");
    }

    #[test]
    fn monomials() {
        let vars = variables(2);
        assert_eq!(monomial(&vars, &[1, 0]), "u");
        assert_eq!(monomial(&vars, &[3, 11]), "u³v¹¹");
        assert_eq!(monomial(&vars, &[0, 5]), "v⁵");
        assert_eq!(monomial(&vars, &[0, 0]), "1");
    }

    #[test]
    fn hypersurface_text_matches_presentation() {
        let r = hypersurface(&HypersurfaceJob {
            alpha: 3,
            beta: 11,
            big_n: 5,
            bounds: None,
        })
        .unwrap();
        assert!(r.text.contains("(u,v) ↦ (u, u³v¹¹, u³v¹², u³v¹³, u³v¹⁴, v⁵)"), "{}", r.text);
        assert!(r.text.contains("X: y⁵ − x¹⁵z¹¹ = 0"));
        assert!(r.text.contains("T^s = ⟨5, 11, 12, 13, 14⟩"));
    }
}
