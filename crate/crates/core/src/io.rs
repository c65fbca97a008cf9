//! JSON documents. Field elements are always canonical strings and every
//! object is a `serde_json::Map`, whose keys serialize in sorted order, so
//! the output is byte-for-byte deterministic.

use serde_json::{json, Map, Value};

use crate::bases::{represent_formula, transition_formula, BasisId, BasisSet, Operator};
use crate::enumerate::EnumerationSummary;
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::linalg::Matrix;
use crate::shape121::{admissible, construct, derived_params, extract_parameter_array, Admissibility, DerivedParams, ParameterArray};
use crate::tdcore::{verify_pair, verify_td_system, Orderings, TdSystem, VerificationReport};

fn bad(msg: impl Into<String>) -> Error {
    Error::Json(msg.into())
}

pub fn field_to_json(field: Field) -> Value {
    serde_json::to_value(field).expect("field descriptor serializes")
}

pub fn field_from_json(v: &Value) -> Result<Field> {
    Ok(serde_json::from_value(v.clone())?)
}

fn element_to_json(x: &FieldElement) -> Value {
    Value::String(x.to_string())
}

/// Accepts canonical strings and, for convenience, bare JSON integers.
fn element_from_json(field: Field, v: &Value) -> Result<FieldElement> {
    match v {
        Value::String(s) => field.parse(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => field.parse(&n.to_string()),
        other => Err(bad(format!("expected a field element, got {other}"))),
    }
}

fn triple_from_json(field: Field, v: Option<&Value>, key: &str) -> Result<[FieldElement; 3]> {
    let items = v
        .and_then(Value::as_array)
        .ok_or_else(|| bad(format!("{key:?} must be an array of three elements")))?;
    let parsed = items.iter().map(|x| element_from_json(field, x)).collect::<Result<Vec<_>>>()?;
    parsed.try_into().map_err(|_| bad(format!("{key:?} must have exactly three entries")))
}

fn get<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| bad(format!("missing key {key:?}")))
}

pub fn parameter_array_to_json(pa: &ParameterArray) -> Value {
    json!({
        "field": field_to_json(pa.field()),
        "theta": pa.theta.iter().map(element_to_json).collect::<Vec<_>>(),
        "thetastar": pa.thetastar.iter().map(element_to_json).collect::<Vec<_>>(),
        "varphi": element_to_json(&pa.varphi),
        "phi": element_to_json(&pa.phi),
    })
}

pub fn parameter_array_from_json(v: &Value) -> Result<ParameterArray> {
    let field = field_from_json(get(v, "field")?)?;
    ParameterArray::new(
        triple_from_json(field, v.get("theta"), "theta")?,
        triple_from_json(field, v.get("thetastar"), "thetastar")?,
        element_from_json(field, get(v, "varphi")?)?,
        element_from_json(field, get(v, "phi")?)?,
    )
}

pub fn derived_to_json(d: &DerivedParams) -> Value {
    json!({
        "varphi1": element_to_json(&d.varphi1),
        "varphi2": element_to_json(&d.varphi2),
        "phi1": element_to_json(&d.phi1),
        "phi2": element_to_json(&d.phi2),
    })
}

pub fn admissibility_to_json(a: &Admissibility) -> Value {
    json!({ "ok": a.ok, "failed": a.failed })
}

pub fn verification_to_json(r: &VerificationReport) -> Value {
    let mut m = Map::new();
    m.insert("diagonalizable_A".into(), r.diagonalizable_a.into());
    m.insert("diagonalizable_Astar".into(), r.diagonalizable_astar.into());
    m.insert("ordering_E".into(), r.ordering_e.into());
    m.insert("ordering_Estar".into(), r.ordering_estar.into());
    m.insert("tridiagonal_AstarE".into(), r.tridiagonal_astar_e.into());
    m.insert("tridiagonal_AEstar".into(), r.tridiagonal_a_estar.into());
    m.insert("irreducible".into(), r.irreducible.into());
    m.insert("shape".into(), r.shape.map_or(Value::Null, |s| json!(s)));
    m.insert("overall".into(), r.overall.into());
    m.insert("failed".into(), json!(r.failed));
    m.insert("skipped".into(), json!(r.skipped));
    if let Some(w) = &r.witness {
        let vectors: Vec<Vec<Value>> = w.vectors().iter().map(|v| v.iter().map(element_to_json).collect()).collect();
        m.insert("witness".into(), json!(vectors));
    }
    Value::Object(m)
}

pub fn system_to_json(tds: &TdSystem) -> Value {
    json!({
        "field": field_to_json(tds.field()),
        "A": tds.a.to_json(),
        "Astar": tds.astar.to_json(),
        "theta": tds.theta.iter().map(element_to_json).collect::<Vec<_>>(),
        "thetastar": tds.thetastar.iter().map(element_to_json).collect::<Vec<_>>(),
    })
}

/// Matrices to verify, with optional eigenvalue orderings.
#[derive(Clone, Debug)]
pub struct SystemInput {
    pub field: Field,
    pub a: Matrix,
    pub astar: Matrix,
    pub orderings: Option<Orderings>,
}

pub fn system_from_json(v: &Value) -> Result<SystemInput> {
    let field = field_from_json(get(v, "field")?)?;
    let a = Matrix::from_json(field, get(v, "A")?)?;
    let astar = Matrix::from_json(field, get(v, "Astar")?)?;
    let orderings = match (v.get("theta"), v.get("thetastar")) {
        (None, None) => None,
        (t, s) => Some((triple_from_json(field, t, "theta")?, triple_from_json(field, s, "thetastar")?)),
    };
    Ok(SystemInput { field, a, astar, orderings })
}

#[derive(Clone, Debug)]
pub struct VerifyOutcome {
    pub document: Value,
    /// True when the input is a TD system of shape (1,2,1).
    pub certified: bool,
}

/// Verifies matrices, searching for orderings when none are given.
pub fn verify_document(input: &SystemInput) -> Result<VerifyOutcome> {
    let (report, orderings) = match &input.orderings {
        Some((t, s)) => (verify_td_system(&input.a, &input.astar, t, s)?, Some((t.clone(), s.clone()))),
        None => verify_pair(&input.a, &input.astar)?,
    };
    let mut doc = Map::new();
    doc.insert("field".into(), field_to_json(input.field));
    doc.insert("report".into(), verification_to_json(&report));
    if let Some((t, s)) = orderings {
        doc.insert("theta".into(), json!(t.iter().map(element_to_json).collect::<Vec<_>>()));
        doc.insert("thetastar".into(), json!(s.iter().map(element_to_json).collect::<Vec<_>>()));
    }
    Ok(VerifyOutcome { document: Value::Object(doc), certified: report.is_shape_121() })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReportStatus {
    /// Admissible, verified, and every formula agrees with its numeric counterpart.
    Ok,
    Inadmissible(Vec<String>),
    /// The construction failed verification, did not round-trip, or a
    /// formula disagreed with its numeric counterpart.
    CheckFailed,
}

#[derive(Clone, Debug)]
pub struct ReportDocument {
    pub document: Value,
    pub status: ReportStatus,
}

fn labelled(entries: Vec<(&str, Value)>) -> Value {
    Value::Object(entries.into_iter().map(|(k, v)| (k.to_string(), v)).collect())
}

/// Everything known about one parameter array. With `full`, the six bases,
/// 30 transition matrices and 12 representation matrices are included.
/// The cross-checks run either way.
pub fn report(pa: &ParameterArray, full: bool) -> Result<ReportDocument> {
    let mut doc = Map::new();
    doc.insert("parameter_array".into(), parameter_array_to_json(pa));
    doc.insert(
        "derived_params".into(),
        derived_params(pa).map_or(Value::Null, |d| derived_to_json(&d)),
    );
    let adm = admissible(pa);
    doc.insert("admissibility".into(), admissibility_to_json(&adm));
    if !adm.ok {
        return Ok(ReportDocument { document: Value::Object(doc), status: ReportStatus::Inadmissible(adm.failed) });
    }

    let tds = construct(pa)?;
    let verification = tds.verify()?;
    doc.insert("verification".into(), verification_to_json(&verification));
    let roundtrip = extract_parameter_array(&tds)? == *pa;
    doc.insert("roundtrip".into(), roundtrip.into());
    let mut failures: Vec<String> = Vec::new();

    let set = BasisSet::canonical(&tds)?;
    let mut transitions = Vec::new();
    for from in BasisId::ALL {
        for to in BasisId::ALL {
            if from == to {
                continue;
            }
            let numeric = set.transition(from, to);
            if transition_formula(pa, from, to)? != numeric {
                failures.push(format!("transition {from}->{to}"));
            }
            transitions.push(labelled(vec![
                ("from", from.tag().into()),
                ("to", to.tag().into()),
                ("matrix", numeric.to_json()),
            ]));
        }
    }
    let mut representations = Vec::new();
    for id in BasisId::ALL {
        for op in [Operator::A, Operator::Astar] {
            let numeric = set.represent(op, id);
            if represent_formula(pa, op, id)? != numeric {
                failures.push(format!("represent {} in {id}", op.tag()));
            }
            representations.push(labelled(vec![
                ("operator", op.tag().into()),
                ("basis", id.tag().into()),
                ("matrix", numeric.to_json()),
            ]));
        }
    }

    doc.insert("cross_check".into(), failures.is_empty().into());
    doc.insert("cross_check_failures".into(), json!(failures));
    if full {
        let bases: Map<String, Value> = BasisId::ALL.iter().map(|&id| (id.tag().to_string(), set.basis(id).to_json())).collect();
        doc.insert("bases".into(), Value::Object(bases));
        doc.insert("transitions".into(), Value::Array(transitions));
        doc.insert("representations".into(), Value::Array(representations));
    }
    let passed = failures.is_empty() && roundtrip && verification.is_shape_121();
    let status = if passed { ReportStatus::Ok } else { ReportStatus::CheckFailed };
    Ok(ReportDocument { document: Value::Object(doc), status })
}

pub fn enumeration_to_json(s: &EnumerationSummary) -> Value {
    let mut m = Map::new();
    m.insert("p".into(), s.p.into());
    m.insert("grid".into(), Value::String(s.grid.to_string()));
    m.insert("passing_i".into(), s.distinct.into());
    m.insert("passing_i_ii".into(), s.nonzero.into());
    m.insert("admissible".into(), s.admissible.into());
    if let Some(o) = &s.orbits {
        let sizes: Map<String, Value> = o.sizes.iter().map(|(k, v)| (k.to_string(), (*v).into())).collect();
        m.insert("orbits".into(), json!({ "count": o.count, "sizes": sizes, "total": o.total() }));
    }
    Value::Object(m)
}

/// Pretty JSON with a trailing newline.
pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
    s.push('\n');
    s
}
