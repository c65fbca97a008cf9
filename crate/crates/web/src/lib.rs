//! Browser bindings. Every function takes and returns JSON text so the page
//! needs no glue beyond `JSON.parse`.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use tdpair::bases::{transition_formula, BasisId, BasisSet};
use tdpair::io;
use tdpair::sample::{self, random_admissible};
use tdpair::shape121::{admissible, construct};
use tdpair::Field;

fn parse(text: &str) -> Result<Value, String> {
    serde_json::from_str(text).map_err(|e| format!("invalid JSON: {e}"))
}

/// Report document for a parameter array, with a `status` of `ok`,
/// `inadmissible` or `check_failed`.
pub fn analyze_json(array: &str) -> Result<String, String> {
    let pa = io::parameter_array_from_json(&parse(array)?).map_err(|e| e.to_string())?;
    let report = io::report(&pa, false).map_err(|e| e.to_string())?;
    let mut doc = report.document;
    let status = match report.status {
        io::ReportStatus::Ok => "ok",
        io::ReportStatus::Inadmissible(_) => "inadmissible",
        io::ReportStatus::CheckFailed => "check_failed",
    };
    doc["status"] = json!(status);
    Ok(doc.to_string())
}

/// The transition matrix between two bases, from the closed form and from the
/// constructed bases, so the page can show that they agree.
pub fn transition_json(array: &str, from: &str, to: &str) -> Result<String, String> {
    let pa = io::parameter_array_from_json(&parse(array)?).map_err(|e| e.to_string())?;
    let from: BasisId = from.parse().map_err(|e: tdpair::Error| e.to_string())?;
    let to: BasisId = to.parse().map_err(|e: tdpair::Error| e.to_string())?;
    let adm = admissible(&pa);
    if !adm.ok {
        return Err(format!("parameter array is not admissible: fails {}", adm.failed.join(", ")));
    }
    let tds = construct(&pa).map_err(|e| e.to_string())?;
    let set = BasisSet::canonical(&tds).map_err(|e| e.to_string())?;
    let formula = transition_formula(&pa, from, to).map_err(|e| e.to_string())?;
    let numeric = set.transition(from, to);
    Ok(json!({
        "from": from.tag(),
        "to": to.tag(),
        "formula": formula.to_json(),
        "numeric": numeric.to_json(),
        "agree": formula == numeric,
    })
    .to_string())
}

/// A random admissible array over the rationals (`p = 0`) or GF(p).
pub fn random_array_json(p: u32, seed: u32) -> Result<String, String> {
    let field = if p == 0 { Field::Rationals } else { Field::prime(p.into()).map_err(|e| e.to_string())? };
    if field == Field::Prime(2) {
        return Err("GF(2) has no admissible arrays".into());
    }
    let pa = random_admissible(field, &mut sample::rng(seed.into()));
    Ok(io::parameter_array_to_json(&pa).to_string())
}

#[wasm_bindgen]
pub fn analyze(array: &str) -> Result<String, JsError> {
    analyze_json(array).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn transition(array: &str, from: &str, to: &str) -> Result<String, JsError> {
    transition_json(array, from, to).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn random_array(p: u32, seed: u32) -> Result<String, JsError> {
    random_array_json(p, seed).map_err(|e| JsError::new(&e))
}

/// Tags accepted by [`transition`], in display order.
#[wasm_bindgen]
pub fn basis_tags() -> Vec<String> {
    BasisId::ALL.iter().map(|id| id.tag().to_string()).collect()
}
