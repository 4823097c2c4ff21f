//! Report assembly: deterministic JSON certificates plus a markdown summary
//! mirroring the six-row Weyl-group table, with timings kept in a sidecar
//! field outside the certified payload.

use crate::models::ModelSet;
use crate::modular::ModularReport;
use crate::weyl::verify::WeylReport;
use serde::Serialize;
use std::collections::BTreeMap;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Serialize)]
pub struct ModelReport {
    pub name: String,
    pub dim: usize,
    pub jacobi_ok: bool,
    pub automorphism_failures: Vec<String>,
    pub scalars: Option<String>,
}

#[derive(Serialize)]
pub struct VerificationReport {
    pub tool_version: String,
    pub arithmetic_mode: String,
    pub certified: bool,
    pub models: Vec<ModelReport>,
    pub gradings: BTreeMap<String, serde_json::Value>,
    pub weyl: Vec<WeylReport>,
    pub modular: Vec<ModularReport>,
    /// wall-clock sidecar; not part of the certified payload
    pub timings_ms: BTreeMap<String, u128>,
}

pub fn model_reports(models: &ModelSet, check_auts: bool) -> Vec<ModelReport> {
    let mut out = Vec::new();
    let handles = [
        &models.tits_oct.handle,
        &models.tits_alb.handle,
        &models.elduque.handle,
        &models.five.handle,
        &models.adams.handle,
        &models.a1a5.handle,
    ];
    for h in handles {
        let mut alg = h.algebra.clone();
        let jac = alg.check_jacobi().is_ok();
        let fails = if check_auts { h.verify_auts() } else { vec![] };
        out.push(ModelReport {
            name: h.name.clone(),
            dim: h.algebra.dim,
            jacobi_ok: jac,
            automorphism_failures: fails,
            scalars: h.meta.get("scalars").cloned(),
        });
    }
    out
}

/// The six-row summary table in markdown, computed against claimed values.
pub fn markdown_summary(weyl: &[WeylReport]) -> String {
    let structures = [
        "Mat3x2(Z2) : (GL3(Z2) x D3)",
        "Z2^4 : (GL3(Z2) x Z2)",
        "Z2^2 : W(F4)",
        "Z3^2 : (GL2(Z3) x D6)",
        "(Sp4(Z2) x Z2) : Z2^5",
        "Z2^4 : ((Z2^2:S3) x (Z2^2:Z2))",
    ];
    let mut md = String::new();
    md.push_str("| grading | type (computed) | Weyl order (computed) | Weyl order (claimed) | structure | status |\n");
    md.push_str("|---|---|---|---|---|---|\n");
    for r in weyl.iter() {
        md.push_str(&format!(
            "| Gamma_{} | {:?} | {} | {} | {} | {} |\n",
            r.gamma,
            r.grading_type,
            r.closure_order,
            r.claimed_order,
            structures.get(r.gamma - 1).unwrap_or(&""),
            if r.pass { "pass" } else { "FAIL" }
        ));
    }
    md
}
