//! WebAssembly bindings behind `www/index.html`.
//!
//! Every export returns a JSON string. The `*_json` functions hold the logic
//! and are plain Rust, so they can be exercised off the browser.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use lqt_core::algebras::{named, AlgebraJson, StructAlgebra};
use lqt_core::exact_linear::Rat;
use lqt_core::rep_theory::{hook_length_count, Partition, SpechtModule};
use lqt_core::tables::{decompose_table, homology_table, ComplexKind};

/// Largest chain group the page will build; keeps the tab responsive.
pub const WEB_MAX_BASIS: u128 = 20_000;

/// A corpus name, or a structure-constant table in JSON.
fn algebra(spec: &str) -> Result<(String, StructAlgebra), String> {
    let spec = spec.trim();
    if let Some(a) = named(spec) {
        return Ok((spec.to_string(), a));
    }
    let j: AlgebraJson = serde_json::from_str(spec).map_err(|e| format!("algebra: {e}"))?;
    let a = StructAlgebra::from_json(&j).map_err(|e| format!("algebra: {e}"))?;
    Ok(("custom".into(), a))
}

fn to_json(v: &impl Serialize) -> String {
    serde_json::to_string(v).expect("serializable")
}

pub fn homology_json(complex: &str, algebra_spec: &str, n: usize, max_degree: usize) -> Result<String, String> {
    let kind: ComplexKind = complex.parse().map_err(|e: lqt_core::tables::TableError| e.to_string())?;
    if n == 0 {
        return Err("n must be positive".into());
    }
    let (name, a) = algebra(algebra_spec)?;
    homology_table(kind, &name, &a, n, max_degree, WEB_MAX_BASIS).map(|t| to_json(&t)).map_err(|e| e.to_string())
}

pub fn isotypes_json(algebra_spec: &str, n: usize, max_degree: usize) -> Result<String, String> {
    if n == 0 {
        return Err("n must be positive".into());
    }
    let (name, a) = algebra(algebra_spec)?;
    decompose_table(&name, &a, n, max_degree, WEB_MAX_BASIS).map(|t| to_json(&t)).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct SpechtView {
    shape: String,
    dim: usize,
    hook_length_count: u64,
    tableaux: Vec<Vec<Vec<usize>>>,
    /// Matrices of the adjacent transpositions `(i, i+1)` on the polytabloid basis.
    generators: Vec<Vec<Vec<Rat>>>,
    coxeter_relations_hold: bool,
}

pub fn specht_json(shape: &str) -> Result<String, String> {
    let p: Partition = shape.parse().map_err(|e| format!("shape: {e}"))?;
    if p.is_empty() {
        return Err("shape must be nonempty".into());
    }
    let s = SpechtModule::new(&p).map_err(|e| e.to_string())?;
    Ok(to_json(&SpechtView {
        shape: p.to_string(),
        dim: s.dim(),
        hook_length_count: hook_length_count(&p),
        tableaux: s.basis.iter().map(|t| t.rows.clone()).collect(),
        generators: s.generators().iter().map(|g| g.to_dense()).collect(),
        coxeter_relations_hold: s.coxeter_violation().is_none(),
    }))
}

/// Homology of the `ce`, `cyclic` or `bar` complex.
#[wasm_bindgen]
pub fn homology(complex: &str, algebra: &str, n: usize, max_degree: usize) -> Result<String, JsError> {
    homology_json(complex, algebra, n, max_degree).map_err(|e| JsError::new(&e))
}

/// Isotypic decomposition of the chains of `gl_n A` under `gl_n k`.
#[wasm_bindgen]
pub fn isotypes(algebra: &str, n: usize, max_degree: usize) -> Result<String, JsError> {
    isotypes_json(algebra, n, max_degree).map_err(|e| JsError::new(&e))
}

/// Specht module of a shape such as `2,1`.
#[wasm_bindgen]
pub fn specht(shape: &str) -> Result<String, JsError> {
    specht_json(shape).map_err(|e| JsError::new(&e))
}
