//! Bindings for the static demo page in `www/`.
//!
//! Each export takes plain integers and returns a JSON string, so the page
//! needs no glue beyond `JSON.parse`. Invalid input comes back as
//! `{"error": ...}` rather than a thrown exception.

use gentaft::pii::{classify, oracle_pairs};
use gentaft::structure::{structure_report, verify_radford_s4};
use gentaft::{GtaParameters, TaftAlgebra};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest order accepted by [`pii_free_map`]; the map visits `N^4` tuples.
pub const MAP_MAX_ORDER: u32 = 48;

/// Largest algebra [`structure_summary`] will build in the browser.
pub const STRUCTURE_MAX_DIMENSION: usize = 2048;

fn error(message: impl ToString) -> String {
    json!({ "error": message.to_string() }).to_string()
}

fn params(n: i32, a1: i32, a2: i32, b1: i32, b2: i32) -> Result<GtaParameters, String> {
    GtaParameters::new(n.into(), a1.into(), a2.into(), b1.into(), b2.into())
        .map_err(|e| e.to_string())
}

/// Classifier verdict next to the brute-force list of pairs in involution.
#[wasm_bindgen]
pub fn classify_tuple(n: i32, a1: i32, a2: i32, b1: i32, b2: i32) -> String {
    let p = match params(n, a1, a2, b1, b2) {
        Ok(p) => p,
        Err(e) => return error(e),
    };
    let report = classify(&p);
    let pairs = oracle_pairs(&p);
    json!({
        "params": p,
        "dimension": p.dimension(),
        "classifier": report,
        "pairs": pairs,
        "agrees": report.has_pair == !pairs.is_empty(),
    })
    .to_string()
}

/// For every `(a1, a2)`, how many valid `(b1, b2)` complete it and how many of
/// those algebras have no pair in involution.
#[wasm_bindgen]
pub fn pii_free_map(n: u32) -> String {
    if !(2..=MAP_MAX_ORDER).contains(&n) {
        return error(format!("order must be between 2 and {MAP_MAX_ORDER}"));
    }
    let m = n as i64;
    let mut valid = vec![vec![0u32; n as usize]; n as usize];
    let mut free = vec![vec![0u32; n as usize]; n as usize];
    for a1 in 0..m {
        for a2 in 0..m {
            for b1 in 0..m {
                for b2 in 0..m {
                    let Ok(p) = GtaParameters::new(m, a1, a2, b1, b2) else {
                        continue;
                    };
                    valid[a1 as usize][a2 as usize] += 1;
                    free[a1 as usize][a2 as usize] += !classify(&p).has_pair as u32;
                }
            }
        }
    }
    let total: u32 = valid.iter().flatten().sum();
    let total_free: u32 = free.iter().flatten().sum();
    json!({ "order": n, "valid": valid, "pii_free": free, "total": total, "total_pii_free": total_free })
        .to_string()
}

/// Integral, distinguished group-likes and the `S^4` check for one algebra.
#[wasm_bindgen]
pub fn structure_summary(n: i32, a1: i32, a2: i32, b1: i32, b2: i32) -> String {
    let p = match params(n, a1, a2, b1, b2) {
        Ok(p) => p,
        Err(e) => return error(e),
    };
    if p.dimension() > STRUCTURE_MAX_DIMENSION {
        return error(format!(
            "dimension {} is above the in-browser limit {STRUCTURE_MAX_DIMENSION}",
            p.dimension()
        ));
    }
    let h = TaftAlgebra::new(p.clone());
    let report = match structure_report(&h) {
        Ok(r) => r,
        Err(e) => return error(e),
    };
    let radford = match verify_radford_s4(&h) {
        Ok(r) => serde_json::to_value(r).unwrap_or(Value::Null),
        Err(e) => return error(e),
    };
    json!({ "params": p, "dimension": p.dimension(), "structure": report, "radford_s4": radford })
        .to_string()
}
