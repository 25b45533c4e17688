use gentaft::axioms::{check_axioms, Scope};
use gentaft::doubles::{Double, DoubleError, DoubleKind};
use gentaft::dual::check_duality;
use gentaft::pii::{classify, oracle_pairs, scan as run_scan, ScanConfig, ScanMode};
use gentaft::structure::{structure_report, verify_radford_s4};
use gentaft::{GtaParameters, TaftAlgebra};
use serde::Serialize;
use serde_json::{json, Value};

use crate::{InvalidInput, Outcome};

pub const SCHEMA_VERSION: u32 = 1;

/// Integrals need dense functionals; above this dimension `check` skips them
/// unless asked.
pub const STRUCTURE_MAX_DIMENSION: usize = 4096;

fn to_json<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("reports serialize")
}

pub fn check(p: &GtaParameters, allow_large: bool) -> Outcome {
    let classifier = classify(p);
    let certificates = oracle_pairs(p);
    let has_pair = !certificates.is_empty();
    let agrees = classifier.has_pair == has_pair;
    let structure = if p.dimension() <= STRUCTURE_MAX_DIMENSION || allow_large {
        let h = TaftAlgebra::new(p.clone());
        match structure_report(&h) {
            Ok(report) => to_json(&report),
            Err(e) => json!({ "error": e.to_string() }),
        }
    } else {
        json!({ "skipped": format!("dimension {} exceeds {STRUCTURE_MAX_DIMENSION}; pass --allow-large", p.dimension()) })
    };
    let summary = format!(
        "{p}: dimension {}, {} pair(s) in involution, classifier {}",
        p.dimension(),
        certificates.len(),
        if agrees { "agrees" } else { "DISAGREES" }
    );
    Outcome {
        report: json!({
            "params": to_json(p),
            "valid": true,
            "dimension": p.dimension(),
            "structure": structure,
            "classifier": to_json(&classifier),
            "has_pair": has_pair,
            "has_modular_pair": certificates.iter().any(|c| c.modular),
            "certificates": to_json(&certificates),
            "classifier_agrees": agrees,
        }),
        summary,
        ok: agrees,
    }
}

pub fn scan(
    max_n: u32,
    mode: ScanMode,
    samples: usize,
    seed: u64,
) -> Result<Outcome, InvalidInput> {
    let config = ScanConfig {
        max_n,
        mode,
        samples_per_order: samples,
        seed,
    };
    let report = run_scan(&config).map_err(|e| InvalidInput(e.to_string()))?;
    let disagreements = report.disagreements();
    let pii_free: usize = report.rows.iter().map(|r| r.pii_free).sum();
    let summary = format!(
        "{} tuples for N <= {max_n}, {pii_free} without a pair, {disagreements} disagreement(s)",
        report.tuples()
    );
    let mut body = to_json(&report);
    if let Value::Object(map) = &mut body {
        map.insert("tuples".into(), json!(report.tuples()));
        map.insert("disagreements".into(), json!(disagreements));
        map.insert(
            "first_disagreement".into(),
            to_json(&report.first_disagreement()),
        );
    }
    Ok(Outcome {
        report: body,
        summary,
        ok: disagreements == 0,
    })
}

pub fn axioms(p: &GtaParameters, scope: Scope) -> Outcome {
    let h = TaftAlgebra::new(p.clone());
    let report = check_axioms(&h, &scope);
    let radford = verify_radford_s4(&h);
    let radford_ok = matches!(&radford, Ok(r) if r.holds);
    let radford_json = match &radford {
        Ok(r) => to_json(r),
        Err(e) => json!({ "error": e.to_string() }),
    };
    let failed: Vec<String> = report
        .outcomes
        .iter()
        .filter(|o| !o.passed())
        .map(|o| format!("{:?}", o.axiom))
        .collect();
    let ok = failed.is_empty() && radford_ok;
    let summary = if ok {
        format!("{p}: all axioms and the S^4 formula hold")
    } else {
        format!("{p}: failing {failed:?}, S^4 formula holds: {radford_ok}")
    };
    Outcome {
        report: json!({
            "params": to_json(p),
            "scope": to_json(&scope),
            "axioms": to_json(&report.outcomes),
            "radford_s4": radford_json,
        }),
        summary,
        ok,
    }
}

pub fn dual(p: &GtaParameters) -> Outcome {
    let h = TaftAlgebra::new(p.clone());
    let report = check_duality(&h);
    let ok = report.passed();
    let (b1, b2, a1, a2) = report.dual_tuple;
    Outcome {
        summary: format!("{p}: dual tuple ({b1}, {b2}, {a1}, {a2}), checks pass: {ok}"),
        report: json!({
            "params": to_json(p),
            "duality": to_json(&report),
        }),
        ok,
    }
}

pub fn double(
    p: &GtaParameters,
    samples: usize,
    seed: u64,
    allow_large: bool,
) -> Result<Outcome, InvalidInput> {
    let h = TaftAlgebra::new(p.clone());
    let d = match Double::new(&h, allow_large) {
        Ok(d) => d,
        Err(e @ DoubleError::TooLarge { .. }) => {
            return Err(InvalidInput(format!("{e} (--allow-large)")))
        }
        Err(e) => panic!("building the double: {e}"),
    };
    let mut ok = true;
    let mut kinds = serde_json::Map::new();
    for (name, kind) in [
        ("drinfeld", DoubleKind::Drinfeld),
        ("anti_drinfeld", DoubleKind::AntiDrinfeld),
    ] {
        let assoc = d
            .check_associativity(kind, samples, seed)
            .expect("kinds match");
        let unit = d.check_unit(kind).expect("kinds match");
        ok &= assoc.holds && unit.holds;
        kinds.insert(
            name.into(),
            json!({ "associativity": to_json(&assoc), "unit": to_json(&unit) }),
        );
    }
    let certificate = oracle_pairs(p).first().copied();
    let isomorphism = match &certificate {
        Some(cert) => {
            let check = d.pii_isomorphism_check(cert).expect("kinds match");
            ok &= check.holds();
            let mut v = to_json(&check);
            if let Value::Object(map) = &mut v {
                map.insert("holds".into(), json!(check.holds()));
            }
            v
        }
        None => Value::Null,
    };
    let summary = match certificate {
        Some(c) => format!(
            "{p}: double of dimension {}, isomorphism from (c, d) = ({}, {}) checked",
            d.dimension(),
            c.c,
            c.d
        ),
        None => format!(
            "{p}: double of dimension {}, no pair in involution to build an isomorphism from",
            d.dimension()
        ),
    };
    Ok(Outcome {
        report: json!({
            "params": to_json(p),
            "dimension": d.dimension(),
            "samples": samples,
            "seed": seed,
            "doubles": Value::Object(kinds),
            "isomorphism": isomorphism,
        }),
        summary,
        ok,
    })
}
