//! Browser bindings. Every entry point takes and returns strings; results are
//! JSON objects with either the payload or an `error` field, so the same
//! functions run natively under `cargo test`.

use serde::Serialize;
use serde_json::json;
use simcoal::engine::greatest_coalgebraic_sim;
use simcoal::lts::default_alphabet;
use simcoal::stability::{check_left_stable, check_right_stable, check_stable};
use simcoal::{
    make_order, parse_term, unify_alphabets, ActionPartition, Budget, Mode, StepFunction,
};
use wasm_bindgen::prelude::*;

/// Larger checks would stall the page.
const INSTANCE_CAP: u64 = 200_000;

fn respond<T: Serialize>(result: Result<T, String>) -> String {
    match result {
        Ok(v) => serde_json::to_string(&v).unwrap_or_else(|e| json!({ "error": e.to_string() }).to_string()),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

fn partition(text: &str) -> Result<Option<ActionPartition>, String> {
    if text.trim().is_empty() {
        return Ok(None);
    }
    ActionPartition::from_json(text).map(Some).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct Similarity {
    order: String,
    alphabet: Vec<String>,
    rows: Vec<String>,
    cols: Vec<String>,
    matrix: Vec<Vec<bool>>,
    /// Initial state against initial state.
    root: bool,
}

/// Greatest simulation between two term processes under an order expression.
#[wasm_bindgen]
pub fn similarity(lhs: &str, rhs: &str, order: &str, partition_json: &str) -> String {
    respond((|| {
        let x = parse_term(lhs).map_err(|e| format!("left: {e}"))?;
        let y = parse_term(rhs).map_err(|e| format!("right: {e}"))?;
        let (x, y, _) = unify_alphabets(&x, &y).map_err(|e| e.to_string())?;
        let p = partition(partition_json)?;
        let o = make_order(order, x.alphabet(), p.as_ref()).map_err(|e| e.to_string())?;
        let rel = greatest_coalgebraic_sim(&x, &y, &o, Mode::Fast).map_err(|e| e.to_string())?;
        let matrix = (0..x.state_count())
            .map(|a| (0..y.state_count()).map(|b| rel.contains(a, b)).collect())
            .collect();
        let root = match (x.initial(), y.initial()) {
            (Some(a), Some(b)) => rel.contains(a, b),
            _ => false,
        };
        Ok(Similarity {
            order: o.name().to_string(),
            alphabet: x.alphabet().to_vec(),
            rows: (0..x.state_count()).map(|s| x.state_label(s)).collect(),
            cols: (0..y.state_count()).map(|s| y.state_label(s)).collect(),
            matrix,
            root,
        })
    })())
}

/// One of `right-stable`, `left-stable` or `stable` for an order expression,
/// returning the report plus its text rendering.
#[wasm_bindgen]
pub fn stability(law: &str, order: &str, sizes: &str, alphabet: u32) -> String {
    respond((|| {
        let k = alphabet as usize;
        if k == 0 || k > 3 {
            return Err("alphabet size must be 1 to 3".to_string());
        }
        let sizes: Vec<usize> = sizes
            .split(',')
            .map(|s| s.trim().parse().map_err(|_| format!("bad size `{s}`")))
            .collect::<Result<_, _>>()?;
        if sizes.iter().any(|&s| s == 0 || s > 4) {
            return Err("sizes must be 1 to 4".to_string());
        }
        let o = make_order(order, &default_alphabet(k), None).map_err(|e| e.to_string())?;
        let budget = Budget {
            instances: INSTANCE_CAP,
            ..Budget::default()
        };
        let report = match (law, sizes.as_slice()) {
            ("right-stable", &[a, b]) => check_right_stable(&o, a, b, k, &budget),
            ("left-stable", &[a, b]) => check_left_stable(&o, a, b, k, &budget),
            ("stable", &[a, b, c, d]) => check_stable(&o, [a, b, c, d], k, &budget),
            ("right-stable" | "left-stable", _) => return Err(format!("{law} takes 2 sizes")),
            ("stable", _) => return Err("stable takes 4 sizes".to_string()),
            _ => return Err(format!("unknown law `{law}`")),
        }
        .map_err(|e| e.to_string())?;
        Ok(json!({ "text": report.to_string(), "report": report }))
    })())
}

/// Whether `u ⊑ v` for step functions given as JSON arrays of successor
/// lists, one list per action.
#[wasm_bindgen]
pub fn leq(order: &str, carrier: u32, u: &str, v: &str) -> String {
    respond((|| {
        let n = carrier as usize;
        let parse = |text: &str| -> Result<StepFunction, String> {
            let lists: Vec<Vec<usize>> = serde_json::from_str(text).map_err(|e| e.to_string())?;
            let refs: Vec<&[usize]> = lists.iter().map(Vec::as_slice).collect();
            StepFunction::from_lists(n, &refs).map_err(|e| e.to_string())
        };
        let (u, v) = (parse(u)?, parse(v)?);
        if u.alphabet_size() != v.alphabet_size() {
            return Err("u and v need the same number of actions".to_string());
        }
        let o = make_order(order, &default_alphabet(u.alphabet_size()), None).map_err(|e| e.to_string())?;
        let forward = o.leq(&u, &v).map_err(|e| e.to_string())?;
        let backward = o.leq(&v, &u).map_err(|e| e.to_string())?;
        Ok(json!({ "order": o.name(), "leq": forward, "geq": backward }))
    })())
}
