#![no_main]

use libfuzzer_sys::fuzz_target;
use symkin::bresse::{balls_point_bresse, bresse_set};
use symkin::motion_spec::{evaluate, evaluate_geometric, parse_spec};
use symkin::polodes::{canonicalize, polode_curvatures};
use symkin::rigid_motion::pole_report;

// First line: parameter value and order; the rest is a motion file.
// Evaluation and analysis may fail but must not panic.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let (head, body) = text.split_once('\n').unwrap_or(("0 6", text));
    let mut it = head.split_whitespace();
    let at: f64 = it.next().and_then(|s| s.parse().ok()).unwrap_or(0.0);
    let order: usize = it.next().and_then(|s| s.parse().ok()).unwrap_or(6);
    let Ok(spec) = parse_spec(body) else { return };
    if let Ok(state) = evaluate(&spec, at, order) {
        let _ = pole_report(&state, state.max_order());
        for k in 2..=state.max_order() {
            let _ = bresse_set(&state, k);
        }
        let _ = balls_point_bresse(&state);
        let _ = canonicalize(&state);
    }
    if let Ok(g) = evaluate_geometric(&spec, at, order) {
        let _ = polode_curvatures(&g);
    }
});
