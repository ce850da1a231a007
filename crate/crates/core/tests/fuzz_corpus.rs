//! Replays the fuzz corpus and a batch of seeded mutations of it through the
//! same checks as the fuzz targets, so they run on a stable toolchain too.

mod support;

use std::path::Path;

use rand::Rng;
use symkin::bresse::{balls_point_bresse, bresse_set};
use symkin::motion_spec::{evaluate, evaluate_geometric, parse_spec, serialize_spec};
use symkin::polodes::{canonicalize, polode_curvatures};
use symkin::rigid_motion::pole_report;

fn corpus(target: &str) -> Vec<Vec<u8>> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fuzz/corpus").join(target);
    let mut files: Vec<_> = std::fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    files.iter().map(|p| std::fs::read(p).unwrap()).collect()
}

fn parse_target(data: &[u8]) {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(spec) = parse_spec(text) {
        let out = serialize_spec(&spec);
        let back = parse_spec(&out).expect("serialized spec parses");
        assert_eq!(back, spec);
        assert_eq!(serialize_spec(&back), out);
    }
}

fn evaluate_target(data: &[u8]) {
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
}

/// Byte-level edits in the style of a mutation fuzzer, biased towards the
/// characters the grammar cares about.
fn mutate(r: &mut rand_chacha::ChaCha8Rng, seed: &[u8]) -> Vec<u8> {
    const ALPHABET: &[u8] = b"0123456789.-+eE []=#\n\tnamethpolysincox_,";
    let mut d = seed.to_vec();
    for _ in 0..r.gen_range(1..6) {
        let pos = if d.is_empty() { 0 } else { r.gen_range(0..d.len()) };
        match r.gen_range(0..4) {
            0 if !d.is_empty() => {
                d.remove(pos);
            }
            1 => d.insert(pos, ALPHABET[r.gen_range(0..ALPHABET.len())]),
            2 if !d.is_empty() => d[pos] = ALPHABET[r.gen_range(0..ALPHABET.len())],
            _ => {
                let end = (pos + r.gen_range(0..12)).min(d.len());
                let chunk = d[pos..end].to_vec();
                let at = if d.is_empty() { 0 } else { r.gen_range(0..d.len()) };
                d.splice(at..at, chunk);
            }
        }
    }
    d
}

#[test]
fn corpus_seeds_pass() {
    for seed in corpus("parse_spec") {
        parse_target(&seed);
    }
    for seed in corpus("evaluate_spec") {
        evaluate_target(&seed);
    }
}

#[test]
fn mutated_seeds_never_panic() {
    let mut r = support::rng(31);
    let (parse, eval) = (corpus("parse_spec"), corpus("evaluate_spec"));
    for i in 0..3000 {
        parse_target(&mutate(&mut r, &parse[i % parse.len()]));
        evaluate_target(&mutate(&mut r, &eval[i % eval.len()]));
    }
}
