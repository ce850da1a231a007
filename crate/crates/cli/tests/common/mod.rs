//! Shared helpers for the CLI test targets.
#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub const PRESETS: [&str; 3] = ["pure-rotation", "rolling-wheel", "cardan"];
pub const TWO_PI: &str = "6.283185307179586";

pub fn preset_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures/presets").join(format!("{name}.motion"))
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn symkin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symkin")).args(args).output().expect("binary runs")
}

/// The artifacts compared against the golden files, as (file name, bytes).
pub fn artifacts(name: &str, dir: &Path) -> Vec<(String, Vec<u8>)> {
    let spec = preset_path(name);
    let spec = spec.to_str().unwrap();
    let analyze = symkin(&["analyze", "--spec", spec, "--at", "1.0", "--order", "6"]);
    assert_eq!(analyze.status.code(), Some(0), "{}", String::from_utf8_lossy(&analyze.stderr));

    let sweep = dir.join(format!("{name}.sweep.csv"));
    let out = symkin(&["sweep", "--spec", spec, "--from", "0", "--to", "3", "--steps", "7", "--out", sweep.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));

    let csv = dir.join(format!("{name}.polodes.csv"));
    let svg = dir.join(format!("{name}.polodes.svg"));
    let out = symkin(&[
        "polodes",
        "--spec",
        spec,
        "--from",
        "0",
        "--to",
        TWO_PI,
        "--steps",
        "33",
        "--svg",
        svg.to_str().unwrap(),
        "--out",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));

    vec![
        (format!("{name}.analyze.json"), analyze.stdout),
        (format!("{name}.sweep.csv"), std::fs::read(sweep).unwrap()),
        (format!("{name}.polodes.csv"), std::fs::read(csv).unwrap()),
        (format!("{name}.polodes.svg"), std::fs::read(svg).unwrap()),
    ]
}

/// Byte comparison against `tests/golden`; with `SYMKIN_BLESS=1` the golden
/// files are rewritten instead.
pub fn check_golden(name: &str) -> Result<(), String> {
    let tmp = tempfile::tempdir().unwrap();
    for (file, bytes) in artifacts(name, tmp.path()) {
        let path = golden_dir().join(&file);
        if std::env::var_os("SYMKIN_BLESS").is_some() {
            std::fs::write(&path, &bytes).unwrap();
            continue;
        }
        let want = std::fs::read(&path).map_err(|e| format!("{file}: {e}"))?;
        if want != bytes {
            return Err(format!("{file} differs from golden copy"));
        }
    }
    Ok(())
}
