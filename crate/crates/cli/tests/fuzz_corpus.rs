//! Replays the checked-in fuzz seeds through the same round-trip properties
//! the fuzz targets assert, so the seeds stay meaningful without a fuzzer.

use std::fs;
use std::path::PathBuf;

use psl2cov::document::{read_sweep_csv, sweep_csv_string, CyclotomicJson, OutputDocument};
use psl2cov_core::tables::{CharLabel, ClassLabel};

fn seeds(target: &str) -> Vec<(PathBuf, Vec<u8>)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut out: Vec<_> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| {
            let p = e.unwrap().path();
            let bytes = fs::read(&p).unwrap();
            (p, bytes)
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn label_seeds_round_trip() {
    let mut parsed = 0;
    for (_, bytes) in seeds("char_label") {
        if let Ok(l) = std::str::from_utf8(&bytes).unwrap().parse::<CharLabel>() {
            assert_eq!(l.to_string().parse::<CharLabel>().unwrap(), l);
            parsed += 1;
        }
    }
    assert!(parsed >= 10);
    parsed = 0;
    for (_, bytes) in seeds("class_label") {
        if let Ok(l) = std::str::from_utf8(&bytes).unwrap().parse::<ClassLabel>() {
            assert_eq!(l.to_string().parse::<ClassLabel>().unwrap(), l);
            parsed += 1;
        }
    }
    assert!(parsed >= 8);
}

#[test]
fn document_seeds_round_trip() {
    for (path, bytes) in seeds("output_document") {
        let doc = OutputDocument::from_json(std::str::from_utf8(&bytes).unwrap())
            .unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(OutputDocument::from_json(&doc.to_json()).unwrap(), doc);
    }
}

#[test]
fn cyclotomic_seeds_round_trip() {
    let mut decoded = 0;
    for (_, bytes) in seeds("cyclotomic_json") {
        if let Ok(x) = CyclotomicJson::from_json(std::str::from_utf8(&bytes).unwrap()) {
            assert_eq!(CyclotomicJson::from(&x).decode().unwrap(), x);
            decoded += 1;
        }
    }
    assert_eq!(decoded, 3);
}

#[test]
fn sweep_seeds_round_trip() {
    let mut accepted = 0;
    for (_, bytes) in seeds("sweep_csv") {
        if let Ok(rows) = read_sweep_csv(&bytes[..]) {
            let written = sweep_csv_string(&rows);
            assert_eq!(written.as_bytes(), &bytes[..]);
            assert_eq!(read_sweep_csv(written.as_bytes()).unwrap(), rows);
            accepted += 1;
        }
    }
    assert_eq!(accepted, 2);
}
