#![no_main]

use libfuzzer_sys::fuzz_target;
use psl2cov::document::OutputDocument;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(doc) = OutputDocument::from_json(s) {
        let again = OutputDocument::from_json(&doc.to_json()).expect("emitted documents parse");
        assert_eq!(again.to_json(), doc.to_json());
    }
});
