#![no_main]

use libfuzzer_sys::fuzz_target;
use psl2cov::document::CyclotomicJson;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(json) = serde_json::from_str::<CyclotomicJson>(s) else {
        return;
    };
    if json.conductor > 10_000 {
        return;
    }
    if let Ok(x) = json.decode() {
        let encoded = CyclotomicJson::from(&x);
        assert_eq!(encoded.decode().unwrap(), x);
    }
});
