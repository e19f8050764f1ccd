#![no_main]

use libfuzzer_sys::fuzz_target;
use psl2cov_core::tables::CharLabel;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(label) = s.parse::<CharLabel>() {
        let printed = label.to_string();
        assert_eq!(printed.parse::<CharLabel>().unwrap(), label);
    }
});
