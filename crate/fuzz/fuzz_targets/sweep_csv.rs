#![no_main]

use libfuzzer_sys::fuzz_target;
use psl2cov::document::{read_sweep_csv, sweep_csv_string};

fuzz_target!(|data: &[u8]| {
    if let Ok(rows) = read_sweep_csv(data) {
        let written = sweep_csv_string(&rows);
        assert_eq!(read_sweep_csv(written.as_bytes()).unwrap(), rows);
    }
});
