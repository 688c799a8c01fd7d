#![no_main]

use libfuzzer_sys::fuzz_target;
use qosc::math::{fmt_rat, parse_rat};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(q) = parse_rat(text) {
        assert_eq!(parse_rat(&fmt_rat(&q)).expect("printed rational parses"), q);
    }
});
