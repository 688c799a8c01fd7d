#![no_main]

use libfuzzer_sys::fuzz_target;
use qosc::math::parse_poly;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if text.len() > 256 {
        return;
    }
    if let Ok(p) = parse_poly(text) {
        assert_eq!(parse_poly(&p.to_string()).expect("printed polynomial parses"), p);
    }
});
