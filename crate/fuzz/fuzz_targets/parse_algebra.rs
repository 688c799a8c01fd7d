#![no_main]

use libfuzzer_sys::fuzz_target;
use qosc::lie::{parse_lie_algebra, write_lie_algebra};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    // Anything accepted must survive a write/parse round trip.
    if let Ok(alg) = parse_lie_algebra(text) {
        let again = parse_lie_algebra(&write_lie_algebra(&alg)).expect("written algebra parses");
        assert_eq!(again.spec(), alg.spec());
    }
});
