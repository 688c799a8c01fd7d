#![no_main]

use libfuzzer_sys::fuzz_target;
use qosc_cli::Report;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(report) = Report::from_json(text) {
        let _ = report.to_text();
        assert_eq!(Report::from_json(&report.to_json()).expect("re-encoded report decodes"), report);
    }
});
