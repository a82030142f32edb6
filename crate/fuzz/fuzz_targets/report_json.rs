#![no_main]
use libfuzzer_sys::fuzz_target;
use sdepth_core::replay::Report;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(report) = Report::from_json(text) {
            let _ = report.to_csv();
            let _ = report.inconsistent_rows();
        }
    }
});
