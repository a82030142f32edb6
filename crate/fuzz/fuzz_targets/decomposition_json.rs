#![no_main]
use libfuzzer_sys::fuzz_target;
use sdepth_core::serial::parse_decomposition;
use sdepth_core::stanley::verify_decomposition;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(dec) = parse_decomposition(text) {
            let _ = verify_decomposition(&dec);
        }
    }
});
