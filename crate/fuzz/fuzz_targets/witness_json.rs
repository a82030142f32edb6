#![no_main]
use libfuzzer_sys::fuzz_target;
use sdepth_core::serial::parse_witness;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok((witness, _)) = parse_witness(text) {
            let _ = witness.verify();
        }
    }
});
