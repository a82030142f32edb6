#![no_main]
use libfuzzer_sys::fuzz_target;
use sdepth_core::graph::FamilySpec;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(spec) = text.parse::<FamilySpec>() {
            // Accepted specs print back to an equal spec.
            let again: FamilySpec = spec.to_string().parse().expect("display round-trips");
            assert_eq!(again, spec);
        }
    }
});
