#![no_main]
use libfuzzer_sys::fuzz_target;
use sdepth_core::serial::{parse_ideal, IdealDoc};

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(ideal) = parse_ideal(text) {
            let out = serde_json::to_string(&IdealDoc::new(&ideal, None)).unwrap();
            assert_eq!(parse_ideal(&out).unwrap(), ideal);
        }
    }
});
