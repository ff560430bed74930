#![no_main]

use libfuzzer_sys::fuzz_target;
use torelli_core::syntax::{parse_map, serialize_map};

fuzz_target!(|text: &str| {
    if let Ok(f) = parse_map(text) {
        let again = parse_map(&serialize_map(&f)).expect("serialized map must parse");
        assert_eq!(again.images(), f.images());
    }
});
