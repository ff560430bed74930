#![no_main]

use libfuzzer_sys::fuzz_target;
use torelli_core::syntax::parse_h1_sum;

fuzz_target!(|data: &[u8]| {
    let Some((&g, rest)) = data.split_first() else { return };
    if let Ok(text) = std::str::from_utf8(rest) {
        let _ = parse_h1_sum(text, g as usize % 8 + 1);
    }
});
