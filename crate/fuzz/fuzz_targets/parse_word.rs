#![no_main]

use libfuzzer_sys::fuzz_target;
use torelli_core::syntax::parse_word;

// first byte picks the rank, the rest is the word
fuzz_target!(|data: &[u8]| {
    let Some((&r, rest)) = data.split_first() else { return };
    if let Ok(text) = std::str::from_utf8(rest) {
        let _ = parse_word(text, 2 * (r as usize % 8 + 1));
    }
});
