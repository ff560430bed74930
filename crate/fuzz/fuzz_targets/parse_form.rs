#![no_main]

use libfuzzer_sys::fuzz_target;
use torelli_core::syntax::parse_form;

fuzz_target!(|text: &str| {
    if let Ok(q) = parse_form(text) {
        assert_eq!(parse_form(&q.to_string()).unwrap(), q);
    }
});
