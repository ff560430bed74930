#![no_main]

use libfuzzer_sys::fuzz_target;
use torelli_core::syntax::{parse_tor, serialize_tor};
use torelli_core::{Error, Result};

fn no_files(p: &str) -> Result<String> {
    Err(Error::Io { path: p.into(), message: "unavailable".into() })
}

fuzz_target!(|text: &str| {
    if let Ok(t) = parse_tor(text, &no_files) {
        let again = parse_tor(&serialize_tor(&t), &no_files).expect("serialized tor must parse");
        assert_eq!(again, t);
    }
});
