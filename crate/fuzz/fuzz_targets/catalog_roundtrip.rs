#![no_main]

use libfuzzer_sys::fuzz_target;
use udsmap::{parse_catalog, serialize_catalog};

fuzz_target!(|text: &str| {
    let Ok(first) = parse_catalog(text) else {
        return;
    };
    let canonical = serialize_catalog(&first);
    let second = parse_catalog(&canonical).expect("canonical text parses");
    assert_eq!(first, second);
    assert_eq!(serialize_catalog(&second), canonical);
});
