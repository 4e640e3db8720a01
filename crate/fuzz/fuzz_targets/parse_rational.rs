#![no_main]

use ekk_core::algebra::rational::{parse, to_string};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(q) = parse(text) {
        assert_eq!(parse(&to_string(&q)).unwrap(), q);
    }
});
