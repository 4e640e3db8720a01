#![no_main]

use std::sync::OnceLock;

use ekk_core::dgca::{model_s4, toroidify, Dgca};
use ekk_core::io::parse_differential_lines;
use libfuzzer_sys::fuzz_target;

fn model() -> &'static Dgca {
    static MODEL: OnceLock<Dgca> = OnceLock::new();
    MODEL.get_or_init(|| toroidify(&model_s4(), 3, true).unwrap())
}

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if text.len() > 8192 {
        return;
    }
    let _ = parse_differential_lines(model(), text);
});
