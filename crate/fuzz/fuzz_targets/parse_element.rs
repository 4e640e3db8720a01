#![no_main]

use std::sync::OnceLock;

use ekk_core::dgca::{model_s4, toroidify, Dgca};
use libfuzzer_sys::fuzz_target;

fn model() -> &'static Dgca {
    static MODEL: OnceLock<Dgca> = OnceLock::new();
    MODEL.get_or_init(|| toroidify(&model_s4(), 3, false).unwrap())
}

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if text.len() > 4096 {
        return;
    }
    let m = model();
    if let Ok(x) = m.parse(text) {
        let printed = m.format(&x);
        let again = m.parse(&printed).expect("printed element re-parses");
        assert_eq!(again, x);
        assert_eq!(m.format(&again), printed);
    }
});
