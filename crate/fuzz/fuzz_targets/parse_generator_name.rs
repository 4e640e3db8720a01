#![no_main]

use std::sync::OnceLock;

use ekk_core::dgca::{cyclification_model, model_s4, toroidify, Dgca};
use libfuzzer_sys::fuzz_target;

fn models() -> &'static [Dgca; 2] {
    static MODELS: OnceLock<[Dgca; 2]> = OnceLock::new();
    MODELS.get_or_init(|| {
        [
            toroidify(&model_s4(), 5, false).unwrap(),
            cyclification_model(&model_s4()).unwrap(),
        ]
    })
}

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    for m in models() {
        if let Ok(g) = m.parse_generator(text) {
            let name = m.name(&g);
            assert_eq!(m.parse_generator(&name).unwrap(), g);
        }
    }
});
