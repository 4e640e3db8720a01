#![no_main]

use ekk_core::io::{model_from_json_str, model_to_json_string};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if text.len() > 1 << 16 {
        return;
    }
    if let Ok(m) = model_from_json_str(text) {
        let exported = model_to_json_string(&m);
        let back = model_from_json_str(&exported).expect("exported model re-imports");
        assert_eq!(back, m);
        assert_eq!(model_to_json_string(&back), exported);
    }
});
