#![no_main]

use cfhankel::cf::Chain;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    // Replaying is quadratic in the step count; keep inputs small.
    if s.len() > 4096 {
        return;
    }
    if let Ok(c) = Chain::from_json(s) {
        let text = c.to_json(true);
        assert_eq!(Chain::from_json(&text).unwrap().to_json(true), text);
    }
});
