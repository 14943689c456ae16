#![no_main]

use cfhankel::guess::GuessResult;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(g) = GuessResult::from_json(s) {
        assert_eq!(GuessResult::from_json(&g.to_json()).unwrap(), g);
    }
});
