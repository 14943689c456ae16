#![no_main]

use cfhankel::range::parse_range;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(r) = parse_range(s) {
        assert!(r.start <= r.end);
        assert_eq!(parse_range(&r.to_string()).unwrap(), r);
    }
});
