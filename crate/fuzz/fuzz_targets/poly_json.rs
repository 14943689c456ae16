#![no_main]

use cfhankel::algebra::{Poly, Rational};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(p) = Poly::<Rational>::from_json(s) {
        assert_eq!(Poly::<Rational>::from_json(&p.to_json()).unwrap(), p);
    }
});
