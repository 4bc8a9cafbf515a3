#![no_main]

use coxideal::exactnum::{Rational, TRational};
use coxideal::gradedkernel::parse_m2;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        let _ = parse_m2::<Rational>(s);
        let _ = parse_m2::<TRational>(s);
    }
});
