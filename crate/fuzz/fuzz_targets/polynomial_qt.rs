#![no_main]

use coxideal::exactnum::TRational;
use coxideal::multipoly::Polynomial;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(f) = Polynomial::<TRational>::parse(s) {
            assert_eq!(Polynomial::<TRational>::parse(&f.to_string()).unwrap(), f);
        }
    }
});
