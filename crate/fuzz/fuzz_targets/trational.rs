#![no_main]

use coxideal::exactnum::TRational;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(x) = TRational::parse(s) {
            // Printing is canonical, so a reparse gives the same value.
            assert_eq!(TRational::parse(&x.to_string()).unwrap(), x);
        }
    }
});
