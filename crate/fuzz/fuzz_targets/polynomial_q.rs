#![no_main]

use coxideal::exactnum::Rational;
use coxideal::multipoly::Polynomial;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(f) = Polynomial::<Rational>::parse(s) {
            assert_eq!(Polynomial::<Rational>::parse(&f.to_string()).unwrap(), f);
            let _ = f.multidegree();
        }
    }
});
