#![no_main]

use coxideal::multipoly::Multidegree;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(d) = s.parse::<Multidegree>() {
            assert_eq!(d.to_string().parse::<Multidegree>().unwrap(), d);
        }
    }
});
