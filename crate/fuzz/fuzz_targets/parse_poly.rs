#![no_main]
use libfuzzer_sys::fuzz_target;
use polyfun_core::Poly;

// First two bytes pick the modulus, the rest is the coefficient string.
fuzz_target!(|data: &[u8]| {
    if data.len() < 2 {
        return;
    }
    let n = u16::from_le_bytes([data[0], data[1]]) as u64;
    let Ok(text) = std::str::from_utf8(&data[2..]) else { return };
    if let Ok(p) = Poly::parse(n, text) {
        assert_eq!(Poly::parse(n, &p.to_coeff_string()).unwrap(), p);
    }
});
