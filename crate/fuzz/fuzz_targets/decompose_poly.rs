#![no_main]
use libfuzzer_sys::fuzz_target;
use polyfun_core::polyfun::{decompose_null, recompose};
use polyfun_core::{Error, Poly};

fuzz_target!(|data: &[u8]| {
    let Some((&n, rest)) = data.split_first() else { return };
    let n = n as u64 + 2;
    let Ok(text) = std::str::from_utf8(rest) else { return };
    let Ok(p) = Poly::parse(n, text) else { return };
    if p.coeffs().len() > 256 {
        return;
    }
    match decompose_null(&p) {
        Ok(d) => assert_eq!(recompose(&d).unwrap(), p),
        Err(Error::NotNull) => assert!(!p.is_null()),
        Err(e) => panic!("unexpected error {e}"),
    }
});
