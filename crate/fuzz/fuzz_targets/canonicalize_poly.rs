#![no_main]
use libfuzzer_sys::fuzz_target;
use polyfun_core::polyfun::canonicalize;
use polyfun_core::Poly;

fuzz_target!(|data: &[u8]| {
    let Some((&n, rest)) = data.split_first() else { return };
    let n = n as u64 + 1;
    let Ok(text) = std::str::from_utf8(rest) else { return };
    let Ok(p) = Poly::parse(n, text) else { return };
    if p.coeffs().len() > 256 {
        return;
    }
    let c = canonicalize(&p);
    assert_eq!(c.to_poly().value_table(), p.value_table());
    assert_eq!(canonicalize(&c.to_poly()), c);
});
