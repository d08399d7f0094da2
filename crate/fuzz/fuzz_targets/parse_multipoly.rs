#![no_main]
use libfuzzer_sys::fuzz_target;
use polyfun_core::MultiPoly;

fuzz_target!(|text: &str| {
    if let Ok(p) = MultiPoly::parse(text) {
        let again = MultiPoly::parse(&p.to_text()).expect("serialized form must parse");
        assert_eq!(again, p);
    }
});
