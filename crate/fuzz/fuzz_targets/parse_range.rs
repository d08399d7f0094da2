#![no_main]
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    if let Ok((a, b)) = polyfun_cli::parse_range(text) {
        assert!(2 <= a && a <= b);
    }
    let _ = polyfun_cli::commands::parse_columns(text);
});
