#![no_main]
use libfuzzer_sys::fuzz_target;
use sextic_core::fpgroup::Presentation;

fuzz_target!(|data: &[u8]| {
    // expansion of a^k syllables is bounded by the parser, but keep inputs small anyway
    if data.len() > 4096 {
        return;
    }
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(p) = text.parse::<Presentation>() else {
        return;
    };
    let printed = p.to_string();
    let again: Presentation = printed.parse().expect("printed presentation parses");
    assert_eq!(p, again);
    assert_eq!(printed, again.to_string());
});
