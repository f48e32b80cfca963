#![no_main]
use libfuzzer_sys::fuzz_target;
use sextic_cli::Selector;

fuzz_target!(|data: &str| {
    let Ok(sel) = data.parse::<Selector>() else {
        return;
    };
    let printed = sel.to_string();
    let again: Selector = printed.parse().expect("printed selector parses");
    assert_eq!(sel, again);
});
