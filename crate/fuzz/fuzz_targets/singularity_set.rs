#![no_main]
use libfuzzer_sys::fuzz_target;
use sextic_core::classify::SingularitySet;

fuzz_target!(|data: &str| {
    if data.len() > 1024 {
        return;
    }
    let Ok(set) = data.parse::<SingularitySet>() else {
        return;
    };
    let printed = set.to_string();
    let again: SingularitySet = printed.parse().expect("printed set parses");
    assert_eq!(set, again);
    assert_eq!(printed, again.to_string());
});
