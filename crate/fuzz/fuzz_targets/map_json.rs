#![no_main]
use libfuzzer_sys::fuzz_target;
use sextic_core::cmap::{canonical_code, CombinatorialMap, Orientation};

fuzz_target!(|data: &[u8]| {
    if data.len() > 1 << 14 {
        return;
    }
    let Ok(m) = serde_json::from_slice::<CombinatorialMap>(data) else {
        return;
    };
    let s = serde_json::to_string(&m).expect("map serializes");
    let back: CombinatorialMap = serde_json::from_str(&s).expect("serialized map parses");
    assert_eq!(m, back);
    if m.darts() <= 64 {
        assert_eq!(
            canonical_code(&m, Orientation::Preserve),
            canonical_code(&back, Orientation::Preserve)
        );
        let _ = canonical_code(&m, Orientation::Either);
        let _ = m.face_count();
    }
});
