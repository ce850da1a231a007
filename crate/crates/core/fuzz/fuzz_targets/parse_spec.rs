#![no_main]

use libfuzzer_sys::fuzz_target;
use symkin::motion_spec::{parse_spec, serialize_spec};

// Any text either fails cleanly or survives a serialize/parse round trip.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(spec) = parse_spec(text) {
        let out = serialize_spec(&spec);
        let back = parse_spec(&out).expect("serialized spec parses");
        assert_eq!(back, spec);
        assert_eq!(serialize_spec(&back), out);
    }
});
