#![no_main]

use cookquest::engine::{format_transcript, parse_transcript};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    if let Ok(t) = parse_transcript(text) {
        let again = parse_transcript(&format_transcript(&t)).expect("written transcript reads back");
        assert_eq!(again, t);
    }
});
