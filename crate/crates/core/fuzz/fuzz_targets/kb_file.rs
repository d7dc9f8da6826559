#![no_main]

use cookquest::worldkb::load_kb;
use libfuzzer_sys::fuzz_target;

const MAP: &str = include_str!("../../data/kb/map-5R.kb");
const OBJECTS: &str = include_str!("../../data/kb/objects-5R.kb");
const ACTIONS: &str = include_str!("../../data/kb/actions.kb");
const LEXICON: &str = include_str!("../../data/kb/lexicon.kb");

// The first byte picks which of the four files the rest replaces.
fuzz_target!(|data: &[u8]| {
    let Some((&which, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    let mut files = [MAP, OBJECTS, ACTIONS, LEXICON];
    files[usize::from(which) % 4] = text;
    let _ = load_kb(files[0], files[1], files[2], files[3]);
});
