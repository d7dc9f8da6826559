#![no_main]

use cookquest::corpus::parse_corpus_str;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    let lenient = parse_corpus_str(text, false);
    if let Ok(strict) = parse_corpus_str(text, true) {
        // a strict success means nothing was skipped
        let lenient = lenient.expect("lenient accepts what strict accepts");
        assert!(lenient.warnings.is_empty());
        assert_eq!(lenient.recipes, strict.recipes);
    }
});
