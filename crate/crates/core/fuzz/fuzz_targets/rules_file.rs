#![no_main]

use cookquest::corpus::{normalize, NormalizationRules};
use libfuzzer_sys::fuzz_target;

const LINES: &[&str] = &["2 cups white sugar", "1/2 tsp salt", "3 large eggs, beaten", "butter (softened)"];

fuzz_target!(|text: &str| {
    if let Ok(rules) = NormalizationRules::parse(text) {
        for line in LINES {
            if let Ok(c) = normalize(line, &rules) {
                assert!(!c.name().is_empty());
            }
        }
    }
});
