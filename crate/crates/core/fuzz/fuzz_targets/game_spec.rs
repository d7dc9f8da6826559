#![no_main]

use cookquest::assembly::{deserialize_game, serialize_game};
use cookquest::engine::World;
use cookquest::solver::solve;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    let Ok(spec) = deserialize_game(text) else { return };
    let again = deserialize_game(&serialize_game(&spec)).expect("written spec reads back");
    assert_eq!(again, spec);
    World::new(spec.clone()).expect("validated spec builds a world");
    if spec.quest.len() <= 12 {
        let report = solve(&spec, 5_000);
        assert!(report.solvable || report.failure_reason.is_some());
    }
});
