#![no_main]

use cookquest::assembly::deserialize_game;
use cookquest::engine::{new_game, parse};
use libfuzzer_sys::fuzz_target;

const GAME: &str = include_str!("../../data/games/hd-5R.game");

fuzz_target!(|text: &str| {
    let mut state = new_game(deserialize_game(GAME).unwrap()).unwrap();
    if let Ok(cmd) = parse(text, &state) {
        // canonical text parses back to the same command
        assert_eq!(parse(&cmd.text(state.world()), &state), Ok(cmd));
    }
    let before = state.clone();
    let obs = state.step(text);
    if !obs.admissible {
        assert_eq!(state, before);
    }
});
