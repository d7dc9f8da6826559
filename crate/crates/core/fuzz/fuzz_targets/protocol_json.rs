#![no_main]

use cookquest::session::{CommandResult, CreateGame, GameCreated, GameView, SubmitCommand};
use libfuzzer_sys::fuzz_target;

fn round_trip<T>(text: &str)
where
    T: serde::de::DeserializeOwned + serde::Serialize + PartialEq + std::fmt::Debug,
{
    if let Ok(v) = serde_json::from_str::<T>(text) {
        let again: T = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
        assert_eq!(again, v);
    }
}

fuzz_target!(|text: &str| {
    round_trip::<CreateGame>(text);
    round_trip::<SubmitCommand>(text);
    round_trip::<GameCreated>(text);
    round_trip::<CommandResult>(text);
    round_trip::<GameView>(text);
});
