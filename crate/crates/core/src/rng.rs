//! Seeded random streams.
//!
//! Every generator takes an explicit stream so a game is reproducible from
//! `(mode, seed)`. Independent concerns draw from separate ChaCha streams
//! keyed by the same seed, so e.g. recipe sampling does not shift when the
//! map changes.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type GameRng = ChaCha8Rng;

/// Identifier written into provenance records.
pub const RNG_ALGORITHM: &str = "chacha8/seed_from_u64";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stream {
    Recipe = 0,
    Placement = 1,
}

pub fn stream(seed: u64, which: Stream) -> GameRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(which as u64);
    rng
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let a: u64 = stream(7, Stream::Recipe).random();
        let b: u64 = stream(7, Stream::Recipe).random();
        let c: u64 = stream(7, Stream::Placement).random();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }
}
