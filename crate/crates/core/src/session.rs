//! Play-session protocol and an in-memory session store.
//!
//! Every request and response body carries `protocol: 1`. The HTTP layer
//! lives in the command-line crate; this module only knows about games.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::engine::{GameState, Snapshot, World};
use crate::pipeline::Pipeline;
use crate::recipegen::{Complexity, GenerationParams, Mode};
use crate::worldkb::MapId;

pub const PROTOCOL_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CreateGame {
    pub protocol: u32,
    pub mode: Mode,
    pub map: MapId,
    pub complexity: Complexity,
    #[serde(default)]
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameCreated {
    pub protocol: u32,
    pub game_id: String,
    pub intro_text: String,
    pub score_max: u32,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubmitCommand {
    pub protocol: u32,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommandResult {
    pub protocol: u32,
    pub feedback: String,
    pub score: u32,
    pub done: bool,
    pub admissible: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameView {
    pub protocol: u32,
    pub game_id: String,
    pub state: Snapshot,
    pub admissible_actions: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Deleted {
    pub protocol: u32,
    pub game_id: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorBody {
    pub protocol: u32,
    pub error: String,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SessionError {
    #[error("no game with id {0:?}")]
    NotFound(String),
    #[error("unsupported protocol version {0} (this server speaks {PROTOCOL_VERSION})")]
    Protocol(u32),
    #[error("could not generate a game: {0}")]
    Generation(String),
}

impl SessionError {
    pub fn body(&self) -> ErrorBody {
        ErrorBody {
            protocol: PROTOCOL_VERSION,
            error: self.to_string(),
        }
    }
}

fn check_protocol(v: u32) -> Result<(), SessionError> {
    if v == PROTOCOL_VERSION {
        Ok(())
    } else {
        Err(SessionError::Protocol(v))
    }
}

/// Games keyed by id. The map lock is held only for lookups; each game has
/// its own lock, so commands to different games run concurrently.
pub struct SessionStore {
    pipeline: Arc<Pipeline>,
    games: Mutex<HashMap<String, Arc<Mutex<GameState>>>>,
    next_id: AtomicU64,
}

impl SessionStore {
    pub fn new(pipeline: Arc<Pipeline>) -> Self {
        Self {
            pipeline,
            games: Mutex::new(HashMap::new()),
            next_id: AtomicU64::new(1),
        }
    }

    pub fn len(&self) -> usize {
        self.games.lock().expect("session map poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn get(&self, id: &str) -> Result<Arc<Mutex<GameState>>, SessionError> {
        self.games
            .lock()
            .expect("session map poisoned")
            .get(id)
            .cloned()
            .ok_or_else(|| SessionError::NotFound(id.to_string()))
    }

    pub fn create(&self, req: &CreateGame) -> Result<GameCreated, SessionError> {
        check_protocol(req.protocol)?;
        let seed = req.seed.unwrap_or_else(rand::random);
        let params = GenerationParams::new(req.mode, req.complexity.n_ingredients(), seed);
        let spec = self
            .pipeline
            .generate_game(&params, req.map)
            .map_err(|e| SessionError::Generation(e.to_string()))?;
        let world = World::new(spec).map_err(|e| SessionError::Generation(e.to_string()))?;
        let state = GameState::new(world);
        let game_id = format!("g{}", self.next_id.fetch_add(1, Ordering::Relaxed));
        let created = GameCreated {
            protocol: PROTOCOL_VERSION,
            game_id: game_id.clone(),
            intro_text: state.intro(),
            score_max: state.world().score_max(),
            seed,
        };
        log::info!("created {game_id}: {:?} seed {seed}", req);
        self.games
            .lock()
            .expect("session map poisoned")
            .insert(game_id, Arc::new(Mutex::new(state)));
        Ok(created)
    }

    pub fn command(&self, id: &str, req: &SubmitCommand) -> Result<CommandResult, SessionError> {
        check_protocol(req.protocol)?;
        let game = self.get(id)?;
        let mut state = game.lock().expect("game poisoned");
        let obs = state.step(&req.text);
        Ok(CommandResult {
            protocol: PROTOCOL_VERSION,
            feedback: obs.feedback,
            score: state.score(),
            done: state.done(),
            admissible: obs.admissible,
        })
    }

    pub fn view(&self, id: &str) -> Result<GameView, SessionError> {
        let game = self.get(id)?;
        let state = game.lock().expect("game poisoned");
        Ok(GameView {
            protocol: PROTOCOL_VERSION,
            game_id: id.to_string(),
            state: state.snapshot(),
            admissible_actions: state.admissible_actions(),
        })
    }

    pub fn delete(&self, id: &str) -> Result<Deleted, SessionError> {
        self.games
            .lock()
            .expect("session map poisoned")
            .remove(id)
            .map(|_| Deleted {
                protocol: PROTOCOL_VERSION,
                game_id: id.to_string(),
            })
            .ok_or_else(|| SessionError::NotFound(id.to_string()))
    }
}
