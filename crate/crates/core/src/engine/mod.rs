//! Text-adventure engine over a [`GameSpec`].
//!
//! A [`World`] is the immutable, indexed form of a spec; a [`GameState`]
//! holds everything a command can change. Illegal commands never fail: they
//! produce an inadmissible [`Observation`] and leave the state untouched.

mod parse;
mod text;
mod transcript;

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::assembly::{render_instructions, EntityKind, GameSpec, SpecError, StepId};
use crate::worldkb::{DoorState, KITCHEN};

pub use parse::{parse, Command, ParseError, Target, Verb};
pub use text::Feedback;
pub use transcript::{format_transcript, parse_transcript, Transcript, TranscriptError, Turn};

use text::{instruction, join, with_article};

const SCORE_NOTE: &str = "\n\nYour score has just gone up by one point.";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Location {
    /// Scenery, fixed in a room.
    Fixed(usize),
    In(usize),
    Floor(usize),
    Carried,
}

/// Immutable, indexed view of a spec.
#[derive(Debug)]
pub struct World {
    spec: GameSpec,
    room_index: HashMap<String, usize>,
    kitchen: usize,
    initial: Vec<Location>,
    /// Connection endpoints as room indices.
    links: Vec<(usize, usize)>,
    names: HashMap<String, Target>,
    steps: HashMap<(Verb, String), StepId>,
}

impl World {
    pub fn new(spec: GameSpec) -> Result<Arc<World>, SpecError> {
        spec.validate()?;
        let room_index: HashMap<String, usize> = spec
            .map
            .rooms
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();
        let entity_index: HashMap<&str, usize> = spec
            .entities
            .iter()
            .enumerate()
            .map(|(i, e)| (e.name.as_str(), i))
            .collect();
        let initial = spec
            .entities
            .iter()
            .map(|e| match &e.container {
                None => Location::Fixed(room_index[&e.room]),
                Some(c) => Location::In(entity_index[c.as_str()]),
            })
            .collect();
        let links = spec
            .map
            .connections
            .iter()
            .map(|c| (room_index[&c.from], room_index[&c.to]))
            .collect();
        let mut names: HashMap<String, Target> = entity_index
            .iter()
            .map(|(&n, &i)| (n.to_string(), Target::Entity(i)))
            .collect();
        for (i, c) in spec.map.connections.iter().enumerate() {
            if let Some(d) = &c.door {
                names.insert(d.clone(), Target::Door(i));
            }
        }
        for (r, &i) in &room_index {
            names.entry(r.clone()).or_insert(Target::Room(i));
        }
        let steps = spec
            .quest
            .iter()
            .filter_map(|s| Some(((Verb::for_step(&s.verb)?, s.object.clone()), s.id)))
            .collect();
        Ok(Arc::new(World {
            kitchen: room_index[KITCHEN],
            room_index,
            initial,
            links,
            names,
            steps,
            spec,
        }))
    }

    pub fn spec(&self) -> &GameSpec {
        &self.spec
    }

    pub fn score_max(&self) -> u32 {
        self.spec.quest.len() as u32
    }

    pub fn room_name(&self, r: usize) -> &str {
        &self.spec.map.rooms[r]
    }

    pub fn room_index(&self, name: &str) -> Option<usize> {
        self.room_index.get(name).copied()
    }

    pub fn target_name(&self, t: Target) -> &str {
        match t {
            Target::Entity(i) => &self.spec.entities[i].name,
            Target::Door(i) => self.spec.map.connections[i].door.as_deref().unwrap_or(""),
            Target::Room(i) => self.room_name(i),
        }
    }

    pub(crate) fn lookup(&self, name: &str) -> Option<Target> {
        self.names.get(name).copied()
    }

    fn kind(&self, e: usize) -> EntityKind {
        self.spec.entities[e].kind
    }

    fn name(&self, e: usize) -> &str {
        &self.spec.entities[e].name
    }

    fn step_for(&self, verb: Verb, object: &str) -> Option<StepId> {
        self.steps.get(&(verb, object.to_string())).copied()
    }
}

/// Result of one command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Observation {
    pub feedback: String,
    pub score_delta: u32,
    pub admissible: bool,
}

/// The hashable part of a state, for search.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StateKey {
    room: usize,
    locations: Vec<Location>,
    open: Vec<bool>,
    doors: Vec<bool>,
    completed: BTreeSet<StepId>,
}

/// What the player can see, for clients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Snapshot {
    pub room: String,
    pub description: String,
    pub inventory: Vec<String>,
    pub score: u32,
    pub score_max: u32,
    pub done: bool,
    pub turn: u32,
}

enum Effect {
    Nothing,
    Move(usize),
    Open(usize),
    OpenDoor(usize),
    Take(usize),
    Drop(usize),
}

struct Outcome {
    effect: Effect,
    step: Option<StepId>,
    feedback: Feedback,
}

impl Outcome {
    fn only(feedback: Feedback) -> Self {
        Self {
            effect: Effect::Nothing,
            step: None,
            feedback,
        }
    }
}

#[derive(Clone)]
pub struct GameState {
    world: Arc<World>,
    room: usize,
    locations: Vec<Location>,
    open: Vec<bool>,
    /// Passable connections.
    doors: Vec<bool>,
    completed: BTreeSet<StepId>,
    score: u32,
    done: bool,
    /// Admissible commands so far.
    turn: u32,
}

impl PartialEq for GameState {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.world, &other.world)
            && self.key() == other.key()
            && (self.score, self.done, self.turn) == (other.score, other.done, other.turn)
    }
}

impl fmt::Debug for GameState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GameState")
            .field("room", &self.world.room_name(self.room))
            .field("inventory", &self.inventory())
            .field("completed", &self.completed)
            .field("score", &self.score)
            .field("done", &self.done)
            .field("turn", &self.turn)
            .finish()
    }
}

pub fn new_game(spec: GameSpec) -> Result<GameState, SpecError> {
    Ok(GameState::new(World::new(spec)?))
}

impl GameState {
    pub fn new(world: Arc<World>) -> Self {
        let spec = &world.spec;
        Self {
            room: world.kitchen,
            locations: world.initial.clone(),
            open: vec![false; spec.entities.len()],
            doors: spec
                .map
                .connections
                .iter()
                .map(|c| c.state != DoorState::Closed)
                .collect(),
            completed: BTreeSet::new(),
            score: 0,
            done: false,
            turn: 0,
            world,
        }
    }

    pub fn world(&self) -> &World {
        &self.world
    }

    pub fn world_arc(&self) -> &Arc<World> {
        &self.world
    }

    pub fn room(&self) -> &str {
        self.world.room_name(self.room)
    }

    pub fn score(&self) -> u32 {
        self.score
    }

    pub fn done(&self) -> bool {
        self.done
    }

    pub fn turn(&self) -> u32 {
        self.turn
    }

    pub fn completed_steps(&self) -> &BTreeSet<StepId> {
        &self.completed
    }

    pub fn is_open(&self, name: &str) -> bool {
        match self.world.lookup(name) {
            Some(Target::Entity(e)) => self.open[e],
            Some(Target::Door(c)) => self.doors[c],
            _ => false,
        }
    }

    pub fn inventory(&self) -> Vec<String> {
        (0..self.locations.len())
            .filter(|&e| self.locations[e] == Location::Carried)
            .map(|e| self.world.name(e).to_string())
            .collect()
    }

    pub fn key(&self) -> StateKey {
        StateKey {
            room: self.room,
            locations: self.locations.clone(),
            open: self.open.clone(),
            doors: self.doors.clone(),
            completed: self.completed.clone(),
        }
    }

    /// Recipe card followed by the opening room description.
    pub fn intro(&self) -> String {
        format!(
            "{}\n{}",
            render_instructions(&self.world.spec).text(),
            self.describe_room()
        )
    }

    pub fn snapshot(&self) -> Snapshot {
        Snapshot {
            room: self.room().to_string(),
            description: self.describe_room(),
            inventory: self.inventory(),
            score: self.score,
            score_max: self.world.score_max(),
            done: self.done,
            turn: self.turn,
        }
    }

    fn is_closed(&self, e: usize) -> bool {
        self.world.spec.entities[e].openable && !self.open[e]
    }

    /// Within reach: carried, in the room, or inside an open container here.
    fn reachable(&self, e: usize) -> bool {
        match self.locations[e] {
            Location::Carried => true,
            Location::Fixed(r) | Location::Floor(r) => r == self.room,
            Location::In(c) => self.reachable(c) && !self.is_closed(c),
        }
    }

    fn contents(&self, c: usize) -> Vec<String> {
        (0..self.locations.len())
            .filter(|&e| self.locations[e] == Location::In(c))
            .map(|e| self.world.name(e).to_string())
            .collect()
    }

    fn exits(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.world
            .links
            .iter()
            .enumerate()
            .filter_map(|(i, &(a, b))| {
                if a == self.room {
                    Some((b, i))
                } else if b == self.room {
                    Some((a, i))
                } else {
                    None
                }
            })
    }

    pub(crate) fn visible_targets(&self) -> Vec<Target> {
        let mut out: Vec<Target> = (0..self.locations.len())
            .filter(|&e| self.reachable(e))
            .map(Target::Entity)
            .collect();
        out.extend(
            self.exits()
                .filter(|&(_, c)| self.world.spec.map.connections[c].door.is_some())
                .map(|(_, c)| Target::Door(c)),
        );
        out
    }

    pub fn describe_room(&self) -> String {
        let w = &*self.world;
        let room = w.room_name(self.room);
        let mut title: Vec<String> = room
            .split(' ')
            .map(|s| {
                let mut c = s.chars();
                c.next()
                    .map(|f| f.to_uppercase().collect::<String>() + c.as_str())
                    .unwrap_or_default()
            })
            .collect();
        title.retain(|s| !s.is_empty());
        let mut out = format!("-= {} =-\nYou are in the {room}.", title.join(" "));
        let scenery: Vec<usize> = (0..self.locations.len())
            .filter(|&e| self.locations[e] == Location::Fixed(self.room))
            .collect();
        if !scenery.is_empty() {
            let names: Vec<String> = scenery.iter().map(|&e| with_article(w.name(e))).collect();
            out.push_str(&format!(" You see {}.", join(&names)));
        }
        for &c in &scenery {
            if self.is_closed(c) {
                out.push_str(&format!("\nThe {} is closed.", w.name(c)));
                continue;
            }
            let inside = self.contents(c);
            if !inside.is_empty() {
                let items: Vec<String> = inside.iter().map(|i| with_article(i)).collect();
                out.push_str(&format!("\nIn the {} you see {}.", w.name(c), join(&items)));
            }
        }
        let floor: Vec<String> = (0..self.locations.len())
            .filter(|&e| self.locations[e] == Location::Floor(self.room))
            .map(|e| with_article(w.name(e)))
            .collect();
        if !floor.is_empty() {
            out.push_str(&format!("\nOn the floor you see {}.", join(&floor)));
        }
        let exits: Vec<String> = self
            .exits()
            .map(|(r, c)| {
                let name = format!("the {}", w.room_name(r));
                match &w.spec.map.connections[c].door {
                    Some(d) => format!(
                        "{name} (through the {d}, which is {})",
                        if self.doors[c] { "open" } else { "closed" }
                    ),
                    None => name,
                }
            })
            .collect();
        if !exits.is_empty() {
            out.push_str(&format!("\nExits: {}.", join(&exits)));
        }
        out
    }

    fn examine(&self, t: Target) -> Feedback {
        let w = &*self.world;
        match t {
            Target::Room(r) if r == self.room => Feedback::Description(self.describe_room()),
            Target::Door(c) if self.exits().any(|(_, x)| x == c) => Feedback::Description(format!(
                "The {} is {}.",
                w.target_name(t),
                if self.doors[c] { "open" } else { "closed" }
            )),
            Target::Entity(e) if self.reachable(e) => {
                let ent = &w.spec.entities[e];
                let text = match ent.kind {
                    EntityKind::Scenery if self.is_closed(e) => {
                        format!("The {} is closed.", ent.name)
                    }
                    EntityKind::Scenery => {
                        let inside = self.contents(e);
                        if inside.is_empty() {
                            format!("There is nothing in the {}.", ent.name)
                        } else {
                            let items: Vec<String> =
                                inside.iter().map(|i| with_article(i)).collect();
                            format!("In the {} you see {}.", ent.name, join(&items))
                        }
                    }
                    EntityKind::Tool => {
                        format!("It's {}. It looks useful.", with_article(&ent.name))
                    }
                    EntityKind::Ingredient => {
                        let done: Vec<String> = self
                            .completed
                            .iter()
                            .map(|&s| &w.spec.quest[s as usize])
                            .filter(|s| {
                                s.object == ent.name
                                    && Verb::for_step(&s.verb).is_some_and(Verb::is_preparation)
                            })
                            .map(|s| {
                                Verb::for_step(&s.verb)
                                    .map(text::past_tense)
                                    .unwrap_or_default()
                                    .to_string()
                            })
                            .collect();
                        if done.is_empty() {
                            format!("It's {}.", with_article(&ent.name))
                        } else {
                            format!("It's {}, {}.", with_article(&ent.name), join(&done))
                        }
                    }
                };
                Feedback::Description(text)
            }
            _ => Feedback::NotVisible(w.target_name(t).to_string()),
        }
    }

    fn pending_prerequisite(&self, step: StepId) -> Option<StepId> {
        self.world.spec.quest[step as usize]
            .prerequisites
            .iter()
            .copied()
            .find(|p| !self.completed.contains(p))
    }

    /// Quest step this physical action completes, if it is pending and
    /// unblocked.
    fn scoring_step(&self, verb: Verb, object: &str) -> Option<StepId> {
        self.world
            .step_for(verb, object)
            .filter(|s| !self.completed.contains(s) && self.pending_prerequisite(*s).is_none())
    }

    fn pending_text(&self, step: StepId) -> String {
        let s = &self.world.spec.quest[step as usize];
        instruction(&s.verb, &s.object)
    }

    fn check(&self, cmd: &Command) -> Result<Outcome, Feedback> {
        let w = &*self.world;
        if self.done {
            return Err(Feedback::GameOver);
        }
        let object = cmd.object;
        match (cmd.verb, object) {
            (Verb::Look, _) => Ok(Outcome::only(Feedback::Description(self.describe_room()))),
            (Verb::Inventory, _) => Ok(Outcome::only(Feedback::Inventory(self.inventory()))),
            (Verb::Examine, Some(t)) => match self.examine(t) {
                f @ Feedback::NotVisible(_) => Err(f),
                f => Ok(Outcome::only(f)),
            },
            (Verb::Go, Some(Target::Room(r))) => {
                if r == self.room {
                    return Err(Feedback::AlreadyHere(w.room_name(r).to_string()));
                }
                let Some((_, c)) = self.exits().find(|&(to, _)| to == r) else {
                    return Err(Feedback::NoExit(w.room_name(r).to_string()));
                };
                if !self.doors[c] {
                    let door = w.spec.map.connections[c].door.clone().unwrap_or_default();
                    return Err(Feedback::DoorClosed(door));
                }
                let mut moved = self.clone();
                moved.room = r;
                Ok(Outcome {
                    effect: Effect::Move(r),
                    step: None,
                    feedback: Feedback::Description(moved.describe_room()),
                })
            }
            (Verb::Open, Some(Target::Door(c))) => {
                let name = w.target_name(Target::Door(c)).to_string();
                if !self.exits().any(|(_, x)| x == c) {
                    Err(Feedback::NotVisible(name))
                } else if self.doors[c] {
                    Err(Feedback::AlreadyOpen(name))
                } else {
                    Ok(Outcome {
                        effect: Effect::OpenDoor(c),
                        step: None,
                        feedback: Feedback::Opened {
                            name,
                            contents: None,
                        },
                    })
                }
            }
            (Verb::Open, Some(Target::Entity(e))) => {
                let name = w.name(e).to_string();
                if !self.reachable(e) {
                    Err(Feedback::NotVisible(name))
                } else if w.kind(e) != EntityKind::Scenery || !w.spec.entities[e].openable {
                    Err(Feedback::NotOpenable(name))
                } else if self.open[e] {
                    Err(Feedback::AlreadyOpen(name))
                } else {
                    Ok(Outcome {
                        effect: Effect::Open(e),
                        step: self.scoring_step(Verb::Open, &name),
                        feedback: Feedback::Opened {
                            contents: Some(self.contents(e)),
                            name,
                        },
                    })
                }
            }
            (Verb::Take, Some(Target::Entity(e))) => {
                let name = w.name(e).to_string();
                if let Some(src) = cmd.source {
                    let Target::Entity(c) = src else {
                        return Err(Feedback::NotIn {
                            item: name,
                            container: w.target_name(src).to_string(),
                        });
                    };
                    if !self.reachable(c) {
                        return Err(Feedback::NotVisible(w.name(c).to_string()));
                    }
                    if self.is_closed(c) {
                        return Err(Feedback::Closed(w.name(c).to_string()));
                    }
                    if self.locations[e] != Location::In(c) {
                        return Err(Feedback::NotIn {
                            item: name,
                            container: w.name(c).to_string(),
                        });
                    }
                }
                if !self.reachable(e) {
                    Err(Feedback::NotVisible(name))
                } else if w.kind(e) == EntityKind::Scenery {
                    Err(Feedback::NotPortable(name))
                } else if self.locations[e] == Location::Carried {
                    Err(Feedback::AlreadyCarried(name))
                } else {
                    Ok(Outcome {
                        effect: Effect::Take(e),
                        step: self.scoring_step(Verb::Take, &name),
                        feedback: Feedback::Taken(name),
                    })
                }
            }
            (Verb::Take, Some(t)) => Err(Feedback::NotPortable(w.target_name(t).to_string())),
            (Verb::Drop, Some(Target::Entity(e))) if self.locations[e] == Location::Carried => {
                Ok(Outcome {
                    effect: Effect::Drop(e),
                    step: None,
                    feedback: Feedback::Dropped(w.name(e).to_string()),
                })
            }
            (Verb::Drop, Some(t)) => Err(Feedback::NotCarried(w.target_name(t).to_string())),
            (verb, Some(Target::Entity(e))) if verb.is_preparation() => {
                self.check_preparation(cmd, verb, e)
            }
            (verb, Some(t)) if verb.is_preparation() => Err(Feedback::Prohibited {
                verb,
                item: w.target_name(t).to_string(),
            }),
            (Verb::PrepareMeal, _) => {
                if self.room != w.kitchen {
                    return Err(Feedback::NotInKitchen);
                }
                let goal = w.spec.goal_step;
                if let Some(p) = self.pending_prerequisite(goal) {
                    return Err(Feedback::MealNotReady(self.pending_text(p)));
                }
                Ok(Outcome {
                    effect: Effect::Nothing,
                    step: Some(goal),
                    feedback: Feedback::MealDone {
                        score: self.score + 1,
                        max: w.score_max(),
                    },
                })
            }
            (verb, _) => Err(Feedback::Parse(ParseError::MissingObject(verb))),
        }
    }

    fn check_preparation(&self, cmd: &Command, verb: Verb, e: usize) -> Result<Outcome, Feedback> {
        let w = &*self.world;
        let ent = &w.spec.entities[e];
        let item = ent.name.clone();
        if !self.reachable(e) {
            return Err(Feedback::NotVisible(item));
        }
        if ent.kind != EntityKind::Ingredient || ent.prohibited.iter().any(|p| p == verb.as_str()) {
            return Err(Feedback::Prohibited { verb, item });
        }
        let Some(step) = w.step_for(verb, &item) else {
            return Err(Feedback::NotNeeded { verb, item });
        };
        if self.completed.contains(&step) {
            return Err(Feedback::AlreadyDone { verb, item });
        }
        if self.locations[e] != Location::Carried {
            return Err(Feedback::NotHolding(item));
        }
        let needed = w.spec.quest[step as usize].tool.as_deref();
        if let Some(given) = cmd.tool {
            let given = w.target_name(given);
            if Some(given) != needed {
                return Err(Feedback::WrongTool {
                    verb,
                    tool: given.to_string(),
                });
            }
        }
        if let Some(tool) = needed {
            let carried = matches!(w.lookup(tool), Some(Target::Entity(t)) if self.locations[t] == Location::Carried);
            if !carried {
                return Err(Feedback::NeedTool {
                    verb,
                    item,
                    tool: tool.to_string(),
                });
            }
        }
        if let Some(p) = self.pending_prerequisite(step) {
            return Err(Feedback::NotReady {
                verb,
                item,
                pending: self.pending_text(p),
            });
        }
        Ok(Outcome {
            effect: Effect::Nothing,
            step: Some(step),
            feedback: Feedback::Prepared { verb, item },
        })
    }

    fn apply(&mut self, outcome: Outcome) -> Observation {
        match outcome.effect {
            Effect::Nothing => {}
            Effect::Move(r) => self.room = r,
            Effect::Open(e) => self.open[e] = true,
            Effect::OpenDoor(c) => self.doors[c] = true,
            Effect::Take(e) => self.locations[e] = Location::Carried,
            Effect::Drop(e) => self.locations[e] = Location::Floor(self.room),
        }
        self.turn += 1;
        let mut feedback = outcome.feedback.to_string();
        let mut score_delta = 0;
        if let Some(step) = outcome.step {
            debug_assert!(self.pending_prerequisite(step).is_none());
            self.completed.insert(step);
            self.score += 1;
            score_delta = 1;
            if step == self.world.spec.goal_step {
                self.done = true;
            } else {
                feedback.push_str(SCORE_NOTE);
            }
        }
        Observation {
            feedback,
            score_delta,
            admissible: true,
        }
    }

    /// Applies an already parsed command.
    pub fn execute(&mut self, cmd: &Command) -> Observation {
        match self.check(cmd) {
            Ok(outcome) => self.apply(outcome),
            Err(f) => Observation {
                feedback: f.to_string(),
                score_delta: 0,
                admissible: false,
            },
        }
    }

    /// Parses and applies one line of player input.
    pub fn step(&mut self, input: &str) -> Observation {
        if self.done {
            return Observation {
                feedback: Feedback::GameOver.to_string(),
                score_delta: 0,
                admissible: false,
            };
        }
        match parse(input, self) {
            Ok(cmd) => self.execute(&cmd),
            Err(e) => Observation {
                feedback: Feedback::Parse(e).to_string(),
                score_delta: 0,
                admissible: false,
            },
        }
    }

    /// Whether `cmd` would be accepted, and whether it would score.
    pub fn would_score(&self, cmd: &Command) -> Option<bool> {
        self.check(cmd).ok().map(|o| o.step.is_some())
    }

    /// Every command accepted in this state, in canonical form. Preparation
    /// commands are listed without their tool.
    pub fn admissible_commands(&self) -> Vec<Command> {
        if self.done {
            return Vec::new();
        }
        let mut cands = vec![
            Command::bare(Verb::Look),
            Command::bare(Verb::Inventory),
            Command::on(Verb::Examine, Target::Room(self.room)),
        ];
        for (r, _) in self.exits() {
            cands.push(Command::on(Verb::Go, Target::Room(r)));
        }
        for t in self.visible_targets() {
            cands.push(Command::on(Verb::Examine, t));
            cands.push(Command::on(Verb::Open, t));
            if let Target::Entity(_) = t {
                cands.push(Command::on(Verb::Take, t));
                cands.push(Command::on(Verb::Drop, t));
                for v in [Verb::Peel, Verb::Cut, Verb::Cook] {
                    cands.push(Command::on(v, t));
                }
            }
        }
        cands.push(Command::bare(Verb::PrepareMeal));
        cands.retain(|c| self.check(c).is_ok());
        cands
    }

    pub fn admissible_actions(&self) -> Vec<String> {
        let w = &*self.world;
        let mut out: Vec<String> = self
            .admissible_commands()
            .iter()
            .map(|c| c.text(w))
            .collect();
        out.sort();
        out
    }
}

/// Replays `commands` from a fresh state, returning the final state and
/// every observation.
pub fn replay<'a>(
    world: &Arc<World>,
    commands: impl IntoIterator<Item = &'a str>,
) -> (GameState, Vec<Observation>) {
    let mut state = GameState::new(Arc::clone(world));
    let obs = commands.into_iter().map(|c| state.step(c)).collect();
    (state, obs)
}
