//! Procedural cooking quests for text adventures.
//!
//! The pipeline runs left to right:
//!
//! * [`corpus`] parses a recipe corpus and builds the weighted ingredient
//!   co-occurrence graph;
//! * [`recipegen`] samples new ingredient lists (graph walk, n-gram, uniform);
//! * [`worldkb`] holds the object graph, action graph and room layouts;
//! * [`assembly`] grounds a recipe into a self-contained [`assembly::GameSpec`];
//! * [`engine`] plays a spec as a text adventure;
//! * [`solver`] proves a spec completable with a shortest plan.

pub mod assembly;
pub mod corpus;
pub mod engine;
pub mod pipeline;
pub mod recipegen;
pub mod rng;
pub mod session;
pub mod solver;
pub mod versioned;
pub mod worldkb;
