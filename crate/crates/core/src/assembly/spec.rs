use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::GameCondition;
use crate::recipegen::{Mode, Recipe};
use crate::versioned::{split_header, with_header, HeaderError};
use crate::worldkb::{FoodCategory, MapSpec, PREPARATION_VERBS, TAKE};

pub const SPEC_HEADER: &str = "spec-version";
pub const GOAL_VERB: &str = "prepare";
pub const GOAL_OBJECT: &str = "meal";

pub type StepId = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EntityKind {
    Ingredient,
    Tool,
    /// Containers and surfaces.
    Scenery,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlacedEntity {
    pub name: String,
    pub kind: EntityKind,
    pub room: String,
    /// Container or surface holding the entity; scenery has none.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub container: Option<String>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub openable: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub category: Option<FoodCategory>,
    /// Preparation verbs the action graph forbids for this ingredient.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub prohibited: Vec<String>,
}

impl PlacedEntity {
    pub fn scenery(name: &str, room: &str, openable: bool) -> Self {
        Self {
            name: name.into(),
            kind: EntityKind::Scenery,
            room: room.into(),
            container: None,
            openable,
            category: None,
            prohibited: Vec::new(),
        }
    }

    pub fn ingredient(
        name: &str,
        room: &str,
        container: &str,
        category: FoodCategory,
        prohibited: Vec<String>,
    ) -> Self {
        Self {
            name: name.into(),
            kind: EntityKind::Ingredient,
            room: room.into(),
            container: Some(container.into()),
            openable: false,
            category: Some(category),
            prohibited,
        }
    }

    pub fn tool(name: &str, room: &str, container: &str) -> Self {
        Self {
            name: name.into(),
            kind: EntityKind::Tool,
            room: room.into(),
            container: Some(container.into()),
            openable: false,
            category: None,
            prohibited: Vec::new(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuestStep {
    pub id: StepId,
    pub verb: String,
    pub object: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tool: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub prerequisites: Vec<StepId>,
}

impl QuestStep {
    /// The player command that completes this step.
    pub fn command(&self) -> String {
        format!("{} {}", self.verb, self.object)
    }

    pub fn is_goal(&self) -> bool {
        self.verb == GOAL_VERB && self.object == GOAL_OBJECT
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GameProvenance {
    pub condition: GameCondition,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<Mode>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rng: Option<String>,
}

/// A fully grounded, self-contained game.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GameSpec {
    pub goal_step: StepId,
    pub provenance: GameProvenance,
    pub recipe: Recipe,
    pub map: MapSpec,
    #[serde(rename = "entity")]
    pub entities: Vec<PlacedEntity>,
    #[serde(rename = "step")]
    pub quest: Vec<QuestStep>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpecError {
    #[error(transparent)]
    Header(#[from] HeaderError),
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("dangling {kind} reference {name:?}")]
    Dangling { kind: &'static str, name: String },
    #[error("quest prerequisites contain a cycle")]
    Cycle,
    #[error("invalid game spec: {0}")]
    Invalid(String),
}

impl GameSpec {
    pub fn entity(&self, name: &str) -> Option<&PlacedEntity> {
        self.entities.iter().find(|e| e.name == name)
    }

    pub fn step(&self, id: StepId) -> Option<&QuestStep> {
        self.quest.get(id as usize)
    }

    /// Rooms in the map.
    pub fn rooms(&self) -> impl Iterator<Item = &str> {
        self.map.rooms.iter().map(String::as_str)
    }

    /// Checks every cross-reference and the quest's partial order.
    pub fn validate(&self) -> Result<(), SpecError> {
        self.map
            .validate()
            .map_err(|e| SpecError::Invalid(e.to_string()))?;
        let rooms: BTreeSet<&str> = self.rooms().collect();
        let mut by_name: BTreeMap<&str, &PlacedEntity> = BTreeMap::new();
        for e in &self.entities {
            if e.name.trim().is_empty() {
                return Err(SpecError::Invalid("entity with empty name".into()));
            }
            if by_name.insert(&e.name, e).is_some() {
                return Err(SpecError::Invalid(format!("duplicate entity {:?}", e.name)));
            }
            if !rooms.contains(e.room.as_str()) {
                return Err(SpecError::Dangling {
                    kind: "room",
                    name: e.room.clone(),
                });
            }
        }
        for d in self
            .map
            .connections
            .iter()
            .filter_map(|c| c.door.as_deref())
        {
            if by_name.contains_key(d) {
                return Err(SpecError::Invalid(format!(
                    "door {d:?} clashes with an entity"
                )));
            }
        }
        for e in &self.entities {
            match (e.kind, &e.container) {
                (EntityKind::Scenery, None) => {}
                (EntityKind::Scenery, Some(_)) => {
                    return Err(SpecError::Invalid(format!(
                        "scenery {:?} inside a container",
                        e.name
                    )))
                }
                (_, None) => {
                    return Err(SpecError::Invalid(format!("{:?} has no container", e.name)))
                }
                (_, Some(c)) => match by_name.get(c.as_str()) {
                    Some(holder) if holder.kind == EntityKind::Scenery => {
                        if holder.room != e.room {
                            return Err(SpecError::Invalid(format!(
                                "{:?} is in {:?} but its container is in {:?}",
                                e.name, e.room, holder.room
                            )));
                        }
                    }
                    _ => {
                        return Err(SpecError::Dangling {
                            kind: "container",
                            name: c.clone(),
                        })
                    }
                },
            }
            if e.kind != EntityKind::Scenery && e.openable {
                return Err(SpecError::Invalid(format!(
                    "{:?} cannot be openable",
                    e.name
                )));
            }
        }
        let ingredients: BTreeSet<&str> = self
            .entities
            .iter()
            .filter(|e| e.kind == EntityKind::Ingredient)
            .map(|e| e.name.as_str())
            .collect();
        let recipe_names: BTreeSet<&str> = self.recipe.ingredient_names().collect();
        if recipe_names.len() != self.recipe.ingredients.len() {
            return Err(SpecError::Invalid(
                "recipe lists an ingredient twice".into(),
            ));
        }
        if ingredients != recipe_names {
            let missing = recipe_names
                .symmetric_difference(&ingredients)
                .next()
                .copied()
                .unwrap_or_default();
            return Err(SpecError::Dangling {
                kind: "ingredient",
                name: missing.to_string(),
            });
        }

        self.validate_quest(&by_name)
    }

    fn validate_quest(&self, by_name: &BTreeMap<&str, &PlacedEntity>) -> Result<(), SpecError> {
        let n = self.quest.len();
        let mut commands = BTreeSet::new();
        for (i, step) in self.quest.iter().enumerate() {
            if step.id as usize != i {
                return Err(SpecError::Invalid(format!(
                    "step ids must be 0..{n} in order; found {} at position {i}",
                    step.id
                )));
            }
            if !commands.insert(step.command()) {
                return Err(SpecError::Invalid(format!(
                    "duplicate step {:?}",
                    step.command()
                )));
            }
            for &p in &step.prerequisites {
                if p as usize >= n {
                    return Err(SpecError::Dangling {
                        kind: "step",
                        name: p.to_string(),
                    });
                }
            }
            if step.is_goal() {
                continue;
            }
            let object = by_name
                .get(step.object.as_str())
                .ok_or_else(|| SpecError::Dangling {
                    kind: "entity",
                    name: step.object.clone(),
                })?;
            let ok = match step.verb.as_str() {
                "open" => object.kind == EntityKind::Scenery && object.openable,
                TAKE => object.kind != EntityKind::Scenery,
                v if PREPARATION_VERBS.contains(&v) => object.kind == EntityKind::Ingredient,
                _ => false,
            };
            if !ok {
                return Err(SpecError::Invalid(format!(
                    "step {:?} does not fit a {:?}",
                    step.command(),
                    object.kind
                )));
            }
            if let Some(tool) = &step.tool {
                match by_name.get(tool.as_str()) {
                    Some(t) if t.kind == EntityKind::Tool => {}
                    _ => {
                        return Err(SpecError::Dangling {
                            kind: "tool",
                            name: tool.clone(),
                        })
                    }
                }
            }
        }
        let goal = self
            .step(self.goal_step)
            .ok_or_else(|| SpecError::Dangling {
                kind: "step",
                name: self.goal_step.to_string(),
            })?;
        if !goal.is_goal() {
            return Err(SpecError::Invalid(format!(
                "goal step must be `{GOAL_VERB} {GOAL_OBJECT}`, found {:?}",
                goal.command()
            )));
        }
        if self.quest.iter().filter(|s| s.is_goal()).count() != 1 {
            return Err(SpecError::Invalid("exactly one goal step allowed".into()));
        }
        let order = self.topological_order().ok_or(SpecError::Cycle)?;
        let ancestors = self.ancestors(&order);
        let goal_anc = &ancestors[self.goal_step as usize];
        if goal_anc.len() != n - 1 {
            let stray = (0..n as StepId)
                .find(|&i| i != self.goal_step && !goal_anc.contains(&i))
                .unwrap_or_default();
            return Err(SpecError::Invalid(format!(
                "goal does not depend on step {:?}",
                self.quest[stray as usize].command()
            )));
        }
        for step in &self.quest {
            if let Some(tool) = &step.tool {
                let taken = ancestors[step.id as usize].iter().any(|&a| {
                    self.quest[a as usize].verb == TAKE && &self.quest[a as usize].object == tool
                });
                if !taken {
                    return Err(SpecError::Invalid(format!(
                        "step {:?} needs {tool:?} but does not depend on taking it",
                        step.command()
                    )));
                }
            }
        }
        Ok(())
    }

    /// Kahn order over prerequisites, `None` on a cycle.
    pub fn topological_order(&self) -> Option<Vec<StepId>> {
        let n = self.quest.len();
        let mut indegree = vec![0usize; n];
        let mut children = vec![Vec::new(); n];
        for s in &self.quest {
            for &p in &s.prerequisites {
                if p as usize >= n {
                    return None;
                }
                indegree[s.id as usize] += 1;
                children[p as usize].push(s.id);
            }
        }
        let mut ready: Vec<StepId> = (0..n as StepId)
            .filter(|&i| indegree[i as usize] == 0)
            .collect();
        ready.reverse();
        let mut out = Vec::with_capacity(n);
        while let Some(i) = ready.pop() {
            out.push(i);
            for &c in &children[i as usize] {
                indegree[c as usize] -= 1;
                if indegree[c as usize] == 0 {
                    ready.push(c);
                }
            }
        }
        (out.len() == n).then_some(out)
    }

    fn ancestors(&self, order: &[StepId]) -> Vec<BTreeSet<StepId>> {
        let mut anc = vec![BTreeSet::new(); self.quest.len()];
        for &i in order {
            let mut set = BTreeSet::new();
            for &p in &self.quest[i as usize].prerequisites {
                set.insert(p);
                set.extend(anc[p as usize].iter().copied());
            }
            anc[i as usize] = set;
        }
        anc
    }
}

/// Writes the `spec-version: 1` text form. Field order is fixed, so equal
/// specs serialize to identical bytes.
pub fn serialize_game(spec: &GameSpec) -> String {
    let body = toml::to_string(spec).expect("game specs always serialize");
    with_header(SPEC_HEADER, 1, &body)
}

pub fn deserialize_game(text: &str) -> Result<GameSpec, SpecError> {
    let body = split_header(text, SPEC_HEADER, 1)?;
    let spec: GameSpec = toml::from_str(body).map_err(|e| SpecError::Schema(e.to_string()))?;
    spec.validate()?;
    Ok(spec)
}
