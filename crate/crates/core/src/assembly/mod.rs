//! Grounding a recipe in a world: place ingredients and tools, derive the
//! partially ordered quest, and render the recipe card.

mod spec;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::recipegen::{Mode, Recipe, COMPLEX_INGREDIENTS, SIMPLE_INGREDIENTS};
use crate::worldkb::{MapId, WorldKb, PREPARATION_VERBS, TAKE};

pub use spec::{
    deserialize_game, serialize_game, EntityKind, GameProvenance, GameSpec, PlacedEntity,
    QuestStep, SpecError, StepId, GOAL_OBJECT, GOAL_VERB, SPEC_HEADER,
};

/// Which generator produced a game.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Generator {
    /// Hand-authored fixture.
    HD,
    /// Uniform recipe, uniform placement.
    RA,
    /// Graph walk, 4 ingredients.
    MCS,
    /// Graph walk, 8 ingredients.
    MCC,
    /// Graph walk of any other size.
    MC,
    /// n-gram ingredient sequence.
    LM,
}

impl Generator {
    pub fn for_mode(mode: Mode, n_ingredients: usize) -> Generator {
        match mode {
            Mode::Random => Generator::RA,
            Mode::Ngram => Generator::LM,
            Mode::Markov if n_ingredients == SIMPLE_INGREDIENTS => Generator::MCS,
            Mode::Markov if n_ingredients == COMPLEX_INGREDIENTS => Generator::MCC,
            Mode::Markov => Generator::MC,
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Generator::HD => "HD",
            Generator::RA => "RA",
            Generator::MCS => "MCS",
            Generator::MCC => "MCC",
            Generator::MC => "MC",
            Generator::LM => "LM",
        }
    }
}

/// Generator × map, written `MCS-1R`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GameCondition {
    pub generator: Generator,
    pub map: MapId,
}

impl GameCondition {
    pub fn new(generator: Generator, map: MapId) -> Self {
        Self { generator, map }
    }

    /// Random assignment ignores the object graph when placing food.
    pub fn random_placement(self) -> bool {
        self.generator == Generator::RA
    }
}

impl fmt::Display for GameCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.generator.as_str(), self.map)
    }
}

impl FromStr for GameCondition {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (g, m) = s
            .split_once('-')
            .ok_or_else(|| format!("condition {s:?} is not of the form GEN-MAP"))?;
        let generator = match g.to_ascii_uppercase().as_str() {
            "HD" => Generator::HD,
            "RA" => Generator::RA,
            "MCS" => Generator::MCS,
            "MCC" => Generator::MCC,
            "MC" => Generator::MC,
            "LM" => Generator::LM,
            _ => return Err(format!("unknown generator {g:?}")),
        };
        Ok(Self {
            generator,
            map: m.parse()?,
        })
    }
}

impl Serialize for GameCondition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GameCondition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AssemblyError {
    #[error("recipe has no ingredients")]
    EmptyRecipe,
    #[error("ingredient {0:?} has the same name as a world object")]
    NameClash(String),
    #[error("condition map {condition} does not match knowledge base map {kb}")]
    MapMismatch { condition: MapId, kb: MapId },
    #[error("assembled spec is invalid: {0}")]
    Invalid(#[from] SpecError),
}

/// Fills in the recipe title (`<head ingredient> <dish form>`) and one step
/// line per preparation action, ending with the meal itself.
pub fn describe_recipe(recipe: &mut Recipe, kb: &WorldKb) {
    recipe.title = match recipe.ingredients.first() {
        Some(head) => format!(
            "{} {}",
            head.name(),
            kb.actions.dish_form(kb.category(head.name()))
        ),
        None => "empty dish".to_string(),
    };
    recipe.steps = recipe
        .ingredients
        .iter()
        .flat_map(|ing| {
            kb.actions_for(ing.name())
                .into_iter()
                .filter(|(a, _)| a != TAKE)
                .map(move |(a, _)| format!("{a} the {}", ing.name()))
        })
        .chain(std::iter::once("prepare the meal".to_string()))
        .collect();
}

struct QuestBuilder {
    steps: Vec<QuestStep>,
    index: BTreeMap<(String, String), StepId>,
}

impl QuestBuilder {
    fn add(
        &mut self,
        verb: &str,
        object: &str,
        tool: Option<&str>,
        prerequisites: Vec<StepId>,
    ) -> StepId {
        let key = (verb.to_string(), object.to_string());
        if let Some(&id) = self.index.get(&key) {
            return id;
        }
        let id = self.steps.len() as StepId;
        let mut prerequisites = prerequisites;
        prerequisites.sort_unstable();
        prerequisites.dedup();
        self.steps.push(QuestStep {
            id,
            verb: verb.to_string(),
            object: object.to_string(),
            tool: tool.map(str::to_string),
            prerequisites,
        });
        self.index.insert(key, id);
        id
    }
}

/// Grounds `recipe` in `kb`'s world.
///
/// Each ingredient gets a home (object-graph placement, or any container
/// under random assignment) and a chain of quest steps: open its container
/// when openable, take it, then its preparation actions in order, each also
/// depending on taking the required tool. The goal step depends on the end
/// of every chain; chains are otherwise unordered.
pub fn assemble<R: Rng + ?Sized>(
    recipe: &Recipe,
    kb: &WorldKb,
    condition: GameCondition,
    rng: &mut R,
) -> Result<GameSpec, AssemblyError> {
    if recipe.ingredients.is_empty() {
        return Err(AssemblyError::EmptyRecipe);
    }
    if condition.map != kb.map.id {
        return Err(AssemblyError::MapMismatch {
            condition: condition.map,
            kb: kb.map.id,
        });
    }
    let mut entities: Vec<PlacedEntity> = kb
        .all_containers()
        .map(|c| PlacedEntity::scenery(&c.name, &c.room, c.openable))
        .collect();
    let world_names: Vec<String> = entities
        .iter()
        .map(|e| e.name.clone())
        .chain(kb.objects.tool_placements.keys().cloned())
        .chain(kb.map.connections.iter().filter_map(|c| c.door.clone()))
        .collect();
    let all_containers: Vec<&str> = kb.all_containers().map(|c| c.name.as_str()).collect();

    let mut quest = QuestBuilder {
        steps: Vec::new(),
        index: BTreeMap::new(),
    };
    let mut chain_ends = Vec::new();
    let mut tools_needed: Vec<String> = Vec::new();

    for ing in &recipe.ingredients {
        let name = ing.name();
        if world_names.iter().any(|w| w == name) || name == GOAL_OBJECT {
            return Err(AssemblyError::NameClash(name.to_string()));
        }
        let home = if condition.random_placement() {
            all_containers[rng.random_range(0..all_containers.len())]
        } else {
            kb.placement_for(name, rng)
        };
        let container = kb
            .objects
            .container(home)
            .expect("placements are validated against containers");
        let category = kb.category(name);
        entities.push(PlacedEntity::ingredient(
            name,
            &container.room,
            home,
            category,
            PREPARATION_VERBS
                .iter()
                .filter(|v| kb.actions.is_prohibited(category, v))
                .map(|v| v.to_string())
                .collect(),
        ));

        let open = container
            .openable
            .then(|| quest.add("open", home, None, vec![]));
        let mut last = quest.add(TAKE, name, None, open.into_iter().collect());
        for (action, tool) in kb.actions_for(name) {
            if action == TAKE {
                continue;
            }
            let mut prereqs = vec![last];
            if let Some(tool) = &tool {
                let at = &kb.objects.tool_placements[tool];
                let tool_home = kb.objects.container(at).expect("tool homes are validated");
                let open_tool = tool_home
                    .openable
                    .then(|| quest.add("open", at, None, vec![]));
                prereqs.push(quest.add(TAKE, tool, None, open_tool.into_iter().collect()));
                if !tools_needed.contains(tool) {
                    tools_needed.push(tool.clone());
                }
            }
            last = quest.add(&action, name, tool.as_deref(), prereqs);
        }
        chain_ends.push(last);
    }
    for tool in &tools_needed {
        let at = &kb.objects.tool_placements[tool];
        let room = &kb.objects.container(at).expect("validated").room;
        entities.push(PlacedEntity::tool(tool, room, at));
    }
    let goal_step = quest.add(GOAL_VERB, GOAL_OBJECT, None, chain_ends);

    let spec = GameSpec {
        provenance: GameProvenance {
            condition,
            mode: recipe.provenance.as_ref().map(|p| p.mode),
            seed: recipe.provenance.as_ref().map(|p| p.seed),
            rng: recipe.provenance.as_ref().map(|p| p.rng.clone()),
        },
        map: kb.map.clone(),
        entities,
        quest: quest.steps,
        goal_step,
        recipe: recipe.clone(),
    };
    spec.validate()?;
    Ok(spec)
}

/// Title and card text shown to the player. Ingredient homes are not
/// revealed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecipeCard {
    pub title: String,
    pub ingredient_lines: Vec<String>,
    pub step_lines: Vec<String>,
}

impl RecipeCard {
    pub fn text(&self) -> String {
        let mut out = format!("Recipe: {}\n\nIngredients:\n", self.title);
        for l in &self.ingredient_lines {
            out.push_str("  - ");
            out.push_str(l);
            out.push('\n');
        }
        out.push_str("\nDirections:\n");
        for (i, l) in self.step_lines.iter().enumerate() {
            out.push_str(&format!("  {}. {}\n", i + 1, l));
        }
        out
    }
}

pub fn render_instructions(spec: &GameSpec) -> RecipeCard {
    RecipeCard {
        title: spec.recipe.title.clone(),
        ingredient_lines: spec.recipe.ingredient_names().map(str::to_string).collect(),
        step_lines: spec.recipe.steps.clone(),
    }
}
