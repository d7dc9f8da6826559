//! World knowledge base: room layouts, the object graph (where food and tools
//! live) and the action graph (what can be done to each food category, and
//! with which tool).
//!
//! All four parts are data files with a `kb-version: 1` header. The bundled
//! files are compiled in and available through [`WorldKb::builtin`].

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::versioned::{split_header, HeaderError};

pub const KB_HEADER: &str = "kb-version";
pub const KITCHEN: &str = "kitchen";
/// Where anything without a category home goes.
pub const FALLBACK_PLACEMENT: &str = "kitchen counter";
pub const TAKE: &str = "take";
/// Preparation verbs the engine understands.
pub const PREPARATION_VERBS: &[&str] = &["peel", "cut", "cook"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FoodCategory {
    Vegetable,
    Fruit,
    Meat,
    Dairy,
    /// Grains and other shelf-stable pantry goods.
    Pantry,
    Liquid,
    Other,
}

impl FoodCategory {
    pub const ALL: [FoodCategory; 7] = [
        FoodCategory::Vegetable,
        FoodCategory::Fruit,
        FoodCategory::Meat,
        FoodCategory::Dairy,
        FoodCategory::Pantry,
        FoodCategory::Liquid,
        FoodCategory::Other,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FoodCategory::Vegetable => "vegetable",
            FoodCategory::Fruit => "fruit",
            FoodCategory::Meat => "meat",
            FoodCategory::Dairy => "dairy",
            FoodCategory::Pantry => "pantry",
            FoodCategory::Liquid => "liquid",
            FoodCategory::Other => "other",
        }
    }
}

impl fmt::Display for FoodCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum MapId {
    #[serde(rename = "1R")]
    OneRoom,
    #[serde(rename = "5R")]
    FiveRoom,
}

impl MapId {
    pub fn as_str(self) -> &'static str {
        match self {
            MapId::OneRoom => "1R",
            MapId::FiveRoom => "5R",
        }
    }

    fn expected_rooms(self) -> &'static [&'static str] {
        match self {
            MapId::OneRoom => &[KITCHEN],
            MapId::FiveRoom => &[KITCHEN, "dining room", "garage", "backyard", "garden"],
        }
    }
}

impl fmt::Display for MapId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MapId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "1R" => Ok(MapId::OneRoom),
            "5R" => Ok(MapId::FiveRoom),
            _ => Err(format!("unknown map {s:?} (expected 1R or 5R)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DoorState {
    /// Open archway, nothing to open.
    None,
    Open,
    Closed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Connection {
    pub from: String,
    pub to: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub door: Option<String>,
    pub state: DoorState,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub inferred: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapSpec {
    pub id: MapId,
    pub rooms: Vec<String>,
    #[serde(default, rename = "connection")]
    pub connections: Vec<Connection>,
}

impl MapSpec {
    /// Rooms reachable from `room` in one move, with the connection index.
    pub fn neighbors<'a>(&'a self, room: &'a str) -> impl Iterator<Item = (&'a str, usize)> + 'a {
        self.connections
            .iter()
            .enumerate()
            .filter_map(move |(i, c)| {
                if c.from == room {
                    Some((c.to.as_str(), i))
                } else if c.to == room {
                    Some((c.from.as_str(), i))
                } else {
                    None
                }
            })
    }

    /// Checks room references, door naming and connectivity.
    pub fn validate(&self) -> Result<(), KbError> {
        let rooms: BTreeSet<&str> = self.rooms.iter().map(String::as_str).collect();
        if rooms.len() != self.rooms.len() {
            return Err(KbError::Invalid("duplicate room name".into()));
        }
        let expected: BTreeSet<&str> = self.id.expected_rooms().iter().copied().collect();
        if rooms != expected {
            return Err(KbError::Invalid(format!(
                "map {} must have rooms {:?}, found {:?}",
                self.id, expected, rooms
            )));
        }
        let mut doors = BTreeSet::new();
        for c in &self.connections {
            for r in [&c.from, &c.to] {
                if !rooms.contains(r.as_str()) {
                    return Err(KbError::Dangling {
                        kind: "room",
                        name: r.clone(),
                    });
                }
            }
            if c.from == c.to {
                return Err(KbError::Invalid(format!(
                    "room {:?} connected to itself",
                    c.from
                )));
            }
            match (&c.door, c.state) {
                (None, DoorState::None) => {}
                (Some(d), DoorState::Open | DoorState::Closed) => {
                    if !doors.insert(d.as_str()) {
                        return Err(KbError::Invalid(format!("duplicate door {d:?}")));
                    }
                }
                (None, _) => {
                    return Err(KbError::Invalid(format!(
                        "connection {} - {} has a door state but no door name",
                        c.from, c.to
                    )))
                }
                (Some(d), DoorState::None) => {
                    return Err(KbError::Invalid(format!("door {d:?} has state `none`")))
                }
            }
        }
        // connectivity from the kitchen
        let mut seen = BTreeSet::from([KITCHEN]);
        let mut queue = VecDeque::from([KITCHEN]);
        while let Some(r) = queue.pop_front() {
            for (n, _) in self.neighbors(r) {
                if seen.insert(n) {
                    queue.push_back(n);
                }
            }
        }
        if seen != rooms {
            return Err(KbError::Invalid(format!(
                "map {} is not connected; unreachable: {:?}",
                self.id,
                rooms.difference(&seen).collect::<Vec<_>>()
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Container {
    pub name: String,
    pub room: String,
    pub openable: bool,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub inferred: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObjectGraph {
    pub containers: Vec<Container>,
    pub category_placements: BTreeMap<FoodCategory, Vec<String>>,
    /// tool -> container
    pub tool_placements: BTreeMap<String, String>,
}

impl ObjectGraph {
    pub fn container(&self, name: &str) -> Option<&Container> {
        self.containers.iter().find(|c| c.name == name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionGraph {
    pub affordances: BTreeMap<FoodCategory, Vec<String>>,
    /// action -> tool
    pub tool_requirements: BTreeMap<String, String>,
    pub prohibitions: BTreeSet<(FoodCategory, String)>,
    pub dish_forms: BTreeMap<FoodCategory, String>,
}

impl ActionGraph {
    pub fn is_prohibited(&self, category: FoodCategory, action: &str) -> bool {
        self.prohibitions.contains(&(category, action.to_string()))
    }

    pub fn dish_form(&self, category: FoodCategory) -> &str {
        self.dish_forms
            .get(&category)
            .map(String::as_str)
            .unwrap_or("dish")
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CategoryLexicon {
    map: BTreeMap<String, FoodCategory>,
}

impl CategoryLexicon {
    /// Category of a canonical ingredient name; unknown names are `Other`.
    pub fn category(&self, name: &str) -> FoodCategory {
        self.map.get(name).copied().unwrap_or(FoodCategory::Other)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WorldKb {
    pub map: MapSpec,
    pub objects: ObjectGraph,
    pub actions: ActionGraph,
    pub lexicon: CategoryLexicon,
}

#[derive(Debug, Error)]
pub enum KbError {
    #[error("{file}: {source}")]
    Header {
        file: &'static str,
        source: HeaderError,
    },
    #[error("{file}: {source}")]
    Toml {
        file: &'static str,
        source: toml::de::Error,
    },
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("dangling {kind} reference {name:?}")]
    Dangling { kind: &'static str, name: String },
    #[error("action {action:?} requires tool {tool:?}, which is not placed anywhere")]
    UnplacedTool { action: String, tool: String },
    #[error("invalid knowledge base: {0}")]
    Invalid(String),
}

// on-disk shapes

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MapFile {
    map: MapSpec,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PlacementRow {
    category: FoodCategory,
    targets: Vec<String>,
    #[serde(default)]
    #[allow(dead_code)]
    inferred: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ObjectFile {
    #[serde(default, rename = "container")]
    containers: Vec<Container>,
    #[serde(default, rename = "placement")]
    placements: Vec<PlacementRow>,
    #[serde(default)]
    tools: BTreeMap<String, String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AffordanceRow {
    category: FoodCategory,
    actions: Vec<String>,
    #[serde(default)]
    #[allow(dead_code)]
    inferred: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ProhibitionRow {
    category: FoodCategory,
    action: String,
    #[serde(default)]
    #[allow(dead_code)]
    inferred: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ActionFile {
    #[serde(default, rename = "affordance")]
    affordances: Vec<AffordanceRow>,
    #[serde(default)]
    tools: BTreeMap<String, String>,
    #[serde(default, rename = "prohibition")]
    prohibitions: Vec<ProhibitionRow>,
    #[serde(default)]
    dish_forms: BTreeMap<FoodCategory, String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LexiconFile {
    lexicon: BTreeMap<FoodCategory, Vec<String>>,
}

fn parse_section<T: serde::de::DeserializeOwned>(
    text: &str,
    file: &'static str,
) -> Result<T, KbError> {
    let body =
        split_header(text, KB_HEADER, 1).map_err(|source| KbError::Header { file, source })?;
    toml::from_str(body).map_err(|source| KbError::Toml { file, source })
}

pub fn parse_map(text: &str) -> Result<MapSpec, KbError> {
    let map = parse_section::<MapFile>(text, "map file")?.map;
    map.validate()?;
    Ok(map)
}

fn parse_objects(text: &str) -> Result<ObjectGraph, KbError> {
    let file: ObjectFile = parse_section(text, "object file")?;
    let mut category_placements = BTreeMap::new();
    for row in file.placements {
        if category_placements
            .insert(row.category, row.targets)
            .is_some()
        {
            return Err(KbError::Invalid(format!(
                "category {} placed twice",
                row.category
            )));
        }
    }
    Ok(ObjectGraph {
        containers: file.containers,
        category_placements,
        tool_placements: file.tools,
    })
}

fn parse_actions(text: &str) -> Result<ActionGraph, KbError> {
    let file: ActionFile = parse_section(text, "action file")?;
    let mut affordances = BTreeMap::new();
    for row in file.affordances {
        if affordances.insert(row.category, row.actions).is_some() {
            return Err(KbError::Invalid(format!(
                "category {} has two affordance rows",
                row.category
            )));
        }
    }
    Ok(ActionGraph {
        affordances,
        tool_requirements: file.tools,
        prohibitions: file
            .prohibitions
            .into_iter()
            .map(|p| (p.category, p.action))
            .collect(),
        dish_forms: file.dish_forms,
    })
}

fn parse_lexicon(text: &str) -> Result<CategoryLexicon, KbError> {
    let file: LexiconFile = parse_section(text, "lexicon file")?;
    let mut map = BTreeMap::new();
    for (cat, names) in file.lexicon {
        for name in names {
            if let Some(prev) = map.insert(name.clone(), cat) {
                return Err(KbError::Invalid(format!(
                    "lexicon lists {name:?} as both {prev} and {cat}"
                )));
            }
        }
    }
    Ok(CategoryLexicon { map })
}

/// Parses and cross-validates the four knowledge-base files.
pub fn load_kb(
    map_text: &str,
    object_text: &str,
    action_text: &str,
    lexicon_text: &str,
) -> Result<WorldKb, KbError> {
    let kb = WorldKb {
        map: parse_map(map_text)?,
        objects: parse_objects(object_text)?,
        actions: parse_actions(action_text)?,
        lexicon: parse_lexicon(lexicon_text)?,
    };
    kb.validate()?;
    Ok(kb)
}

fn read(path: &Path) -> Result<String, KbError> {
    std::fs::read_to_string(path).map_err(|source| KbError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Loads `map-<id>.kb`, `objects-<id>.kb`, `actions.kb` and `lexicon.kb`
/// from a directory laid out like the bundled `data/kb`.
pub fn load_kb_dir(dir: impl AsRef<Path>, map: MapId) -> Result<WorldKb, KbError> {
    let dir = dir.as_ref();
    load_kb(
        &read(&dir.join(format!("map-{map}.kb")))?,
        &read(&dir.join(format!("objects-{map}.kb")))?,
        &read(&dir.join("actions.kb"))?,
        &read(&dir.join("lexicon.kb"))?,
    )
}

impl WorldKb {
    /// The knowledge base shipped with the crate.
    pub fn builtin(map: MapId) -> WorldKb {
        let (map_text, object_text) = match map {
            MapId::OneRoom => (
                include_str!("../../data/kb/map-1R.kb"),
                include_str!("../../data/kb/objects-1R.kb"),
            ),
            MapId::FiveRoom => (
                include_str!("../../data/kb/map-5R.kb"),
                include_str!("../../data/kb/objects-5R.kb"),
            ),
        };
        load_kb(
            map_text,
            object_text,
            include_str!("../../data/kb/actions.kb"),
            include_str!("../../data/kb/lexicon.kb"),
        )
        .expect("bundled knowledge base is valid")
    }

    pub fn category(&self, ingredient: &str) -> FoodCategory {
        self.lexicon.category(ingredient)
    }

    fn validate(&self) -> Result<(), KbError> {
        let rooms: BTreeSet<&str> = self.map.rooms.iter().map(String::as_str).collect();
        let mut names: BTreeSet<&str> = BTreeSet::new();
        for c in &self.objects.containers {
            if !rooms.contains(c.room.as_str()) {
                return Err(KbError::Dangling {
                    kind: "room",
                    name: c.room.clone(),
                });
            }
            if !names.insert(&c.name) {
                return Err(KbError::Invalid(format!(
                    "duplicate container {:?}",
                    c.name
                )));
            }
        }
        let containers = names.clone();
        for d in self
            .map
            .connections
            .iter()
            .filter_map(|c| c.door.as_deref())
        {
            if !names.insert(d) {
                return Err(KbError::Invalid(format!(
                    "door {d:?} clashes with another entity"
                )));
            }
        }
        if !containers.contains(FALLBACK_PLACEMENT) {
            return Err(KbError::Dangling {
                kind: "container",
                name: FALLBACK_PLACEMENT.into(),
            });
        }
        for (cat, targets) in &self.objects.category_placements {
            if targets.is_empty() {
                return Err(KbError::Invalid(format!("category {cat} has no placement")));
            }
            if self.map.id == MapId::OneRoom && targets.len() != 1 {
                return Err(KbError::Invalid(format!(
                    "1R placements must be deterministic; {cat} lists {}",
                    targets.len()
                )));
            }
            for t in targets {
                if !containers.contains(t.as_str()) {
                    return Err(KbError::Dangling {
                        kind: "container",
                        name: t.clone(),
                    });
                }
            }
        }
        for (tool, at) in &self.objects.tool_placements {
            if !containers.contains(at.as_str()) {
                return Err(KbError::Dangling {
                    kind: "container",
                    name: at.clone(),
                });
            }
            if !names.insert(tool) {
                return Err(KbError::Invalid(format!(
                    "tool {tool:?} clashes with another entity"
                )));
            }
        }
        for (action, tool) in &self.actions.tool_requirements {
            if !PREPARATION_VERBS.contains(&action.as_str()) {
                return Err(KbError::Invalid(format!("unknown action {action:?}")));
            }
            if !self.objects.tool_placements.contains_key(tool) {
                return Err(KbError::UnplacedTool {
                    action: action.clone(),
                    tool: tool.clone(),
                });
            }
        }
        for (cat, actions) in &self.actions.affordances {
            for a in actions {
                if !PREPARATION_VERBS.contains(&a.as_str()) {
                    return Err(KbError::Invalid(format!(
                        "category {cat} affords unknown action {a:?}"
                    )));
                }
            }
        }
        // tool closure, per category (so per ingredient)
        for cat in FoodCategory::ALL {
            for (action, tool) in self.actions_for_category(cat) {
                if let Some(tool) = tool {
                    if !self.objects.tool_placements.contains_key(&tool) {
                        return Err(KbError::UnplacedTool { action, tool });
                    }
                }
            }
        }
        Ok(())
    }

    /// Eligible homes for an ingredient under the object graph.
    pub fn placement_options(&self, ingredient: &str) -> Vec<&str> {
        match self
            .objects
            .category_placements
            .get(&self.category(ingredient))
        {
            Some(t) => t.iter().map(String::as_str).collect(),
            None => vec![FALLBACK_PLACEMENT],
        }
    }

    /// Where an ingredient starts the game: the unique home on 1R, a uniform
    /// choice among the homes on 5R.
    pub fn placement_for<R: Rng + ?Sized>(&self, ingredient: &str, rng: &mut R) -> &str {
        let options = self.placement_options(ingredient);
        if options.len() == 1 {
            options[0]
        } else {
            options[rng.random_range(0..options.len())]
        }
    }

    fn actions_for_category(&self, cat: FoodCategory) -> Vec<(String, Option<String>)> {
        let chain: Vec<(String, Option<String>)> = self
            .actions
            .affordances
            .get(&cat)
            .into_iter()
            .flatten()
            .filter(|a| !self.actions.is_prohibited(cat, a))
            .map(|a| (a.clone(), self.actions.tool_requirements.get(a).cloned()))
            .collect();
        if chain.is_empty() {
            vec![(TAKE.to_string(), None)]
        } else {
            chain
        }
    }

    /// Preparation chain for an ingredient: `(action, tool)` in order, with
    /// prohibitions removed. Ingredients with nothing to do get `take` alone.
    pub fn actions_for(&self, ingredient: &str) -> Vec<(String, Option<String>)> {
        self.actions_for_category(self.category(ingredient))
    }

    /// Every container and surface in the map.
    pub fn all_containers(&self) -> impl Iterator<Item = &Container> {
        self.objects.containers.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::{stream, Stream};

    const MAP1: &str = include_str!("../../data/kb/map-1R.kb");
    const OBJ1: &str = include_str!("../../data/kb/objects-1R.kb");
    const ACT: &str = include_str!("../../data/kb/actions.kb");
    const LEX: &str = include_str!("../../data/kb/lexicon.kb");

    #[test]
    fn builtin_1r_homes() {
        let kb = WorldKb::builtin(MapId::OneRoom);
        assert_eq!(kb.placement_options("carrot"), ["refrigerator"]);
        assert_eq!(kb.placement_options("apple"), ["kitchen island"]);
        assert_eq!(kb.objects.tool_placements["knife"], "drawer");
        assert_eq!(kb.objects.tool_placements["peeler"], "drawer");
    }

    #[test]
    fn builtin_5r_dynamic_homes() {
        let kb = WorldKb::builtin(MapId::FiveRoom);
        assert_eq!(
            kb.placement_options("steak"),
            ["refrigerator", "old refrigerator"]
        );
        assert!(kb.placement_options("carrot").contains(&"garden bed"));
        assert!(kb.placement_options("apple").contains(&"garden bed"));
        let closed: Vec<_> = kb
            .map
            .connections
            .iter()
            .filter(|c| c.state == DoorState::Closed)
            .map(|c| c.to.as_str())
            .collect();
        assert_eq!(closed, ["garage", "backyard"]);
    }

    #[test]
    fn unknown_ingredient_falls_back() {
        let kb = WorldKb::builtin(MapId::OneRoom);
        let mut rng = stream(1, Stream::Placement);
        assert_eq!(
            kb.placement_for("dragonfruit-x", &mut rng),
            FALLBACK_PLACEMENT
        );
        assert_eq!(
            kb.actions_for("dragonfruit-x"),
            [("take".to_string(), None)]
        );
    }

    #[test]
    fn carrot_and_steak_chains() {
        let kb = WorldKb::builtin(MapId::OneRoom);
        let s = |a: &str, t: Option<&str>| (a.to_string(), t.map(str::to_string));
        assert_eq!(
            kb.actions_for("carrot"),
            [s("peel", Some("peeler")), s("cut", Some("knife"))]
        );
        let steak = kb.actions_for("steak");
        assert!(steak.iter().all(|(a, _)| a != "peel"));
        assert!(!steak.is_empty());
    }

    #[test]
    fn prohibition_overrides_affordance() {
        let act = ACT.replace(
            "category = \"meat\"\nactions = [\"cut\", \"cook\"]",
            "category = \"meat\"\nactions = [\"peel\", \"cut\", \"cook\"]",
        );
        assert_ne!(act, ACT);
        let kb = load_kb(MAP1, OBJ1, &act, LEX).unwrap();
        assert!(kb.actions_for("steak").iter().all(|(a, _)| a != "peel"));
    }

    #[test]
    fn unplaced_tool_is_rejected() {
        let obj = OBJ1.replace("knife = \"drawer\"\n", "");
        match load_kb(MAP1, &obj, ACT, LEX) {
            Err(KbError::UnplacedTool { action, tool }) => {
                assert_eq!((action.as_str(), tool.as_str()), ("cut", "knife"));
            }
            other => panic!("expected unplaced tool, got {other:?}"),
        }
    }

    #[test]
    fn dangling_references_are_named() {
        let obj = OBJ1.replace(
            "targets = [\"kitchen island\"]",
            "targets = [\"fruit bowl\"]",
        );
        let err = load_kb(MAP1, &obj, ACT, LEX).unwrap_err();
        assert!(err.to_string().contains("fruit bowl"), "{err}");
        let obj = OBJ1.replacen("room = \"kitchen\"", "room = \"attic\"", 1);
        let err = load_kb(MAP1, &obj, ACT, LEX).unwrap_err();
        assert!(err.to_string().contains("attic"), "{err}");
    }

    #[test]
    fn one_room_placements_must_be_singletons() {
        let obj = OBJ1.replace(
            "targets = [\"kitchen island\"]",
            "targets = [\"kitchen island\", \"kitchen counter\"]",
        );
        assert!(matches!(
            load_kb(MAP1, &obj, ACT, LEX),
            Err(KbError::Invalid(_))
        ));
    }

    #[test]
    fn disconnected_map_is_rejected() {
        let map5 = include_str!("../../data/kb/map-5R.kb");
        let cut = map5.replace(
            "from = \"backyard\"\nto = \"garden\"",
            "from = \"garage\"\nto = \"backyard\"",
        );
        assert!(parse_map(&cut).is_err());
    }

    #[test]
    fn header_is_required() {
        let err = load_kb(
            &MAP1.replace("kb-version: 1", "kb-version: 9"),
            OBJ1,
            ACT,
            LEX,
        );
        assert!(matches!(err, Err(KbError::Header { .. })));
    }

    #[test]
    fn map_id_parses() {
        assert_eq!("5r".parse::<MapId>().unwrap(), MapId::FiveRoom);
        assert!("3R".parse::<MapId>().is_err());
    }
}
