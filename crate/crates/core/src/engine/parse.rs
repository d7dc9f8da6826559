//! Closed verb grammar with a small synonym table.

use std::fmt;

use thiserror::Error;

use super::{GameState, World};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verb {
    Go,
    Open,
    Take,
    Drop,
    Examine,
    Inventory,
    Look,
    Peel,
    Cut,
    Cook,
    PrepareMeal,
}

impl Verb {
    pub fn as_str(self) -> &'static str {
        match self {
            Verb::Go => "go",
            Verb::Open => "open",
            Verb::Take => "take",
            Verb::Drop => "drop",
            Verb::Examine => "examine",
            Verb::Inventory => "inventory",
            Verb::Look => "look",
            Verb::Peel => "peel",
            Verb::Cut => "cut",
            Verb::Cook => "cook",
            Verb::PrepareMeal => "prepare meal",
        }
    }

    pub fn is_preparation(self) -> bool {
        matches!(self, Verb::Peel | Verb::Cut | Verb::Cook)
    }

    fn from_preparation(word: &str) -> Option<Verb> {
        match word {
            "peel" => Some(Verb::Peel),
            "cut" => Some(Verb::Cut),
            "cook" => Some(Verb::Cook),
            _ => None,
        }
    }

    pub(crate) fn for_step(verb: &str) -> Option<Verb> {
        match verb {
            "open" => Some(Verb::Open),
            "take" => Some(Verb::Take),
            crate::assembly::GOAL_VERB => Some(Verb::PrepareMeal),
            v => Verb::from_preparation(v),
        }
    }
}

impl fmt::Display for Verb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Something a noun phrase can name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Target {
    Entity(usize),
    /// Index of the map connection the door sits on.
    Door(usize),
    Room(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Command {
    pub verb: Verb,
    pub object: Option<Target>,
    /// `take X from <source>`
    pub source: Option<Target>,
    /// `cut X with <tool>`
    pub tool: Option<Target>,
}

impl Command {
    pub fn bare(verb: Verb) -> Self {
        Self {
            verb,
            object: None,
            source: None,
            tool: None,
        }
    }

    pub fn on(verb: Verb, object: Target) -> Self {
        Self {
            object: Some(object),
            ..Self::bare(verb)
        }
    }

    /// Canonical command text, e.g. `open garage door`.
    pub fn text(&self, world: &World) -> String {
        let mut out = self.verb.as_str().to_string();
        for t in [self.object, self.source, self.tool]
            .into_iter()
            .enumerate()
        {
            if let (i, Some(t)) = t {
                out.push_str(match i {
                    0 => " ",
                    1 => " from ",
                    _ => " with ",
                });
                out.push_str(world.target_name(t));
            }
        }
        out
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("I beg your pardon?")]
    Empty,
    #[error("I don't know how to \"{0}\".")]
    UnknownVerb(String),
    #[error("What do you want to {0}?")]
    MissingObject(Verb),
    #[error("You can't see any {0} here.")]
    UnknownNoun(String),
    #[error("I only understood you as far as wanting to {0}.")]
    Trailing(Verb),
}

const ARTICLES: &[&str] = &["the", "a", "an", "some", "to", "at"];

fn synonym(word: &str) -> &str {
    match word {
        "fridge" => "refrigerator",
        other => other,
    }
}

fn tokens(text: &str) -> Vec<String> {
    text.split_whitespace()
        .map(|w| {
            w.trim_matches(|c: char| !c.is_alphanumeric() && c != '-')
                .to_lowercase()
        })
        .filter(|w| !w.is_empty())
        .collect()
}

fn noun_phrase(words: &[String]) -> String {
    let kept: Vec<&str> = words
        .iter()
        .map(String::as_str)
        .skip_while(|w| ARTICLES.contains(w))
        .map(synonym)
        .collect();
    kept.join(" ")
}

/// Splits `words` at the last occurrence of `sep`.
fn split_at_word<'a>(words: &'a [String], sep: &str) -> (&'a [String], Option<&'a [String]>) {
    match words.iter().rposition(|w| w == sep) {
        Some(i) => (&words[..i], Some(&words[i + 1..])),
        None => (words, None),
    }
}

/// Parses `text` against the entities the player can currently perceive.
pub fn parse(text: &str, state: &GameState) -> Result<Command, ParseError> {
    let words = tokens(text);
    let Some(first) = words.first() else {
        return Err(ParseError::Empty);
    };
    let rest = &words[1..];
    let two = words.get(1).map(String::as_str);
    let (verb, rest) = match (first.as_str(), two) {
        ("pick", Some("up")) => (Verb::Take, &words[2..]),
        ("put", Some("down")) => (Verb::Drop, &words[2..]),
        ("look", Some("at")) => (Verb::Examine, &words[2..]),
        ("go" | "walk" | "enter" | "move", _) => (Verb::Go, rest),
        ("open", _) => (Verb::Open, rest),
        ("take" | "get" | "grab", _) => (Verb::Take, rest),
        ("drop", _) => (Verb::Drop, rest),
        ("examine" | "x" | "inspect", _) => (Verb::Examine, rest),
        ("inventory" | "inv" | "i", _) => (Verb::Inventory, rest),
        ("look" | "l", _) => (Verb::Look, rest),
        ("peel", _) => (Verb::Peel, rest),
        ("cut" | "chop" | "slice" | "dice", _) => (Verb::Cut, rest),
        ("cook" | "fry" | "roast", _) => (Verb::Cook, rest),
        ("prepare" | "make", _) => (Verb::PrepareMeal, rest),
        (other, _) => return Err(ParseError::UnknownVerb(other.to_string())),
    };
    let world = state.world();
    match verb {
        Verb::Inventory | Verb::Look => {
            if rest.is_empty() {
                Ok(Command::bare(verb))
            } else {
                Err(ParseError::Trailing(verb))
            }
        }
        Verb::PrepareMeal => match noun_phrase(rest).as_str() {
            "meal" | "" => Ok(Command::bare(Verb::PrepareMeal)),
            _ => Err(ParseError::Trailing(verb)),
        },
        Verb::Cook if noun_phrase(rest) == "meal" => Ok(Command::bare(Verb::PrepareMeal)),
        Verb::Go => {
            let phrase = noun_phrase(rest);
            if phrase.is_empty() {
                return Err(ParseError::MissingObject(verb));
            }
            world
                .room_index(&phrase)
                .map(|r| Command::on(verb, Target::Room(r)))
                .ok_or(ParseError::UnknownNoun(phrase))
        }
        _ => {
            let sep = match verb {
                Verb::Take => Some("from"),
                v if v.is_preparation() => Some("with"),
                _ => None,
            };
            let (object_words, extra) = match sep {
                Some(s) => split_at_word(rest, s),
                None => (rest, None),
            };
            let object = noun_phrase(object_words);
            if object.is_empty() {
                return Err(ParseError::MissingObject(verb));
            }
            let mut cmd = Command::on(verb, resolve(&object, state)?);
            if let Some(extra) = extra {
                let phrase = noun_phrase(extra);
                if phrase.is_empty() {
                    return Err(ParseError::Trailing(verb));
                }
                let t = resolve(&phrase, state)?;
                if verb == Verb::Take {
                    cmd.source = Some(t);
                } else {
                    cmd.tool = Some(t);
                }
            }
            Ok(cmd)
        }
    }
}

/// Exact match among visible things, then a unique visible suffix match,
/// then an exact match anywhere in the world (so `step` can explain why the
/// thing is out of reach).
fn resolve(phrase: &str, state: &GameState) -> Result<Target, ParseError> {
    let world = state.world();
    let visible = state.visible_targets();
    if let Some(&t) = visible.iter().find(|&&t| world.target_name(t) == phrase) {
        return Ok(t);
    }
    let suffix = format!(" {phrase}");
    let mut hits = visible
        .iter()
        .filter(|&&t| world.target_name(t).ends_with(&suffix));
    if let (Some(&t), None) = (hits.next(), hits.next()) {
        return Ok(t);
    }
    world
        .lookup(phrase)
        .ok_or_else(|| ParseError::UnknownNoun(phrase.to_string()))
}
