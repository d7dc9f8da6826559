//! Feedback templates. Every message the engine prints comes from here.

use std::fmt;

use super::parse::{ParseError, Verb};

pub(crate) fn with_article(name: &str) -> String {
    match name.chars().next() {
        Some('a' | 'e' | 'i' | 'o' | 'u') => format!("an {name}"),
        _ => format!("a {name}"),
    }
}

/// `a`, `a and b`, `a, b and c`.
pub(crate) fn join(items: &[String]) -> String {
    match items {
        [] => String::new(),
        [one] => one.clone(),
        [init @ .., last] => format!("{} and {last}", init.join(", ")),
    }
}

pub(crate) fn past_tense(verb: Verb) -> &'static str {
    match verb {
        Verb::Peel => "peeled",
        Verb::Cut => "cut",
        Verb::Cook => "cooked",
        Verb::Open => "opened",
        Verb::Take => "taken",
        _ => "done",
    }
}

/// Renders a quest step as an instruction, `peel the carrot`.
pub(crate) fn instruction(verb: &str, object: &str) -> String {
    if verb == crate::assembly::GOAL_VERB {
        "prepare the meal".to_string()
    } else {
        format!("{verb} the {object}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feedback {
    Parse(ParseError),
    GameOver,
    NotVisible(String),
    NotOpenable(String),
    AlreadyOpen(String),
    Opened {
        name: String,
        contents: Option<Vec<String>>,
    },
    Closed(String),
    NotPortable(String),
    AlreadyCarried(String),
    NotIn {
        item: String,
        container: String,
    },
    Taken(String),
    NotCarried(String),
    Dropped(String),
    AlreadyHere(String),
    NoExit(String),
    DoorClosed(String),
    Description(String),
    Inventory(Vec<String>),
    Prohibited {
        verb: Verb,
        item: String,
    },
    NotNeeded {
        verb: Verb,
        item: String,
    },
    AlreadyDone {
        verb: Verb,
        item: String,
    },
    NeedTool {
        verb: Verb,
        item: String,
        tool: String,
    },
    WrongTool {
        verb: Verb,
        tool: String,
    },
    NotHolding(String),
    NotReady {
        verb: Verb,
        item: String,
        pending: String,
    },
    Prepared {
        verb: Verb,
        item: String,
    },
    NotInKitchen,
    MealNotReady(String),
    MealDone {
        score: u32,
        max: u32,
    },
}

impl fmt::Display for Feedback {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Feedback::*;
        match self {
            Parse(e) => write!(f, "{e}"),
            GameOver => f.write_str("The game is over. Start a new one to keep cooking."),
            NotVisible(n) => write!(f, "You can't see any {n} here."),
            NotOpenable(n) => write!(f, "You can't open the {n}."),
            AlreadyOpen(n) => write!(f, "The {n} is already open."),
            Opened { name, contents } => {
                write!(f, "You open the {name}.")?;
                match contents.as_deref() {
                    None => Ok(()),
                    Some([]) => f.write_str(" It is empty."),
                    Some(items) => {
                        let items: Vec<String> = items.iter().map(|i| with_article(i)).collect();
                        write!(f, " Inside you see {}.", join(&items))
                    }
                }
            }
            Closed(n) => write!(f, "The {n} is closed."),
            NotPortable(n) => write!(f, "You can't carry the {n}."),
            AlreadyCarried(n) => write!(f, "You already have the {n}."),
            NotIn { item, container } => write!(f, "The {item} is not in the {container}."),
            Taken(n) => write!(f, "You take the {n}."),
            NotCarried(n) => write!(f, "You are not carrying the {n}."),
            Dropped(n) => write!(f, "You drop the {n}."),
            AlreadyHere(r) => write!(f, "You are already in the {r}."),
            NoExit(r) => write!(f, "You can't get to the {r} from here."),
            DoorClosed(d) => write!(f, "The {d} is closed."),
            Description(text) => f.write_str(text),
            Inventory(items) if items.is_empty() => f.write_str("You are empty-handed."),
            Inventory(items) => {
                let items: Vec<String> = items.iter().map(|i| with_article(i)).collect();
                write!(f, "You are carrying {}.", join(&items))
            }
            Prohibited { verb, item } => write!(f, "You can't {verb} the {item}."),
            NotNeeded { verb, item } => {
                write!(f, "The recipe doesn't ask you to {verb} the {item}.")
            }
            AlreadyDone { verb, item } => write!(f, "The {item} is already {}.", past_tense(*verb)),
            NeedTool { verb, item, tool } => {
                write!(f, "You need {} to {verb} the {item}.", with_article(tool))
            }
            WrongTool { verb, tool } => write!(f, "You can't {verb} anything with the {tool}."),
            NotHolding(n) => write!(f, "You need to be holding the {n} first."),
            NotReady { verb, item, pending } => {
                write!(f, "Before you {verb} the {item}, you need to {pending}.")
            }
            Prepared { verb, item } => write!(f, "You {verb} the {item}."),
            NotInKitchen => f.write_str("The meal has to be prepared in the kitchen."),
            MealNotReady(pending) => {
                write!(f, "The meal isn't ready yet. You still need to {pending}.")
            }
            MealDone { score, max } => write!(
                f,
                "You prepare the meal. It smells wonderful!\n\n*** The End ***\nYou scored {score} out of a possible {max}."
            ),
        }
    }
}
