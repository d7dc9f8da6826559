//! Plain-text play transcripts: optional intro, then `> command` lines each
//! followed by the engine's feedback and a blank line.

use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Turn {
    pub command: String,
    pub feedback: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Transcript {
    pub intro: Option<String>,
    pub turns: Vec<Turn>,
}

impl Transcript {
    pub fn commands(&self) -> impl Iterator<Item = &str> {
        self.turns.iter().map(|t| t.command.as_str())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TranscriptError {
    #[error("line {line}: command line has no command")]
    EmptyCommand { line: usize },
    #[error("line {line}: command lines start with \"> \"")]
    BadPrompt { line: usize },
}

pub fn format_transcript(t: &Transcript) -> String {
    let mut out = String::new();
    if let Some(intro) = &t.intro {
        out.push_str(intro.trim_end_matches('\n'));
        out.push_str("\n\n");
    }
    for turn in &t.turns {
        out.push_str("> ");
        out.push_str(&turn.command);
        out.push('\n');
        out.push_str(turn.feedback.trim_end_matches('\n'));
        out.push_str("\n\n");
    }
    out
}

pub fn parse_transcript(text: &str) -> Result<Transcript, TranscriptError> {
    let mut intro = Vec::new();
    let mut turns: Vec<(String, Vec<&str>)> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if let Some(rest) = line.strip_prefix('>') {
            let Some(cmd) = rest.strip_prefix(' ') else {
                return Err(TranscriptError::BadPrompt { line: i + 1 });
            };
            if cmd.trim().is_empty() {
                return Err(TranscriptError::EmptyCommand { line: i + 1 });
            }
            turns.push((cmd.to_string(), Vec::new()));
        } else if let Some((_, body)) = turns.last_mut() {
            body.push(line);
        } else {
            intro.push(line);
        }
    }
    let block = |lines: &[&str]| lines.join("\n").trim_end_matches('\n').to_string();
    let intro = block(&intro);
    Ok(Transcript {
        intro: (!intro.is_empty()).then_some(intro),
        turns: turns
            .into_iter()
            .map(|(command, body)| Turn {
                command,
                feedback: block(&body),
            })
            .collect(),
    })
}
