//! Compact arrow notation for basketball play sequences.
//!
//! ```text
//! #! comment
//! #team Reds A B C
//! #team Blues D E F
//! #starters A D
//! #score 3-2
//! A -> B -> A -> F -> G
//! D -> F -> 0 -> B -> C -> A -> G:2
//! ```
//!
//! Adjacent player tokens on the same team are a pass; across teams the first
//! player lost the ball to the second. `G` scores one point for the player
//! before it (`G:k` scores `k`), and `0` is a dead ball charged to the player
//! before it as an unforced turnover. After `G`, `0`, or a line break the next
//! token starts a fresh possession.

use std::collections::HashMap;

use thiserror::Error;

use crate::model::{Event, GameLog, Metadata, PlayerId, Roster, Sport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("unknown token `{0}`")]
    UnknownToken(String),
    #[error("undeclared player `{0}`")]
    UndeclaredPlayer(String),
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("invalid sequence: {0}")]
    InvalidSequence(String),
}

fn err(line: usize, column: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, column, kind }
}

enum Token<'a> {
    Player(&'a str),
    Goal(u32),
    Dead,
}

fn is_identifier(tok: &str) -> bool {
    !tok.is_empty()
        && tok
            .chars()
            .all(|c| c.is_alphanumeric() || matches!(c, '_' | '.' | '\'' | '-'))
        && !tok.contains("->")
}

fn is_reserved(tok: &str) -> bool {
    tok == "G" || tok == "0" || tok.starts_with("G:")
}

/// Splits a sequence line on `->` / `→`, returning `(column, token)` pairs
/// with 1-based character columns pointing at the token's first character.
fn split_arrows(line: &str) -> Vec<(usize, &str)> {
    fn push<'a>(line: &'a str, from: usize, to: usize, out: &mut Vec<(usize, &'a str)>) {
        let raw = &line[from..to];
        let lead = raw.len() - raw.trim_start().len();
        let col = line[..from + lead].chars().count() + 1;
        out.push((col, raw.trim()));
    }
    let mut out = Vec::new();
    let mut start = 0;
    let mut chars = line.char_indices().peekable();
    while let Some((i, c)) = chars.next() {
        let arrow_len = match c {
            '→' => Some(c.len_utf8()),
            '-' if matches!(chars.peek(), Some((_, '>'))) => {
                chars.next();
                Some(2)
            }
            _ => None,
        };
        if let Some(len) = arrow_len {
            push(line, start, i, &mut out);
            start = i + len;
        }
    }
    push(line, start, line.len(), &mut out);
    out
}

/// Parses a playscript document into a basketball [`GameLog`].
pub fn parse_playscript(text: &str) -> Result<GameLog, ParseError> {
    let mut teams: Vec<(usize, Roster)> = Vec::new();
    let mut starters: Vec<(usize, usize, String)> = Vec::new();
    let mut metadata = Metadata::default();
    let mut sequences: Vec<(usize, &str)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim_end();
        let trimmed = line.trim_start();
        let indent = line.chars().count() - trimmed.chars().count();
        if trimmed.is_empty() || trimmed.starts_with("#!") {
            continue;
        }
        let Some(header) = trimmed.strip_prefix('#') else {
            sequences.push((line_no, line));
            continue;
        };
        let header_err = |msg: String| err(line_no, indent + 1, ParseErrorKind::MalformedHeader(msg));
        let (keyword, rest) = header.split_once(char::is_whitespace).unwrap_or((header, ""));
        let words: Vec<&str> = rest.split_whitespace().collect();
        match keyword {
            "team" => {
                if teams.len() == 2 {
                    return Err(header_err("more than two #team headers".into()));
                }
                let Some((name, ids)) = words.split_first() else {
                    return Err(header_err("#team needs a name and at least one player".into()));
                };
                if ids.is_empty() {
                    return Err(header_err(format!("team `{name}` lists no players")));
                }
                for id in ids {
                    if is_reserved(id) || !is_identifier(id) {
                        return Err(header_err(format!("`{id}` cannot be a player id")));
                    }
                    let clash = teams.iter().any(|(_, r)| r.contains(&PlayerId::from(*id)));
                    let repeated = ids.iter().filter(|x| *x == id).count() > 1;
                    if clash || repeated {
                        return Err(header_err(format!("player `{id}` declared twice")));
                    }
                }
                teams.push((line_no, Roster::from_ids(*name, ids.iter().copied())));
            }
            "starters" => {
                if words.is_empty() {
                    return Err(header_err("#starters lists no players".into()));
                }
                starters.extend(words.iter().map(|w| (line_no, indent + 1, w.to_string())));
            }
            "date" => {
                if rest.trim().is_empty() {
                    return Err(header_err("#date is empty".into()));
                }
                metadata.date = Some(rest.trim().to_string());
            }
            "score" => {
                let value = rest.trim().to_string();
                let probe = Metadata {
                    date: None,
                    final_score: Some(value.clone()),
                };
                if let Some(Err(reason)) = probe.parsed_score() {
                    return Err(header_err(reason));
                }
                metadata.final_score = Some(value);
            }
            other => return Err(header_err(format!("unknown header `#{other}`"))),
        }
    }

    if teams.len() != 2 {
        let line = teams.last().map_or(1, |(l, _)| *l);
        return Err(err(
            line,
            1,
            ParseErrorKind::MalformedHeader(format!(
                "expected exactly two #team headers, found {}",
                teams.len()
            )),
        ));
    }
    let mut rosters: [Roster; 2] = [teams[0].1.clone(), teams[1].1.clone()];
    let mut team_of: HashMap<&str, usize> = HashMap::new();
    for (t, (_, r)) in teams.iter().enumerate() {
        for p in &r.players {
            team_of.insert(p.id.as_str(), t);
        }
    }

    for (line, col, id) in &starters {
        let Some(&t) = team_of.get(id.as_str()) else {
            return Err(err(*line, *col, ParseErrorKind::UndeclaredPlayer(id.clone())));
        };
        let p = rosters[t]
            .players
            .iter_mut()
            .find(|p| p.id.as_str() == id)
            .expect("declared player is on its roster");
        p.starter = true;
    }

    let mut events = Vec::new();
    for (line_no, line) in sequences {
        let mut holder: Option<&str> = None;
        for (col, tok) in split_arrows(line) {
            let at = |kind| err(line_no, col, kind);
            let token = match tok {
                "G" => Token::Goal(1),
                "0" => Token::Dead,
                _ if tok.starts_with("G:") => match tok[2..].parse::<u32>() {
                    Ok(k @ 1..=4) => Token::Goal(k),
                    Ok(k) => {
                        return Err(at(ParseErrorKind::InvalidSequence(format!(
                            "score worth {k} points, expected 1 to 4"
                        ))))
                    }
                    Err(_) => return Err(at(ParseErrorKind::UnknownToken(tok.into()))),
                },
                _ if team_of.contains_key(tok) => Token::Player(tok),
                _ if is_identifier(tok) => {
                    return Err(at(ParseErrorKind::UndeclaredPlayer(tok.into())))
                }
                _ => return Err(at(ParseErrorKind::UnknownToken(tok.into()))),
            };
            match (holder, token) {
                (None, Token::Player(p)) => holder = Some(p),
                (Some(from), Token::Player(to)) => {
                    if from == to {
                        return Err(at(ParseErrorKind::InvalidSequence(format!(
                            "`{to}` cannot move the ball to itself"
                        ))));
                    }
                    events.push(if team_of[from] == team_of[to] {
                        Event::Pass {
                            from: from.into(),
                            to: to.into(),
                        }
                    } else {
                        Event::Dispossess {
                            winner: to.into(),
                            loser: from.into(),
                        }
                    });
                    holder = Some(to);
                }
                (Some(scorer), Token::Goal(points)) => {
                    events.push(Event::Score {
                        scorer: scorer.into(),
                        points: Some(points),
                    });
                    holder = None;
                }
                (None, Token::Goal(_)) => {
                    return Err(at(ParseErrorKind::InvalidSequence(
                        "score with no player in possession".into(),
                    )))
                }
                (Some(p), Token::Dead) => {
                    events.push(Event::UnforcedTurnover { player: p.into() });
                    holder = None;
                }
                (None, Token::Dead) => {}
            }
        }
    }

    let [home, away] = rosters;
    let mut log = GameLog::new(Sport::Basketball, home, away, events);
    log.metadata = metadata;
    Ok(log)
}
