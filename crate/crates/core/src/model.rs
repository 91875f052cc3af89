//! Rosters, players and the sport-tagged event vocabulary.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// The three sports with a rule table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sport {
    Basketball,
    Soccer,
    Hockey,
}

impl Sport {
    pub const ALL: [Sport; 3] = [Sport::Basketball, Sport::Soccer, Sport::Hockey];

    pub fn as_str(self) -> &'static str {
        match self {
            Sport::Basketball => "basketball",
            Sport::Soccer => "soccer",
            Sport::Hockey => "hockey",
        }
    }
}

impl fmt::Display for Sport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Sport {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "basketball" => Ok(Sport::Basketball),
            "soccer" => Ok(Sport::Soccer),
            "hockey" => Ok(Sport::Hockey),
            other => Err(format!("unknown sport `{other}`")),
        }
    }
}

/// Caller-supplied player identifier, e.g. a surname.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PlayerId(String);

impl PlayerId {
    pub fn new(id: impl Into<String>) -> Self {
        PlayerId(id.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for PlayerId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for PlayerId {
    fn from(s: &str) -> Self {
        PlayerId(s.to_owned())
    }
}

impl From<String> for PlayerId {
    fn from(s: String) -> Self {
        PlayerId(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Player {
    pub id: PlayerId,
    pub name: String,
    #[serde(default)]
    pub starter: bool,
}

impl Player {
    pub fn new(id: impl Into<PlayerId>, name: impl Into<String>, starter: bool) -> Self {
        Player {
            id: id.into(),
            name: name.into(),
            starter,
        }
    }
}

/// One team. Player order is significant: it fixes matrix row/column order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Roster {
    #[serde(rename = "name")]
    pub team_name: String,
    pub players: Vec<Player>,
}

impl Roster {
    pub fn new(team_name: impl Into<String>, players: Vec<Player>) -> Self {
        Roster {
            team_name: team_name.into(),
            players,
        }
    }

    /// Convenience constructor: every id doubles as its display name, nobody starts.
    pub fn from_ids<I, S>(team_name: impl Into<String>, ids: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let players = ids
            .into_iter()
            .map(|id| {
                let id = id.into();
                Player::new(id.clone(), id, false)
            })
            .collect();
        Roster::new(team_name, players)
    }

    pub fn len(&self) -> usize {
        self.players.len()
    }

    pub fn is_empty(&self) -> bool {
        self.players.is_empty()
    }

    pub fn contains(&self, id: &PlayerId) -> bool {
        self.players.iter().any(|p| &p.id == id)
    }
}

/// Optional free-form game information. `final_score` is `"<team 1>-<team 2>"`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub date: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub final_score: Option<String>,
}

impl Metadata {
    pub fn is_empty(&self) -> bool {
        self.date.is_none() && self.final_score.is_none()
    }

    /// Parses `final_score` as two team-ordered non-negative integers.
    pub fn parsed_score(&self) -> Option<Result<(u32, u32), String>> {
        self.final_score.as_deref().map(parse_score)
    }
}

fn parse_score(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = s
        .split_once('-')
        .ok_or_else(|| format!("final score `{s}` is not of the form `<a>-<b>`"))?;
    let a = a
        .trim()
        .parse()
        .map_err(|_| format!("final score `{s}`: `{}` is not a count", a.trim()))?;
    let b = b
        .trim()
        .parse()
        .map_err(|_| format!("final score `{s}`: `{}` is not a count", b.trim()))?;
    Ok((a, b))
}

/// One play occurrence. Field names follow the actor roles of each rule.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum Event {
    Pass {
        from: PlayerId,
        to: PlayerId,
    },
    Dispossess {
        winner: PlayerId,
        loser: PlayerId,
    },
    Intercept {
        winner: PlayerId,
        passer: PlayerId,
    },
    Touch {
        player: PlayerId,
    },
    UnforcedTurnover {
        player: PlayerId,
    },
    Stoppage,
    ContestedMiss {
        shooter: PlayerId,
        defender: PlayerId,
    },
    /// `points` is basketball-only (1..=4, absent means 1).
    Score {
        scorer: PlayerId,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        points: Option<u32>,
    },
    UncontestedMissRebounded {
        shooter: PlayerId,
        rebounder: PlayerId,
    },
    FoulWithFreeThrows {
        fouler: PlayerId,
        fouled: PlayerId,
        made: u32,
    },
    FoulNoFreeThrows {
        fouler: PlayerId,
        fouled: PlayerId,
    },
    UncontestedMissDead {
        shooter: PlayerId,
    },
    Save {
        shooter: PlayerId,
        keeper: PlayerId,
    },
    FoulDead {
        fouler: PlayerId,
        fouled: PlayerId,
    },
    FoulLeadingToGoal {
        fouler: PlayerId,
        fouled: PlayerId,
    },
    Offside {
        passer: PlayerId,
        offside_player: PlayerId,
    },
    PenaltyDrawnNoPpg {
        drawer: PlayerId,
        penalized: PlayerId,
    },
    PenaltyDrawnPpg {
        drawer: PlayerId,
        penalized: PlayerId,
    },
    Icing {
        icer: PlayerId,
        toucher: PlayerId,
    },
}

/// Payload-free discriminant of [`Event`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EventKind {
    Pass,
    Dispossess,
    Intercept,
    Touch,
    UnforcedTurnover,
    Stoppage,
    ContestedMiss,
    Score,
    UncontestedMissRebounded,
    FoulWithFreeThrows,
    FoulNoFreeThrows,
    UncontestedMissDead,
    Save,
    FoulDead,
    FoulLeadingToGoal,
    Offside,
    PenaltyDrawnNoPpg,
    PenaltyDrawnPpg,
    Icing,
}

/// Which rosters the two actors of a two-player event must come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pairing {
    SameTeamDistinct,
    OppositeTeams,
    /// Either team, but two different players.
    AnyDistinct,
}

impl EventKind {
    pub const ALL: [EventKind; 19] = [
        EventKind::Pass,
        EventKind::Dispossess,
        EventKind::Intercept,
        EventKind::Touch,
        EventKind::UnforcedTurnover,
        EventKind::Stoppage,
        EventKind::ContestedMiss,
        EventKind::Score,
        EventKind::UncontestedMissRebounded,
        EventKind::FoulWithFreeThrows,
        EventKind::FoulNoFreeThrows,
        EventKind::UncontestedMissDead,
        EventKind::Save,
        EventKind::FoulDead,
        EventKind::FoulLeadingToGoal,
        EventKind::Offside,
        EventKind::PenaltyDrawnNoPpg,
        EventKind::PenaltyDrawnPpg,
        EventKind::Icing,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EventKind::Pass => "pass",
            EventKind::Dispossess => "dispossess",
            EventKind::Intercept => "intercept",
            EventKind::Touch => "touch",
            EventKind::UnforcedTurnover => "unforced_turnover",
            EventKind::Stoppage => "stoppage",
            EventKind::ContestedMiss => "contested_miss",
            EventKind::Score => "score",
            EventKind::UncontestedMissRebounded => "uncontested_miss_rebounded",
            EventKind::FoulWithFreeThrows => "foul_with_free_throws",
            EventKind::FoulNoFreeThrows => "foul_no_free_throws",
            EventKind::UncontestedMissDead => "uncontested_miss_dead",
            EventKind::Save => "save",
            EventKind::FoulDead => "foul_dead",
            EventKind::FoulLeadingToGoal => "foul_leading_to_goal",
            EventKind::Offside => "offside",
            EventKind::PenaltyDrawnNoPpg => "penalty_drawn_no_ppg",
            EventKind::PenaltyDrawnPpg => "penalty_drawn_ppg",
            EventKind::Icing => "icing",
        }
    }

    pub fn legal_in(self, sport: Sport) -> bool {
        use EventKind::*;
        match self {
            Pass | Dispossess | Intercept | Touch | UnforcedTurnover | Stoppage | ContestedMiss
            | Score => true,
            UncontestedMissRebounded | FoulWithFreeThrows | FoulNoFreeThrows => {
                sport == Sport::Basketball
            }
            UncontestedMissDead | Save | Offside => sport != Sport::Basketball,
            FoulDead | FoulLeadingToGoal => sport == Sport::Soccer,
            PenaltyDrawnNoPpg | PenaltyDrawnPpg | Icing => sport == Sport::Hockey,
        }
    }

    /// Variants legal under `sport`, in declaration order.
    pub fn legal_kinds(sport: Sport) -> Vec<EventKind> {
        EventKind::ALL
            .iter()
            .copied()
            .filter(|k| k.legal_in(sport))
            .collect()
    }

    /// Team constraint between the two actors; `None` for zero- or one-actor events.
    pub fn pairing(self) -> Option<Pairing> {
        use EventKind::*;
        match self {
            Touch | UnforcedTurnover | Stoppage | Score | UncontestedMissDead => None,
            Pass | Offside => Some(Pairing::SameTeamDistinct),
            UncontestedMissRebounded => Some(Pairing::AnyDistinct),
            Dispossess | Intercept | ContestedMiss | FoulWithFreeThrows | FoulNoFreeThrows
            | Save | FoulDead | FoulLeadingToGoal | PenaltyDrawnNoPpg | PenaltyDrawnPpg
            | Icing => Some(Pairing::OppositeTeams),
        }
    }
}

impl fmt::Display for EventKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Event {
    pub fn kind(&self) -> EventKind {
        match self {
            Event::Pass { .. } => EventKind::Pass,
            Event::Dispossess { .. } => EventKind::Dispossess,
            Event::Intercept { .. } => EventKind::Intercept,
            Event::Touch { .. } => EventKind::Touch,
            Event::UnforcedTurnover { .. } => EventKind::UnforcedTurnover,
            Event::Stoppage => EventKind::Stoppage,
            Event::ContestedMiss { .. } => EventKind::ContestedMiss,
            Event::Score { .. } => EventKind::Score,
            Event::UncontestedMissRebounded { .. } => EventKind::UncontestedMissRebounded,
            Event::FoulWithFreeThrows { .. } => EventKind::FoulWithFreeThrows,
            Event::FoulNoFreeThrows { .. } => EventKind::FoulNoFreeThrows,
            Event::UncontestedMissDead { .. } => EventKind::UncontestedMissDead,
            Event::Save { .. } => EventKind::Save,
            Event::FoulDead { .. } => EventKind::FoulDead,
            Event::FoulLeadingToGoal { .. } => EventKind::FoulLeadingToGoal,
            Event::Offside { .. } => EventKind::Offside,
            Event::PenaltyDrawnNoPpg { .. } => EventKind::PenaltyDrawnNoPpg,
            Event::PenaltyDrawnPpg { .. } => EventKind::PenaltyDrawnPpg,
            Event::Icing { .. } => EventKind::Icing,
        }
    }

    /// Referenced players in role order (first actor, second actor).
    pub fn actors(&self) -> Vec<&PlayerId> {
        match self {
            Event::Stoppage => vec![],
            Event::Touch { player } | Event::UnforcedTurnover { player } => vec![player],
            Event::Score { scorer, .. } => vec![scorer],
            Event::UncontestedMissDead { shooter } => vec![shooter],
            Event::Pass { from, to } => vec![from, to],
            Event::Dispossess { winner, loser } => vec![winner, loser],
            Event::Intercept { winner, passer } => vec![winner, passer],
            Event::ContestedMiss { shooter, defender } => vec![shooter, defender],
            Event::UncontestedMissRebounded { shooter, rebounder } => vec![shooter, rebounder],
            Event::FoulWithFreeThrows { fouler, fouled, .. }
            | Event::FoulNoFreeThrows { fouler, fouled }
            | Event::FoulDead { fouler, fouled }
            | Event::FoulLeadingToGoal { fouler, fouled } => vec![fouler, fouled],
            Event::Save { shooter, keeper } => vec![shooter, keeper],
            Event::Offside {
                passer,
                offside_player,
            } => vec![passer, offside_player],
            Event::PenaltyDrawnNoPpg { drawer, penalized }
            | Event::PenaltyDrawnPpg { drawer, penalized } => vec![drawer, penalized],
            Event::Icing { icer, toucher } => vec![icer, toucher],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameLog {
    pub sport: Sport,
    pub teams: [Roster; 2],
    pub events: Vec<Event>,
    pub metadata: Metadata,
}

impl GameLog {
    pub fn new(sport: Sport, home: Roster, away: Roster, events: Vec<Event>) -> Self {
        GameLog {
            sport,
            teams: [home, away],
            events,
            metadata: Metadata::default(),
        }
    }

    pub fn n_players(&self) -> usize {
        self.teams[0].len() + self.teams[1].len()
    }

    /// Team index (0 or 1) of a player, if rostered.
    pub fn team_of(&self, id: &PlayerId) -> Option<usize> {
        self.teams.iter().position(|t| t.contains(id))
    }

    /// Players in node order: team 1 then team 2.
    pub fn players(&self) -> impl Iterator<Item = (usize, &Player)> {
        self.teams
            .iter()
            .enumerate()
            .flat_map(|(t, r)| r.players.iter().map(move |p| (t, p)))
    }
}

/// A single broken invariant. `event` is `None` for roster-level problems.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub event: Option<usize>,
    pub reason: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.event {
            Some(i) => write!(f, "event {i}: {}", self.reason),
            None => write!(f, "rosters: {}", self.reason),
        }
    }
}

/// Collects every violated invariant; an empty list means the log is valid.
pub fn validate_game(log: &GameLog) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut roster_issue = |reason: String| {
        out.push(Violation {
            event: None,
            reason,
        })
    };

    let mut team_of: HashMap<&PlayerId, usize> = HashMap::new();
    for (t, roster) in log.teams.iter().enumerate() {
        if roster.team_name.trim().is_empty() {
            roster_issue(format!("team {} has an empty name", t + 1));
        }
        if roster.is_empty() {
            roster_issue(format!("team `{}` has no players", roster.team_name));
        }
        for p in &roster.players {
            if p.id.as_str().trim().is_empty() {
                roster_issue(format!("team `{}` has an empty player id", roster.team_name));
                continue;
            }
            match team_of.get(&p.id) {
                Some(&prev) if prev == t => roster_issue(format!(
                    "player `{}` listed twice on `{}`",
                    p.id, roster.team_name
                )),
                Some(_) => roster_issue(format!("player `{}` appears on both rosters", p.id)),
                None => {
                    team_of.insert(&p.id, t);
                }
            }
        }
    }
    if let Some(Err(reason)) = log.metadata.parsed_score() {
        roster_issue(reason);
    }

    for (i, event) in log.events.iter().enumerate() {
        let mut issue = |reason: String| {
            out.push(Violation {
                event: Some(i),
                reason,
            })
        };
        let kind = event.kind();
        if !kind.legal_in(log.sport) {
            issue(format!("`{kind}` is not a {} event", log.sport));
        }

        let actors = event.actors();
        let mut teams = Vec::with_capacity(actors.len());
        for id in &actors {
            match team_of.get(id) {
                Some(&t) => teams.push(t),
                None => issue(format!("unknown player `{id}`")),
            }
        }

        match event {
            Event::Score { points, .. } => match (log.sport, points) {
                (Sport::Basketball, Some(p)) if !(1..=4).contains(p) => {
                    issue(format!("score worth {p} points, expected 1 to 4"))
                }
                (Sport::Soccer | Sport::Hockey, Some(p)) if *p != 1 => {
                    issue(format!("{} scores carry no point value (got {p})", log.sport))
                }
                _ => {}
            },
            Event::FoulWithFreeThrows { made: 0, .. } => {
                issue("foul with free throws must have at least one made".into())
            }
            _ => {}
        }

        if teams.len() == 2 && actors.len() == 2 {
            let same = teams[0] == teams[1];
            match kind.pairing() {
                Some(Pairing::SameTeamDistinct) => {
                    if !same {
                        let what = if kind == EventKind::Pass { "pass" } else { "offside pass" };
                        issue(format!("{what} endpoints on opposite teams"));
                    } else if actors[0] == actors[1] {
                        issue(format!("`{kind}` from `{}` to itself", actors[0]));
                    }
                }
                Some(Pairing::OppositeTeams) if same => {
                    issue(format!("`{kind}` endpoints on the same team"))
                }
                Some(Pairing::AnyDistinct) if actors[0] == actors[1] => {
                    issue(format!("`{kind}` by `{}` on both ends", actors[0]))
                }
                _ => {}
            }
        }
    }
    out
}
