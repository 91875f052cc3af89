//! Seeded random games, used to drive property sweeps and `ipm synth`.

use rand::distributions::{Distribution, WeightedIndex};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::model::{Event, EventKind, GameLog, Metadata, Pairing, Player, PlayerId, Roster, Sport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SynthError {
    #[error("a game needs at least 2 players, got {0}")]
    TooFewPlayers(usize),
    #[error("no event kind with positive weight is possible for {0} with these rosters")]
    NoFeasibleEvents(Sport),
}

/// Relative weights over event kinds. Kinds illegal for the sport are ignored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EventMix {
    weights: Vec<(EventKind, u32)>,
}

impl EventMix {
    /// A rough possession-heavy mix: mostly passes, some scoring and turnovers.
    pub fn default_for(sport: Sport) -> Self {
        let weights = EventKind::legal_kinds(sport)
            .into_iter()
            .map(|k| {
                let w = match k {
                    EventKind::Pass => 40,
                    EventKind::Score => 10,
                    EventKind::Dispossess | EventKind::ContestedMiss => 6,
                    EventKind::Intercept | EventKind::Save => 5,
                    EventKind::UncontestedMissRebounded => 5,
                    EventKind::FoulWithFreeThrows | EventKind::FoulNoFreeThrows => 3,
                    EventKind::UnforcedTurnover | EventKind::UncontestedMissDead => 3,
                    _ => 2,
                };
                (k, w)
            })
            .collect();
        EventMix { weights }
    }

    pub fn uniform(sport: Sport) -> Self {
        EventMix {
            weights: EventKind::legal_kinds(sport).into_iter().map(|k| (k, 1)).collect(),
        }
    }

    pub fn with_weight(mut self, kind: EventKind, weight: u32) -> Self {
        match self.weights.iter_mut().find(|(k, _)| *k == kind) {
            Some(entry) => entry.1 = weight,
            None => self.weights.push((kind, weight)),
        }
        self
    }

    pub fn weight(&self, kind: EventKind) -> u32 {
        self.weights
            .iter()
            .find(|(k, _)| *k == kind)
            .map_or(0, |(_, w)| *w)
    }
}

/// Deterministic random game with the sport's default event mix.
pub fn generate_random_game(
    sport: Sport,
    n_players: usize,
    n_events: usize,
    seed: u64,
) -> Result<GameLog, SynthError> {
    generate_random_game_with(sport, n_players, n_events, seed, &EventMix::default_for(sport))
}

pub fn generate_random_game_with(
    sport: Sport,
    n_players: usize,
    n_events: usize,
    seed: u64,
    mix: &EventMix,
) -> Result<GameLog, SynthError> {
    if n_players < 2 {
        return Err(SynthError::TooFewPlayers(n_players));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let home = synth_roster("Home", 'H', n_players.div_ceil(2));
    let away = synth_roster("Away", 'V', n_players / 2);
    let teams = [home, away];

    let feasible: Vec<(EventKind, u32)> = EventKind::legal_kinds(sport)
        .into_iter()
        .filter(|&k| {
            k.pairing() != Some(Pairing::SameTeamDistinct) || teams.iter().any(|t| t.len() >= 2)
        })
        .map(|k| (k, mix.weight(k)))
        .filter(|&(_, w)| w > 0)
        .collect();
    if feasible.is_empty() && n_events > 0 {
        return Err(SynthError::NoFeasibleEvents(sport));
    }

    let mut events = Vec::with_capacity(n_events);
    let mut score = [0u32; 2];
    if n_events > 0 {
        let dist = WeightedIndex::new(feasible.iter().map(|(_, w)| *w))
            .expect("weights are positive");
        for _ in 0..n_events {
            let kind = feasible[dist.sample(&mut rng)].0;
            let event = random_event(sport, kind, &teams, &mut rng);
            match &event {
                Event::Score { scorer, points } => {
                    score[team_index(&teams, scorer)] += points.unwrap_or(1);
                }
                Event::FoulWithFreeThrows { fouled, made, .. } => {
                    score[team_index(&teams, fouled)] += made;
                }
                _ => {}
            }
            events.push(event);
        }
    }

    let [home, away] = teams;
    let mut log = GameLog::new(sport, home, away, events);
    log.metadata = Metadata {
        date: None,
        final_score: Some(format!("{}-{}", score[0], score[1])),
    };
    Ok(log)
}

fn synth_roster(name: &str, prefix: char, size: usize) -> Roster {
    let starters = size.div_ceil(2);
    let players = (1..=size)
        .map(|i| {
            let id = format!("{prefix}{i:02}");
            Player::new(id.clone(), format!("{name} {i}"), i <= starters)
        })
        .collect();
    Roster::new(name, players)
}

fn team_index(teams: &[Roster; 2], id: &PlayerId) -> usize {
    usize::from(!teams[0].contains(id))
}

fn pick(roster: &Roster, rng: &mut impl Rng) -> PlayerId {
    roster.players.choose(rng).expect("rosters are non-empty").id.clone()
}

fn random_event(sport: Sport, kind: EventKind, teams: &[Roster; 2], rng: &mut impl Rng) -> Event {
    let t = rng.gen_range(0..2usize);
    let (a, b) = match kind.pairing() {
        None => (pick(&teams[t], rng), None),
        Some(Pairing::OppositeTeams) => (pick(&teams[t], rng), Some(pick(&teams[1 - t], rng))),
        Some(Pairing::AnyDistinct) => {
            let everyone: Vec<&PlayerId> = teams.iter().flat_map(|r| r.players.iter().map(|p| &p.id)).collect();
            let mut two = everyone.choose_multiple(rng, 2);
            let a = (*two.next().expect("at least two players")).clone();
            let b = (*two.next().expect("at least two players")).clone();
            (a, Some(b))
        }
        Some(Pairing::SameTeamDistinct) => {
            let t = if teams[t].len() >= 2 { t } else { 1 - t };
            let mut two = teams[t].players.choose_multiple(rng, 2);
            let a = two.next().expect("team has two players").id.clone();
            let b = two.next().expect("team has two players").id.clone();
            (a, Some(b))
        }
    };
    let second = || b.clone().expect("two-actor event");
    match kind {
        EventKind::Pass => Event::Pass { from: a, to: second() },
        EventKind::Dispossess => Event::Dispossess { winner: a, loser: second() },
        EventKind::Intercept => Event::Intercept { winner: a, passer: second() },
        EventKind::Touch => Event::Touch { player: a },
        EventKind::UnforcedTurnover => Event::UnforcedTurnover { player: a },
        EventKind::Stoppage => Event::Stoppage,
        EventKind::ContestedMiss => Event::ContestedMiss { shooter: a, defender: second() },
        EventKind::Score => {
            let points = (sport == Sport::Basketball).then(|| {
                // Roughly: free-throw-sized, two, three, four-point plays.
                match rng.gen_range(0..100) {
                    0..=14 => 1,
                    15..=74 => 2,
                    75..=97 => 3,
                    _ => 4,
                }
            });
            Event::Score { scorer: a, points }
        }
        EventKind::UncontestedMissRebounded => Event::UncontestedMissRebounded {
            shooter: a,
            rebounder: second(),
        },
        EventKind::FoulWithFreeThrows => Event::FoulWithFreeThrows {
            fouler: a,
            fouled: second(),
            made: rng.gen_range(1..=3),
        },
        EventKind::FoulNoFreeThrows => Event::FoulNoFreeThrows { fouler: a, fouled: second() },
        EventKind::UncontestedMissDead => Event::UncontestedMissDead { shooter: a },
        EventKind::Save => Event::Save { shooter: a, keeper: second() },
        EventKind::FoulDead => Event::FoulDead { fouler: a, fouled: second() },
        EventKind::FoulLeadingToGoal => Event::FoulLeadingToGoal { fouler: a, fouled: second() },
        EventKind::Offside => Event::Offside { passer: a, offside_player: second() },
        EventKind::PenaltyDrawnNoPpg => Event::PenaltyDrawnNoPpg { drawer: a, penalized: second() },
        EventKind::PenaltyDrawnPpg => Event::PenaltyDrawnPpg { drawer: a, penalized: second() },
        EventKind::Icing => Event::Icing { icer: a, toucher: second() },
    }
}
