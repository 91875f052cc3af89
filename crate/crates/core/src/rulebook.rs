//! Event → arc rules for basketball, soccer and hockey.
//!
//! Each rule is one row of [`RULES`]: the event kind, the sports it applies
//! to, and at most one arc template. Templates refer to the event's actors by
//! position in [`Event::actors`], so a row reads like the rule it encodes:
//! `Pass` has actors `[from, to]` and the arc `to -> from`.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::model::{Event, EventKind, PlayerId, Sport};

/// Endpoint of an arc in the play digraph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NodeRef {
    Player(PlayerId),
    Goal,
}

impl fmt::Display for NodeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NodeRef::Player(p) => write!(f, "{p}"),
            NodeRef::Goal => f.write_str("GOAL"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Arc {
    pub from: NodeRef,
    pub to: NodeRef,
    pub count: u32,
}

/// Arcs contributed by one event. Empty for dead-ball events.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ArcDelta {
    pub arcs: Vec<Arc>,
}

impl ArcDelta {
    pub fn empty() -> Self {
        ArcDelta::default()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    /// Total number of arcs, counting multiplicity.
    pub fn total(&self) -> u64 {
        self.arcs.iter().map(|a| u64::from(a.count)).sum()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RuleError {
    #[error("`{kind}` has no rule for {sport}")]
    SportMismatch { sport: Sport, kind: EventKind },
    #[error("`{kind}` produced a zero arc count")]
    ZeroCount { kind: EventKind },
}

#[derive(Debug, Clone, Copy)]
enum End {
    Actor(usize),
    Goal,
}

#[derive(Debug, Clone, Copy)]
enum Multiplicity {
    One,
    /// Basketball score value, 1 when absent.
    Points,
    /// Free throws made.
    Made,
}

#[derive(Debug, Clone, Copy)]
struct Rule {
    kind: EventKind,
    sports: &'static [Sport],
    arc: Option<(End, End, Multiplicity)>,
}

const ALL: &[Sport] = &[Sport::Basketball, Sport::Soccer, Sport::Hockey];
const BASKETBALL: &[Sport] = &[Sport::Basketball];
const SOCCER: &[Sport] = &[Sport::Soccer];
const HOCKEY: &[Sport] = &[Sport::Hockey];
const SOCCER_HOCKEY: &[Sport] = &[Sport::Soccer, Sport::Hockey];

use End::{Actor, Goal};
use Multiplicity::{Made, One, Points};

const fn rule(
    kind: EventKind,
    sports: &'static [Sport],
    arc: Option<(End, End, Multiplicity)>,
) -> Rule {
    Rule { kind, sports, arc }
}

#[rustfmt::skip]
static RULES: &[Rule] = &[
    // actors: [from, to]
    rule(EventKind::Pass,                     ALL,           Some((Actor(1), Actor(0), One))),
    // [winner, loser]
    rule(EventKind::Dispossess,               ALL,           Some((Actor(1), Actor(0), One))),
    // [winner, passer]
    rule(EventKind::Intercept,                ALL,           Some((Actor(1), Actor(0), One))),
    rule(EventKind::Touch,                    ALL,           None),
    rule(EventKind::UnforcedTurnover,         ALL,           None),
    rule(EventKind::Stoppage,                 ALL,           None),
    // [shooter, defender]
    rule(EventKind::ContestedMiss,            ALL,           Some((Actor(0), Actor(1), One))),
    // [scorer]
    rule(EventKind::Score,                    BASKETBALL,    Some((Goal, Actor(0), Points))),
    rule(EventKind::Score,                    SOCCER_HOCKEY, Some((Goal, Actor(0), One))),
    // [shooter, rebounder]
    rule(EventKind::UncontestedMissRebounded, BASKETBALL,    Some((Actor(0), Actor(1), One))),
    // [fouler, fouled]
    rule(EventKind::FoulWithFreeThrows,       BASKETBALL,    Some((Goal, Actor(1), Made))),
    rule(EventKind::FoulNoFreeThrows,         BASKETBALL,    Some((Actor(1), Actor(0), One))),
    rule(EventKind::UncontestedMissDead,      SOCCER_HOCKEY, None),
    // [shooter, keeper]
    rule(EventKind::Save,                     SOCCER_HOCKEY, Some((Actor(0), Actor(1), One))),
    rule(EventKind::FoulDead,                 SOCCER,        None),
    rule(EventKind::FoulLeadingToGoal,        SOCCER,        Some((Actor(0), Actor(1), One))),
    // [passer, offside_player]; the two sports point the arc in opposite directions
    rule(EventKind::Offside,                  SOCCER,        Some((Actor(0), Actor(1), One))),
    rule(EventKind::Offside,                  HOCKEY,        Some((Actor(1), Actor(0), One))),
    // [drawer, penalized]
    rule(EventKind::PenaltyDrawnNoPpg,        HOCKEY,        Some((Actor(0), Actor(1), One))),
    rule(EventKind::PenaltyDrawnPpg,          HOCKEY,        Some((Actor(1), Actor(0), One))),
    // [icer, toucher]
    rule(EventKind::Icing,                    HOCKEY,        Some((Actor(0), Actor(1), One))),
];

fn lookup(sport: Sport, kind: EventKind) -> Option<&'static Rule> {
    RULES
        .iter()
        .find(|r| r.kind == kind && r.sports.contains(&sport))
}

/// Arcs prescribed for `event` under `sport`'s rule table.
pub fn arcs_for_event(sport: Sport, event: &Event) -> Result<ArcDelta, RuleError> {
    let kind = event.kind();
    let rule = lookup(sport, kind).ok_or(RuleError::SportMismatch { sport, kind })?;
    let Some((from, to, mult)) = rule.arc else {
        return Ok(ArcDelta::empty());
    };

    let actors = event.actors();
    let node = |end: End| match end {
        Goal => NodeRef::Goal,
        Actor(i) => NodeRef::Player(actors[i].clone()),
    };
    let count = match (mult, event) {
        (One, _) => 1,
        (Points, Event::Score { points, .. }) => points.unwrap_or(1),
        (Made, Event::FoulWithFreeThrows { made, .. }) => *made,
        _ => unreachable!("multiplicity bound to the wrong event kind"),
    };
    if count == 0 {
        return Err(RuleError::ZeroCount { kind });
    }
    Ok(ArcDelta {
        arcs: vec![Arc {
            from: node(from),
            to: node(to),
            count,
        }],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> NodeRef {
        NodeRef::Player(s.into())
    }

    fn single(sport: Sport, e: Event) -> (NodeRef, NodeRef, u32) {
        let d = arcs_for_event(sport, &e).unwrap();
        assert_eq!(d.arcs.len(), 1, "{e:?}");
        let a = d.arcs.into_iter().next().unwrap();
        (a.from, a.to, a.count)
    }

    #[test]
    fn table_is_total_and_unambiguous() {
        for sport in Sport::ALL {
            for kind in EventKind::ALL {
                let n = RULES
                    .iter()
                    .filter(|r| r.kind == kind && r.sports.contains(&sport))
                    .count();
                let expected = usize::from(kind.legal_in(sport));
                assert_eq!(n, expected, "{sport} {kind}");
            }
        }
    }

    #[test]
    fn pass_is_reversed() {
        let e = Event::Pass {
            from: "A".into(),
            to: "B".into(),
        };
        for s in Sport::ALL {
            assert_eq!(single(s, e.clone()), (p("B"), p("A"), 1));
        }
    }

    #[test]
    fn basketball_score_carries_points() {
        let e = Event::Score {
            scorer: "F".into(),
            points: Some(1),
        };
        assert_eq!(single(Sport::Basketball, e), (NodeRef::Goal, p("F"), 1));
        let three = Event::Score {
            scorer: "F".into(),
            points: Some(3),
        };
        let d = arcs_for_event(Sport::Basketball, &three).unwrap();
        assert_eq!(d.total(), 3);
        assert!(d.arcs.iter().all(|a| a.from == NodeRef::Goal && a.to == p("F")));
        let bare = Event::Score {
            scorer: "F".into(),
            points: None,
        };
        assert_eq!(single(Sport::Soccer, bare), (NodeRef::Goal, p("F"), 1));
    }

    #[test]
    fn dead_ball_events_draw_nothing() {
        assert!(arcs_for_event(Sport::Basketball, &Event::Stoppage)
            .unwrap()
            .is_empty());
        let soccer_dead = [
            Event::FoulDead {
                fouler: "A".into(),
                fouled: "D".into(),
            },
            Event::UncontestedMissDead { shooter: "A".into() },
            Event::Stoppage,
            Event::Touch { player: "A".into() },
            Event::UnforcedTurnover { player: "A".into() },
        ];
        for e in soccer_dead {
            assert!(arcs_for_event(Sport::Soccer, &e).unwrap().is_empty());
        }
    }

    #[test]
    fn fouls() {
        let ft = Event::FoulWithFreeThrows {
            fouler: "D".into(),
            fouled: "A".into(),
            made: 2,
        };
        assert_eq!(single(Sport::Basketball, ft), (NodeRef::Goal, p("A"), 2));
        let smart = Event::FoulNoFreeThrows {
            fouler: "D".into(),
            fouled: "A".into(),
        };
        assert_eq!(single(Sport::Basketball, smart), (p("A"), p("D"), 1));
        let to_goal = Event::FoulLeadingToGoal {
            fouler: "D".into(),
            fouled: "A".into(),
        };
        assert_eq!(single(Sport::Soccer, to_goal), (p("D"), p("A"), 1));
    }

    #[test]
    fn hockey_penalties_and_icing() {
        let no_ppg = Event::PenaltyDrawnNoPpg {
            drawer: "i".into(),
            penalized: "j".into(),
        };
        assert_eq!(single(Sport::Hockey, no_ppg), (p("i"), p("j"), 1));
        let ppg = Event::PenaltyDrawnPpg {
            drawer: "i".into(),
            penalized: "j".into(),
        };
        assert_eq!(single(Sport::Hockey, ppg), (p("j"), p("i"), 1));
        let icing = Event::Icing {
            icer: "i".into(),
            toucher: "j".into(),
        };
        assert_eq!(single(Sport::Hockey, icing), (p("i"), p("j"), 1));
    }

    #[test]
    fn offside_direction_differs_by_sport() {
        let e = Event::Offside {
            passer: "j".into(),
            offside_player: "i".into(),
        };
        assert_eq!(single(Sport::Soccer, e.clone()), (p("j"), p("i"), 1));
        assert_eq!(single(Sport::Hockey, e), (p("i"), p("j"), 1));
    }

    #[test]
    fn misses_and_turnovers() {
        let contested = Event::ContestedMiss {
            shooter: "i".into(),
            defender: "j".into(),
        };
        let save = Event::Save {
            shooter: "i".into(),
            keeper: "j".into(),
        };
        let rebound = Event::UncontestedMissRebounded {
            shooter: "i".into(),
            rebounder: "j".into(),
        };
        let steal = Event::Dispossess {
            winner: "i".into(),
            loser: "j".into(),
        };
        let pick = Event::Intercept {
            winner: "i".into(),
            passer: "j".into(),
        };
        assert_eq!(single(Sport::Hockey, contested), (p("i"), p("j"), 1));
        assert_eq!(single(Sport::Soccer, save), (p("i"), p("j"), 1));
        assert_eq!(single(Sport::Basketball, rebound), (p("i"), p("j"), 1));
        assert_eq!(single(Sport::Basketball, steal), (p("j"), p("i"), 1));
        assert_eq!(single(Sport::Soccer, pick), (p("j"), p("i"), 1));
    }

    #[test]
    fn sport_mismatch_is_rejected() {
        let e = Event::Icing {
            icer: "i".into(),
            toucher: "j".into(),
        };
        assert_eq!(
            arcs_for_event(Sport::Soccer, &e),
            Err(RuleError::SportMismatch {
                sport: Sport::Soccer,
                kind: EventKind::Icing
            })
        );
    }
}
