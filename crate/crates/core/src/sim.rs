//! Round-by-round simulation of the burning process.
//!
//! Each round first spreads fire from every vertex burned in an earlier round
//! to its neighbors, then lights that round's source. A source lit in round
//! `t` therefore reaches distance `d` in round `t + d`.

use crate::error::SimulateError;
use crate::graph::{Graph, Vertex};
use crate::schedule::BurnSchedule;

/// What to do when a round has no usable source.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FillPolicy {
    /// A scheduled source that is already burned is an error; rounds without
    /// a scheduled source light nothing.
    Strict,
    /// Every round lights a new source while unburned vertices remain: the
    /// scheduled one if it is unburned, otherwise the smallest unburned id.
    #[default]
    Greedy,
}

/// A substitution made under [`FillPolicy::Greedy`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Substitution {
    pub round: usize,
    /// The scheduled source, or `None` if the round had none.
    pub scheduled: Option<Vertex>,
    pub lit: Vertex,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimulationResult {
    /// First round after which every vertex is burned, or `None` if the
    /// process stalled with unburned vertices (only possible under
    /// [`FillPolicy::Strict`]).
    pub completion_round: Option<usize>,
    /// Round in which each vertex caught fire (`None` if never).
    pub history: Vec<Option<usize>>,
    /// Sources actually lit, by round.
    pub lit: BurnSchedule,
    pub substitutions: Vec<Substitution>,
}

/// Mutable state of a run in progress.
#[derive(Debug, Clone)]
pub struct BurnState {
    history: Vec<Option<usize>>,
    frontier: Vec<Vertex>,
    burned: usize,
    round: usize,
    next_unburned: usize,
}

impl BurnState {
    pub fn new(n: usize) -> Self {
        BurnState {
            history: vec![None; n],
            frontier: Vec::new(),
            burned: 0,
            round: 0,
            next_unburned: 0,
        }
    }

    pub fn round(&self) -> usize {
        self.round
    }

    pub fn is_burned(&self, v: Vertex) -> bool {
        self.history[v].is_some()
    }

    pub fn is_complete(&self) -> bool {
        self.burned == self.history.len()
    }

    pub fn history(&self) -> &[Option<usize>] {
        &self.history
    }

    /// Starts the next round and spreads fire from the previous frontier.
    pub fn spread(&mut self, g: &Graph) {
        self.round += 1;
        let round = self.round;
        let mut next = Vec::new();
        for &u in &self.frontier {
            for &w in g.neighbors(u) {
                if self.history[w].is_none() {
                    self.history[w] = Some(round);
                    next.push(w);
                }
            }
        }
        self.burned += next.len();
        self.frontier = next;
    }

    /// Lights `v` in the current round. Returns `false` if it was burned.
    pub fn ignite(&mut self, v: Vertex) -> bool {
        if self.history[v].is_some() {
            return false;
        }
        self.history[v] = Some(self.round);
        self.frontier.push(v);
        self.burned += 1;
        true
    }

    pub fn smallest_unburned(&mut self) -> Option<Vertex> {
        while self.next_unburned < self.history.len() && self.history[self.next_unburned].is_some() {
            self.next_unburned += 1;
        }
        (self.next_unburned < self.history.len()).then_some(self.next_unburned)
    }
}

/// Runs the process until every vertex is burned. Under [`FillPolicy::Strict`]
/// the run stops once the schedule is exhausted.
pub fn simulate(g: &Graph, schedule: &BurnSchedule, policy: FillPolicy) -> Result<SimulationResult, SimulateError> {
    let n = g.n();
    for (round, v) in schedule.iter() {
        if v >= n {
            return Err(SimulateError::VertexOutOfRange { round, vertex: v, n });
        }
    }

    let mut state = BurnState::new(n);
    let mut lit = BurnSchedule::new();
    let mut substitutions = Vec::new();
    while !state.is_complete() {
        state.spread(g);
        let round = state.round();
        if state.is_complete() {
            break;
        }
        let scheduled = schedule.source(round);
        let chosen = match (scheduled, policy) {
            (Some(v), _) if !state.is_burned(v) => Some(v),
            (Some(v), FillPolicy::Strict) => {
                return Err(SimulateError::SourceCollision { round, vertex: v });
            }
            (None, FillPolicy::Strict) => None,
            (_, FillPolicy::Greedy) => {
                let v = state
                    .smallest_unburned()
                    .expect("incomplete state has an unburned vertex");
                substitutions.push(Substitution {
                    round,
                    scheduled,
                    lit: v,
                });
                Some(v)
            }
        };
        if let Some(v) = chosen {
            state.ignite(v);
            lit.insert(round, v);
        }
        if policy == FillPolicy::Strict && state.frontier.is_empty() && round >= schedule.last_round() {
            break;
        }
    }
    let completion_round = state.is_complete().then(|| state.round());
    Ok(SimulationResult {
        completion_round,
        history: state.history,
        lit,
        substitutions,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub valid: bool,
    pub k: usize,
    pub completion_round: Option<usize>,
    pub substitutions: Vec<Substitution>,
}

/// Checks that `schedule`, with greedy filling, burns `g` within `k` rounds.
pub fn verify_schedule(g: &Graph, k: usize, schedule: &BurnSchedule) -> Result<VerifyReport, SimulateError> {
    let run = simulate(g, schedule, FillPolicy::Greedy)?;
    Ok(VerifyReport {
        valid: run.completion_round.is_some_and(|c| c <= k),
        k,
        completion_round: run.completion_round,
        substitutions: run.substitutions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap()
    }

    #[test]
    fn optimal_path_schedule() {
        let s = BurnSchedule::from_sequence(&[2, 6, 8]);
        let run = simulate(&path(9), &s, FillPolicy::Strict).unwrap();
        assert_eq!(run.completion_round, Some(3));
        assert!(run.substitutions.is_empty());
        let expected: Vec<_> = [3, 2, 1, 2, 3, 3, 2, 3, 3].into_iter().map(Some).collect();
        assert_eq!(run.history, expected);
    }

    #[test]
    fn single_vertex() {
        let g = Graph::from_edges(1, []).unwrap();
        let run = simulate(&g, &BurnSchedule::from_sequence(&[0]), FillPolicy::Strict).unwrap();
        assert_eq!(run.completion_round, Some(1));
    }

    #[test]
    fn star_from_hub() {
        let g = Graph::from_edges(6, (1..6).map(|v| (0, v))).unwrap();
        let run = simulate(&g, &BurnSchedule::from_sequence(&[0]), FillPolicy::Greedy).unwrap();
        assert_eq!(run.completion_round, Some(2));
        // Round 2 spread finishes the burn before any fill is needed.
        assert!(run.substitutions.is_empty());
    }

    #[test]
    fn strict_collision_is_an_error() {
        let s = BurnSchedule::from_sequence(&[0, 1]);
        assert_eq!(
            simulate(&path(5), &s, FillPolicy::Strict),
            Err(SimulateError::SourceCollision { round: 2, vertex: 1 })
        );
        let run = simulate(&path(5), &s, FillPolicy::Greedy).unwrap();
        assert_eq!(
            run.substitutions[0],
            Substitution {
                round: 2,
                scheduled: Some(1),
                lit: 2
            }
        );
        // Round 3 has no scheduled source, so greedy lights 4 and finishes.
        assert_eq!(run.substitutions.len(), 2);
        assert_eq!(run.completion_round, Some(3));
    }

    #[test]
    fn strict_stalls_without_sources() {
        let s = BurnSchedule::from_sequence(&[0]);
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        let run = simulate(&g, &s, FillPolicy::Strict).unwrap();
        assert_eq!(run.completion_round, None);
        assert_eq!(run.history, vec![Some(1), Some(2), None]);
    }

    #[test]
    fn out_of_range_source() {
        let s = BurnSchedule::from_sequence(&[9]);
        assert!(matches!(
            simulate(&path(3), &s, FillPolicy::Greedy),
            Err(SimulateError::VertexOutOfRange { vertex: 9, .. })
        ));
    }

    #[test]
    fn greedy_fill_on_empty_schedule() {
        // Smallest-id filling lights 0, 2, 4, 6, 8: five rounds, not three.
        let report = verify_schedule(&path(9), 3, &BurnSchedule::new()).unwrap();
        assert!(!report.valid);
        assert_eq!(report.completion_round, Some(5));
        assert_eq!(report.substitutions.len(), 5);
    }

    #[test]
    fn sources_past_completion_are_ignored() {
        let s = BurnSchedule::from_iter([(1, 0), (7, 1)]);
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        let run = simulate(&g, &s, FillPolicy::Strict).unwrap();
        assert_eq!(run.completion_round, Some(2));
    }
}
