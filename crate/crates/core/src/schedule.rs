//! Burning schedules: which vertex is lit as a source in which round.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::ParseError;
use crate::graph::Vertex;

/// Map from 1-based round to the source lit in that round. Rounds may be
/// skipped; the simulator decides what happens in a skipped round.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BurnSchedule {
    sources: BTreeMap<usize, Vertex>,
}

impl BurnSchedule {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a schedule lighting `sources[i]` in round `i + 1`.
    pub fn from_sequence(sources: &[Vertex]) -> Self {
        BurnSchedule {
            sources: sources.iter().enumerate().map(|(i, &v)| (i + 1, v)).collect(),
        }
    }

    /// Sets the source for `round`, returning the one it replaced.
    pub fn insert(&mut self, round: usize, v: Vertex) -> Option<Vertex> {
        assert!(round >= 1, "rounds are 1-based");
        self.sources.insert(round, v)
    }

    pub fn source(&self, round: usize) -> Option<Vertex> {
        self.sources.get(&round).copied()
    }

    pub fn len(&self) -> usize {
        self.sources.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sources.is_empty()
    }

    pub fn last_round(&self) -> usize {
        self.sources.keys().next_back().copied().unwrap_or(0)
    }

    /// `(round, source)` pairs in ascending round order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, Vertex)> + '_ {
        self.sources.iter().map(|(&r, &v)| (r, v))
    }

    /// Parses lines `round vertex` with strictly ascending 1-based rounds.
    /// Blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut schedule = BurnSchedule::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let body = raw.trim();
            if body.is_empty() || body.starts_with('#') {
                continue;
            }
            let malformed = |msg: &str| ParseError::Malformed {
                line,
                msg: msg.to_string(),
            };
            let mut toks = body.split_whitespace();
            let (Some(r), Some(v), None) = (toks.next(), toks.next(), toks.next()) else {
                return Err(malformed("expected `round vertex`"));
            };
            let round: usize = r.parse().map_err(|_| malformed("bad round"))?;
            let vertex: Vertex = v.parse().map_err(|_| malformed("bad vertex"))?;
            if round == 0 {
                return Err(malformed("rounds are 1-based"));
            }
            if round <= schedule.last_round() {
                return Err(malformed("rounds must be strictly ascending"));
            }
            schedule.insert(round, vertex);
        }
        Ok(schedule)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (round, v) in self.iter() {
            let _ = writeln!(out, "{round} {v}");
        }
        out
    }
}

impl FromIterator<(usize, Vertex)> for BurnSchedule {
    fn from_iter<I: IntoIterator<Item = (usize, Vertex)>>(iter: I) -> Self {
        let mut s = BurnSchedule::new();
        for (r, v) in iter {
            s.insert(r, v);
        }
        s
    }
}
