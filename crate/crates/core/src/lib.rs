//! Weighted k-majority tournaments and their maximum approval gap.
//!
//! A profile of `2k-1` linear orders (voters) over a set of candidates
//! induces a tournament with an arc `u -> v` whenever at least `k` voters
//! prefer `u`, weighted by the number of such voters. For a dominating set
//! `D`, the approval gap is the smallest average weight with which `D`
//! beats a candidate outside it; the maximum approval gap of the
//! tournament is the largest approval gap over all dominating sets.
//!
//! Everything is exact: gaps are [`Rational`]s and the maximum is found by
//! exhaustive search.

pub mod clockwise;
pub mod constructions;
pub mod domination;
pub mod error;
pub mod profile;
pub mod rational;
pub mod search;
pub mod tournament;

pub use domination::{
    approval_gap, average_inweight, is_dominating, max_approval_gap, max_approval_gap_fixed_size,
    min_dominating_set_size, GapWitness, SearchLimits, VertexSet,
};
pub use error::{Error, Result};
pub use profile::{LinearOrder, Profile, VertexId, Vertices};
pub use rational::Rational;
pub use tournament::{tournament_from_profile, Arc, Tournament, WeightedTournament};
