//! Exhaustive searches over small profiles: enumeration, realizability of
//! a weighted tournament, and the smallest vertex count attaining a given
//! maximum approval gap.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use itertools::Itertools;

use crate::domination::{max_approval_gap, SearchLimits};
use crate::error::{Error, Result};
use crate::profile::{LinearOrder, Profile, Vertices};
use crate::rational::Rational;
use crate::tournament::{tournament_from_profile, WeightedTournament};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_vertices: usize,
    /// Cap on enumerated order tuples (or backtracking nodes).
    pub max_tuples: u128,
    pub time_limit: Option<Duration>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_vertices: 6, max_tuples: 50_000_000, time_limit: None }
    }
}

impl SearchBudget {
    fn validate(&self) -> Result<()> {
        if self.max_vertices == 0 || self.max_tuples == 0 || self.time_limit == Some(Duration::ZERO) {
            return Err(Error::BudgetExceeded { needed: 1, limit: 0 });
        }
        Ok(())
    }

    fn deadline(&self) -> Option<Instant> {
        self.time_limit.map(|d| Instant::now() + d)
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Number of order tuples [`enumerate_profiles`] will produce; `None` on
/// overflow.
pub fn profile_count(n: usize, k: u32, canonical: bool) -> Option<u128> {
    let voters = 2 * k - 1 - canonical as u32;
    factorial(n).checked_pow(voters)
}

/// All permutations of `0..n` in lexicographic order.
fn permutations(n: usize) -> Vec<LinearOrder> {
    (0..n).permutations(n).map(LinearOrder::from_indices).collect()
}

/// Every tuple of `2k-1` linear orders on `v1..vn`, in lexicographic order
/// (first order most significant).
pub struct ProfileIter {
    k: u32,
    vertices: Vertices,
    perms: Vec<LinearOrder>,
    digits: Vec<usize>,
    canonical: bool,
    done: bool,
}

impl Iterator for ProfileIter {
    type Item = Profile;

    fn next(&mut self) -> Option<Profile> {
        if self.done {
            return None;
        }
        let orders = self.digits.iter().map(|&d| self.perms[d].clone()).collect();
        let p = Profile::new(self.k, self.vertices.clone(), orders).expect("permutations form a valid profile");
        // odometer step, last order fastest; the first order is pinned to
        // the identity in canonical mode
        let fixed = self.canonical as usize;
        let mut pos = self.digits.len();
        loop {
            if pos == fixed {
                self.done = true;
                break;
            }
            pos -= 1;
            self.digits[pos] += 1;
            if self.digits[pos] < self.perms.len() {
                break;
            }
            self.digits[pos] = 0;
        }
        Some(p)
    }
}

/// Enumerates profiles of `2k-1` orders over `n` vertices. With
/// `canonical`, only profiles whose first order is `v1 > ... > vn` are
/// produced, which covers every profile up to relabelling and so suffices
/// for relabelling-invariant queries such as the maximum approval gap.
pub fn enumerate_profiles(n: usize, k: u32, budget: &SearchBudget, canonical: bool) -> Result<ProfileIter> {
    budget.validate()?;
    if k == 0 {
        return Err(Error::InvalidK { k, min: 1 });
    }
    let needed = profile_count(n, k, canonical).unwrap_or(u128::MAX);
    if n > budget.max_vertices || needed > budget.max_tuples {
        return Err(Error::BudgetExceeded { needed, limit: budget.max_tuples });
    }
    Ok(ProfileIter {
        k,
        vertices: Vertices::numbered(n),
        perms: permutations(n),
        digits: vec![0; 2 * k as usize - 1],
        canonical,
        done: false,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Realizability {
    Realizable(Profile),
    NotRealizable,
}

struct Realizer<'a> {
    n: usize,
    voters: usize,
    perms: &'a [Vec<usize>],
    pairs: Vec<(usize, usize)>,
    target: Vec<u32>,
    counts: Vec<u32>,
    chosen: Vec<usize>,
    nodes: u128,
    budget: &'a SearchBudget,
    deadline: Option<Instant>,
}

impl Realizer<'_> {
    /// Extends the chosen multiset with orders at index `>= from`.
    fn extend(&mut self, from: usize) -> Result<bool> {
        if self.chosen.len() == self.voters {
            return Ok(true);
        }
        for p in from..self.perms.len() {
            self.nodes += 1;
            if self.nodes > self.budget.max_tuples {
                return Err(Error::BudgetExceeded { needed: self.nodes, limit: self.budget.max_tuples });
            }
            if self.nodes.is_multiple_of(4096) && self.deadline.is_some_and(|d| Instant::now() > d) {
                return Err(Error::TimeLimit);
            }
            let remaining = (self.voters - self.chosen.len() - 1) as u32;
            let perms = self.perms;
            let rank = &perms[p];
            let mut feasible = true;
            for (i, &(u, v)) in self.pairs.iter().enumerate() {
                self.counts[i] += (rank[u] < rank[v]) as u32;
                let c = self.counts[i];
                if c > self.target[i] || c + remaining < self.target[i] {
                    feasible = false;
                }
            }
            if feasible {
                self.chosen.push(p);
                if self.extend(p)? {
                    return Ok(true);
                }
                self.chosen.pop();
            }
            for (i, &(u, v)) in self.pairs.iter().enumerate() {
                self.counts[i] -= (rank[u] < rank[v]) as u32;
            }
        }
        Ok(false)
    }
}

/// Searches for `2k-1` orders inducing exactly `t`. Orders are chosen as a
/// non-decreasing sequence of permutation indices, and a partial choice is
/// abandoned once some pair can no longer reach its required count.
pub fn is_realizable(t: &WeightedTournament, budget: &SearchBudget) -> Result<Realizability> {
    budget.validate()?;
    let n = t.n();
    if n > budget.max_vertices {
        return Err(Error::BudgetExceeded { needed: factorial(n), limit: budget.max_tuples });
    }
    let k = t.k();
    let voters = 2 * k as usize - 1;
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let target = pairs
        .iter()
        .map(|&(u, v)| match t.w(u, v) {
            0 => voters as u32 - t.w(v, u),
            w => w,
        })
        .collect();
    let perms: Vec<Vec<usize>> = permutations(n)
        .iter()
        .map(|o| {
            let mut r = vec![0; n];
            for (pos, v) in o.ranking().iter().enumerate() {
                r[v.0] = pos;
            }
            r
        })
        .collect();
    let mut r = Realizer {
        n,
        voters,
        perms: &perms,
        counts: vec![0; pairs.len()],
        pairs,
        target,
        chosen: Vec::with_capacity(voters),
        nodes: 0,
        budget,
        deadline: budget.deadline(),
    };
    if !r.extend(0)? {
        return Ok(Realizability::NotRealizable);
    }
    let orders = r
        .chosen
        .iter()
        .map(|&p| {
            let mut ranking = vec![0; r.n];
            for (v, &pos) in r.perms[p].iter().enumerate() {
                ranking[pos] = v;
            }
            LinearOrder::from_indices(ranking)
        })
        .collect();
    Ok(Realizability::Realizable(Profile::new(k, t.vertices().clone(), orders)?))
}

/// Every maximum approval gap attained by some `n`-vertex profile.
pub fn gamma_values(n: usize, k: u32, budget: &SearchBudget) -> Result<BTreeSet<Rational>> {
    let deadline = budget.deadline();
    let mut seen = BTreeSet::new();
    for p in enumerate_profiles(n, k, budget, true)? {
        if deadline.is_some_and(|d| Instant::now() > d) {
            return Err(Error::TimeLimit);
        }
        seen.insert(max_approval_gap(&tournament_from_profile(&p), &SearchLimits::default())?.gap);
    }
    Ok(seen)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinVertices {
    Exact(usize),
    /// No profile with at most this many vertices attains the value.
    GreaterThan(usize),
}

/// Scans `n = 1, 2, ..., n_max` for the first vertex count with a profile
/// whose maximum approval gap equals `q`.
///
/// If the budget runs out at some `n`, the error carries the largest `n`
/// that was fully scanned.
pub fn min_vertices_search(q: Rational, k: u32, n_max: usize, budget: &SearchBudget) -> Result<MinVertices> {
    budget.validate()?;
    let deadline = budget.deadline();
    for n in 1..=n_max {
        let partial = |e: Error| Error::SearchIncomplete { last_complete: n - 1, cause: Box::new(e) };
        let profiles = enumerate_profiles(n, k, budget, true).map_err(partial)?;
        for p in profiles {
            if deadline.is_some_and(|d| Instant::now() > d) {
                return Err(partial(Error::TimeLimit));
            }
            let g = max_approval_gap(&tournament_from_profile(&p), &SearchLimits::default())?;
            if g.gap == q {
                return Ok(MinVertices::Exact(n));
            }
        }
    }
    Ok(MinVertices::GreaterThan(n_max))
}
