//! Clockwise tournaments `CW(n)` and the index machinery around them.
//!
//! Vertices are `v_1..v_n`; the functions that take or return a clockwise
//! index use that 1-based numbering, with `v_0 = v_n` and so on (indices are
//! taken mod `n` with representatives in `1..=n`). Vertex `v_i` is stored
//! at index `i - 1` in every [`Tournament`], [`LinearOrder`] and
//! [`VertexSet`] produced here.
//!
//! In `CW(n)`, `v_i` beats the next `(n-1)/2` vertices clockwise when `n` is
//! odd. When `n` is even, `v_i` beats the next `n/2` vertices if
//! `i <= n/2` and the next `n/2 - 1` otherwise.

use rayon::prelude::*;

use crate::domination::VertexSet;
use crate::error::{Error, Result};
use crate::profile::{LinearOrder, Profile, VertexId, Vertices};
use crate::tournament::Tournament;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClockwiseSpec {
    n: usize,
}

impl ClockwiseSpec {
    pub fn new(n: usize) -> Result<ClockwiseSpec> {
        if n == 0 {
            return Err(Error::EmptyClockwise);
        }
        Ok(ClockwiseSpec { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Representative of `i mod n` in `1..=n`.
    pub fn wrap(&self, i: i64) -> usize {
        (i - 1).rem_euclid(self.n as i64) as usize + 1
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if (1..=self.n).contains(&i) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i, n: self.n })
        }
    }

    /// How far clockwise `v_i` reaches.
    fn reach(&self, i: usize) -> usize {
        let n = self.n;
        if n % 2 == 1 {
            (n - 1) / 2
        } else if i <= n / 2 {
            n / 2
        } else {
            n / 2 - 1
        }
    }

    /// Whether `v_i -> v_j` (1-based).
    pub fn beats(&self, i: usize, j: usize) -> bool {
        let step = (j + self.n - i) % self.n;
        step >= 1 && step <= self.reach(i)
    }
}

pub fn clockwise_tournament(spec: ClockwiseSpec) -> Tournament {
    Tournament::from_fn(spec.n, |u, v| spec.beats(u + 1, v + 1)).expect("clockwise tournaments are complete")
}

fn order_1based(indices: impl IntoIterator<Item = usize>) -> LinearOrder {
    LinearOrder::from_indices(indices.into_iter().map(|i| i - 1))
}

/// Three linear orders inducing `CW(n)` with every arc supported by exactly
/// two of them.
pub fn clockwise_orders(spec: ClockwiseSpec) -> [LinearOrder; 3] {
    let n = spec.n;
    match n {
        1 => [LinearOrder::identity(1), LinearOrder::identity(1), LinearOrder::identity(1)],
        2 => [
            LinearOrder::identity(2),
            LinearOrder::identity(2),
            LinearOrder::identity(2).reversed(),
        ],
        _ => {
            // h is (n-1)/2 for odd n and n/2 for even n
            let h = n / 2;
            let first = order_1based(1..=n);
            let second = order_1based((h + 2..=n).chain(1..=h + 1));
            let mut third = vec![h + 1];
            if n % 2 == 1 {
                // v_{h+1} > v_n > v_h > v_{n-1} > ... > v_2 > v_{h+2} > v_1
                third.push(n);
                for t in 0..h - 1 {
                    third.push(h - t);
                    third.push(n - 1 - t);
                }
            } else {
                // v_{h+1} > v_h > v_n > v_{h-1} > v_{n-1} > ... > v_2 > v_{h+2} > v_1
                for t in 0..h - 1 {
                    third.push(h - t);
                    third.push(n - t);
                }
            }
            third.push(1);
            [first, second, order_1based(third)]
        }
    }
}

/// Pads three weight-2 realizing orders on `n` vertices out to `2k-1`
/// orders, adding `k-2` copies of `v_n > ... > v_1` and `k-2` copies of
/// `v_1 > ... > v_n`. Every arc then has weight exactly `k`.
pub fn lifted_orders(orders: &[LinearOrder; 3], n: usize, k: u32) -> Result<Vec<LinearOrder>> {
    if k < 2 {
        return Err(Error::InvalidK { k, min: 2 });
    }
    let up = LinearOrder::identity(n);
    let down = up.reversed();
    let pad = (k - 2) as usize;
    let mut out: Vec<LinearOrder> = orders.to_vec();
    out.extend(std::iter::repeat_n(down, pad));
    out.extend(std::iter::repeat_n(up, pad));
    Ok(out)
}

/// [`lifted_orders`] as a profile over `v1..vn`.
pub fn lift_orders(orders: &[LinearOrder; 3], k: u32) -> Result<Profile> {
    let n = orders[0].len();
    Profile::new(k, Vertices::numbered(n), lifted_orders(orders, n, k)?)
}

/// `CW(n)` realized by `2k-1` orders, every arc of weight `k`.
pub fn clockwise_profile(n: usize, k: u32) -> Result<Profile> {
    lift_orders(&clockwise_orders(ClockwiseSpec::new(n)?), k)
}

/// `X_i = {v_i, ..., v_{i + floor((n-1)/2)}}`.
pub fn x_set(spec: ClockwiseSpec, i: usize) -> Result<VertexSet> {
    spec.check_index(i)?;
    let span = (spec.n - 1) / 2;
    Ok((0..=span).map(|t| spec.wrap((i + t) as i64) - 1).collect())
}

/// Complement of `X_i`.
pub fn y_set(spec: ClockwiseSpec, i: usize) -> Result<VertexSet> {
    Ok(x_set(spec, i)?.complement(spec.n))
}

/// Steps backwards from `v_i` to the first vertex not in `s`.
pub fn crank(spec: ClockwiseSpec, s: &VertexSet, i: usize) -> Result<usize> {
    spec.check_index(i)?;
    (0..spec.n as i64)
        .map(|l| spec.wrap(i as i64 - l))
        .find(|&j| !s.contains(j - 1))
        .ok_or(Error::NotProperSubset)
}

/// `v_{i + ceil(n/2)}`.
pub fn flip(spec: ClockwiseSpec, i: usize) -> Result<usize> {
    spec.check_index(i)?;
    Ok(spec.wrap((i + spec.n.div_ceil(2)) as i64))
}

/// A vertex outside a set together with how many set members beat it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LeastDominated {
    pub vertex: VertexId,
    pub dominators: usize,
}

/// The vertex outside `s` beaten by the fewest members of `s` (smallest
/// index on ties).
pub fn least_dominated_outside(spec: ClockwiseSpec, s: &VertexSet) -> Result<LeastDominated> {
    let n = spec.n;
    if s.members().last().is_some_and(|&v| v >= n) {
        return Err(Error::VertexOutOfRange { index: *s.members().last().unwrap(), n });
    }
    (0..n)
        .filter(|&v| !s.contains(v))
        .map(|v| LeastDominated {
            vertex: VertexId(v),
            dominators: s.iter().filter(|&u| spec.beats(u + 1, v + 1)).count(),
        })
        .min_by_key(|c| c.dominators)
        .ok_or(Error::NotProperSubset)
}

/// Whether the least-dominated outside vertex meets the bound: at most
/// `(|s|+1)/2` dominators when exactly one vertex is outside `s`, at most
/// `|s|/2` otherwise.
pub fn dominator_bound_holds(spec: ClockwiseSpec, s: &VertexSet) -> Result<bool> {
    let least = least_dominated_outside(spec, s)?;
    let allowed_twice = if s.len() + 1 == spec.n { s.len() + 1 } else { s.len() };
    Ok(2 * least.dominators <= allowed_twice)
}

fn proper_subsets(n: usize) -> impl ParallelIterator<Item = VertexSet> {
    assert!(n < 64);
    (0..(1u64 << n) - 1).into_par_iter().map(VertexSet::from_mask)
}

/// Checks the dominator bound on every proper subset of `CW(n)`; returns a
/// violating set if one exists.
pub fn find_dominator_bound_violation(spec: ClockwiseSpec) -> Option<VertexSet> {
    proper_subsets(spec.n).find_first(|s| !dominator_bound_holds(spec, s).expect("proper subset"))
}

/// A failure of one of the crank/flip identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CrankFlipViolation {
    Crank { s: VertexSet, i: usize },
    Flip { i: usize },
}

/// Checks, for every proper subset `s` and index `i`, that
/// `|X_crank(i) ∩ s| >= |X_i ∩ s| - 1`, and that `X_flip(i)` equals `Y_i`
/// (even `n`) or `Y_i ∪ {v_i}` (odd `n`).
pub fn find_crank_flip_violation(spec: ClockwiseSpec) -> Option<CrankFlipViolation> {
    let n = spec.n;
    let xs: Vec<VertexSet> = (1..=n).map(|i| x_set(spec, i).unwrap()).collect();
    for i in 1..=n {
        let flipped = &xs[flip(spec, i).unwrap() - 1];
        let mut expected = y_set(spec, i).unwrap();
        if n % 2 == 1 {
            expected = expected.iter().chain([i - 1]).collect();
        }
        if *flipped != expected {
            return Some(CrankFlipViolation::Flip { i });
        }
    }
    let meet = |x: &VertexSet, s: &VertexSet| x.iter().filter(|&v| s.contains(v)).count();
    proper_subsets(n)
        .find_map_first(|s| {
            (1..=n).find_map(|i| {
                let c = crank(spec, &s, i).unwrap();
                (meet(&xs[c - 1], &s) + 1 < meet(&xs[i - 1], &s)).then(|| (s.clone(), i))
            })
        })
        .map(|(s, i)| CrankFlipViolation::Crank { s, i })
}
