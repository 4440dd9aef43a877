//! Brute-force reference implementations shared by the integration tests.
//! They work directly from ballot positions and bitmasks so they share no
//! code with the library paths they check.

#![allow(dead_code)]

use kmajority::{Profile, Rational};
use rand::seq::SliceRandom;
use rand::Rng;

/// `w[u][v]` is the number of voters ranking `u` above `v` when that is a
/// majority, else 0.
pub fn weights(p: &Profile) -> Vec<Vec<u32>> {
    let n = p.n();
    let positions: Vec<Vec<usize>> = p
        .orders()
        .iter()
        .map(|o| {
            let mut pos = vec![0; n];
            for (rank, v) in o.ranking().iter().enumerate() {
                pos[v.0] = rank;
            }
            pos
        })
        .collect();
    let mut w = vec![vec![0; n]; n];
    for u in 0..n {
        for v in 0..n {
            if u != v {
                let c = positions.iter().filter(|pos| pos[u] < pos[v]).count() as u32;
                if c >= p.k() {
                    w[u][v] = c;
                }
            }
        }
    }
    w
}

/// Approval gap of the set `mask`, or `None` if it does not dominate.
pub fn gap(w: &[Vec<u32>], mask: u64) -> Option<Rational> {
    let n = w.len();
    let size = mask.count_ones() as i64;
    let mut best: Option<Rational> = None;
    for v in (0..n).filter(|&v| mask >> v & 1 == 0) {
        let sum: u32 = (0..n).filter(|&u| mask >> u & 1 == 1).map(|u| w[u][v]).sum();
        if sum == 0 {
            return None;
        }
        let avg = Rational::new(sum as i64, size);
        best = Some(best.map_or(avg, |b| b.min(avg)));
    }
    Some(best.unwrap_or(Rational::ZERO))
}

/// Largest approval gap over all dominating sets.
pub fn max_gap(w: &[Vec<u32>]) -> Rational {
    let n = w.len();
    (1u64..1 << n).filter_map(|m| gap(w, m)).max().unwrap_or(Rational::ZERO)
}

pub fn mask_of(set: &kmajority::VertexSet) -> u64 {
    set.iter().fold(0, |m, v| m | 1 << v)
}

/// Whether `v_i` beats `v_j` in the clockwise tournament on `n` vertices
/// (1-based).
pub fn clockwise_beats(n: usize, i: usize, j: usize) -> bool {
    let d = (j + n - i) % n;
    let reach = if n % 2 == 1 {
        (n - 1) / 2
    } else if i <= n / 2 {
        n / 2
    } else {
        n / 2 - 1
    };
    d >= 1 && d <= reach
}

pub fn random_profile(rng: &mut impl Rng, n: usize, k: u32) -> Profile {
    let names: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let orders: Vec<Vec<String>> = (0..2 * k - 1)
        .map(|_| {
            let mut o = names.clone();
            o.shuffle(rng);
            o
        })
        .collect();
    Profile::from_named_orders(k, &orders).unwrap()
}
