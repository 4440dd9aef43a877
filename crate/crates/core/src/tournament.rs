//! Weighted k-majority tournaments.

use crate::error::{Error, Result};
use crate::profile::{Profile, VertexId, Vertices};

/// Plain tournament: one directed arc per unordered pair, no weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tournament {
    n: usize,
    beats: Vec<bool>,
}

impl Tournament {
    /// Builds a tournament from a dominance predicate. `beats(u, v)` must be
    /// true for exactly one of `(u, v)` and `(v, u)`.
    pub fn from_fn(n: usize, mut beats: impl FnMut(usize, usize) -> bool) -> Result<Tournament> {
        let mut m = vec![false; n * n];
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    m[u * n + v] = beats(u, v);
                }
            }
        }
        for u in 0..n {
            for v in u + 1..n {
                let count = m[u * n + v] as usize + m[v * n + u] as usize;
                if count != 1 {
                    return Err(Error::BadArcCount { u, v, count });
                }
            }
        }
        Ok(Tournament { n, beats: m })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn beats(&self, u: usize, v: usize) -> bool {
        self.beats[u * self.n + v]
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        (0..n).flat_map(move |u| (0..n).filter(move |&v| self.beats(u, v)).map(move |v| (u, v)))
    }

    pub fn out_degree(&self, u: usize) -> usize {
        (0..self.n).filter(|&v| self.beats(u, v)).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| self.beats(u, v)).count()
    }
}

/// A directed arc `from -> to` carrying the number of voters who agree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Arc {
    pub from: VertexId,
    pub to: VertexId,
    pub weight: u32,
}

/// Complete digraph with exactly one arc per pair and every weight in
/// `[k, 2k-1]`.
///
/// Equality is by vertex name, like [`Profile`].
#[derive(Clone, Debug)]
pub struct WeightedTournament {
    k: u32,
    vertices: Vertices,
    // weights[u * n + v] = w(u -> v), or 0 when v -> u
    weights: Vec<u32>,
}

impl WeightedTournament {
    pub fn from_arcs(k: u32, vertices: Vertices, arcs: impl IntoIterator<Item = Arc>) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidK { k, min: 1 });
        }
        let n = vertices.len();
        let mut weights = vec![0u32; n * n];
        let mut seen = vec![0usize; n * n];
        for arc in arcs {
            vertices.check(arc.from)?;
            vertices.check(arc.to)?;
            let (u, v) = (arc.from.0, arc.to.0);
            if u == v {
                return Err(Error::SameVertex);
            }
            if arc.weight < k || arc.weight > 2 * k - 1 {
                return Err(Error::WeightOutOfRange { weight: arc.weight, k });
            }
            weights[u * n + v] = arc.weight;
            seen[u.min(v) * n + u.max(v)] += 1;
        }
        for u in 0..n {
            for v in u + 1..n {
                let count = seen[u * n + v];
                if count != 1 {
                    return Err(Error::BadArcCount { u, v, count });
                }
            }
        }
        Ok(WeightedTournament { k, vertices, weights })
    }

    /// Gives every arc of `t` the same weight.
    pub fn uniform(k: u32, vertices: Vertices, t: &Tournament, weight: u32) -> Result<Self> {
        if vertices.len() != t.n() {
            return Err(Error::VertexOutOfRange { index: t.n(), n: vertices.len() });
        }
        let arcs = t
            .arcs()
            .map(|(u, v)| Arc { from: VertexId(u), to: VertexId(v), weight })
            .collect::<Vec<_>>();
        Self::from_arcs(k, vertices, arcs)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &Vertices {
        &self.vertices
    }

    /// Weight of `u -> v`, or `None` if the arc points the other way (or
    /// `u == v`).
    pub fn weight(&self, u: VertexId, v: VertexId) -> Option<u32> {
        match self.weights[u.0 * self.n() + v.0] {
            0 => None,
            w => Some(w),
        }
    }

    /// Raw weight lookup, zero when there is no arc `u -> v`.
    pub(crate) fn w(&self, u: usize, v: usize) -> u32 {
        self.weights[u * self.n() + v]
    }

    pub fn beats(&self, u: VertexId, v: VertexId) -> bool {
        self.w(u.0, v.0) != 0
    }

    pub fn arcs(&self) -> Vec<Arc> {
        let n = self.n();
        let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 0..n {
            for v in 0..n {
                let w = self.w(u, v);
                if w != 0 {
                    out.push(Arc { from: VertexId(u), to: VertexId(v), weight: w });
                }
            }
        }
        out
    }

    pub fn to_unweighted(&self) -> Tournament {
        Tournament::from_fn(self.n(), |u, v| self.w(u, v) != 0).expect("weighted tournament is complete")
    }

    /// True if every arc has weight `w`.
    pub fn has_uniform_weight(&self, w: u32) -> bool {
        self.arcs().iter().all(|a| a.weight == w)
    }

    fn named_arcs(&self) -> Vec<(&str, &str, u32)> {
        let mut arcs: Vec<_> = self
            .arcs()
            .into_iter()
            .map(|a| (self.vertices.name(a.from), self.vertices.name(a.to), a.weight))
            .collect();
        arcs.sort();
        arcs
    }
}

impl PartialEq for WeightedTournament {
    fn eq(&self, other: &Self) -> bool {
        let mut a: Vec<&String> = self.vertices.names().iter().collect();
        let mut b: Vec<&String> = other.vertices.names().iter().collect();
        a.sort();
        b.sort();
        self.k == other.k && a == b && self.named_arcs() == other.named_arcs()
    }
}

impl Eq for WeightedTournament {}

/// Induces the weighted tournament: `u -> v` whenever at least `k` orders
/// rank `u` above `v`, weighted by that count.
pub fn tournament_from_profile(profile: &Profile) -> WeightedTournament {
    let n = profile.n();
    let k = profile.k();
    let mut weights = vec![0u32; n * n];
    for u in 0..n {
        for v in 0..n {
            if u != v {
                let c = profile.count_unchecked(u, v);
                if c >= k {
                    weights[u * n + v] = c;
                }
            }
        }
    }
    WeightedTournament { k, vertices: profile.vertices().clone(), weights }
}

impl From<&Profile> for WeightedTournament {
    fn from(p: &Profile) -> Self {
        tournament_from_profile(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profile::LinearOrder;

    fn sample() -> Profile {
        let orders = ["a d c b", "d c b a", "d c b a", "a d b c", "a d c b"]
            .map(|s| s.split(' ').collect::<Vec<_>>());
        Profile::from_named_orders(3, &orders).unwrap()
    }

    #[test]
    fn sample_arcs() {
        let t = tournament_from_profile(&sample());
        let v = t.vertices();
        let mut got: Vec<(String, String, u32)> = t
            .arcs()
            .iter()
            .map(|a| (v.name(a.from).to_string(), v.name(a.to).to_string(), a.weight))
            .collect();
        got.sort();
        let want = [("a", "b", 3), ("a", "c", 3), ("a", "d", 3), ("c", "b", 4), ("d", "b", 5), ("d", "c", 5)]
            .map(|(u, v, w)| (u.to_string(), v.to_string(), w));
        assert_eq!(got, want.to_vec());
    }

    #[test]
    fn single_voter() {
        let p = Profile::new(1, Vertices::numbered(2), vec![LinearOrder::identity(2)]).unwrap();
        let t = tournament_from_profile(&p);
        assert_eq!(t.weight(VertexId(0), VertexId(1)), Some(1));
        assert_eq!(t.weight(VertexId(1), VertexId(0)), None);
    }

    #[test]
    fn unanimous_profile_is_transitive() {
        let k = 3;
        let n = 6;
        let p = Profile::new(k, Vertices::numbered(n), vec![LinearOrder::identity(n); 5]).unwrap();
        let t = tournament_from_profile(&p);
        assert_eq!(t.arcs().len(), n * (n - 1) / 2);
        for a in t.arcs() {
            assert!(a.from < a.to);
            assert_eq!(a.weight, 2 * k - 1);
        }
    }

    #[test]
    fn from_arcs_validation() {
        let v = Vertices::numbered(2);
        let arc = |w| Arc { from: VertexId(0), to: VertexId(1), weight: w };
        assert!(WeightedTournament::from_arcs(2, v.clone(), [arc(2)]).is_ok());
        assert_eq!(
            WeightedTournament::from_arcs(2, v.clone(), [arc(4)]),
            Err(Error::WeightOutOfRange { weight: 4, k: 2 })
        );
        assert_eq!(
            WeightedTournament::from_arcs(2, v.clone(), [arc(1)]),
            Err(Error::WeightOutOfRange { weight: 1, k: 2 })
        );
        assert!(matches!(
            WeightedTournament::from_arcs(2, v.clone(), []),
            Err(Error::BadArcCount { count: 0, .. })
        ));
        let back = Arc { from: VertexId(1), to: VertexId(0), weight: 2 };
        assert!(matches!(
            WeightedTournament::from_arcs(2, v, [arc(2), back]),
            Err(Error::BadArcCount { count: 2, .. })
        ));
    }

    #[test]
    fn profile_round_trip_through_arcs() {
        let t = tournament_from_profile(&sample());
        let rebuilt = WeightedTournament::from_arcs(t.k(), t.vertices().clone(), t.arcs()).unwrap();
        assert_eq!(rebuilt, t);
    }
}
