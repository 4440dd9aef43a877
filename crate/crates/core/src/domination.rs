//! Dominating sets, approval gaps and the exact maximum approval gap.
//!
//! The maximum is found by scanning every vertex subset as a `u64` mask.
//! Each vertex `v` gets a table of in-weight sums indexed by one byte of
//! the mask, so the total weight a set sends into `v` costs one lookup per
//! 8 vertices.

use std::cmp::Ordering;
use std::sync::atomic::{AtomicU32, Ordering as AtomicOrdering};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::profile::VertexId;
use crate::rational::Rational;
use crate::tournament::WeightedTournament;

/// Default largest vertex count for the exhaustive `2^n` scans.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 26;

/// Hard ceiling imposed by the `u64` subset masks.
pub const MAX_MASK_VERTICES: usize = 63;

/// A set of vertex indices, kept sorted and free of duplicates.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(members: impl IntoIterator<Item = usize>) -> VertexSet {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn empty() -> VertexSet {
        VertexSet(Vec::new())
    }

    pub fn full(n: usize) -> VertexSet {
        VertexSet((0..n).collect())
    }

    pub fn from_mask(mask: u64) -> VertexSet {
        VertexSet((0..64).filter(|&i| mask >> i & 1 == 1).collect())
    }

    /// Panics if a member is 64 or larger.
    pub fn to_mask(&self) -> u64 {
        self.0.iter().fold(0u64, |m, &i| {
            assert!(i < 64, "vertex {i} does not fit a u64 mask");
            m | 1 << i
        })
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    /// Members of `0..n` not in the set.
    pub fn complement(&self, n: usize) -> VertexSet {
        VertexSet((0..n).filter(|&v| !self.contains(v)).collect())
    }

    fn check(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&index) if index >= n => Err(Error::VertexOutOfRange { index, n }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

/// A dominating set together with its approval gap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapWitness {
    pub gap: Rational,
    pub set: VertexSet,
}

/// Limits for the exhaustive subset scans.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_vertices: usize,
    /// Lift `max_vertices` (the `u64` mask ceiling still applies).
    pub override_limit: bool,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { max_vertices: DEFAULT_ENUMERATION_LIMIT, override_limit: false }
    }
}

impl SearchLimits {
    pub fn unlimited() -> Self {
        SearchLimits { max_vertices: MAX_MASK_VERTICES, override_limit: true }
    }

    fn check(&self, n: usize) -> Result<()> {
        let limit = if self.override_limit { MAX_MASK_VERTICES } else { self.max_vertices.min(MAX_MASK_VERTICES) };
        if n > limit {
            Err(Error::OverLimit { n, limit })
        } else {
            Ok(())
        }
    }
}

pub fn is_dominating(t: &WeightedTournament, d: &VertexSet) -> Result<bool> {
    d.check(t.n())?;
    Ok(dominates(t, d))
}

fn dominates(t: &WeightedTournament, d: &VertexSet) -> bool {
    (0..t.n()).filter(|&v| !d.contains(v)).all(|v| d.iter().any(|u| t.w(u, v) != 0))
}

/// Total weight of arcs from `d` into `v`, divided by `|d|`.
pub fn average_inweight(t: &WeightedTournament, d: &VertexSet, v: VertexId) -> Result<Rational> {
    d.check(t.n())?;
    t.vertices().check(v)?;
    if d.is_empty() {
        return Err(Error::EmptySet);
    }
    if d.contains(v.0) {
        return Err(Error::VertexInSet(v.0));
    }
    Ok(inweight_unchecked(t, d, v.0))
}

fn inweight_unchecked(t: &WeightedTournament, d: &VertexSet, v: usize) -> Rational {
    let sum: u64 = d.iter().map(|u| t.w(u, v) as u64).sum();
    Rational::new(sum as i64, d.len() as i64)
}

/// Smallest average in-weight over vertices outside `d`; zero when `d` is
/// the whole vertex set.
pub fn approval_gap(t: &WeightedTournament, d: &VertexSet) -> Result<Rational> {
    d.check(t.n())?;
    if !dominates(t, d) {
        return Err(Error::NotDominating);
    }
    Ok((0..t.n())
        .filter(|&v| !d.contains(v))
        .map(|v| inweight_unchecked(t, d, v))
        .min()
        .unwrap_or(Rational::ZERO))
}

/// Per-vertex byte-indexed in-weight tables.
struct Scanner {
    n: usize,
    chunks: usize,
    table: Vec<u32>,
    cap: u32,
}

/// Candidate in the max search: gap `sum / card`, or the full vertex set
/// (gap zero) when `card == n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Candidate {
    sum: u64,
    card: u32,
    mask: u64,
}

impl Candidate {
    fn gap(&self) -> Rational {
        if self.sum == 0 {
            Rational::ZERO
        } else {
            Rational::new(self.sum as i64, self.card as i64)
        }
    }

    fn cmp_gap(&self, other: &Candidate) -> Ordering {
        let lhs = self.sum as u128 * other.card.max(1) as u128;
        let rhs = other.sum as u128 * self.card.max(1) as u128;
        lhs.cmp(&rhs)
    }

    /// Larger gap wins; ties go to the smaller set, then to the set that is
    /// lexicographically first by sorted indices.
    fn better(self, other: Candidate) -> Candidate {
        match self.cmp_gap(&other) {
            Ordering::Greater => self,
            Ordering::Less => other,
            Ordering::Equal => {
                if self.card != other.card {
                    if self.card < other.card { self } else { other }
                } else if self.mask == other.mask {
                    self
                } else {
                    let diff = self.mask ^ other.mask;
                    let low = diff & diff.wrapping_neg();
                    if self.mask & low != 0 { self } else { other }
                }
            }
        }
    }
}

fn better_opt(a: Option<Candidate>, b: Option<Candidate>) -> Option<Candidate> {
    match (a, b) {
        (Some(a), Some(b)) => Some(a.better(b)),
        (a, None) => a,
        (None, b) => b,
    }
}

impl Scanner {
    fn new(t: &WeightedTournament) -> Scanner {
        let n = t.n();
        let chunks = n.div_ceil(8).max(1);
        let mut table = vec![0u32; n * chunks * 256];
        for v in 0..n {
            for c in 0..chunks {
                let base = (v * chunks + c) * 256;
                for byte in 1..256usize {
                    let low = byte.trailing_zeros() as usize;
                    let u = c * 8 + low;
                    let w = if u < n { t.w(u, v) } else { 0 };
                    table[base + byte] = table[base + (byte & (byte - 1))] + w;
                }
            }
        }
        Scanner { n, chunks, table, cap: 2 * t.k() - 1 }
    }

    #[inline]
    fn inweight(&self, v: usize, mask: u64) -> u64 {
        let base = v * self.chunks * 256;
        let mut total = 0u64;
        for c in 0..self.chunks {
            let byte = (mask >> (8 * c)) as usize & 0xff;
            total += self.table[base + c * 256 + byte] as u64;
        }
        total
    }

    /// Minimum in-weight sum over vertices outside `mask`, or `None` if some
    /// outside vertex is undominated or the running minimum drops strictly
    /// below `floor` (a candidate that cannot win).
    #[inline]
    fn eval(&self, mask: u64, card: u32, floor: Option<&Candidate>) -> Option<Candidate> {
        let full = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        if mask == full {
            return Some(Candidate { sum: 0, card, mask });
        }
        let mut outside = !mask & full;
        let mut min = u64::MAX;
        while outside != 0 {
            let v = outside.trailing_zeros() as usize;
            outside &= outside - 1;
            let s = self.inweight(v, mask);
            if s == 0 {
                return None;
            }
            if s < min {
                min = s;
                if let Some(f) = floor {
                    if (min as u128) * (f.card.max(1) as u128) < (f.sum as u128) * (card as u128) {
                        return None;
                    }
                }
            }
        }
        Some(Candidate { sum: min, card, mask })
    }

    fn reaches_cap(&self, c: &Candidate) -> bool {
        c.card > 0 && c.sum == self.cap as u64 * c.card as u64
    }
}

const BLOCK_BITS: u32 = 14;

/// Exact maximum approval gap over all dominating sets.
///
/// Ties are broken towards the smallest set, then the lexicographically
/// first one by sorted indices. Because no gap can exceed `2k-1`, once a
/// set of size `c` reaches that cap, larger sets are skipped.
pub fn max_approval_gap(t: &WeightedTournament, limits: &SearchLimits) -> Result<GapWitness> {
    let n = t.n();
    limits.check(n)?;
    if n == 0 {
        return Ok(GapWitness { gap: Rational::ZERO, set: VertexSet::empty() });
    }
    let scanner = Scanner::new(t);
    let total: u64 = 1u64 << n;
    let block = 1u64 << BLOCK_BITS.min(n as u32);
    let blocks = total / block;
    // smallest cardinality at which the cap has been reached
    let cap_card = AtomicU32::new(u32::MAX);

    let best = (0..blocks)
        .into_par_iter()
        .map(|b| {
            let mut local: Option<Candidate> = None;
            for mask in b * block..(b + 1) * block {
                let card = mask.count_ones();
                if card == 0 || card > cap_card.load(AtomicOrdering::Relaxed) {
                    continue;
                }
                if let Some(c) = scanner.eval(mask, card, local.as_ref()) {
                    if scanner.reaches_cap(&c) {
                        cap_card.fetch_min(card, AtomicOrdering::Relaxed);
                    }
                    local = better_opt(local, Some(c));
                }
            }
            local
        })
        .reduce(|| None, better_opt)
        .expect("the full vertex set always dominates");

    Ok(GapWitness { gap: best.gap(), set: VertexSet::from_mask(best.mask) })
}

/// Next mask with the same popcount (Gosper's hack); `None` past `limit`.
fn next_same_popcount(x: u64, limit: u64) -> Option<u64> {
    let c = x & x.wrapping_neg();
    let r = x.checked_add(c)?;
    let next = (((r ^ x) >> 2) / c) | r;
    (next < limit).then_some(next)
}

fn masks_of_size(n: usize, j: usize) -> impl Iterator<Item = u64> {
    let limit = 1u64 << n;
    let first = if j == 0 { None } else { Some((1u64 << j) - 1) };
    let zero = (j == 0).then_some(0u64);
    zero.into_iter().chain(std::iter::successors(first, move |&m| next_same_popcount(m, limit)))
}

/// Largest approval gap among dominating sets of exactly `j` vertices, or
/// zero if there is none.
pub fn max_approval_gap_fixed_size(t: &WeightedTournament, j: usize, limits: &SearchLimits) -> Result<Rational> {
    let n = t.n();
    if j > n {
        return Err(Error::SizeOutOfRange { j, n });
    }
    limits.check(n)?;
    if j == 0 || n == 0 {
        return Ok(Rational::ZERO);
    }
    let scanner = Scanner::new(t);
    let mut best: Option<Candidate> = None;
    for mask in masks_of_size(n, j) {
        if let Some(c) = scanner.eval(mask, j as u32, best.as_ref()) {
            best = better_opt(best, Some(c));
        }
    }
    Ok(best.map(|c| c.gap()).unwrap_or(Rational::ZERO))
}

/// Size of a smallest dominating set.
pub fn min_dominating_set_size(t: &WeightedTournament, limits: &SearchLimits) -> Result<usize> {
    let n = t.n();
    limits.check(n)?;
    let in_masks: Vec<u64> = (0..n)
        .map(|v| (0..n).filter(|&u| t.w(u, v) != 0).fold(0u64, |m, u| m | 1 << u))
        .collect();
    for j in 1..=n {
        for mask in masks_of_size(n, j) {
            let dominated = (0..n).all(|v| mask >> v & 1 == 1 || in_masks[v] & mask != 0);
            if dominated {
                return Ok(j);
            }
        }
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profile::{LinearOrder, Profile, Vertices};
    use crate::tournament::{tournament_from_profile, Arc};
    use proptest::prelude::*;

    fn sample() -> WeightedTournament {
        let orders = ["a d c b", "d c b a", "d c b a", "a d b c", "a d c b"]
            .map(|s| s.split(' ').collect::<Vec<_>>());
        tournament_from_profile(&Profile::from_named_orders(3, &orders).unwrap())
    }

    fn set(t: &WeightedTournament, names: &[&str]) -> VertexSet {
        names.iter().map(|n| t.vertices().id(n).unwrap().0).collect()
    }

    /// Straightforward search over every mask with exact rationals, used as
    /// an oracle for the table-driven scan.
    fn oracle_max(t: &WeightedTournament) -> (Rational, VertexSet) {
        let n = t.n();
        let mut best: Option<(Rational, VertexSet)> = None;
        let mut sets: Vec<VertexSet> = (0..1u64 << n).map(VertexSet::from_mask).collect();
        sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.members().cmp(b.members())));
        for d in sets {
            if let Ok(g) = approval_gap(t, &d) {
                if best.as_ref().is_none_or(|(b, _)| g > *b) {
                    best = Some((g, d));
                }
            }
        }
        best.unwrap()
    }

    fn random_tournament(n: usize, k: u32, seed: Vec<u32>) -> WeightedTournament {
        let mut it = seed.into_iter().cycle();
        let mut arcs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                let r = it.next().unwrap();
                let w = k + r % k;
                let (from, to) = if r & 1 << 16 != 0 { (v, u) } else { (u, v) };
                arcs.push(Arc { from: VertexId(from), to: VertexId(to), weight: w });
            }
        }
        WeightedTournament::from_arcs(k, Vertices::numbered(n), arcs).unwrap()
    }

    #[test]
    fn domination_predicate() {
        let t = sample();
        assert!(is_dominating(&t, &set(&t, &["a", "c"])).unwrap());
        assert!(!is_dominating(&t, &set(&t, &["b"])).unwrap());
        assert!(is_dominating(&t, &VertexSet::full(4)).unwrap());
        assert!(matches!(
            is_dominating(&t, &VertexSet::new([7])),
            Err(Error::VertexOutOfRange { index: 7, n: 4 })
        ));
    }

    #[test]
    fn empty_tournament() {
        let t = WeightedTournament::from_arcs(1, Vertices::numbered(0), []).unwrap();
        assert!(is_dominating(&t, &VertexSet::empty()).unwrap());
        let w = max_approval_gap(&t, &SearchLimits::default()).unwrap();
        assert_eq!(w.gap, Rational::ZERO);
    }

    #[test]
    fn inweights() {
        let t = sample();
        let d = set(&t, &["a", "c"]);
        let id = |s| t.vertices().id(s).unwrap();
        assert_eq!(average_inweight(&t, &d, id("d")).unwrap(), Rational::new(3, 2));
        assert_eq!(average_inweight(&t, &d, id("b")).unwrap(), Rational::new(7, 2));
        // nothing in {b} beats d
        assert_eq!(average_inweight(&t, &set(&t, &["b"]), id("d")).unwrap(), Rational::ZERO);
        assert_eq!(average_inweight(&t, &d, id("a")), Err(Error::VertexInSet(id("a").0)));
        assert_eq!(average_inweight(&t, &VertexSet::empty(), id("a")), Err(Error::EmptySet));
    }

    #[test]
    fn gaps() {
        let t = sample();
        assert_eq!(approval_gap(&t, &set(&t, &["a", "c"])).unwrap(), Rational::new(3, 2));
        assert_eq!(approval_gap(&t, &set(&t, &["a", "d"])).unwrap(), Rational::from_integer(4));
        assert_eq!(approval_gap(&t, &set(&t, &["a"])).unwrap(), Rational::from_integer(3));
        assert_eq!(approval_gap(&t, &VertexSet::full(4)).unwrap(), Rational::ZERO);
        assert_eq!(approval_gap(&t, &set(&t, &["b"])), Err(Error::NotDominating));
    }

    #[test]
    fn maximum_on_sample() {
        let t = sample();
        let w = max_approval_gap(&t, &SearchLimits::default()).unwrap();
        assert_eq!(w.gap, Rational::from_integer(4));
        assert_eq!(w.set, set(&t, &["a", "d"]));
    }

    #[test]
    fn single_vertex() {
        let p = Profile::new(2, Vertices::numbered(1), vec![LinearOrder::identity(1); 3]).unwrap();
        let t = tournament_from_profile(&p);
        let w = max_approval_gap(&t, &SearchLimits::default()).unwrap();
        assert_eq!(w.gap, Rational::ZERO);
        assert_eq!(w.set, VertexSet::full(1));
    }

    #[test]
    fn three_cycle_uniform_weight() {
        for k in 2..=5u32 {
            let arcs = [(0, 1), (1, 2), (2, 0)]
                .map(|(u, v)| Arc { from: VertexId(u), to: VertexId(v), weight: k });
            let t = WeightedTournament::from_arcs(k, Vertices::numbered(3), arcs).unwrap();
            let w = max_approval_gap(&t, &SearchLimits::default()).unwrap();
            assert_eq!(w.gap, Rational::new(k as i64, 2));
            assert_eq!(w.set, VertexSet::new([0, 1]));
        }
    }

    #[test]
    fn fixed_size() {
        let t = sample();
        let lim = SearchLimits::default();
        assert_eq!(max_approval_gap_fixed_size(&t, 0, &lim).unwrap(), Rational::ZERO);
        assert_eq!(max_approval_gap_fixed_size(&t, 1, &lim).unwrap(), Rational::from_integer(3));
        assert_eq!(max_approval_gap_fixed_size(&t, 2, &lim).unwrap(), Rational::from_integer(4));
        assert_eq!(max_approval_gap_fixed_size(&t, 4, &lim).unwrap(), Rational::ZERO);
        assert_eq!(
            max_approval_gap_fixed_size(&t, 5, &lim),
            Err(Error::SizeOutOfRange { j: 5, n: 4 })
        );
    }

    #[test]
    fn minimum_dominating_sets() {
        let lim = SearchLimits::default();
        assert_eq!(min_dominating_set_size(&sample(), &lim).unwrap(), 1);
        for n in 1..8 {
            let p = Profile::new(2, Vertices::numbered(n), vec![LinearOrder::identity(n); 3]).unwrap();
            assert_eq!(min_dominating_set_size(&tournament_from_profile(&p), &lim).unwrap(), 1);
        }
    }

    #[test]
    fn limit_is_enforced() {
        let n = 30;
        let p = Profile::new(1, Vertices::numbered(n), vec![LinearOrder::identity(n)]).unwrap();
        let t = tournament_from_profile(&p);
        assert_eq!(
            max_approval_gap(&t, &SearchLimits::default()),
            Err(Error::OverLimit { n: 30, limit: 26 })
        );
        assert!(min_dominating_set_size(&t, &SearchLimits::default()).is_err());
        assert_eq!(min_dominating_set_size(&t, &SearchLimits::unlimited()).unwrap(), 1);
    }

    #[test]
    fn gosper_enumeration_counts() {
        for n in 0..10usize {
            for j in 0..=n {
                let masks: Vec<u64> = masks_of_size(n, j).collect();
                let expected = (0..j).fold(1usize, |acc, i| acc * (n - i) / (i + 1));
                assert_eq!(masks.len(), expected, "n={n} j={j}");
                assert!(masks.iter().all(|m| m.count_ones() as usize == j && *m < 1 << n));
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn scan_matches_oracle(n in 1usize..9, k in 1u32..4, seed in proptest::collection::vec(any::<u32>(), 36)) {
            let t = random_tournament(n, k, seed);
            let w = max_approval_gap(&t, &SearchLimits::default()).unwrap();
            let (gap, set) = oracle_max(&t);
            prop_assert_eq!(w.gap, gap);
            prop_assert_eq!(&w.set, &set);
            prop_assert_eq!(approval_gap(&t, &w.set).unwrap(), w.gap);
        }

        #[test]
        fn maximum_over_sizes(n in 1usize..9, k in 1u32..4, seed in proptest::collection::vec(any::<u32>(), 36)) {
            let t = random_tournament(n, k, seed);
            let lim = SearchLimits::default();
            let by_size = (0..=n).map(|j| max_approval_gap_fixed_size(&t, j, &lim).unwrap()).max().unwrap();
            prop_assert_eq!(max_approval_gap(&t, &lim).unwrap().gap, by_size);
            prop_assert_eq!(approval_gap(&t, &VertexSet::full(n)).unwrap(), Rational::ZERO);
        }

        /// Arcs between two vertices outside `d` play no part in its gap.
        #[test]
        fn gap_ignores_arcs_outside_the_set(n in 3usize..8, k in 1u32..4, seed in proptest::collection::vec(any::<u32>(), 28), mask in any::<u64>()) {
            let t = random_tournament(n, k, seed);
            let d = VertexSet::from_mask(mask & ((1 << n) - 1));
            let outside = d.complement(n);
            prop_assume!(outside.len() >= 2 && !d.is_empty());
            let (x, y) = (outside.members()[0], outside.members()[1]);
            let flipped: Vec<Arc> = t.arcs().into_iter().map(|a| {
                if (a.from.0, a.to.0) == (x, y) || (a.from.0, a.to.0) == (y, x) {
                    Arc { from: a.to, to: a.from, weight: a.weight }
                } else {
                    a
                }
            }).collect();
            let t2 = WeightedTournament::from_arcs(k, t.vertices().clone(), flipped).unwrap();
            prop_assert_eq!(approval_gap(&t, &d).ok(), approval_gap(&t2, &d).ok());
        }
    }

    #[test]
    fn deterministic_across_thread_counts() {
        let t = random_tournament(16, 3, (0..200u32).map(|i| i.wrapping_mul(2654435761)).collect());
        let a = max_approval_gap(&t, &SearchLimits::default()).unwrap();
        for threads in [1, 2, 4] {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
            let b = pool.install(|| max_approval_gap(&t, &SearchLimits::default()).unwrap());
            assert_eq!(a, b);
        }
    }
}
