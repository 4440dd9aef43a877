mod common;

use kmajority::clockwise::{clockwise_tournament, ClockwiseSpec};
use kmajority::constructions::{gamma_realization, min_vertices_formula};
use kmajority::search::{is_realizable, min_vertices_search, MinVertices, Realizability, SearchBudget};
use kmajority::{
    approval_gap, max_approval_gap, tournament_from_profile, Profile, Rational, SearchLimits, VertexId, VertexSet,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn profiles(n: std::ops::RangeInclusive<usize>, k: std::ops::RangeInclusive<u32>) -> impl Strategy<Value = Profile> {
    (n, k, any::<u64>()).prop_map(|(n, k, seed)| common::random_profile(&mut ChaCha8Rng::seed_from_u64(seed), n, k))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn preference_counts_are_complementary(p in profiles(2..=7, 1..=4)) {
        for u in 0..p.n() {
            for v in (0..p.n()).filter(|&v| v != u) {
                let (a, b) = (p.preference_count(VertexId(u), VertexId(v)).unwrap(), p.preference_count(VertexId(v), VertexId(u)).unwrap());
                prop_assert_eq!(a + b, 2 * p.k() - 1);
            }
        }
    }

    #[test]
    fn tournaments_have_one_majority_arc_per_pair(p in profiles(1..=8, 1..=4)) {
        let t = tournament_from_profile(&p);
        let arcs = t.arcs();
        prop_assert_eq!(arcs.len(), p.n() * (p.n() - 1) / 2);
        prop_assert!(arcs.iter().all(|a| a.weight >= p.k() && a.weight < 2 * p.k()));
        let w = common::weights(&p);
        for a in arcs {
            prop_assert_eq!(w[a.from.0][a.to.0], a.weight);
        }
    }

    #[test]
    fn whole_vertex_set_has_zero_gap(p in profiles(1..=8, 1..=3)) {
        let t = tournament_from_profile(&p);
        prop_assert_eq!(approval_gap(&t, &VertexSet::full(p.n())).unwrap(), Rational::ZERO);
    }

    #[test]
    fn gap_lies_between_half_k_and_2k_minus_1(p in profiles(2..=10, 2..=4)) {
        let k = p.k() as i64;
        let g = max_approval_gap(&tournament_from_profile(&p), &SearchLimits::default()).unwrap();
        prop_assert!(g.gap >= Rational::new(k, 2) && g.gap <= Rational::from_integer(2 * k - 1), "{}", g.gap);
    }

    #[test]
    fn search_matches_reference(p in profiles(1..=9, 1..=3)) {
        let t = tournament_from_profile(&p);
        let g = max_approval_gap(&t, &SearchLimits::default()).unwrap();
        let w = common::weights(&p);
        prop_assert_eq!(g.gap, common::max_gap(&w));
        prop_assert_eq!(common::gap(&w, common::mask_of(&g.set)), Some(g.gap));
    }

    #[test]
    fn ballots_of_any_small_profile_are_recovered(p in profiles(1..=4, 2..=3)) {
        let t = tournament_from_profile(&p);
        match is_realizable(&t, &SearchBudget::default()).unwrap() {
            Realizability::Realizable(found) => prop_assert_eq!(tournament_from_profile(&found), t),
            Realizability::NotRealizable => prop_assert!(false, "profile reported unrealizable"),
        }
    }
}

#[test]
fn gamma_constructions_at_desk_scale() {
    let mut checked = 0;
    for k in 2..=3i64 {
        let values: std::collections::BTreeSet<Rational> = (1..=8i64)
            .flat_map(|y| (0..=(2 * k - 1) * y).map(move |x| Rational::new(x, y)))
            .filter(|&q| q >= Rational::new(k, 2) && q <= Rational::from_integer(2 * k - 1))
            .collect();
        for q in values {
            let p = gamma_realization(q, k as u32).unwrap();
            if p.n() > 24 {
                continue;
            }
            let g = max_approval_gap(&tournament_from_profile(&p), &SearchLimits::default()).unwrap();
            assert_eq!(g.gap, q, "k={k} q={q} n={}", p.n());
            checked += 1;
        }
    }
    assert!(checked >= 60, "only {checked} values fit");
}

#[test]
fn minimum_sizes_agree_with_formula() {
    let budget = SearchBudget::default();
    for k in 2..=3u32 {
        let top = 2 * (2 * k as i64 - 1);
        for two_q in k as i64..=top {
            let q = Rational::new(two_q, 2);
            let Some(m) = min_vertices_formula(q, k).unwrap() else { continue };
            let found = min_vertices_search(q, k, 3, &budget).unwrap();
            if m <= 3 {
                assert_eq!(found, MinVertices::Exact(m as usize), "q={q} k={k}");
            } else {
                assert_eq!(found, MinVertices::GreaterThan(3), "q={q} k={k}");
            }
        }
    }
}

#[test]
fn odd_clockwise_tournaments_are_regular() {
    for n in (1..=41).step_by(2) {
        let t = clockwise_tournament(ClockwiseSpec::new(n).unwrap());
        for v in 0..n {
            assert_eq!(t.out_degree(v), (n - 1) / 2);
            assert_eq!(t.in_degree(v), (n - 1) / 2);
        }
    }
}
