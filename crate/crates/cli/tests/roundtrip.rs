use kmajority::{tournament_from_profile, Profile};
use kmajority_cli::format::{parse_ballots, parse_tournament, print_ballots, print_tournament};
use proptest::prelude::*;

fn profile_strategy() -> impl Strategy<Value = Profile> {
    (1usize..=7, 1u32..=3, prop::sample::select(vec!["v", "c", "x_"])).prop_flat_map(|(n, k, prefix)| {
        let names: Vec<String> = (1..=n).map(|i| format!("{prefix}{i}")).collect();
        let voters = 2 * k as usize - 1;
        prop::collection::vec(Just(names).prop_shuffle(), voters)
            .prop_map(move |orders| Profile::from_named_orders(k, &orders).unwrap())
    })
}

proptest! {
    #[test]
    fn ballots_round_trip(p in profile_strategy()) {
        let text = print_ballots(&p);
        let parsed = parse_ballots(&text).unwrap();
        prop_assert_eq!(&parsed, &p);
        prop_assert_eq!(print_ballots(&parsed), text);
    }

    #[test]
    fn tournament_round_trip(p in profile_strategy()) {
        let t = tournament_from_profile(&p);
        let text = print_tournament(&t);
        let parsed = parse_tournament(&text).unwrap();
        prop_assert_eq!(&parsed, &t);
        prop_assert_eq!(print_tournament(&parsed), text);
    }

    #[test]
    fn comments_and_blank_lines_are_ignored(p in profile_strategy()) {
        let text: String = print_ballots(&p).lines().map(|l| format!("# note\n\n  {l}  \n")).collect();
        prop_assert_eq!(parse_ballots(&text).unwrap(), p);
    }

    #[test]
    fn numeric_output_is_exact(p in profile_strategy()) {
        let out = kmajority_cli::commands::gamma("p", &print_ballots(&p), &kmajority_cli::commands::limits(false)).unwrap();
        prop_assert!(!out.contains('.'), "{}", out);
    }
}
