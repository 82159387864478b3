use hvgrgs::hvg::{Mode, VisibilityGraph};
use hvgrgs::moments::{is_probability, EdgeModel};
use hvgrgs::rgs::{stam_sample, RestrictedGrowthSequence, SetPartition};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Any list of choices folds into a valid restricted growth sequence.
fn rgs_strategy(max_len: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(any::<u32>(), 1..=max_len).prop_map(|choices| {
        let mut max = 0u32;
        choices
            .into_iter()
            .map(|c| {
                let letter = c % (max + 1) + 1;
                max = max.max(letter);
                letter
            })
            .collect()
    })
}

fn word_strategy() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(1u32..=20, 0..300)
}

proptest! {
    #[test]
    fn rgs_round_trips(w in rgs_strategy(40)) {
        let s = RestrictedGrowthSequence::parse(&w).unwrap();
        let p = s.to_partition();
        prop_assert_eq!(RestrictedGrowthSequence::from_partition(&p).unwrap(), s.clone());
        prop_assert_eq!(p.to_string().parse::<SetPartition>().unwrap(), p.clone());
        prop_assert_eq!(s.to_string().parse::<RestrictedGrowthSequence>().unwrap(), s.clone());
        prop_assert_eq!(p.block_count(), s.block_count());
    }

    #[test]
    fn fast_path_matches_reference(w in word_strategy()) {
        for mode in [Mode::Strong, Mode::Weak] {
            prop_assert_eq!(VisibilityGraph::build(&w, mode), VisibilityGraph::build_reference(&w, mode));
        }
    }

    #[test]
    fn strong_edges_are_weak_edges(w in word_strategy()) {
        let strong = VisibilityGraph::build(&w, Mode::Strong);
        let weak = VisibilityGraph::build(&w, Mode::Weak);
        for &(i, j) in strong.edges() {
            prop_assert!(weak.contains(i, j));
        }
        for k in 1..w.len() {
            prop_assert!(strong.contains(k, k + 1));
        }
    }

    #[test]
    fn strong_edges_never_cross(w in word_strategy()) {
        let g = VisibilityGraph::build(&w, Mode::Strong);
        let e = g.edges();
        for &(i, j) in e {
            for &(k, l) in e {
                prop_assert!(!(i < k && k < j && j < l), "({}, {}) crosses ({}, {})", i, j, k, l);
            }
        }
    }

    #[test]
    fn degrees_sum_to_twice_edges(w in word_strategy(), weak in any::<bool>()) {
        let mode = if weak { Mode::Weak } else { Mode::Strong };
        let g = VisibilityGraph::build(&w, mode);
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
    }

    #[test]
    fn sampled_sequences_are_valid(n in 1usize..60, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = stam_sample(n, &mut rng);
        prop_assert_eq!(s.len(), n);
        prop_assert!(RestrictedGrowthSequence::parse(s.letters()).is_ok());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn closed_forms_are_probabilities(n in 2usize..25, a in any::<usize>(), b in any::<usize>()) {
        let i = a % (n - 1) + 1;
        let j = i + 1 + b % (n - i);
        let model = EdgeModel::new(n);
        let s = model.strong_edge_prob(i, j).unwrap().value;
        let w = model.weak_edge_prob(i, j).unwrap().value;
        prop_assert!(is_probability(&s));
        prop_assert!(is_probability(&w));
        prop_assert!(s <= w);
    }
}
