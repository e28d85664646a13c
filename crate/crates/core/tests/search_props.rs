mod common;

use adaptive_search::{binary_search, interpolation_search, linear_search, SortedDataset};
use common::for_each_sorted_array;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn floor_log2(n: usize) -> usize {
    (usize::BITS - 1 - n.leading_zeros()) as usize
}

#[test]
fn exhaustive_small_arrays_agree_with_linear_scan() {
    let mut arrays = 0usize;
    for_each_sorted_array(10, 0, 12, |values| {
        arrays += 1;
        let ds = SortedDataset::new(values.to_vec()).unwrap();
        for target in -1..=13 {
            let oracle = linear_search(values, target);
            for out in [binary_search(&ds, target), interpolation_search(&ds, target)] {
                assert_eq!(out.found(), oracle.found(), "{values:?} target {target}");
                if let Some(i) = out.index {
                    assert_eq!(values[i], target);
                }
                assert!(out.trace.visited().all(|i| i < values.len()));
            }
        }
    });
    // C(23, 10): nondecreasing sequences of length <= 10 over 13 symbols.
    assert_eq!(arrays, 1_144_066);
}

#[test]
fn binary_probe_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in [1usize, 2, 3, 10, 1000, 1 << 20] {
        let mut values: Vec<i64> = (0..n).map(|_| rng.random_range(-(1 << 40)..(1 << 40))).collect();
        values.sort_unstable();
        let ds = SortedDataset::new(values).unwrap();
        let bound = floor_log2(n) + 1;
        for _ in 0..1000 {
            let target = if rng.random_bool(0.5) {
                ds.values()[rng.random_range(0..n)]
            } else {
                rng.random_range(-(1 << 41)..(1 << 41))
            };
            let out = binary_search(&ds, target);
            assert!(out.trace.probes() <= bound, "n={n} probes={}", out.trace.probes());
        }
    }
}

#[test]
fn linear_examines_prefix_up_to_first_match() {
    let out = linear_search(&[5, 5, 5, 6], 5);
    assert_eq!(out.index, Some(0));
    assert_eq!(out.trace.probes(), 1);
    let out = linear_search(&[9, 1, 4], 4);
    assert_eq!(out.index, Some(2));
}

proptest! {
    #[test]
    fn arithmetic_progression_is_one_probe(
        start in -1_000_000_000i64..1_000_000_000,
        step in 1i64..1_000_000,
        len in 2usize..2000,
        pick in any::<prop::sample::Index>(),
    ) {
        let ds = SortedDataset::new((0..len as i64).map(|i| start + i * step).collect()).unwrap();
        let i = pick.index(len);
        let out = interpolation_search(&ds, ds.values()[i]);
        prop_assert_eq!(out.index, Some(i));
        prop_assert_eq!(out.trace.probes(), 1);
    }

    #[test]
    fn interpolation_terminates_and_is_correct(
        mut values in prop::collection::vec(prop_oneof![-20i64..20, any::<i64>()], 0..200),
        targets in prop::collection::vec(prop_oneof![-25i64..25, any::<i64>()], 1..20),
    ) {
        values.sort_unstable();
        let ds = SortedDataset::new(values.clone()).unwrap();
        for t in targets.into_iter().chain(values.iter().copied().take(5)) {
            let out = interpolation_search(&ds, t);
            prop_assert_eq!(out.found(), values.contains(&t));
            if let Some(i) = out.index {
                prop_assert_eq!(values[i], t);
            }
            prop_assert!(out.trace.probes() <= values.len());
        }
    }

    #[test]
    fn kernels_are_pure(mut values in prop::collection::vec(-1000i64..1000, 0..300), target in -1100i64..1100) {
        values.sort_unstable();
        let ds = SortedDataset::new(values).unwrap();
        prop_assert_eq!(binary_search(&ds, target), binary_search(&ds, target));
        prop_assert_eq!(interpolation_search(&ds, target), interpolation_search(&ds, target));
        prop_assert_eq!(linear_search(ds.values(), target), linear_search(ds.values(), target));
    }

    #[test]
    fn all_equal_arrays(len in 1usize..500, v in any::<i64>(), t in any::<i64>()) {
        let ds = SortedDataset::new(vec![v; len]).unwrap();
        let out = interpolation_search(&ds, t);
        prop_assert_eq!(out.found(), t == v);
        prop_assert!(out.trace.probes() <= 1);
    }
}
