//! Property tests over random keys, sequences, and messages.

mod common;

use common::{sorted_basins, union_find_components};
use proptest::prelude::*;
use tsf_core::{
    analyze, chi_square_uniform, decrypt, encrypt, from_balanced_digits, generate_sequence,
    permutation_from_sequence, to_balanced_digits, KeyMatrix, SymbolText,
};

fn key_strategy(k: u32) -> impl Strategy<Value = KeyMatrix> {
    let k_us = k as usize;
    proptest::collection::vec(proptest::collection::vec(-99i64..100, k_us), k_us)
        .prop_map(move |rows| KeyMatrix::new(k, rows).unwrap())
}

proptest! {
    #[test]
    fn encoding_round_trips(k in 2u32..=5, n in 0usize..243) {
        let modulus = 3usize.pow(k);
        prop_assume!(n < modulus);
        let d = to_balanced_digits(n, k).unwrap();
        prop_assert_eq!(from_balanced_digits(&d), n);
    }

    #[test]
    fn sequence_complement_symmetry(key in prop_oneof![key_strategy(3), key_strategy(4)]) {
        let r = generate_sequence(&key).unwrap();
        let n = r.len();
        for i in 0..n {
            prop_assert_eq!(r.values()[n - 1 - i], n - 1 - r.values()[i]);
        }
        prop_assert_eq!(r.values()[(n - 1) / 2], (n - 1) / 2);
    }

    #[test]
    fn key_negation_complements_sequence(key in key_strategy(3)) {
        let r = generate_sequence(&key).unwrap();
        let r_neg = generate_sequence(&key.negated()).unwrap();
        for (a, b) in r.values().iter().zip(r_neg.values()) {
            prop_assert_eq!(a + b, 26);
        }
    }

    #[test]
    fn positive_row_scaling_is_invisible(key in key_strategy(3), row in 0usize..3, scale in 1i64..50) {
        let mut scaled: Vec<Vec<i64>> = key.rows().map(|r| r.to_vec()).collect();
        for v in &mut scaled[row] {
            *v *= scale;
        }
        let scaled_key = KeyMatrix::new(3, scaled).unwrap();
        prop_assert_eq!(
            generate_sequence(&key).unwrap(),
            generate_sequence(&scaled_key).unwrap()
        );
    }

    #[test]
    fn basins_partition_and_match_union_find(key in prop_oneof![key_strategy(3), key_strategy(4)]) {
        let r = generate_sequence(&key).unwrap();
        let p = permutation_from_sequence(&r);
        let mut sorted = p.order().to_vec();
        sorted.sort_unstable();
        prop_assert_eq!(sorted, (0..r.len()).collect::<Vec<_>>());
        prop_assert_eq!(sorted_basins(p.basins()), union_find_components(&r));
    }

    #[test]
    fn cipher_round_trips(
        key in key_strategy(3),
        message in proptest::collection::vec(0usize..27, 0..300),
    ) {
        let subkey = permutation_from_sequence(&generate_sequence(&key).unwrap());
        let plain = SymbolText::new(message, 3).unwrap();
        let cipher = encrypt(&plain, &subkey).unwrap();
        prop_assert_eq!(decrypt(&cipher, &subkey).unwrap(), plain);
    }

    #[test]
    fn cipher_is_position_sensitive(
        key in key_strategy(3),
        symbol in 0usize..27,
        i in 0usize..27,
        j in 0usize..27,
    ) {
        prop_assume!(i != j);
        let subkey = permutation_from_sequence(&generate_sequence(&key).unwrap());
        let message = vec![symbol; 27];
        let plain = SymbolText::new(message, 3).unwrap();
        let cipher = encrypt(&plain, &subkey).unwrap();
        // Different shifts feed different permutation slots.
        prop_assert_ne!(cipher.symbols()[i], cipher.symbols()[j]);
    }

    #[test]
    fn chi_square_is_permutation_invariant(
        mut seq in proptest::collection::vec(0usize..10, 2..80),
        swaps in proptest::collection::vec((0usize..80, 0usize..80), 0..20),
    ) {
        let (chi_before, _, p_before) = chi_square_uniform(&seq, 10).unwrap();
        let len = seq.len();
        for (a, b) in swaps {
            seq.swap(a % len, b % len);
        }
        let (chi_after, _, p_after) = chi_square_uniform(&seq, 10).unwrap();
        prop_assert_eq!(chi_before, chi_after);
        prop_assert_eq!(p_before, p_after);
    }

    #[test]
    fn report_fields_stay_in_bounds(
        seq in proptest::collection::vec(0usize..27, 2..400),
    ) {
        let report = analyze(&seq, 27).unwrap();
        prop_assert!(report.chi_square >= 0.0);
        prop_assert!((0.0..=1.0).contains(&report.p_value));
        prop_assert!(report.repetition_count < seq.len());
        prop_assert!(report.lz_phrase_count <= seq.len());
        prop_assert!(report.pair_points.len() == seq.len() / 2);
        prop_assert!(report.compression_ratio > 0.0 && report.compression_ratio <= 1.5);
    }
}
