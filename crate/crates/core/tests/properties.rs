use pathhom::*;
use proptest::prelude::*;

proptest! {
    #[test]
    fn pascal_rule(a in 1u64..200, b in 1i64..200) {
        prop_assert_eq!(binom(a, b), binom(a - 1, b - 1) + binom(a - 1, b));
    }

    #[test]
    fn binomial_symmetry(a in 0u64..300, b in 0i64..300) {
        prop_assume!(b <= a as i64);
        prop_assert_eq!(binom(a, b), binom(a, a as i64 - b));
    }

    #[test]
    fn start_counts_are_mirror_symmetric(n in 1u32..80, k in 1u32..80) {
        let v = hom_start_counts_dp(n, k);
        for j in 1..=k as usize {
            prop_assert_eq!(v.get(j), v.get(k as usize + 1 - j));
        }
        prop_assert_eq!(v.total(), hom_count_closed(n, k));
    }

    #[test]
    fn aw_matches_dp(n in 1u32..70, k in 1u32..70, j in 1u32..70) {
        prop_assume!(j <= k);
        let dp = hom_start_counts_dp(n, k);
        prop_assert_eq!(&hom_j_count_aw(n, k, j), dp.get(j as usize));
    }

    #[test]
    fn encode_decode_round_trip(steps in prop::collection::vec(any::<bool>(), 0..40), k in 1u32..12) {
        let mut images = vec![1u32];
        for up in steps {
            let last = *images.last().unwrap();
            let next = if (up && last < k) || last == 1 { last + 1 } else { last - 1 };
            images.push(next);
        }
        prop_assume!(images.iter().all(|&y| y <= k));
        let f = PathHom::new(images, k).unwrap();
        let w = encode_hom(&f).unwrap();
        prop_assert_eq!(w.len(), f.n() - 1);
        prop_assert_eq!(decode_word(&w, k).unwrap(), f.clone());
        let text = w.to_string();
        prop_assert_eq!(text.parse::<LatticeWord>().unwrap(), w);
    }

    #[test]
    fn partition_text_round_trip(labels in prop::collection::vec(0usize..5, 1..14)) {
        let p = SetPartition::from_labels(&labels);
        let q: SetPartition = p.to_string().parse().unwrap();
        prop_assert_eq!(q, p);
    }

    #[test]
    fn reflection_never_exceeds_free(e in 0u64..40, nn in 0u64..40, t in 0u64..10, s in 0u64..10) {
        let banded = lattice_count_banded(e, nn, BandSpec::new(t, s));
        prop_assert!(banded <= lattice_count_free(e, nn));
    }
}
