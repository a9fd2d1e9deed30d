use proptest::prelude::*;
use weylpol_core::partitions::{enumerate_partitions, schur_dimension, slice_decomposition};
use weylpol_core::polarization::{gl_closure, random_group_span};
use weylpol_core::schur::{embed, realize_schur};
use weylpol_core::tableaux::{lr_expand_product, ssyt_enumerate};
use weylpol_core::{FieldSpec, Partition, PrimeField, Rationals};

fn partition(max_size: usize, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_size, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn embedded_schur_module_is_not_enlarged_by_closure(lambda in partition(3, 2), p in prop::sample::select(vec![3u64, 5, 7])) {
        let f = PrimeField::new(p).unwrap();
        let a = lambda.length().max(1);
        let source = realize_schur(&lambda, a, &f).unwrap();
        let image = embed(&source, a + 1).unwrap();
        let closure = gl_closure(&image.image, &image.ambient).unwrap();
        let again = gl_closure(&closure, &image.ambient).unwrap();
        prop_assert!(closure.contains(&image.image).unwrap());
        prop_assert_eq!(&again, &closure);
        let sampled = random_group_span(&image.image, &image.ambient, 3, p).unwrap();
        prop_assert!(closure.contains(&sampled).unwrap());
    }

    #[test]
    fn realized_dimension_matches_count(lambda in partition(3, 3), m in 1usize..=3) {
        let r = realize_schur(&lambda, m, &Rationals).unwrap();
        prop_assert_eq!(r.space.dim(), ssyt_enumerate(&lambda, m).len());
        prop_assert_eq!(schur_dimension(&lambda, m), r.space.dim().into());
    }

    #[test]
    fn lr_product_bookkeeping(lambda in partition(3, 2), mu in partition(3, 2), m in 1usize..=3) {
        let lhs = schur_dimension(&lambda, m) * schur_dimension(&mu, m);
        let rhs: num_bigint::BigUint = lr_expand_product(&lambda, &mu, m)
            .iter()
            .map(|t| schur_dimension(&t.nu, m) * t.multiplicity)
            .sum();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn slicing_is_a_decomposition(d in 0usize..=24, n in 1usize..=5, k in 2usize..=4, pick in any::<prop::sample::Index>()) {
        let all = enumerate_partitions(d, n);
        let lambda = &all[pick.index(all.len())];
        let s = slice_decomposition(lambda, n, k).unwrap();
        prop_assert!(s.check(lambda).holds);
        prop_assert_eq!(s.pieces.iter().map(Partition::size).sum::<usize>(), d);
    }
}

#[test]
fn partitions_and_fields_round_trip_through_text() {
    for s in ["q", "fp:2", "fp:2147483647"] {
        assert_eq!(s.parse::<FieldSpec>().unwrap().to_string(), s);
    }
    let lambda: Partition = "4,2,2".parse().unwrap();
    let json = serde_json::to_string(&lambda).unwrap();
    assert_eq!(json, "[4,2,2]");
    assert_eq!(serde_json::from_str::<Partition>(&json).unwrap(), lambda);
    assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
}
