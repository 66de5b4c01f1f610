mod common;

use common::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sbraid_core::relations::{
    presentation, random_singular_word, rewrite, RelationFamily, TauChoice,
};
use sbraid_core::{
    degree_vector, eta, expand_britton, gr_equal, to_britton_form, BrittonForm, SingularWord,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn britton_form_round_trips_through_eta(w in (2usize..=5).prop_flat_map(|n| singular_word(n, 16, 2).prop_map(|w| purify(&w)))) {
        let b = to_britton_form(&w).unwrap();
        prop_assert_eq!(b.degree(), w.singular_degree());
        prop_assert!(gr_equal(&eta(&expand_britton(&b)).unwrap(), &eta(&w).unwrap()).unwrap());
    }

    #[test]
    fn britton_segments_are_pure(w in (2usize..=6).prop_flat_map(|n| singular_word(n, 20, 5).prop_map(|w| purify(&w)))) {
        let b = to_britton_form(&w).unwrap();
        let segments = b.segments();
        prop_assert_eq!(segments.len(), b.labels().len() + 1);
        prop_assert!(segments[..segments.len() - 1].iter().all(|s| s.is_pure()));
        prop_assert!(BrittonForm::new(w.strands(), segments.to_vec(), b.labels().to_vec()).is_ok());
    }

    #[test]
    fn labels_only_depend_on_the_prefix_permutation(
        (w, pos) in (3usize..=5).prop_flat_map(|n| (singular_word(n, 12, 3).prop_map(|w| purify(&w)), 0usize..12))
    ) {
        // Inserting σ_i σ_i⁻¹ anywhere changes no label.
        let n = w.strands();
        let pos = pos.min(w.len());
        let mut letters = w.letters().to_vec();
        let pair = SingularWord::from(&sbraid_core::BraidWord::from_signed(n, &[1, -1]).unwrap());
        letters.splice(pos..pos, pair.letters().iter().copied());
        let padded = SingularWord::new(n, letters).unwrap();
        let (a, b) = (to_britton_form(&w).unwrap(), to_britton_form(&padded).unwrap());
        prop_assert_eq!(a.labels(), b.labels());
    }
}

#[test]
fn labels_are_stable_under_relations_that_keep_taus_apart() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1abe1);
    for n in 3..=6 {
        let rels: Vec<_> = presentation(n)
            .into_iter()
            .filter(|r| r.family != RelationFamily::DoubleSingular)
            .collect();
        for _ in 0..60 {
            let sing = rng.gen_range(1..=3);
            let w = purify(&random_singular_word(
                n,
                12,
                sing,
                TauChoice::First,
                &mut rng,
            ));
            let labels = to_britton_form(&w).unwrap().labels().to_vec();
            let mut v = w.clone();
            rewrite(&mut v, &rels, 15, &mut rng);
            assert_eq!(to_britton_form(&v).unwrap().labels(), labels, "{w} -> {v}");
        }
    }
}

#[test]
fn degree_vector_is_preserved_by_every_relation() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xde9);
    for n in 3..=6 {
        let rels = presentation(n);
        for _ in 0..60 {
            let sing = rng.gen_range(1..=3);
            let w = purify(&random_singular_word(
                n,
                12,
                sing,
                TauChoice::First,
                &mut rng,
            ));
            let dv = degree_vector(&to_britton_form(&w).unwrap());
            let mut v = w.clone();
            rewrite(&mut v, &rels, 15, &mut rng);
            assert_eq!(
                degree_vector(&to_britton_form(&v).unwrap()),
                dv,
                "{w} -> {v}"
            );
        }
    }
}
