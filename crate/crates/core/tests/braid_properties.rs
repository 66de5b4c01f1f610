mod common;

use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sbraid_core::relations::{braid_presentation, random_braid_word, rewrite};
use sbraid_core::transversal::{center, delta};
use sbraid_core::{
    braid_equal, normal_form, permutation_of, transversal_rep, BraidWord, Permutation, SingularWord,
};

proptest! {
    #[test]
    fn permutation_is_a_homomorphism(
        (u, v) in (2usize..=6).prop_flat_map(|n| (braid_word(n, 20), braid_word(n, 20)))
    ) {
        let uv = u.concat(&v).unwrap();
        prop_assert_eq!(permutation_of(&uv), permutation_of(&u).then(&permutation_of(&v)));
    }

    #[test]
    fn word_times_inverse_is_trivial(w in strands_and_word(6, 30)) {
        let ww = w.concat(&w.inverse()).unwrap();
        prop_assert!(normal_form(&ww).is_identity());
    }

    #[test]
    fn free_reduction_preserves_the_element(w in strands_and_word(5, 30)) {
        prop_assert_eq!(normal_form(&w.free_reduce()), normal_form(&w));
    }

    #[test]
    fn normal_form_is_idempotent(w in strands_and_word(6, 30)) {
        let nf = normal_form(&w);
        prop_assert_eq!(normal_form(&nf.to_word()), nf);
    }

    #[test]
    fn normal_form_products_agree_with_concatenation(
        (u, v) in (2usize..=5).prop_flat_map(|n| (braid_word(n, 20), braid_word(n, 20)))
    ) {
        let direct = normal_form(&u.concat(&v).unwrap());
        prop_assert_eq!(normal_form(&u).mul(&normal_form(&v)).unwrap(), direct);
        prop_assert_eq!(normal_form(&u).inverse(), normal_form(&u.inverse()));
    }

    #[test]
    fn exponent_sum_and_permutation_are_invariants(
        (u, v) in (3usize..=5).prop_flat_map(|n| (braid_word(n, 12), braid_word(n, 12)))
    ) {
        if braid_equal(&u, &v).unwrap() {
            prop_assert_eq!(u.exponent_sum(), v.exponent_sum());
            prop_assert_eq!(u.permutation(), v.permutation());
        }
    }
}

#[test]
fn normal_form_survives_random_relation_rewrites() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_b001);
    let mut trials = 0;
    for n in 2..=6 {
        let rels = braid_presentation(n);
        for _ in 0..250 {
            let base = random_braid_word(n, 15, &mut rng);
            let key = normal_form(&base);
            let mut w = SingularWord::from(&base);
            rewrite(&mut w, &rels, 20, &mut rng);
            assert_eq!(normal_form(&w.as_braid().unwrap()), key, "{base} -> {w}");
            trials += 1;
        }
    }
    assert!(trials >= 1000);
}

fn all_permutations(n: usize) -> Vec<Permutation> {
    fn go(v: &mut Vec<usize>, i: usize, out: &mut Vec<Permutation>) {
        if i == v.len() {
            out.push(Permutation::from_one_line(v).unwrap());
            return;
        }
        for j in i..v.len() {
            v.swap(i, j);
            go(v, i + 1, out);
            v.swap(i, j);
        }
    }
    let mut out = Vec::new();
    go(&mut (1..=n).collect(), 0, &mut out);
    out
}

#[test]
fn transversal_is_sound_and_injective_up_to_five_strands() {
    for n in 2..=5 {
        let perms = all_permutations(n);
        let mut reps = std::collections::HashSet::new();
        for p in &perms {
            let rep = transversal_rep(p);
            assert_eq!(permutation_of(&rep), *p);
            assert!(rep.letters().iter().all(|l| l.positive));
            reps.insert(rep);
        }
        assert_eq!(reps.len(), perms.len());
    }
}

#[test]
fn center_is_central() {
    for n in 3..=5 {
        let c = center(n);
        for i in 1..n {
            let s = BraidWord::from_signed(n, &[i as i32]).unwrap();
            assert!(braid_equal(&c.concat(&s).unwrap(), &s.concat(&c).unwrap()).unwrap());
        }
        assert!(braid_equal(&c, &delta(n).pow(2)).unwrap());
    }
}
