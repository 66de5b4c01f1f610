#![allow(dead_code)]

use proptest::prelude::*;
use sbraid_core::{BraidLetter, BraidWord, SingularLetter, SingularWord};

pub fn braid_word(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((1..n, any::<bool>()), 0..=max_len).prop_map(move |v| {
        let letters = v
            .into_iter()
            .map(|(index, positive)| BraidLetter { index, positive })
            .collect();
        BraidWord::new(n, letters).unwrap()
    })
}

pub fn strands_and_word(max_n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_n).prop_flat_map(move |n| braid_word(n, max_len))
}

/// Singular word with at most `max_tau` singular letters drawn from all `τ_i`.
pub fn singular_word(
    n: usize,
    max_len: usize,
    max_tau: usize,
) -> impl Strategy<Value = SingularWord> {
    prop::collection::vec((1..n, 0u8..4), 0..=max_len).prop_map(move |v| {
        let mut taus = 0;
        let letters = v
            .into_iter()
            .map(|(index, kind)| {
                if kind == 0 && taus < max_tau {
                    taus += 1;
                    SingularLetter::Tau(index)
                } else {
                    SingularLetter::Sigma(BraidLetter {
                        index,
                        positive: kind % 2 == 1,
                    })
                }
            })
            .collect();
        SingularWord::new(n, letters).unwrap()
    })
}

/// Right-multiplies by the inverse transversal representative so the result is pure.
pub fn purify(w: &SingularWord) -> SingularWord {
    let rep = sbraid_core::transversal_rep(&w.perm_image()).inverse();
    let mut v = w.clone();
    v.push_braid(&rep);
    v
}
