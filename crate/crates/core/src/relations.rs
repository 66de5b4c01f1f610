//! Defining relations of `SB_n` as rewrite moves, plus seeded word generators
//! for property tests and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::braid::{BraidLetter, BraidWord};
use crate::singular::{SingularLetter, SingularWord};
use crate::transversal::pure_generator;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RelationFamily {
    /// `σ_i σ_i⁻¹ = 1`
    Cancellation,
    /// `σ_i σ_{i+1} σ_i = σ_{i+1} σ_i σ_{i+1}`
    Braid,
    /// `σ_i σ_j = σ_j σ_i` for `j > i + 1`
    FarCommutation,
    /// `σ_2 σ_1² σ_2 τ_1 = τ_1 σ_2 σ_1² σ_2`
    TubeCommutation,
    /// `σ_i τ_1 = τ_1 σ_i` for `i ≠ 2`
    SingularCommutation,
    /// `σ_2σ_3σ_1σ_2 τ_1 σ_2σ_3σ_1σ_2 τ_1 = τ_1 σ_2σ_3σ_1σ_2 τ_1 σ_2σ_3σ_1σ_2`, `n > 3`
    DoubleSingular,
}

impl RelationFamily {
    pub fn is_braid(self) -> bool {
        matches!(
            self,
            RelationFamily::Cancellation | RelationFamily::Braid | RelationFamily::FarCommutation
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub family: RelationFamily,
    pub lhs: Vec<SingularLetter>,
    pub rhs: Vec<SingularLetter>,
}

fn s(i: usize) -> SingularLetter {
    SingularLetter::Sigma(BraidLetter::pos(i))
}

fn si(i: usize) -> SingularLetter {
    SingularLetter::Sigma(BraidLetter::neg(i))
}

const T1: SingularLetter = SingularLetter::Tau(1);

/// Every instance of the monoid presentation over `strands` strands.
pub fn presentation(strands: usize) -> Vec<Relation> {
    let n = strands;
    let mut out = Vec::new();
    let mut add = |family, lhs: Vec<SingularLetter>, rhs: Vec<SingularLetter>| {
        out.push(Relation { family, lhs, rhs })
    };
    for i in 1..n {
        add(RelationFamily::Cancellation, vec![s(i), si(i)], vec![]);
        add(RelationFamily::Cancellation, vec![si(i), s(i)], vec![]);
    }
    for i in 1..n.saturating_sub(1) {
        add(
            RelationFamily::Braid,
            vec![s(i), s(i + 1), s(i)],
            vec![s(i + 1), s(i), s(i + 1)],
        );
    }
    for i in 1..n {
        for j in i + 2..n {
            add(
                RelationFamily::FarCommutation,
                vec![s(i), s(j)],
                vec![s(j), s(i)],
            );
        }
    }
    if n >= 3 {
        let tube = [s(2), s(1), s(1), s(2)];
        let mut lhs = tube.to_vec();
        lhs.push(T1);
        let mut rhs = vec![T1];
        rhs.extend(tube);
        add(RelationFamily::TubeCommutation, lhs, rhs);
    }
    for i in (1..n).filter(|&i| i != 2) {
        add(
            RelationFamily::SingularCommutation,
            vec![s(i), T1],
            vec![T1, s(i)],
        );
    }
    if n > 3 {
        let block = [s(2), s(3), s(1), s(2)];
        let mut lhs = block.to_vec();
        lhs.push(T1);
        lhs.extend(block);
        lhs.push(T1);
        let mut rhs = vec![T1];
        rhs.extend(block);
        rhs.push(T1);
        rhs.extend(block);
        add(RelationFamily::DoubleSingular, lhs, rhs);
    }
    out
}

/// Braid-group relations only.
pub fn braid_presentation(strands: usize) -> Vec<Relation> {
    presentation(strands)
        .into_iter()
        .filter(|r| r.family.is_braid())
        .collect()
}

fn occurrences(hay: &[SingularLetter], needle: &[SingularLetter]) -> Vec<usize> {
    if needle.is_empty() || needle.len() > hay.len() {
        return Vec::new();
    }
    (0..=hay.len() - needle.len())
        .filter(|&i| hay[i..i + needle.len()] == *needle)
        .collect()
}

/// Applies one randomly chosen relation in a random direction at a random
/// matching position. Empty sides are inserted anywhere. Returns `false` if
/// no attempt found a match.
pub fn rewrite_once<R: Rng + ?Sized>(
    letters: &mut Vec<SingularLetter>,
    relations: &[Relation],
    rng: &mut R,
) -> bool {
    for _ in 0..64 {
        let Some(rel) = relations.choose(rng) else {
            return false;
        };
        let (from, to) = if rng.gen_bool(0.5) {
            (&rel.lhs, &rel.rhs)
        } else {
            (&rel.rhs, &rel.lhs)
        };
        if from.is_empty() {
            let at = rng.gen_range(0..=letters.len());
            letters.splice(at..at, to.iter().copied());
            return true;
        }
        let hits = occurrences(letters, from);
        if let Some(&at) = hits.choose(rng) {
            letters.splice(at..at + from.len(), to.iter().copied());
            return true;
        }
    }
    false
}

/// Applies up to `steps` rewrites and returns how many took effect.
pub fn rewrite<R: Rng + ?Sized>(
    w: &mut SingularWord,
    relations: &[Relation],
    steps: usize,
    rng: &mut R,
) -> usize {
    let mut letters = w.letters().to_vec();
    let mut applied = 0;
    for _ in 0..steps {
        if rewrite_once(&mut letters, relations, rng) {
            applied += 1;
        }
    }
    *w = SingularWord::from_letters_unchecked(w.strands(), letters);
    applied
}

pub fn random_braid_word<R: Rng + ?Sized>(strands: usize, len: usize, rng: &mut R) -> BraidWord {
    let letters = (0..len)
        .map(|_| BraidLetter {
            index: rng.gen_range(1..strands),
            positive: rng.gen_bool(0.5),
        })
        .collect();
    BraidWord::from_letters_unchecked(strands, letters)
}

/// Which singular generators a random word may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TauChoice {
    /// Only `τ_1`, the generator of the monoid presentation.
    First,
    Any,
}

/// A word of exactly `len` letters, `singular` of which are `τ`s.
pub fn random_singular_word<R: Rng + ?Sized>(
    strands: usize,
    len: usize,
    singular: usize,
    taus: TauChoice,
    rng: &mut R,
) -> SingularWord {
    let len = len.max(singular);
    let mut slots: Vec<bool> = (0..len).map(|i| i < singular).collect();
    slots.shuffle(rng);
    let letters = slots
        .into_iter()
        .map(|is_tau| {
            if is_tau {
                SingularLetter::Tau(match taus {
                    TauChoice::First => 1,
                    TauChoice::Any => rng.gen_range(1..strands),
                })
            } else {
                SingularLetter::Sigma(BraidLetter {
                    index: rng.gen_range(1..strands),
                    positive: rng.gen_bool(0.5),
                })
            }
        })
        .collect();
    SingularWord::from_letters_unchecked(strands, letters)
}

/// Inserts a random pure generator `a_{k,j}^{±1}` at a random position. The
/// result is never equal to the input, by cancellation in `SG_n`.
pub fn perturb<R: Rng + ?Sized>(w: &SingularWord, rng: &mut R) -> SingularWord {
    let n = w.strands();
    let k = rng.gen_range(1..n);
    let j = rng.gen_range(k..n);
    let mut g = pure_generator(n, k, j);
    if rng.gen_bool(0.5) {
        g = g.inverse();
    }
    let at = rng.gen_range(0..=w.len());
    let mut letters = w.letters().to_vec();
    letters.splice(
        at..at,
        g.letters().iter().copied().map(SingularLetter::Sigma),
    );
    SingularWord::from_letters_unchecked(n, letters)
}
