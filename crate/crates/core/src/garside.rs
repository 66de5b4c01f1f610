//! Left-greedy Garside normal form over permutation-braid factors.
//!
//! Every braid is written uniquely as `Δ^inf · A_1 ⋯ A_ℓ` where each `A_i` is a
//! permutation braid different from `1` and `Δ`, and every adjacent pair is
//! left-weighted: the starting set of `A_{i+1}` is contained in the finishing
//! set of `A_i`.

use std::fmt;

use crate::braid::{BraidLetter, BraidWord};
use crate::error::{check_same, Result};
use crate::permutation::{one_line_string, Permutation};
use crate::stats;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GarsideNormalForm {
    strands: usize,
    inf: i64,
    factors: Vec<Permutation>,
}

/// `i` (0-based) is in the finishing set of the simple braid whose inverse
/// permutation is `inv`: the strands ending at `i` and `i + 1` have crossed.
#[inline]
fn finishes_with(inv: &[u8], i: usize) -> bool {
    inv[i] > inv[i + 1]
}

/// `i` (0-based) is in the starting set: the strands starting at `i`, `i + 1` cross.
#[inline]
fn starts_with(p: &[u8], i: usize) -> bool {
    p[i] > p[i + 1]
}

/// Makes the pair `(a, b)` left-weighted by sliding crossings from the front of
/// `b` onto the back of `a`. Returns whether anything moved.
fn left_weight(a: &mut Permutation, b: &mut Permutation) -> bool {
    let n = a.len();
    let mut a_inv = a.inverse();
    let mut moved = false;
    'scan: loop {
        let bi = b.images_mut();
        for i in 0..n - 1 {
            if starts_with(bi, i) && !finishes_with(a_inv.images(), i) {
                bi.swap(i, i + 1);
                a_inv.images_mut().swap(i, i + 1);
                moved = true;
                continue 'scan;
            }
        }
        break;
    }
    if moved {
        *a = a_inv.inverse();
    }
    moved
}

/// Simple braid `Δ σ_i⁻¹` as a permutation: the half twist followed by `s_i`.
fn delta_over(n: usize, i: usize) -> Permutation {
    let mut p = Permutation::reversal(n);
    p.then_transposition(i);
    p
}

impl GarsideNormalForm {
    pub fn identity(strands: usize) -> Self {
        GarsideNormalForm {
            strands,
            inf: 0,
            factors: Vec::new(),
        }
    }

    pub fn delta_power(strands: usize, k: i64) -> Self {
        GarsideNormalForm {
            strands,
            inf: k,
            factors: Vec::new(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn inf(&self) -> i64 {
        self.inf
    }

    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    /// Appends a simple factor on the right and restores left-weightedness.
    fn push_simple(&mut self, simple: Permutation) {
        if simple.is_identity() {
            return;
        }
        self.factors.push(simple);
        let mut i = self.factors.len() - 1;
        while i > 0 {
            let (head, tail) = self.factors.split_at_mut(i);
            if !left_weight(&mut head[i - 1], &mut tail[0]) {
                break;
            }
            i -= 1;
        }
    }

    /// Absorbs leading `Δ` factors into the infimum and drops trailing identities.
    fn tidy(&mut self) {
        while self.factors.last().is_some_and(Permutation::is_identity) {
            self.factors.pop();
        }
        let deltas = self.factors.iter().take_while(|f| f.is_reversal()).count();
        if deltas > 0 {
            self.factors.drain(..deltas);
            self.inf += deltas as i64;
        }
    }

    /// Product `self · other` in `B_n`, computed directly on normal forms.
    pub fn mul(&self, other: &GarsideNormalForm) -> Result<GarsideNormalForm> {
        check_same(self.strands, other.strands)?;
        stats::count_normal_form();
        // A · Δ^k = Δ^k · flip^k(A)
        let mut out = GarsideNormalForm {
            strands: self.strands,
            inf: self.inf + other.inf,
            factors: if other.inf.rem_euclid(2) == 1 {
                self.factors.iter().map(Permutation::flip).collect()
            } else {
                self.factors.clone()
            },
        };
        for f in &other.factors {
            out.push_simple(f.clone());
        }
        out.tidy();
        Ok(out)
    }

    /// Inverse element: `(Δ^k A_1 ⋯ A_ℓ)⁻¹ = A_ℓ⁻¹ ⋯ A_1⁻¹ Δ^{-k}`, with each
    /// `A⁻¹ = Δ⁻¹ (Δ A⁻¹)`.
    pub fn inverse(&self) -> GarsideNormalForm {
        stats::count_normal_form();
        let n = self.strands;
        let l = self.factors.len() as i64;
        let mut out = GarsideNormalForm::delta_power(n, -l - self.inf);
        // Δ A⁻¹ has permutation rev · A⁻¹; moving the Δ⁻¹'s left flips the
        // factor by the number of Δ⁻¹ standing to its right plus the trailing Δ^{-k}.
        for (pos, a) in self.factors.iter().rev().enumerate() {
            let complement = Permutation::reversal(n).then(&a.inverse());
            let remaining = (l - 1 - pos as i64) + self.inf;
            let simple = if remaining.rem_euclid(2) == 1 {
                complement.flip()
            } else {
                complement
            };
            out.push_simple(simple);
        }
        out.tidy();
        out
    }

    /// A word representing this normal form: `Δ^inf` followed by positive
    /// realizations of the factors.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let delta = BraidWord::positive(n, Permutation::reversal(n).positive_word_indices());
        let mut w = delta.pow(self.inf as i32);
        for f in &self.factors {
            for i in f.positive_word_indices() {
                w.push(BraidLetter::pos(i));
            }
        }
        w
    }

    /// Canonical key `Δ^k | p_1 | p_2 | …` with factors in one-line notation.
    pub fn key(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for GarsideNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ^{}", self.inf)?;
        for p in &self.factors {
            write!(f, " | {}", one_line_string(p))?;
        }
        Ok(())
    }
}

/// Left-greedy normal form of a braid word.
pub fn normal_form(w: &BraidWord) -> GarsideNormalForm {
    stats::count_normal_form();
    let n = w.strands();
    // σ_i⁻¹ = Δ⁻¹ (Δ σ_i⁻¹); collecting every Δ⁻¹ at the front flips each
    // simple once per Δ⁻¹ that stood to its right.
    let negatives = w.letters().iter().filter(|l| !l.positive).count();
    let mut nf = GarsideNormalForm::delta_power(n, -(negatives as i64));
    let mut after = negatives;
    for l in w.letters() {
        let simple = if l.positive {
            Permutation::transposition(n, l.index)
        } else {
            after -= 1;
            delta_over(n, l.index)
        };
        nf.push_simple(if after % 2 == 1 {
            simple.flip()
        } else {
            simple
        });
    }
    nf.tidy();
    nf
}

/// Decides `u = v` in `B_n` by comparing normal forms.
pub fn braid_equal(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    check_same(u.strands(), v.strands())?;
    Ok(normal_form(u) == normal_form(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, s: &[i32]) -> BraidWord {
        BraidWord::from_signed(n, s).unwrap()
    }

    #[test]
    fn delta_three() {
        let nf = normal_form(&w(3, &[1, 2, 1]));
        assert_eq!(nf.inf(), 1);
        assert!(nf.factors().is_empty());
        assert_eq!(nf.key(), "Δ^1");
    }

    #[test]
    fn empty_word() {
        assert!(normal_form(&w(3, &[])).is_identity());
        assert_eq!(normal_form(&w(3, &[])).key(), "Δ^0");
    }

    #[test]
    fn single_inverse_generator() {
        let nf = normal_form(&w(3, &[-1]));
        assert_eq!(nf.inf(), -1);
        assert_eq!(nf.factors(), &[w(3, &[1, 2]).permutation()]);
        assert_eq!(nf.key(), "Δ^-1 | 312");
    }

    #[test]
    fn braid_relation_and_cancellation() {
        assert!(braid_equal(&w(3, &[1, 2, 1]), &w(3, &[2, 1, 2])).unwrap());
        assert!(braid_equal(&w(3, &[1, -1]), &w(3, &[])).unwrap());
        assert!(!braid_equal(&w(3, &[1]), &w(3, &[2])).unwrap());
        assert!(braid_equal(&w(3, &[1]), &w(4, &[1])).is_err());
    }

    #[test]
    fn far_commutation() {
        assert!(braid_equal(&w(5, &[1, 3, -4]), &w(5, &[3, -4, 1])).unwrap());
        assert!(!braid_equal(&w(5, &[1, 2]), &w(5, &[2, 1])).unwrap());
    }

    #[test]
    fn products_match_concatenation() {
        let a = w(4, &[1, -2, 3, 3, -1, 2]);
        let b = w(4, &[-3, -3, 2, 1, -2]);
        let prod = normal_form(&a).mul(&normal_form(&b)).unwrap();
        assert_eq!(prod, normal_form(&a.concat(&b).unwrap()));
        assert_eq!(normal_form(&a).inverse(), normal_form(&a.inverse()));
    }

    #[test]
    fn to_word_round_trips() {
        let a = w(4, &[1, -2, 3, 3, -1, 2, -3]);
        let nf = normal_form(&a);
        assert_eq!(normal_form(&nf.to_word()), nf);
    }

    #[test]
    fn factors_are_proper_and_left_weighted() {
        let nf = normal_form(&w(4, &[1, 2, 3, -1, 2, 2, -3, 1, 3, 2, 1]));
        for f in nf.factors() {
            assert!(!f.is_identity() && !f.is_reversal());
        }
        for pair in nf.factors().windows(2) {
            let inv = pair[0].inverse();
            for i in 0..3 {
                if starts_with(pair[1].images(), i) {
                    assert!(finishes_with(inv.images(), i));
                }
            }
        }
    }
}
