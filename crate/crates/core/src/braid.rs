use std::fmt;

use crate::error::{check_index, check_same, check_strands, Result};
use crate::permutation::Permutation;

/// An Artin generator `σ_i` or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidLetter {
    pub index: usize,
    pub positive: bool,
}

impl BraidLetter {
    pub fn pos(index: usize) -> Self {
        BraidLetter {
            index,
            positive: true,
        }
    }

    pub fn neg(index: usize) -> Self {
        BraidLetter {
            index,
            positive: false,
        }
    }

    pub fn inverse(self) -> Self {
        BraidLetter {
            index: self.index,
            positive: !self.positive,
        }
    }

    pub fn sign(self) -> i32 {
        if self.positive {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for BraidLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "s{}", self.index)
        } else {
            write!(f, "s{}^-1", self.index)
        }
    }
}

/// A word in the Artin generators of `B_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn empty(strands: usize) -> Self {
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn new(strands: usize, letters: Vec<BraidLetter>) -> Result<Self> {
        check_strands(strands)?;
        for l in &letters {
            check_index(l.index, strands)?;
        }
        Ok(BraidWord { strands, letters })
    }

    /// Builds a word from signed indices: `2` is `σ_2`, `-2` is `σ_2⁻¹`.
    pub fn from_signed(strands: usize, signed: &[i32]) -> Result<Self> {
        let letters = signed
            .iter()
            .map(|&s| BraidLetter {
                index: s.unsigned_abs() as usize,
                positive: s > 0,
            })
            .collect();
        Self::new(strands, letters)
    }

    pub(crate) fn from_letters_unchecked(strands: usize, letters: Vec<BraidLetter>) -> Self {
        BraidWord { strands, letters }
    }

    /// Positive word `σ_{i_1} σ_{i_2} ⋯`.
    pub(crate) fn positive(strands: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        BraidWord {
            strands,
            letters: indices.into_iter().map(BraidLetter::pos).collect(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, letter: BraidLetter) {
        debug_assert!(letter.index >= 1 && letter.index < self.strands);
        self.letters.push(letter);
    }

    pub fn extend_from(&mut self, other: &BraidWord) {
        debug_assert_eq!(self.strands, other.strands);
        self.letters.extend_from_slice(&other.letters);
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        check_same(self.strands, other.strands)?;
        let mut out = self.clone();
        out.letters.extend_from_slice(&other.letters);
        Ok(out)
    }

    /// Reverses the order and flips every sign.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn pow(&self, exp: i32) -> BraidWord {
        let base = if exp < 0 {
            self.inverse()
        } else {
            self.clone()
        };
        let mut out = BraidWord::empty(self.strands);
        for _ in 0..exp.unsigned_abs() {
            out.extend_from(&base);
        }
        out
    }

    /// Removes adjacent cancelling pairs `σ_i σ_i⁻¹` and `σ_i⁻¹ σ_i` until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut stack: Vec<BraidLetter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match stack.last() {
                Some(&top) if top == l.inverse() => {
                    stack.pop();
                }
                _ => stack.push(l),
            }
        }
        BraidWord {
            strands: self.strands,
            letters: stack,
        }
    }

    /// Image in the symmetric group; signs are ignored.
    pub fn permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.strands);
        for l in &self.letters {
            p.then_transposition(l.index);
        }
        p
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().is_identity()
    }

    /// Exponent sum, an invariant of `B_n`.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign() as i64).sum()
    }
}

impl fmt::Display for BraidWord {
    /// Canonical token form: space separated letters, `e` for the empty word.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

pub fn free_reduce(w: &BraidWord) -> BraidWord {
    w.free_reduce()
}

pub fn permutation_of(w: &BraidWord) -> Permutation {
    w.permutation()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, s: &[i32]) -> BraidWord {
        BraidWord::from_signed(n, s).unwrap()
    }

    #[test]
    fn free_reduction() {
        assert!(w(2, &[1, -1]).free_reduce().is_empty());
        assert!(w(2, &[]).free_reduce().is_empty());
        assert_eq!(w(3, &[1, 2, -2, 1]).free_reduce(), w(3, &[1, 1]));
        assert_eq!(w(3, &[1, 2, -2, -1, 2]).free_reduce(), w(3, &[2]));
    }

    #[test]
    fn permutation_examples() {
        assert!(w(3, &[]).permutation().is_identity());
        assert_eq!(w(2, &[1]).permutation().one_line(), vec![2, 1]);
        assert_eq!(w(3, &[1, 2]).permutation().one_line(), vec![3, 1, 2]);
        assert_eq!(w(3, &[-1, 2]).permutation(), w(3, &[1, -2]).permutation());
    }

    #[test]
    fn index_validation() {
        assert!(BraidWord::from_signed(3, &[3]).is_err());
        assert!(BraidWord::from_signed(3, &[0]).is_err());
        assert!(BraidWord::from_signed(1, &[]).is_err());
    }

    #[test]
    fn inverse_reverses_and_flips() {
        assert_eq!(w(4, &[1, -2, 3]).inverse(), w(4, &[-3, 2, -1]));
        assert!(w(4, &[1, -2, 3])
            .concat(&w(4, &[1, -2, 3]).inverse())
            .unwrap()
            .free_reduce()
            .is_empty());
    }
}
