use std::fmt;

use crate::braid::{BraidLetter, BraidWord};
use crate::error::{check_index, check_same, check_strands, Error, Result};
use crate::permutation::Permutation;

/// A letter of a singular braid word.
///
/// `TauInv` exists so that input containing `τ⁻¹` can be represented and
/// reported; every decision routine rejects it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SingularLetter {
    Sigma(BraidLetter),
    Tau(usize),
    TauInv(usize),
}

impl SingularLetter {
    pub fn index(self) -> usize {
        match self {
            SingularLetter::Sigma(l) => l.index,
            SingularLetter::Tau(i) | SingularLetter::TauInv(i) => i,
        }
    }

    pub fn is_singular(self) -> bool {
        !matches!(self, SingularLetter::Sigma(_))
    }
}

impl From<BraidLetter> for SingularLetter {
    fn from(l: BraidLetter) -> Self {
        SingularLetter::Sigma(l)
    }
}

impl fmt::Display for SingularLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SingularLetter::Sigma(l) => write!(f, "{l}"),
            SingularLetter::Tau(i) => write!(f, "t{i}"),
            SingularLetter::TauInv(i) => write!(f, "t{i}^-1"),
        }
    }
}

/// A word in `σ_i^{±1}` and `τ_i` over a fixed number of strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SingularWord {
    strands: usize,
    letters: Vec<SingularLetter>,
}

impl SingularWord {
    pub fn empty(strands: usize) -> Self {
        SingularWord {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn new(strands: usize, letters: Vec<SingularLetter>) -> Result<Self> {
        check_strands(strands)?;
        for l in &letters {
            check_index(l.index(), strands)?;
        }
        Ok(SingularWord { strands, letters })
    }

    pub(crate) fn from_letters_unchecked(strands: usize, letters: Vec<SingularLetter>) -> Self {
        SingularWord { strands, letters }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[SingularLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of singular letters, `|w|_s`.
    pub fn singular_degree(&self) -> usize {
        self.letters.iter().filter(|l| l.is_singular()).count()
    }

    pub fn has_inverse_tau(&self) -> bool {
        self.letters
            .iter()
            .any(|l| matches!(l, SingularLetter::TauInv(_)))
    }

    pub fn ensure_positive(&self) -> Result<()> {
        match self
            .letters
            .iter()
            .find(|l| matches!(l, SingularLetter::TauInv(_)))
        {
            Some(l) => Err(Error::InverseSingular(l.index())),
            None => Ok(()),
        }
    }

    pub fn push(&mut self, letter: SingularLetter) {
        self.letters.push(letter);
    }

    pub fn push_braid(&mut self, w: &BraidWord) {
        debug_assert_eq!(self.strands, w.strands());
        self.letters
            .extend(w.letters().iter().copied().map(SingularLetter::Sigma));
    }

    pub fn extend_from(&mut self, other: &SingularWord) {
        debug_assert_eq!(self.strands, other.strands);
        self.letters.extend_from_slice(&other.letters);
    }

    pub fn concat(&self, other: &SingularWord) -> Result<SingularWord> {
        check_same(self.strands, other.strands)?;
        let mut out = self.clone();
        out.letters.extend_from_slice(&other.letters);
        Ok(out)
    }

    /// Group inverse in `SG_n`; `τ` becomes `τ⁻¹`.
    pub fn inverse(&self) -> SingularWord {
        let letters = self
            .letters
            .iter()
            .rev()
            .map(|l| match *l {
                SingularLetter::Sigma(b) => SingularLetter::Sigma(b.inverse()),
                SingularLetter::Tau(i) => SingularLetter::TauInv(i),
                SingularLetter::TauInv(i) => SingularLetter::Tau(i),
            })
            .collect();
        SingularWord {
            strands: self.strands,
            letters,
        }
    }

    /// The braid word if the word has no singular letters.
    pub fn as_braid(&self) -> Option<BraidWord> {
        let letters = self
            .letters
            .iter()
            .map(|l| match l {
                SingularLetter::Sigma(b) => Some(*b),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()?;
        Some(BraidWord::from_letters_unchecked(self.strands, letters))
    }

    /// Image in `Σ_n`: every letter, singular or not, contributes `s_index`.
    pub fn perm_image(&self) -> Permutation {
        let mut p = Permutation::identity(self.strands);
        for l in &self.letters {
            p.then_transposition(l.index());
        }
        p
    }

    pub fn is_pure(&self) -> bool {
        self.perm_image().is_identity()
    }
}

impl From<&BraidWord> for SingularWord {
    fn from(w: &BraidWord) -> Self {
        let mut s = SingularWord::empty(w.strands());
        s.push_braid(w);
        s
    }
}

impl fmt::Display for SingularWord {
    /// Canonical token form; `e` for the empty word.
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

pub fn perm_image(w: &SingularWord) -> Permutation {
    w.perm_image()
}
