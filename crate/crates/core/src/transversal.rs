//! Coset representatives modulo the pure singular group and the named
//! generators of its presentation.

use std::fmt;

use crate::braid::{BraidLetter, BraidWord};
use crate::error::{check_strands, Error, Result};
use crate::permutation::Permutation;
use crate::singular::{SingularLetter, SingularWord};

/// `M_{i,j} = σ_i σ_{i+1} ⋯ σ_j`.
fn chain(strands: usize, i: usize, j: usize) -> BraidWord {
    BraidWord::positive(strands, i..=j)
}

/// Canonical coset representative with permutation `p`.
///
/// The word is `M_{n-1,j_{n-1}} ⋯ M_{2,j_2} M_{1,j_1}` where each block may be
/// empty; level `i` sends the strand at position `i` to `j_i + 1`. Reading the
/// blocks from the right follows the chain `SG_n ⊃ SGD_{n,1} ⊃ ⋯ ⊃ SGP_n`.
pub fn transversal_rep(p: &Permutation) -> BraidWord {
    let n = p.len();
    let mut rest = p.clone();
    let mut blocks = Vec::with_capacity(n);
    for i in 1..n {
        let target = rest.apply(i);
        debug_assert!(target >= i);
        if target > i {
            let block = chain(n, i, target - 1);
            rest = rest.then(&block.permutation().inverse());
            blocks.push(block);
        }
    }
    debug_assert!(rest.is_identity());
    let mut w = BraidWord::empty(n);
    for b in blocks.iter().rev() {
        w.extend_from(b);
    }
    w
}

/// Named generators of `B_n`, `SG_n` and `SGP_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    /// Pure braid generator `a_{k,j}`, strands `k` and `j + 1` twist once.
    A(usize, usize),
    /// Singular pure generator `X_{k,j}`, strands `k` and `j + 1` meet once.
    X(usize, usize),
    /// Transversal block `M_{i,j}`.
    M(usize, usize),
    /// Positive half twist `Δ_n`.
    Delta,
    /// Central element `c_n`.
    Center,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::A(k, j) => write!(f, "a({k},{j})"),
            Generator::X(k, j) => write!(f, "X({k},{j})"),
            Generator::M(i, j) => write!(f, "M({i},{j})"),
            Generator::Delta => f.write_str("Delta"),
            Generator::Center => f.write_str("c"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expansion {
    Braid(BraidWord),
    Singular(SingularWord),
}

impl Expansion {
    pub fn to_singular(&self) -> SingularWord {
        match self {
            Expansion::Braid(b) => SingularWord::from(b),
            Expansion::Singular(s) => s.clone(),
        }
    }

    pub fn braid(self) -> Option<BraidWord> {
        match self {
            Expansion::Braid(b) => Some(b),
            Expansion::Singular(_) => None,
        }
    }
}

fn check_pair(g: Generator, k: usize, j: usize, strands: usize) -> Result<()> {
    if k == 0 || k > j || j >= strands {
        return Err(Error::InvalidGenerator {
            name: g.to_string(),
            reason: format!("need 1 <= first <= second <= {}", strands - 1),
        });
    }
    Ok(())
}

/// `a_{k,j} = σ_k ⋯ σ_{j-1} σ_j² σ_{j-1}⁻¹ ⋯ σ_k⁻¹`.
pub(crate) fn pure_generator(strands: usize, k: usize, j: usize) -> BraidWord {
    let up = chain(strands, k, j - 1);
    let mut w = up.clone();
    w.push(BraidLetter::pos(j));
    w.push(BraidLetter::pos(j));
    w.extend_from(&up.inverse());
    w
}

/// The conjugator `σ_j σ_{j-1} ⋯ σ_{k+1}` of `X_{k,j}`.
pub(crate) fn x_conjugator(strands: usize, k: usize, j: usize) -> BraidWord {
    BraidWord::positive(strands, (k + 1..=j).rev())
}

/// `X_{k,j} = σ_j ⋯ σ_{k+1} σ_k τ_k σ_{k+1}⁻¹ ⋯ σ_j⁻¹`.
pub(crate) fn singular_generator(strands: usize, k: usize, j: usize) -> SingularWord {
    let a = x_conjugator(strands, k, j);
    let mut w = SingularWord::from(&a);
    w.push(SingularLetter::Sigma(BraidLetter::pos(k)));
    w.push(SingularLetter::Tau(k));
    w.push_braid(&a.inverse());
    w
}

pub fn delta(strands: usize) -> BraidWord {
    BraidWord::positive(strands, (1..strands).rev().flat_map(|top| 1..=top))
}

/// `c_n = (a_{1,n-1} ⋯ a_{1,1})(a_{2,n-1} ⋯ a_{2,2}) ⋯ (a_{n-1,n-1})`.
pub fn center(strands: usize) -> BraidWord {
    let mut w = BraidWord::empty(strands);
    for k in 1..strands {
        for j in (k..strands).rev() {
            w.extend_from(&pure_generator(strands, k, j));
        }
    }
    w
}

/// The defining word of a named generator over `strands` strands.
pub fn generator_expansion(g: Generator, strands: usize) -> Result<Expansion> {
    check_strands(strands)?;
    Ok(match g {
        Generator::A(k, j) => {
            check_pair(g, k, j, strands)?;
            Expansion::Braid(pure_generator(strands, k, j))
        }
        Generator::X(k, j) => {
            check_pair(g, k, j, strands)?;
            Expansion::Singular(singular_generator(strands, k, j))
        }
        Generator::M(i, j) => {
            check_pair(g, i, j, strands)?;
            Expansion::Braid(chain(strands, i, j))
        }
        Generator::Delta => Expansion::Braid(delta(strands)),
        Generator::Center => Expansion::Braid(center(strands)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::garside::braid_equal;

    fn w(n: usize, s: &[i32]) -> BraidWord {
        BraidWord::from_signed(n, s).unwrap()
    }

    #[test]
    fn transversal_examples() {
        assert!(transversal_rep(&Permutation::identity(3)).is_empty());
        assert_eq!(
            transversal_rep(&Permutation::transposition(2, 1)),
            w(2, &[1])
        );
        let p = Permutation::from_one_line(&[3, 1, 2]).unwrap();
        assert_eq!(transversal_rep(&p), w(3, &[1, 2]));
    }

    /// Brute force over all block choices for `n = 3`: every permutation is hit
    /// by exactly one chain product, and it is the one returned.
    #[test]
    fn transversal_matches_enumeration_n3() {
        let mut seen = std::collections::HashMap::new();
        for j1 in 0..3usize {
            for j2 in 0..2usize {
                let mut word = BraidWord::empty(3);
                if j2 == 1 {
                    word.extend_from(&chain(3, 2, 2));
                }
                if j1 > 0 {
                    word.extend_from(&chain(3, 1, j1));
                }
                assert!(seen.insert(word.permutation(), word).is_none());
            }
        }
        assert_eq!(seen.len(), 6);
        for (p, word) in seen {
            assert_eq!(transversal_rep(&p), word);
        }
    }

    #[test]
    fn expansions() {
        let a11 = generator_expansion(Generator::A(1, 1), 3).unwrap();
        assert_eq!(a11, Expansion::Braid(w(3, &[1, 1])));
        let x11 = generator_expansion(Generator::X(1, 1), 3)
            .unwrap()
            .to_singular();
        assert_eq!(x11.to_string(), "s1 t1");
        let x13 = generator_expansion(Generator::X(1, 3), 4)
            .unwrap()
            .to_singular();
        assert_eq!(x13.to_string(), "s3 s2 s1 t1 s2^-1 s3^-1");
        assert!(x13.is_pure());
        assert_eq!(x13.singular_degree(), 1);
        let a13 = generator_expansion(Generator::A(1, 3), 4)
            .unwrap()
            .braid()
            .unwrap();
        assert_eq!(a13, w(4, &[1, 2, 3, 3, -2, -1]));
        assert!(a13.is_pure());
        assert_eq!(
            generator_expansion(Generator::M(2, 3), 4).unwrap(),
            Expansion::Braid(w(4, &[2, 3]))
        );
        assert_eq!(delta(3), w(3, &[1, 2, 1]));
        assert!(generator_expansion(Generator::X(2, 1), 4).is_err());
        assert!(generator_expansion(Generator::A(1, 4), 4).is_err());
    }

    #[test]
    fn center_for_three_strands() {
        let mut expected = pure_generator(3, 1, 2);
        expected.extend_from(&pure_generator(3, 1, 1));
        expected.extend_from(&pure_generator(3, 2, 2));
        assert_eq!(center(3), expected);
        assert!(center(3).is_pure());
    }

    #[test]
    fn center_is_full_twist() {
        for n in 2..=6 {
            assert!(
                braid_equal(&center(n), &delta(n).pow(2)).unwrap(),
                "n = {n}"
            );
        }
    }
}
