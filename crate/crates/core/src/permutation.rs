use std::fmt;

/// A permutation of strand positions `1..=n`.
///
/// Stored zero-based: `map[x]` is the end position of the strand that starts
/// at position `x`. Words act left to right, so the permutation of `uv` sends
/// `x` to `v(u(x))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    map: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= u8::MAX as usize, "at most 255 strands are supported");
        Permutation {
            map: (0..n as u8).collect(),
        }
    }

    /// The half-twist permutation `x ↦ n + 1 − x`.
    pub fn reversal(n: usize) -> Self {
        Permutation {
            map: (0..n as u8).rev().collect(),
        }
    }

    /// The adjacent transposition exchanging positions `i` and `i + 1` (1-based `i`).
    pub fn transposition(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.map.swap(i - 1, i);
        p
    }

    /// Builds a permutation from its one-line notation with 1-based images.
    pub fn from_one_line(images: &[usize]) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut map = Vec::with_capacity(n);
        for &img in images {
            if img == 0 || img > n || seen[img - 1] {
                return None;
            }
            seen[img - 1] = true;
            map.push((img - 1) as u8);
        }
        Some(Permutation { map })
    }

    pub(crate) fn from_zero_based(map: Vec<u8>) -> Self {
        Permutation { map }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Image of the 1-based position `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.map[x - 1] as usize + 1
    }

    pub(crate) fn images(&self) -> &[u8] {
        &self.map
    }

    pub(crate) fn images_mut(&mut self) -> &mut [u8] {
        &mut self.map
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.map.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn is_reversal(&self) -> bool {
        let n = self.map.len();
        self.map
            .iter()
            .enumerate()
            .all(|(i, &x)| x as usize == n - 1 - i)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.map.len()];
        for (i, &x) in self.map.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Permutation { map: inv }
    }

    /// `self` followed by `other`: `x ↦ other(self(x))`.
    pub fn then(&self, other: &Permutation) -> Self {
        assert_eq!(self.len(), other.len());
        Permutation {
            map: self.map.iter().map(|&x| other.map[x as usize]).collect(),
        }
    }

    /// Applies the adjacent transposition at 1-based `i` after `self`.
    pub fn then_transposition(&mut self, i: usize) {
        let (a, b) = ((i - 1) as u8, i as u8);
        for x in self.map.iter_mut() {
            if *x == a {
                *x = b;
            } else if *x == b {
                *x = a;
            }
        }
    }

    /// Conjugation by the half twist: `x ↦ n − 1 − p(n − 1 − x)` (zero-based).
    pub fn flip(&self) -> Self {
        let n = self.map.len();
        Permutation {
            map: (0..n)
                .map(|x| (n - 1 - self.map[n - 1 - x] as usize) as u8)
                .collect(),
        }
    }

    /// Number of strand pairs that cross, i.e. the length of the permutation braid.
    pub fn inversions(&self) -> usize {
        let mut count = 0;
        for i in 0..self.map.len() {
            for j in i + 1..self.map.len() {
                if self.map[i] > self.map[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Generator indices (1-based) of a positive word realizing the permutation braid.
    pub fn positive_word_indices(&self) -> Vec<usize> {
        let mut p = self.map.clone();
        let mut out = Vec::with_capacity(self.inversions());
        'outer: loop {
            for i in 0..p.len().saturating_sub(1) {
                if p[i] > p[i + 1] {
                    out.push(i + 1);
                    p.swap(i, i + 1);
                    continue 'outer;
                }
            }
            break;
        }
        out
    }
}

impl fmt::Display for Permutation {
    /// Arrow notation `1↦3 2↦1 3↦2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &x) in self.map.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}↦{}", i + 1, x as usize + 1)?;
        }
        Ok(())
    }
}

/// One-line notation: digits concatenated for fewer than ten strands,
/// comma separated otherwise.
pub fn one_line_string(p: &Permutation) -> String {
    let sep = if p.len() < 10 { "" } else { "," };
    p.one_line()
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}
