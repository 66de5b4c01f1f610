//! Rewriting pure singular words into alternating Britton form
//! `β_0 X_{L_1} β_1 ⋯ X_{L_s} β_s` with pure braid segments.

use std::collections::BTreeMap;
use std::fmt;

use crate::braid::{BraidLetter, BraidWord};
use crate::error::{check_index, check_same, Error, Result};
use crate::garside::braid_equal;
use crate::group_ring::{eta, gr_equal};
use crate::permutation::Permutation;
use crate::singular::{SingularLetter, SingularWord};
use crate::transversal::{singular_generator, x_conjugator};

/// Label of a singular pure generator `X_{k,j}`: strands `k` and `j + 1` meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct XLabel {
    pub k: usize,
    pub j: usize,
}

impl XLabel {
    pub fn new(k: usize, j: usize) -> Self {
        assert!(1 <= k && k <= j, "X({k},{j}) needs 1 <= k <= j");
        XLabel { k, j }
    }

    /// Label of the generator whose singular point joins strands `a` and `b`.
    pub fn from_strands(a: usize, b: usize) -> Self {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        assert!(lo >= 1 && lo < hi);
        XLabel { k: lo, j: hi - 1 }
    }

    /// The unordered strand pair `(k, j + 1)`.
    pub fn strands(self) -> (usize, usize) {
        (self.k, self.j + 1)
    }

    pub fn shares_strand(self, other: XLabel) -> bool {
        let (a, b) = self.strands();
        let (c, d) = other.strands();
        a == c || a == d || b == c || b == d
    }

    pub fn expansion(self, strands: usize) -> SingularWord {
        singular_generator(strands, self.k, self.j)
    }
}

impl fmt::Display for XLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X[{},{}]", self.k, self.j)
    }
}

/// Alternating product of pure braid segments and singular pure generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrittonForm {
    strands: usize,
    segments: Vec<BraidWord>,
    labels: Vec<XLabel>,
}

impl BrittonForm {
    /// Checks that there is one more segment than labels, every segment is pure
    /// and every label fits the strand count.
    pub fn new(strands: usize, segments: Vec<BraidWord>, labels: Vec<XLabel>) -> Result<Self> {
        if segments.len() != labels.len() + 1 {
            return Err(Error::InvalidGenerator {
                name: "Britton form".into(),
                reason: format!("{} segments for {} letters", segments.len(), labels.len()),
            });
        }
        for s in &segments {
            check_same(strands, s.strands())?;
            if !s.is_pure() {
                return Err(Error::NotPure(s.permutation().to_string()));
            }
        }
        for l in &labels {
            if l.j >= strands {
                return Err(Error::IndexOutOfRange {
                    index: l.j,
                    max: strands - 1,
                    strands,
                });
            }
        }
        Ok(BrittonForm {
            strands,
            segments,
            labels,
        })
    }

    pub(crate) fn from_parts_unchecked(
        strands: usize,
        segments: Vec<BraidWord>,
        labels: Vec<XLabel>,
    ) -> Self {
        debug_assert_eq!(segments.len(), labels.len() + 1);
        BrittonForm {
            strands,
            segments,
            labels,
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn segments(&self) -> &[BraidWord] {
        &self.segments
    }

    pub fn labels(&self) -> &[XLabel] {
        &self.labels
    }

    pub fn degree(&self) -> usize {
        self.labels.len()
    }

    pub(crate) fn into_parts(self) -> (Vec<BraidWord>, Vec<XLabel>) {
        (self.segments, self.labels)
    }
}

impl fmt::Display for BrittonForm {
    /// `β0 ; X[k,j] ; β1 ; …` with segments in token syntax.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.segments[0])?;
        for (l, s) in self.labels.iter().zip(&self.segments[1..]) {
            write!(f, " ; {l} ; {s}")?;
        }
        Ok(())
    }
}

/// Label of a singular letter at positions `k, k + 1` after a prefix with
/// permutation `prefix`: the pair of strands occupying those positions.
pub fn label_of_letter(prefix: &Permutation, k: usize) -> XLabel {
    let inv = prefix.inverse();
    XLabel::from_strands(inv.apply(k), inv.apply(k + 1))
}

/// Factorization `τ_k = pre · X_L · post` valid after any prefix with the given
/// permutation, where `prefix · pre` and `post · (prefix σ_k)⁻¹` are pure.
#[derive(Debug, Clone)]
pub(crate) struct LocalFactor {
    pub label: XLabel,
    pub pre: BraidWord,
    pub post: BraidWord,
}

/// Builds a braid `h` with `σ_k h = h σ_a` and prescribed position map by
/// treating positions `k, k+1` as one tube and braiding it to `a, a+1`.
fn tube_conjugator(n: usize, k: usize, a: usize, positions: &Permutation) -> BraidWord {
    // slot of a 1-based position when the tube occupies positions t, t+1
    let slot = |x: usize, t: usize| if x <= t { x } else { x - 1 };
    let mut q = vec![0u8; n - 1];
    for s in 1..n {
        let x = if s <= k { s } else { s + 1 };
        q[s - 1] = (slot(positions.apply(x), a) - 1) as u8;
    }
    let slots = Permutation::from_zero_based(q);

    let mut h = BraidWord::empty(n);
    let mut t = k;
    for i in slots.positive_word_indices() {
        if i + 1 < t {
            h.push(BraidLetter::pos(i));
        } else if i > t {
            h.push(BraidLetter::pos(i + 1));
        } else if i + 1 == t {
            h.push(BraidLetter::pos(t - 1));
            h.push(BraidLetter::pos(t));
            t -= 1;
        } else {
            h.push(BraidLetter::pos(t + 1));
            h.push(BraidLetter::pos(t));
            t += 1;
        }
    }
    debug_assert_eq!(t, a);
    if positions.apply(k) == a + 1 {
        h.push(BraidLetter::neg(a));
    }
    h
}

pub(crate) fn local_factor(prefix: &Permutation, k: usize) -> Result<LocalFactor> {
    let n = prefix.len();
    check_index(k, n)?;
    let label = label_of_letter(prefix, k);
    let a = label.k;
    let conj = x_conjugator(n, label.k, label.j);
    let mut target = conj.clone();
    target.push(BraidLetter::pos(a));
    // where each position after the prefix must travel so that prefix·h ends
    // with the strand layout of A σ_a
    let positions = prefix.inverse().then(&target.permutation());
    let h = tube_conjugator(n, k, a, &positions);

    let mut lhs = BraidWord::positive(n, [k]);
    lhs.extend_from(&h);
    let mut rhs = h.clone();
    rhs.push(BraidLetter::pos(a));
    if !braid_equal(&lhs, &rhs)? {
        return Err(Error::Certification(format!(
            "conjugator {h} does not carry s{k} to s{a}"
        )));
    }

    let mut pre = h.clone();
    pre.push(BraidLetter::neg(a));
    pre.extend_from(&conj.inverse());
    let mut post = conj;
    post.extend_from(&h.inverse());
    Ok(LocalFactor {
        label,
        pre: pre.free_reduce(),
        post: post.free_reduce(),
    })
}

/// Certifies `τ_k = pre · X_L · post` with `η` (one singularity, where `η` is faithful).
fn certify_local(n: usize, k: usize, f: &LocalFactor) -> Result<()> {
    let lhs = SingularWord::from_letters_unchecked(n, vec![SingularLetter::Tau(k)]);
    let mut rhs = SingularWord::from(&f.pre);
    rhs.extend_from(&f.label.expansion(n));
    rhs.push_braid(&f.post);
    if !gr_equal(&eta(&lhs)?, &eta(&rhs)?)? {
        return Err(Error::Certification(format!(
            "t{k} != ({}) {} ({})",
            f.pre, f.label, f.post
        )));
    }
    Ok(())
}

/// Splits `Q = u τ_k v⁻¹` (required pure) as `π · X_L · π′` with `π`, `π′` pure.
pub fn factor_singular(
    u: &BraidWord,
    k: usize,
    v: &BraidWord,
) -> Result<(BraidWord, XLabel, BraidWord)> {
    check_same(u.strands(), v.strands())?;
    let n = u.strands();
    check_index(k, n)?;
    let mut q = SingularWord::from(u);
    q.push(SingularLetter::Tau(k));
    q.push_braid(&v.inverse());
    if !q.is_pure() {
        return Err(Error::NotPure(q.perm_image().to_string()));
    }
    let local = local_factor(&u.permutation(), k)?;
    let pi = u.concat(&local.pre)?.free_reduce();
    let pi_prime = local.post.concat(&v.inverse())?.free_reduce();

    let mut rebuilt = SingularWord::from(&pi);
    rebuilt.extend_from(&local.label.expansion(n));
    rebuilt.push_braid(&pi_prime);
    if !gr_equal(&eta(&q)?, &eta(&rebuilt)?)? {
        return Err(Error::Certification(format!(
            "factorization of {q} as {pi} ; {} ; {pi_prime}",
            local.label
        )));
    }
    Ok((pi, local.label, pi_prime))
}

/// Rewrites a pure singular word into Britton form.
///
/// The word is telescoped as `Π_i (P_i τ_{k_i} σ_{k_i}⁻¹ P_i⁻¹) · P_{s+1}` where
/// `P_i` is the prefix before the `i`-th `τ` with earlier `τ`s read as `σ`s;
/// each factor is split by [`factor_singular`]'s recipe and neighbouring pure
/// pieces are merged, so the prefixes cancel and segments stay short.
pub fn to_britton_form(w: &SingularWord) -> Result<BrittonForm> {
    w.ensure_positive()?;
    let n = w.strands();
    if !w.is_pure() {
        return Err(Error::NotPure(w.perm_image().to_string()));
    }
    let mut prefix = Permutation::identity(n);
    let mut segment = BraidWord::empty(n);
    let mut segments = Vec::with_capacity(w.singular_degree() + 1);
    let mut labels = Vec::with_capacity(w.singular_degree());
    for l in w.letters() {
        match *l {
            SingularLetter::Sigma(b) => {
                segment.push(b);
                prefix.then_transposition(b.index);
            }
            SingularLetter::Tau(k) => {
                let local = local_factor(&prefix, k)?;
                certify_local(n, k, &local)?;
                segment.extend_from(&local.pre);
                segments.push(segment.free_reduce());
                labels.push(local.label);
                segment = local.post;
                prefix.then_transposition(k);
            }
            SingularLetter::TauInv(k) => return Err(Error::InverseSingular(k)),
        }
    }
    segments.push(segment.free_reduce());

    if let Some(bad) = segments.iter().find(|s| !s.is_pure()) {
        return Err(Error::Certification(format!("impure segment {bad}")));
    }
    let form = BrittonForm::from_parts_unchecked(n, segments, labels);
    if form.degree() <= 2 && !gr_equal(&eta(&expand_britton(&form))?, &eta(w)?)? {
        return Err(Error::Certification(format!(
            "Britton form {form} differs from {w}"
        )));
    }
    Ok(form)
}

/// Concatenates segments and generator expansions back into a singular word.
pub fn expand_britton(b: &BrittonForm) -> SingularWord {
    let mut w = SingularWord::from(&b.segments[0]);
    for (l, s) in b.labels.iter().zip(&b.segments[1..]) {
        w.extend_from(&l.expansion(b.strands));
        w.push_braid(s);
    }
    w
}

/// Per-label letter counts, coordinates of the abelianization.
pub fn degree_vector(b: &BrittonForm) -> BTreeMap<XLabel, usize> {
    let mut counts = BTreeMap::new();
    for &l in &b.labels {
        *counts.entry(l).or_insert(0) += 1;
    }
    counts
}
