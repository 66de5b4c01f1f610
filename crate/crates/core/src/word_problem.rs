//! Equality of singular braid words by recursion over Britton forms.
//!
//! Pure singular words are compared letter by letter from the end: the last
//! letter `Y_m` of one side must cancel against the last occurrence `Z_j` of the
//! same label on the other side, which requires every later letter `Z_i` to
//! commute with the conjugate of `Y_m` that has been moved past it, and the
//! braid between `Z_j` and the end to commute with `Y_m`.

use std::fmt;

use crate::braid::{BraidLetter, BraidWord};
use crate::britton::{degree_vector, to_britton_form, BrittonForm, XLabel};
use crate::error::{check_index, check_same, Error, Result};
use crate::garside::braid_equal;
use crate::group_ring::{eta, gr_equal};
use crate::singular::SingularWord;
use crate::trace::trace_equal;
use crate::transversal::{transversal_rep, x_conjugator};

/// Why a verdict was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Certificate {
    /// No singular letters left and the braid normal forms agree.
    BraidNormalFormMatch,
    /// No singular letters left and the braid normal forms differ.
    BraidNormalFormMismatch,
    /// Every singular letter was cancelled and the remaining braids agree.
    RecursionSuccess,
    PermutationMismatch,
    DegreeMismatch,
    TraceMismatch,
    StrandClash,
    /// No letter on the right matches the last letter on the left.
    Condition1,
    /// A later letter does not commute with the transported last letter.
    Condition2,
    /// The braid tail does not commute with the last letter.
    Condition3,
}

impl Certificate {
    pub fn tag(self) -> &'static str {
        match self {
            Certificate::BraidNormalFormMatch => "braid-normal-form",
            Certificate::BraidNormalFormMismatch => "braid-normal-form-mismatch",
            Certificate::RecursionSuccess => "recursion",
            Certificate::PermutationMismatch => "permutation",
            Certificate::DegreeMismatch => "degree",
            Certificate::TraceMismatch => "trace",
            Certificate::StrandClash => "strand-clash",
            Certificate::Condition1 => "condition-1",
            Certificate::Condition2 => "condition-2",
            Certificate::Condition3 => "condition-3",
        }
    }

    pub fn implies_equal(self) -> bool {
        matches!(
            self,
            Certificate::BraidNormalFormMatch | Certificate::RecursionSuccess
        )
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verdict {
    pub equal: bool,
    pub certificate: Certificate,
    /// Singular letters cancelled by the recursion.
    pub steps: usize,
}

impl Verdict {
    fn new(certificate: Certificate, steps: usize) -> Self {
        Verdict {
            equal: certificate.implies_equal(),
            certificate,
            steps,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = if self.equal { "EQUAL" } else { "UNEQUAL" };
        write!(f, "{word} ({})", self.certificate)
    }
}

/// Switches for the sound pre-filters. The permutation test is part of the
/// coset reduction and is always applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecideOptions {
    pub filters: bool,
}

impl Default for DecideOptions {
    fn default() -> Self {
        DecideOptions { filters: true }
    }
}

impl DecideOptions {
    pub fn unfiltered() -> Self {
        DecideOptions { filters: false }
    }
}

/// `xy = yx` in `SG_n`, decided by comparing `η` images. Only licensed when
/// the products carry at most two singular letters.
pub fn check_commutation_eta(x: &SingularWord, y: &SingularWord) -> Result<bool> {
    check_same(x.strands(), y.strands())?;
    x.ensure_positive()?;
    y.ensure_positive()?;
    let degree = x.singular_degree() + y.singular_degree();
    if degree > 2 {
        return Err(Error::DegreeTooHigh(degree));
    }
    let (ex, ey) = (eta(x)?, eta(y)?);
    gr_equal(&ex.mul(&ey)?, &ey.mul(&ex)?)
}

/// `σ_j β = β σ_k` in `B_n`, equivalently `τ_j β = β τ_k`.
pub fn commutes_via_frz(beta: &BraidWord, j: usize, k: usize) -> Result<bool> {
    let n = beta.strands();
    check_index(j, n)?;
    check_index(k, n)?;
    let mut lhs = BraidWord::positive(n, [j]);
    lhs.extend_from(beta);
    let mut rhs = beta.clone();
    rhs.push(BraidLetter::pos(k));
    braid_equal(&lhs, &rhs)
}

/// `w X_L = X_L w` for a pure braid `w`. With `X_L = A σ_k τ_k A⁻¹` this holds
/// iff `A⁻¹ w A` commutes with `σ_k`.
pub fn x_commutes_with_pure(label: XLabel, w: &BraidWord) -> Result<bool> {
    let n = w.strands();
    if label.j >= n {
        return Err(Error::IndexOutOfRange {
            index: label.j,
            max: n - 1,
            strands: n,
        });
    }
    if !w.is_pure() {
        return Err(Error::NotPure(w.permutation().to_string()));
    }
    let a = x_conjugator(n, label.k, label.j);
    let conj = a.inverse().concat(w)?.concat(&a)?;
    commutes_via_frz(&conj, label.k, label.k)
}

/// Whether the label sequences agree modulo commutation of disjoint letters.
/// A `false` answer proves the forms represent different elements.
pub fn trace_filter(b1: &BrittonForm, b2: &BrittonForm) -> bool {
    trace_equal(b1.labels(), b2.labels())
}

fn concat_all<'a>(n: usize, parts: impl IntoIterator<Item = &'a BraidWord>) -> BraidWord {
    let mut w = BraidWord::empty(n);
    for p in parts {
        w.extend_from(p);
    }
    w.free_reduce()
}

/// Decides equality in `SGP_n` of two Britton forms.
pub fn decide_sgp(b1: &BrittonForm, b2: &BrittonForm) -> Result<Verdict> {
    decide_sgp_with(b1, b2, DecideOptions::default())
}

pub fn decide_sgp_with(b1: &BrittonForm, b2: &BrittonForm, opts: DecideOptions) -> Result<Verdict> {
    check_same(b1.strands(), b2.strands())?;
    let n = b1.strands();
    if opts.filters && b1.degree() != b2.degree() {
        return Ok(Verdict::new(Certificate::DegreeMismatch, 0));
    }
    let (mut alpha, mut ys) = b1.clone().into_parts();
    let (mut beta, mut zs) = b2.clone().into_parts();
    let mut steps = 0;

    loop {
        let (m, r) = (ys.len(), zs.len());
        if m == 0 && r == 0 {
            let cert = if braid_equal(&alpha[0], &beta[0])? {
                if steps == 0 {
                    Certificate::BraidNormalFormMatch
                } else {
                    Certificate::RecursionSuccess
                }
            } else {
                Certificate::BraidNormalFormMismatch
            };
            return Ok(Verdict::new(cert, steps));
        }
        if m == 0 || r == 0 {
            // one side has a stable letter the other cannot cancel
            return Ok(Verdict::new(Certificate::Condition1, steps));
        }

        // Shape: left side ends with Y_m, right side starts with Z_1.
        let lead = beta[0].inverse();
        let trail = alpha[m].inverse();
        alpha[0] = concat_all(n, [&lead, &alpha[0]]);
        alpha[m] = BraidWord::empty(n);
        beta[r] = concat_all(n, [&beta[r], &trail]);
        beta[0] = BraidWord::empty(n);

        let y = ys[m - 1];
        let Some(j) = (1..=r).rev().find(|&i| zs[i - 1] == y) else {
            return Ok(Verdict::new(Certificate::Condition1, steps));
        };

        // Condition (2), from i = r down to j + 1, carrying C_i = β_i ⋯ β_r.
        let y_word = y.expansion(n);
        let mut tail = BraidWord::empty(n);
        for i in (j + 1..=r).rev() {
            tail = concat_all(n, [&beta[i], &tail]);
            let z = zs[i - 1];
            if opts.filters && z.shares_strand(y) {
                return Ok(Verdict::new(Certificate::StrandClash, steps));
            }
            let mut transported = SingularWord::from(&tail);
            transported.extend_from(&y_word);
            transported.push_braid(&tail.inverse());
            if !check_commutation_eta(&z.expansion(n), &transported)? {
                return Ok(Verdict::new(Certificate::Condition2, steps));
            }
        }

        // Condition (3): β_j ⋯ β_r commutes with Y_m.
        tail = concat_all(n, [&beta[j], &tail]);
        if !x_commutes_with_pure(y, &tail)? {
            return Ok(Verdict::new(Certificate::Condition3, steps));
        }

        // Condition (4): drop Y_m and Z_j, merge β_{j-1} β_j.
        ys.pop();
        alpha.pop();
        zs.remove(j - 1);
        let merged = concat_all(n, [&beta[j - 1], &beta[j]]);
        beta[j - 1] = merged;
        beta.remove(j);
        steps += 1;
    }
}

/// Decides `w1 = w2` in the singular braid monoid.
pub fn decide_equal(w1: &SingularWord, w2: &SingularWord) -> Result<Verdict> {
    decide_equal_with(w1, w2, DecideOptions::default())
}

pub fn decide_equal_with(
    w1: &SingularWord,
    w2: &SingularWord,
    opts: DecideOptions,
) -> Result<Verdict> {
    check_same(w1.strands(), w2.strands())?;
    w1.ensure_positive()?;
    w2.ensure_positive()?;
    if opts.filters && w1.singular_degree() != w2.singular_degree() {
        return Ok(Verdict::new(Certificate::DegreeMismatch, 0));
    }
    let perm = w1.perm_image();
    if perm != w2.perm_image() {
        return Ok(Verdict::new(Certificate::PermutationMismatch, 0));
    }
    let rep_inv = transversal_rep(&perm).inverse();
    let mut p1 = w1.clone();
    p1.push_braid(&rep_inv);
    let mut p2 = w2.clone();
    p2.push_braid(&rep_inv);
    let b1 = to_britton_form(&p1)?;
    let b2 = to_britton_form(&p2)?;
    if opts.filters {
        if degree_vector(&b1) != degree_vector(&b2) {
            return Ok(Verdict::new(Certificate::DegreeMismatch, 0));
        }
        if !trace_filter(&b1, &b2) {
            return Ok(Verdict::new(Certificate::TraceMismatch, 0));
        }
    }
    decide_sgp_with(&b1, &b2, opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::parse_word;
    use crate::transversal::delta;

    fn p(text: &str, n: usize) -> SingularWord {
        parse_word(text, n).unwrap()
    }

    fn b(text: &str, n: usize) -> BraidWord {
        p(text, n).as_braid().unwrap()
    }

    fn eq(u: &str, v: &str, n: usize) -> Verdict {
        decide_equal(&p(u, n), &p(v, n)).unwrap()
    }

    #[test]
    fn eta_commutation_examples() {
        assert!(check_commutation_eta(&p("t1", 2), &p("s1", 2)).unwrap());
        assert!(check_commutation_eta(&p("t1", 3), &p("s2 s1^2 s2", 3)).unwrap());
        assert!(!check_commutation_eta(&p("t1", 3), &p("s2^2", 3)).unwrap());
        assert!(matches!(
            check_commutation_eta(&p("t1 t1", 3), &p("t2", 3)),
            Err(Error::DegreeTooHigh(3))
        ));
        assert!(matches!(
            check_commutation_eta(&p("t1^-1", 3), &p("s1", 3)),
            Err(Error::InverseSingular(1))
        ));
    }

    #[test]
    fn frz_examples() {
        assert!(commutes_via_frz(&b("s1", 2), 1, 1).unwrap());
        assert!(commutes_via_frz(&delta(3).pow(2), 1, 1).unwrap());
        assert!(!commutes_via_frz(&b("s2^2", 3), 1, 1).unwrap());
        // Δ σ_1 = σ_2 Δ for three strands
        assert!(commutes_via_frz(&delta(3), 2, 1).unwrap());
        assert!(commutes_via_frz(&b("s1", 3), 0, 1).is_err());
        assert!(commutes_via_frz(&b("s1", 3), 1, 3).is_err());
    }

    #[test]
    fn x_commutation_examples() {
        let x11 = XLabel::new(1, 1);
        assert!(x_commutes_with_pure(x11, &b("s1^2", 3)).unwrap());
        assert!(x_commutes_with_pure(x11, &BraidWord::empty(3)).unwrap());
        assert!(!x_commutes_with_pure(x11, &b("s2^2", 3)).unwrap());
        assert!(matches!(
            x_commutes_with_pure(x11, &b("s2", 3)),
            Err(Error::NotPure(_))
        ));
    }

    #[test]
    fn decide_examples() {
        let v = eq("s2 s1^2 s2 t1", "t1 s2 s1^2 s2", 3);
        assert!(v.equal, "{v}");
        let v = eq(
            "s2 s3 s1 s2 t1 s2 s3 s1 s2 t1",
            "t1 s2 s3 s1 s2 t1 s2 s3 s1 s2",
            4,
        );
        assert!(v.equal, "{v}");
        let v = eq("t1", "t2", 3);
        assert!(!v.equal);
        assert_eq!(v.certificate, Certificate::PermutationMismatch);
    }

    #[test]
    fn certificates() {
        assert_eq!(
            eq("s1 s2 s1", "s2 s1 s2", 3).certificate,
            Certificate::BraidNormalFormMatch
        );
        assert_eq!(
            eq("s1", "s1^-1", 3).certificate,
            Certificate::BraidNormalFormMismatch
        );
        assert_eq!(eq("t1", "s1", 3).certificate, Certificate::DegreeMismatch);
        let v = eq("s1 t1", "t1 s1", 3);
        assert_eq!(v.certificate, Certificate::RecursionSuccess);
        assert_eq!(v.steps, 1);
        let v = eq("t1 s2^2", "s2^2 t1", 3);
        assert!(!v.equal);
    }

    #[test]
    fn unfiltered_agrees_on_small_cases() {
        let cases = [
            ("t1 s2^2", "s2^2 t1", 3),
            ("t1 t2", "t2 t1", 3),
            ("t1 t3", "t3 t1", 4),
            ("s1 t1", "t1 s1", 3),
            ("t1", "s1", 3),
        ];
        for (u, v, n) in cases {
            let a = decide_equal(&p(u, n), &p(v, n)).unwrap();
            let c = decide_equal_with(&p(u, n), &p(v, n), DecideOptions::unfiltered()).unwrap();
            assert_eq!(a.equal, c.equal, "{u} vs {v}: {a} / {c}");
        }
    }

    #[test]
    fn decide_sgp_on_forms() {
        let w = p("s2 s1^2 s2 t1", 3);
        let rep = transversal_rep(&w.perm_image()).inverse();
        let mut l = w.clone();
        l.push_braid(&rep);
        let mut r = p("t1 s2 s1^2 s2", 3);
        r.push_braid(&rep);
        let (bl, br) = (to_britton_form(&l).unwrap(), to_britton_form(&r).unwrap());
        assert!(decide_sgp(&bl, &br).unwrap().equal);
        assert!(decide_sgp(&bl, &bl).unwrap().equal);

        let mut l = p("t1 s2^2", 3);
        l.push_braid(&rep);
        let mut r = p("s2^2 t1", 3);
        r.push_braid(&rep);
        let (bl, br) = (to_britton_form(&l).unwrap(), to_britton_form(&r).unwrap());
        let v = decide_sgp(&bl, &br).unwrap();
        assert!(!v.equal);
        assert!(matches!(
            v.certificate,
            Certificate::Condition2 | Certificate::Condition3 | Certificate::StrandClash
        ));
    }

    #[test]
    fn trace_filter_examples() {
        let l = to_britton_form(&p("s1 t1 s3 t3", 5)).unwrap();
        let r = to_britton_form(&p("s3 t3 s1 t1", 5)).unwrap();
        assert!(trace_filter(&l, &r));
        let e = to_britton_form(&SingularWord::empty(5)).unwrap();
        assert!(trace_filter(&e, &e));
    }

    #[test]
    fn rejects_inverse_tau_and_mismatch() {
        assert!(matches!(
            decide_equal(&p("t1^-1", 3), &p("t1", 3)),
            Err(Error::InverseSingular(1))
        ));
        assert!(matches!(
            decide_equal(&p("t1", 3), &p("t1", 4)),
            Err(Error::StrandMismatch { .. })
        ));
    }
}
