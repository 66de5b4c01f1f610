//! The integral group ring `ℤB_n` and the desingularization map
//! `η: τ_i ↦ σ_i − σ_i⁻¹, σ_i ↦ σ_i`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::braid::{BraidLetter, BraidWord};
use crate::error::{check_same, Error, Result};
use crate::garside::{normal_form, GarsideNormalForm};
use crate::singular::{SingularLetter, SingularWord};
use crate::stats;

/// A finitely supported `ℤ`-combination of braids keyed by normal form.
/// No stored coefficient is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupRingElement {
    strands: usize,
    terms: BTreeMap<GarsideNormalForm, BigInt>,
}

impl GroupRingElement {
    pub fn zero(strands: usize) -> Self {
        GroupRingElement {
            strands,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(strands: usize) -> Self {
        Self::from_braid(GarsideNormalForm::identity(strands))
    }

    pub fn from_braid(nf: GarsideNormalForm) -> Self {
        let strands = nf.strands();
        let mut terms = BTreeMap::new();
        terms.insert(nf, BigInt::one());
        GroupRingElement { strands, terms }
    }

    pub fn from_word(w: &BraidWord) -> Self {
        Self::from_braid(normal_form(w))
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, key: &GarsideNormalForm) -> BigInt {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GarsideNormalForm, &BigInt)> {
        self.terms.iter()
    }

    fn add_term(&mut self, key: GarsideNormalForm, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self + scalar · other`.
    pub fn combine(&self, other: &GroupRingElement, scalar: &BigInt) -> Result<GroupRingElement> {
        check_same(self.strands, other.strands)?;
        let mut out = self.clone();
        if scalar.is_zero() {
            return Ok(out);
        }
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c * scalar);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &GroupRingElement) -> Result<GroupRingElement> {
        check_same(self.strands, other.strands)?;
        let mut out = GroupRingElement::zero(self.strands);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                out.add_term(k1.mul(k2)?, c1 * c2);
            }
        }
        Ok(out)
    }

    /// Right multiplication by a single braid.
    pub fn mul_braid(&self, b: &GarsideNormalForm) -> Result<GroupRingElement> {
        check_same(self.strands, b.strands())?;
        let mut out = GroupRingElement::zero(self.strands);
        for (k, c) in &self.terms {
            out.add_term(k.mul(b)?, c.clone());
        }
        Ok(out)
    }

    /// Left multiplication by a single braid.
    pub fn braid_mul(&self, b: &GarsideNormalForm) -> Result<GroupRingElement> {
        check_same(self.strands, b.strands())?;
        let mut out = GroupRingElement::zero(self.strands);
        for (k, c) in &self.terms {
            out.add_term(b.mul(k)?, c.clone());
        }
        Ok(out)
    }
}

impl fmt::Display for GroupRingElement {
    /// `+3·[key] -1·[key] …`, or `0` for the zero element.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let sign = if c.is_negative() { '-' } else { '+' };
            write!(f, "{sign}{}·[{k}]", c.abs())?;
        }
        Ok(())
    }
}

pub fn gr_combine(
    x: &GroupRingElement,
    y: &GroupRingElement,
    scalar: &BigInt,
) -> Result<GroupRingElement> {
    x.combine(y, scalar)
}

pub fn gr_mul(x: &GroupRingElement, y: &GroupRingElement) -> Result<GroupRingElement> {
    x.mul(y)
}

pub fn gr_equal(x: &GroupRingElement, y: &GroupRingElement) -> Result<bool> {
    check_same(x.strands, y.strands)?;
    Ok(x.terms == y.terms)
}

/// `η(τ_k) = σ_k − σ_k⁻¹`.
pub fn eta_tau(strands: usize, k: usize) -> GroupRingElement {
    let pos = BraidWord::from_letters_unchecked(strands, vec![BraidLetter::pos(k)]);
    let neg = BraidWord::from_letters_unchecked(strands, vec![BraidLetter::neg(k)]);
    let mut out = GroupRingElement::from_word(&pos);
    out.add_term(normal_form(&neg), -BigInt::one());
    out
}

/// Image of a singular word under `η`. Maximal braid runs are normalized once
/// and multiplied in; every `τ` doubles the support at most.
pub fn eta(w: &SingularWord) -> Result<GroupRingElement> {
    w.ensure_positive()?;
    stats::count_eta();
    let n = w.strands();
    let mut acc = GroupRingElement::one(n);
    let mut run = BraidWord::empty(n);
    for l in w.letters() {
        match *l {
            SingularLetter::Sigma(b) => run.push(b),
            SingularLetter::Tau(k) => {
                if !run.is_empty() {
                    acc = acc.mul_braid(&normal_form(&run))?;
                    run = BraidWord::empty(n);
                }
                acc = acc.mul(&eta_tau(n, k))?;
            }
            SingularLetter::TauInv(k) => return Err(Error::InverseSingular(k)),
        }
    }
    if !run.is_empty() {
        acc = acc.mul_braid(&normal_form(&run))?;
    }
    Ok(acc)
}
