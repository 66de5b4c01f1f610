//! Label sequences modulo commutation of letters with disjoint strand pairs.

use crate::britton::XLabel;

/// Lexicographically least representative of the trace of `labels`, where
/// two labels commute exactly when their strand pairs are disjoint.
pub fn trace_normal_form(labels: &[XLabel]) -> Vec<XLabel> {
    let mut rest: Vec<XLabel> = labels.to_vec();
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        // a letter can move to the front iff it commutes with everything before it
        let mut best: Option<usize> = None;
        for i in 0..rest.len() {
            if rest[..i].iter().all(|p| !p.shares_strand(rest[i]))
                && best.is_none_or(|b| rest[i] < rest[b])
            {
                best = Some(i);
            }
        }
        let i = best.expect("the first letter is always available");
        out.push(rest.remove(i));
    }
    out
}

pub fn trace_equal(a: &[XLabel], b: &[XLabel]) -> bool {
    a.len() == b.len() && trace_normal_form(a) == trace_normal_form(b)
}
