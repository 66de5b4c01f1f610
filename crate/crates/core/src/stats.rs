//! Per-thread operation counters used by the complexity harness.

use std::cell::Cell;

thread_local! {
    static NORMAL_FORMS: Cell<u64> = const { Cell::new(0) };
    static ETA_EXPANSIONS: Cell<u64> = const { Cell::new(0) };
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCounts {
    /// Word normalizations plus normal-form products.
    pub normal_forms: u64,
    pub eta_expansions: u64,
}

pub fn snapshot() -> OpCounts {
    OpCounts {
        normal_forms: NORMAL_FORMS.with(Cell::get),
        eta_expansions: ETA_EXPANSIONS.with(Cell::get),
    }
}

pub fn reset() {
    NORMAL_FORMS.with(|c| c.set(0));
    ETA_EXPANSIONS.with(|c| c.set(0));
}

pub(crate) fn count_normal_form() {
    NORMAL_FORMS.with(|c| c.set(c.get() + 1));
}

pub(crate) fn count_eta() {
    ETA_EXPANSIONS.with(|c| c.set(c.get() + 1));
}
