//! Word problem for the singular braid monoid `SB_n`.
//!
//! Braids are normalized with the left-greedy Garside form; singular words are
//! reduced to the pure singular group, rewritten into Britton form over the
//! stable letters `X_{k,j}`, and compared by a recursion whose commutation
//! tests run either through braid normal forms or through the
//! desingularization map into the group ring `ℤB_n`.

pub mod braid;
pub mod britton;
pub mod error;
pub mod garside;
pub mod group_ring;
pub mod notation;
pub mod permutation;
pub mod relations;
pub mod singular;
pub mod stats;
pub mod trace;
pub mod transversal;
pub mod word_problem;

pub use braid::{free_reduce, permutation_of, BraidLetter, BraidWord};
pub use britton::{
    degree_vector, expand_britton, factor_singular, label_of_letter, to_britton_form, BrittonForm,
    XLabel,
};
pub use error::{Error, Result};
pub use garside::{braid_equal, normal_form, GarsideNormalForm};
pub use group_ring::{eta, gr_combine, gr_equal, gr_mul, GroupRingElement};
pub use notation::{format_word, parse_word};
pub use permutation::Permutation;
pub use singular::{perm_image, SingularLetter, SingularWord};
pub use transversal::{generator_expansion, transversal_rep, Expansion, Generator};
pub use word_problem::{
    check_commutation_eta, commutes_via_frz, decide_equal, decide_equal_with, decide_sgp,
    decide_sgp_with, trace_filter, x_commutes_with_pure, Certificate, DecideOptions, Verdict,
};
