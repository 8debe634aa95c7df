//! Extremal numbers and edge colorings of complete graphs.

mod classify;
mod coloring;
mod copy;
mod forcing;
mod turan;

pub use classify::{classify, ClassifyCase, ClassifyOptions, ClassifyReport};
pub use coloring::{pair_index, EdgeColoring};
pub use copy::{find_f_colored_copy, EmbeddingCertificate};
pub use forcing::{
    f_exact_tiny, lb_coloring, Attestation, ForcingOptions, ForcingResult, LowerBoundColoring, EXHAUSTIVE_LIMIT,
    SYMMETRY_LIMIT,
};
pub use turan::{
    ex_exact_small, ex_exact_with_limit, kst_bound, minimal_forbidden, turan_number, TuranMethod, TuranResult,
    EX_VERTEX_LIMIT,
};
