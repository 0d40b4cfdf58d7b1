//! Shellability, vertex decomposability and shelling completion for pure
//! simplicial complexes on ground sets of at most 64 elements.
//!
//! Faces are 64-bit masks over labels `1..=64`. Every positive answer comes
//! with a certificate (a shelling order, a decomposition tree, a perfect
//! elimination order, a decomposing-order trace) that the independent
//! checkers in [`oracle`] can replay.

pub mod error;
pub mod face;
pub mod complex;
pub mod revlex;
pub mod shelling;
pub mod decompose;
pub mod completion;
pub mod matroid;
pub mod chordal;
pub mod oracle;
pub mod format;
pub mod enumerate;
pub mod classify;

pub use complex::Complex;
pub use error::{Error, Result};
pub use face::{adjacent, Face, GroundSet};
pub use revlex::{is_shifted, revlex_cmp, smallest_missing, LinearOrder};
pub use shelling::{
    disconnected_link, extend_shelling, find_shelling, is_extendably_shellable, verify_partial, verify_shelling,
    ShellingFailure, ShellingSequence,
};
pub use decompose::{
    is_k_decomposable, is_shedding_face, is_shedding_vertex, is_vertex_decomposable,
    DecompositionCertificate, Decomposer,
};
pub use completion::{
    complete_by_extension, complete_to_skeleton, decomposing_order_criterion, extend_once, find_decomposing_order,
    is_decomposing_order, is_shedding_order, Completion, DecomposingOrderTrace, TraceCase,
};
pub use matroid::{
    cone, exchange_violation, extend_full_minus_vertex, is_basis_first_order, is_matroid,
    uniform_matroid, ExchangeViolation, Matroid,
};
pub use chordal::{complement_graph, is_chordal, simplicial_vertices, vd_certificate_small, Chordality, Graph};
pub use classify::{classify, Classification, Guards, Verdict};
pub use enumerate::{enumerate_pure, PureEnumeration};
pub use format::{parse, serialize, ComplexFile};
