//! Exact combinatorics of uniform oriented matroids and neighborly polytopes.
//!
//! The crate is `no_std` (it needs `alloc`). Everything is a pure function on
//! immutable values: chirotopes, lexicographic extensions, sewing through
//! flags, Gale sewing, exact rational realizations, canonical combinatorial
//! types and the enumeration of the sewn / Gale sewn families.
//!
//! Elements are labeled `0..n`. Sets of elements are bitmasks ([`ElemSet`]),
//! so ground sets are limited to 64 elements, far beyond desk scale.

#![no_std]

extern crate alloc;

pub mod analysis;
pub mod canon;
pub mod chirotope;
pub mod combin;
pub mod constructions;
pub mod elemset;
pub mod enumeration;
mod error;
pub mod extension;
pub mod flag;
pub mod realization;
pub mod sign;
pub mod signed_set;

pub use analysis::{
    classify, facets, is_acyclic, is_face, is_neighborly, universal_faces, universal_flags,
    Classification, FacetList,
};
pub use canon::{canonical_type, CombType};
pub use chirotope::{Chirotope, Minor, Violation};
pub use constructions::{
    cyclic, cyclic_dual_extend, facets_beyond, facets_separating, gale_sew, nonrealizable_pipeline,
    primal_double_extension, propagate_universal, sew, stc, Flag, GaleStep, SplitKind,
};
pub use elemset::ElemSet;
pub use enumeration::{
    brute_lex_extension_count, containment_check, enumerate_family, eval_bounds, inseparability_graph,
    labeled_corank3_count, BoundReport, Executor, Family, FamilySpec, Sequential, TypeSet,
};
pub use error::{Error, Result};
pub use extension::{lex_extend, signature_of_extension, ExtensionResult, LexSignature};
pub use realization::{
    chirotope_of_points, lex_subdivision, lift_and_lower_faces, realize_lex_extension, PointConfig,
    Subdivision,
};
pub use sign::Sign;
pub use signed_set::SignedSet;
