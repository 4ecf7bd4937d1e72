//! Lexicographic shellings of matroid independence complexes, restricted h-vectors, and the
//! rank 3 and rank 4 constructions of pure order ideals whose F-vector is the matroid h-vector.
//!
//! The crate also contains the machinery to check those constructions exhaustively: revlex
//! basis databases, enumeration of small matroids up to isomorphism, based-matroid
//! deduplication by restricted h-vector signatures, and a verification harness.

pub mod catalog;
pub mod construct;
pub mod element_set;
pub mod enumeration;
pub mod error;
pub mod gamma;
pub mod hvector;
pub mod matroid;
pub mod oseq;
pub mod shelling;
pub mod verifier;

#[cfg(test)]
pub(crate) mod fixtures;

pub use construct::{construct, construct_rank3, construct_rank4, step0, ReorderedMatroid};
pub use element_set::{ElementSet, MAX_ELEMENTS};
pub use error::{Error, Result};
pub use gamma::{basis_count, gamma, restricted_h_family, RestrictedHFamily};
pub use hvector::{h_vector_from_f, HVector};
pub use matroid::{BasedMatroid, CanonicalForm, Matroid, Relabelling};
pub use oseq::{ConditionReport, Monomial, OrderIdeal};
pub use shelling::{h_vector_from_shelling, lex_shelling, ShellingRecord};
pub use verifier::{
    run_full_verification, verify_constructions, verify_lemma_rank3, verify_lemma_rank4_edges,
    verify_lemma_rank4_faces, verify_structure, CheckSummary, FailureWitness, VerificationReport,
};
