use thiserror::Error;

use crate::element_set::ElementSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no bases given")]
    EmptyBases,

    #[error("basis {basis} has {found} elements but the first basis has {expected}")]
    MixedCardinality {
        basis: ElementSet,
        expected: usize,
        found: usize,
    },

    #[error("exchange axiom fails: B = {b}, B' = {b_prime}, x = {x} has no partner y in B' - B")]
    ExchangeViolation {
        b: ElementSet,
        b_prime: ElementSet,
        x: usize,
    },

    #[error("element {element} is outside the ground set {{1..{n}}}")]
    ElementOutOfRange { element: usize, n: usize },

    #[error("ground set size {0} is not in 1..=16")]
    GroundSetSize(usize),

    #[error("binomial transform produced a negative entry at index {index}")]
    NegativeEntry { index: usize },

    #[error("{set} is dependent or meets the distinguished basis")]
    DependentInput { set: ElementSet },

    #[error("check is inapplicable: {0}")]
    Inapplicable(&'static str),

    #[error("collection is not an order ideal: divisor of {0} is missing")]
    NotAnIdeal(String),

    #[error("relabelling is not a based-matroid isomorphism: {0}")]
    NotAnIsomorphism(String),

    #[error("rank {0} is not supported (only ranks 3 and 4)")]
    RankUnsupported(usize),

    #[error("restricted h-vector {h} of {set} does not fit any case of the rank {rank} algorithm")]
    UnexpectedRestrictedH {
        set: ElementSet,
        h: String,
        rank: usize,
    },

    #[error("indicator has length {found}, expected C({n},{r}) = {expected}")]
    LengthMismatch {
        n: usize,
        r: usize,
        expected: usize,
        found: usize,
    },

    #[error("malformed record: {0}")]
    MalformedRecord(String),

    #[error("C({n},{r}) = {subsets} exceeds the brute-force limit of {limit}")]
    TooLarge {
        n: usize,
        r: usize,
        subsets: u64,
        limit: u64,
    },

    #[error("invalid based matroid: {0}")]
    InvalidBase(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
