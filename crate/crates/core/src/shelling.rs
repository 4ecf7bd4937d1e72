//! Lexicographic shellings and their restriction sets.

use crate::element_set::ElementSet;
use crate::hvector::HVector;
use crate::matroid::{BasedMatroid, Matroid};

/// Bases in shelling order together with their restriction sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellingRecord {
    pub ordered_bases: Vec<ElementSet>,
    pub restriction_sets: Vec<ElementSet>,
}

impl ShellingRecord {
    /// Restriction set of `basis`, if it is one of the shelled bases.
    pub fn restriction_set(&self, basis: ElementSet) -> Option<ElementSet> {
        self.ordered_bases
            .iter()
            .position(|b| *b == basis)
            .map(|i| self.restriction_sets[i])
    }
}

/// Lexicographic shelling of a based matroid: base elements first in ascending order, then
/// the remaining elements in the based order.
pub fn lex_shelling(bm: &BasedMatroid) -> ShellingRecord {
    lex_shelling_by(bm.matroid(), &bm.vertex_positions())
}

/// Lexicographic shelling under the vertex order given by `pos[e]` (smaller is earlier).
///
/// `pos` must be injective on the support of the bases.
pub fn lex_shelling_by(m: &Matroid, pos: &[usize]) -> ShellingRecord {
    let n = m.n();
    // Weight 2^(n - pos) makes earlier vertices dominate, so lex-ascending is key-descending.
    let key = |b: &ElementSet| -> u64 { b.iter().map(|e| 1u64 << (n - pos[e].min(n))).sum() };
    let mut ordered: Vec<ElementSet> = m.bases().to_vec();
    ordered.sort_by_key(|b| std::cmp::Reverse(key(b)));

    let ground = m.ground_set();
    let restriction_sets = ordered
        .iter()
        .map(|&b| {
            b.iter()
                .filter(|&v| {
                    let stem = b.without(v);
                    (ground - b)
                        .iter()
                        .any(|w| pos[w] < pos[v] && m.is_basis(stem.with(w)))
                })
                .collect()
        })
        .collect();
    ShellingRecord {
        ordered_bases: ordered,
        restriction_sets,
    }
}

/// `h_i` = number of restriction sets of size `i`, padded to length `d + 1`.
pub fn h_vector_from_shelling(sr: &ShellingRecord, d: usize) -> HVector {
    let mut h = HVector::zeros(d + 1);
    for r in &sr.restriction_sets {
        h.bump(r.len());
    }
    h
}
