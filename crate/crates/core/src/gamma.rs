//! The restricted link matroids `Γ_I` of a based matroid and the identities they satisfy.
//!
//! For an independent set `I` disjoint from the base `B`, `Γ_I` is the matroid on `B` whose
//! independent sets are the `G ⊆ B` with `G ∪ I` independent. Its bases are the sets `B' - I`
//! for bases `B'` with `I ⊆ B' ⊆ B ∪ I`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::element_set::ElementSet;
use crate::error::{Error, Result};
use crate::hvector::HVector;
use crate::matroid::{BasedMatroid, Matroid};
use crate::shelling::{h_vector_from_shelling, lex_shelling, lex_shelling_by};

fn check_input(bm: &BasedMatroid, i_set: ElementSet) -> Result<()> {
    if !i_set.is_disjoint(bm.base()) || !bm.matroid().is_independent(i_set) {
        return Err(Error::DependentInput { set: i_set });
    }
    Ok(())
}

fn gamma_bases(bm: &BasedMatroid, i_set: ElementSet) -> Vec<ElementSet> {
    let span = bm.base() | i_set;
    bm.matroid()
        .bases()
        .iter()
        .filter(|b| i_set.is_subset(**b) && b.is_subset(span))
        .map(|b| *b - i_set)
        .collect()
}

/// `Γ_I` as a matroid on the base, keeping the ground-set width (other elements are loops).
pub fn gamma(bm: &BasedMatroid, i_set: ElementSet) -> Result<Matroid> {
    check_input(bm, i_set)?;
    Ok(Matroid::from_trusted(bm.n(), gamma_bases(bm, i_set)))
}

/// `|ℬ_I|`, the number of bases of `Γ_I`.
pub fn basis_count(bm: &BasedMatroid, i_set: ElementSet) -> Result<usize> {
    check_input(bm, i_set)?;
    Ok(gamma_bases(bm, i_set).len())
}

/// `h(Γ_I)` for every independent `I` disjoint from the base, keyed by element labels.
pub fn restricted_h_by_label(bm: &BasedMatroid) -> BTreeMap<ElementSet, HVector> {
    bm.independent_off_base()
        .into_iter()
        .map(|i| {
            let g = Matroid::from_trusted(bm.n(), gamma_bases(bm, i));
            (i, g.h_vector())
        })
        .collect()
}

/// The map `I ↦ h(Γ_I)` with each `I` encoded by the 1-based positions of its elements in the
/// based order. Two based matroids with equal families receive identical constructions up to
/// renaming elements by position.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct RestrictedHFamily {
    entries: BTreeMap<ElementSet, HVector>,
}

impl RestrictedHFamily {
    pub(crate) fn from_label_map(bm: &BasedMatroid, by_label: &BTreeMap<ElementSet, HVector>) -> Self {
        Self::from_positions(by_label, &position_table(bm))
    }

    /// Re-keys a label map through `pos[e]`, the 1-based position of each element.
    pub(crate) fn from_positions(by_label: &BTreeMap<ElementSet, HVector>, pos: &[usize]) -> Self {
        let entries = by_label
            .iter()
            .map(|(i, h)| (i.relabel(pos), h.clone()))
            .collect();
        RestrictedHFamily { entries }
    }

    /// Entry for a set of positions.
    pub fn get(&self, positions: ElementSet) -> Option<&HVector> {
        self.entries.get(&positions)
    }

    /// Entry for a set of element labels of `bm`.
    pub fn get_by_label(&self, bm: &BasedMatroid, labels: ElementSet) -> Option<&HVector> {
        self.get(bm.positions_of(labels))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ElementSet, &HVector)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Stable byte encoding used for hashing signatures to files.
    pub fn encode(&self) -> Vec<u8> {
        let mut out = Vec::new();
        for (k, h) in &self.entries {
            out.extend_from_slice(&k.bits().to_le_bytes());
            out.push(h.len() as u8);
            for v in h.entries() {
                out.extend_from_slice(&(*v as u32).to_le_bytes());
            }
        }
        out
    }
}

/// `pos[e]` = 1-based position of `e` in the based order (0 for base elements).
fn position_table(bm: &BasedMatroid) -> Vec<usize> {
    let mut pos = vec![0; bm.n() + 1];
    for (i, &e) in bm.order().iter().enumerate() {
        pos[e] = i + 1;
    }
    pos
}

fn key_string(k: &ElementSet) -> String {
    k.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Debug for RestrictedHFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.entries.iter().map(|(k, v)| (k.to_string(), v.to_string())))
            .finish()
    }
}

/// Serialized as a JSON object from comma-joined positions (`""` for the empty set) to arrays.
impl Serialize for RestrictedHFamily {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.entries.len()))?;
        for (k, v) in &self.entries {
            map.serialize_entry(&key_string(k), v)?;
        }
        map.end()
    }
}

/// `h(Γ_I)` for every independent `I` disjoint from the base, keyed by order positions.
pub fn restricted_h_family(bm: &BasedMatroid) -> RestrictedHFamily {
    RestrictedHFamily::from_label_map(bm, &restricted_h_by_label(bm))
}

/// Compares `U_I = {R(B, Δ) - I : B - base = I}` from the shelling of `Δ` against
/// `V_I = {R(G, Γ_I)}` from the natural-order shelling of `Γ_I`.
pub fn check_u_equals_v(bm: &BasedMatroid, i_set: ElementSet) -> Result<bool> {
    let (u, v) = u_and_v(bm, i_set)?;
    Ok(u == v)
}

pub(crate) fn u_and_v(
    bm: &BasedMatroid,
    i_set: ElementSet,
) -> Result<(BTreeSet<ElementSet>, BTreeSet<ElementSet>)> {
    let sr = lex_shelling(bm);
    u_and_v_with(bm, i_set, &sr)
}

pub(crate) fn u_and_v_with(
    bm: &BasedMatroid,
    i_set: ElementSet,
    sr: &crate::shelling::ShellingRecord,
) -> Result<(BTreeSet<ElementSet>, BTreeSet<ElementSet>)> {
    let g = gamma(bm, i_set)?;
    let u = sr
        .ordered_bases
        .iter()
        .zip(&sr.restriction_sets)
        .filter(|(b, _)| **b - bm.base() == i_set)
        .map(|(_, r)| *r - i_set)
        .collect();
    let natural: Vec<usize> = (0..=bm.n()).collect();
    let v = lex_shelling_by(&g, &natural)
        .restriction_sets
        .into_iter()
        .collect();
    Ok((u, v))
}

/// `h(Δ, x) = Σ_I x^{|I|} h(Γ_I, x)`, with the left side from the lexicographic shelling.
pub fn check_decomposition(bm: &BasedMatroid) -> bool {
    let d = bm.rank();
    let lhs = h_vector_from_shelling(&lex_shelling(bm), d);
    lhs == decomposition_sum(bm, &restricted_h_by_label(bm))
}

pub(crate) fn decomposition_sum(bm: &BasedMatroid, by_label: &BTreeMap<ElementSet, HVector>) -> HVector {
    let mut rhs = HVector::zeros(bm.rank() + 1);
    for (i, h) in by_label {
        rhs.add_shifted(h, i.len());
    }
    rhs
}

/// Sets `I` with `h_{d-|I|}(Γ_I) = 0` that admit no `z ∉ B ∪ I` with `I ∪ z` independent.
///
/// Only meaningful when `h_d(Δ) ≠ 0`; returns [`Error::Inapplicable`] otherwise.
pub fn going_up_failures(bm: &BasedMatroid) -> Result<Vec<ElementSet>> {
    let m = bm.matroid();
    let d = m.rank();
    if m.h_vector().get(d) == 0 {
        return Err(Error::Inapplicable("h_d = 0, the matroid is a cone"));
    }
    let outside = m.ground_set() - bm.base();
    let mut failures = Vec::new();
    for (i, h) in restricted_h_by_label(bm) {
        if h.get(d - i.len()) != 0 {
            continue;
        }
        let witness = (outside - i).iter().any(|z| m.is_independent(i.with(z)));
        if !witness {
            failures.push(i);
        }
    }
    Ok(failures)
}

pub fn check_going_up(bm: &BasedMatroid) -> Result<bool> {
    going_up_failures(bm).map(|f| f.is_empty())
}
