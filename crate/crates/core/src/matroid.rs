//! Matroids given by their bases over the ground set `{1..n}`.
//!
//! Bases are stored as [`ElementSet`]s sorted ascending as integers. A bitmap over all
//! `2^(n+1)` masks gives constant-time basis lookup. Restrictions keep the ground-set width `n`:
//! elements outside the restricting set simply appear in no basis.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::element_set::{binomial, ElementSet, MAX_ELEMENTS};
use crate::error::{Error, Result};
use crate::hvector::{h_vector_from_f, HVector};

/// A permutation of `{1..n}` stored as `map[e] = image of e`; `map[0]` is unused.
pub type Relabelling = Vec<usize>;

#[derive(Clone)]
pub struct Matroid {
    n: usize,
    rank: usize,
    bases: Vec<ElementSet>,
    lookup: Vec<u64>,
}

fn bitmap_for(n: usize, sets: &[ElementSet]) -> Vec<u64> {
    let words = ((1usize << (n + 1)) + 63) / 64;
    let mut map = vec![0u64; words];
    for s in sets {
        let b = s.bits() as usize;
        map[b >> 6] |= 1 << (b & 63);
    }
    map
}

#[inline]
fn bitmap_has(map: &[u64], s: ElementSet) -> bool {
    let b = s.bits() as usize;
    map.get(b >> 6).is_some_and(|w| w & (1 << (b & 63)) != 0)
}

impl Matroid {
    /// Validates `bases` against the basis axioms and returns the matroid they define.
    ///
    /// Duplicate bases are merged. The exchange check is exhaustive over ordered pairs.
    pub fn new(n: usize, bases: impl IntoIterator<Item = ElementSet>) -> Result<Matroid> {
        if n == 0 || n > MAX_ELEMENTS {
            return Err(Error::GroundSetSize(n));
        }
        let ground = ElementSet::full(n);
        let mut bases: Vec<ElementSet> = bases.into_iter().collect();
        if let Some(bad) = bases.iter().find(|b| !b.is_subset(ground)) {
            let element = (*bad - ground).max_element().unwrap_or(0);
            return Err(Error::ElementOutOfRange { element, n });
        }
        if bases.is_empty() {
            return Err(Error::EmptyBases);
        }
        bases.sort_unstable();
        bases.dedup();
        let rank = bases[0].len();
        if let Some(b) = bases.iter().find(|b| b.len() != rank) {
            return Err(Error::MixedCardinality {
                basis: *b,
                expected: rank,
                found: b.len(),
            });
        }
        let lookup = bitmap_for(n, &bases);
        if let Some((b, b_prime, x)) = find_exchange_violation(&bases, &lookup) {
            return Err(Error::ExchangeViolation { b, b_prime, x });
        }
        Ok(Matroid {
            n,
            rank,
            bases,
            lookup,
        })
    }

    /// Convenience constructor from 1-based element lists.
    pub fn from_lists<L: AsRef<[usize]>>(n: usize, lists: &[L]) -> Result<Matroid> {
        let mut sets = Vec::with_capacity(lists.len());
        for l in lists {
            let l = l.as_ref();
            if let Some(&e) = l.iter().find(|&&e| e == 0 || e > n) {
                return Err(Error::ElementOutOfRange { element: e, n });
            }
            sets.push(l.iter().collect());
        }
        Matroid::new(n, sets)
    }

    pub(crate) fn from_trusted(n: usize, mut bases: Vec<ElementSet>) -> Matroid {
        bases.sort_unstable();
        bases.dedup();
        debug_assert!(!bases.is_empty());
        let rank = bases[0].len();
        let lookup = bitmap_for(n, &bases);
        Matroid {
            n,
            rank,
            bases,
            lookup,
        }
    }

    /// The uniform matroid `U_{r,n}`.
    pub fn uniform(r: usize, n: usize) -> Matroid {
        Matroid::from_trusted(n, ElementSet::full(n).subsets_of_size(r).collect())
    }

    /// The matroid on `{1..n}` whose only basis is `{1..r}`; elements above `r` are loops.
    pub fn simplex(r: usize, n: usize) -> Matroid {
        Matroid::from_trusted(n, vec![ElementSet::full(r)])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ground_set(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    pub fn bases(&self) -> &[ElementSet] {
        &self.bases
    }

    pub fn is_basis(&self, s: ElementSet) -> bool {
        bitmap_has(&self.lookup, s)
    }

    pub fn is_independent(&self, s: ElementSet) -> bool {
        s.len() <= self.rank && self.bases.iter().any(|b| s.is_subset(*b))
    }

    /// Size of a largest independent subset of `a`.
    pub fn rank_of(&self, a: ElementSet) -> usize {
        let a = a & self.ground_set();
        let mut best = 0;
        for b in &self.bases {
            best = best.max((*b & a).len());
            if best == self.rank {
                break;
            }
        }
        best
    }

    /// `{e : rank(a + e) = rank(a)}`.
    pub fn closure(&self, a: ElementSet) -> ElementSet {
        let r = self.rank_of(a);
        self.ground_set()
            .iter()
            .filter(|&e| a.contains(e) || self.rank_of(a.with(e)) == r)
            .collect()
    }

    /// Restriction to `a`, keeping the ground-set width; elements outside `a` become loops.
    pub fn restriction(&self, a: ElementSet) -> Matroid {
        let a = a & self.ground_set();
        let r = self.rank_of(a);
        let bases = self
            .bases
            .iter()
            .map(|b| *b & a)
            .filter(|b| b.len() == r)
            .collect();
        Matroid::from_trusted(self.n, bases)
    }

    pub fn dual(&self) -> Matroid {
        let e = self.ground_set();
        Matroid::from_trusted(self.n, self.bases.iter().map(|b| e - *b).collect())
    }

    pub fn loops(&self) -> ElementSet {
        let union = self.bases.iter().fold(ElementSet::EMPTY, |acc, b| acc | *b);
        self.ground_set() - union
    }

    pub fn coloops(&self) -> ElementSet {
        self.bases
            .iter()
            .fold(self.ground_set(), |acc, b| acc & *b)
    }

    pub fn is_cone(&self) -> bool {
        !self.coloops().is_empty()
    }

    /// Bitmap over all masks marking the independent sets.
    pub fn independent_sets(&self) -> Vec<u64> {
        let mut map = vec![0u64; ((1usize << (self.n + 1)) + 63) / 64];
        for b in &self.bases {
            for s in b.subsets() {
                let i = s.bits() as usize;
                map[i >> 6] |= 1 << (i & 63);
            }
        }
        map
    }

    /// `(f_0, ..., f_d)` where `f_j` counts independent sets of size `j`.
    pub fn f_vector(&self) -> HVector {
        let mut f = HVector::zeros(self.rank + 1);
        if self.bases.len() == 1 {
            let d = self.rank;
            return HVector::new((0..=d).map(|j| binomial(d, j)).collect());
        }
        let map = self.independent_sets();
        for (w, word) in map.iter().enumerate() {
            let mut bits = *word;
            while bits != 0 {
                let i = (w << 6) | bits.trailing_zeros() as usize;
                bits &= bits - 1;
                f.bump((i as u32).count_ones() as usize);
            }
        }
        f
    }

    /// h-vector through the binomial transform of the f-vector.
    pub fn h_vector(&self) -> HVector {
        h_vector_from_f(&self.f_vector()).expect("f-vector of a matroid has a nonnegative h-vector")
    }

    /// Image of the matroid under a permutation of `{1..n}`.
    pub fn relabel(&self, map: &[usize]) -> Matroid {
        Matroid::from_trusted(self.n, self.bases.iter().map(|b| b.relabel(map)).collect())
    }

    /// Bases adjoined by a fresh loop `n + 1`.
    pub fn with_loop(&self) -> Matroid {
        Matroid::from_trusted(self.n + 1, self.bases.clone())
    }

    /// Basis indicator over the `rank`-subsets of `{1..n}` in revlex order.
    pub fn indicator(&self) -> Vec<bool> {
        revlex_subsets(self.n, self.rank)
            .into_iter()
            .map(|s| self.is_basis(s))
            .collect()
    }

    /// Lexicographically least revlex basis indicator over all relabellings of the ground set.
    pub fn canonical_form(&self) -> CanonicalForm {
        self.canonical_labelling().0
    }

    /// Canonical form together with a relabelling `map` such that `self.relabel(map)` has
    /// exactly the canonical indicator.
    pub fn canonical_labelling(&self) -> (CanonicalForm, Relabelling) {
        canonical::search(self)
    }
}

/// Returns the first `(B, B', x)` with no exchange partner, scanning pairs in basis order.
pub(crate) fn find_exchange_violation(
    bases: &[ElementSet],
    lookup: &[u64],
) -> Option<(ElementSet, ElementSet, usize)> {
    for &b in bases {
        for &bp in bases {
            if b == bp {
                continue;
            }
            let only_b = b - bp;
            let only_bp = bp - b;
            for x in only_b.iter() {
                let stem = b.without(x);
                if !only_bp.iter().any(|y| bitmap_has(lookup, stem.with(y))) {
                    return Some((b, bp, x));
                }
            }
        }
    }
    None
}

/// The `r`-subsets of `{1..n}` in revlex order: `A` precedes `B` iff `max(A △ B)` lies in `B`.
/// This coincides with ascending order of the bitmasks.
pub fn revlex_subsets(n: usize, r: usize) -> Vec<ElementSet> {
    let mut out = Vec::with_capacity(binomial(n, r) as usize);
    if r > n {
        return out;
    }
    if r == 0 {
        out.push(ElementSet::EMPTY);
        return out;
    }
    // Gosper's hack over bits 0..n, shifted up to labels 1..=n.
    let mut v: u32 = (1u32 << r) - 1;
    let limit: u32 = 1 << n;
    while v < limit {
        out.push(ElementSet::from_bits_unchecked(v << 1));
        let t = v | (v - 1);
        v = (t + 1) | (((!t & (!t).wrapping_neg()) - 1) >> (v.trailing_zeros() + 1));
    }
    out
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.bases == other.bases
    }
}

impl Eq for Matroid {}

impl Hash for Matroid {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.bases.hash(state);
    }
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matroid(n={}, r={}, bases=[", self.n, self.rank)?;
        for (i, b) in self.bases.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{b}")?;
        }
        f.write_str("])")
    }
}

#[derive(Serialize, Deserialize)]
struct MatroidJson {
    n: usize,
    bases: Vec<Vec<usize>>,
}

impl Serialize for Matroid {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatroidJson {
            n: self.n,
            bases: self.bases.iter().map(|b| b.iter().collect()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matroid {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = MatroidJson::deserialize(d)?;
        Matroid::from_lists(raw.n, &raw.bases).map_err(serde::de::Error::custom)
    }
}

/// Canonical basis indicator of an isomorphism class, tagged with `(n, rank)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub n: usize,
    pub rank: usize,
    bits: Vec<u8>,
}

impl CanonicalForm {
    pub fn bits(&self) -> &[u8] {
        &self.bits
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.bits {
            f.write_str(if *b == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm(n={}, r={}, {})", self.n, self.rank, self)
    }
}

/// Descent under adjacent transpositions of labels.
///
/// The canonical indicator is least over all relabelings, so in particular no swap of labels
/// `i, i + 1` shortens it. Enumerators use this to discard most labelled copies of a class
/// before running the full search.
pub(crate) mod descent {
    use super::ElementSet;

    fn swapped(s: ElementSet, i: usize) -> ElementSet {
        let b = s.bits();
        if (b >> i ^ b >> (i + 1)) & 1 == 1 {
            ElementSet::from_bits(b ^ (3 << i)).expect("swap stays in range")
        } else {
            s
        }
    }

    /// Whether swapping labels `i` and `i + 1` makes the indicator of the sorted family smaller.
    ///
    /// The first position where two indicators differ is the least set in their symmetric
    /// difference, and the swap wins when that set is one it removes.
    fn improves(bases: &[ElementSet], i: usize) -> bool {
        let mut lost = None;
        let mut gained: Option<ElementSet> = None;
        for &b in bases {
            let s = swapped(b, i);
            if s != b && bases.binary_search(&s).is_err() {
                lost.get_or_insert(b);
                gained = Some(gained.map_or(s, |g| g.min(s)));
            }
        }
        matches!((lost, gained), (Some(l), Some(g)) if l < g)
    }

    /// No adjacent transposition shortens the indicator. `bases` must be sorted.
    pub(crate) fn is_minimal(n: usize, bases: &[ElementSet]) -> bool {
        (1..n).all(|i| !improves(bases, i))
    }

    /// Applies improving adjacent transpositions until none is left; returns the sorted family.
    pub(crate) fn descend(n: usize, mut bases: Vec<ElementSet>) -> Vec<ElementSet> {
        loop {
            let mut moved = false;
            for i in 1..n {
                if improves(&bases, i) {
                    for b in &mut bases {
                        *b = swapped(*b, i);
                    }
                    bases.sort_unstable();
                    moved = true;
                }
            }
            if !moved {
                return bases;
            }
        }
    }
}

mod canonical {
    //! Level-by-level search for the lexicographically least indicator.
    //!
    //! Assigning labels `1..k` to original elements fixes the indicator prefix over the
    //! `r`-subsets of `{1..k}`, and all partial assignments at level `k` have prefixes of the
    //! same length. The least full string therefore has the least prefix at every level, so only
    //! partial assignments attaining the least prefix are expanded. Elements whose transposition
    //! is an automorphism are interchangeable, so only one per class is tried at each step.

    use super::*;

    struct Node {
        // label -> original element, index 0 unused
        labels: Vec<usize>,
        used: ElementSet,
    }

    fn twin_classes(m: &Matroid) -> Vec<usize> {
        let n = m.n;
        let mut class: Vec<usize> = (0..=n).collect();
        for a in 1..=n {
            if class[a] != a {
                continue;
            }
            for b in a + 1..=n {
                if class[b] != b {
                    continue;
                }
                let mut swap: Vec<usize> = (0..=n).collect();
                swap[a] = b;
                swap[b] = a;
                if m.bases.iter().all(|s| m.is_basis(s.relabel(&swap))) {
                    class[b] = a;
                }
            }
        }
        class
    }

    /// `(r-1)`-subsets of `{1..k-1}` in revlex order, as label masks.
    fn segment_masks(k: usize, r: usize) -> Vec<ElementSet> {
        if r == 0 {
            return Vec::new();
        }
        revlex_subsets(k - 1, r - 1)
    }

    fn segment(m: &Matroid, node: &Node, e: usize, masks: &[ElementSet], out: &mut Vec<u8>) {
        out.clear();
        for s in masks {
            let mut orig = ElementSet::singleton(e);
            for l in s.iter() {
                orig = orig.with(node.labels[l]);
            }
            out.push(m.is_basis(orig) as u8);
        }
    }

    pub(super) fn search(m: &Matroid) -> (CanonicalForm, Relabelling) {
        let n = m.n;
        let r = m.rank;
        let class = twin_classes(m);
        let mut frontier = vec![Node {
            labels: vec![0],
            used: ElementSet::EMPTY,
        }];
        let mut bits: Vec<u8> = Vec::with_capacity(binomial(n, r) as usize);
        let mut seg = Vec::new();
        for k in 1..=n {
            let masks = segment_masks(k, r);
            let mut best: Option<Vec<u8>> = None;
            let mut next: Vec<Node> = Vec::new();
            for node in &frontier {
                let mut tried = ElementSet::EMPTY;
                for e in 1..=n {
                    if node.used.contains(e) || tried.contains(class[e]) {
                        continue;
                    }
                    tried = tried.with(class[e]);
                    segment(m, node, e, &masks, &mut seg);
                    let ord = match &best {
                        None => Ordering::Less,
                        Some(b) => seg.as_slice().cmp(b.as_slice()),
                    };
                    if ord == Ordering::Greater {
                        continue;
                    }
                    if ord == Ordering::Less {
                        best = Some(seg.clone());
                        next.clear();
                    }
                    let mut labels = node.labels.clone();
                    labels.push(e);
                    next.push(Node {
                        labels,
                        used: node.used.with(e),
                    });
                }
            }
            bits.extend_from_slice(best.as_deref().unwrap_or(&[]));
            frontier = next;
        }
        let winner = &frontier[0];
        let mut map = vec![0; n + 1];
        for (label, &orig) in winner.labels.iter().enumerate().skip(1) {
            map[orig] = label;
        }
        (CanonicalForm { n, rank: r, bits }, map)
    }
}

/// A matroid with a distinguished basis and a total order on the remaining elements.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BasedMatroid {
    matroid: Matroid,
    base: ElementSet,
    order: Vec<usize>,
}

impl BasedMatroid {
    pub fn new(matroid: Matroid, base: ElementSet, order: Vec<usize>) -> Result<BasedMatroid> {
        if !matroid.is_basis(base) {
            return Err(Error::InvalidBase(format!("{base} is not a basis")));
        }
        let rest = matroid.ground_set() - base;
        let seen: ElementSet = order
            .iter()
            .filter(|&&e| (1..=matroid.n()).contains(&e))
            .collect();
        if order.len() != rest.len() || seen != rest {
            return Err(Error::InvalidBase(format!(
                "order {order:?} is not a permutation of {rest}"
            )));
        }
        Ok(BasedMatroid {
            matroid,
            base,
            order,
        })
    }

    /// Based at `base` with the remaining elements in ascending order.
    pub fn with_base(matroid: Matroid, base: ElementSet) -> Result<BasedMatroid> {
        let order = (matroid.ground_set() - base).iter().collect();
        BasedMatroid::new(matroid, base, order)
    }

    /// Based at the lexicographically smallest basis under the natural order.
    pub fn natural(matroid: Matroid) -> BasedMatroid {
        let base = lex_smallest_basis(&matroid);
        BasedMatroid::with_base(matroid, base).expect("lex-smallest basis is a basis")
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn base(&self) -> ElementSet {
        self.base
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn rank(&self) -> usize {
        self.matroid.rank()
    }

    pub fn n(&self) -> usize {
        self.matroid.n()
    }

    /// Base elements ascending, then the ordered remainder.
    pub fn vertex_order(&self) -> Vec<usize> {
        self.base.iter().chain(self.order.iter().copied()).collect()
    }

    /// `pos[e]` = 0-based position of `e` in [`vertex_order`](Self::vertex_order).
    pub fn vertex_positions(&self) -> Vec<usize> {
        let mut pos = vec![usize::MAX; self.n() + 1];
        for (i, e) in self.vertex_order().into_iter().enumerate() {
            pos[e] = i;
        }
        pos
    }

    /// Maps a subset of `E - base` to the set of its 1-based positions in the order.
    pub fn positions_of(&self, s: ElementSet) -> ElementSet {
        self.order
            .iter()
            .enumerate()
            .filter(|(_, e)| s.contains(**e))
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Independent sets disjoint from the base, in ascending mask order.
    pub fn independent_off_base(&self) -> Vec<ElementSet> {
        let rest = self.matroid.ground_set() - self.base;
        let mut out: Vec<ElementSet> = self
            .matroid
            .bases()
            .iter()
            .flat_map(|b| (*b & rest).subsets())
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// `(Δ|_{B ∪ I}, B, <)` with the order inherited unchanged.
    pub fn restrict_to(&self, i_set: ElementSet) -> BasedMatroid {
        BasedMatroid {
            matroid: self.matroid.restriction(self.base | i_set),
            base: self.base,
            order: self.order.clone(),
        }
    }

    /// Pushes the based matroid forward along a permutation of `{1..n}`.
    pub fn relabel(&self, map: &[usize]) -> Result<BasedMatroid> {
        check_permutation(map, self.n())?;
        Ok(BasedMatroid {
            matroid: self.matroid.relabel(map),
            base: self.base.relabel(map),
            order: self.order.iter().map(|&e| map[e]).collect(),
        })
    }
}

/// Lexicographically smallest basis, comparing sorted element sequences.
pub fn lex_smallest_basis(m: &Matroid) -> ElementSet {
    *m.bases()
        .iter()
        .min_by(|a, b| a.iter().cmp(b.iter()))
        .expect("matroids have at least one basis")
}

pub(crate) fn check_permutation(map: &[usize], n: usize) -> Result<()> {
    if map.len() != n + 1 {
        return Err(Error::NotAnIsomorphism(format!(
            "expected {} entries, got {}",
            n + 1,
            map.len()
        )));
    }
    let image: ElementSet = map[1..].iter().filter(|&&e| (1..=n).contains(&e)).collect();
    if image != ElementSet::full(n) {
        return Err(Error::NotAnIsomorphism(format!(
            "{:?} is not a permutation of 1..={n}",
            &map[1..]
        )));
    }
    Ok(())
}
