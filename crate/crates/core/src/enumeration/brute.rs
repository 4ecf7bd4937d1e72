//! Depth-first search over basis indicators with exchange-axiom pruning.
//!
//! Subsets are decided in revlex order. Each time a basis is added, every exchange it takes
//! part in becomes an obligation `(B, B', x)`: some `B - x + y`, `y ∈ B' - B`, must be a basis.
//! An obligation is checked as soon as its last candidate is decided.

use std::collections::BTreeMap;

use crate::element_set::{binomial, ElementSet};
use crate::error::{Error, Result};
use crate::matroid::{descent, revlex_subsets, CanonicalForm, Matroid};

/// Largest `C(n, r)` the exhaustive search accepts.
pub const BRUTE_FORCE_LIMIT: u64 = 20;

struct Obligation {
    b: ElementSet,
    b_prime: ElementSet,
    x: usize,
}

struct Search<'a> {
    subsets: &'a [ElementSet],
    index_of: Vec<u32>,
    chosen: Vec<bool>,
    bases: Vec<ElementSet>,
    // obligations keyed by the index of their last candidate
    pending: Vec<Vec<Obligation>>,
    log: Vec<usize>,
    // keep only families no adjacent transposition improves
    minimal_only: bool,
    n: usize,
    out: Vec<Vec<ElementSet>>,
}

enum Status {
    Satisfied,
    Violated,
    Pending(usize),
}

impl Search<'_> {
    fn status(&self, ob: &Obligation, k: usize) -> Status {
        let stem = ob.b.without(ob.x);
        let mut last = 0;
        for y in (ob.b_prime - ob.b).iter() {
            let i = self.index_of[stem.with(y).bits() as usize] as usize;
            if i <= k {
                if self.chosen[i] {
                    return Status::Satisfied;
                }
            } else {
                last = last.max(i);
            }
        }
        if last == 0 {
            Status::Violated
        } else {
            Status::Pending(last)
        }
    }

    /// Registers the obligations created by making subset `k` a basis.
    fn add_basis(&mut self, k: usize) -> bool {
        let new = self.subsets[k];
        let mut fresh = Vec::new();
        for &old in &self.bases {
            for x in (new - old).iter() {
                fresh.push(Obligation {
                    b: new,
                    b_prime: old,
                    x,
                });
            }
            for x in (old - new).iter() {
                fresh.push(Obligation {
                    b: old,
                    b_prime: new,
                    x,
                });
            }
        }
        for ob in fresh {
            match self.status(&ob, k) {
                Status::Satisfied => {}
                Status::Violated => return false,
                Status::Pending(at) => {
                    self.pending[at].push(ob);
                    self.log.push(at);
                }
            }
        }
        true
    }

    fn closing_ok(&self, k: usize) -> bool {
        self.pending[k]
            .iter()
            .all(|ob| matches!(self.status(ob, k), Status::Satisfied))
    }

    fn undo_to(&mut self, mark: usize) {
        while self.log.len() > mark {
            let at = self.log.pop().unwrap();
            self.pending[at].pop();
        }
    }

    fn run(&mut self, k: usize) {
        if k == self.subsets.len() {
            if !self.bases.is_empty() && (!self.minimal_only || descent::is_minimal(self.n, &self.bases)) {
                self.out.push(self.bases.clone());
            }
            return;
        }
        let mark = self.log.len();
        self.chosen[k] = true;
        if self.add_basis(k) && self.closing_ok(k) {
            self.bases.push(self.subsets[k]);
            self.run(k + 1);
            self.bases.pop();
        }
        self.undo_to(mark);
        self.chosen[k] = false;
        if self.closing_ok(k) {
            self.run(k + 1);
        }
    }
}

fn check_size(n: usize, r: usize) -> Result<()> {
    if n == 0 || n > crate::element_set::MAX_ELEMENTS {
        return Err(Error::GroundSetSize(n));
    }
    let subsets = binomial(n, r);
    if r > n || subsets > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge {
            n,
            r,
            subsets,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    Ok(())
}

/// Every matroid of rank `r` on `{1..n}` as a labelled object (loops allowed).
pub fn labelled_matroids(n: usize, r: usize) -> Result<Vec<Matroid>> {
    search(n, r, false)
}

fn search(n: usize, r: usize, minimal_only: bool) -> Result<Vec<Matroid>> {
    check_size(n, r)?;
    let subsets = revlex_subsets(n, r);
    let mut index_of = vec![u32::MAX; 1 << (n + 1)];
    for (i, s) in subsets.iter().enumerate() {
        index_of[s.bits() as usize] = i as u32;
    }
    let m = subsets.len();
    let mut search = Search {
        subsets: &subsets,
        index_of,
        chosen: vec![false; m],
        bases: Vec::new(),
        pending: (0..m).map(|_| Vec::new()).collect(),
        log: Vec::new(),
        minimal_only,
        n,
        out: Vec::new(),
    };
    search.run(0);
    Ok(search
        .out
        .into_iter()
        .map(|bases| Matroid::from_trusted(n, bases))
        .collect())
}

/// One canonically labelled representative per isomorphism class of rank-`r` matroids on
/// `{1..n}`, sorted by canonical form.
///
/// Only labelled matroids that no adjacent transposition improves are canonicalised; each
/// class's canonical labelling is one of them.
pub fn brute_force_enumerate(n: usize, r: usize) -> Result<Vec<Matroid>> {
    let mut classes: BTreeMap<CanonicalForm, Matroid> = BTreeMap::new();
    for m in search(n, r, true)? {
        let (form, map) = m.canonical_labelling();
        classes.entry(form).or_insert_with(|| m.relabel(&map));
    }
    Ok(classes.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Every nonempty family of `r`-subsets, filtered by the exchange axiom.
    fn labelled_by_definition(n: usize, r: usize) -> Vec<Vec<ElementSet>> {
        let subsets = revlex_subsets(n, r);
        let mut out = Vec::new();
        for pick in 1u32..(1 << subsets.len()) {
            let bases: Vec<ElementSet> = subsets
                .iter()
                .enumerate()
                .filter(|(i, _)| pick >> i & 1 == 1)
                .map(|(_, s)| *s)
                .collect();
            if Matroid::new(n, bases.iter().copied()).is_ok() {
                out.push(bases);
            }
        }
        out
    }

    #[test]
    fn labelled_search_matches_definition() {
        for (n, r) in [(3, 1), (4, 2), (5, 2), (5, 3), (4, 3), (3, 3), (4, 0)] {
            let mut ours: Vec<Vec<ElementSet>> = labelled_matroids(n, r)
                .unwrap()
                .iter()
                .map(|m| m.bases().to_vec())
                .collect();
            let mut theirs = labelled_by_definition(n, r);
            ours.sort();
            theirs.sort();
            assert_eq!(ours, theirs, "n = {n}, r = {r}");
        }
    }

    #[test]
    fn small_class_counts() {
        assert_eq!(brute_force_enumerate(3, 3).unwrap().len(), 1);
        // Rank 1 on n elements: one class per number of loops.
        assert_eq!(brute_force_enumerate(4, 1).unwrap().len(), 4);
        // Rank 2 on 4 elements.
        assert_eq!(brute_force_enumerate(4, 2).unwrap().len(), 7);
        assert!(matches!(brute_force_enumerate(8, 4), Err(Error::TooLarge { subsets: 70, .. })));
    }

    #[test]
    fn representatives_are_canonical() {
        for m in brute_force_enumerate(5, 2).unwrap() {
            assert_eq!(m.indicator().iter().map(|b| *b as u8).collect::<Vec<_>>(), m.canonical_form().bits());
        }
    }
}
