//! Rank-preserving single-element extensions.
//!
//! Extensions by a new element `e` correspond to modular cuts of the lattice of flats, and a
//! nonempty modular cut is determined by the hyperplanes it contains. Those form a linear
//! subclass: whenever two of its hyperplanes meet in a coline, every hyperplane through that
//! coline belongs to it. So for each coline `C` the subclass contains 0, 1 or all of the
//! hyperplanes through `C`. In the extension, `S + e` is a basis for an independent
//! `(r-1)`-set `S` exactly when `cl(S)` is outside the subclass.

use std::collections::BTreeSet;

use crate::element_set::{ElementSet, MAX_ELEMENTS};
use crate::matroid::Matroid;

/// Independent sets of size `k`, ascending.
fn independent_of_size(m: &Matroid, k: usize) -> Vec<ElementSet> {
    let set: BTreeSet<ElementSet> = m
        .bases()
        .iter()
        .flat_map(|b| b.subsets_of_size(k))
        .collect();
    set.into_iter().collect()
}

struct Lattice {
    /// `(S, index of cl(S))` for independent `(r-1)`-sets.
    spanning: Vec<(ElementSet, usize)>,
    hyperplane_count: usize,
    /// For each hyperplane, the colines it contains.
    colines_of: Vec<Vec<usize>>,
    coline_sizes: Vec<usize>,
}

impl Lattice {
    fn new(m: &Matroid) -> Lattice {
        let r = m.rank();
        let mut hyperplanes: Vec<ElementSet> = Vec::new();
        let mut spanning = Vec::new();
        for s in independent_of_size(m, r - 1) {
            let h = m.closure(s);
            let i = match hyperplanes.iter().position(|x| *x == h) {
                Some(i) => i,
                None => {
                    hyperplanes.push(h);
                    hyperplanes.len() - 1
                }
            };
            spanning.push((s, i));
        }
        let colines: BTreeSet<ElementSet> = if r >= 2 {
            independent_of_size(m, r - 2)
                .into_iter()
                .map(|s| m.closure(s))
                .collect()
        } else {
            BTreeSet::new()
        };
        let mut colines_of = vec![Vec::new(); hyperplanes.len()];
        let mut coline_sizes = Vec::new();
        for (c, coline) in colines.iter().enumerate() {
            let mut size = 0;
            for (h, hyp) in hyperplanes.iter().enumerate() {
                if coline.is_subset(*hyp) {
                    colines_of[h].push(c);
                    size += 1;
                }
            }
            coline_sizes.push(size);
        }
        Lattice {
            spanning,
            hyperplane_count: hyperplanes.len(),
            colines_of,
            coline_sizes,
        }
    }

    /// Every linear subclass, as membership vectors over the hyperplanes.
    fn linear_subclasses(&self) -> Vec<Vec<bool>> {
        let mut out = Vec::new();
        let mut state = SubclassSearch {
            lattice: self,
            member: vec![false; self.hyperplane_count],
            ins: vec![0; self.coline_sizes.len()],
            outs: vec![0; self.coline_sizes.len()],
        };
        state.run(0, &mut out);
        out
    }
}

struct SubclassSearch<'a> {
    lattice: &'a Lattice,
    member: Vec<bool>,
    ins: Vec<usize>,
    outs: Vec<usize>,
}

impl SubclassSearch<'_> {
    fn run(&mut self, h: usize, out: &mut Vec<Vec<bool>>) {
        if h == self.lattice.hyperplane_count {
            out.push(self.member.clone());
            return;
        }
        let colines = &self.lattice.colines_of[h];
        // Leaving h out is impossible once two chosen hyperplanes share a coline with it.
        if colines.iter().all(|&c| self.ins[c] < 2) {
            for &c in colines {
                self.outs[c] += 1;
            }
            self.run(h + 1, out);
            for &c in colines {
                self.outs[c] -= 1;
            }
        }
        if colines.iter().all(|&c| self.ins[c] == 0 || self.outs[c] == 0) {
            for &c in colines {
                self.ins[c] += 1;
            }
            self.member[h] = true;
            self.run(h + 1, out);
            self.member[h] = false;
            for &c in colines {
                self.ins[c] -= 1;
            }
        }
    }
}

/// Every rank-preserving extension of `m` by the element `n + 1`, loop and free extensions
/// included. Distinct subclasses give distinct (labelled) extensions.
pub fn extend_by_element(m: &Matroid) -> Vec<Matroid> {
    let n = m.n();
    assert!(n < MAX_ELEMENTS, "no room for element {}", n + 1);
    if m.rank() == 0 {
        return vec![m.with_loop()];
    }
    let e = n + 1;
    let lattice = Lattice::new(m);
    lattice
        .linear_subclasses()
        .into_iter()
        .map(|member| {
            let mut bases = m.bases().to_vec();
            bases.extend(
                lattice
                    .spanning
                    .iter()
                    .filter(|(_, h)| !member[*h])
                    .map(|(s, _)| s.with(e)),
            );
            Matroid::from_trusted(e, bases)
        })
        .collect()
}
