//! The rank 3 and rank 4 constructions of a pure order ideal from a based matroid.
//!
//! Both algorithms read nothing but the restricted h-vectors `h(Γ_I)` and the basis counts
//! `|ℬ_x|`, so they are computed on the original labels with elements of `E - B` compared by
//! their Step 0 rank. This is the same as relabelling by [`step0`], running the algorithm on
//! `{d+1..n}`, and mapping the variables back.

use std::collections::BTreeMap;

use crate::element_set::ElementSet;
use crate::error::{Error, Result};
use crate::gamma::restricted_h_by_label;
use crate::hvector::HVector;
use crate::matroid::BasedMatroid;
use crate::oseq::{Monomial, OrderIdeal};

/// A based matroid relabelled so that the base is `{1..d}` and `E - B` is `{d+1..n}` in Step 0
/// order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReorderedMatroid {
    pub bm: BasedMatroid,
    /// `back_map[new]` is the original label of `new`.
    pub back_map: Vec<usize>,
}

fn check_rank(bm: &BasedMatroid, allowed: &[usize]) -> Result<()> {
    if allowed.contains(&bm.rank()) {
        Ok(())
    } else {
        Err(Error::RankUnsupported(bm.rank()))
    }
}

/// `|ℬ_x|` for every label, 0 for loops and base elements.
fn basis_counts(bm: &BasedMatroid, family: &BTreeMap<ElementSet, HVector>) -> Vec<usize> {
    let mut counts = vec![0; bm.n() + 1];
    for &x in bm.order() {
        if let Some(h) = family.get(&ElementSet::singleton(x)) {
            counts[x] = h.sum() as usize;
        }
    }
    counts
}

/// `E - B` stably sorted by basis count.
fn step0_order(bm: &BasedMatroid, counts: &[usize]) -> Vec<usize> {
    let mut order = bm.order().to_vec();
    order.sort_by_key(|&x| counts[x]);
    order
}

/// Relabels the base as `{1..d}` in ascending order and the rest as `{d+1..n}`, sorted by
/// `|ℬ_x|` with ties kept in the based order.
pub fn step0(bm: &BasedMatroid) -> Result<ReorderedMatroid> {
    check_rank(bm, &[3, 4])?;
    let family = restricted_h_by_label(bm);
    let counts = basis_counts(bm, &family);
    let order = step0_order(bm, &counts);
    let mut forward = vec![0; bm.n() + 1];
    let mut back_map = vec![0; bm.n() + 1];
    for (i, e) in bm.base().iter().chain(order.iter().copied()).enumerate() {
        forward[e] = i + 1;
        back_map[i + 1] = e;
    }
    let d = bm.rank();
    let relabelled = BasedMatroid::new(
        bm.matroid().relabel(&forward),
        ElementSet::full(d),
        (d + 1..=bm.n()).collect(),
    )?;
    Ok(ReorderedMatroid {
        bm: relabelled,
        back_map,
    })
}

/// `I ↦ h(Γ_I)` together with the Step 0 comparison on `E - B`.
struct Input {
    family: BTreeMap<ElementSet, HVector>,
    counts: Vec<usize>,
    rank_of: Vec<usize>,
}

impl Input {
    fn new(bm: &BasedMatroid) -> Input {
        let family = restricted_h_by_label(bm);
        let counts = basis_counts(bm, &family);
        let mut rank_of = vec![usize::MAX; bm.n() + 1];
        for (i, x) in step0_order(bm, &counts).into_iter().enumerate() {
            rank_of[x] = i;
        }
        Input {
            family,
            counts,
            rank_of,
        }
    }

    /// Elements of `s` in Step 0 order.
    fn sorted(&self, s: ElementSet) -> Vec<usize> {
        let mut v: Vec<usize> = s.iter().collect();
        v.sort_by_key(|&x| self.rank_of[x]);
        v
    }

    fn h(&self, s: &[usize]) -> &[u64] {
        self.family[&s.iter().collect::<ElementSet>()].entries()
    }

    fn b(&self, x: usize) -> usize {
        self.counts[x]
    }

    /// Steps 1 to 3 shared by both ranks: `1` and the powers `x^t`, `t ≤ |ℬ_x|`.
    fn start(&self) -> OrderIdeal {
        let mut o = OrderIdeal::new();
        o.insert(Monomial::ONE);
        for (i, _) in &self.family {
            if i.len() == 1 {
                let x = i.min_element().unwrap();
                for t in 1..=self.b(x) {
                    o.insert(Monomial::from_pairs(&[(x, t as u8)]));
                }
            }
        }
        o
    }
}

fn unexpected(vars: &[usize], h: &[u64], rank: usize) -> Error {
    Error::UnexpectedRestrictedH {
        set: vars.iter().collect(),
        h: HVector::new(h.to_vec()).to_string(),
        rank,
    }
}

fn add(o: &mut OrderIdeal, vars: &[usize], patterns: &[&[u8]]) {
    for p in patterns {
        let pairs: Vec<(usize, u8)> = vars.iter().copied().zip(p.iter().copied()).collect();
        o.insert(Monomial::from_pairs(&pairs));
    }
}

/// Algorithm for rank 3.
pub fn construct_rank3(bm: &BasedMatroid) -> Result<OrderIdeal> {
    check_rank(bm, &[3])?;
    let input = Input::new(bm);
    let mut o = input.start();
    for i in input.family.keys() {
        let v = input.sorted(*i);
        match v.len() {
            2 => {
                let (x, h) = (v[0], input.h(&v));
                let pats: &[&[u8]] = match h {
                    [1, 0] => &[&[1, 1]],
                    [1, 1] if input.b(x) == 1 => &[&[1, 1], &[1, 2]],
                    [1, 1] => &[&[1, 1], &[2, 1]],
                    [1, 2] => &[&[1, 1], &[1, 2], &[2, 1]],
                    _ => return Err(unexpected(&v, h, 3)),
                };
                add(&mut o, &v, pats);
            }
            3 => add(&mut o, &v, &[&[1, 1, 1]]),
            _ => {}
        }
    }
    Ok(o)
}

fn rank4_pair(input: &Input, v: &[usize]) -> &'static [&'static [u8]] {
    let bx = input.b(v[0]);
    match input.h(v) {
        [1, 0, 0] => &[&[1, 1]],
        [1, 1, 0] if bx == 1 => &[&[1, 1], &[1, 2]],
        [1, 1, 0] => &[&[1, 1], &[2, 1]],
        [1, 1, 1] if bx == 1 => &[&[1, 1], &[1, 2], &[1, 3]],
        [1, 1, 1] => &[&[1, 1], &[2, 1], &[3, 1]],
        [1, 2, 0] => &[&[1, 1], &[2, 1], &[1, 2]],
        [1, 2, 1] => &[&[1, 1], &[2, 1], &[1, 2], &[2, 2]],
        [1, 2, 2] if bx < 3 => &[&[1, 1], &[2, 1], &[1, 2], &[2, 2], &[1, 3]],
        [1, 2, 2] => &[&[1, 1], &[2, 1], &[1, 2], &[3, 1], &[1, 3]],
        _ => &[&[1, 1], &[2, 1], &[1, 2], &[3, 1], &[2, 2], &[1, 3]],
    }
}

const XYZ: &[u8] = &[1, 1, 1];
const X2YZ: &[u8] = &[2, 1, 1];
const XY2Z: &[u8] = &[1, 2, 1];
const XYZ2: &[u8] = &[1, 1, 2];

fn rank4_triple(input: &Input, v: &[usize]) -> Result<&'static [&'static [u8]]> {
    let (x, y, z) = (v[0], v[1], v[2]);
    let (bx, by, bz) = (input.b(x), input.b(y), input.b(z));
    let hxy = input.h(&[x, y]);
    let hxz = input.h(&[x, z]);
    let hyz = input.h(&[y, z]);
    let edge = |h: &[u64]| h == [1, 1, 0] || h == [1, 1, 1];
    Ok(match input.h(v) {
        [1, 0] => &[XYZ],
        [1, 1] => {
            if hxy == [1, 0, 0] {
                &[XYZ, XYZ2]
            } else if hxz == [1, 0, 0] {
                &[XYZ, XY2Z]
            } else if hyz == [1, 0, 0] {
                &[XYZ, X2YZ]
            } else if edge(hxy) {
                if bx == 1 {
                    &[XYZ, XY2Z]
                } else {
                    &[XYZ, X2YZ]
                }
            } else if hxz == [1, 1, 0] {
                if bx == 1 {
                    &[XYZ, XYZ2]
                } else {
                    &[XYZ, X2YZ]
                }
            } else if edge(hyz) {
                if by == 1 {
                    &[XYZ, XYZ2]
                } else {
                    &[XYZ, XY2Z]
                }
            } else {
                &[XYZ, X2YZ]
            }
        }
        [1, 2] => {
            if bx == 1 {
                &[XYZ, XY2Z, XYZ2]
            } else if by == 1 {
                &[XYZ, X2YZ, XYZ2]
            } else if bz == 1 {
                &[XYZ, X2YZ, XY2Z]
            } else if edge(hxy) {
                if bx > by {
                    &[XYZ, XY2Z, XYZ2]
                } else {
                    &[XYZ, X2YZ, XYZ2]
                }
            } else if edge(hxz) {
                if bx > bz {
                    &[XYZ, XY2Z, XYZ2]
                } else {
                    &[XYZ, X2YZ, XY2Z]
                }
            } else if edge(hyz) {
                if by > bz {
                    &[XYZ, X2YZ, XYZ2]
                } else {
                    &[XYZ, X2YZ, XY2Z]
                }
            } else if hxy == [1, 2, 0] {
                &[XYZ, X2YZ, XY2Z]
            } else if hxz == [1, 2, 0] {
                &[XYZ, X2YZ, XYZ2]
            } else if hyz == [1, 2, 0] {
                &[XYZ, XY2Z, XYZ2]
            } else {
                &[XYZ, X2YZ, XY2Z]
            }
        }
        [1, 3] => &[XYZ, X2YZ, XY2Z, XYZ2],
        h => return Err(unexpected(v, h, 4)),
    })
}

/// Algorithm for rank 4.
pub fn construct_rank4(bm: &BasedMatroid) -> Result<OrderIdeal> {
    check_rank(bm, &[4])?;
    let input = Input::new(bm);
    let mut o = input.start();
    for i in input.family.keys() {
        let v = input.sorted(*i);
        match v.len() {
            2 => add(&mut o, &v, rank4_pair(&input, &v)),
            3 => add(&mut o, &v, rank4_triple(&input, &v)?),
            4 => add(&mut o, &v, &[&[1, 1, 1, 1]]),
            _ => {}
        }
    }
    Ok(o)
}

/// Runs the algorithm matching the rank of `bm`.
pub fn construct(bm: &BasedMatroid) -> Result<OrderIdeal> {
    match bm.rank() {
        3 => construct_rank3(bm),
        4 => construct_rank4(bm),
        r => Err(Error::RankUnsupported(r)),
    }
}

/// The construction on `Δ|_{B ∪ I}` for every independent `I` disjoint from the base.
pub fn restriction_outputs(bm: &BasedMatroid) -> Result<Vec<(ElementSet, OrderIdeal)>> {
    bm.independent_off_base()
        .into_iter()
        .map(|i| construct(&bm.restrict_to(i)).map(|o| (i, o)))
        .collect()
}

/// Union of the constructions on all restrictions `Δ|_{B ∪ I}`.
pub fn union_of_restrictions(bm: &BasedMatroid) -> Result<OrderIdeal> {
    let mut out = OrderIdeal::new();
    for (_, o) in restriction_outputs(bm)? {
        for m in o.iter() {
            out.insert(*m);
        }
    }
    Ok(out)
}
