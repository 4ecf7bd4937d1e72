//! Corpus-wide checks: the pair and triple basis-count lemmas, the structural identities of the
//! lexicographic decomposition, and the full construct-and-check pipeline.
//!
//! Every check counts the instances it looked at and keeps a witness for each failure. Runs
//! never stop at the first failure.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::construct::construct;
use crate::element_set::ElementSet;
use crate::enumeration::{based_matroids, enumerate_up_to, Corpus};
use crate::error::Result;
use crate::gamma::{decomposition_sum, going_up_failures, restricted_h_by_label, u_and_v_with, RestrictedHFamily};
use crate::hvector::HVector;
use crate::matroid::{BasedMatroid, Matroid};
use crate::oseq::{check_conditions_with, OrderIdeal};
use crate::shelling::{h_vector_from_shelling, lex_shelling};

/// One failed instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FailureWitness {
    pub matroid: Matroid,
    pub base: Option<ElementSet>,
    pub order: Option<Vec<usize>>,
    pub detail: String,
}

impl FailureWitness {
    fn based(bm: &BasedMatroid, detail: String) -> Self {
        FailureWitness {
            matroid: bm.matroid().clone(),
            base: Some(bm.base()),
            order: Some(bm.order().to_vec()),
            detail,
        }
    }

    /// The based matroid the witness refers to, when it has one.
    pub fn based_matroid(&self) -> Option<BasedMatroid> {
        let base = self.base?;
        let order = self.order.clone()?;
        BasedMatroid::new(self.matroid.clone(), base, order).ok()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckSummary {
    pub name: String,
    pub passed: u64,
    pub failed: u64,
    pub witnesses: Vec<FailureWitness>,
}

impl CheckSummary {
    pub fn instances(&self) -> u64 {
        self.passed + self.failed
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub corpus: String,
    pub rank: usize,
    /// Matroid classes in the corpus.
    pub classes: usize,
    pub classes_by_n: BTreeMap<usize, usize>,
    /// Based matroids (distinct signatures) in the corpus.
    pub signatures: usize,
    pub checks: Vec<CheckSummary>,
    pub duration_secs: f64,
    /// Set when the run could not start, e.g. for an unsupported rank.
    pub error: Option<String>,
}

impl VerificationReport {
    fn for_corpus(corpus: &Corpus, checks: Vec<CheckSummary>, started: Instant) -> Self {
        let mut classes_by_n = BTreeMap::new();
        for m in &corpus.matroids {
            *classes_by_n.entry(m.n()).or_insert(0) += 1;
        }
        VerificationReport {
            corpus: format!("rank {}, n <= {}", corpus.rank, corpus.max_n),
            rank: corpus.rank,
            classes: corpus.matroids.len(),
            classes_by_n,
            signatures: corpus.based.len(),
            checks,
            duration_secs: started.elapsed().as_secs_f64(),
            error: None,
        }
    }

    /// No error and no failed instance.
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.checks.iter().all(|c| c.failed == 0)
    }

    pub fn check(&self, name: &str) -> Option<&CheckSummary> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> u64 {
        self.checks.iter().map(|c| c.failed).sum()
    }

    /// Human-readable summary; at most `witnesses` witnesses are listed per check.
    pub fn summary(&self, witnesses: usize) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "corpus: {}", self.corpus);
        if let Some(e) = &self.error {
            let _ = writeln!(out, "error: {e}");
        }
        let _ = writeln!(out, "classes: {}", self.classes);
        for (n, k) in &self.classes_by_n {
            let _ = writeln!(out, "  n = {n}: {k}");
        }
        let _ = writeln!(out, "signatures: {}", self.signatures);
        for c in &self.checks {
            let _ = writeln!(out, "check {}: {} passed, {} failed", c.name, c.passed, c.failed);
            for w in c.witnesses.iter().take(witnesses) {
                let _ = write!(out, "  witness: bases {:?}", w.matroid.bases().iter().map(|b| b.to_string()).collect::<Vec<_>>());
                if let Some(b) = w.base {
                    let _ = write!(out, " base {b}");
                }
                if let Some(o) = &w.order {
                    let _ = write!(out, " order {o:?}");
                }
                let _ = writeln!(out, ": {}", w.detail);
            }
        }
        let _ = writeln!(out, "failures: {}", self.failures());
        let _ = writeln!(out, "duration: {:.1}s", self.duration_secs);
        out
    }
}

/// Per-check counters in a fixed order.
struct Tally(Vec<CheckSummary>);

impl Tally {
    fn new(names: &[&str]) -> Self {
        Tally(
            names
                .iter()
                .map(|n| CheckSummary {
                    name: n.to_string(),
                    passed: 0,
                    failed: 0,
                    witnesses: Vec::new(),
                })
                .collect(),
        )
    }

    fn record(&mut self, name: &str, ok: bool, witness: impl FnOnce() -> FailureWitness) {
        let c = self
            .0
            .iter_mut()
            .find(|c| c.name == name)
            .unwrap_or_else(|| panic!("unknown check {name}"));
        if ok {
            c.passed += 1;
        } else {
            c.failed += 1;
            c.witnesses.push(witness());
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        for (a, b) in self.0.iter_mut().zip(other.0) {
            a.passed += b.passed;
            a.failed += b.failed;
            a.witnesses.extend(b.witnesses);
        }
        self
    }
}

/// Runs `f` over `items` in parallel and merges the tallies in item order.
fn tally_over<T: Sync>(names: &[&str], items: &[T], f: impl Fn(&T, &mut Tally) + Sync) -> Vec<CheckSummary> {
    let parts: Vec<Tally> = items
        .par_iter()
        .map(|x| {
            let mut t = Tally::new(names);
            f(x, &mut t);
            t
        })
        .collect();
    parts.into_iter().fold(Tally::new(names), Tally::merge).0
}

/// `|ℬ_x|`, the number of bases of `Γ_{x}`; zero for a loop.
fn basis_count_of(by_label: &BTreeMap<ElementSet, HVector>, x: usize) -> u64 {
    by_label.get(&ElementSet::singleton(x)).map_or(0, HVector::sum)
}

/// `I` ordered by the based order.
fn in_order(bm: &BasedMatroid, i_set: ElementSet) -> Vec<usize> {
    bm.order().iter().copied().filter(|e| i_set.contains(*e)).collect()
}

pub const RANK3_PAIR_CHECKS: [&str; 4] = [
    "pair (1,0) extends to a triple",
    "pair (1,0) extends to a triple, non-cones",
    "pair (1,1) basis counts",
    "pair (1,2) basis counts",
];

/// The three pair clauses for `I = {x, y}`, `x` before `y` in the based order, in a rank-3
/// based matroid. Each entry is `None` when the clause's hypothesis does not hold.
pub fn rank3_pair_clauses(bm: &BasedMatroid, pair: ElementSet) -> [Option<bool>; 3] {
    let by_label = restricted_h_by_label(bm);
    pair_clauses_with(bm, &by_label, pair)
}

fn pair_clauses_with(
    bm: &BasedMatroid,
    by_label: &BTreeMap<ElementSet, HVector>,
    pair: ElementSet,
) -> [Option<bool>; 3] {
    let Some(h) = by_label.get(&pair) else {
        return [None; 3];
    };
    let xy = in_order(bm, pair);
    let (bx, by) = (basis_count_of(by_label, xy[0]), basis_count_of(by_label, xy[1]));
    let m = bm.matroid();
    let clause1 = h.is(&[1, 0]).then(|| {
        (m.ground_set() - bm.base() - pair)
            .iter()
            .any(|z| m.is_independent(pair.with(z)))
    });
    let clause2 = h
        .is(&[1, 1])
        .then(|| (bx == 1 && by >= 2) || (by == 1 && bx >= 2) || (bx == 2 && by == 3) || (bx == 3 && by >= 2));
    let clause3 = h.is(&[1, 2]).then(|| bx >= 2 && by >= 2);
    [clause1, clause2, clause3]
}

pub const RANK4_EDGE_CHECKS: [&str; 6] = [
    "edge (1,1,0) with |B_x| = 1",
    "edge (1,1,1)",
    "edge (1,2,0)",
    "edge (1,2,1)",
    "edge (1,2,2)",
    "edge (1,2,3)",
];

/// The six edge clauses for `I = {x, y}` in a rank-4 based matroid, `None` where inapplicable.
pub fn rank4_edge_clauses(bm: &BasedMatroid, pair: ElementSet) -> [Option<bool>; 6] {
    edge_clauses_with(bm, &restricted_h_by_label(bm), pair)
}

fn edge_clauses_with(
    bm: &BasedMatroid,
    by_label: &BTreeMap<ElementSet, HVector>,
    pair: ElementSet,
) -> [Option<bool>; 6] {
    let Some(h) = by_label.get(&pair) else {
        return [None; 6];
    };
    let xy = in_order(bm, pair);
    let (bx, by) = (basis_count_of(by_label, xy[0]), basis_count_of(by_label, xy[1]));
    let (lo, hi) = (bx.min(by), bx.max(by));
    let two_or_four = |b: u64| b == 2 || b == 4;
    [
        (h.is(&[1, 1, 0]) && bx == 1).then_some(by >= 2),
        h.is(&[1, 1, 1]).then_some((lo == 1 && hi >= 3) || lo >= 3),
        h.is(&[1, 2, 0]).then_some(lo >= 2),
        h.is(&[1, 2, 1]).then_some(two_or_four(bx) && two_or_four(by)),
        h.is(&[1, 2, 2]).then_some(lo >= 2 && hi >= 3),
        h.is(&[1, 2, 3]).then_some(lo >= 3),
    ]
}

pub const RANK4_FACE_CHECKS: [&str; 3] = ["face (1,1)", "face (1,2)", "face (1,3)"];

/// The three face clauses for an independent triple `I` in a rank-4 based matroid.
pub fn rank4_face_clauses(bm: &BasedMatroid, triple: ElementSet) -> [Option<bool>; 3] {
    face_clauses_with(&restricted_h_by_label(bm), triple)
}

fn face_clauses_with(by_label: &BTreeMap<ElementSet, HVector>, triple: ElementSet) -> [Option<bool>; 3] {
    let Some(h) = by_label.get(&triple) else {
        return [None; 3];
    };
    let counts: Vec<u64> = triple.iter().map(|x| basis_count_of(by_label, x)).collect();
    let ones = counts.iter().filter(|&&b| b == 1).count();
    [
        h.is(&[1, 1]).then(|| counts.iter().max() >= Some(&2)),
        h.is(&[1, 2]).then_some(ones <= 1),
        h.is(&[1, 3]).then(|| counts.iter().all(|&b| b >= 2)),
    ]
}

/// Each `(matroid, base)` of the corpus with its restricted h-vectors by label.
fn rooted(corpus: &Corpus) -> Vec<(BasedMatroid, BTreeMap<ElementSet, HVector>)> {
    corpus
        .matroids
        .par_iter()
        .flat_map_iter(|m| {
            m.bases().iter().map(move |&b| {
                let bm = BasedMatroid::with_base(m.clone(), b).expect("bases are bases");
                let by_label = restricted_h_by_label(&bm);
                (bm, by_label)
            })
        })
        .collect()
}

/// `bm` with `first` moved to the front of the order, the rest ascending.
fn ordered_with(bm: &BasedMatroid, first: &[usize]) -> BasedMatroid {
    let rest = bm.matroid().ground_set() - bm.base();
    let mut order = first.to_vec();
    order.extend(rest.iter().filter(|e| !first.contains(e)));
    BasedMatroid::new(bm.matroid().clone(), bm.base(), order).expect("order is a permutation")
}

fn describe(set: ElementSet, h: &HVector, by_label: &BTreeMap<ElementSet, HVector>, order: &[usize]) -> String {
    let counts: Vec<String> = order
        .iter()
        .map(|&x| format!("|B_{x}| = {}", basis_count_of(by_label, x)))
        .collect();
    format!("I = {set}, h = {h}, {}", counts.join(", "))
}

/// Pair clauses over every matroid of a rank-3 corpus, every basis as the base, and both
/// orientations of every independent pair off the base.
///
/// The first clause is also reported restricted to non-cones: with a coloop in the base, a
/// pair can have `h = (1,0)` without any third element completing it.
pub fn verify_lemma_rank3(corpus: &Corpus) -> VerificationReport {
    let started = Instant::now();
    let items = rooted(corpus);
    let checks = tally_over(&RANK3_PAIR_CHECKS, &items, |(bm, by_label), t| {
        let cone = bm.matroid().is_cone();
        for (&pair, h) in by_label.iter().filter(|(i, _)| i.len() == 2) {
            let (a, b) = (pair.min_element().unwrap(), pair.max_element().unwrap());
            for xy in [[a, b], [b, a]] {
                let based = ordered_with(bm, &xy);
                let [c1, c2, c3] = pair_clauses_with(&based, by_label, pair);
                let witness = || FailureWitness::based(&based, describe(pair, h, by_label, &xy));
                if let Some(ok) = c1 {
                    t.record(RANK3_PAIR_CHECKS[0], ok, witness);
                    if !cone {
                        t.record(RANK3_PAIR_CHECKS[1], ok, witness);
                    }
                }
                if let Some(ok) = c2 {
                    t.record(RANK3_PAIR_CHECKS[2], ok, witness);
                }
                if let Some(ok) = c3 {
                    t.record(RANK3_PAIR_CHECKS[3], ok, witness);
                }
            }
        }
    });
    VerificationReport::for_corpus(corpus, checks, started)
}

/// Edge clauses over every matroid of a rank-4 corpus, every base and both orientations of
/// every independent pair off the base.
pub fn verify_lemma_rank4_edges(corpus: &Corpus) -> VerificationReport {
    let started = Instant::now();
    let items = rooted(corpus);
    let checks = tally_over(&RANK4_EDGE_CHECKS, &items, |(bm, by_label), t| {
        for (&pair, h) in by_label.iter().filter(|(i, _)| i.len() == 2) {
            let (a, b) = (pair.min_element().unwrap(), pair.max_element().unwrap());
            for xy in [[a, b], [b, a]] {
                let based = ordered_with(bm, &xy);
                let clauses = edge_clauses_with(&based, by_label, pair);
                for (name, c) in RANK4_EDGE_CHECKS.iter().zip(clauses) {
                    if let Some(ok) = c {
                        t.record(name, ok, || FailureWitness::based(&based, describe(pair, h, by_label, &xy)));
                    }
                }
            }
        }
    });
    VerificationReport::for_corpus(corpus, checks, started)
}

/// Face clauses over every matroid of a rank-4 corpus, every base and every independent triple
/// off the base.
pub fn verify_lemma_rank4_faces(corpus: &Corpus) -> VerificationReport {
    let started = Instant::now();
    let items = rooted(corpus);
    let checks = tally_over(&RANK4_FACE_CHECKS, &items, |(bm, by_label), t| {
        for (&triple, h) in by_label.iter().filter(|(i, _)| i.len() == 3) {
            let clauses = face_clauses_with(by_label, triple);
            for (name, c) in RANK4_FACE_CHECKS.iter().zip(clauses) {
                if let Some(ok) = c {
                    let xyz: Vec<usize> = triple.iter().collect();
                    t.record(name, ok, || FailureWitness::based(bm, describe(triple, h, by_label, &xyz)));
                }
            }
        }
    });
    VerificationReport::for_corpus(corpus, checks, started)
}

pub const STRUCTURE_CHECKS: [&str; 6] = [
    "cone iff top h-entry is zero",
    "going up",
    "decomposition",
    "U_I = V_I",
    "independent sets off the base are restriction sets",
    "restriction set contains the part off the base",
];

/// Structural identities. The cone equivalence is checked once per matroid class; the others
/// on every based matroid of the corpus, or on each class with its natural base when the
/// corpus has no based matroids.
pub fn verify_structure(corpus: &Corpus) -> VerificationReport {
    let started = Instant::now();
    let names = &STRUCTURE_CHECKS;
    let mut checks = tally_over(names, &corpus.matroids, |m, t| {
        let d = m.rank();
        let h = m.h_vector();
        t.record(names[0], (h.get(d) == 0) == m.is_cone(), || FailureWitness {
            matroid: m.clone(),
            base: None,
            order: None,
            detail: format!("h = {h}, coloops {}", m.coloops()),
        });
    });
    let natural: Vec<BasedMatroid>;
    let based = if corpus.based.is_empty() {
        natural = corpus.matroids.iter().cloned().map(BasedMatroid::natural).collect();
        &natural
    } else {
        &corpus.based
    };
    let rest = tally_over(names, based, |bm, t| structure_of(bm, t));
    for (a, b) in checks.iter_mut().zip(rest) {
        a.passed += b.passed;
        a.failed += b.failed;
        a.witnesses.extend(b.witnesses);
    }
    VerificationReport::for_corpus(corpus, checks, started)
}

fn structure_of(bm: &BasedMatroid, t: &mut Tally) {
    let names = &STRUCTURE_CHECKS;
    let d = bm.rank();
    let sr = lex_shelling(bm);
    let by_label = restricted_h_by_label(bm);

    if let Ok(failures) = going_up_failures(bm) {
        let detail = format!("no z extends {:?}", failures.iter().map(|s| s.to_string()).collect::<Vec<_>>());
        t.record(names[1], failures.is_empty(), || FailureWitness::based(bm, detail));
    }

    let lhs = h_vector_from_shelling(&sr, d);
    let rhs = decomposition_sum(bm, &by_label);
    t.record(names[2], lhs == rhs, || {
        FailureWitness::based(bm, format!("shelling h = {lhs}, sum over I = {rhs}"))
    });

    let restriction_sets: BTreeSet<ElementSet> = sr.restriction_sets.iter().copied().collect();
    for &i in by_label.keys() {
        let (u, v) = u_and_v_with(bm, i, &sr).expect("I is independent and off the base");
        t.record(names[3], u == v, || FailureWitness::based(bm, format!("I = {i}: U = {u:?}, V = {v:?}")));
        t.record(names[4], restriction_sets.contains(&i), || {
            FailureWitness::based(bm, format!("I = {i} is no restriction set"))
        });
    }

    for (&b, &r) in sr.ordered_bases.iter().zip(&sr.restriction_sets) {
        let off = b - bm.base();
        t.record(names[5], off.is_subset(r), || {
            FailureWitness::based(bm, format!("B = {b}, R(B) = {r}"))
        });
    }
}

pub const CONSTRUCTION_CHECKS: [&str; 9] = [
    "construct",
    "order ideal",
    "pure",
    "variables",
    "supports",
    "counts",
    "restrictions",
    "F-vector = h-vector",
    "union of restrictions",
];

/// Constructs on every based matroid of `corpus` and checks the output. When the construction
/// itself fails the remaining checks are not counted for that based matroid.
pub fn verify_constructions(corpus: &Corpus) -> VerificationReport {
    let started = Instant::now();
    let items: Vec<(&BasedMatroid, &RestrictedHFamily)> = corpus.based.iter().zip(&corpus.signatures).collect();
    let checks = tally_over(&CONSTRUCTION_CHECKS, &items, |(bm, family), t| construction_of(bm, family, t));
    VerificationReport::for_corpus(corpus, checks, started)
}

fn construction_of(bm: &BasedMatroid, family: &RestrictedHFamily, t: &mut Tally) {
    let names = &CONSTRUCTION_CHECKS;
    let o = match construct(bm) {
        Ok(o) => o,
        Err(e) => {
            t.record(names[0], false, || FailureWitness::based(bm, e.to_string()));
            return;
        }
    };
    t.record(names[0], true, || unreachable!());

    let restrictions: Vec<(ElementSet, Result<OrderIdeal>)> = bm
        .independent_off_base()
        .into_iter()
        .map(|i| (i, construct(&bm.restrict_to(i))))
        .collect();
    let report = check_conditions_with(bm, &o, family, &restrictions);
    let results = [
        (names[1], &report.order_ideal),
        (names[2], &report.purity),
        (names[3], &report.variables),
        (names[4], &report.supports),
        (names[5], &report.counts),
        (names[6], &report.restrictions),
        (names[7], &report.f_vector),
    ];
    for (name, w) in results {
        t.record(name, w.is_none(), || {
            FailureWitness::based(bm, w.as_ref().map(|w| w.to_string()).unwrap_or_default())
        });
    }

    let mut union = OrderIdeal::new();
    for (_, r) in &restrictions {
        if let Ok(local) = r {
            for mono in local.iter() {
                union.insert(*mono);
            }
        }
    }
    t.record(names[8], union == o, || {
        let extra = union.iter().find(|x| !o.contains(x));
        let missing = o.iter().find(|x| !union.contains(x));
        let detail = match (extra, missing) {
            (Some(x), _) => format!("{x} comes from a restriction but is not in the construction"),
            (None, Some(x)) => format!("{x} is in no restriction's construction"),
            (None, None) => String::new(),
        };
        FailureWitness::based(bm, detail)
    });
}

/// Enumerates the rank-`rank` corpus on at most `2 * rank` elements, keeps one based matroid
/// per signature and runs [`verify_constructions`] on it. Unsupported ranks and enumeration
/// errors are reported in [`VerificationReport::error`].
pub fn run_full_verification(rank: usize) -> VerificationReport {
    let started = Instant::now();
    let failed = |e: String| VerificationReport {
        corpus: format!("rank {rank}, n <= {}", 2 * rank),
        rank,
        classes: 0,
        classes_by_n: BTreeMap::new(),
        signatures: 0,
        checks: Vec::new(),
        duration_secs: started.elapsed().as_secs_f64(),
        error: Some(e),
    };
    if rank != 3 && rank != 4 {
        return failed(crate::error::Error::RankUnsupported(rank).to_string());
    }
    let corpus = match enumerate_up_to(rank, 2 * rank) {
        Ok(c) => based_matroids(c),
        Err(e) => return failed(e.to_string()),
    };
    let mut report = verify_constructions(&corpus);
    report.duration_secs = started.elapsed().as_secs_f64();
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{dual_fano, fano, set};

    fn corpus_of(rank: usize, matroids: Vec<Matroid>) -> Corpus {
        let max_n = matroids.iter().map(Matroid::n).max().unwrap_or(0);
        Corpus {
            rank,
            max_n,
            matroids,
            ..Corpus::default()
        }
    }

    #[test]
    fn fano_pairs_pass() {
        let r = verify_lemma_rank3(&corpus_of(3, vec![fano()]));
        assert!(r.passed(), "{}", r.summary(3));
        // Fano pairs never have h = (1,0).
        assert_eq!(r.check(RANK3_PAIR_CHECKS[0]).unwrap().instances(), 0);
        assert!(r.check(RANK3_PAIR_CHECKS[2]).unwrap().instances() > 0);
    }

    #[test]
    fn cone_breaks_the_literal_first_pair_clause() {
        // A coloop plus U_{2,4}: with base {1,2,3} the pair {4,5} has h = (1,0) and nothing
        // else is left to extend it.
        let m = Matroid::from_lists(5, &[[1, 2, 3], [1, 2, 4], [1, 2, 5], [1, 3, 4], [1, 3, 5], [1, 4, 5]]).unwrap();
        assert!(m.is_cone());
        let bm = BasedMatroid::with_base(m.clone(), set(&[1, 2, 3])).unwrap();
        assert_eq!(rank3_pair_clauses(&bm, set(&[4, 5]))[0], Some(false));
        let r = verify_lemma_rank3(&corpus_of(3, vec![m]));
        let literal = r.check(RANK3_PAIR_CHECKS[0]).unwrap();
        assert!(literal.failed > 0);
        assert_eq!(r.check(RANK3_PAIR_CHECKS[1]).unwrap().instances(), 0);
        // Witnesses re-fail through the single-instance check.
        for w in &literal.witnesses {
            let bm = w.based_matroid().unwrap();
            let pair: ElementSet = bm.order()[..2].iter().copied().collect();
            assert_eq!(rank3_pair_clauses(&bm, pair)[0], Some(false));
        }
    }

    #[test]
    fn dual_fano_edges_and_faces() {
        let c = corpus_of(4, vec![dual_fano()]);
        let edges = verify_lemma_rank4_edges(&c);
        assert!(edges.passed(), "{}", edges.summary(3));
        assert!(edges.check(RANK4_EDGE_CHECKS[4]).unwrap().passed > 0);
        let faces = verify_lemma_rank4_faces(&c);
        assert!(faces.passed(), "{}", faces.summary(3));
        let bm = BasedMatroid::with_base(dual_fano(), set(&[1, 2, 3, 4])).unwrap();
        assert_eq!(rank4_face_clauses(&bm, set(&[5, 6, 7])), [None, Some(true), None]);
    }

    #[test]
    fn structure_on_small_examples() {
        let c = corpus_of(3, vec![fano(), Matroid::simplex(3, 3), Matroid::uniform(3, 5)]);
        let r = verify_structure(&c);
        assert!(r.passed(), "{}", r.summary(3));
        assert_eq!(r.check(STRUCTURE_CHECKS[0]).unwrap().passed, 3);
        // The simplex is a cone, so going up is skipped for it.
        assert_eq!(r.check(STRUCTURE_CHECKS[1]).unwrap().instances(), 2);
    }

    #[test]
    fn constructions_on_fano_signatures() {
        let c = based_matroids(corpus_of(3, vec![fano()]));
        let r = verify_constructions(&c);
        assert!(r.passed(), "{}", r.summary(3));
        assert_eq!(r.signatures, c.based.len());
        for check in &r.checks {
            assert_eq!(check.instances() as usize, c.based.len(), "{}", check.name);
        }
    }

    #[test]
    fn unsupported_rank_is_reported() {
        let r = run_full_verification(5);
        assert!(r.error.as_deref().unwrap().contains("rank 5"));
        assert!(!r.passed());
        assert!(r.checks.is_empty());
    }

    #[test]
    fn summary_lists_counts() {
        let c = based_matroids(corpus_of(3, vec![fano()]));
        let text = verify_constructions(&c).summary(0);
        assert!(text.contains("classes: 1"));
        assert!(text.contains(&format!("signatures: {}", c.based.len())));
    }
}
