//! Verification corpora: small matroids up to isomorphism and their based matroids, one per
//! restricted-h signature.

mod brute;
mod extension;
mod revlex;

use std::collections::{BTreeMap, HashSet};

use itertools::Itertools;
use rayon::prelude::*;
use serde_json::json;
use sha2::{Digest, Sha256};

pub use brute::{brute_force_enumerate, labelled_matroids, BRUTE_FORCE_LIMIT};
pub use extension::extend_by_element;
pub use revlex::{format_db, parse_db, parse_revlex, serialize_revlex, RevlexRecord};

use crate::element_set::{binomial, MAX_ELEMENTS};
use crate::error::{Error, Result};
use crate::gamma::{restricted_h_by_label, RestrictedHFamily};
use crate::matroid::{descent, BasedMatroid, CanonicalForm, Matroid};

/// Matroid classes of one rank, and optionally their based matroids deduplicated by signature.
#[derive(Clone, Debug, Default)]
pub struct Corpus {
    pub rank: usize,
    pub max_n: usize,
    /// Canonical representatives, sorted by ground-set size and then canonical form.
    pub matroids: Vec<Matroid>,
    pub based: Vec<BasedMatroid>,
    /// `signatures[i]` is the signature of `based[i]`.
    pub signatures: Vec<RestrictedHFamily>,
}

impl Corpus {
    /// Number of classes on exactly `n` elements.
    pub fn classes_on(&self, n: usize) -> usize {
        self.matroids.iter().filter(|m| m.n() == n).count()
    }

    /// The JSON array of matroid objects.
    pub fn matroids_json(&self) -> serde_json::Value {
        serde_json::to_value(&self.matroids).expect("matroids serialize")
    }

    /// One line per signature: its hash and a JSON descriptor of the based matroid.
    pub fn signature_lines(&self) -> String {
        let mut out = String::new();
        for (bm, sig) in self.based.iter().zip(&self.signatures) {
            let descriptor = json!({
                "n": bm.n(),
                "bases": bm.matroid().bases(),
                "base": bm.base(),
                "order": bm.order(),
                "signature": sig,
            });
            out.push_str(&format!("{}\t{}\n", signature_hash(sig), descriptor));
        }
        out
    }
}

/// Hex SHA-256 of the signature's byte encoding.
pub fn signature_hash(sig: &RestrictedHFamily) -> String {
    Sha256::digest(sig.encode())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Canonical representatives of all rank-`r` classes on exactly `n` elements, computed from the
/// classes on `n - 1` elements by single-element extension.
pub fn extend_classes(previous: &[Matroid]) -> Vec<Matroid> {
    let found: Vec<(CanonicalForm, Matroid)> = previous
        .par_iter()
        .flat_map_iter(|m| {
            // Extensions that descend to the same labelled family are isomorphic.
            let mut seen = HashSet::new();
            extend_by_element(m)
                .into_iter()
                .filter_map(move |x| {
                    let low = descent::descend(x.n(), x.bases().to_vec());
                    if !seen.insert(low.clone()) {
                        return None;
                    }
                    let x = Matroid::from_trusted(x.n(), low);
                    let (form, map) = x.canonical_labelling();
                    Some((form, x.relabel(&map)))
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let classes: BTreeMap<CanonicalForm, Matroid> = found.into_iter().collect();
    classes.into_values().collect()
}

/// Classes of rank `r` on `n` elements for every `n` from `max(r, 1)` to `max_n`, each level
/// computed by brute force when `C(n, r)` is within [`BRUTE_FORCE_LIMIT`] and by extension
/// otherwise.
pub fn enumerate_levels(r: usize, max_n: usize) -> Result<Vec<Vec<Matroid>>> {
    if max_n == 0 || max_n > MAX_ELEMENTS {
        return Err(Error::GroundSetSize(max_n));
    }
    let mut levels: Vec<Vec<Matroid>> = Vec::new();
    for n in r.max(1)..=max_n {
        let level = match levels.last() {
            Some(prev) if binomial(n, r) > BRUTE_FORCE_LIMIT => extend_classes(prev),
            _ => brute_force_enumerate(n, r)?,
        };
        levels.push(level);
    }
    Ok(levels)
}

/// Same as [`enumerate_levels`] but using extension for every level above the simplex.
pub fn enumerate_levels_by_extension(r: usize, max_n: usize) -> Result<Vec<Vec<Matroid>>> {
    if max_n == 0 || max_n > MAX_ELEMENTS {
        return Err(Error::GroundSetSize(max_n));
    }
    let mut levels = vec![brute_force_enumerate(r.max(1), r)?];
    for _ in r.max(1) + 1..=max_n {
        let next = extend_classes(levels.last().unwrap());
        levels.push(next);
    }
    Ok(levels)
}

/// All isomorphism classes of rank-`rank` matroids on at most `max_n` elements (loops allowed).
pub fn enumerate_up_to(rank: usize, max_n: usize) -> Result<Corpus> {
    let levels = enumerate_levels(rank, max_n)?;
    Ok(Corpus {
        rank,
        max_n,
        matroids: levels.into_iter().flatten().collect(),
        based: Vec::new(),
        signatures: Vec::new(),
    })
}

/// Every `(base, order)` of `m` with its signature, keeping the first order per signature.
fn based_of(m: &Matroid) -> Vec<(RestrictedHFamily, BasedMatroid)> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for &base in m.bases() {
        let by_label = restricted_h_by_label(&BasedMatroid::with_base(m.clone(), base).unwrap());
        let rest: Vec<usize> = (m.ground_set() - base).iter().collect();
        let mut pos = vec![0; m.n() + 1];
        for order in rest.iter().copied().permutations(rest.len()) {
            for (i, &e) in order.iter().enumerate() {
                pos[e] = i + 1;
            }
            let sig = RestrictedHFamily::from_positions(&by_label, &pos);
            if seen.insert(sig.clone()) {
                let bm = BasedMatroid::new(m.clone(), base, order).expect("base and order are valid");
                out.push((sig, bm));
            }
        }
    }
    out
}

/// Fills `corpus.based` with one based matroid per distinct signature, scanning matroids in
/// corpus order, bases ascending, and orders lexicographically.
pub fn based_matroids(mut corpus: Corpus) -> Corpus {
    let per_matroid: Vec<Vec<(RestrictedHFamily, BasedMatroid)>> =
        corpus.matroids.par_iter().map(based_of).collect();
    let mut seen = HashSet::new();
    corpus.based.clear();
    corpus.signatures.clear();
    for (sig, bm) in per_matroid.into_iter().flatten() {
        if seen.insert(sig.clone()) {
            corpus.based.push(bm);
            corpus.signatures.push(sig);
        }
    }
    corpus
}
