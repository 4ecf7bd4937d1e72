//! Monomials, order ideals (multicomplexes) and the checks a construction must pass.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::construct::construct;
use crate::element_set::{ElementSet, MAX_ELEMENTS};
use crate::error::{Error, Result};
use crate::gamma::RestrictedHFamily;
use crate::hvector::HVector;
use crate::matroid::{check_permutation, BasedMatroid};

/// A monomial in variables `x_1..x_16`; exponents are stored densely by label.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    exps: [u8; MAX_ELEMENTS + 1],
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        exps: [0; MAX_ELEMENTS + 1],
    };

    /// Product of `x_e^k` over the given pairs; zero exponents are ignored.
    pub fn from_pairs(pairs: &[(usize, u8)]) -> Monomial {
        let mut m = Monomial::ONE;
        for &(e, k) in pairs {
            assert!((1..=MAX_ELEMENTS).contains(&e), "variable x{e} out of range");
            m.exps[e] += k;
        }
        m
    }

    pub fn var(e: usize) -> Monomial {
        Monomial::from_pairs(&[(e, 1)])
    }

    /// Product of the variables in `s`, each to the first power.
    pub fn squarefree(s: ElementSet) -> Monomial {
        let mut m = Monomial::ONE;
        for e in s.iter() {
            m.exps[e] = 1;
        }
        m
    }

    pub fn exponent(&self, e: usize) -> u8 {
        self.exps[e]
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&k| k as usize).sum()
    }

    pub fn support(&self) -> ElementSet {
        (1..=MAX_ELEMENTS).filter(|&e| self.exps[e] > 0).collect()
    }

    /// `self * x_e^k`.
    pub fn times(mut self, e: usize, k: u8) -> Monomial {
        self.exps[e] += k;
        self
    }

    /// `self / x_e`, if `x_e` divides `self`.
    pub fn divided_by(mut self, e: usize) -> Option<Monomial> {
        if self.exps[e] == 0 {
            return None;
        }
        self.exps[e] -= 1;
        Some(self)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Renames `x_e` to `x_{map[e]}`.
    pub fn relabel(&self, map: &[usize]) -> Monomial {
        let mut m = Monomial::ONE;
        for e in self.support().iter() {
            m.exps[map[e]] = self.exps[e];
        }
        m
    }

    /// Listing order: by degree, then higher powers of lower-labelled variables first.
    pub fn listing_cmp(&self, other: &Monomial) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for e in 1..=MAX_ELEMENTS {
            let k = self.exps[e];
            if k == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{e}")?;
            if k > 1 {
                write!(f, "^{k}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `1`, `x4^2*x5`, `x4^2x5`, `x_4^2 x_5`.
impl FromStr for Monomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Monomial> {
        let bad = || Error::MalformedRecord(format!("cannot parse monomial {s:?}"));
        let t = s.trim();
        if t == "1" {
            return Ok(Monomial::ONE);
        }
        let mut m = Monomial::ONE;
        let mut chars = t.chars().filter(|c| !c.is_whitespace() && *c != '*').peekable();
        let read_num = |chars: &mut std::iter::Peekable<_>| -> Option<usize> {
            let mut v: Option<usize> = None;
            while let Some(c) = chars.peek().copied() {
                let c: char = c;
                let Some(d) = c.to_digit(10) else { break };
                v = Some(v.unwrap_or(0) * 10 + d as usize);
                chars.next();
            }
            v
        };
        let mut any = false;
        while let Some(c) = chars.next() {
            if c != 'x' {
                return Err(bad());
            }
            if chars.peek() == Some(&'_') {
                chars.next();
            }
            let e = read_num(&mut chars).ok_or_else(bad)?;
            if !(1..=MAX_ELEMENTS).contains(&e) {
                return Err(bad());
            }
            let mut k = 1;
            if chars.peek() == Some(&'^') {
                chars.next();
                k = read_num(&mut chars).ok_or_else(bad)?;
            }
            let total = m.exps[e] as usize + k;
            if k == 0 || total > u8::MAX as usize {
                return Err(bad());
            }
            m.exps[e] = total as u8;
            any = true;
        }
        if !any {
            return Err(bad());
        }
        Ok(m)
    }
}

/// JSON shape: `{"vars": {"4": 2, "5": 1}}`.
impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Vars<'a>(&'a Monomial);
        impl Serialize for Vars<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let supp = self.0.support();
                let mut map = s.serialize_map(Some(supp.len()))?;
                for e in supp.iter() {
                    map.serialize_entry(&e.to_string(), &self.0.exps[e])?;
                }
                map.end()
            }
        }
        let mut outer = s.serialize_map(Some(1))?;
        outer.serialize_entry("vars", &Vars(self))?;
        outer.end()
    }
}

impl<'de> Deserialize<'de> for Monomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            vars: BTreeMap<String, u8>,
        }
        let raw = Raw::deserialize(d)?;
        let mut m = Monomial::ONE;
        for (k, v) in raw.vars {
            let e: usize = k.parse().map_err(serde::de::Error::custom)?;
            if !(1..=MAX_ELEMENTS).contains(&e) {
                return Err(serde::de::Error::custom(format!("variable x{e} out of range")));
            }
            m.exps[e] = v;
        }
        Ok(m)
    }
}

/// A finite duplicate-free family of monomials; [`OrderIdeal::ideal_violation`] says whether it
/// is divisor-closed.
#[derive(Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OrderIdeal {
    monomials: BTreeSet<Monomial>,
}

impl OrderIdeal {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, m: Monomial) -> bool {
        self.monomials.insert(m)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.monomials.contains(m)
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Monomial> {
        self.monomials.iter()
    }

    /// Monomials sorted by [`Monomial::listing_cmp`].
    pub fn listing(&self) -> Vec<Monomial> {
        let mut v: Vec<Monomial> = self.monomials.iter().copied().collect();
        v.sort_by(Monomial::listing_cmp);
        v
    }

    pub fn variables(&self) -> ElementSet {
        self.monomials
            .iter()
            .fold(ElementSet::EMPTY, |acc, m| acc | m.support())
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.monomials.iter().map(Monomial::degree).max()
    }

    /// A monomial with a missing divisor, or `None` when the family is an order ideal.
    /// The empty family reports `1` as missing.
    pub fn ideal_violation(&self) -> Option<Monomial> {
        if self.monomials.is_empty() {
            return Some(Monomial::ONE);
        }
        self.monomials
            .iter()
            .find(|m| {
                m.support()
                    .iter()
                    .any(|e| !self.monomials.contains(&m.divided_by(e).unwrap()))
            })
            .copied()
    }

    pub fn is_order_ideal(&self) -> bool {
        self.ideal_violation().is_none()
    }

    /// Divisibility-maximal monomials.
    pub fn maximal(&self) -> Vec<Monomial> {
        let vars = self.variables();
        self.monomials
            .iter()
            .filter(|m| vars.iter().all(|e| !self.monomials.contains(&m.times(e, 1))))
            .copied()
            .collect()
    }

    /// A maximal monomial of less than top degree, or `None` when the ideal is pure.
    pub fn purity_violation(&self) -> Result<Option<Monomial>> {
        if let Some(w) = self.ideal_violation() {
            return Err(Error::NotAnIdeal(w.to_string()));
        }
        let top = self.max_degree().unwrap_or(0);
        let mut low: Vec<Monomial> = self
            .maximal()
            .into_iter()
            .filter(|m| m.degree() < top)
            .collect();
        low.sort_by(Monomial::listing_cmp);
        Ok(low.first().copied())
    }

    pub fn is_pure(&self) -> Result<bool> {
        self.purity_violation().map(|w| w.is_none())
    }

    /// `F_i` = number of monomials of degree `i`.
    pub fn f_vector(&self) -> HVector {
        let mut f = HVector::default();
        for m in &self.monomials {
            f.bump(m.degree());
        }
        f
    }

    /// Monomials whose support lies in `vars`.
    pub fn restrict_support(&self, vars: ElementSet) -> OrderIdeal {
        self.monomials
            .iter()
            .filter(|m| m.support().is_subset(vars))
            .copied()
            .collect()
    }

    pub fn relabel(&self, map: &[usize]) -> OrderIdeal {
        self.monomials.iter().map(|m| m.relabel(map)).collect()
    }
}

impl FromIterator<Monomial> for OrderIdeal {
    fn from_iter<I: IntoIterator<Item = Monomial>>(iter: I) -> Self {
        OrderIdeal {
            monomials: iter.into_iter().collect(),
        }
    }
}

impl fmt::Debug for OrderIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.listing()).finish()
    }
}

/// Evidence that a check failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Monomial { monomial: String },
    Set { set: ElementSet, detail: String },
    Vectors { expected: HVector, found: HVector },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Monomial { monomial } => write!(f, "monomial {monomial}"),
            Witness::Set { set, detail } => write!(f, "I = {set}: {detail}"),
            Witness::Vectors { expected, found } => write!(f, "expected {expected}, found {found}"),
        }
    }
}

fn monomial_witness(m: Monomial) -> Witness {
    Witness::Monomial {
        monomial: m.to_string(),
    }
}

/// Outcome of every check on one construction; `None` means the check passed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    /// Variables are labels of `E - B`.
    pub variables: Option<Witness>,
    /// Supports are independent and disjoint from `B`.
    pub supports: Option<Witness>,
    /// Exactly `h_j(Γ_I)` monomials of degree `|I| + j` with support exactly `I`.
    pub counts: Option<Witness>,
    /// Restriction to the variables of `I` is the construction on `Δ|_{B ∪ I}`.
    pub restrictions: Option<Witness>,
    pub order_ideal: Option<Witness>,
    pub purity: Option<Witness>,
    /// F-vector equals `h(Δ)`.
    pub f_vector: Option<Witness>,
}

impl ConditionReport {
    pub fn passed(&self) -> bool {
        self.failures().is_empty()
    }

    /// `(name, witness)` for each failed check.
    pub fn failures(&self) -> Vec<(&'static str, &Witness)> {
        [
            ("variables", &self.variables),
            ("supports", &self.supports),
            ("counts", &self.counts),
            ("restrictions", &self.restrictions),
            ("order_ideal", &self.order_ideal),
            ("purity", &self.purity),
            ("f_vector", &self.f_vector),
        ]
        .into_iter()
        .filter_map(|(n, w)| w.as_ref().map(|w| (n, w)))
        .collect()
    }
}

/// Runs every check on `o` as a construction for `bm`, whose restricted h-vectors are `family`.
///
/// The restriction check re-runs [`construct`] on `Δ|_{B ∪ I}` for each `I`.
pub fn check_conditions(bm: &BasedMatroid, o: &OrderIdeal, family: &RestrictedHFamily) -> ConditionReport {
    let restrictions: Vec<(ElementSet, Result<OrderIdeal>)> = bm
        .independent_off_base()
        .into_iter()
        .map(|i| (i, construct(&bm.restrict_to(i))))
        .collect();
    check_conditions_with(bm, o, family, &restrictions)
}

/// [`check_conditions`] with the constructions on each `Δ|_{B ∪ I}` supplied by the caller.
pub(crate) fn check_conditions_with(
    bm: &BasedMatroid,
    o: &OrderIdeal,
    family: &RestrictedHFamily,
    restrictions: &[(ElementSet, Result<OrderIdeal>)],
) -> ConditionReport {
    let m = bm.matroid();
    let base = bm.base();
    let off_base = m.ground_set() - base;
    let mut report = ConditionReport::default();
    let listing = o.listing();

    report.variables = listing
        .iter()
        .find(|mono| !mono.support().is_subset(off_base))
        .map(|mono| monomial_witness(*mono));

    report.supports = listing
        .iter()
        .find(|mono| {
            let s = mono.support();
            !s.is_disjoint(base) || !m.is_independent(s)
        })
        .map(|mono| monomial_witness(*mono));

    let mut by_support: BTreeMap<ElementSet, HVector> = BTreeMap::new();
    for mono in &listing {
        let s = mono.support();
        by_support.entry(s).or_default().bump(mono.degree() - s.len());
    }
    let independents = bm.independent_off_base();
    for &i in &independents {
        let expected = family
            .get_by_label(bm, i)
            .cloned()
            .unwrap_or_default();
        let found = by_support.remove(&i).unwrap_or_default();
        let width = expected.len().max(found.len());
        if (0..width).any(|j| expected.get(j) != found.get(j)) {
            report.counts = Some(Witness::Set {
                set: i,
                detail: format!("h(Γ_I) = {expected} but monomial counts by degree are {found}"),
            });
            break;
        }
    }
    if report.counts.is_none() {
        if let Some((s, found)) = by_support.into_iter().find(|(s, _)| s.is_disjoint(base) && m.is_independent(*s)) {
            report.counts = Some(Witness::Set {
                set: s,
                detail: format!("no restricted h-vector for this support, counts {found}"),
            });
        }
    }

    for (i, local) in restrictions {
        let i = *i;
        let mine = o.restrict_support(i);
        let detail = match local {
            Ok(local) if *local == mine => continue,
            Ok(local) => {
                let extra = mine.iter().find(|x| !local.contains(x));
                let missing = local.iter().find(|x| !mine.contains(x));
                match (extra, missing) {
                    (Some(x), _) => format!("{x} is not in the construction on the restriction"),
                    (None, Some(x)) => format!("{x} from the construction on the restriction is missing"),
                    (None, None) => unreachable!(),
                }
            }
            Err(e) => format!("construction on the restriction failed: {e}"),
        };
        report.restrictions = Some(Witness::Set { set: i, detail });
        break;
    }

    match o.purity_violation() {
        Err(_) => {
            let w = o.ideal_violation().unwrap_or(Monomial::ONE);
            report.order_ideal = Some(monomial_witness(w));
        }
        Ok(Some(w)) => report.purity = Some(monomial_witness(w)),
        Ok(None) => {}
    }

    let h = m.h_vector();
    let f = o.f_vector();
    let width = h.len().max(f.len());
    if (0..width).any(|j| h.get(j) != f.get(j)) {
        report.f_vector = Some(Witness::Vectors { expected: h, found: f });
    }
    report
}

/// `construct(relabel · bm) == relabel(construct(bm))` for a permutation of the ground set.
///
/// Pushing `bm` forward along the permutation always yields an isomorphic based matroid, so
/// the only precondition is that `relabel` is a permutation of `{1..n}`.
pub fn check_naturality(bm: &BasedMatroid, relabel: &[usize]) -> Result<bool> {
    check_permutation(relabel, bm.n())?;
    let image = bm.relabel(relabel)?;
    Ok(construct(&image)? == construct(bm)?.relabel(relabel))
}

/// Naturality against an explicit target: `f` must map `bm` onto `other` as based matroids.
pub fn check_naturality_between(bm: &BasedMatroid, other: &BasedMatroid, f: &[usize]) -> Result<bool> {
    check_permutation(f, bm.n())?;
    if other.n() != bm.n() {
        return Err(Error::NotAnIsomorphism("ground sets differ in size".into()));
    }
    let image = bm.relabel(f)?;
    if image.matroid() != other.matroid() {
        return Err(Error::NotAnIsomorphism("bases are not mapped onto bases".into()));
    }
    if image.base() != other.base() {
        return Err(Error::NotAnIsomorphism("base is not mapped onto base".into()));
    }
    if image.order() != other.order() {
        return Err(Error::NotAnIsomorphism("order on E - B is not preserved".into()));
    }
    Ok(construct(other)? == construct(bm)?.relabel(f))
}

/// Plain-text table with one row per independent `I` disjoint from the base: `I`, `h(Γ_I)`,
/// and the monomials of `o` supported exactly on `I`.
pub fn render_table(bm: &BasedMatroid, o: &OrderIdeal) -> String {
    let family = crate::gamma::restricted_h_by_label(bm);
    let mut rows: Vec<(ElementSet, String, String)> = Vec::new();
    let mut keys: Vec<ElementSet> = family.keys().copied().collect();
    keys.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.iter().cmp(b.iter())));
    for i in keys {
        let monos: Vec<String> = o
            .listing()
            .into_iter()
            .filter(|m| m.support() == i)
            .map(|m| m.to_string())
            .collect();
        rows.push((i, family[&i].to_string(), monos.join(", ")));
    }
    let w0 = rows.iter().map(|r| r.0.to_string().len()).max().unwrap_or(0).max(1);
    let w1 = rows.iter().map(|r| r.1.len()).max().unwrap_or(0).max(10);
    let mut out = format!("{:<w0$} | {:<w1$} | Monomials\n", "I", "h(Gamma_I)");
    for (i, h, monos) in rows {
        out.push_str(&format!("{:<w0$} | {:<w1$} | {}\n", i.to_string(), h, monos));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{fano, ideal, set, FANO_TABLE};
    use crate::gamma::restricted_h_family;

    #[test]
    fn parse_and_display() {
        let m: Monomial = "x_4^2 x_5".parse().unwrap();
        assert_eq!(m.to_string(), "x4^2*x5");
        assert_eq!("x4^2*x5".parse::<Monomial>().unwrap(), m);
        assert_eq!("1".parse::<Monomial>().unwrap(), Monomial::ONE);
        assert_eq!(m.degree(), 3);
        assert_eq!(m.support(), set(&[4, 5]));
        assert!("y2".parse::<Monomial>().is_err());
        assert!("x0".parse::<Monomial>().is_err());
        assert!("".parse::<Monomial>().is_err());
    }

    #[test]
    fn monomial_json() {
        let m: Monomial = "x4^2x5".parse().unwrap();
        let v = serde_json::to_value(m).unwrap();
        assert_eq!(v, serde_json::json!({"vars": {"4": 2, "5": 1}}));
        let back: Monomial = serde_json::from_value(v).unwrap();
        assert_eq!(back, m);
        let one = serde_json::to_value(Monomial::ONE).unwrap();
        assert_eq!(one, serde_json::json!({"vars": {}}));
    }

    #[test]
    fn order_ideal_examples() {
        assert!(ideal(&["1", "x1", "x1^2"]).is_order_ideal());
        let bad = ideal(&["1", "x1^2", "x2"]);
        assert_eq!(bad.ideal_violation(), Some("x1^2".parse().unwrap()));
        assert!(ideal(&FANO_TABLE).is_order_ideal());
        assert_eq!(OrderIdeal::new().ideal_violation(), Some(Monomial::ONE));
    }

    #[test]
    fn purity_examples() {
        let o = ideal(&["1", "x1", "x2", "x1^2"]);
        assert_eq!(o.purity_violation().unwrap(), Some("x2".parse().unwrap()));
        assert!(ideal(&["1"]).is_pure().unwrap());
        assert!(ideal(&FANO_TABLE).is_pure().unwrap());
        assert!(matches!(ideal(&["x1"]).is_pure(), Err(Error::NotAnIdeal(_))));
    }

    #[test]
    fn f_vectors() {
        assert_eq!(ideal(&FANO_TABLE).f_vector(), HVector::from([1, 4, 10, 13]));
        assert_eq!(ideal(&["1"]).f_vector(), HVector::from([1]));
    }

    #[test]
    fn restrict_support_examples() {
        let o = ideal(&FANO_TABLE);
        let r = o.restrict_support(set(&[4, 7]));
        assert_eq!(
            r,
            ideal(&["1", "x4", "x4^2", "x7", "x7^2", "x7^3", "x4x7", "x4^2x7"])
        );
        assert_eq!(o.restrict_support(ElementSet::EMPTY), ideal(&["1"]));
        assert_eq!(o.restrict_support(ElementSet::full(7)), o);
    }

    #[test]
    fn conditions_pass_on_the_fano_table() {
        let bm = BasedMatroid::natural(fano());
        let family = restricted_h_family(&bm);
        let report = check_conditions(&bm, &ideal(&FANO_TABLE), &family);
        assert!(report.passed(), "{:?}", report.failures());
    }

    #[test]
    fn swapped_monomial_breaks_restriction_condition() {
        let bm = BasedMatroid::natural(fano());
        let family = restricted_h_family(&bm);
        let mut rows: Vec<&str> = FANO_TABLE.to_vec();
        let k = rows.iter().position(|s| *s == "x4^2x7").unwrap();
        rows[k] = "x4x7^2";
        let report = check_conditions(&bm, &ideal(&rows), &family);
        assert!(report.counts.is_none());
        assert!(report.order_ideal.is_none());
        match &report.restrictions {
            Some(Witness::Set { set: s, .. }) => assert_eq!(*s, set(&[4, 7])),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn condition_failures_carry_witnesses() {
        let bm = BasedMatroid::natural(fano());
        let family = restricted_h_family(&bm);
        let mut o = ideal(&FANO_TABLE);
        o.insert("x1".parse().unwrap());
        o.insert("x4x5x6".parse().unwrap());
        let report = check_conditions(&bm, &o, &family);
        assert_eq!(report.variables, Some(monomial_witness("x1".parse().unwrap())));
        assert!(report.supports.is_some());
        assert!(report.f_vector.is_some());
        assert!(!report.passed());
    }

    #[test]
    fn naturality_identity_and_automorphism() {
        let bm = BasedMatroid::natural(fano());
        let id: Vec<usize> = (0..=7).collect();
        assert!(check_naturality(&bm, &id).unwrap());
        // (2 3)(4 5) is a Fano automorphism fixing the triangle {1,2,3} setwise.
        let auto = vec![0, 1, 3, 2, 5, 4, 6, 7];
        assert_eq!(bm.matroid().relabel(&auto), *bm.matroid());
        assert!(check_naturality(&bm, &auto).unwrap());
        let target = BasedMatroid::new(fano(), set(&[1, 2, 3]), vec![5, 4, 6, 7]).unwrap();
        assert!(check_naturality_between(&bm, &target, &auto).unwrap());
        assert!(matches!(
            check_naturality_between(&bm, &bm, &auto),
            Err(Error::NotAnIsomorphism(_))
        ));
        assert!(matches!(check_naturality(&bm, &[0, 1, 1, 2, 3, 4, 5, 6]), Err(Error::NotAnIsomorphism(_))));
    }
}
