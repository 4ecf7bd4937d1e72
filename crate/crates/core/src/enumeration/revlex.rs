//! The 0/1 revlex basis encoding and the line-oriented database format.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::element_set::{binomial, MAX_ELEMENTS};
use crate::error::{Error, Result};
use crate::matroid::{revlex_subsets, Matroid};

/// One matroid as a basis indicator over the `r`-subsets of `{1..n}` in revlex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RevlexRecord {
    pub n: usize,
    pub r: usize,
    pub indicator: String,
}

impl RevlexRecord {
    /// Checks the shape of the record: size bounds, alphabet, length and at least one basis.
    pub fn check(&self) -> Result<()> {
        if self.n == 0 || self.n > MAX_ELEMENTS {
            return Err(Error::GroundSetSize(self.n));
        }
        if self.r > self.n {
            return Err(Error::MalformedRecord(format!("rank {} exceeds n = {}", self.r, self.n)));
        }
        let expected = binomial(self.n, self.r) as usize;
        if self.indicator.len() != expected {
            return Err(Error::LengthMismatch {
                n: self.n,
                r: self.r,
                expected,
                found: self.indicator.len(),
            });
        }
        if let Some(c) = self.indicator.chars().find(|c| *c != '0' && *c != '1') {
            return Err(Error::MalformedRecord(format!("unexpected character {c:?} in indicator")));
        }
        if !self.indicator.contains('1') {
            return Err(Error::EmptyBases);
        }
        Ok(())
    }
}

impl fmt::Display for RevlexRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.n, self.r, self.indicator)
    }
}

/// Decodes a record, validating the exchange axiom.
pub fn parse_revlex(rec: &RevlexRecord) -> Result<Matroid> {
    rec.check()?;
    let bases = revlex_subsets(rec.n, rec.r)
        .into_iter()
        .zip(rec.indicator.bytes())
        .filter(|(_, c)| *c == b'1')
        .map(|(s, _)| s);
    Matroid::new(rec.n, bases)
}

pub fn serialize_revlex(m: &Matroid) -> RevlexRecord {
    RevlexRecord {
        n: m.n(),
        r: m.rank(),
        indicator: m.indicator().into_iter().map(|b| if b { '1' } else { '0' }).collect(),
    }
}

/// Parses `n r indicator` lines; blank lines and lines starting with `#` are skipped.
/// Errors carry the 1-based line number.
pub fn parse_db(text: &str) -> Result<Vec<RevlexRecord>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let bad = |what: &str| Error::MalformedRecord(format!("line {}: {what}", lineno + 1));
        if fields.len() != 3 {
            return Err(bad("expected `n r indicator`"));
        }
        let n = fields[0].parse().map_err(|_| bad("n is not an integer"))?;
        let r = fields[1].parse().map_err(|_| bad("r is not an integer"))?;
        out.push(RevlexRecord {
            n,
            r,
            indicator: fields[2].to_string(),
        });
    }
    Ok(out)
}

/// One record per line.
pub fn format_db(records: &[RevlexRecord]) -> String {
    records.iter().map(|r| format!("{r}\n")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{fano, set};

    fn rec(n: usize, r: usize, ind: &str) -> RevlexRecord {
        RevlexRecord {
            n,
            r,
            indicator: ind.into(),
        }
    }

    #[test]
    fn decodes_in_revlex_order() {
        let m = parse_revlex(&rec(4, 2, "111000")).unwrap();
        assert_eq!(m.bases(), &[set(&[1, 2]), set(&[1, 3]), set(&[2, 3])]);
        assert_eq!(m.loops(), set(&[4]));
    }

    #[test]
    fn all_ones_is_uniform() {
        assert_eq!(parse_revlex(&rec(5, 3, &"1".repeat(10))).unwrap(), Matroid::uniform(3, 5));
    }

    #[test]
    fn rejects_bad_records() {
        // {1,2} and {3,4}: exchanging 1 out of {1,2} needs {2,3} or {2,4}.
        assert!(matches!(
            parse_revlex(&rec(4, 2, "100001")),
            Err(Error::ExchangeViolation { .. })
        ));
        assert!(matches!(
            parse_revlex(&rec(4, 2, "11100")),
            Err(Error::LengthMismatch { expected: 6, found: 5, .. })
        ));
        assert_eq!(parse_revlex(&rec(3, 2, "000")), Err(Error::EmptyBases));
        assert!(parse_revlex(&rec(3, 2, "1x1")).is_err());
    }

    #[test]
    fn the_spec_style_pair_is_decided_by_exchange() {
        // Bases {1,2} and {1,4}: exchanges stay inside {1,2,4}, so this is a matroid.
        let m = parse_revlex(&rec(4, 2, "100100")).unwrap();
        assert_eq!(m.bases(), &[set(&[1, 2]), set(&[1, 4])]);
    }

    #[test]
    fn round_trips() {
        assert_eq!(serialize_revlex(&Matroid::uniform(2, 3)).indicator, "111");
        let f = serialize_revlex(&fano());
        assert_eq!(f.indicator.len(), 35);
        assert_eq!(f.indicator.matches('1').count(), 28);
        assert_eq!(parse_revlex(&f).unwrap(), fano());
    }

    #[test]
    fn database_text() {
        let text = "# comment\n\n4 2 111000\n3 3 1\n";
        let recs = parse_db(text).unwrap();
        assert_eq!(recs.len(), 2);
        assert_eq!(format_db(&recs), "4 2 111000\n3 3 1\n");
        let err = parse_db("4 2\n").unwrap_err();
        assert!(err.to_string().contains("line 1"));
    }
}
