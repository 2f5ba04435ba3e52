//! Archimedean data and the real form at each real place.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::index::{parse_number, validate_index, KIndex};
use super::{RationalError, Violation};
use crate::domains::IrreducibleDomain;

/// What is known about a group at one real place.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PlaceDatum {
    /// Signature of the hermitian or quadratic form.
    Signature { p: u32, q: u32 },
    /// The quaternion algebra is definite at this place.
    Definite,
    /// The quaternion algebra splits at this place.
    Split,
}

impl fmt::Display for PlaceDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlaceDatum::Signature { p, q } => write!(f, "({p},{q})"),
            PlaceDatum::Definite => f.write_str("def"),
            PlaceDatum::Split => f.write_str("split"),
        }
    }
}

impl FromStr for PlaceDatum {
    type Err = RationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        match t {
            "def" | "definite" => Ok(PlaceDatum::Definite),
            "split" => Ok(PlaceDatum::Split),
            _ => {
                let inner = t
                    .strip_prefix('(')
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(|| RationalError::Parse(format!("bad place datum {s:?}")))?;
                let (p, q) = inner
                    .split_once(',')
                    .ok_or_else(|| RationalError::Parse(format!("bad signature {s:?}")))?;
                Ok(PlaceDatum::Signature { p: parse_number(p, s)?, q: parse_number(q, s)? })
            }
        }
    }
}

/// One datum per real place of the totally real field `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArchimedeanData(pub Vec<PlaceDatum>);

impl ArchimedeanData {
    /// `[k : ℚ]`.
    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn places(&self) -> &[PlaceDatum] {
        &self.0
    }

    pub fn uniform(datum: PlaceDatum, f: usize) -> ArchimedeanData {
        ArchimedeanData(vec![datum; f])
    }

    /// The datum used when none is supplied, for one place, or `None` when
    /// the index leaves the choice open.
    pub fn default_for(ix: &KIndex) -> Option<ArchimedeanData> {
        let d = match *ix {
            KIndex::A2 { .. } => return None,
            KIndex::D2Inner { .. } | KIndex::D2Outer { .. } => PlaceDatum::Definite,
            KIndex::IV { n, .. } => PlaceDatum::Signature { p: n, q: 2 },
            KIndex::ASplit { n, q } => PlaceDatum::Signature { p: n + 1 - q, q },
            KIndex::C2 { .. } | KIndex::C1 { .. } | KIndex::E6_28 | KIndex::E7_31 => PlaceDatum::Split,
        };
        Some(ArchimedeanData(vec![d]))
    }
}

impl fmt::Display for ArchimedeanData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for ArchimedeanData {
    type Err = RationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut out = Vec::new();
        let mut depth = 0;
        let mut start = 0;
        for (i, ch) in s.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                ',' if depth == 0 => {
                    out.push(s[start..i].parse()?);
                    start = i + 1;
                }
                _ => {}
            }
        }
        out.push(s[start..].parse()?);
        Ok(ArchimedeanData(out))
    }
}

impl Serialize for ArchimedeanData {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ArchimedeanData {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// The irreducible domain of the real group at a place.
///
/// For the quaternionic indices `C2` and for `C1`, `E6-28`, `E7-31` the real
/// form does not depend on the place, and either flag is accepted as a
/// place marker.
pub fn real_form_at_place(ix: &KIndex, datum: &PlaceDatum) -> Result<IrreducibleDomain, RationalError> {
    use IrreducibleDomain as D;
    let bad = |why: String| Err(RationalError::InconsistentDatum(format!("{datum} for {ix}: {why}")));
    match (*ix, *datum) {
        (KIndex::A2 { d, n, s }, PlaceDatum::Signature { p, q }) => {
            if p + q != n + 1 {
                return bad(format!("p + q must be {}", n + 1));
            }
            if p < q {
                return bad("signatures are written with p ≥ q".into());
            }
            if q < s * d {
                return bad(format!("q must be at least sd = {}", s * d));
            }
            Ok(D::I { p, q })
        }
        (KIndex::ASplit { n, q: w }, PlaceDatum::Signature { p, q }) => {
            if p + q != n + 1 || q != w || p < q {
                return bad(format!("expected signature ({},{w})", n + 1 - w));
            }
            Ok(D::I { p, q })
        }
        (KIndex::D2Inner { n, .. } | KIndex::D2Outer { n, .. }, PlaceDatum::Definite) => Ok(D::II(n)),
        (KIndex::D2Inner { n, .. } | KIndex::D2Outer { n, .. }, PlaceDatum::Split) => Ok(D::IV(2 * n - 2)),
        (KIndex::IV { n, .. }, PlaceDatum::Signature { p, q }) => {
            if q != 2 || p != n {
                return bad(format!("expected signature ({n},2)"));
            }
            Ok(D::IV(n))
        }
        (KIndex::C2 { n, .. } | KIndex::C1 { n }, PlaceDatum::Definite | PlaceDatum::Split) => Ok(D::III(n)),
        (KIndex::E6_28, PlaceDatum::Definite | PlaceDatum::Split) => Ok(D::V),
        (KIndex::E7_31, PlaceDatum::Definite | PlaceDatum::Split) => Ok(D::VI),
        _ => bad("wrong kind of datum for this index".into()),
    }
}

/// `Res_{k|ℚ} G′` for an absolutely simple `G′` with the given index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QGroup {
    pub index: KIndex,
    pub arch: ArchimedeanData,
    real_forms: Vec<IrreducibleDomain>,
}

impl QGroup {
    pub fn new(index: KIndex, arch: ArchimedeanData) -> Result<QGroup, Vec<Violation>> {
        validate_index(&index)?;
        let mut v = Vec::new();
        if arch.degree() == 0 {
            v.push(Violation::new("at least one real place"));
        }
        let mut real_forms = Vec::new();
        for d in arch.places() {
            match real_form_at_place(&index, d) {
                Ok(r) => real_forms.push(r),
                Err(e) => v.push(Violation::new(&e.to_string())),
            }
        }
        if index.is_quaternionic_skew() {
            let split = arch.places().iter().filter(|d| **d == PlaceDatum::Split).count();
            let definite = arch.degree() - split;
            if split > 0 && index.rank() > 1 {
                v.push(Violation::new("split places force k-rank 1 for D^(2) indices"));
            }
            let four = matches!(index, KIndex::D2Inner { n: 4, .. });
            if split > 0 && definite > 0 && !four {
                v.push(Violation::new("definite and split places mix only for n = 4"));
            }
        }
        if !real_forms.is_empty()
            && real_forms.iter().all(|r| r.normalize() == IrreducibleDomain::I { p: 1, q: 1 })
        {
            v.push(Violation::new("every real factor is of SL(2,R) type"));
        }
        if v.is_empty() {
            Ok(QGroup { index, arch, real_forms })
        } else {
            Err(v)
        }
    }

    pub fn rank(&self) -> u32 {
        self.index.rank()
    }

    pub fn real_forms(&self) -> &[IrreducibleDomain] {
        &self.real_forms
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_forms() {
        let ix: KIndex = "2A(3;11,2)".parse().unwrap();
        assert_eq!(real_form_at_place(&ix, &"(6,6)".parse().unwrap()).unwrap().to_string(), "I(6,6)");
        let ix: KIndex = "2D2(5,2)".parse().unwrap();
        assert_eq!(real_form_at_place(&ix, &PlaceDatum::Split).unwrap().to_string(), "IV(8)");
        assert_eq!(real_form_at_place(&KIndex::E7_31, &PlaceDatum::Split).unwrap().to_string(), "VI");
        assert!(real_form_at_place(&ix, &"(3,2)".parse().unwrap()).is_err());
    }

    #[test]
    fn mixed_places() {
        let ok = QGroup::new("1D2(4,1)".parse().unwrap(), "def,split".parse().unwrap());
        assert!(ok.is_ok());
        let bad = QGroup::new("1D2(6,1)".parse().unwrap(), "def,split".parse().unwrap());
        assert!(bad.is_err());
        let bad = QGroup::new("1D2(6,2)".parse().unwrap(), "split".parse().unwrap());
        assert!(bad.is_err());
    }

    #[test]
    fn arch_grammar() {
        let a: ArchimedeanData = "(6,6), (7,5)".parse().unwrap();
        assert_eq!(a.to_string(), "(6,6),(7,5)");
        assert_eq!(a.degree(), 2);
    }
}
