//! The catalog of k-indices of hermitian type and its string grammar.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{RationalError, Violation};
use crate::domains::SystemType;

/// A Tits k-index of an absolutely simple group of hermitian type.
///
/// Grammar: `2A(d;n,s)`, `1D2(n,s)`, `2D2(n,s)`, `C2(n,s)`, `C1(n)`,
/// `IV(n;s)`, `E6-28`, `E7-31`, `Asplit(n;q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KIndex {
    /// `²A^(d)_{n,s}`: hermitian form of Witt index `s` over a degree `d`
    /// division algebra with involution of the second kind.
    A2 { d: u32, n: u32, s: u32 },
    /// `¹D^(2)_{n,s}`: skew-hermitian form on `D^n`, `n` even.
    D2Inner { n: u32, s: u32 },
    /// `²D^(2)_{n,s}`: skew-hermitian form on `D^n`, `n` odd.
    D2Outer { n: u32, s: u32 },
    /// `C^(2)_{n,s}`: hermitian form on `D^n` over a totally indefinite
    /// quaternion algebra.
    C2 { n: u32, s: u32 },
    /// The split symplectic group `Sp(2n)`.
    C1 { n: u32 },
    /// Orthogonal group of a form of signature `(n,2)` with Witt index `s`.
    IV { n: u32, s: u32 },
    E6_28,
    E7_31,
    /// Unitary group over an imaginary quadratic extension whose Witt index
    /// `q` equals the real rank at every place.
    ASplit { n: u32, q: u32 },
}

/// Flags attached to an index that passed validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexTags {
    /// Some admissible archimedean data give a zero-dimensional rational
    /// boundary component.
    pub zero_dim_capable: bool,
}

impl KIndex {
    /// The k-rank.
    pub fn rank(&self) -> u32 {
        match *self {
            KIndex::A2 { s, .. }
            | KIndex::D2Inner { s, .. }
            | KIndex::D2Outer { s, .. }
            | KIndex::C2 { s, .. }
            | KIndex::IV { s, .. } => s,
            KIndex::C1 { n } => n,
            KIndex::E6_28 => 1,
            KIndex::E7_31 => 2,
            KIndex::ASplit { q, .. } => q,
        }
    }

    /// Type and rank of the relative root system over k.
    pub fn k_root_system(&self) -> (SystemType, u32) {
        use SystemType::{BC, C};
        let ty = match *self {
            KIndex::A2 { d, n, s } if 2 * s * d == n + 1 => C,
            KIndex::ASplit { n, q } if 2 * q == n + 1 => C,
            KIndex::C2 { n, s } if n == 2 * s => C,
            KIndex::C1 { .. } | KIndex::IV { .. } => C,
            _ => BC,
        };
        (ty, self.rank())
    }

    pub fn is_quaternionic_skew(&self) -> bool {
        matches!(self, KIndex::D2Inner { .. } | KIndex::D2Outer { .. })
    }

    /// Printed name in subscript notation, e.g. `C^(2)_{4,2}`.
    pub fn display_name(&self) -> String {
        match *self {
            KIndex::A2 { d, n, s } => format!("²A^({d})_{{{n},{s}}}"),
            KIndex::D2Inner { n, s } => format!("¹D^(2)_{{{n},{s}}}"),
            KIndex::D2Outer { n, s } => format!("²D^(2)_{{{n},{s}}}"),
            KIndex::C2 { n, s } => format!("C^(2)_{{{n},{s}}}"),
            KIndex::C1 { n } => format!("C^(1)_{{{n},{n}}}"),
            KIndex::IV { n, s } => format!("SO({n},2), Witt index {s}"),
            KIndex::E6_28 => "²E^28_{6,1}".into(),
            KIndex::E7_31 => "E^31_{7,2}".into(),
            KIndex::ASplit { n, q } => format!("²A^(1)_{{{n},{q}}} (split over R)"),
        }
    }
}

/// Checks the defining inequalities of the catalog. Every failed constraint
/// is reported.
pub fn validate_index(ix: &KIndex) -> Result<IndexTags, Vec<Violation>> {
    let mut v = Vec::new();
    let mut need = |ok: bool, what: &str| {
        if !ok {
            v.push(Violation::new(what));
        }
    };
    let zero_dim_capable = match *ix {
        KIndex::A2 { d, n, s } => {
            need(s >= 1, "s ≥ 1");
            need(d >= 1, "d ≥ 1");
            need(d >= 1 && (n + 1) % d.max(1) == 0, "d | n+1");
            need(2 * s * d <= n + 1, "2sd ≤ n+1");
            if d == 1 {
                need(2 * s < n + 1, "if d = 1, then 2s < n+1");
            }
            true
        }
        KIndex::D2Inner { n, s } => {
            need(n % 2 == 0, "n even for ¹D^(2)");
            need(s >= 1, "s ≥ 1");
            need(s < n / 2, "s < ℓ (n = 2ℓ)");
            false
        }
        KIndex::D2Outer { n, s } => {
            need(n % 2 == 1, "n odd for ²D^(2)");
            need(s >= 1, "s ≥ 1");
            need(s < n / 2, "s < ℓ (n = 2ℓ+1)");
            false
        }
        KIndex::C2 { n, s } => {
            need(s >= 1, "s ≥ 1");
            if s >= 2 {
                need(s < n / 2 || n == 2 * s, "s < [n/2], or n = 2s");
            } else {
                need(n >= 2, "n ≥ 2s");
            }
            n == 2 * s
        }
        KIndex::C1 { n } => {
            need(n >= 2, "n ≥ 2 (Sp(2) is excluded)");
            true
        }
        KIndex::IV { n, s } => {
            need(n >= 3, "n ≥ 3");
            need(s == 1 || s == 2, "Witt index s ∈ {1,2}");
            true
        }
        KIndex::E6_28 | KIndex::E7_31 => false,
        KIndex::ASplit { n, q } => {
            need(q >= 1, "q ≥ 1");
            need(2 * q <= n + 1, "2q ≤ n+1");
            need(n >= 2, "n ≥ 2 (SU(1,1) is excluded)");
            true
        }
    };
    if v.is_empty() {
        Ok(IndexTags { zero_dim_capable })
    } else {
        Err(v)
    }
}

impl fmt::Display for KIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KIndex::A2 { d, n, s } => write!(f, "2A({d};{n},{s})"),
            KIndex::D2Inner { n, s } => write!(f, "1D2({n},{s})"),
            KIndex::D2Outer { n, s } => write!(f, "2D2({n},{s})"),
            KIndex::C2 { n, s } => write!(f, "C2({n},{s})"),
            KIndex::C1 { n } => write!(f, "C1({n})"),
            KIndex::IV { n, s } => write!(f, "IV({n};{s})"),
            KIndex::E6_28 => f.write_str("E6-28"),
            KIndex::E7_31 => f.write_str("E7-31"),
            KIndex::ASplit { n, q } => write!(f, "Asplit({n};{q})"),
        }
    }
}

pub(crate) fn parse_number(text: &str, whole: &str) -> Result<u32, RationalError> {
    let text = text.trim();
    let bad = || RationalError::Parse(format!("{whole:?}: expected a number, found {text:?}"));
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    if text.len() > 1 && text.starts_with('0') {
        return Err(bad());
    }
    text.parse().map_err(|_| bad())
}

/// Splits `"a;b,c"` style argument lists by the given separators in order.
fn args<const N: usize>(inner: &str, seps: [char; N], whole: &str) -> Result<Vec<u32>, RationalError> {
    let mut out = Vec::with_capacity(N + 1);
    let mut rest = inner;
    for sep in seps {
        let (head, tail) = rest
            .split_once(sep)
            .ok_or_else(|| RationalError::Parse(format!("{whole:?}: expected {sep:?}")))?;
        out.push(parse_number(head, whole)?);
        rest = tail;
    }
    out.push(parse_number(rest, whole)?);
    Ok(out)
}

impl FromStr for KIndex {
    type Err = RationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        match t {
            "E6-28" => return Ok(KIndex::E6_28),
            "E7-31" => return Ok(KIndex::E7_31),
            _ => {}
        }
        let (head, inner) = t
            .split_once('(')
            .and_then(|(h, r)| r.strip_suffix(')').map(|r| (h, r)))
            .ok_or_else(|| RationalError::Parse(format!("{s:?} is not an index")))?;
        let ix = match head {
            "2A" => {
                let a = args(inner, [';', ','], s)?;
                KIndex::A2 { d: a[0], n: a[1], s: a[2] }
            }
            "1D2" | "2D2" | "C2" => {
                let a = args(inner, [','], s)?;
                match head {
                    "1D2" => KIndex::D2Inner { n: a[0], s: a[1] },
                    "2D2" => KIndex::D2Outer { n: a[0], s: a[1] },
                    _ => KIndex::C2 { n: a[0], s: a[1] },
                }
            }
            "C1" => KIndex::C1 { n: args(inner, [], s)?[0] },
            "IV" => {
                let a = args(inner, [';'], s)?;
                KIndex::IV { n: a[0], s: a[1] }
            }
            "Asplit" => {
                let a = args(inner, [';'], s)?;
                KIndex::ASplit { n: a[0], q: a[1] }
            }
            _ => return Err(RationalError::Parse(format!("unknown index family in {s:?}"))),
        };
        Ok(ix)
    }
}

impl Serialize for KIndex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for KIndex {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ix(s: &str) -> KIndex {
        s.parse().unwrap()
    }

    #[test]
    fn validation_examples() {
        assert!(validate_index(&ix("2A(3;11,2)")).is_ok());
        let v = validate_index(&ix("2A(1;7,4)")).unwrap_err();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].constraint, "if d = 1, then 2s < n+1");
        assert!(validate_index(&ix("C2(4,2)")).unwrap().zero_dim_capable);
        assert!(!validate_index(&ix("C2(7,2)")).unwrap().zero_dim_capable);
        assert!(validate_index(&ix("C2(5,2)")).is_err());
        assert!(validate_index(&ix("1D2(5,2)")).is_err());
        assert!(validate_index(&ix("C1(1)")).is_err());
    }

    #[test]
    fn grammar() {
        for s in ["2A(3;11,2)", "1D2(6,2)", "2D2(7,2)", "C2(4,2)", "C1(3)", "IV(5;1)", "E6-28", "E7-31", "Asplit(5;2)"] {
            assert_eq!(ix(s).to_string(), s);
        }
        assert!("IV(5)".parse::<KIndex>().is_err());
        assert!("2A(3,11,2)".parse::<KIndex>().is_err());
    }
}
