//! Irreducible hermitian symmetric domains, their products, restricted root
//! data and noncompact root realizations.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::root_systems::{Family, Root, RootSystem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DomainError {
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("invalid parameters for {0}")]
    Invalid(String),
}

fn parse_err(input: &str, reason: impl Into<String>) -> DomainError {
    DomainError::Parse { input: input.to_string(), reason: reason.into() }
}

/// One of the six classes of irreducible bounded symmetric domains.
///
/// `I(p,q)` is accepted with `p < q` because some catalog entries are written
/// that way; [`IrreducibleDomain::normalize`] swaps it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IrreducibleDomain {
    I { p: u32, q: u32 },
    II(u32),
    III(u32),
    IV(u32),
    V,
    VI,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DomainClass {
    I,
    II,
    III,
    IV,
    V,
    VI,
}

impl IrreducibleDomain {
    pub fn class(&self) -> DomainClass {
        match self {
            IrreducibleDomain::I { .. } => DomainClass::I,
            IrreducibleDomain::II(_) => DomainClass::II,
            IrreducibleDomain::III(_) => DomainClass::III,
            IrreducibleDomain::IV(_) => DomainClass::IV,
            IrreducibleDomain::V => DomainClass::V,
            IrreducibleDomain::VI => DomainClass::VI,
        }
    }

    /// Parameter bounds: `p, q ≥ 1`, `II(n ≥ 2)`, `III(n ≥ 1)`, `IV(n ≥ 1)`.
    pub fn validate(&self) -> Result<(), DomainError> {
        let ok = match *self {
            IrreducibleDomain::I { p, q } => p >= 1 && q >= 1,
            IrreducibleDomain::II(n) => n >= 2,
            IrreducibleDomain::III(n) | IrreducibleDomain::IV(n) => n >= 1,
            IrreducibleDomain::V | IrreducibleDomain::VI => true,
        };
        if ok {
            Ok(())
        } else {
            Err(DomainError::Invalid(self.to_string()))
        }
    }

    /// Whether the domain may be queried on its own. The degenerate members
    /// `I(1,1)`, `II(2)`, `III(1)`, `IV(1)` and `IV(2)` only occur as factors,
    /// as does `I(p,q)` with `p < q`.
    pub fn is_primary(&self) -> bool {
        self.validate().is_ok()
            && !matches!(
                self,
                IrreducibleDomain::I { p: 1, q: 1 }
                    | IrreducibleDomain::II(2)
                    | IrreducibleDomain::III(1)
                    | IrreducibleDomain::IV(1)
                    | IrreducibleDomain::IV(2)
            )
            && !matches!(self, IrreducibleDomain::I { p, q } if p < q)
    }

    pub fn real_rank(&self) -> u32 {
        match *self {
            IrreducibleDomain::I { p, q } => p.min(q),
            IrreducibleDomain::II(n) => n / 2,
            IrreducibleDomain::III(n) => n,
            IrreducibleDomain::IV(1) => 1,
            IrreducibleDomain::IV(_) => 2,
            IrreducibleDomain::V => 2,
            IrreducibleDomain::VI => 3,
        }
    }

    /// Classical closed form for the real dimension.
    pub fn dim_real(&self) -> u32 {
        match *self {
            IrreducibleDomain::I { p, q } => 2 * p * q,
            IrreducibleDomain::II(n) => n * (n - 1),
            IrreducibleDomain::III(n) => n * (n + 1),
            IrreducibleDomain::IV(n) => 2 * n,
            IrreducibleDomain::V => 32,
            IrreducibleDomain::VI => 54,
        }
    }

    pub fn complex_dim(&self) -> u32 {
        self.dim_real() / 2
    }

    pub fn restricted_root_datum(&self) -> RestrictedRootDatum {
        let t = self.real_rank();
        let (mult_short_pair, mult_long, mult_very_short) = match *self {
            IrreducibleDomain::I { p, q } => (2, 1, 2 * p.abs_diff(q)),
            IrreducibleDomain::II(n) => (4, 1, 4 * (n % 2)),
            IrreducibleDomain::III(_) => (1, 1, 0),
            IrreducibleDomain::IV(1) => (0, 1, 0),
            IrreducibleDomain::IV(n) => (n - 2, 1, 0),
            IrreducibleDomain::V => (6, 1, 8),
            IrreducibleDomain::VI => (8, 1, 0),
        };
        let system_type = if mult_very_short == 0 { SystemType::C } else { SystemType::BC };
        RestrictedRootDatum { system_type, t, mult_short_pair, mult_long, mult_very_short }
    }

    /// Tube type is equivalent to a reduced (type `C`) restricted root system.
    pub fn is_tube_type(&self) -> bool {
        self.restricted_root_datum().system_type == SystemType::C
    }

    /// Applies the low-rank coincidences, choosing the representative on the
    /// right: `III(1) ≅ II(2) ≅ IV(1) ≅ I(1,1)`, `II(3) ≅ I(3,1)`,
    /// `IV(3) ≅ III(2)`, `IV(4) ≅ I(2,2)`, `IV(6) ≅ II(4)`, and `I(p,q) ≅ I(q,p)`.
    pub fn normalize(&self) -> IrreducibleDomain {
        use IrreducibleDomain::*;
        match *self {
            I { p, q } if p < q => I { p: q, q: p },
            III(1) | II(2) | IV(1) => I { p: 1, q: 1 },
            II(3) => I { p: 3, q: 1 },
            IV(3) => III(2),
            IV(4) => I { p: 2, q: 2 },
            IV(6) => II(4),
            other => other,
        }
    }

    /// The absolute root system of the complexified group with the
    /// noncompact positive roots singled out.
    ///
    /// Fails only for parameters outside the supported rank range.
    pub fn noncompact_realization(&self) -> Result<NoncompactRealization, DomainError> {
        let invalid = || DomainError::Invalid(self.to_string());
        self.validate()?;
        let (family, rank) = match *self {
            IrreducibleDomain::I { p, q } => (Family::A, (p + q - 1) as usize),
            IrreducibleDomain::II(n) => (Family::D, n as usize),
            IrreducibleDomain::III(n) => (Family::C, n as usize),
            IrreducibleDomain::IV(n) if n % 2 == 1 => (Family::B, n.div_ceil(2) as usize),
            IrreducibleDomain::IV(n) => (Family::D, (n / 2 + 1) as usize),
            IrreducibleDomain::V => (Family::E6, 6),
            IrreducibleDomain::VI => (Family::E7, 7),
        };
        let sys = RootSystem::build(family, rank).map_err(|_| invalid())?;
        let pos = sys.positive_roots();
        let sigma_plus: Vec<Root> = match *self {
            IrreducibleDomain::I { p, .. } => {
                let p = p as usize;
                pos.into_iter()
                    .filter(|r| {
                        let c = r.coords();
                        c[..p].contains(&1) && c[p..].contains(&-1)
                    })
                    .collect()
            }
            IrreducibleDomain::II(_) => {
                pos.into_iter().filter(|r| r.coords().iter().filter(|&&c| c == 1).count() == 2).collect()
            }
            IrreducibleDomain::III(_) => {
                pos.into_iter().filter(|r| r.coords().iter().all(|&c| c >= 0)).collect()
            }
            IrreducibleDomain::IV(_) => pos.into_iter().filter(|r| r.coords()[0] == 1).collect(),
            IrreducibleDomain::V | IrreducibleDomain::VI => {
                let simple = sys.simple_roots();
                let exp = sys.simple_root_expansions();
                let top = &exp[&sys.highest_root()];
                let node = (0..simple.len()).find(|&i| top[i] == 1).ok_or_else(invalid)?;
                pos.into_iter().filter(|r| exp[r][node] == 1).collect()
            }
        };
        Ok(NoncompactRealization { absolute_system: sys, sigma_plus })
    }

    /// Harish-Chandra's maximal set of strongly orthogonal noncompact roots:
    /// repeatedly take the smallest root of Σ⁺ strongly orthogonal to all
    /// roots chosen so far.
    pub fn strongly_orthogonal_cascade(&self) -> Result<Vec<Root>, DomainError> {
        let real = self.noncompact_realization()?;
        Ok(real.cascade())
    }
}

impl fmt::Display for IrreducibleDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrreducibleDomain::I { p, q } => write!(f, "I({p},{q})"),
            IrreducibleDomain::II(n) => write!(f, "II({n})"),
            IrreducibleDomain::III(n) => write!(f, "III({n})"),
            IrreducibleDomain::IV(n) => write!(f, "IV({n})"),
            IrreducibleDomain::V => write!(f, "V"),
            IrreducibleDomain::VI => write!(f, "VI"),
        }
    }
}

impl FromStr for IrreducibleDomain {
    type Err = DomainError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match parse_factor(s.trim(), s)? {
            Factor::Domain(d) => Ok(d),
            Factor::Point => Err(parse_err(s, "a point is not an irreducible domain")),
        }
    }
}

/// A factor of a product: an irreducible domain or a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Factor {
    Domain(IrreducibleDomain),
    Point,
}

impl Factor {
    pub fn real_rank(&self) -> u32 {
        match self {
            Factor::Domain(d) => d.real_rank(),
            Factor::Point => 0,
        }
    }

    pub fn complex_dim(&self) -> u32 {
        match self {
            Factor::Domain(d) => d.complex_dim(),
            Factor::Point => 0,
        }
    }

    pub fn normalize(&self) -> Factor {
        match self {
            Factor::Domain(d) => Factor::Domain(d.normalize()),
            Factor::Point => Factor::Point,
        }
    }

    pub fn is_point(&self) -> bool {
        matches!(self, Factor::Point)
    }

    pub fn domain(&self) -> Option<IrreducibleDomain> {
        match self {
            Factor::Domain(d) => Some(*d),
            Factor::Point => None,
        }
    }
}

impl From<IrreducibleDomain> for Factor {
    fn from(d: IrreducibleDomain) -> Self {
        Factor::Domain(d)
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Domain(d) => d.fmt(f),
            Factor::Point => f.write_str("pt"),
        }
    }
}

impl FromStr for Factor {
    type Err = DomainError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_factor(s.trim(), s)
    }
}

/// A finite product of factors, kept in the order given.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DomainProduct {
    factors: Vec<Factor>,
}

impl DomainProduct {
    pub fn new(factors: Vec<Factor>) -> Result<DomainProduct, DomainError> {
        if factors.is_empty() {
            return Err(DomainError::Invalid("empty product".into()));
        }
        for f in &factors {
            if let Factor::Domain(d) = f {
                d.validate()?;
            }
        }
        Ok(DomainProduct { factors })
    }

    pub fn single(f: impl Into<Factor>) -> DomainProduct {
        DomainProduct { factors: vec![f.into()] }
    }

    pub fn of(domains: &[IrreducibleDomain]) -> DomainProduct {
        DomainProduct { factors: domains.iter().map(|&d| Factor::Domain(d)).collect() }
    }

    /// `I(1,1)^t`.
    pub fn polydisc(t: u32) -> DomainProduct {
        DomainProduct { factors: vec![Factor::Domain(IrreducibleDomain::I { p: 1, q: 1 }); t as usize] }
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn real_rank(&self) -> u32 {
        self.factors.iter().map(Factor::real_rank).sum()
    }

    pub fn complex_dim(&self) -> u32 {
        self.factors.iter().map(Factor::complex_dim).sum()
    }

    pub fn is_point(&self) -> bool {
        self.factors.iter().all(Factor::is_point)
    }

    pub fn normalize(&self) -> DomainProduct {
        DomainProduct { factors: self.factors.iter().map(Factor::normalize).collect() }
    }

    pub fn is_polydisc(&self) -> bool {
        self.factors.iter().all(|f| f.normalize() == Factor::Domain(IrreducibleDomain::I { p: 1, q: 1 }))
    }

    pub fn is_tube_type(&self) -> bool {
        self.factors.iter().all(|f| f.domain().is_none_or(|d| d.is_tube_type()))
    }
}

impl fmt::Display for DomainProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut i = 0;
        let mut first = true;
        while i < self.factors.len() {
            let mut j = i + 1;
            while j < self.factors.len() && self.factors[j] == self.factors[i] {
                j += 1;
            }
            if !first {
                f.write_str(" x ")?;
            }
            first = false;
            write!(f, "{}", self.factors[i])?;
            if j - i > 1 {
                write!(f, "^{}", j - i)?;
            }
            i = j;
        }
        Ok(())
    }
}

impl FromStr for DomainProduct {
    type Err = DomainError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut factors = Vec::new();
        let mut depth = 0i32;
        let mut start = 0;
        let mut terms = Vec::new();
        for (i, ch) in s.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                'x' if depth == 0 => {
                    terms.push(&s[start..i]);
                    start = i + 1;
                }
                _ => {}
            }
        }
        terms.push(&s[start..]);
        for term in terms {
            let term = term.trim();
            let (body, power) = match term.split_once('^') {
                Some((body, k)) => {
                    let k = parse_uint(k.trim(), s)?;
                    if k == 0 {
                        return Err(parse_err(s, "exponent must be positive"));
                    }
                    (body.trim(), k)
                }
                None => (term, 1),
            };
            let f = parse_factor(body, s)?;
            factors.extend(std::iter::repeat_n(f, power as usize));
        }
        Ok(DomainProduct { factors })
    }
}

fn parse_uint(text: &str, whole: &str) -> Result<u32, DomainError> {
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(parse_err(whole, format!("expected a number, found {text:?}")));
    }
    if text.len() > 1 && text.starts_with('0') {
        return Err(parse_err(whole, format!("leading zero in {text:?}")));
    }
    text.parse().map_err(|_| parse_err(whole, format!("number out of range: {text}")))
}

fn parse_args<'a>(text: &'a str, name: &str, whole: &str) -> Result<Vec<&'a str>, DomainError> {
    let inner = text
        .strip_prefix(name)
        .and_then(|r| r.strip_prefix('('))
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| parse_err(whole, format!("malformed {name}(...)")))?;
    Ok(inner.split(',').map(str::trim).collect())
}

fn parse_factor(text: &str, whole: &str) -> Result<Factor, DomainError> {
    let head: String = text.chars().take_while(|c| c.is_ascii_alphabetic()).collect();
    let d = match head.as_str() {
        "pt" if text == "pt" => return Ok(Factor::Point),
        "V" if text == "V" => IrreducibleDomain::V,
        "VI" if text == "VI" => IrreducibleDomain::VI,
        "I" => match parse_args(text, "I", whole)?.as_slice() {
            [p, q] => IrreducibleDomain::I { p: parse_uint(p, whole)?, q: parse_uint(q, whole)? },
            _ => return Err(parse_err(whole, "I takes two parameters")),
        },
        "II" | "III" | "IV" => {
            let args = parse_args(text, &head, whole)?;
            let [n] = args.as_slice() else {
                return Err(parse_err(whole, format!("{head} takes one parameter")));
            };
            let n = parse_uint(n, whole)?;
            match head.as_str() {
                "II" => IrreducibleDomain::II(n),
                "III" => IrreducibleDomain::III(n),
                _ => IrreducibleDomain::IV(n),
            }
        }
        _ => return Err(parse_err(whole, format!("unknown domain {text:?}"))),
    };
    d.validate().map_err(|_| parse_err(whole, format!("parameters out of range in {text}")))?;
    Ok(Factor::Domain(d))
}

macro_rules! string_serde {
    ($t:ty) => {
        impl Serialize for $t {
            fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }

        impl<'de> Deserialize<'de> for $t {
            fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
                let s = String::deserialize(d)?;
                s.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}

string_serde!(IrreducibleDomain);
string_serde!(Factor);
string_serde!(DomainProduct);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SystemType {
    C,
    BC,
}

impl fmt::Display for SystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SystemType::C => "C",
            SystemType::BC => "BC",
        })
    }
}

/// Restricted roots of type `C_t` or `BC_t` with multiplicities of
/// `ξ_i ± ξ_j`, `2ξ_i` and `ξ_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictedRootDatum {
    pub system_type: SystemType,
    pub t: u32,
    pub mult_short_pair: u32,
    pub mult_long: u32,
    pub mult_very_short: u32,
}

impl RestrictedRootDatum {
    /// Real dimension as the sum of the multiplicities of the positive
    /// restricted roots plus `t`.
    pub fn dim_real(&self) -> u32 {
        let t = self.t;
        t + t * t.saturating_sub(1) * self.mult_short_pair
            + t * self.mult_long
            + t * self.mult_very_short
    }
}

/// Absolute root system with the noncompact positive roots Σ⁺.
#[derive(Debug, Clone)]
pub struct NoncompactRealization {
    pub absolute_system: RootSystem,
    pub sigma_plus: Vec<Root>,
}

impl NoncompactRealization {
    pub fn cascade(&self) -> Vec<Root> {
        let mut chosen: Vec<Root> = Vec::new();
        for r in &self.sigma_plus {
            let free = chosen.iter().all(|c| {
                self.absolute_system.is_strongly_orthogonal(c, r).unwrap_or(false)
            });
            if free {
                chosen.push(r.clone());
            }
        }
        chosen
    }

    /// No two members of Σ⁺ add up to a root.
    pub fn is_abelian(&self) -> bool {
        self.sigma_plus.iter().all(|a| {
            self.sigma_plus.iter().all(|b| !self.absolute_system.contains(&a.add(b)))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> IrreducibleDomain {
        s.parse().unwrap()
    }

    #[test]
    fn cascades() {
        let c = d("III(2)").strongly_orthogonal_cascade().unwrap();
        assert_eq!(c, vec![Root(vec![0, 2]), Root(vec![2, 0])]);
        let c = d("I(2,2)").strongly_orthogonal_cascade().unwrap();
        assert_eq!(c, vec![Root(vec![0, 1, -1, 0]), Root(vec![1, 0, 0, -1])]);
    }

    #[test]
    fn normalization_examples() {
        assert_eq!(d("IV(3)").normalize(), d("III(2)"));
        assert_eq!(d("IV(6)").normalize(), d("II(4)"));
        assert_eq!(d("II(3)").normalize(), d("I(3,1)"));
        assert_eq!(d("I(2,4)").normalize(), d("I(4,2)"));
    }

    #[test]
    fn data_examples() {
        let r = d("I(5,3)").restricted_root_datum();
        assert_eq!((r.system_type, r.t, r.mult_short_pair, r.mult_long, r.mult_very_short), (SystemType::BC, 3, 2, 1, 4));
        let r = d("VI").restricted_root_datum();
        assert_eq!((r.system_type, r.t, r.mult_short_pair), (SystemType::C, 3, 8));
        assert!(!d("II(5)").is_tube_type());
        assert!(d("IV(7)").is_tube_type());
    }

    #[test]
    fn product_printing() {
        let p: DomainProduct = "I(1,1) x I(1,1)x I(1,1)".parse().unwrap();
        assert_eq!(p.to_string(), "I(1,1)^3");
        let p: DomainProduct = "I(3,1) x pt".parse().unwrap();
        assert_eq!(p.real_rank(), 1);
        assert!("I(0,1)".parse::<DomainProduct>().is_err());
        assert!("pt".parse::<IrreducibleDomain>().is_err());
        assert!("I(+3,1)".parse::<DomainProduct>().is_err());
        assert!("II(05)".parse::<DomainProduct>().is_err());
    }
}
