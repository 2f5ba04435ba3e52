//! Boundary components and the fine Levi decomposition of maximal parabolics.
//!
//! `P_b` for `1 ≤ b ≤ t` is the maximal parabolic attached to the `b`-th
//! simple restricted root; its boundary component `F_b` has real rank `t − b`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::domains::{DomainProduct, Factor, IrreducibleDomain};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParabolicError {
    #[error("b = {b} is out of range 1..={t} for {domain}")]
    OutOfRange { domain: String, b: u32, t: u32 },
    #[error("expected {expected} entries in the b-vector, found {found}")]
    Arity { expected: usize, found: usize },
    #[error("the b-vector selects no factor")]
    Improper,
    #[error("invalid domain {0}")]
    InvalidDomain(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryComponent {
    pub b: u32,
    /// Normalized type of `F_b`.
    pub factor: Factor,
}

impl BoundaryComponent {
    pub fn complex_dim(&self) -> u32 {
        self.factor.complex_dim()
    }
}

/// The compact factor `M_b` of the Levi component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CompactFactor {
    Absent,
    /// `U(1)`, for domains of class I.
    U1,
    /// Present without a further descriptor, for domains of class IV.
    Present,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeviDecomposition {
    pub b: u32,
    pub hermitian_factor: Factor,
    /// The reductive factor is of type `A_{b−1}`.
    pub reductive_factor_rank: u32,
    pub compact_factor: CompactFactor,
    pub dim_z: u32,
    pub dim_v: u32,
    pub dim_u: u32,
    /// Rank of the self-dual cone in `Z_b`.
    pub cone_rank: u32,
}

fn check_range(d: &IrreducibleDomain, b: u32) -> Result<u32, ParabolicError> {
    d.validate().map_err(|_| ParabolicError::InvalidDomain(d.to_string()))?;
    let t = d.real_rank();
    if b == 0 || b > t {
        return Err(ParabolicError::OutOfRange { domain: d.to_string(), b, t });
    }
    Ok(t)
}

pub fn boundary_component(d: &IrreducibleDomain, b: u32) -> Result<BoundaryComponent, ParabolicError> {
    use IrreducibleDomain::*;
    check_range(d, b)?;
    let raw = match d.normalize() {
        I { q, .. } if q == b => Factor::Point,
        I { p, q } => Factor::Domain(I { p: p - b, q: q - b }),
        II(n) if n - 2 * b <= 1 => Factor::Point,
        II(n) => Factor::Domain(II(n - 2 * b)),
        III(n) if n == b => Factor::Point,
        III(n) => Factor::Domain(III(n - b)),
        IV(_) if b == 1 => Factor::Domain(IV(1)),
        IV(_) => Factor::Point,
        V if b == 1 => Factor::Domain(I { p: 5, q: 1 }),
        V => Factor::Point,
        VI if b == 1 => Factor::Domain(IV(10)),
        VI if b == 2 => Factor::Domain(IV(1)),
        VI => Factor::Point,
    };
    Ok(BoundaryComponent { b, factor: raw.normalize() })
}

pub fn levi_decomposition(d: &IrreducibleDomain, b: u32) -> Result<LeviDecomposition, ParabolicError> {
    let t = check_range(d, b)?;
    let rd = d.restricted_root_datum();
    let dim_z = b * rd.mult_long + b * (b - 1) / 2 * rd.mult_short_pair;
    let dim_v = 2 * b * (t - b) * rd.mult_short_pair + b * rd.mult_very_short;
    let compact_factor = match d {
        IrreducibleDomain::I { .. } => CompactFactor::U1,
        IrreducibleDomain::IV(_) => CompactFactor::Present,
        _ => CompactFactor::Absent,
    };
    Ok(LeviDecomposition {
        b,
        hermitian_factor: boundary_component(d, b)?.factor,
        reductive_factor_rank: b - 1,
        compact_factor,
        dim_z,
        dim_v,
        dim_u: dim_z + dim_v,
        cone_rank: b,
    })
}

/// Boundary component of a product, one entry of `bs` per factor.
///
/// An entry of zero leaves the factor untouched; at least one entry must be
/// positive.
pub fn product_boundary_component(
    prod: &DomainProduct,
    bs: &[u32],
) -> Result<DomainProduct, ParabolicError> {
    if bs.len() != prod.factors().len() {
        return Err(ParabolicError::Arity { expected: prod.factors().len(), found: bs.len() });
    }
    if bs.iter().all(|&b| b == 0) {
        return Err(ParabolicError::Improper);
    }
    let mut out = Vec::with_capacity(bs.len());
    for (f, &b) in prod.factors().iter().zip(bs) {
        out.push(match (f, b) {
            (f, 0) => *f,
            (Factor::Domain(d), b) => boundary_component(d, b)?.factor,
            (Factor::Point, b) => {
                return Err(ParabolicError::OutOfRange { domain: "pt".into(), b, t: 0 })
            }
        });
    }
    DomainProduct::new(out).map_err(|e| ParabolicError::InvalidDomain(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> IrreducibleDomain {
        s.parse().unwrap()
    }

    #[test]
    fn components() {
        assert_eq!(boundary_component(&d("I(5,3)"), 2).unwrap().factor.to_string(), "I(3,1)");
        assert_eq!(boundary_component(&d("VI"), 1).unwrap().factor.to_string(), "IV(10)");
        assert_eq!(boundary_component(&d("V"), 1).unwrap().factor.to_string(), "I(5,1)");
        assert_eq!(boundary_component(&d("II(7)"), 3).unwrap().factor, Factor::Point);
        assert!(boundary_component(&d("III(2)"), 3).is_err());
    }

    #[test]
    fn levi_examples() {
        let l = levi_decomposition(&d("VI"), 1).unwrap();
        assert_eq!((l.dim_z, l.dim_v, l.cone_rank), (1, 32, 1));
        let l = levi_decomposition(&d("V"), 2).unwrap();
        assert_eq!((l.dim_z, l.dim_v), (8, 16));
        let l = levi_decomposition(&d("III(4)"), 2).unwrap();
        assert_eq!((l.dim_z, l.dim_v), (3, 8));
        assert_eq!(levi_decomposition(&d("I(4,2)"), 1).unwrap().compact_factor, CompactFactor::U1);
        assert_eq!(levi_decomposition(&d("III(4)"), 1).unwrap().compact_factor, CompactFactor::Absent);
    }

    #[test]
    fn products() {
        let p: DomainProduct = "I(3,2) x III(2)".parse().unwrap();
        let f = product_boundary_component(&p, &[1, 0]).unwrap();
        assert_eq!(f.to_string(), "I(2,1) x III(2)");
        assert!(product_boundary_component(&p, &[0, 0]).is_err());
        assert!(product_boundary_component(&p, &[1]).is_err());
    }
}
