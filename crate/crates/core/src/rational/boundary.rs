//! Rational boundary components and the maps `c(b, σ)`.

use serde::{Deserialize, Serialize};

use super::arch::{PlaceDatum, QGroup};
use super::index::KIndex;
use super::RationalError;
use crate::domains::Factor;
use crate::parabolic::boundary_component;

/// `F_b = ∏_σ F_{c(b,σ)}` for a rational maximal parabolic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalBoundary {
    pub b: u32,
    pub per_place_c: Vec<u32>,
    pub per_place_factor: Vec<Factor>,
    pub is_zero_dimensional: bool,
}

pub(crate) fn check_b(g: &QGroup, b: u32) -> Result<(), RationalError> {
    let s = g.rank();
    if b == 0 || b > s {
        return Err(RationalError::OutOfRange { b, s });
    }
    Ok(())
}

/// Index of the simple real root at a place that restricts to the `b`-th
/// simple k-root.
pub fn c_map(ix: &KIndex, datum: &PlaceDatum, b: u32) -> u32 {
    match (*ix, datum) {
        (KIndex::A2 { d, .. }, _) => b * d,
        (KIndex::C2 { .. }, _) => 2 * b,
        // With Witt index 1 only the isotropic line is rational, and it
        // belongs to the point boundary component.
        (KIndex::IV { s: 1, .. }, _) => 2,
        _ => b,
    }
}

/// Whether the relative root system over k agrees with the real one at
/// every place.
#[allow(non_snake_case)]
pub fn is_split_over_R(g: &QGroup) -> bool {
    let k = g.index.k_root_system();
    g.real_forms().iter().all(|r| {
        let rd = r.restricted_root_datum();
        (rd.system_type, rd.t) == k
    })
}

/// The hermitian Levi factor of `P_b` is anisotropic exactly at `b = s`.
pub fn anisotropic_hermitian_levi(g: &QGroup, b: u32) -> Result<bool, RationalError> {
    check_b(g, b)?;
    Ok(b == g.rank())
}

pub fn rational_boundary(g: &QGroup, b: u32) -> Result<RationalBoundary, RationalError> {
    check_b(g, b)?;
    let mut per_place_c = Vec::new();
    let mut per_place_factor = Vec::new();
    for (datum, real) in g.arch.places().iter().zip(g.real_forms()) {
        let c = c_map(&g.index, datum, b);
        let fb = boundary_component(real, c).map_err(|e| RationalError::Internal(e.to_string()))?;
        per_place_c.push(c);
        per_place_factor.push(fb.factor);
    }
    let is_zero_dimensional = per_place_factor.iter().all(Factor::is_point);
    Ok(RationalBoundary { b, per_place_c, per_place_factor, is_zero_dimensional })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(ix: &str, arch: &str) -> QGroup {
        QGroup::new(ix.parse().unwrap(), arch.parse().unwrap()).unwrap()
    }

    #[test]
    fn examples() {
        let rb = rational_boundary(&g("2A(3;5,1)", "(3,3),(3,3)"), 1).unwrap();
        assert!(rb.is_zero_dimensional);
        let rb = rational_boundary(&g("1D2(6,2)", "def,def"), 2).unwrap();
        assert_eq!(rb.per_place_factor[0].to_string(), "I(1,1)");
        assert!(!rb.is_zero_dimensional);
        let rb = rational_boundary(&g("C2(4,2)", "def"), 2).unwrap();
        assert!(rb.is_zero_dimensional);
        let rb = rational_boundary(&g("E7-31", "split"), 1).unwrap();
        assert_eq!(rb.per_place_factor[0].complex_dim(), 10);
        assert!(rational_boundary(&g("E7-31", "split"), 3).is_err());
    }

    #[test]
    fn splitting() {
        assert!(is_split_over_R(&g("C1(4)", "split,split")));
        assert!(is_split_over_R(&g("2A(1;6,2)", "(5,2),(5,2)")));
        assert!(!is_split_over_R(&g("2A(1;6,2)", "(5,2),(4,3)")));
        assert!(!is_split_over_R(&g("2A(3;11,2)", "(6,6)")));
        assert!(is_split_over_R(&g("IV(7;2)", "(7,2)")));
        assert!(!is_split_over_R(&g("IV(7;1)", "(7,2)")));
    }
}
