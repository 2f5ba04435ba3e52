//! Symmetric k-subgroups incident to rational maximal parabolics.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::arch::{PlaceDatum, QGroup};
use super::boundary::{c_map, check_b, is_split_over_R, rational_boundary};
use super::index::KIndex;
use super::RationalError;
use crate::domains::{DomainProduct, IrreducibleDomain};
use crate::incidence::{
    incident_subdomain, verify_conditions, H2Flag, IncidenceConditions, PlanKind,
    SymmetricSubgroupPlan,
};

/// How the subgroup is built over k.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Construction {
    /// The real construction already works over k.
    SplitOverR,
    /// `SO(n−1,2)` as the stabilizer of a nonisotropic vector.
    OrthoComplement,
    /// `N_b = L_b × Z_G(L_b)` for a hermitian Levi factor defined over k.
    LeviTimesCentralizer,
    /// `U(H, H^⊥; h)` for `H = H_b ⊕ H_b′` nondegenerate.
    WittComplement,
    /// `U(H, H^⊥; h)` for a maximal isotropic `H_s`; the anisotropic kernel
    /// times its centralizer.
    Table3Row,
    /// Stabilizer of a codimension one nondegenerate subspace.
    CodimOneSubspace,
    /// Stabilizer of a hyperbolic plane, giving the tube `I(q,q)`.
    TubeOverK,
    /// A polydisc built inside a single hyperbolic plane.
    PolydiscOverK,
    /// Splitting of `V` into hyperbolic planes in normal form.
    HyperbolicPlaneSplit,
    /// `IV(3) ⊂ IV(4)` from a quaternion form lifted to the quadratic extension.
    OrthogonalLift,
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ExceptionTag {
    None,
    /// `C^(2)_{2n,n}` at `b = n`: the subgroup is minimal only over k.
    C2_2n_n,
    /// `C^(2)_{2,1}`: no incident subgroup of full rank exists.
    C2_2_1,
}

/// The real side of a rational plan at one place.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlacePlan {
    /// Domain against which the conditions are evaluated.
    pub ambient: IrreducibleDomain,
    pub c: u32,
    pub plan: SymmetricSubgroupPlan,
    pub conditions: IncidenceConditions,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QIncidencePlan {
    pub index: KIndex,
    pub b: u32,
    pub construction: Construction,
    /// `L`, when the subgroup is `L × Z_G(L)`.
    pub levi: Option<String>,
    pub centralizer: Option<String>,
    pub centralizer_real: Option<String>,
    pub per_place: Vec<PlacePlan>,
    /// The rational boundary component is a rational boundary component of
    /// the subdomain.
    pub cond4: bool,
    pub exception: ExceptionTag,
    /// The applicable second condition holds over k but not over ℝ.
    pub minimal_over_k_only: bool,
    pub source_row: String,
}

impl QIncidencePlan {
    pub fn real_domains(&self) -> Vec<DomainProduct> {
        self.per_place.iter().map(|p| p.plan.factors.clone()).collect()
    }

    pub fn c1(&self) -> bool {
        self.per_place.iter().all(|p| p.conditions.c1)
    }

    pub fn all_conditions_hold(&self) -> bool {
        self.cond4 && self.per_place.iter().all(|p| p.conditions.all_hold())
    }
}

/// One row of the catalog of subgroups for `b = s`, with symbolic parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table3Row {
    pub index: String,
    pub levi: String,
    pub centralizer: String,
    pub subdomains: String,
    pub centralizer_real: String,
}

fn row(index: &str, levi: &str, centralizer: &str, subdomains: &str, real: &str) -> Table3Row {
    Table3Row {
        index: index.into(),
        levi: levi.into(),
        centralizer: centralizer.into(),
        subdomains: subdomains.into(),
        centralizer_real: real.into(),
    }
}

/// The rows as computed by the engine. The quaternionic rows use the
/// convention that `V` has dimension `n` over the quaternion algebra.
pub fn table3() -> Vec<Table3Row> {
    vec![
        row("2A(d;n,s)", "2A(d;n-2ds,0)", "2A(d;2ds-1,s)", "I(p-ds,q-ds) x I(ds,ds)", "SU(ds,ds)"),
        row("1D2(n,s)", "1D2(n-2s,0)", "1D2(2s,s)", "II(n-2s) x II(2s)", "SU(2s,H)"),
        row("2D2(n,s)", "2D2(n-2s,0)", "2D2(2s,s)", "II(n-2s) x II(2s)", "SU(2s,H)"),
        row("C1(n)", "-", "G", "-", "-"),
        row("C2(n,s)", "C2(n-2s,0)", "C2(2s,s)", "III(n-2s) x III(2s)", "Sp(4s,R)"),
    ]
}

/// `L` and `Z_G(L)` for `U(H, H^⊥)` with `H` of dimension `2b` over the
/// division algebra.
fn witt_descriptors(ix: &KIndex, b: u32) -> Option<(String, String, String)> {
    match *ix {
        KIndex::A2 { d, n, s } => Some((
            format!("2A({d};{},{})", n - 2 * d * b, s - b),
            format!("2A({d};{},{b})", 2 * d * b - 1),
            format!("SU({},{})", d * b, d * b),
        )),
        KIndex::D2Inner { n, s } => Some((
            format!("1D2({},{})", n - 2 * b, s - b),
            format!("1D2({},{b})", 2 * b),
            format!("SU({},H)", 2 * b),
        )),
        KIndex::D2Outer { n, s } => Some((
            format!("2D2({},{})", n - 2 * b, s - b),
            format!("2D2({},{b})", 2 * b),
            format!("SU({},H)", 2 * b),
        )),
        KIndex::C2 { n, s } => Some((
            format!("C2({},{})", n - 2 * b, s - b),
            format!("C2({},{b})", 2 * b),
            format!("Sp({},R)", 4 * b),
        )),
        _ => None,
    }
}

struct Builder<'a> {
    g: &'a QGroup,
    b: u32,
    per_place: Vec<PlacePlan>,
}

impl Builder<'_> {
    fn push(
        &mut self,
        ambient: IrreducibleDomain,
        c: u32,
        factors: DomainProduct,
        kind: PlanKind,
        source: &str,
    ) -> Result<(), RationalError> {
        let h2 = H2Flag::Unlisted;
        let plan = SymmetricSubgroupPlan { factors, kind, h2, source_row: source.to_string() };
        self.push_plan(ambient, c, plan)
    }

    fn push_plan(
        &mut self,
        ambient: IrreducibleDomain,
        c: u32,
        plan: SymmetricSubgroupPlan,
    ) -> Result<(), RationalError> {
        let conditions =
            verify_conditions(&ambient, c, &plan).map_err(|e| RationalError::Internal(e.to_string()))?;
        self.per_place.push(PlacePlan { ambient, c, plan, conditions });
        Ok(())
    }

    fn places(&self) -> Vec<(PlaceDatum, IrreducibleDomain, u32)> {
        self.g
            .arch
            .places()
            .iter()
            .zip(self.g.real_forms())
            .map(|(d, r)| (*d, *r, c_map(&self.g.index, d, self.b)))
            .collect()
    }

    /// The real catalog plan for `(real form, c)`, first entry.
    fn catalog(&mut self, real: IrreducibleDomain, c: u32) -> Result<(), RationalError> {
        let plan = incident_subdomain(&real, c)
            .map_err(|e| RationalError::Internal(e.to_string()))?
            .remove(0);
        self.push_plan(real, c, plan)
    }

    /// `I(p−k,q−k) × I(k,k)` at a place of signature `(p,q)`, or the tube
    /// `I(q,q)` when `k = q`. `f_first` puts the boundary factor first.
    fn unitary(&mut self, p: u32, q: u32, k: u32, f_first: bool, source: &str) -> Result<(), RationalError> {
        let real = IrreducibleDomain::I { p, q };
        let tube = IrreducibleDomain::I { p: k, q: k };
        if q > k {
            let f = IrreducibleDomain::I { p: p - k, q: q - k };
            let fs = if f_first { [f, tube] } else { [tube, f] };
            self.push(real, k, DomainProduct::of(&fs), PlanKind::Table1, source)
        } else {
            self.push(real, k, DomainProduct::single(tube), PlanKind::Table2Tube, source)
        }
    }
}

fn signature(d: &PlaceDatum) -> (u32, u32) {
    match *d {
        PlaceDatum::Signature { p, q } => (p, q),
        _ => unreachable!("unitary indices carry signatures"),
    }
}

/// Runs the case analysis for the rational maximal parabolic `P_b`.
pub fn incident_qsubgroup(g: &QGroup, b: u32) -> Result<QIncidencePlan, RationalError> {
    use IrreducibleDomain as D;
    check_b(g, b)?;
    let ix = g.index;
    let s = g.rank();
    let zero_dim = rational_boundary(g, b)?.is_zero_dimensional;
    let mut bld = Builder { g, b, per_place: Vec::new() };
    let mut out = QIncidencePlan {
        index: ix,
        b,
        construction: Construction::SplitOverR,
        levi: None,
        centralizer: None,
        centralizer_real: None,
        per_place: Vec::new(),
        cond4: true,
        exception: ExceptionTag::None,
        minimal_over_k_only: false,
        source_row: String::new(),
    };
    let places = bld.places();

    if let KIndex::C2 { n, s } = ix {
        if n == 2 * s && b == s {
            out.construction = Construction::HyperbolicPlaneSplit;
            if s == 1 {
                out.exception = ExceptionTag::C2_2_1;
                out.cond4 = false;
                out.source_row = "exception C^(2)_{2,1}: III(1) in III(2)".into();
                for (_, real, c) in &places {
                    bld.push(*real, *c, DomainProduct::of(&[D::III(1)]), PlanKind::Exception, &out.source_row)?;
                }
            } else {
                out.exception = ExceptionTag::C2_2n_n;
                out.minimal_over_k_only = true;
                out.levi = Some(format!("C2(2,1)^{s}"));
                out.source_row = "exception C^(2)_{2n,n}: n hyperbolic planes".into();
                for (_, real, c) in &places {
                    let f = DomainProduct::of(&vec![D::III(2); s as usize]);
                    bld.push(*real, *c, f, PlanKind::Exception, &out.source_row)?;
                }
            }
            out.per_place = bld.per_place;
            return Ok(out);
        }
    }

    if is_split_over_R(g) {
        let even_iv = matches!(ix, KIndex::IV { n, .. } if n % 2 == 0) && b == 2;
        out.construction = if even_iv { Construction::OrthoComplement } else { Construction::SplitOverR };
        out.source_row = if b < s { "split over R, Table 1" } else { "split over R, Table 2" }.into();
        for (_, real, c) in &places {
            bld.catalog(*real, *c)?;
        }
        out.per_place = bld.per_place;
        return Ok(out);
    }

    match ix {
        KIndex::E7_31 | KIndex::E6_28 => {
            out.construction = Construction::LeviTimesCentralizer;
            out.levi = Some(format!("L_{b}"));
            out.centralizer = Some(format!("Z_G(L_{b})"));
            if ix == KIndex::E6_28 {
                out.source_row = "rank one, row V".into();
                for (_, real, c) in &places {
                    let f = DomainProduct::of(&[D::I { p: 1, q: 1 }, D::I { p: 5, q: 1 }]);
                    bld.push(*real, *c, f, PlanKind::Table1, &out.source_row)?;
                }
            } else {
                out.source_row = "Table 1, row VI".into();
                for (_, real, c) in &places {
                    bld.catalog(*real, *c)?;
                }
            }
        }
        KIndex::IV { n, .. } => {
            out.construction = Construction::CodimOneSubspace;
            out.source_row = "rank one, row IV".into();
            for (_, real, c) in &places {
                bld.push(*real, *c, DomainProduct::of(&[D::IV(n - 1)]), PlanKind::Table2Maximal, &out.source_row)?;
            }
        }
        KIndex::A2 { d, .. } if zero_dim => {
            let (p, q) = signature(&places[0].0);
            if p > q {
                out.construction = if s == 1 { Construction::TubeOverK } else { Construction::Table3Row };
                out.source_row = "zero-dimensional, maximal tube I(q,q)".into();
                for (datum, _, _) in &places {
                    let (p, q) = signature(datum);
                    bld.unitary(p, q, q, true, &out.source_row)?;
                }
            } else if s == 1 && d == 2 {
                out.construction = Construction::OrthogonalLift;
                out.source_row = "rank one, IV(3) in IV(4)".into();
                for (_, _, c) in &places {
                    bld.push(D::IV(4), *c, DomainProduct::of(&[D::IV(3)]), PlanKind::Table2Maximal, &out.source_row)?;
                }
            } else {
                out.construction =
                    if s == 1 { Construction::PolydiscOverK } else { Construction::HyperbolicPlaneSplit };
                out.source_row = "zero-dimensional, polydisc (I(1,1))^q in I(q,q)".into();
                for (_, real, c) in &places {
                    bld.push(*real, *c, DomainProduct::polydisc(q), PlanKind::Polydisc, &out.source_row)?;
                }
            }
        }
        KIndex::A2 { d, .. } => {
            let at_s = b == s;
            out.construction = match (at_s, s) {
                (false, _) => Construction::WittComplement,
                (true, 1) => Construction::CodimOneSubspace,
                (true, _) => Construction::Table3Row,
            };
            out.source_row = match (at_s, s) {
                (false, _) => "Table 1 over k",
                (true, 1) => "rank one, row I",
                (true, _) => "Table 3, row 2A",
            }
            .into();
            let f_first = !(at_s && s == 1);
            for (datum, _, _) in &places {
                let (p, q) = signature(datum);
                bld.unitary(p, q, b * d, f_first, &out.source_row)?;
            }
        }
        KIndex::D2Inner { n, .. } | KIndex::D2Outer { n, .. } | KIndex::C2 { n, .. } => {
            let at_s = b == s;
            let quaternionic = ix.is_quaternionic_skew();
            out.construction = match (at_s, s) {
                (false, _) => Construction::WittComplement,
                (true, 1) => Construction::CodimOneSubspace,
                (true, _) => Construction::Table3Row,
            };
            out.source_row = match (at_s, s, quaternionic) {
                (false, _, _) => "Table 1 over k",
                (true, 1, true) => "rank one, row II",
                (true, 1, false) => "rank one, row III",
                (true, _, true) => "Table 3, row D",
                (true, _, false) => "Table 3, row C^(2)",
            }
            .into();
            for (datum, real, c) in &places {
                match (real, datum) {
                    (D::IV(_), PlaceDatum::Split) => bld.catalog(*real, *c)?,
                    _ => {
                        let fs = if quaternionic {
                            [D::II(n - 2 * c), D::II(2 * c)]
                        } else {
                            [D::III(n - c), D::III(*c)]
                        };
                        bld.push(*real, *c, DomainProduct::of(&fs), PlanKind::Table1, &out.source_row)?;
                    }
                }
            }
        }
        KIndex::C1 { .. } | KIndex::ASplit { .. } => {
            return Err(RationalError::Internal(format!("{ix} is split over R")));
        }
    }
    let from_witt = matches!(
        out.construction,
        Construction::WittComplement
            | Construction::Table3Row
            | Construction::CodimOneSubspace
            | Construction::TubeOverK
    );
    if from_witt {
        if let Some((l, z, zr)) = witt_descriptors(&ix, b) {
            out.levi = Some(l);
            out.centralizer = Some(z);
            out.centralizer_real = Some(zr);
        }
    }
    out.per_place = bld.per_place;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(ix: &str, arch: &str) -> QGroup {
        QGroup::new(ix.parse().unwrap(), arch.parse().unwrap()).unwrap()
    }

    fn domains(p: &QIncidencePlan) -> Vec<String> {
        p.real_domains().iter().map(|d| d.to_string()).collect()
    }

    #[test]
    fn c2_exception() {
        let p = incident_qsubgroup(&g("C2(4,2)", "def"), 2).unwrap();
        assert_eq!(p.exception, ExceptionTag::C2_2n_n);
        assert_eq!(domains(&p), ["III(2)^2"]);
        assert!(p.c1() && p.minimal_over_k_only);
        assert!(!p.all_conditions_hold());
        let p = incident_qsubgroup(&g("C2(2,1)", "split"), 1).unwrap();
        assert_eq!(p.exception, ExceptionTag::C2_2_1);
        assert!(!p.c1() && !p.cond4);
    }

    #[test]
    fn polydisc_over_k() {
        let p = incident_qsubgroup(&g("2A(3;5,1)", "(3,3)"), 1).unwrap();
        assert_eq!(p.construction, Construction::PolydiscOverK);
        assert_eq!(domains(&p), ["I(1,1)^3"]);
        assert!(p.all_conditions_hold());
    }

    #[test]
    fn e7() {
        let p = incident_qsubgroup(&g("E7-31", "split"), 1).unwrap();
        assert_eq!(p.construction, Construction::LeviTimesCentralizer);
        assert_eq!(domains(&p), ["IV(10) x IV(1)"]);
        assert!(p.all_conditions_hold());
        assert_eq!(p.exception, ExceptionTag::None);
    }

    #[test]
    fn table3_a_row() {
        let p = incident_qsubgroup(&g("2A(3;14,2)", "(8,7)"), 2).unwrap();
        assert_eq!(p.construction, Construction::Table3Row);
        assert_eq!(p.centralizer_real.as_deref(), Some("SU(6,6)"));
        assert_eq!(domains(&p), ["I(2,1) x I(6,6)"]);
        assert!(p.all_conditions_hold());
    }

    #[test]
    fn orthogonal_lift() {
        let p = incident_qsubgroup(&g("2A(2;3,1)", "(2,2)"), 1).unwrap();
        assert_eq!(p.construction, Construction::OrthogonalLift);
        assert_eq!(domains(&p), ["IV(3)"]);
        assert!(p.all_conditions_hold());
    }
}
