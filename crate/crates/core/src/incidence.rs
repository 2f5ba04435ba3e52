//! Symmetric subgroups incident to maximal real parabolics.
//!
//! For `b < t` the answer comes from Table 1. For `b = t` it comes from
//! Table 2, except on the (ED) list, where the maximal polydisc is used.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::domains::{DomainProduct, Factor, IrreducibleDomain};
use crate::parabolic::{boundary_component, ParabolicError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IncidenceError {
    #[error(transparent)]
    Parabolic(#[from] ParabolicError),
    #[error("malformed plan: {0}")]
    MalformedPlan(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PlanKind {
    Table1,
    Table2Maximal,
    Table2Tube,
    Polydisc,
    /// Produced only by the rational engine.
    Exception,
}

/// Whether the subdomain is already known to be incident at the level of
/// second cohomology, as printed in the catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum H2Flag {
    Yes,
    No,
    /// Yes exactly when `p = q`.
    ConditionalPEqQ,
    /// The catalog lists no flag for this column.
    Unlisted,
}

impl H2Flag {
    /// Resolves the flag for a concrete ambient domain.
    pub fn holds_for(&self, d: &IrreducibleDomain) -> Option<bool> {
        match self {
            H2Flag::Yes => Some(true),
            H2Flag::No => Some(false),
            H2Flag::ConditionalPEqQ => Some(matches!(d, IrreducibleDomain::I { p, q } if p == q)),
            H2Flag::Unlisted => None,
        }
    }
}

impl fmt::Display for H2Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            H2Flag::Yes => "yes",
            H2Flag::No => "no",
            H2Flag::ConditionalPEqQ => "p=q",
            H2Flag::Unlisted => "-",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetricSubgroupPlan {
    pub factors: DomainProduct,
    pub kind: PlanKind,
    pub h2: H2Flag,
    pub source_row: String,
}

impl SymmetricSubgroupPlan {
    fn new(factors: DomainProduct, kind: PlanKind, h2: H2Flag, source_row: &str) -> Self {
        SymmetricSubgroupPlan { factors, kind, h2, source_row: source_row.to_string() }
    }
}

/// Which of the three condition families applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConditionFamily {
    /// Conditions 1), 2), 3): positive-dimensional boundary component.
    Plain,
    /// Conditions 1), 2′), 3′): point boundary component, not on the (ED) list.
    Prime,
    /// Conditions 1), 2″), 3″): point boundary component on the (ED) list.
    DoublePrime,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncidenceConditions {
    pub family: ConditionFamily,
    /// Rank of the subdomain equals the rank of the ambient domain.
    pub c1: bool,
    pub c2: bool,
    pub c3: bool,
}

impl IncidenceConditions {
    pub fn all_hold(&self) -> bool {
        self.c1 && self.c2 && self.c3
    }
}

/// The (ED) list: `I(q,q)`, `II(n)` with `n` even, `III(n)`.
pub fn is_ed(d: &IrreducibleDomain) -> bool {
    match *d {
        IrreducibleDomain::I { p, q } => p == q,
        IrreducibleDomain::II(n) => n % 2 == 0,
        IrreducibleDomain::III(_) => true,
        _ => false,
    }
}

pub fn condition_family(d: &IrreducibleDomain, b: u32) -> ConditionFamily {
    if b < d.real_rank() {
        ConditionFamily::Plain
    } else if is_ed(d) {
        ConditionFamily::DoublePrime
    } else {
        ConditionFamily::Prime
    }
}

/// All catalog plans for `(d, b)`, in the order printed.
pub fn incident_subdomain(
    d: &IrreducibleDomain,
    b: u32,
) -> Result<Vec<SymmetricSubgroupPlan>, IncidenceError> {
    use IrreducibleDomain::*;
    boundary_component(d, b)?;
    let d = if matches!(d, I { p, q } if p < q) { d.normalize() } else { *d };
    let t = d.real_rank();
    let of = DomainProduct::of;
    if b < t {
        let (factors, h2) = match d {
            I { p, q } => (of(&[I { p: p - b, q: q - b }, I { p: b, q: b }]), H2Flag::ConditionalPEqQ),
            II(n) => (of(&[II(n - 2 * b), II(2 * b)]), H2Flag::Yes),
            III(n) => (of(&[III(n - b), III(b)]), H2Flag::Yes),
            IV(_) => (of(&[IV(1), IV(1)]), H2Flag::Yes),
            V => (of(&[I { p: 5, q: 1 }, I { p: 1, q: 1 }]), H2Flag::Yes),
            VI if b == 1 => (of(&[IV(10), IV(1)]), H2Flag::Yes),
            VI => (of(&[IV(1), IV(10)]), H2Flag::Yes),
        };
        return Ok(vec![SymmetricSubgroupPlan::new(factors, PlanKind::Table1, h2, "Table 1")]);
    }
    if is_ed(&d) {
        return Ok(vec![SymmetricSubgroupPlan::new(
            DomainProduct::polydisc(t),
            PlanKind::Polydisc,
            H2Flag::Unlisted,
            "Table 2, (ED) polydisc",
        )]);
    }
    let (maximal, tube): (Vec<(IrreducibleDomain, H2Flag)>, Vec<IrreducibleDomain>) = match d {
        I { p, q } => (vec![(I { p: p - 1, q }, H2Flag::No)], vec![I { p: q, q }]),
        II(n) => (vec![(II(n - 1), H2Flag::Yes)], vec![II(n - 1)]),
        IV(n) => (vec![(IV(n - 1), H2Flag::Yes)], vec![IV(n - 1)]),
        V => (
            vec![(I { p: 2, q: 4 }, H2Flag::Yes), (II(5), H2Flag::No), (IV(8), H2Flag::No)],
            vec![I { p: 2, q: 2 }, II(4), IV(8)],
        ),
        VI => (
            vec![(I { p: 3, q: 3 }, H2Flag::Yes), (II(6), H2Flag::Yes)],
            vec![I { p: 3, q: 3 }, II(6)],
        ),
        III(_) => unreachable!("III is on the (ED) list"),
    };
    let mut out: Vec<SymmetricSubgroupPlan> = maximal
        .into_iter()
        .map(|(m, h2)| {
            SymmetricSubgroupPlan::new(DomainProduct::single(m), PlanKind::Table2Maximal, h2, "Table 2, maximal")
        })
        .collect();
    out.extend(tube.into_iter().map(|m| {
        SymmetricSubgroupPlan::new(
            DomainProduct::single(m),
            PlanKind::Table2Tube,
            H2Flag::Unlisted,
            "Table 2, maximal tube",
        )
    }));
    Ok(out)
}

fn structure_ok(d: &IrreducibleDomain, plan: &SymmetricSubgroupPlan) -> Result<(), IncidenceError> {
    let n = plan.factors.factors().len();
    let bad = |why: &str| Err(IncidenceError::MalformedPlan(format!("{why}: {}", plan.factors)));
    match plan.kind {
        PlanKind::Table1 if n < 2 => bad("a Table 1 plan has at least two factors"),
        PlanKind::Table2Maximal | PlanKind::Table2Tube if n != 1 => {
            bad("a Table 2 plan is irreducible")
        }
        PlanKind::Polydisc if !plan.factors.is_polydisc() => bad("not a polydisc"),
        _ if plan.factors.factors().iter().any(Factor::is_point) => {
            bad(&format!("point factor in a plan for {d}"))
        }
        _ => Ok(()),
    }
}

/// Evaluates conditions 1)–3) in the variant that applies to `(d, b)`.
///
/// Condition 1) compares ranks. Condition 2) in each variant holds by catalog
/// provenance: the plan must come from the table that applies. Condition 3)
/// is checked structurally: for `b < t` some factor must be the boundary
/// component `F_b`; for `b = t` the point is a boundary component of every
/// factor, so only the shape of the plan is checked.
pub fn verify_conditions(
    d: &IrreducibleDomain,
    b: u32,
    plan: &SymmetricSubgroupPlan,
) -> Result<IncidenceConditions, IncidenceError> {
    let fb = boundary_component(d, b)?;
    structure_ok(d, plan)?;
    let family = condition_family(d, b);
    let c1 = plan.factors.real_rank() == d.real_rank();
    let c2 = match family {
        ConditionFamily::Plain => plan.kind == PlanKind::Table1,
        ConditionFamily::Prime => {
            matches!(plan.kind, PlanKind::Table2Maximal | PlanKind::Table2Tube)
        }
        ConditionFamily::DoublePrime => plan.kind == PlanKind::Polydisc,
    };
    let c3 = match family {
        ConditionFamily::Plain => plan.factors.factors().iter().any(|f| f.normalize() == fb.factor),
        ConditionFamily::Prime | ConditionFamily::DoublePrime => fb.factor.is_point(),
    };
    Ok(IncidenceConditions { family, c1, c2, c3 })
}

/// Plans for a product domain: one `b` per factor, zero meaning the factor is
/// carried along unchanged. Returns every combination of factor plans.
pub fn product_incident_subdomain(
    prod: &DomainProduct,
    bs: &[u32],
) -> Result<Vec<DomainProduct>, IncidenceError> {
    crate::parabolic::product_boundary_component(prod, bs)?;
    let mut combos: Vec<Vec<Factor>> = vec![Vec::new()];
    for (f, &b) in prod.factors().iter().zip(bs) {
        let choices: Vec<Vec<Factor>> = match (f, b) {
            (f, 0) => vec![vec![*f]],
            (Factor::Domain(d), b) => incident_subdomain(d, b)?
                .into_iter()
                .map(|p| p.factors.factors().to_vec())
                .collect(),
            (Factor::Point, _) => unreachable!("rejected by the boundary check"),
        };
        combos = combos
            .into_iter()
            .flat_map(|prefix| {
                choices.iter().map(move |c| {
                    let mut v = prefix.clone();
                    v.extend(c.iter().copied());
                    v
                })
            })
            .collect();
    }
    combos
        .into_iter()
        .map(|v| DomainProduct::new(v).map_err(|e| IncidenceError::MalformedPlan(e.to_string())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> IrreducibleDomain {
        s.parse().unwrap()
    }

    fn first(s: &str, b: u32) -> String {
        incident_subdomain(&d(s), b).unwrap()[0].factors.to_string()
    }

    #[test]
    fn examples() {
        assert_eq!(first("I(5,3)", 2), "I(3,1) x I(2,2)");
        assert_eq!(first("VI", 2), "IV(1) x IV(10)");
        assert_eq!(first("II(7)", 3), "II(6)");
        assert_eq!(first("II(6)", 3), "I(1,1)^3");
        let v = incident_subdomain(&d("V"), 2).unwrap();
        let names: Vec<String> = v.iter().map(|p| p.factors.to_string()).collect();
        assert_eq!(names, ["I(2,4)", "II(5)", "IV(8)", "I(2,2)", "II(4)", "IV(8)"]);
        assert_eq!(v[0].h2, H2Flag::Yes);
        assert_eq!(v[1].h2, H2Flag::No);
    }

    #[test]
    fn conditions() {
        let plan = &incident_subdomain(&d("II(7)"), 3).unwrap()[0];
        let c = verify_conditions(&d("II(7)"), 3, plan).unwrap();
        assert_eq!(c.family, ConditionFamily::Prime);
        assert!(c.all_hold());
        let plan = SymmetricSubgroupPlan::new(
            "III(1) x III(1)".parse().unwrap(),
            PlanKind::Table1,
            H2Flag::Yes,
            "Table 1",
        );
        assert!(verify_conditions(&d("III(2)"), 1, &plan).unwrap().all_hold());
    }

    #[test]
    fn malformed() {
        let plan = SymmetricSubgroupPlan::new(
            "III(2)".parse().unwrap(),
            PlanKind::Polydisc,
            H2Flag::Unlisted,
            "x",
        );
        assert!(verify_conditions(&d("III(2)"), 2, &plan).is_err());
    }

    #[test]
    fn product_plans() {
        let p: DomainProduct = "V x III(2)".parse().unwrap();
        let plans = product_incident_subdomain(&p, &[2, 0]).unwrap();
        assert_eq!(plans.len(), 6);
        assert_eq!(plans[0].to_string(), "I(2,4) x III(2)");
    }
}
