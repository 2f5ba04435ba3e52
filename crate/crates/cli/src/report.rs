//! The structured answer to one query. Serialized as JSON with a
//! `schema_version` field; text rendering lives in `text.rs`.

use hermsym::checks::{CheckOutcome, Grid};
use hermsym::domains::{DomainProduct, IrreducibleDomain, RestrictedRootDatum};
use hermsym::incidence::{ConditionFamily, IncidenceConditions, SymmetricSubgroupPlan};
use hermsym::parabolic::{BoundaryComponent, LeviDecomposition};
use hermsym::rational::{ArchimedeanData, KIndex, QIncidencePlan, RationalBoundary};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub target: String,
    pub answer: Answer,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Answer {
    DomainInfo(DomainInfo),
    Boundary(BoundaryAnswer),
    Incident(IncidentAnswer),
    ProductIncident(ProductIncidentAnswer),
    Rational(RationalAnswer),
    Diagram(DiagramAnswer),
    Check(CheckAnswer),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DomainInfo {
    pub domain: IrreducibleDomain,
    pub normalized: IrreducibleDomain,
    pub real_rank: u32,
    pub dim_real: u32,
    pub complex_dim: u32,
    pub tube_type: bool,
    pub ed: bool,
    pub restricted_roots: RestrictedRootDatum,
    pub noncompact_roots: usize,
    /// Strongly orthogonal roots in ambient coordinates.
    pub cascade: Vec<Vec<i32>>,
    pub citation: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundaryAnswer {
    pub domain: IrreducibleDomain,
    pub b: u32,
    pub boundary: BoundaryComponent,
    pub levi: LeviDecomposition,
    pub citation: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckedPlan {
    pub plan: SymmetricSubgroupPlan,
    pub conditions: IncidenceConditions,
    /// Whether the h2 flag holds for this domain, when the table decides it.
    pub h2_holds: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IncidentAnswer {
    pub domain: IrreducibleDomain,
    pub b: u32,
    pub family: ConditionFamily,
    pub plans: Vec<CheckedPlan>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProductIncidentAnswer {
    pub domain: DomainProduct,
    pub b: Vec<u32>,
    pub boundary: DomainProduct,
    pub subdomains: Vec<DomainProduct>,
    pub citation: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RationalStep {
    pub boundary: RationalBoundary,
    pub anisotropic_hermitian_levi: bool,
    pub plan: QIncidencePlan,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RationalAnswer {
    pub index: KIndex,
    pub name: String,
    pub arch: ArchimedeanData,
    pub k_rank: u32,
    pub zero_dim_capable: bool,
    pub real_forms: Vec<IrreducibleDomain>,
    pub split_over_r: bool,
    pub steps: Vec<RationalStep>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiagramAnswer {
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckAnswer {
    pub grid: Grid,
    pub passed: usize,
    pub failed: usize,
    pub outcomes: Vec<CheckOutcome>,
}

/// What went wrong, for the structured error output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorReport {
    pub schema_version: u32,
    pub error: ErrorKind,
    pub message: String,
    pub violations: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ErrorKind {
    Parse,
    Validation,
}
