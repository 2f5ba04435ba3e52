//! The engine over number fields: k-indices, archimedean data, rational
//! boundary components and incident k-subgroups.

mod arch;
mod boundary;
mod index;
mod plan;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use arch::{real_form_at_place, ArchimedeanData, PlaceDatum, QGroup};
pub use boundary::{anisotropic_hermitian_levi, c_map, is_split_over_R, rational_boundary, RationalBoundary};
pub use index::{validate_index, IndexTags, KIndex};
pub use plan::{
    incident_qsubgroup, table3, Construction, ExceptionTag, PlacePlan, QIncidencePlan, Table3Row,
};

/// A failed constraint, named by the constraint itself.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub constraint: String,
}

impl Violation {
    pub fn new(constraint: &str) -> Violation {
        Violation { constraint: constraint.to_string() }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.constraint)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("inconsistent place datum: {0}")]
    InconsistentDatum(String),
    #[error("b = {b} is out of range 1..={s}")]
    OutOfRange { b: u32, s: u32 },
    #[error("{0}")]
    Internal(String),
}
