//! Symbolic classification engine for hermitian symmetric domains.
//!
//! Everything is computed at the level of isomorphism types: root systems in
//! integer coordinates, domain products, boundary components, and the
//! symmetric subgroups incident to maximal real and rational parabolics.

pub mod domains;
pub mod root_systems;
pub mod incidence;
pub mod parabolic;
pub mod rational;
pub mod checks;
pub mod diagram;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/domains.md")]
    mod domains {}
    #[doc = include_str!("../../../book/src/boundary.md")]
    mod boundary {}
    #[doc = include_str!("../../../book/src/incidence.md")]
    mod incidence {}
    #[doc = include_str!("../../../book/src/rational.md")]
    mod rational {}
}
