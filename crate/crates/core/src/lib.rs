//! Computable linearized q-polynomials over finite fields.
//!
//! * [`ff`]: finite fields, compatible subfield embeddings, univariate
//!   polynomial factorization.
//! * [`linpoly`]: q-polynomials, q-associates, projective polynomials and
//!   root spaces.
//! * [`moore`]: Moore matrices and determinant identities for root bases.
//! * [`groups`]: matrix groups over GF(q), Singer cycles, semilinear groups,
//!   orbits and transitive-subgroup classification.
//! * [`galois`]: Galois groups of q-polynomials over finite fields, and
//!   one-sided elimination of candidate groups over GF(q)(t) by
//!   specialization.

pub mod error;
pub mod ff;
pub mod galois;
pub mod groups;
pub mod linpoly;
pub mod moore;
pub mod report;
pub mod suites;
pub mod syntax;

pub use error::{Error, Result};
pub use ff::{field_create, field_of_order, FFElement, Field, FieldDesc, UniPoly};
pub use linpoly::{LinearizedPoly, ProjectivePoly, RootSpace};
