//! Simple-root constacyclic codes over finite fields.
//!
//! The crate builds the code `sum_{t in T} R e_t` inside
//! `R = F_q[x]/(x^n - lambda)` from a set of q-cyclotomic cosets, enumerates
//! its weight distribution, counts orbits of several monomial automorphism
//! groups by brute force, and evaluates closed-form orbit counts so they can be
//! checked against the brute-force numbers.

pub mod bounds;
pub mod catalog;
pub mod code;
pub mod error;
pub mod gf;
pub mod group;
pub mod modring;
pub mod report;

pub use code::{build_code, Code, Codeword, ConstaRing, LambdaSpec, WeightDist};
pub use error::{Error, Result};
pub use gf::{build_field, FieldCtx, FieldElem, PrimePower, RootSystem};
pub use group::{GroupKind, OrbitReport};
