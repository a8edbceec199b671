//! Finite rings, one-sided modules and bimodules as structure-constant
//! tables, with full axiom validation; matrix rings, idempotent corners,
//! endomorphism rings, opposite rings, and a Baer-criterion
//! self-injectivity test.

pub mod baer;
pub mod corner;
pub mod endo;
pub mod module;
pub mod morphism;
pub mod ring;

pub use baer::{is_left_ideal, is_right_ideal, is_self_injective, is_two_sided_ideal, SelfInjectivity};
pub use corner::{corner_context, identity_context};
pub use endo::{endo_ring, lambda_morphism, rho_morphism, EndRing};
pub use module::{Bimodule, ModuleStructure, Side};
pub use morphism::RngMorphism;
pub use ring::FinRing;
