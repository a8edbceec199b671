//! Exact arithmetic for finitely generated finite abelian groups: canonical
//! forms, homomorphism algebra, kernels/images/cokernels and subgroup
//! enumeration. Everything downstream reduces to this module.

pub mod group;
pub mod hom;
pub mod snf;
pub mod subgroup;

pub use group::{gcd, lcm, Elem, FinAbGroup};
pub use hom::{AbHom, SubQuotients};
pub use snf::{det, kernel_basis, smith, smith_normal_form, solve_congruence, IntMat, Snf};
pub use subgroup::{canonicalize, enumerate_subgroups, subgroup_generated, SubgroupEmbedding};
