//! # morita-kit
//!
//! An exact verification engine for Morita (semi-)contexts over finite
//! rings. Rings, modules and bimodules are structure-constant tables over
//! finite abelian groups; tensor products, Hom-modules and every canonical
//! connecting morphism are computed by integer linear algebra (Smith normal
//! form), so every verdict is exact.
//!
//! The layers, bottom up:
//!
//! - [`abelian`]: finite abelian groups, homomorphisms, Smith normal form,
//!   kernels/images/cokernels, subgroup enumeration.
//! - [`algebra`]: finite rings and (bi)modules with machine-checked axioms,
//!   matrix rings, idempotent corners, endomorphism rings, a Baer-criterion
//!   self-injectivity test.
//! - [`tensor_hom`]: tensor products over a noncommutative base, Hom-modules,
//!   and the canonical map constructors (alpha, bracket, unit/counit,
//!   localization maps, pairing adjuncts).
//! - [`pairing`]: dual pairings, their classification, local projectivity by
//!   the dual-basis criterion, and the alpha-condition as a tri-state
//!   verdict.
//! - [`morita`]: balanced maps, Morita semi-contexts/data/contexts, trace
//!   ideals, elementary rngs, and the diagram-level lemma checks.
//! - [`catlab`]: module-category predicates, bounded module enumeration, and
//!   the bounded-exhaustive theorem regression suites.
//!
//! ```
//! use morita_kit::algebra::{corner_context, FinRing};
//!
//! // The corner of the 2x2 matrix ring over the field with two elements at
//! // the upper-left idempotent.
//! let t = FinRing::matrix_ring(2, 2)?;
//! let datum = corner_context(&t, &vec![1, 0, 0, 0])?;
//! assert!(datum.is_context());
//!
//! // The tensor-level connecting map is bijective onto the whole ring,
//! // while the values on elementary pairs miss six elements.
//! let class = datum.m_t().classify(Some(16))?;
//! assert!(class.strict);
//! assert!(class.trace.is_whole());
//! assert_eq!(class.decomposable_values.len(), 10);
//! assert!(class.alpha_left.is_certified());
//! # Ok::<(), morita_kit::Error>(())
//! ```

// Structure-table code walks several parallel tables by a shared index;
// iterator zips would obscure which generator each factor refers to.
#![allow(clippy::needless_range_loop)]

pub mod abelian;
pub mod algebra;
pub mod caps;
pub mod catlab;
pub mod error;
pub mod morita;
pub mod pairing;
pub mod tensor_hom;

pub use caps::{caps, set_caps, Caps};
pub use error::{AxiomFailure, Error, Result, ValidationReport};
