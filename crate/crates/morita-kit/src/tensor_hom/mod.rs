//! Tensor products, Hom-modules, and the canonical maps built from them.

pub mod canonical;
pub mod hom;
pub mod tensor;

pub use canonical::*;
pub use hom::{hom_module, HomModule};
pub use tensor::{tensor_over, TensorProduct};
