//! Module-category predicates, bounded module enumeration, and the
//! bounded-exhaustive verification suites for the equivalence statements
//! attached to a Morita datum.

pub mod enumerate;
pub mod predicates;
pub mod theorems;
pub mod witness;

pub use enumerate::{
    dedupe_modules, enumerate_modules, find_module_isomorphism, modules_isomorphic,
    tensor_faithful,
};
pub use predicates::{
    flip_bimodule, flip_datum, flip_module, flip_semi_context, in_alpha_iso_class, in_class,
    is_adstatic, is_cogenerated_sharp, is_colocalized, is_copresented_bounded, is_copure_ideal,
    is_divisible, is_generated, is_localized, is_presented_bounded, is_pure_ideal,
    is_self_small, is_self_tilting_bounded, is_static, is_strongly_faithful,
    is_weakly_sum_quasi_projective_bounded, membership, submodule_on, ClassName, MapCheck,
    Predicate,
};
pub use theorems::{
    hom_square_commutes, right_membership_via_flip, star_module_bounded, tensor_square_commutes,
    theorem_regression, wide_morita_maps, RegressionReport, StarReport, Status, TheoremOutcome,
    WideReport,
};
pub use witness::{equivalence_witness, hom_post, WitnessMode, WitnessReport};
