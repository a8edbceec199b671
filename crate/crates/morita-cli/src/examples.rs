//! Built-in example workspaces.

use morita_kit::algebra::{corner_context, identity_context, FinRing};

use crate::workspace::{datum_doc, WorkspaceDoc};

/// The 2×2 matrix-ring corner at the upper-left idempotent: the standard
/// injective-but-not-elementwise-surjective context.
pub fn corner_example() -> WorkspaceDoc {
    let t = FinRing::matrix_ring(2, 2).expect("matrix ring");
    let datum = corner_context(&t, &vec![1, 0, 0, 0]).expect("corner datum");
    datum_doc("corner_m2z2", &datum)
}

/// The identity context of the cyclic ring of order m.
pub fn identity_example(m: i64) -> Result<WorkspaceDoc, morita_kit::Error> {
    let t = FinRing::cyclic(m)?;
    let datum = identity_context(&t)?;
    Ok(datum_doc("identity", &datum))
}

/// The identity context of an n×n matrix ring over Z_m.
pub fn matrix_example(n: usize, m: i64) -> Result<WorkspaceDoc, morita_kit::Error> {
    let t = FinRing::matrix_ring(n, m)?;
    let datum = identity_context(&t)?;
    Ok(datum_doc("matrix_identity", &datum))
}
