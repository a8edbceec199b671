//! Global capacity limits.
//!
//! Every combinatorial construction checks against these limits so that a
//! malformed workspace fails with an explicit capacity error instead of
//! grinding. The limits are set once (by the CLI, from flags or the
//! `MORITA_KIT_CAP` environment variable) before any computation starts;
//! library code only reads them.

use std::sync::OnceLock;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest admissible order of any finite abelian group.
    pub max_group_order: u128,
    /// Largest admissible generator-pair count in tensor/hom systems.
    pub max_pair_count: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self { max_group_order: 256, max_pair_count: 1024 }
    }
}

static CAPS: OnceLock<Caps> = OnceLock::new();

/// Current capacity limits (defaults unless [`set_caps`] ran first).
pub fn caps() -> Caps {
    *CAPS.get_or_init(Caps::default)
}

/// Install capacity limits for the process. Returns `false` if limits were
/// already fixed (first writer wins; later calls are ignored).
pub fn set_caps(caps: Caps) -> bool {
    CAPS.set(caps).is_ok()
}
