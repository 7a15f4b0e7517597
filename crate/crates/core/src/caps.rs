use serde::{Deserialize, Serialize};

/// Resource limits. Operations that would exceed one fail with a cap error
/// instead of degrading.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Largest group order for which all subgroups are enumerated.
    pub max_order: u64,
    /// Largest group order for which elements are enumerated.
    pub max_elements: u64,
    /// Largest degree of a coset-action quotient.
    pub max_degree: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_order: 200,
            max_elements: 1_000_000,
            max_degree: 5000,
        }
    }
}
