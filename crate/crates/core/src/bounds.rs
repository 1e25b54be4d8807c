use serde::{Deserialize, Serialize};

/// Size limits for the brute-force algorithms, plus the seed for the
/// randomized isomorphism fallback.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    /// Maximum number of enumerated elements of any group.
    pub element_bound: usize,
    /// Maximum group order for the exhaustive Hall subgroup search.
    pub hall_bound: usize,
    /// Maximum number of module vectors scanned.
    pub vector_scan_bound: usize,
    /// Maximum `d1 * d2` for intertwiner linear systems.
    pub linear_solve_bound: usize,
    /// Group orders up to this also get the index-based rationality cross-check.
    pub rationality_index_bound: usize,
    /// Maximum group order for the normal abelian subgroup scan.
    pub normal_scan_bound: usize,
    /// Random trials before `are_isomorphic` gives up on a large hom space.
    pub trial_budget: usize,
    pub seed: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            element_bound: 500_000,
            hall_bound: 5_000,
            vector_scan_bound: 1_000_000,
            linear_solve_bound: 4_096,
            rationality_index_bound: 20_000,
            normal_scan_bound: 2_000,
            trial_budget: 256,
            seed: 0x5eed,
        }
    }
}
