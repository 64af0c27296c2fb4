use serde::{Deserialize, Serialize};

/// Size caps for the exponential searches. Exceeding a cap is an error,
/// never a silent truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Caps {
    /// Object cap for the conical and sifted searches.
    pub search_objects: usize,
    /// Morphism cap for the conical and sifted searches.
    pub search_morphisms: usize,
    /// Largest group accepted by the decision procedures.
    pub group_order: usize,
    /// Largest group on which full subgroup enumeration runs.
    pub product_order: usize,
    /// Largest morphism count of a product category.
    pub product_morphisms: usize,
    /// Largest number of elements any single limit may have.
    pub limit_elements: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            search_objects: 10,
            search_morphisms: 64,
            group_order: 60,
            product_order: 360,
            product_morphisms: 200_000,
            limit_elements: 1_000_000,
        }
    }
}

/// Budget for `bounded_search`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct SearchBudget {
    /// Largest total carrier size of one sampled bifunctor.
    pub max_carrier: usize,
    /// Number of bifunctors sampled.
    pub samples: usize,
    pub seed: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self {
            max_carrier: 64,
            samples: 1000,
            seed: 0x5eed_1e55_c0ff_ee00,
        }
    }
}
