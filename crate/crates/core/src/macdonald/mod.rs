//! Wreath Macdonald polynomials computed from their triangularity
//! characterization by exact linear algebra, with the derived ordinary,
//! dual and starred variants, norms and Pieri expansions.

mod classical;
mod family;
mod pieri;

pub use classical::{
    classical_pieri, conjectured_norm, g_pieri, has_horizontal_adjacency, horizontal_strips, q_pochhammer, vertical_strips,
    GpRange, PieriKind,
};
pub use family::{
    compute_h, derive_variants, family_cached, literal_star, norm_oracle, star_image, s_plethysm_matrix, MacdonaldFamily, Variant, Variants,
};
pub use pieri::{pieri_multiplier, wreath_pieri_oracle, DualKind};

use crate::algebra::{AlgebraError, LinAlgError};
use crate::partition::PartitionError;
use crate::symfun::SymFuncError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum MacdonaldError {
    #[error("no polynomial satisfies the conditions for {0}")]
    NoSolution(String),
    #[error("the conditions for {lambda} leave a {dim}-dimensional solution space")]
    NonUniqueSolution { lambda: String, dim: usize },
    #[error("normalizing coefficient of {variant} for {lambda} vanishes")]
    ZeroLeadingCoefficient { lambda: String, variant: String },
    #[error("{0} is missing from the computed family")]
    BasisIncomplete(String),
    #[error("{0}")]
    Domain(String),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    SymFunc(#[from] SymFuncError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}
