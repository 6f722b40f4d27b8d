//! The shuffle-algebra route: kernels E_{p,n} and H_{p,n}, their matrix
//! elements in the two Fock representations, the N±/M± normalization
//! recursion and the norms and Pieri coefficients it yields.

mod fock;
pub mod golden;
mod kernel;
mod norms;
mod shuffle;

pub use fock::{
    adjacency_allowed, fock_single_current, outer_factor, sym_matrix_element, sym_matrix_element_with, CurrentValue, Deformation,
    MatrixElement, Mode, Rep, ShuffleInput, UpsilonMode, Z,
};
pub use kernel::{kernel_e, kernel_h, kernel_monomial, omega_factors, Factor, KernelKind, Layout, ShuffleKernel, Slot, TemplateTerm};
pub use norms::{
    normalization, norm_toroidal, pieri_candidates, pieri_constants, scalar_record, transposed_plus_ratio, wreath_pieri_toroidal, NormRoute, NormScalars,
    PieriMultiplier, Route,
};
pub use shuffle::{check_element, check_membership, star_product, symmetrize_rat, Membership, ShuffleElement, Violation, SYM_LIMIT};

use crate::algebra::AlgebraError;
use crate::partition::PartitionError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ToroidalError {
    #[error("the shuffle route needs ℓ ≥ 3, got ℓ = {0}")]
    UnsupportedRank(usize),
    #[error("{0}")]
    Domain(String),
    #[error("not expressible in q, t: {0}")]
    NotExpressible(String),
    #[error("symbolic expansion too large: {0}")]
    TooLarge(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}
