//! Exact computation of wreath Macdonald polynomials, their norms and Pieri
//! coefficients, by a direct linear-algebra route in ℓ-colored symmetric
//! functions and by matrix elements of shuffle-algebra elements in the
//! Fock representations of the quantum toroidal algebra.

pub mod algebra;
pub mod partition;
pub mod macdonald;
pub mod symfun;
pub mod toroidal;
