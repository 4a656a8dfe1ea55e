//! Exact computations in the cohomology of symplectic and odd orthogonal
//! isotropic Grassmannians and their stable limits, together with the maps
//! from polynomial representation rings of `Sp(2k)` and `SO(2k+1)` into them.
//!
//! Module map:
//! - [`polycore`]: sparse polynomials and Laurent polynomials.
//! - [`partitions`]: k-strict partitions and Schubert-basis counts.
//! - [`intlinalg`]: exact integer and field linear algebra (ranks, Smith form, kernels).
//! - [`presentations`]: relation sets, graded quotients, normal forms, torsion.
//! - [`springer`]: the Cayley-transform Springer map and the polynomial-character test.
//! - [`xi`]: the maps from representation rings and their verification routines.

pub mod intlinalg;
pub mod partitions;
pub mod polycore;
pub mod presentations;
pub mod springer;
pub mod xi;

use thiserror::Error;

/// Umbrella error for callers that mix modules (the CLI, mostly).
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Poly(#[from] polycore::PolyError),
    #[error(transparent)]
    Partition(#[from] partitions::PartitionError),
    #[error(transparent)]
    Presentation(#[from] presentations::PresentationError),
    #[error(transparent)]
    Springer(#[from] springer::SpringerError),
    #[error(transparent)]
    Xi(#[from] xi::XiError),
}
