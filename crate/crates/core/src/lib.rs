//! Exact computations of π_*-kernels and related invariants of compact Lie groups.
//!
//! * [`catalog`]: rational types, ranks and dimensions.
//! * [`abelian`]: finitely generated abelian groups and their localizations.
//! * [`psi`]: the self-map groups `Ψ(m, n)`.
//! * [`serre`]: odd-primary homotopy of odd spheres in the Serre range.
//! * [`localization`]: (quasi) `p`-regularity and `p`-local splittings.
//! * [`invariants`]: `Z^n(G)`, the finiteness of `Z^∞(G)`, `sz`/`lz`, `E_#^n(G)`.
//! * [`scan`]: batch evaluation, parallel with the `parallel` feature.

pub mod abelian;
pub mod arith;
pub mod catalog;
pub mod error;
pub mod invariants;
pub mod localization;
pub mod psi;
pub mod scan;
pub mod serre;

pub use abelian::{Coefficients, FgAbelianGroup};
pub use catalog::{Family, LieGroupId, RationalType};
pub use error::{Error, Result};
pub use invariants::{
    Answer, Context, Coverage, Degree, GroupAnswer, InvariantReport, PrimeSelector, ZnQuery,
};
pub use localization::{PLocalDecomposition, PLocalFactor};
pub use psi::{PsiElement, PsiParams};
