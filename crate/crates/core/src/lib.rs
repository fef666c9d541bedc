//! Exact constructions of induced modules over truncated current Witt
//! algebras `W_ℓ = W ⊗ k[t]/(t^{ℓ+1})` in characteristic `p > 3`.

pub mod cache;
pub mod classify;
pub mod gf;
pub mod linalg;
pub mod modtools;
pub mod rep;
pub mod rng;
pub mod verma;
pub mod witt;

pub use gf::{Field, FieldElement, GfError};
pub use linalg::{DenseMatrix, SparseEchelon, SparseMatrix, Subspace};
pub use witt::{AlgebraShape, BasisIndex, LieElement, PChar, ScenarioTag, WittError};
pub use classify::{classify, ClassifyError, ClassifyOptions, Report};
pub use modtools::{IrreducibilityReport, ModError, Verdict};
pub use rep::Representation;
pub use verma::{InducedModule, ModuleVector, PbwMonomial, VermaError};
