//! Ideal and graded-module calculus: ideal operations, Hilbert data, `Ext`, sheaf
//! cohomology, extensions and Chern classes.

pub mod chern;
pub mod ext;
pub mod extension;
pub mod graded;
pub mod hilbert;
pub mod ideal;

pub use chern::{chern_from_hilbert, chern_of_ideal_sheaf, chern_of_kernel, cm_part, curve_invariants, ChernRecord, CurveInvariants};
pub use ext::{graded_ext, graded_hom, sheaf_cohomology_dim, CohomologyTable};
pub use extension::{coboundary_rank, cocycle_basis, extension_pushout, is_cocycle, SyzygyData};
pub use graded::{GradedModule, ModuleJson, ModuleKind, ModuleOp};
pub use hilbert::{HilbertData, KPolynomial};
pub use ideal::{Ideal, IdealOp};

#[cfg(test)]
mod tests;
