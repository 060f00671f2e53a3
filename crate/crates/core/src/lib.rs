//! Exact operator algebra for a charged particle in a plane with a uniform
//! perpendicular magnetic field (symmetric gauge).
//!
//! The crate is layered bottom-up:
//!
//! - [`radical`]: exact scalars `Σ (u + iv)√r` over squarefree radicands;
//! - [`weyl`]: normal-ordered polynomials in the plus/minus oscillators;
//! - [`catalog`]: every named operator (`H23`, `J1`, `Jp`, `Cbar`, …);
//! - [`fock`]: exact action on two-mode Fock kets and truncated matrices;
//! - [`spectrum`]: Landau levels, Casimir eigenvalues, ladder amplitudes and
//!   the degeneracy census.

pub mod catalog;
pub mod error;
pub mod fock;
pub mod params;
pub mod radical;
pub mod spectrum;
pub mod weyl;

pub use catalog::{catalog, catalog_by_name, Catalog, OperatorName, StandardCatalog};
pub use error::{Error, Result};
pub use fock::{apply, matrix, matrix_exact, qn_map, FockKet, KetVector, QuantumNumbers, SparseMatrix};
pub use params::{FieldSign, ParameterSet};
pub use radical::{Rational, RadicalScalar};
pub use spectrum::{
    casimir_eigenvalue, degeneracy_census, ladder_amplitudes, spectrum, CensusReport, LadderAmplitudes,
    SpectrumLevel, SpectrumReport,
};
pub use weyl::{Ladder, NormalMonomial, OperatorPoly};
