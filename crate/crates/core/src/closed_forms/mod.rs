//! Exact values and canonical witnesses for paths, cycles and powers of paths.
//!
//! Cycle formulas refuse parameters outside the range where they are known
//! to hold (`KdError::OutsideProvenRange`); callers fall back to the solvers.

mod cycles;
mod maxeven;
mod paths;
mod powers;

pub use cycles::{alpha_cycle, canonical_cycle_coloring, chi_cycle, omega_cycle};
pub use maxeven::{
    is_maximally_even, j_representation, spectrum, spectrum_report, SpectrumEntry, SpectrumReport,
};
pub use paths::{
    alpha_path, canonical_independent_set_path, canonical_path_coloring, chi_path,
    chi_path_infinite, omega_path,
};
pub use powers::{alpha_path_power, chi_path_power, reduction_parameters};
