//! The Hecke–Clifford superalgebra, its circled parabolic supermodules and
//! hom spaces, super Specht quotients and the ideal data deciding which
//! quotients carry simple modules.

mod algebra;
pub mod clifford;
mod gamma;
mod hom;
mod ideals;
mod module;
mod specht;

pub use algebra::{gamma_lemma_check, gamma_lemma_scalar, gamma_realization_holds, AntiHomomorphism, HCElem, HCElement, HeckeClifford};
pub use clifford::{clifford_product, CliffordWord};
pub use gamma::{GammaAlgebra, GammaElem};
pub use hom::{gamma_right_coords, SuperHomBasis, SuperHomElem, SuperHomElement, SuperHomSpaces};
pub use ideals::{
    count_nonzero_diagonal, count_super_simples, delta_factor_generators, delta_is_whole_integrally, delta_summands, is_e2_strict,
    is_super_restricted, k_ascent_certificates, k_descent_certificates, k_generators, k_is_unit, predicted_simple, theta_generators,
    theta_pairs, Certificate, IdealData, SuperSimpleCount, SuperSimpleRow, SuperTraceIdeal,
};
pub use module::{CircledCoords, CircledModule, Vector};
pub use specht::{for_each_layer_product, super_add_top_row_holds, super_relations, SuperRelation, SuperSpecht};
