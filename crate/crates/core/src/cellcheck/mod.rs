//! Axiom checks for ideal filters, Morita contexts and standard bases over
//! algebras given by structure constants.

mod algebra;
mod filter;
mod instances;

pub use algebra::FiniteAlgebra;
pub use filter::{AxiomReport, FilteredAlgebraInstance, MoritaData, Pairing, Status, Witness};
pub use instances::{
    discard_order, drop_ideal_generator, flip_rho, hc_vector, hecke_algebra, hecke_clifford_algebra, hecke_clifford_instance,
    hecke_instance, hecke_vector, inflate_ideal, truncate_module, LabelOrder,
};
