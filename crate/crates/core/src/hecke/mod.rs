//! The Iwahori–Hecke algebra, its parabolic hom spaces and their
//! dominance-filtered quotients.

mod algebra;
mod hom;

pub use algebra::{Elem, Hecke, HeckeElement};
pub use hom::{HomBasis, HomElem, HomElement, HomSpaces};
mod specht;

pub(crate) use specht::check_field;
pub use specht::{layer_generators, LayerIndex, SpechtQuotient};
pub mod classify;
pub mod lemmas;
