//! Polynomial multivector fields on flat space and the first-order operators
//! built from a product table: Dirac operator, `d`, `δ`, Hodge stars.

mod dirac;
mod hodge;
mod maxwell;
mod poly;
mod system;

pub use dirac::{
    dh_residual, dirac, expanded_vee_dirac, expanded_vee_interaction, expanded_vee_mass, wave_check,
    wave_operator, DhResidual, DiracContext, DiracForm, Side,
};
pub use hodge::{codifferential, exterior_d, hodge_star, hodge_star_field, parity, parity_field};
pub use maxwell::{em_split, maxwell_residual, selfdual_check, split_condition, two_form_fixed_space};
pub use poly::{Monomial, PolyField};
pub use system::{component_system, find_recoding, render_terms, ComponentSystem, Marker, Recoding, Term};
