//! Product tables and the signature-changing morphs between them.

mod plan;
mod table;
mod tilt;
mod vee;

pub use plan::{apply_plan, plan_signature_change, MorphPlan, MorphStep};
pub use table::{
    base_table, table_contract, table_inner, table_wedge, table_product, verify_isomorphism, Entry, IsomorphismReport,
    Mismatch, ProductTable,
};
pub use tilt::tilt_table;
pub use vee::{vee_blades, vee_table};
