//! Extremal tree families, the four count-monotone moves between trees, and
//! exhaustive verifiers for the orderings they imply.

mod families;
mod transform;
mod verify;

pub use families::{bnd_count, make_family, tn4_count, tnd_attached_at, FamilySpec};
pub use transform::{
    attach_legs, phi1, phi2, phi3, phi3_gain, phi3_target, phi4, phi4_loss, reduce_to_path, reduce_to_star, Relation,
    Transform, TransformReport,
};
pub use verify::{
    verify_closed_forms, verify_confluence, verify_cor_3_9, verify_oracle, verify_theorem_1_1, verify_theorem_3_6,
    verify_theorem_3_7, Check, VerifyReport, Witness, CLOSED_FORM_CAP, CONFLUENCE_ORDERS, ORACLE_CAP,
    PAIR_ORACLE_CAP,
};
