//! Instance-level checks of the structural statements behind the EKR results
//! for unions of path and cycle powers: the clique-number conditions, the
//! complete-component decomposition, compressions, the Talbot split and the
//! full theorem audit.

mod audit;
mod bh;
mod condition;
mod cycle;
mod junit;
mod lemma;
pub mod random;
mod report;

pub use audit::{theorem_audit, theorem_audit_graph};
pub use bh::{split_compression, verify_bh_lemma, CompressionSplit};
pub use condition::{check_condition, ConditionCheck, ConditionClass, Threshold};
pub use cycle::{
    build_cycle_decomposition, derived_compositions, star_split_counts, verify_claim_final,
    CycleDecomposition,
};
pub use junit::to_junit;
pub use lemma::{build_lemma_decomposition, verify_claim1, verify_lemma_main_chain, LemmaDecomposition};
pub use report::{AuditReport, Check, Status, Summary};
