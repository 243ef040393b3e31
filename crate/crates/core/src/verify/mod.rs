//! Desk-scale verification sweeps with machine-readable reports.

mod checks;
pub mod enumerate;
mod report;

pub use checks::{
    check_complex_shift_identity, check_hull_oracles_exhaustive, check_hull_oracles_random, check_section5_chain,
    check_symmetrization, check_theorem_1_1, check_theorem_3_1, check_zykov, check_zykov_shift_identity,
    random_colorable_complex, section5_instance, ChainOutcome, SweepOptions,
};
pub use enumerate::{
    count_antichains, enumerate_complexes, enumerate_labeled_graphs, for_each_complex, for_each_complex_sharded,
};
pub use report::{InstanceSpace, RunConfig, VerificationReport, MAX_RECORDED_FAILURES};
