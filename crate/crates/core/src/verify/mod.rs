pub mod enumerate;
pub mod lr;
pub mod table;
pub mod suites;

pub use enumerate::{enumerate_tfpl, enumerate_with_boundary, for_each_tfpl, SideConstraint};
pub use lr::{lr_coefficient, lr_coefficient_partitions};
pub use table::{count_by_boundary, CountTable, TableEntry};

pub use suites::{
    run_suite, verify_excess_zero, verify_inequality_by_gyration, verify_linear_relation,
    InequalityWitness, Limits, LinearSums, Suite, SuiteReport, WitnessStep,
};
