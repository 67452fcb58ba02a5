//! 3-SAT in Tovey form (each variable once positive, twice negative) and
//! its reduction to sums of short mutant flowers.

pub mod cnf;
pub mod reduction;
pub mod tovey;

pub use cnf::{parse_dimacs, CnfFormula};
pub use reduction::{
    trace, xor_cover, AssignmentWitness, EquivalenceReport, FullGameBound, ReductionOutput, VariableGadget, VerifyMode,
};
pub use tovey::{tovey_instances, validate_tovey, Occurrences, ToveyReport};
