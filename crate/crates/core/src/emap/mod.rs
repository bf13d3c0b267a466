//! Decision procedures for E-maps and co-E-maps at the level of models.

mod correction;
mod criteria;
mod family;
mod square;

pub use correction::{
    correction_class_dimension, extension_scaling_constraint, universal_perturbation, CorrectionReport,
    ScalingConstraint,
};
pub use criteria::{
    co_e_subset_criterion, e_subset_criterion, witness_strings, CriterionReport, CriterionVerdict, SubsetWitness,
};
pub use family::{
    default_samples, identity_rule, verify_e_chain, verify_family, ChainLink, ChainReport, FamilyReport, FamilyRule,
    RuleTerm,
};
pub use square::{
    solve_post_square, solve_pre_square, solve_square, Direction, SquareOutcome, SquareProblem, SquareSolution,
};
