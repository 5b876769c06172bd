//! Independent oracles, property checkers, and the property suite.

mod checks;
pub mod corpus;
pub mod oracle;
mod suite;

pub use checks::{
    brute_mesh, check_carrier_uniqueness, check_chain, check_contraction, check_contraction_pair,
    check_oracle_equivalence, check_star_lemma, check_star_lemma_with, check_star_membership, check_transitivity,
    check_witness_volumes, probe_points, realization_equal, sampled_probe_points, Verdict, STAR_CONVERSE_MAX_DIM,
};
pub use corpus::{Corpus, Fixture};
pub use suite::{broken_fixtures, fault_cases, run_property_suite, FaultCase, Status, SuiteEntry, SuiteReport};
