//! Randomized sampling oracle.

mod delta;
mod oracle;

pub use delta::{first_common, DeltaIter, DeltaLists};
pub use oracle::{
    build_sample_oracle, build_sample_oracle_with, choose_alpha, sample_hitting_set,
    sample_intensity, Level, SampleOptions, SampleOracle, SampleStats, Witness,
};
