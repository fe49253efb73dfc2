//! Sumsets of finite integer sets and of finite subsets of finitely generated
//! abelian groups: exact kernels, closed-form bounds, explicit witnesses and
//! exhaustive enumeration of achievable sizes.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod error;
pub mod explorer;
pub mod group;
pub mod kernel;
pub mod set;
pub mod sumset;
pub mod witness;

pub use bounds::{bounds_report, interval_2fold, range_h3_closed_form, BoundsReport};
pub use error::{Error, Result};
pub use explorer::{
    empirical_n, enumerate_joint, enumerate_range, enumerate_trajectories, filter_trajectories,
    trajectory, verify_missing, Budget, BudgetPolicy, Domain, RangeQuery, SizeRange,
};
pub use group::{embed_integers, GroupElem, GroupSet, GroupSpec};
pub use kernel::{Kernel, KernelConfig};
pub use set::{is_arithmetic_progression, normalize, AnySet, IntSet};
pub use sumset::{
    restricted_sumset, restricted_sumset_size, sumset, sumset_size, sumset_sizes,
};
pub use witness::{
    family_witness, group_counterexample, named_family, witness_extremes, witness_h3,
    witness_restricted_2, witness_sumset_2, Extreme, Family, Witness, WitnessKind,
};
