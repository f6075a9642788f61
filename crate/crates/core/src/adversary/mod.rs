//! Executable lower-bound strategies and the confusion-pair finder.

mod certificate;
mod confusion;
mod construction;
mod state;

pub use certificate::{k2_first_query_certificate, K2Certificate};
pub use confusion::{confusion_pair, CONFUSION_MAX_N};
pub use construction::missing_set_construction;
pub use state::{
    partition_sizes, theorem5_adversary, AdversaryState, Strategy, K2_COUNTING_MAX_N, THEOREM5_MAX_N,
};
