//! The `gl_n k` action on `C(gl_n A)`, weights and isotypic components,
//! partitions, tableaux, Specht modules and symmetric-group averaging.

mod glaction;
mod partitions;
mod sigma;
mod tableaux;

pub use glaction::{CeModule, Isotype, IsotypeRow, RepError};
pub use partitions::{labels_up_to, partitions, Partition, ParsePartitionError, WeightLabel};
pub use sigma::{all_permutations, averaging_projector, sigma_action_matrix, sigma_invariants, sigma_space, SigmaLabel};
pub use tableaux::{hook_length_count, standard_tableaux, SpechtModule, SpechtSizeError, Tableau, MAX_SPECHT_SIZE};
