//! Partitions, the posets `Y^r`, up/down operators and words in them.

mod partition;
mod rank;
mod words;

pub use partition::{partition_counts, partitions_of, Partition};
pub use rank::{
    delta_p, down_matrix, m0, path_count, rank_basis, rank_size, up_matrix, MultiPartition,
    RankBasis,
};
pub use words::{
    alpha_values, poly_operator_matrix, symbolic_normal_form, word_operator_matrix,
    word_to_normal_form, Letter, UDWord, WordPolynomial,
};
