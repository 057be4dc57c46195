//! Exact counting of graph homomorphisms between paths.
//!
//! `P_n` is the path on vertices `1..=n`. The crate counts homomorphisms
//! `P_n -> P_k` (in total, by start vertex, surjective ones) and the
//! epispectrum of `P_n`, each by closed-form binomial sums and by independent
//! oracles: a transfer-matrix walk count and exhaustive enumeration.

pub mod cli;
pub mod closedform;
pub mod congruence;
pub mod count;
pub mod epispectrum;
pub mod error;
pub mod homomorphism;
pub mod lattice;
pub mod oracle;
pub mod partition;
pub mod word;

pub use num_bigint::{BigInt, BigUint};

pub use closedform::{
    check_binomial_identities, end_count_closed, epi_count_ie, hom1_count_closed, hom_count_closed,
    hom_j_count_aw, lk_closed, lk_telescope, lk_via_hom, HomBackend, LkTermBreakdown,
};
pub use congruence::{
    arrangements, epispectrum_brute, epispectrum_formula, kernel_partition, ArrangementResult,
};
pub use count::{binom, Count};
pub use epispectrum::Epispectrum;
pub use error::{Error, Result};
pub use homomorphism::PathHom;
pub use lattice::{
    decode_word, encode_hom, hom1_via_lattice, lattice_count_banded, lattice_count_banded_brute,
    lattice_count_free, BandSpec,
};
pub use oracle::{
    enumerate_homs, epi_count_brute, hom_count_dp, hom_start_counts_dp, StartCountVector,
};
pub use partition::SetPartition;
pub use word::{LatticeWord, Step};
