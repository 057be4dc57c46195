//! Kernel partitions of path endomorphisms and the epispectrum.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::closedform::{lk_via_hom, HomBackend};
use crate::count::Count;
use crate::epispectrum::Epispectrum;
use crate::error::{Error, Result};
use crate::homomorphism::PathHom;
use crate::oracle::enumerate_homs;
use crate::partition::SetPartition;

/// Largest `n` for which `End(P_n)` is enumerated.
pub const DEFAULT_ENDO_LIMIT: u32 = 14;

/// Partition of `[1..n]` into the fibres of `f`.
pub fn kernel_partition(f: &PathHom) -> SetPartition {
    SetPartition::from_labels(f.images())
}

/// `x -> f(x) - min f + 1`, an epimorphism onto a path with the same kernel.
pub fn shift_normalize(f: &PathHom) -> PathHom {
    let low = f.min_image();
    let images = f.images().iter().map(|v| v - low + 1).collect();
    PathHom::from_valid(images, f.max_image() - low + 1)
}

/// Distinct kernel partitions over all of `End(P_n)`.
pub fn induced_partitions(n: u32, limit: u32) -> Result<HashSet<SetPartition>> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    if n > limit {
        return Err(Error::SizeLimit {
            what: "n",
            value: n as u64,
            limit: limit as u64,
        });
    }
    Ok(enumerate_homs(n, n, None)
        .map(|f| kernel_partition(&f))
        .collect())
}

/// Epispectrum of `P_n` by enumerating every endomorphism.
pub fn epispectrum_brute(n: u32) -> Result<Epispectrum> {
    epispectrum_brute_with_limit(n, DEFAULT_ENDO_LIMIT)
}

pub fn epispectrum_brute_with_limit(n: u32, limit: u32) -> Result<Epispectrum> {
    if n < 2 {
        return Err(Error::Domain(format!(
            "the epispectrum needs n >= 2 (got {n})"
        )));
    }
    let partitions = induced_partitions(n, limit)?;
    let n = n as usize;
    let mut buckets = vec![0u64; n - 1];
    for p in &partitions {
        // l_k counts partitions with n - k + 1 blocks; one block never occurs for n >= 2.
        let k = n + 1 - p.block_count();
        buckets[k - 1] += 1;
    }
    Epispectrum::new(n, buckets.into_iter().map(Count::from).collect())
}

/// Epispectrum of `P_n` from homomorphism counts; no enumeration.
pub fn epispectrum_formula(n: u32) -> Result<Epispectrum> {
    epispectrum_formula_with(n, HomBackend::ClosedForm)
}

pub fn epispectrum_formula_with(n: u32, backend: HomBackend) -> Result<Epispectrum> {
    if n < 2 {
        return Err(Error::Domain(format!(
            "the epispectrum needs n >= 2 (got {n})"
        )));
    }
    let values = (1..n)
        .map(|k| lk_via_hom(n, k, backend))
        .collect::<Result<Vec<_>>>()?;
    Epispectrum::new(n as usize, values)
}

/// Why a partition is not the kernel of an epimorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArrangementFailure {
    /// `element` and `element + 1` share a block.
    AdjacentInBlock { block: usize, element: u32 },
    /// Neither end of the partial arrangement holds `min(block) - 1`.
    Unattachable { block: usize },
    /// The forced arrangement does not map consecutive vertices to adjacent blocks.
    NotHomomorphism { detail: String },
}

impl fmt::Display for ArrangementFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArrangementFailure::AdjacentInBlock { block, element } => write!(
                f,
                "block {} contains the adjacent vertices {element} and {}",
                block + 1,
                element + 1
            ),
            ArrangementFailure::Unattachable { block } => write!(
                f,
                "block {} cannot be attached at either end of the arrangement",
                block + 1
            ),
            ArrangementFailure::NotHomomorphism { detail } => {
                write!(f, "arrangement is not a homomorphism: {detail}")
            }
        }
    }
}

/// Block orderings that realise a partition as the kernel of an epimorphism
/// onto `P_r`, where `r` is the number of blocks.
///
/// Either empty (with a failure reason) or exactly two orderings that are
/// reverses of each other. Orderings hold block indices in canonical order;
/// the witness maps each vertex to the 1-based position of its block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrangementResult {
    pub orderings: Vec<Vec<usize>>,
    pub witnesses: Vec<PathHom>,
    pub failure: Option<ArrangementFailure>,
}

impl ArrangementResult {
    pub fn is_valid(&self) -> bool {
        self.failure.is_none() && self.orderings.len() == 2
    }

    fn rejected(failure: ArrangementFailure) -> Self {
        ArrangementResult {
            orderings: Vec::new(),
            witnesses: Vec::new(),
            failure: Some(failure),
        }
    }
}

/// Renders an ordering as blocks, e.g. `{7}{6,8}{1,3,5,9}`.
pub fn format_ordering(p: &SetPartition, ordering: &[usize]) -> String {
    SetPartition::format_blocks(ordering.iter().map(|&b| &p.blocks()[b]))
}

/// Reconstructs the two arrangements of the blocks of `p`.
///
/// With blocks `A_1, ..., A_r` sorted by minima, the seeds are `A_1 A_2` and
/// `A_2 A_1`; each later block `A_i` must go next to whichever end block holds
/// `min(A_i) - 1`. The result is then validated as a homomorphism.
pub fn arrangements(p: &SetPartition) -> ArrangementResult {
    if let Some((block, element)) = p.adjacent_pair() {
        return ArrangementResult::rejected(ArrangementFailure::AdjacentInBlock { block, element });
    }
    let r = p.block_count();
    let labels = p.block_index_of_each();
    let mut orderings = Vec::with_capacity(2);
    if r == 1 {
        orderings.push(vec![0]);
        orderings.push(vec![0]);
    } else {
        for seed in [[0usize, 1], [1, 0]] {
            let mut arrangement: VecDeque<usize> = seed.into_iter().collect();
            for (i, block) in p.blocks().iter().enumerate().skip(2) {
                let owner = labels[block[0] as usize - 2];
                if arrangement.front() == Some(&owner) {
                    arrangement.push_front(i);
                } else if arrangement.back() == Some(&owner) {
                    arrangement.push_back(i);
                } else {
                    return ArrangementResult::rejected(ArrangementFailure::Unattachable {
                        block: i,
                    });
                }
            }
            orderings.push(arrangement.into_iter().collect());
        }
    }

    let mut witnesses = Vec::with_capacity(2);
    for ordering in &orderings {
        let mut position = vec![0u32; r];
        for (pos, &b) in ordering.iter().enumerate() {
            position[b] = pos as u32 + 1;
        }
        let images = labels.iter().map(|&b| position[b]).collect();
        match PathHom::new(images, r as u32) {
            Ok(f) => witnesses.push(f),
            Err(e) => {
                return ArrangementResult::rejected(ArrangementFailure::NotHomomorphism {
                    detail: e.to_string(),
                })
            }
        }
    }
    ArrangementResult {
        orderings,
        witnesses,
        failure: None,
    }
}
