//! Ground-truth counters: a transfer-matrix walk count and exhaustive enumeration.
//!
//! Nothing here uses a closed form; the closed forms are checked against these.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::count::Count;
use crate::error::{Error, Result};
use crate::homomorphism::PathHom;

/// Largest source path the brute-force homomorphism filters will enumerate.
pub const DEFAULT_ENUM_LIMIT: u32 = 16;

/// `|Hom^j(P_n, P_k)|` for every start vertex `j` in `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StartCountVector {
    counts: Vec<Count>,
}

impl StartCountVector {
    pub fn k(&self) -> usize {
        self.counts.len()
    }

    pub fn counts(&self) -> &[Count] {
        &self.counts
    }

    /// Entry for 1-based start vertex `j`.
    pub fn get(&self, j: usize) -> &Count {
        &self.counts[j - 1]
    }

    pub fn total(&self) -> Count {
        self.counts.iter().sum()
    }
}

/// Walk counts of length `n - 1` from every vertex of `P_k`.
///
/// # Panics
/// If `n == 0` or `k == 0`.
pub fn hom_start_counts_dp(n: u32, k: u32) -> StartCountVector {
    assert!(
        n >= 1 && k >= 1,
        "hom_start_counts_dp needs n >= 1 and k >= 1"
    );
    let k = k as usize;
    let mut cur: Vec<BigUint> = vec![BigUint::one(); k];
    let mut next: Vec<BigUint> = vec![BigUint::zero(); k];
    for _ in 1..n {
        for j in 0..k {
            let mut v = BigUint::zero();
            if j > 0 {
                v += &cur[j - 1];
            }
            if j + 1 < k {
                v += &cur[j + 1];
            }
            next[j] = v;
        }
        std::mem::swap(&mut cur, &mut next);
    }
    StartCountVector {
        counts: cur.into_iter().map(Count::from).collect(),
    }
}

/// `|Hom(P_n, P_k)|`, with `k = 0` giving zero.
///
/// # Panics
/// If `n == 0`.
pub fn hom_count_dp(n: u32, k: u32) -> Count {
    assert!(n >= 1, "hom_count_dp needs n >= 1");
    if k == 0 {
        return Count::zero();
    }
    hom_start_counts_dp(n, k).total()
}

/// All homomorphisms `P_n -> P_k` in lexicographic order of image sequences,
/// optionally restricted to `f(1) = start`.
///
/// # Panics
/// If `n == 0`, `k == 0`, or `start` is not a vertex of `P_k`.
pub fn enumerate_homs(n: u32, k: u32, start: Option<u32>) -> HomIter {
    assert!(n >= 1 && k >= 1, "enumerate_homs needs n >= 1 and k >= 1");
    if let Some(s) = start {
        assert!((1..=k).contains(&s), "start vertex {s} is not in [1..{k}]");
    }
    HomIter::new(n as usize, k, start)
}

pub struct HomIter {
    n: usize,
    k: u32,
    fixed_start: bool,
    images: Vec<u32>,
    done: bool,
}

impl HomIter {
    fn new(n: usize, k: u32, start: Option<u32>) -> Self {
        let mut it = HomIter {
            n,
            k,
            fixed_start: start.is_some(),
            images: Vec::with_capacity(n),
            done: false,
        };
        it.images.push(start.unwrap_or(1));
        if !it.fill_tail() {
            it.done = true;
        }
        it
    }

    /// Extends `images` to length `n` with the lexicographically smallest walk.
    fn fill_tail(&mut self) -> bool {
        while self.images.len() < self.n {
            let prev = *self.images.last().expect("nonempty");
            if prev > 1 {
                self.images.push(prev - 1);
            } else if prev < self.k {
                self.images.push(prev + 1);
            } else {
                return false;
            }
        }
        true
    }

    fn advance(&mut self) -> bool {
        // Deepest position that took the down-step and can take the up-step instead.
        for pos in (1..self.n).rev() {
            let prev = self.images[pos - 1];
            if self.images[pos] + 1 == prev && prev < self.k {
                self.images.truncate(pos);
                self.images.push(prev + 1);
                return self.fill_tail();
            }
        }
        if !self.fixed_start && self.images[0] < self.k {
            let first = self.images[0] + 1;
            self.images.clear();
            self.images.push(first);
            return self.fill_tail();
        }
        false
    }
}

impl Iterator for HomIter {
    type Item = PathHom;

    fn next(&mut self) -> Option<PathHom> {
        if self.done {
            return None;
        }
        let out = PathHom::from_valid(self.images.clone(), self.k);
        if !self.advance() {
            self.done = true;
        }
        Some(out)
    }
}

/// Number of surjective homomorphisms `P_n -> P_k`, by enumeration.
pub fn epi_count_brute(n: u32, k: u32) -> Result<Count> {
    epi_count_brute_with_limit(n, k, DEFAULT_ENUM_LIMIT)
}

pub fn epi_count_brute_with_limit(n: u32, k: u32, limit: u32) -> Result<Count> {
    if n == 0 || k == 0 {
        return Err(Error::Domain(format!(
            "epi_count_brute needs n, k >= 1 (got n={n}, k={k})"
        )));
    }
    if n > limit {
        return Err(Error::SizeLimit {
            what: "n",
            value: n as u64,
            limit: limit as u64,
        });
    }
    if k > n {
        return Ok(Count::zero());
    }
    let epis = enumerate_homs(n, k, None)
        .filter(PathHom::is_surjective)
        .count();
    Ok(Count::from(epis))
}

/// `|Hom(P_n, P_k)|` by enumeration, with the same size guard as [`epi_count_brute`].
pub fn hom_count_brute(n: u32, k: u32, limit: u32) -> Result<Count> {
    if n == 0 {
        return Err(Error::Domain("hom_count_brute needs n >= 1".into()));
    }
    if n > limit {
        return Err(Error::SizeLimit {
            what: "n",
            value: n as u64,
            limit: limit as u64,
        });
    }
    if k == 0 {
        return Ok(Count::zero());
    }
    Ok(Count::from(enumerate_homs(n, k, None).count()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn images(it: HomIter) -> Vec<Vec<u32>> {
        it.map(|f| f.images().to_vec()).collect()
    }

    /// Every sequence in [1..k]^n filtered by adjacency.
    fn all_sequences(n: usize, k: u32) -> Vec<Vec<u32>> {
        let mut out = vec![vec![]];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|s: Vec<u32>| {
                    (1..=k).map(move |v| {
                        let mut t = s.clone();
                        t.push(v);
                        t
                    })
                })
                .collect();
        }
        out.retain(|s| s.windows(2).all(|w| w[0].abs_diff(w[1]) == 1));
        out
    }

    #[test]
    fn start_counts_examples() {
        let v = hom_start_counts_dp(1, 3);
        assert_eq!(v.counts(), &[Count::one(), Count::one(), Count::one()]);
        let v = hom_start_counts_dp(2, 3);
        assert_eq!(
            v.counts(),
            &[1u32.into(), 2u32.into(), 1u32.into()] as &[Count]
        );
        // Exhaustive enumeration of [1..3]^5 gives four walks from each vertex.
        let v = hom_start_counts_dp(5, 3);
        assert_eq!(
            v.counts(),
            &[4u32.into(), 4u32.into(), 4u32.into()] as &[Count]
        );
        assert_eq!(all_sequences(5, 3).len(), 12);
    }

    #[test]
    fn hom_count_examples() {
        assert_eq!(hom_count_dp(1, 5), 5u32);
        assert_eq!(hom_count_dp(2, 1), 0u32);
        assert_eq!(hom_count_dp(3, 3), 6u32);
        assert_eq!(hom_count_dp(4, 4), 16u32);
        assert_eq!(hom_count_dp(7, 0), 0u32);
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(images(enumerate_homs(2, 2, Some(1))), vec![vec![1, 2]]);
        assert_eq!(
            images(enumerate_homs(3, 3, Some(1))),
            vec![vec![1, 2, 1], vec![1, 2, 3]]
        );
        let figure = vec![1, 2, 3, 2, 3, 4, 5, 4, 3, 4, 5, 6, 5, 6, 5];
        assert!(enumerate_homs(15, 11, Some(1)).any(|f| f.images() == figure.as_slice()));
        assert_eq!(enumerate_homs(3, 1, None).count(), 0);
        assert_eq!(images(enumerate_homs(1, 1, None)), vec![vec![1]]);
    }

    #[test]
    fn enumeration_matches_filtered_product_in_order() {
        for n in 1..=6 {
            for k in 1..=5 {
                assert_eq!(
                    images(enumerate_homs(n, k, None)),
                    all_sequences(n as usize, k)
                );
            }
        }
    }

    #[test]
    fn enumeration_length_matches_dp() {
        for n in 1..=12 {
            for k in 1..=12 {
                let total = enumerate_homs(n, k, None).count();
                assert_eq!(hom_count_dp(n, k), total, "n={n} k={k}");
                let starts = hom_start_counts_dp(n, k);
                for j in 1..=k {
                    let c = enumerate_homs(n, k, Some(j)).count();
                    assert_eq!(starts.get(j as usize), &Count::from(c));
                }
            }
        }
    }

    #[test]
    fn recurrence_and_symmetry() {
        for k in 2..=40 {
            for i in 1..40 {
                let lhs = hom_count_dp(i + 1, k);
                let prev = hom_start_counts_dp(i, k);
                let two_h = prev.total().to_bigint() * 2;
                let two_h1 = prev.get(1).to_bigint() * 2;
                assert_eq!(lhs.to_bigint(), two_h - two_h1, "i={i} k={k}");
                let c = prev.counts();
                for j in 0..c.len() {
                    assert_eq!(c[j], c[c.len() - 1 - j]);
                }
            }
        }
    }

    #[test]
    fn epi_examples() {
        assert_eq!(epi_count_brute(3, 3).unwrap(), 2u32);
        assert_eq!(epi_count_brute(4, 2).unwrap(), 2u32);
        assert_eq!(epi_count_brute(4, 3).unwrap(), 4u32);
        assert_eq!(epi_count_brute(3, 5).unwrap(), 0u32);
        assert_eq!(epi_count_brute(1, 1).unwrap(), 1u32);
        for n in 2..=10 {
            assert_eq!(epi_count_brute(n, n).unwrap(), 2u32);
            assert_eq!(epi_count_brute(n, 1).unwrap(), 0u32);
        }
    }

    #[test]
    fn epi_limit_is_enforced() {
        assert_eq!(
            epi_count_brute(17, 3),
            Err(Error::SizeLimit {
                what: "n",
                value: 17,
                limit: 16
            })
        );
        assert!(epi_count_brute_with_limit(8, 3, 7).is_err());
    }
}
