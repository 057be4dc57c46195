use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A partition of `[1..n]` in canonical form.
///
/// Blocks are ordered by their minima and each block is ascending, so two
/// partitions are equal exactly when their block lists are equal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<u32>>,
}

impl SetPartition {
    /// Validates and canonicalizes `blocks` as a partition of `[1..n]`.
    pub fn new(n: usize, mut blocks: Vec<Vec<u32>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        for block in &mut blocks {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            block.sort_unstable();
            for &x in block.iter() {
                let xi = x as usize;
                if x == 0 || xi > n {
                    return Err(Error::InvalidPartition(format!("{x} is not in [1..{n}]")));
                }
                if seen[xi] {
                    return Err(Error::InvalidPartition(format!("{x} appears twice")));
                }
                seen[xi] = true;
            }
        }
        if let Some(missing) = (1..=n).find(|&x| !seen[x]) {
            return Err(Error::InvalidPartition(format!("{missing} is not covered")));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { n, blocks })
    }

    /// Groups `1..=labels.len()` by equal label (the kernel of `x -> labels[x-1]`).
    pub fn from_labels<T: Eq + Copy>(labels: &[T]) -> Self {
        let mut keys: Vec<T> = Vec::new();
        let mut blocks: Vec<Vec<u32>> = Vec::new();
        for (i, label) in labels.iter().enumerate() {
            let x = i as u32 + 1;
            match keys.iter().position(|k| k == label) {
                Some(b) => blocks[b].push(x),
                None => {
                    keys.push(*label);
                    blocks.push(vec![x]);
                }
            }
        }
        // First-occurrence order is already ordering by minimum.
        SetPartition {
            n: labels.len(),
            blocks,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Block index (0-based, canonical order) of every element `1..=n`.
    pub fn block_index_of_each(&self) -> Vec<usize> {
        let mut idx = vec![0; self.n];
        for (b, block) in self.blocks.iter().enumerate() {
            for &x in block {
                idx[x as usize - 1] = b;
            }
        }
        idx
    }

    /// The first block holding two consecutive integers, with the smaller one.
    pub fn adjacent_pair(&self) -> Option<(usize, u32)> {
        self.blocks.iter().enumerate().find_map(|(b, block)| {
            block
                .windows(2)
                .find(|w| w[1] == w[0] + 1)
                .map(|w| (b, w[0]))
        })
    }

    /// Formats a sequence of blocks, e.g. `{7}{6,8}{1,3,5,9}`.
    pub fn format_blocks<'a, I: IntoIterator<Item = &'a Vec<u32>>>(blocks: I) -> String {
        let mut out = String::new();
        for block in blocks {
            out.push('{');
            for (i, x) in block.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push_str(&x.to_string());
            }
            out.push('}');
        }
        out
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&SetPartition::format_blocks(&self.blocks))
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    /// Parses `{1,3}{2}`. The ground set size is the number of elements.
    fn from_str(s: &str) -> Result<Self> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut blocks = Vec::new();
        let mut rest = text.as_str();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('{')
                .ok_or_else(|| Error::Parse(format!("expected '{{' at {rest:?}")))?;
            let close = body
                .find('}')
                .ok_or_else(|| Error::Parse("unterminated block".into()))?;
            let block = body[..close]
                .split(',')
                .map(|t| {
                    t.parse::<u32>()
                        .map_err(|e| Error::Parse(format!("bad element {t:?}: {e}")))
                })
                .collect::<Result<Vec<u32>>>()?;
            blocks.push(block);
            rest = &body[close + 1..];
        }
        let n = blocks.iter().map(Vec::len).sum();
        SetPartition::new(n, blocks)
    }
}

/// Iterator over all set partitions of `[1..n]` as restricted growth strings.
///
/// With `no_adjacent`, only partitions whose blocks contain no two
/// consecutive integers are produced.
pub struct SetPartitions {
    n: usize,
    no_adjacent: bool,
    rgs: Vec<u32>,
    maxes: Vec<u32>,
    done: bool,
}

impl SetPartitions {
    pub fn new(n: usize, no_adjacent: bool) -> Self {
        let mut it = SetPartitions {
            n,
            no_adjacent,
            rgs: Vec::with_capacity(n),
            maxes: Vec::with_capacity(n),
            done: false,
        };
        if n == 0 || !it.fill_from(0) {
            it.done = true;
        }
        it
    }

    fn allowed(&self, pos: usize, value: u32) -> bool {
        !(self.no_adjacent && pos > 0 && self.rgs[pos - 1] == value)
    }

    /// Fills positions `pos..n` with the smallest admissible values.
    fn fill_from(&mut self, pos: usize) -> bool {
        self.rgs.truncate(pos);
        self.maxes.truncate(pos);
        for p in pos..self.n {
            let limit = if p == 0 { 0 } else { self.maxes[p - 1] + 1 };
            let Some(v) = (0..=limit).find(|&v| self.allowed(p, v)) else {
                return false;
            };
            let m = if p == 0 { v } else { self.maxes[p - 1].max(v) };
            self.rgs.push(v);
            self.maxes.push(m);
        }
        true
    }

    fn advance(&mut self) -> bool {
        for pos in (1..self.n).rev() {
            let limit = self.maxes[pos - 1] + 1;
            let mut v = self.rgs[pos] + 1;
            while v <= limit && !self.allowed(pos, v) {
                v += 1;
            }
            if v <= limit {
                self.rgs[pos] = v;
                self.maxes[pos] = self.maxes[pos - 1].max(v);
                if self.fill_from(pos + 1) {
                    return true;
                }
            }
        }
        false
    }
}

impl Iterator for SetPartitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        let current = SetPartition::from_labels(&self.rgs);
        if !self.advance() {
            self.done = true;
        }
        Some(current)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonicalizes() {
        let p = SetPartition::new(4, vec![vec![4, 2], vec![3], vec![1]]).unwrap();
        assert_eq!(p.blocks(), &[vec![1], vec![2, 4], vec![3]]);
        assert_eq!(p.to_string(), "{1}{2,4}{3}");
        assert_eq!(p.block_index_of_each(), vec![0, 1, 2, 1]);
    }

    #[test]
    fn rejects_bad_partitions() {
        assert!(SetPartition::new(3, vec![vec![1, 2]]).is_err());
        assert!(SetPartition::new(2, vec![vec![1, 2], vec![2]]).is_err());
        assert!(SetPartition::new(2, vec![vec![1, 3], vec![2]]).is_err());
        assert!(SetPartition::new(1, vec![vec![1], vec![]]).is_err());
    }

    #[test]
    fn parses_text_form() {
        let p: SetPartition = "{1,3,5,9}{2,4,10}{6,8}{7}{11}".parse().unwrap();
        assert_eq!(p.n(), 11);
        assert_eq!(p.block_count(), 5);
        assert_eq!(p.to_string(), "{1,3,5,9}{2,4,10}{6,8}{7}{11}");
        let q: SetPartition = "{2}{1,3}".parse().unwrap();
        assert_eq!(q.to_string(), "{1,3}{2}");
        assert!("{1,2".parse::<SetPartition>().is_err());
        assert!("1,2}".parse::<SetPartition>().is_err());
    }

    #[test]
    fn adjacent_detection() {
        let p: SetPartition = "{1,2}{3}".parse().unwrap();
        assert_eq!(p.adjacent_pair(), Some((0, 1)));
        let q: SetPartition = "{1,3}{2}".parse().unwrap();
        assert_eq!(q.adjacent_pair(), None);
    }

    #[test]
    fn enumeration_counts_are_bell_numbers() {
        let bell = [1usize, 1, 2, 5, 15, 52, 203, 877, 4140];
        for n in 1..=8 {
            assert_eq!(SetPartitions::new(n, false).count(), bell[n], "n = {n}");
            // Partitions of [n] with no consecutive pair in a block: Bell(n-1).
            assert_eq!(SetPartitions::new(n, true).count(), bell[n - 1], "n = {n}");
        }
    }

    #[test]
    fn enumeration_is_duplicate_free() {
        let all: Vec<_> = SetPartitions::new(6, false).collect();
        let set: std::collections::HashSet<_> = all.iter().cloned().collect();
        assert_eq!(all.len(), set.len());
    }
}
