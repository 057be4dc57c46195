use std::fmt;

use crate::count::Count;
use crate::error::{Error, Result};

/// `(l_1(n), ..., l_{n-1}(n))`, where `l_k(n)` counts the distinct partitions
/// of `[n]` with `n - k + 1` blocks that arise as kernels of endomorphisms of `P_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Epispectrum {
    n: usize,
    values: Vec<Count>,
}

impl Epispectrum {
    pub fn new(n: usize, values: Vec<Count>) -> Result<Self> {
        if n < 2 || values.len() != n - 1 {
            return Err(Error::Domain(format!(
                "an epispectrum of P_{n} has {} entries, got {}",
                n.saturating_sub(1),
                values.len()
            )));
        }
        Ok(Epispectrum { n, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[Count] {
        &self.values
    }

    /// `l_k(n)` for 1-based `k`.
    pub fn get(&self, k: usize) -> Option<&Count> {
        k.checked_sub(1).and_then(|i| self.values.get(i))
    }

    pub fn total(&self) -> Count {
        self.values.iter().sum()
    }
}

impl fmt::Display for Epispectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
