use std::fmt;

use crate::error::{Error, Result};

/// A homomorphism `P_n -> P_k`, stored as its image sequence `f(1), ..., f(n)`.
///
/// Vertices are 1-based. Consecutive images always differ by exactly one.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathHom {
    k: u32,
    images: Vec<u32>,
}

impl PathHom {
    pub fn new(images: Vec<u32>, k: u32) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::InvalidHom(
                "the source path needs at least one vertex".into(),
            ));
        }
        for (i, &v) in images.iter().enumerate() {
            if v == 0 || v > k {
                return Err(Error::InvalidHom(format!(
                    "f({}) = {v} is not a vertex of P_{k}",
                    i + 1
                )));
            }
        }
        for (i, w) in images.windows(2).enumerate() {
            if w[0].abs_diff(w[1]) != 1 {
                return Err(Error::InvalidHom(format!(
                    "f({}) = {} and f({}) = {} are not adjacent",
                    i + 1,
                    w[0],
                    i + 2,
                    w[1]
                )));
            }
        }
        Ok(PathHom { k, images })
    }

    /// Builds from images already known to be valid.
    pub(crate) fn from_valid(images: Vec<u32>, k: u32) -> Self {
        debug_assert!(PathHom::new(images.clone(), k).is_ok());
        PathHom { k, images }
    }

    /// Number of source vertices.
    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Number of target vertices.
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// `f(x)` for 1-based `x`.
    pub fn image(&self, x: usize) -> u32 {
        self.images[x - 1]
    }

    pub fn min_image(&self) -> u32 {
        *self.images.iter().min().expect("nonempty")
    }

    pub fn max_image(&self) -> u32 {
        *self.images.iter().max().expect("nonempty")
    }

    /// Whether the image is all of `[1..k]`.
    pub fn is_surjective(&self) -> bool {
        // Images of a path walk are contiguous, so the extremes decide it.
        self.min_image() == 1 && self.max_image() == self.k
    }

    /// Parses a comma-separated image list such as `"1,2,3,2"`.
    pub fn parse_images(text: &str) -> Result<Vec<u32>> {
        text.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad image {t:?}: {e}")))
            })
            .collect()
    }
}

impl fmt::Display for PathHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_valid_walks() {
        let f = PathHom::new(vec![3, 2, 1, 2], 4).unwrap();
        assert_eq!(f.n(), 4);
        assert_eq!(f.image(1), 3);
        assert!(!f.is_surjective());
        assert!(PathHom::new(vec![1, 2, 3], 3).unwrap().is_surjective());
        assert!(PathHom::new(vec![5], 5).is_ok());
    }

    #[test]
    fn rejects_invalid() {
        assert!(PathHom::new(vec![1, 1], 2).is_err());
        assert!(PathHom::new(vec![1, 3], 3).is_err());
        assert!(PathHom::new(vec![0, 1], 3).is_err());
        assert!(PathHom::new(vec![4], 3).is_err());
        assert!(PathHom::new(vec![], 3).is_err());
    }

    #[test]
    fn display_and_parse() {
        let f = PathHom::new(vec![1, 2, 1], 2).unwrap();
        assert_eq!(f.to_string(), "1,2,1");
        assert_eq!(PathHom::parse_images(" 1, 2,1").unwrap(), vec![1, 2, 1]);
        assert!(PathHom::parse_images("1,x").is_err());
    }
}
