use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    East,
    North,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::East => 'E',
            Step::North => 'N',
        }
    }
}

/// A lattice path from the origin, as a word over east/north unit steps.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeWord {
    steps: Vec<Step>,
}

impl LatticeWord {
    pub fn new(steps: Vec<Step>) -> Self {
        LatticeWord { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// `(#East, #North)`.
    pub fn endpoint(&self) -> (u64, u64) {
        let east = self.steps.iter().filter(|s| **s == Step::East).count() as u64;
        (east, self.steps.len() as u64 - east)
    }

    /// Points visited, starting with the origin.
    pub fn points(&self) -> Vec<(u64, u64)> {
        let mut at = (0, 0);
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(at);
        for s in &self.steps {
            match s {
                Step::East => at.0 += 1,
                Step::North => at.1 += 1,
            }
            out.push(at);
        }
        out
    }
}

impl FromIterator<Step> for LatticeWord {
    fn from_iter<I: IntoIterator<Item = Step>>(iter: I) -> Self {
        LatticeWord::new(iter.into_iter().collect())
    }
}

impl fmt::Display for LatticeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for LatticeWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c {
                'E' | 'e' => Ok(Step::East),
                'N' | 'n' => Ok(Step::North),
                other => Err(Error::Parse(format!(
                    "lattice words use only 'E' and 'N', found {other:?}"
                ))),
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_form() {
        let w: LatticeWord = "EENEN".parse().unwrap();
        assert_eq!(w.len(), 5);
        assert_eq!(w.endpoint(), (3, 2));
        assert_eq!(w.to_string(), "EENEN");
        assert!("EXN".parse::<LatticeWord>().is_err());
        let empty: LatticeWord = "".parse().unwrap();
        assert!(empty.is_empty());
        assert_eq!(empty.endpoint(), (0, 0));
    }

    #[test]
    fn points_follow_steps() {
        let w: LatticeWord = "EN".parse().unwrap();
        assert_eq!(w.points(), vec![(0, 0), (1, 0), (1, 1)]);
    }
}
