//! Exact nonnegative counts and the extended binomial coefficient.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// An arbitrary-precision nonnegative integer.
///
/// Every homomorphism, path and partition count in the crate is a `Count`.
/// Arithmetic never overflows and never rounds.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Count(BigUint);

impl Count {
    pub fn zero() -> Self {
        Count(BigUint::zero())
    }

    pub fn one() -> Self {
        Count(BigUint::one())
    }

    /// `2^exp`, exact.
    pub fn pow2(exp: u64) -> Self {
        Count(BigUint::one() << exp)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }

    pub fn to_bigint(&self) -> BigInt {
        BigInt::from_biguint(Sign::Plus, self.0.clone())
    }

    /// Converts a signed intermediate result, failing if it is negative.
    pub fn from_signed(value: BigInt) -> Result<Self> {
        match value.to_biguint() {
            Some(v) => Ok(Count(v)),
            None => Err(Error::Internal(format!(
                "expected a nonnegative count, got {value}"
            ))),
        }
    }

    /// Exact halving; an odd value is an internal inconsistency.
    pub fn halve_exact(&self) -> Result<Self> {
        let (q, r) = self.0.div_rem(&BigUint::from(2u8));
        if r.is_zero() {
            Ok(Count(q))
        } else {
            Err(Error::Internal(format!(
                "{} is odd and cannot be halved",
                self.0
            )))
        }
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for Count {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .parse::<BigUint>()
            .map(Count)
            .map_err(|e| Error::Parse(format!("{s:?} is not a nonnegative integer: {e}")))
    }
}

impl Serialize for Count {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(&self.0)
    }
}

impl From<BigUint> for Count {
    fn from(v: BigUint) -> Self {
        Count(v)
    }
}

macro_rules! count_from_unsigned {
    ($($t:ty),*) => {$(
        impl From<$t> for Count {
            fn from(v: $t) -> Self {
                Count(BigUint::from(v))
            }
        }

        impl PartialEq<$t> for Count {
            fn eq(&self, other: &$t) -> bool {
                self.0 == BigUint::from(*other)
            }
        }
    )*};
}

count_from_unsigned!(u8, u32, u64, u128, usize);

impl Add for Count {
    type Output = Count;

    fn add(self, rhs: Count) -> Count {
        Count(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a Count> for &'a Count {
    type Output = Count;

    fn add(self, rhs: &Count) -> Count {
        Count(&self.0 + &rhs.0)
    }
}

impl AddAssign<&Count> for Count {
    fn add_assign(&mut self, rhs: &Count) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for Count {
    fn add_assign(&mut self, rhs: Count) {
        self.0 += rhs.0;
    }
}

impl Mul for Count {
    type Output = Count;

    fn mul(self, rhs: Count) -> Count {
        Count(self.0 * rhs.0)
    }
}

impl Sum for Count {
    fn sum<I: Iterator<Item = Count>>(iter: I) -> Count {
        iter.fold(Count::zero(), |acc, c| acc + c)
    }
}

impl<'a> Sum<&'a Count> for Count {
    fn sum<I: Iterator<Item = &'a Count>>(iter: I) -> Count {
        let mut acc = Count::zero();
        for c in iter {
            acc += c;
        }
        acc
    }
}

/// `C(a, b)` with the extended convention `C(a, b) = 0` when `b < 0` or `b > a`.
pub fn binom(a: u64, b: i64) -> Count {
    Count(binom_big(a, b))
}

pub(crate) fn binom_big(a: u64, b: i64) -> BigUint {
    if b < 0 || b as u64 > a {
        return BigUint::zero();
    }
    let b = (b as u64).min(a - b as u64);
    let mut acc = BigUint::one();
    for i in 0..b {
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

/// One row of Pascal's triangle, advanced in place.
///
/// The closed forms walk `i = 0, 1, 2, ...` and need many entries of each
/// row, so a rolling row is much cheaper than independent `binom` calls.
#[derive(Clone, Debug)]
pub(crate) struct PascalRow {
    top: u64,
    row: Vec<BigUint>,
}

impl PascalRow {
    pub(crate) fn new() -> Self {
        PascalRow {
            top: 0,
            row: vec![BigUint::one()],
        }
    }

    pub(crate) fn at(top: u64) -> Self {
        let mut row = PascalRow::new();
        while row.top < top {
            row.advance();
        }
        row
    }

    #[cfg(test)]
    pub(crate) fn top(&self) -> u64 {
        self.top
    }

    pub(crate) fn advance(&mut self) {
        let mut next = Vec::with_capacity(self.row.len() + 1);
        next.push(BigUint::one());
        for pair in self.row.windows(2) {
            next.push(&pair[0] + &pair[1]);
        }
        next.push(BigUint::one());
        self.row = next;
        self.top += 1;
    }

    /// `C(top, b)`, zero outside `0..=top`.
    pub(crate) fn get(&self, b: i64) -> &BigUint {
        if b < 0 || b as u64 > self.top {
            &BigUint::ZERO
        } else {
            &self.row[b as usize]
        }
    }

    /// `sum_{j in Z} C(top, offset - j * period)`.
    ///
    /// Only the indices with `0 <= offset - j * period <= top` are visited.
    pub(crate) fn periodic_sum(&self, offset: i64, period: i64) -> BigUint {
        assert!(period > 0, "periodic binomial sum needs a positive period");
        let top = self.top as i64;
        let j_min = Integer::div_ceil(&(offset - top), &period);
        let j_max = Integer::div_floor(&offset, &period);
        let mut acc = BigUint::zero();
        for j in j_min..=j_max {
            acc += self.get(offset - j * period);
        }
        acc
    }

    /// `sum_{b = lo}^{hi} C(top, b)`, clipped to the row.
    pub(crate) fn range_sum(&self, lo: i64, hi: i64) -> BigUint {
        let lo = lo.max(0);
        let hi = hi.min(self.top as i64);
        let mut acc = BigUint::zero();
        for b in lo..=hi {
            acc += &self.row[b as usize];
        }
        acc
    }
}

/// Ceiling of `a / 2` for any sign of `a`.
pub(crate) fn half_ceil(a: i64) -> i64 {
    Integer::div_ceil(&a, &2)
}

/// Floor of `a / 2` for any sign of `a`.
pub(crate) fn half_floor(a: i64) -> i64 {
    Integer::div_floor(&a, &2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binom_examples() {
        assert_eq!(binom(6, 3), 20u32);
        assert_eq!(binom(6, -1), 0u32);
        assert_eq!(binom(6, 8), 0u32);
        assert_eq!(binom(0, 0), 1u32);
    }

    #[test]
    fn binom_large_value() {
        let expected: Count = "98913082887808032681188722800".parse().unwrap();
        assert_eq!(binom(100, 49), expected);
    }

    #[test]
    fn pascal_rule_exhaustive() {
        for a in 2..=64u64 {
            for b in 1..a as i64 {
                assert_eq!(
                    binom(a, b),
                    binom(a - 1, b - 1) + binom(a - 1, b),
                    "C({a},{b})"
                );
            }
        }
    }

    #[test]
    fn symmetry() {
        for a in 0..=64u64 {
            for b in 0..=a as i64 {
                assert_eq!(binom(a, b), binom(a, a as i64 - b));
            }
        }
    }

    #[test]
    fn pascal_row_matches_binom() {
        let mut row = PascalRow::new();
        for top in 0..40u64 {
            assert_eq!(row.top(), top);
            for b in -3..=(top as i64 + 3) {
                assert_eq!(row.get(b), binom(top, b).as_biguint());
            }
            row.advance();
        }
    }

    #[test]
    fn periodic_sum_matches_naive() {
        for top in 0..15u64 {
            let row = PascalRow::at(top);
            for period in 1..8i64 {
                for offset in -20..20i64 {
                    let naive: BigUint = (-50..=50)
                        .map(|j| binom_big(top, offset - j * period))
                        .sum();
                    assert_eq!(row.periodic_sum(offset, period), naive);
                }
            }
        }
    }

    #[test]
    fn halving() {
        assert_eq!(Count::from(10u32).halve_exact().unwrap(), 5u32);
        assert!(matches!(
            Count::from(7u32).halve_exact(),
            Err(Error::Internal(_))
        ));
    }

    #[test]
    fn signed_conversion() {
        assert_eq!(Count::from_signed(BigInt::from(12)).unwrap(), 12u32);
        assert!(Count::from_signed(BigInt::from(-1)).is_err());
    }

    #[test]
    fn half_rounding() {
        assert_eq!(half_ceil(-1), 0);
        assert_eq!(half_floor(-1), -1);
        assert_eq!(half_ceil(5), 3);
        assert_eq!(half_floor(5), 2);
    }
}
