//! Closed-form evaluation of homomorphism, epimorphism and epispectrum counts.
//!
//! All sums over `j in Z` are evaluated over the exact index window in which
//! the binomial argument lies inside its row; outside that window every term
//! is zero.

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use crate::count::{binom, half_ceil, half_floor, Count, PascalRow};
use crate::error::{Error, Result};
use crate::oracle::hom_count_dp;

fn signed(v: BigUint) -> BigInt {
    BigInt::from(v)
}

/// `|Hom(P_n, P_k)| = k 2^(n-1) - sum_i 2^(n-1-i) sum_j [..]`.
///
/// # Panics
/// If `n == 0` or `k == 0`.
pub fn hom_count_closed(n: u32, k: u32) -> Count {
    assert!(n >= 1 && k >= 1, "hom_count_closed needs n >= 1 and k >= 1");
    let period = k as i64 + 1;
    let mut acc = BigInt::from(k) << (n - 1);
    let mut row = PascalRow::new();
    for i in 0..(n as i64 - 1) {
        let plus = row.periodic_sum(half_ceil(i), period);
        let minus = row.periodic_sum(half_floor(i + k as i64 + 1), period);
        acc -= (signed(plus) - signed(minus)) << (n as i64 - 1 - i);
        row.advance();
    }
    Count::from_signed(acc).expect("homomorphism counts are nonnegative")
}

/// `|Hom^1(P_n, P_k)|`, homomorphisms with `f(1) = 1`, as a two-binomial `j`-sum.
///
/// # Panics
/// If `n == 0` or `k == 0`.
pub fn hom1_count_closed(n: u32, k: u32) -> Count {
    assert!(
        n >= 1 && k >= 1,
        "hom1_count_closed needs n >= 1 and k >= 1"
    );
    let (n, k) = (n as i64, k as i64);
    let row = PascalRow::at(n as u64 - 1);
    let plus = row.periodic_sum(half_ceil(n - 1), k + 1);
    let minus = row.periodic_sum(half_floor(n + k), k + 1);
    Count::from_signed(signed(plus) - signed(minus)).expect("start counts are nonnegative")
}

/// `|Hom^j(P_n, P_k)|` by the parity-split alternating block sum.
///
/// The binomial row `n - 1` is cut into blocks of about `k / 2` consecutive
/// entries, one per reflected copy of the target path, taken with alternating
/// signs. Which rounding applies depends on the parity of `n - j`.
///
/// # Panics
/// If `n == 0` or `j` is not in `1..=k`.
pub fn hom_j_count_aw(n: u32, k: u32, j: u32) -> Count {
    assert!(n >= 1, "hom_j_count_aw needs n >= 1");
    assert!((1..=k).contains(&j), "start vertex {j} is not in [1..{k}]");
    let (n, k, j) = (n as i64, k as i64, j as i64);
    let row = PascalRow::at(n as u64 - 1);
    let odd = (n - j).rem_euclid(2) == 1;
    let base = half_floor(n - j - 1) + 1;
    let width = if odd { k / 2 } else { half_ceil(k) };
    let mut acc = BigInt::zero();
    for t in (1 - n)..=(n - 1) {
        let shift = if odd {
            half_floor((k + 1) * t)
        } else {
            half_ceil((k + 1) * t)
        };
        let lo = base + shift;
        let block = signed(row.range_sum(lo, lo + width - 1));
        if t.rem_euclid(2) == 0 {
            acc += block;
        } else {
            acc -= block;
        }
    }
    Count::from_signed(acc).expect("start counts are nonnegative")
}

/// `|End(P_n)|`, by the parity-split closed form.
///
/// # Panics
/// If `n == 0`.
pub fn end_count_closed(n: u32) -> Count {
    assert!(n >= 1, "end_count_closed needs n >= 1");
    let n64 = n as u64;
    let lead = BigInt::from(n64 + 1) << (n64 - 1);
    let correction = if n % 2 == 1 {
        BigInt::from(2 * n64 - 1) * binom(n64 - 1, ((n64 - 1) / 2) as i64).to_bigint()
    } else {
        BigInt::from(n64) * binom(n64, (n64 / 2) as i64).to_bigint()
    };
    Count::from_signed(lead - correction).expect("endomorphism counts are nonnegative")
}

/// Which evaluator supplies `|Hom(P_n, P_k)|` to the inclusion-exclusion formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomBackend {
    ClosedForm,
    Dp,
}

impl HomBackend {
    /// `|Hom(P_n, P_k)|`, zero for a target with no vertices.
    pub fn hom(self, n: u32, k: i64) -> Count {
        if k <= 0 {
            return Count::zero();
        }
        match self {
            HomBackend::ClosedForm => hom_count_closed(n, k as u32),
            HomBackend::Dp => hom_count_dp(n, k as u32),
        }
    }

    /// `H(k) - 2 H(k-1) + H(k-2)`, as a signed integer.
    fn second_difference(self, n: u32, k: i64) -> BigInt {
        self.hom(n, k).to_bigint() - self.hom(n, k - 1).to_bigint() * 2
            + self.hom(n, k - 2).to_bigint()
    }
}

/// `|Epi(P_n, P_k)|` by inclusion-exclusion over the two end vertices of `P_k`.
///
/// # Panics
/// If `n == 0` or `k == 0`.
pub fn epi_count_ie(n: u32, k: u32, backend: HomBackend) -> Count {
    assert!(n >= 1 && k >= 1, "epi_count_ie needs n >= 1 and k >= 1");
    Count::from_signed(backend.second_difference(n, k as i64))
        .expect("epimorphism counts are nonnegative")
}

/// `l_k(n)` as half the epimorphism count onto `P_(n-k+1)`; valid for every `1 <= k <= n-1`.
pub fn lk_via_hom(n: u32, k: u32, backend: HomBackend) -> Result<Count> {
    if n < 2 || k == 0 || k >= n {
        return Err(Error::Domain(format!(
            "l_k(n) is defined for 1 <= k <= n-1 (got n={n}, k={k})"
        )));
    }
    let r = (n - k + 1) as i64;
    let doubled = Count::from_signed(backend.second_difference(n, r))?;
    doubled.halve_exact()
}

fn check_threshold(n: u32, k: u32) -> Result<()> {
    if k == 0 || (n as u64) < 2 * k as u64 {
        return Err(Error::Domain(format!(
            "the polynomial form of l_k(n) holds for k >= 1 and n >= 2k (got n={n}, k={k})"
        )));
    }
    Ok(())
}

/// `l_k(n) = C(n-1, ceil(k/2)-1) + C(n-1, floor(k/2)-1)` for `n >= 2k`.
pub fn lk_closed(n: u32, k: u32) -> Result<Count> {
    check_threshold(n, k)?;
    let top = n as u64 - 1;
    let k = k as i64;
    Ok(binom(top, half_ceil(k) - 1) + binom(top, k / 2 - 1))
}

/// One `(i, j)` entry of a binomial-difference family: `plus - minus`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialTerm {
    pub i: u32,
    pub j: i64,
    pub plus: Count,
    pub minus: Count,
}

impl BinomialTerm {
    pub fn value(&self) -> BigInt {
        self.plus.to_bigint() - self.minus.to_bigint()
    }
}

/// The term-by-term evaluation of `l_k(n)` for `n >= 2k`.
///
/// `terms_a`, `terms_b`, `terms_c` hold the nonzero entries of the three
/// binomial-difference families (periods `n-k+2`, `n-k+1`, `n-k`), `summands[i]`
/// is `2^(n-i-2) sum_j (-A + 2B - C)`, and `d` is the telescoping sequence
/// `D_0, ..., D_(n-1)` with `summands[i] = D_(i+1) - D_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LkTermBreakdown {
    pub n: u32,
    pub k: u32,
    pub terms_a: Vec<BinomialTerm>,
    pub terms_b: Vec<BinomialTerm>,
    pub terms_c: Vec<BinomialTerm>,
    pub summands: Vec<BigInt>,
    pub d: Vec<Count>,
    pub total: Count,
}

impl LkTermBreakdown {
    pub fn d_last(&self) -> &Count {
        self.d.last().expect("n >= 2 so D has at least two entries")
    }

    /// Whether every summand equals `D_(i+1) - D_i` and the summands add up
    /// to `D_(n-1) - D_0`.
    pub fn telescopes(&self) -> bool {
        let stepwise = self
            .summands
            .iter()
            .enumerate()
            .all(|(i, s)| *s == self.d[i + 1].to_bigint() - self.d[i].to_bigint());
        let sum: BigInt = self.summands.iter().sum();
        stepwise && sum == self.d_last().to_bigint() - self.d[0].to_bigint()
    }
}

/// Binomial-difference family: `plus = C(i, ceil(i/2) - j p)`, `minus = C(i, m - j p)`.
fn family_terms(row: &PascalRow, i: u32, minus_offset: i64, period: i64) -> Vec<BinomialTerm> {
    let top = i as i64;
    let plus_offset = half_ceil(top);
    let lo = num_integer::Integer::div_ceil(&(plus_offset.min(minus_offset) - top), &period);
    let hi = num_integer::Integer::div_floor(&plus_offset.max(minus_offset), &period);
    (lo..=hi)
        .filter_map(|j| {
            let plus = Count::from(row.get(plus_offset - j * period).clone());
            let minus = Count::from(row.get(minus_offset - j * period).clone());
            (!plus.is_zero() || !minus.is_zero()).then_some(BinomialTerm { i, j, plus, minus })
        })
        .collect()
}

fn family_sum(terms: &[BinomialTerm], i: u32) -> BigInt {
    terms
        .iter()
        .filter(|t| t.i == i)
        .map(BinomialTerm::value)
        .sum()
}

pub fn lk_telescope(n: u32, k: u32) -> Result<LkTermBreakdown> {
    check_threshold(n, k)?;
    let (ni, ki) = (n as i64, k as i64);
    let gap = ni - ki;
    let mut breakdown = LkTermBreakdown {
        n,
        k,
        terms_a: Vec::new(),
        terms_b: Vec::new(),
        terms_c: Vec::new(),
        summands: Vec::new(),
        d: Vec::new(),
        total: Count::zero(),
    };
    let mut row = PascalRow::new();
    let mut total = BigInt::zero();
    for i in 0..n - 1 {
        let it = i as i64;
        let a = family_terms(&row, i, half_floor(it + gap) + 1, gap + 2);
        let b = family_terms(&row, i, half_floor(it + gap - 1) + 1, gap + 1);
        let c = family_terms(&row, i, half_floor(it + gap - 2) + 1, gap);
        let inner = -family_sum(&a, i) + family_sum(&b, i) * 2 - family_sum(&c, i);
        let summand = inner << (n - i - 2);
        total += &summand;
        breakdown.summands.push(summand);
        breakdown.terms_a.extend(a);
        breakdown.terms_b.extend(b);
        breakdown.terms_c.extend(c);
        row.advance();
    }
    for i in 0..n {
        let it = i as i64;
        let m = half_floor(it + gap - 1);
        let pair = binom(i as u64, m + 1) + binom(i as u64, m - gap);
        breakdown.d.push(pair * Count::pow2((n - i - 1) as u64));
    }
    breakdown.total = Count::from_signed(total)?;
    Ok(breakdown)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CentralIdentity {
    /// `sum_{k<m} C(2k,k) 2^(2m-1-2k) = m C(2m,m)`
    Even,
    /// `sum_{k<m} C(2k+1,k) 2^(2m-1-2k) = (m+1) C(2m+1,m) - 2^(2m)`
    Odd,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityFailure {
    pub m: u64,
    pub identity: CentralIdentity,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub m_max: u64,
    pub first_failure: Option<IdentityFailure>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

fn central_identity_rhs(m: u64, identity: CentralIdentity) -> BigInt {
    match identity {
        CentralIdentity::Even => binom(2 * m, m as i64).to_bigint() * m,
        CentralIdentity::Odd => {
            binom(2 * m + 1, m as i64).to_bigint() * (m + 1) - (BigInt::from(1u8) << (2 * m))
        }
    }
}

fn central_identity_term(k: u64, identity: CentralIdentity) -> BigInt {
    match identity {
        CentralIdentity::Even => binom(2 * k, k as i64).to_bigint(),
        CentralIdentity::Odd => binom(2 * k + 1, k as i64).to_bigint(),
    }
}

/// Both sides of one central-binomial identity at `m`.
pub fn central_identity_sides(m: u64, identity: CentralIdentity) -> (BigInt, BigInt) {
    let lhs = (0..m)
        .map(|k| central_identity_term(k, identity) << (2 * m - 1 - 2 * k))
        .sum();
    (lhs, central_identity_rhs(m, identity))
}

/// Checks both identities for every `1 <= m <= m_max`, stopping at the first failure.
pub fn check_binomial_identities(m_max: u64) -> IdentityReport {
    let identities = [CentralIdentity::Even, CentralIdentity::Odd];
    // The left-hand terms do not depend on m; compute them once.
    let terms: Vec<Vec<BigInt>> = identities
        .iter()
        .map(|&id| (0..m_max).map(|k| central_identity_term(k, id)).collect())
        .collect();
    for m in 1..=m_max {
        for (&identity, row) in identities.iter().zip(&terms) {
            let lhs: BigInt = (0..m)
                .map(|k| &row[k as usize] << (2 * m - 1 - 2 * k))
                .sum();
            let rhs = central_identity_rhs(m, identity);
            if lhs != rhs {
                return IdentityReport {
                    m_max,
                    first_failure: Some(IdentityFailure {
                        m,
                        identity,
                        lhs,
                        rhs,
                    }),
                };
            }
        }
    }
    IdentityReport {
        m_max,
        first_failure: None,
    }
}

/// Repeated forward differences of a sequence.
pub fn forward_differences(values: &[BigInt], order: usize) -> Vec<BigInt> {
    let mut cur = values.to_vec();
    for _ in 0..order {
        cur = cur.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    cur
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeCheck {
    pub k: u32,
    /// `ceil((k-2)/2)`
    pub degree: u32,
    /// Differences of order `degree + 1` over `n = 2k ..= 3k+4` are all zero.
    pub vanishes: bool,
    /// Differences of order `degree` are a nonzero constant.
    pub exact_degree: bool,
}

/// Checks that `n -> l_k(n)` is a polynomial of degree `ceil((k-2)/2)` on `n >= 2k`.
pub fn lk_degree_check(k: u32) -> Result<DegreeCheck> {
    if k == 0 {
        return Err(Error::Domain("k must be at least 1".into()));
    }
    let degree = half_ceil(k as i64 - 2) as u32;
    let values = (2 * k..=3 * k + 4)
        .map(|n| lk_closed(n, k).map(|c| c.to_bigint()))
        .collect::<Result<Vec<_>>>()?;
    let top = forward_differences(&values, degree as usize + 1);
    let below = forward_differences(&values, degree as usize);
    let vanishes = !top.is_empty() && top.iter().all(Zero::is_zero);
    let exact_degree = below.iter().all(|d| d == &below[0] && d.is_positive());
    Ok(DegreeCheck {
        k,
        degree,
        vanishes,
        exact_degree,
    })
}
