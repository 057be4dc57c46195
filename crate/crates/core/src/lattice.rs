//! Lattice paths confined to a diagonal band, and their correspondence with
//! homomorphisms that start at vertex 1.

use num_bigint::BigInt;
use num_bigint::BigUint;
use num_traits::Zero;

use crate::count::{binom, half_ceil, Count, PascalRow};
use crate::error::{Error, Result};
use crate::homomorphism::PathHom;
use crate::word::{LatticeWord, Step};

/// Largest `e + nn` the grid oracle will fill.
pub const DEFAULT_LATTICE_LIMIT: u64 = 30;

/// The band between the lines `y = x + t` (above) and `y = x - s` (below).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BandSpec {
    pub t: u64,
    pub s: u64,
}

impl BandSpec {
    pub fn new(t: u64, s: u64) -> Self {
        BandSpec { t, s }
    }

    pub fn contains(&self, x: u64, y: u64) -> bool {
        y <= x + self.t && y + self.s >= x
    }
}

/// `C(e + nn, e)`: unconstrained paths from the origin to `(e, nn)`.
pub fn lattice_count_free(e: u64, nn: u64) -> Count {
    binom(e + nn, e as i64)
}

/// Paths to `(e, nn)` staying inside `band`, by the alternating reflection sum.
pub fn lattice_count_banded(e: u64, nn: u64, band: BandSpec) -> Count {
    if !band.contains(e, nn) {
        return Count::zero();
    }
    let row = PascalRow::at(e + nn);
    let period = (band.t + band.s + 2) as i64;
    let e = e as i64;
    let plus = row.periodic_sum(e, period);
    let minus = row.periodic_sum(e + band.t as i64 + 1, period);
    Count::from_signed(BigInt::from(plus) - BigInt::from(minus))
        .expect("path counts are nonnegative")
}

/// Same count by cell-by-cell dynamic programming over the band.
pub fn lattice_count_banded_brute(e: u64, nn: u64, band: BandSpec) -> Result<Count> {
    lattice_count_banded_brute_with_limit(e, nn, band, DEFAULT_LATTICE_LIMIT)
}

pub fn lattice_count_banded_brute_with_limit(
    e: u64,
    nn: u64,
    band: BandSpec,
    limit: u64,
) -> Result<Count> {
    if e + nn > limit {
        return Err(Error::SizeLimit {
            what: "e + nn",
            value: e + nn,
            limit,
        });
    }
    let (w, h) = (e as usize + 1, nn as usize + 1);
    let mut grid = vec![BigUint::zero(); w * h];
    for x in 0..w {
        for y in 0..h {
            if !band.contains(x as u64, y as u64) {
                continue;
            }
            let v = if x == 0 && y == 0 {
                BigUint::from(1u8)
            } else {
                let mut v = BigUint::zero();
                if x > 0 {
                    v += &grid[(x - 1) * h + y];
                }
                if y > 0 {
                    v += &grid[x * h + y - 1];
                }
                v
            };
            grid[x * h + y] = v;
        }
    }
    Ok(Count::from(grid[w * h - 1].clone()))
}

/// Endpoints `(l, n-1-l)` of the band paths that encode `Hom^1(P_n, P_k)`,
/// from `l = ceil((n-1)/2)` to `min(floor((n+k)/2), n) - 1`.
pub fn hom1_lattice_endpoints(n: u32, k: u32) -> Vec<(u64, u64)> {
    assert!(
        n >= 1 && k >= 1,
        "hom1_lattice_endpoints needs n >= 1 and k >= 1"
    );
    let (n, k) = (n as i64, k as i64);
    let upper = ((n + k) / 2).min(n);
    (half_ceil(n - 1)..upper)
        .map(|l| (l as u64, (n - 1 - l) as u64))
        .collect()
}

/// `|Hom^1(P_n, P_k)|` as a sum of banded lattice-path counts.
///
/// # Panics
/// If `n == 0` or `k == 0`.
pub fn hom1_via_lattice(n: u32, k: u32) -> Count {
    let band = BandSpec::new(0, k as u64 - 1);
    hom1_lattice_endpoints(n, k)
        .into_iter()
        .map(|(e, nn)| lattice_count_banded(e, nn, band))
        .sum()
}

/// Encodes `f` with `f(1) = 1` as the word whose step `i` is East when
/// `f(i+1) = f(i) + 1` and North when `f(i+1) = f(i) - 1`.
pub fn encode_hom(f: &PathHom) -> Result<LatticeWord> {
    if f.image(1) != 1 {
        return Err(Error::Domain(format!(
            "only homomorphisms with f(1) = 1 are encoded (f(1) = {})",
            f.image(1)
        )));
    }
    Ok(f.images()
        .windows(2)
        .map(|w| if w[1] > w[0] { Step::East } else { Step::North })
        .collect())
}

/// Inverse of [`encode_hom`] into `P_k`.
pub fn decode_word(word: &LatticeWord, k: u32) -> Result<PathHom> {
    if k == 0 {
        return Err(Error::Domain(
            "the target path needs at least one vertex".into(),
        ));
    }
    let mut images = Vec::with_capacity(word.len() + 1);
    images.push(1u32);
    for (i, step) in word.steps().iter().enumerate() {
        let cur = *images.last().expect("nonempty");
        let next = match step {
            Step::East if cur < k => cur + 1,
            Step::North if cur > 1 => cur - 1,
            _ => {
                return Err(Error::BandViolation {
                    prefix_len: i + 1,
                    max_gap: k - 1,
                })
            }
        };
        images.push(next);
    }
    Ok(PathHom::from_valid(images, k))
}

/// Every word of length `len` whose prefixes all satisfy `0 <= #E - #N <= k - 1`,
/// North before East, which matches the lexicographic order of the decoded images.
pub fn band_words(len: usize, k: u32) -> Vec<LatticeWord> {
    fn extend(prefix: &mut Vec<Step>, gap: u32, len: usize, k: u32, out: &mut Vec<LatticeWord>) {
        if prefix.len() == len {
            out.push(LatticeWord::new(prefix.clone()));
            return;
        }
        if gap > 0 {
            prefix.push(Step::North);
            extend(prefix, gap - 1, len, k, out);
            prefix.pop();
        }
        if gap + 1 < k {
            prefix.push(Step::East);
            extend(prefix, gap + 1, len, k, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if k >= 1 {
        extend(&mut Vec::with_capacity(len), 0, len, k, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{enumerate_homs, hom_start_counts_dp};

    const FIGURE_IMAGES: [u32; 15] = [1, 2, 3, 2, 3, 4, 5, 4, 3, 4, 5, 6, 5, 6, 5];
    const FIGURE_WORD: &str = "EENEEENNEEENEN";

    #[test]
    fn free_counts() {
        assert_eq!(lattice_count_free(0, 0), 1u32);
        assert_eq!(lattice_count_free(2, 1), 3u32);
        assert_eq!(lattice_count_free(9, 5), 2002u32);
    }

    #[test]
    fn banded_examples() {
        assert_eq!(lattice_count_banded(1, 1, BandSpec::new(0, 1)), 1u32);
        assert_eq!(lattice_count_banded(3, 3, BandSpec::new(0, 2)), 4u32);
        assert_eq!(lattice_count_banded(0, 0, BandSpec::new(0, 0)), 1u32);
        // Blocks of EN / NE: 2^3 words keep |x - y| <= 1.
        assert_eq!(lattice_count_banded(3, 3, BandSpec::new(1, 1)), 8u32);
        assert_eq!(lattice_count_banded(5, 0, BandSpec::new(0, 3)), 0u32);
    }

    #[test]
    fn brute_examples() {
        assert_eq!(
            lattice_count_banded_brute(1, 1, BandSpec::new(0, 1)).unwrap(),
            1u32
        );
        assert_eq!(
            lattice_count_banded_brute(5, 0, BandSpec::new(0, 3)).unwrap(),
            0u32
        );
        assert_eq!(
            lattice_count_banded_brute(3, 3, BandSpec::new(1, 1)).unwrap(),
            8u32
        );
        assert!(matches!(
            lattice_count_banded_brute(20, 11, BandSpec::new(1, 1)),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn reflection_matches_grid() {
        for total in 0..=20u64 {
            for e in 0..=total {
                for t in 0..=8 {
                    for s in 0..=8 {
                        let band = BandSpec::new(t, s);
                        assert_eq!(
                            lattice_count_banded(e, total - e, band),
                            lattice_count_banded_brute(e, total - e, band).unwrap(),
                            "e={e} nn={} t={t} s={s}",
                            total - e
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn one_barrier_and_ballot() {
        for e in 0..10u64 {
            for t in 0..4u64 {
                for nn in 0..=e + t {
                    let expected = binom(e + nn, e as i64).to_bigint()
                        - binom(e + nn, (e + t + 1) as i64).to_bigint();
                    assert_eq!(
                        lattice_count_banded(e, nn, BandSpec::new(t, e + 1)).to_bigint(),
                        expected
                    );
                }
            }
        }
        let catalan = [
            1u32, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012,
        ];
        for (m, c) in catalan.iter().enumerate() {
            let m = m as u64;
            assert_eq!(lattice_count_banded(m, m, BandSpec::new(0, m)), *c);
            assert_eq!(
                lattice_count_banded_brute(m, m, BandSpec::new(0, m)).unwrap(),
                *c
            );
        }
    }

    #[test]
    fn hom1_via_lattice_examples() {
        assert_eq!(hom1_via_lattice(2, 3), 1u32);
        assert_eq!(hom1_via_lattice(5, 3), 4u32);
        assert_eq!(hom1_via_lattice(1, 4), 1u32);
        let ends = hom1_lattice_endpoints(15, 11);
        assert_eq!(ends.first(), Some(&(7, 7)));
        assert_eq!(ends.last(), Some(&(12, 2)));
        assert_eq!(ends.len(), 6);
        for n in 1..=25 {
            for k in 1..=25 {
                assert_eq!(&hom1_via_lattice(n, k), hom_start_counts_dp(n, k).get(1));
            }
        }
    }

    #[test]
    fn figure_example_round_trip() {
        let f = PathHom::new(FIGURE_IMAGES.to_vec(), 11).unwrap();
        let w = encode_hom(&f).unwrap();
        assert_eq!(w.to_string(), FIGURE_WORD);
        assert_eq!(w.endpoint(), (9, 5));
        assert_eq!(decode_word(&w, 11).unwrap(), f);
    }

    #[test]
    fn small_encodings() {
        let single = PathHom::new(vec![1], 4).unwrap();
        assert!(encode_hom(&single).unwrap().is_empty());
        assert_eq!(decode_word(&LatticeWord::default(), 4).unwrap(), single);
        let up_down = PathHom::new(vec![1, 2, 1], 3).unwrap();
        assert_eq!(encode_hom(&up_down).unwrap().to_string(), "EN");
        assert_eq!(decode_word(&"EN".parse().unwrap(), 3).unwrap(), up_down);
        assert!(encode_hom(&PathHom::new(vec![2, 1], 2).unwrap()).is_err());
    }

    #[test]
    fn decode_reports_first_bad_prefix() {
        assert_eq!(
            decode_word(&"N".parse().unwrap(), 3),
            Err(Error::BandViolation {
                prefix_len: 1,
                max_gap: 2
            })
        );
        assert_eq!(
            decode_word(&"EENEE".parse().unwrap(), 3),
            Err(Error::BandViolation {
                prefix_len: 5,
                max_gap: 2
            })
        );
    }

    #[test]
    fn bijection_small() {
        for n in 1..=10u32 {
            for k in 1..=10u32 {
                let encoded: Vec<LatticeWord> = enumerate_homs(n, k, Some(1))
                    .map(|f| encode_hom(&f).unwrap())
                    .collect();
                assert_eq!(encoded, band_words(n as usize - 1, k), "n={n} k={k}");
            }
        }
    }
}
