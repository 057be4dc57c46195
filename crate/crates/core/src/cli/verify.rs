//! Cross-checks every closed form against the oracles over a bounded grid.

use std::collections::HashMap;
use std::io::Write;

use super::record::{write_records, Format, ResultRecord};
use super::{CommandError, Limits};
use crate::closedform::{
    check_binomial_identities, end_count_closed, epi_count_ie, hom1_count_closed, hom_count_closed,
    hom_j_count_aw, lk_closed, lk_degree_check, lk_telescope, lk_via_hom, HomBackend,
};
use crate::congruence::{
    arrangements, epispectrum_brute_with_limit, epispectrum_formula, induced_partitions,
    kernel_partition, shift_normalize,
};
use crate::count::{binom, Count};
use crate::epispectrum::Epispectrum;
use crate::lattice::{
    band_words, decode_word, encode_hom, hom1_via_lattice, lattice_count_banded,
    lattice_count_banded_brute_with_limit, BandSpec,
};
use crate::oracle::{
    enumerate_homs, epi_count_brute_with_limit, hom_count_dp, hom_start_counts_dp,
};
use crate::partition::SetPartitions;

const IDENTITY_M_MAX: u64 = 500;

#[derive(Debug, Default)]
struct Checker {
    checks: u64,
    failure: Option<String>,
}

impl Checker {
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(describe());
        }
    }

    fn failed(&self) -> bool {
        self.failure.is_some()
    }
}

#[derive(Debug)]
pub(crate) struct SuiteOutcome {
    pub name: &'static str,
    pub checks: u64,
    pub failure: Option<String>,
}

fn suite(name: &'static str, body: impl FnOnce(&mut Checker)) -> SuiteOutcome {
    let mut c = Checker::default();
    body(&mut c);
    SuiteOutcome {
        name,
        checks: c.checks,
        failure: c.failure,
    }
}

/// Smallest `n0` with `l_k(n) = C(n-1, ceil(k/2)-1) + C(n-1, floor(k/2)-1)` for all
/// `n0 <= n <= max_n`, measured on brute-force epispectra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Threshold {
    pub k: u32,
    pub smallest_n: Option<u32>,
}

fn polynomial_value(n: u32, k: u32) -> Count {
    let k = k as i64;
    binom(n as u64 - 1, (k + 1) / 2 - 1) + binom(n as u64 - 1, k / 2 - 1)
}

fn thresholds(spectra: &HashMap<u32, Epispectrum>, max_n: u32, max_k: u32) -> Vec<Threshold> {
    (1..=max_k)
        .filter(|&k| 2 * k <= max_n && spectra.contains_key(&(2 * k)))
        .map(|k| {
            let mut smallest = None;
            for n in ((k + 1)..=max_n).rev() {
                let Some(spec) = spectra.get(&n) else {
                    continue;
                };
                if spec.get(k as usize) == Some(&polynomial_value(n, k)) {
                    smallest = Some(n);
                } else {
                    break;
                }
            }
            Threshold {
                k,
                smallest_n: smallest,
            }
        })
        .collect()
}

pub(crate) fn suites(
    max_n: u32,
    max_k: u32,
    limits: Limits,
) -> (Vec<SuiteOutcome>, Vec<Threshold>) {
    let enum_n = max_n.min(12).min(limits.enum_n);
    let enum_k = max_k.min(12);
    let endo_n = max_n.min(13).min(limits.endo_n);
    let mut out = Vec::new();

    out.push(suite("binomial-pascal-symmetry", |c| {
        for a in 1..=64u64 {
            for b in 0..=a as i64 {
                c.check(binom(a, b) == binom(a, a as i64 - b), || {
                    format!("C({a},{b}) symmetry")
                });
                if b >= 1 && (b as u64) < a {
                    c.check(binom(a, b) == binom(a - 1, b - 1) + binom(a - 1, b), || {
                        format!("Pascal rule at C({a},{b})")
                    });
                }
            }
        }
    }));

    out.push(suite("dp-recurrence-and-symmetry", |c| {
        for k in 1..=max_k {
            for i in 1..max_n {
                let prev = hom_start_counts_dp(i, k);
                let counts = prev.counts();
                let symmetric =
                    (0..counts.len()).all(|j| counts[j] == counts[counts.len() - 1 - j]);
                c.check(symmetric, || {
                    format!("start vector of ({i},{k}) is not symmetric")
                });
                if k >= 2 {
                    let lhs = hom_count_dp(i + 1, k).to_bigint();
                    let rhs = prev.total().to_bigint() * 2 - prev.get(1).to_bigint() * 2;
                    c.check(lhs == rhs, || {
                        format!("doubling recurrence at i={i}, k={k}")
                    });
                }
            }
        }
    }));

    out.push(suite("enumeration-vs-dp", |c| {
        for n in 1..=enum_n {
            for k in 1..=enum_k {
                let count = enumerate_homs(n, k, None).count();
                c.check(hom_count_dp(n, k) == count, || {
                    format!("|Hom({n},{k})| enumeration")
                });
            }
        }
    }));

    out.push(suite("hom-closed-vs-dp", |c| {
        for n in 1..=max_n {
            for k in 1..=max_k {
                c.check(hom_count_closed(n, k) == hom_count_dp(n, k), || {
                    format!("hom_count_closed({n},{k})")
                });
            }
        }
    }));

    out.push(suite("start-vertex-formulas-vs-dp", |c| {
        for n in 1..=max_n {
            for k in 1..=max_k {
                let dp = hom_start_counts_dp(n, k);
                c.check(&hom1_count_closed(n, k) == dp.get(1), || {
                    format!("hom1_count_closed({n},{k})")
                });
                c.check(&hom1_via_lattice(n, k) == dp.get(1), || {
                    format!("hom1_via_lattice({n},{k})")
                });
                for j in 1..=k {
                    c.check(&hom_j_count_aw(n, k, j) == dp.get(j as usize), || {
                        format!("hom_j_count_aw({n},{k},{j})")
                    });
                }
            }
        }
    }));

    out.push(suite("end-closed-vs-dp", |c| {
        for n in 1..=max_n {
            c.check(end_count_closed(n) == hom_count_dp(n, n), || {
                format!("end_count_closed({n})")
            });
        }
    }));

    out.push(suite("epi-inclusion-exclusion-vs-brute", |c| {
        for n in 1..=enum_n {
            for k in 1..=n {
                let brute = epi_count_brute_with_limit(n, k, limits.enum_n);
                let closed = epi_count_ie(n, k, HomBackend::ClosedForm);
                let dp = epi_count_ie(n, k, HomBackend::Dp);
                c.check(brute.as_ref() == Ok(&closed) && closed == dp, || {
                    format!("epi({n},{k}): brute {brute:?}, closed {closed}, dp {dp}")
                });
            }
        }
    }));

    out.push(suite("lk-inclusion-exclusion-vs-polynomial", |c| {
        for k in 1..=max_k {
            for n in (2 * k).max(2)..=max_n {
                let via = lk_via_hom(n, k, HomBackend::ClosedForm);
                let closed = lk_closed(n, k);
                c.check(via.is_ok() && via == closed, || {
                    format!("l_{k}({n}): {via:?} vs {closed:?}")
                });
            }
        }
    }));

    out.push(suite("lk-telescoping", |c| {
        for k in 1..=max_k {
            for n in (2 * k).max(2)..=max_n {
                match (lk_telescope(n, k), lk_closed(n, k)) {
                    (Ok(t), Ok(closed)) => {
                        c.check(
                            t.telescopes() && t.total == *t.d_last() && t.total == closed,
                            || format!("telescoping l_{k}({n})"),
                        );
                    }
                    (t, closed) => c.check(false, || format!("l_{k}({n}): {t:?} / {closed:?}")),
                }
            }
        }
    }));

    out.push(suite("lk-polynomial-degree", |c| {
        for k in 1..=max_k.min(10) {
            let d = lk_degree_check(k);
            c.check(matches!(&d, Ok(d) if d.vanishes && d.exact_degree), || {
                format!("{d:?}")
            });
        }
    }));

    out.push(suite("lattice-reflection-vs-grid", |c| {
        let total_max = (max_n as u64).min(limits.lattice);
        let band_max = (max_k as u64).min(8);
        for total in 0..=total_max {
            for e in 0..=total {
                for t in 0..=band_max {
                    for s in 0..=band_max {
                        let band = BandSpec::new(t, s);
                        let nn = total - e;
                        let brute =
                            lattice_count_banded_brute_with_limit(e, nn, band, limits.lattice);
                        c.check(brute == Ok(lattice_count_banded(e, nn, band)), || {
                            format!("L({e},{nn};{t},{s})")
                        });
                    }
                }
            }
        }
    }));

    out.push(suite("lattice-bijection", |c| {
        for n in 1..=max_n.min(10) {
            for k in 1..=max_k.min(10) {
                let mut words = Vec::new();
                for f in enumerate_homs(n, k, Some(1)) {
                    let round_trip = encode_hom(&f).and_then(|w| {
                        let back = decode_word(&w, k)?;
                        Ok((w, back))
                    });
                    match round_trip {
                        Ok((w, back)) => {
                            c.check(back == f, || format!("decode(encode({f})) != {f}"));
                            words.push(w);
                        }
                        Err(e) => c.check(false, || format!("encoding {f}: {e}")),
                    }
                }
                c.check(words == band_words(n as usize - 1, k), || {
                    format!("encoded Hom^1({n},{k}) is not the set of band words")
                });
            }
        }
    }));

    out.push(suite("central-binomial-identities", |c| {
        let report = check_binomial_identities(IDENTITY_M_MAX);
        c.check(report.passed(), || format!("{:?}", report.first_failure));
    }));

    let mut spectra = HashMap::new();
    out.push(suite("epispectrum-brute-vs-formula", |c| {
        for n in 2..=endo_n {
            let brute = epispectrum_brute_with_limit(n, limits.endo_n);
            let formula = epispectrum_formula(n);
            c.check(brute.is_ok() && brute == formula, || {
                format!("epispectrum({n})")
            });
            if let Ok(b) = brute {
                for k in 1..n {
                    if n >= 2 * k {
                        c.check(lk_closed(n, k).ok().as_ref() == b.get(k as usize), || {
                            format!("brute l_{k}({n}) vs polynomial")
                        });
                    }
                }
                spectra.insert(n, b);
            }
        }
    }));

    out.push(suite("epimorphism-factor-two", |c| {
        for n in 2..=enum_n.min(limits.endo_n) {
            let Ok(partitions) = induced_partitions(n, limits.endo_n) else {
                c.check(false, || format!("could not enumerate End(P_{n})"));
                continue;
            };
            for k in 1..n {
                let blocks = (n - k + 1) as usize;
                let classes = partitions
                    .iter()
                    .filter(|p| p.block_count() == blocks)
                    .count();
                let epi = epi_count_brute_with_limit(n, n - k + 1, limits.enum_n);
                c.check(epi == Ok(Count::from(2 * classes)), || {
                    format!("n={n}, k={k}: 2*{classes} vs {epi:?}")
                });
            }
        }
    }));

    out.push(suite("arrangement-reconstruction", |c| {
        for n in 2..=max_n.min(11).min(limits.endo_n) {
            let Ok(observed) = induced_partitions(n, limits.endo_n) else {
                c.check(false, || format!("could not enumerate End(P_{n})"));
                continue;
            };
            let mut accepted = 0usize;
            for p in SetPartitions::new(n as usize, true) {
                let r = arrangements(&p);
                c.check(r.is_valid() == observed.contains(&p), || {
                    format!("arrangements({p})")
                });
                if r.is_valid() {
                    accepted += 1;
                    let reversed: Vec<usize> = r.orderings[0].iter().rev().copied().collect();
                    c.check(r.orderings[1] == reversed, || {
                        format!("orderings of {p} not mirrored")
                    });
                    for w in &r.witnesses {
                        c.check(w.is_surjective() && kernel_partition(w) == p, || {
                            format!("witness {w} for {p}")
                        });
                    }
                }
                if c.failed() {
                    return;
                }
            }
            c.check(accepted == observed.len(), || {
                format!("n={n}: accepted {accepted} of {}", observed.len())
            });
        }
    }));

    out.push(suite("shift-normalization", |c| {
        for n in 1..=max_n.min(10) {
            for f in enumerate_homs(n, n, None) {
                let g = shift_normalize(&f);
                c.check(
                    g.is_surjective() && kernel_partition(&g) == kernel_partition(&f),
                    || format!("normalization of {f}"),
                );
            }
        }
    }));

    let table = thresholds(&spectra, endo_n, max_k);
    (out, table)
}

pub(crate) fn run(
    max_n: u32,
    max_k: u32,
    limits: Limits,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), CommandError> {
    if max_n == 0 || max_k == 0 {
        return Err(CommandError::Lib(crate::error::Error::Domain(
            "--max-n and --max-k must be at least 1".into(),
        )));
    }
    let (outcomes, table) = suites(max_n, max_k, limits);
    let failed: Vec<&SuiteOutcome> = outcomes.iter().filter(|o| o.failure.is_some()).collect();

    match format {
        Format::Plain => {
            for o in &outcomes {
                match &o.failure {
                    None => writeln!(out, "PASS {:<40} {} checks", o.name, o.checks)?,
                    Some(why) => writeln!(out, "FAIL {:<40} {why}", o.name)?,
                }
            }
            if !table.is_empty() {
                writeln!(out)?;
                writeln!(
                    out,
                    "smallest n from which brute force matches the polynomial l_k(n)"
                )?;
                writeln!(out, "{:>4} {:>12} {:>4}", "k", "smallest n", "2k")?;
                for t in &table {
                    let n0 = t
                        .smallest_n
                        .map_or_else(|| "-".to_string(), |n| n.to_string());
                    writeln!(out, "{:>4} {:>12} {:>4}", t.k, n0, 2 * t.k)?;
                }
            }
        }
        Format::Csv | Format::Json => {
            let params = [("max_n", max_n as i64), ("max_k", max_k as i64)];
            let mut records: Vec<ResultRecord> = outcomes
                .iter()
                .map(|o| {
                    let value = match &o.failure {
                        None => format!("pass ({} checks)", o.checks),
                        Some(why) => format!("fail: {why}"),
                    };
                    ResultRecord::new("verify", &params, o.name, value, 0)
                })
                .collect();
            records.extend(table.iter().map(|t| {
                let value = t
                    .smallest_n
                    .map_or_else(|| "-".to_string(), |n| n.to_string());
                ResultRecord::new("threshold", &[("k", t.k as i64)], "brute", value, 0)
            }));
            write_records(&records, format, out)?;
        }
    }

    if failed.is_empty() {
        Ok(())
    } else {
        Err(CommandError::Mismatch(format!(
            "{} suite(s) failed: {}",
            failed.len(),
            failed.iter().map(|o| o.name).collect::<Vec<_>>().join(", ")
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_run_passes() {
        let (outcomes, _) = suites(2, 2, Limits::default());
        for o in outcomes {
            assert!(o.failure.is_none(), "{o:?}");
        }
    }

    #[test]
    fn thresholds_are_2k_on_small_range() {
        let (outcomes, table) = suites(10, 5, Limits::default());
        assert!(outcomes.iter().all(|o| o.failure.is_none()));
        for t in table {
            assert!(t.smallest_n.is_some_and(|n| n <= 2 * t.k), "{t:?}");
        }
    }
}
