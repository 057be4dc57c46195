//! Timing of the evaluation strategies over an `(n, k)` grid.

use std::collections::BTreeMap;
use std::io::Write;

use super::record::{write_records, Format, ResultRecord};
use super::{epi_by, hom_by, lk_by, lk_default_method, timed, CommandError, Limits};
use crate::error::Error;

fn parse_list(text: &str, flag: &str) -> Result<Vec<u32>, CommandError> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u32>()
                .map_err(|e| CommandError::Usage(format!("--{flag}: bad value {t:?}: {e}")))
        })
        .collect()
}

/// Methods timed for one cell; enumeration only where it fits the limit.
fn methods(op: &str, n: u32, k: u32, limits: Limits) -> Vec<&'static str> {
    match op {
        "hom" | "epi" => {
            let mut m = vec!["closed", "dp"];
            if n <= limits.enum_n {
                m.push("brute");
            }
            m
        }
        "lk" => {
            let mut m = vec![lk_default_method(n, k), "dp"];
            if n <= limits.endo_n {
                m.push("brute");
            }
            m
        }
        _ => Vec::new(),
    }
}

fn applicable(op: &str, n: u32, k: u32) -> bool {
    match op {
        "hom" | "epi" => n >= 1 && k >= 1,
        "lk" => n >= 2 && k >= 1 && k < n,
        _ => false,
    }
}

pub(crate) fn run(
    n_list: &str,
    k_list: Option<&str>,
    ops: &str,
    limits: Limits,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), CommandError> {
    let ns = parse_list(n_list, "n")?;
    let ks = k_list.map(|k| parse_list(k, "k")).transpose()?;
    let ops: Vec<&str> = ops
        .split(',')
        .map(str::trim)
        .filter(|o| !o.is_empty())
        .collect();
    if let Some(bad) = ops.iter().find(|o| !["hom", "epi", "lk"].contains(o)) {
        return Err(CommandError::Usage(format!(
            "unknown bench op {bad:?}; expected hom, epi, lk"
        )));
    }

    let mut cells = Vec::new();
    for &n in &ns {
        match &ks {
            Some(ks) => cells.extend(ks.iter().map(|&k| (n, k))),
            None => cells.push((n, n)),
        }
    }

    let mut records = Vec::new();
    let mut mismatches = Vec::new();
    for op in &ops {
        for &(n, k) in &cells {
            if !applicable(op, n, k) {
                continue;
            }
            let mut values: BTreeMap<&str, String> = BTreeMap::new();
            for method in methods(op, n, k, limits) {
                let (value, ns) = timed(|| -> Result<_, Error> {
                    match *op {
                        "hom" => hom_by(method, n, k, limits),
                        "epi" => epi_by(method, n, k, limits),
                        _ => lk_by(method, n, k, limits),
                    }
                });
                let value = value?.to_string();
                values.insert(method, value.clone());
                records.push(ResultRecord::new(
                    op,
                    &[("n", n as i64), ("k", k as i64)],
                    method,
                    value,
                    ns,
                ));
            }
            let mut distinct: Vec<&String> = values.values().collect();
            distinct.dedup();
            if distinct.len() > 1 {
                mismatches.push(format!("{op}({n},{k}): {values:?}"));
            }
        }
    }
    records.sort_by_key(ResultRecord::sort_key);

    match format {
        Format::Plain => {
            if !records.is_empty() {
                writeln!(
                    out,
                    "{:<4} {:>6} {:>6} {:<10} {:>14}  value",
                    "op", "n", "k", "method", "elapsed_ns"
                )?;
            }
            for r in &records {
                writeln!(
                    out,
                    "{:<4} {:>6} {:>6} {:<10} {:>14}  {}",
                    r.op, r.params["n"], r.params["k"], r.method, r.elapsed_ns, r.value
                )?;
            }
        }
        _ => write_records(&records, format, out)?,
    }

    if mismatches.is_empty() {
        Ok(())
    } else {
        Err(CommandError::Mismatch(format!(
            "methods disagree: {}",
            mismatches.join("; ")
        )))
    }
}
