use std::collections::BTreeMap;
use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Json,
}

/// One evaluated quantity. `value` is always an exact decimal string (or the
/// text form of a word, image list or arrangement).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResultRecord {
    pub op: String,
    pub params: BTreeMap<String, i64>,
    pub method: String,
    pub value: String,
    pub elapsed_ns: u64,
}

impl ResultRecord {
    pub fn new(
        op: &str,
        params: &[(&str, i64)],
        method: &str,
        value: String,
        elapsed_ns: u64,
    ) -> Self {
        ResultRecord {
            op: op.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            method: method.to_string(),
            value,
            elapsed_ns,
        }
    }

    fn param(&self, name: &str) -> String {
        self.params
            .get(name)
            .map(i64::to_string)
            .unwrap_or_default()
    }

    /// Ordering key that ignores timing.
    pub fn sort_key(&self) -> (String, Vec<(String, i64)>, String) {
        (
            self.op.clone(),
            self.params.iter().map(|(k, v)| (k.clone(), *v)).collect(),
            self.method.clone(),
        )
    }
}

pub const CSV_HEADER: [&str; 7] = ["op", "n", "k", "j", "method", "value", "elapsed_ns"];

pub fn write_csv<W: Write>(records: &[ResultRecord], out: W) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in records {
        w.write_record([
            r.op.clone(),
            r.param("n"),
            r.param("k"),
            r.param("j"),
            r.method.clone(),
            r.value.clone(),
            r.elapsed_ns.to_string(),
        ])?;
    }
    w.flush()
}

pub fn write_json<W: Write>(records: &[ResultRecord], mut out: W) -> io::Result<()> {
    for r in records {
        serde_json::to_writer(&mut out, r)?;
        writeln!(out)?;
    }
    Ok(())
}

/// Plain output is the bare value, one record per line.
pub fn write_plain<W: Write>(records: &[ResultRecord], mut out: W) -> io::Result<()> {
    for r in records {
        writeln!(out, "{}", r.value)?;
    }
    Ok(())
}

pub fn write_records<W: Write>(records: &[ResultRecord], format: Format, out: W) -> io::Result<()> {
    match format {
        Format::Plain => write_plain(records, out),
        Format::Csv => write_csv(records, out),
        Format::Json => write_json(records, out),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> ResultRecord {
        ResultRecord::new("epispectrum", &[("n", 4)], "brute", "1,2,1".into(), 17)
    }

    #[test]
    fn json_shape() {
        let mut buf = Vec::new();
        write_json(&[sample()], &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "{\"op\":\"epispectrum\",\"params\":{\"n\":4},\"method\":\"brute\",\"value\":\"1,2,1\",\"elapsed_ns\":17}\n"
        );
    }

    #[test]
    fn csv_blanks_unused_params_and_quotes() {
        let mut buf = Vec::new();
        write_csv(&[sample()], &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "op,n,k,j,method,value,elapsed_ns\nepispectrum,4,,,brute,\"1,2,1\",17\n"
        );
    }
}
