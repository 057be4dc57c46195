//! The `pathhom` command line.
//!
//! Exit codes: 0 success, 1 verification or consistency failure,
//! 2 usage or domain error.

mod bench;
mod record;
mod verify;

use std::io::Write;
use std::time::Instant;

use clap::{Parser, Subcommand};

use crate::closedform::{
    end_count_closed, epi_count_ie, hom1_count_closed, hom_count_closed, hom_j_count_aw, lk_closed,
    lk_telescope, lk_via_hom, HomBackend,
};
use crate::congruence::{
    arrangements, epispectrum_brute_with_limit, epispectrum_formula_with, format_ordering,
    DEFAULT_ENDO_LIMIT,
};
use crate::count::Count;
use crate::error::Error;
use crate::homomorphism::PathHom;
use crate::lattice::{
    decode_word, encode_hom, hom1_via_lattice, lattice_count_banded,
    lattice_count_banded_brute_with_limit, lattice_count_free, BandSpec, DEFAULT_LATTICE_LIMIT,
};
use crate::oracle::{
    enumerate_homs, epi_count_brute_with_limit, hom_count_brute, hom_count_dp, hom_start_counts_dp,
    DEFAULT_ENUM_LIMIT,
};
use crate::partition::SetPartition;
use crate::word::LatticeWord;

pub use record::{write_records, Format, ResultRecord, CSV_HEADER};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "pathhom",
    version,
    about = "Exact homomorphism counts between paths"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Evaluation strategy (defaults to the closed form where it is proven).
    #[arg(long, global = true)]
    method: Option<String>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,

    /// Largest source path for enumeration-based methods.
    #[arg(long = "limit-enum", global = true)]
    limit_enum: Option<u32>,

    /// Largest e + nn for the lattice grid oracle.
    #[arg(long = "limit-lattice", global = true)]
    limit_lattice: Option<u64>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// |Hom(P_n, P_k)|
    Hom {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
    },
    /// Homomorphisms with f(1) = j
    Homj {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        j: u32,
    },
    /// Homomorphisms with f(1) = 1
    Hom1 {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
    },
    /// |End(P_n)|
    End {
        #[arg(long)]
        n: u32,
    },
    /// Surjective homomorphisms P_n -> P_k
    Epi {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
    },
    /// l_k(n), the number of induced partitions with n - k + 1 blocks
    Lk {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
    },
    /// (l_1(n), ..., l_(n-1)(n))
    Epispectrum {
        #[arg(long)]
        n: u32,
    },
    /// Lattice paths to (e, nn) between y = x + t and y = x - s
    Lattice {
        #[arg(long)]
        e: u64,
        #[arg(long)]
        nn: u64,
        #[arg(long, default_value_t = 0)]
        t: u64,
        #[arg(long, default_value_t = 0)]
        s: u64,
    },
    /// Lattice word of a homomorphism with f(1) = 1
    Encode {
        /// Comma-separated images, e.g. 1,2,3,2
        #[arg(long)]
        images: String,
        /// Target path size (defaults to the largest image)
        #[arg(long)]
        k: Option<u32>,
    },
    /// Homomorphism with f(1) = 1 encoded by an E/N word
    Decode {
        #[arg(long)]
        word: String,
        #[arg(long)]
        k: u32,
    },
    /// The two block arrangements realising a partition as an epimorphism kernel
    Arrange {
        /// Partition text form, e.g. {1,3}{2}
        #[arg(long)]
        partition: String,
    },
    /// Cross-check every formula against the oracles
    Verify {
        #[arg(long = "max-n", default_value_t = 12)]
        max_n: u32,
        #[arg(long = "max-k", default_value_t = 12)]
        max_k: u32,
    },
    /// Time closed form vs DP vs enumeration over a grid
    Bench {
        /// Comma-separated n values (may be empty)
        #[arg(long, default_value = "")]
        n: String,
        /// Comma-separated k values; k = n when omitted
        #[arg(long)]
        k: Option<String>,
        /// Comma-separated quantities among hom, epi, lk
        #[arg(long, default_value = "hom,epi,lk")]
        ops: String,
    },
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct Limits {
    pub enum_n: u32,
    pub endo_n: u32,
    pub lattice: u64,
}

impl Limits {
    fn from_flags(limit_enum: Option<u32>, limit_lattice: Option<u64>) -> Self {
        Limits {
            enum_n: limit_enum.unwrap_or(DEFAULT_ENUM_LIMIT),
            endo_n: limit_enum.unwrap_or(DEFAULT_ENDO_LIMIT),
            lattice: limit_lattice.unwrap_or(DEFAULT_LATTICE_LIMIT),
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits::from_flags(None, None)
    }
}

/// Failure of a single command.
#[derive(Debug)]
pub(crate) enum CommandError {
    Usage(String),
    Lib(Error),
    Mismatch(String),
}

impl From<Error> for CommandError {
    fn from(e: Error) -> Self {
        CommandError::Lib(e)
    }
}

impl From<std::io::Error> for CommandError {
    fn from(e: std::io::Error) -> Self {
        CommandError::Usage(format!("output error: {e}"))
    }
}

fn domain(msg: impl Into<String>) -> CommandError {
    CommandError::Lib(Error::Domain(msg.into()))
}

fn require_positive(name: &str, v: u32) -> Result<(), CommandError> {
    if v == 0 {
        Err(domain(format!("--{name} must be at least 1")))
    } else {
        Ok(())
    }
}

fn pick_method<'a>(
    requested: &'a Option<String>,
    default: &'a str,
    allowed: &[&str],
) -> Result<&'a str, CommandError> {
    let m = requested.as_deref().unwrap_or(default);
    if allowed.contains(&m) {
        Ok(m)
    } else {
        Err(CommandError::Usage(format!(
            "unknown method {m:?}; expected one of: {}",
            allowed.join(", ")
        )))
    }
}

/// Runs `f` and returns its value with the elapsed wall time.
pub(crate) fn timed<T>(f: impl FnOnce() -> T) -> (T, u64) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_nanos() as u64)
}

pub(crate) fn hom_by(method: &str, n: u32, k: u32, limits: Limits) -> Result<Count, Error> {
    match method {
        "closed" => Ok(hom_count_closed(n, k)),
        "dp" => Ok(hom_count_dp(n, k)),
        "brute" => hom_count_brute(n, k, limits.enum_n),
        other => unreachable!("method {other} was validated"),
    }
}

pub(crate) fn epi_by(method: &str, n: u32, k: u32, limits: Limits) -> Result<Count, Error> {
    match method {
        "closed" => Ok(epi_count_ie(n, k, HomBackend::ClosedForm)),
        "dp" => Ok(epi_count_ie(n, k, HomBackend::Dp)),
        "brute" => epi_count_brute_with_limit(n, k, limits.enum_n),
        other => unreachable!("method {other} was validated"),
    }
}

/// Default for `lk`: the polynomial form when `n >= 2k`, otherwise the
/// inclusion-exclusion over homomorphism counts.
pub(crate) fn lk_default_method(n: u32, k: u32) -> &'static str {
    if n as u64 >= 2 * k as u64 {
        "closed"
    } else {
        "hom"
    }
}

pub(crate) fn lk_by(method: &str, n: u32, k: u32, limits: Limits) -> Result<Count, Error> {
    if n < 2 || k == 0 || k >= n {
        return Err(Error::Domain(format!(
            "l_k(n) is defined for 1 <= k <= n-1 (got n={n}, k={k})"
        )));
    }
    match method {
        "closed" => lk_closed(n, k),
        "hom" => lk_via_hom(n, k, HomBackend::ClosedForm),
        "dp" => lk_via_hom(n, k, HomBackend::Dp),
        "telescope" => lk_telescope(n, k).map(|t| t.total),
        "brute" => epispectrum_brute_with_limit(n, limits.endo_n)
            .map(|e| e.get(k as usize).cloned().expect("1 <= k <= n-1")),
        other => unreachable!("method {other} was validated"),
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), CommandError> {
    let limits = Limits::from_flags(cli.limit_enum, cli.limit_lattice);
    let method = &cli.method;
    let record = match &cli.command {
        Command::Hom { n, k } => {
            require_positive("n", *n)?;
            let m = pick_method(method, "closed", &["closed", "dp", "brute"])?;
            let (v, ns) = if *k == 0 {
                (Ok(Count::zero()), 0)
            } else {
                timed(|| hom_by(m, *n, *k, limits))
            };
            ResultRecord::new(
                "hom",
                &[("n", *n as i64), ("k", *k as i64)],
                m,
                v?.to_string(),
                ns,
            )
        }
        Command::Homj { n, k, j } => {
            require_positive("n", *n)?;
            if !(1..=*k).contains(j) {
                return Err(domain(format!("--j must lie in [1..{k}]")));
            }
            let m = pick_method(method, "aw", &["aw", "dp", "brute"])?;
            let (v, ns) = timed(|| -> Result<Count, Error> {
                Ok(match m {
                    "aw" => hom_j_count_aw(*n, *k, *j),
                    "dp" => hom_start_counts_dp(*n, *k).get(*j as usize).clone(),
                    _ => {
                        if *n > limits.enum_n {
                            return Err(Error::SizeLimit {
                                what: "n",
                                value: *n as u64,
                                limit: limits.enum_n as u64,
                            });
                        }
                        Count::from(enumerate_homs(*n, *k, Some(*j)).count())
                    }
                })
            });
            ResultRecord::new(
                "homj",
                &[("n", *n as i64), ("k", *k as i64), ("j", *j as i64)],
                m,
                v?.to_string(),
                ns,
            )
        }
        Command::Hom1 { n, k } => {
            require_positive("n", *n)?;
            require_positive("k", *k)?;
            let m = pick_method(
                method,
                "closed",
                &["closed", "lattice", "aw", "dp", "brute"],
            )?;
            let (v, ns) = timed(|| -> Result<Count, Error> {
                Ok(match m {
                    "closed" => hom1_count_closed(*n, *k),
                    "lattice" => hom1_via_lattice(*n, *k),
                    "aw" => hom_j_count_aw(*n, *k, 1),
                    "dp" => hom_start_counts_dp(*n, *k).get(1).clone(),
                    _ => {
                        if *n > limits.enum_n {
                            return Err(Error::SizeLimit {
                                what: "n",
                                value: *n as u64,
                                limit: limits.enum_n as u64,
                            });
                        }
                        Count::from(enumerate_homs(*n, *k, Some(1)).count())
                    }
                })
            });
            ResultRecord::new(
                "hom1",
                &[("n", *n as i64), ("k", *k as i64)],
                m,
                v?.to_string(),
                ns,
            )
        }
        Command::End { n } => {
            require_positive("n", *n)?;
            let m = pick_method(method, "closed", &["closed", "dp", "brute"])?;
            let (v, ns) = timed(|| match m {
                "closed" => Ok(end_count_closed(*n)),
                other => hom_by(other, *n, *n, limits),
            });
            ResultRecord::new("end", &[("n", *n as i64)], m, v?.to_string(), ns)
        }
        Command::Epi { n, k } => {
            require_positive("n", *n)?;
            require_positive("k", *k)?;
            let m = pick_method(method, "closed", &["closed", "dp", "brute"])?;
            let (v, ns) = timed(|| epi_by(m, *n, *k, limits));
            ResultRecord::new(
                "epi",
                &[("n", *n as i64), ("k", *k as i64)],
                m,
                v?.to_string(),
                ns,
            )
        }
        Command::Lk { n, k } => {
            let m = pick_method(
                method,
                lk_default_method(*n, *k),
                &["closed", "hom", "dp", "telescope", "brute"],
            )?;
            let (v, ns) = timed(|| lk_by(m, *n, *k, limits));
            ResultRecord::new(
                "lk",
                &[("n", *n as i64), ("k", *k as i64)],
                m,
                v?.to_string(),
                ns,
            )
        }
        Command::Epispectrum { n } => {
            let m = pick_method(method, "formula", &["formula", "dp", "brute"])?;
            let (v, ns) = timed(|| match m {
                "formula" => epispectrum_formula_with(*n, HomBackend::ClosedForm),
                "dp" => epispectrum_formula_with(*n, HomBackend::Dp),
                _ => epispectrum_brute_with_limit(*n, limits.endo_n),
            });
            ResultRecord::new("epispectrum", &[("n", *n as i64)], m, v?.to_string(), ns)
        }
        Command::Lattice { e, nn, t, s } => {
            let m = pick_method(method, "reflection", &["reflection", "brute", "free"])?;
            let band = BandSpec::new(*t, *s);
            let (v, ns) = timed(|| match m {
                "reflection" => Ok(lattice_count_banded(*e, *nn, band)),
                "free" => Ok(lattice_count_free(*e, *nn)),
                _ => lattice_count_banded_brute_with_limit(*e, *nn, band, limits.lattice),
            });
            let params = [
                ("e", *e as i64),
                ("nn", *nn as i64),
                ("t", *t as i64),
                ("s", *s as i64),
            ];
            ResultRecord::new("lattice", &params, m, v?.to_string(), ns)
        }
        Command::Encode { images, k } => {
            let m = pick_method(method, "bijection", &["bijection"])?;
            let images = PathHom::parse_images(images)?;
            let k = k.unwrap_or_else(|| images.iter().copied().max().unwrap_or(1));
            let f = PathHom::new(images, k)?;
            let (w, ns) = timed(|| encode_hom(&f));
            let params = [("n", f.n() as i64), ("k", k as i64)];
            ResultRecord::new("encode", &params, m, w?.to_string(), ns)
        }
        Command::Decode { word, k } => {
            let m = pick_method(method, "bijection", &["bijection"])?;
            require_positive("k", *k)?;
            let w: LatticeWord = word.parse()?;
            let (f, ns) = timed(|| decode_word(&w, *k));
            let f = f?;
            let params = [("n", f.n() as i64), ("k", *k as i64)];
            ResultRecord::new("decode", &params, m, f.to_string(), ns)
        }
        Command::Arrange { partition } => {
            let m = pick_method(method, "reconstruct", &["reconstruct"])?;
            let p: SetPartition = partition.parse()?;
            let (r, ns) = timed(|| arrangements(&p));
            let value = match &r.failure {
                None => r
                    .orderings
                    .iter()
                    .map(|o| format_ordering(&p, o))
                    .collect::<Vec<_>>()
                    .join(" "),
                Some(reason) => format!("invalid: {reason}"),
            };
            let params = [("n", p.n() as i64), ("k", p.block_count() as i64)];
            ResultRecord::new("arrange", &params, m, value, ns)
        }
        Command::Verify { max_n, max_k } => {
            return verify::run(*max_n, *max_k, limits, cli.format, out);
        }
        Command::Bench { n, k, ops } => {
            return bench::run(n, k.as_deref(), ops, limits, cli.format, out);
        }
    };
    write_records(&[record], cli.format, out)?;
    Ok(())
}

/// Parses `args` (including the program name) and executes the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli, out) {
        Ok(()) => EXIT_OK,
        Err(CommandError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(CommandError::Lib(e @ Error::Internal(_))) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_MISMATCH
        }
        Err(CommandError::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
        Err(CommandError::Mismatch(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_MISMATCH
        }
    }
}
