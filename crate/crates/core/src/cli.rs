//! Command-line front end: `list`, `verify` and `expand`.

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::catalog::{self, IdentitySpec, VerificationReport};
use crate::error::Error;
use crate::fps::LaurentSeries;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUILDER: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "qverify", version, about = "Exact coefficient checks of q-series identities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Side {
    Lhs,
    Rhs,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List catalog entries.
    List {
        /// Only ids starting with this string.
        #[arg(long)]
        prefix: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check identities and report one record per (id, m).
    Verify(VerifyArgs),
    /// Print one side of an identity as `exponent:coefficient` pairs.
    Expand {
        #[arg(value_enum)]
        side: Side,
        id: String,
        #[arg(long, default_value_t = 0)]
        m: i64,
        #[arg(long, default_value_t = 50)]
        order: i64,
    },
}

#[derive(clap::Args, Debug, Clone)]
pub struct VerifyArgs {
    /// Comma-separated ids, or `all`.
    #[arg(long, default_value = "all", value_delimiter = ',')]
    pub ids: Vec<String>,
    #[arg(long)]
    pub m_min: Option<i64>,
    #[arg(long)]
    pub m_max: Option<i64>,
    #[arg(long, default_value_t = 50)]
    pub order: i64,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long)]
    pub fail_fast: bool,
    /// Adds `q^DEGREE` to the right side (to `b_m` for corollaries).
    #[arg(long, value_name = "DEGREE")]
    pub inject_fault: Option<i64>,
}

/// Parses `args` and runs the command; returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { write!(stdout, "{text}") } else { write!(stderr, "{text}") };
            return code;
        }
    };
    let outcome = match cli.command {
        Command::List { prefix, format } => cmd_list(prefix.as_deref(), format, stdout),
        Command::Verify(args) => cmd_verify(&args, stdout, stderr),
        Command::Expand { side, id, m, order } => cmd_expand(side, &id, m, order, stdout),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::UnknownIdentity(_) | Error::OutOfDomain { .. } | Error::InvalidArgument(_) => EXIT_USAGE,
        _ => EXIT_BUILDER,
    }
}

fn io_err(e: io::Error) -> Error {
    Error::InvalidArgument(format!("output: {e}"))
}

pub fn cmd_list(prefix: Option<&str>, format: Format, out: &mut dyn Write) -> Result<i32, Error> {
    let entries: Vec<&IdentitySpec> =
        catalog::list().iter().filter(|e| prefix.is_none_or(|p| e.id.starts_with(p))).collect();
    match format {
        Format::Json => {
            let s = serde_json::to_string_pretty(&entries).map_err(|e| Error::InvalidArgument(e.to_string()))?;
            writeln!(out, "{s}").map_err(io_err)?;
        }
        Format::Text => {
            for e in entries {
                let kind = format!("{:?}", e.kind).to_lowercase();
                writeln!(out, "{:<11} {:<10} {:<14} {} [{}]", e.id, kind, e.domain(), e.description, e.anchor)
                    .map_err(io_err)?;
            }
        }
    }
    Ok(EXIT_OK)
}

/// Expands the selection into `(id, m)` jobs in registry order.
pub fn plan(args: &VerifyArgs) -> Result<Vec<(&'static str, i64)>, Error> {
    if args.order < 1 {
        return Err(Error::InvalidArgument(format!("order must be positive, got {}", args.order)));
    }
    let specs: Vec<&'static IdentitySpec> = if args.ids.iter().any(|s| s == "all") {
        catalog::list().iter().collect()
    } else {
        let mut v = Vec::new();
        for id in &args.ids {
            v.push(catalog::lookup(id.trim())?);
        }
        v
    };
    let mut jobs = Vec::new();
    for spec in specs {
        let lo = args.m_min.unwrap_or(spec.m_min).max(spec.m_min);
        let hi = args.m_max.unwrap_or(spec.default_m_max);
        let hi = spec.m_max.map_or(hi, |top| hi.min(top));
        jobs.extend((lo..=hi).map(|m| (spec.id, m)));
    }
    Ok(jobs)
}

fn render(r: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string(r).expect("report serializes"),
        Format::Text => match &r.first_mismatch {
            None => format!("PASS {} m={} order={} ({} ms)", r.identity, r.m, r.order, r.elapsed_ms),
            Some(mm) => format!(
                "FAIL {} m={} order={} first mismatch at q^{}: lhs={} rhs={}",
                r.identity, r.m, r.order, mm.exponent, mm.lhs, mm.rhs
            ),
        },
    }
}

pub fn cmd_verify(args: &VerifyArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, Error> {
    let jobs = plan(args)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    let mut file;
    let out: &mut dyn Write = match &args.out {
        Some(path) => {
            file = File::create(path).map_err(io_err)?;
            &mut file
        }
        None => stdout,
    };
    let chunk = if args.fail_fast { args.jobs.max(1) } else { jobs.len().max(1) };
    let (mut failures, mut errors, mut passes) = (0usize, 0usize, 0usize);
    for batch in jobs.chunks(chunk) {
        let results: Vec<_> = pool.install(|| {
            batch
                .par_iter()
                .map(|&(id, m)| (id, m, catalog::verify_with_fault(id, m, args.order, args.inject_fault)))
                .collect()
        });
        for (id, m, res) in results {
            match res {
                Ok(r) => {
                    if r.pass {
                        passes += 1;
                    } else {
                        failures += 1;
                    }
                    writeln!(out, "{}", render(&r, args.format)).map_err(io_err)?;
                }
                Err(e) => {
                    errors += 1;
                    let _ = writeln!(stderr, "error: {id} m={m}: {e}");
                }
            }
            if args.fail_fast && failures + errors > 0 {
                break;
            }
        }
        if args.fail_fast && failures + errors > 0 {
            break;
        }
    }
    out.flush().map_err(io_err)?;
    let _ = writeln!(stderr, "{passes} passed, {failures} failed, {errors} errors");
    Ok(if errors > 0 {
        EXIT_BUILDER
    } else if failures > 0 {
        EXIT_MISMATCH
    } else {
        EXIT_OK
    })
}

/// `exponent:coefficient` pairs of the nonzero coefficients below `order`.
pub fn format_series(s: &LaurentSeries, order: i64) -> String {
    s.terms()
        .filter(|(e, c)| *e < order && !num_traits::Zero::is_zero(*c))
        .map(|(e, c)| format!("{e}:{c}"))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn cmd_expand(side: Side, id: &str, m: i64, order: i64, out: &mut dyn Write) -> Result<i32, Error> {
    if order < 0 {
        return Err(Error::InvalidArgument(format!("order must be non-negative, got {order}")));
    }
    if order == 0 {
        catalog::lookup(id)?;
        writeln!(out).map_err(io_err)?;
        return Ok(EXIT_OK);
    }
    let (l, r) = catalog::sides(id, m, order)?;
    let s = match side {
        Side::Lhs => l,
        Side::Rhs => r,
    };
    writeln!(out, "{}", format_series(&s, order)).map_err(io_err)?;
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("qverify").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn expand_rr() {
        let (code, out, _) = call(&["expand", "lhs", "c1", "--m", "0", "--order", "7"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "0:1 1:1 2:1 3:1 4:2 5:2 6:3");
        let (_, rhs, _) = call(&["expand", "rhs", "c1", "--m", "0", "--order", "7"]);
        assert_eq!(rhs, out);
        let (code, empty, _) = call(&["expand", "lhs", "c1", "--order", "0"]);
        assert_eq!((code, empty.trim()), (0, ""));
    }

    #[test]
    fn list_counts() {
        let (code, out, _) = call(&["list"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 43);
        let (_, cc, _) = call(&["list", "--prefix", "cc"]);
        assert_eq!(cc.lines().count(), 8);
        let (_, js, _) = call(&["list", "--format", "json"]);
        let v: serde_json::Value = serde_json::from_str(&js).unwrap();
        let arr = v.as_array().unwrap();
        assert_eq!(arr.len(), 43);
        assert_eq!(arr.iter().filter(|e| e["kind"] == "corollary").count(), 26);
        assert_eq!(v, serde_json::to_value(catalog::list()).unwrap());
    }

    #[test]
    fn verify_exit_codes() {
        let (code, out, _) = call(&["verify", "--ids", "c1,c4", "--m-max", "2", "--order", "30", "--format", "json"]);
        assert_eq!(code, EXIT_OK);
        let ids: Vec<(String, i64)> = out
            .lines()
            .map(|l| {
                let v: serde_json::Value = serde_json::from_str(l).unwrap();
                (v["identity"].as_str().unwrap().to_string(), v["m"].as_i64().unwrap())
            })
            .collect();
        let expect: Vec<(String, i64)> =
            [("c1", 0), ("c1", 1), ("c1", 2), ("c4", 0), ("c4", 1), ("c4", 2)].iter().map(|&(i, m)| (i.to_string(), m)).collect();
        assert_eq!(ids, expect);

        let (code, _, err) = call(&["verify", "--ids", "nope"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("nope"));
        assert_eq!(call(&["verify", "--order", "0"]).0, EXIT_USAGE);
        assert_eq!(call(&["verify", "--bogus"]).0, EXIT_USAGE);

        let (code, out, _) = call(&["verify", "--ids", "c1", "--m-min", "1", "--m-max", "1", "--inject-fault", "3", "--format", "json"]);
        assert_eq!(code, EXIT_MISMATCH);
        let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(v["pass"], false);
        assert!(v["first_mismatch"]["exponent"].is_i64());
    }

    #[test]
    fn parallel_output_is_ordered() {
        let base = ["verify", "--ids", "c2,c3,cm1", "--m-max", "3", "--order", "25", "--format", "json"];
        let strip = |s: String| {
            s.lines()
                .map(|l| {
                    let mut v: serde_json::Value = serde_json::from_str(l).unwrap();
                    v["elapsed_ms"] = 0.into();
                    v.to_string()
                })
                .collect::<Vec<_>>()
        };
        let (c1, o1, _) = call(&base);
        let mut par = base.to_vec();
        par.extend(["--jobs", "4"]);
        let (c4, o4, _) = call(&par);
        assert_eq!((c1, c4), (0, 0));
        assert_eq!(strip(o1), strip(o4));
    }

    #[test]
    fn fail_fast_stops_early() {
        let (code, out, _) = call(&["verify", "--ids", "c1,c4", "--fail-fast", "--inject-fault", "2", "--order", "20"]);
        assert_eq!(code, EXIT_MISMATCH);
        assert_eq!(out.lines().count(), 1);
    }

    #[test]
    fn out_file() {
        let path = std::env::temp_dir().join(format!("qverify-{}.ndjson", std::process::id()));
        let p = path.to_str().unwrap();
        let (code, out, _) = call(&["verify", "--ids", "A.13", "--format", "json", "--out", p]);
        assert_eq!(code, 0);
        assert!(out.is_empty());
        let text = std::fs::read_to_string(&path).unwrap();
        assert!(text.contains("\"identity\":\"A.13\""));
        let _ = std::fs::remove_file(&path);
    }
}
