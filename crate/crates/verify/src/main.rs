use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sptk_core::bijection::RuleId;
use sptk_core::qseries::{genfun, poly_family, theorem_rhs, GenFlavor, PolyFamily, Series, Theorem};
use sptk_core::spt::{count, Family, SptQuery};
use sptk_verify::config::{caps_from_env, OutputFormat, RunConfig};
use sptk_verify::report::{render, IdentityReport};
use sptk_verify::suite::{self, summarise};
use sptk_verify::{check_identity, emit_table, verify_all, write_output, TableKind, VerifyError};

#[derive(Parser)]
#[command(name = "sptk", version, about = "Exact checks of smallest-part partition identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Bounds {
    #[arg(long)]
    k_max: Option<u32>,
    #[arg(long)]
    n_max: Option<u32>,
    #[arg(long)]
    t_max: Option<u32>,
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
    /// Write here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Check identities or bijections; exits 1 if anything fails.
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
    /// Count a class by enumeration.
    Count {
        #[arg(value_enum, ignore_case = true)]
        family: CountFamily,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
    },
    /// Print a table of counters.
    Table {
        #[arg(value_enum, ignore_case = true)]
        kind: TableKind,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Print the coefficients c_0..c_N of a series, comma separated.
    Series {
        /// SPTKD, SPTKD_SIGNED, SPTKDO, SPTKDO_SIGNED, THM1..THM3 or P, T, V, W.
        name: String,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 60)]
        trunc: usize,
    },
}

#[derive(Subcommand)]
enum VerifyTarget {
    All {
        #[command(flatten)]
        bounds: Bounds,
    },
    Identity {
        id: String,
        #[command(flatten)]
        bounds: Bounds,
    },
    Bijection {
        rule: String,
        #[arg(long)]
        k: u32,
        /// A single level (n for THM1A, t for L1-L4); all admissible levels if absent.
        #[arg(long)]
        n: Option<u32>,
        #[command(flatten)]
        bounds: Bounds,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CountFamily {
    #[value(name = "SPTKD")]
    Sptkd,
    #[value(name = "SPTKDO")]
    Sptkdo,
}

impl Bounds {
    fn config(&self) -> Result<RunConfig, VerifyError> {
        let caps = caps_from_env()?;
        let d = RunConfig::defaults_within(caps);
        let n_max = self.n_max.unwrap_or(d.n_max);
        let t_max = self.t_max.unwrap_or_else(|| d.t_max.min(n_max.saturating_sub(1) / 2));
        let cfg = RunConfig { k_max: self.k_max.unwrap_or(d.k_max), n_max, t_max, format: self.format };
        cfg.validate(caps)?;
        Ok(cfg)
    }
}

fn finish(reports: &[IdentityReport], cfg: &RunConfig, out: Option<&PathBuf>) -> Result<ExitCode, VerifyError> {
    write_output(out.map(PathBuf::as_path), &render(reports, cfg)?)?;
    let ok = reports.iter().all(IdentityReport::passed);
    if !ok && out.is_some() {
        for msg in reports.iter().filter_map(|r| r.failure.as_deref()) {
            eprintln!("FAIL {msg}");
        }
    }
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn series(name: &str, k: u32, trunc: usize) -> Result<Series, VerifyError> {
    let upper = name.to_ascii_uppercase();
    if let Some(f) = GenFlavor::ALL.into_iter().find(|f| f.name() == upper) {
        return Ok(genfun(f, k, trunc)?);
    }
    if let Some(t) = Theorem::ALL.into_iter().find(|t| t.name() == upper) {
        return Ok(theorem_rhs(t, k, trunc)?);
    }
    let family = match upper.as_str() {
        "P" => PolyFamily::P,
        "T" => PolyFamily::T,
        "V" => PolyFamily::V,
        "W" => PolyFamily::W,
        _ => return Err(VerifyError::Config(format!("unknown series {name:?}"))),
    };
    Ok(poly_family(family, k, trunc)?)
}

fn run(cli: Cli) -> Result<ExitCode, VerifyError> {
    match cli.command {
        Command::Verify { target } => match target {
            VerifyTarget::All { bounds } => {
                let cfg = bounds.config()?;
                finish(&verify_all(&cfg)?, &cfg, bounds.out.as_ref())
            }
            VerifyTarget::Identity { id, bounds } => {
                let cfg = bounds.config()?;
                finish(&[check_identity(&id, &cfg)?], &cfg, bounds.out.as_ref())
            }
            VerifyTarget::Bijection { rule, k, n, bounds } => {
                let cfg = bounds.config()?;
                let id = RuleId::parse(&rule).ok_or_else(|| {
                    let known: Vec<&str> = RuleId::ALL.iter().map(|r| r.name()).collect();
                    VerifyError::Config(format!("unknown rule {rule:?}; known rules: {}", known.join(", ")))
                })?;
                let start = std::time::Instant::now();
                let reports = suite::run_rule(id, k, n, &cfg)?;
                let elapsed = start.elapsed().as_millis() as u64;
                let mut summary = summarise(&reports, &cfg, elapsed);
                summary.retain(|r| r.id == format!("BIJ-{}", id.name()));
                summary[0].params = [("k".to_string(), k), ("levels".to_string(), reports.len() as u32)].into();
                finish(&summary, &cfg, bounds.out.as_ref())
            }
        },
        Command::Count { family, k, n } => {
            let family = match family {
                CountFamily::Sptkd => Family::D,
                CountFamily::Sptkdo => Family::Do,
            };
            let q = SptQuery::with_caps(family, k, n, caps_from_env()?)?;
            let b = count(&q);
            println!("family={} k={k} n={n} total={} even_t={} odd_t={} signed={}", family.name(), b.total, b.even_t, b.odd_t, b.signed);
            Ok(ExitCode::SUCCESS)
        }
        Command::Table { kind, bounds } => {
            let cfg = bounds.config()?;
            write_output(bounds.out.as_deref(), &emit_table(kind, &cfg)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Series { name, k, trunc } => {
            let s = series(&name, k, trunc)?;
            let coeffs: Vec<String> = (0..=s.truncation()).map(|i| s.coeff(i).to_string()).collect();
            println!("{}", coeffs.join(","));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
