//! `binomsum`: list, evaluate and verify central-binomial series identities.
//!
//! Exit codes: 0 success, 2 bad arguments or an out-of-domain series,
//! 3 a verification below its digit threshold.

use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use binomsum::exact::format_significant;
use binomsum::identities::{catalog, find, Family, IdentityRecord, SeriesSpec};
use binomsum::numeric::{reference_value, spot_recheck, verify, verify_all, VerificationReport};
use binomsum::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

const EXIT_USAGE: u8 = 2;
const EXIT_SHORTFALL: u8 = 3;

#[derive(Parser)]
#[command(
    name = "binomsum",
    version,
    about = "Closed forms of series with central binomial coefficients"
)]
struct Cli {
    /// Significant digits for values and verification
    #[arg(long, global = true, default_value_t = 40, value_parser = clap::value_parser!(u32).range(1..=10000))]
    digits: u32,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// List the catalog of identities
    List {
        /// Only entries of this family
        #[arg(long)]
        family: Option<String>,
    },
    /// Print the closed form and decimal value of one series
    Eval(SpecArgs),
    /// Check identities against the numeric oracles
    Verify {
        /// Every catalog entry, followed by a spot re-check at higher precision
        #[arg(long, conflicts_with = "id")]
        all: bool,
        /// One catalog entry, e.g. power:z=1,p=4
        #[arg(long)]
        id: Option<String>,
        /// Seed for choosing the spot re-check entries
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Reproduce the blocks of displayed example values
    Table,
}

/// A series given by family and parameters.
#[derive(Args, Default)]
struct SpecArgs {
    /// base, power, neg_even, excluded, weighted, weighted_sq, odd_weight, modulus_sq, genfunc
    #[arg(long)]
    family: Option<String>,
    /// Shift parameter, a rational "p/q"
    #[arg(long, allow_hyphen_values = true)]
    z: Option<String>,
    /// Extra power of the denominator
    #[arg(long)]
    p: Option<String>,
    #[arg(long)]
    m: Option<String>,
    /// Number of odd factors in the weight
    #[arg(long)]
    nu: Option<String>,
    /// Imaginary shift of the modulus family
    #[arg(long, allow_hyphen_values = true)]
    y: Option<String>,
    /// Argument of the generating function
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
}

impl SpecArgs {
    fn given(&self) -> bool {
        self.family.is_some()
    }

    fn spec(&self) -> Result<SeriesSpec, Error> {
        let family: Family = self
            .family
            .as_deref()
            .ok_or_else(|| Error::Parse("--family is required".into()))?
            .parse()?;
        SeriesSpec::from_params(family, |key| match key {
            "z" => self.z.clone(),
            "p" => self.p.clone(),
            "m" => self.m.clone(),
            "nu" => self.nu.clone(),
            "y" => self.y.clone(),
            "x" => self.x.clone(),
            _ => None,
        })
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

fn emit_json(v: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(v).expect("JSON values serialize")
    );
}

fn cmd_list(family: Option<&str>, format: Format) -> Result<(), Failure> {
    let family: Option<Family> = family.map(str::parse).transpose()?;
    let records: Vec<IdentityRecord> = catalog()
        .into_iter()
        .filter(|r| family.is_none_or(|f| r.spec.family() == f))
        .collect();
    match format {
        Format::Json => emit_json(&Value::Array(records.iter().map(|r| r.to_json()).collect())),
        Format::Text => {
            for r in &records {
                let closed = r
                    .closed_form
                    .as_ref()
                    .map_or_else(|| "(numeric)".to_string(), |c| c.to_string());
                print!("{:<24} {} = {}", r.id(), r.paper_eq, closed);
                if !r.note.is_empty() {
                    print!("  [{}]", r.note);
                }
                println!();
            }
        }
    }
    Ok(())
}

fn cmd_eval(args: &SpecArgs, digits: u32, format: Format) -> Result<(), Failure> {
    let record = IdentityRecord::new(args.spec()?)?;
    let value = reference_value(&record, digits)?;
    let shown = format_significant(value.value(), digits);
    match format {
        Format::Json => emit_json(&json!({
            "id": record.id(),
            "series": record.paper_eq,
            "closed_form": record.closed_form,
            "closed_form_text": record.closed_form.as_ref().map(|c| c.to_string()),
            "value": shown,
            "digits": digits,
        })),
        Format::Text => {
            println!("{}", record.paper_eq);
            match &record.closed_form {
                Some(c) => println!("  = {c}"),
                None => println!(
                    "  (no closed form in the constant field; value from the analytic reference)"
                ),
            }
            println!("  ≈ {shown}");
        }
    }
    Ok(())
}

fn report_line(r: &VerificationReport) -> String {
    let status = if r.passed { "PASS" } else { "FAIL" };
    let mut line = format!(
        "{status} {:<24} agreed {:>3}/{}",
        r.id, r.digits_agreed, r.digits_requested
    );
    if let Some(q) = r.quad_digits {
        line += &format!("  quad {q}");
    }
    if let Some(t) = r.tail_contains {
        line += if t { "  tail ok" } else { "  tail VIOLATED" };
    }
    line += &format!("  {:.0} ms", r.elapsed_ms);
    if let Some(e) = &r.error {
        line += &format!("  error: {e}");
    }
    line
}

fn cmd_verify(
    all: bool,
    id: Option<&str>,
    seed: Option<u64>,
    spec: &SpecArgs,
    digits: u32,
    format: Format,
) -> Result<(), Failure> {
    let (reports, spot, seed) = if all {
        let records = catalog();
        let seed = seed.unwrap_or_else(|| {
            SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map_or(0, |d| d.as_nanos() as u64)
        });
        let reports = verify_all(&records, digits);
        let spot = spot_recheck(&records, digits, seed);
        (reports, spot, Some(seed))
    } else if let Some(id) = id {
        let record = match find(id) {
            Some(r) => r,
            None => IdentityRecord::new(id.parse::<SeriesSpec>()?)?,
        };
        (vec![verify(&record, digits)], Vec::new(), None)
    } else if spec.given() {
        let record = IdentityRecord::new(spec.spec()?)?;
        (vec![verify(&record, digits)], Vec::new(), None)
    } else {
        return Err(Failure {
            code: EXIT_USAGE,
            message: "verify needs --all, --id ID, or --family with parameters".into(),
        });
    };
    match format {
        Format::Json => {
            let mut v =
                json!({ "reports": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>() });
            if let Some(seed) = seed {
                v["spot_seed"] = json!(seed);
                v["spot_checks"] = Value::Array(spot.iter().map(|r| r.to_json()).collect());
            }
            emit_json(&v);
        }
        Format::Text => {
            for r in &reports {
                println!("{}", report_line(r));
            }
            if let Some(seed) = seed {
                println!("spot re-check (seed {seed}):");
                for r in &spot {
                    println!("{}", report_line(r));
                }
            }
        }
    }
    let failed = reports.iter().chain(&spot).filter(|r| !r.passed).count();
    if failed > 0 {
        return Err(Failure {
            code: EXIT_SHORTFALL,
            message: format!("{failed} verification(s) below threshold"),
        });
    }
    Ok(())
}

/// The example blocks, each a heading and catalog ids.
fn table_blocks() -> Vec<(&'static str, Vec<String>)> {
    let ids = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    vec![
        (
            "Sums with the singular term omitted",
            (0..=5).map(|m| format!("excluded:m={m}")).collect(),
        ),
        (
            "Squared denominators",
            (0..=3).map(|z| format!("power:z={z},p=1")).collect(),
        ),
        (
            "Higher powers",
            ids(&[
                "power:z=0,p=2",
                "power:z=0,p=3",
                "power:z=0,p=4",
                "power:z=1,p=2",
                "power:z=1,p=3",
                "power:z=1,p=4",
            ]),
        ),
        (
            "Weighted sums",
            ids(&[
                "weighted:z=1,nu=1",
                "weighted:z=1,nu=2",
                "weighted_sq:z=1,nu=0",
                "weighted_sq:z=1,nu=1",
                "weighted_sq:z=1,nu=2",
                "odd_weight:z=1",
                "odd_weight:z=2",
                "odd_weight:z=3/2",
            ]),
        ),
    ]
}

fn cmd_table(digits: u32, format: Format) -> Result<(), Failure> {
    let mut blocks = Vec::new();
    for (title, ids) in table_blocks() {
        let mut rows = Vec::new();
        for id in ids {
            let record = find(&id).expect("table ids are catalog entries");
            let value = reference_value(&record, digits)?;
            let closed = record
                .closed_form
                .as_ref()
                .expect("table entries have closed forms");
            rows.push((
                record.id(),
                record.paper_eq.clone(),
                closed.to_string(),
                format_significant(value.value(), digits),
            ));
        }
        blocks.push((title, rows));
    }
    match format {
        Format::Json => emit_json(&Value::Array(
            blocks
                .iter()
                .map(|(title, rows)| {
                    json!({
                        "title": title,
                        "rows": rows.iter().map(|(id, series, closed, value)| json!({
                            "id": id, "series": series, "closed_form_text": closed, "value": value,
                        })).collect::<Vec<_>>(),
                    })
                })
                .collect(),
        )),
        Format::Text => {
            for (i, (title, rows)) in blocks.iter().enumerate() {
                if i > 0 {
                    println!();
                }
                println!("{title}");
                for (_, series, closed, value) in rows {
                    println!("  {series} = {closed}");
                    println!("      ≈ {value}");
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::List { family } => cmd_list(family.as_deref(), cli.format),
        Command::Eval(args) => cmd_eval(args, cli.digits, cli.format),
        Command::Verify {
            all,
            id,
            seed,
            spec,
        } => cmd_verify(*all, id.as_deref(), *seed, spec, cli.digits, cli.format),
        Command::Table => cmd_table(cli.digits, cli.format),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("binomsum: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
