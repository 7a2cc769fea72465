use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use sigpart_core::classes::{count_class, enumerate_class, ClassId};
use sigpart_core::harness::{SuiteBounds, Verifier};
use sigpart_core::{catalog, product_side, sum_side, IdentityId, MapId, Partition, SignedPartition, TruncatedSeries};

#[derive(Parser)]
#[command(
    name = "sigpart",
    version,
    about = "Signed partition identities: series, enumeration, bijections and cross-checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print coefficients of one side of an identity.
    Coeffs {
        #[arg(long)]
        identity: IdentityId,
        #[arg(long, value_enum, default_value_t = SeriesSide::Sum)]
        side: SeriesSide,
        /// Largest exponent. Defaults to 200 for series sides and 40 for counts.
        #[arg(long)]
        max: Option<usize>,
        #[arg(long, value_enum, default_value_t = CoeffFormat::List)]
        format: CoeffFormat,
        /// Signed class for `signed-count` when the identity has several.
        #[arg(long)]
        class: Option<ClassId>,
    },
    /// List the members of a class of weight n, one per line.
    Enumerate {
        #[arg(long)]
        class: ClassId,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, value_enum, default_value_t = ListFormat::Lines)]
        format: ListFormat,
    },
    /// Apply a bijection (or its inverse) to one partition.
    Biject {
        #[arg(long)]
        map: MapId,
        #[arg(long)]
        inverse: bool,
        /// Comma-separated parts; negatives mark negative parts.
        #[arg(long, allow_hyphen_values = true)]
        input: String,
    },
    /// Cross-check identities. Exit status 1 if anything fails.
    Verify {
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        identity: Option<IdentityId>,
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 40)]
        max_n: i64,
        #[arg(long, default_value_t = 60)]
        series_max: usize,
        #[arg(long, default_value_t = 35)]
        bijection_max: i64,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Print the identity catalog.
    Catalog {
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesSide {
    Sum,
    Product,
    OrdinaryCount,
    SignedCount,
}

#[derive(Clone, Copy, ValueEnum)]
enum CoeffFormat {
    /// One line, comma separated.
    List,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ListFormat {
    Lines,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

type Outcome = Result<ExitCode, String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let outcome = match cli.command {
        Command::Coeffs {
            identity,
            side,
            max,
            format,
            class,
        } => coeffs(&mut out, identity, side, max, format, class),
        Command::Enumerate { class, n, format } => enumerate(&mut out, class, n, format),
        Command::Biject { map, inverse, input } => biject(&mut out, map, inverse, &input),
        Command::Verify {
            identity,
            all: _,
            max_n,
            series_max,
            bijection_max,
            format,
        } => verify(
            &mut out,
            identity,
            SuiteBounds {
                count_max: max_n,
                series_order: series_max,
                bijection_max,
            },
            format,
        ),
        Command::Catalog { format } => print_catalog(&mut out, format),
    };
    // A closed pipe (`| head`) is not an error worth reporting.
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
    match outcome {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn coeffs(
    out: &mut String,
    id: IdentityId,
    side: SeriesSide,
    max: Option<usize>,
    format: CoeffFormat,
    class: Option<ClassId>,
) -> Outcome {
    let d = id.descriptor();
    let series = match side {
        SeriesSide::Sum => sum_side(id, max.unwrap_or(200)),
        SeriesSide::Product => product_side(id, max.unwrap_or(200)).map_err(|e| e.to_string())?,
        SeriesSide::OrdinaryCount => counts(d.ordinary, 0, max.unwrap_or(40))?,
        SeriesSide::SignedCount => {
            let class = match class {
                Some(c) if d.signed.contains(&c) => c,
                Some(c) => {
                    let valid: Vec<&str> = d.signed.iter().map(|c| c.name()).collect();
                    return Err(format!(
                        "{c} is not a signed class of {id}; valid: {}",
                        valid.join(", ")
                    ));
                }
                None => d.signed[0],
            };
            counts(class, d.index_offset, max.unwrap_or(40))?
        }
    };
    match format {
        CoeffFormat::List => {
            let line: Vec<String> = series.coefficients().iter().map(|c| c.to_string()).collect();
            writeln!(out, "{}", line.join(",")).expect("writing to a String");
        }
        CoeffFormat::Csv => out.push_str(&series.to_csv()),
        CoeffFormat::Json => writeln!(out, "{}", series.to_json()).expect("writing to a String"),
    }
    Ok(ExitCode::SUCCESS)
}

fn counts(class: ClassId, offset: i64, max: usize) -> Result<TruncatedSeries, String> {
    let c: Result<Vec<_>, _> = (0..=max as i64)
        .map(|n| count_class(class, n + offset).map(Into::into))
        .collect();
    Ok(TruncatedSeries::from_coefficients(c.map_err(|e| e.to_string())?, max))
}

fn enumerate(out: &mut String, class: ClassId, n: i64, format: ListFormat) -> Outcome {
    let members = enumerate_class(class, n).map_err(|e| e.to_string())?;
    let text: Vec<String> = members.iter().map(|m| m.to_string()).collect();
    match format {
        ListFormat::Lines => {
            for line in text {
                writeln!(out, "{line}").expect("writing to a String");
            }
        }
        ListFormat::Json => {
            writeln!(out, "{}", serde_json::to_string(&text).expect("strings serialize")).expect("writing to a String")
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn biject(out: &mut String, map: MapId, inverse: bool, input: &str) -> Outcome {
    let image = if inverse {
        let gamma: SignedPartition = input.parse().map_err(|e| format!("{e}"))?;
        map.inverse(&gamma).map_err(|e| e.to_string())?.to_string()
    } else {
        let lambda: Partition = input.parse().map_err(|e| format!("{e}"))?;
        map.forward(&lambda).map_err(|e| e.to_string())?.to_string()
    };
    writeln!(out, "{image}").expect("writing to a String");
    Ok(ExitCode::SUCCESS)
}

fn verify(out: &mut String, identity: Option<IdentityId>, bounds: SuiteBounds, format: ReportFormat) -> Outcome {
    let ids: Vec<IdentityId> = match identity {
        Some(id) => vec![id],
        None => IdentityId::ALL.to_vec(),
    };
    let reports = Verifier::new().verify_identities(&ids, bounds);
    match format {
        ReportFormat::Text => {
            for r in &reports {
                writeln!(out, "{}", r.summary()).expect("writing to a String");
            }
        }
        ReportFormat::Json => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&reports).expect("reports serialize")
        )
        .expect("writing to a String"),
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    if failed == 0 {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("{failed} of {} checks failed", reports.len());
        Ok(ExitCode::from(1))
    }
}

fn print_catalog(out: &mut String, format: ReportFormat) -> Outcome {
    let entries = catalog();
    match format {
        ReportFormat::Json => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&entries).expect("catalog serializes")
        )
        .expect("writing to a String"),
        ReportFormat::Text => {
            for d in entries {
                let signed: Vec<&str> = d.signed.iter().map(|c| c.name()).collect();
                let maps: Vec<&str> = d.maps.iter().map(|m| m.name()).collect();
                writeln!(out, "{}", d.id).expect("writing to a String");
                writeln!(out, "  {}", d.statement).expect("writing to a String");
                writeln!(out, "  classes: {} ~ {}", d.ordinary, signed.join(", ")).expect("writing to a String");
                if d.index_offset != 0 {
                    writeln!(out, "  signed weight offset: {}", d.index_offset).expect("writing to a String");
                }
                if !maps.is_empty() {
                    writeln!(out, "  maps: {}", maps.join(", ")).expect("writing to a String");
                }
                if d.has_product {
                    writeln!(out, "  product side: yes").expect("writing to a String");
                }
                if let Some((a, b)) = d.difference_of {
                    writeln!(out, "  sum side = {a} - {b}").expect("writing to a String");
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
