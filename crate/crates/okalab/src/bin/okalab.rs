//! Command-line front end for the okalab library.
//!
//! Exit codes: 0 all pass, 1 any failure, 2 usage or parse error, 3 cap
//! exceeded under --strict.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use okalab::catalog::{self, CatalogEntry};
use okalab::error::Error;
use okalab::family;
use okalab::lab::{Budget, Lab};
use okalab::prime;
use okalab::report;
use okalab::search;
use okalab::specfile;
use okalab::suite::{self, SuiteOptions, SUITE_IDS};

#[derive(Parser)]
#[command(
    name = "okalab",
    version,
    about = "Exact laboratory for one-sided primes in finite rings"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Clone)]
struct Target {
    /// Catalog ring name (see `okalab list`)
    #[arg(long, conflicts_with = "spec")]
    ring: Option<String>,
    /// Path to a ring spec file
    #[arg(long)]
    spec: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct Common {
    /// Element-count cap; larger rings are skipped, never dropped silently
    #[arg(long, default_value_t = 4096)]
    cap: u64,
    /// Worker threads (default: all available cores)
    #[arg(long)]
    jobs: Option<usize>,
    /// Directory for lattice caches
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Treat degenerate results as failures and skipped caps as exit 3
    #[arg(long)]
    strict: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the ring catalog
    List {
        #[command(flatten)]
        common: Common,
    },
    /// Structural overview of one ring or the whole catalog
    Analyze {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        common: Common,
    },
    /// Per-ideal prime spectrum table
    Spectrum {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        common: Common,
    },
    /// Verdicts for every built-in ideal family
    Families {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        common: Common,
    },
    /// Run theorem suites and print the report
    Verify {
        /// Suite ids, comma separated (default: all)
        #[arg(long, value_delimiter = ',')]
        suite: Option<Vec<String>>,
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        common: Common,
    },
    /// Search ideals matching a predicate expression
    Search {
        /// Expression, e.g. "completely_prime and not comonoform"
        expr: String,
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        common: Common,
    },
    /// Run theorem suites and write the report to a file
    Report {
        /// Suite ids, comma separated (default: all)
        #[arg(long, value_delimiter = ',')]
        suite: Option<Vec<String>>,
        /// Output file path
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        common: Common,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            let usage = matches!(
                err,
                Error::UnknownSuite(_)
                    | Error::UnknownRing(_)
                    | Error::UnknownPredicate(_)
                    | Error::BadExpression(_)
                    | Error::SpecFile(_)
            );
            ExitCode::from(if usage { 2 } else { 1 })
        }
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.cmd {
        Cmd::List { common } => {
            init_threads(&common)?;
            cmd_list(&common)
        }
        Cmd::Analyze { target, common } => {
            init_threads(&common)?;
            per_ring(&target, &common, cmd_analyze)
        }
        Cmd::Spectrum { target, common } => {
            init_threads(&common)?;
            per_ring(&target, &common, cmd_spectrum)
        }
        Cmd::Families { target, common } => {
            init_threads(&common)?;
            per_ring(&target, &common, cmd_families)
        }
        Cmd::Search { expr, target, common } => {
            init_threads(&common)?;
            let parsed = search::parse(&expr)?;
            per_ring(&target, &common, |entry, lab, common| {
                cmd_search(entry, lab, common, &parsed)
            })
        }
        Cmd::Verify { suite, target, common } => {
            init_threads(&common)?;
            let rep = run_report(suite, &target, &common)?;
            match common.format {
                Format::Text => print!("{}", report::to_text(&rep)),
                Format::Json => println!("{}", report::to_json(&rep)?),
            }
            Ok(report::exit_code(&rep, common.strict) as u8)
        }
        Cmd::Report { suite, out, target, common } => {
            init_threads(&common)?;
            let rep = run_report(suite, &target, &common)?;
            let body = match common.format {
                Format::Text => report::to_text(&rep),
                Format::Json => report::to_json(&rep)?,
            };
            std::fs::write(&out, body)?;
            eprintln!("wrote {}", out.display());
            Ok(report::exit_code(&rep, common.strict) as u8)
        }
    }
}

fn init_threads(common: &Common) -> Result<(), Error> {
    if let Some(jobs) = common.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| Error::BadExpression(format!("--jobs: {e}")))?;
    }
    Ok(())
}

fn budget_for(common: &Common) -> Budget {
    Budget {
        lattice_cap: common.cap,
        oracle_cap: common.cap,
        scan_budget: 65_536u64.max(common.cap.saturating_mul(common.cap)),
        ..Budget::default()
    }
}

/// Resolve --ring/--spec to entries: one named ring, one spec-file ring, or
/// the whole catalog.
fn entries_for(target: &Target) -> Result<Vec<CatalogEntry>, Error> {
    if let Some(name) = &target.ring {
        return catalog::find(name).map(|e| vec![e]).ok_or_else(|| Error::UnknownRing(name.clone()));
    }
    if let Some(path) = &target.spec {
        let ring = specfile::load_ring(path)?;
        return Ok(vec![CatalogEntry {
            name: ring.name().to_string(),
            elements: ring.element_count(),
            ring,
            note: format!("loaded from {}", path.display()),
        }]);
    }
    Ok(catalog::default_catalog())
}

/// Run a per-ring command over the selected entries, skipping rings over
/// the cap (exit 3 when --strict). JSON output aggregates one value per
/// ring into a single array.
fn per_ring(
    target: &Target,
    common: &Common,
    f: impl Fn(&CatalogEntry, &Lab, &Common) -> Result<serde_json::Value, Error>,
) -> Result<u8, Error> {
    let entries = entries_for(target)?;
    let budget = budget_for(common);
    let mut skipped = 0usize;
    let mut values = Vec::new();
    for entry in &entries {
        if !entry.within_cap(common.cap) {
            skipped += 1;
            if common.format == Format::Text {
                println!("{}: skipped-cap ({} elements > {})", entry.name, entry.elements, common.cap);
            } else {
                values.push(json!({ "ring": entry.name, "status": "skipped-cap" }));
            }
            continue;
        }
        let lattice = okalab::cache::lattice_for(&entry.ring, &budget, common.cache_dir.as_deref())?;
        let lab = Lab::with_lattice(&entry.ring, budget, lattice)?;
        values.push(f(entry, &lab, common)?);
    }
    if common.format == Format::Json {
        println!("{}", serde_json::to_string_pretty(&values)?);
    }
    Ok(if common.strict && skipped > 0 { 3 } else { 0 })
}

fn run_report(
    suite: Option<Vec<String>>,
    target: &Target,
    common: &Common,
) -> Result<report::Report, Error> {
    let ids: Vec<&str> = match &suite {
        None => SUITE_IDS.to_vec(),
        Some(list) => list.iter().map(|s| s.as_str()).collect(),
    };
    let opts = SuiteOptions {
        cap: common.cap,
        cache_dir: common.cache_dir.clone(),
        rings: None,
    };
    let rows = if target.ring.is_some() || target.spec.is_some() {
        let entries = entries_for(target)?;
        suite::run_suites_on(&ids, &opts, &entries)?
    } else {
        suite::run_suites(&ids, &opts)?
    };
    Ok(report::assemble(&ids, common.cap, rows))
}

fn cmd_list(common: &Common) -> Result<u8, Error> {
    let entries = catalog::default_catalog();
    match common.format {
        Format::Text => {
            let width = entries.iter().map(|e| e.name.len()).max().unwrap_or(4);
            for e in &entries {
                let cap_note = if e.within_cap(common.cap) { "" } else { "  [over cap]" };
                println!("{:<width$}  {:>8}  {}{}", e.name, e.elements, e.note, cap_note);
            }
        }
        Format::Json => {
            let values: Vec<_> = entries
                .iter()
                .map(|e| {
                    json!({
                        "name": e.name,
                        "elements": e.elements as u64,
                        "note": e.note,
                        "within_cap": e.within_cap(common.cap),
                    })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&values)?);
        }
    }
    Ok(0)
}

fn cmd_analyze(entry: &CatalogEntry, lab: &Lab, common: &Common) -> Result<serde_json::Value, Error> {
    let lat = lab.lattice();
    let ring = lab.ring();
    let class = lab.classification();
    let value = json!({
        "ring": entry.name,
        "elements": entry.elements as u64,
        "dim": ring.dim(),
        "field": format!("GF({})", ring.field().q()),
        "ideals": lat.len(),
        "maximal": lat.maximals().len(),
        "two_sided": lat.two_sided_indices().len(),
        "radical_dim": lab.radical_ideal().dim(),
        "socle_dim": lab.socle_ideal().dim(),
        "units": lab.units().count(),
        "simple_modules": lab.simples().reps().len(),
        "classification": class,
    });
    if common.format == Format::Text {
        println!(
            "{}: {} elements, dim {} over GF({})",
            entry.name,
            entry.elements,
            ring.dim(),
            ring.field().q()
        );
        println!(
            "  ideals {} ({} maximal, {} two-sided), radical dim {}, socle dim {}, units {}, simple modules {}",
            lat.len(),
            lat.maximals().len(),
            lat.two_sided_indices().len(),
            lab.radical_ideal().dim(),
            lab.socle_ideal().dim(),
            lab.units().count(),
            lab.simples().reps().len()
        );
        println!(
            "  commutative {}, domain {}, division ring {}, simple {}, semisimple {}, local {}, self-injective {}",
            class.commutative,
            class.domain,
            class.division_ring,
            class.simple_ring,
            class.semisimple,
            class.local,
            class.self_injective
        );
    }
    Ok(value)
}

fn cmd_spectrum(entry: &CatalogEntry, lab: &Lab, common: &Common) -> Result<serde_json::Value, Error> {
    let lat = lab.lattice();
    let spectra = prime::spectra(lab);
    let reports: Vec<prime::PrimeReport> =
        lat.proper_indices().map(|i| prime::prime_report(lab, i)).collect();
    if common.format == Format::Text {
        println!(
            "{}: {} proper right ideals; completely prime {:?}, comonoform {:?}, extremely prime {:?}, maximal {:?}, koh {:?}",
            entry.name,
            reports.len(),
            spectra.completely_prime,
            spectra.comonoform,
            spectra.extremely_prime,
            spectra.maximal,
            spectra.koh
        );
        println!("  idx dim 2sided max   cp    ext   cmf   koh");
        for r in &reports {
            println!(
                "  {:<3} {:<3} {:<6} {:<5} {:<5} {:<5} {:<5} {}",
                r.index, r.dim, r.two_sided, r.maximal, r.completely_prime, r.extremely_prime,
                r.comonoform, r.koh
            );
        }
    }
    Ok(json!({ "ring": entry.name, "spectra": spectra, "ideals": reports }))
}

fn cmd_families(entry: &CatalogEntry, lab: &Lab, common: &Common) -> Result<serde_json::Value, Error> {
    let fams = family::standard_families(lab)?;
    let reports: Vec<family::FamilyReport> =
        fams.iter().map(|f| family::family_report(lab, f)).collect();
    if common.format == Format::Text {
        println!("{}: {} built-in families", entry.name, reports.len());
        for r in &reports {
            println!(
                "  {}: {} members, oka {}, divisible {}, semifilter {}, gabriel {}, max complement {:?}",
                r.provenance,
                r.member_count,
                r.oka,
                r.divisible,
                r.semifilter,
                r.gabriel.map_or("over-budget".to_string(), |b| b.to_string()),
                r.max_complement
            );
        }
    }
    Ok(json!({ "ring": entry.name, "families": reports }))
}

fn cmd_search(
    entry: &CatalogEntry,
    lab: &Lab,
    common: &Common,
    expr: &search::Expr,
) -> Result<serde_json::Value, Error> {
    let hits = search::hits(lab, expr);
    if common.format == Format::Text {
        for h in &hits {
            println!("{} ideal {} dim {} basis {:?}", h.ring, h.ideal, h.dim, h.basis);
        }
        if hits.is_empty() {
            println!("{}: no matches", entry.name);
        }
    }
    Ok(json!({ "ring": entry.name, "hits": hits }))
}
