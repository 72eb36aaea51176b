//! `latrb`: build finite lattices, enumerate and classify their integral
//! (Rota-Baxter) operators, and run the registered theorem checks.
//!
//! Exit codes: 0 on success (all checks passed), 1 if any check failed,
//! 2 on usage or input errors.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use latrb_core::catalog::{lattice_to_json, LatticeSpec};
use latrb_core::checks::{config_from_json, run_all, run_check, CheckConfig, CheckReport};
use latrb_core::classify::classify;
use latrb_core::dot::export_dot;
use latrb_core::enumerate::{enumerate, EnumerationJson, Predicate};
use latrb_core::families::{make_family, FamilySpec};
use latrb_core::Error;

#[derive(Parser)]
#[command(
    name = "latrb",
    version,
    about = "Finite lattices and their integral (Rota-Baxter) operators: \
             enumeration, classification and executable checks"
)]
struct Cli {
    /// JSON config file setting size limits and catalog membership:
    /// {"isotone_limit": N, "full_scan_limit": N, "catalog": ["chain:1", ...]}
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect lattices
    Lattice {
        #[command(subcommand)]
        command: LatticeCommand,
    },
    /// Enumerate the operators on a lattice satisfying a predicate
    Enumerate(EnumerateArgs),
    /// Run registered checks against their expected outcomes
    Verify(VerifyArgs),
    /// Build a named operator-family member
    Families(FamiliesArgs),
}

#[derive(Subcommand)]
enum LatticeCommand {
    /// Print a lattice: elements, covers and structural properties
    Show(ShowArgs),
}

#[derive(Args)]
struct ShowArgs {
    /// Lattice spec: chain:N, m:N, n5, n8, bool:K, prod(SPEC,SPEC), file:PATH
    #[arg(long)]
    spec: String,

    /// Emit the Hasse diagram in DOT format
    #[arg(long)]
    dot: bool,

    /// Emit the lattice file JSON instead of the summary
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Lattice spec: chain:N, m:N, n5, n8, bool:K, prod(SPEC,SPEC), file:PATH
    #[arg(long)]
    spec: String,

    /// Operator class: rbo, do, ido, ieo, szasz, meet-translation, all
    #[arg(long)]
    predicate: String,

    /// Also classify the operators up to lattice automorphism
    #[arg(long)]
    classify: bool,

    /// Print only the operator count
    #[arg(long)]
    count_only: bool,

    /// Write the full JSON document to FILE
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// A registered check id, or `all`
    #[arg(long)]
    check: String,

    /// Cap the enumeration size limits at N
    #[arg(long, value_name = "N")]
    max_size: Option<usize>,

    /// Emit reports as JSON instead of a table
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct FamiliesArgs {
    /// Lattice spec: chain:N, m:N, n5, n8, bool:K, prod(SPEC,SPEC), file:PATH
    #[arg(long)]
    spec: String,

    /// Family instance: identity, const:A, tau, step:A:B, tauA:A, patom:A,
    /// phi:A:B, tauAB:A:B, psi:A, inner:U
    #[arg(long)]
    family: String,

    /// Also test Rota-Baxter membership and print the verdict
    #[arg(long)]
    check: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let code = match run(cli, &mut out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    };
    // A closed pipe (e.g. `latrb ... | head`) is not an error.
    if let Err(e) = std::io::stdout().write_all(out.as_bytes()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    code
}

fn load_config(path: &Option<PathBuf>) -> Result<CheckConfig, Error> {
    match path {
        None => Ok(CheckConfig::default()),
        Some(p) => {
            let text = std::fs::read_to_string(p)?;
            config_from_json(&text)
        }
    }
}

fn run(cli: Cli, out: &mut String) -> Result<bool, Error> {
    let mut cfg = load_config(&cli.config)?;
    match cli.command {
        Command::Lattice {
            command: LatticeCommand::Show(args),
        } => {
            show_lattice(&args, out)?;
            Ok(true)
        }
        Command::Enumerate(args) => {
            run_enumerate(&args, &cfg, out)?;
            Ok(true)
        }
        Command::Verify(args) => {
            if let Some(n) = args.max_size {
                cfg.limits.isotone = cfg.limits.isotone.min(n);
                cfg.limits.full_scan = cfg.limits.full_scan.min(n);
            }
            run_verify(&args, &cfg, out)
        }
        Command::Families(args) => {
            run_families(&args, out)?;
            Ok(true)
        }
    }
}

fn show_lattice(args: &ShowArgs, out: &mut String) -> Result<(), Error> {
    let spec = LatticeSpec::parse(&args.spec)?;
    let l = spec.build()?;
    if args.dot {
        let _ = write!(out, "{}", export_dot(&l));
        return Ok(());
    }
    if args.json {
        let _ = writeln!(out, "{}", lattice_to_json(&l));
        return Ok(());
    }
    let _ = writeln!(out, "lattice {spec}: {} elements", l.size());
    let names: Vec<String> = l
        .elements()
        .map(|x| format!("{x}={}", l.label(x)))
        .collect();
    let _ = writeln!(out, "elements: {}", names.join(" "));
    let covers: Vec<String> = l
        .covers()
        .iter()
        .map(|&(lo, hi)| format!("{}<{}", l.label(lo), l.label(hi)))
        .collect();
    let _ = writeln!(out, "covers: {}", covers.join(" "));
    let _ = writeln!(
        out,
        "bottom: {}, top: {}",
        l.label(l.bottom().expect("bounded")),
        l.label(l.top().expect("bounded"))
    );
    let _ = writeln!(
        out,
        "chain: {}, distributive: {}, modular: {}, weak-modular identity: {}",
        l.is_chain(),
        l.is_distributive(),
        l.is_modular(),
        l.weak_modular_identity()
    );
    Ok(())
}

fn run_enumerate(args: &EnumerateArgs, cfg: &CheckConfig, out: &mut String) -> Result<(), Error> {
    let spec = LatticeSpec::parse(&args.spec)?;
    let predicate = Predicate::parse(&args.predicate)?;
    let l = spec.build()?;
    let ops = enumerate(&l, predicate, &cfg.limits)?;

    let classification = if args.classify {
        Some(classify(&l, &ops)?)
    } else {
        None
    };

    if let Some(path) = &args.out {
        let doc = EnumerationJson {
            lattice: spec.to_string(),
            predicate: predicate.as_str().to_string(),
            count: ops.len(),
            operators: ops.iter().map(|m| m.image().to_vec()).collect(),
            classification: classification.as_ref().map(|c| c.to_json()),
        };
        let text =
            serde_json::to_string_pretty(&doc).expect("enumeration documents serialize") + "\n";
        std::fs::write(path, text)?;
    }

    if args.count_only {
        let _ = writeln!(out, "{}", ops.len());
        return Ok(());
    }
    let _ = writeln!(
        out,
        "lattice {spec}, predicate {predicate}: {} operators",
        ops.len()
    );
    if let Some(c) = &classification {
        let _ = writeln!(out, "{} isomorphism classes", c.class_count);
        for class in &c.classes {
            let _ = writeln!(
                out,
                "  representative {:?} orbit {}",
                class.representative, class.orbit_size
            );
        }
    }
    Ok(())
}

fn run_verify(args: &VerifyArgs, cfg: &CheckConfig, out: &mut String) -> Result<bool, Error> {
    let reports: Vec<CheckReport> = if args.check == "all" {
        run_all(cfg)?
    } else {
        run_check(&args.check, cfg)?
    };
    let failed = reports.iter().filter(|r| !r.passed).count();
    if args.json {
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&reports).expect("reports serialize")
        );
    } else {
        for r in &reports {
            let status = if r.passed { "ok  " } else { "FAIL" };
            let _ = writeln!(
                out,
                "{status} {:<32} {:<22} {}",
                r.check, r.lattice, r.detail
            );
        }
        let _ = writeln!(
            out,
            "{} reports, {} passed, {failed} failed",
            reports.len(),
            reports.len() - failed
        );
    }
    Ok(failed == 0)
}

fn run_families(args: &FamiliesArgs, out: &mut String) -> Result<(), Error> {
    let spec = LatticeSpec::parse(&args.spec)?;
    let family = FamilySpec::parse(&args.family)?;
    let l = spec.build()?;
    let m = make_family(&l, &family)?;
    let _ = writeln!(out, "family {family} on {spec}: image {:?}", m.image());
    if args.check {
        match m.rota_baxter_failure() {
            None => {
                let _ = writeln!(out, "Rota-Baxter: yes");
            }
            Some(w) => {
                let _ = writeln!(
                    out,
                    "Rota-Baxter: no — {} fails at ({}, {})",
                    w.axiom, w.x, w.y
                );
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn registry_ids_are_documented() {
        assert!(latrb_core::checks::CHECK_IDS.contains(&"oracle-crosscheck"));
    }
}
