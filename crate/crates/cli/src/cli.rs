use clap::{Parser, Subcommand};
use dialg::composition::{self, CompletionStatus, Triviality};
use dialg::constructions::{free_product, LeibnizAlgebra, MultiplicationTable, ValidationReport};
use dialg::io::{CliffordFile, LeibnizFile, PresentationFile, TableFile};
use dialg::oracle;
use dialg::rewrite::{irr_enumerate, normal_form, Constraint, Presentation};
use dialg::{Error, NormalDiword};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "dialg",
    version,
    about = "Gröbner–Shirshov bases for dialgebras",
    propagate_version = true
)]
struct Args {
    /// Worker threads for composition checks and oracle row generation.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the five dialgebra axioms of a multiplication table file.
    CheckAxioms { file: PathBuf },
    /// Verify the Leibniz identity and the I0 markers of an algebra file.
    CheckLeibniz { file: PathBuf },
    /// Check whether a presentation is a Gröbner–Shirshov basis.
    CheckGsb { file: PathBuf },
    /// Run completion: inter-reduce, check compositions, append remainders.
    Complete {
        file: PathBuf,
        /// Drop composition remainders whose leading degree exceeds this.
        #[arg(long, default_value_t = 6)]
        max_deg: usize,
        #[arg(long, default_value_t = 64)]
        max_rounds: usize,
        /// Write the resulting presentation here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Reduce a diword (`a a ^b c` notation) to its normal form.
    Reduce { file: PathBuf, diword: String },
    /// Enumerate the irreducible diwords up to a degree.
    Irr {
        file: PathBuf,
        #[arg(long, default_value_t = 5)]
        max_deg: usize,
        /// Print per-degree counts instead of the diwords.
        #[arg(long)]
        count: bool,
    },
    /// Quotient dimensions per degree via the rank oracle.
    Dim {
        file: PathBuf,
        #[arg(long, default_value_t = 5)]
        max_deg: usize,
        /// Override the oracle size guardrail.
        #[arg(long)]
        force: bool,
    },
    /// Compare Irr counts with the rank oracle at every degree.
    CrossCheck {
        file: PathBuf,
        #[arg(long, default_value_t = 5)]
        max_deg: usize,
        #[arg(long)]
        force: bool,
    },
    /// Emit the enveloping presentation of a Leibniz algebra.
    LeibnizEnv {
        file: PathBuf,
        /// Apply the reduced-basis index restrictions.
        #[arg(long)]
        reduced: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Emit a Clifford dialgebra presentation from a symmetric form.
    Clifford {
        file: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Emit the bar unit extension of a multiplication table.
    BarExtend {
        file: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Emit the free product of two multiplication tables.
    FreeProduct {
        file1: PathBuf,
        file2: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

pub fn run() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) => {
            // clap exits 0 for --help/--version and 2 for usage errors.
            e.exit();
        }
    };
    if let Some(jobs) = args.jobs {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    match dispatch(&args) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::invalid(format!("cannot read {}: {e}", path.display())))
}

fn load_presentation(path: &Path) -> Result<Presentation, Error> {
    PresentationFile::from_json(&read(path)?)?.to_presentation()
}

fn load_table(path: &Path) -> Result<MultiplicationTable, Error> {
    TableFile::from_json(&read(path)?)?.to_table()
}

fn load_leibniz(path: &Path) -> Result<LeibnizAlgebra, Error> {
    LeibnizFile::from_json(&read(path)?)?.to_algebra()
}

/// `Ok(true)` exits 0 (property holds), `Ok(false)` exits 1, `Err` exits 2.
fn dispatch(args: &Args) -> Result<bool, Error> {
    match &args.command {
        Command::CheckAxioms { file } => {
            let table = load_table(file)?;
            let report = table.check();
            print_validation(args.json, "dialgebra axioms", &report, None);
            Ok(report.is_valid())
        }
        Command::CheckLeibniz { file } => {
            let algebra = load_leibniz(file)?;
            let report = algebra.check();
            let suggestion: Vec<String> = algebra
                .suggest_i0()
                .into_iter()
                .map(|k| algebra.alphabet().name(k as u32).to_string())
                .collect();
            print_validation(args.json, "Leibniz structure", &report, Some(&suggestion));
            Ok(report.is_valid())
        }
        Command::CheckGsb { file } => {
            let pres = load_presentation(file)?;
            let report = composition::check_gsb(&pres);
            print_gsb_report(args.json, &pres, &report);
            Ok(report.pass())
        }
        Command::Complete { file, max_deg, max_rounds, output } => {
            let pres = load_presentation(file)?;
            let done = composition::complete(&pres, *max_deg, *max_rounds);
            let status = match done.status {
                CompletionStatus::Complete => "complete",
                CompletionStatus::DegreeCapped => "degree_capped",
                CompletionStatus::RoundCapped => "round_capped",
            };
            let out_file = PresentationFile::from_presentation(&done.presentation);
            if args.json {
                let mut value = json!({
                    "status": status,
                    "rounds": done.rounds,
                    "relations": done.presentation.len(),
                });
                if let Some(path) = output {
                    write_file(path, &out_file)?;
                    value["output"] = json!(path.display().to_string());
                } else {
                    value["presentation"] =
                        serde_json::to_value(&out_file).expect("serializable");
                }
                println!("{}", serde_json::to_string_pretty(&value).unwrap());
            } else {
                println!(
                    "completion: {status} after {} round(s), {} relation(s)",
                    done.rounds,
                    done.presentation.len()
                );
                match output {
                    Some(path) => {
                        write_file(path, &out_file)?;
                        println!("wrote {}", path.display());
                    }
                    None => {
                        for r in done.presentation.relations() {
                            println!("  {}", r.render(done.presentation.alphabet()));
                        }
                    }
                }
            }
            Ok(done.status == CompletionStatus::Complete)
        }
        Command::Reduce { file, diword } => {
            let pres = load_presentation(file)?;
            let input = NormalDiword::parse(diword, pres.alphabet())?;
            let poly = dialg::DiPolynomial::monomial(
                pres.field(),
                input,
                pres.field().one(),
            );
            let red = normal_form(&poly, &pres, Constraint::Any, None);
            let rendered = red.remainder.render(pres.alphabet());
            if args.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "input": diword,
                        "normal_form": rendered,
                        "steps": red.trace.steps.len(),
                    }))
                    .unwrap()
                );
            } else {
                println!("{rendered}");
            }
            Ok(true)
        }
        Command::Irr { file, max_deg, count } => {
            let pres = load_presentation(file)?;
            let irr = irr_enumerate(&pres, *max_deg);
            if args.json {
                let value = if *count {
                    json!({
                        "per_degree": per_degree_counts(&irr, *max_deg),
                        "total": irr.len(),
                    })
                } else {
                    json!({
                        "diwords": irr
                            .iter()
                            .map(|u| u.render(pres.alphabet()))
                            .collect::<Vec<_>>(),
                        "total": irr.len(),
                    })
                };
                println!("{}", serde_json::to_string_pretty(&value).unwrap());
            } else if *count {
                for (d, c) in per_degree_counts(&irr, *max_deg) {
                    println!("degree {d}: {c}");
                }
                println!("total: {}", irr.len());
            } else {
                for u in &irr {
                    println!("{}", u.render(pres.alphabet()));
                }
            }
            Ok(true)
        }
        Command::Dim { file, max_deg, force } => {
            let pres = load_presentation(file)?;
            guardrail(&pres, *max_deg, *force)?;
            let dims = oracle::DegreeSlice::build(&pres, *max_deg).quotient_dims();
            if args.json {
                let per: Vec<Value> = dims
                    .iter()
                    .enumerate()
                    .map(|(i, d)| json!({"degree": i + 1, "dim": d}))
                    .collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "cumulative": per,
                        "total": dims.last(),
                    }))
                    .unwrap()
                );
            } else {
                let mut prev = 0;
                for (i, d) in dims.iter().enumerate() {
                    println!("degree {}: dim {} (+{})", i + 1, d, d - prev);
                    prev = *d;
                }
            }
            Ok(true)
        }
        Command::CrossCheck { file, max_deg, force } => {
            let pres = load_presentation(file)?;
            guardrail(&pres, *max_deg, *force)?;
            let check = oracle::cross_check(&pres, *max_deg);
            if args.json {
                let per: Vec<Value> = check
                    .per_degree
                    .iter()
                    .map(|d| {
                        json!({
                            "degree": d.degree,
                            "irr": d.irr_count,
                            "dim": d.quotient_dim,
                            "agree": d.agrees(),
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "per_degree": per,
                        "agree": check.agree,
                    }))
                    .unwrap()
                );
            } else {
                for d in &check.per_degree {
                    println!(
                        "degree {}: irr {} vs dim {} -> {}",
                        d.degree,
                        d.irr_count,
                        d.quotient_dim,
                        if d.agrees() { "agree" } else { "DISAGREE" }
                    );
                }
                println!("{}", if check.agree { "agree" } else { "disagree" });
            }
            Ok(check.agree)
        }
        Command::LeibnizEnv { file, reduced, output } => {
            let algebra = load_leibniz(file)?;
            let pres = algebra.enveloping(*reduced)?;
            emit_presentation(args.json, &pres, output.as_deref())
        }
        Command::Clifford { file, output } => {
            let form = CliffordFile::from_json(&read(file)?)?.to_form()?;
            let pres = form.clifford()?;
            emit_presentation(args.json, &pres, output.as_deref())
        }
        Command::BarExtend { file, output } => {
            let table = load_table(file)?;
            let pres = table.bar_extension()?;
            emit_presentation(args.json, &pres, output.as_deref())
        }
        Command::FreeProduct { file1, file2, output } => {
            let t1 = load_table(file1)?;
            let t2 = load_table(file2)?;
            let pres = free_product(&t1, &t2)?;
            emit_presentation(args.json, &pres, output.as_deref())
        }
    }
}

fn per_degree_counts(irr: &[NormalDiword], max_deg: usize) -> Vec<(usize, usize)> {
    (1..=max_deg)
        .map(|d| (d, irr.iter().filter(|u| u.len() == d).count()))
        .collect()
}

/// The oracle column count grows as `d·q^d`; refuse absurd sizes unless
/// forced.
fn guardrail(pres: &Presentation, max_deg: usize, force: bool) -> Result<(), Error> {
    if max_deg == 0 {
        return Err(Error::invalid("--max-deg must be at least 1"));
    }
    let q = pres.alphabet().len() as u128;
    let cols = q.saturating_pow(max_deg as u32).saturating_mul(max_deg as u128);
    if cols > 1_000_000 && !force {
        return Err(Error::invalid(format!(
            "oracle would need about {cols} columns; rerun with --force to allow it"
        )));
    }
    Ok(())
}

fn write_file(path: &Path, file: &PresentationFile) -> Result<(), Error> {
    std::fs::write(path, file.to_json())
        .map_err(|e| Error::invalid(format!("cannot write {}: {e}", path.display())))
}

fn emit_presentation(
    json_mode: bool,
    pres: &Presentation,
    output: Option<&Path>,
) -> Result<bool, Error> {
    let file = PresentationFile::from_presentation(pres);
    match output {
        Some(path) => {
            write_file(path, &file)?;
            if json_mode {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "output": path.display().to_string(),
                        "generators": pres.alphabet().names(),
                        "relations": pres.len(),
                    }))
                    .unwrap()
                );
            } else {
                println!(
                    "wrote {} ({} generators, {} relations)",
                    path.display(),
                    pres.alphabet().len(),
                    pres.len()
                );
            }
        }
        None => print!("{}", file.to_json()),
    }
    Ok(true)
}

fn print_validation(
    json_mode: bool,
    what: &str,
    report: &ValidationReport,
    suggestion: Option<&[String]>,
) {
    if json_mode {
        let mut value = json!({
            "valid": report.is_valid(),
            "problems": report.problems,
        });
        if let Some(s) = suggestion {
            value["suggested_i0"] = json!(s);
        }
        println!("{}", serde_json::to_string_pretty(&value).unwrap());
    } else if report.is_valid() {
        println!("{what}: ok");
        if let Some(s) = suggestion {
            println!("suggested i0: [{}]", s.join(", "));
        }
    } else {
        println!("{what}: INVALID");
        for p in &report.problems {
            println!("  {p}");
        }
        if let Some(s) = suggestion {
            println!("suggested i0: [{}]", s.join(", "));
        }
    }
}

fn print_gsb_report(
    json_mode: bool,
    pres: &Presentation,
    report: &dialg::CompositionReport,
) {
    let failures: Vec<&composition::CompositionOutcome> = report.failures().collect();
    if json_mode {
        let items: Vec<Value> = report
            .outcomes
            .iter()
            .map(|o| {
                let mut v = json!({
                    "item": o.item.describe(pres),
                    "trivial": o.status.is_trivial(),
                    "micros": o.elapsed.as_micros() as u64,
                });
                if let Triviality::NonzeroRemainder(r) = &o.status {
                    v["remainder"] = json!(r.render(pres.alphabet()));
                }
                v
            })
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "pass": report.pass(),
                "compositions": report.len(),
                "nontrivial": failures.len(),
                "millis": report.elapsed.as_millis() as u64,
                "items": items,
            }))
            .unwrap()
        );
    } else {
        println!(
            "checked {} composition(s) in {:?}",
            report.len(),
            report.elapsed
        );
        for f in &failures {
            let remainder = match &f.status {
                Triviality::NonzeroRemainder(r) => r.render(pres.alphabet()),
                Triviality::Trivial => unreachable!(),
            };
            println!("  nontrivial: {}\n    remainder: {}", f.item.describe(pres), remainder);
        }
        println!(
            "{}",
            if report.pass() {
                "Gröbner–Shirshov basis: yes"
            } else {
                "Gröbner–Shirshov basis: NO"
            }
        );
    }
}
