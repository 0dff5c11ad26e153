//! `eprseq`: principal rank sequences of symmetric matrices from the shell.
//!
//! Exit status is 0 on success, 1 when a sequence is not attainable or a
//! check fails, and 2 for usage, parse and I/O errors.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use eprseq::sequence::principal_minors_of_order;
use eprseq::verify::{compare_with_classifier, enumerate_epr, theorem_suite, SuiteBounds};
use eprseq::{
    classify_pr_char2, compute_epr, compute_pr, witness_epr_z2, witness_pr_char2, EprSequence, Error, Field,
    PrSequence, SymMatrix, Verdict,
};

const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Parser)]
#[command(
    name = "eprseq",
    version,
    about = "pr- and epr-sequences of symmetric matrices over GF(2) and GF(4)"
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Print the epr-sequence of a matrix file (`-` for stdin).
    Epr { file: PathBuf },
    /// Print the pr-sequence of a matrix file as `r0]bits`.
    Pr { file: PathBuf },
    /// List the principal minors of one order as `{indices}=value`.
    Minors {
        file: PathBuf,
        #[arg(short)]
        k: usize,
    },
    /// Decide whether an epr-sequence is attainable.
    Classify {
        sequence: String,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value = "gf2")]
        field: String,
    },
    /// Decide whether a pr-sequence such as `0]110` is attainable in characteristic 2.
    ClassifyPr {
        sequence: String,
        #[arg(long)]
        json: bool,
    },
    /// Write a GF(2) matrix attaining an epr-sequence.
    Witness {
        sequence: String,
        #[arg(short, default_value = "-")]
        o: PathBuf,
    },
    /// Write a GF(2) matrix attaining a pr-sequence.
    WitnessPr {
        sequence: String,
        #[arg(short, default_value = "-")]
        o: PathBuf,
    },
    /// Count every attained epr-sequence of one order.
    Enumerate {
        #[arg(short)]
        n: usize,
        #[arg(long, default_value = "gf2")]
        field: String,
        /// Output file; standard output when absent or `-`.
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Allow GF(2) order 7.
        #[arg(long)]
        force: bool,
        #[arg(long, env = "EPRSEQ_JOBS")]
        jobs: Option<usize>,
    },
    /// Compare exhaustive GF(2) enumeration with the classifier.
    Verify {
        #[arg(short)]
        n: usize,
        #[arg(long)]
        force: bool,
        #[arg(long, env = "EPRSEQ_JOBS")]
        jobs: Option<usize>,
    },
    /// Run the theorem suite.
    CheckTheorems {
        /// Largest order for exhaustive matrix-level checks.
        #[arg(long, default_value_t = SuiteBounds::default().matrix_max_n)]
        max_n: usize,
        /// Largest order for sequence-level checks.
        #[arg(long, default_value_t = SuiteBounds::default().sequence_max_n)]
        seq_max_n: usize,
        /// Random GF(4) matrices per field-generic check.
        #[arg(long, default_value_t = SuiteBounds::default().gf4_matrices)]
        gf4: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, env = "EPRSEQ_JOBS")]
        jobs: Option<usize>,
    },
}

/// What a verb produced besides its output.
enum Status {
    Ok,
    /// Not attainable, or a check failed.
    Negative,
}

fn read_input(path: &Path) -> anyhow::Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading standard input")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn write_output(path: &Path, text: &str) -> anyhow::Result<()> {
    if path == Path::new("-") {
        io::stdout()
            .write_all(text.as_bytes())
            .context("writing standard output")
    } else {
        fs::write(path, text).with_context(|| format!("writing {}", path.display()))
    }
}

fn read_matrix(path: &Path) -> anyhow::Result<SymMatrix> {
    let text = read_input(path)?;
    SymMatrix::from_text(&text).with_context(|| format!("parsing {}", path.display()))
}

fn field(name: &str) -> anyhow::Result<Field> {
    match Field::from_name(name) {
        Some(f) => Ok(f),
        None => bail!("unknown field {name:?}; expected gf2 or gf4"),
    }
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> anyhow::Result<T> {
    match jobs {
        None => Ok(f()),
        Some(0) => bail!("--jobs must be at least 1"),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(j).build()?;
            Ok(pool.install(f))
        }
    }
}

fn print_verdict(v: &Verdict, json: bool) -> anyhow::Result<Status> {
    if json {
        println!("{}", serde_json::to_string(v)?);
    } else {
        println!("{}", v.render());
    }
    Ok(if v.attainable { Status::Ok } else { Status::Negative })
}

/// Writes a witness, or prints the verdict when there is none.
fn emit_witness(result: eprseq::Result<eprseq::Witness>, out: &Path) -> anyhow::Result<Status> {
    match result {
        Ok(w) => {
            write_output(out, &w.to_text()?)?;
            Ok(Status::Ok)
        }
        Err(Error::NotAttainable(v)) => {
            println!("{}", v.render());
            Ok(Status::Negative)
        }
        Err(e) => Err(e.into()),
    }
}

fn suite_status(passed: bool) -> Status {
    if passed {
        Status::Ok
    } else {
        Status::Negative
    }
}

fn run(cli: Cli) -> anyhow::Result<Status> {
    match cli.verb {
        Verb::Epr { file } => {
            println!("{}", compute_epr(&read_matrix(&file)?)?);
            Ok(Status::Ok)
        }
        Verb::Pr { file } => {
            println!("{}", compute_pr(&read_matrix(&file)?)?);
            Ok(Status::Ok)
        }
        Verb::Minors { file, k } => {
            let m = read_matrix(&file)?;
            if k > m.order() {
                bail!("-k {k} exceeds the matrix order {}", m.order());
            }
            let f = m.field();
            let mut out = String::new();
            for (set, v) in principal_minors_of_order(&m, k)? {
                let sym = f.symbol(v).context("field has no element symbols")?;
                out.push_str(&format!("{set}={sym}\n"));
            }
            write_output(Path::new("-"), &out)?;
            Ok(Status::Ok)
        }
        Verb::Classify {
            sequence,
            json,
            field: name,
        } => {
            let e: EprSequence = sequence.parse()?;
            let v = eprseq::classify::classify_epr(&e, field(&name)?)?;
            print_verdict(&v, json)
        }
        Verb::ClassifyPr { sequence, json } => {
            let p: PrSequence = sequence.parse()?;
            print_verdict(&classify_pr_char2(&p), json)
        }
        Verb::Witness { sequence, o } => {
            let e: EprSequence = sequence.parse()?;
            emit_witness(witness_epr_z2(&e), &o)
        }
        Verb::WitnessPr { sequence, o } => {
            let p: PrSequence = sequence.parse()?;
            emit_witness(witness_pr_char2(&p), &o)
        }
        Verb::Enumerate {
            n,
            field: name,
            catalog,
            force,
            jobs,
        } => {
            let f = field(&name)?;
            let cat = with_jobs(jobs, || enumerate_epr(n, f, force))??;
            let out = catalog.unwrap_or_else(|| PathBuf::from("-"));
            write_output(&out, &cat.to_text())?;
            Ok(Status::Ok)
        }
        Verb::Verify { n, force, jobs } => {
            let report = with_jobs(jobs, || compare_with_classifier(n, force))??;
            print!("{}", report.render());
            Ok(suite_status(report.passed()))
        }
        Verb::CheckTheorems {
            max_n,
            seq_max_n,
            gf4,
            seed,
            jobs,
        } => {
            let bounds = SuiteBounds {
                matrix_max_n: max_n,
                sequence_max_n: seq_max_n,
                gf4_matrices: gf4,
                ..SuiteBounds::default()
            };
            println!("# seed {seed}");
            let report = with_jobs(jobs, || theorem_suite(bounds, seed))??;
            print!("{}", report.render());
            Ok(suite_status(report.passed()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Negative) => ExitCode::from(1),
        Err(e) => {
            eprintln!("eprseq: {e:#}");
            ExitCode::from(2)
        }
    }
}
