//! Command-line front end for `dkp-core`: stratification reports as aligned
//! tables, JSON or CSV, Bruhat Hasse diagrams as DOT, root sequences, kernel
//! lattices, commutation exponents and the exact quantum checks.
//!
//! Exit codes: 0 success, 1 usage or I/O error, 2 interval cap exceeded,
//! 3 a quantum check failed.

pub mod args;
pub mod render;

use std::io::Write;

use dkp_core::qcheck::{
    check_weight_grading, classical_sl2_check, phi_slice, rmatrix_on_tensor, unipotent_inverse,
    uqsl2_rep, uqsl3_vector_rep, verify_relations, QMatrix, MAX_TENSOR_FACTOR,
};
use dkp_core::rootdata::{root_system, Series};
use dkp_core::strata::{commutation_exponent, kernel_lattice_basis};
use dkp_core::weyl::{beta_sequence, bruhat_interval, bruhat_leq};
use dkp_core::{stratification_report, WeylElement};
use thiserror::Error;

pub use args::{parse_spec, parse_word, Command, Format, RunSpec};
pub use render::{render_dot, render_report, ReportJson, RowJson};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CAP: i32 = 2;
pub const EXIT_CHECK_FAILED: i32 = 3;

/// A rejected command line. `clap_output` holds clap's own rendering
/// (help, version or an argument error).
#[derive(Debug, Error)]
#[error("{message}")]
pub struct UsageError {
    pub message: String,
    pub clap_output: Option<String>,
    pub informational: bool,
}

impl UsageError {
    pub fn new(message: String) -> Self {
        UsageError {
            message,
            clap_output: None,
            informational: false,
        }
    }

    pub(crate) fn from_clap(e: clap::Error) -> Self {
        use clap::error::ErrorKind;
        let informational = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
        let rendered = e.render().to_string();
        let message = rendered
            .lines()
            .next()
            .unwrap_or_default()
            .trim_start_matches("error: ")
            .to_string();
        UsageError {
            message,
            clap_output: Some(rendered),
            informational,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Usage(#[from] UsageError),
    #[error(transparent)]
    Core(#[from] dkp_core::Error),
    #[error("cannot write {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(dkp_core::Error::CapExceeded { .. }) => EXIT_CAP,
            _ => EXIT_USAGE,
        }
    }
}

/// Output of a successful run: bytes for stdout and the exit code.
pub struct Outcome {
    pub stdout: Vec<u8>,
    pub code: i32,
}

/// Executes a parsed command line.
pub fn execute(spec: &RunSpec) -> Result<Outcome, CliError> {
    let stdout = match &spec.command {
        Command::Report => return report(spec),
        Command::Qcheck { n, m } => return qcheck(*n, *m),
        Command::Betas => betas(spec)?,
        Command::Lattice => lattice(spec)?,
        Command::Pairing { lambda, mu, nu } => {
            let rs = spec.rs();
            let w = WeylElement::from_word(rs, &spec.w)?;
            let y = WeylElement::from_word(rs, spec.y.as_deref().unwrap_or_default())?;
            let e = commutation_exponent(rs, &y, &w, lambda, mu, nu)?;
            format!("{e}\n").into_bytes()
        }
    };
    Ok(Outcome {
        stdout,
        code: EXIT_OK,
    })
}

fn report(spec: &RunSpec) -> Result<Outcome, CliError> {
    let rs = spec.rs();
    let w = WeylElement::from_word(rs, &spec.w)?;
    let interval = bruhat_interval(&w, spec.cap)?;
    let dot = spec.hasse.as_ref().map(|_| render_dot(&interval));
    if let (Some(path), Some(dot)) = (&spec.hasse, &dot) {
        if path.as_os_str() == "-" {
            return Ok(Outcome {
                stdout: dot.clone(),
                code: EXIT_OK,
            });
        }
        std::fs::write(path, dot).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
    }
    let records = stratification_report(&w, spec.cap)?;
    Ok(Outcome {
        stdout: render_report(&records, spec),
        code: EXIT_OK,
    })
}

fn betas(spec: &RunSpec) -> Result<Vec<u8>, CliError> {
    let rs = spec.rs();
    let roots = beta_sequence(rs, &spec.w)?;
    let json_rows: Vec<Vec<i64>> = roots.iter().map(|r| r.0.clone()).collect();
    Ok(match spec.format {
        Format::Json => {
            let mut s = serde_json::to_string(&json_rows).expect("serializes");
            s.push('\n');
            s.into_bytes()
        }
        Format::Table | Format::Csv => {
            let rows: Vec<Vec<String>> = roots
                .iter()
                .enumerate()
                .map(|(j, r)| {
                    let coords: Vec<String> = r.0.iter().map(i64::to_string).collect();
                    vec![
                        (j + 1).to_string(),
                        spec.w[j].to_string(),
                        format!("[{}]", coords.join(",")),
                        r.height().to_string(),
                    ]
                })
                .collect();
            tabular(spec.format, &["j", "i_j", "beta", "height"], &rows)
        }
    })
}

fn lattice(spec: &RunSpec) -> Result<Vec<u8>, CliError> {
    let rs = spec.rs();
    let w = WeylElement::from_word(rs, &spec.w)?;
    let y = WeylElement::from_word(rs, spec.y.as_deref().unwrap_or_default())?;
    if !bruhat_leq(&y, &w)? {
        return Err(dkp_core::Error::NotBelow {
            y: y.word().to_vec(),
            w: w.word().to_vec(),
        }
        .into());
    }
    let basis = kernel_lattice_basis(&y, &w)?;
    Ok(match spec.format {
        Format::Json => {
            let vecs: Vec<Vec<i64>> = basis.iter().map(|v| v.0.clone()).collect();
            let mut s = serde_json::to_string(&vecs).expect("serializes");
            s.push('\n');
            s.into_bytes()
        }
        Format::Table | Format::Csv => {
            let header: Vec<String> = (1..=rs.rank()).map(|i| format!("w{i}")).collect();
            let header: Vec<&str> = header.iter().map(String::as_str).collect();
            let rows: Vec<Vec<String>> = basis
                .iter()
                .map(|v| v.0.iter().map(i64::to_string).collect())
                .collect();
            tabular(spec.format, &header, &rows)
        }
    })
}

fn tabular(format: Format, header: &[&str], rows: &[Vec<String>]) -> Vec<u8> {
    if format == Format::Csv {
        let mut wtr = csv::Writer::from_writer(Vec::new());
        wtr.write_record(header).expect("write to memory");
        for row in rows {
            wtr.write_record(row).expect("write to memory");
        }
        wtr.into_inner().expect("flush to memory")
    } else {
        render::aligned_table(header, rows).into_bytes()
    }
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn qcheck(n: u32, m: u32) -> Result<Outcome, CliError> {
    for v in [n, m] {
        if v > MAX_TENSOR_FACTOR {
            return Err(
                UsageError::new(format!("--n/--m value {v} exceeds {MAX_TENSOR_FACTOR}")).into(),
            );
        }
    }
    let mut lines: Vec<(String, bool)> = Vec::new();
    let a1 = root_system(Series::A, 1)?;
    let mut sl2_sizes = vec![n, m];
    sl2_sizes.dedup();
    for k in sl2_sizes {
        let rep = uqsl2_rep(k)?;
        let report = verify_relations(&rep, &a1)?;
        for (family, ok) in report.families() {
            lines.push((format!("sl2 V({k}) {family}"), ok));
        }
        lines.push((
            format!("sl2 V({k}) weight grading"),
            check_weight_grading(&rep, &a1)?,
        ));
        lines.push((
            format!("sl2 V({k}) classical limit"),
            classical_sl2_check(k)?,
        ));
    }
    let a2 = root_system(Series::A, 2)?;
    let rep3 = uqsl3_vector_rep()?;
    for (family, ok) in verify_relations(&rep3, &a2)?.families() {
        lines.push((format!("sl3 vector {family}"), ok));
    }

    let r = rmatrix_on_tensor(n, m)?;
    let size = r.size();
    let id = QMatrix::identity(size);
    lines.push((
        format!("R({n},{m}) unipotent upper"),
        r.is_unipotent_upper(),
    ));
    lines.push((
        format!("R({n},{m}) determinant 1"),
        r.determinant().is_one(),
    ));
    let nil = &r - &id;
    lines.push((
        format!("R({n},{m}) (R-I)^{} = 0", n.min(m) + 1),
        nil.pow(n.min(m) + 1).is_zero(),
    ));
    let inv = unipotent_inverse(&r);
    lines.push((
        format!("R({n},{m}) Laurent inverse"),
        inv.all_laurent() && &r * &inv == id,
    ));

    let terms = phi_slice(n, m)?;
    let xm = uqsl2_rep(m)?.x_minus[0].clone();
    lines.push((
        format!("phi({n},{m}) has {} operators", n + 1),
        terms.len() == n as usize + 1,
    ));
    for t in &terms {
        let ok = !t.scalar.is_zero() && t.operator == xm.pow(t.power).scale(&t.scalar);
        lines.push((format!("phi({n},{m}) j={} = c·(X-)^{}", t.j, t.power), ok));
    }

    let width = lines
        .iter()
        .map(|(l, _)| l.chars().count())
        .max()
        .unwrap_or(0);
    let mut out = String::new();
    for (label, ok) in &lines {
        out.push_str(&format!("{label:<width$}  {}\n", mark(*ok)));
    }
    let all = lines.iter().all(|(_, ok)| *ok);
    Ok(Outcome {
        stdout: out.into_bytes(),
        code: if all { EXIT_OK } else { EXIT_CHECK_FAILED },
    })
}

/// Parses and runs `argv` (without the program name), writing to `out`
/// and `err`. Returns the exit code.
pub fn run<S: AsRef<str>>(argv: &[S], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let spec = match parse_spec(argv) {
        Ok(s) => s,
        Err(e) => {
            if let Some(text) = &e.clap_output {
                if e.informational {
                    let _ = out.write_all(text.as_bytes());
                    return EXIT_OK;
                }
                let _ = err.write_all(text.as_bytes());
            } else {
                let _ = writeln!(err, "error: {}", e.message);
            }
            return EXIT_USAGE;
        }
    };
    match execute(&spec) {
        Ok(outcome) => {
            if let Err(e) = out.write_all(&outcome.stdout) {
                let _ = writeln!(err, "error: {e}");
                return EXIT_USAGE;
            }
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
