use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dkp_core::{RootSystem, Weight, DEFAULT_INTERVAL_CAP};

use crate::UsageError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Report,
    Qcheck {
        n: u32,
        m: u32,
    },
    Betas,
    Lattice,
    Pairing {
        lambda: Weight,
        mu: Weight,
        nu: Weight,
    },
}

/// Validated command line.
#[derive(Debug, Clone)]
pub struct RunSpec {
    pub command: Command,
    pub root_system: Option<Arc<RootSystem>>,
    pub w: Vec<usize>,
    pub y: Option<Vec<usize>>,
    pub format: Format,
    pub basis: bool,
    pub hasse: Option<PathBuf>,
    pub double: bool,
    pub cap: usize,
}

impl RunSpec {
    pub fn rs(&self) -> &Arc<RootSystem> {
        self.root_system
            .as_ref()
            .expect("command takes a root system")
    }

    pub fn type_name(&self) -> String {
        self.root_system
            .as_ref()
            .map(|rs| rs.name())
            .unwrap_or_default()
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "dkp",
    version,
    about = "Strata of torus-invariant primes of U^w_- and quantum checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Stratification report over the Bruhat interval below w (default)
    Report(ReportArgs),
    /// Exact U_q(sl2) / U_q(sl3) relation, R-matrix and contraction checks
    Qcheck(QcheckArgs),
    /// Root sequence of a reduced word
    Betas(TypeWord),
    /// Basis of the kernel lattice of y + w
    Lattice(TypeYW),
    /// Commutation exponent -<(y+w)λ, ν + wμ>
    Pairing(PairingArgs),
}

#[derive(Args, Debug)]
struct TypeWord {
    /// Simple type, e.g. A2, B3, G2, E6
    #[arg(long = "type")]
    ty: String,
    /// Word for w: digits ("121") or a comma list ("1,2,1"); "e" or "" for the identity
    #[arg(long, allow_hyphen_values = true)]
    w: String,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Args, Debug)]
struct ReportArgs {
    #[command(flatten)]
    tw: TypeWordNoFormat,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Include kernel lattice bases
    #[arg(long)]
    basis: bool,
    /// Write the Hasse diagram of the interval as DOT to this path ("-" for stdout)
    #[arg(long)]
    hasse: Option<PathBuf>,
    /// Include the dim E_{+1}(w^{-1}y) column
    #[arg(long)]
    double: bool,
    /// Maximum length of w for interval enumeration
    #[arg(long, default_value_t = DEFAULT_INTERVAL_CAP)]
    cap: usize,
}

#[derive(Args, Debug)]
struct TypeWordNoFormat {
    #[arg(long = "type")]
    ty: String,
    #[arg(long, allow_hyphen_values = true)]
    w: String,
}

#[derive(Args, Debug)]
struct TypeYW {
    #[arg(long = "type")]
    ty: String,
    #[arg(long, allow_hyphen_values = true)]
    y: String,
    #[arg(long, allow_hyphen_values = true)]
    w: String,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Args, Debug)]
struct QcheckArgs {
    /// Highest weight of the first tensor factor (≤ 8)
    #[arg(long, default_value_t = 2)]
    n: u32,
    /// Highest weight of the second tensor factor (≤ 8)
    #[arg(long, default_value_t = 2)]
    m: u32,
}

#[derive(Args, Debug)]
struct PairingArgs {
    #[command(flatten)]
    yw: TypeYWNoFormat,
    /// λ in fundamental-weight coordinates, comma separated
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    #[arg(long, allow_hyphen_values = true)]
    mu: String,
    #[arg(long, allow_hyphen_values = true)]
    nu: String,
}

#[derive(Args, Debug)]
struct TypeYWNoFormat {
    #[arg(long = "type")]
    ty: String,
    #[arg(long, allow_hyphen_values = true)]
    y: String,
    #[arg(long, allow_hyphen_values = true)]
    w: String,
}

const SUBCOMMANDS: [&str; 6] = ["report", "qcheck", "betas", "lattice", "pairing", "help"];

fn parse_type(s: &str) -> Result<Arc<RootSystem>, UsageError> {
    s.parse::<RootSystem>()
        .map(Arc::new)
        .map_err(|e| UsageError::new(format!("unknown type '{s}': {e}")))
}

/// Parses a word: digits for rank ≤ 9, otherwise a comma list. `e` and the
/// empty string denote the identity.
pub fn parse_word(s: &str, rank: usize) -> Result<Vec<usize>, UsageError> {
    let s = s.trim();
    if s.is_empty() || s == "e" {
        return Ok(Vec::new());
    }
    let word: Vec<usize> = if s.contains(',') {
        s.split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| UsageError::new(format!("bad word token '{tok}' in '{s}'")))
            })
            .collect::<Result<_, _>>()?
    } else {
        if rank > 9 {
            return Err(UsageError::new(format!(
                "rank {rank} needs a comma-separated word, got '{s}'"
            )));
        }
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| UsageError::new(format!("bad word character '{c}' in '{s}'")))
            })
            .collect::<Result<_, _>>()?
    };
    for &i in &word {
        if i == 0 || i > rank {
            return Err(UsageError::new(format!("index {i} exceeds rank {rank}")));
        }
    }
    Ok(word)
}

fn parse_weight(s: &str, rank: usize, flag: &str) -> Result<Weight, UsageError> {
    let coords: Vec<i64> = s
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<i64>()
                .map_err(|_| UsageError::new(format!("bad coordinate '{tok}' in --{flag}")))
        })
        .collect::<Result<_, _>>()?;
    if coords.len() != rank {
        return Err(UsageError::new(format!(
            "--{flag} has {} coordinates, rank is {rank}",
            coords.len()
        )));
    }
    Ok(Weight(coords))
}

/// Parses the arguments after the program name. A missing subcommand means `report`.
pub fn parse_spec<S: AsRef<str>>(argv: &[S]) -> Result<RunSpec, UsageError> {
    let mut full: Vec<String> = vec!["dkp".to_string()];
    let first = argv.first().map(|s| s.as_ref().to_string());
    let implicit_report = match first.as_deref() {
        None => false,
        Some(a) => !SUBCOMMANDS.contains(&a) && !matches!(a, "-h" | "--help" | "-V" | "--version"),
    };
    if implicit_report {
        full.push("report".to_string());
    }
    full.extend(argv.iter().map(|s| s.as_ref().to_string()));
    let cli = Cli::try_parse_from(full).map_err(UsageError::from_clap)?;

    let spec = match cli.command {
        Cmd::Report(a) => {
            let rs = parse_type(&a.tw.ty)?;
            let w = parse_word(&a.tw.w, rs.rank())?;
            let dot_to_stdout = a.hasse.as_deref().is_some_and(|p| p.as_os_str() == "-");
            if dot_to_stdout {
                let clash = [
                    (a.format.is_some(), "--format"),
                    (a.basis, "--basis"),
                    (a.double, "--double"),
                ];
                if let Some((_, flag)) = clash.iter().find(|(set, _)| *set) {
                    return Err(UsageError::new(format!("--hasse - conflicts with {flag}")));
                }
            }
            if a.cap == 0 {
                return Err(UsageError::new("--cap must be positive".to_string()));
            }
            RunSpec {
                command: Command::Report,
                root_system: Some(rs),
                w,
                y: None,
                format: a.format.unwrap_or(Format::Table),
                basis: a.basis,
                hasse: a.hasse,
                double: a.double,
                cap: a.cap,
            }
        }
        Cmd::Qcheck(a) => RunSpec {
            command: Command::Qcheck { n: a.n, m: a.m },
            root_system: None,
            w: Vec::new(),
            y: None,
            format: Format::Table,
            basis: false,
            hasse: None,
            double: false,
            cap: DEFAULT_INTERVAL_CAP,
        },
        Cmd::Betas(a) => {
            let rs = parse_type(&a.ty)?;
            let w = parse_word(&a.w, rs.rank())?;
            RunSpec {
                command: Command::Betas,
                root_system: Some(rs),
                w,
                y: None,
                format: a.format,
                basis: false,
                hasse: None,
                double: false,
                cap: DEFAULT_INTERVAL_CAP,
            }
        }
        Cmd::Lattice(a) => {
            let rs = parse_type(&a.ty)?;
            let w = parse_word(&a.w, rs.rank())?;
            let y = parse_word(&a.y, rs.rank())?;
            RunSpec {
                command: Command::Lattice,
                root_system: Some(rs),
                w,
                y: Some(y),
                format: a.format,
                basis: true,
                hasse: None,
                double: false,
                cap: DEFAULT_INTERVAL_CAP,
            }
        }
        Cmd::Pairing(a) => {
            let rs = parse_type(&a.yw.ty)?;
            let w = parse_word(&a.yw.w, rs.rank())?;
            let y = parse_word(&a.yw.y, rs.rank())?;
            let r = rs.rank();
            let command = Command::Pairing {
                lambda: parse_weight(&a.lambda, r, "lambda")?,
                mu: parse_weight(&a.mu, r, "mu")?,
                nu: parse_weight(&a.nu, r, "nu")?,
            };
            RunSpec {
                command,
                root_system: Some(rs),
                w,
                y: Some(y),
                format: Format::Table,
                basis: false,
                hasse: None,
                double: false,
                cap: DEFAULT_INTERVAL_CAP,
            }
        }
    };
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_report() {
        let s = parse_spec(&["--type", "A2", "--w", "121"]).unwrap();
        assert_eq!(s.command, Command::Report);
        assert_eq!(s.type_name(), "A2");
        assert_eq!(s.w, vec![1, 2, 1]);
        assert_eq!(s.format, Format::Table);
        assert_eq!(s.cap, DEFAULT_INTERVAL_CAP);
    }

    #[test]
    fn index_beyond_rank() {
        let e = parse_spec(&["--type", "A2", "--w", "131"]).unwrap_err();
        assert!(
            e.message.contains("index 3 exceeds rank 2"),
            "{}",
            e.message
        );
    }

    #[test]
    fn comma_words() {
        let s = parse_spec(&["--type", "E6", "--w", "1,2,3,4,5,6"]).unwrap();
        assert_eq!(s.w, vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(s.rs().rank(), 6);
    }

    #[test]
    fn bad_inputs() {
        let e = parse_spec(&["--type", "X2", "--w", "1"]).unwrap_err();
        assert!(e.message.contains("unknown type 'X2'"));
        let e = parse_spec(&["--type", "A2", "--w", "1a"]).unwrap_err();
        assert!(e.message.contains("bad word character 'a'"));
        let e = parse_spec(&["--type", "A2", "--w", "0"]).unwrap_err();
        assert!(e.message.contains("index 0"));
        let e = parse_spec(&["--type", "A2", "--w", "1", "--hasse", "-", "--basis"]).unwrap_err();
        assert!(e.message.contains("conflicts with --basis"));
        let e = parse_spec(&["--type", "A2", "--w", "1", "--w", "2"]).unwrap_err();
        assert!(e.message.contains("--w"), "{}", e.message);
        assert!(parse_spec(&["--type", "A2"]).is_err());
    }

    #[test]
    fn identity_words() {
        assert_eq!(parse_word("e", 3).unwrap(), Vec::<usize>::new());
        assert_eq!(parse_word("", 3).unwrap(), Vec::<usize>::new());
        assert!(parse_word("12", 10).is_err());
        assert_eq!(parse_word("1,10", 10).unwrap(), vec![1, 10]);
    }

    #[test]
    fn subcommands() {
        let s = parse_spec(&["qcheck", "--n", "3", "--m", "1"]).unwrap();
        assert_eq!(s.command, Command::Qcheck { n: 3, m: 1 });
        let s = parse_spec(&["lattice", "--type", "A2", "--y", "e", "--w", "121"]).unwrap();
        assert_eq!(s.y, Some(vec![]));
        let s = parse_spec(&[
            "pairing", "--type", "A2", "--y", "1", "--w", "121", "--lambda", "1,0", "--mu", "-1,0",
            "--nu", "1,0",
        ])
        .unwrap();
        assert!(matches!(s.command, Command::Pairing { ref mu, .. } if mu.0 == vec![-1, 0]));
        assert!(parse_spec(&[
            "pairing", "--type", "A2", "--y", "1", "--w", "1", "--lambda", "1", "--mu", "1,0",
            "--nu", "0,0"
        ])
        .is_err());
    }
}
