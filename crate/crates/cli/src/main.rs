//! `linfield`: command-line front end.
//!
//! Exit codes: 0 when every check passes, 1 when a mathematical check fails,
//! 2 on a usage error (bad flag, unparsable polynomial, incompatible fields).

mod commands;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use linfield::Error;

#[derive(Parser, Debug)]
#[command(name = "linfield", version, about = "Linearized polynomials, Moore determinants, semilinear groups and Galois groups over finite fields")]
pub struct Cli {
    /// Report format; defaults to `structured` when `--out` is given.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Describe GF(q): modulus and least primitive element.
    Field(FieldArgs),
    #[command(subcommand)]
    Linpoly(LinpolyCmd),
    #[command(subcommand)]
    Moore(MooreCmd),
    #[command(subcommand)]
    Groups(GroupsCmd),
    #[command(subcommand)]
    Galois(GaloisCmd),
    /// Run a named check suite.
    Suite {
        /// One of: moore, roundtrip, orders, transitivity, sl32, exceptional,
        /// singer, distinguish, impossibility, projective.
        name: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args, Debug)]
pub struct FieldArgs {
    #[arg(long)]
    pub q: Option<u64>,
    /// `GF(q)`, `GF(p^k)` or `GF(p^k; modulus)`.
    #[arg(long)]
    pub field: Option<String>,
}

/// A q-polynomial over a ground field.
#[derive(Args, Debug, Clone)]
pub struct LinArgs {
    #[arg(long)]
    pub q: u64,
    /// Ground field; defaults to GF(q).
    #[arg(long)]
    pub field: Option<String>,
    /// `a_n*x^q^n + ... + a_0*x` (numeric or `q^i` exponents) or `lin(q; a_0, ..., a_n)`.
    #[arg(long)]
    pub lin: String,
}

#[derive(Subcommand, Debug)]
pub enum LinpolyCmd {
    /// Evaluate L at an element of the ground field or of `--ext`.
    Eval {
        #[command(flatten)]
        l: LinArgs,
        #[arg(long)]
        at: String,
        /// Extension field containing the point.
        #[arg(long)]
        ext: Option<String>,
    },
    /// The q-associate of L (coefficients in GF(q)), or the q-polynomial of `--poly`.
    Associate {
        #[arg(long)]
        q: u64,
        #[arg(long, conflicts_with = "poly", required_unless_present = "poly")]
        lin: Option<String>,
        /// An ordinary polynomial over GF(q).
        #[arg(long)]
        poly: Option<String>,
    },
    /// The projective polynomial P with P(x^(q-1)) x = L(x).
    Projective(LinArgs),
    /// Splitting degree and a GF(q)-basis of the roots.
    Roots {
        #[command(flatten)]
        l: LinArgs,
        /// Largest splitting degree to accept (default q^n - 1).
        #[arg(long)]
        cap: Option<u64>,
    },
    /// Whether L(x)/x is irreducible over the ground field.
    Irreducible(LinArgs),
    /// Check the hypotheses on f and g for the family f + t g.
    Family {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        field: Option<String>,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
    },
}

#[derive(Args, Debug)]
pub struct BasisArgs {
    #[arg(long)]
    pub q: u64,
    /// Field containing the basis elements.
    #[arg(long)]
    pub field: String,
    /// Comma-separated elements.
    #[arg(long)]
    pub basis: String,
}

#[derive(Subcommand, Debug)]
pub enum MooreCmd {
    /// Moore matrix and determinant of a basis.
    Delta(BasisArgs),
    /// The monic q-polynomial vanishing on the span of a basis.
    Reconstruct(BasisArgs),
    /// The five determinant identities for L.
    Verify(LinArgs),
}

#[derive(Args, Debug)]
pub struct QnArgs {
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub n: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GroupName {
    Singer,
    Gammal,
    Gammal1,
    Sl,
    Gl,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Auto,
    Exhaustive,
    Randomized,
}

#[derive(Subcommand, Debug)]
pub enum GroupsCmd {
    /// A Singer cycle in GL(n,q).
    Singer(QnArgs),
    /// ΓL(1,q^n), or ΓL₁(1,q^n) with `--sl`.
    Gammal {
        #[command(flatten)]
        qn: QnArgs,
        #[arg(long)]
        sl: bool,
        #[arg(long, default_value_t = linfield::groups::DEFAULT_ENUM_CAP)]
        cap: u64,
    },
    /// Orbits of a named group on nonzero vectors.
    Orbits {
        #[command(flatten)]
        qn: QnArgs,
        #[arg(long, value_enum)]
        group: GroupName,
    },
    /// Transitive subgroups of SL(n,q).
    Classify {
        #[command(flatten)]
        qn: QnArgs,
        #[arg(long, value_enum, default_value_t = Mode::Auto)]
        mode: Mode,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Bound on |SL(n,q)| for exhaustive mode.
        #[arg(long, default_value_t = linfield::groups::DEFAULT_ENUM_CAP)]
        cap: u64,
        #[arg(long, default_value_t = linfield::groups::DEFAULT_CLOSURE_CAP)]
        closure_cap: u64,
        /// Generator pairs tried in randomized mode.
        #[arg(long, default_value_t = 2000)]
        samples: u64,
        /// Also recount the classes from the full subgroup lattice.
        #[arg(long)]
        cross_check: bool,
    },
    /// Order statistics of a named group.
    Fingerprint {
        #[command(flatten)]
        qn: QnArgs,
        #[arg(long, value_enum)]
        group: GroupName,
    },
}

#[derive(Subcommand, Debug)]
pub enum GaloisCmd {
    /// The cyclic Galois group of L over a finite field.
    Finite(LinArgs),
    /// Rule out candidate groups for L over GF(q^m)(t) by specialization.
    Distinguish {
        /// Defaults to the characteristic of the field (or 2).
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        field: Option<String>,
        /// Polynomial in x and t, e.g. `x^8 + x^2 + t*x`.
        #[arg(long)]
        lin: String,
        /// Comma-separated names among Z, GammaL, GammaL1, SL, GL.
        #[arg(long, default_value = "Z,GammaL,SL")]
        candidates: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Accepted specializations to collect.
        #[arg(long, default_value_t = 500)]
        samples: usize,
    },
    /// Splitting degrees of L and its projective polynomial.
    PslCheck(LinArgs),
}

/// Outcome of a command that could not produce a report.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Math(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) | Error::AllRuledOut => Failure::Math(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var("LINFIELD_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    configure_threads();
    let start = Instant::now();
    let mut report = match commands::run(&cli.command) {
        Ok(r) => r,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            return ExitCode::from(2);
        }
        Err(Failure::Math(m)) => {
            eprintln!("check failed: {m}");
            return ExitCode::from(1);
        }
    };
    report.timing.elapsed_ms = start.elapsed().as_millis() as u64;
    let format = cli.format.unwrap_or(if cli.out.is_some() { Format::Structured } else { Format::Text });
    let body = match format {
        Format::Text => report.to_text(),
        Format::Structured => report.to_json(),
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, body),
        None => std::io::stdout().write_all(body.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write report: {e}");
        return ExitCode::from(2);
    }
    if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
