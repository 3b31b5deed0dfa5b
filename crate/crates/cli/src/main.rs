use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};
use wordbell::bell::{self, colored_psi_bell, colored_psi_complete, word_complete_bell, word_partial_bell};
use wordbell::combinatorics::ColorSequence;
use wordbell::munthekaas::{hessenberg_expansion, mb, nc_poly_json};
use wordbell::realization::{realize_phi, realize_psi, word_poly_json};
use wordbell::verify::{self, Suite};
use wordbell::Rational;

const DEFAULT_LIMIT: usize = 12;
const LIMIT_VAR: &str = "WORDBELL_MAX_DEGREE";

#[derive(Parser)]
#[command(name = "wordbell", version, about = "Bell polynomials on colored set partitions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Partial Bell values B_{n,k}(a) and totals A_n(a) for n <= nMax.
    Table {
        kind: TableKind,
        n_max: Option<usize>,
        /// Sequence literal for `custom`, e.g. "a=1,2,9,64 tail:tree".
        seq: Option<String>,
        #[arg(long = "max-n")]
        max_n: Option<usize>,
        #[arg(long = "seq")]
        seq_flag: Option<String>,
    },
    /// Expand a word Bell polynomial, a colored Ψ Bell polynomial or MB_{n,k}.
    Expand {
        kind: ExpandKind,
        n: Option<usize>,
        /// Omitted: the complete polynomial.
        k: Option<usize>,
        seq: Option<String>,
        #[arg(long = "n")]
        n_flag: Option<usize>,
        #[arg(long = "k")]
        k_flag: Option<usize>,
        #[arg(long = "seq")]
        seq_flag: Option<String>,
    },
    /// Word polynomial of 𝔅_{n,k} (phi) or of the colored ℬ_{n,k} (psi).
    Realize {
        n: Option<usize>,
        k: Option<usize>,
        #[arg(long = "n")]
        n_flag: Option<usize>,
        #[arg(long = "k")]
        k_flag: Option<usize>,
        #[arg(long, value_enum, default_value_t = RealizeBasis::Phi)]
        basis: RealizeBasis,
        #[arg(long = "seq")]
        seq: Option<String>,
        /// Letters per alphabet; defaults to n.
        #[arg(long)]
        letters: Option<usize>,
    },
    /// MB_n(t) by powers of t, with the Hessenberg expansion of MB_n(1).
    Mk {
        n: Option<usize>,
        #[arg(long = "n")]
        n_flag: Option<usize>,
    },
    /// Run a verification suite; exit 1 if any identity fails.
    Verify {
        suite: SuiteArg,
        max_n: Option<usize>,
        #[arg(long = "max-n")]
        max_n_flag: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    Stirling2,
    Stirling1,
    Lah,
    Idempotent,
    Bell,
    Lists,
    Level2,
    Custom,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExpandKind {
    #[value(name = "wordBell")]
    WordBell,
    #[value(name = "coloredPsi")]
    ColoredPsi,
    #[value(name = "mk")]
    Mk,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RealizeBasis {
    Phi,
    Psi,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Hopf,
    Bell,
    Word,
    Mk,
    Appendix,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Hopf => Suite::Hopf,
            SuiteArg::Bell => Suite::Bell,
            SuiteArg::Word => Suite::Word,
            SuiteArg::Mk => Suite::Mk,
            SuiteArg::Appendix => Suite::Appendix,
            SuiteArg::All => Suite::All,
        }
    }
}

enum Failure {
    Usage(String),
    Io(std::io::Error),
}

struct Output {
    text: String,
    verified: bool,
}

fn usage<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

fn limit() -> Result<usize, Failure> {
    match std::env::var(LIMIT_VAR) {
        Ok(v) => v.trim().parse().or_else(|_| usage(format!("{LIMIT_VAR} must be a nonnegative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_LIMIT),
    }
}

fn env_cap() -> Result<Option<usize>, Failure> {
    match std::env::var(LIMIT_VAR) {
        Ok(_) => limit().map(Some),
        Err(_) => Ok(None),
    }
}

fn bounded(what: &str, n: usize) -> Result<usize, Failure> {
    let l = limit()?;
    if n > l {
        return usage(format!("{what} = {n} exceeds the degree limit {l} (set {LIMIT_VAR} to raise it)"));
    }
    Ok(n)
}

fn either<T>(name: &str, pos: Option<T>, flag: Option<T>) -> Result<Option<T>, Failure> {
    match (pos, flag) {
        (Some(_), Some(_)) => usage(format!("{name} given both positionally and as --{name}")),
        (p, f) => Ok(p.or(f)),
    }
}

fn sequence(lit: Option<String>, default: ColorSequence) -> Result<ColorSequence, Failure> {
    match lit {
        Some(s) => s.parse().or_else(|e| usage(format!("bad sequence literal {s:?}: {e}"))),
        None => Ok(default),
    }
}

fn json_only(format: Format, what: &str) -> Result<(), Failure> {
    if format == Format::Csv {
        return usage(format!("{what} output is not a rectangular table; use --format json"));
    }
    Ok(())
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn run(cli: Cli) -> Result<Output, Failure> {
    let format = cli.format;
    let done = |text: String| Ok(Output { text, verified: true });
    match cli.command {
        Command::Table { kind, n_max, seq, max_n, seq_flag } => {
            let n_max = bounded("nMax", either("max-n", n_max, max_n)?.unwrap_or(8))?;
            let seq = either("seq", seq, seq_flag)?;
            let a = match kind {
                TableKind::Custom => match seq {
                    Some(s) => sequence(Some(s), ColorSequence::ones())?,
                    None => return usage("table custom needs a sequence literal"),
                },
                _ if seq.is_some() => return usage("only table custom takes a sequence"),
                TableKind::Stirling2 | TableKind::Bell => ColorSequence::ones(),
                TableKind::Stirling1 => ColorSequence::shifted_factorial(),
                TableKind::Lah | TableKind::Lists => ColorSequence::factorial(),
                TableKind::Idempotent => ColorSequence::idempotent(),
                TableKind::Level2 => ColorSequence::bell(),
            };
            let name = kind.to_possible_value().expect("named").get_name().to_string();
            done(table(&name, &a, n_max, format))
        }
        Command::Expand { kind, n, k, seq, n_flag, k_flag, seq_flag } => {
            json_only(format, "expand")?;
            let Some(n) = either("n", n, n_flag)? else { return usage("expand needs n") };
            let n = bounded("n", n)?;
            let k = either("k", k, k_flag)?;
            if k.is_some_and(|k| k > n) {
                return usage("k must not exceed n");
            }
            let seq = either("seq", seq, seq_flag)?;
            let v = match kind {
                ExpandKind::WordBell => {
                    if seq.is_some() {
                        return usage("wordBell is uncolored; drop the sequence");
                    }
                    match k {
                        Some(k) => word_partial_bell::<Rational>(n, k).to_json(),
                        None => word_complete_bell::<Rational>(n).to_json(),
                    }
                }
                ExpandKind::ColoredPsi => {
                    let a = sequence(seq, ColorSequence::ones())?;
                    match k {
                        Some(k) => colored_psi_bell::<Rational>(&a, n, k).to_json(),
                        None => colored_psi_complete::<Rational>(&a, n).to_json(),
                    }
                }
                ExpandKind::Mk => {
                    if seq.is_some() {
                        return usage("mk takes no sequence");
                    }
                    let p = mb::<Rational>(n);
                    match k {
                        Some(k) => nc_poly_json(&p.coeff(k)),
                        None => nc_poly_json(&p.coeffs().iter().fold(Default::default(), |acc, x| acc + x.clone())),
                    }
                }
            };
            done(pretty(&v))
        }
        Command::Realize { n, k, n_flag, k_flag, basis, seq, letters } => {
            json_only(format, "realize")?;
            let Some(n) = either("n", n, n_flag)? else { return usage("realize needs n") };
            let n = bounded("n", n)?;
            let k = either("k", k, k_flag)?;
            let l = letters.unwrap_or(n);
            let w = match basis {
                RealizeBasis::Phi => {
                    if seq.is_some() {
                        return usage("the phi realization is uncolored; use --basis psi with --seq");
                    }
                    let x = match k {
                        Some(k) => word_partial_bell::<Rational>(n, k),
                        None => word_complete_bell::<Rational>(n),
                    };
                    realize_phi(x.terms(), l)
                }
                RealizeBasis::Psi => {
                    let a = sequence(seq, ColorSequence::ones())?;
                    let x = match k {
                        Some(k) => colored_psi_bell::<Rational>(&a, n, k),
                        None => colored_psi_complete::<Rational>(&a, n),
                    };
                    realize_psi(x.terms(), l)
                }
            };
            let mut v = json!({"n": n, "letters": l});
            if let Some(k) = k {
                v["k"] = json!(k);
            }
            v["polynomial"] = word_poly_json(&w);
            done(pretty(&v))
        }
        Command::Mk { n, n_flag } => {
            json_only(format, "mk")?;
            let Some(n) = either("n", n, n_flag)? else { return usage("mk needs n") };
            let n = bounded("n", n)?;
            let p = mb::<Rational>(n);
            let by_k: serde_json::Map<String, Value> = (0..=n).map(|k| (k.to_string(), nc_poly_json(&p.coeff(k)))).collect();
            let total = p.coeffs().iter().fold(Default::default(), |acc, x| acc + x.clone());
            let v = json!({
                "n": n,
                "partial": by_k,
                "total": nc_poly_json(&total),
                "hessenberg_matches": hessenberg_expansion::<Rational>(n) == total,
            });
            done(pretty(&v))
        }
        Command::Verify { suite, max_n, max_n_flag } => {
            json_only(format, "verify")?;
            let cap = match (either("max-n", max_n, max_n_flag)?, env_cap()?) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            };
            let report = verify::run(suite.into(), cap);
            if let Some(c) = report.checks.iter().find(|c| !c.passed()) {
                eprintln!("first failure: {} [{}]: {}", c.identity, c.range, c.counterexample.clone().unwrap_or_default());
            }
            Ok(Output { text: pretty(&report.to_json()), verified: report.passed() })
        }
    }
}

/// `partial` holds `B_{n,k}` for `1 <= k <= n <= nMax`; `total` holds
/// `A_n` for `0 <= n <= nMax`.
fn table(name: &str, a: &ColorSequence, n_max: usize, format: Format) -> String {
    let values: Vec<BigInt> = a.values(n_max);
    let rows = bell::table(&values, n_max);
    let totals: Vec<BigInt> = rows.iter().map(|row| row.iter().sum()).collect();
    match format {
        Format::Json => {
            let partial: Vec<Vec<String>> = rows.iter().skip(1).map(|row| row[1..].iter().map(|x| x.to_string()).collect()).collect();
            let total: Vec<String> = totals.iter().map(|x| x.to_string()).collect();
            pretty(&json!({"table": name, "sequence": a.to_string(), "partial": partial, "total": total}))
        }
        Format::Csv => {
            let mut s = String::from("n,total");
            for k in 1..=n_max {
                s.push_str(&format!(",k{k}"));
            }
            s.push('\n');
            for (n, row) in rows.iter().enumerate() {
                s.push_str(&format!("{n},{}", totals[n]));
                for k in 1..=n_max {
                    s.push(',');
                    s.push_str(&row.get(k).map_or_else(|| "0".to_string(), |x| x.to_string()));
                }
                s.push('\n');
            }
            s
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.out.clone();
    let result = run(cli).and_then(|o| {
        match &out {
            Some(path) => std::fs::write(path, &o.text).map_err(Failure::Io)?,
            None => std::io::stdout().write_all(o.text.as_bytes()).map_err(Failure::Io)?,
        }
        Ok(o.verified)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
