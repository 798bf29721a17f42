mod gen;
mod hoa;
mod table;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use cocoa_kit::cocoa::chain_validate;
use cocoa_kit::format::{parse_document, Document};
use cocoa_kit::lasso::{cocoa_color, dpw_color, ncw_accepts, random_lassos};
use cocoa_kit::lowerbound::{certify_lower_bound, LowerBoundError};
use cocoa_kit::ops::{
    cocoa_to_dpw, dpw_contains, dpw_equivalent, dpw_is_empty, mh_determinize, Verdict,
};
use cocoa_kit::{Automaton, LassoWord};

/// Exit status for a check that ran and failed.
const FAILED: u8 = 1;
const USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "cocoa-kit",
    version,
    about = "Chains of co-Büchi automata and parity automata"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated automaton or chain.
    Gen {
        #[arg(value_enum)]
        family: gen::Family,
        #[arg(long)]
        k: Option<usize>,
        /// Level index for single-member families.
        #[arg(long)]
        i: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Emit HOA v1 instead of the native format.
        #[arg(long)]
        hoa: bool,
    },
    /// Print the color of a lasso word.
    Eval {
        file: PathBuf,
        /// e.g. `X_1 a_0|a_3`
        #[arg(required_unless_present = "random")]
        lasso: Option<String>,
        /// Evaluate this many sampled lassos instead (seed from COCOAKIT_SEED).
        #[arg(long, conflicts_with = "lasso")]
        random: Option<usize>,
    },
    /// Decide a property; exit 1 with a witness when it fails.
    Check {
        #[command(subcommand)]
        kind: CheckKind,
    },
    /// Emit a size comparison table.
    Table {
        #[arg(value_enum)]
        which: table::Which,
        #[arg(long)]
        kmax: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: table::Format,
        /// Add a wall_ms column.
        #[arg(long)]
        timing: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CheckKind {
    /// L(A) ⊆ L(B).
    Contains {
        a: PathBuf,
        b: PathBuf,
    },
    Equiv {
        a: PathBuf,
        b: PathBuf,
    },
    Empty {
        file: PathBuf,
    },
    /// Every member strictly contains the next.
    Chain {
        file: PathBuf,
    },
    /// Certify that a parity automaton for the `cocoa-c` language has 2^k states.
    Certify {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        cert_out: Option<PathBuf>,
    },
}

fn read_document(path: &Path) -> Result<Document> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_document(&text).with_context(|| format!("parsing {}", path.display()))
}

/// A deterministic parity automaton with the file's language.
fn read_dpw(path: &Path) -> Result<Automaton> {
    Ok(match read_document(path)? {
        Document::Automaton(a) if a.is_deterministic() => a,
        Document::Automaton(a) => mh_determinize(&a)?,
        Document::Cocoa(c) => cocoa_to_dpw(&c.determinized()?)?,
    })
}

fn write_output(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn seed() -> Result<u64> {
    match std::env::var("COCOAKIT_SEED") {
        Ok(s) => s
            .trim()
            .parse()
            .context("COCOAKIT_SEED must be an unsigned integer"),
        Err(_) => Ok(0),
    }
}

fn eval_line(doc: &Document, w: &LassoWord) -> Result<String> {
    let (color, accepted) = match doc {
        Document::Cocoa(c) => {
            let color = cocoa_color(c, w)?;
            (color as u64, color % 2 == 0)
        }
        Document::Automaton(a) if a.is_deterministic() => {
            let color = dpw_color(a, w)?;
            (color as u64, color % 2 == 0)
        }
        Document::Automaton(a) => {
            let color = dpw_color(&mh_determinize(a)?, w)?;
            (color as u64, ncw_accepts(a, w)?)
        }
    };
    Ok(format!("color={color} accepted={accepted}"))
}

fn verdict(v: Verdict, ok: &str, failed: &str, doc_alphabet: &cocoa_kit::Alphabet) -> u8 {
    match v {
        Verdict::Holds => {
            println!("{ok}");
            0
        }
        Verdict::Fails(w) => {
            println!("{failed}: witness {}", w.to_text(doc_alphabet));
            FAILED
        }
    }
}

fn check(kind: CheckKind) -> Result<u8> {
    Ok(match kind {
        CheckKind::Contains { a, b } => {
            let (a, b) = (read_dpw(&a)?, read_dpw(&b)?);
            verdict(
                dpw_contains(&a, &b)?,
                "contained",
                "not contained",
                a.alphabet(),
            )
        }
        CheckKind::Equiv { a, b } => {
            let (a, b) = (read_dpw(&a)?, read_dpw(&b)?);
            verdict(
                dpw_equivalent(&a, &b)?,
                "equivalent",
                "not equivalent",
                a.alphabet(),
            )
        }
        CheckKind::Empty { file } => {
            let a = read_dpw(&file)?;
            verdict(dpw_is_empty(&a)?, "empty", "not empty", a.alphabet())
        }
        CheckKind::Chain { file } => {
            let Document::Cocoa(c) = read_document(&file)? else {
                bail!("{} is not a COCOA file", file.display());
            };
            let diags = chain_validate(&c.determinized()?)?;
            for d in &diags {
                println!("{}", d.describe(c.alphabet()));
            }
            if diags.is_empty() {
                println!("falling chain of {} members", c.len());
                0
            } else {
                FAILED
            }
        }
        CheckKind::Certify { file, k, cert_out } => {
            let dpw = read_dpw(&file)?;
            match certify_lower_bound(&dpw, k) {
                Ok(cert) => {
                    println!("bound={} states={}", cert.bound, dpw.state_count());
                    if let Some(p) = cert_out {
                        write_output(Some(&p), &cert.to_text(dpw.alphabet()))?;
                    }
                    0
                }
                Err(
                    e @ (LowerBoundError::NotClosed { .. }
                    | LowerBoundError::Overlap { .. }
                    | LowerBoundError::NoSubScc { .. }),
                ) => {
                    println!("{e}");
                    FAILED
                }
                Err(e) => return Err(e.into()),
            }
        }
    })
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Gen {
            family,
            k,
            i,
            out,
            hoa,
        } => {
            let g = gen::generate(family, k, i)?;
            write_output(out.as_deref(), &g.to_text(hoa))?;
            Ok(0)
        }
        Command::Eval {
            file,
            lasso,
            random,
        } => {
            let doc = read_document(&file)?;
            let al = match &doc {
                Document::Automaton(a) => a.alphabet().clone(),
                Document::Cocoa(c) => c.alphabet().clone(),
            };
            if let Some(n) = random {
                for w in random_lassos(al.len(), n, 3, 3, seed()?) {
                    println!("{} {}", w.to_text(&al), eval_line(&doc, &w)?);
                }
            } else {
                let text = lasso.expect("clap requires a lasso without --random");
                let w = LassoWord::parse(&text, &al).with_context(|| format!("lasso `{text}`"))?;
                println!("{}", eval_line(&doc, &w)?);
            }
            Ok(0)
        }
        Command::Check { kind } => check(kind),
        Command::Table {
            which,
            kmax,
            format,
            timing,
            out,
        } => {
            let report = table::build(which, kmax.unwrap_or(which.default_kmax()))?;
            let text = match format {
                table::Format::Csv => report.to_csv(timing)?,
                table::Format::Text => report.to_text(timing),
            };
            write_output(out.as_deref(), &text)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(USAGE)
        }
    }
}
