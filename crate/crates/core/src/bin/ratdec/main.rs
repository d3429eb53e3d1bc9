//! `ratdec`: build codes, encode, corrupt and list-decode from the shell.
//!
//! Exit codes: 0 success, 1 usage or I/O error, 2 decoding failure (empty
//! list), 3 infeasible parameters.

mod rng;
mod selftest;
mod spec_file;
mod words;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use ratdec::decode::{hamming_distance, DecodeOptions, DecodeOutput};
use ratdec::goppa::{goppa_params, random_irreducible, wu_decode_goppa_with, GoppaCode};
use ratdec::grs::{grs_params, wu_decode_with, GrsCode};
use ratdec::{Elem, Error, Field, FieldSpec, Poly};
use rng::Rng;
use serde::Serialize;
use spec_file::{elems, load, Code, CodeSpecFile};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "ratdec", version, about = "List decoding of GRS and binary Goppa codes")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a code description.
    #[command(subcommand)]
    New(NewCmd),
    /// Encode one message per line.
    Encode {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        message: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Add exactly `errors` symbol errors at seeded random positions.
    Corrupt {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        word: PathBuf,
        #[arg(long)]
        errors: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// List all codewords within distance `tau` of a received word.
    Decode {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        word: PathBuf,
        #[arg(long)]
        tau: usize,
        #[command(flatten)]
        list: ListArgs,
        #[arg(long)]
        out: PathBuf,
    },
    /// Report the list size and multiplicity chosen for a radius.
    Params {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        tau: usize,
        #[arg(long, default_value_t = 64)]
        ell_max: usize,
    },
    /// Check the decoders against brute-force oracles.
    Selftest {
        #[arg(long)]
        quick: bool,
    },
}

#[derive(Args)]
struct ListArgs {
    #[arg(long, requires = "s")]
    ell: Option<usize>,
    #[arg(long, requires = "ell")]
    s: Option<usize>,
    #[arg(long, default_value_t = 64)]
    ell_max: usize,
}

impl ListArgs {
    fn options(&self) -> DecodeOptions {
        DecodeOptions {
            ell_max: self.ell_max,
            forced: self.ell.zip(self.s),
        }
    }
}

#[derive(Subcommand)]
enum NewCmd {
    Grs {
        /// Field order.
        #[arg(long)]
        q: u32,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long, value_delimiter = ',')]
        modulus: Option<Vec<u32>>,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_delimiter = ',')]
        alphas: Option<Vec<u32>>,
        #[arg(long, value_delimiter = ',')]
        mults: Option<Vec<u32>>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Goppa {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        n: usize,
        /// Goppa polynomial coefficients, constant term first.
        #[arg(long, value_delimiter = ',')]
        g: Option<Vec<u32>>,
        #[arg(long, value_delimiter = ',')]
        support: Option<Vec<u32>>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli.cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            let infeasible = e
                .chain()
                .any(|c| matches!(c.downcast_ref::<Error>(), Some(Error::Infeasible(_))));
            ExitCode::from(if infeasible { 3 } else { 1 })
        }
    }
}

fn run(cmd: Command) -> Result<ExitCode> {
    match cmd {
        Command::New(new) => cmd_new(new)?,
        Command::Encode { code, message, out } => cmd_encode(&code, &message, &out)?,
        Command::Corrupt { code, word, errors, seed, out } => cmd_corrupt(&code, &word, errors, seed, &out)?,
        Command::Decode { code, word, tau, list, out } => return cmd_decode(&code, &word, tau, &list, &out),
        Command::Params { code, tau, ell_max } => return cmd_params(&code, tau, ell_max),
        Command::Selftest { quick } => return selftest::run(quick),
    }
    Ok(ExitCode::SUCCESS)
}

fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// `q = p^m` with `p` prime.
fn split_order(q: u32) -> Result<(u32, u32)> {
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).context("field order must be at least 2")?;
    let (mut rest, mut m) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    if rest != 1 {
        bail!("{q} is not a prime power");
    }
    Ok((p, m))
}

fn cmd_new(cmd: NewCmd) -> Result<()> {
    match cmd {
        NewCmd::Grs { q, m, modulus, n, k, alphas, mults, out } => {
            let (p, qm) = split_order(q)?;
            if let Some(m) = m {
                if m != qm {
                    bail!("--m {m} does not match q = {q} = {p}^{qm}");
                }
            }
            if qm == 1 && modulus.is_some() {
                bail!("a prime field takes no modulus");
            }
            let field = Field::new(FieldSpec::new(p, qm, modulus)?);
            let alphas = match alphas {
                Some(a) => elems(&field, &a)?,
                None => {
                    if n as u64 >= q as u64 {
                        bail!("n = {n} exceeds q - 1 = {}", q - 1);
                    }
                    (1..=n as u32).map(|v| field.elem(v)).collect::<ratdec::Result<_>>()?
                }
            };
            let mults = match mults {
                Some(v) => elems(&field, &v)?,
                None => vec![Elem::ONE; alphas.len()],
            };
            if alphas.len() != n {
                bail!("n = {n} but {} evaluation points given", alphas.len());
            }
            let code = GrsCode::new(&field, k, alphas, mults)?;
            emit(out.as_deref(), &CodeSpecFile::from_grs(&code).to_json())
        }
        NewCmd::Goppa { m, t, n, g, support, seed, out } => {
            let field = Field::binary(m)?;
            if t == 0 {
                bail!("t must be positive");
            }
            let g = match g {
                Some(c) => Poly::new(&field, elems(&field, &c)?),
                None => {
                    let mut rng = Rng::new(seed);
                    random_irreducible(&field, t, &mut || rng.next_u64())
                }
            };
            if g.deg().finite() != Some(t) {
                bail!("Goppa polynomial has degree {}, expected t = {t}", g.deg());
            }
            let support = match support {
                Some(s) => elems(&field, &s)?,
                None => {
                    if n > field.order() as usize {
                        bail!("n = {n} exceeds the field order {}", field.order());
                    }
                    (0..n as u32).map(|v| field.elem(v)).collect::<ratdec::Result<_>>()?
                }
            };
            if support.len() != n {
                bail!("n = {n} but {} support elements given", support.len());
            }
            let code = GoppaCode::new(&field, g, support)?;
            emit(out.as_deref(), &CodeSpecFile::from_goppa(&code).to_json())
        }
    }
}

fn cmd_encode(code: &Path, message: &Path, out: &Path) -> Result<()> {
    let code = load(code)?;
    let messages = words::read_words(message, code.field())?;
    let mut text = String::new();
    for msg in messages {
        let c = match &code {
            Code::Grs(c) => {
                if msg.len() != c.k() {
                    bail!("message of length {} for dimension {}", msg.len(), c.k());
                }
                c.encode(&Poly::new(c.field(), msg))?
            }
            Code::Goppa(c) => c.encode(&msg)?,
        };
        text.push_str(&words::format_word(&c));
    }
    write(out, &text)
}

fn cmd_corrupt(code: &Path, word: &Path, errors: usize, seed: u64, out: &Path) -> Result<()> {
    let code = load(code)?;
    let field = code.field().clone();
    let mut w = words::read_word(word, &field, code.n())?;
    if errors > w.len() {
        bail!("cannot place {errors} errors in a word of length {}", w.len());
    }
    let mut rng = Rng::new(seed);
    let q = field.order() as u64;
    for i in rng.choose_distinct(w.len(), errors) {
        w[i] = match &code {
            Code::Grs(_) => {
                let e = field.elem(1 + rng.below(q - 1) as u32)?;
                field.add(w[i], e)
            }
            Code::Goppa(_) => field.add(w[i], Elem::ONE),
        };
    }
    write(out, &words::format_word(&w))
}

#[derive(Serialize)]
struct DecodeJson {
    codewords: Vec<Vec<u32>>,
    error_positions: Vec<Vec<usize>>,
    params: ParamsJson,
    path: &'static str,
}

#[derive(Serialize)]
struct ParamsJson {
    tau: usize,
    ell: Option<usize>,
    s: Option<usize>,
}

fn cmd_decode(code: &Path, word: &Path, tau: usize, list: &ListArgs, out: &Path) -> Result<ExitCode> {
    let code = load(code)?;
    let r = words::read_word(word, code.field(), code.n())?;
    let opts = list.options();
    let result: DecodeOutput = match &code {
        Code::Grs(c) => wu_decode_with(c, &r, tau, &opts)?,
        Code::Goppa(c) => wu_decode_goppa_with(c, &r, tau, &opts)?,
    };
    for cand in &result.candidates {
        if !code.is_codeword(&cand.codeword)? || hamming_distance(&cand.codeword, &r) > tau {
            bail!("decoder produced an invalid candidate");
        }
    }
    let json = DecodeJson {
        codewords: result
            .candidates
            .iter()
            .map(|c| c.codeword.iter().map(|e| e.value()).collect())
            .collect(),
        error_positions: result.candidates.iter().map(|c| c.error_positions.clone()).collect(),
        params: ParamsJson { tau, ell: result.ell, s: result.s },
        path: result.path.as_str(),
    };
    let mut text = serde_json::to_string(&json)?;
    text.push('\n');
    write(out, &text)?;
    Ok(if result.is_failure() { ExitCode::from(2) } else { ExitCode::SUCCESS })
}

fn cmd_params(code: &Path, tau: usize, ell_max: usize) -> Result<ExitCode> {
    let code = load(code)?;
    let opts = DecodeOptions { ell_max, forced: None };
    let (params, unique_limit) = match &code {
        Code::Grs(c) => (grs_params(c, tau, &opts), (c.d() - 1) / 2),
        Code::Goppa(c) => (goppa_params(c, tau, &opts), c.t()),
    };
    if tau <= unique_limit {
        println!("unique decoding (tau <= {unique_limit})");
        return Ok(ExitCode::SUCCESS);
    }
    match params {
        Ok(p) => {
            println!("ell={} s={} w1+w2={}", p.ell, p.s, p.w_total);
            Ok(ExitCode::SUCCESS)
        }
        Err(Error::Infeasible(_)) => {
            println!("infeasible");
            Ok(ExitCode::from(3))
        }
        Err(e) => Err(e.into()),
    }
}
