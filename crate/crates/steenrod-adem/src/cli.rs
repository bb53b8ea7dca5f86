//! The `adem` command line: argument parsing, reports, exit codes.

use crate::adem::{self, TestSpace};
use crate::error::{Error, Result};
use crate::io;
use crate::operads::{table_reduction_sum, Surjection};
use crate::perm::{Group, Permutation};
use crate::selftest;
use crate::simplicial::Simplex;
use crate::steenrod::{cup_n, partition_count, partition_parity_closed, sq, PartitionConstraint};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Surjections,
    Esigma4,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Space {
    Bsigma2,
    Simplex,
}

#[derive(Debug, Parser)]
#[command(
    name = "adem",
    version,
    about = "Cochain-level Steenrod squares and Adem relation certificates over F2"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,
    /// Include wall-clock timing in the report.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Boundary of a chain.
    Boundary { chain: PathBuf },
    /// Coboundary of a cochain.
    Coboundary { cochain: PathBuf },
    /// Steenrod's cup-n product of two cochains.
    Cupn {
        #[arg(long)]
        n: i64,
        alpha: PathBuf,
        beta: PathBuf,
    },
    /// The square Sq^k of a cochain.
    Sq {
        #[arg(long)]
        k: i64,
        cochain: PathBuf,
    },
    /// Table reduction of Barratt–Eccles generators.
    Tr { generators: PathBuf },
    /// Compares ordered-partition counts with their binomial closed forms.
    PartitionCheck {
        #[arg(long = "max-N", default_value_t = 12)]
        max_n: usize,
        #[arg(long = "max-M", default_value_t = 6)]
        max_m: usize,
    },
    /// The surjections TR(J) for the pair (q, p).
    AdemWitness {
        #[arg(long)]
        q: usize,
        #[arg(long)]
        p: usize,
        /// Also count step diagrams for inputs of degree -n.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value = "surjections")]
        emit: Emit,
    },
    /// Checks dx(α) against the Adem relation on a test cocycle.
    AdemVerify {
        #[arg(long)]
        q: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "simplex")]
        space: Space,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Truncation of BΣ2, or dimension of the simplex; derived from (q, p, n) by default.
        #[arg(long)]
        size: Option<usize>,
    },
    /// Runs a quick pass over the main identities.
    Selftest,
}

#[derive(Debug, Serialize)]
pub struct Verdict {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Value,
    pub counts: BTreeMap<String, u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
    pub verdicts: Vec<Verdict>,
    pub result: Value,
}

impl RunReport {
    fn new(command: &str, inputs: Value) -> Self {
        Self {
            command: command.into(),
            inputs,
            counts: BTreeMap::new(),
            timing_ms: None,
            verdicts: vec![],
            result: Value::Null,
        }
    }

    fn count(&mut self, k: &str, v: usize) {
        self.counts.insert(k.into(), v as u64);
    }

    fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.passed)
    }

    fn render_text(&self) -> String {
        let mut s = format!("{}\n", self.command);
        if !self.inputs.is_null() {
            s += &format!("  inputs: {}\n", self.inputs);
        }
        for (k, v) in &self.counts {
            s += &format!("  {k}: {v}\n");
        }
        if let Some(t) = self.timing_ms {
            s += &format!("  time: {t} ms\n");
        }
        for v in &self.verdicts {
            s += &format!("  [{}] {}", if v.passed { "pass" } else { "FAIL" }, v.name);
            if let Some(c) = &v.counterexample {
                s += &format!(" (at {c})");
            }
            s += "\n";
        }
        if !self.result.is_null() {
            s += &format!("  result: {}\n", self.result);
        }
        s
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn surjections_value(c: &crate::f2::FormalSum<Surjection>) -> Value {
    Value::from(c.iter().map(io::surjection_json).collect::<Vec<_>>())
}

fn execute(cmd: &Command) -> Result<RunReport> {
    Ok(match cmd {
        Command::Boundary { chain } => {
            let c = io::read_chain(&read(chain)?)?;
            let b = c.boundary();
            let mut r = RunReport::new("boundary", json!({ "chain": chain }));
            r.count("terms", b.terms.len());
            r.result = to_value(&io::chain_json(&b));
            r
        }
        Command::Coboundary { cochain } => {
            let a = io::read_cochain(&read(cochain)?)?;
            let d = a.coboundary()?;
            let mut r = RunReport::new("coboundary", json!({ "cochain": cochain }));
            r.count("terms", d.support.len());
            r.result = to_value(&io::cochain_json(&d));
            r
        }
        Command::Cupn { n, alpha, beta } => {
            let (a, b) = (
                io::read_cochain(&read(alpha)?)?,
                io::read_cochain(&read(beta)?)?,
            );
            let c = cup_n(*n, &a, &b)?;
            let mut r = RunReport::new("cupn", json!({ "n": n, "alpha": alpha, "beta": beta }));
            r.count("terms", c.support.len());
            r.result = to_value(&io::cochain_json(&c));
            r
        }
        Command::Sq { k, cochain } => {
            let a = io::read_cochain(&read(cochain)?)?;
            let c = sq(*k, &a)?;
            let mut r = RunReport::new("sq", json!({ "k": k, "cochain": cochain }));
            r.count("terms", c.support.len());
            r.result = to_value(&io::cochain_json(&c));
            r
        }
        Command::Tr { generators } => {
            let (arity, gens) = io::read_be(&read(generators)?)?;
            let g = Group::symmetric(arity)?;
            let mut sum = crate::f2::FormalSum::zero();
            for gen in &gens {
                let verts = gen
                    .iter()
                    .map(|p| g.perm_index(&Permutation::new(p.clone())?))
                    .collect::<Result<Vec<u8>>>()?;
                sum.toggle(Simplex::Seq(verts));
            }
            let out = table_reduction_sum(&g, &sum)?;
            let mut r = RunReport::new("tr", json!({ "generators": generators }));
            r.count("surjections", out.len());
            r.result = surjections_value(&out);
            r
        }
        Command::PartitionCheck { max_n, max_m } => {
            let mut r =
                RunReport::new("partition-check", json!({ "max_N": max_n, "max_M": max_m }));
            let mut cases = 0;
            for c in PartitionConstraint::ALL {
                let mut bad = None;
                for total in 0..=*max_n {
                    for m in 1..=*max_m {
                        cases += 1;
                        let brute = partition_count(total, m, c);
                        if (brute % 2 == 1) != partition_parity_closed(total, m, c) && bad.is_none()
                        {
                            bad = Some(json!({ "N": total, "M": m, "count": brute }));
                        }
                    }
                }
                r.verdicts.push(Verdict {
                    name: format!("{c:?}"),
                    passed: bad.is_none(),
                    counterexample: bad,
                });
            }
            r.count("cases", cases);
            r
        }
        Command::AdemWitness { q, p, n, emit } => {
            let w = adem::witness(*q, *p)?;
            let mut r = RunReport::new("adem-witness", json!({ "q": q, "p": p, "n": n }));
            let list = adem::formula_terms(&w)?;
            r.count("surjections", w.surjections.len());
            r.count("formula_terms", list.len());
            r.count("j_simplices", w.chains.iter().map(|c| c.len()).sum());
            if let Some(n) = n {
                let (with, diagrams) = adem::list_census(&list, *n);
                r.count("formula_terms_with_diagrams", with);
                r.count("formula_diagrams", diagrams);
                let (with, _, diagrams) = adem::diagram_census(&w, *n);
                r.count("surjections_with_diagrams", with);
                r.count("surjection_diagrams", diagrams);
            }
            r.result = match emit {
                Emit::Surjections => surjections_value(&w.surjections),
                Emit::Esigma4 => {
                    let model = adem::e_sigma4();
                    Value::from(
                        w.chains
                            .iter()
                            .map(|c| {
                                Value::from(
                                    c.iter()
                                        .map(|s| io::encode_simplex(&model, s))
                                        .collect::<Vec<_>>(),
                                )
                            })
                            .collect::<Vec<_>>(),
                    )
                }
            };
            r
        }
        Command::AdemVerify {
            q,
            p,
            n,
            space,
            seed,
            size,
        } => {
            if q + p == 0 {
                return Err(Error::InvalidArgument("q + p must be positive".into()));
            }
            let defaults = TestSpace::defaults(*q, *p, *n);
            let sp = match (space, size) {
                (Space::Bsigma2, Some(t)) => TestSpace::BSigma2 { truncation: *t },
                (Space::Bsigma2, None) => defaults[0].clone(),
                (Space::Simplex, s) => TestSpace::Simplex {
                    dim: s.unwrap_or(match defaults[1] {
                        TestSpace::Simplex { dim, .. } => dim,
                        _ => unreachable!(),
                    }),
                    seed: *seed,
                },
            };
            let cert = adem::make_certificate(*q, *p, *n, std::slice::from_ref(&sp))?;
            let mut r = RunReport::new(
                "adem-verify",
                json!({ "q": q, "p": p, "n": n, "space": sp }),
            );
            r.count("surjections", cert.witness.len());
            r.count("relation_terms", cert.relation.len());
            r.count("n_terms", cert.nqp.len() + cert.npq.len());
            for v in &cert.verdicts {
                r.verdicts.push(Verdict {
                    name: v.space.describe(),
                    passed: v.passed,
                    counterexample: v.offending.as_ref().map(|s| Value::from(s.clone())),
                });
            }
            r.result = to_value(&cert);
            r
        }
        Command::Selftest => {
            let mut r = RunReport::new("selftest", Value::Null);
            let checks = selftest::run_all();
            r.count("checks", checks.len());
            for c in checks {
                r.verdicts.push(Verdict {
                    name: c.name,
                    passed: c.passed,
                    counterexample: (!c.passed).then(|| Value::from(c.detail)),
                });
            }
            r
        }
    })
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Verification(_) => EXIT_FAIL,
        _ => EXIT_USAGE,
    }
}

/// Runs the command line; writes the report to `out` and errors to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if code == EXIT_OK {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    let start = Instant::now();
    let mut report = match execute(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit_code(&e);
        }
    };
    if cli.timing {
        report.timing_ms = Some(start.elapsed().as_millis());
    }
    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(&report).expect("serializable") + "\n",
        Format::Text => report.render_text(),
    };
    let _ = out.write_all(text.as_bytes());
    if report.passed() {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}
