//! Command line front end.
//!
//! Exit status: 0 success, 1 failed verification or formula/oracle
//! disagreement, 2 invalid input, 3 overflow.

use std::io::Write;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::chain::{evaluate, expand, GeneralChain, HjChain};
use crate::dot::{delta_half, delta_position, render_chain, DeltaPosition, DotDiagram};
use crate::error::{Error, Result};
use crate::flips::{
    bn1_reduction, contraction_invariant, flip_last, flip_last_by_diagram, flip_sequence_with, FlipFormula,
    FlipOutcome, FlipTrace, Mk1aData,
};
use crate::verify::verify_paper_with;
use crate::wahl::{generate_params, is_class_w, wahl_params};

#[derive(Debug, Parser)]
#[command(
    name = "wahlflip",
    version,
    about = "Hirzebruch-Jung chains, Wahl chains and mk1A flips"
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Continued fraction of n/a.
    Expand { n: i64, a: i64 },
    /// Value num/den of a chain (entries 0 and 1 allowed).
    Evaluate { chain: String },
    /// Dual chain n/(n-a).
    Dual { chain: String },
    /// ASCII dot diagram; the δ-dot is drawn as '@' for class-W chains.
    DotRender { chain: String },
    /// Recognize a class-W chain and print p,q.
    WahlCheck { chain: String },
    /// Chain of p²/(pq-1).
    WahlFromPq { p: i64, q: i64 },
    /// All class-W chains with p <= P, generated from [4].
    WahlGen {
        #[arg(long = "max-p")]
        max_p: i64,
    },
    /// δ-half chain of a class-W chain.
    DeltaHalf { chain: String },
    /// Δ/Ω of mk1A data such as 2,2,5,*4.
    Contract { data: String },
    /// Flip mk1A data with the underline on the last entry.
    FlipOnce { data: String },
    /// Full flip sequence of the configuration for (p, q).
    FlipSeq { p: i64, q: i64 },
    /// Reduction [n+2,1,2,...,2] -> [4] and flipping/divisorial verdict.
    Bn1 { n: i64 },
    /// Re-run the worked examples and report pass/fail per check.
    VerifyPaper,
}

#[derive(Serialize)]
struct Delta {
    row: usize,
    col: usize,
}

impl From<DeltaPosition> for Delta {
    fn from(d: DeltaPosition) -> Self {
        Delta { row: d.row, col: d.col }
    }
}

#[derive(Serialize)]
#[serde(untagged)]
enum WahlJson {
    Params { p: i64, q: i64 },
    Smooth(&'static str),
}

impl From<&FlipOutcome> for WahlJson {
    fn from(o: &FlipOutcome) -> Self {
        match o {
            FlipOutcome::Wahl(w) => WahlJson::Params { p: w.p, q: w.q },
            FlipOutcome::Smooth => WahlJson::Smooth("smooth"),
        }
    }
}

#[derive(Serialize)]
struct StepJson {
    before: String,
    blow_downs: Vec<usize>,
    after: String,
    wahl: WahlJson,
    c_plus_weight: i64,
}

#[derive(Serialize)]
struct TraceJson {
    p: i64,
    q: i64,
    chain: String,
    dual: String,
    delta: Delta,
    delta_half: String,
    steps: Vec<StepJson>,
}

/// Trace JSON with the fixed field order `p, q, chain, dual, delta,
/// delta_half, steps`.
pub fn trace_json(trace: &FlipTrace) -> String {
    let doc = TraceJson {
        p: trace.source.p,
        q: trace.source.q,
        chain: trace.source.chain.to_string(),
        dual: trace.dual.to_string(),
        delta: trace.delta.into(),
        delta_half: trace.delta_half.to_string(),
        steps: trace
            .steps
            .iter()
            .map(|s| StepJson {
                before: s.before.to_string(),
                blow_downs: s.blow_downs.clone(),
                after: s.after.to_string(),
                wahl: (&s.new_wahl).into(),
                c_plus_weight: s.c_plus_weight,
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("plain data serializes")
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("plain data serializes")
}

fn hj(s: &str) -> Result<HjChain> {
    s.parse()
}

/// Run a parsed command with the default flip formula.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    run_with(cli, out, err, &flip_last)
}

/// Run a parsed command, using `formula` wherever the closed-form flip is
/// consulted.
pub fn run_with(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write, formula: &FlipFormula) -> i32 {
    if let Command::VerifyPaper = cli.command {
        return verify(cli.json, out, err, formula);
    }
    match execute(cli, formula) {
        Ok(text) => {
            if write!(out, "{text}").is_err() {
                return 2;
            }
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn verify(json: bool, out: &mut dyn Write, err: &mut dyn Write, formula: &FlipFormula) -> i32 {
    let report = verify_paper_with(formula);
    let text = if json {
        format!("{}\n", to_json(&report))
    } else {
        let mut s = String::new();
        for c in &report {
            if c.passed {
                s.push_str(&format!("PASS {}\n", c.name));
            } else {
                s.push_str(&format!("FAIL {}: {}\n", c.name, c.detail));
            }
        }
        let passed = report.iter().filter(|c| c.passed).count();
        s.push_str(&format!("{passed}/{} checks passed\n", report.len()));
        s
    };
    let _ = write!(out, "{text}");
    match report.iter().find(|c| !c.passed) {
        Some(c) => {
            let _ = writeln!(err, "verification failed: {}", c.name);
            1
        }
        None => 0,
    }
}

fn execute(cli: &Cli, formula: &FlipFormula) -> Result<String> {
    let json = cli.json;
    let text = match &cli.command {
        Command::Expand { n, a } => {
            let c = expand(*n, *a)?;
            if json {
                to_json(&json!({ "n": n, "a": a, "chain": c.to_string() }))
            } else {
                c.to_string()
            }
        }
        Command::Evaluate { chain } => {
            let c: GeneralChain = chain.parse()?;
            let v = evaluate(&c)?;
            if json {
                to_json(&json!({ "chain": c.to_string(), "num": v.num, "den": v.den }))
            } else {
                v.to_string()
            }
        }
        Command::Dual { chain } => {
            let c = hj(chain)?;
            let d = c.dual()?;
            if json {
                to_json(&json!({ "chain": c.to_string(), "dual": d.to_string() }))
            } else {
                d.to_string()
            }
        }
        Command::DotRender { chain } => {
            let c = hj(chain)?;
            if json {
                let d = DotDiagram::build(&c);
                let rows: Vec<[usize; 2]> = d.rows().iter().map(|r| [r.start_col, r.len]).collect();
                let delta = delta_position(&c).ok().map(Delta::from);
                to_json(&json!({
                    "chain": c.to_string(),
                    "rows": rows,
                    "n_cols": d.n_cols(),
                    "n_dots": d.n_dots(),
                    "symmetric": d.is_symmetric(),
                    "delta": delta,
                }))
            } else {
                // render already ends with a newline
                return Ok(render_chain(&c));
            }
        }
        Command::WahlCheck { chain } => {
            let w = is_class_w(&hj(chain)?)?;
            if json {
                to_json(&json!({ "p": w.p, "q": w.q, "chain": w.chain.to_string() }))
            } else {
                format!("{} {}", w.p, w.q)
            }
        }
        Command::WahlFromPq { p, q } => {
            let w = wahl_params(*p, *q)?;
            if json {
                to_json(&json!({ "p": w.p, "q": w.q, "chain": w.chain.to_string() }))
            } else {
                w.chain.to_string()
            }
        }
        Command::WahlGen { max_p } => {
            let all = generate_params(*max_p)?;
            if json {
                let v: Vec<_> = all
                    .iter()
                    .map(|w| json!({ "p": w.p, "q": w.q, "chain": w.chain.to_string() }))
                    .collect();
                to_json(&v)
            } else {
                all.iter().map(|w| w.chain.to_string()).collect::<Vec<_>>().join("\n")
            }
        }
        Command::DeltaHalf { chain } => {
            let c = hj(chain)?;
            let half = delta_half(&c)?;
            if json {
                let delta = Delta::from(delta_position(&c)?);
                to_json(&json!({ "chain": c.to_string(), "delta": delta, "delta_half": half.to_string() }))
            } else {
                half.to_string()
            }
        }
        Command::Contract { data } => {
            let d: Mk1aData = data.parse()?;
            let r = contraction_invariant(&d)?;
            if json {
                to_json(&json!({ "data": d.to_string(), "delta": r.n(), "omega": r.a() }))
            } else {
                r.to_string()
            }
        }
        Command::FlipOnce { data } => {
            let d: Mk1aData = data.parse()?;
            let r = formula(&d)?;
            let by_diagram = flip_last_by_diagram(&d)?;
            if r.outcome != by_diagram.outcome || r.c_plus_weight != by_diagram.c_plus_weight {
                return Err(Error::DisagreementWithFormula(format!(
                    "{d}: formula gives {}, dot diagram gives {}",
                    r.outcome, by_diagram.outcome
                )));
            }
            if json {
                to_json(&json!({
                    "data": d.to_string(),
                    "wahl": WahlJson::from(&r.outcome),
                    "chain": r.outcome.chain().map(|c| c.to_string()),
                    "c_plus_weight": r.c_plus_weight,
                    "flip_index": r.flip_index,
                }))
            } else {
                r.outcome.to_string()
            }
        }
        Command::FlipSeq { p, q } => {
            let t = flip_sequence_with(*p, *q, formula)?;
            if json {
                trace_json(&t)
            } else {
                let mut lines = vec![t.initial.to_string()];
                lines.extend(t.steps.iter().map(|s| s.after.to_string()));
                lines.join("\n")
            }
        }
        Command::Bn1 { n } => {
            let r = bn1_reduction(*n)?;
            let chains = r.trace.chains()?;
            if json {
                let reduction: Vec<String> = chains.iter().map(|c| c.to_string()).collect();
                to_json(&json!({
                    "n": n,
                    "chain": r.trace.initial.to_string(),
                    "reduction": reduction,
                    "final": r.trace.final_chain.to_string(),
                    "kind": r.kind.kind,
                    "embedding": r.kind.embedding,
                }))
            } else {
                let mut lines: Vec<String> = chains.iter().map(|c| c.to_string()).collect();
                lines.push(format!("{}: {}", r.kind.kind, r.kind.embedding));
                lines.join("\n")
            }
        }
        Command::VerifyPaper => unreachable!("handled by run_with"),
    };
    Ok(format!("{text}\n"))
}
