use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use hookcsp::{hook_arm_corpus, verify_csp, Composition, CorpusBounds, Error, HookArmShape};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::args::SweepArgs;
use crate::commands::{write_json, Outcome};
use crate::input::parse_range;

/// Families handed to the pool at a time; lines are flushed after each batch.
const BATCH: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepSpec {
    pub bounds: CorpusBounds,
    pub output: Option<PathBuf>,
    pub jobs: usize,
}

impl SweepSpec {
    pub fn from_args(args: &SweepArgs) -> Result<Self> {
        let range = |text: &Option<String>, lo: u32| -> Result<RangeInclusive<u32>> {
            let (a, b) = match text {
                Some(t) => parse_range(t)?,
                None => (lo, args.max_cells.max(lo)),
            };
            Ok(a..=b)
        };
        let bounds = CorpusBounds {
            max_cells: args.max_cells,
            m: range(&args.m, 1)?,
            n: range(&args.n, 1)?,
            b: range(&args.b, 1)?,
            min_part: if args.allow_zero_parts { 0 } else { 1 },
        };
        let smallest = bounds.m.start().max(bounds.n.start()) + bounds.n.start() * bounds.b.start();
        if smallest > bounds.max_cells {
            bail!("--max-cells {} is below the smallest shape in range ({smallest} cells)", bounds.max_cells);
        }
        let jobs = match args.jobs {
            Some(0) => bail!("--jobs must be positive"),
            Some(j) => j,
            None => std::thread::available_parallelism().map_or(1, |n| n.get()),
        };
        Ok(Self { bounds, output: args.output.clone(), jobs })
    }
}

#[derive(Debug, Default, Serialize)]
struct Summary {
    families: usize,
    verified: usize,
    mismatches: usize,
    infeasible: usize,
    errors: usize,
}

enum Line {
    Report(Box<hookcsp::CspReport>),
    Infeasible,
    Failed { shape: HookArmShape, content: Composition, error: String },
}

fn check(shape: HookArmShape, content: &Composition) -> Line {
    match verify_csp(shape, content) {
        Ok(report) => Line::Report(Box::new(report)),
        Err(Error::InfeasibleFamily { .. }) => Line::Infeasible,
        Err(e) => Line::Failed { shape, content: content.clone(), error: e.to_string() },
    }
}

pub fn run(spec: &SweepSpec) -> Result<Outcome> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(spec.jobs).build()?;
    let mut out: Box<dyn Write> = match &spec.output {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).with_context(|| format!("creating {}", path.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let corpus = hook_arm_corpus(&spec.bounds);
    let mut summary = Summary { families: corpus.len(), ..Summary::default() };
    for batch in corpus.chunks(BATCH) {
        let lines: Vec<Line> = pool.install(|| batch.par_iter().map(|(s, mu)| check(*s, mu)).collect());
        for line in lines {
            match line {
                Line::Report(report) => {
                    if report.verdict {
                        summary.verified += 1;
                    } else {
                        summary.mismatches += 1;
                    }
                    write_json(&mut out, &report)?;
                }
                Line::Infeasible => summary.infeasible += 1,
                Line::Failed { shape, content, error } => {
                    summary.errors += 1;
                    write_json(&mut out, &json!({ "shape": shape, "content": content, "error": error }))?;
                }
            }
        }
        out.flush()?;
    }
    write_json(&mut out, &json!({ "summary": summary }))?;
    out.flush()?;
    eprintln!(
        "{} families: {} verified, {} mismatched, {} infeasible, {} errors",
        summary.families, summary.verified, summary.mismatches, summary.infeasible, summary.errors
    );
    Ok(if summary.mismatches + summary.errors == 0 { Outcome::Ok } else { Outcome::CheckFailed })
}
