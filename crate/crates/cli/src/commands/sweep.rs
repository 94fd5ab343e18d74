//! `lur sweep` — witness values over a grid of mixing parameters, one CSV
//! row per (p, kind, n).

use anyhow::Context;
use clap::Args;
use lur_core::werner::{werner_state, WernerParams};
use lur_core::witnesses::{WitnessKind, WitnessSpec};
use rayon::prelude::*;
use serde::Serialize;

use super::usage_error;
use crate::output::{Format, OutputArgs};

/// The six built-in witness families, in report order.
pub const FAMILIES: [(WitnessKind, usize); 6] = [
    (WitnessKind::Entanglement, 2),
    (WitnessKind::Entanglement, 3),
    (WitnessKind::Steering, 2),
    (WitnessKind::Steering, 3),
    (WitnessKind::Chsh, 2),
    (WitnessKind::Bell3322, 3),
];

#[derive(Args)]
pub struct SweepArgs {
    /// First mixing parameter.
    #[arg(long, default_value_t = 0.0)]
    start: f64,

    /// Last mixing parameter (inclusive).
    #[arg(long, default_value_t = 1.0)]
    stop: f64,

    /// Grid step.
    #[arg(long, default_value_t = 0.05)]
    step: f64,

    /// Comma-separated witness kinds, or `all`.
    #[arg(long, default_value = "all")]
    kinds: String,

    /// Output format; CSV rows are `p,kind,n,value,bound,violated,normalized,entropy`.
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,

    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Serialize)]
struct SweepRow {
    p: f64,
    kind: &'static str,
    n: usize,
    value: f64,
    bound: f64,
    violated: bool,
    normalized: f64,
    entropy: f64,
}

impl SweepArgs {
    pub fn run(self) -> anyhow::Result<()> {
        let families = parse_families(&self.kinds)?;
        let grid = self.grid()?;

        // Fan out over (family, p); rows are collected and written in
        // deterministic sorted order afterwards.
        let tasks: Vec<(usize, f64)> = (0..families.len())
            .flat_map(|f| grid.iter().map(move |&p| (f, p)))
            .collect();
        let mut rows = tasks
            .par_iter()
            .map(|&(f, p)| -> anyhow::Result<(usize, SweepRow)> {
                let (kind, n) = families[f];
                let spec = WitnessSpec::canonical(kind, n)?;
                let state = werner_state(WernerParams::new(p)?);
                let r = spec.evaluate_state(&state)?;
                Ok((
                    f,
                    SweepRow {
                        p,
                        kind: kind.name(),
                        n,
                        value: r.value,
                        bound: r.bound,
                        violated: r.violated,
                        normalized: r.normalized,
                        entropy: r.entropy,
                    },
                ))
            })
            .collect::<anyhow::Result<Vec<_>>>()?;
        rows.sort_by(|(fa, ra), (fb, rb)| fa.cmp(fb).then(ra.p.total_cmp(&rb.p)));
        let rows: Vec<SweepRow> = rows.into_iter().map(|(_, r)| r).collect();

        let text = match self.format {
            Format::Csv => {
                let mut writer = csv::Writer::from_writer(Vec::new());
                for row in &rows {
                    writer.serialize(row).context("writing CSV row")?;
                }
                String::from_utf8(writer.into_inner().context("flushing CSV")?)
                    .context("CSV is UTF-8")?
            }
            Format::Json => crate::output::to_json(&rows)?,
        };
        self.out.write(&text)
    }

    fn grid(&self) -> anyhow::Result<Vec<f64>> {
        if !self.step.is_finite() || self.step <= 0.0 {
            return usage_error(format!("--step must be positive, got {}", self.step));
        }
        if self.start > self.stop {
            return usage_error("--start must not exceed --stop");
        }
        let mut grid = Vec::new();
        let mut k = 0usize;
        loop {
            let mut p = self.start + k as f64 * self.step;
            if p > self.stop + 1e-12 {
                break;
            }
            // Snap accumulated rounding onto clean decimals and the endpoint.
            if self.step >= 1e-9 {
                p = (p * 1e12).round() / 1e12;
            }
            grid.push(p.min(self.stop));
            k += 1;
        }
        if grid.is_empty() {
            return usage_error("empty p-grid");
        }
        if grid[0] < 0.0 || *grid.last().unwrap() > 1.0 {
            return usage_error("p-grid must lie within [0, 1]");
        }
        Ok(grid)
    }
}

fn parse_families(spec: &str) -> anyhow::Result<Vec<(WitnessKind, usize)>> {
    if spec == "all" {
        return Ok(FAMILIES.to_vec());
    }
    let mut out = Vec::new();
    for token in spec.split(',') {
        let matched: Vec<_> = FAMILIES
            .iter()
            .copied()
            .filter(|(kind, _)| kind.name() == token.trim())
            .collect();
        if matched.is_empty() {
            return usage_error(format!("unknown witness kind `{token}`"));
        }
        out.extend(matched);
    }
    Ok(out)
}
