//! `lur tomo` — simulated over-complete tomography with finite statistics,
//! plus CSV count export/import.

use std::path::PathBuf;

use anyhow::Context;
use clap::Args;
use lur_core::qlinalg::fidelity;
use lur_core::seeding::derive_seed;
use lur_core::tomography::{
    fidelity_experiment, reconstruct, simulate_counts, CountRecord, ReconstructionResult,
    SamplingMode, TomographySpec,
};
use serde::Serialize;

use super::{parse_state, parse_target, usage_error};
use crate::output::{Format, OutputArgs};

#[derive(Args)]
pub struct TomoArgs {
    /// State to tomograph: singlet, psi-plus, bell, werner:P, depolarized:F.
    #[arg(long, required_unless_present = "counts_in")]
    state: Option<String>,

    /// Pure target the fidelity is reported against.
    #[arg(long, default_value = "psi-plus")]
    target: String,

    /// Shots per setting pair.
    #[arg(long, default_value_t = 10_000)]
    shots: u64,

    /// Independent repetitions for the error bar.
    #[arg(long, default_value_t = 20)]
    reps: usize,

    /// Base seed; repetition r runs on a derived stream.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Use exact Born probabilities instead of sampling.
    #[arg(long)]
    analytic: bool,

    /// Use independent Poisson counts (coincidence-counting model) instead
    /// of fixed totals.
    #[arg(long, conflicts_with = "analytic")]
    poisson: bool,

    /// Also export the first repetition's counts as CSV
    /// (`setting_i,setting_j,a,b,count`).
    #[arg(long)]
    export_counts: Option<PathBuf>,

    /// Reconstruct from a counts CSV instead of simulating. The sampling
    /// mode is inferred from the per-setting totals.
    #[arg(long, conflicts_with_all = ["state", "analytic", "poisson", "export_counts"])]
    counts_in: Option<PathBuf>,

    /// Output format (JSON only; counts CSV goes through --export-counts).
    #[arg(long, value_enum, default_value = "json")]
    format: Format,

    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Serialize)]
struct TomoOutput {
    state: String,
    target: String,
    mode: SamplingMode,
    shots_per_setting: f64,
    repetitions: usize,
    seed: Option<u64>,
    #[serde(flatten)]
    result: ReconstructionResult,
}

impl TomoArgs {
    pub fn run(self) -> anyhow::Result<()> {
        if self.format != Format::Json {
            return usage_error("`tomo` writes JSON (use --export-counts for the CSV)");
        }
        if let Some(path) = self.counts_in.clone() {
            return self.run_import(path);
        }

        let state_desc = self.state.clone().expect("clap guarantees --state");
        let state = parse_state(&state_desc)?;
        let target = parse_target(&self.target)?;
        let mode = if self.analytic {
            SamplingMode::Analytic
        } else if self.poisson {
            SamplingMode::Poisson
        } else {
            SamplingMode::Multinomial
        };
        if self.reps < 2 {
            return usage_error(format!("--reps must be at least 2, got {}", self.reps));
        }
        if self.shots == 0 && mode != SamplingMode::Analytic {
            return usage_error("--shots must be at least 1 outside --analytic mode");
        }
        let spec = TomographySpec {
            shots_per_setting: self.shots,
            seed: self.seed,
            mode,
        };

        let result = fidelity_experiment(&state, &target, &spec, self.reps)?;

        if let Some(path) = &self.export_counts {
            let first_rep = TomographySpec {
                seed: derive_seed(self.seed, 0),
                ..spec
            };
            let counts = simulate_counts(&state, &first_rep)?;
            let csv = counts_to_csv(&counts)?;
            let path = crate::output::resolve(path);
            std::fs::write(&path, csv).with_context(|| format!("writing {}", path.display()))?;
        }

        let output = TomoOutput {
            state: state_desc,
            target: self.target.clone(),
            mode,
            shots_per_setting: if mode == SamplingMode::Analytic {
                1.0
            } else {
                self.shots as f64
            },
            repetitions: self.reps,
            seed: Some(self.seed),
            result,
        };
        self.out.write(&crate::output::to_json(&output)?)
    }

    fn run_import(self, path: PathBuf) -> anyhow::Result<()> {
        let path = crate::output::resolve(&path);
        let counts = counts_from_csv(&path)?;
        let target = parse_target(&self.target)?;
        let mut result = reconstruct(&counts)?;
        result.fidelity_to_target = Some(fidelity(&result.rho_physical, &target.density())?);

        let output = TomoOutput {
            state: format!("counts:{}", path.display()),
            target: self.target.clone(),
            mode: counts.mode(),
            shots_per_setting: counts.shots_per_setting(),
            repetitions: 1,
            seed: None,
            result,
        };
        self.out.write(&crate::output::to_json(&output)?)
    }
}

/// CSV layout of a count record: `setting_i,setting_j,a,b,count`.
#[derive(Serialize, serde::Deserialize)]
struct CountRow {
    setting_i: usize,
    setting_j: usize,
    a: u8,
    b: u8,
    count: f64,
}

fn counts_to_csv(counts: &CountRecord) -> anyhow::Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for i in 0..3 {
        for j in 0..3 {
            for a in 0..2u8 {
                for b in 0..2u8 {
                    writer.serialize(CountRow {
                        setting_i: i,
                        setting_j: j,
                        a,
                        b,
                        count: counts.count(i, j, a as usize, b as usize),
                    })?;
                }
            }
        }
    }
    Ok(String::from_utf8(writer.into_inner()?)?)
}

fn counts_from_csv(path: &std::path::Path) -> anyhow::Result<CountRecord> {
    let mut reader =
        csv::Reader::from_path(path).with_context(|| format!("reading {}", path.display()))?;
    let mut table = vec![f64::NAN; 36];
    for row in reader.deserialize() {
        let row: CountRow = row.context("malformed counts row")?;
        if row.setting_i > 2 || row.setting_j > 2 || row.a > 1 || row.b > 1 {
            anyhow::bail!(
                "count row out of range: ({}, {}, {}, {})",
                row.setting_i,
                row.setting_j,
                row.a,
                row.b
            );
        }
        let k = ((row.setting_i * 3 + row.setting_j) * 2 + row.a as usize) * 2 + row.b as usize;
        table[k] = row.count;
    }
    if table.iter().any(|c| c.is_nan()) {
        anyhow::bail!("counts CSV does not cover all 36 (setting, outcome) combinations");
    }

    // Infer the sampling mode from the per-setting totals.
    let totals: Vec<f64> = (0..9)
        .map(|s| table[s * 4..s * 4 + 4].iter().sum())
        .collect();
    let first = totals[0];
    let all_equal = totals.iter().all(|t| (t - first).abs() < 1e-9);
    let (mode, shots) = if all_equal && (first - 1.0).abs() < 1e-9 {
        (SamplingMode::Analytic, 1.0)
    } else if all_equal {
        (SamplingMode::Multinomial, first)
    } else {
        (SamplingMode::Poisson, totals.iter().sum::<f64>() / 9.0)
    };
    Ok(CountRecord::from_raw(mode, shots, table)?)
}
