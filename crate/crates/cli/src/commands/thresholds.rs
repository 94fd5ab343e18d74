//! `lur thresholds` — the full violation-threshold table in the mixing
//! parameter, computed by bisection, plus recorded literature constants.

use clap::Args;
use lur_core::werner::{
    violation_threshold, BELL_THRESHOLD_465_SETTINGS, STEERING_THRESHOLD_INFINITE_SETTINGS,
};
use serde::Serialize;

use super::{usage_error, KindArg};
use crate::output::{Format, OutputArgs};

#[derive(Args)]
pub struct ThresholdsArgs {
    /// Bisection tolerance on the threshold location.
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,

    /// Output format (JSON only).
    #[arg(long, value_enum, default_value = "json")]
    format: Format,

    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Serialize)]
struct ThresholdEntry {
    kind: &'static str,
    /// Setting count as text: "2", "3", "infinite", or "465".
    settings: &'static str,
    /// Numeric setting count where applicable.
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    /// Smallest violating mixing parameter, or null if nothing violates.
    threshold: Option<f64>,
    source: &'static str,
    computed: bool,
    /// The region between this threshold and the best computed one is
    /// inconclusive for the inequalities evaluated here.
    #[serde(skip_serializing_if = "Option::is_none")]
    inconclusive_region: Option<bool>,
}

#[derive(Serialize)]
struct ThresholdsOutput {
    tol: f64,
    entries: Vec<ThresholdEntry>,
}

impl ThresholdsArgs {
    pub fn run(self) -> anyhow::Result<()> {
        if self.format != Format::Json {
            return usage_error("`thresholds` writes JSON only");
        }
        let computed = [
            (KindArg::Entanglement, 2usize, "2"),
            (KindArg::Entanglement, 3, "3"),
            (KindArg::Steering, 2, "2"),
            (KindArg::Steering, 3, "3"),
            (KindArg::Chsh, 2, "2"),
            (KindArg::Bell3322, 3, "3"),
        ];
        let mut entries = Vec::new();
        for (kind, n, label) in computed {
            let threshold = violation_threshold(kind.kind(), n, self.tol)?;
            entries.push(ThresholdEntry {
                kind: kind.kind().name(),
                settings: label,
                n: Some(n),
                threshold,
                source: "computed",
                computed: true,
                inconclusive_region: None,
            });
        }
        entries.push(ThresholdEntry {
            kind: "steering",
            settings: "infinite",
            n: None,
            threshold: Some(STEERING_THRESHOLD_INFINITE_SETTINGS),
            source: "literature",
            computed: false,
            inconclusive_region: None,
        });
        entries.push(ThresholdEntry {
            kind: "bell",
            settings: "465",
            n: None,
            threshold: Some(BELL_THRESHOLD_465_SETTINGS),
            source: "literature",
            computed: false,
            inconclusive_region: Some(true),
        });

        let output = ThresholdsOutput {
            tol: self.tol,
            entries,
        };
        self.out.write(&crate::output::to_json(&output)?)
    }
}
