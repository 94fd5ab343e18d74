//! `lur bounds` — classical bounds and see-saw quantum maxima.

use clap::Args;
use lur_core::bounds::{
    bound_bell_deterministic, bound_entanglement_product, bound_steering_bloch,
    quantum_maximum_seesaw, BoundReport,
};
use lur_core::witnesses::{canonical_settings, ConditionTensor, WitnessKind};
use serde::Serialize;

use super::{parse_state, usage_error, KindArg};
use crate::output::{Format, OutputArgs};

#[derive(Args)]
pub struct BoundsArgs {
    /// Witness kind.
    #[arg(long, value_enum)]
    kind: KindArg,

    /// Measurement settings per side (defaults: 2 for chsh, 3 otherwise).
    #[arg(long)]
    n: Option<usize>,

    /// Fibonacci-lattice density for sphere searches.
    #[arg(long, default_value_t = lur_core::bounds::DEFAULT_GRID_POINTS)]
    grid: usize,

    /// Seed for the see-saw restarts.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Compute the quantum maximum on --state instead of the classical bound.
    #[arg(long)]
    quantum: bool,

    /// State for the quantum maximum: singlet, psi-plus, bell, werner:P,
    /// depolarized:F.
    #[arg(long, default_value = "singlet")]
    state: String,

    /// Output format (single reports are JSON only).
    #[arg(long, value_enum, default_value = "json")]
    format: Format,

    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Serialize)]
struct BoundsOutput {
    kind: &'static str,
    n: usize,
    quantum: bool,
    #[serde(flatten)]
    report: BoundReport,
}

impl BoundsArgs {
    pub fn run(self) -> anyhow::Result<()> {
        if self.format != Format::Json {
            return usage_error("`bounds` writes JSON only");
        }
        let n = self.kind.resolve_n(self.n)?;
        let kind = self.kind.kind();

        let report = if self.quantum {
            let state = parse_state(&self.state)?;
            quantum_maximum_seesaw(kind, &state, n, self.seed)?
        } else {
            match kind {
                WitnessKind::Entanglement => {
                    let settings = canonical_settings(kind, n)?;
                    bound_entanglement_product(&settings, self.grid)?
                }
                WitnessKind::Steering => {
                    let settings = canonical_settings(kind, n)?;
                    bound_steering_bloch(n, settings.bob(), self.grid)?
                }
                WitnessKind::Chsh => bound_bell_deterministic(&ConditionTensor::chsh())?,
                WitnessKind::Bell3322 => bound_bell_deterministic(&ConditionTensor::bell3322())?,
                WitnessKind::Custom => unreachable!("not a CLI kind"),
            }
        };

        let output = BoundsOutput {
            kind: kind.name(),
            n,
            quantum: self.quantum,
            report,
        };
        self.out.write(&crate::output::to_json(&output)?)
    }
}
