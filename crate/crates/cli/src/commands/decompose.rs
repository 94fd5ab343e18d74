//! `lur decompose` — Pauli-twirl mixture weights for a noisy singlet, with
//! the matching published integer row and the decomposition residual.

use clap::Args;
use lur_core::werner::{
    integer_weight_table, twirl_mixture_state, weights_for_p, werner_state, MixtureWeights,
    WernerParams,
};
use serde::Serialize;

use super::usage_error;
use crate::output::{Format, OutputArgs};

#[derive(Args)]
pub struct DecomposeArgs {
    /// Mixing parameter in [0, 1].
    #[arg(long)]
    p: f64,

    /// Output format (JSON only).
    #[arg(long, value_enum, default_value = "json")]
    format: Format,

    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Serialize)]
struct IntegerRow {
    alpha: u32,
    beta: u32,
    total: u32,
}

#[derive(Serialize)]
struct DecomposeOutput {
    p: f64,
    weights: MixtureWeights,
    /// The published 20-repetition split, present only for the six tabulated
    /// values of p.
    integer_row: Option<IntegerRow>,
    /// Max entrywise deviation between the twirl mixture and the directly
    /// constructed state.
    max_deviation: f64,
}

impl DecomposeArgs {
    pub fn run(self) -> anyhow::Result<()> {
        if self.format != Format::Json {
            return usage_error("`decompose` writes JSON only");
        }
        let params =
            WernerParams::new(self.p).map_err(|e| super::UsageError(format!("bad --p: {e}")))?;
        let weights = weights_for_p(params.p())?;
        let mixture = twirl_mixture_state(&weights)?;
        let direct = werner_state(params);
        let max_deviation = mixture.matrix().max_abs_diff(direct.matrix());

        let integer_row = integer_weight_table()
            .iter()
            .find(|(p, _, _)| (p - params.p()).abs() < 1e-12)
            .map(|&(_, alpha, beta)| IntegerRow {
                alpha,
                beta,
                total: alpha + 3 * beta,
            });

        let output = DecomposeOutput {
            p: params.p(),
            weights,
            integer_row,
            max_deviation,
        };
        self.out.write(&crate::output::to_json(&output)?)
    }
}
