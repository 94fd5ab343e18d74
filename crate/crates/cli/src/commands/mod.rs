//! Subcommand implementations.

mod bounds;
mod decompose;
mod sweep;
mod thresholds;
mod tomo;

use clap::Subcommand;
use lur_core::qlinalg::{DensityMatrix, PureState};
use lur_core::tomography::depolarized_psi_plus;
use lur_core::werner::{werner_state, WernerParams};
use lur_core::witnesses::WitnessKind;

#[derive(Subcommand)]
pub enum Command {
    /// Compute a witness's classical bound (or, with --quantum, its quantum
    /// maximum by see-saw) and write a bound report.
    Bounds(bounds::BoundsArgs),
    /// Evaluate every witness over a grid of noisy-singlet mixing parameters.
    Sweep(sweep::SweepArgs),
    /// Locate the violation thresholds of all witnesses in the mixing
    /// parameter, plus the recorded literature constants.
    Thresholds(thresholds::ThresholdsArgs),
    /// Simulate over-complete state tomography and report the reconstruction.
    Tomo(tomo::TomoArgs),
    /// Print the Pauli-twirl mixture weights preparing a noisy singlet.
    Decompose(decompose::DecomposeArgs),
}

impl Command {
    pub fn run(self) -> anyhow::Result<()> {
        match self {
            Command::Bounds(args) => args.run(),
            Command::Sweep(args) => args.run(),
            Command::Thresholds(args) => args.run(),
            Command::Tomo(args) => args.run(),
            Command::Decompose(args) => args.run(),
        }
    }
}

/// A bad flag value or combination: reported with exit code 2, as distinct
/// from computation failures (exit code 1).
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

pub fn usage_error<T>(msg: impl Into<String>) -> anyhow::Result<T> {
    Err(UsageError(msg.into()).into())
}

/// Witness kind as a CLI value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum KindArg {
    Entanglement,
    Steering,
    Chsh,
    Bell3322,
}

impl KindArg {
    pub fn kind(self) -> WitnessKind {
        match self {
            KindArg::Entanglement => WitnessKind::Entanglement,
            KindArg::Steering => WitnessKind::Steering,
            KindArg::Chsh => WitnessKind::Chsh,
            KindArg::Bell3322 => WitnessKind::Bell3322,
        }
    }

    /// Resolves the setting count, defaulting per kind, and validates the
    /// combination.
    pub fn resolve_n(self, n: Option<usize>) -> anyhow::Result<usize> {
        let n = n.unwrap_or(match self {
            KindArg::Chsh => 2,
            _ => 3,
        });
        let ok = match self {
            KindArg::Chsh => n == 2,
            KindArg::Bell3322 => n == 3,
            _ => n == 2 || n == 3,
        };
        if !ok {
            return usage_error(format!("kind `{:?}` does not support --n {n}", self));
        }
        Ok(n)
    }
}

/// Parses the `--state` grammar shared by `tomo` and `bounds --quantum`:
/// `singlet`, `psi-plus` (alias `bell`), `werner:P`, `depolarized:F`.
pub fn parse_state(spec: &str) -> anyhow::Result<DensityMatrix> {
    if let Some(p) = spec.strip_prefix("werner:") {
        let p: f64 = p
            .parse()
            .map_err(|_| UsageError(format!("bad mixing parameter in `{spec}`")))?;
        let params = WernerParams::new(p).map_err(|e| UsageError(format!("bad --state: {e}")))?;
        return Ok(werner_state(params));
    }
    if let Some(f) = spec.strip_prefix("depolarized:") {
        let f: f64 = f
            .parse()
            .map_err(|_| UsageError(format!("bad fidelity in `{spec}`")))?;
        return depolarized_psi_plus(f).map_err(|e| UsageError(format!("bad --state: {e}")).into());
    }
    match spec {
        "singlet" => Ok(PureState::singlet().density()),
        "psi-plus" | "psi-plus-like" | "bell" => Ok(PureState::psi_plus().density()),
        other => usage_error(format!(
            "unknown state `{other}` (expected singlet, psi-plus, bell, werner:P, depolarized:F)"
        )),
    }
}

/// Parses a `--target` pure state.
pub fn parse_target(spec: &str) -> anyhow::Result<PureState> {
    match spec {
        "singlet" => Ok(PureState::singlet()),
        "psi-plus" | "psi-plus-like" | "bell" => Ok(PureState::psi_plus()),
        other => usage_error(format!(
            "unknown target `{other}` (expected singlet, psi-plus, bell)"
        )),
    }
}
