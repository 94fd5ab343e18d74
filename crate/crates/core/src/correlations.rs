//! The experimentally accessible object everything else is built on: the
//! joint outcome distribution P(a,b|i,j) of local ±1-valued measurements,
//! and the correlators derived from it.

use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::qlinalg::{tensor, BlochObservable, ComplexSquareMatrix, DensityMatrix};
use crate::tol::Tolerances;

/// Alice's and Bob's measurement settings, as equal-length lists of Bloch
/// observables indexed i = 0..n−1 and j = 0..n−1.
#[derive(Debug, Clone, PartialEq)]
pub struct SettingPair {
    alice: Vec<BlochObservable>,
    bob: Vec<BlochObservable>,
}

impl SettingPair {
    pub fn new(alice: Vec<BlochObservable>, bob: Vec<BlochObservable>) -> Result<Self> {
        if alice.is_empty() || alice.len() != bob.len() {
            return Err(Error::InvalidSettings {
                alice: alice.len(),
                bob: bob.len(),
            });
        }
        Ok(Self { alice, bob })
    }

    /// Both parties measure the same observables.
    pub fn same_both_sides(settings: Vec<BlochObservable>) -> Result<Self> {
        Self::new(settings.clone(), settings)
    }

    /// Number of settings per side.
    pub fn n(&self) -> usize {
        self.alice.len()
    }

    pub fn alice(&self) -> &[BlochObservable] {
        &self.alice
    }

    pub fn bob(&self) -> &[BlochObservable] {
        &self.bob
    }
}

/// The table P(a,b|i,j) for a,b ∈ {0,1} and i,j ∈ {0..n−1}.
///
/// Stored densely for all (i,j) pairs: the diagonal blocks feed the
/// entanglement and steering witnesses, the off-diagonal blocks the Bell
/// functionals, and one uniform table keeps the generic evaluator simple.
///
/// Index order (also used by the JSON serialization, nested outermost to
/// innermost): `[i][j][a][b]`.
#[derive(Debug, Clone, PartialEq)]
pub struct JointDistribution {
    n: usize,
    table: Vec<f64>,
}

impl JointDistribution {
    /// Born-rule distribution P(a,b|i,j) = Tr[(Π^{A_i}_a ⊗ Π^{B_j}_b) ρ] of a
    /// two-qubit state under the given settings.
    ///
    /// Traces with an imaginary part larger than the `imag_trace` tolerance
    /// signal a non-Hermitian input and are rejected; smaller ones are
    /// discarded. Negative real parts within `prob_clamp` are rounding noise
    /// and get clamped to zero.
    pub fn from_state(state: &DensityMatrix, settings: &SettingPair) -> Result<Self> {
        Self::from_state_with(state, settings, &Tolerances::DEFAULT)
    }

    pub fn from_state_with(
        state: &DensityMatrix,
        settings: &SettingPair,
        tol: &Tolerances,
    ) -> Result<Self> {
        if state.dim() != 4 {
            return Err(Error::DimensionMismatch {
                expected: 4,
                found: state.dim(),
            });
        }
        let n = settings.n();
        let alice_proj: Vec<[ComplexSquareMatrix; 2]> = settings
            .alice()
            .iter()
            .map(|o| [o.projector(0), o.projector(1)])
            .collect();
        let bob_proj: Vec<[ComplexSquareMatrix; 2]> = settings
            .bob()
            .iter()
            .map(|o| [o.projector(0), o.projector(1)])
            .collect();

        let mut table = vec![0.0f64; n * n * 4];
        for i in 0..n {
            for j in 0..n {
                for a in 0..2usize {
                    for b in 0..2usize {
                        let op = tensor(&alice_proj[i][a], &bob_proj[j][b])?;
                        let t = op.trace_product(state.matrix());
                        if t.im.abs() > tol.imag_trace {
                            return Err(Error::NonNegligibleImaginary { imag: t.im });
                        }
                        let mut p = t.re;
                        if p < 0.0 && p >= -tol.prob_clamp {
                            p = 0.0;
                        } else if p > 1.0 && p <= 1.0 + tol.prob_clamp {
                            p = 1.0;
                        }
                        table[idx(n, i, j, a, b)] = p;
                    }
                }
            }
        }
        let dist = Self { n, table };
        dist.validate(tol)?;
        Ok(dist)
    }

    /// Builds a distribution from a raw `[i][j][a][b]` table, running the full
    /// validation (range, normalization, no-signalling).
    pub fn from_table(n: usize, table: Vec<f64>) -> Result<Self> {
        if table.len() != n * n * 4 {
            return Err(Error::DimensionMismatch {
                expected: n * n * 4,
                found: table.len(),
            });
        }
        let dist = Self { n, table };
        dist.validate(&Tolerances::DEFAULT)?;
        Ok(dist)
    }

    fn validate(&self, tol: &Tolerances) -> Result<()> {
        let n = self.n;
        for &p in &self.table {
            if !(0.0..=1.0 + tol.prob_clamp).contains(&p) {
                return Err(Error::InvalidDistribution {
                    reason: "entry outside [0,1]",
                    defect: p,
                });
            }
        }
        for i in 0..n {
            for j in 0..n {
                let sum: f64 = (0..2)
                    .flat_map(|a| (0..2).map(move |b| (a, b)))
                    .map(|(a, b)| self.table[idx(n, i, j, a, b)])
                    .sum();
                if (sum - 1.0).abs() > tol.normalization {
                    return Err(Error::InvalidDistribution {
                        reason: "block not normalized",
                        defect: (sum - 1.0).abs(),
                    });
                }
            }
        }
        let defect = self.no_signalling_defect();
        if defect > tol.no_signalling {
            return Err(Error::InvalidDistribution {
                reason: "no-signalling violated",
                defect,
            });
        }
        Ok(())
    }

    /// Largest spread of one party's marginal across the other party's
    /// setting choices. Zero for any distribution derived from a single
    /// quantum state.
    pub fn no_signalling_defect(&self) -> f64 {
        let n = self.n;
        let mut worst = 0.0f64;
        // Alice's marginal P(a|i) must not depend on j.
        for i in 0..n {
            for a in 0..2 {
                let margs: Vec<f64> = (0..n)
                    .map(|j| self.table[idx(n, i, j, a, 0)] + self.table[idx(n, i, j, a, 1)])
                    .collect();
                let lo = margs.iter().cloned().fold(f64::INFINITY, f64::min);
                let hi = margs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
                worst = worst.max(hi - lo);
            }
        }
        // And symmetrically for Bob.
        for j in 0..n {
            for b in 0..2 {
                let margs: Vec<f64> = (0..n)
                    .map(|i| self.table[idx(n, i, j, 0, b)] + self.table[idx(n, i, j, 1, b)])
                    .collect();
                let lo = margs.iter().cloned().fold(f64::INFINITY, f64::min);
                let hi = margs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
                worst = worst.max(hi - lo);
            }
        }
        worst
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// P(a,b|i,j). Panics on out-of-range indices; use
    /// [`expectation`](Self::expectation) and friends for checked access.
    pub fn prob(&self, i: usize, j: usize, a: usize, b: usize) -> f64 {
        assert!(i < self.n && j < self.n && a < 2 && b < 2);
        self.table[idx(self.n, i, j, a, b)]
    }

    /// The correlator ⟨A_i B_j⟩ = Σ_{a,b} (−1)^{a+b} P(a,b|i,j), in [−1, 1].
    pub fn expectation(&self, i: usize, j: usize) -> Result<f64> {
        self.check_index(i)?;
        self.check_index(j)?;
        let mut e = 0.0;
        for a in 0..2usize {
            for b in 0..2usize {
                let sign = if (a + b) % 2 == 0 { 1.0 } else { -1.0 };
                e += sign * self.table[idx(self.n, i, j, a, b)];
            }
        }
        Ok(e)
    }

    /// Anti-correlation probability for matched settings:
    /// Pd(i) = P(0,1|i,i) + P(1,0|i,i) = (1 − ⟨A_i B_i⟩)/2.
    pub fn anti_corr_prob(&self, i: usize) -> Result<f64> {
        self.check_index(i)?;
        Ok(self.table[idx(self.n, i, i, 0, 1)] + self.table[idx(self.n, i, i, 1, 0)])
    }

    /// Same-outcome probability for matched settings, Ps(i) = 1 − Pd(i).
    pub fn same_corr_prob(&self, i: usize) -> Result<f64> {
        self.check_index(i)?;
        Ok(self.table[idx(self.n, i, i, 0, 0)] + self.table[idx(self.n, i, i, 1, 1)])
    }

    /// The table as nested arrays `[i][j][a][b]`, e.g. for serialization.
    pub fn to_nested(&self) -> Vec<Vec<[[f64; 2]; 2]>> {
        let n = self.n;
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        [
                            [
                                self.table[idx(n, i, j, 0, 0)],
                                self.table[idx(n, i, j, 0, 1)],
                            ],
                            [
                                self.table[idx(n, i, j, 1, 0)],
                                self.table[idx(n, i, j, 1, 1)],
                            ],
                        ]
                    })
                    .collect()
            })
            .collect()
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.n {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.n,
            });
        }
        Ok(())
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for JointDistribution {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> core::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("JointDistribution", 2)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("table", &self.to_nested())?;
        s.end()
    }
}

#[inline]
fn idx(n: usize, i: usize, j: usize, a: usize, b: usize) -> usize {
    ((i * n + j) * 2 + a) * 2 + b
}
