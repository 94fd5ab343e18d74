//! Dense complex linear algebra for one- and two-qubit states, observables,
//! and projectors — the numerical substrate for every other module.

mod matrix;
mod states;

pub use matrix::{ComplexSquareMatrix, HermitianEigen};
pub use states::{
    fidelity, nearest_density_matrix, pauli, tensor, Axis, BlochObservable, DensityMatrix,
    PureState,
};
