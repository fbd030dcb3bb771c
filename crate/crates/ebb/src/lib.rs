//! Encoded bang-bang toolkit.
//!
//! Logical qubits are encoded in the decoherence-free subspace spanned by
//! `|01>` and `|10>` on blocks of two physical qubits. On top of that
//! encoding the crate constructs and verifies bang-bang decoupling pulse
//! sequences (parity kicks, group symmetrization, stabilizer kicks),
//! simulates the resulting system-bath dynamics exactly at desk scale, and
//! closes the loop with process tomography and empirical pulse design.
//!
//! Module map:
//! - [`pauli`] / [`opsum`]: exact Pauli-string algebra and weighted sums.
//! - [`dense`]: dense matrices, Hermitian eigendecompositions, exponentials.
//! - [`dfs`]: the block-of-two code, logical operators, error taxonomy.
//! - [`decoupling`]: pulse schedules, decoupling groups, kick verification.
//! - [`dynamics`]: system (x) spin-bath evolution, decay metrics,
//!   feasibility arithmetic.
//! - [`tomography`]: process matrices, error generators, and the empirical
//!   bang-bang learning loop.
//!
//! Everything is an immutable value and every operation a pure function;
//! batch helpers fan out with rayon when the `parallel` feature (default) is
//! enabled and fall back to sequential iteration otherwise.

pub mod dense;
pub mod decoupling;
pub mod dfs;
pub mod dynamics;
pub mod error;
pub mod opsum;
pub mod parallel;
pub mod pauli;
pub mod random;
pub mod tomography;

pub use dense::{C64, DenseOperator, HermitianEigen};
pub use error::{Error, Result};
pub use opsum::{exp_hermitian, OperatorSum};
pub use pauli::{CommutationSign, PauliLetter, PauliString, Phase};
