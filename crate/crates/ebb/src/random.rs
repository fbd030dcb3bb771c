//! Seeded random states and operators for verification batches.

use nalgebra::{DMatrix, DVector};
use rand::Rng;

use crate::dense::{vector_norm, DenseOperator, C64};
use crate::opsum::OperatorSum;
use crate::pauli::{PauliLetter, PauliString};

/// Haar-ish random pure state: complex gaussian entries, normalized.
pub fn random_state<R: Rng>(dim: usize, rng: &mut R) -> DVector<C64> {
    let v = DVector::from_iterator(dim, (0..dim).map(|_| gaussian_c64(rng)));
    let n = vector_norm(&v);
    v / C64::new(n, 0.0)
}

/// Random Hermitian operator `(A + A^dag)/2` with gaussian entries.
pub fn random_hermitian<R: Rng>(dim: usize, rng: &mut R) -> DenseOperator {
    let a = DMatrix::from_iterator(dim, dim, (0..dim * dim).map(|_| gaussian_c64(rng)));
    DenseOperator::from_matrix((&a + a.adjoint()) * C64::new(0.5, 0.0))
}

/// Random unitary as the exponential of a random Hermitian generator.
pub fn random_unitary<R: Rng>(dim: usize, rng: &mut R) -> DenseOperator {
    random_hermitian(dim, rng)
        .exp_herm_scaled(1.0)
        .expect("generator is hermitian by construction")
}

/// Random Hermitian Pauli sum with uniform real coefficients in [-1, 1].
/// `traceless` drops the identity word.
pub fn random_hermitian_sum<R: Rng>(n_qubits: usize, traceless: bool, rng: &mut R) -> OperatorSum {
    let mut sum = OperatorSum::zero(n_qubits);
    for word in all_words(n_qubits) {
        if traceless && word.iter().all(|&l| l == PauliLetter::I) {
            continue;
        }
        let c: f64 = rng.gen_range(-1.0..1.0);
        sum.add_term(&PauliString::from_letters(word), C64::new(c, 0.0));
    }
    sum
}

/// All `4^n` letter words in canonical order.
pub fn all_words(n_qubits: usize) -> Vec<Vec<PauliLetter>> {
    let mut words = vec![Vec::new()];
    for _ in 0..n_qubits {
        words = words
            .into_iter()
            .flat_map(|w| {
                PauliLetter::ALL.iter().map(move |&l| {
                    let mut next = w.clone();
                    next.push(l);
                    next
                })
            })
            .collect();
    }
    words
}

fn gaussian_c64<R: Rng>(rng: &mut R) -> C64 {
    // Box-Muller from two uniforms
    let u1: f64 = rng.gen_range(f64::EPSILON..1.0);
    let u2: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let r = (-2.0 * u1.ln()).sqrt();
    C64::new(r * u2.cos(), r * u2.sin())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_state_is_normalized() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let v = random_state(8, &mut rng);
        assert!((vector_norm(&v) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn random_hermitian_is_hermitian_and_unitary_is_unitary() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        assert!(random_hermitian(6, &mut rng).hermiticity_defect() < 1e-14);
        assert!(random_unitary(4, &mut rng).unitarity_defect() < 1e-12);
    }

    #[test]
    fn word_enumeration_counts_4_to_n() {
        assert_eq!(all_words(2).len(), 16);
        assert_eq!(all_words(3).len(), 64);
    }

    #[test]
    fn seeded_generation_is_reproducible() {
        let mut a = ChaCha8Rng::seed_from_u64(7);
        let mut b = ChaCha8Rng::seed_from_u64(7);
        assert_eq!(random_state(4, &mut a), random_state(4, &mut b));
    }
}
