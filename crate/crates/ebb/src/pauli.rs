//! Signed Pauli strings and their exact group algebra.
//!
//! A [`PauliString`] is a phase times a tensor product of single-qubit Pauli
//! letters. Products, commutation checks, and conjugations are carried out
//! exactly on the letter/phase representation; dense matrices enter only
//! through [`PauliString::to_dense`].
//!
//! All sign bookkeeping derives from the single-qubit cyclic convention
//! `XY = iZ`, `YZ = iX`, `ZX = iY`.

use std::fmt;
use std::ops::Mul;

use crate::dense::{DenseOperator, C64};
use crate::error::{Error, Result};

/// One single-qubit Pauli operator, identity included.
///
/// The derived ordering `I < X < Y < Z` fixes the canonical term order used
/// throughout the crate.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum PauliLetter {
    I,
    X,
    Y,
    Z,
}

impl PauliLetter {
    pub const ALL: [PauliLetter; 4] = [PauliLetter::I, PauliLetter::X, PauliLetter::Y, PauliLetter::Z];

    /// Single-qubit product `self * other`, returning the phase and the
    /// resulting letter.
    pub fn product(self, other: PauliLetter) -> (Phase, PauliLetter) {
        use PauliLetter::*;
        match (self, other) {
            (I, b) => (Phase::ONE, b),
            (a, I) => (Phase::ONE, a),
            (a, b) if a == b => (Phase::ONE, I),
            (X, Y) => (Phase::PLUS_I, Z),
            (Y, Z) => (Phase::PLUS_I, X),
            (Z, X) => (Phase::PLUS_I, Y),
            (Y, X) => (Phase::MINUS_I, Z),
            (Z, Y) => (Phase::MINUS_I, X),
            (X, Z) => (Phase::MINUS_I, Y),
            _ => unreachable!(),
        }
    }

    /// True when the two letters commute as single-qubit operators.
    pub fn commutes_with(self, other: PauliLetter) -> bool {
        self == PauliLetter::I || other == PauliLetter::I || self == other
    }

    pub fn symbol(self) -> char {
        match self {
            PauliLetter::I => 'I',
            PauliLetter::X => 'X',
            PauliLetter::Y => 'Y',
            PauliLetter::Z => 'Z',
        }
    }

    pub fn from_symbol(c: char) -> Result<Self> {
        match c {
            'I' | 'i' => Ok(PauliLetter::I),
            'X' | 'x' => Ok(PauliLetter::X),
            'Y' | 'y' => Ok(PauliLetter::Y),
            'Z' | 'z' => Ok(PauliLetter::Z),
            other => Err(Error::Parse(format!("unknown Pauli letter '{other}'"))),
        }
    }

    /// 2x2 matrix of the letter.
    pub fn matrix(self) -> nalgebra::Matrix2<C64> {
        let o = C64::new(0.0, 0.0);
        let l = C64::new(1.0, 0.0);
        let i = C64::new(0.0, 1.0);
        match self {
            PauliLetter::I => nalgebra::Matrix2::new(l, o, o, l),
            PauliLetter::X => nalgebra::Matrix2::new(o, l, l, o),
            PauliLetter::Y => nalgebra::Matrix2::new(o, -i, i, o),
            PauliLetter::Z => nalgebra::Matrix2::new(l, o, o, -l),
        }
    }
}

/// A fourth root of unity `i^k`, the only phases closed under Pauli products.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Phase(u8);

impl Phase {
    pub const ONE: Phase = Phase(0);
    pub const PLUS_I: Phase = Phase(1);
    pub const MINUS_ONE: Phase = Phase(2);
    pub const MINUS_I: Phase = Phase(3);

    /// Exponent `k` in `i^k`.
    pub fn exponent(self) -> u8 {
        self.0
    }

    pub fn times(self, other: Phase) -> Phase {
        Phase((self.0 + other.0) % 4)
    }

    pub fn negated(self) -> Phase {
        self.times(Phase::MINUS_ONE)
    }

    pub fn conj(self) -> Phase {
        Phase((4 - self.0) % 4)
    }

    pub fn is_real(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn value(self) -> C64 {
        match self.0 {
            0 => C64::new(1.0, 0.0),
            1 => C64::new(0.0, 1.0),
            2 => C64::new(-1.0, 0.0),
            _ => C64::new(0.0, -1.0),
        }
    }

    pub fn parse(token: &str) -> Result<Phase> {
        match token {
            "+1" | "1" => Ok(Phase::ONE),
            "-1" => Ok(Phase::MINUS_ONE),
            "+i" | "i" => Ok(Phase::PLUS_I),
            "-i" => Ok(Phase::MINUS_I),
            other => Err(Error::Parse(format!("unknown phase token '{other}'"))),
        }
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.0 {
            0 => "+1",
            1 => "+i",
            2 => "-1",
            _ => "-i",
        };
        write!(f, "{s}")
    }
}

/// Whether two operators commute or anticommute. Pauli strings always do one
/// or the other.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CommutationSign {
    Commutes,
    Anticommutes,
}

/// A phase times a tensor product of Pauli letters on a fixed qubit register.
///
/// Qubit 0 is the leftmost tensor factor (most significant bit of the
/// computational basis index). The text form uses 1-based indices, e.g.
/// `"+1 X1 Z2"` for `X` on the first qubit times `Z` on the second.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PauliString {
    phase: Phase,
    letters: Vec<PauliLetter>,
}

impl PauliString {
    pub fn new(phase: Phase, letters: Vec<PauliLetter>) -> Self {
        PauliString { phase, letters }
    }

    pub fn identity(n_qubits: usize) -> Self {
        PauliString {
            phase: Phase::ONE,
            letters: vec![PauliLetter::I; n_qubits],
        }
    }

    pub fn from_letters(letters: Vec<PauliLetter>) -> Self {
        PauliString { phase: Phase::ONE, letters }
    }

    /// A single non-identity letter on `qubit` (0-based) of an `n_qubits`
    /// register.
    pub fn single(n_qubits: usize, qubit: usize, letter: PauliLetter) -> Result<Self> {
        if qubit >= n_qubits {
            return Err(Error::IndexOutOfRange { index: qubit, limit: n_qubits });
        }
        let mut letters = vec![PauliLetter::I; n_qubits];
        letters[qubit] = letter;
        Ok(PauliString { phase: Phase::ONE, letters })
    }

    /// Several letters placed at 0-based positions, e.g. `[(0, X), (1, Z)]`.
    pub fn from_positions(n_qubits: usize, positions: &[(usize, PauliLetter)]) -> Result<Self> {
        let mut letters = vec![PauliLetter::I; n_qubits];
        for &(q, l) in positions {
            if q >= n_qubits {
                return Err(Error::IndexOutOfRange { index: q, limit: n_qubits });
            }
            letters[q] = l;
        }
        Ok(PauliString { phase: Phase::ONE, letters })
    }

    pub fn n_qubits(&self) -> usize {
        self.letters.len()
    }

    pub fn phase(&self) -> Phase {
        self.phase
    }

    pub fn letters(&self) -> &[PauliLetter] {
        &self.letters
    }

    pub fn letter(&self, qubit: usize) -> PauliLetter {
        self.letters[qubit]
    }

    /// Number of non-identity letters.
    pub fn weight(&self) -> usize {
        self.letters.iter().filter(|&&l| l != PauliLetter::I).count()
    }

    pub fn is_identity_string(&self) -> bool {
        self.weight() == 0
    }

    /// The same string with phase reset to `+1`.
    pub fn unsigned(&self) -> Self {
        PauliString {
            phase: Phase::ONE,
            letters: self.letters.clone(),
        }
    }

    pub fn with_phase(&self, phase: Phase) -> Self {
        PauliString {
            phase,
            letters: self.letters.clone(),
        }
    }

    /// Hermitian conjugate; letters are self-adjoint so only the phase
    /// conjugates.
    pub fn adjoint(&self) -> Self {
        PauliString {
            phase: self.phase.conj(),
            letters: self.letters.clone(),
        }
    }

    fn check_same_register(&self, other: &PauliString) -> Result<()> {
        if self.n_qubits() != other.n_qubits() {
            return Err(Error::QubitCountMismatch {
                left: self.n_qubits(),
                right: other.n_qubits(),
            });
        }
        Ok(())
    }

    /// Exact group product `self * other` with accumulated phase.
    pub fn multiply(&self, other: &PauliString) -> Result<PauliString> {
        self.check_same_register(other)?;
        let mut phase = self.phase.times(other.phase);
        let letters = self
            .letters
            .iter()
            .zip(&other.letters)
            .map(|(&a, &b)| {
                let (p, l) = a.product(b);
                phase = phase.times(p);
                l
            })
            .collect();
        Ok(PauliString { phase, letters })
    }

    /// Commute or anticommute: the parity of positions where both letters are
    /// non-identity and differ.
    pub fn commutation_sign(&self, other: &PauliString) -> Result<CommutationSign> {
        self.check_same_register(other)?;
        let clashes = self
            .letters
            .iter()
            .zip(&other.letters)
            .filter(|(&a, &b)| !a.commutes_with(b))
            .count();
        Ok(if clashes % 2 == 0 {
            CommutationSign::Commutes
        } else {
            CommutationSign::Anticommutes
        })
    }

    pub fn commutes_with(&self, other: &PauliString) -> Result<bool> {
        Ok(self.commutation_sign(other)? == CommutationSign::Commutes)
    }

    /// Conjugation `u^dag * self * u` by another Pauli string. The result is
    /// `self` up to a sign, independent of the phase of `u`.
    pub fn conjugated_by(&self, u: &PauliString) -> Result<PauliString> {
        let sign = match self.commutation_sign(u)? {
            CommutationSign::Commutes => Phase::ONE,
            CommutationSign::Anticommutes => Phase::MINUS_ONE,
        };
        Ok(self.with_phase(self.phase.times(sign)))
    }

    /// Dense matrix on `2^n` dimensions: phase times the Kronecker product of
    /// the letter matrices, qubit 0 outermost.
    pub fn to_dense(&self) -> DenseOperator {
        let mut mat = nalgebra::DMatrix::<C64>::identity(1, 1);
        for letter in &self.letters {
            mat = mat.kronecker(&letter.matrix());
        }
        DenseOperator::from_matrix(mat * self.phase.value())
    }

    /// Parse the compact text form: an optional phase token followed by
    /// letter/index pairs with 1-based indices, e.g. `"+1 X1 Z2"`, `"-i Y3"`,
    /// or `"I"` for the identity. With `n_qubits = None` the register size is
    /// inferred from the largest index.
    pub fn parse(text: &str, n_qubits: Option<usize>) -> Result<PauliString> {
        let mut phase = Phase::ONE;
        let mut positions: Vec<(usize, PauliLetter)> = Vec::new();
        let mut max_index = 0usize;
        for (k, token) in text.split_whitespace().enumerate() {
            if k == 0 {
                if let Ok(p) = Phase::parse(token) {
                    phase = p;
                    continue;
                }
            }
            if token.eq_ignore_ascii_case("I") {
                continue;
            }
            let mut chars = token.chars();
            let letter = chars
                .next()
                .ok_or_else(|| Error::Parse("empty Pauli token".into()))
                .and_then(PauliLetter::from_symbol)?;
            let index: usize = chars
                .as_str()
                .parse()
                .map_err(|_| Error::Parse(format!("bad qubit index in '{token}'")))?;
            if index == 0 {
                return Err(Error::Parse(format!("qubit indices are 1-based, got '{token}'")));
            }
            if positions.iter().any(|&(q, _)| q == index - 1) {
                return Err(Error::Parse(format!("duplicate qubit index {index}")));
            }
            max_index = max_index.max(index);
            positions.push((index - 1, letter));
        }
        let n = match n_qubits {
            Some(n) => {
                if max_index > n {
                    return Err(Error::IndexOutOfRange { index: max_index, limit: n });
                }
                n
            }
            None => max_index.max(1),
        };
        let mut s = PauliString::from_positions(n, &positions)?;
        s.phase = phase;
        Ok(s)
    }

    /// The word part of the text form without the phase, e.g. `"X1 Z2"`;
    /// `"I"` for the identity string.
    pub fn word(&self) -> String {
        let parts: Vec<String> = self
            .letters
            .iter()
            .enumerate()
            .filter(|(_, &l)| l != PauliLetter::I)
            .map(|(q, &l)| format!("{}{}", l.symbol(), q + 1))
            .collect();
        if parts.is_empty() {
            "I".to_string()
        } else {
            parts.join(" ")
        }
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.phase == Phase::ONE {
            write!(f, "{}", self.word())
        } else {
            write!(f, "{} {}", self.phase, self.word())
        }
    }
}

impl Mul for &PauliString {
    type Output = PauliString;

    fn mul(self, rhs: &PauliString) -> PauliString {
        self.multiply(rhs).expect("qubit count mismatch in Pauli product")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str, n: usize) -> PauliString {
        PauliString::parse(s, Some(n)).unwrap()
    }

    #[test]
    fn single_qubit_products() {
        use PauliLetter::*;
        // cyclic convention XY = iZ
        assert_eq!(X.product(Y), (Phase::PLUS_I, Z));
        assert_eq!(Y.product(Z), (Phase::PLUS_I, X));
        assert_eq!(Z.product(X), (Phase::PLUS_I, Y));
        assert_eq!(Y.product(X), (Phase::MINUS_I, Z));
        assert_eq!(X.product(X), (Phase::ONE, I));
    }

    #[test]
    fn identity_product_is_neutral() {
        let p = parse("-i X1 Y3", 4);
        let id = PauliString::identity(4);
        assert_eq!(id.multiply(&p).unwrap(), p);
        assert_eq!(p.multiply(&id).unwrap(), p);
    }

    #[test]
    fn x_times_y_is_i_z() {
        let x = parse("X1", 1);
        let y = parse("Y1", 1);
        let prod = x.multiply(&y).unwrap();
        assert_eq!(prod, parse("+i Z1", 1));
    }

    #[test]
    fn two_qubit_product_matches_dense_oracle() {
        // (X1 Z2) * (Z1 X2) computed independently as a 4x4 matrix product.
        let a = parse("X1 Z2", 2);
        let b = parse("Z1 X2", 2);
        let prod = a.multiply(&b).unwrap();
        assert_eq!(prod, parse("Y1 Y2", 2));
        assert_eq!(prod.phase(), Phase::ONE);

        let dense_prod = a.to_dense().matmul(&b.to_dense()).unwrap();
        assert!(dense_prod.approx_eq(&prod.to_dense(), 1e-12));
    }

    #[test]
    fn squaring_folds_phase() {
        let p = parse("-1 X1 Y2", 2);
        let sq = p.multiply(&p).unwrap();
        // phase^2 = +1 here, and letters square to the identity
        assert_eq!(sq, PauliString::identity(2));
    }

    #[test]
    fn commutation_signs() {
        assert_eq!(
            parse("X1", 1).commutation_sign(&parse("Z1", 1)).unwrap(),
            CommutationSign::Anticommutes
        );
        assert_eq!(
            parse("Z1 Z2", 2).commutation_sign(&parse("X1", 2)).unwrap(),
            CommutationSign::Anticommutes
        );
        // two sign flips cancel
        assert_eq!(
            parse("Z1 Z2", 2).commutation_sign(&parse("X1 X2", 2)).unwrap(),
            CommutationSign::Commutes
        );
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let a = PauliString::identity(2);
        let b = PauliString::identity(3);
        assert!(a.multiply(&b).is_err());
        assert!(a.commutation_sign(&b).is_err());
    }

    #[test]
    fn conjugation_by_pauli_flips_sign_exactly_when_anticommuting() {
        let e = parse("X1", 2);
        let u = parse("Z1 Z2", 2);
        let conj = e.conjugated_by(&u).unwrap();
        assert_eq!(conj, parse("-1 X1", 2));

        let commuting = parse("X1 X2", 2);
        assert_eq!(commuting.conjugated_by(&u).unwrap(), commuting);
    }

    #[test]
    fn parse_and_display_round_trip() {
        for text in ["X1 Z2", "-i Y3", "+1 X1", "I"] {
            let p = PauliString::parse(text, Some(4)).unwrap();
            let round = PauliString::parse(&p.to_string(), Some(4)).unwrap();
            assert_eq!(p, round);
        }
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(PauliString::parse("X0", Some(2)).is_err());
        assert!(PauliString::parse("X1 X1", Some(2)).is_err());
        assert!(PauliString::parse("Q1", Some(2)).is_err());
        assert!(PauliString::parse("X3", Some(2)).is_err());
    }

    #[test]
    fn dense_form_of_z_is_diag_1_minus_1() {
        let z = parse("Z1", 1).to_dense();
        let m = z.matrix();
        assert_eq!(m[(0, 0)], C64::new(1.0, 0.0));
        assert_eq!(m[(1, 1)], C64::new(-1.0, 0.0));
        assert_eq!(m[(0, 1)], C64::new(0.0, 0.0));
    }
}
