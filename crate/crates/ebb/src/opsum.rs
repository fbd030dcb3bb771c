//! Complex-weighted sums of Pauli strings in canonical form.
//!
//! Terms are keyed by the phase-free letter word; string phases fold into the
//! coefficients on insertion, and vanishing coefficients are pruned, so two
//! sums are equal exactly when their term maps are. Hamiltonians, logical
//! operators, and extracted error generators all live here.

use std::collections::BTreeMap;
use std::fmt;

use crate::dense::{DenseOperator, C64};
use crate::error::{Error, Result};
use crate::pauli::{PauliLetter, PauliString, Phase};

/// Coefficients with magnitude at or below this are dropped from the
/// canonical form.
const PRUNE_TOL: f64 = 1e-15;

#[derive(Clone, Debug, PartialEq)]
pub struct OperatorSum {
    n_qubits: usize,
    terms: BTreeMap<Vec<PauliLetter>, C64>,
}

impl OperatorSum {
    pub fn zero(n_qubits: usize) -> Self {
        OperatorSum { n_qubits, terms: BTreeMap::new() }
    }

    /// `factor * I`.
    pub fn scaled_identity(n_qubits: usize, factor: C64) -> Self {
        let mut sum = OperatorSum::zero(n_qubits);
        sum.add_term(&PauliString::identity(n_qubits), factor);
        sum
    }

    pub fn from_terms<'a>(
        n_qubits: usize,
        terms: impl IntoIterator<Item = (&'a PauliString, C64)>,
    ) -> Result<Self> {
        let mut sum = OperatorSum::zero(n_qubits);
        for (p, c) in terms {
            if p.n_qubits() != n_qubits {
                return Err(Error::QubitCountMismatch { left: n_qubits, right: p.n_qubits() });
            }
            sum.add_term(p, c);
        }
        Ok(sum)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        1 << self.n_qubits
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Fold `coeff * p` into the sum, normalizing the string phase into the
    /// coefficient.
    pub fn add_term(&mut self, p: &PauliString, coeff: C64) {
        assert_eq!(p.n_qubits(), self.n_qubits, "term register size mismatch");
        let folded = coeff * p.phase().value();
        let entry = self.terms.entry(p.letters().to_vec()).or_insert(C64::new(0.0, 0.0));
        *entry += folded;
        if entry.norm() <= PRUNE_TOL {
            self.terms.remove(p.letters());
        }
    }

    /// Iterate canonical terms as `(phase-free string, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (PauliString, C64)> + '_ {
        self.terms
            .iter()
            .map(|(letters, &c)| (PauliString::from_letters(letters.clone()), c))
    }

    pub fn coefficient(&self, p: &PauliString) -> C64 {
        self.terms
            .get(p.letters())
            .map(|&c| c * p.phase().value().conj())
            .unwrap_or(C64::new(0.0, 0.0))
    }

    pub fn plus(&self, other: &OperatorSum) -> Result<OperatorSum> {
        self.check_register(other)?;
        let mut out = self.clone();
        for (p, c) in other.terms() {
            out.add_term(&p, c);
        }
        Ok(out)
    }

    pub fn minus(&self, other: &OperatorSum) -> Result<OperatorSum> {
        self.plus(&other.scaled(C64::new(-1.0, 0.0)))
    }

    pub fn scaled(&self, factor: C64) -> OperatorSum {
        if factor.norm() <= PRUNE_TOL {
            return OperatorSum::zero(self.n_qubits);
        }
        OperatorSum {
            n_qubits: self.n_qubits,
            terms: self.terms.iter().map(|(k, &c)| (k.clone(), c * factor)).collect(),
        }
    }

    pub fn scaled_re(&self, factor: f64) -> OperatorSum {
        self.scaled(C64::new(factor, 0.0))
    }

    /// Exact operator product.
    pub fn product(&self, other: &OperatorSum) -> Result<OperatorSum> {
        self.check_register(other)?;
        let mut out = OperatorSum::zero(self.n_qubits);
        for (p, a) in self.terms() {
            for (q, b) in other.terms() {
                let pq = p.multiply(&q)?;
                out.add_term(&pq, a * b);
            }
        }
        Ok(out)
    }

    pub fn commutator(&self, other: &OperatorSum) -> Result<OperatorSum> {
        self.product(other)?.minus(&other.product(self)?)
    }

    pub fn adjoint(&self) -> OperatorSum {
        // letter words are Hermitian, so only coefficients conjugate
        OperatorSum {
            n_qubits: self.n_qubits,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c.conj())).collect(),
        }
    }

    /// Hermitian exactly when every canonical coefficient is real.
    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.terms.values().all(|c| c.im.abs() <= tol)
    }

    /// Frobenius norm; canonical words are trace-orthogonal with
    /// `tr(P^2) = 2^n`.
    pub fn frobenius_norm(&self) -> f64 {
        let sq: f64 = self.terms.values().map(|c| c.norm_sqr()).sum();
        (sq * self.dim() as f64).sqrt()
    }

    pub fn trace(&self) -> C64 {
        self.coefficient(&PauliString::identity(self.n_qubits)) * self.dim() as f64
    }

    /// Conjugation `u^dag * self * u` by a Pauli string, exact term by term.
    pub fn conjugated_by_pauli(&self, u: &PauliString) -> Result<OperatorSum> {
        let mut out = OperatorSum::zero(self.n_qubits);
        for (p, c) in self.terms() {
            let conj = p.conjugated_by(u)?;
            out.add_term(&conj, c);
        }
        Ok(out)
    }

    pub fn to_dense(&self) -> DenseOperator {
        let mut acc = DenseOperator::zeros(self.dim());
        for (p, c) in self.terms() {
            acc = acc.add(&p.to_dense().scale(c)).expect("uniform dims");
        }
        acc
    }

    pub fn approx_eq(&self, other: &OperatorSum, tol: f64) -> bool {
        if self.n_qubits != other.n_qubits {
            return false;
        }
        let keys: std::collections::BTreeSet<_> =
            self.terms.keys().chain(other.terms.keys()).collect();
        keys.into_iter().all(|k| {
            let a = self.terms.get(k).copied().unwrap_or(C64::new(0.0, 0.0));
            let b = other.terms.get(k).copied().unwrap_or(C64::new(0.0, 0.0));
            (a - b).norm() <= tol
        })
    }

    /// Structured text form for serialization: canonical word -> `[re, im]`.
    pub fn to_term_map(&self) -> BTreeMap<String, [f64; 2]> {
        self.terms()
            .map(|(p, c)| (p.word(), [c.re, c.im]))
            .collect()
    }

    pub fn from_term_map(n_qubits: usize, map: &BTreeMap<String, [f64; 2]>) -> Result<Self> {
        let mut sum = OperatorSum::zero(n_qubits);
        for (word, &[re, im]) in map {
            let p = PauliString::parse(word, Some(n_qubits))?;
            sum.add_term(&p, C64::new(re, im));
        }
        Ok(sum)
    }

    fn check_register(&self, other: &OperatorSum) -> Result<()> {
        if self.n_qubits != other.n_qubits {
            return Err(Error::QubitCountMismatch {
                left: self.n_qubits,
                right: other.n_qubits,
            });
        }
        Ok(())
    }

    /// Parse sums like `"0.5*(X1 X2) + 0.5*(Y1 Y2)"` or `"-1 X1 Z2"`.
    ///
    /// Each `+`/`-`-separated term is an optional real coefficient (with `*`)
    /// times a Pauli word, parenthesized or bare; a bare number is an
    /// identity term. With `n_qubits = None` the register size is inferred
    /// from the largest index used.
    pub fn parse(text: &str, n_qubits: Option<usize>) -> Result<OperatorSum> {
        let raw_terms = split_top_level_terms(text)?;
        if raw_terms.is_empty() {
            return Err(Error::Parse("empty operator expression".into()));
        }
        let mut parsed: Vec<(f64, PauliString)> = Vec::new();
        let mut max_qubits = 1usize;
        for (sign, body) in &raw_terms {
            let (coeff, word) = split_coefficient(body)?;
            let string = if word.is_empty() {
                PauliString::identity(1)
            } else {
                PauliString::parse(word, None)?
            };
            max_qubits = max_qubits.max(string.n_qubits());
            parsed.push((sign * coeff, string));
        }
        let n = match n_qubits {
            Some(n) => {
                if max_qubits > n {
                    return Err(Error::IndexOutOfRange { index: max_qubits, limit: n });
                }
                n
            }
            None => max_qubits,
        };
        let mut sum = OperatorSum::zero(n);
        for (coeff, string) in parsed {
            let mut letters = string.letters().to_vec();
            letters.resize(n, PauliLetter::I);
            let widened = PauliString::new(string.phase(), letters);
            sum.add_term(&widened, C64::new(coeff, 0.0));
        }
        Ok(sum)
    }
}

/// Split on top-level `+`/`-`, respecting parentheses, into `(sign, body)`.
fn split_top_level_terms(text: &str) -> Result<Vec<(f64, String)>> {
    let mut terms = Vec::new();
    let mut current = String::new();
    let mut sign = 1.0;
    let mut depth = 0usize;
    let mut prev: Option<char> = None;
    for ch in text.chars() {
        match ch {
            '(' => {
                depth += 1;
                current.push(ch);
            }
            ')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| Error::Parse("unbalanced ')'".into()))?;
                current.push(ch);
            }
            '+' | '-' if depth == 0 && !matches!(prev, Some('e') | Some('E') | Some('*')) => {
                if !current.trim().is_empty() {
                    terms.push((sign, current.trim().to_string()));
                    current = String::new();
                } else if ch == '-' && current.trim().is_empty() && !terms.is_empty() {
                    return Err(Error::Parse("dangling sign".into()));
                }
                sign = if ch == '-' { -1.0 } else { 1.0 };
            }
            _ => current.push(ch),
        }
        if !ch.is_whitespace() {
            prev = Some(ch);
        }
    }
    if depth != 0 {
        return Err(Error::Parse("unbalanced '('".into()));
    }
    if !current.trim().is_empty() {
        terms.push((sign, current.trim().to_string()));
    }
    Ok(terms)
}

/// Split one term into `(coefficient, pauli word)`.
fn split_coefficient(body: &str) -> Result<(f64, &str)> {
    let body = body.trim();
    if let Some((lhs, rhs)) = body.split_once('*') {
        let coeff: f64 = lhs
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad coefficient '{}'", lhs.trim())))?;
        return Ok((coeff, strip_parens(rhs.trim())));
    }
    // no '*': either a bare number (identity term) or a bare word
    if let Ok(coeff) = body.parse::<f64>() {
        return Ok((coeff, ""));
    }
    Ok((1.0, strip_parens(body)))
}

fn strip_parens(s: &str) -> &str {
    let s = s.trim();
    if let Some(inner) = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
        inner.trim()
    } else {
        s
    }
}

impl fmt::Display for OperatorSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (p, c) in self.terms() {
            let (lead, coeff) = if c.im.abs() <= PRUNE_TOL && c.re < 0.0 {
                ("- ", -c.re)
            } else if c.im.abs() <= PRUNE_TOL {
                ("+ ", c.re)
            } else {
                // complex coefficient: print as-is
                if !first {
                    write!(f, " + ")?;
                }
                write!(f, "({:?})*({})", c, p.word())?;
                first = false;
                continue;
            };
            if first {
                if lead == "- " {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {lead}")?;
            }
            if (coeff - 1.0).abs() > PRUNE_TOL || p.is_identity_string() {
                write!(f, "{coeff}*({})", p.word())?;
            } else {
                write!(f, "({})", p.word())?;
            }
            first = false;
        }
        Ok(())
    }
}

/// `exp(-i theta H)` for a Hermitian sum, via spectral decomposition of the
/// dense form. Unitary to machine precision at the dimensions in scope.
pub fn exp_hermitian(h: &OperatorSum, theta: f64) -> Result<DenseOperator> {
    if !h.is_hermitian(1e-12) {
        let defect = h
            .terms
            .values()
            .map(|c| c.im.abs())
            .fold(0.0, f64::max);
        return Err(Error::NotHermitian { defect });
    }
    h.to_dense().exp_herm_scaled(theta)
}
