//! Dense univariate polynomials with exact integer coefficients, plus their
//! reductions modulo a word-sized prime.
//!
//! Both representations are kept canonical at all times: coefficient vectors
//! never carry trailing zeros (the zero polynomial is the empty vector), and
//! modular coefficients always live in `[0, p)`. Canonicality is what lets
//! congruence checks be plain `==` comparisons on coefficient vectors.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::numeric::PrimeModulus;

/// Errors from modular polynomial arithmetic.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    /// Arithmetic between polynomials reduced at different primes.
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },
}

/// A polynomial in one variable with `BigInt` coefficients, stored densely
/// from the constant term up. Invariant: no trailing zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial::constant(BigInt::one())
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        IntPolynomial::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: BigInt) -> Self {
        IntPolynomial::from_coefficients(vec![c])
    }

    /// `c * x^degree`.
    pub fn monomial(c: BigInt, degree: usize) -> Self {
        if c.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        IntPolynomial { coeffs }
    }

    /// Builds a polynomial from `coeffs[i] = coefficient of x^i`, trimming
    /// trailing zeros to restore the canonical form.
    pub fn from_coefficients(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// Canonical coefficient slice, constant term first.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coefficient(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coefficient(i) + other.coefficient(i));
        }
        IntPolynomial::from_coefficients(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Schoolbook product; exact, and plenty fast at the degrees this
    /// library works with.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_coefficients(out)
    }

    /// Multiplication by the scalar `k`.
    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return IntPolynomial::zero();
        }
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Multiplication by `x^t` (a coefficient shift).
    pub fn mul_xpow(&self, t: usize) -> Self {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); t];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    /// Evaluation by Horner's rule.
    pub fn eval(&self, v: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * v + c;
        }
        acc
    }

    /// Composition `self(inner)`, again by Horner's rule.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = IntPolynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&IntPolynomial::constant(c.clone()));
        }
        acc
    }

    /// The substitution `x -> 1 - x`, an involution used throughout the
    /// derangement-side identities.
    pub fn substitute_one_minus_x(&self) -> Self {
        let one_minus_x = IntPolynomial::from_coefficients(vec![BigInt::one(), BigInt::from(-1)]);
        self.compose(&one_minus_x)
    }

    /// Coefficients rendered as decimal strings, constant term first; the
    /// exchange format used in reports.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(BigInt::to_string).collect()
    }
}

impl std::fmt::Display for IntPolynomial {
    /// Human form, e.g. `x^3 + 3*x^2 + x` or `0`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// The falling factorial `x (x-1) (x-2) ... (x-m+1)`, with the empty product
/// (`m = 0`) equal to 1.
pub fn falling_factorial(m: usize) -> IntPolynomial {
    let mut acc = IntPolynomial::one();
    for i in 0..m {
        let linear =
            IntPolynomial::from_coefficients(vec![BigInt::from(-(i as i64)), BigInt::one()]);
        acc = acc.mul(&linear);
    }
    acc
}

/// A polynomial over the prime field `F_p`, coefficients canonical in
/// `[0, p)` with no trailing zeros. Equality therefore means exactly
/// "congruent coefficientwise modulo p".
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModPolynomial {
    coeffs: Vec<u64>,
    modulus: PrimeModulus,
}

impl ModPolynomial {
    pub fn zero(modulus: PrimeModulus) -> Self {
        ModPolynomial {
            coeffs: Vec::new(),
            modulus,
        }
    }

    pub fn one(modulus: PrimeModulus) -> Self {
        ModPolynomial::from_residues(vec![1], modulus)
    }

    /// Builds from raw residues, reducing into `[0, p)` and trimming.
    pub fn from_residues(coeffs: Vec<u64>, modulus: PrimeModulus) -> Self {
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % modulus.get()).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPolynomial { coeffs, modulus }
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coefficient(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn check_same_modulus(&self, other: &Self) -> Result<(), PolyError> {
        if self.modulus != other.modulus {
            return Err(PolyError::ModulusMismatch {
                left: self.modulus.get(),
                right: other.modulus.get(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_same_modulus(other)?;
        let p = self.modulus;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(p.add(self.coefficient(i), other.coefficient(i)));
        }
        Ok(ModPolynomial::from_residues(out, p))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_same_modulus(other)?;
        let p = self.modulus;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(p.sub(self.coefficient(i), other.coefficient(i)));
        }
        Ok(ModPolynomial::from_residues(out, p))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_same_modulus(other)?;
        let p = self.modulus;
        if self.is_zero() || other.is_zero() {
            return Ok(ModPolynomial::zero(p));
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = p.add(out[i + j], p.mul(a, b));
            }
        }
        Ok(ModPolynomial::from_residues(out, p))
    }

    /// Multiplication by a scalar residue.
    pub fn scale(&self, r: u64) -> Self {
        let p = self.modulus;
        ModPolynomial::from_residues(self.coeffs.iter().map(|&c| p.mul(c, r)).collect(), p)
    }

    /// Multiplication by `x^t`.
    pub fn mul_xpow(&self, t: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0u64; t];
        coeffs.extend(self.coeffs.iter().copied());
        ModPolynomial {
            coeffs,
            modulus: self.modulus,
        }
    }

    /// Evaluation at a residue. Evaluating at 1 gives the coefficient sum,
    /// which is how polynomial-level checks specialize to numeric ones.
    pub fn eval(&self, v: u64) -> u64 {
        let p = self.modulus;
        let v = v % p.get();
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = p.add(p.mul(acc, v), c);
        }
        acc
    }

    /// Coefficients rendered as decimal strings, constant term first.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(u64::to_string).collect()
    }
}

/// Reduces an exact polynomial coefficientwise into `F_p`.
pub fn reduce_mod(a: &IntPolynomial, p: PrimeModulus) -> ModPolynomial {
    ModPolynomial::from_residues(a.coefficients().iter().map(|c| p.residue(c)).collect(), p)
}
