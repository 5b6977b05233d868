//! Bell polynomials, derangement polynomials, and the umbral evaluation
//! machinery connecting them.
//!
//! Every family is computed along two independent routes — a direct
//! definition route and a recurrence route — each with its own memo cache,
//! so route-agreement tests genuinely compare different computations rather
//! than one cache against itself.
//!
//! The umbral side works with polynomials in a formal variable `y` whose
//! coefficients live in `Z[x]`; the evaluation functional sends `y^j` to the
//! `j`-th Bell polynomial and is linear over `Z[x]`. Under this functional,
//! multiplying by the falling factorial `y (y-1) .. (y-m+1)` is the same as
//! shifting the cofactor by `m` and multiplying the image by `x^m` — the
//! engine behind the shift identities verified downstream.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::combinat::Tables;
use crate::poly::IntPolynomial;

/// Errors from the polynomial-family entry points.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum BellError {
    /// The shifted product `(y-1)(y-2)..(y-m+1)` needs `m >= 1`; at `m = 1`
    /// it is the empty product 1, and below that it is undefined.
    #[error("shifted product requires m >= 1")]
    ShiftedProductUndefined,
}

/// Which of the two independent computation routes to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    /// Straight from the defining expansion (Stirling rows, binomial sums).
    Definition,
    /// From the family's recurrence.
    Recurrence,
}

/// Memo pack for the polynomial families, layered over the integer tables.
#[derive(Debug, Default)]
pub struct BellTables {
    tables: Tables,
    bell_definition: RwLock<Vec<IntPolynomial>>,
    bell_recurrence: RwLock<Vec<IntPolynomial>>,
    derangement_definition: RwLock<Vec<IntPolynomial>>,
    derangement_recurrence: RwLock<Vec<IntPolynomial>>,
}

/// `(x - 1)^k` for `k = 0..=max`.
fn x_minus_one_powers(max: usize) -> Vec<IntPolynomial> {
    let x_minus_one = IntPolynomial::from_coefficients(vec![BigInt::from(-1), BigInt::one()]);
    let mut pows = Vec::with_capacity(max + 1);
    pows.push(IntPolynomial::one());
    for _ in 0..max {
        pows.push(pows.last().unwrap().mul(&x_minus_one));
    }
    pows
}

impl BellTables {
    pub fn new() -> Self {
        BellTables::default()
    }

    /// The integer-sequence tables this pack is layered on.
    pub fn tables(&self) -> &Tables {
        &self.tables
    }

    /// Bell polynomial via the recurrence route (the default workhorse).
    pub fn bell_polynomial(&self, m: usize) -> IntPolynomial {
        self.bell_polynomial_via(m, Route::Recurrence)
    }

    /// Bell polynomial along an explicit route.
    ///
    /// Definition route: coefficient of `x^j` is the second-kind Stirling
    /// number `S(m, j)`. Recurrence route: `B_{m+1} = x * sum_j C(m, j) B_j`.
    pub fn bell_polynomial_via(&self, m: usize, route: Route) -> IntPolynomial {
        let cache = match route {
            Route::Definition => &self.bell_definition,
            Route::Recurrence => &self.bell_recurrence,
        };
        {
            let cached = cache.read().unwrap();
            if let Some(p) = cached.get(m) {
                return p.clone();
            }
        }
        match route {
            Route::Definition => {
                let mut cached = cache.write().unwrap();
                while cached.len() <= m {
                    let row = self.tables.stirling_second_row(cached.len());
                    cached.push(IntPolynomial::from_coefficients(row));
                }
                cached[m].clone()
            }
            Route::Recurrence => {
                let mut cached = cache.write().unwrap();
                if cached.is_empty() {
                    cached.push(IntPolynomial::one());
                }
                while cached.len() <= m {
                    let k = cached.len() - 1;
                    let mut sum = IntPolynomial::zero();
                    for (j, b) in cached.iter().enumerate().take(k + 1) {
                        sum = sum.add(&b.scale(&self.tables.binomial(k, j)));
                    }
                    cached.push(sum.mul_xpow(1));
                }
                cached[m].clone()
            }
        }
    }

    /// Derangement polynomial via the recurrence route.
    pub fn derangement_polynomial(&self, m: usize) -> IntPolynomial {
        self.derangement_polynomial_via(m, Route::Recurrence)
    }

    /// Derangement polynomial along an explicit route.
    ///
    /// Definition route: `D_m(x) = sum_j C(m, j) j! (x-1)^(m-j)`.
    /// Recurrence route: `D_m(x) = m D_{m-1}(x) + (x-1)^m` with `D_0 = 1`.
    pub fn derangement_polynomial_via(&self, m: usize, route: Route) -> IntPolynomial {
        let cache = match route {
            Route::Definition => &self.derangement_definition,
            Route::Recurrence => &self.derangement_recurrence,
        };
        {
            let cached = cache.read().unwrap();
            if let Some(p) = cached.get(m) {
                return p.clone();
            }
        }
        let mut cached = cache.write().unwrap();
        let pows = x_minus_one_powers(m);
        match route {
            Route::Definition => {
                while cached.len() <= m {
                    let k = cached.len();
                    let mut sum = IntPolynomial::zero();
                    for j in 0..=k {
                        let scalar = self.tables.binomial(k, j) * self.tables.factorial(j);
                        sum = sum.add(&pows[k - j].scale(&scalar));
                    }
                    cached.push(sum);
                }
            }
            Route::Recurrence => {
                if cached.is_empty() {
                    cached.push(IntPolynomial::one());
                }
                while cached.len() <= m {
                    let k = cached.len();
                    let next = cached[k - 1].scale(&BigInt::from(k)).add(&pows[k]);
                    cached.push(next);
                }
            }
        }
        cached[m].clone()
    }

    /// Applies the evaluation functional `y^j -> B_j(x)`, extended linearly
    /// over `Z[x]`, to a polynomial in `y`.
    pub fn umbral_eval(&self, g: &UmbralPolynomial) -> IntPolynomial {
        let mut acc = IntPolynomial::zero();
        for (j, c) in g.coefficients().iter().enumerate() {
            acc = acc.add(&c.mul(&self.bell_polynomial(j)));
        }
        acc
    }

    /// Same functional applied to a `y`-polynomial with integer coefficients.
    pub fn umbral_eval_y(&self, g: &IntPolynomial) -> IntPolynomial {
        self.umbral_eval(&UmbralPolynomial::from_y_polynomial(g))
    }

    /// Umbral image of `y^n * y (y-1) .. (y-m+1)`.
    ///
    /// At `n = 0` this is the Stirling-inversion collapse to `x^m`; for
    /// general `n` it is the left side of the shift identity.
    pub fn umbral_falling_product(&self, m: usize, n: usize) -> IntPolynomial {
        let product = crate::poly::falling_factorial(m).mul_xpow(n);
        self.umbral_eval_y(&product)
    }

    /// Umbral image of the shifted product `(y-1)(y-2)..(y-m+1)`, the empty
    /// product (so the constant 1) at `m = 1`. These images satisfy
    /// `A_{m+1} = x^m - m A_m` and carry the derangement connection.
    pub fn umbral_shifted_product(&self, m: usize) -> Result<IntPolynomial, BellError> {
        if m == 0 {
            return Err(BellError::ShiftedProductUndefined);
        }
        let mut product = IntPolynomial::one();
        for i in 1..m {
            let linear =
                IntPolynomial::from_coefficients(vec![BigInt::from(-(i as i64)), BigInt::one()]);
            product = product.mul(&linear);
        }
        Ok(self.umbral_eval_y(&product))
    }

    /// Fault-injection hook for suite self-tests: perturbs one coefficient
    /// of the cached `m`-th Bell polynomial on the recurrence route (the
    /// route every checker consumes), so that downstream verification must
    /// produce failing verdicts. Never called on healthy paths.
    pub fn corrupt_bell_coefficient(&self, m: usize) {
        let _ = self.bell_polynomial(m);
        let mut cached = self.bell_recurrence.write().unwrap();
        let corrupted = cached[m].add(&IntPolynomial::monomial(BigInt::one(), m.min(1)));
        cached[m] = corrupted;
    }
}

/// A polynomial in the umbral variable `y` with coefficients in `Z[x]`,
/// stored densely by powers of `y` with no trailing zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UmbralPolynomial {
    coeffs: Vec<IntPolynomial>,
}

impl UmbralPolynomial {
    pub fn zero() -> Self {
        UmbralPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UmbralPolynomial::from_coefficients(vec![IntPolynomial::one()])
    }

    /// The monomial `y^n`.
    pub fn y_power(n: usize) -> Self {
        let mut coeffs = vec![IntPolynomial::zero(); n + 1];
        coeffs[n] = IntPolynomial::one();
        UmbralPolynomial { coeffs }
    }

    /// Builds from `coeffs[j] = coefficient of y^j`, trimming trailing zeros.
    pub fn from_coefficients(mut coeffs: Vec<IntPolynomial>) -> Self {
        while coeffs.last().is_some_and(IntPolynomial::is_zero) {
            coeffs.pop();
        }
        UmbralPolynomial { coeffs }
    }

    /// Reinterprets an integer polynomial as a polynomial in `y` with
    /// constant coefficients.
    pub fn from_y_polynomial(g: &IntPolynomial) -> Self {
        UmbralPolynomial::from_coefficients(
            g.coefficients()
                .iter()
                .map(|c| IntPolynomial::constant(c.clone()))
                .collect(),
        )
    }

    pub fn coefficients(&self) -> &[IntPolynomial] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn coefficient(&self, j: usize) -> IntPolynomial {
        self.coeffs
            .get(j)
            .cloned()
            .unwrap_or_else(IntPolynomial::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for j in 0..n {
            out.push(self.coefficient(j).add(&other.coefficient(j)));
        }
        UmbralPolynomial::from_coefficients(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UmbralPolynomial::zero();
        }
        let mut out = vec![IntPolynomial::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        UmbralPolynomial::from_coefficients(out)
    }

    /// Multiplies every coefficient by a fixed polynomial in `x`.
    pub fn scale_by_polynomial(&self, f: &IntPolynomial) -> Self {
        UmbralPolynomial::from_coefficients(self.coeffs.iter().map(|c| c.mul(f)).collect())
    }

    /// The substitution `y -> y + k`, by Horner's rule in `y`.
    pub fn substitute_y_plus(&self, k: i64) -> Self {
        let shift = UmbralPolynomial::from_coefficients(vec![
            IntPolynomial::constant(BigInt::from(k)),
            IntPolynomial::one(),
        ]);
        let mut acc = UmbralPolynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc
                .mul(&shift)
                .add(&UmbralPolynomial::from_coefficients(vec![c.clone()]));
        }
        acc
    }
}
