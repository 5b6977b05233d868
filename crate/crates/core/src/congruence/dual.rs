//! Dual-route accumulators for congruence checking.
//!
//! Every modular quantity is computed twice: once with exact big-integer
//! arithmetic reduced only at the very end, and once with arithmetic
//! carried in `F_p` from the start. The two results must coincide; if they
//! ever do not, the enclosing checker reports a failing verdict rather than
//! trusting either route. This guards the checkers against reduction bugs —
//! the exactness equivalent of a checksum.

use num_bigint::BigInt;

use crate::numeric::PrimeModulus;
use crate::poly::{reduce_mod, IntPolynomial, ModPolynomial};

/// A scalar accumulated along both arithmetic routes.
pub(crate) struct DualScalar {
    p: PrimeModulus,
    exact: BigInt,
    field: u64,
}

impl DualScalar {
    pub fn zero(p: PrimeModulus) -> Self {
        DualScalar {
            p,
            exact: BigInt::from(0),
            field: 0,
        }
    }

    /// Adds `value * weight` to both routes.
    pub fn add_term(&mut self, value: &BigInt, weight: &BigInt) {
        self.exact += value * weight;
        let term = self.p.mul(self.p.residue(value), self.p.residue(weight));
        self.field = self.p.add(self.field, term);
    }

    /// Canonical residue plus a flag saying whether the routes agreed.
    pub fn settle(self) -> (u64, bool) {
        let reduced = self.p.residue(&self.exact);
        (reduced, reduced == self.field)
    }
}

/// A polynomial accumulated along both arithmetic routes.
pub(crate) struct DualPoly {
    p: PrimeModulus,
    exact: IntPolynomial,
    field: ModPolynomial,
}

impl DualPoly {
    pub fn zero(p: PrimeModulus) -> Self {
        DualPoly {
            p,
            exact: IntPolynomial::zero(),
            field: ModPolynomial::zero(p),
        }
    }

    /// Adds `poly * weight` to both routes.
    pub fn add_term(&mut self, poly: &IntPolynomial, weight: &BigInt) {
        self.exact = self.exact.add(&poly.scale(weight));
        let term = reduce_mod(poly, self.p).scale(self.p.residue(weight));
        self.field = self
            .field
            .add(&term)
            .expect("both routes share one modulus");
    }

    /// Multiplies both routes by `x^t`.
    pub fn shift(&mut self, t: usize) {
        self.exact = self.exact.mul_xpow(t);
        self.field = self.field.mul_xpow(t);
    }

    /// Canonical reduced polynomial plus a route-agreement flag.
    pub fn settle(self) -> (ModPolynomial, bool) {
        let reduced = reduce_mod(&self.exact, self.p);
        let consistent = reduced == self.field;
        (reduced, consistent)
    }
}
