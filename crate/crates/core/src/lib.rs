//! Exact-arithmetic kernels for Bell polynomials, derangement polynomials,
//! and Stirling numbers, together with checkers that mechanically verify
//! the identities and prime-modulus congruences tying these families
//! together.
//!
//! Layering, bottom up:
//!
//! * [`numeric`] — primality certification, prime generation, and modular
//!   inverses (two independent routes).
//! * [`poly`] — canonical dense polynomials over `Z` and over `F_p`.
//! * [`combinat`] — memoized recurrence tables for the classical sequences,
//!   plus a brute-force enumeration census that recounts the same values
//!   from raw set partitions and permutations.
//! * [`bell`] — Bell and derangement polynomial families (each along two
//!   independent routes) and the umbral evaluation machinery.
//! * [`congruence`] — the identity and congruence checkers themselves,
//!   verdict reporting, and suite runners.
//!
//! Everything is exact: no floating point anywhere, and every congruence
//! check compares canonical coefficient vectors computed along two
//! arithmetic routes (big-integer-then-reduce against carried-in-`F_p`).

pub mod bell;
pub mod combinat;
pub mod congruence;
pub mod numeric;
pub mod poly;

pub use bell::{BellTables, Route, UmbralPolynomial};
pub use combinat::{oracle_census, CensusResult, EnumerationCaps, Tables};
pub use congruence::{run_suite, Status, SuiteConfig, SuiteKind, SuiteReport, Verdict};
pub use numeric::{is_prime, mod_inverse, primes_up_to, PrimeModulus};
pub use poly::{falling_factorial, reduce_mod, IntPolynomial, ModPolynomial};
