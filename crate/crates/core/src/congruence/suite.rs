//! Suite runners: sweep every checker over parameter grids and collect
//! ordered verdict batches.

use num_bigint::BigInt;
use num_traits::One;

use crate::bell::BellTables;
use crate::combinat::EnumerationCaps;
use crate::numeric::{mod_inverse, primes_up_to, PrimeModulus};

use super::checkers::{
    verify_alternating_bell_sum, verify_bell_block_sum, verify_bell_derangement_link,
    verify_bell_derangement_numbers, verify_bell_pminus1, verify_bell_shift, verify_census,
    verify_derangement_periodicity, verify_lagrange, verify_shifted_bell_sums, verify_spivey,
    verify_stirling_orthogonality, verify_sun_zagier, verify_sun_zagier_numbers,
    verify_sun_zagier_poly, verify_touchard_family,
};
use super::dual::DualScalar;
use super::{CongruenceError, Params, Rendered, SuiteReport, Verdict};

/// Which family of checks a suite run covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteKind {
    /// Exact identities, prime congruences, and enumeration cross-checks.
    All,
    /// Exact identities only (no modulus involved).
    Identities,
    /// Prime-modulus congruences only.
    Congruences,
    /// Enumeration census against closed forms only.
    Oracles,
}

impl SuiteKind {
    fn includes_identities(self) -> bool {
        matches!(self, SuiteKind::All | SuiteKind::Identities)
    }

    fn includes_congruences(self) -> bool {
        matches!(self, SuiteKind::All | SuiteKind::Congruences)
    }

    fn includes_oracles(self) -> bool {
        matches!(self, SuiteKind::All | SuiteKind::Oracles)
    }

    pub fn name(self) -> &'static str {
        match self {
            SuiteKind::All => "all",
            SuiteKind::Identities => "identities",
            SuiteKind::Congruences => "congruences",
            SuiteKind::Oracles => "oracles",
        }
    }
}

/// Grid bounds for one suite run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub suite: SuiteKind,
    /// Largest shift index `n` in the shifted congruences and identities.
    pub n_max: usize,
    /// Largest weight index `m`.
    pub m_max: usize,
    /// Congruences run at every prime `p <= p_max`.
    pub p_max: u64,
    /// Enumeration bounds for the census cross-checks.
    pub caps: EnumerationCaps,
}

impl Default for SuiteConfig {
    /// The stock configuration: full coverage at desk scale.
    fn default() -> Self {
        SuiteConfig {
            suite: SuiteKind::All,
            n_max: 6,
            m_max: 10,
            p_max: 61,
            caps: EnumerationCaps {
                partitions: 10,
                permutations: 9,
            },
        }
    }
}

/// Runs every check selected by `config` over its full parameter grid and
/// returns the ordered verdicts. Instances whose hypotheses fail (`p`
/// dividing `m`, out-of-range shift) are reported excluded, never skipped
/// silently.
pub fn run_suite(ctx: &BellTables, config: &SuiteConfig) -> SuiteReport {
    let mut verdicts = Vec::new();

    if config.suite.includes_identities() {
        for m in 0..=config.m_max {
            verdicts.push(verify_stirling_orthogonality(ctx, m));
            if m >= 1 {
                verdicts.push(verify_bell_derangement_link(ctx, m).expect("m >= 1"));
                verdicts.push(verify_bell_derangement_numbers(ctx, m).expect("m >= 1"));
            }
            for n in 0..=config.n_max {
                verdicts.push(verify_bell_shift(ctx, m, n));
                verdicts.push(verify_spivey(ctx, m, n));
            }
        }
    }

    if config.suite.includes_congruences() {
        for q in primes_up_to(config.p_max) {
            let p = PrimeModulus::new(q).expect("sieve yields primes");
            verdicts.push(verify_lagrange(p));
            let (a, b) = verify_bell_pminus1(ctx, p);
            verdicts.push(a);
            verdicts.push(b);
            for n in 0..=config.n_max {
                let (a, b) = verify_touchard_family(ctx, n, p);
                verdicts.push(a);
                verdicts.push(b);
                verdicts.push(verify_alternating_bell_sum(ctx, n, p));
                verdicts.push(verify_bell_block_sum(ctx, n, p));
            }
            for m in 1..=config.m_max {
                verdicts.push(verify_sun_zagier(ctx, m, p));
                let (a, b) = verify_shifted_bell_sums(ctx, m, p);
                verdicts.push(a);
                verdicts.push(b);
                for n in 0..=config.n_max {
                    let (a, b) = verify_sun_zagier_poly(ctx, n, m, p);
                    verdicts.push(a);
                    verdicts.push(b);
                    let (a, b) = verify_sun_zagier_numbers(ctx, n, m, p);
                    verdicts.push(a);
                    verdicts.push(b);
                    verdicts.push(verify_derangement_periodicity(ctx, n, m, p));
                }
            }
        }
    }

    if config.suite.includes_oracles() {
        for n in 0..=config.caps.partitions {
            verdicts.push(verify_census(ctx, n, config.caps).expect("n within cap"));
        }
    }

    SuiteReport::from_verdicts(verdicts)
}

/// The constant that the weighted Bell sum collapses to for a fixed `m`,
/// independent of the prime: `(-1)^(m-1) D_{m-1}`, plus 1 when the `k = 0`
/// term (which contributes exactly 1) is included in the sum.
pub fn sweep_expected_constant(
    ctx: &BellTables,
    m: usize,
    include_k0: bool,
) -> Result<BigInt, CongruenceError> {
    if m == 0 {
        return Err(CongruenceError::IndexTooSmall);
    }
    let mut c = ctx.tables().derangement_number(m - 1);
    if m.is_multiple_of(2) {
        c = -c;
    }
    if include_k0 {
        c += 1;
    }
    Ok(c)
}

/// Sweeps the weighted Bell sum `sum_k B_k w^k` (`w = (-m)^(-1) mod p`,
/// `k` from 0 or 1 up to `p - 1`) over every prime `p <= p_max` and checks
/// that it lands on the residue of the single integer constant returned by
/// [`sweep_expected_constant`] each time. Primes dividing `m` are excluded.
pub fn sweep_constant(
    ctx: &BellTables,
    m: usize,
    p_max: u64,
    include_k0: bool,
) -> Result<SuiteReport, CongruenceError> {
    let constant = sweep_expected_constant(ctx, m, include_k0)?;
    let t = ctx.tables();
    let mut verdicts = Vec::new();
    for q in primes_up_to(p_max) {
        let p = PrimeModulus::new(q).expect("sieve yields primes");
        let params = Params::new().with("m", m as i64).with("p", q as i64);
        if p.residue(&BigInt::from(m)) == 0 {
            verdicts.push(Verdict::excluded(
                "sweep_constant",
                params,
                "p divides m, so the weight (-m)^(-1) does not exist",
            ));
            continue;
        }
        let w = p.neg(p.residue(&BigInt::from(m)));
        let w = mod_inverse(&BigInt::from(w), p).expect("nonzero residue");
        let mut lhs = DualScalar::zero(p);
        if include_k0 {
            lhs.add_term(&BigInt::one(), &BigInt::one());
        }
        let mut wk = 1u64;
        for k in 1..q {
            wk = p.mul(wk, w);
            lhs.add_term(&t.bell_number(k as usize), &BigInt::from(wk));
        }
        let (l, lc) = lhs.settle();
        let rhs = p.residue(&constant);
        verdicts.push(Verdict::from_comparison(
            "sweep_constant",
            params,
            Rendered::Value(l.to_string()),
            Rendered::Value(rhs.to_string()),
            lc,
        ));
    }
    Ok(SuiteReport::from_verdicts(verdicts))
}
