//! The individual identity and congruence checkers.
//!
//! Naming convention: `verify_*` functions check one instance and return
//! verdicts; they compute both sides independently (different tables,
//! different routes) so a single implementation bug cannot make a false
//! statement look true. Exact identities compare canonical integer
//! polynomials; congruences compare canonical `F_p` coefficient vectors
//! accumulated by the dual-route machinery in [`super::dual`].

use num_bigint::BigInt;
use num_traits::One;

use crate::bell::BellTables;
use crate::combinat::{oracle_census, CombinatError, EnumerationCaps};
use crate::numeric::{mod_inverse, PrimeModulus};
use crate::poly::{falling_factorial, reduce_mod, IntPolynomial, ModPolynomial};

use super::dual::{DualPoly, DualScalar};
use super::{CongruenceError, Params, Rendered, Verdict};

/// Renders an exact polynomial side.
fn poly_side(p: &IntPolynomial) -> Rendered {
    Rendered::Coefficients(p.to_decimal_strings())
}

/// Renders a reduced polynomial side.
fn mod_poly_side(p: &ModPolynomial) -> Rendered {
    Rendered::Coefficients(p.to_decimal_strings())
}

/// Renders an exact integer side.
fn int_side(v: &BigInt) -> Rendered {
    Rendered::Value(v.to_string())
}

/// Renders a residue side.
fn residue_side(r: u64) -> Rendered {
    Rendered::Value(r.to_string())
}

/// `(-1)^k` as an exact integer.
fn sign(k: usize) -> BigInt {
    if k.is_multiple_of(2) {
        BigInt::one()
    } else {
        BigInt::from(-1)
    }
}

/// The canonical residue of `(-m)^(-1) mod p`, or `None` when `p | m` and
/// the weight does not exist.
fn negated_inverse(m: usize, p: PrimeModulus) -> Option<u64> {
    let r = p.residue(&BigInt::from(m));
    if r == 0 {
        return None;
    }
    Some(mod_inverse(&BigInt::from(p.neg(r)), p).expect("nonzero residue is invertible"))
}

/// Successive weights `w^1, w^2, .., w^(p-1)` as exact integers (they feed
/// both accumulation routes).
fn weight_powers(w: u64, p: PrimeModulus) -> Vec<BigInt> {
    let mut out = Vec::with_capacity((p.get() - 1) as usize);
    let mut acc = 1u64;
    for _ in 1..p.get() {
        acc = p.mul(acc, w);
        out.push(BigInt::from(acc));
    }
    out
}

const P_DIVIDES_M: &str = "p divides m, so the weight (-m)^(-1) does not exist";

/// Checks that the falling factorial `x (x-1) .. (x-p+1)` reduces to
/// `x^p - x` modulo `p`.
///
/// The left side is built along two routes: exact integer coefficients
/// reduced at the end, and a product folded entirely inside `F_p[x]`.
pub fn verify_lagrange(p: PrimeModulus) -> Verdict {
    let params = Params::new().with("p", p.get() as i64);
    let exact = falling_factorial(p.get() as usize);
    let mut field = ModPolynomial::one(p);
    for i in 0..p.get() {
        let linear = ModPolynomial::from_residues(vec![p.neg(i % p.get()), 1], p);
        field = field.mul(&linear).expect("single modulus");
    }
    let lhs = reduce_mod(&exact, p);
    let consistent = lhs == field;
    let rhs = {
        let mut coeffs = vec![0u64; p.get() as usize + 1];
        coeffs[1] = p.neg(1);
        coeffs[p.get() as usize] = 1;
        ModPolynomial::from_residues(coeffs, p)
    };
    Verdict::from_comparison(
        "lagrange",
        params,
        mod_poly_side(&lhs),
        mod_poly_side(&rhs),
        consistent,
    )
}

/// Checks the exact shift identity
/// `sum_j s(m, j) B_{j+n}(x) = x^m sum_j C(n, j) B_j(x) m^(n-j)`.
///
/// The left side is additionally recomputed through the umbral machinery
/// (as the image of `y^n` times the falling factorial), and all three
/// computations must agree.
pub fn verify_bell_shift(ctx: &BellTables, m: usize, n: usize) -> Verdict {
    let params = Params::new().with("m", m as i64).with("n", n as i64);
    let mut lhs = IntPolynomial::zero();
    for j in 0..=m {
        let s = ctx.tables().stirling_first(m, j).expect("j <= m");
        lhs = lhs.add(&ctx.bell_polynomial(j + n).scale(&s));
    }
    let mut rhs = IntPolynomial::zero();
    for j in 0..=n {
        let scalar = ctx.tables().binomial(n, j) * BigInt::from(m).pow((n - j) as u32);
        rhs = rhs.add(&ctx.bell_polynomial(j).scale(&scalar));
    }
    rhs = rhs.mul_xpow(m);
    let consistent = ctx.umbral_falling_product(m, n) == lhs;
    Verdict::from_comparison(
        "bell_shift",
        params,
        poly_side(&lhs),
        poly_side(&rhs),
        consistent,
    )
}

/// Checks the exact link `sum_{j>=1} s(m, j) B_{j-1}(x) =
/// (-1)^(m-1) D_{m-1}(1-x)` for `m >= 1`.
pub fn verify_bell_derangement_link(
    ctx: &BellTables,
    m: usize,
) -> Result<Verdict, CongruenceError> {
    if m == 0 {
        return Err(CongruenceError::IndexTooSmall);
    }
    let params = Params::new().with("m", m as i64);
    let mut lhs = IntPolynomial::zero();
    for j in 1..=m {
        let s = ctx.tables().stirling_first(m, j).expect("j <= m");
        lhs = lhs.add(&ctx.bell_polynomial(j - 1).scale(&s));
    }
    let rhs = ctx
        .derangement_polynomial(m - 1)
        .substitute_one_minus_x()
        .scale(&sign(m - 1));
    let consistent = ctx.umbral_shifted_product(m).expect("m >= 1") == lhs;
    Ok(Verdict::from_comparison(
        "bell_derangement_link",
        params,
        poly_side(&lhs),
        poly_side(&rhs),
        consistent,
    ))
}

/// Checks the numeric specialization of the link:
/// `sum_{j>=1} s(m, j) B_{j-1} = (-1)^(m-1) D_{m-1}` for `m >= 1`, with the
/// left side built from Bell numbers and the right from derangement
/// numbers (not from the polynomials, so this is an independent instance).
pub fn verify_bell_derangement_numbers(
    ctx: &BellTables,
    m: usize,
) -> Result<Verdict, CongruenceError> {
    if m == 0 {
        return Err(CongruenceError::IndexTooSmall);
    }
    let params = Params::new().with("m", m as i64);
    let mut lhs = BigInt::from(0);
    for j in 1..=m {
        lhs += ctx.tables().stirling_first(m, j).expect("j <= m") * ctx.tables().bell_number(j - 1);
    }
    let rhs = sign(m - 1) * ctx.tables().derangement_number(m - 1);
    Ok(Verdict::from_comparison(
        "bell_derangement_numbers",
        params,
        int_side(&lhs),
        int_side(&rhs),
        true,
    ))
}

/// Checks one row of Stirling orthogonality:
/// `sum_j s(m, j) S(j, k) = [m = k]` for `k = 0..=m`.
pub fn verify_stirling_orthogonality(ctx: &BellTables, m: usize) -> Verdict {
    let params = Params::new().with("m", m as i64);
    let t = ctx.tables();
    let mut lhs = Vec::with_capacity(m + 1);
    let mut rhs = Vec::with_capacity(m + 1);
    for k in 0..=m {
        let mut acc = BigInt::from(0);
        for j in k..=m {
            acc +=
                t.stirling_first(m, j).expect("j <= m") * t.stirling_second(j, k).expect("k <= j");
        }
        lhs.push(acc.to_string());
        rhs.push(if m == k { "1" } else { "0" }.to_string());
    }
    Verdict::from_comparison(
        "stirling_orthogonality",
        params,
        Rendered::Coefficients(lhs),
        Rendered::Coefficients(rhs),
        true,
    )
}

/// Checks the exact composition identity
/// `B_{m+n}(x) = sum_k S(m, k) x^k sum_j C(n, j) k^(n-j) B_j(x)`, together
/// with its coefficient-sum specialization computed from the integer
/// tables (which must also hold for the verdict to hold).
pub fn verify_spivey(ctx: &BellTables, m: usize, n: usize) -> Verdict {
    let params = Params::new().with("m", m as i64).with("n", n as i64);
    let t = ctx.tables();
    let lhs = ctx.bell_polynomial(m + n);
    let mut rhs = IntPolynomial::zero();
    for k in 0..=m {
        let stirling = t.stirling_second(m, k).expect("k <= m");
        let mut inner = IntPolynomial::zero();
        for j in 0..=n {
            let scalar = t.binomial(n, j) * BigInt::from(k).pow((n - j) as u32);
            inner = inner.add(&ctx.bell_polynomial(j).scale(&scalar));
        }
        rhs = rhs.add(&inner.scale(&stirling).mul_xpow(k));
    }
    // Independent numeric instance at the coefficient-sum level.
    let mut num_rhs = BigInt::from(0);
    for k in 0..=m {
        let mut inner = BigInt::from(0);
        for j in 0..=n {
            inner += t.binomial(n, j) * BigInt::from(k).pow((n - j) as u32) * t.bell_number(j);
        }
        num_rhs += t.stirling_second(m, k).expect("k <= m") * inner;
    }
    let consistent = num_rhs == t.bell_number(m + n);
    Verdict::from_comparison(
        "spivey",
        params,
        poly_side(&lhs),
        poly_side(&rhs),
        consistent,
    )
}

/// Checks the base polynomial congruence
/// `(-x)^m sum_{k=1}^{p-1} B_k(x) w^k  ≡  (-x)^p sum_{k=0}^{m-1} ((m-1)!/k!) (-x)^k  (mod p)`
/// where `w = (-m)^(-1) mod p`. Instances with `p | m` are excluded.
pub fn verify_sun_zagier(ctx: &BellTables, m: usize, p: PrimeModulus) -> Verdict {
    let params = Params::new().with("m", m as i64).with("p", p.get() as i64);
    let Some(w) = negated_inverse(m, p) else {
        return Verdict::excluded("sun_zagier", params, P_DIVIDES_M);
    };
    let weights = weight_powers(w, p);
    // (-x)^m contributes the shift by m and an overall sign on the sum.
    let lhs_sign = sign(m);
    let mut lhs = DualPoly::zero(p);
    for (k, weight) in weights.iter().enumerate() {
        lhs.add_term(&ctx.bell_polynomial(k + 1), &(weight * &lhs_sign));
    }
    lhs.shift(m);
    let mut rhs = DualPoly::zero(p);
    let p_usize = p.get() as usize;
    // q_k = (m-1)!/k! built downward from q_{m-1} = 1 without division.
    let mut q = BigInt::one();
    for k in (0..m).rev() {
        let weight = &q * sign(p_usize + k);
        rhs.add_term(
            &IntPolynomial::monomial(BigInt::one(), p_usize + k),
            &weight,
        );
        if k > 0 {
            q *= BigInt::from(k);
        }
    }
    let (l, lc) = lhs.settle();
    let (r, rc) = rhs.settle();
    Verdict::from_comparison(
        "sun_zagier",
        params,
        mod_poly_side(&l),
        mod_poly_side(&r),
        lc && rc,
    )
}

/// Checks the two polynomial congruences generalizing the base one to a
/// shifted Bell index, for `m >= 1`, `n >= 0`, `p` prime with `p` not
/// dividing `m`:
///
/// * expanded form:
///   `x^m sum_{k=1}^{p-1} B_{n+k}(x) w^k ≡ x^p sum_{k=0}^{n} S(n, k) (-1)^(m+k-1) D_{m+k-1}(1-x)`
/// * compact form:
///   `x^m sum_{j=0}^{n} s(n, j) sum_{k=1}^{p-1} B_{j+k}(x) w^k ≡ (-1)^(m+n-1) x^p D_{m+n-1}(1-x)`
///
/// Both use `w = (-m)^(-1) mod p`. Returns the pair of verdicts
/// (excluded pair when `p | m`).
pub fn verify_sun_zagier_poly(
    ctx: &BellTables,
    n: usize,
    m: usize,
    p: PrimeModulus,
) -> (Verdict, Verdict) {
    let params = Params::new()
        .with("m", m as i64)
        .with("n", n as i64)
        .with("p", p.get() as i64);
    let Some(w) = negated_inverse(m, p) else {
        return (
            Verdict::excluded("sun_zagier_poly_expanded", params.clone(), P_DIVIDES_M),
            Verdict::excluded("sun_zagier_poly_compact", params, P_DIVIDES_M),
        );
    };
    let weights = weight_powers(w, p);
    let t = ctx.tables();
    let p_usize = p.get() as usize;

    let expanded = {
        let mut lhs = DualPoly::zero(p);
        for (i, weight) in weights.iter().enumerate() {
            lhs.add_term(&ctx.bell_polynomial(n + i + 1), weight);
        }
        lhs.shift(m);
        let mut rhs = DualPoly::zero(p);
        for k in 0..=n {
            let weight = t.stirling_second(n, k).expect("k <= n") * sign(m + k + 1);
            let reflected = ctx
                .derangement_polynomial(m + k - 1)
                .substitute_one_minus_x();
            rhs.add_term(&reflected, &weight);
        }
        rhs.shift(p_usize);
        let (l, lc) = lhs.settle();
        let (r, rc) = rhs.settle();
        Verdict::from_comparison(
            "sun_zagier_poly_expanded",
            params.clone(),
            mod_poly_side(&l),
            mod_poly_side(&r),
            lc && rc,
        )
    };

    let compact = {
        let mut lhs = DualPoly::zero(p);
        for j in 0..=n {
            let s = t.stirling_first(n, j).expect("j <= n");
            for (i, weight) in weights.iter().enumerate() {
                lhs.add_term(&ctx.bell_polynomial(j + i + 1), &(&s * weight));
            }
        }
        lhs.shift(m);
        let mut rhs = DualPoly::zero(p);
        let reflected = ctx
            .derangement_polynomial(m + n - 1)
            .substitute_one_minus_x();
        rhs.add_term(&reflected, &sign(m + n + 1));
        rhs.shift(p_usize);
        let (l, lc) = lhs.settle();
        let (r, rc) = rhs.settle();
        Verdict::from_comparison(
            "sun_zagier_poly_compact",
            params,
            mod_poly_side(&l),
            mod_poly_side(&r),
            lc && rc,
        )
    };

    (expanded, compact)
}

/// Checks the numeric corollaries of the generalized congruences (their
/// value at coefficient-sum level), built from the integer tables rather
/// than by specializing the polynomial checkers:
///
/// * expanded: `sum_{k=1}^{p-1} B_{n+k} w^k ≡ sum_{k=0}^{n} S(n, k) (-1)^(m+k-1) D_{m+k-1}`
/// * compact: `sum_{j=0}^{n} s(n, j) sum_{k=1}^{p-1} B_{j+k} w^k ≡ (-1)^(m+n-1) D_{m+n-1}`
pub fn verify_sun_zagier_numbers(
    ctx: &BellTables,
    n: usize,
    m: usize,
    p: PrimeModulus,
) -> (Verdict, Verdict) {
    let params = Params::new()
        .with("m", m as i64)
        .with("n", n as i64)
        .with("p", p.get() as i64);
    let Some(w) = negated_inverse(m, p) else {
        return (
            Verdict::excluded("sun_zagier_numbers_expanded", params.clone(), P_DIVIDES_M),
            Verdict::excluded("sun_zagier_numbers_compact", params, P_DIVIDES_M),
        );
    };
    let weights = weight_powers(w, p);
    let t = ctx.tables();

    let expanded = {
        let mut lhs = DualScalar::zero(p);
        for (i, weight) in weights.iter().enumerate() {
            lhs.add_term(&t.bell_number(n + i + 1), weight);
        }
        let mut rhs = DualScalar::zero(p);
        for k in 0..=n {
            let weight = t.stirling_second(n, k).expect("k <= n") * sign(m + k + 1);
            rhs.add_term(&t.derangement_number(m + k - 1), &weight);
        }
        let (l, lc) = lhs.settle();
        let (r, rc) = rhs.settle();
        Verdict::from_comparison(
            "sun_zagier_numbers_expanded",
            params.clone(),
            residue_side(l),
            residue_side(r),
            lc && rc,
        )
    };

    let compact = {
        let mut lhs = DualScalar::zero(p);
        for j in 0..=n {
            let s = t.stirling_first(n, j).expect("j <= n");
            for (i, weight) in weights.iter().enumerate() {
                lhs.add_term(&t.bell_number(j + i + 1), &(&s * weight));
            }
        }
        let mut rhs = DualScalar::zero(p);
        rhs.add_term(&t.derangement_number(m + n - 1), &sign(m + n + 1));
        let (l, lc) = lhs.settle();
        let (r, rc) = rhs.settle();
        Verdict::from_comparison(
            "sun_zagier_numbers_compact",
            params,
            residue_side(l),
            residue_side(r),
            lc && rc,
        )
    };

    (expanded, compact)
}

/// Checks the index-shift congruence pair for Bell polynomials and numbers:
/// `B_{p+n}(x) ≡ x^p B_n(x) + B_{n+1}(x)` and `B_{p+n} ≡ B_n + B_{n+1}`
/// (mod p).
pub fn verify_touchard_family(ctx: &BellTables, n: usize, p: PrimeModulus) -> (Verdict, Verdict) {
    let params = Params::new().with("n", n as i64).with("p", p.get() as i64);
    let p_usize = p.get() as usize;

    let mut lhs = DualPoly::zero(p);
    lhs.add_term(&ctx.bell_polynomial(p_usize + n), &BigInt::one());
    let mut rhs = DualPoly::zero(p);
    rhs.add_term(&ctx.bell_polynomial(n).mul_xpow(p_usize), &BigInt::one());
    rhs.add_term(&ctx.bell_polynomial(n + 1), &BigInt::one());
    let (l, lc) = lhs.settle();
    let (r, rc) = rhs.settle();
    let poly_verdict = Verdict::from_comparison(
        "touchard_poly",
        params.clone(),
        mod_poly_side(&l),
        mod_poly_side(&r),
        lc && rc,
    );

    let t = ctx.tables();
    let mut lhs = DualScalar::zero(p);
    lhs.add_term(&t.bell_number(p_usize + n), &BigInt::one());
    let mut rhs = DualScalar::zero(p);
    rhs.add_term(&t.bell_number(n), &BigInt::one());
    rhs.add_term(&t.bell_number(n + 1), &BigInt::one());
    let (l, lc) = lhs.settle();
    let (r, rc) = rhs.settle();
    let number_verdict = Verdict::from_comparison(
        "touchard_numbers",
        params,
        residue_side(l),
        residue_side(r),
        lc && rc,
    );

    (poly_verdict, number_verdict)
}

/// Checks the boundary congruence pair at index `p - 1`:
/// `B_{p-1}(x) ≡ 1 + D_{p-1}(1-x)` and `B_{p-1} ≡ 1 + D_{p-1}` (mod p).
pub fn verify_bell_pminus1(ctx: &BellTables, p: PrimeModulus) -> (Verdict, Verdict) {
    let params = Params::new().with("p", p.get() as i64);
    let k = (p.get() - 1) as usize;

    let mut lhs = DualPoly::zero(p);
    lhs.add_term(&ctx.bell_polynomial(k), &BigInt::one());
    let mut rhs = DualPoly::zero(p);
    rhs.add_term(&IntPolynomial::one(), &BigInt::one());
    rhs.add_term(
        &ctx.derangement_polynomial(k).substitute_one_minus_x(),
        &BigInt::one(),
    );
    let (l, lc) = lhs.settle();
    let (r, rc) = rhs.settle();
    let poly_verdict = Verdict::from_comparison(
        "bell_pminus1_poly",
        params.clone(),
        mod_poly_side(&l),
        mod_poly_side(&r),
        lc && rc,
    );

    let t = ctx.tables();
    let mut lhs = DualScalar::zero(p);
    lhs.add_term(&t.bell_number(k), &BigInt::one());
    let mut rhs = DualScalar::zero(p);
    rhs.add_term(&BigInt::one(), &BigInt::one());
    rhs.add_term(&t.derangement_number(k), &BigInt::one());
    let (l, lc) = lhs.settle();
    let (r, rc) = rhs.settle();
    let number_verdict = Verdict::from_comparison(
        "bell_pminus1_numbers",
        params,
        residue_side(l),
        residue_side(r),
        lc && rc,
    );

    (poly_verdict, number_verdict)
}

/// Checks the two weighted shifted-Bell sums, for `p` not dividing `m`:
/// `sum_{k=1}^{p-1} B_{k+1} w^k ≡ (-1)^m D_m` and
/// `sum_{k=1}^{p-1} B_{k+2} w^k ≡ (-1)^m (D_m - D_{m+1})` (mod p), with
/// `w = (-m)^(-1)`.
pub fn verify_shifted_bell_sums(ctx: &BellTables, m: usize, p: PrimeModulus) -> (Verdict, Verdict) {
    let params = Params::new().with("m", m as i64).with("p", p.get() as i64);
    let Some(w) = negated_inverse(m, p) else {
        return (
            Verdict::excluded("shifted_bell_sum_first", params.clone(), P_DIVIDES_M),
            Verdict::excluded("shifted_bell_sum_second", params, P_DIVIDES_M),
        );
    };
    let weights = weight_powers(w, p);
    let t = ctx.tables();

    let first = {
        let mut lhs = DualScalar::zero(p);
        for (i, weight) in weights.iter().enumerate() {
            lhs.add_term(&t.bell_number(i + 2), weight);
        }
        let mut rhs = DualScalar::zero(p);
        rhs.add_term(&t.derangement_number(m), &sign(m));
        let (l, lc) = lhs.settle();
        let (r, rc) = rhs.settle();
        Verdict::from_comparison(
            "shifted_bell_sum_first",
            params.clone(),
            residue_side(l),
            residue_side(r),
            lc && rc,
        )
    };

    let second = {
        let mut lhs = DualScalar::zero(p);
        for (i, weight) in weights.iter().enumerate() {
            lhs.add_term(&t.bell_number(i + 3), weight);
        }
        let mut rhs = DualScalar::zero(p);
        let diff = t.derangement_number(m) - t.derangement_number(m + 1);
        rhs.add_term(&diff, &sign(m));
        let (l, lc) = lhs.settle();
        let (r, rc) = rhs.settle();
        Verdict::from_comparison(
            "shifted_bell_sum_second",
            params,
            residue_side(l),
            residue_side(r),
            lc && rc,
        )
    };

    (first, second)
}

/// Checks derangement periodicity `D_{pn+m} ≡ (-1)^n D_m (mod p)`.
pub fn verify_derangement_periodicity(
    ctx: &BellTables,
    n: usize,
    m: usize,
    p: PrimeModulus,
) -> Verdict {
    let params = Params::new()
        .with("m", m as i64)
        .with("n", n as i64)
        .with("p", p.get() as i64);
    let t = ctx.tables();
    let mut lhs = DualScalar::zero(p);
    lhs.add_term(
        &t.derangement_number(p.get() as usize * n + m),
        &BigInt::one(),
    );
    let mut rhs = DualScalar::zero(p);
    rhs.add_term(&t.derangement_number(m), &sign(n));
    let (l, lc) = lhs.settle();
    let (r, rc) = rhs.settle();
    Verdict::from_comparison(
        "derangement_period",
        params,
        residue_side(l),
        residue_side(r),
        lc && rc,
    )
}

/// Checks the alternating Bell sum against singleton-free partition counts:
/// `sum_{k=1}^{p-1} (-1)^k B_{n+k} ≡ V_n (mod p)` where `V_n` counts the
/// set partitions of an `n`-set with no singleton block.
pub fn verify_alternating_bell_sum(ctx: &BellTables, n: usize, p: PrimeModulus) -> Verdict {
    let params = Params::new().with("n", n as i64).with("p", p.get() as i64);
    let t = ctx.tables();
    let mut lhs = DualScalar::zero(p);
    for k in 1..p.get() as usize {
        lhs.add_term(&t.bell_number(n + k), &sign(k));
    }
    let mut rhs = DualScalar::zero(p);
    rhs.add_term(&t.singleton_free_count(n), &BigInt::one());
    let (l, lc) = lhs.settle();
    let (r, rc) = rhs.settle();
    Verdict::from_comparison(
        "alternating_bell_sum",
        params,
        residue_side(l),
        residue_side(r),
        lc && rc,
    )
}

/// Checks the block-sum congruence
/// `sum_{k=1}^{p-1} B_{n+k} - sum_{k=1}^{n-1} B_k ≡ D_{p-1} (mod p)`,
/// stated for `n >= 1`; the `n = 0` instance is excluded (it is false
/// there: already at `p = 3`, `B_1 + B_2 = 3 ≡ 0` while `D_2 = 1`).
pub fn verify_bell_block_sum(ctx: &BellTables, n: usize, p: PrimeModulus) -> Verdict {
    let params = Params::new().with("n", n as i64).with("p", p.get() as i64);
    if n == 0 {
        return Verdict::excluded(
            "bell_block_sum",
            params,
            "stated for n >= 1 only; fails at n = 0",
        );
    }
    let t = ctx.tables();
    let mut lhs = DualScalar::zero(p);
    for k in 1..p.get() as usize {
        lhs.add_term(&t.bell_number(n + k), &BigInt::one());
    }
    for k in 1..n {
        lhs.add_term(&t.bell_number(k), &BigInt::from(-1));
    }
    let mut rhs = DualScalar::zero(p);
    rhs.add_term(
        &t.derangement_number((p.get() - 1) as usize),
        &BigInt::one(),
    );
    let (l, lc) = lhs.settle();
    let (r, rc) = rhs.settle();
    Verdict::from_comparison(
        "bell_block_sum",
        params,
        residue_side(l),
        residue_side(r),
        lc && rc,
    )
}

/// Runs the enumeration census at size `n` and compares every tally with
/// the table-driven closed forms: total partitions against the Bell
/// number, partitions by block count against second-kind Stirling rows,
/// singleton-free partitions against the binomial-inversion count, and —
/// when `n` is within the permutation cap — fixed-point-free permutations
/// against the derangement number and permutations by cycle count against
/// unsigned first-kind Stirling rows.
pub fn verify_census(
    ctx: &BellTables,
    n: usize,
    caps: EnumerationCaps,
) -> Result<Verdict, CombinatError> {
    let census = oracle_census(n, caps)?;
    let params = Params::new().with("n", n as i64);
    let t = ctx.tables();

    let mut counted: Vec<String> = Vec::new();
    let mut expected: Vec<String> = Vec::new();
    counted.push(census.bell.to_string());
    expected.push(t.bell_number(n).to_string());
    counted.push(census.singleton_free.to_string());
    expected.push(t.singleton_free_count(n).to_string());
    for (k, c) in census.stirling2_by_blocks.iter().enumerate() {
        counted.push(c.to_string());
        expected.push(t.stirling_second(n, k).expect("k <= n").to_string());
    }
    if let (Some(cycles), Some(derangements)) = (&census.cycles_by_count, &census.derangements) {
        counted.push(derangements.to_string());
        expected.push(t.derangement_number(n).to_string());
        for (k, c) in cycles.iter().enumerate() {
            counted.push(c.to_string());
            let signed = t.stirling_first(n, k).expect("k <= n");
            let unsigned = if signed < BigInt::from(0) {
                -signed
            } else {
                signed
            };
            expected.push(unsigned.to_string());
        }
    }

    Ok(Verdict::from_comparison(
        "oracle_census",
        params,
        Rendered::Coefficients(counted),
        Rendered::Coefficients(expected),
        true,
    ))
}
