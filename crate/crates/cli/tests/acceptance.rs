//! The acceptance gate: one test per criterion, each ending in a single
//! `criterion N: PASS` line (visible under `--nocapture`; on failure the
//! assertion message identifies the cell that broke). Stated time budgets
//! are asserted directly.

use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use ucl_core::bell::{BellTables, UmbralPolynomial};
use ucl_core::combinat::EnumerationCaps;
use ucl_core::congruence::{
    run_suite, sweep_constant, sweep_expected_constant, verify_alternating_bell_sum,
    verify_bell_block_sum, verify_bell_derangement_link, verify_bell_derangement_numbers,
    verify_bell_pminus1, verify_bell_shift, verify_census, verify_derangement_periodicity,
    verify_shifted_bell_sums, verify_spivey, verify_stirling_orthogonality, verify_sun_zagier,
    verify_sun_zagier_numbers, verify_sun_zagier_poly, verify_touchard_family, Rendered, Status,
    SuiteConfig, SuiteKind,
};
use ucl_core::numeric::{primes_up_to, PrimeModulus};
use ucl_core::poly::{falling_factorial, IntPolynomial};

fn acceptance_primes() -> Vec<PrimeModulus> {
    primes_up_to(61)
        .into_iter()
        .map(|q| PrimeModulus::new(q).unwrap())
        .collect()
}

fn scalar(rendered: &Rendered) -> u64 {
    match rendered {
        Rendered::Value(v) => v.parse().expect("scalar sides are residues"),
        Rendered::Coefficients(_) => panic!("expected a scalar side"),
    }
}

/// Evaluates a rendered coefficient vector at x = 1 in F_p.
fn coefficient_sum(rendered: &Rendered, p: PrimeModulus) -> u64 {
    match rendered {
        Rendered::Coefficients(cs) => cs
            .iter()
            .fold(0, |acc, c| p.add(acc, c.parse().expect("residue"))),
        Rendered::Value(_) => panic!("expected a coefficient side"),
    }
}

#[test]
fn criterion_1_headline_sweep_lands_on_its_constant() {
    let started = Instant::now();
    let ctx = BellTables::new();

    let constant = sweep_expected_constant(&ctx, 8, true).unwrap();
    assert_eq!(constant, BigInt::from(-1853));

    let report = sweep_constant(&ctx, 8, 199, true).unwrap();
    assert_eq!(report.verdicts.len(), primes_up_to(199).len());
    for verdict in &report.verdicts {
        let q = verdict.params.get("p").unwrap() as u64;
        if q == 2 {
            assert_eq!(verdict.status, Status::Excluded, "2 divides 8");
            continue;
        }
        assert_eq!(verdict.status, Status::Holds, "p = {q}");
        let expected = PrimeModulus::new(q).unwrap().residue(&constant);
        assert_eq!(
            verdict.lhs,
            Rendered::Value(expected.to_string()),
            "p = {q}"
        );
    }

    // The shipped binary reproduces the run end to end.
    let output = Command::new(env!("CARGO_BIN_EXE_ucl"))
        .args(["sweep", "--m", "8", "--pmax", "199", "--format", "json"])
        .env_remove("UCL_DEFAULT_FORMAT")
        .output()
        .expect("binary runs");
    assert_eq!(output.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(report["config"]["constant"], "-1853");
    assert_eq!(report["summary"]["holds"], 45);
    assert_eq!(report["summary"]["fails"], 0);
    assert_eq!(report["summary"]["excluded"], 1);

    let elapsed = started.elapsed();
    assert!(
        elapsed < Duration::from_secs(5),
        "budget blown: {elapsed:?}"
    );
    println!(
        "criterion 1: PASS — weighted Bell sum at m=8 is -1853 at every odd prime p <= 199 \
         ({elapsed:?})"
    );
}

#[test]
fn criterion_2_polynomial_congruences_hold_on_the_grid() {
    let started = Instant::now();
    let ctx = BellTables::new();
    let mut holds = 0usize;
    let mut excluded = 0usize;
    for p in acceptance_primes() {
        for m in 1..=10usize {
            for n in 0..=6usize {
                let (expanded, compact) = verify_sun_zagier_poly(&ctx, n, m, p);
                for verdict in [expanded, compact] {
                    let cell = format!("{} at n={n} m={m} p={}", verdict.check_id, p.get());
                    if (m as u64).is_multiple_of(p.get()) {
                        assert_eq!(verdict.status, Status::Excluded, "{cell}");
                        excluded += 1;
                    } else {
                        assert_eq!(verdict.status, Status::Holds, "{cell}");
                        holds += 1;
                    }
                }
            }
        }
    }
    assert_eq!(holds, 2366);
    assert_eq!(excluded, 154);

    let elapsed = started.elapsed();
    assert!(
        elapsed < Duration::from_secs(60),
        "budget blown: {elapsed:?}"
    );
    println!(
        "criterion 2: PASS — both polynomial congruence forms hold on all {holds} in-scope \
         cells, {excluded} out-of-scope cells excluded ({elapsed:?})"
    );
}

#[test]
fn criterion_3_scalar_forms_specialize_the_polynomial_forms() {
    let ctx = BellTables::new();
    let mut chained = 0usize;
    for p in acceptance_primes() {
        for m in 1..=10usize {
            let base = verify_sun_zagier(&ctx, m, p);
            let out_of_scope = (m as u64).is_multiple_of(p.get());
            if out_of_scope {
                assert_eq!(base.status, Status::Excluded);
            } else {
                assert_eq!(base.status, Status::Holds, "base at m={m} p={}", p.get());
            }
            for n in 0..=6usize {
                let (numbers_expanded, numbers_compact) = verify_sun_zagier_numbers(&ctx, n, m, p);
                let (poly_expanded, poly_compact) = verify_sun_zagier_poly(&ctx, n, m, p);
                if out_of_scope {
                    assert_eq!(numbers_expanded.status, Status::Excluded);
                    assert_eq!(numbers_compact.status, Status::Excluded);
                    continue;
                }
                let cell = format!("n={n} m={m} p={}", p.get());
                assert_eq!(numbers_expanded.status, Status::Holds, "{cell}");
                assert_eq!(numbers_compact.status, Status::Holds, "{cell}");
                // Evaluating each polynomial side at x = 1 must give the
                // matching scalar side, cell by cell.
                for (poly, numbers) in [
                    (&poly_expanded, &numbers_expanded),
                    (&poly_compact, &numbers_compact),
                ] {
                    assert_eq!(
                        coefficient_sum(&poly.lhs, p),
                        scalar(&numbers.lhs),
                        "lhs chain at {cell}"
                    );
                    assert_eq!(
                        coefficient_sum(&poly.rhs, p),
                        scalar(&numbers.rhs),
                        "rhs chain at {cell}"
                    );
                }
                chained += 1;
            }
        }
    }
    assert_eq!(chained, 1183);
    println!(
        "criterion 3: PASS — scalar congruences hold and equal their polynomial forms at x=1 \
         on all {chained} in-scope cells"
    );
}

#[test]
fn criterion_4_exact_identity_suite() {
    let started = Instant::now();
    let ctx = BellTables::new();
    for m in 0..=10usize {
        for n in 0..=10usize {
            assert!(
                verify_bell_shift(&ctx, m, n).holds(),
                "shift at m={m} n={n}"
            );
        }
    }
    for m in 1..=15usize {
        assert!(
            verify_bell_derangement_link(&ctx, m).unwrap().holds(),
            "link at m={m}"
        );
        assert!(
            verify_bell_derangement_numbers(&ctx, m).unwrap().holds(),
            "number link at m={m}"
        );
    }
    for m in 0..=15usize {
        assert!(
            verify_stirling_orthogonality(&ctx, m).holds(),
            "orthogonality at m={m}"
        );
    }
    for m in 0..=8usize {
        for n in 0..=8usize {
            assert!(
                verify_spivey(&ctx, m, n).holds(),
                "block identity at m={m} n={n}"
            );
        }
    }
    let elapsed = started.elapsed();
    assert!(
        elapsed < Duration::from_secs(10),
        "budget blown: {elapsed:?}"
    );
    println!("criterion 4: PASS — all exact identities hold on their stated ranges ({elapsed:?})");
}

fn random_umbral(rng: &mut StdRng) -> UmbralPolynomial {
    let y_degree = rng.random_range(0..=4usize);
    let coeffs = (0..=y_degree)
        .map(|_| {
            let x_degree = rng.random_range(0..=3usize);
            IntPolynomial::from_coefficients(
                (0..=x_degree)
                    .map(|_| BigInt::from(rng.random_range(-9..=9)))
                    .collect(),
            )
        })
        .collect();
    UmbralPolynomial::from_coefficients(coeffs)
}

#[test]
fn criterion_5_umbral_laws() {
    let ctx = BellTables::new();

    // The shift law, on 200 random polynomials in y with polynomial
    // coefficients: applying the functional to (y)_m * f(y) equals x^m
    // times the image of f(y + m).
    let mut rng = StdRng::seed_from_u64(42);
    for round in 0..200 {
        let m = rng.random_range(0..=5usize);
        let f = random_umbral(&mut rng);
        let falling = UmbralPolynomial::from_y_polynomial(&falling_factorial(m));
        let lhs = ctx.umbral_eval(&falling.mul(&f));
        let rhs = ctx.umbral_eval(&f.substitute_y_plus(m as i64)).mul_xpow(m);
        assert_eq!(lhs, rhs, "shift law, round {round}, m = {m}");
    }

    // The same law specialized to f = y^n, against an independently built
    // right-hand side.
    let t = ctx.tables();
    for m in 0..=10usize {
        for n in 0..=10usize {
            let image = ctx.umbral_falling_product(m, n);
            let mut expected = IntPolynomial::zero();
            for j in 0..=n {
                let weight = t.binomial(n, j) * BigInt::from(m).pow((n - j) as u32);
                expected = expected.add(&ctx.bell_polynomial(j).scale(&weight));
            }
            assert_eq!(
                image,
                expected.mul_xpow(m),
                "falling product at m={m} n={n}"
            );
        }
    }

    // Images of the shifted products obey their first-order recurrence.
    let mut previous = ctx.umbral_shifted_product(1).unwrap();
    assert_eq!(previous, IntPolynomial::one());
    for m in 1..=9usize {
        let next = ctx.umbral_shifted_product(m + 1).unwrap();
        let expected = IntPolynomial::monomial(BigInt::from(1), m)
            .sub(&previous.scale(&BigInt::from(m as i64)));
        assert_eq!(next, expected, "shifted product recurrence at m={m}");
        previous = next;
    }

    println!("criterion 5: PASS — umbral shift law (200 random cases) and both product laws hold");
}

#[test]
fn criterion_6_congruence_family() {
    let ctx = BellTables::new();
    for p in acceptance_primes() {
        let q = p.get();
        let (poly_form, number_form) = verify_bell_pminus1(&ctx, p);
        assert!(poly_form.holds(), "order p-1 polynomial at p={q}");
        assert!(number_form.holds(), "order p-1 number at p={q}");
        for n in 0..=10usize {
            let (poly_form, number_form) = verify_touchard_family(&ctx, n, p);
            assert!(poly_form.holds(), "shifted-order polynomial at n={n} p={q}");
            assert!(number_form.holds(), "Touchard at n={n} p={q}");
            assert!(
                verify_alternating_bell_sum(&ctx, n, p).holds(),
                "alternating sum at n={n} p={q}"
            );
            let block = verify_bell_block_sum(&ctx, n, p);
            if n == 0 {
                // Stated for n >= 1; the n = 0 instance is false, so it is
                // excluded rather than checked.
                assert_eq!(block.status, Status::Excluded, "block sum at n=0 p={q}");
            } else {
                assert!(block.holds(), "block sum at n={n} p={q}");
            }
            for m in 0..=10usize {
                assert!(
                    verify_derangement_periodicity(&ctx, n, m, p).holds(),
                    "periodicity at n={n} m={m} p={q}"
                );
            }
        }
        for m in 1..=10usize {
            let (first, second) = verify_shifted_bell_sums(&ctx, m, p);
            if (m as u64).is_multiple_of(q) {
                assert_eq!(first.status, Status::Excluded);
                assert_eq!(second.status, Status::Excluded);
            } else {
                assert!(first.holds(), "first shifted sum at m={m} p={q}");
                assert!(second.holds(), "second shifted sum at m={m} p={q}");
            }
        }
    }
    println!("criterion 6: PASS — the whole congruence family holds for p <= 61, n, m <= 10");
}

#[test]
fn criterion_7_enumeration_census() {
    let started = Instant::now();
    let ctx = BellTables::new();
    let caps = EnumerationCaps {
        partitions: 10,
        permutations: 9,
    };
    for n in 0..=10usize {
        let verdict = verify_census(&ctx, n, caps).unwrap();
        assert!(verdict.holds(), "census at n={n}");
    }
    let elapsed = started.elapsed();
    assert!(
        elapsed < Duration::from_secs(60),
        "budget blown: {elapsed:?}"
    );
    println!(
        "criterion 7: PASS — enumerated tallies equal every closed form for n <= 10 \
         (permutation side n <= 9) ({elapsed:?})"
    );
}

#[test]
fn criterion_8_dual_route_guard() {
    let ctx = BellTables::new();
    let report = run_suite(&ctx, &SuiteConfig::default());
    let summary = report.summary();
    assert_eq!(summary.fails, 0, "the acceptance grid is clean");
    assert!(
        summary.total > 7000,
        "the grid actually ran ({})",
        summary.total
    );
    let route_mismatches = report
        .verdicts
        .iter()
        .filter(|v| {
            v.note
                .as_deref()
                .is_some_and(|n| n.contains("routes disagreed"))
        })
        .count();
    assert_eq!(route_mismatches, 0);
    println!(
        "criterion 8: PASS — big-integer-then-reduce agreed with reduce-throughout on all {} \
         verdicts",
        summary.total
    );
}

#[test]
fn criterion_9_fault_injection_fails_loudly() {
    // Library level: a corrupted cache must produce failing verdicts.
    let ctx = BellTables::new();
    ctx.corrupt_bell_coefficient(2);
    let report = run_suite(
        &ctx,
        &SuiteConfig {
            suite: SuiteKind::Congruences,
            n_max: 1,
            m_max: 2,
            p_max: 5,
            caps: EnumerationCaps {
                partitions: 4,
                permutations: 4,
            },
        },
    );
    assert!(report.summary().fails > 0);
    assert!(!report.counterexamples().is_empty());

    // Binary level: exit code 1 and a populated counterexample list.
    let output = Command::new(env!("CARGO_BIN_EXE_ucl"))
        .args([
            "verify",
            "--suite",
            "congruences",
            "--nmax",
            "1",
            "--mmax",
            "2",
            "--pmax",
            "5",
            "--inject-fault",
            "--format",
            "json",
        ])
        .env_remove("UCL_DEFAULT_FORMAT")
        .output()
        .expect("binary runs");
    assert_eq!(output.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    let counterexamples = report["counterexamples"].as_array().unwrap();
    assert!(!counterexamples.is_empty());
    assert!(report["summary"]["fails"].as_u64().unwrap() > 0);
    println!(
        "criterion 9: PASS — a corrupted coefficient produced exit code 1 and {} counterexamples",
        counterexamples.len()
    );
}
