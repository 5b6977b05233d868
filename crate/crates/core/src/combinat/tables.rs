//! Memoized recurrence tables for binomials, Stirling numbers of both kinds,
//! factorials, Bell numbers, derangement numbers, and singleton-free
//! partition counts.
//!
//! All growth is exact `BigInt` arithmetic driven by the defining
//! recurrences. Tables live behind `RwLock`s so a shared `Tables` value can
//! be used from `&self` everywhere; growth is amortized by doubling.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::CombinatError;

/// Shared memo pack for the classical integer sequences and triangles.
#[derive(Debug, Default)]
pub struct Tables {
    binomial: RwLock<Vec<Vec<BigInt>>>,
    stirling_first: RwLock<Vec<Vec<BigInt>>>,
    stirling_second: RwLock<Vec<Vec<BigInt>>>,
    factorial: RwLock<Vec<BigInt>>,
    bell: RwLock<Vec<BigInt>>,
    derangement: RwLock<Vec<BigInt>>,
}

/// Grow target that at least doubles, to keep repeated lookups amortized.
fn grow_target(current: usize, needed: usize) -> usize {
    needed.max(current.saturating_mul(2))
}

impl Tables {
    pub fn new() -> Self {
        Tables::default()
    }

    /// Binomial coefficient `C(n, k)`; zero for `k > n`, so sums over a row
    /// can be written without bounds fiddling.
    pub fn binomial(&self, n: usize, k: usize) -> BigInt {
        if k > n {
            return BigInt::zero();
        }
        {
            let rows = self.binomial.read().unwrap();
            if let Some(row) = rows.get(n) {
                return row[k].clone();
            }
        }
        let mut rows = self.binomial.write().unwrap();
        let target = grow_target(rows.len(), n + 1);
        if rows.is_empty() {
            rows.push(vec![BigInt::one()]);
        }
        while rows.len() < target {
            let prev = rows.last().unwrap();
            let m = prev.len();
            let mut next = Vec::with_capacity(m + 1);
            next.push(BigInt::one());
            for k in 1..m {
                next.push(&prev[k - 1] + &prev[k]);
            }
            next.push(BigInt::one());
            rows.push(next);
        }
        rows[n][k].clone()
    }

    /// Signed Stirling number of the first kind `s(m, j)`, from the triangle
    /// recurrence `s(m+1, j) = s(m, j-1) - m * s(m, j)`.
    pub fn stirling_first(&self, m: usize, j: usize) -> Result<BigInt, CombinatError> {
        if j > m {
            return Err(CombinatError::IndexOutOfRange { m, j });
        }
        {
            let rows = self.stirling_first.read().unwrap();
            if let Some(row) = rows.get(m) {
                return Ok(row[j].clone());
            }
        }
        let mut rows = self.stirling_first.write().unwrap();
        let target = grow_target(rows.len(), m + 1);
        if rows.is_empty() {
            rows.push(vec![BigInt::one()]);
        }
        while rows.len() < target {
            let m_prev = rows.len() - 1;
            let prev = rows.last().unwrap();
            let factor = BigInt::from(m_prev);
            let mut next = Vec::with_capacity(m_prev + 2);
            for j in 0..=m_prev + 1 {
                let carried = if j > 0 {
                    prev[j - 1].clone()
                } else {
                    BigInt::zero()
                };
                let scaled = if j <= m_prev {
                    &factor * &prev[j]
                } else {
                    BigInt::zero()
                };
                next.push(carried - scaled);
            }
            rows.push(next);
        }
        Ok(rows[m][j].clone())
    }

    /// Stirling number of the second kind `S(m, j)`, from the triangle
    /// recurrence `S(m+1, j) = S(m, j-1) + j * S(m, j)`.
    pub fn stirling_second(&self, m: usize, j: usize) -> Result<BigInt, CombinatError> {
        if j > m {
            return Err(CombinatError::IndexOutOfRange { m, j });
        }
        {
            let rows = self.stirling_second.read().unwrap();
            if let Some(row) = rows.get(m) {
                return Ok(row[j].clone());
            }
        }
        let mut rows = self.stirling_second.write().unwrap();
        let target = grow_target(rows.len(), m + 1);
        if rows.is_empty() {
            rows.push(vec![BigInt::one()]);
        }
        while rows.len() < target {
            let m_prev = rows.len() - 1;
            let prev = rows.last().unwrap();
            let mut next = Vec::with_capacity(m_prev + 2);
            for j in 0..=m_prev + 1 {
                let carried = if j > 0 {
                    prev[j - 1].clone()
                } else {
                    BigInt::zero()
                };
                let scaled = if j <= m_prev {
                    BigInt::from(j) * &prev[j]
                } else {
                    BigInt::zero()
                };
                next.push(carried + scaled);
            }
            rows.push(next);
        }
        Ok(rows[m][j].clone())
    }

    /// A full row `S(m, 0..=m)` of the second-kind triangle; these are the
    /// coefficient vectors of the Bell polynomials.
    pub fn stirling_second_row(&self, m: usize) -> Vec<BigInt> {
        // Prime the table through row m, then copy it out.
        let _ = self.stirling_second(m, 0);
        self.stirling_second.read().unwrap()[m].clone()
    }

    /// `n!` with `0! = 1`.
    pub fn factorial(&self, n: usize) -> BigInt {
        {
            let seq = self.factorial.read().unwrap();
            if let Some(v) = seq.get(n) {
                return v.clone();
            }
        }
        let mut seq = self.factorial.write().unwrap();
        let target = grow_target(seq.len(), n + 1);
        if seq.is_empty() {
            seq.push(BigInt::one());
        }
        while seq.len() < target {
            let next = BigInt::from(seq.len()) * seq.last().unwrap();
            seq.push(next);
        }
        seq[n].clone()
    }

    /// Bell number `B_n`, grown by `B_{n+1} = sum_j C(n, j) B_j`.
    pub fn bell_number(&self, n: usize) -> BigInt {
        {
            let seq = self.bell.read().unwrap();
            if let Some(v) = seq.get(n) {
                return v.clone();
            }
        }
        // Prime the binomial rows outside the bell lock; bell growth below
        // then only takes read access through `self.binomial`.
        self.binomial(n.saturating_sub(1), 0);
        let mut seq = self.bell.write().unwrap();
        let target = grow_target(seq.len(), n + 1);
        if seq.is_empty() {
            seq.push(BigInt::one());
        }
        while seq.len() < target {
            let m = seq.len() - 1;
            let mut next = BigInt::zero();
            for (j, b) in seq.iter().enumerate().take(m + 1) {
                next += self.binomial(m, j) * b;
            }
            seq.push(next);
        }
        seq[n].clone()
    }

    /// Derangement number `D_n`, grown by `D_n = n * D_{n-1} + (-1)^n`.
    pub fn derangement_number(&self, n: usize) -> BigInt {
        {
            let seq = self.derangement.read().unwrap();
            if let Some(v) = seq.get(n) {
                return v.clone();
            }
        }
        let mut seq = self.derangement.write().unwrap();
        let target = grow_target(seq.len(), n + 1);
        if seq.is_empty() {
            seq.push(BigInt::one());
        }
        while seq.len() < target {
            let m = seq.len();
            let sign = if m.is_multiple_of(2) {
                BigInt::one()
            } else {
                BigInt::from(-1)
            };
            let next = BigInt::from(m) * seq.last().unwrap() + sign;
            seq.push(next);
        }
        seq[n].clone()
    }

    /// Number of set partitions of an `n`-set with no singleton block,
    /// computed by binomial inversion from the Bell numbers.
    pub fn singleton_free_count(&self, n: usize) -> BigInt {
        let mut acc = BigInt::zero();
        for k in 0..=n {
            let term = self.binomial(n, k) * self.bell_number(k);
            if (n - k).is_multiple_of(2) {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn i(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn binomial_known_values() {
        let t = Tables::new();
        assert_eq!(t.binomial(0, 0), i(1));
        assert_eq!(t.binomial(5, 2), i(10));
        assert_eq!(t.binomial(10, 5), i(252));
        assert_eq!(t.binomial(3, 7), i(0));
    }

    #[test]
    fn binomial_row_sums_are_powers_of_two() {
        let t = Tables::new();
        for n in 0..30 {
            let sum: BigInt = (0..=n).map(|k| t.binomial(n, k)).sum();
            assert_eq!(sum, BigInt::from(2u64).pow(n as u32));
        }
    }

    #[test]
    fn stirling_first_known_values() {
        let t = Tables::new();
        assert_eq!(t.stirling_first(0, 0), Ok(i(1)));
        assert_eq!(t.stirling_first(4, 2), Ok(i(11)));
        assert_eq!(t.stirling_first(4, 1), Ok(i(-6)));
        assert_eq!(t.stirling_first(5, 3), Ok(i(35)));
        assert_eq!(t.stirling_first(5, 0), Ok(i(0)));
        assert_eq!(
            t.stirling_first(3, 4),
            Err(CombinatError::IndexOutOfRange { m: 3, j: 4 })
        );
    }

    #[test]
    fn stirling_second_known_values() {
        let t = Tables::new();
        assert_eq!(t.stirling_second(0, 0), Ok(i(1)));
        assert_eq!(t.stirling_second(4, 2), Ok(i(7)));
        assert_eq!(t.stirling_second(5, 3), Ok(i(25)));
        assert_eq!(t.stirling_second(6, 3), Ok(i(90)));
        assert_eq!(t.stirling_second(5, 0), Ok(i(0)));
        assert_eq!(
            t.stirling_second(2, 3),
            Err(CombinatError::IndexOutOfRange { m: 2, j: 3 })
        );
    }

    #[test]
    fn stirling_second_rows_sum_to_bell() {
        let t = Tables::new();
        for m in 0..25 {
            let sum: BigInt = t.stirling_second_row(m).into_iter().sum();
            assert_eq!(sum, t.bell_number(m), "row {m}");
        }
    }

    #[test]
    fn factorials_and_first_kind_rows() {
        let t = Tables::new();
        assert_eq!(t.factorial(0), i(1));
        assert_eq!(t.factorial(6), i(720));
        // Alternating-sign row sums: sum_j |s(m, j)| = m!.
        for m in 0..15 {
            let mut sum = BigInt::zero();
            for j in 0..=m {
                let v = t.stirling_first(m, j).unwrap();
                if v >= BigInt::zero() {
                    sum += v;
                } else {
                    sum -= v;
                }
            }
            assert_eq!(sum, t.factorial(m), "m = {m}");
        }
    }

    #[test]
    fn bell_numbers_known_prefix() {
        let t = Tables::new();
        let want = [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975];
        for (n, &b) in want.iter().enumerate() {
            assert_eq!(t.bell_number(n), i(b), "B_{n}");
        }
    }

    #[test]
    fn derangement_numbers_known_prefix() {
        let t = Tables::new();
        let want = [1, 0, 1, 2, 9, 44, 265, 1854, 14833];
        for (n, &d) in want.iter().enumerate() {
            assert_eq!(t.derangement_number(n), i(d), "D_{n}");
        }
    }

    #[test]
    fn derangements_agree_with_inclusion_exclusion() {
        let t = Tables::new();
        // D_n = sum_k (-1)^k C(n, k) (n - k)!
        for n in 0..20 {
            let mut acc = BigInt::zero();
            for k in 0..=n {
                let term = t.binomial(n, k) * t.factorial(n - k);
                if k % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            assert_eq!(acc, t.derangement_number(n), "D_{n}");
        }
    }

    #[test]
    fn singleton_free_known_prefix() {
        let t = Tables::new();
        let want = [1, 0, 1, 1, 4, 11, 41, 162, 715, 3425, 17722];
        for (n, &v) in want.iter().enumerate() {
            assert_eq!(t.singleton_free_count(n), i(v), "V_{n}");
        }
    }

    #[test]
    fn bell_splits_into_singleton_free_choices() {
        let t = Tables::new();
        // Choosing the singleton set first: B_n = sum_k C(n, k) V_{n-k}.
        for n in 0..15 {
            let mut acc = BigInt::zero();
            for k in 0..=n {
                acc += t.binomial(n, k) * t.singleton_free_count(n - k);
            }
            assert_eq!(acc, t.bell_number(n), "B_{n}");
        }
    }

    #[test]
    fn bell_numbers_agree_with_triangle_route() {
        let t = Tables::new();
        // Independent route: the Bell triangle. Each row starts with the
        // previous row's last entry and accumulates to the left neighbor
        // plus the entry above it; row heads are the Bell numbers.
        let mut row = vec![BigInt::one()];
        for n in 0..40usize {
            assert_eq!(row[0], t.bell_number(n), "B_{n}");
            let mut next = Vec::with_capacity(row.len() + 1);
            next.push(row.last().unwrap().clone());
            for v in &row {
                let last = next.last().unwrap().clone();
                next.push(last + v);
            }
            row = next;
        }
    }

    #[test]
    fn lookups_after_growth_stay_consistent() {
        let t = Tables::new();
        // Force a large growth first, then re-read small entries.
        let _ = t.bell_number(40);
        assert_eq!(t.bell_number(2), i(2));
        assert_eq!(t.binomial(0, 0), i(1));
        assert_eq!(t.stirling_second(4, 2), Ok(i(7)));
    }
}
