//! Brute-force enumeration census over set partitions and permutations.
//!
//! This is the independent oracle: it owes nothing to the recurrence tables.
//! Set partitions of `{0, .., n-1}` are walked as restricted growth strings
//! in lexicographic order; permutations are walked in lexicographic order
//! with an explicit next-permutation step. Counts are tallied directly from
//! the objects (number of blocks, presence of singletons, number of cycles,
//! absence of fixed points), then compared elsewhere against the closed
//! forms they are supposed to match.

use num_bigint::BigInt;
use num_traits::Zero;

use super::CombinatError;

/// Largest `n` for which set-partition enumeration runs by default.
pub const DEFAULT_PARTITION_CAP: usize = 11;
/// Largest `n` for which permutation enumeration runs by default.
pub const DEFAULT_PERMUTATION_CAP: usize = 9;

/// Upper bounds on exhaustive enumeration, independently configurable so
/// callers can trade coverage for time on each axis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationCaps {
    pub partitions: usize,
    pub permutations: usize,
}

impl Default for EnumerationCaps {
    fn default() -> Self {
        EnumerationCaps {
            partitions: DEFAULT_PARTITION_CAP,
            permutations: DEFAULT_PERMUTATION_CAP,
        }
    }
}

/// Tallies gathered by one run of the enumeration census at size `n`.
///
/// The permutation-side fields are `None` when `n` exceeded the permutation
/// cap (permutation counts grow like `n!` against the partition side's
/// `B_n`, so the two axes cut off at different sizes).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusResult {
    pub n: usize,
    /// Total number of set partitions counted.
    pub bell: BigInt,
    /// Partitions by number of blocks; index `k` holds the count with
    /// exactly `k` blocks (length `n + 1`).
    pub stirling2_by_blocks: Vec<BigInt>,
    /// Partitions with no block of size one.
    pub singleton_free: BigInt,
    /// Permutations by number of cycles; index `k` holds the count with
    /// exactly `k` cycles (length `n + 1`).
    pub cycles_by_count: Option<Vec<BigInt>>,
    /// Permutations without fixed points.
    pub derangements: Option<BigInt>,
}

/// Visits every restricted growth string of length `n` in lexicographic
/// order. A string `a` encodes the partition in which items `i` and `j`
/// share a block iff `a[i] == a[j]`; the growth condition
/// `a[i] <= 1 + max(a[0..i])` with `a[0] = 0` makes the encoding unique.
fn for_each_partition(n: usize, mut visit: impl FnMut(&[usize])) {
    if n == 0 {
        visit(&[]);
        return;
    }
    let mut a = vec![0usize; n];
    loop {
        visit(&a);
        // Find the rightmost position (never position 0) where the string
        // can still grow, bump it, and reset everything to its right.
        let mut i = n;
        let mut bump = None;
        while i > 1 {
            i -= 1;
            let max_prefix = *a[..i].iter().max().unwrap();
            if a[i] <= max_prefix {
                bump = Some(i);
                break;
            }
        }
        match bump {
            Some(i) => {
                a[i] += 1;
                a[i + 1..].fill(0);
            }
            None => return,
        }
    }
}

/// Visits every permutation of `{0, .., n-1}` in lexicographic order.
fn for_each_permutation(n: usize, mut visit: impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        visit(&perm);
        // Standard next-permutation step.
        let Some(i) = (0..n.saturating_sub(1))
            .rev()
            .find(|&i| perm[i] < perm[i + 1])
        else {
            return;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
}

fn count_cycles(perm: &[usize]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut cycles = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
        }
    }
    cycles
}

/// Runs the full census at size `n`.
///
/// Refuses to enumerate partitions past `caps.partitions`; quietly skips the
/// permutation side (leaving those fields `None`) past `caps.permutations`.
pub fn oracle_census(n: usize, caps: EnumerationCaps) -> Result<CensusResult, CombinatError> {
    if n > caps.partitions {
        return Err(CombinatError::EnumerationCapExceeded {
            n,
            cap: caps.partitions,
        });
    }

    let mut bell = BigInt::zero();
    let mut by_blocks = vec![BigInt::zero(); n + 1];
    let mut singleton_free = BigInt::zero();
    for_each_partition(n, |rgs| {
        bell += 1;
        let blocks = rgs.iter().max().map_or(0, |&m| m + 1);
        by_blocks[blocks] += 1;
        let mut sizes = vec![0usize; blocks];
        for &b in rgs {
            sizes[b] += 1;
        }
        if sizes.iter().all(|&s| s != 1) {
            singleton_free += 1;
        }
    });

    let (cycles_by_count, derangements) = if n <= caps.permutations {
        let mut by_cycles = vec![BigInt::zero(); n + 1];
        let mut fixed_point_free = BigInt::zero();
        for_each_permutation(n, |perm| {
            by_cycles[count_cycles(perm)] += 1;
            if perm.iter().enumerate().all(|(i, &v)| i != v) {
                fixed_point_free += 1;
            }
        });
        (Some(by_cycles), Some(fixed_point_free))
    } else {
        (None, None)
    };

    Ok(CensusResult {
        n,
        bell,
        stirling2_by_blocks: by_blocks,
        singleton_free,
        cycles_by_count,
        derangements,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn i(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn partition_walk_is_lexicographic_and_complete_at_3() {
        let mut seen = Vec::new();
        for_each_partition(3, |rgs| seen.push(rgs.to_vec()));
        assert_eq!(
            seen,
            vec![
                vec![0, 0, 0],
                vec![0, 0, 1],
                vec![0, 1, 0],
                vec![0, 1, 1],
                vec![0, 1, 2],
            ]
        );
    }

    #[test]
    fn empty_ground_set_has_one_partition_and_permutation() {
        let census = oracle_census(0, EnumerationCaps::default()).unwrap();
        assert_eq!(census.bell, i(1));
        assert_eq!(census.stirling2_by_blocks, vec![i(1)]);
        assert_eq!(census.singleton_free, i(1));
        assert_eq!(census.cycles_by_count, Some(vec![i(1)]));
        assert_eq!(census.derangements, Some(i(1)));
    }

    #[test]
    fn census_at_4_matches_hand_counts() {
        let census = oracle_census(4, EnumerationCaps::default()).unwrap();
        assert_eq!(census.bell, i(15));
        assert_eq!(
            census.stirling2_by_blocks,
            vec![i(0), i(1), i(7), i(6), i(1)]
        );
        // {12|34, 13|24, 14|23, 1234}
        assert_eq!(census.singleton_free, i(4));
        // Unsigned first-kind row: 6, 11, 6, 1 permutations with 1..4 cycles.
        assert_eq!(
            census.cycles_by_count,
            Some(vec![i(0), i(6), i(11), i(6), i(1)])
        );
        assert_eq!(census.derangements, Some(i(9)));
    }

    #[test]
    fn permutation_walk_count_at_5() {
        let mut count = 0u64;
        for_each_permutation(5, |_| count += 1);
        assert_eq!(count, 120);
    }

    #[test]
    fn cycle_counting_spot_checks() {
        assert_eq!(count_cycles(&[0, 1, 2]), 3); // identity
        assert_eq!(count_cycles(&[1, 2, 0]), 1); // 3-cycle
        assert_eq!(count_cycles(&[1, 0, 3, 2]), 2); // two transpositions
        assert_eq!(count_cycles(&[]), 0);
    }

    #[test]
    fn partition_cap_is_enforced() {
        let caps = EnumerationCaps {
            partitions: 5,
            permutations: 5,
        };
        assert!(oracle_census(5, caps).is_ok());
        assert_eq!(
            oracle_census(6, caps),
            Err(CombinatError::EnumerationCapExceeded { n: 6, cap: 5 })
        );
    }

    #[test]
    fn permutation_side_switches_off_past_its_cap() {
        let caps = EnumerationCaps {
            partitions: 7,
            permutations: 4,
        };
        let census = oracle_census(6, caps).unwrap();
        assert_eq!(census.bell, i(203));
        assert_eq!(census.cycles_by_count, None);
        assert_eq!(census.derangements, None);
    }
}
