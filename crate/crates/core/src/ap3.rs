//! Greedy partition of the nonnegative integers into subsequences free of
//! 3-term arithmetic progressions.
//!
//! Integers are scanned in increasing order and each one joins the first
//! class `T_k` it can enter without completing a progression `x, y, n` with
//! `y - x = n - y`. The class index of `n` is the characteristic sequence
//! A006997. The same values also follow from the digit recurrence
//! `a(3m + r) = floor((3 a(m) + r) / 2)`, which [`characteristic`] uses.
//! [`greedy_partition`] shares no code with it.

use num_bigint::BigUint;
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyPartition {
    limit: usize,
    assignment: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

/// Partitions `0..limit` greedily.
pub fn greedy_partition(limit: usize) -> GreedyPartition {
    let mut assignment = Vec::with_capacity(limit);
    let mut classes: Vec<Vec<usize>> = Vec::new();
    // membership[k][m] is true when m is in T_k
    let mut membership: Vec<Vec<bool>> = Vec::new();
    for n in 0..limit {
        let k = (0..classes.len())
            .find(|&k| admissible(&classes[k], &membership[k], n))
            .unwrap_or_else(|| {
                classes.push(Vec::new());
                membership.push(vec![false; limit]);
                classes.len() - 1
            });
        classes[k].push(n);
        membership[k][n] = true;
        assignment.push(k);
    }
    GreedyPartition {
        limit,
        assignment,
        classes,
    }
}

// n can join when no y in the class has 2y - n in the class as well.
fn admissible(class: &[usize], member: &[bool], n: usize) -> bool {
    class
        .iter()
        .rev()
        .take_while(|&&y| 2 * y >= n)
        .all(|&y| !member[2 * y - n])
}

impl GreedyPartition {
    pub fn limit(&self) -> usize {
        self.limit
    }

    /// The class index of `n`, if `n < limit`.
    pub fn class_of(&self, n: usize) -> Option<usize> {
        self.assignment.get(n).copied()
    }

    /// Members of `T_k` below the limit, increasing.
    pub fn class(&self, k: usize) -> &[usize] {
        self.classes.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }
}

/// A006997 by the base-3 digit recurrence.
pub fn characteristic(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let r = n % 3;
    (3 * characteristic(n / 3) + r) / 2
}

/// A006999: `a(0) = 0`, `a(n) = floor((3 a(n-1) + 2) / 2)`.
pub fn a006999(n: usize) -> BigUint {
    a006999_terms(n + 1).pop().expect("at least one term")
}

/// `a006999(0..count)`.
pub fn a006999_terms(count: usize) -> Vec<BigUint> {
    std::iter::successors(Some(BigUint::zero()), |a| Some((a * 3u32 + 2u32) / 2u32))
        .take(count)
        .collect()
}

/// A005836: integers whose base-3 expansion avoids the digit 2, in order.
pub fn a005836(count: usize) -> Vec<u64> {
    (0u64..)
        .filter(|&n| {
            let mut m = n;
            while m > 0 {
                if m % 3 == 2 {
                    return false;
                }
                m /= 3;
            }
            true
        })
        .take(count)
        .collect()
}

/// True when the increasing slice contains some 3-term progression.
pub fn contains_three_term_ap(sorted: &[usize]) -> bool {
    let set: std::collections::HashSet<usize> = sorted.iter().copied().collect();
    sorted.iter().enumerate().any(|(i, &x)| {
        sorted[i + 1..]
            .iter()
            .any(|&y| (x + y) % 2 == 0 && set.contains(&((x + y) / 2)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn printed_class_prefixes() {
        let g = greedy_partition(30);
        assert_eq!(g.class(0)[..7], [0, 1, 3, 4, 9, 10, 12]);
        assert_eq!(g.class(1)[..6], [2, 5, 6, 11, 14, 15]);
        assert_eq!(g.class(2)[..6], [7, 8, 16, 17, 19, 20]);
    }

    #[test]
    fn characteristic_prefix() {
        let printed = [0, 0, 1, 0, 0, 1, 1, 2, 2, 0, 0];
        let got: Vec<u64> = (0..11).map(characteristic).collect();
        assert_eq!(got, printed);
        let g = greedy_partition(11);
        let greedy: Vec<u64> = g.assignment().iter().map(|&k| k as u64).collect();
        assert_eq!(greedy, printed);
    }

    #[test]
    fn a006999_values() {
        let got: Vec<u64> = a006999_terms(9)
            .iter()
            .map(|v| v.to_u64().unwrap())
            .collect();
        assert_eq!(got, [0, 1, 2, 4, 7, 11, 17, 26, 40]);
        assert_eq!(
            a006999(6).to_u64().unwrap(),
            characteristic(3u64.pow(6) - 1)
        );
    }

    #[test]
    fn detects_progressions() {
        assert!(contains_three_term_ap(&[1, 2, 3]));
        assert!(contains_three_term_ap(&[0, 5, 7, 10]));
        assert!(!contains_three_term_ap(&[0, 1, 3, 4, 9, 10, 12, 13]));
        assert!(!contains_three_term_ap(&[]));
    }

    #[test]
    fn a005836_prefix() {
        assert_eq!(a005836(8), [0, 1, 3, 4, 9, 10, 12, 13]);
    }
}
