//! Integer partitions with bounded parts and their distinct permutations.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// A partition: parts in weakly decreasing order, all positive.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Sorts the parts into weakly decreasing order. Zero parts are dropped.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(1, 1, ..., 1)` with `k` ones.
    pub fn ones(k: u32) -> Self {
        Partition(vec![1; k as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn largest(&self) -> Option<u32> {
        self.0.first().copied()
    }

    /// Adds one part of size `i`.
    pub fn with_part(&self, i: u32) -> Self {
        let pos = self.0.iter().position(|&p| p < i).unwrap_or(self.0.len());
        let mut parts = self.0.clone();
        parts.insert(pos, i);
        Partition(parts)
    }

    /// Number of parts equal to `i`.
    pub fn count(&self, i: u32) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (n, p) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// All partitions of `k` with parts at most `pmax`, in reverse-lexicographic
/// order: `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)` for `k = pmax = 4`.
pub fn partitions_bounded(k: u32, pmax: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    extend_partitions(k, pmax, &mut current, &mut out);
    out
}

fn extend_partitions(rest: u32, pmax: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for part in (1..=pmax.min(rest)).rev() {
        current.push(part);
        extend_partitions(rest - part, part, current, out);
        current.pop();
    }
}

/// Which distinct permutations of a partition to keep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PermFilter {
    /// Every distinct permutation.
    All,
    /// Those whose last entry exceeds 1.
    LastAboveOne,
    /// Those whose first entry is at least the given threshold.
    FirstAtLeast(u32),
}

/// Distinct permutations of the parts of `lambda` that pass `filter`, in
/// lexicographic order.
pub fn distinct_perms(lambda: &Partition, filter: PermFilter) -> Vec<Vec<u32>> {
    let mut seq: Vec<u32> = lambda.parts().iter().rev().copied().collect();
    let mut out = Vec::new();
    loop {
        let keep = match filter {
            PermFilter::All => true,
            PermFilter::LastAboveOne => seq.last().is_some_and(|&p| p > 1),
            PermFilter::FirstAtLeast(j) => seq.first().is_some_and(|&p| p >= j),
        };
        if keep {
            out.push(seq.clone());
        }
        if !next_permutation(&mut seq) {
            return out;
        }
    }
}

/// Advances to the next lexicographic permutation; false after the last one.
fn next_permutation(a: &mut [u32]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let Some(i) = (0..a.len() - 1).rev().find(|&i| a[i] < a[i + 1]) else {
        return false;
    };
    let j = (i + 1..a.len()).rev().find(|&j| a[i] < a[j]).expect("pivot exists");
    a.swap(i, j);
    a[i + 1..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec())
    }

    #[test]
    fn empty_partition_of_zero() {
        assert_eq!(partitions_bounded(0, 4), [Partition::empty()]);
    }

    #[test]
    fn partitions_of_four() {
        let got = partitions_bounded(4, 4);
        let expected = [part(&[4]), part(&[3, 1]), part(&[2, 2]), part(&[2, 1, 1]), part(&[1, 1, 1, 1])];
        assert_eq!(got, expected);
    }

    #[test]
    fn partitions_with_small_parts() {
        assert_eq!(partitions_bounded(3, 2), [part(&[2, 1]), part(&[1, 1, 1])]);
    }

    #[test]
    fn partition_counts_match_generating_function() {
        // Coefficients of 1/((1-x)(1-x^2)(1-x^3)(1-x^4)).
        let expected = [1, 1, 2, 3, 5, 6, 9, 11, 15, 18, 23, 27, 34];
        for (k, &n) in expected.iter().enumerate() {
            assert_eq!(partitions_bounded(k as u32, 4).len(), n, "k = {k}");
        }
    }

    #[test]
    fn permutation_variants() {
        let lambda = part(&[2, 1, 1]);
        assert_eq!(distinct_perms(&lambda, PermFilter::All), [vec![1, 1, 2], vec![1, 2, 1], vec![2, 1, 1]]);
        assert_eq!(distinct_perms(&lambda, PermFilter::LastAboveOne), [vec![1, 1, 2]]);
        assert_eq!(distinct_perms(&part(&[2, 1]), PermFilter::FirstAtLeast(2)), [vec![2, 1]]);
        assert_eq!(distinct_perms(&Partition::empty(), PermFilter::All), [Vec::<u32>::new()]);
        assert!(distinct_perms(&Partition::ones(3), PermFilter::LastAboveOne).is_empty());
    }

    #[test]
    fn adding_a_part_keeps_order() {
        assert_eq!(part(&[3, 1]).with_part(2), part(&[3, 2, 1]));
        assert_eq!(Partition::empty().with_part(4), part(&[4]));
    }
}
