//! Brute-force enumerators used as ground truth for the sequence engines.
//! None of them use any counting formula.

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{oracle}: size {size} exceeds the enumeration cap {cap}")]
    TooLarge { oracle: &'static str, size: u64, cap: u64 },
}

/// `counts[m]` is the number of arrangements with statistic value `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationStatVector {
    pub n: usize,
    pub counts: Vec<BigInt>,
}

impl PermutationStatVector {
    fn from_counts(n: usize, counts: Vec<u64>) -> Self {
        Self {
            n,
            counts: counts.into_iter().map(BigInt::from).collect(),
        }
    }

    pub fn total(&self) -> BigInt {
        self.counts.iter().sum()
    }
}

pub const PERMUTATION_CAP: usize = 10;
pub const DUMONT_CAP: usize = 5;
pub const GUN_CAP: usize = 8;
pub const NEWCOMB_CAP: usize = 9;
pub const MULTISET_CAP: u64 = 1_000_000;

fn cap(oracle: &'static str, size: usize, limit: usize) -> Result<(), OracleError> {
    if size > limit {
        return Err(OracleError::TooLarge {
            oracle,
            size: size as u64,
            cap: limit as u64,
        });
    }
    Ok(())
}

/// In-place lexicographic successor; `false` once `w` is the last word.
/// Repeated letters are handled, so a sorted multiset visits each distinct
/// word exactly once.
fn next_permutation<T: Ord>(w: &mut [T]) -> bool {
    if w.len() < 2 {
        return false;
    }
    let mut i = w.len() - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = w.len() - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

fn for_each_word(mut w: Vec<u8>, mut f: impl FnMut(&[u8])) {
    w.sort_unstable();
    loop {
        f(&w);
        if !next_permutation(&mut w) {
            break;
        }
    }
}

fn identity(n: usize) -> Vec<u8> {
    (1..=n as u8).collect()
}

fn ascents(w: &[u8]) -> usize {
    w.windows(2).filter(|p| p[0] < p[1]).count()
}

fn descents(w: &[u8]) -> usize {
    w.windows(2).filter(|p| p[0] > p[1]).count()
}

/// Permutations of `n` letters counted by number of ascents.
pub fn ascent_distribution(n: usize) -> Result<PermutationStatVector, OracleError> {
    cap("ascents", n, PERMUTATION_CAP)?;
    let mut counts = vec![0u64; n.max(1)];
    for_each_word(identity(n), |w| counts[ascents(w)] += 1);
    Ok(PermutationStatVector::from_counts(n, counts))
}

/// Permutations whose descent set is exactly the odd positions below `n`.
pub fn alternating_count(n: usize) -> Result<BigInt, OracleError> {
    cap("alternating", n, PERMUTATION_CAP)?;
    let mut count = 0u64;
    for_each_word(identity(n), |w| {
        if w.windows(2).enumerate().all(|(k, p)| (p[0] > p[1]) == (k % 2 == 0)) {
            count += 1;
        }
    });
    Ok(BigInt::from(count))
}

/// Permutations of `2n - 1` letters that ascend exactly after odd values.
pub fn dumont_count(n: usize) -> Result<BigInt, OracleError> {
    cap("dumont", n, DUMONT_CAP)?;
    if n == 0 {
        return Ok(BigInt::from(0));
    }
    let mut count = 0u64;
    for_each_word(identity(2 * n - 1), |w| {
        if w.windows(2).all(|p| (p[0] < p[1]) == (p[0] % 2 == 1)) {
            count += 1;
        }
    });
    Ok(BigInt::from(count))
}

/// Alternating guns on `[1, 2n-2]`: `g(k) <= ceil(k/2)`, with
/// `g(2i-1) >= g(2i)` and `g(2i) <= g(2i+1)`.
///
/// Positions are filled left to right like an odometer; a prefix violating
/// the order constraint is abandoned together with all its extensions.
pub fn gun_count(n: usize) -> Result<BigInt, OracleError> {
    cap("guns", n, GUN_CAP)?;
    let len = (2 * n).saturating_sub(2);
    if len == 0 {
        return Ok(BigInt::from(1));
    }
    let bound = |k: usize| (k + 2) / 2; // position k is 1-based
    let ok = |g: &[usize], k: usize| {
        if k == 1 {
            return true;
        }
        if k % 2 == 0 {
            g[k - 2] >= g[k - 1]
        } else {
            g[k - 2] <= g[k - 1]
        }
    };
    let mut g = vec![0usize; len];
    let mut count = 0u64;
    let mut k = 1usize;
    loop {
        g[k - 1] += 1;
        if g[k - 1] > bound(k - 1) {
            g[k - 1] = 0;
            k -= 1;
            if k == 0 {
                break;
            }
            continue;
        }
        if !ok(&g, k) {
            continue;
        }
        if k == len {
            count += 1;
        } else {
            k += 1;
        }
    }
    Ok(BigInt::from(count))
}

/// Piles formed by dealing `deck` in order: a card goes on top of the
/// previous one when its number is smaller, otherwise it starts a new pile.
pub fn newcomb_piles(deck: &[u8]) -> usize {
    if deck.is_empty() {
        return 0;
    }
    1 + deck.windows(2).filter(|p| p[1] > p[0]).count()
}

/// `counts[k]` is the number of decks of `n` cards giving `k + 1` piles.
pub fn newcomb_distribution(n: usize) -> Result<PermutationStatVector, OracleError> {
    cap("newcomb", n, NEWCOMB_CAP)?;
    let mut counts = vec![0u64; n.max(1)];
    for_each_word(identity(n), |w| counts[newcomb_piles(w).max(1) - 1] += 1);
    Ok(PermutationStatVector::from_counts(n, counts))
}

/// Distinct words on `{1^i, ..., n^i}` counted by number of descents.
pub fn multiset_descent_distribution(n: usize, i: usize) -> Result<PermutationStatVector, OracleError> {
    let size = multiset_size(n, i);
    if size > MULTISET_CAP {
        return Err(OracleError::TooLarge {
            oracle: "multiset",
            size,
            cap: MULTISET_CAP,
        });
    }
    let word: Vec<u8> = (1..=n as u8).flat_map(|v| std::iter::repeat(v).take(i)).collect();
    let mut counts = vec![0u64; (i * n.saturating_sub(1)) + 1];
    for_each_word(word, |w| counts[descents(w)] += 1);
    Ok(PermutationStatVector::from_counts(n, counts))
}

/// `(in)! / (i!)^n`, saturating, computed as a product of binomials.
fn multiset_size(n: usize, i: usize) -> u64 {
    let mut total: u128 = 1;
    let mut placed = 0u128;
    for _ in 0..n {
        for k in 1..=i as u128 {
            placed += 1;
            total = total * placed / k;
            if total > u64::MAX as u128 {
                return u64::MAX;
            }
        }
    }
    total as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn ascent_rows() {
        assert_eq!(ascent_distribution(1).unwrap().counts, ints(&[1]));
        assert_eq!(ascent_distribution(3).unwrap().counts, ints(&[1, 4, 1]));
        assert_eq!(ascent_distribution(4).unwrap().counts, ints(&[1, 11, 11, 1]));
        assert!(ascent_distribution(11).is_err());
    }

    #[test]
    fn alternating_examples() {
        assert_eq!(alternating_count(1).unwrap(), BigInt::from(1));
        assert_eq!(alternating_count(4).unwrap(), BigInt::from(5));
        assert_eq!(alternating_count(5).unwrap(), BigInt::from(16));
    }

    #[test]
    fn dumont_examples() {
        assert_eq!(dumont_count(1).unwrap(), BigInt::from(1));
        assert_eq!(dumont_count(3).unwrap(), BigInt::from(3));
        assert_eq!(dumont_count(4).unwrap(), BigInt::from(17));
        assert!(dumont_count(6).is_err());
    }

    #[test]
    fn gun_examples() {
        assert_eq!(gun_count(1).unwrap(), BigInt::from(1));
        assert_eq!(gun_count(2).unwrap(), BigInt::from(1));
        assert_eq!(gun_count(3).unwrap(), BigInt::from(3));
        assert_eq!(gun_count(4).unwrap(), BigInt::from(17));
        assert!(gun_count(9).is_err());
    }

    #[test]
    fn gun_pruning_matches_exhaustive_scan() {
        // all maps on [1,6] with g(k) <= ceil(k/2), filtered afterwards
        let mut count = 0;
        for code in 0..(1 * 1 * 2 * 2 * 3 * 3) {
            let mut c = code;
            let g: Vec<usize> = (1..=6)
                .map(|k| {
                    let b = (k + 1) / 2;
                    let v = c % b + 1;
                    c /= b;
                    v
                })
                .collect();
            let good = (1..6).all(|k| if k % 2 == 1 { g[k - 1] >= g[k] } else { g[k - 1] <= g[k] });
            if good {
                count += 1;
            }
        }
        assert_eq!(gun_count(4).unwrap(), BigInt::from(count));
    }

    #[test]
    fn newcomb_examples() {
        assert_eq!(newcomb_piles(&[3, 2, 1]), 1);
        assert_eq!(newcomb_piles(&[1, 2, 3]), 3);
        assert_eq!(newcomb_distribution(3).unwrap().counts, ints(&[1, 4, 1]));
    }

    #[test]
    fn multiset_examples() {
        assert_eq!(multiset_descent_distribution(2, 2).unwrap().counts, ints(&[1, 4, 1]));
        assert_eq!(multiset_descent_distribution(1, 3).unwrap().counts, ints(&[1]));
        assert_eq!(
            multiset_descent_distribution(4, 1).unwrap().counts,
            ascent_distribution(4).unwrap().counts
        );
        assert_eq!(multiset_size(3, 2), 90);
        assert!(multiset_descent_distribution(5, 3).is_err());
    }

    #[test]
    fn lexicographic_successor_visits_distinct_words() {
        let mut seen = 0;
        for_each_word(vec![2, 1, 1], |_| seen += 1);
        assert_eq!(seen, 3);
    }
}
