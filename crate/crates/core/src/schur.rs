//! Partition combinatorics for Schur algebra blocks: p-regularity and the
//! filtration-dimension count `d(λ)`.
//!
//! Trailing zero parts are kept: the sums run over all `n` tracked parts, so
//! `(6, 0)` and `(6, 0, 0)` are different inputs.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::exactlin::is_prime;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SchurError {
    #[error("parts must be weakly decreasing, got {0:?}")]
    NotDecreasing(Vec<u64>),
    #[error("a partition needs at least one part")]
    Empty,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cannot parse part {0:?}")]
    Parse(String),
}

/// A weakly decreasing sequence of naturals with an explicit number of parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn new(parts: Vec<u64>) -> Result<Self, SchurError> {
        if parts.is_empty() {
            return Err(SchurError::Empty);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(SchurError::NotDecreasing(parts));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Number of tracked parts, trailing zeros included.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The size `r` of the partitioned number.
    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Adds `c` to every part.
    pub fn shifted(&self, c: u64) -> Partition {
        Partition { parts: self.parts.iter().map(|x| x + c).collect() }
    }

    /// `(λ_i − λ_j, j − i)` over pairs `i < j`.
    fn pairs(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        let n = self.parts.len();
        (0..n).flat_map(move |i| (i + 1..n).map(move |j| (self.parts[i] - self.parts[j], (j - i) as u64)))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = SchurError;

    /// Comma-separated parts, e.g. `7,1` or `(6,0,0)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse::<u64>().map_err(|_| SchurError::Parse(p.trim().to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

fn check_prime(p: u64) -> Result<(), SchurError> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(SchurError::NotPrime(p))
    }
}

/// `d(λ) = Σ_{i<j} ⌊(λ_i − λ_j − i + j − 1) / p⌋`.
///
/// Every summand is a natural number because `λ_i ≥ λ_j` and `j > i`.
pub fn d_lambda(lambda: &Partition, p: u64) -> Result<u64, SchurError> {
    check_prime(p)?;
    Ok(lambda.pairs().map(|(diff, gap)| (diff + gap - 1) / p).sum())
}

/// `λ` is `p`-regular when `λ_i − λ_j ≢ i − j (mod p)` for all `i < j`.
pub fn is_regular(lambda: &Partition, p: u64) -> Result<bool, SchurError> {
    check_prime(p)?;
    // λ_i − λ_j ≡ i − j  ⇔  (λ_i − λ_j) + (j − i) ≡ 0.
    Ok(lambda.pairs().all(|(diff, gap)| (diff + gap) % p != 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn parsing_and_validation() {
        assert_eq!(part("(6,0,0)").len(), 3);
        assert_eq!(part("7, 1").to_string(), "(7,1)");
        assert_eq!("1,2".parse::<Partition>(), Err(SchurError::NotDecreasing(vec![1, 2])));
        assert!(matches!("a".parse::<Partition>(), Err(SchurError::Parse(_))));
        assert_eq!(d_lambda(&part("1"), 4), Err(SchurError::NotPrime(4)));
    }

    #[test]
    fn trailing_zeros_matter() {
        assert_eq!(d_lambda(&part("6,0"), 2).unwrap(), 3);
        assert_eq!(d_lambda(&part("6,0,0"), 2).unwrap(), 6);
    }
}
