//! Integer partitions, centralizer orders and class representatives.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Weakly decreasing positive parts with a positive sum.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Partition {
    parts: Vec<usize>,
    n: usize,
}

impl Partition {
    /// Accepts parts in any order; they are sorted weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be >= 1".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let n = parts.iter().sum();
        Ok(Partition { parts, n })
    }

    pub(crate) fn from_parts_unchecked(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let n = parts.iter().sum();
        Partition { parts, n }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// ℓ(λ), which is also κ(π) for any π of this type.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `(part, multiplicity)` pairs, largest part first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((part, m)) if *part == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// z_λ = Π i^{m_i} · m_i!, the order of the centralizer.
    pub fn z(&self) -> BigUint {
        let mut z = BigUint::one();
        for (part, mult) in self.multiplicities() {
            z *= BigUint::from(part).pow(mult as u32);
            z *= factorial(mult);
        }
        z
    }

    /// n!/z_λ.
    pub fn class_size(&self) -> BigUint {
        factorial(self.n) / self.z()
    }

    /// Consecutive blocks `(1..λ₁)(λ₁+1..λ₁+λ₂)…`.
    pub fn canonical_permutation(&self) -> Permutation {
        let mut images = Vec::with_capacity(self.n);
        let mut start = 0;
        for &p in &self.parts {
            images.extend((start + 1..start + p).chain(std::iter::once(start)));
            start += p;
        }
        Permutation::from_images(images).expect("block permutation is a bijection")
    }
}

impl fmt::Display for Partition {
    /// The `p1,p2,...,pk` text format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        parse_partition(text)
    }
}

/// Parses `p1,p2,...,pk`; order of parts does not matter.
pub fn parse_partition(text: &str) -> Result<Partition> {
    if text.trim().is_empty() {
        return Err(Error::PartitionToken {
            token: text.to_string(),
            reason: "empty partition",
        });
    }
    let mut parts = Vec::new();
    for raw in text.split(',') {
        let token = raw.trim();
        let part: i64 = token.parse().map_err(|_| Error::PartitionToken {
            token: token.to_string(),
            reason: "not an integer",
        })?;
        if part <= 0 {
            return Err(Error::PartitionToken {
                token: token.to_string(),
                reason: "parts must be positive",
            });
        }
        parts.push(part as usize);
    }
    Partition::new(parts)
}

pub fn z_of(lam: &Partition) -> BigUint {
    lam.z()
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

/// All partitions of `n` in reverse-lexicographic order, starting at `(n)`.
pub fn partitions_of(n: usize) -> Result<Partitions> {
    if n == 0 {
        return Err(Error::EmptyGroundSet);
    }
    Ok(Partitions {
        next: Some(vec![n]),
    })
}

#[derive(Clone, Debug)]
pub struct Partitions {
    next: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        self.next = successor(&current);
        Some(Partition::from_parts_unchecked(current))
    }
}

/// Reverse-lex successor: take one from the rightmost part > 1 and
/// redistribute everything to its right greedily.
fn successor(parts: &[usize]) -> Option<Vec<usize>> {
    let pos = parts.iter().rposition(|&p| p > 1)?;
    let mut out = parts[..pos].to_vec();
    let head = parts[pos] - 1;
    let mut rest: usize = parts[pos + 1..].iter().sum::<usize>() + 1;
    out.push(head);
    while rest > 0 {
        let take = rest.min(head);
        out.push(take);
        rest -= take;
    }
    Some(out)
}
