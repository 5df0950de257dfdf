//! Permutations of `{0..n-1}` in one-line form, plus the enumerators the
//! engine needs: n-cycles by rank, a fixed conjugacy class, and all of `S_n`.
//!
//! Composition applies the right factor first: `a.compose(&b)` is
//! `x ↦ a(b(x))`. Everything is 0-based internally; cycle notation rendered
//! through [`Display`](std::fmt::Display) is 1-based, e.g. `(1 2 3)(4 5)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Largest `n` whose n-cycle count `(n-1)!` still fits in a `u64` rank.
pub const MAX_ENUM_N: usize = 21;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGroundSet);
        }
        Ok(Permutation {
            images: (0..n).collect(),
        })
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::EmptyGroundSet);
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n {
                return Err(Error::NotABijection {
                    n,
                    detail: format!("image {} out of range", x + 1),
                });
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::NotABijection {
                    n,
                    detail: format!("image {} repeated", x + 1),
                });
            }
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of `{1..n}` from disjoint 1-based cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                let y = cycle[(i + 1) % cycle.len()];
                if x == 0 || x > n || y == 0 || y > n {
                    return Err(Error::NotABijection {
                        n,
                        detail: format!("cycle entry outside 1..{n}"),
                    });
                }
                if std::mem::replace(&mut touched[x - 1], true) {
                    return Err(Error::NotABijection {
                        n,
                        detail: format!("{x} appears in two cycles"),
                    });
                }
                images[x - 1] = y - 1;
            }
        }
        Self::from_images(images)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    fn check_size(&self, other: &Permutation) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(())
    }

    /// `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        self.check_size(other)?;
        Ok(Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    /// `s · self · s⁻¹`.
    pub fn conjugate(&self, s: &Permutation) -> Result<Permutation> {
        self.check_size(s)?;
        // (s a s⁻¹)(s(x)) = s(a(x))
        let mut images = vec![0; self.len()];
        for (x, &ax) in self.images.iter().enumerate() {
            images[s.images[x]] = s.images[ax];
        }
        Ok(Permutation { images })
    }

    /// Number of orbits, fixed points included.
    pub fn num_cycles(&self) -> usize {
        self.cycle_lengths().len()
    }

    fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            lengths.push(len);
        }
        lengths
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_parts_unchecked(self.cycle_lengths())
    }

    /// Disjoint cycles as 0-based element lists, each starting at its
    /// smallest element, ordered by that element. Fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            f.write_str("(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{self}")
    }
}

/// The cycle `1 → 2 → … → n → 1`; the identity when `n = 1`.
pub fn canonical_full_cycle(n: usize) -> Result<Permutation> {
    if n == 0 {
        return Err(Error::EmptyGroundSet);
    }
    Ok(Permutation {
        images: (0..n).map(|i| (i + 1) % n).collect(),
    })
}

/// `(n-1)!`, the number of n-cycles in `S_n`.
pub fn ncycle_count(n: usize) -> Result<u64> {
    if n == 0 {
        return Err(Error::EmptyGroundSet);
    }
    if n > MAX_ENUM_N {
        return Err(Error::TooLarge { n, max: MAX_ENUM_N });
    }
    Ok((1..n as u64).product())
}

/// The `rank`-th n-cycle: `(1 a₂ … aₙ)` where `(a₂, …, aₙ)` is the
/// `rank`-th permutation of `{2..n}` in factorial-number-system
/// (lexicographic) order.
pub fn unrank_ncycle(n: usize, rank: u64) -> Result<Permutation> {
    let limit = ncycle_count(n)?;
    if rank >= limit {
        return Err(Error::RankOutOfRange { n, rank, limit });
    }
    let cursor = NCycleCursor::new(n, rank);
    let mut images = vec![0u8; n];
    cursor.write_images(&mut images);
    Ok(Permutation {
        images: images.into_iter().map(usize::from).collect(),
    })
}

/// Walks n-cycles in rank order without re-decoding each rank.
///
/// Holds the tail `(a₂, …, aₙ)` (0-based) of the cycle `(0 a₂ … aₙ)`;
/// advancing is a lexicographic next-permutation step on the tail, which
/// keeps it in lockstep with [`unrank_ncycle`].
#[derive(Clone, Debug)]
pub(crate) struct NCycleCursor {
    n: usize,
    tail: [u8; MAX_ENUM_N],
}

impl NCycleCursor {
    /// Caller guarantees `1 <= n <= MAX_ENUM_N` and `rank < (n-1)!`.
    pub(crate) fn new(n: usize, mut rank: u64) -> Self {
        debug_assert!((1..=MAX_ENUM_N).contains(&n));
        let m = n - 1;
        let mut pool: Vec<u8> = (1..n as u8).collect();
        let mut tail = [0u8; MAX_ENUM_N];
        for (i, slot) in tail.iter_mut().take(m).enumerate() {
            let weight: u64 = (1..(m - i) as u64).product();
            let digit = (rank / weight) as usize;
            rank %= weight;
            *slot = pool.remove(digit);
        }
        NCycleCursor { n, tail }
    }

    #[inline]
    pub(crate) fn write_images(&self, images: &mut [u8]) {
        let n = self.n;
        if n == 1 {
            images[0] = 0;
            return;
        }
        let tail = &self.tail[..n - 1];
        images[0] = tail[0];
        for w in tail.windows(2) {
            images[w[0] as usize] = w[1];
        }
        images[tail[n - 2] as usize] = 0;
    }

    /// Steps to the next rank; returns false after the last one.
    #[inline]
    pub(crate) fn advance(&mut self) -> bool {
        next_permutation(&mut self.tail[..self.n.saturating_sub(1)])
    }
}

/// In-place lexicographic successor; false (and unchanged) at the last one.
#[inline]
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Number of cycles of `x ↦ left(right(x))` on `{0..n-1}`, `n <= 32`.
#[inline]
pub(crate) fn cycles_of_product(left: &[u8], right: &[u8]) -> u32 {
    let n = left.len();
    let mut seen: u32 = 0;
    let mut cycles = 0;
    for start in 0..n {
        if seen & (1 << start) != 0 {
            continue;
        }
        cycles += 1;
        let mut x = start;
        while seen & (1 << x) == 0 {
            seen |= 1 << x;
            x = left[right[x] as usize] as usize;
        }
    }
    cycles
}

/// Calls `visit` once for every permutation of cycle type `lam`.
///
/// Built directly: the smallest unused element leads the next cycle, whose
/// length ranges over the distinct remaining parts (longest first) and whose
/// other entries are filled from unused elements in lexicographic order.
pub fn visit_class<F: FnMut(&Permutation)>(lam: &Partition, mut visit: F) {
    let n = lam.n();
    let mut parts: Vec<(usize, usize)> = Vec::new();
    for &p in lam.parts() {
        match parts.last_mut() {
            Some((len, mult)) if *len == p => *mult += 1,
            _ => parts.push((p, 1)),
        }
    }
    let mut state = ClassBuilder {
        perm: Permutation {
            images: (0..n).collect(),
        },
        used: vec![false; n],
        parts,
    };
    state.lead_cycle(&mut visit);
}

struct ClassBuilder {
    perm: Permutation,
    used: Vec<bool>,
    parts: Vec<(usize, usize)>,
}

impl ClassBuilder {
    fn lead_cycle<F: FnMut(&Permutation)>(&mut self, visit: &mut F) {
        let Some(lead) = self.used.iter().position(|&u| !u) else {
            visit(&self.perm);
            return;
        };
        self.used[lead] = true;
        for i in 0..self.parts.len() {
            let (len, mult) = self.parts[i];
            if mult == 0 {
                continue;
            }
            self.parts[i].1 -= 1;
            self.fill(lead, lead, len - 1, visit);
            self.parts[i].1 += 1;
        }
        self.used[lead] = false;
        self.perm.images[lead] = lead;
    }

    /// Extends the open cycle ending at `last` by `left` more elements.
    fn fill<F: FnMut(&Permutation)>(&mut self, lead: usize, last: usize, left: usize, visit: &mut F) {
        if left == 0 {
            self.perm.images[last] = lead;
            self.lead_cycle(visit);
            return;
        }
        for next in 0..self.used.len() {
            if self.used[next] {
                continue;
            }
            self.used[next] = true;
            self.perm.images[last] = next;
            self.fill(lead, next, left - 1, visit);
            self.used[next] = false;
            self.perm.images[next] = next;
        }
    }
}

/// Every permutation of cycle type `lam`, collected in visiting order.
pub fn enumerate_class(lam: &Partition) -> Vec<Permutation> {
    let mut out = Vec::new();
    visit_class(lam, |p| out.push(p.clone()));
    out
}

/// All of `S_n` in lexicographic order of one-line images.
pub fn enumerate_all(n: usize) -> Result<AllPermutations> {
    Ok(AllPermutations {
        next: Some(Permutation::identity(n)?),
    })
}

#[derive(Clone, Debug)]
pub struct AllPermutations {
    next: Option<Permutation>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ.images) {
            self.next = Some(succ);
        }
        Some(current)
    }
}
