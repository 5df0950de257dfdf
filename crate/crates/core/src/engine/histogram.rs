use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::exec::{fold_chunks, Execution};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::{cycles_of_product, ncycle_count, NCycleCursor, Permutation, MAX_ENUM_N};
use crate::poly::IntPolynomial;

/// `k ↦ #{ζ ∈ Q_n : κ(ζπ) = k}` for `k` in `1..=n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycleCountHistogram {
    lam: Partition,
    /// Indexed by cycle count; slot 0 is always zero.
    counts: Vec<u64>,
}

impl CycleCountHistogram {
    /// Builds a histogram from explicit counts; keys outside `1..=n` are
    /// rejected.
    pub fn from_counts(lam: Partition, counts: &BTreeMap<usize, u64>) -> Result<Self> {
        let n = lam.n();
        let mut dense = vec![0; n + 1];
        for (&k, &c) in counts {
            if k == 0 || k > n {
                return Err(Error::InvalidPartition(format!(
                    "histogram key {k} outside 1..={n}"
                )));
            }
            dense[k] = c;
        }
        Ok(CycleCountHistogram { lam, counts: dense })
    }

    pub fn partition(&self) -> &Partition {
        &self.lam
    }

    pub fn n(&self) -> usize {
        self.lam.n()
    }

    pub fn get(&self, k: usize) -> u64 {
        self.counts.get(k).copied().unwrap_or(0)
    }

    /// Nonzero `(k, count)` pairs in increasing `k`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(k, &c)| (k, c))
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn to_map(&self) -> BTreeMap<usize, u64> {
        self.iter().collect()
    }

    /// `Σ_k counts[k] · q^k`.
    pub fn generating_polynomial(&self) -> IntPolynomial {
        IntPolynomial::new(self.counts.iter().map(|&c| BigInt::from(c)).collect())
    }
}

pub(crate) fn check_enumeration_budget(n: usize, budget: u64) -> Result<u64> {
    if n > MAX_ENUM_N {
        return Err(Error::TooLarge { n, max: MAX_ENUM_N });
    }
    let total = ncycle_count(n)?;
    if total > budget {
        return Err(Error::BudgetExceeded {
            what: "n-cycle enumeration",
            required: format!("(n-1)! = {total}"),
            limit: budget,
        });
    }
    Ok(total)
}

/// One pass over Q_n with the given representative `pi`.
pub(crate) fn histogram_pass(
    lam: &Partition,
    pi: &Permutation,
    exec: Execution,
    budget: u64,
) -> Result<CycleCountHistogram> {
    let n = lam.n();
    if pi.len() != n || pi.cycle_type() != *lam {
        return Err(Error::InvalidPartition(format!(
            "representative {pi} does not have cycle type ({lam})"
        )));
    }
    let total = check_enumeration_budget(n, budget)?;
    let pi: Vec<u8> = pi.images().iter().map(|&x| x as u8).collect();

    let fold = |ranks: std::ops::Range<u64>| {
        let mut counts = vec![0u64; n + 1];
        let mut cursor = NCycleCursor::new(n, ranks.start);
        let mut zeta = [0u8; MAX_ENUM_N];
        let zeta = &mut zeta[..n];
        for _ in ranks {
            cursor.write_images(zeta);
            counts[cycles_of_product(zeta, &pi) as usize] += 1;
            cursor.advance();
        }
        counts
    };
    let merge = |mut a: Vec<u64>, b: Vec<u64>| {
        for (x, y) in a.iter_mut().zip(b) {
            *x += y;
        }
        a
    };
    let counts = fold_chunks(exec, total, vec![0u64; n + 1], fold, merge);
    Ok(CycleCountHistogram {
        lam: lam.clone(),
        counts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn run(parts: &[usize], exec: Execution) -> CycleCountHistogram {
        let l = lam(parts);
        histogram_pass(&l, &l.canonical_permutation(), exec, u64::MAX).unwrap()
    }

    #[test]
    fn small_histograms() {
        assert_eq!(run(&[1, 1, 1], Execution::Sequential).to_map(), BTreeMap::from([(1, 2)]));
        // (123)(123) = (132): κ = 1; (132)(123) = id: κ = 3
        assert_eq!(run(&[3], Execution::Sequential).to_map(), BTreeMap::from([(1, 1), (3, 1)]));
        assert_eq!(run(&[2, 1], Execution::Sequential).to_map(), BTreeMap::from([(2, 2)]));
        assert_eq!(run(&[1], Execution::Sequential).to_map(), BTreeMap::from([(1, 1)]));
    }

    #[test]
    fn matches_naive_product_loop() {
        for parts in [&[4, 2][..], &[3, 3, 1], &[2, 2, 1, 1, 1], &[7]] {
            let l = lam(parts);
            let pi = l.canonical_permutation();
            let total = ncycle_count(l.n()).unwrap();
            let mut naive = BTreeMap::new();
            for r in 0..total {
                let zeta = crate::perm::unrank_ncycle(l.n(), r).unwrap();
                *naive.entry(zeta.compose(&pi).unwrap().num_cycles()).or_insert(0u64) += 1;
            }
            assert_eq!(run(parts, Execution::Sequential).to_map(), naive, "{parts:?}");
        }
    }

    #[test]
    fn execution_modes_agree_across_chunks() {
        // 8! ranks spans several chunks
        for parts in [&[9][..], &[3, 3, 2, 1], &[1; 9]] {
            assert_eq!(run(parts, Execution::Sequential), run(parts, Execution::Parallel));
        }
    }

    #[test]
    fn budget_is_enforced() {
        let l = lam(&[5, 3]);
        let err = histogram_pass(&l, &l.canonical_permutation(), Execution::Sequential, 100).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { limit: 100, .. }), "{err}");
        assert!(err.to_string().contains("5040"));
    }

    #[test]
    fn rejects_wrong_representative() {
        let l = lam(&[2, 1]);
        let wrong = Permutation::identity(3).unwrap();
        assert!(histogram_pass(&l, &wrong, Execution::Sequential, u64::MAX).is_err());
    }

    #[test]
    fn from_counts_validates_keys() {
        assert!(CycleCountHistogram::from_counts(lam(&[3]), &BTreeMap::from([(4, 1)])).is_err());
        assert!(CycleCountHistogram::from_counts(lam(&[3]), &BTreeMap::from([(0, 1)])).is_err());
        let h = CycleCountHistogram::from_counts(lam(&[3]), &BTreeMap::from([(1, 1), (3, 1)])).unwrap();
        assert_eq!(h, run(&[3], Execution::Sequential));
    }
}
