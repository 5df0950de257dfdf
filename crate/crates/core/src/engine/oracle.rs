//! Brute-force routes to P_λ that never touch the n-cycle histogram.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive};

use super::scale_by_class_factor;
use crate::error::{Error, Result};
use crate::partition::{factorial, Partition};
use crate::perm::{canonical_full_cycle, enumerate_all, visit_class};
use crate::poly::IntPolynomial;

fn within(what: &'static str, required: BigUint, limit: u64) -> Result<()> {
    if required.to_u64().is_none_or(|r| r > limit) {
        return Err(Error::BudgetExceeded {
            what,
            required: required.to_string(),
            limit,
        });
    }
    Ok(())
}

fn counts_to_poly(counts: &[u64]) -> IntPolynomial {
    IntPolynomial::new(counts.iter().map(|&c| BigInt::from(c)).collect())
}

/// Σ_{ρ(w)=λ} q^{κ(c·w)} with `c = (1 2 … n)`, over the class itself.
pub(crate) fn direct_class_sum(lam: &Partition, budget: u64) -> Result<IntPolynomial> {
    within("class-sum oracle", lam.class_size(), budget)?;
    let n = lam.n();
    let c = canonical_full_cycle(n)?;
    let mut counts = vec![0u64; n + 1];
    visit_class(lam, |w| {
        let k = c.compose(w).expect("same n").num_cycles();
        counts[k] += 1;
    });
    Ok(counts_to_poly(&counts))
}

/// (1/z_λ) Σ_{σ∈S_n} q^{κ(c·σπσ⁻¹)}.
pub(crate) fn conjugation_sum(lam: &Partition, budget: u64) -> Result<IntPolynomial> {
    let n = lam.n();
    within("conjugation oracle", factorial(n), budget)?;
    let c = canonical_full_cycle(n)?;
    let pi = lam.canonical_permutation();
    let mut counts = vec![0u64; n + 1];
    for sigma in enumerate_all(n)? {
        let w = pi.conjugate(&sigma)?;
        counts[c.compose(&w)?.num_cycles()] += 1;
    }
    scale_by_class_factor(lam, &counts_to_poly(&counts), &BigInt::one())
}
