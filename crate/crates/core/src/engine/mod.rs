//! The cycle-count histogram over n-cycles, the polynomials F_λ and P_λ
//! built from it, brute-force oracles for P_λ, and per-partition
//! verification.
//!
//! Everything is driven by one pass over Q_n: for the fixed
//! representative π = [`Partition::canonical_permutation`], count the
//! n-cycles ζ by κ(ζπ). Then
//!
//! * F_λ(q) = Σ_k h[k] · q^⌊(k−1)/2⌋
//! * P_λ(q) = (n / z_λ) · Σ_k h[k] · q^k
//!
//! and P_λ(q) = (n/z_λ) · q^s · F_λ(q²) with s = 1 when n + ℓ(λ) is even
//! and s = 2 when it is odd.

mod exec;
mod histogram;
mod oracle;
mod sweep;
mod verify;

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::Permutation;
use crate::poly::IntPolynomial;

pub use exec::{available_threads, with_threads, Execution, CHUNK_LEN};
pub use histogram::CycleCountHistogram;
pub use sweep::{CheckTally, Skipped, Sweep, SweepItem, SweepOutcome, SweepSummary};
pub use verify::{IdentityCheck, OracleOutcome, Timings, VerificationReport};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(x: usize) -> Parity {
        if x.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn matches(self, x: usize) -> bool {
        Parity::of(x) == self
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// The parity every κ(ζπ) must have: odd when n + ℓ(λ) is even, even when
/// it is odd.
pub fn expected_parity(n: usize, lam: &Partition) -> Parity {
    Parity::of(n + lam.len() + 1)
}

/// Parity of n + κ(π), which selects the case of the P/F identity.
pub fn parity_case(lam: &Partition) -> Parity {
    Parity::of(lam.n() + lam.len())
}

/// Iteration limits. Each guards one brute-force loop.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Budgets {
    /// Max `(n−1)!` for the histogram pass.
    pub enumeration: u64,
    /// Max class size `n!/z_λ` for the direct class sum.
    pub class_sum: u64,
    /// Max `n!` for the conjugation oracle over all of S_n.
    pub conjugation: u64,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            enumeration: 40_000_000,
            class_sum: 400_000,
            conjugation: 40_320,
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Engine {
    pub budgets: Budgets,
    pub execution: Execution,
}

impl Engine {
    pub fn new(budgets: Budgets, execution: Execution) -> Self {
        Engine { budgets, execution }
    }

    pub fn sequential() -> Self {
        Engine {
            execution: Execution::Sequential,
            ..Engine::default()
        }
    }

    pub fn histogram(&self, lam: &Partition) -> Result<CycleCountHistogram> {
        self.histogram_with_representative(lam, &lam.canonical_permutation())
    }

    /// Same pass with any π of type λ in place of the canonical one.
    pub fn histogram_with_representative(
        &self,
        lam: &Partition,
        pi: &Permutation,
    ) -> Result<CycleCountHistogram> {
        histogram::histogram_pass(lam, pi, self.execution, self.budgets.enumeration)
    }

    pub fn p_direct_class_sum(&self, lam: &Partition) -> Result<IntPolynomial> {
        oracle::direct_class_sum(lam, self.budgets.class_sum)
    }

    pub fn p_conjugation_oracle(&self, lam: &Partition) -> Result<IntPolynomial> {
        oracle::conjugation_sum(lam, self.budgets.conjugation)
    }

    pub fn verify_identity(&self, lam: &Partition) -> Result<IdentityCheck> {
        let h = self.histogram(lam)?;
        let f = f_from_histogram(&h);
        let p = p_from_histogram(&h)?;
        verify::identity_check(lam, &f, p)
    }

    pub fn verify_conjecture(&self, lam: &Partition, with_oracle: bool) -> Result<VerificationReport> {
        verify::verify_conjecture(self, lam, with_oracle)
    }

    /// Reports for every λ ⊢ n, n = 1..=max_n.
    pub fn sweep(&self, max_n: usize, with_oracle: bool) -> Result<Sweep<'_>> {
        Sweep::new(self, max_n, with_oracle)
    }
}

/// F_λ(q) = Σ_k h[k] · q^⌊(k−1)/2⌋.
pub fn f_from_histogram(h: &CycleCountHistogram) -> IntPolynomial {
    let mut coeffs = vec![BigInt::default(); h.n().div_ceil(2)];
    for (k, c) in h.iter() {
        coeffs[(k - 1) / 2] += c;
    }
    IntPolynomial::new(coeffs)
}

/// P_λ(q) = (n / z_λ) · Σ_k h[k] · q^k.
pub fn p_from_histogram(h: &CycleCountHistogram) -> Result<IntPolynomial> {
    let lam = h.partition();
    scale_by_class_factor(lam, &h.generating_polynomial(), &BigInt::from(lam.n()))
}

/// `(num / z_λ) · p`; non-divisibility is a hard error naming λ.
pub(crate) fn scale_by_class_factor(lam: &Partition, p: &IntPolynomial, num: &BigInt) -> Result<IntPolynomial> {
    let z = BigInt::from(lam.z());
    p.scale_exact(num, &z).map_err(|e| match e {
        Error::NotDivisible { index, den, .. } => Error::Divisibility {
            lambda: lam.to_string(),
            index,
            den,
        },
        other => other,
    })
}
