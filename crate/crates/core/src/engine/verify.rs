use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};

use super::{expected_parity, f_from_histogram, p_from_histogram, parity_case, scale_by_class_factor};
use super::{CycleCountHistogram, Engine, Parity};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::Permutation;
use crate::poly::{IntPolynomial, LogConcavity};

/// P compared against `(n/z_λ) · q^shift · F(q²)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IdentityCheck {
    /// Parity of n + κ(π).
    pub case: Parity,
    /// 1 in the even case, 2 in the odd case.
    pub shift: usize,
    pub p: IntPolynomial,
    pub rhs: IntPolynomial,
    pub holds: bool,
}

pub(crate) fn identity_check(lam: &Partition, f: &IntPolynomial, p: IntPolynomial) -> Result<IdentityCheck> {
    let case = parity_case(lam);
    let shift = match case {
        Parity::Even => 1,
        Parity::Odd => 2,
    };
    let rhs = scale_by_class_factor(lam, &f.substitute_square().shift(shift), &BigInt::from(lam.n()))?;
    Ok(IdentityCheck {
        case,
        shift,
        holds: rhs == p,
        p,
        rhs,
    })
}

/// The two brute-force P computations, when their budgets allowed them.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct OracleOutcome {
    pub class_sum: Option<IntPolynomial>,
    pub conjugation: Option<IntPolynomial>,
}

impl OracleOutcome {
    /// `None` when neither oracle ran.
    pub fn agrees_with(&self, p: &IntPolynomial) -> Option<bool> {
        let ran: Vec<_> = [&self.class_sum, &self.conjugation].into_iter().flatten().collect();
        if ran.is_empty() {
            return None;
        }
        Some(ran.into_iter().all(|q| q == p))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Timings {
    pub histogram: Duration,
    pub polynomials: Duration,
    pub analysis: Duration,
    pub oracle: Option<Duration>,
}

/// Every checked claim for one partition. Failed checks are data here; only
/// budget and divisibility problems become errors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerificationReport {
    pub lambda: Partition,
    pub representative: Permutation,
    pub z: BigUint,
    pub class_size: BigUint,
    pub parity_case: Parity,
    pub histogram: CycleCountHistogram,
    pub f: IntPolynomial,
    pub p: IntPolynomial,
    pub identity_ok: bool,
    pub parity_ok: bool,
    pub f_log_concavity: LogConcavity,
    pub f_internal_zeros: bool,
    pub f_real_rooted: bool,
    pub p_purely_imaginary: bool,
    pub oracle: Option<OracleOutcome>,
    pub timings: Timings,
}

impl VerificationReport {
    pub fn n(&self) -> usize {
        self.lambda.n()
    }

    pub fn f_log_concave(&self) -> bool {
        self.f_log_concavity.holds()
    }

    pub fn oracle_ok(&self) -> Option<bool> {
        self.oracle.as_ref().and_then(|o| o.agrees_with(&self.p))
    }

    /// Whether every pass/fail check passed. Internal zeros are reported,
    /// not judged.
    pub fn all_checks_pass(&self) -> bool {
        self.parity_ok
            && self.identity_ok
            && self.f_log_concave()
            && self.f_real_rooted
            && self.p_purely_imaginary
            && self.oracle_ok() != Some(false)
    }
}

fn budget_skip<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::BudgetExceeded { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

pub(crate) fn verify_conjecture(engine: &Engine, lam: &Partition, with_oracle: bool) -> Result<VerificationReport> {
    let n = lam.n();

    let t = Instant::now();
    let histogram = engine.histogram(lam)?;
    let histogram_time = t.elapsed();

    let t = Instant::now();
    let f = f_from_histogram(&histogram);
    let p = p_from_histogram(&histogram)?;
    let identity = identity_check(lam, &f, p.clone())?;
    let polynomials_time = t.elapsed();

    let t = Instant::now();
    let want = expected_parity(n, lam);
    let parity_ok = histogram.iter().all(|(k, _)| want.matches(k));
    let f_log_concavity = f.log_concavity();
    let f_internal_zeros = f.has_internal_zeros();
    let f_real_rooted = f.is_real_rooted()?;
    let p_purely_imaginary = p.has_only_purely_imaginary_roots()?;
    let analysis_time = t.elapsed();

    let (oracle, oracle_time) = if with_oracle {
        let t = Instant::now();
        let outcome = OracleOutcome {
            class_sum: budget_skip(engine.p_direct_class_sum(lam))?,
            conjugation: budget_skip(engine.p_conjugation_oracle(lam))?,
        };
        (Some(outcome), Some(t.elapsed()))
    } else {
        (None, None)
    };

    Ok(VerificationReport {
        lambda: lam.clone(),
        representative: lam.canonical_permutation(),
        z: lam.z(),
        class_size: lam.class_size(),
        parity_case: identity.case,
        histogram,
        f,
        p,
        identity_ok: identity.holds,
        parity_ok,
        f_log_concavity,
        f_internal_zeros,
        f_real_rooted,
        p_purely_imaginary,
        oracle,
        timings: Timings {
            histogram: histogram_time,
            polynomials: polynomials_time,
            analysis: analysis_time,
            oracle: oracle_time,
        },
    })
}
