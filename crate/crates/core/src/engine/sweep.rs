use super::{Engine, VerificationReport};
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition, Partitions};

/// A partition the sweep could not verify, with the reason.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Skipped {
    pub lambda: Partition,
    pub reason: String,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SweepItem {
    Verified(Box<VerificationReport>),
    Skipped(Skipped),
}

/// Lazily walks λ ⊢ n for n = 1..=max_n, in increasing n and
/// reverse-lexicographic λ.
pub struct Sweep<'a> {
    engine: &'a Engine,
    with_oracle: bool,
    max_n: usize,
    n: usize,
    current: Partitions,
}

impl<'a> Sweep<'a> {
    pub(crate) fn new(engine: &'a Engine, max_n: usize, with_oracle: bool) -> Result<Self> {
        if max_n == 0 {
            return Err(Error::EmptyGroundSet);
        }
        Ok(Sweep {
            engine,
            with_oracle,
            max_n,
            n: 1,
            current: partitions_of(1)?,
        })
    }

    /// Runs the whole sweep; a hard error (divisibility) aborts it.
    pub fn run(self) -> Result<SweepOutcome> {
        let mut outcome = SweepOutcome::default();
        for item in self {
            match item? {
                SweepItem::Verified(report) => {
                    outcome.summary.record(&report);
                    outcome.reports.push(*report);
                }
                SweepItem::Skipped(skip) => {
                    outcome.summary.skipped += 1;
                    outcome.skipped.push(skip);
                }
            }
        }
        Ok(outcome)
    }
}

impl Iterator for Sweep<'_> {
    type Item = Result<SweepItem>;

    /// Budget limits yield [`SweepItem::Skipped`]; anything else is an error.
    fn next(&mut self) -> Option<Result<SweepItem>> {
        let lam = loop {
            if let Some(lam) = self.current.next() {
                break lam;
            }
            if self.n == self.max_n {
                return None;
            }
            self.n += 1;
            self.current = partitions_of(self.n).expect("n >= 1");
        };
        Some(match self.engine.verify_conjecture(&lam, self.with_oracle) {
            Ok(report) => Ok(SweepItem::Verified(Box::new(report))),
            Err(e @ (Error::BudgetExceeded { .. } | Error::TooLarge { .. })) => {
                Ok(SweepItem::Skipped(Skipped {
                    lambda: lam,
                    reason: e.to_string(),
                }))
            }
            Err(e) => Err(e),
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct CheckTally {
    pub pass: usize,
    pub fail: usize,
}

impl CheckTally {
    fn add(&mut self, ok: bool) {
        if ok {
            self.pass += 1;
        } else {
            self.fail += 1;
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SweepSummary {
    pub reports: usize,
    pub skipped: usize,
    pub parity: CheckTally,
    pub identity: CheckTally,
    pub f_log_concave: CheckTally,
    pub f_real_rooted: CheckTally,
    pub p_purely_imaginary: CheckTally,
    pub oracle: CheckTally,
    /// Reports whose F has internal zeros (informational).
    pub f_internal_zeros: usize,
}

impl SweepSummary {
    pub fn record(&mut self, r: &VerificationReport) {
        self.reports += 1;
        self.parity.add(r.parity_ok);
        self.identity.add(r.identity_ok);
        self.f_log_concave.add(r.f_log_concave());
        self.f_real_rooted.add(r.f_real_rooted);
        self.p_purely_imaginary.add(r.p_purely_imaginary);
        if let Some(ok) = r.oracle_ok() {
            self.oracle.add(ok);
        }
        self.f_internal_zeros += usize::from(r.f_internal_zeros);
    }

    pub fn failures(&self) -> usize {
        [
            self.parity,
            self.identity,
            self.f_log_concave,
            self.f_real_rooted,
            self.p_purely_imaginary,
            self.oracle,
        ]
        .iter()
        .map(|t| t.fail)
        .sum()
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SweepOutcome {
    pub reports: Vec<VerificationReport>,
    pub skipped: Vec<Skipped>,
    pub summary: SweepSummary,
}
