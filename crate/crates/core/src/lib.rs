//! Exact computation of the cycle-count polynomials
//!
//! * P_λ(q) = Σ_{ρ(w)=λ} q^{κ((1 … n)·w)}
//! * F_λ(q) = Σ_{ζ ∈ Q_n} q^{⌊(κ(ζπ)−1)/2⌋}
//!
//! for partitions λ of n, by exhaustive enumeration over the n-cycles Q_n,
//! together with exact checks of how they relate: the P/F change of
//! variables, the parity of κ(ζπ), purely imaginary roots of P,
//! real roots and log-concavity of F.
//!
//! ```
//! use cyclepoly::{Engine, Partition};
//!
//! let lam: Partition = "3".parse().unwrap();
//! let report = Engine::default().verify_conjecture(&lam, true).unwrap();
//! assert_eq!(report.f.to_string(), "1+q");
//! assert_eq!(report.p.to_string(), "q+q^3");
//! assert!(report.all_checks_pass());
//! ```

pub mod cli;
pub mod engine;
pub mod error;
pub mod partition;
pub mod perm;
pub mod poly;
pub mod report;

pub use engine::{Budgets, CycleCountHistogram, Engine, Execution, Parity, VerificationReport};
pub use error::{Error, Result};
pub use partition::Partition;
pub use perm::Permutation;
pub use poly::{Bound, IntPolynomial, LogConcavity};
