//! Dense univariate polynomials with arbitrary-precision integer
//! coefficients, and the coefficient/root-structure predicates built on them.

mod roots;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use roots::Bound;

/// Coefficient `k` is the coefficient of `q^k`. Never stores trailing zeros;
/// the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

/// Outcome of the log-concavity test.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LogConcavity {
    Holds,
    /// Smallest `k` with `c_k² < c_{k-1}·c_{k+1}`.
    FailsAt(usize),
}

impl LogConcavity {
    pub fn holds(self) -> bool {
        self == LogConcavity::Holds
    }

    pub fn witness(self) -> Option<usize> {
        match self {
            LogConcavity::Holds => None,
            LogConcavity::FailsAt(k) => Some(k),
        }
    }
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c · q^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// `q - root`.
    pub fn linear_factor(root: i64) -> Self {
        Self::from_i64s(&[-root, 1])
    }

    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn evaluate(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }

    /// Sign of `p(num/den)` for `den > 0`, without leaving the integers:
    /// the sign of `Σ c_k num^k den^{d-k}`.
    pub(crate) fn sign_at(&self, num: &BigInt, den: &BigInt) -> Sign {
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &den_pow;
            den_pow *= den;
        }
        acc.sign()
    }

    /// `p(q²)`.
    pub fn substitute_square(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() * 2);
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                coeffs.push(BigInt::zero());
            }
            coeffs.push(c.clone());
        }
        Self::new(coeffs)
    }

    /// `q^k · p`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    /// `(num/den) · p`, failing unless every scaled coefficient is an integer.
    pub fn scale_exact(&self, num: &BigInt, den: &BigInt) -> Result<Self> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (k, c) in self.coeffs.iter().enumerate() {
            let (q, r) = (c * num).div_rem(den);
            if !r.is_zero() {
                return Err(Error::NotDivisible {
                    index: k,
                    num: num.to_string(),
                    den: den.to_string(),
                });
            }
            coeffs.push(q);
        }
        Ok(Self::new(coeffs))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// Largest `e` with `q^e | p`; 0 for the zero polynomial.
    pub fn low_order(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    /// gcd of the coefficients (nonnegative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// `lc(b)^{deg a - deg b + 1} · a mod b`, with every step exact over ℤ.
    pub fn pseudo_remainder(&self, divisor: &Self) -> Result<Self> {
        let d = divisor.degree().ok_or(Error::ZeroPolynomial)?;
        let lc = divisor.leading().expect("nonzero");
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Ok(self.clone());
        }
        let steps = rem.len() - d;
        for _ in 0..steps {
            let top = rem.len() - 1;
            let t = rem[top].clone();
            for c in rem.iter_mut() {
                *c *= lc;
            }
            let offset = top - d;
            for (i, b) in divisor.coeffs.iter().enumerate() {
                rem[offset + i] -= &t * b;
            }
            debug_assert!(rem[top].is_zero());
            rem.pop();
        }
        Ok(Self::new(rem))
    }

    /// Exact quotient `self / divisor` over ℤ; errors on nonzero remainder.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let d = divisor.degree().ok_or(Error::ZeroPolynomial)?;
        let lc = divisor.leading().expect("nonzero");
        let Some(deg) = self.degree() else {
            return Ok(Self::zero());
        };
        if deg < d {
            return Err(Error::InexactDivision);
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); deg - d + 1];
        for k in (0..=deg - d).rev() {
            let (q, r) = rem[k + d].div_rem(lc);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            for (i, b) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * b;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(Self::new(quot))
    }

    /// Primitive gcd with positive leading coefficient, via the primitive
    /// pseudo-remainder sequence.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_remainder(&b).expect("b nonzero");
            a = b;
            b = r.primitive_part();
        }
        a
    }

    /// `c_k² ≥ c_{k-1}·c_{k+1}` at every internal index.
    pub fn log_concavity(&self) -> LogConcavity {
        let c = &self.coeffs;
        for k in 1..c.len().saturating_sub(1) {
            if &c[k] * &c[k] < &c[k - 1] * &c[k + 1] {
                return LogConcavity::FailsAt(k);
            }
        }
        LogConcavity::Holds
    }

    pub fn is_log_concave(&self) -> bool {
        self.log_concavity().holds()
    }

    /// A zero coefficient strictly between two nonzero ones.
    pub fn has_internal_zeros(&self) -> bool {
        let first = self.low_order();
        self.coeffs.iter().skip(first).any(Zero::is_zero)
    }
}

impl fmt::Display for IntPolynomial {
    /// Ascending powers: `1+q`, `q+q^3`, `3q^2-q^5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if c.is_negative() {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}
