//! Exact real-root counting with Sturm chains.
//!
//! Roots are counted on half-open intervals `(lo, hi]`. Every sign is
//! decided in ℤ; nothing here touches floating point.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::IntPolynomial;
use crate::error::{Error, Result};

/// An endpoint on the extended rational line.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Bound {
    NegInf,
    Finite(BigRational),
    PosInf,
}

impl Bound {
    pub fn int(v: i64) -> Self {
        Bound::Finite(BigRational::from_integer(v.into()))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Bound::Finite(BigRational::new(num.into(), den.into()))
    }

    fn rank(&self) -> u8 {
        match self {
            Bound::NegInf => 0,
            Bound::Finite(_) => 1,
            Bound::PosInf => 2,
        }
    }

    fn lt(&self, other: &Bound) -> bool {
        match (self, other) {
            (Bound::Finite(a), Bound::Finite(b)) => a < b,
            _ => self.rank() < other.rank(),
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::NegInf => f.write_str("-inf"),
            Bound::Finite(r) => write!(f, "{r}"),
            Bound::PosInf => f.write_str("+inf"),
        }
    }
}

/// Divides out the (nonnegative) content without touching the sign.
fn positive_primitive(p: IntPolynomial) -> IntPolynomial {
    let g = p.content();
    if g.is_zero() || g == BigInt::from(1) {
        return p;
    }
    IntPolynomial::new(p.coeffs.iter().map(|c| c / &g).collect())
}

fn sign_at_bound(p: &IntPolynomial, at: &Bound) -> Sign {
    let Some(lc) = p.leading() else {
        return Sign::NoSign;
    };
    match at {
        Bound::PosInf => lc.sign(),
        Bound::NegInf => {
            let odd = p.degree().unwrap_or(0) % 2 == 1;
            if odd {
                -lc.sign()
            } else {
                lc.sign()
            }
        }
        Bound::Finite(r) => p.sign_at(r.numer(), r.denom()),
    }
}

impl IntPolynomial {
    /// `p / gcd(p, p')`, primitive with positive leading coefficient.
    pub fn squarefree_part(&self) -> Result<IntPolynomial> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let p = self.primitive_part();
        let g = p.gcd(&p.derivative());
        Ok(p.div_exact(&g)?.primitive_part())
    }

    /// Sturm chain `s₀ = p, s₁ = p', s_{i+1} = −rem(s_{i−1}, s_i)`, each term
    /// kept up to a positive constant factor.
    pub fn sturm_chain(&self) -> Vec<IntPolynomial> {
        let mut chain = vec![self.clone()];
        let mut next = self.derivative();
        while !next.is_zero() {
            let prev = chain.last().expect("nonempty");
            let lc = next.leading().expect("nonzero");
            let delta = prev.degree().unwrap_or(0) + 1 - next.degree().unwrap_or(0);
            let prem = prev.pseudo_remainder(&next).expect("nonzero divisor");
            // prem = lc^delta · rem; the multiplier is negative iff lc < 0 and delta is odd
            let flips = lc.is_negative() && delta % 2 == 1;
            let rem = if flips { prem } else { -&prem };
            chain.push(next);
            next = positive_primitive(rem);
        }
        chain
    }

    /// Distinct real roots in `(lo, hi]`.
    ///
    /// A root sitting exactly at `lo` is excluded: on the squarefree chain
    /// `s₀` and `s₁ = s₀'` agree in sign just right of a root, so skipping
    /// the zero at `lo` gives the same variation count as `lo + ε`.
    pub fn count_real_roots(&self, lo: &Bound, hi: &Bound) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !lo.lt(hi) || *lo == Bound::PosInf || *hi == Bound::NegInf {
            return Err(Error::EmptyInterval);
        }
        let chain = self.squarefree_part()?.sturm_chain();
        let lo_v = sign_variations(&chain, lo);
        let hi_v = sign_variations(&chain, hi);
        Ok(lo_v - hi_v)
    }

    /// All complex roots lie on the real line. Constants qualify vacuously.
    pub fn is_real_rooted(&self) -> Result<bool> {
        let s = self.squarefree_part()?;
        let d = s.degree().expect("nonzero");
        if d == 0 {
            return Ok(true);
        }
        Ok(s.count_real_roots(&Bound::NegInf, &Bound::PosInf)? == d)
    }

    /// All roots of the form `it` with `t` real, 0 included.
    ///
    /// After stripping `q^e`, the rest must be even, `R(q) = H(q²)`, and `H`
    /// must have only real roots, none positive: `q = it ⇔ x = −t² ≤ 0`.
    pub fn has_only_purely_imaginary_roots(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let rest = &self.coeffs[self.low_order()..];
        if rest.iter().skip(1).step_by(2).any(|c| !c.is_zero()) {
            return Ok(false);
        }
        let h = IntPolynomial::new(rest.iter().step_by(2).cloned().collect());
        if h.degree() == Some(0) {
            return Ok(true);
        }
        Ok(h.is_real_rooted()? && h.count_real_roots(&Bound::int(0), &Bound::PosInf)? == 0)
    }
}

fn sign_variations(chain: &[IntPolynomial], at: &Bound) -> usize {
    let mut last = Sign::NoSign;
    let mut changes = 0;
    for p in chain {
        let s = sign_at_bound(p, at);
        if s == Sign::NoSign {
            continue;
        }
        if last != Sign::NoSign && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}
