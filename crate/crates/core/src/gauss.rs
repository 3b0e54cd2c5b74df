//! Gaussian integers (ℤ[i]) with the Euclidean gcd and the unit
//! normalization used for canonical line coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// A Gaussian integer `re + im·i` with arbitrary-precision components.
///
/// Ordering is lexicographic on `(re, im)`; it is used only to make line
/// coefficient triples totally ordered, not for any numeric meaning.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GaussianInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInt {
    pub fn new(re: BigInt, im: BigInt) -> Self {
        GaussianInt { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussianInt::new(BigInt::from(re), BigInt::from(im))
    }

    pub fn zero() -> Self {
        GaussianInt::new(BigInt::zero(), BigInt::zero())
    }

    pub fn one() -> Self {
        GaussianInt::from_ints(1, 0)
    }

    pub fn i() -> Self {
        GaussianInt::from_ints(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianInt::new(self.re.clone(), -&self.im)
    }

    /// Field norm `re² + im²` (nonnegative, zero iff self is zero).
    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn add(&self, rhs: &Self) -> Self {
        GaussianInt::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        GaussianInt::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }

    pub fn neg(&self) -> Self {
        GaussianInt::new(-&self.re, -&self.im)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        GaussianInt::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }

    /// Euclidean division: returns (q, r) with `self = q·rhs + r` and
    /// `N(r) ≤ N(rhs)/2`, obtained by rounding both coordinates of
    /// `self/rhs` to the nearest integer.
    pub fn div_rem_rounded(&self, rhs: &Self) -> (Self, Self) {
        debug_assert!(!rhs.is_zero());
        let n = rhs.norm();
        let p = self.mul(&rhs.conj());
        let q = GaussianInt::new(round_div(&p.re, &n), round_div(&p.im, &n));
        let r = self.sub(&q.mul(rhs));
        (q, r)
    }

    /// Exact division; the divisor must divide self.
    pub fn exact_div(&self, rhs: &Self) -> Self {
        debug_assert!(!rhs.is_zero());
        let n = rhs.norm();
        let p = self.mul(&rhs.conj());
        debug_assert!((&p.re % &n).is_zero() && (&p.im % &n).is_zero());
        GaussianInt::new(&p.re / &n, &p.im / &n)
    }

    /// Euclidean gcd; the result is some associate of the gcd (callers
    /// normalize by a unit afterwards). gcd(0, 0) = 0.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem_rounded(&b);
            a = b;
            b = r;
        }
        a
    }

    /// The unit u ∈ {1, −1, i, −i} with `u·self` in the canonical quadrant
    /// (positive real part, nonnegative imaginary part). Self must be nonzero.
    pub fn canonicalizing_unit(&self) -> Self {
        let units = [
            GaussianInt::one(),
            GaussianInt::i(),
            GaussianInt::from_ints(-1, 0),
            GaussianInt::from_ints(0, -1),
        ];
        for u in units {
            let t = u.mul(self);
            if t.re.is_positive() && !t.im.is_negative() {
                return u;
            }
        }
        unreachable!("every nonzero Gaussian integer has a canonical associate")
    }
}

/// Nearest-integer division of BigInts, ties away from zero.
fn round_div(num: &BigInt, den: &BigInt) -> BigInt {
    debug_assert!(den.is_positive());
    let two = BigInt::from(2);
    if num.is_negative() {
        -(-num * &two + den).div_floor(&(den * &two))
    } else {
        (num * &two + den).div_floor(&(den * &two))
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, self.im.magnitude())
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}
