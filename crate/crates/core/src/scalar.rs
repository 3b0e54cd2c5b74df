//! Exact scalars over ℚ and ℚ(i).
//!
//! Every scalar is kept in canonical reduced form, so structural equality,
//! hashing and the canonical total order all agree with value equality.
//! Counting code is generic over [`Field`]; the [`Scalar`] enum is the
//! field-tagged value used at dynamic boundaries (CLI arguments, set files,
//! the C API), where mixing tags is a recoverable error.

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::gauss::GaussianInt;

/// Which field a dynamic scalar lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldTag {
    Rational,
    Gaussian,
}

impl FieldTag {
    pub fn name(self) -> &'static str {
        match self {
            FieldTag::Rational => "rational",
            FieldTag::Gaussian => "gaussian",
        }
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Contract every exact field implements: arithmetic, canonical hashing and
/// a canonical total order, plus the projective integer normalization needed
/// for canonical line coefficients.
pub trait Field:
    Sized + Clone + Eq + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    /// Ring of integer line coefficients (ℤ, or ℤ[i] for the Gaussian field).
    type Coeff: Clone + Eq + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static;

    const TAG: FieldTag;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Exact division; `Err(DivisionByZero)` when `rhs` is zero.
    fn div(&self, rhs: &Self) -> Result<Self>;
    /// Parse the report text encoding (see crate docs for the grammar).
    fn from_text(s: &str) -> Result<Self>;

    /// Scale a not-all-zero triple of field elements to the canonical
    /// primitive integer triple spanning the same projective line:
    /// denominators cleared, content divided out, unit-normalized.
    fn primitive_triple(triple: [Self; 3]) -> [Self::Coeff; 3];
}

/// An arbitrary-precision rational in reduced canonical form
/// (denominator positive, gcd of numerator and denominator 1).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Reduce `num/den` to canonical form. Errors when `den` is zero.
    pub fn new(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Rational(&self.0 + &rhs.0)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Rational(&self.0 - &rhs.0)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Rational(&self.0 * &rhs.0)
    }

    pub fn neg(&self) -> Self {
        Rational(-&self.0)
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Self> {
        Rational::one().div(self)
    }

    /// Parse "p/q" or the integer shorthand "p".
    pub fn from_text(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty rational literal".into()));
        }
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (parse_bigint(n)?, parse_bigint(d)?),
            None => (parse_bigint(s)?, BigInt::one()),
        };
        Rational::new(num, den)
    }
}

fn parse_bigint(s: &str) -> Result<BigInt> {
    s.trim()
        .parse::<BigInt>()
        .map_err(|_| Error::Parse(format!("invalid integer: {s:?}")))
}

impl fmt::Display for Rational {
    /// Canonical encoding: always "p/q", reduced, q > 0.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Field for Rational {
    type Coeff = BigInt;
    const TAG: FieldTag = FieldTag::Rational;

    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn from_int(n: i64) -> Self {
        Rational::from_int(n)
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        Rational::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Rational::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Rational::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        Rational::neg(self)
    }
    fn div(&self, rhs: &Self) -> Result<Self> {
        Rational::div(self, rhs)
    }
    fn from_text(s: &str) -> Result<Self> {
        Rational::from_text(s)
    }

    fn primitive_triple(triple: [Self; 3]) -> [BigInt; 3] {
        let lcm = triple
            .iter()
            .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
        let mut ints: Vec<BigInt> = triple
            .iter()
            .map(|r| r.numer() * (&lcm / r.denom()))
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
        debug_assert!(!content.is_zero(), "triple must not be identically zero");
        for v in &mut ints {
            *v = &*v / &content;
        }
        if ints.iter().find(|v| !v.is_zero()).is_some_and(|v| v.is_negative()) {
            for v in &mut ints {
                *v = -&*v;
            }
        }
        [ints[0].clone(), ints[1].clone(), ints[2].clone()]
    }
}

/// A Gaussian rational `re + im·i`, both components canonical rationals.
///
/// The canonical total order is lexicographic on `(re, im)`; it has no
/// analytic meaning and exists only for deterministic tie-breaking.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GaussianRational {
    re: Rational,
    im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussianRational::new(Rational::from_int(re), Rational::from_int(im))
    }

    pub fn from_rational(re: Rational) -> Self {
        GaussianRational::new(re, Rational::zero())
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), self.im.neg())
    }

    /// `re² + im²`; zero iff the value is zero.
    pub fn norm(&self) -> Rational {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        GaussianRational::new(self.re.add(&rhs.re), self.im.add(&rhs.im))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        GaussianRational::new(self.re.sub(&rhs.re), self.im.sub(&rhs.im))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        GaussianRational::new(
            self.re.mul(&rhs.re).sub(&self.im.mul(&rhs.im)),
            self.re.mul(&rhs.im).add(&self.im.mul(&rhs.re)),
        )
    }

    pub fn neg(&self) -> Self {
        GaussianRational::new(self.re.neg(), self.im.neg())
    }

    /// Division via the conjugate: z/w = z·conj(w)/N(w).
    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = rhs.norm();
        let p = self.mul(&rhs.conj());
        Ok(GaussianRational::new(
            p.re.div(&n).expect("norm of nonzero value is nonzero"),
            p.im.div(&n).expect("norm of nonzero value is nonzero"),
        ))
    }

    /// Parse "p/q+r/si" (or "p/q-r/si"), plus the shorthands: a plain
    /// rational means zero imaginary part, a trailing-i term alone means
    /// zero real part, and integers may omit "/1".
    pub fn from_text(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty scalar literal".into()));
        }
        let Some(body) = s.strip_suffix('i') else {
            return Ok(GaussianRational::from_rational(Rational::from_text(s)?));
        };
        // Split before the sign that starts the imaginary term. Signs in
        // canonical encodings only occur at the front of a numerator, so a
        // '+'/'-' not at position 0 and not following '/' is the separator.
        let bytes = body.as_bytes();
        let mut split = None;
        for (idx, &b) in bytes.iter().enumerate().skip(1) {
            if (b == b'+' || b == b'-') && bytes[idx - 1] != b'/' {
                split = Some(idx);
            }
        }
        let (re_text, im_text) = match split {
            Some(idx) => (&body[..idx], &body[idx..]),
            None => ("0", body),
        };
        let im = match im_text {
            "" | "+" => Rational::one(),
            "-" => Rational::from_int(-1),
            t => Rational::from_text(t)?,
        };
        Ok(GaussianRational::new(Rational::from_text(re_text)?, im))
    }
}

impl fmt::Display for GaussianRational {
    /// Canonical encoding: "p/q+r/si", with the sign of the imaginary part
    /// folded into the separator.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, self.im.abs())
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Field for GaussianRational {
    type Coeff = GaussianInt;
    const TAG: FieldTag = FieldTag::Gaussian;

    fn zero() -> Self {
        GaussianRational::from_ints(0, 0)
    }
    fn one() -> Self {
        GaussianRational::from_ints(1, 0)
    }
    fn from_int(n: i64) -> Self {
        GaussianRational::from_ints(n, 0)
    }
    fn is_zero(&self) -> bool {
        GaussianRational::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        GaussianRational::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        GaussianRational::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        GaussianRational::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        GaussianRational::neg(self)
    }
    fn div(&self, rhs: &Self) -> Result<Self> {
        GaussianRational::div(self, rhs)
    }
    fn from_text(s: &str) -> Result<Self> {
        GaussianRational::from_text(s)
    }

    fn primitive_triple(triple: [Self; 3]) -> [GaussianInt; 3] {
        let lcm = triple.iter().fold(BigInt::one(), |acc, z| {
            acc.lcm(z.re.denom()).lcm(z.im.denom())
        });
        let mut ints: Vec<GaussianInt> = triple
            .iter()
            .map(|z| {
                GaussianInt::new(
                    z.re.numer() * (&lcm / z.re.denom()),
                    z.im.numer() * (&lcm / z.im.denom()),
                )
            })
            .collect();
        let content = ints
            .iter()
            .fold(GaussianInt::zero(), |acc, v| acc.gcd(v));
        debug_assert!(!content.is_zero(), "triple must not be identically zero");
        for v in &mut ints {
            *v = v.exact_div(&content);
        }
        let unit = ints
            .iter()
            .find(|v| !v.is_zero())
            .expect("triple must not be identically zero")
            .canonicalizing_unit();
        for v in &mut ints {
            *v = unit.mul(v);
        }
        [ints[0].clone(), ints[1].clone(), ints[2].clone()]
    }
}

/// A field-tagged scalar for dynamic boundaries. Operations between
/// mismatched tags fail with [`Error::MixedFields`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Rational),
    Gaussian(GaussianRational),
}

impl Scalar {
    pub fn tag(&self) -> FieldTag {
        match self {
            Scalar::Rational(_) => FieldTag::Rational,
            Scalar::Gaussian(_) => FieldTag::Gaussian,
        }
    }

    pub fn parse(s: &str, tag: FieldTag) -> Result<Self> {
        match tag {
            FieldTag::Rational => Ok(Scalar::Rational(Rational::from_text(s)?)),
            FieldTag::Gaussian => Ok(Scalar::Gaussian(GaussianRational::from_text(s)?)),
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.zip(rhs, Rational::add, GaussianRational::add)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.zip(rhs, Rational::sub, GaussianRational::sub)
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.zip(rhs, Rational::mul, GaussianRational::mul)
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a.div(b)?)),
            (Scalar::Gaussian(a), Scalar::Gaussian(b)) => Ok(Scalar::Gaussian(a.div(b)?)),
            _ => Err(self.mixed(rhs)),
        }
    }

    /// Canonical total order: numeric for rationals, lexicographic on
    /// (re, im) for Gaussian rationals. Mixed tags are an error.
    pub fn canonical_cmp(&self, rhs: &Self) -> Result<Ordering> {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(a.cmp(b)),
            (Scalar::Gaussian(a), Scalar::Gaussian(b)) => Ok(a.cmp(b)),
            _ => Err(self.mixed(rhs)),
        }
    }

    fn zip(
        &self,
        rhs: &Self,
        fr: impl Fn(&Rational, &Rational) -> Rational,
        fg: impl Fn(&GaussianRational, &GaussianRational) -> GaussianRational,
    ) -> Result<Self> {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(fr(a, b))),
            (Scalar::Gaussian(a), Scalar::Gaussian(b)) => Ok(Scalar::Gaussian(fg(a, b))),
            _ => Err(self.mixed(rhs)),
        }
    }

    fn mixed(&self, rhs: &Self) -> Error {
        Error::MixedFields {
            left: self.tag().name(),
            right: rhs.tag().name(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Gaussian(z) => write!(f, "{z}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha12Rng;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d)).unwrap()
    }

    fn random_rational(rng: &mut ChaCha12Rng) -> Rational {
        let n = rng.gen_range(-100i64..=100);
        let d = rng.gen_range(1i64..=100);
        q(n, d)
    }

    #[test]
    fn normalization() {
        assert_eq!(q(2, 4), q(1, 2));
        assert_eq!(q(-3, -6), q(1, 2));
        assert_eq!(q(0, 7).to_string(), "0/1");
        assert_eq!(q(1, -2).to_string(), "-1/2");
        assert_eq!(
            Rational::new(BigInt::from(1), BigInt::from(0)),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn rational_arithmetic() {
        assert_eq!(q(1, 2).add(&q(1, 3)), q(5, 6));
        assert_eq!(q(1, 2).sub(&q(1, 3)), q(1, 6));
        assert_eq!(q(2, 3).mul(&q(3, 4)), q(1, 2));
        assert_eq!(q(1, 2).div(&q(3, 4)).unwrap(), q(2, 3));
        assert_eq!(q(1, 2).div(&q(0, 1)), Err(Error::DivisionByZero));
    }

    #[test]
    fn multiplicative_identity_on_random_scalars() {
        let mut rng = ChaCha12Rng::seed_from_u64(7);
        for _ in 0..50 {
            let x = random_rational(&mut rng);
            assert_eq!(x.mul(&Rational::one()), x);
            let z = GaussianRational::new(random_rational(&mut rng), random_rational(&mut rng));
            assert_eq!(z.mul(&GaussianRational::one()), z);
        }
    }

    #[test]
    fn gaussian_division_by_conjugate() {
        // (1+2i) / (1-i) = -1/2 + 3/2 i, verified by back-multiplication
        let a = GaussianRational::from_ints(1, 2);
        let b = GaussianRational::from_ints(1, -1);
        let c = a.div(&b).unwrap();
        assert_eq!(c, GaussianRational::new(q(-1, 2), q(3, 2)));
        assert_eq!(c.mul(&b), a);
        assert_eq!(
            GaussianRational::one().div(&GaussianRational::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn canonical_order() {
        assert!(q(1, 3) < q(1, 2));
        assert!(GaussianRational::from_ints(1, 0) < GaussianRational::from_ints(1, 1));
        assert!(GaussianRational::from_ints(0, 5) < GaussianRational::from_ints(1, -5));
        // sorting is idempotent under a total order
        let mut rng = ChaCha12Rng::seed_from_u64(11);
        let mut v: Vec<Rational> = (0..64).map(|_| random_rational(&mut rng)).collect();
        v.sort();
        let once = v.clone();
        v.sort();
        assert_eq!(v, once);
    }

    #[test]
    fn hash_agrees_with_structural_equality() {
        use std::collections::hash_map::DefaultHasher;
        use std::hash::Hasher;
        fn h(x: &impl Hash) -> u64 {
            let mut s = DefaultHasher::new();
            x.hash(&mut s);
            s.finish()
        }
        let mut rng = ChaCha12Rng::seed_from_u64(3);
        for _ in 0..10_000 {
            let a = random_rational(&mut rng);
            let b = random_rational(&mut rng);
            assert_eq!(a == b, h(&a) == h(&b), "{a} vs {b}");
        }
        // equal values constructed differently hash identically
        assert_eq!(h(&q(2, 4)), h(&q(1, 2)));
    }

    #[test]
    fn zero_imaginary_gaussian_matches_rational_componentwise() {
        let mut rng = ChaCha12Rng::seed_from_u64(19);
        for _ in 0..200 {
            let a = random_rational(&mut rng);
            let b = random_rational(&mut rng);
            let ga = GaussianRational::from_rational(a.clone());
            let gb = GaussianRational::from_rational(b.clone());
            assert_eq!(*ga.add(&gb).re(), a.add(&b));
            assert_eq!(*ga.sub(&gb).re(), a.sub(&b));
            assert_eq!(*ga.mul(&gb).re(), a.mul(&b));
            assert!(ga.mul(&gb).im().is_zero());
            if !b.is_zero() {
                let d = ga.div(&gb).unwrap();
                assert_eq!(*d.re(), a.div(&b).unwrap());
                assert!(d.im().is_zero());
            }
        }
    }

    #[test]
    fn text_round_trips() {
        for s in ["5/1", "-7/3", "0/1"] {
            assert_eq!(Rational::from_text(s).unwrap().to_string(), s);
        }
        assert_eq!(Rational::from_text("42").unwrap(), q(42, 1));
        assert_eq!(Rational::from_text(" -3 ").unwrap(), q(-3, 1));
        assert!(Rational::from_text("1/0").is_err());
        assert!(Rational::from_text("x").is_err());

        for s in ["1/2+3/4i", "1/2-3/4i", "-1/2-3/4i", "0/1+1/1i"] {
            assert_eq!(GaussianRational::from_text(s).unwrap().to_string(), s);
        }
        assert_eq!(
            GaussianRational::from_text("2+3i").unwrap(),
            GaussianRational::from_ints(2, 3)
        );
        assert_eq!(
            GaussianRational::from_text("3/2").unwrap(),
            GaussianRational::new(q(3, 2), q(0, 1))
        );
        assert_eq!(
            GaussianRational::from_text("5i").unwrap(),
            GaussianRational::from_ints(0, 5)
        );
        assert_eq!(
            GaussianRational::from_text("-i").unwrap(),
            GaussianRational::from_ints(0, -1)
        );
        assert_eq!(
            GaussianRational::from_text("1/-2+3i").unwrap(),
            GaussianRational::new(q(-1, 2), q(3, 1))
        );
    }

    #[test]
    fn scalar_mixed_tags_error() {
        let r = Scalar::Rational(q(1, 2));
        let g = Scalar::Gaussian(GaussianRational::from_ints(0, 1));
        assert!(matches!(r.add(&g), Err(Error::MixedFields { .. })));
        assert!(matches!(r.canonical_cmp(&g), Err(Error::MixedFields { .. })));
        assert_eq!(
            r.mul(&Scalar::Rational(q(2, 1))).unwrap(),
            Scalar::Rational(q(1, 1))
        );
        assert_eq!(
            Scalar::Rational(q(1, 3))
                .canonical_cmp(&Scalar::Rational(q(1, 2)))
                .unwrap(),
            Ordering::Less
        );
        assert_eq!(
            Scalar::Gaussian(GaussianRational::from_ints(1, 0))
                .canonical_cmp(&Scalar::Gaussian(GaussianRational::from_ints(1, 1)))
                .unwrap(),
            Ordering::Less
        );
    }

    #[test]
    fn primitive_triples() {
        // rational: clear denominators, reduce content, sign-normalize
        let t = Rational::primitive_triple([q(4, 1), q(-2, 1), q(0, 1)]);
        assert_eq!(t, [BigInt::from(2), BigInt::from(-1), BigInt::from(0)]);
        let t = Rational::primitive_triple([q(0, 1), q(-5, 1), q(5, 1)]);
        assert_eq!(t, [BigInt::from(0), BigInt::from(1), BigInt::from(-1)]);
        let t = Rational::primitive_triple([q(1, 2), q(1, 3), q(0, 1)]);
        assert_eq!(t, [BigInt::from(3), BigInt::from(2), BigInt::from(0)]);

        // gaussian: same triple regardless of a unit or rational prefactor
        let base = [
            GaussianRational::from_ints(1, 1),
            GaussianRational::from_ints(0, -2),
            GaussianRational::from_ints(3, 0),
        ];
        let expected = GaussianRational::primitive_triple(base.clone());
        for mult in [
            GaussianRational::from_ints(0, 1),
            GaussianRational::from_ints(-1, 0),
            GaussianRational::from_ints(0, -1),
            GaussianRational::new(q(-2, 3), q(0, 1)),
            GaussianRational::new(q(1, 2), q(5, 7)),
        ] {
            let scaled = [
                base[0].mul(&mult),
                base[1].mul(&mult),
                base[2].mul(&mult),
            ];
            assert_eq!(GaussianRational::primitive_triple(scaled), expected);
        }
        // leading coefficient lands in the canonical quadrant
        assert!(expected[0].re.is_positive() && !expected[0].im.is_negative());
    }
}
