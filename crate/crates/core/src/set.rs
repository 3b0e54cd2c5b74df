//! Finite scalar sets, planar point sets, and the parameterized set
//! families used as experiment inputs.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::error::{Error, Result};
use crate::scalar::{Field, FieldTag, GaussianRational, Rational, Scalar};

/// A nonempty, deduplicated scalar set, stored strictly increasing under
/// the canonical order of the field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteScalarSet<F: Field> {
    elements: Vec<F>,
}

impl<F: Field> FiniteScalarSet<F> {
    /// Canonicalize an arbitrary nonempty collection: sort and deduplicate.
    pub fn from_elements(mut elements: Vec<F>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::SetTooSmall { required: 1, actual: 0 });
        }
        elements.sort();
        elements.dedup();
        Ok(FiniteScalarSet { elements })
    }

    pub fn from_ints(values: &[i64]) -> Result<Self> {
        FiniteScalarSet::from_elements(values.iter().map(|&v| F::from_int(v)).collect())
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false // nonempty by construction
    }

    pub fn iter(&self) -> std::slice::Iter<'_, F> {
        self.elements.iter()
    }

    pub fn as_slice(&self) -> &[F] {
        &self.elements
    }

    pub fn contains(&self, x: &F) -> bool {
        self.elements.binary_search(x).is_ok()
    }

    /// Parse the set literal format: one scalar per line, `#` starts a
    /// comment, blank lines ignored.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut elements = Vec::new();
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            elements.push(F::from_text(line)?);
        }
        FiniteScalarSet::from_elements(elements)
    }

    /// Render in the set literal format, one canonical scalar per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for x in &self.elements {
            out.push_str(&x.to_string());
            out.push('\n');
        }
        out
    }
}

impl FiniteScalarSet<Rational> {
    /// The same set embedded in ℚ(i) with zero imaginary parts. The
    /// canonical order is preserved, so the embedding is order-preserving.
    pub fn to_gaussian(&self) -> FiniteScalarSet<GaussianRational> {
        FiniteScalarSet {
            elements: self
                .elements
                .iter()
                .map(|r| GaussianRational::from_rational(r.clone()))
                .collect(),
        }
    }
}

/// A deduplicated finite set of points in F², sorted for determinism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarPointSet<F: Field> {
    points: Vec<(F, F)>,
}

impl<F: Field> PlanarPointSet<F> {
    pub fn from_points(mut points: Vec<(F, F)>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::SetTooSmall { required: 1, actual: 0 });
        }
        points.sort();
        points.dedup();
        Ok(PlanarPointSet { points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn iter(&self) -> std::slice::Iter<'_, (F, F)> {
        self.points.iter()
    }

    pub fn as_slice(&self) -> &[(F, F)] {
        &self.points
    }

    pub fn contains(&self, p: &(F, F)) -> bool {
        self.points.binary_search(p).is_ok()
    }
}

/// {1, 2, …, n} as rationals.
pub fn interval_set(n: u64) -> Result<FiniteScalarSet<Rational>> {
    if n == 0 {
        return Err(Error::InvalidParameter("interval family needs n >= 1".into()));
    }
    let elements = (1..=n as i64).map(Rational::from_int).collect();
    FiniteScalarSet::from_elements(elements)
}

/// {base¹, …, baseⁿ}. The base must avoid 0 and ±1, which collapse the
/// powers. (Other roots of unity in ℚ(i) merely produce a smaller set.)
pub fn geometric_set<F: Field>(base: &F, n: u64) -> Result<FiniteScalarSet<F>> {
    if n == 0 {
        return Err(Error::InvalidParameter("geometric family needs n >= 1".into()));
    }
    if base.is_zero() || *base == F::one() || *base == F::one().neg() {
        return Err(Error::InvalidParameter(format!(
            "degenerate geometric base {base}"
        )));
    }
    let mut elements = Vec::with_capacity(n as usize);
    let mut power = base.clone();
    for _ in 0..n {
        elements.push(power.clone());
        power = power.mul(base);
    }
    FiniteScalarSet::from_elements(elements)
}

/// n distinct integers drawn uniformly from [−bound, bound] by a seeded
/// ChaCha12 generator; the same seed always yields the same set.
pub fn random_set(seed: u64, n: u64, bound: u64) -> Result<FiniteScalarSet<Rational>> {
    if n == 0 || bound == 0 {
        return Err(Error::InvalidParameter("random family needs n >= 1 and bound >= 1".into()));
    }
    if n > 2 * bound {
        return Err(Error::InvalidParameter(format!(
            "cannot draw {n} distinct integers from [-{bound}, {bound}]"
        )));
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let b = bound as i64;
    let mut chosen = BTreeSet::new();
    while (chosen.len() as u64) < n {
        chosen.insert(rng.gen_range(-b..=b));
    }
    FiniteScalarSet::from_elements(chosen.into_iter().map(Rational::from_int).collect())
}

/// n distinct Gaussian integers with both components in [−bound, bound],
/// drawn by the same seeded generator discipline as [`random_set`].
pub fn random_gaussian_set(
    seed: u64,
    n: u64,
    bound: u64,
) -> Result<FiniteScalarSet<GaussianRational>> {
    if n == 0 || bound == 0 {
        return Err(Error::InvalidParameter("random family needs n >= 1 and bound >= 1".into()));
    }
    if n > 4 * bound * bound {
        return Err(Error::InvalidParameter(format!(
            "cannot draw {n} distinct Gaussian integers with components in [-{bound}, {bound}]"
        )));
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let b = bound as i64;
    let mut chosen = BTreeSet::new();
    while (chosen.len() as u64) < n {
        chosen.insert((rng.gen_range(-b..=b), rng.gen_range(-b..=b)));
    }
    FiniteScalarSet::from_elements(
        chosen
            .into_iter()
            .map(|(re, im)| GaussianRational::from_ints(re, im))
            .collect(),
    )
}

/// {scale·x + shift : x ∈ A}; scale must be nonzero so the size is preserved.
pub fn affine_image<F: Field>(
    a: &FiniteScalarSet<F>,
    scale: &F,
    shift: &F,
) -> Result<FiniteScalarSet<F>> {
    if scale.is_zero() {
        return Err(Error::InvalidParameter("affine scale must be nonzero".into()));
    }
    FiniteScalarSet::from_elements(
        a.iter().map(|x| scale.mul(x).add(shift)).collect(),
    )
}

/// The |A|·|B| grid A×B as a planar point set.
pub fn direct_product<F: Field>(
    a: &FiniteScalarSet<F>,
    b: &FiniteScalarSet<F>,
) -> PlanarPointSet<F> {
    let mut points = Vec::with_capacity(a.len() * b.len());
    for x in a.iter() {
        for y in b.iter() {
            points.push((x.clone(), y.clone()));
        }
    }
    PlanarPointSet::from_points(points).expect("product of nonempty sets is nonempty")
}

/// A scalar set with its field tag resolved at runtime; the dynamic
/// counterpart of `FiniteScalarSet<F>` for CLI and FFI boundaries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TaggedSet {
    Rational(FiniteScalarSet<Rational>),
    Gaussian(FiniteScalarSet<GaussianRational>),
}

impl TaggedSet {
    pub fn tag(&self) -> FieldTag {
        match self {
            TaggedSet::Rational(_) => FieldTag::Rational,
            TaggedSet::Gaussian(_) => FieldTag::Gaussian,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            TaggedSet::Rational(s) => s.len(),
            TaggedSet::Gaussian(s) => s.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Parse a set literal with the requested field tag.
    pub fn from_text(text: &str, tag: FieldTag) -> Result<Self> {
        match tag {
            FieldTag::Rational => Ok(TaggedSet::Rational(FiniteScalarSet::from_text(text)?)),
            FieldTag::Gaussian => Ok(TaggedSet::Gaussian(FiniteScalarSet::from_text(text)?)),
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            TaggedSet::Rational(s) => s.to_text(),
            TaggedSet::Gaussian(s) => s.to_text(),
        }
    }

    pub fn from_scalars(scalars: Vec<Scalar>) -> Result<Self> {
        let Some(first) = scalars.first() else {
            return Err(Error::SetTooSmall { required: 1, actual: 0 });
        };
        let tag = first.tag();
        match tag {
            FieldTag::Rational => {
                let mut v = Vec::with_capacity(scalars.len());
                for s in scalars {
                    match s {
                        Scalar::Rational(r) => v.push(r),
                        Scalar::Gaussian(_) => {
                            return Err(Error::MixedFields {
                                left: tag.name(),
                                right: FieldTag::Gaussian.name(),
                            })
                        }
                    }
                }
                Ok(TaggedSet::Rational(FiniteScalarSet::from_elements(v)?))
            }
            FieldTag::Gaussian => {
                let mut v = Vec::with_capacity(scalars.len());
                for s in scalars {
                    match s {
                        Scalar::Gaussian(g) => v.push(g),
                        Scalar::Rational(_) => {
                            return Err(Error::MixedFields {
                                left: tag.name(),
                                right: FieldTag::Rational.name(),
                            })
                        }
                    }
                }
                Ok(TaggedSet::Gaussian(FiniteScalarSet::from_elements(v)?))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rset(values: &[i64]) -> FiniteScalarSet<Rational> {
        FiniteScalarSet::from_ints(values).unwrap()
    }

    #[test]
    fn interval_family() {
        assert_eq!(interval_set(3).unwrap(), rset(&[1, 2, 3]));
        assert_eq!(interval_set(1).unwrap(), rset(&[1]));
        assert!(interval_set(0).is_err());
        for n in 1..=100 {
            assert_eq!(interval_set(n).unwrap().len() as u64, n);
        }
    }

    #[test]
    fn geometric_family() {
        assert_eq!(
            geometric_set(&Rational::from_int(2), 3).unwrap(),
            rset(&[2, 4, 8])
        );
        let half = Rational::new(1.into(), 2.into()).unwrap();
        let s = geometric_set(&half, 3).unwrap();
        let expect: Vec<Rational> = [(1i64, 8i64), (1, 4), (1, 2)]
            .iter()
            .map(|&(n, d)| Rational::new(n.into(), d.into()).unwrap())
            .collect();
        assert_eq!(s.as_slice(), &expect[..]);
        assert_eq!(geometric_set(&Rational::from_int(3), 10).unwrap().len(), 10);
        for bad in [0i64, 1, -1] {
            assert!(geometric_set(&Rational::from_int(bad), 3).is_err());
        }
        // i is allowed but its powers cycle
        let s = geometric_set(&GaussianRational::from_ints(0, 1), 9).unwrap();
        assert_eq!(s.len(), 4);
    }

    #[test]
    fn random_family_is_deterministic() {
        let a = random_set(1, 5, 100).unwrap();
        let b = random_set(1, 5, 100).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 5);
        assert!(random_set(7, 10, 4).is_err());
        assert_eq!(random_set(9, 8, 4).unwrap().len(), 8);

        let mut differing = 0;
        for seed in 0..100u64 {
            let x = random_set(2 * seed, 8, 100).unwrap();
            let y = random_set(2 * seed + 1, 8, 100).unwrap();
            if x != y {
                differing += 1;
            }
        }
        assert!(differing >= 99, "only {differing}/100 seed pairs differ");
    }

    #[test]
    fn random_gaussian_family() {
        let a = random_gaussian_set(5, 6, 8).unwrap();
        assert_eq!(a, random_gaussian_set(5, 6, 8).unwrap());
        assert_eq!(a.len(), 6);
        assert!(random_gaussian_set(5, 5, 1).is_err());
    }

    #[test]
    fn affine_images() {
        let a = rset(&[1, 2, 3]);
        assert_eq!(
            affine_image(&a, &Rational::from_int(-1), &Rational::from_int(1)).unwrap(),
            rset(&[-2, -1, 0])
        );
        assert_eq!(
            affine_image(&a, &Rational::from_int(1), &Rational::from_int(-1)).unwrap(),
            rset(&[0, 1, 2])
        );
        assert!(affine_image(&a, &Rational::zero(), &Rational::one()).is_err());
    }

    #[test]
    fn direct_products() {
        let unit = rset(&[0, 1]);
        assert_eq!(direct_product(&unit, &unit).len(), 4);
        let g3 = direct_product(&interval_set(3).unwrap(), &interval_set(3).unwrap());
        assert_eq!(g3.len(), 9);
        let a = rset(&[1, 5]);
        let b = rset(&[2, 3, 7]);
        assert_eq!(direct_product(&a, &b).len(), 6);
    }

    #[test]
    fn canonicalization_from_noisy_input() {
        let noisy = vec![
            Rational::from_int(3),
            Rational::from_int(1),
            Rational::from_int(3),
            Rational::from_int(2),
            Rational::from_int(1),
        ];
        assert_eq!(FiniteScalarSet::from_elements(noisy).unwrap(), rset(&[1, 2, 3]));
        assert!(FiniteScalarSet::<Rational>::from_elements(vec![]).is_err());
    }

    #[test]
    fn set_file_format() {
        let text = "# a comment\n1/2\n-3 # trailing comment\n\n7/3\n";
        let s: FiniteScalarSet<Rational> = FiniteScalarSet::from_text(text).unwrap();
        assert_eq!(s.len(), 3);
        let round = FiniteScalarSet::from_text(&s.to_text()).unwrap();
        assert_eq!(s, round);
        assert!(FiniteScalarSet::<Rational>::from_text("# only comments\n").is_err());

        let g: FiniteScalarSet<GaussianRational> =
            FiniteScalarSet::from_text("1/2+3/4i\n2\n-5i\n").unwrap();
        assert_eq!(g.len(), 3);
        assert!(g.contains(&GaussianRational::from_ints(2, 0)));
    }

    #[test]
    fn tagged_sets_reject_mixed_scalars() {
        let mixed = vec![
            Scalar::Rational(Rational::from_int(1)),
            Scalar::Gaussian(GaussianRational::from_ints(0, 1)),
        ];
        assert!(matches!(
            TaggedSet::from_scalars(mixed),
            Err(Error::MixedFields { .. })
        ));
        let ok = TaggedSet::from_scalars(vec![
            Scalar::Rational(Rational::from_int(2)),
            Scalar::Rational(Rational::from_int(1)),
        ])
        .unwrap();
        assert_eq!(ok.len(), 2);
        assert_eq!(ok.tag(), FieldTag::Rational);
    }
}
