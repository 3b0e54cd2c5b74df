//! Planar incidence geometry over an exact field: canonical lines, the
//! spanned-line spectrum, collinear-triple sums, rich-line counts, and
//! rectangle pseudo-distance sets.

use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::scalar::{Field, Rational};
use crate::set::{FiniteScalarSet, PlanarPointSet};

/// A line αx + βy + γ = 0 in canonical form: integer (or Gaussian
/// integer) coefficients, primitive content, unit-normalized so that two
/// coincident lines always produce identical triples.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalLine<F: Field> {
    coeffs: [F::Coeff; 3],
}

impl<F: Field> CanonicalLine<F> {
    pub fn coefficients(&self) -> &[F::Coeff; 3] {
        &self.coeffs
    }
}

/// The canonical line through two distinct points.
pub fn line_through<F: Field>(p: &(F, F), q: &(F, F)) -> Result<CanonicalLine<F>> {
    if p == q {
        return Err(Error::IdenticalPoints);
    }
    // direction (dx, dy); line is dy·x − dx·y + (dx·p2 − dy·p1) = 0
    let dx = q.0.sub(&p.0);
    let dy = q.1.sub(&p.1);
    let alpha = dy.clone();
    let beta = dx.neg();
    let gamma = dx.mul(&p.1).sub(&dy.mul(&p.0));
    Ok(CanonicalLine { coeffs: F::primitive_triple([alpha, beta, gamma]) })
}

/// Map from each spanned line to the number of points of P on it (m ≥ 2).
#[derive(Debug, Clone)]
pub struct LineSpectrum<F: Field> {
    lines: HashMap<CanonicalLine<F>, u64>,
}

impl<F: Field> LineSpectrum<F> {
    pub fn line_count(&self) -> usize {
        self.lines.len()
    }

    pub fn multiplicity(&self, line: &CanonicalLine<F>) -> Option<u64> {
        self.lines.get(line).copied()
    }

    /// Iterate over point multiplicities m_l (order unspecified).
    pub fn multiplicities(&self) -> impl Iterator<Item = u64> + '_ {
        self.lines.values().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CanonicalLine<F>, u64)> {
        self.lines.iter().map(|(l, &m)| (l, m))
    }

    /// Largest point multiplicity over all spanned lines.
    pub fn max_multiplicity(&self) -> u64 {
        self.multiplicities().max().unwrap_or(0)
    }
}

/// All lines supporting at least two points of P, with multiplicities.
///
/// Every unordered point pair contributes to exactly one canonical line;
/// the multiplicity m is recovered from the pair count t = m(m−1)/2.
/// Memory scales with the number of distinct lines, not with per-line
/// point lists.
pub fn spanned_lines<F: Field>(p: &PlanarPointSet<F>) -> Result<LineSpectrum<F>> {
    if p.len() < 2 {
        return Err(Error::SetTooSmall { required: 2, actual: p.len() });
    }
    let points = p.as_slice();
    let n = points.len();
    let pair_counts = (0..n - 1)
        .into_par_iter()
        .fold(HashMap::<CanonicalLine<F>, u64>::new, |mut acc, i| {
            for j in i + 1..n {
                let line = line_through(&points[i], &points[j])
                    .expect("points in a set are pairwise distinct");
                *acc.entry(line).or_insert(0) += 1;
            }
            acc
        })
        .reduce(HashMap::new, |a, b| {
            if a.len() < b.len() {
                merge_counts(b, a)
            } else {
                merge_counts(a, b)
            }
        });

    fn merge_counts<K: std::hash::Hash + Eq>(
        mut big: HashMap<K, u64>,
        small: HashMap<K, u64>,
    ) -> HashMap<K, u64> {
        for (k, v) in small {
            *big.entry(k).or_insert(0) += v;
        }
        big
    }

    let mut lines = HashMap::with_capacity(pair_counts.len());
    for (line, t) in pair_counts {
        let m = multiplicity_from_pairs(t);
        lines.insert(line, m);
    }
    Ok(LineSpectrum { lines })
}

/// Solve t = m(m−1)/2 for the integer m ≥ 2.
fn multiplicity_from_pairs(t: u64) -> u64 {
    let disc = 1 + 8 * t;
    let mut root = (disc as f64).sqrt() as u64;
    while root * root > disc {
        root -= 1;
    }
    while (root + 1) * (root + 1) <= disc {
        root += 1;
    }
    let m = (1 + root) / 2;
    assert_eq!(m * (m - 1) / 2, t, "pair count {t} is not triangular");
    m
}

/// Σ_l m_l³ over the spanned-line spectrum.
pub fn collinear_cube_sum<F: Field>(p: &PlanarPointSet<F>) -> Result<u64> {
    Ok(spanned_lines(p)?.multiplicities().map(|m| m * m * m).sum())
}

/// Σ_l m_l(m_l−1)(m_l−2): ordered triples of distinct collinear points.
pub fn ordered_collinear_triples<F: Field>(p: &PlanarPointSet<F>) -> Result<u64> {
    Ok(spanned_lines(p)?
        .multiplicities()
        .map(|m| m * (m - 1) * (m - 2))
        .sum())
}

/// Cubic reference path for ordered collinear triples: test every
/// unordered triple with an exact determinant, no line map involved.
/// Used by the verification suites against [`ordered_collinear_triples`].
pub fn collinear_triples_bruteforce<F: Field>(p: &PlanarPointSet<F>) -> u64 {
    let pts = p.as_slice();
    let n = pts.len();
    let mut unordered = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (a, b, c) = (&pts[i], &pts[j], &pts[k]);
                let det = b.0.sub(&a.0).mul(&c.1.sub(&a.1))
                    .sub(&b.1.sub(&a.1).mul(&c.0.sub(&a.0)));
                if det.is_zero() {
                    unordered += 1;
                }
            }
        }
    }
    6 * unordered
}

/// |L_k|: the number of spanned lines containing at least k points.
pub fn rich_lines<F: Field>(p: &PlanarPointSet<F>, k: u64) -> Result<u64> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("rich-line threshold k = {k} must be >= 2")));
    }
    Ok(spanned_lines(p)?.multiplicities().filter(|&m| m >= k).count() as u64)
}

/// One row of the rich-line table: k, |L_k|, and the normalized ratio
/// |L_k|·k³/|P|² as an exact rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RichLineRow {
    pub k: u64,
    pub line_count: u64,
    pub st_ratio: Rational,
}

/// Rich-line table over 2 ≤ k ≤ ⌊√|P|⌋ from a single spectrum pass.
pub fn st_ratio_report<F: Field>(p: &PlanarPointSet<F>) -> Result<Vec<RichLineRow>> {
    if p.len() < 4 {
        return Err(Error::SetTooSmall { required: 4, actual: p.len() });
    }
    let spectrum = spanned_lines(p)?;
    let kmax = (p.len() as f64).sqrt().floor() as u64;
    let p2 = BigInt::from(p.len()) * BigInt::from(p.len());
    let mut rows = Vec::new();
    for k in 2..=kmax {
        let count = spectrum.multiplicities().filter(|&m| m >= k).count() as u64;
        let ratio = Rational::new(BigInt::from(count) * BigInt::from(k).pow(3), p2.clone())
            .expect("|P|² is nonzero");
        rows.push(RichLineRow { k, line_count: count, st_ratio: ratio });
    }
    Ok(rows)
}

/// {R(p,q) : p, q ∈ P} where R is the signed axis-parallel rectangle
/// area (p₁−q₁)(p₂−q₂); includes 0 from p = q.
pub fn rect_distance_set<F: Field>(p: &PlanarPointSet<F>) -> FiniteScalarSet<F> {
    let pts = p.as_slice();
    let mut values = Vec::with_capacity(pts.len() * pts.len());
    for a in pts {
        for b in pts {
            values.push(a.0.sub(&b.0).mul(&a.1.sub(&b.1)));
        }
    }
    FiniteScalarSet::from_elements(values).expect("nonempty point set")
}

/// {R(p,q) : q ∈ P} for a fixed pin p ∈ P.
pub fn pinned_rect_distance<F: Field>(
    p: &PlanarPointSet<F>,
    pin: &(F, F),
) -> Result<FiniteScalarSet<F>> {
    if !p.contains(pin) {
        return Err(Error::PointNotInSet);
    }
    let values = p
        .iter()
        .map(|q| pin.0.sub(&q.0).mul(&pin.1.sub(&q.1)))
        .collect();
    Ok(FiniteScalarSet::from_elements(values).expect("nonempty point set"))
}
