//! Arithmetic-growth quantities: sumsets, product sets, multiplicative
//! energy, the six-variable solution count Q with its exact partition,
//! shifted-energy sums, pinned product-set certificates, and cross-ratio
//! sets.
//!
//! Counting paths come in pairs: a fast path built on multiplicity maps
//! and an independent brute-force oracle (sorted pair products, or direct
//! tuple enumeration) used by the verification suites.

use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::scalar::{Field, Rational};
use crate::set::FiniteScalarSet;

/// Default cap for the quadratic pair-product oracle (|A|·|B| pairs).
pub const DEFAULT_PAIR_CAP: u64 = 10_000;
/// Default cap on |A| for the sextic brute-force oracle of Q.
pub const DEFAULT_Q_BRUTEFORCE_CAP: u64 = 12;

/// Multiplicity map x ↦ r(x) of a generating family of tuples;
/// `total` is the number of tuples, i.e. Σ r(x).
#[derive(Debug, Clone)]
pub struct MultiplicitySpectrum<F: Field> {
    counts: HashMap<F, u64>,
    total: u64,
}

impl<F: Field> MultiplicitySpectrum<F> {
    fn new() -> Self {
        MultiplicitySpectrum { counts: HashMap::new(), total: 0 }
    }

    fn bump(&mut self, value: F) {
        *self.counts.entry(value).or_insert(0) += 1;
        self.total += 1;
    }

    pub fn count(&self, value: &F) -> u64 {
        self.counts.get(value).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    /// Number of distinct values, i.e. the size of the underlying set.
    pub fn support_size(&self) -> usize {
        self.counts.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&F, u64)> {
        self.counts.iter().map(|(k, &v)| (k, v))
    }

    /// Σ r(x)² — the energy associated with the spectrum.
    pub fn sum_squared_counts(&self) -> u64 {
        self.counts.values().map(|&c| c * c).sum()
    }
}

/// {a + b : a ∈ A, b ∈ B}.
pub fn sumset<F: Field>(
    a: &FiniteScalarSet<F>,
    b: &FiniteScalarSet<F>,
) -> FiniteScalarSet<F> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a.iter() {
        for y in b.iter() {
            out.push(x.add(y));
        }
    }
    FiniteScalarSet::from_elements(out).expect("sumset of nonempty sets is nonempty")
}

/// {a · b : a ∈ A, b ∈ B}.
pub fn productset<F: Field>(
    a: &FiniteScalarSet<F>,
    b: &FiniteScalarSet<F>,
) -> FiniteScalarSet<F> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a.iter() {
        for y in b.iter() {
            out.push(x.mul(y));
        }
    }
    FiniteScalarSet::from_elements(out).expect("productset of nonempty sets is nonempty")
}

/// The map x ↦ #{(a, b) ∈ A×B : ab = x}; total is |A|·|B|.
pub fn product_spectrum<F: Field>(
    a: &FiniteScalarSet<F>,
    b: &FiniteScalarSet<F>,
) -> MultiplicitySpectrum<F> {
    let mut spec = MultiplicitySpectrum::new();
    for x in a.iter() {
        for y in b.iter() {
            spec.bump(x.mul(y));
        }
    }
    spec
}

/// Multiplicative energy E*(A,B) = #{(a,a',b,b') : ab = a'b'}, computed
/// as Σ r(x)² over the product spectrum.
pub fn mult_energy<F: Field>(a: &FiniteScalarSet<F>, b: &FiniteScalarSet<F>) -> u64 {
    product_spectrum(a, b).sum_squared_counts()
}

/// Independent oracle for E*(A,B): sort the |A|·|B| pair products and sum
/// squared run lengths. No associative map is involved.
pub fn mult_energy_bruteforce<F: Field>(
    a: &FiniteScalarSet<F>,
    b: &FiniteScalarSet<F>,
    pair_cap: u64,
) -> Result<u64> {
    let pairs = (a.len() as u64) * (b.len() as u64);
    if pairs > pair_cap {
        return Err(Error::CapExceeded { what: "energy oracle pairs", limit: pair_cap, requested: pairs });
    }
    let mut products = Vec::with_capacity(pairs as usize);
    for x in a.iter() {
        for y in b.iter() {
            products.push(x.mul(y));
        }
    }
    products.sort();
    let mut energy = 0u64;
    let mut run = 0u64;
    for i in 0..products.len() {
        run += 1;
        if i + 1 == products.len() || products[i + 1] != products[i] {
            energy += run * run;
            run = 0;
        }
    }
    Ok(energy)
}

/// The Cauchy–Schwarz lower bound |A|²|B|²/|AB| for E*(A,B), exact.
pub fn cs_bound<F: Field>(a: &FiniteScalarSet<F>, b: &FiniteScalarSet<F>) -> Rational {
    let ab = productset(a, b);
    let num = BigInt::from(a.len()) * BigInt::from(a.len())
        * BigInt::from(b.len()) * BigInt::from(b.len());
    Rational::new(num, BigInt::from(ab.len())).expect("product set is nonempty")
}

/// Which additive shift family a shifted-energy quantity ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ShiftSign {
    /// Shifted sets of the form a − B.
    Subtractive,
    /// Shifted sets of the form a + B.
    Additive,
}

impl ShiftSign {
    fn shifted<F: Field>(self, a: &F, b: &FiniteScalarSet<F>) -> Vec<F> {
        match self {
            ShiftSign::Subtractive => b.iter().map(|x| a.sub(x)).collect(),
            ShiftSign::Additive => b.iter().map(|x| a.add(x)).collect(),
        }
    }
}

/// Exact partition of the solutions of (a−b)(a'−c') = (a−c)(a'−b') over A⁶:
/// both sides zero, both sides nonzero with b = c, and the rest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct QDecomposition {
    pub q_total: u64,
    pub q_zero: u64,
    pub q_diag: u64,
    pub q_star: u64,
}

impl QDecomposition {
    /// Rebuild the partition from the total count.
    ///
    /// With both sides nonzero and b = c the equation forces b' = c', so
    /// the diagonal class has n²(n−1)² tuples. Both sides vanish iff
    /// (a=b or a'=c') and (a=c or a'=b'); inclusion–exclusion over the
    /// four conjunctions gives 4n⁴ − 4n³ + n² = n²(2n−1)² tuples.
    pub fn from_total(n: u64, q_total: u64) -> Self {
        let q_zero = n * n * (2 * n - 1) * (2 * n - 1);
        let q_diag = n * n * (n - 1) * (n - 1);
        let q_star = q_total
            .checked_sub(q_zero + q_diag)
            .expect("q partition must not exceed the total");
        QDecomposition { q_total, q_zero, q_diag, q_star }
    }
}

/// Fast path for the Q decomposition: the total is the subtractive
/// shifted-energy sum Σ_{a,a'} E*(a−A, a'−A) (the shift x ↦ a−x is a
/// bijection of A onto a−A, matching six-tuples to energy quadruples),
/// and the zero/diagonal classes have closed forms.
pub fn count_q<F: Field>(a: &FiniteScalarSet<F>) -> QDecomposition {
    let scan = shifted_energy_scan(a, ShiftSign::Subtractive);
    QDecomposition::from_total(a.len() as u64, scan.energy_sum)
}

/// Brute-force oracle for the Q decomposition: direct enumeration of all
/// |A|⁶ tuples with exact arithmetic. Errors when |A| exceeds the cap.
pub fn count_q_bruteforce<F: Field>(
    a: &FiniteScalarSet<F>,
    cap: u64,
) -> Result<QDecomposition> {
    let n = a.len() as u64;
    if n > cap {
        return Err(Error::CapExceeded { what: "Q oracle set size", limit: cap, requested: n });
    }
    let n = a.len();
    // difference matrix d[i][j] = a_i − a_j
    let elems = a.as_slice();
    let diff: Vec<Vec<F>> = elems
        .iter()
        .map(|x| elems.iter().map(|y| x.sub(y)).collect())
        .collect();
    let zero = F::zero();
    let mut q = QDecomposition { q_total: 0, q_zero: 0, q_diag: 0, q_star: 0 };
    for ia in 0..n {
        for ia2 in 0..n {
            for ib in 0..n {
                for ic in 0..n {
                    for ib2 in 0..n {
                        for ic2 in 0..n {
                            let lhs = diff[ia][ib].mul(&diff[ia2][ic2]);
                            let rhs = diff[ia][ic].mul(&diff[ia2][ib2]);
                            if lhs == rhs {
                                q.q_total += 1;
                                if lhs == zero {
                                    q.q_zero += 1;
                                } else if ib == ic {
                                    q.q_diag += 1;
                                } else {
                                    q.q_star += 1;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(q)
}

/// One full scan of the (a, a') shift grid: the energy sum together with
/// the minimizing pair under the canonical lexicographic tie-break.
#[derive(Debug, Clone)]
pub struct ShiftedEnergyScan<F: Field> {
    pub energy_sum: u64,
    pub min_energy: u64,
    pub min_pair: (F, F),
}

/// Scan all |A|² shift pairs, computing E*(a∓A, a'∓A) per pair via a
/// multiplicity map. The reduction (sum, lexicographic argmin) is
/// deterministic for any partition of the pair grid across workers.
pub fn shifted_energy_scan<F: Field>(
    a: &FiniteScalarSet<F>,
    sign: ShiftSign,
) -> ShiftedEnergyScan<F> {
    let elems = a.as_slice();
    let shifted: Vec<Vec<F>> = elems.iter().map(|x| sign.shifted(x, a)).collect();
    let n = elems.len();

    let merge = |x: (u64, u64, usize, usize), y: (u64, u64, usize, usize)| {
        let sum = x.0 + y.0;
        let best = if (x.1, x.2, x.3) <= (y.1, y.2, y.3) { (x.1, x.2, x.3) } else { (y.1, y.2, y.3) };
        (sum, best.0, best.1, best.2)
    };

    let (sum, min_e, mi, mj) = (0..n * n)
        .into_par_iter()
        .fold(
            || (0u64, u64::MAX, usize::MAX, usize::MAX, HashMap::<F, u64>::new()),
            |(sum, min_e, mi, mj, mut scratch), idx| {
                let (i, j) = (idx / n, idx % n);
                let e = pair_energy(&shifted[i], &shifted[j], &mut scratch);
                let acc = merge((sum, min_e, mi, mj), (e, e, i, j));
                (acc.0, acc.1, acc.2, acc.3, scratch)
            },
        )
        .map(|(sum, min_e, mi, mj, _)| (sum, min_e, mi, mj))
        .reduce(
            || (0u64, u64::MAX, usize::MAX, usize::MAX),
            merge,
        );

    ShiftedEnergyScan {
        energy_sum: sum,
        min_energy: min_e,
        min_pair: (elems[mi].clone(), elems[mj].clone()),
    }
}

fn pair_energy<F: Field>(x: &[F], y: &[F], scratch: &mut HashMap<F, u64>) -> u64 {
    scratch.clear();
    for u in x {
        for v in y {
            *scratch.entry(u.mul(v)).or_insert(0) += 1;
        }
    }
    scratch.values().map(|&c| c * c).sum()
}

/// Σ_{a,a'∈A} E*(a∓B, a'∓B), computed pairwise via product spectra.
pub fn shifted_energy_sum<F: Field>(
    a: &FiniteScalarSet<F>,
    b: &FiniteScalarSet<F>,
    sign: ShiftSign,
) -> u64 {
    let elems = a.as_slice();
    let shifted: Vec<Vec<F>> = elems.iter().map(|x| sign.shifted(x, b)).collect();
    let n = elems.len();
    (0..n * n)
        .into_par_iter()
        .fold(
            || (0u64, HashMap::<F, u64>::new()),
            |(sum, mut scratch), idx| {
                let e = pair_energy(&shifted[idx / n], &shifted[idx % n], &mut scratch);
                (sum + e, scratch)
            },
        )
        .map(|(sum, _)| sum)
        .sum()
}

/// Witness for the pinned product-set bound: the pair (a, a') minimizing
/// the shifted energy, with the pinned product set size and the exact
/// Cauchy–Schwarz lower bound |A|⁴ / energy.
#[derive(Debug, Clone)]
pub struct PinnedCertificate<F: Field> {
    pub a: F,
    pub a_prime: F,
    pub energy: u64,
    pub product_set_size: u64,
    pub cs_lower_bound: Rational,
}

/// Extract the minimizing shift pair; ties break lexicographically under
/// the canonical order on (a, a').
pub fn extract_pinned_pair<F: Field>(
    a: &FiniteScalarSet<F>,
    sign: ShiftSign,
) -> Result<PinnedCertificate<F>> {
    if a.len() < 2 {
        return Err(Error::SetTooSmall { required: 2, actual: a.len() });
    }
    let scan = shifted_energy_scan(a, sign);
    Ok(certificate_for_pair(a, sign, scan.min_pair, scan.min_energy))
}

pub(crate) fn certificate_for_pair<F: Field>(
    a: &FiniteScalarSet<F>,
    sign: ShiftSign,
    pair: (F, F),
    energy: u64,
) -> PinnedCertificate<F> {
    let x = FiniteScalarSet::from_elements(sign.shifted(&pair.0, a))
        .expect("shifted set is nonempty");
    let y = FiniteScalarSet::from_elements(sign.shifted(&pair.1, a))
        .expect("shifted set is nonempty");
    let size = productset(&x, &y).len() as u64;
    let n4 = BigInt::from(a.len()).pow(4);
    let bound = Rational::new(n4, BigInt::from(energy)).expect("energy is positive");
    debug_assert!(Rational::from_bigint(BigInt::from(size)) >= bound);
    PinnedCertificate {
        a: pair.0,
        a_prime: pair.1,
        energy,
        product_set_size: size,
        cs_lower_bound: bound,
    }
}

/// {(a−b)/(a−c) : a, b, c ∈ A, a ≠ c}.
pub fn cross_ratio_set<F: Field>(a: &FiniteScalarSet<F>) -> Result<FiniteScalarSet<F>> {
    Ok(cross_ratio_values(a)?.0)
}

/// The representation-count map n(x) over the same triples;
/// Σ_x n(x) = |A|³ − |A|².
pub fn cross_ratio_spectrum<F: Field>(
    a: &FiniteScalarSet<F>,
) -> Result<MultiplicitySpectrum<F>> {
    Ok(cross_ratio_values(a)?.1)
}

fn cross_ratio_values<F: Field>(
    a: &FiniteScalarSet<F>,
) -> Result<(FiniteScalarSet<F>, MultiplicitySpectrum<F>)> {
    if a.len() < 2 {
        return Err(Error::SetTooSmall { required: 2, actual: a.len() });
    }
    let mut spec = MultiplicitySpectrum::new();
    for x in a.iter() {
        for z in a.iter() {
            if x == z {
                continue;
            }
            let den = x.sub(z);
            for y in a.iter() {
                let value = x.sub(y).div(&den).expect("denominator is nonzero");
                spec.bump(value);
            }
        }
    }
    let set = FiniteScalarSet::from_elements(spec.counts.keys().cloned().collect())
        .expect("spectrum of a |A| >= 2 set is nonempty");
    Ok((set, spec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussianRational;
    use crate::set::{affine_image, interval_set, random_set};

    fn rset(values: &[i64]) -> FiniteScalarSet<Rational> {
        FiniteScalarSet::from_ints(values).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into()).unwrap()
    }

    #[test]
    fn sumsets() {
        assert_eq!(sumset(&rset(&[0, 1]), &rset(&[0, 1])), rset(&[0, 1, 2]));
        let i3 = interval_set(3).unwrap();
        assert_eq!(sumset(&i3, &i3), rset(&[2, 3, 4, 5, 6]));
        // frozen from the enumeration of all 9 pairs
        assert_eq!(sumset(&rset(&[1, 2, 4]), &rset(&[1, 2, 4])), rset(&[2, 3, 4, 5, 6, 8]));
    }

    #[test]
    fn productsets() {
        // frozen from the enumeration of all 9 pairs
        assert_eq!(
            productset(&rset(&[0, 1, 2]), &rset(&[-1, 0, 1])),
            rset(&[-2, -1, 0, 1, 2])
        );
        let a = rset(&[2, 3, 5]);
        assert_eq!(productset(&a, &rset(&[1])), a);
        assert_eq!(productset(&a, &rset(&[0])), rset(&[0]));
    }

    #[test]
    fn product_spectra() {
        let s = product_spectrum(&rset(&[0, 1]), &rset(&[0, 1]));
        assert_eq!(s.count(&q(0, 1)), 3);
        assert_eq!(s.count(&q(1, 1)), 1);
        assert_eq!(s.total(), 4);

        let s = product_spectrum(&rset(&[1, 2]), &rset(&[1, 2]));
        assert_eq!(s.count(&q(1, 1)), 1);
        assert_eq!(s.count(&q(2, 1)), 2);
        assert_eq!(s.count(&q(4, 1)), 1);

        for (a, b) in [(rset(&[1, 3, 9]), rset(&[2, 5])), (rset(&[-1, 0, 1]), rset(&[7]))] {
            assert_eq!(product_spectrum(&a, &b).total() as usize, a.len() * b.len());
        }
    }

    #[test]
    fn energies() {
        assert_eq!(mult_energy(&rset(&[0, 1]), &rset(&[0, 1])), 10);
        assert_eq!(mult_energy(&rset(&[1, 2]), &rset(&[1, 2])), 6);
        assert_eq!(mult_energy(&rset(&[1]), &rset(&[1])), 1);
        // frozen: E*({0,1,2},{-1,0,1}) enumerated independently
        assert_eq!(mult_energy(&rset(&[0, 1, 2]), &rset(&[-1, 0, 1])), 29);
    }

    #[test]
    fn energy_oracle_agrees_with_fast_path() {
        assert_eq!(
            mult_energy_bruteforce(&rset(&[0, 1]), &rset(&[0, 1]), DEFAULT_PAIR_CAP).unwrap(),
            10
        );
        for seed in 0..100u64 {
            let a = random_set(seed, 2 + seed % 9, 30).unwrap();
            let b = random_set(seed + 1000, 2 + (seed * 7) % 9, 30).unwrap();
            let fast = mult_energy(&a, &b);
            let oracle = mult_energy_bruteforce(&a, &b, DEFAULT_PAIR_CAP).unwrap();
            assert_eq!(fast, oracle, "seed {seed}");
            assert_eq!(mult_energy(&b, &a), fast, "symmetry at seed {seed}");
        }
        assert!(matches!(
            mult_energy_bruteforce(&rset(&[1, 2]), &rset(&[1, 2]), 3),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn cs_bounds() {
        let a = rset(&[1, 2]);
        assert_eq!(cs_bound(&a, &a), q(16, 3));
        assert!(Rational::from_int(6) >= cs_bound(&a, &a));
        let one = rset(&[1]);
        assert_eq!(cs_bound(&one, &one), q(1, 1));
        assert_eq!(mult_energy(&one, &one), 1);
        for seed in 0..200u64 {
            let a = random_set(seed, 2 + seed % 7, 40).unwrap();
            let b = random_set(seed + 999, 2 + (seed * 3) % 7, 40).unwrap();
            let e = Rational::from_bigint(BigInt::from(mult_energy(&a, &b)));
            assert!(e >= cs_bound(&a, &b), "seed {seed}");
        }
    }

    #[test]
    fn q_regression_values() {
        // frozen from the sextic brute-force enumeration
        let cases: [(&[i64], QDecomposition); 4] = [
            (&[5], QDecomposition { q_total: 1, q_zero: 1, q_diag: 0, q_star: 0 }),
            (&[0, 1], QDecomposition { q_total: 40, q_zero: 36, q_diag: 4, q_star: 0 }),
            (&[0, 1, 2], QDecomposition { q_total: 273, q_zero: 225, q_diag: 36, q_star: 12 }),
            (&[0, 1, 2, 3], QDecomposition { q_total: 1000, q_zero: 784, q_diag: 144, q_star: 72 }),
        ];
        for (values, expected) in cases {
            let a = rset(values);
            assert_eq!(count_q(&a), expected, "fast path on {values:?}");
            assert_eq!(
                count_q_bruteforce(&a, DEFAULT_Q_BRUTEFORCE_CAP).unwrap(),
                expected,
                "oracle on {values:?}"
            );
        }
        assert!(matches!(
            count_q_bruteforce(&interval_set(13).unwrap(), 12),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn q_fast_path_matches_oracle_on_random_sets() {
        for seed in 0..12u64 {
            let a = random_set(seed * 31, 2 + seed % 7, 25).unwrap();
            let fast = count_q(&a);
            let oracle = count_q_bruteforce(&a, DEFAULT_Q_BRUTEFORCE_CAP).unwrap();
            assert_eq!(fast, oracle, "seed {seed}");
        }
    }

    #[test]
    fn shifted_energy_sums() {
        let a = rset(&[0, 1]);
        assert_eq!(shifted_energy_sum(&a, &a, ShiftSign::Subtractive), 40);
        assert_eq!(count_q(&a).q_total, 40);

        for seed in 0..10u64 {
            let a = random_set(seed + 7, 2 + seed % 5, 20).unwrap();
            let b = random_set(seed + 77, 2 + (seed * 3) % 5, 20).unwrap();
            let minus_b = affine_image(&b, &Rational::from_int(-1), &Rational::zero()).unwrap();
            assert_eq!(
                shifted_energy_sum(&a, &b, ShiftSign::Additive),
                shifted_energy_sum(&a, &minus_b, ShiftSign::Subtractive),
                "seed {seed}"
            );
        }

        for seed in 0..8u64 {
            let a = random_set(seed * 13 + 1, 2 + seed % 7, 30).unwrap();
            assert_eq!(
                shifted_energy_sum(&a, &a, ShiftSign::Subtractive),
                count_q_bruteforce(&a, DEFAULT_Q_BRUTEFORCE_CAP).unwrap().q_total,
                "seed {seed}"
            );
        }
    }

    #[test]
    fn pinned_pair_extraction() {
        let a = rset(&[1, 2]);
        let cert = extract_pinned_pair(&a, ShiftSign::Subtractive).unwrap();
        assert_eq!(cert.a, q(1, 1));
        assert_eq!(cert.a_prime, q(1, 1));
        assert_eq!(cert.energy, 10);
        assert_eq!(cert.product_set_size, 2);
        assert_eq!(cert.cs_lower_bound, q(16, 10));

        let a8 = interval_set(8).unwrap();
        let sum = shifted_energy_sum(&a8, &a8, ShiftSign::Subtractive);
        for sign in [ShiftSign::Subtractive, ShiftSign::Additive] {
            let cert = extract_pinned_pair(&a8, sign).unwrap();
            let size = Rational::from_bigint(BigInt::from(cert.product_set_size));
            assert!(size >= cert.cs_lower_bound);
            if sign == ShiftSign::Subtractive {
                assert!(cert.energy * 64 <= sum);
                // frozen from the independent scan of all 64 shift pairs
                assert_eq!(cert.energy, 312);
                assert_eq!((cert.a, cert.a_prime), (q(1, 1), q(3, 1)));
                assert_eq!(cert.product_set_size, 34);
                assert_eq!(sum, 21424);
            }
        }

        assert!(matches!(
            extract_pinned_pair(&rset(&[3]), ShiftSign::Subtractive),
            Err(Error::SetTooSmall { .. })
        ));
    }

    #[test]
    fn cross_ratios() {
        let a = rset(&[0, 1]);
        assert_eq!(cross_ratio_set(&a).unwrap(), rset(&[0, 1]));

        let a = rset(&[0, 1, 2]);
        let cr = cross_ratio_set(&a).unwrap();
        assert_eq!(cr.len(), 5);
        let expected =
            FiniteScalarSet::from_elements(vec![q(-1, 1), q(0, 1), q(1, 2), q(1, 1), q(2, 1)])
                .unwrap();
        assert_eq!(cr, expected);

        for seed in 0..20u64 {
            let a = random_set(seed, 2 + seed % 6, 25).unwrap();
            let cr = cross_ratio_set(&a).unwrap();
            assert!(cr.contains(&Rational::zero()));
            assert!(cr.contains(&Rational::one()));
            let spec = cross_ratio_spectrum(&a).unwrap();
            let n = a.len() as u64;
            assert_eq!(spec.total(), n * n * n - n * n, "seed {seed}");
            assert_eq!(spec.support_size(), cr.len());
        }

        assert!(cross_ratio_set(&rset(&[7])).is_err());
    }

    #[test]
    fn cross_ratio_second_moment_below_q() {
        // footnote relation: Σ n(x)² = Q − #(solutions with a=c or a'=c'),
        // so the second moment is strictly below q_total
        for seed in [2u64, 5, 11] {
            let a = random_set(seed, 2 + seed % 7, 20).unwrap();
            let spec = cross_ratio_spectrum(&a).unwrap();
            let second: u64 = spec.iter().map(|(_, c)| c * c).sum();
            let q = count_q_bruteforce(&a, DEFAULT_Q_BRUTEFORCE_CAP).unwrap();
            assert!(second < q.q_total, "seed {seed}");
            // exact difference, counted directly over A⁶
            let elems: Vec<Rational> = a.iter().cloned().collect();
            let mut excluded = 0u64;
            for x in &elems {
                for x2 in &elems {
                    for b in &elems {
                        for b2 in &elems {
                            for c in &elems {
                                for c2 in &elems {
                                    let lhs = x.sub(b).mul(&x2.sub(c2));
                                    let rhs = x.sub(c).mul(&x2.sub(b2));
                                    if lhs == rhs && (x == c || x2 == c2) {
                                        excluded += 1;
                                    }
                                }
                            }
                        }
                    }
                }
            }
            assert_eq!(second, q.q_total - excluded, "seed {seed}");
        }
    }

    #[test]
    fn gaussian_counts_match_rational_on_zero_imaginary_sets() {
        for seed in [1u64, 4, 9] {
            let a = random_set(seed, 2 + seed % 5, 15).unwrap();
            let g = a.to_gaussian();
            assert_eq!(count_q(&a).q_total, count_q(&g).q_total, "seed {seed}");
            assert_eq!(mult_energy(&a, &a), mult_energy(&g, &g));
            assert_eq!(
                cross_ratio_set(&a).unwrap().len(),
                cross_ratio_set(&g).unwrap().len()
            );
        }
    }

    #[test]
    fn gaussian_q_regression() {
        // frozen from the sextic brute-force enumeration over ℚ(i)
        let a = FiniteScalarSet::from_elements(vec![
            GaussianRational::from_ints(0, 0),
            GaussianRational::from_ints(1, 0),
            GaussianRational::from_ints(0, 1),
        ])
        .unwrap();
        let expected = QDecomposition { q_total: 267, q_zero: 225, q_diag: 36, q_star: 6 };
        assert_eq!(count_q(&a), expected);
        assert_eq!(count_q_bruteforce(&a, 12).unwrap(), expected);

        let b = FiniteScalarSet::from_elements(vec![
            GaussianRational::from_ints(0, 0),
            GaussianRational::from_ints(1, 0),
            GaussianRational::from_ints(0, 1),
            GaussianRational::from_ints(1, 1),
        ])
        .unwrap();
        let expected = QDecomposition { q_total: 1024, q_zero: 784, q_diag: 144, q_star: 96 };
        assert_eq!(count_q(&b), expected);
        assert_eq!(count_q_bruteforce(&b, 12).unwrap(), expected);
    }
}
