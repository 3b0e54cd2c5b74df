//! Built-in verification suites: exact identities, inequality
//! certificates, rational/Gaussian parity, and fast-vs-oracle agreement,
//! run over fixed seeded corpora.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::Error;
use crate::growth::{
    self, ShiftSign, DEFAULT_PAIR_CAP, DEFAULT_Q_BRUTEFORCE_CAP,
};
use crate::incidence;
use crate::scalar::Rational;
use crate::set::{self, FiniteScalarSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Identities,
    Inequalities,
    Parity,
    Oracles,
}

impl Suite {
    pub const ALL: [Suite; 4] = [
        Suite::Identities,
        Suite::Inequalities,
        Suite::Parity,
        Suite::Oracles,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Inequalities => "inequalities",
            Suite::Parity => "parity",
            Suite::Oracles => "oracles",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "identities" => Ok(Suite::Identities),
            "inequalities" => Ok(Suite::Inequalities),
            "parity" => Ok(Suite::Parity),
            "oracles" => Ok(Suite::Oracles),
            other => Err(Error::InvalidParameter(format!(
                "unknown suite {other:?}; expected identities|inequalities|parity|oracles"
            ))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Result of one named check over the whole corpus.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    /// On failure: the offending set, seed, and quantity.
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct SuiteSummary {
    pub suite: Suite,
    pub checks: Vec<CheckOutcome>,
}

impl SuiteSummary {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// A corpus entry: a label (family and seed) plus the set itself.
pub struct CorpusSet {
    pub label: String,
    pub set: FiniteScalarSet<Rational>,
}

/// The fixed mixed corpus: 50 seeded random sets with 2 ≤ |A| ≤ 8,
/// intervals [2]..[8], and two geometric families.
pub fn standard_corpus() -> Vec<CorpusSet> {
    let mut corpus = Vec::new();
    for seed in 1..=50u64 {
        let n = 2 + seed % 7;
        let set = set::random_set(seed, n, 50).expect("feasible random request");
        corpus.push(CorpusSet { label: format!("random(seed={seed},n={n},bound=50)"), set });
    }
    for n in 2..=8u64 {
        corpus.push(CorpusSet {
            label: format!("interval(n={n})"),
            set: set::interval_set(n).expect("n >= 1"),
        });
    }
    for n in 2..=6u64 {
        corpus.push(CorpusSet {
            label: format!("geometric(base=2,n={n})"),
            set: set::geometric_set(&Rational::from_int(2), n).expect("valid base"),
        });
    }
    let three_halves = Rational::new(BigInt::from(3), BigInt::from(2)).expect("nonzero");
    for n in 3..=5u64 {
        corpus.push(CorpusSet {
            label: format!("geometric(base=3/2,n={n})"),
            set: set::geometric_set(&three_halves, n).expect("valid base"),
        });
    }
    corpus
}

struct Check {
    name: String,
    failures: Vec<String>,
}

impl Check {
    fn new(name: &str) -> Self {
        Check { name: name.to_string(), failures: Vec::new() }
    }

    fn expect(&mut self, label: &str, ok: bool, detail: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(format!("{label}: {}", detail()));
        }
    }

    fn outcome(self) -> CheckOutcome {
        CheckOutcome {
            passed: self.failures.is_empty(),
            detail: self.failures.join("; "),
            name: self.name,
        }
    }
}

/// Run one named suite over the standard corpus.
pub fn run_suite(suite: Suite) -> SuiteSummary {
    let corpus = standard_corpus();
    let checks = match suite {
        Suite::Identities => identities(&corpus),
        Suite::Inequalities => inequalities(&corpus),
        Suite::Parity => parity(&corpus),
        Suite::Oracles => oracles(&corpus),
    };
    SuiteSummary { suite, checks }
}

fn identities(corpus: &[CorpusSet]) -> Vec<CheckOutcome> {
    let mut q_vs_energy = Check::new("q_total = Σ E*(a−A, a'−A)");
    let mut partition = Check::new("q_total = q_zero + q_diag + q_star with closed forms");
    let mut cross_total = Check::new("Σ n(x) = |A|³ − |A|²");
    let mut add_sub = Check::new("additive sum = subtractive sum over −A");
    let mut pair_identity = Check::new("Σ C(m_l, 2) = C(|P|, 2) on A×A");

    for entry in corpus {
        let a = &entry.set;
        let n = a.len() as u64;
        let q = growth::count_q(a);
        let esum = growth::shifted_energy_sum(a, a, ShiftSign::Subtractive);
        q_vs_energy.expect(&entry.label, q.q_total == esum, || {
            format!("q_total {} vs energy sum {esum}", q.q_total)
        });
        partition.expect(
            &entry.label,
            q.q_total == q.q_zero + q.q_diag + q.q_star
                && q.q_diag == n * n * (n - 1) * (n - 1)
                && q.q_zero == n * n * (2 * n - 1) * (2 * n - 1),
            || format!("{q:?}"),
        );
        let spec = growth::cross_ratio_spectrum(a).expect("|A| >= 2");
        cross_total.expect(&entry.label, spec.total() == n * n * n - n * n, || {
            format!("Σ n(x) = {}", spec.total())
        });
        let neg = set::affine_image(a, &Rational::from_int(-1), &Rational::zero())
            .expect("-1 is nonzero");
        let add = growth::shifted_energy_sum(a, a, ShiftSign::Additive);
        let sub_neg = growth::shifted_energy_sum(a, &neg, ShiftSign::Subtractive);
        add_sub.expect(&entry.label, add == sub_neg, || format!("{add} vs {sub_neg}"));

        let p = set::direct_product(a, a);
        let spectrum = incidence::spanned_lines(&p).expect("|P| >= 2");
        let pair_total: u64 = spectrum.multiplicities().map(|m| m * (m - 1) / 2).sum();
        let np = p.len() as u64;
        pair_identity.expect(&entry.label, pair_total == np * (np - 1) / 2, || {
            format!("pairs {pair_total} vs C({np},2)")
        });
    }

    vec![
        q_vs_energy.outcome(),
        partition.outcome(),
        cross_total.outcome(),
        add_sub.outcome(),
        pair_identity.outcome(),
    ]
}

fn inequalities(corpus: &[CorpusSet]) -> Vec<CheckOutcome> {
    let mut cs = Check::new("E*(A,A) ≥ |A|⁴/|AA|");
    let mut cert = Check::new("pinned certificate: size ≥ |A|⁴/energy, energy·|A|² ≤ Σ");
    let mut proof_chain = Check::new("q_star ≤ ordered collinear triples ≤ Σ m³ on A×A");
    let mut second_moment = Check::new("Σ n(x)² < q_total");
    let mut max_mult = Check::new("no spanned line of A×A holds more than |A| points");

    for entry in corpus {
        let a = &entry.set;
        let n = a.len() as u64;
        let energy = growth::mult_energy(a, a);
        cs.expect(
            &entry.label,
            Rational::from_bigint(BigInt::from(energy)) >= growth::cs_bound(a, a),
            || format!("E* {energy} below CS bound"),
        );

        for sign in [ShiftSign::Subtractive, ShiftSign::Additive] {
            let c = growth::extract_pinned_pair(a, sign).expect("|A| >= 2");
            let esum = growth::shifted_energy_sum(a, a, sign);
            cert.expect(
                &entry.label,
                Rational::from_bigint(BigInt::from(c.product_set_size)) >= c.cs_lower_bound
                    && c.energy * n * n <= esum,
                || format!("sign {sign:?}: energy {} size {}", c.energy, c.product_set_size),
            );
        }

        let q = growth::count_q(a);
        let p = set::direct_product(a, a);
        let triples = incidence::ordered_collinear_triples(&p).expect("|P| >= 2");
        let cubes = incidence::collinear_cube_sum(&p).expect("|P| >= 2");
        proof_chain.expect(&entry.label, q.q_star <= triples && triples <= cubes, || {
            format!("q_star {} triples {triples} cubes {cubes}", q.q_star)
        });

        let spec = growth::cross_ratio_spectrum(a).expect("|A| >= 2");
        let second: u64 = spec.iter().map(|(_, c)| c * c).sum();
        second_moment.expect(&entry.label, second < q.q_total, || {
            format!("Σ n² = {second} vs q_total {}", q.q_total)
        });

        let spectrum = incidence::spanned_lines(&p).expect("|P| >= 2");
        max_mult.expect(&entry.label, spectrum.max_multiplicity() <= n, || {
            format!("max multiplicity {}", spectrum.max_multiplicity())
        });
    }

    vec![
        cs.outcome(),
        cert.outcome(),
        proof_chain.outcome(),
        second_moment.outcome(),
        max_mult.outcome(),
    ]
}

fn parity(corpus: &[CorpusSet]) -> Vec<CheckOutcome> {
    let mut counts = Check::new("all counts equal on the zero-imaginary Gaussian path");

    for entry in corpus {
        let a = &entry.set;
        let g = a.to_gaussian();
        let (qa, qg) = (growth::count_q(a), growth::count_q(&g));
        counts.expect(&entry.label, qa == qg, || format!("Q {qa:?} vs {qg:?}"));
        counts.expect(
            &entry.label,
            growth::mult_energy(a, a) == growth::mult_energy(&g, &g),
            || "multiplicative energy differs".into(),
        );
        for sign in [ShiftSign::Subtractive, ShiftSign::Additive] {
            let ca = growth::extract_pinned_pair(a, sign).expect("|A| >= 2");
            let cg = growth::extract_pinned_pair(&g, sign).expect("|A| >= 2");
            counts.expect(
                &entry.label,
                ca.energy == cg.energy && ca.product_set_size == cg.product_set_size,
                || format!("pinned certificate differs under {sign:?}"),
            );
        }
        counts.expect(
            &entry.label,
            growth::cross_ratio_set(a).expect("|A| >= 2").len()
                == growth::cross_ratio_set(&g).expect("|A| >= 2").len(),
            || "cross-ratio set size differs".into(),
        );
        let (pa, pg) = (set::direct_product(a, a), set::direct_product(&g, &g));
        counts.expect(
            &entry.label,
            incidence::collinear_cube_sum(&pa).unwrap() == incidence::collinear_cube_sum(&pg).unwrap()
                && incidence::ordered_collinear_triples(&pa).unwrap()
                    == incidence::ordered_collinear_triples(&pg).unwrap(),
            || "collinear counts differ".into(),
        );
        counts.expect(
            &entry.label,
            incidence::rect_distance_set(&pa).len() == incidence::rect_distance_set(&pg).len(),
            || "rect distance size differs".into(),
        );
    }

    vec![counts.outcome()]
}

fn oracles(corpus: &[CorpusSet]) -> Vec<CheckOutcome> {
    let mut energy = Check::new("mult_energy = sorted-products oracle");
    let mut qcount = Check::new("count_q fast path = sextic oracle");
    let mut collinear = Check::new("ordered collinear triples = determinant oracle");
    let mut rect = Check::new("rect distances on A×A = (A−A)(A−A)");

    for entry in corpus {
        let a = &entry.set;
        let fast = growth::mult_energy(a, a);
        let oracle = growth::mult_energy_bruteforce(a, a, DEFAULT_PAIR_CAP)
            .expect("corpus sets are under the pair cap");
        energy.expect(&entry.label, fast == oracle, || format!("{fast} vs {oracle}"));

        let qf = growth::count_q(a);
        let qo = growth::count_q_bruteforce(a, DEFAULT_Q_BRUTEFORCE_CAP)
            .expect("corpus sets are under the Q cap");
        qcount.expect(&entry.label, qf == qo, || format!("{qf:?} vs {qo:?}"));

        let p = set::direct_product(a, a);
        if p.len() <= 36 {
            let fast = incidence::ordered_collinear_triples(&p).expect("|P| >= 2");
            let oracle = incidence::collinear_triples_bruteforce(&p);
            collinear.expect(&entry.label, fast == oracle, || format!("{fast} vs {oracle}"));
        }

        let neg = set::affine_image(a, &Rational::from_int(-1), &Rational::zero())
            .expect("-1 is nonzero");
        let d = growth::sumset(a, &neg);
        rect.expect(
            &entry.label,
            incidence::rect_distance_set(&p) == growth::productset(&d, &d),
            || "sets differ".into(),
        );
    }

    vec![energy.outcome(), qcount.outcome(), collinear.outcome(), rect.outcome()]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_on_the_standard_corpus() {
        for suite in Suite::ALL {
            let summary = run_suite(suite);
            for check in &summary.checks {
                assert!(check.passed, "{} / {}: {}", suite, check.name, check.detail);
            }
        }
    }

    #[test]
    fn suite_names_parse() {
        assert_eq!("identities".parse::<Suite>().unwrap(), Suite::Identities);
        assert_eq!("oracles".parse::<Suite>().unwrap(), Suite::Oracles);
        assert!("bogus".parse::<Suite>().is_err());
    }
}
