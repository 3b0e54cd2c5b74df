//! Experiment configuration, report assembly, and the sweep table.
//!
//! A config plus the code version determines every output bit: reports
//! serialize with stable field order, ratios are rendered from exact
//! integers, and wall-clock timing is kept out of the serialized bytes
//! (it is reported on stderr by the CLI instead).

use std::time::Instant;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::decimal::{decimal_string, ln_rational};
use crate::error::{Error, Result};
use crate::growth::{
    self, QDecomposition, ShiftSign, DEFAULT_PAIR_CAP, DEFAULT_Q_BRUTEFORCE_CAP,
};
use crate::incidence;
use crate::scalar::{Field, FieldTag, Rational};
use crate::set::{self, FiniteScalarSet, TaggedSet};

pub const SCHEMA_VERSION: u32 = 1;

/// Significant digits used when rendering ratio statistics.
pub const RATIO_SIGNIFICANT_DIGITS: u32 = 20;
const LN_PRECISION_DIGITS: u32 = 30;

/// Brute-force and memory caps. Exceeding a cap never aborts a report;
/// the affected field is marked absent instead.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Caps {
    /// Max |A| for the sextic Q oracle.
    pub bruteforce: u64,
    /// Max |A|·|B| for the sorted-products energy oracle.
    pub pair_products: u64,
    /// Max |P| for the spanned-line spectrum of A×A in reports.
    pub line_points: u64,
    /// Max |P| for the definitional rectangle-distance scan in reports.
    pub rect_points: u64,
    /// Max |D|² for the (A−A)(A−A) product-set construction in reports.
    pub dd_pairs: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            bruteforce: DEFAULT_Q_BRUTEFORCE_CAP,
            pair_products: DEFAULT_PAIR_CAP,
            line_points: 1024,
            rect_points: 2000,
            dd_pairs: 4_000_000,
        }
    }
}

/// Input set families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Interval,
    Geometric,
    Random,
    File,
    GaussianFile,
}

/// A fully serializable experiment description.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub family: Family,
    pub field: FieldTag,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub base: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bound: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub path: Option<String>,
    #[serde(default)]
    pub caps: Caps,
}

impl ExperimentConfig {
    pub fn new(family: Family, field: FieldTag) -> Self {
        ExperimentConfig {
            family,
            field,
            n: None,
            base: None,
            seed: None,
            bound: None,
            path: None,
            caps: Caps::default(),
        }
    }

    fn require_n(&self) -> Result<u64> {
        self.n
            .ok_or_else(|| Error::InvalidParameter("this family requires --n".into()))
    }
}

/// Build the input set a config describes.
pub fn build_set(config: &ExperimentConfig) -> Result<TaggedSet> {
    match config.family {
        Family::Interval => {
            let a = set::interval_set(config.require_n()?)?;
            Ok(match config.field {
                FieldTag::Rational => TaggedSet::Rational(a),
                FieldTag::Gaussian => TaggedSet::Gaussian(a.to_gaussian()),
            })
        }
        Family::Geometric => {
            let n = config.require_n()?;
            let base_text = config
                .base
                .as_deref()
                .ok_or_else(|| Error::InvalidParameter("geometric family requires --base".into()))?;
            match config.field {
                FieldTag::Rational => Ok(TaggedSet::Rational(set::geometric_set(
                    &Rational::from_text(base_text)?,
                    n,
                )?)),
                FieldTag::Gaussian => Ok(TaggedSet::Gaussian(set::geometric_set(
                    &crate::scalar::GaussianRational::from_text(base_text)?,
                    n,
                )?)),
            }
        }
        Family::Random => {
            let n = config.require_n()?;
            let seed = config
                .seed
                .ok_or_else(|| Error::InvalidParameter("random family requires --seed".into()))?;
            let bound = config
                .bound
                .ok_or_else(|| Error::InvalidParameter("random family requires --bound".into()))?;
            match config.field {
                FieldTag::Rational => Ok(TaggedSet::Rational(set::random_set(seed, n, bound)?)),
                FieldTag::Gaussian => {
                    Ok(TaggedSet::Gaussian(set::random_gaussian_set(seed, n, bound)?))
                }
            }
        }
        Family::File | Family::GaussianFile => {
            let expected = if config.family == Family::File {
                FieldTag::Rational
            } else {
                FieldTag::Gaussian
            };
            if config.field != expected {
                return Err(Error::InvalidParameter(format!(
                    "family {:?} implies field {}, got {}",
                    config.family,
                    expected.name(),
                    config.field.name()
                )));
            }
            let path = config
                .path
                .as_deref()
                .ok_or_else(|| Error::InvalidParameter("file family requires --input".into()))?;
            let text = std::fs::read_to_string(path)?;
            TaggedSet::from_text(&text, expected)
        }
    }
}

/// A ratio statistic: the exact integer count it was derived from, and
/// its decimal rendering to [`RATIO_SIGNIFICANT_DIGITS`] digits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatioField {
    pub count: u64,
    pub value: String,
}

/// Pinned-pair certificate in report form; scalars use the text encoding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PinnedReport {
    pub a: String,
    pub a_prime: String,
    pub energy: u64,
    pub product_set_size: u64,
    /// |A|⁴ / energy as an exact rational.
    pub cs_lower_bound: String,
}

/// One rich-line table row; `st_ratio` is |L_k|·k³/|P|² rendered exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RichRow {
    pub k: u64,
    pub lines: u64,
    pub st_ratio: String,
}

/// Every counted quantity of one experiment. `None` marks a field whose
/// computation would exceed a cap.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quantities {
    pub q_total: u64,
    pub q_zero: u64,
    pub q_diag: u64,
    pub q_star: u64,
    pub energy_sum_subtractive: u64,
    pub energy_sum_additive: u64,
    pub pinned_subtractive: PinnedReport,
    pub pinned_additive: PinnedReport,
    /// |(A−A)(A−A)| via productset(D, D), D = A + (−A).
    pub dd_product_size: Option<u64>,
    pub cross_ratio_size: u64,
    /// |{R(p,q)}| over P = A×A by the definitional scan.
    pub rect_distance_size: Option<u64>,
    /// |{R(p*, q)}| pinned at the subtractive certificate point.
    pub pinned_rect_distance_size: u64,
    pub collinear_cube_sum: Option<u64>,
    pub ordered_collinear_triples: Option<u64>,
    pub rich_lines: Option<Vec<RichRow>>,
}

/// The ratio statistics tracked across sweeps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ratios {
    /// q_total / (|A|⁴ ln |A|)
    pub q_total_over_n4_log: RatioField,
    /// pinned product set size · ln |A| / |A|²  (subtractive sign)
    pub pinned_size_log_over_n2: RatioField,
    /// cross-ratio set size · ln |A| / |A|²
    pub cross_ratio_size_log_over_n2: RatioField,
}

/// Full record of one experiment run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub schema_version: u32,
    pub config: ExperimentConfig,
    pub set_size: u64,
    pub quantities: Quantities,
    pub ratios: Ratios,
    /// Wall-clock time; deliberately not serialized so identical configs
    /// produce identical report bytes.
    #[serde(skip)]
    pub timing_ms: u128,
}

impl ExperimentReport {
    /// Canonical JSON bytes (pretty, stable field order, trailing newline).
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("report json: {e}")))
    }
}

/// Run the full quantity pipeline for a config.
///
/// Ratio statistics require |A| ≥ 2, so smaller inputs are rejected.
pub fn run(config: &ExperimentConfig) -> Result<ExperimentReport> {
    let started = Instant::now();
    let set = build_set(config)?;
    if set.len() < 2 {
        return Err(Error::SetTooSmall { required: 2, actual: set.len() });
    }
    let (set_size, quantities) = match &set {
        TaggedSet::Rational(a) => (a.len() as u64, compute_quantities(a, &config.caps)),
        TaggedSet::Gaussian(a) => (a.len() as u64, compute_quantities(a, &config.caps)),
    };
    let ratios = compute_ratios(set_size, &quantities);
    Ok(ExperimentReport {
        schema_version: SCHEMA_VERSION,
        config: config.clone(),
        set_size,
        quantities,
        ratios,
        timing_ms: started.elapsed().as_millis(),
    })
}

/// The generic counting pipeline behind [`run`].
pub fn compute_quantities<F: Field>(a: &FiniteScalarSet<F>, caps: &Caps) -> Quantities {
    let n = a.len() as u64;

    let scan_sub = growth::shifted_energy_scan(a, ShiftSign::Subtractive);
    let scan_add = growth::shifted_energy_scan(a, ShiftSign::Additive);
    let q = QDecomposition::from_total(n, scan_sub.energy_sum);

    let cert_sub = growth::certificate_for_pair(
        a,
        ShiftSign::Subtractive,
        scan_sub.min_pair.clone(),
        scan_sub.min_energy,
    );
    let cert_add = growth::certificate_for_pair(
        a,
        ShiftSign::Additive,
        scan_add.min_pair.clone(),
        scan_add.min_energy,
    );

    // D = A − A through the one canonical construction path
    let neg = set::affine_image(a, &F::one().neg(), &F::zero()).expect("-1 is nonzero");
    let d = growth::sumset(a, &neg);
    let dd_product_size = if (d.len() as u64).pow(2) <= caps.dd_pairs {
        Some(growth::productset(&d, &d).len() as u64)
    } else {
        None
    };

    let cross_ratio_size = growth::cross_ratio_set(a)
        .expect("|A| >= 2 checked by the caller")
        .len() as u64;

    let points = set::direct_product(a, a);
    let rect_distance_size = if points.len() as u64 <= caps.rect_points {
        Some(incidence::rect_distance_set(&points).len() as u64)
    } else {
        None
    };
    let pin = (cert_sub.a.clone(), cert_sub.a_prime.clone());
    let pinned_rect_distance_size = incidence::pinned_rect_distance(&points, &pin)
        .expect("certificate pair lies in A×A")
        .len() as u64;

    let (collinear_cube_sum, ordered_collinear_triples, rich_lines) =
        if points.len() as u64 <= caps.line_points {
            let spectrum = incidence::spanned_lines(&points).expect("|P| >= 4");
            let cube = spectrum.multiplicities().map(|m| m * m * m).sum();
            let triples = spectrum
                .multiplicities()
                .map(|m| m * (m - 1) * (m - 2))
                .sum();
            let rows = incidence::st_ratio_report(&points)
                .expect("|P| >= 4")
                .into_iter()
                .map(|r| RichRow {
                    k: r.k,
                    lines: r.line_count,
                    st_ratio: decimal_string(&r.st_ratio, RATIO_SIGNIFICANT_DIGITS),
                })
                .collect();
            (Some(cube), Some(triples), Some(rows))
        } else {
            (None, None, None)
        };

    Quantities {
        q_total: q.q_total,
        q_zero: q.q_zero,
        q_diag: q.q_diag,
        q_star: q.q_star,
        energy_sum_subtractive: scan_sub.energy_sum,
        energy_sum_additive: scan_add.energy_sum,
        pinned_subtractive: pinned_report(&cert_sub),
        pinned_additive: pinned_report(&cert_add),
        dd_product_size,
        cross_ratio_size,
        rect_distance_size,
        pinned_rect_distance_size,
        collinear_cube_sum,
        ordered_collinear_triples,
        rich_lines,
    }
}

fn pinned_report<F: Field>(cert: &growth::PinnedCertificate<F>) -> PinnedReport {
    PinnedReport {
        a: cert.a.to_string(),
        a_prime: cert.a_prime.to_string(),
        energy: cert.energy,
        product_set_size: cert.product_set_size,
        cs_lower_bound: cert.cs_lower_bound.to_string(),
    }
}

fn compute_ratios(n: u64, q: &Quantities) -> Ratios {
    let ln_n = ln_rational(n, LN_PRECISION_DIGITS);
    let n2 = Rational::from_bigint(BigInt::from(n).pow(2));
    let n4 = Rational::from_bigint(BigInt::from(n).pow(4));
    let big = |c: u64| Rational::from_bigint(BigInt::from(c));

    let q_ratio = big(q.q_total)
        .div(&n4.mul(&ln_n))
        .expect("n >= 2 makes ln n positive");
    let pinned = big(q.pinned_subtractive.product_set_size)
        .mul(&ln_n)
        .div(&n2)
        .expect("n > 0");
    let cross = big(q.cross_ratio_size)
        .mul(&ln_n)
        .div(&n2)
        .expect("n > 0");

    Ratios {
        q_total_over_n4_log: RatioField {
            count: q.q_total,
            value: decimal_string(&q_ratio, RATIO_SIGNIFICANT_DIGITS),
        },
        pinned_size_log_over_n2: RatioField {
            count: q.pinned_subtractive.product_set_size,
            value: decimal_string(&pinned, RATIO_SIGNIFICANT_DIGITS),
        },
        cross_ratio_size_log_over_n2: RatioField {
            count: q.cross_ratio_size,
            value: decimal_string(&cross, RATIO_SIGNIFICANT_DIGITS),
        },
    }
}

/// One sweep row. Errors are recorded in-row; the sweep continues.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub n: u64,
    pub set_size: Option<u64>,
    pub q_total: Option<u64>,
    pub q_zero: Option<u64>,
    pub q_diag: Option<u64>,
    pub q_star: Option<u64>,
    pub energy_sum_sub: Option<u64>,
    pub energy_sum_add: Option<u64>,
    pub pinned_sub_a: Option<String>,
    pub pinned_sub_a_prime: Option<String>,
    pub pinned_sub_energy: Option<u64>,
    pub pinned_sub_size: Option<u64>,
    pub pinned_add_energy: Option<u64>,
    pub pinned_add_size: Option<u64>,
    pub dd_product_size: Option<u64>,
    pub cross_ratio_size: Option<u64>,
    pub rect_distance_size: Option<u64>,
    pub pinned_rect_size: Option<u64>,
    pub collinear_cube_sum: Option<u64>,
    pub ordered_collinear_triples: Option<u64>,
    pub q_ratio: Option<String>,
    pub pinned_ratio: Option<String>,
    pub cross_ratio_ratio: Option<String>,
    pub error: String,
}

/// Fixed CSV header; the column set is part of the output contract.
pub const SWEEP_CSV_HEADER: [&str; 24] = [
    "n",
    "set_size",
    "q_total",
    "q_zero",
    "q_diag",
    "q_star",
    "energy_sum_sub",
    "energy_sum_add",
    "pinned_sub_a",
    "pinned_sub_a_prime",
    "pinned_sub_energy",
    "pinned_sub_size",
    "pinned_add_energy",
    "pinned_add_size",
    "dd_product_size",
    "cross_ratio_size",
    "rect_distance_size",
    "pinned_rect_size",
    "collinear_cube_sum",
    "ordered_collinear_triples",
    "q_ratio",
    "pinned_ratio",
    "cross_ratio_ratio",
    "error",
];

impl SweepRow {
    fn from_report(n: u64, report: &ExperimentReport) -> Self {
        let q = &report.quantities;
        SweepRow {
            n,
            set_size: Some(report.set_size),
            q_total: Some(q.q_total),
            q_zero: Some(q.q_zero),
            q_diag: Some(q.q_diag),
            q_star: Some(q.q_star),
            energy_sum_sub: Some(q.energy_sum_subtractive),
            energy_sum_add: Some(q.energy_sum_additive),
            pinned_sub_a: Some(q.pinned_subtractive.a.clone()),
            pinned_sub_a_prime: Some(q.pinned_subtractive.a_prime.clone()),
            pinned_sub_energy: Some(q.pinned_subtractive.energy),
            pinned_sub_size: Some(q.pinned_subtractive.product_set_size),
            pinned_add_energy: Some(q.pinned_additive.energy),
            pinned_add_size: Some(q.pinned_additive.product_set_size),
            dd_product_size: q.dd_product_size,
            cross_ratio_size: Some(q.cross_ratio_size),
            rect_distance_size: q.rect_distance_size,
            pinned_rect_size: Some(q.pinned_rect_distance_size),
            collinear_cube_sum: q.collinear_cube_sum,
            ordered_collinear_triples: q.ordered_collinear_triples,
            q_ratio: Some(report.ratios.q_total_over_n4_log.value.clone()),
            pinned_ratio: Some(report.ratios.pinned_size_log_over_n2.value.clone()),
            cross_ratio_ratio: Some(report.ratios.cross_ratio_size_log_over_n2.value.clone()),
            error: String::new(),
        }
    }

    fn from_error(n: u64, error: &Error) -> Self {
        SweepRow {
            n,
            set_size: None,
            q_total: None,
            q_zero: None,
            q_diag: None,
            q_star: None,
            energy_sum_sub: None,
            energy_sum_add: None,
            pinned_sub_a: None,
            pinned_sub_a_prime: None,
            pinned_sub_energy: None,
            pinned_sub_size: None,
            pinned_add_energy: None,
            pinned_add_size: None,
            dd_product_size: None,
            cross_ratio_size: None,
            rect_distance_size: None,
            pinned_rect_size: None,
            collinear_cube_sum: None,
            ordered_collinear_triples: None,
            q_ratio: None,
            pinned_ratio: None,
            cross_ratio_ratio: None,
            error: error.to_string(),
        }
    }

    fn csv_record(&self) -> Vec<String> {
        fn cell<T: ToString>(v: &Option<T>) -> String {
            v.as_ref().map(|x| x.to_string()).unwrap_or_default()
        }
        vec![
            self.n.to_string(),
            cell(&self.set_size),
            cell(&self.q_total),
            cell(&self.q_zero),
            cell(&self.q_diag),
            cell(&self.q_star),
            cell(&self.energy_sum_sub),
            cell(&self.energy_sum_add),
            cell(&self.pinned_sub_a),
            cell(&self.pinned_sub_a_prime),
            cell(&self.pinned_sub_energy),
            cell(&self.pinned_sub_size),
            cell(&self.pinned_add_energy),
            cell(&self.pinned_add_size),
            cell(&self.dd_product_size),
            cell(&self.cross_ratio_size),
            cell(&self.rect_distance_size),
            cell(&self.pinned_rect_size),
            cell(&self.collinear_cube_sum),
            cell(&self.ordered_collinear_triples),
            cell(&self.q_ratio),
            cell(&self.pinned_ratio),
            cell(&self.cross_ratio_ratio),
            self.error.clone(),
        ]
    }
}

/// One-row table form of a single run (used by `run --format csv`).
pub fn run_as_row(config: &ExperimentConfig) -> Result<SweepRow> {
    let report = run(config)?;
    let n = config.n.unwrap_or(report.set_size);
    Ok(SweepRow::from_report(n, &report))
}

/// Run the config once per size (sizes must be ascending). Per-size
/// failures are recorded in their row and the sweep continues.
pub fn sweep(base: &ExperimentConfig, sizes: &[u64]) -> Result<Vec<SweepRow>> {
    if sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidParameter("sweep sizes must be strictly ascending".into()));
    }
    if matches!(base.family, Family::File | Family::GaussianFile) {
        return Err(Error::InvalidParameter("file families are not sweepable".into()));
    }
    let mut rows = Vec::with_capacity(sizes.len());
    for &n in sizes {
        let mut config = base.clone();
        config.n = Some(n);
        match run(&config) {
            Ok(report) => rows.push(SweepRow::from_report(n, &report)),
            Err(e) => rows.push(SweepRow::from_error(n, &e)),
        }
    }
    Ok(rows)
}

/// Render sweep rows as the fixed-column CSV table.
pub fn sweep_to_csv(rows: &[SweepRow]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(SWEEP_CSV_HEADER)
        .expect("in-memory csv write");
    for row in rows {
        writer.write_record(row.csv_record()).expect("in-memory csv write");
    }
    String::from_utf8(writer.into_inner().expect("csv flush")).expect("csv is utf-8")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn interval_config(n: u64) -> ExperimentConfig {
        let mut c = ExperimentConfig::new(Family::Interval, FieldTag::Rational);
        c.n = Some(n);
        c
    }

    #[test]
    fn run_interval_3() {
        // A = {1,2,3} is an affine image of {0,1,2}; q_star and the
        // cross-ratio set are affine-invariant
        let report = run(&interval_config(3)).unwrap();
        assert_eq!(report.set_size, 3);
        assert_eq!(report.quantities.q_star, 12);
        assert_eq!(report.quantities.q_diag, 36);
        assert_eq!(report.quantities.cross_ratio_size, 5);
        assert_eq!(report.quantities.q_total, 273);
        // rect distance = (A−A)(A−A) as sets
        assert_eq!(report.quantities.rect_distance_size, report.quantities.dd_product_size);
        assert_eq!(report.ratios.q_total_over_n4_log.count, 273);
    }

    #[test]
    fn run_rejects_singletons() {
        let err = run(&interval_config(1)).unwrap_err();
        assert!(matches!(err, Error::SetTooSmall { required: 2, actual: 1 }));
    }

    #[test]
    fn identical_configs_produce_identical_bytes() {
        let a = run(&interval_config(5)).unwrap().to_json();
        let b = run(&interval_config(5)).unwrap().to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn report_round_trips_through_json() {
        let report = run(&interval_config(4)).unwrap();
        let parsed = ExperimentReport::from_json(&report.to_json()).unwrap();
        // timing is not serialized, so compare the canonical bytes
        assert_eq!(parsed.to_json(), report.to_json());
        assert_eq!(parsed.config, report.config);
        assert_eq!(parsed.quantities, report.quantities);
        // and the embedded config regenerates the same bytes
        let again = run(&parsed.config).unwrap();
        assert_eq!(again.to_json(), report.to_json());
    }

    #[test]
    fn sweep_rows_and_errors() {
        let mut base = ExperimentConfig::new(Family::Interval, FieldTag::Rational);
        base.n = None;
        let rows = sweep(&base, &[1, 3, 4]).unwrap();
        assert_eq!(rows.len(), 3);
        assert!(!rows[0].error.is_empty()); // n = 1 is too small
        assert!(rows[1].error.is_empty());
        assert_eq!(rows[1].q_star, Some(12));
        assert_eq!(rows[2].set_size, Some(4));

        assert!(sweep(&base, &[4, 3]).is_err());

        let csv = sweep_to_csv(&rows);
        let mut lines = csv.lines();
        let header = lines.next().unwrap();
        assert_eq!(header.split(',').count(), SWEEP_CSV_HEADER.len());
        assert_eq!(lines.count(), 3);

        let empty = sweep(&base, &[]).unwrap();
        let csv = sweep_to_csv(&empty);
        assert_eq!(csv.lines().count(), 1); // header only
    }

    #[test]
    fn gaussian_file_family_checks_field() {
        let mut c = ExperimentConfig::new(Family::GaussianFile, FieldTag::Rational);
        c.path = Some("/nonexistent".into());
        assert!(matches!(build_set(&c), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn caps_mark_fields_absent() {
        let mut c = interval_config(6);
        c.caps.line_points = 10; // |P| = 36 exceeds this
        c.caps.rect_points = 10;
        c.caps.dd_pairs = 10;
        let report = run(&c).unwrap();
        assert!(report.quantities.rich_lines.is_none());
        assert!(report.quantities.rect_distance_size.is_none());
        assert!(report.quantities.dd_product_size.is_none());
        // everything else is still present and exact
        assert_eq!(report.quantities.q_diag, 36 * 25);
    }
}
