//! Seeded randomized checks: classification of random brackets, stability
//! under random basis changes, and the Bianchi-type table.
//!
//! Every trial draws from its own ChaCha stream (seed, trial index), and
//! results are collected in trial order, so reports are reproducible
//! byte for byte regardless of thread scheduling.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{transform, validate, Algebra, Bracket, Convention, Field, OmegaForm, Tolerances};
use crate::catalog::{bianchi, model, representatives, BianchiType};
use crate::classify::classify;
use crate::error::{Error, Result};
use crate::iso::{is_isomorphic, search_witness, SearchConfig, PARAM_TOL};
use crate::label::ClassLabel;
use crate::linalg::{re, Matrix3, Scalar, Vector3};

/// How random brackets are drawn.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sampler {
    /// i.i.d. standard normal coefficients (complex normal over ℂ).
    #[default]
    Gaussian,
    /// Coefficients in {-1, 0, 1}, then a random basis change. Hits the
    /// degenerate strata (rank 2, nilpotent and repeated spectra) that
    /// Gaussian sampling almost never reaches.
    Integer,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrialConfig {
    pub seed: u64,
    pub trials: usize,
    pub field: Field,
    pub cond_cap: f64,
    pub sampler: Sampler,
    pub tolerances: Tolerances,
}

impl TrialConfig {
    pub fn new(seed: u64, trials: usize, field: Field) -> Self {
        TrialConfig {
            seed,
            trials,
            field,
            cond_cap: 100.0,
            sampler: Sampler::Gaussian,
            tolerances: Tolerances::default(),
        }
    }

    fn check(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::ParameterOutOfDomain("trials must be at least 1".into()));
        }
        if !(self.cond_cap > 1.0) {
            return Err(Error::ParameterOutOfDomain("cond_cap must exceed 1".into()));
        }
        Ok(())
    }

    fn rng(&self, salt: u64, index: usize) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15));
        rng.set_stream(index as u64);
        rng
    }
}

fn draw(rng: &mut ChaCha8Rng, field: Field) -> Scalar {
    let x: f64 = rng.sample(StandardNormal);
    match field {
        Field::Real => re(x),
        Field::Complex => Scalar::new(x, rng.sample(StandardNormal)),
    }
}

fn random_vector(rng: &mut ChaCha8Rng, field: Field) -> Vector3 {
    Vector3::new(draw(rng, field), draw(rng, field), draw(rng, field))
}

/// Gaussian matrix, redrawn until its condition number is below `cap`.
pub fn random_invertible(rng: &mut ChaCha8Rng, field: Field, cap: f64) -> Matrix3 {
    loop {
        let p = Matrix3::from_cols(
            random_vector(rng, field),
            random_vector(rng, field),
            random_vector(rng, field),
        );
        if p.cond() < cap {
            return p;
        }
    }
}

pub fn random_bracket(rng: &mut ChaCha8Rng, cfg: &TrialConfig) -> Bracket {
    match cfg.sampler {
        Sampler::Gaussian => Bracket::new(
            random_vector(rng, cfg.field),
            random_vector(rng, cfg.field),
            random_vector(rng, cfg.field),
        ),
        Sampler::Integer => {
            let mut int = || Vector3(std::array::from_fn(|_| re(rng.random_range(-1i32..=1) as f64)));
            let b = Bracket::new(int(), int(), int());
            let p = random_invertible(rng, cfg.field, cfg.cond_cap);
            transform(&Algebra::induced(cfg.field, b), &p)
                .expect("conditioned basis change")
                .bracket
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrialIssue {
    pub trial: usize,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CompletenessReport {
    pub config: TrialConfig,
    pub non_lie: usize,
    pub lie: usize,
    /// Classes of the verified non-Lie samples.
    pub histogram: BTreeMap<String, usize>,
    pub lie_histogram: BTreeMap<String, usize>,
    /// Numerically ambiguous samples, set aside rather than failed.
    pub quarantined: Vec<TrialIssue>,
    pub failures: Vec<TrialIssue>,
    pub impossible_case_d: usize,
    pub max_residual: f64,
    pub pass: bool,
}

enum Outcome {
    Classified { label: ClassLabel, residual: f64 },
    Quarantined(String),
    Failed(String, bool),
}

/// Classifies random brackets with their induced omega. Passes when no
/// sample fails outright and the impossible Jordan type never occurs.
pub fn run_completeness(cfg: &TrialConfig) -> Result<CompletenessReport> {
    cfg.check()?;
    let outcomes: Vec<Outcome> = (0..cfg.trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = cfg.rng(1, t);
            let a = Algebra::induced(cfg.field, random_bracket(&mut rng, cfg));
            match classify(&a, &cfg.tolerances) {
                Ok(r) => Outcome::Classified {
                    label: r.label,
                    residual: r.witness.residual,
                },
                Err(e) if e.is_numerical() => Outcome::Quarantined(e.to_string()),
                Err(e) => Outcome::Failed(e.to_string(), e == Error::ImpossibleCaseD),
            }
        })
        .collect();

    let mut report = CompletenessReport {
        config: *cfg,
        non_lie: 0,
        lie: 0,
        histogram: BTreeMap::new(),
        lie_histogram: BTreeMap::new(),
        quarantined: vec![],
        failures: vec![],
        impossible_case_d: 0,
        max_residual: 0.0,
        pass: false,
    };
    for (trial, o) in outcomes.into_iter().enumerate() {
        match o {
            Outcome::Classified { label, residual } => {
                report.max_residual = report.max_residual.max(residual);
                let (count, hist) = if label.is_lie() {
                    (&mut report.lie, &mut report.lie_histogram)
                } else {
                    (&mut report.non_lie, &mut report.histogram)
                };
                *count += 1;
                *hist.entry(label.name().to_string()).or_default() += 1;
            }
            Outcome::Quarantined(detail) => report.quarantined.push(TrialIssue { trial, detail }),
            Outcome::Failed(detail, case_d) => {
                report.impossible_case_d += case_d as usize;
                report.failures.push(TrialIssue { trial, detail });
            }
        }
    }
    report.pass = report.failures.is_empty() && report.impossible_case_d == 0;
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModelInvariance {
    pub model: String,
    pub expected: String,
    pub trials: usize,
    pub stable: usize,
    pub quarantined: usize,
    pub max_param_drift: f64,
    pub max_residual: f64,
    /// Witness residual of trial 0, the identity change of basis.
    pub identity_residual: Option<f64>,
    pub mismatches: Vec<TrialIssue>,
    /// Direct searches run on the first few trials, and how many found a
    /// witness; each success must agree with `is_isomorphic`.
    pub searches: usize,
    pub search_found: usize,
    pub search_disagreements: usize,
}

/// One point of the `A`-family probe: `A(γ)` against `A(0)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AFamilyProbe {
    pub gamma: Scalar,
    /// Residual of the explicit shift `z ↦ z + (γ/2) x`.
    pub shift_residual: f64,
    /// Independent direct search between the two models.
    pub search_residual: Option<f64>,
    /// Classes of transformed copies of `A(γ)`.
    pub classified_as: BTreeMap<String, usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InvarianceReport {
    pub config: TrialConfig,
    pub models: Vec<ModelInvariance>,
    pub a_family: Vec<AFamilyProbe>,
    pub pass: bool,
}

const SEARCHES_PER_MODEL: usize = 2;

/// Checks that random basis changes of each catalog model classify back to
/// the model's canonical label with a verified witness.
pub fn run_invariance(cfg: &TrialConfig) -> Result<InvarianceReport> {
    cfg.check()?;
    let tol = &cfg.tolerances;
    let labels = representatives(cfg.field);
    let models: Vec<ModelInvariance> = labels
        .iter()
        .enumerate()
        .map(|(m, label)| model_invariance(cfg, m as u64 + 100, label))
        .collect::<Result<_>>()?;

    let gammas: Vec<Scalar> = match cfg.field {
        Field::Real => [-2.0, -0.5, 0.0, 0.5, 1.0, 3.0].map(re).to_vec(),
        Field::Complex => vec![
            re(-2.0),
            re(0.0),
            re(1.0),
            re(3.0),
            Scalar::new(0.5, -1.0),
            Scalar::new(0.0, 2.0),
        ],
    };
    let a_label = |g: Scalar| match cfg.field {
        Field::Real => ClassLabel::ACal { alpha: g.re },
        Field::Complex => ClassLabel::A { alpha: g },
    };
    let base = model(&a_label(re(0.0)), cfg.field)?;
    let a_family = gammas
        .iter()
        .enumerate()
        .map(|(k, &g)| -> Result<AFamilyProbe> {
            let a = model(&a_label(g), cfg.field)?;
            let mut shift = Matrix3::identity();
            shift[(0, 2)] = g / 2.0;
            let shift_residual = crate::algebra::Witness::measure(&a, &base, shift)?.residual;
            let search = SearchConfig {
                seed: cfg.seed,
                ..SearchConfig::default()
            };
            let search_residual = search_witness(&a, &base, &search, tol).map(|w| w.residual);
            let mut classified_as = BTreeMap::new();
            let results: Vec<String> = (0..cfg.trials.min(100))
                .into_par_iter()
                .map(|t| {
                    let mut rng = cfg.rng(50 + k as u64, t);
                    let p = random_invertible(&mut rng, cfg.field, cfg.cond_cap);
                    match transform(&a, &p).and_then(|b| classify(&b, tol)) {
                        Ok(r) => r.label.to_string(),
                        Err(e) => format!("error: {}", e.name()),
                    }
                })
                .collect();
            for r in results {
                *classified_as.entry(r).or_default() += 1;
            }
            Ok(AFamilyProbe {
                gamma: g,
                shift_residual,
                search_residual,
                classified_as,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let pass = models
        .iter()
        .all(|m| m.mismatches.is_empty() && m.search_disagreements == 0)
        && a_family
            .iter()
            .all(|p| p.shift_residual < tol.wit && p.classified_as.len() == 1);
    Ok(InvarianceReport {
        config: *cfg,
        models,
        a_family,
        pass,
    })
}

enum Stability {
    Stable { drift: f64, residual: f64 },
    Quarantined,
    Mismatch(String),
}

fn model_invariance(cfg: &TrialConfig, salt: u64, label: &ClassLabel) -> Result<ModelInvariance> {
    let tol = &cfg.tolerances;
    let a = model(label, cfg.field)?;
    let expected = label.canonical()?;
    let outcomes: Vec<(Stability, Option<(bool, bool)>)> = (0..cfg.trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = cfg.rng(salt, t);
            // Trial 0 is the identity change of basis.
            let p = if t == 0 {
                Matrix3::identity()
            } else {
                random_invertible(&mut rng, cfg.field, cfg.cond_cap)
            };
            let b = match transform(&a, &p) {
                Ok(b) => b,
                Err(e) => return (Stability::Mismatch(e.to_string()), None),
            };
            let stability = match classify(&b, tol) {
                Ok(r) => match r.label.param_error(&expected) {
                    Some(drift) if drift < PARAM_TOL * expected_scale(&expected) => Stability::Stable {
                        drift,
                        residual: r.witness.residual,
                    },
                    _ => Stability::Mismatch(format!("classified as {}", r.label)),
                },
                Err(e) if e.is_numerical() => Stability::Quarantined,
                Err(e) => Stability::Mismatch(e.to_string()),
            };
            let search = (t < SEARCHES_PER_MODEL).then(|| {
                let scfg = SearchConfig {
                    seed: cfg.seed.wrapping_add(t as u64),
                    ..SearchConfig::default()
                };
                let found = search_witness(&a, &b, &scfg, tol).is_some();
                // a found witness must be confirmed by the classifier
                let agree = !found || is_isomorphic(&a, &b, tol).is_ok_and(|r| r.isomorphic);
                (found, agree)
            });
            (stability, search)
        })
        .collect();

    let mut out = ModelInvariance {
        model: label.to_string(),
        expected: expected.to_string(),
        trials: cfg.trials,
        stable: 0,
        quarantined: 0,
        max_param_drift: 0.0,
        max_residual: 0.0,
        identity_residual: None,
        mismatches: vec![],
        searches: 0,
        search_found: 0,
        search_disagreements: 0,
    };
    for (trial, (s, search)) in outcomes.into_iter().enumerate() {
        match s {
            Stability::Stable { drift, residual } => {
                if trial == 0 {
                    out.identity_residual = Some(residual);
                }
                out.stable += 1;
                out.max_param_drift = out.max_param_drift.max(drift);
                out.max_residual = out.max_residual.max(residual);
            }
            Stability::Quarantined => out.quarantined += 1,
            Stability::Mismatch(detail) => out.mismatches.push(TrialIssue { trial, detail }),
        }
        if let Some((found, agree)) = search {
            out.searches += 1;
            out.search_found += found as usize;
            if !agree {
                out.search_disagreements += 1;
            }
        }
    }
    Ok(out)
}

fn expected_scale(label: &ClassLabel) -> f64 {
    label.params().iter().map(|(_, p)| p.norm()).fold(1.0, f64::max)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Table1Row {
    pub row: String,
    pub a: Option<f64>,
    pub printed_omega: OmegaForm,
    pub induced_omega: OmegaForm,
    /// Discrepancy of the printed omega under the plain and negated readings.
    pub discrepancy: f64,
    pub discrepancy_negated: f64,
    pub convention: Option<Convention>,
    pub stated: String,
    pub label: Option<ClassLabel>,
    pub error: Option<String>,
    pub matches: bool,
    pub witness_residual: Option<f64>,
    /// Direct search against the model of the computed class.
    pub search_residual: Option<f64>,
    pub search_agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Table1Report {
    pub config: TrialConfig,
    pub rows: Vec<Table1Row>,
    pub all_match: bool,
    pub all_agree: bool,
}

/// Parameter values at which the parameterized rows are evaluated.
pub const TABLE1_PARAMS: [f64; 3] = [0.5, 1.0, 2.0];

/// Classifies every row of the Bianchi-type table (real mode) and records
/// the sign relating its printed omega to the induced one.
pub fn run_table1(cfg: &TrialConfig) -> Result<Table1Report> {
    let tol = &cfg.tolerances;
    let mut cases = vec![];
    for kind in BianchiType::ALL {
        if kind.is_parameterized() {
            cases.extend(TABLE1_PARAMS.iter().map(|&a| (kind, Some(a))));
        } else {
            cases.push((kind, None));
        }
    }
    let rows = cases
        .par_iter()
        .map(|&(kind, a)| -> Result<Table1Row> {
            let entry = bianchi(kind, a)?;
            let printed = Algebra::new(Field::Real, entry.algebra.bracket, Some(entry.printed_omega));
            let v = validate(&printed, 1e-12);
            let stated = kind.stated_class(a.unwrap_or(0.0));
            let result = classify(&printed, tol);
            let (label, error, residual) = match &result {
                Ok(r) => (Some(r.label), None, Some(r.witness.residual)),
                Err(e) => (None, Some(e.to_string()), None),
            };
            let matches = label.is_some_and(|l| stated.matches(&l, PARAM_TOL));
            let search_residual = label.and_then(|l| {
                let target = model(&l, Field::Real).ok()?;
                let scfg = SearchConfig {
                    seed: cfg.seed,
                    ..SearchConfig::default()
                };
                search_witness(&entry.algebra, &target, &scfg, tol).map(|w| w.residual)
            });
            Ok(Table1Row {
                row: kind.name().to_string(),
                a,
                printed_omega: entry.printed_omega,
                induced_omega: v.induced_omega,
                discrepancy: v.discrepancy,
                discrepancy_negated: v.discrepancy_negated,
                convention: v.convention(),
                stated: stated.to_string(),
                label,
                error,
                matches,
                witness_residual: residual,
                search_agrees: label.is_some() && search_residual.is_some(),
                search_residual,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Table1Report {
        config: *cfg,
        all_match: rows.iter().all(|r| r.matches),
        all_agree: rows.iter().all(|r| r.search_agrees),
        rows,
    })
}

/// Pretty JSON; stable for a given report.
pub fn to_json<T: Serialize>(report: &T) -> String {
    serde_json::to_string_pretty(report).expect("reports serialize")
}
