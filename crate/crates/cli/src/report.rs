//! Machine-readable report shapes. Every report carries `version`; scalars
//! are `[re, im]` pairs and matrices are row-major.

use std::collections::BTreeMap;

use serde::Serialize;

use omega_lie::catalog::BianchiType;
use omega_lie::eigen::SpectralType;
use omega_lie::label::Availability;
use omega_lie::{ClassLabel, ClassificationReport, Convention, Field, Matrix3, OmegaForm, Scalar, Tolerances, Vector3};

use crate::document::SCHEMA_VERSION;

pub type Pair = [f64; 2];
pub type MatrixRows = [[Pair; 3]; 3];

pub fn pair(x: Scalar) -> Pair {
    [x.re, x.im]
}

pub fn rows(m: &Matrix3) -> MatrixRows {
    m.0.map(|row| row.map(pair))
}

pub fn vector(v: &Vector3) -> [Pair; 3] {
    v.0.map(pair)
}

/// Prefixes a report with the schema version.
#[derive(Clone, Debug, Serialize)]
pub struct Versioned<T> {
    pub version: u32,
    #[serde(flatten)]
    pub body: T,
}

impl<T> Versioned<T> {
    pub fn new(body: T) -> Self {
        Versioned {
            version: SCHEMA_VERSION,
            body,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OmegaJson {
    pub xy: Pair,
    pub xz: Pair,
    pub yz: Pair,
}

impl From<&OmegaForm> for OmegaJson {
    fn from(w: &OmegaForm) -> Self {
        OmegaJson {
            xy: pair(w.xy),
            xz: pair(w.xz),
            yz: pair(w.yz),
        }
    }
}

/// A class label with its named parameters.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LabelJson {
    pub label: String,
    pub params: BTreeMap<String, Pair>,
}

impl From<&ClassLabel> for LabelJson {
    fn from(l: &ClassLabel) -> Self {
        LabelJson {
            label: l.name().to_string(),
            params: l.params().into_iter().map(|(k, v)| (k.to_string(), pair(v))).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralJson {
    pub kind: String,
    pub values: BTreeMap<String, Pair>,
}

impl From<&SpectralType> for SpectralJson {
    fn from(s: &SpectralType) -> Self {
        let values: Vec<(&str, Scalar)> = match *s {
            SpectralType::DoubleBlock { delta } => vec![("delta", delta)],
            SpectralType::Diag { mu, nu } => vec![("mu", mu), ("nu", nu)],
            SpectralType::ZeroBlockPlus { tau } => vec![("tau", tau)],
            SpectralType::Rotation { a, b } => vec![("a", Scalar::new(a, 0.0)), ("b", Scalar::new(b, 0.0))],
            SpectralType::NilFull | SpectralType::KernelTooBig => vec![],
        };
        SpectralJson {
            kind: s.name().to_string(),
            values: values.into_iter().map(|(k, v)| (k.to_string(), pair(v))).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DiagnosticsJson {
    pub induced_omega: OmegaJson,
    pub derived_rank: usize,
    pub radical: Option<[Pair; 3]>,
    pub spectral_type: Option<SpectralJson>,
    pub tolerances: Tolerances,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassifyJson {
    pub field: Field,
    #[serde(flatten)]
    pub label: LabelJson,
    pub lie: bool,
    pub witness: MatrixRows,
    pub residual: f64,
    pub convention: Convention,
    pub diagnostics: DiagnosticsJson,
}

impl From<&ClassificationReport> for ClassifyJson {
    fn from(r: &ClassificationReport) -> Self {
        let d = &r.diagnostics;
        ClassifyJson {
            field: d.field,
            label: LabelJson::from(&r.label),
            lie: r.label.is_lie(),
            witness: rows(&r.witness.matrix),
            residual: r.witness.residual,
            convention: d.convention,
            diagnostics: DiagnosticsJson {
                induced_omega: OmegaJson::from(&d.induced_omega),
                derived_rank: d.derived_rank,
                radical: d.radical.as_ref().map(vector),
                spectral_type: d.spectral_type.as_ref().map(SpectralJson::from),
                tolerances: d.tolerances,
            },
        }
    }
}

/// Residuals of the stored omega against each sign convention that was
/// checked; `None` for a convention that was not requested.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Residuals {
    pub plus: Option<f64>,
    pub minus: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ValidateJson {
    pub field: Field,
    pub omega_supplied: bool,
    pub requested: String,
    pub induced_omega: OmegaJson,
    pub stored_omega: OmegaJson,
    pub residuals: Residuals,
    pub threshold: f64,
    pub convention: Option<Convention>,
    pub lie: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SearchJson {
    pub found: bool,
    pub residual: Option<f64>,
    pub witness: Option<MatrixRows>,
    pub attempts: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IsomorphismJson {
    pub field: Field,
    pub complexified: bool,
    pub isomorphic: bool,
    /// `canonical-compare` or `direct-search`.
    pub via: String,
    /// Carries the first algebra onto the second.
    pub witness: Option<MatrixRows>,
    pub residual: Option<f64>,
    pub labels: [Option<LabelJson>; 2],
    pub search: Option<SearchJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CatalogClassJson {
    pub name: String,
    pub params: Vec<String>,
    pub fields: Vec<Field>,
    pub lie: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CatalogRowJson {
    pub name: String,
    pub params: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CatalogListJson {
    pub classes: Vec<CatalogClassJson>,
    pub bianchi: Vec<CatalogRowJson>,
}

impl CatalogListJson {
    pub fn build() -> Self {
        let probe = [
            ("alpha".to_string(), Scalar::new(1.5, 0.0)),
            ("s".to_string(), Scalar::new(1.0, 0.0)),
        ];
        let classes = ClassLabel::names()
            .iter()
            .map(|&name| {
                let label = ClassLabel::from_name(name, &probe).expect("every listed name parses");
                let fields = match label.availability() {
                    Availability::Both => vec![Field::Real, Field::Complex],
                    Availability::RealOnly => vec![Field::Real],
                    Availability::ComplexOnly => vec![Field::Complex],
                };
                CatalogClassJson {
                    name: name.to_string(),
                    params: label.params().into_iter().map(|(k, _)| k.to_string()).collect(),
                    fields,
                    lie: label.is_lie(),
                }
            })
            .collect();
        let bianchi = BianchiType::ALL
            .iter()
            .map(|t| CatalogRowJson {
                name: t.name().to_string(),
                params: if t.is_parameterized() {
                    vec!["a".to_string()]
                } else {
                    vec![]
                },
            })
            .collect();
        CatalogListJson { classes, bianchi }
    }
}

/// Oracle output, tagged with the experiment that produced it.
#[derive(Clone, Debug, Serialize)]
pub struct OracleJson<T> {
    pub kind: String,
    #[serde(flatten)]
    pub report: T,
}
