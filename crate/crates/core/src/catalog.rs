//! Canonical models for every class, and the nine Bianchi-type rows of the
//! real comparison table with their omega values as printed there.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{induced_omega, validate, Algebra, Bracket, Convention, Field, OmegaForm};
use crate::error::{Error, Result};
use crate::label::ClassLabel;
use crate::linalg::{re, Scalar, Vector3};

fn v(x: f64, y: f64, z: f64) -> Vector3 {
    Vector3::real(x, y, z)
}

/// Canonical model of `label` over `field`; omega is the induced form.
pub fn model(label: &ClassLabel, field: Field) -> Result<Algebra> {
    use ClassLabel::*;
    if !label.allowed_in(field) {
        return Err(Error::ParameterOutOfDomain(format!(
            "{label} is not a {} class",
            field.as_str()
        )));
    }
    let nonzero = |a: Scalar| {
        if a.norm() == 0.0 || !a.is_finite() {
            Err(Error::ParameterOutOfDomain(format!(
                "{} requires a nonzero parameter",
                label.name()
            )))
        } else {
            Ok(a)
        }
    };
    // omega(y,z) = 1 + alpha vanishes: that algebra is Lie, isomorphic to G4
    let not_lie = |a: Scalar| {
        if a == re(-1.0) {
            Err(Error::ParameterOutOfDomain(format!(
                "{label} has omega = 0 (isomorphic to G4)"
            )))
        } else {
            Ok(())
        }
    };
    let zero = Vector3::zero();
    let bracket = match *label {
        Abelian => Bracket::zero(),
        G1 => Bracket::new(zero, zero, v(0.0, 1.0, 0.0)),
        G2 => Bracket::new(zero, zero, v(1.0, 0.0, 0.0)),
        H { alpha } => {
            let a = nonzero(alpha)?;
            Bracket::new(v(0.0, 1.0, 0.0), Vector3::new(re(0.0), re(0.0), a), zero)
        }
        G3 => Bracket::new(v(0.0, 1.0, 0.0), v(0.0, 1.0, 1.0), zero),
        G4 => Bracket::new(v(0.0, 2.0, 0.0), v(0.0, 0.0, -2.0), v(1.0, 0.0, 0.0)),
        HRot { s } => Bracket::new(v(0.0, s, -1.0), v(0.0, 1.0, s), zero),
        Su2 => Bracket::new(v(0.0, 0.0, 1.0), v(0.0, -1.0, 0.0), v(1.0, 0.0, 0.0)),
        L1 => Bracket::new(v(0.0, 1.0, 0.0), zero, v(0.0, 0.0, 1.0)),
        L2 => Bracket::new(zero, v(0.0, 1.0, 0.0), v(0.0, 0.0, 1.0)),
        A { alpha } => Bracket::new(
            v(1.0, 0.0, 0.0),
            v(1.0, 1.0, 0.0),
            Vector3::new(alpha, re(0.0), re(1.0)),
        ),
        ACal { alpha } => Bracket::new(v(1.0, 0.0, 0.0), v(1.0, 1.0, 0.0), v(alpha, 0.0, 1.0)),
        B | B1 => Bracket::new(v(0.0, 1.0, 0.0), v(0.0, 1.0, 1.0), v(1.0, 0.0, 0.0)),
        Bm1 => Bracket::new(v(0.0, 1.0, 0.0), v(0.0, 1.0, 1.0), v(-1.0, 0.0, 0.0)),
        C { alpha } => {
            let a = nonzero(alpha)?;
            not_lie(a)?;
            Bracket::new(v(0.0, 1.0, 0.0), Vector3::new(re(0.0), re(0.0), a), v(1.0, 0.0, 0.0))
        }
        CCal { alpha } => {
            nonzero(re(alpha))?;
            not_lie(re(alpha))?;
            Bracket::new(v(0.0, 1.0, 0.0), v(0.0, 0.0, alpha), v(1.0, 0.0, 0.0))
        }
        EPlus { alpha } | EMinus { alpha } => {
            nonzero(re(alpha))?;
            if alpha.abs() >= 2.0 {
                return Err(Error::ParameterOutOfDomain(format!(
                    "{label}: the rotation block needs |alpha| < 2"
                )));
            }
            let sign = if matches!(label, EPlus { .. }) { 1.0 } else { -1.0 };
            Bracket::new(v(0.0, 0.0, -1.0), v(0.0, 1.0, alpha), v(sign, 0.0, 0.0))
        }
    };
    Ok(Algebra::induced(field, bracket))
}

/// One representative per class, with several parameter values for the
/// families, including non-canonical ones.
pub fn representatives(field: Field) -> Vec<ClassLabel> {
    use ClassLabel::*;
    let c = Scalar::new;
    let mut out = vec![Abelian, G1, G2, G3, G4, L1, L2];
    match field {
        Field::Complex => out.extend([
            H { alpha: c(2.0, 1.0) },
            H { alpha: c(0.5, 0.0) },
            H { alpha: c(1.0, 0.0) },
            H { alpha: c(-1.0, 0.0) },
            A { alpha: c(0.0, 0.0) },
            A { alpha: c(0.3, -0.7) },
            B,
            C { alpha: c(1.5, 0.5) },
            C { alpha: c(0.25, 0.0) },
            C { alpha: c(1.0, 0.0) },
            C { alpha: c(0.0, 1.0) },
            C { alpha: c(-2.0, 0.0) },
        ]),
        Field::Real => out.extend([
            H { alpha: c(-2.0, 0.0) },
            H { alpha: c(1.0, 0.0) },
            HRot { s: 0.0 },
            HRot { s: 0.7 },
            Su2,
            ACal { alpha: 0.0 },
            ACal { alpha: -0.4 },
            CCal { alpha: 4.0 },
            CCal { alpha: 0.5 },
            CCal { alpha: 1.0 },
            CCal { alpha: -3.0 },
            B1,
            Bm1,
            EPlus { alpha: 0.5 },
            EPlus { alpha: 1.9 },
            EMinus { alpha: 1.5 },
            EMinus { alpha: -0.3 },
        ]),
    }
    out
}

/// A named model with the omega values as published alongside it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub params: Vec<(String, Scalar)>,
    /// Always carries the induced omega.
    pub algebra: Algebra,
    pub printed_omega: OmegaForm,
    pub source: String,
    /// Sign relating `printed_omega` to the induced form, if any.
    pub convention: Option<Convention>,
}

fn detect_convention(field: Field, bracket: &Bracket, printed: &OmegaForm) -> Option<Convention> {
    validate(&Algebra::new(field, *bracket, Some(*printed)), 1e-12).convention()
}

/// The printed omega of a class model. For every class the published form
/// coincides with the induced one; this table is kept independent of
/// `induced_omega` so the two can be checked against each other.
pub fn printed_omega(label: &ClassLabel) -> OmegaForm {
    use ClassLabel::*;
    let r = |xy: f64, xz: f64, yz: f64| OmegaForm::real(xy, xz, yz);
    match *label {
        L1 => r(1.0, 0.0, 0.0),
        L2 => r(0.0, 1.0, 0.0),
        A { .. } | ACal { .. } => r(0.0, 0.0, -1.0),
        B | B1 => r(0.0, 0.0, 2.0),
        Bm1 => r(0.0, 0.0, -2.0),
        C { alpha } => OmegaForm::new(re(0.0), re(0.0), alpha + 1.0),
        CCal { alpha } => r(0.0, 0.0, 1.0 + alpha),
        EPlus { alpha } => r(0.0, 0.0, alpha),
        EMinus { alpha } => r(0.0, 0.0, -alpha),
        _ => OmegaForm::zero(),
    }
}

fn class_source(label: &ClassLabel) -> &'static str {
    use ClassLabel::*;
    match label {
        L1 | L2 | A { .. } | B | C { .. } => "complex non-Lie list",
        ACal { .. } | CCal { .. } | B1 | Bm1 | EPlus { .. } | EMinus { .. } => "real non-Lie list",
        _ => "Lie algebras",
    }
}

pub fn class_entry(label: &ClassLabel, field: Field) -> Result<CatalogEntry> {
    let algebra = model(label, field)?;
    let printed = printed_omega(label);
    Ok(CatalogEntry {
        name: label.name().to_string(),
        params: label.params().into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
        convention: detect_convention(field, &algebra.bracket, &printed),
        algebra,
        printed_omega: printed,
        source: class_source(label).to_string(),
    })
}

/// Rows of the real Bianchi-type comparison table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BianchiType {
    IvT,
    ViT,
    ViS,
    ViN,
    ViiT,
    ViiiA,
    ViiiTA,
    ViiiNA,
    IxA,
}

/// The class stated in the table's third column.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum StatedClass {
    /// A specific class with specific parameters.
    Exact(ClassLabel),
    /// Some member of a one-parameter family, named by its label name.
    Family(&'static str),
}

impl StatedClass {
    pub fn matches(&self, label: &ClassLabel, tol: f64) -> bool {
        match self {
            StatedClass::Exact(l) => l.approx_eq(label, tol),
            StatedClass::Family(name) => label.name() == *name,
        }
    }
}

impl fmt::Display for StatedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StatedClass::Exact(l) => write!(f, "{l}"),
            StatedClass::Family(name) => write!(f, "{name}(alpha)"),
        }
    }
}

impl BianchiType {
    pub const ALL: [BianchiType; 9] = [
        BianchiType::IvT,
        BianchiType::ViT,
        BianchiType::ViS,
        BianchiType::ViN,
        BianchiType::ViiT,
        BianchiType::ViiiA,
        BianchiType::ViiiTA,
        BianchiType::ViiiNA,
        BianchiType::IxA,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BianchiType::IvT => "IV_T",
            BianchiType::ViT => "VI_T",
            BianchiType::ViS => "VI_S",
            BianchiType::ViN => "VI_N",
            BianchiType::ViiT => "VII_T",
            BianchiType::ViiiA => "VIII_a",
            BianchiType::ViiiTA => "VIII_T_a",
            BianchiType::ViiiNA => "VIII_N_a",
            BianchiType::IxA => "IX_a",
        }
    }

    pub fn is_parameterized(self) -> bool {
        matches!(
            self,
            BianchiType::ViiiA | BianchiType::ViiiTA | BianchiType::ViiiNA | BianchiType::IxA
        )
    }

    /// Bracket and printed omega, verbatim from the table.
    fn data(self, a: f64) -> (Bracket, OmegaForm) {
        let b = Bracket::real;
        let w = OmegaForm::real;
        match self {
            BianchiType::IvT => (b([0.0, 1.0, 0.0], [0.0, 0.0, 1.0], [1.0, 0.0, 0.0]), w(0.0, 0.0, -2.0)),
            BianchiType::ViT => (b([0.0, 1.0, 0.0], [0.0, 1.0, 1.0], [1.0, 0.0, 0.0]), w(0.0, 0.0, -2.0)),
            BianchiType::ViS => (b([-1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [1.0, 0.0, 1.0]), w(0.0, -2.0, 0.0)),
            BianchiType::ViN => (
                b([-1.0, 1.0, 0.0], [0.0, 1.0, 1.0], [1.0, 0.0, 1.0]),
                w(0.0, -2.0, -2.0),
            ),
            BianchiType::ViiT => (b([0.0, 1.0, 0.0], [0.0, -1.0, 1.0], [1.0, 0.0, 0.0]), w(0.0, 0.0, -2.0)),
            BianchiType::ViiiA => (
                b([0.0, 0.0, -1.0], [-a, -1.0, 0.0], [1.0, -a, 0.0]),
                w(2.0 * a, 0.0, 0.0),
            ),
            BianchiType::ViiiTA => (
                b([0.0, a, -1.0], [0.0, -1.0, a], [1.0, 0.0, 0.0]),
                w(0.0, 0.0, -2.0 * a),
            ),
            BianchiType::ViiiNA => (
                b([0.0, a, -1.0], [-a, -1.0, a], [1.0, -a, 0.0]),
                w(2.0 * a, 0.0, -2.0 * a),
            ),
            BianchiType::IxA => (
                b([0.0, 0.0, 1.0], [-a, -1.0, 0.0], [1.0, -a, 0.0]),
                w(-2.0 * a, 0.0, 0.0),
            ),
        }
    }

    /// Third-column class for parameter `a`.
    pub fn stated_class(self, a: f64) -> StatedClass {
        use ClassLabel::*;
        match self {
            BianchiType::IvT => StatedClass::Exact(CCal { alpha: 1.0 }),
            BianchiType::ViT | BianchiType::ViS => StatedClass::Exact(B1),
            BianchiType::ViN => StatedClass::Exact(L1),
            BianchiType::ViiT => StatedClass::Exact(Bm1),
            BianchiType::ViiiA => StatedClass::Family("EPlus"),
            BianchiType::ViiiTA if a == 1.0 => StatedClass::Exact(L2),
            BianchiType::ViiiTA => StatedClass::Family("CCal"),
            BianchiType::ViiiNA => StatedClass::Family("ACal"),
            BianchiType::IxA => StatedClass::Family("EMinus"),
        }
    }
}

impl FromStr for BianchiType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        BianchiType::ALL
            .iter()
            .copied()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::ParameterOutOfDomain(format!("unknown Bianchi type `{s}`")))
    }
}

/// Table row as printed; `a` is required (and must be positive) exactly for
/// the parameterized rows.
pub fn bianchi(kind: BianchiType, a: Option<f64>) -> Result<CatalogEntry> {
    let a = match (kind.is_parameterized(), a) {
        (true, Some(a)) if a > 0.0 && a.is_finite() => a,
        (true, Some(a)) => {
            return Err(Error::ParameterOutOfDomain(format!(
                "{} requires a > 0, got {a}",
                kind.name()
            )))
        }
        (true, None) => {
            return Err(Error::ParameterOutOfDomain(format!(
                "{} requires parameter `a`",
                kind.name()
            )))
        }
        (false, _) => 0.0,
    };
    let (bracket, printed) = kind.data(a);
    let params = if kind.is_parameterized() {
        vec![("a".to_string(), re(a))]
    } else {
        vec![]
    };
    Ok(CatalogEntry {
        name: kind.name().to_string(),
        params,
        algebra: Algebra::new(Field::Real, bracket, Some(induced_omega(&bracket))),
        printed_omega: printed,
        source: "Bianchi-type table".to_string(),
        convention: detect_convention(Field::Real, &bracket, &printed),
    })
}

/// Looks up a class or Bianchi row by name. Class names take `alpha` / `s`
/// parameters, Bianchi rows take `a`.
pub fn lookup(name: &str, params: &[(String, Scalar)], field: Field) -> Result<CatalogEntry> {
    if let Ok(kind) = name.parse::<BianchiType>() {
        let a = params.iter().find(|(k, _)| k == "a").map(|(_, v)| v.re);
        return bianchi(kind, a);
    }
    let label = ClassLabel::from_name(name, params)?;
    class_entry(&label, field)
}

/// The field a class name naturally lives in when none is requested.
pub fn default_field(name: &str) -> Field {
    if name.parse::<BianchiType>().is_ok() {
        return Field::Real;
    }
    match name {
        "HRot" | "Su2" | "ACal" | "CCal" | "B1" | "Bm1" | "EPlus" | "EMinus" => Field::Real,
        _ => Field::Complex,
    }
}
