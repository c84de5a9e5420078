//! The on-disk algebra format.

use serde::{Deserialize, Serialize};

use omega_lie::linalg::re;
use omega_lie::{Algebra, Bracket, Field, OmegaForm, Scalar, Vector3};

use crate::error::CliError;

/// Current version of every document and report this crate writes.
pub const SCHEMA_VERSION: u32 = 1;

/// A scalar as written in a document: a bare number or an `[re, im]` pair.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Number {
    Real(f64),
    Pair([f64; 2]),
}

impl Number {
    pub fn encode(x: Scalar, field: Field) -> Number {
        match field {
            Field::Real => Number::Real(x.re),
            Field::Complex => Number::Pair([x.re, x.im]),
        }
    }

    pub fn value(self) -> Scalar {
        match self {
            Number::Real(x) => re(x),
            Number::Pair([x, y]) => Scalar::new(x, y),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketTriples {
    pub xy: [Number; 3],
    pub xz: [Number; 3],
    pub yz: [Number; 3],
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OmegaValues {
    pub xy: Number,
    pub xz: Number,
    pub yz: Number,
}

/// One algebra: its field, the brackets of the basis pairs, and optionally
/// a stored omega. Without one, omega is induced from the brackets.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub version: u32,
    pub field: Field,
    pub brackets: BracketTriples,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<OmegaValues>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<serde_json::Value>,
}

fn vector(field: Field, v: &Vector3) -> [Number; 3] {
    v.0.map(|x| Number::encode(x, field))
}

impl AlgebraDocument {
    /// Encodes `a`; real algebras are written with bare numbers.
    pub fn from_algebra(a: &Algebra, with_omega: bool, metadata: Option<serde_json::Value>) -> Self {
        let f = a.field;
        AlgebraDocument {
            version: SCHEMA_VERSION,
            field: f,
            brackets: BracketTriples {
                xy: vector(f, &a.bracket.xy),
                xz: vector(f, &a.bracket.xz),
                yz: vector(f, &a.bracket.yz),
            },
            omega: with_omega.then(|| OmegaValues {
                xy: Number::encode(a.omega.xy, f),
                xz: Number::encode(a.omega.xz, f),
                yz: Number::encode(a.omega.yz, f),
            }),
            metadata,
        }
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let doc: AlgebraDocument = serde_json::from_str(text).map_err(|e| CliError::Input(e.to_string()))?;
        if doc.version != SCHEMA_VERSION {
            return Err(CliError::Input(format!(
                "unsupported document version {} (expected {SCHEMA_VERSION})",
                doc.version
            )));
        }
        Ok(doc)
    }

    pub fn read(path: &str) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{path}: {e}")))?;
        Self::parse(&text).map_err(|e| match e {
            CliError::Input(msg) => CliError::Input(format!("{path}: {msg}")),
            other => other,
        })
    }

    /// Whether the document stored an omega (otherwise it is induced).
    pub fn has_omega(&self) -> bool {
        self.omega.is_some()
    }

    /// Decodes into an algebra. Real documents must not carry imaginary
    /// parts.
    pub fn algebra(&self) -> Result<Algebra, CliError> {
        let field = self.field;
        let check = |where_: &str, n: Number| -> Result<Scalar, CliError> {
            let x = n.value();
            if !(x.re.is_finite() && x.im.is_finite()) {
                return Err(CliError::Input(format!("{where_}: non-finite value")));
            }
            if field == Field::Real && x.im != 0.0 {
                return Err(CliError::Input(format!("{where_}: imaginary part in a real document")));
            }
            Ok(x)
        };
        let triple = |key: &str, t: &[Number; 3]| -> Result<Vector3, CliError> {
            Ok(Vector3::new(
                check(&format!("brackets.{key}[0]"), t[0])?,
                check(&format!("brackets.{key}[1]"), t[1])?,
                check(&format!("brackets.{key}[2]"), t[2])?,
            ))
        };
        let b = &self.brackets;
        let bracket = Bracket::new(triple("xy", &b.xy)?, triple("xz", &b.xz)?, triple("yz", &b.yz)?);
        let omega = match &self.omega {
            Some(w) => Some(OmegaForm::new(
                check("omega.xy", w.xy)?,
                check("omega.xz", w.xz)?,
                check("omega.yz", w.yz)?,
            )),
            None => None,
        };
        Ok(Algebra::new(field, bracket, omega))
    }
}
