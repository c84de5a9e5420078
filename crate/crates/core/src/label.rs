//! Classification verdicts.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::Field;
use crate::error::{Error, Result};
use crate::linalg::{fmt_scalar, re, Scalar};

/// An isomorphism class of 3-dimensional omega-Lie algebras together with
/// its canonical parameters.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "label")]
pub enum ClassLabel {
    // Lie algebras (omega = 0), both fields.
    Abelian,
    /// `[y,z] = y`
    G1,
    /// `[y,z] = x` (Heisenberg)
    G2,
    /// `[x,y] = y, [x,z] = αz`, `α ≠ 0`, `|α| ≥ 1`
    H {
        alpha: Scalar,
    },
    /// `[x,y] = y, [x,z] = y + z`
    G3,
    /// `[x,y] = 2y, [x,z] = −2z, [y,z] = x`
    G4,
    /// Real only: `[x,y] = s y − z, [x,z] = y + s z`, `s ≥ 0`.
    HRot {
        s: f64,
    },
    /// Real only: `[x,y] = z, [y,z] = x, [z,x] = y`.
    Su2,

    // Non-Lie, both fields.
    L1,
    L2,

    // Non-Lie, complex.
    A {
        alpha: Scalar,
    },
    B,
    C {
        alpha: Scalar,
    },

    // Non-Lie, real.
    ACal {
        alpha: f64,
    },
    CCal {
        alpha: f64,
    },
    B1,
    Bm1,
    EPlus {
        alpha: f64,
    },
    EMinus {
        alpha: f64,
    },
}

/// Which fields a label may be produced in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Availability {
    Both,
    RealOnly,
    ComplexOnly,
}

impl ClassLabel {
    pub fn name(&self) -> &'static str {
        use ClassLabel::*;
        match self {
            Abelian => "Abelian",
            G1 => "G1",
            G2 => "G2",
            H { .. } => "H",
            G3 => "G3",
            G4 => "G4",
            HRot { .. } => "HRot",
            Su2 => "Su2",
            L1 => "L1",
            L2 => "L2",
            A { .. } => "A",
            B => "B",
            C { .. } => "C",
            ACal { .. } => "ACal",
            CCal { .. } => "CCal",
            B1 => "B1",
            Bm1 => "Bm1",
            EPlus { .. } => "EPlus",
            EMinus { .. } => "EMinus",
        }
    }

    /// Named parameters, in a fixed order.
    pub fn params(&self) -> Vec<(&'static str, Scalar)> {
        use ClassLabel::*;
        match *self {
            H { alpha } | A { alpha } | C { alpha } => vec![("alpha", alpha)],
            ACal { alpha } | CCal { alpha } | EPlus { alpha } | EMinus { alpha } => {
                vec![("alpha", re(alpha))]
            }
            HRot { s } => vec![("s", re(s))],
            _ => vec![],
        }
    }

    pub fn is_lie(&self) -> bool {
        use ClassLabel::*;
        matches!(self, Abelian | G1 | G2 | H { .. } | G3 | G4 | HRot { .. } | Su2)
    }

    pub fn availability(&self) -> Availability {
        use ClassLabel::*;
        match self {
            HRot { .. } | Su2 | ACal { .. } | CCal { .. } | B1 | Bm1 | EPlus { .. } | EMinus { .. } => {
                Availability::RealOnly
            }
            A { .. } | B | C { .. } => Availability::ComplexOnly,
            _ => Availability::Both,
        }
    }

    pub fn allowed_in(&self, field: Field) -> bool {
        match (self.availability(), field) {
            (Availability::Both, Field::Real) => self.params().iter().all(|(_, p)| p.im == 0.0),
            (Availability::Both, Field::Complex) => true,
            (Availability::RealOnly, f) => f == Field::Real,
            (Availability::ComplexOnly, f) => f == Field::Complex,
        }
    }

    /// Every label name, in catalog order.
    pub fn names() -> &'static [&'static str] {
        &[
            "Abelian", "G1", "G2", "H", "G3", "G4", "HRot", "Su2", "L1", "L2", "A", "B", "C", "ACal", "CCal", "B1",
            "Bm1", "EPlus", "EMinus",
        ]
    }

    /// Builds a label from its name and parameter list. Missing parameters
    /// are an error; extra ones are ignored.
    pub fn from_name(name: &str, params: &[(String, Scalar)]) -> Result<ClassLabel> {
        use ClassLabel::*;
        let get = |key: &str| -> Result<Scalar> {
            params
                .iter()
                .find(|(k, _)| k == key)
                .map(|(_, v)| *v)
                .ok_or_else(|| Error::ParameterOutOfDomain(format!("{name} requires parameter `{key}`")))
        };
        let real = |key: &str| -> Result<f64> {
            let v = get(key)?;
            if v.im != 0.0 {
                return Err(Error::ParameterOutOfDomain(format!("{name}: `{key}` must be real")));
            }
            Ok(v.re)
        };
        Ok(match name {
            "Abelian" => Abelian,
            "G1" => G1,
            "G2" => G2,
            "H" => H { alpha: get("alpha")? },
            "G3" => G3,
            "G4" => G4,
            "HRot" => HRot { s: real("s")? },
            "Su2" => Su2,
            "L1" => L1,
            "L2" => L2,
            "A" => A { alpha: get("alpha")? },
            "B" => B,
            "C" => C { alpha: get("alpha")? },
            "ACal" => ACal { alpha: real("alpha")? },
            "CCal" => CCal { alpha: real("alpha")? },
            "B1" => B1,
            "Bm1" => Bm1,
            "EPlus" => EPlus { alpha: real("alpha")? },
            "EMinus" => EMinus { alpha: real("alpha")? },
            other => return Err(Error::ParameterOutOfDomain(format!("unknown class `{other}`"))),
        })
    }

    /// Same class with every parameter within `tol` (relative to
    /// `max(1, |param|)`).
    pub fn approx_eq(&self, other: &ClassLabel, tol: f64) -> bool {
        if self.name() != other.name() {
            return false;
        }
        self.params()
            .iter()
            .zip(other.params())
            .all(|((_, a), (_, b))| (a - b).norm() <= tol * a.norm().max(1.0))
    }

    /// Largest parameter discrepancy against a label of the same class.
    pub fn param_error(&self, other: &ClassLabel) -> Option<f64> {
        if self.name() != other.name() {
            return None;
        }
        Some(
            self.params()
                .iter()
                .zip(other.params())
                .map(|((_, a), (_, b))| (a - b).norm())
                .fold(0.0, f64::max),
        )
    }

    /// Representative of this label's isomorphism class within its family:
    /// ratio parameters up to inversion, rotation parameters up to sign, and
    /// the `A` families collapse to parameter 0 (`z ↦ z + t x` carries
    /// `A(α)` to `A(α − 2t)`).
    pub fn canonical(&self) -> Result<ClassLabel> {
        use ClassLabel::*;
        Ok(match *self {
            H { alpha } => H {
                alpha: canonicalize_ratio(alpha)?,
            },
            C { alpha } => C {
                alpha: canonicalize_ratio(alpha)?,
            },
            CCal { alpha } => CCal {
                alpha: canonicalize_ratio(re(alpha))?.re,
            },
            A { .. } => A { alpha: re(0.0) },
            ACal { .. } => ACal { alpha: 0.0 },
            EPlus { alpha } => EPlus { alpha: alpha.abs() },
            EMinus { alpha } => EMinus { alpha: alpha.abs() },
            HRot { s } => HRot { s: s.abs() },
            other => other,
        })
    }

    /// The complex class of the complexification, where it needs no
    /// computation; `None` for rotation-type real classes whose complex
    /// parameter must be derived.
    pub fn complex_counterpart(&self) -> Option<ClassLabel> {
        use ClassLabel::*;
        match *self {
            ACal { alpha } => Some(A { alpha: re(alpha) }),
            CCal { alpha } => Some(C { alpha: re(alpha) }),
            B1 | Bm1 => Some(B),
            Su2 => Some(G4),
            HRot { .. } | EPlus { .. } | EMinus { .. } => None,
            other => Some(other),
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params = self.params();
        if params.is_empty() {
            return write!(f, "{}", self.name());
        }
        let body: Vec<String> = params.iter().map(|(_, v)| fmt_scalar(*v)).collect();
        write!(f, "{}({})", self.name(), body.join(", "))
    }
}

/// Representative of `{α, 1/α}` with `|α| > 1`; on the unit circle the one
/// with nonnegative imaginary part, then nonnegative real part.
pub fn canonicalize_ratio(alpha: Scalar) -> Result<Scalar> {
    canonicalize_ratio_tol(alpha, ROUNDING)
}

/// Ties closer than this are rounding noise.
const ROUNDING: f64 = 4.0 * f64::EPSILON;

/// A computed ratio, already the preferred member of its pair at `band`,
/// moved onto the unit circle (and onto `±1`) when it is a tie there, so
/// that the reported parameter is canonical at rounding level.
pub(crate) fn settle_ratio(alpha: Scalar, band: f64) -> Scalar {
    let m = alpha.norm();
    if (m - 1.0 / m).abs() > band * m.max(1.0 / m) * 2.0 {
        return alpha;
    }
    let unit = alpha / m;
    if unit.im.abs() <= band {
        re(unit.re.signum())
    } else {
        unit
    }
}

/// As [`canonicalize_ratio`], treating `||α| − 1| ≤ band` and `|Im α| ≤ band`
/// as ties. Used on computed parameters, which carry rounding error.
pub fn canonicalize_ratio_tol(alpha: Scalar, band: f64) -> Result<Scalar> {
    if alpha.norm() == 0.0 || !alpha.is_finite() {
        return Err(Error::ZeroParameter);
    }
    let inv = alpha.inv();
    Ok(if prefer_first(alpha, inv, band) { alpha } else { inv })
}

/// Whether `a` is the canonical member of the pair `{a, b = 1/a}`.
pub(crate) fn prefer_first(a: Scalar, b: Scalar, band: f64) -> bool {
    let (ma, mb) = (a.norm(), b.norm());
    if (ma - mb).abs() > band * ma.max(mb).max(1.0) * 2.0 {
        return ma > mb;
    }
    if (a.im - b.im).abs() > band * 2.0 {
        return a.im >= b.im;
    }
    if (a.re - b.re).abs() > band * 2.0 {
        return a.re >= b.re;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonicalize_examples() {
        assert_eq!(canonicalize_ratio(re(2.0)).unwrap(), re(2.0));
        assert_eq!(canonicalize_ratio(re(0.5)).unwrap(), re(2.0));
        let i = Scalar::new(0.0, 1.0);
        assert_eq!(canonicalize_ratio(i).unwrap(), i);
        assert_eq!(canonicalize_ratio(-i).unwrap(), i);
        assert_eq!(canonicalize_ratio(re(-1.0)).unwrap(), re(-1.0));
        assert_eq!(canonicalize_ratio(re(0.0)), Err(Error::ZeroParameter));
    }

    #[test]
    fn settled_ratios_are_canonical() {
        let w = Scalar::new(0.5000000000000004, -0.8660254037844385);
        let first = if prefer_first(w, w.inv(), 1e-9) { w } else { w.inv() };
        let s = settle_ratio(first, 1e-9);
        assert_eq!(canonicalize_ratio(s).unwrap(), s);
        assert!(s.im > 0.0);
        assert_eq!(settle_ratio(Scalar::new(-1.0 + 1e-12, 1e-11), 1e-9), re(-1.0));
        assert_eq!(settle_ratio(re(3.0), 1e-9), re(3.0));
    }

    #[test]
    fn canonicalize_is_idempotent_and_inversion_invariant() {
        for (x, y) in [
            (0.3, 0.1),
            (-1.7, 2.2),
            (0.6, -0.8),
            (-0.6, 0.8),
            (1.0, 0.0),
            (4.0, -3.0),
        ] {
            let a = Scalar::new(x, y);
            let c = canonicalize_ratio(a).unwrap();
            assert_eq!(canonicalize_ratio(c).unwrap(), c);
            let ci = canonicalize_ratio(a.inv()).unwrap();
            assert!((c - ci).norm() < 1e-12, "{a}: {c} vs {ci}");
        }
    }

    #[test]
    fn names_round_trip() {
        let p = vec![("alpha".to_string(), re(2.0)), ("s".to_string(), re(0.5))];
        for name in ClassLabel::names() {
            let l = ClassLabel::from_name(name, &p).unwrap();
            assert_eq!(l.name(), *name);
        }
        assert!(ClassLabel::from_name("C", &[]).is_err());
        assert!(ClassLabel::from_name("Q", &[]).is_err());
    }

    #[test]
    fn canonical_representatives() {
        assert_eq!(
            ClassLabel::C { alpha: re(0.5) }.canonical().unwrap(),
            ClassLabel::C { alpha: re(2.0) }
        );
        assert_eq!(
            ClassLabel::A { alpha: re(3.0) }.canonical().unwrap(),
            ClassLabel::A { alpha: re(0.0) }
        );
        assert_eq!(
            ClassLabel::EMinus { alpha: -1.5 }.canonical().unwrap(),
            ClassLabel::EMinus { alpha: 1.5 }
        );
        assert_eq!(ClassLabel::B1.canonical().unwrap(), ClassLabel::B1);
    }

    #[test]
    fn availability() {
        assert!(ClassLabel::B1.allowed_in(Field::Real));
        assert!(!ClassLabel::B1.allowed_in(Field::Complex));
        assert!(ClassLabel::B.allowed_in(Field::Complex));
        assert!(!ClassLabel::H {
            alpha: Scalar::new(1.0, 1.0)
        }
        .allowed_in(Field::Real));
        assert_eq!(format!("{}", ClassLabel::C { alpha: re(2.0) }), "C(2)");
    }
}
