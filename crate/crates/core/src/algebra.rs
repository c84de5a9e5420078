//! Structure constants, the omega-Jacobi identity, and change of basis.
//!
//! A 3-dimensional algebra is stored by the three brackets `[e1,e2]`,
//! `[e1,e3]`, `[e2,e3]` and the three values `ω(e1,e2)`, `ω(e1,e3)`,
//! `ω(e2,e3)`. Skew-symmetry of both is structural.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Matrix3, Scalar, Vector3, ZERO};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Real,
    Complex,
}

impl Field {
    pub fn as_str(self) -> &'static str {
        match self {
            Field::Real => "real",
            Field::Complex => "complex",
        }
    }
}

/// Numerical thresholds used across validation and classification.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// omega-Jacobi residual, relative to the squared structure-constant scale.
    pub val: f64,
    /// Rank decisions, relative to the largest matrix entry.
    pub rank: f64,
    /// Eigenvalue clustering, relative to `max(1, ‖m‖_F)`.
    pub spec: f64,
    /// Witness residual (absolute, max-norm).
    pub wit: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            val: 1e-9,
            rank: 1e-9,
            spec: 1e-7,
            wit: 1e-6,
        }
    }
}

/// The three independent brackets of a skew product on a 3-dimensional space.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Bracket {
    pub xy: Vector3,
    pub xz: Vector3,
    pub yz: Vector3,
}

impl Bracket {
    pub const fn new(xy: Vector3, xz: Vector3, yz: Vector3) -> Self {
        Bracket { xy, xz, yz }
    }

    pub fn real(xy: [f64; 3], xz: [f64; 3], yz: [f64; 3]) -> Self {
        Bracket {
            xy: Vector3::real(xy[0], xy[1], xy[2]),
            xz: Vector3::real(xz[0], xz[1], xz[2]),
            yz: Vector3::real(yz[0], yz[1], yz[2]),
        }
    }

    pub const fn zero() -> Self {
        Bracket::new(Vector3::zero(), Vector3::zero(), Vector3::zero())
    }

    /// `[e_i, e_j]` for any pair of basis indices.
    pub fn basis(&self, i: usize, j: usize) -> Vector3 {
        match (i, j) {
            (0, 1) => self.xy,
            (0, 2) => self.xz,
            (1, 2) => self.yz,
            (1, 0) => -self.xy,
            (2, 0) => -self.xz,
            (2, 1) => -self.yz,
            _ => Vector3::zero(),
        }
    }

    /// The bracket of two arbitrary vectors.
    pub fn apply(&self, u: &Vector3, v: &Vector3) -> Vector3 {
        let c = |i: usize, j: usize| u[i] * v[j] - u[j] * v[i];
        c(0, 1) * self.xy + c(0, 2) * self.xz + c(1, 2) * self.yz
    }

    /// Matrix whose columns are `[e1,e2]`, `[e1,e3]`, `[e2,e3]`; its column
    /// space is the derived algebra.
    pub fn matrix(&self) -> Matrix3 {
        Matrix3::from_cols(self.xy, self.xz, self.yz)
    }

    pub fn max_abs(&self) -> f64 {
        self.xy.max_abs().max(self.xz.max_abs()).max(self.yz.max_abs())
    }

    pub fn is_real(&self) -> bool {
        self.xy.is_real() && self.xz.is_real() && self.yz.is_real()
    }

    pub fn is_finite(&self) -> bool {
        self.xy.is_finite() && self.xz.is_finite() && self.yz.is_finite()
    }

    pub fn scale(&self, s: Scalar) -> Bracket {
        Bracket::new(self.xy.scale(s), self.xz.scale(s), self.yz.scale(s))
    }
}

/// A skew bilinear form, stored by its values on basis pairs `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct OmegaForm {
    pub xy: Scalar,
    pub xz: Scalar,
    pub yz: Scalar,
}

impl OmegaForm {
    pub const fn new(xy: Scalar, xz: Scalar, yz: Scalar) -> Self {
        OmegaForm { xy, xz, yz }
    }

    pub fn real(xy: f64, xz: f64, yz: f64) -> Self {
        OmegaForm::new(Scalar::new(xy, 0.0), Scalar::new(xz, 0.0), Scalar::new(yz, 0.0))
    }

    pub const fn zero() -> Self {
        OmegaForm::new(ZERO, ZERO, ZERO)
    }

    pub fn matrix(&self) -> Matrix3 {
        Matrix3([
            [ZERO, self.xy, self.xz],
            [-self.xy, ZERO, self.yz],
            [-self.xz, -self.yz, ZERO],
        ])
    }

    pub fn eval(&self, u: &Vector3, v: &Vector3) -> Scalar {
        u.dot(&self.matrix().mul_vec(v))
    }

    pub fn components(&self) -> [Scalar; 3] {
        [self.xy, self.xz, self.yz]
    }

    pub fn max_abs(&self) -> f64 {
        self.components().iter().map(|x| x.norm()).fold(0.0, f64::max)
    }

    pub fn neg(&self) -> OmegaForm {
        OmegaForm::new(-self.xy, -self.xz, -self.yz)
    }

    pub fn is_real(&self) -> bool {
        self.components().iter().all(|x| x.im == 0.0)
    }

    pub fn is_finite(&self) -> bool {
        self.components().iter().all(|x| x.re.is_finite() && x.im.is_finite())
    }

    /// Componentwise max-norm distance; returns the distance and the name of
    /// the worst component.
    pub fn distance(&self, other: &OmegaForm) -> (f64, &'static str) {
        let names = ["xy", "xz", "yz"];
        let (a, b) = (self.components(), other.components());
        (0..3)
            .map(|k| ((a[k] - b[k]).norm(), names[k]))
            .fold((0.0, "xy"), |acc, x| if x.0 > acc.0 { x } else { acc })
    }
}

/// An omega-Lie algebra candidate over a chosen field.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Algebra {
    pub field: Field,
    pub bracket: Bracket,
    pub omega: OmegaForm,
}

impl Algebra {
    /// Builds an algebra; when `omega` is absent the unique compatible form
    /// is induced from the bracket.
    pub fn new(field: Field, bracket: Bracket, omega: Option<OmegaForm>) -> Self {
        let omega = omega.unwrap_or_else(|| induced_omega(&bracket));
        Algebra { field, bracket, omega }
    }

    pub fn induced(field: Field, bracket: Bracket) -> Self {
        Algebra::new(field, bracket, None)
    }

    /// Same structure constants, reinterpreted over the complex numbers.
    pub fn complexify(&self) -> Algebra {
        Algebra {
            field: Field::Complex,
            ..*self
        }
    }

    /// Max-norm distance over all structure constants and omega values.
    pub fn distance(&self, other: &Algebra) -> f64 {
        let (a, b) = (&self.bracket, &other.bracket);
        let br = (a.xy - b.xy)
            .max_abs()
            .max((a.xz - b.xz).max_abs())
            .max((a.yz - b.yz).max_abs());
        br.max(self.omega.distance(&other.omega).0)
    }

    pub fn is_real(&self) -> bool {
        self.bracket.is_real() && self.omega.is_real()
    }
}

/// `[[e1,e2],e3] + [[e2,e3],e1] + [[e3,e1],e2]` in basis coordinates. The
/// Jacobiator is alternating trilinear, so on a 3-dimensional space this one
/// vector determines it on every triple.
pub fn jacobiator(b: &Bracket) -> Vector3 {
    let e = [Vector3::unit(0), Vector3::unit(1), Vector3::unit(2)];
    b.apply(&b.xy, &e[2]) + b.apply(&b.yz, &e[0]) + b.apply(&-b.xz, &e[1])
}

/// The unique omega compatible with `b`: `ω(y,z) = J₁`, `ω(z,x) = J₂`,
/// `ω(x,y) = J₃`.
pub fn induced_omega(b: &Bracket) -> OmegaForm {
    let j = jacobiator(b);
    OmegaForm::new(j[2], -j[1], j[0])
}

/// Sign convention relating a stored omega to the omega-Jacobi identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// Stored omega satisfies the identity as written.
    Plus,
    /// Stored omega satisfies it only after a global sign flip.
    Minus,
}

impl Convention {
    pub fn as_str(self) -> &'static str {
        match self {
            Convention::Plus => "plus",
            Convention::Minus => "minus",
        }
    }

    pub fn sign(self) -> f64 {
        match self {
            Convention::Plus => 1.0,
            Convention::Minus => -1.0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub induced_omega: OmegaForm,
    /// max |stored ω − induced ω|
    pub discrepancy: f64,
    pub worst_component: String,
    /// max |stored ω + induced ω|, the residual under the negated convention.
    pub discrepancy_negated: f64,
    /// Absolute threshold actually applied: `tol · max(1, scale)²`.
    pub threshold: f64,
    pub pass: bool,
    pub pass_negated: bool,
    pub field_ok: bool,
    pub finite: bool,
    pub is_lie: bool,
}

impl ValidationReport {
    /// The convention under which the stored omega passes, preferring `Plus`.
    pub fn convention(&self) -> Option<Convention> {
        if self.pass {
            Some(Convention::Plus)
        } else if self.pass_negated {
            Some(Convention::Minus)
        } else {
            None
        }
    }
}

/// Absolute threshold for omega-type quantities, which are quadratic in the
/// structure constants.
pub(crate) fn omega_threshold(b: &Bracket, tol: f64) -> f64 {
    tol * b.max_abs().max(1.0).powi(2)
}

pub fn validate(a: &Algebra, tol: f64) -> ValidationReport {
    let induced = induced_omega(&a.bracket);
    let (discrepancy, worst) = a.omega.distance(&induced);
    let (discrepancy_negated, _) = a.omega.distance(&induced.neg());
    let threshold = omega_threshold(&a.bracket, tol);
    let finite = a.bracket.is_finite() && a.omega.is_finite();
    let field_ok = a.field == Field::Complex || a.is_real();
    let ok = finite && field_ok;
    ValidationReport {
        induced_omega: induced,
        discrepancy,
        worst_component: worst.to_string(),
        discrepancy_negated,
        threshold,
        pass: ok && discrepancy < threshold,
        pass_negated: ok && discrepancy_negated < threshold,
        field_ok,
        finite,
        is_lie: induced.max_abs() < threshold,
    }
}

/// Rewrites `a` in the basis `f_i = Σ_j p[j][i] e_j` (columns of `p` are the
/// new basis vectors in old coordinates). Omega pulls back as a bilinear form.
pub fn transform(a: &Algebra, p: &Matrix3) -> Result<Algebra> {
    transform_with_tol(a, p, Tolerances::default().rank)
}

pub fn transform_with_tol(a: &Algebra, p: &Matrix3, tol_rank: f64) -> Result<Algebra> {
    if a.field == Field::Real && !p.is_real() {
        return Err(Error::FieldMismatch);
    }
    let det = p.det().norm();
    let scale = p.max_abs();
    if !(det > tol_rank * scale.powi(3)) {
        return Err(Error::SingularMatrix { det });
    }
    let inv = p.inverse().ok_or(Error::SingularMatrix { det })?;
    let cols = [p.col(0), p.col(1), p.col(2)];
    let new = |i: usize, j: usize| inv.mul_vec(&a.bracket.apply(&cols[i], &cols[j]));
    let w = |i: usize, j: usize| a.omega.eval(&cols[i], &cols[j]);
    Ok(Algebra {
        field: a.field,
        bracket: Bracket::new(new(0, 1), new(0, 2), new(1, 2)),
        omega: OmegaForm::new(w(0, 1), w(0, 2), w(1, 2)),
    })
}

/// Dimension of the derived algebra `L' = [L, L]`.
pub fn derived_rank(b: &Bracket, tol: f64) -> usize {
    b.matrix().rank(tol)
}

/// Spanning vector of the radical of a nonzero skew form on a 3-dimensional
/// space, unit-normalized with its largest coordinate real and positive.
/// `None` when `w` is below `tol` everywhere.
pub fn omega_radical(w: &OmegaForm, tol: f64) -> Option<Vector3> {
    if w.max_abs() <= tol {
        return None;
    }
    // The Hodge dual of the form annihilates it.
    let v = Vector3::new(w.yz, -w.xz, w.xy);
    Some(normalize_phase(&v))
}

/// Unit vector along `v` whose largest-magnitude coordinate is real positive.
pub(crate) fn normalize_phase(v: &Vector3) -> Vector3 {
    let k = v.argmax_abs();
    let lead = v[k];
    let phase = lead.conj() / lead.norm();
    let u = v.scale(phase / v.norm());
    let mut out = u;
    // Pin the lead coordinate; the phase product may leave a rounding-level
    // imaginary part behind.
    out[k] = Scalar::new(u[k].re, 0.0);
    out
}

/// Matrix of `u ↦ [v, u]`.
pub fn adjoint(b: &Bracket, v: &Vector3) -> Matrix3 {
    Matrix3::from_cols(
        b.apply(v, &Vector3::unit(0)),
        b.apply(v, &Vector3::unit(1)),
        b.apply(v, &Vector3::unit(2)),
    )
}

/// Basis change carrying an input algebra onto a target, with the max-norm
/// residual of `transform(input, matrix)` against that target.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub matrix: Matrix3,
    pub residual: f64,
}

impl Witness {
    /// Measures `matrix` as a witness from `from` to `to`.
    pub fn measure(from: &Algebra, to: &Algebra, matrix: Matrix3) -> Result<Witness> {
        // Only exact singularity is refused here; the residual decides.
        let image = transform_with_tol(from, &matrix, 0.0)?;
        Ok(Witness {
            matrix,
            residual: image.distance(to),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::re;

    fn l1() -> Bracket {
        Bracket::real([0.0, 1.0, 0.0], [0.0; 3], [0.0, 0.0, 1.0])
    }

    fn b_model() -> Bracket {
        Bracket::real([0.0, 1.0, 0.0], [0.0, 1.0, 1.0], [1.0, 0.0, 0.0])
    }

    fn a_alpha(alpha: f64) -> Bracket {
        Bracket::real([1.0, 0.0, 0.0], [1.0, 1.0, 0.0], [alpha, 0.0, 1.0])
    }

    fn g4() -> Bracket {
        Bracket::real([0.0, 2.0, 0.0], [0.0, 0.0, -2.0], [1.0, 0.0, 0.0])
    }

    fn c_alpha(alpha: f64) -> Bracket {
        Bracket::real([0.0, 1.0, 0.0], [0.0, 0.0, alpha], [1.0, 0.0, 0.0])
    }

    #[test]
    fn jacobiator_examples() {
        assert_eq!(jacobiator(&Bracket::zero()), Vector3::zero());
        assert_eq!(jacobiator(&l1()), Vector3::real(0.0, 0.0, 1.0));
        assert_eq!(jacobiator(&b_model()), Vector3::real(2.0, 0.0, 0.0));
    }

    #[test]
    fn induced_omega_examples() {
        assert_eq!(induced_omega(&l1()), OmegaForm::real(1.0, 0.0, 0.0));
        assert_eq!(induced_omega(&g4()), OmegaForm::zero());
        for alpha in [-2.0, 0.0, 0.5, 3.0] {
            assert_eq!(induced_omega(&a_alpha(alpha)), OmegaForm::real(0.0, 0.0, -1.0));
        }
    }

    #[test]
    fn validate_examples() {
        let a = Algebra::new(Field::Real, l1(), Some(OmegaForm::real(1.0, 0.0, 0.0)));
        let r = validate(&a, 1e-12);
        assert!(r.pass && !r.is_lie);

        let a = Algebra::new(Field::Real, l1(), Some(OmegaForm::zero()));
        let r = validate(&a, 1e-12);
        assert!(!r.pass);
        assert_eq!(r.discrepancy, 1.0);
        assert_eq!(r.worst_component, "xy");

        // IV_T bracket with its printed omega(y,z) = -2.
        let iv_t = Bracket::real([0.0, 1.0, 0.0], [0.0, 0.0, 1.0], [1.0, 0.0, 0.0]);
        let a = Algebra::new(Field::Real, iv_t, Some(OmegaForm::real(0.0, 0.0, -2.0)));
        let r = validate(&a, 1e-12);
        assert!(!r.pass && r.pass_negated);
        assert_eq!(r.convention(), Some(Convention::Minus));
    }

    #[test]
    fn validate_flags_field_and_finiteness() {
        let mut b = l1();
        b.xy[0] = Scalar::new(0.0, 1.0);
        let r = validate(&Algebra::induced(Field::Real, b), 1e-12);
        assert!(!r.field_ok && !r.pass);
        let mut b = l1();
        b.yz[1] = re(f64::NAN);
        let r = validate(&Algebra::induced(Field::Complex, b), 1e-12);
        assert!(!r.finite && !r.pass);
    }

    #[test]
    fn transform_identity_and_singular() {
        let a = Algebra::induced(Field::Real, b_model());
        assert_eq!(transform(&a, &Matrix3::identity()).unwrap(), a);
        let sing = Matrix3::from_real([[1.0, 2.0, 0.0], [2.0, 4.0, 0.0], [0.0, 0.0, 1.0]]);
        assert!(matches!(transform(&a, &sing), Err(Error::SingularMatrix { .. })));
        let complex = Matrix3::identity().scale(Scalar::new(0.0, 1.0));
        assert_eq!(transform(&a, &complex), Err(Error::FieldMismatch));
    }

    #[test]
    fn transform_uniform_scaling() {
        // f_i = s e_i: [f_i, f_j] = s² [e_i, e_j] = s [e_i, e_j]_f, ω scales by s².
        let s = 3.0;
        let a = Algebra::induced(Field::Complex, c_alpha(2.0));
        let t = transform(&a, &Matrix3::diag(re(s), re(s), re(s))).unwrap();
        let expect = Algebra::new(
            Field::Complex,
            c_alpha(2.0).scale(re(s)),
            Some(OmegaForm::real(0.0, 0.0, 3.0 * s * s)),
        );
        assert!(t.distance(&expect) < 1e-12);
        assert!(validate(&t, 1e-12).pass);
    }

    #[test]
    fn derived_rank_examples() {
        assert_eq!(derived_rank(&Bracket::zero(), 1e-9), 0);
        assert_eq!(derived_rank(&l1(), 1e-9), 2);
        for alpha in [-3.0, 0.0, 1.0, 7.5] {
            assert_eq!(derived_rank(&a_alpha(alpha), 1e-9), 3);
        }
    }

    #[test]
    fn radical_examples() {
        let w = induced_omega(&b_model());
        assert_eq!(omega_radical(&w, 1e-12), Some(Vector3::real(1.0, 0.0, 0.0)));
        assert_eq!(
            omega_radical(&OmegaForm::real(1.0, 0.0, 0.0), 1e-12),
            Some(Vector3::real(0.0, 0.0, 1.0))
        );
        assert_eq!(omega_radical(&OmegaForm::zero(), 1e-12), None);
    }

    #[test]
    fn radical_normalization_is_phase_fixed() {
        let i = Scalar::new(0.0, 1.0);
        let w = OmegaForm::new(i, re(0.5), Scalar::new(0.2, -0.3));
        let v = omega_radical(&w, 1e-12).unwrap();
        assert!((v.norm() - 1.0).abs() < 1e-15);
        let k = v.argmax_abs();
        assert!(v[k].im == 0.0 && v[k].re > 0.0);
        for j in 0..3 {
            assert!(w.eval(&v, &Vector3::unit(j)).norm() < 1e-15);
        }
    }

    #[test]
    fn adjoint_examples() {
        let alpha = 2.5;
        let ad = adjoint(&c_alpha(alpha), &Vector3::unit(0));
        assert_eq!(ad, Matrix3::diag(re(0.0), re(1.0), re(alpha)));

        let ad = adjoint(&a_alpha(-1.0), &Vector3::unit(0));
        let ad2 = ad * ad;
        assert!(ad2.mul_vec(&Vector3::unit(2)).max_abs() > 0.5);
        assert_eq!(ad2 * ad, Matrix3::zero());

        assert_eq!(
            adjoint(&Bracket::zero(), &Vector3::real(1.0, 2.0, 3.0)),
            Matrix3::zero()
        );
    }
}
