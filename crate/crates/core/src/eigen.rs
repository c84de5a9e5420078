//! Closed-form spectral analysis of 3x3 operators and their canonical-form
//! type.
//!
//! `spectral_type` assumes zero is an eigenvalue (it is always called on the
//! adjoint of a vector, which kills that vector). It works from the
//! characteristic-polynomial coefficients `tr` and `c₂` of
//! `λ (λ² − tr λ + c₂)` rather than from clustered roots: a coefficient moves
//! linearly with a perturbation of the matrix, a repeated root only like its
//! square root.

use serde::{Deserialize, Serialize};

use crate::algebra::Field;
use crate::error::{Error, Result};
use crate::linalg::{band, re, Band, Matrix3, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Eigenvalues {
    pub values: [Scalar; 3],
    /// `|det(m − λI)| / ‖adj(m − λI)‖_F` per root: the distance from
    /// `m − λI` to the nearest singular matrix, to first order.
    pub backward_error: [f64; 3],
}

/// Roots of `det(m − λI)` by Cardano's formula over ℂ, polished with a
/// guarded Newton step.
pub fn eigenvalues3(m: &Matrix3) -> Eigenvalues {
    let tr = m.trace();
    let c2 = m.principal_minor_sum();
    let det = m.det();
    // λ³ + a λ² + b λ + c
    let (a, b, c) = (-tr, c2, -det);
    let mut values = cubic_roots(a, b, c);
    let poly = |x: Scalar| ((x + a) * x + b) * x + c;
    let dpoly = |x: Scalar| (re(3.0) * x + re(2.0) * a) * x + b;
    for v in values.iter_mut() {
        for _ in 0..3 {
            let f = poly(*v);
            let df = dpoly(*v);
            if df.norm() == 0.0 || f.norm() == 0.0 {
                break;
            }
            let cand = *v - f / df;
            if poly(cand).norm() < f.norm() {
                *v = cand;
            } else {
                break;
            }
        }
    }
    let backward_error = values.map(|lambda| {
        let shifted = *m - Matrix3::identity().scale(lambda);
        let adj = shifted.adjugate().norm_fro();
        if adj == 0.0 {
            0.0
        } else {
            shifted.det().norm() / adj
        }
    });
    Eigenvalues { values, backward_error }
}

/// Roots of the monic cubic `x³ + a x² + b x + c`.
pub fn cubic_roots(a: Scalar, b: Scalar, c: Scalar) -> [Scalar; 3] {
    let shift = a / 3.0;
    // depressed: t³ + p t + q with x = t − a/3
    let p = b - a * a / 3.0;
    let q = a * a * a * (2.0 / 27.0) - a * b / 3.0 + c;
    let disc = (q / 2.0) * (q / 2.0) + (p / 3.0) * (p / 3.0) * (p / 3.0);
    let s = disc.sqrt();
    let (u1, u2) = (-q / 2.0 + s, -q / 2.0 - s);
    let u3 = if u1.norm() >= u2.norm() { u1 } else { u2 };
    if u3.norm() == 0.0 {
        // p = q = 0: triple root
        return [-shift; 3];
    }
    let u = u3.cbrt();
    let w = Scalar::new(-0.5, 3f64.sqrt() / 2.0);
    let w2 = w.conj();
    let v = |uk: Scalar| -p / (uk * 3.0);
    [u, u * w, u * w2].map(|uk| uk + v(uk) - shift)
}

/// Canonical type of an operator with a zero eigenvalue.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum SpectralType {
    /// A single nilpotent Jordan block of size three.
    NilFull,
    /// Eigenvalues `{0, δ, δ}` with a size-two block at `δ ≠ 0`.
    DoubleBlock { delta: Scalar },
    /// Eigenvalues `{0, μ, ν}`, diagonalizable, `μ, ν ≠ 0` (possibly equal).
    Diag { mu: Scalar, nu: Scalar },
    /// Size-two block at zero plus `τ ≠ 0`.
    ZeroBlockPlus { tau: Scalar },
    /// Real only: zero plus a conjugate nonreal pair with sum `a` and
    /// product `b` (`a² < 4b`).
    Rotation { a: f64, b: f64 },
    /// The zero eigenvalue has geometric multiplicity above one.
    KernelTooBig,
}

impl SpectralType {
    pub fn name(&self) -> &'static str {
        match self {
            SpectralType::NilFull => "NilFull",
            SpectralType::DoubleBlock { .. } => "DoubleBlock",
            SpectralType::Diag { .. } => "Diag",
            SpectralType::ZeroBlockPlus { .. } => "ZeroBlockPlus",
            SpectralType::Rotation { .. } => "Rotation",
            SpectralType::KernelTooBig => "KernelTooBig",
        }
    }

    fn double_block(delta: Scalar) -> Self {
        debug_assert!(delta.norm() > 0.0);
        SpectralType::DoubleBlock { delta }
    }

    fn diag(mu: Scalar, nu: Scalar) -> Self {
        debug_assert!(mu.norm() > 0.0 && nu.norm() > 0.0);
        SpectralType::Diag { mu, nu }
    }

    fn rotation(a: f64, b: f64) -> Self {
        debug_assert!(a * a < 4.0 * b);
        SpectralType::Rotation { a, b }
    }
}

/// `true` when clearly below `threshold`, `false` when clearly above, and
/// an error within a factor of ten of it, where rounding decides.
fn below(value: f64, threshold: f64, what: &str) -> Result<bool> {
    match band(value, threshold) {
        Band::Below => Ok(true),
        Band::Above => Ok(false),
        Band::Ambiguous => Err(Error::AmbiguousSpectrum(format!(
            "{what}: {value:e} within a factor of ten of threshold {threshold:e}"
        ))),
    }
}

/// Rank of `m`, refusing pivots within a factor of ten of `tol`.
fn resolved_rank(m: &Matrix3, tol: f64) -> Result<usize> {
    let mut rank = 0;
    for p in m.pivot_profile() {
        if !below(p, tol, "pivot of m - δI")? {
            rank += 1;
        }
    }
    Ok(rank)
}

/// Classifies `m` into one of the canonical forms, with clustering tolerance
/// `tol` and the default rank tolerance.
pub fn spectral_type(m: &Matrix3, field: Field, tol: f64) -> Result<SpectralType> {
    spectral_type_with(m, field, tol, crate::algebra::Tolerances::default().rank)
}

/// Coefficient tests are backward-stable: a quantity counts as zero when a
/// relative perturbation of `m` of size `tol` could make it vanish. `c₂` and
/// the discriminant are quadratic in `m`, so they are compared against
/// `tol · n²` with `n = max(1, ‖m‖_F)`.
pub fn spectral_type_with(m: &Matrix3, field: Field, tol: f64, tol_rank: f64) -> Result<SpectralType> {
    let rank = m.rank(tol_rank);
    if rank == 3 {
        return Err(Error::ZeroNotEigenvalue);
    }
    if rank <= 1 {
        return Ok(SpectralType::KernelTooBig);
    }
    let n = m.norm_fro().max(1.0);
    let tr = m.trace();
    let c2 = m.principal_minor_sum();
    let real = field == Field::Real;
    let fix = |x: Scalar| if real { re(x.re) } else { x };

    if below(c2.norm() / (n * n), tol, "product of nonzero eigenvalues")? {
        return if below(tr.norm() / n, tol, "trace")? {
            Ok(SpectralType::NilFull)
        } else {
            Ok(SpectralType::ZeroBlockPlus { tau: fix(tr) })
        };
    }

    let disc = tr * tr - c2 * 4.0;
    let coincident = below(disc.norm() / (n * n), tol, "eigenvalue gap")?;
    if coincident {
        let delta = fix(tr / 2.0);
        let shifted = *m - Matrix3::identity().scale(delta);
        // rank 1: scalar on the pair; rank 2: a block; rank 3: the pair is
        // resolvable after all, so fall through to distinct roots
        match resolved_rank(&shifted, tol_rank)? {
            0 | 1 => return Ok(SpectralType::diag(delta, delta)),
            2 => return Ok(SpectralType::double_block(delta)),
            _ => {}
        }
    }
    if real && disc.re < 0.0 {
        return Ok(SpectralType::rotation(tr.re, c2.re));
    }
    let (mu, nu) = quadratic_roots(tr, c2);
    Ok(SpectralType::diag(fix(mu), fix(nu)))
}

/// Roots of `λ² − s λ + p`, larger one first, computed without cancellation.
pub fn quadratic_roots(s: Scalar, p: Scalar) -> (Scalar, Scalar) {
    let d = (s * s - p * 4.0).sqrt();
    // choose the sign that adds constructively
    let big = if (s.conj() * d).re >= 0.0 {
        (s + d) / 2.0
    } else {
        (s - d) / 2.0
    };
    if big.norm() == 0.0 {
        return (big, big);
    }
    (big, p / big)
}
