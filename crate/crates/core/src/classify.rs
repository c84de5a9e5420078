//! Constructive classification.
//!
//! Every branch builds the canonical basis `(x, y, z)` explicitly, in input
//! coordinates, by the same chain of substitutions the isomorphism argument
//! uses. The witness matrix is that basis as columns, and its residual is
//! measured by re-transforming the input and comparing with the catalog
//! model. A verdict whose witness does not reproduce the model is an error,
//! never a label.

use serde::{Deserialize, Serialize};

use crate::algebra::{
    adjoint, derived_rank, omega_radical, omega_threshold, validate, Algebra, Bracket, Convention, Field, OmegaForm,
    Tolerances, Witness,
};
use crate::catalog;
use crate::eigen::{eigenvalues3, quadratic_roots, spectral_type_with, SpectralType};
use crate::error::{Error, Result};
use crate::iso::refine;
use crate::label::{prefer_first, settle_ratio, ClassLabel};
use crate::linalg::{band, re, Band, Matrix3, Scalar, Vector3};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Diagnostics {
    pub field: Field,
    pub induced_omega: OmegaForm,
    pub derived_rank: usize,
    pub radical: Option<Vector3>,
    pub spectral_type: Option<SpectralType>,
    pub tolerances: Tolerances,
    /// How the stored omega relates to the induced one; `Plus` when both
    /// readings pass (omega ≡ 0).
    pub convention: Convention,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub label: ClassLabel,
    pub witness: Witness,
    pub diagnostics: Diagnostics,
}

/// Same structure constants over ℂ.
pub fn complexify(a: &Algebra) -> Algebra {
    a.complexify()
}

/// Classifies `a`. The stored omega must satisfy the omega-Jacobi identity
/// under either sign convention; classification itself uses the induced form.
pub fn classify(a: &Algebra, tol: &Tolerances) -> Result<ClassificationReport> {
    let report = validate(a, tol.val);
    let convention = report.convention().ok_or(Error::ValidationFailed {
        discrepancy: report.discrepancy.min(report.discrepancy_negated),
    })?;
    let work = Algebra::induced(a.field, a.bracket);
    let threshold = omega_threshold(&a.bracket, tol.val);
    let omega_size = work.omega.max_abs();
    let mut diag = Diagnostics {
        field: a.field,
        induced_omega: work.omega,
        derived_rank: derived_rank(&work.bracket, tol.rank),
        radical: None,
        spectral_type: None,
        tolerances: *tol,
        convention,
    };
    if split(omega_size, threshold, "induced omega")? {
        return lie_classify_inner(&work, tol, diag);
    }

    let r = omega_radical(&work.omega, 0.0).expect("nonzero omega has a radical");
    diag.radical = Some(r);
    let rank = checked_rank(&work.bracket.matrix(), tol.rank, "derived algebra")?;
    let (label, basis) = match rank {
        2 => rank_two(&work.bracket, &r, tol)?,
        3 => {
            let ad = adjoint(&work.bracket, &r);
            let st = spectral_type_with(&ad, a.field, tol.spec, tol.rank)?;
            diag.spectral_type = Some(st);
            rank_three(&work.bracket, &r, &ad, st, a.field)?
        }
        k => {
            return Err(Error::InconsistentRank(format!(
                "nonzero omega with derived algebra of dimension {k}"
            )))
        }
    };
    finish(&work, label, basis, tol, diag)
}

/// Classification of a Lie algebra (induced omega ≈ 0).
pub fn lie_classify(a: &Algebra, tol: &Tolerances) -> Result<ClassificationReport> {
    let work = Algebra::induced(a.field, a.bracket);
    let threshold = omega_threshold(&a.bracket, tol.val);
    if !split(work.omega.max_abs(), threshold, "induced omega")? {
        return Err(Error::InconsistentRank(
            "lie_classify called on a non-Lie algebra".into(),
        ));
    }
    let diag = Diagnostics {
        field: a.field,
        induced_omega: work.omega,
        derived_rank: derived_rank(&work.bracket, tol.rank),
        radical: None,
        spectral_type: None,
        tolerances: *tol,
        convention: Convention::Plus,
    };
    lie_classify_inner(&work, tol, diag)
}

fn lie_classify_inner(work: &Algebra, tol: &Tolerances, diag: Diagnostics) -> Result<ClassificationReport> {
    let b = &work.bracket;
    let rank = checked_rank(&b.matrix(), tol.rank, "derived algebra")?;
    let (label, basis) = match rank {
        0 => (ClassLabel::Abelian, Matrix3::identity()),
        1 => lie_rank_one(b, tol)?,
        2 => lie_rank_two(b, work.field, tol)?,
        _ => lie_rank_three(b, work.field)?,
    };
    finish(work, label, basis, tol, diag)
}

const REFINE_STEPS: usize = 5;

fn finish(
    work: &Algebra,
    label: ClassLabel,
    basis: Matrix3,
    tol: &Tolerances,
    diagnostics: Diagnostics,
) -> Result<ClassificationReport> {
    let target = catalog::model(&label, work.field)?;
    // an input already in canonical form is its own witness
    let basis = if work.distance(&target) == 0.0 {
        Matrix3::identity()
    } else {
        basis
    };
    let mut witness = Witness::measure(work, &target, basis)?;
    if !(witness.residual < tol.wit) {
        // ill-conditioned eigenvectors lose digits; polish before judging
        witness = refine(work, &target, witness, REFINE_STEPS);
    }
    if !(witness.residual < tol.wit) {
        return Err(Error::UnverifiedWitness {
            label: label.to_string(),
            residual: witness.residual,
            tol: tol.wit,
        });
    }
    Ok(ClassificationReport {
        label,
        witness,
        diagnostics,
    })
}

/// `true` when clearly below `threshold`, `false` when clearly above, and
/// an error within a factor of ten of it.
fn split(value: f64, threshold: f64, what: &str) -> Result<bool> {
    match band(value, threshold) {
        Band::Below => Ok(true),
        Band::Above => Ok(false),
        Band::Ambiguous => Err(Error::NearDegenerate(format!(
            "{what}: {value:e} within a factor of ten of threshold {threshold:e}"
        ))),
    }
}

fn checked_rank(m: &Matrix3, tol: f64, what: &str) -> Result<usize> {
    let pivots = m.pivot_profile();
    if let Some(p) = pivots.iter().find(|&&p| band(p, tol) == Band::Ambiguous) {
        return Err(Error::NearDegenerate(format!(
            "{what}: pivot {p:e} near rank threshold {tol:e}"
        )));
    }
    Ok(pivots.iter().filter(|&&p| p > tol).count())
}

/// Coordinates of `v` in the basis given by the columns of `basis`.
fn coords(basis: &Matrix3, v: &Vector3) -> Result<Vector3> {
    let inv = basis.inverse().ok_or(Error::SingularMatrix {
        det: basis.det().norm(),
    })?;
    Ok(inv.mul_vec(v))
}

fn inv(s: Scalar, what: &str) -> Result<Scalar> {
    if s.norm() == 0.0 || !s.is_finite() {
        return Err(Error::NearDegenerate(format!("{what} vanishes")));
    }
    Ok(s.inv())
}

/// Square root that stays real on real input of the expected sign.
fn sqrt_in(field: Field, s: Scalar) -> Scalar {
    match field {
        Field::Real => re(s.re.abs().sqrt()),
        Field::Complex => s.sqrt(),
    }
}

// ---------------------------------------------------------------------------
// Lie algebras

/// Rank one: `[u, v] = β(u, v) w` for a generator `w` of `L'`.
fn lie_rank_one(b: &Bracket, tol: &Tolerances) -> Result<(ClassLabel, Matrix3)> {
    let w = b.matrix().dominant_col();
    let ww = w.hdot(&w);
    let beta = OmegaForm::new(w.hdot(&b.xy) / ww, w.hdot(&b.xz) / ww, w.hdot(&b.yz) / ww);
    let ad_w = adjoint(b, &w);
    let central = split(ad_w.max_abs(), tol.rank * b.max_abs() * w.norm(), "[L, L'] in rank one")?;
    if central {
        // [y, z] = x with x = w
        let pairs = [(0, 1, beta.xy), (0, 2, beta.xz), (1, 2, beta.yz)];
        let (i, j, bij) = pairs
            .into_iter()
            .max_by(|p, q| p.2.norm().total_cmp(&q.2.norm()))
            .unwrap();
        let y = Vector3::unit(i);
        let z = Vector3::unit(j).scale(inv(bij, "rank-one bracket form")?);
        Ok((ClassLabel::G2, Matrix3::from_cols(w, y, z)))
    } else {
        // x spans the radical of β, y = w, β(y, z) = 1
        let x = Vector3::new(beta.yz, -beta.xz, beta.xy);
        let (j, bwj) = (0..3)
            .map(|j| (j, beta.eval(&w, &Vector3::unit(j))))
            .max_by(|p, q| p.1.norm().total_cmp(&q.1.norm()))
            .unwrap();
        let z = Vector3::unit(j).scale(inv(bwj, "β(w, ·)")?);
        Ok((ClassLabel::G1, Matrix3::from_cols(x, w, z)))
    }
}

/// Hermitian-orthonormal pair spanning the column space of a rank-2 matrix.
fn column_space_basis(m: &Matrix3) -> (Vector3, Vector3) {
    let cols = [m.col(0), m.col(1), m.col(2)];
    let (i, j) = [(0, 1), (0, 2), (1, 2)]
        .into_iter()
        .max_by(|&(a, b), &(c, d)| {
            cols[a]
                .cross(&cols[b])
                .norm()
                .total_cmp(&cols[c].cross(&cols[d]).norm())
        })
        .unwrap();
    let u1 = cols[i].scale(re(1.0 / cols[i].norm()));
    let v = cols[j] - u1.scale(u1.hdot(&cols[j]));
    let u2 = v.scale(re(1.0 / v.norm()));
    (u1, u2)
}

/// Rank two: `L'` is abelian and `ad_x` acts invertibly on it for `x ∉ L'`.
fn lie_rank_two(b: &Bracket, field: Field, tol: &Tolerances) -> Result<(ClassLabel, Matrix3)> {
    let (u1, u2) = column_space_basis(&b.matrix());
    let scale = b.max_abs();
    if !split(b.apply(&u1, &u2).max_abs(), tol.rank * scale, "[L', L']")? {
        return Err(Error::InconsistentRank(
            "rank-2 Lie algebra with non-abelian derived algebra".into(),
        ));
    }
    let x = u1.cross(&u2).conj();
    let lift = |c: [Scalar; 2]| u1.scale(c[0]) + u2.scale(c[1]);
    let (a1, a2) = (b.apply(&x, &u1), b.apply(&x, &u2));
    // ad_x on L' in the (u1, u2) basis, column k = image of u_k
    let m = [[u1.hdot(&a1), u1.hdot(&a2)], [u2.hdot(&a1), u2.hdot(&a2)]];
    let tr = m[0][0] + m[1][1];
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    let n = m.iter().flatten().map(|v| v.norm_sqr()).sum::<f64>().sqrt().max(1.0);
    let disc = tr * tr - det * 4.0;

    if split(disc.norm() / (n * n), tol.spec, "eigenvalue gap of ad_x on L'")? {
        let e = tr / 2.0;
        let nil = [[m[0][0] - e, m[0][1]], [m[1][0], m[1][1] - e]];
        let nil_size = nil.iter().flatten().map(|v| v.norm()).fold(0.0, f64::max);
        let x1 = x.scale(inv(e, "eigenvalue of ad_x on L'")?);
        if split(nil_size, tol.rank * n, "nilpotent part of ad_x on L'")? {
            return Ok((ClassLabel::H { alpha: re(1.0) }, Matrix3::from_cols(x1, u1, u2)));
        }
        // G3: z with N z ≠ 0, y = N z, N = ad_x / e − 1
        let ie = inv(e, "eigenvalue")?;
        let k = if nil[0][0].norm() + nil[1][0].norm() >= nil[0][1].norm() + nil[1][1].norm() {
            0
        } else {
            1
        };
        let z = if k == 0 { u1 } else { u2 };
        let y = lift([nil[0][k] * ie, nil[1][k] * ie]);
        return Ok((ClassLabel::G3, Matrix3::from_cols(x1, y, z)));
    }

    if field == Field::Real && disc.re < 0.0 {
        // eigenvalues σ ± iθ
        let sigma = tr.re / 2.0;
        let theta = (-disc.re).sqrt() / 2.0;
        let sign = if sigma < 0.0 { -1.0 } else { 1.0 };
        let s = sigma.abs() / theta;
        let x1 = x.scale(re(sign / theta));
        // K = ad_{x1} − s on L', K² = −1
        let k = |c: [Scalar; 2]| {
            let f = re(sign / theta);
            [
                (m[0][0] * c[0] + m[0][1] * c[1]) * f - c[0] * s,
                (m[1][0] * c[0] + m[1][1] * c[1]) * f - c[1] * s,
            ]
        };
        let z = u1;
        let y = lift(k([re(1.0), re(0.0)]));
        return Ok((ClassLabel::HRot { s }, Matrix3::from_cols(x1, y, z)));
    }

    let (l1, l2) = quadratic_roots(tr, det);
    let (l1, l2) = match field {
        Field::Real => (re(l1.re), re(l2.re)),
        Field::Complex => (l1, l2),
    };
    let eigvec = |l: Scalar| {
        let c1 = [m[0][1], l - m[0][0]];
        let c2 = [l - m[1][1], m[1][0]];
        let n1 = c1[0].norm() + c1[1].norm();
        let n2 = c2[0].norm() + c2[1].norm();
        lift(if n1 >= n2 { c1 } else { c2 })
    };
    let (ly, lz) = if prefer_first(l2 / l1, l1 / l2, tol.spec) {
        (l1, l2)
    } else {
        (l2, l1)
    };
    let alpha = settle_ratio(lz / ly, tol.spec);
    let x1 = x.scale(inv(ly, "eigenvalue")?);
    Ok((ClassLabel::H { alpha }, Matrix3::from_cols(x1, eigvec(ly), eigvec(lz))))
}

/// Killing form `K(u, v) = tr(ad_u ad_v)` in the standard basis.
fn killing_form(b: &Bracket) -> Matrix3 {
    let ads = [0, 1, 2].map(|i| adjoint(b, &Vector3::unit(i)));
    let mut k = Matrix3::zero();
    for i in 0..3 {
        for j in 0..3 {
            k[(i, j)] = (ads[i] * ads[j]).trace();
        }
    }
    k
}

/// Rank three: simple. `G4` unless the real Killing form is definite.
fn lie_rank_three(b: &Bracket, field: Field) -> Result<(ClassLabel, Matrix3)> {
    let k = killing_form(b);
    let quad = |u: &Vector3| u.dot(&k.mul_vec(u));
    let u = match field {
        Field::Complex => {
            let mut cands = vec![];
            for i in 0..3 {
                cands.push(Vector3::unit(i));
                for j in (i + 1)..3 {
                    cands.push(Vector3::unit(i) + Vector3::unit(j));
                    cands.push(Vector3::unit(i) - Vector3::unit(j));
                }
            }
            cands
                .into_iter()
                .max_by(|p, q| quad(p).norm().total_cmp(&quad(q).norm()))
                .unwrap()
        }
        Field::Real => {
            let mut ev: Vec<f64> = eigenvalues3(&k).values.iter().map(|v| v.re).collect();
            ev.sort_by(|a, b| b.total_cmp(a));
            if ev[0] <= 0.0 {
                return su2_basis(b, &k);
            }
            let shift = |l: f64| k - Matrix3::identity().scale(re(l));
            let gap = (ev[0] - ev[1]).abs() > 1e-6 * k.norm_fro();
            let proj = if gap { shift(ev[1]) * shift(ev[2]) } else { shift(ev[2]) };
            proj.dominant_col()
        }
    };
    // ad_u has eigenvalues 0, ±λ with K(u, u) = 2λ²
    let lambda = sqrt_in(field, quad(&u) / 2.0);
    let h = u.scale(inv(lambda, "Killing norm")? * 2.0);
    let ad_h = adjoint(b, &h);
    let null = |s: f64| {
        (ad_h - Matrix3::identity().scale(re(s)))
            .null_vector()
            .ok_or_else(|| Error::NearDegenerate("ad_h eigenvector".into()))
    };
    let y = null(2.0)?;
    let z0 = null(-2.0)?;
    let kappa = h.hdot(&b.apply(&y, &z0)) / h.hdot(&h);
    let z = z0.scale(inv(kappa, "[y, z] along h")?);
    Ok((ClassLabel::G4, Matrix3::from_cols(h, y, z)))
}

/// Compact real form: Gram–Schmidt against `−K/2`, then `z = [x, y]`.
fn su2_basis(b: &Bracket, k: &Matrix3) -> Result<(ClassLabel, Matrix3)> {
    let g = |u: &Vector3, v: &Vector3| -u.dot(&k.mul_vec(v)).re / 2.0;
    let e0 = Vector3::unit(0);
    let x = e0.scale(re(1.0 / g(&e0, &e0).sqrt()));
    let e1 = Vector3::unit(1);
    let y0 = e1 - x.scale(re(g(&x, &e1)));
    let y = y0.scale(re(1.0 / g(&y0, &y0).sqrt()));
    let z = b.apply(&x, &y);
    Ok((ClassLabel::Su2, Matrix3::from_cols(x, y, z)))
}

// ---------------------------------------------------------------------------
// Non-Lie, rank two

fn rank_two(b: &Bracket, r: &Vector3, tol: &Tolerances) -> Result<(ClassLabel, Matrix3)> {
    let ad = adjoint(b, r);
    let off_line = (0..3)
        .map(|j| {
            let c = ad.col(j);
            (c - r.scale(r.hdot(&c))).norm()
        })
        .fold(0.0, f64::max);
    let stable = split(
        off_line,
        tol.rank * ad.max_abs().max(f64::MIN_POSITIVE),
        "[L, r] ⊆ span r",
    )?;
    if stable {
        l1_basis(b, r)
    } else {
        l2_basis(b, r)
    }
}

/// `[L, z] ⊆ span z` with `z` the radical: `[v, z] = λ(v) z`.
fn l1_basis(b: &Bracket, r: &Vector3) -> Result<(ClassLabel, Matrix3)> {
    let z = *r;
    let lam = Vector3(std::array::from_fn(|j| z.hdot(&b.apply(&Vector3::unit(j), &z))));
    // ker λ ∌ z-multiples only: hermitian-orthogonal to z
    let x0 = lam.cross(&z.conj());
    let ad0 = adjoint(b, &x0);
    let mu = ad0.trace();
    let w = ad0.dominant_col();
    let x = x0.scale(inv(mu, "ad_x eigenvalue")?);
    let y = w.scale(inv(lam.dot(&w), "λ(y)")?);
    Ok((ClassLabel::L1, Matrix3::from_cols(x, y, z)))
}

/// The radical `y` has `ad_y` of rank one with trace 1 after scaling.
fn l2_basis(b: &Bracket, r: &Vector3) -> Result<(ClassLabel, Matrix3)> {
    let t = adjoint(b, r).trace();
    let y = r.scale(inv(t, "trace of ad_r")?);
    let ady = adjoint(b, &y);
    let z = ady.dominant_col();
    let x0 = ady.dominant_row().cross(&y.conj());
    let c = coords(&Matrix3::from_cols(x0, y, z), &b.apply(&x0, &z))?;
    // [x0, z] = p y + q z
    let (p, q) = (c[1], c[2]);
    let x = (x0 - y.scale(q)).scale(inv(p, "[x, z] along y")?);
    Ok((ClassLabel::L2, Matrix3::from_cols(x, y, z)))
}

// ---------------------------------------------------------------------------
// Non-Lie, rank three: dispatch on the canonical form of ad_r

fn rank_three(b: &Bracket, r: &Vector3, ad: &Matrix3, st: SpectralType, field: Field) -> Result<(ClassLabel, Matrix3)> {
    match st {
        SpectralType::NilFull => family_a(b, r, ad, field),
        SpectralType::DoubleBlock { delta } => family_b(b, r, ad, delta, field),
        SpectralType::Diag { mu, nu } => family_c(b, r, ad, mu, nu, field),
        SpectralType::Rotation { a, b: prod } => family_e(b, r, ad, a, prod),
        // Excluded by the omega-Jacobi identity. A product of eigenvalues that
        // is merely below tolerance means the zero test was unreliable; only
        // an exactly vanishing one is the impossible shape itself.
        SpectralType::ZeroBlockPlus { .. } if ad.principal_minor_sum().norm() != 0.0 => Err(Error::AmbiguousSpectrum(
            "eigenvalue pair within tolerance of an excluded shape".into(),
        )),
        SpectralType::ZeroBlockPlus { .. } => Err(Error::ImpossibleCaseD),
        SpectralType::KernelTooBig => Err(Error::InconsistentRank(
            "ad of the radical has rank below two in a perfect non-Lie algebra".into(),
        )),
    }
}

/// ad_x nilpotent: `[x,y] = x, [x,z] = y`, then `z ← (z + c y)/c`, `x ← c x`,
/// leaving `[y,z] = z + γ x` with `γ = b / c²`; a final shift of `z` along
/// `x` sets `γ = 0`, so the whole family is one class.
fn family_a(b: &Bracket, r: &Vector3, ad: &Matrix3, field: Field) -> Result<(ClassLabel, Matrix3)> {
    let ad2 = *ad * *ad;
    let j = (0..3)
        .max_by(|&p, &q| ad2.col(p).norm().total_cmp(&ad2.col(q).norm()))
        .unwrap();
    let z0 = Vector3::unit(j);
    let y0 = ad.mul_vec(&z0);
    let u = ad2.mul_vec(&z0);
    // ad_x² z lies along x
    let a = r.hdot(&u) / r.hdot(r);
    let ia = inv(a, "ad_x² z")?;
    let (x1, y1, z1) = (r.scale(ia), y0.scale(ia), z0);
    let k = coords(&Matrix3::from_cols(x1, y1, z1), &b.apply(&y1, &z1))?;
    let (bb, c) = (k[0], k[1]);
    let ic = inv(c, "[y, z] along y")?;
    let z_prime = (z1 + y1.scale(c)).scale(ic);
    let x_prime = x1.scale(c);
    let gamma = bb * ic * ic;
    // z ↦ z + (γ/2) x removes the remaining parameter
    let z_zero = z_prime + x_prime.scale(gamma / 2.0);
    let label = match field {
        Field::Complex => ClassLabel::A { alpha: re(0.0) },
        Field::Real => ClassLabel::ACal { alpha: 0.0 },
    };
    Ok((label, Matrix3::from_cols(x_prime, y1, z_zero)))
}

/// ad_x has a 2-block at δ: normalize to `[x,y] = y, [x,z] = y + z`, read
/// `[y,z] = α x` and rescale `y, z` by `1/√α` (real: by `1/√|α|`, the sign
/// of `α` choosing between the two real forms).
fn family_b(b: &Bracket, r: &Vector3, ad: &Matrix3, delta: Scalar, field: Field) -> Result<(ClassLabel, Matrix3)> {
    let k = *ad - Matrix3::identity().scale(delta);
    // im(ad) is the generalized δ-eigenspace
    let z0 = (0..3)
        .map(|j| ad.col(j))
        .max_by(|p, q| k.mul_vec(p).norm().total_cmp(&k.mul_vec(q).norm()))
        .unwrap();
    let y0 = k.mul_vec(&z0);
    let id = inv(delta, "δ")?;
    let (x1, y1, z1) = (r.scale(id), y0.scale(id), z0);
    let alpha = coords(&Matrix3::from_cols(x1, y1, z1), &b.apply(&y1, &z1))?[0];
    let u = inv(sqrt_in(field, alpha), "[y, z] along x")?;
    let label = match field {
        Field::Complex => ClassLabel::B,
        Field::Real if alpha.re > 0.0 => ClassLabel::B1,
        Field::Real => ClassLabel::Bm1,
    };
    Ok((label, Matrix3::from_cols(x1, y1.scale(u), z1.scale(u))))
}

/// ad_x diagonalizable with eigenvalues `μ, ν`: `[x,y] = y, [x,z] = α z`,
/// `[y,z] = x`, ordered so `α` is canonical.
fn family_c(
    b: &Bracket,
    r: &Vector3,
    ad: &Matrix3,
    mu: Scalar,
    nu: Scalar,
    field: Field,
) -> Result<(ClassLabel, Matrix3)> {
    let (vm, vn) = if mu == nu {
        column_space_basis(ad)
    } else {
        let null = |l: Scalar| {
            (*ad - Matrix3::identity().scale(l))
                .null_vector()
                .ok_or_else(|| Error::NearDegenerate("ad_x eigenvector".into()))
        };
        let (a, b) = (null(mu)?, null(nu)?);
        (a.scale(re(1.0 / a.norm())), b.scale(re(1.0 / b.norm())))
    };
    let band = 1e-9;
    let ((ly, vy), (lz, vz)) = if prefer_first(nu / mu, mu / nu, band) {
        ((mu, vm), (nu, vn))
    } else {
        ((nu, vn), (mu, vm))
    };
    let alpha = settle_ratio(lz / ly, band);
    if alpha == re(-1.0) {
        return Err(Error::NearDegenerate(
            "ratio within rounding of -1, where omega vanishes".into(),
        ));
    }
    let x1 = r.scale(inv(ly, "eigenvalue")?);
    let a = coords(&Matrix3::from_cols(x1, vy, vz), &b.apply(&vy, &vz))?[0];
    let y = vy.scale(inv(a, "[y, z] along x")?);
    let label = match field {
        Field::Complex => ClassLabel::C { alpha },
        Field::Real => ClassLabel::CCal { alpha: alpha.re },
    };
    Ok((label, Matrix3::from_cols(x1, y, vz)))
}

/// Real rotation block with trace `a` and determinant `b_det`: normalize
/// `x` so the block has determinant 1 and nonnegative trace `α`, take
/// `z = −ad_x y`, and read the sign of `[y,z] = c x`.
fn family_e(b: &Bracket, r: &Vector3, ad: &Matrix3, a: f64, b_det: f64) -> Result<(ClassLabel, Matrix3)> {
    let s = b_det.sqrt();
    let sign = if a < 0.0 { -1.0 } else { 1.0 };
    let alpha = a.abs() / s;
    let x1 = r.scale(re(sign / s));
    let m = ad.scale(re(sign / s));
    let y0 = ad.dominant_col();
    let z0 = -m.mul_vec(&y0);
    let c = coords(&Matrix3::from_cols(x1, y0, z0), &b.apply(&y0, &z0))?[0].re;
    if c == 0.0 || alpha == 0.0 {
        return Err(Error::NearDegenerate("rotation-type normalization".into()));
    }
    let v = re(1.0 / c.abs().sqrt());
    let label = if c > 0.0 {
        ClassLabel::EPlus { alpha }
    } else {
        ClassLabel::EMinus { alpha }
    };
    Ok((label, Matrix3::from_cols(x1, y0.scale(v), z0.scale(v))))
}
