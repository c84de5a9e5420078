//! Isomorphism testing.
//!
//! The authoritative test classifies both sides and composes the two
//! constructive witnesses. [`search_witness`] is an independent numeric
//! check: it looks for a basis change directly by nonlinear least squares
//! and knows nothing about the classification.

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, Field, Tolerances, Witness};
use crate::classify::classify;
use crate::error::{Error, Result};
use crate::linalg::{Matrix3, Scalar, Vector3};

/// Parameters of two labels are compared within this relative tolerance.
pub const PARAM_TOL: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Via {
    CanonicalCompare,
    DirectSearch,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IsoResult {
    pub isomorphic: bool,
    /// Carries `a` onto `b`: `transform(a, witness) ≈ b`.
    pub witness: Option<Witness>,
    pub via: Via,
}

/// Decides whether `a ≅ b` as algebras over their common field. Omega is
/// compared in its induced form on both sides, so inputs stored under
/// either sign convention compare by bracket.
pub fn is_isomorphic(a: &Algebra, b: &Algebra, tol: &Tolerances) -> Result<IsoResult> {
    if a.field != b.field {
        return Err(Error::FieldsDiffer);
    }
    let ra = classify(a, tol)?;
    let rb = classify(b, tol)?;
    if !ra.label.approx_eq(&rb.label, PARAM_TOL) {
        return Ok(IsoResult {
            isomorphic: false,
            witness: None,
            via: Via::CanonicalCompare,
        });
    }
    let pb_inv = rb.witness.matrix.inverse().ok_or(Error::SingularMatrix {
        det: rb.witness.matrix.det().norm(),
    })?;
    let matrix = ra.witness.matrix * pb_inv;
    let witness = Witness::measure(
        &Algebra::induced(a.field, a.bracket),
        &Algebra::induced(b.field, b.bracket),
        matrix,
    )?;
    if !(witness.residual < tol.wit) {
        return Err(Error::UnverifiedWitness {
            label: ra.label.to_string(),
            residual: witness.residual,
            tol: tol.wit,
        });
    }
    Ok(IsoResult {
        isomorphic: true,
        witness: Some(witness),
        via: Via::CanonicalCompare,
    })
}

/// Budget for [`search_witness`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub attempts: usize,
    pub iterations: usize,
    pub seed: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            attempts: 64,
            iterations: 200,
            seed: 0,
        }
    }
}

/// Multi-start Levenberg–Marquardt search for `W` with
/// `[W e_i, W e_j]_a = W [e_i, e_j]_b`. Returns the verified witness of the
/// lowest-indexed successful start, or `None` when the budget runs out (or
/// the fields differ). Absence is evidence against isomorphism, not proof.
pub fn search_witness(a: &Algebra, b: &Algebra, cfg: &SearchConfig, tol: &Tolerances) -> Option<Witness> {
    if a.field != b.field {
        return None;
    }
    let a = Algebra::induced(a.field, a.bracket);
    let b = Algebra::induced(b.field, b.bracket);
    let run = |start: usize| {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(start as u64);
        // start 0 is the identity, which settles a ≡ b at once
        let w0 = if start == 0 {
            Matrix3::identity()
        } else {
            random_start(&mut rng, a.field)
        };
        levenberg_marquardt(&a, &b, w0, cfg.iterations, tol.wit)
    };
    // Starts run in parallel batches; the first batch with a success wins,
    // and within it the lowest start index, so the result is deterministic.
    let starts: Vec<usize> = (0..cfg.attempts).collect();
    starts.chunks(SEARCH_BATCH).find_map(|batch| {
        batch
            .par_iter()
            .map(|&s| run(s))
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .next()
    })
}

const SEARCH_BATCH: usize = 8;

/// Orthonormalized Gaussian matrix times a log-uniform scale in `[1/4, 4]`.
fn random_start(rng: &mut ChaCha8Rng, field: Field) -> Matrix3 {
    let mut draw = || -> Scalar {
        let x: f64 = rng.sample(StandardNormal);
        let y: f64 = match field {
            Field::Real => 0.0,
            Field::Complex => rng.sample(StandardNormal),
        };
        Scalar::new(x, y)
    };
    let cols: [Vector3; 3] = std::array::from_fn(|_| Vector3::new(draw(), draw(), draw()));
    let mut q: Vec<Vector3> = Vec::with_capacity(3);
    for c in cols {
        let mut v = c;
        for u in &q {
            v = v - u.scale(u.hdot(&v));
        }
        q.push(v.scale(Scalar::new(1.0 / v.norm(), 0.0)));
    }
    let scale = 4f64.powf(rng.random_range(-1.0..1.0));
    Matrix3::from_cols(q[0], q[1], q[2]).scale(Scalar::new(scale, 0.0))
}

/// Real parameters of a matrix: 9 real parts, then 9 imaginary parts in
/// complex mode.
fn width(field: Field) -> usize {
    if field == Field::Complex {
        18
    } else {
        9
    }
}

fn unpack(p: &[f64], field: Field) -> Matrix3 {
    let mut m = Matrix3::zero();
    for k in 0..9 {
        let im = if field == Field::Complex { p[9 + k] } else { 0.0 };
        m[(k / 3, k % 3)] = Scalar::new(p[k], im);
    }
    m
}

fn pack(m: &Matrix3, field: Field, out: &mut Vec<f64>) {
    out.extend((0..9).map(|k| m[(k / 3, k % 3)].re));
    if field == Field::Complex {
        out.extend((0..9).map(|k| m[(k / 3, k % 3)].im));
    }
}

/// Unknowns are `W` and a companion `V`. Residuals: equivariance of `W`
/// and `V W − I`, which keeps the search off singular homomorphisms. Both
/// are quadratic in the unknowns.
fn split(p: &DVector<f64>, field: Field) -> (Matrix3, Matrix3) {
    let n = width(field);
    (unpack(&p.as_slice()[..n], field), unpack(&p.as_slice()[n..], field))
}

fn residual(a: &Algebra, b: &Algebra, p: &DVector<f64>) -> DVector<f64> {
    let (w, v) = split(p, a.field);
    let cols = [w.col(0), w.col(1), w.col(2)];
    let target = [b.bracket.xy, b.bracket.xz, b.bracket.yz];
    let mut parts: Vec<Scalar> = Vec::with_capacity(18);
    for (n, (i, j)) in [(0, 1), (0, 2), (1, 2)].into_iter().enumerate() {
        let r = a.bracket.apply(&cols[i], &cols[j]) - w.mul_vec(&target[n]);
        parts.extend(r.0);
    }
    let e = v * w - Matrix3::identity();
    parts.extend(e.0.iter().flatten());
    let mut out: Vec<f64> = parts.iter().map(|z| z.re).collect();
    if a.field == Field::Complex {
        out.extend(parts.iter().map(|z| z.im));
    }
    DVector::from_vec(out)
}

struct Lm<'a> {
    a: &'a Algebra,
    b: &'a Algebra,
    p: DVector<f64>,
    r: DVector<f64>,
    cost: f64,
    damping: f64,
}

impl<'a> Lm<'a> {
    fn new(a: &'a Algebra, b: &'a Algebra, w0: &Matrix3) -> Option<Self> {
        let mut start = Vec::new();
        pack(w0, a.field, &mut start);
        pack(&w0.inverse()?, a.field, &mut start);
        let p = DVector::from_vec(start);
        let r = residual(a, b, &p);
        Some(Lm {
            a,
            b,
            cost: r.norm_squared(),
            p,
            r,
            damping: 1e-3,
        })
    }

    fn current(&self) -> Matrix3 {
        split(&self.p, self.a.field).0
    }

    /// One accepted step; `false` when no damping level reduces the cost.
    fn step(&mut self) -> bool {
        let (a, b) = (self.a, self.b);
        let n = self.p.len();
        // Central differences with unit step are exact on a quadratic.
        let mut jac = DMatrix::zeros(self.r.len(), n);
        for k in 0..n {
            let mut plus = self.p.clone();
            let mut minus = self.p.clone();
            plus[k] += 1.0;
            minus[k] -= 1.0;
            let d = (residual(a, b, &plus) - residual(a, b, &minus)) * 0.5;
            jac.set_column(k, &d);
        }
        let jt = jac.transpose();
        let jtj = &jt * &jac;
        let g = &jt * &self.r;
        while self.damping < 1e12 {
            let mut lhs = jtj.clone();
            for k in 0..n {
                lhs[(k, k)] += self.damping * (1.0 + jtj[(k, k)]);
            }
            let Some(step) = lhs.lu().solve(&(-&g)) else {
                self.damping *= 10.0;
                continue;
            };
            let trial = &self.p + step;
            let rt = residual(a, b, &trial);
            let ct = rt.norm_squared();
            if ct < self.cost {
                self.p = trial;
                self.r = rt;
                self.cost = ct;
                self.damping = (self.damping / 3.0).max(1e-12);
                return true;
            }
            self.damping *= 4.0;
        }
        false
    }
}

/// Runs LM from `w0` and returns the first iterate that verifies as a
/// witness. The quadratic system also has degenerate solutions (`W = 0`
/// among them), so convergence alone is not success.
fn levenberg_marquardt(a: &Algebra, b: &Algebra, w0: Matrix3, iterations: usize, tol: f64) -> Option<Witness> {
    let verified = |w: Matrix3| {
        if w.cond() > 1e8 {
            return None;
        }
        Witness::measure(a, b, w).ok().filter(|wit| wit.residual < tol)
    };
    let mut lm = Lm::new(a, b, &w0)?;
    for _ in 0..iterations {
        if let Some(wit) = verified(lm.current()) {
            return Some(wit);
        }
        if !lm.step() {
            break;
        }
    }
    verified(lm.current())
}

/// Polishes a nearly correct witness from `a` to `b` with a few damped
/// Gauss–Newton steps, keeping whichever iterate has the smallest residual.
pub(crate) fn refine(a: &Algebra, b: &Algebra, w: Witness, steps: usize) -> Witness {
    let Some(mut lm) = Lm::new(a, b, &w.matrix) else {
        return w;
    };
    let mut best = w;
    for _ in 0..steps {
        if !lm.step() {
            break;
        }
        if let Ok(cand) = Witness::measure(a, b, lm.current()) {
            if cand.residual < best.residual {
                best = cand;
            }
        }
    }
    best
}
