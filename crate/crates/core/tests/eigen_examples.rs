mod common;

use common::multiset_distance;
use omega_lie::catalog::model;
use omega_lie::eigen::{eigenvalues3, spectral_type, SpectralType};
use omega_lie::linalg::re;
use omega_lie::{adjoint, ClassLabel, Error, Field, Matrix3, Scalar, Vector3};

#[test]
fn eigenvalues_of_diagonal() {
    for alpha in [re(3.0), re(-0.5), Scalar::new(1.0, 2.0)] {
        let m = Matrix3::diag(re(0.0), re(1.0), alpha);
        let ev = eigenvalues3(&m);
        assert!(multiset_distance(ev.values, [re(0.0), re(1.0), alpha]) < 1e-12);
    }
}

#[test]
fn eigenvalues_of_zero() {
    let ev = eigenvalues3(&Matrix3::zero());
    assert_eq!(ev.values, [re(0.0); 3]);
    assert_eq!(ev.backward_error, [0.0; 3]);
}

#[test]
fn eigenvalues_of_cube_root_companion() {
    // companion matrix of λ³ − 1
    let m = Matrix3::from_real([[0.0, 0.0, 1.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0]]);
    let h = 3f64.sqrt() / 2.0;
    let roots = [re(1.0), Scalar::new(-0.5, h), Scalar::new(-0.5, -h)];
    assert!(multiset_distance(eigenvalues3(&m).values, roots) < 1e-12);
}

fn ad_x(label: ClassLabel, field: Field) -> Matrix3 {
    adjoint(&model(&label, field).unwrap().bracket, &Vector3::unit(0))
}

#[test]
fn spectral_type_of_the_model_families() {
    for alpha in [re(0.0), re(2.0), Scalar::new(-1.0, 1.0)] {
        let t = spectral_type(&ad_x(ClassLabel::A { alpha }, Field::Complex), Field::Complex, 1e-7).unwrap();
        assert_eq!(t, SpectralType::NilFull);
    }
    let t = spectral_type(&ad_x(ClassLabel::B, Field::Complex), Field::Complex, 1e-7).unwrap();
    assert_eq!(t, SpectralType::DoubleBlock { delta: re(1.0) });
    let t = spectral_type(
        &ad_x(ClassLabel::C { alpha: re(3.0) }, Field::Complex),
        Field::Complex,
        1e-7,
    )
    .unwrap();
    match t {
        SpectralType::Diag { mu, nu } => {
            assert!(multiset_distance([re(0.0), mu, nu], [re(0.0), re(1.0), re(3.0)]) < 1e-12)
        }
        other => panic!("{other:?}"),
    }
    let t = spectral_type(&ad_x(ClassLabel::EPlus { alpha: 1.0 }, Field::Real), Field::Real, 1e-7).unwrap();
    assert_eq!(t, SpectralType::Rotation { a: 1.0, b: 1.0 });
}

#[test]
fn rotation_block_over_complex_is_diagonal() {
    let m = ad_x(ClassLabel::EPlus { alpha: 1.0 }, Field::Real);
    match spectral_type(&m, Field::Complex, 1e-7).unwrap() {
        SpectralType::Diag { mu, nu } => {
            assert!((mu * nu - re(1.0)).norm() < 1e-12 && (mu + nu - re(1.0)).norm() < 1e-12);
            assert!(mu.im != 0.0);
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn equal_eigenvalues_separate_block_from_scalar() {
    let scalar = Matrix3::diag(re(0.0), re(2.0), re(2.0));
    assert_eq!(
        spectral_type(&scalar, Field::Complex, 1e-7).unwrap(),
        SpectralType::Diag {
            mu: re(2.0),
            nu: re(2.0)
        }
    );
    let block = Matrix3::from_real([[0.0, 0.0, 0.0], [0.0, 2.0, 1.0], [0.0, 0.0, 2.0]]);
    assert_eq!(
        spectral_type(&block, Field::Complex, 1e-7).unwrap(),
        SpectralType::DoubleBlock { delta: re(2.0) }
    );
}

#[test]
fn kernel_too_big_and_nonsingular() {
    let rank_one = Matrix3::from_real([[0.0, 1.0, 0.0], [0.0, 0.0, 0.0], [0.0, 0.0, 0.0]]);
    assert_eq!(
        spectral_type(&rank_one, Field::Real, 1e-7).unwrap(),
        SpectralType::KernelTooBig
    );
    assert_eq!(
        spectral_type(&Matrix3::identity(), Field::Real, 1e-7),
        Err(Error::ZeroNotEigenvalue)
    );
}

#[test]
fn gap_inside_the_band_is_ambiguous() {
    // (μ − ν)² ≈ 1e-7, inside (τ/10, 10τ) after normalization
    let d = 1e-7f64.sqrt();
    let m = Matrix3::diag(re(0.0), re(1.0), re(1.0 + d));
    assert!(matches!(
        spectral_type(&m, Field::Complex, 1e-7),
        Err(Error::AmbiguousSpectrum(_))
    ));
    // well outside the band on either side
    let far = Matrix3::diag(re(0.0), re(1.0), re(1.1));
    assert!(matches!(
        spectral_type(&far, Field::Complex, 1e-7),
        Ok(SpectralType::Diag { .. })
    ));
    let near = Matrix3::diag(re(0.0), re(1.0), re(1.0 + 1e-6));
    assert!(matches!(
        spectral_type(&near, Field::Complex, 1e-7),
        Ok(SpectralType::Diag { .. })
    ));
}
