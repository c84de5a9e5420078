use omega_lie::catalog::{bianchi, model, representatives, BianchiType};
use omega_lie::linalg::re;
use omega_lie::{
    canonicalize_ratio, classify, complexify, is_isomorphic, lie_classify, transform, Algebra, ClassLabel, Error,
    Field, Matrix3, Scalar, Tolerances,
};

fn tol() -> Tolerances {
    Tolerances::default()
}

fn basis() -> Matrix3 {
    Matrix3::from_real([[0.9, -0.4, 1.2], [0.3, 1.5, -0.2], [-0.8, 0.6, 0.7]])
}

fn classify_label(a: &Algebra) -> ClassLabel {
    classify(a, &tol()).unwrap().label
}

#[test]
fn l1_is_a_fixed_point() {
    let rep = classify(&model(&ClassLabel::L1, Field::Complex).unwrap(), &tol()).unwrap();
    assert_eq!(rep.label, ClassLabel::L1);
    assert_eq!(rep.witness.matrix, Matrix3::identity());
    assert_eq!(rep.witness.residual, 0.0);
    assert_eq!(rep.diagnostics.derived_rank, 2);
}

#[test]
fn transformed_c2_round_trips() {
    for alpha in [2.0, 0.5] {
        let a = transform(
            &model(&ClassLabel::C { alpha: re(alpha) }, Field::Complex).unwrap(),
            &basis(),
        )
        .unwrap();
        let rep = classify(&a, &tol()).unwrap();
        assert!(
            rep.label.approx_eq(&ClassLabel::C { alpha: re(2.0) }, 1e-9),
            "{}",
            rep.label
        );
        assert!(rep.witness.residual < 1e-6);
    }
}

#[test]
fn table_rows_classify_as_stated() {
    let vi_t = bianchi(BianchiType::ViT, None).unwrap();
    assert_eq!(classify_label(&vi_t.algebra), ClassLabel::B1);
    let viii = bianchi(BianchiType::ViiiTA, Some(1.0)).unwrap();
    assert_eq!(classify_label(&viii.algebra), ClassLabel::L2);
}

#[test]
fn lie_examples() {
    let g2 = model(&ClassLabel::G2, Field::Complex).unwrap();
    assert_eq!(lie_classify(&g2, &tol()).unwrap().label, ClassLabel::G2);
    let g4 = model(&ClassLabel::G4, Field::Complex).unwrap();
    assert_eq!(lie_classify(&g4, &tol()).unwrap().label, ClassLabel::G4);
    for alpha in [3.0, 1.0 / 3.0] {
        let h = model(&ClassLabel::H { alpha: re(alpha) }, Field::Complex).unwrap();
        let rep = lie_classify(&h, &tol()).unwrap();
        assert!(rep.label.approx_eq(&ClassLabel::H { alpha: re(3.0) }, 1e-12));
        assert!(rep.witness.residual < 1e-10);
    }
}

#[test]
fn canonicalize_examples() {
    assert_eq!(canonicalize_ratio(re(2.0)).unwrap(), re(2.0));
    assert_eq!(canonicalize_ratio(re(0.5)).unwrap(), re(2.0));
    let i = Scalar::new(0.0, 1.0);
    assert_eq!(canonicalize_ratio(i).unwrap(), i);
    assert_eq!(canonicalize_ratio(re(0.0)), Err(Error::ZeroParameter));
}

#[test]
fn inversion_witness_for_c() {
    // x ↦ x/α, y ↦ z, z ↦ −y/α carries C(α) onto C(1/α)
    for alpha in [re(3.0), Scalar::new(0.4, -1.3), re(-0.25)] {
        let a = model(&ClassLabel::C { alpha }, Field::Complex).unwrap();
        let target = model(&ClassLabel::C { alpha: alpha.inv() }, Field::Complex).unwrap();
        let ia = alpha.inv();
        let z = re(0.0);
        let p = Matrix3([[ia, z, z], [z, z, -ia], [z, re(1.0), z]]);
        assert!(transform(&a, &p).unwrap().distance(&target) < 1e-10);
    }
}

#[test]
fn complexify_examples() {
    let bm1 = complexify(&model(&ClassLabel::Bm1, Field::Real).unwrap());
    assert_eq!(bm1.field, Field::Complex);
    assert_eq!(classify_label(&bm1), ClassLabel::B);
    for alpha in [0.0, -0.4, 2.0] {
        let a = complexify(&model(&ClassLabel::ACal { alpha }, Field::Real).unwrap());
        assert_eq!(classify_label(&a), ClassLabel::A { alpha: re(0.0) });
    }
    for alpha in [4.0, 0.5, -3.0] {
        let a = complexify(&model(&ClassLabel::CCal { alpha }, Field::Real).unwrap());
        let expect = ClassLabel::C {
            alpha: canonicalize_ratio(re(alpha)).unwrap(),
        };
        assert!(classify_label(&a).approx_eq(&expect, 1e-12));
    }
}

/// The rotation block has eigenvalues `e^{±iθ}` with `2 cos θ = α`, so the
/// complex image is `C(e^{2iθ})`.
fn rotation_image(alpha: f64) -> ClassLabel {
    let theta = (alpha / 2.0).acos();
    ClassLabel::C {
        alpha: canonicalize_ratio(Scalar::from_polar(1.0, 2.0 * theta)).unwrap(),
    }
}

#[test]
fn rotation_families_complexify_to_unit_circle_c() {
    for alpha in [0.3, 1.0, 1.7] {
        let expect = rotation_image(alpha);
        let ClassLabel::C { alpha: beta } = expect else {
            unreachable!()
        };
        assert!(beta.im > 0.0);
        for label in [ClassLabel::EPlus { alpha }, ClassLabel::EMinus { alpha }] {
            let a = complexify(&model(&label, Field::Real).unwrap());
            let rep = classify(&a, &tol()).unwrap();
            assert!(rep.label.approx_eq(&expect, 1e-9), "{label}: {}", rep.label);
            assert!(rep.witness.residual < 1e-9);
            // and back: the model of that class is isomorphic to the image
            let back = model(&rep.label, Field::Complex).unwrap();
            assert!(is_isomorphic(&a, &back, &tol()).unwrap().isomorphic);
        }
    }
}

#[test]
fn rotation_families_split_only_over_the_reals() {
    let t = tol();
    for alpha in [0.3, 1.0, 1.7] {
        let p = model(&ClassLabel::EPlus { alpha }, Field::Real).unwrap();
        let m = model(&ClassLabel::EMinus { alpha }, Field::Real).unwrap();
        assert!(!is_isomorphic(&p, &m, &t).unwrap().isomorphic);
        assert!(is_isomorphic(&complexify(&p), &complexify(&m), &t).unwrap().isomorphic);
        // distinct parameters stay distinct, and α ~ −α
        let q = model(&ClassLabel::EPlus { alpha: alpha * 0.9 }, Field::Real).unwrap();
        assert!(!is_isomorphic(&p, &q, &t).unwrap().isomorphic);
        let neg = model(&ClassLabel::EPlus { alpha: -alpha }, Field::Real).unwrap();
        assert!(is_isomorphic(&p, &neg, &t).unwrap().isomorphic);
    }
}

#[test]
fn near_coincident_eigenvalues_stay_in_family_c() {
    for gap in [1e-2, 1e-4, 1e-6] {
        let alpha = re(1.0 + gap);
        let a = model(&ClassLabel::C { alpha }, Field::Complex).unwrap();
        for input in [a, transform(&a, &basis()).unwrap()] {
            match classify(&input, &tol()) {
                Ok(rep) => {
                    assert!(
                        rep.label.approx_eq(&ClassLabel::C { alpha }, 1e-6),
                        "gap {gap}: {}",
                        rep.label
                    );
                    assert!(rep.witness.residual < tol().wit);
                }
                Err(e) => assert!(e.is_numerical(), "gap {gap}: {e}"),
            }
        }
    }
}

#[test]
fn representatives_are_pairwise_disjoint() {
    let t = tol();
    for field in [Field::Real, Field::Complex] {
        let reps = representatives(field);
        let labels: Vec<ClassLabel> = reps
            .iter()
            .map(|l| {
                classify(&transform(&model(l, field).unwrap(), &basis()).unwrap(), &t)
                    .unwrap()
                    .label
            })
            .collect();
        for (i, li) in reps.iter().enumerate() {
            assert!(
                labels[i].approx_eq(&li.canonical().unwrap(), 1e-9),
                "{li} -> {}",
                labels[i]
            );
            for (j, lj) in reps.iter().enumerate().skip(i + 1) {
                // several parameter values of one class are listed on purpose
                let same = li.canonical().unwrap().approx_eq(&lj.canonical().unwrap(), 1e-12);
                assert_eq!(labels[i].approx_eq(&labels[j], 1e-6), same, "{li} vs {lj}");
                let iso = is_isomorphic(&model(li, field).unwrap(), &model(lj, field).unwrap(), &t).unwrap();
                assert_eq!(iso.isomorphic, same, "{li} vs {lj}");
            }
        }
    }
}

#[test]
fn labels_respect_the_field() {
    for label in representatives(Field::Real) {
        let a = transform(&model(&label, Field::Real).unwrap(), &basis()).unwrap();
        let got = classify_label(&a);
        assert!(got.allowed_in(Field::Real), "{got}");
        let c = classify_label(&complexify(&a));
        assert!(c.allowed_in(Field::Complex), "{c}");
    }
}

#[test]
fn invalid_omega_is_refused() {
    let mut a = model(&ClassLabel::B, Field::Complex).unwrap();
    a.omega.yz = re(1.0);
    assert!(matches!(classify(&a, &tol()), Err(Error::ValidationFailed { .. })));
}

#[test]
fn zero_bracket_is_abelian() {
    let a = Algebra::induced(Field::Real, omega_lie::Bracket::zero());
    let rep = classify(&a, &tol()).unwrap();
    assert_eq!(rep.label, ClassLabel::Abelian);
    assert_eq!(rep.witness.residual, 0.0);
}
