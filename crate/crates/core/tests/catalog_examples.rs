use omega_lie::catalog::{bianchi, class_entry, lookup, model, printed_omega, representatives, BianchiType};
use omega_lie::linalg::re;
use omega_lie::{validate, Bracket, ClassLabel, Convention, Error, Field, OmegaForm, Scalar};

#[test]
fn l2_model() {
    let a = model(&ClassLabel::L2, Field::Complex).unwrap();
    assert_eq!(a.bracket, Bracket::real([0.0; 3], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]));
    assert_eq!(a.omega, OmegaForm::real(0.0, 1.0, 0.0));
}

#[test]
fn b_model() {
    let a = model(&ClassLabel::B, Field::Complex).unwrap();
    assert_eq!(
        a.bracket,
        Bracket::real([0.0, 1.0, 0.0], [0.0, 1.0, 1.0], [1.0, 0.0, 0.0])
    );
    assert_eq!(a.omega, OmegaForm::real(0.0, 0.0, 2.0));
}

#[test]
fn e_minus_model() {
    for alpha in [0.5, 1.0, -1.5] {
        let a = model(&ClassLabel::EMinus { alpha }, Field::Real).unwrap();
        assert_eq!(
            a.bracket,
            Bracket::real([0.0, 0.0, -1.0], [0.0, 1.0, alpha], [-1.0, 0.0, 0.0])
        );
        assert_eq!(a.omega, OmegaForm::real(0.0, 0.0, -alpha));
    }
}

#[test]
fn a_and_c_models() {
    let alpha = Scalar::new(0.3, -2.0);
    let a = model(&ClassLabel::A { alpha }, Field::Complex).unwrap();
    assert_eq!(a.bracket.yz, omega_lie::Vector3::new(alpha, re(0.0), re(1.0)));
    assert_eq!(a.omega, OmegaForm::real(0.0, 0.0, -1.0));
    let c = model(&ClassLabel::C { alpha }, Field::Complex).unwrap();
    assert_eq!(c.omega, OmegaForm::new(re(0.0), re(0.0), alpha + 1.0));
}

#[test]
fn class_models_carry_their_printed_omega_exactly() {
    for field in [Field::Real, Field::Complex] {
        for label in representatives(field) {
            let e = class_entry(&label, field).unwrap();
            assert_eq!(e.printed_omega, printed_omega(&label));
            assert_eq!(e.algebra.omega, e.printed_omega, "{label}");
            assert!(validate(&e.algebra, 1e-12).pass, "{label}");
            assert_eq!(e.convention, Some(Convention::Plus));
        }
    }
}

#[test]
fn iv_t_row() {
    let e = bianchi(BianchiType::IvT, None).unwrap();
    assert_eq!(
        e.algebra.bracket,
        Bracket::real([0.0, 1.0, 0.0], [0.0, 0.0, 1.0], [1.0, 0.0, 0.0])
    );
    assert_eq!(e.printed_omega, OmegaForm::real(0.0, 0.0, -2.0));
}

#[test]
fn viii_n_row_at_one() {
    let e = bianchi(BianchiType::ViiiNA, Some(1.0)).unwrap();
    assert_eq!(
        e.algebra.bracket,
        Bracket::real([0.0, 1.0, -1.0], [-1.0, -1.0, 1.0], [1.0, -1.0, 0.0])
    );
    assert_eq!(e.printed_omega, OmegaForm::real(2.0, 0.0, -2.0));
}

#[test]
fn vi_n_row() {
    let e = bianchi(BianchiType::ViN, None).unwrap();
    assert_eq!(
        e.algebra.bracket,
        Bracket::real([-1.0, 1.0, 0.0], [0.0, 1.0, 1.0], [1.0, 0.0, 1.0])
    );
    assert_eq!(e.printed_omega, OmegaForm::real(0.0, -2.0, -2.0));
}

#[test]
fn every_row_stores_induced_omega_and_needs_negation() {
    for kind in BianchiType::ALL {
        for a in [0.5, 1.0, 2.0] {
            let e = bianchi(kind, kind.is_parameterized().then_some(a)).unwrap();
            assert!(validate(&e.algebra, 1e-12).pass);
            assert_eq!(e.convention, Some(Convention::Minus), "{}", kind.name());
            assert_eq!(e.printed_omega.neg(), e.algebra.omega, "{}", kind.name());
        }
    }
}

#[test]
fn parameterized_rows_need_positive_a() {
    for kind in BianchiType::ALL.into_iter().filter(|k| k.is_parameterized()) {
        assert!(matches!(bianchi(kind, Some(0.0)), Err(Error::ParameterOutOfDomain(_))));
        assert!(matches!(bianchi(kind, Some(-1.0)), Err(Error::ParameterOutOfDomain(_))));
        assert!(matches!(bianchi(kind, None), Err(Error::ParameterOutOfDomain(_))));
    }
}

#[test]
fn out_of_domain_parameters() {
    let bad = [
        (ClassLabel::C { alpha: re(0.0) }, Field::Complex),
        (ClassLabel::C { alpha: re(-1.0) }, Field::Complex),
        (ClassLabel::CCal { alpha: -1.0 }, Field::Real),
        (ClassLabel::H { alpha: re(0.0) }, Field::Complex),
        (ClassLabel::EPlus { alpha: 0.0 }, Field::Real),
        (ClassLabel::EMinus { alpha: 2.0 }, Field::Real),
        (ClassLabel::B1, Field::Complex),
        (ClassLabel::A { alpha: re(0.0) }, Field::Real),
    ];
    for (label, field) in bad {
        assert!(
            matches!(model(&label, field), Err(Error::ParameterOutOfDomain(_))),
            "{label}"
        );
    }
}

#[test]
fn lookup_by_name() {
    let e = lookup("C", &[("alpha".into(), re(3.0))], Field::Complex).unwrap();
    assert_eq!(
        e.algebra,
        model(&ClassLabel::C { alpha: re(3.0) }, Field::Complex).unwrap()
    );
    let row = lookup("viii_t_a", &[("a".into(), re(2.0))], Field::Real).unwrap();
    assert_eq!(row.name, "VIII_T_a");
    assert!(lookup("nonsense", &[], Field::Real).is_err());
}
