use omega_lie::linalg::re;
use omega_lie::oracle::{run_completeness, run_invariance, run_table1, to_json, Sampler, TrialConfig};
use omega_lie::{ClassLabel, Convention, Field};

#[test]
fn complex_completeness_is_clean_and_generic() {
    let r = run_completeness(&TrialConfig::new(1, 1000, Field::Complex)).unwrap();
    assert!(r.pass && r.failures.is_empty() && r.impossible_case_d == 0);
    assert!(r.max_residual < 1e-6);
    let rank_three: usize = ["A", "B", "C"]
        .iter()
        .map(|k| r.histogram.get(*k).copied().unwrap_or(0))
        .sum();
    assert!(rank_three * 10 >= r.non_lie * 9, "{:?}", r.histogram);
    assert_eq!(r.non_lie + r.lie + r.quarantined.len(), 1000);
}

#[test]
fn real_completeness_reaches_rotation_classes() {
    let r = run_completeness(&TrialConfig::new(1, 1000, Field::Real)).unwrap();
    assert!(r.pass && r.failures.is_empty());
    let e = r.histogram.get("EPlus").copied().unwrap_or(0) + r.histogram.get("EMinus").copied().unwrap_or(0);
    assert!(e > 0, "{:?}", r.histogram);
}

#[test]
fn integer_sampler_reaches_degenerate_strata() {
    for field in [Field::Real, Field::Complex] {
        let mut cfg = TrialConfig::new(3, 2000, field);
        cfg.sampler = Sampler::Integer;
        let r = run_completeness(&cfg).unwrap();
        assert!(r.pass, "{:?}", r.failures);
        for class in ["L1", "L2"] {
            assert!(r.histogram.contains_key(class), "{field:?}: {:?}", r.histogram);
        }
        assert!(r.lie > 0);
    }
}

#[test]
fn zero_trials_are_rejected() {
    assert!(run_completeness(&TrialConfig::new(1, 0, Field::Real)).is_err());
    let mut cfg = TrialConfig::new(1, 10, Field::Real);
    cfg.cond_cap = 1.0;
    assert!(run_invariance(&cfg).is_err());
}

#[test]
fn invariance_holds_for_every_model() {
    for field in [Field::Complex, Field::Real] {
        let r = run_invariance(&TrialConfig::new(5, 500, field)).unwrap();
        assert!(r.pass, "{field:?}");
        for m in &r.models {
            assert!(m.mismatches.is_empty(), "{}: {:?}", m.model, m.mismatches);
            // exact for every class except where an eigenvalue ratio is rounded
            assert!(
                m.identity_residual.is_some_and(|r| r <= 1e-15),
                "{}: {:?}",
                m.model,
                m.identity_residual
            );
            assert!(m.max_param_drift < 1e-6 && m.max_residual < 1e-6, "{}", m.model);
            assert_eq!(m.search_disagreements, 0);
        }
        let b = r.models.iter().find(|m| m.model == "B" || m.model == "B1").unwrap();
        assert_eq!(b.stable, 500);
    }
}

#[test]
fn a_family_collapses_to_one_class() {
    let r = run_invariance(&TrialConfig::new(9, 100, Field::Complex)).unwrap();
    let a0 = ClassLabel::A { alpha: re(0.0) }.to_string();
    for probe in &r.a_family {
        assert_eq!(probe.shift_residual, 0.0, "{}", probe.gamma);
        assert!(probe.search_residual.is_some_and(|s| s < 1e-6), "{}", probe.gamma);
        assert_eq!(probe.classified_as.keys().collect::<Vec<_>>(), vec![&a0]);
    }
}

#[test]
fn table_rows_match() {
    let r = run_table1(&TrialConfig::new(1, 1, Field::Real)).unwrap();
    assert!(r.all_match && r.all_agree);
    let row = |name: &str, a: Option<f64>| r.rows.iter().find(|x| x.row == name && x.a == a).unwrap();
    let vi_t = row("VI_T", None);
    assert_eq!(vi_t.convention, Some(Convention::Minus));
    assert_eq!(vi_t.label, Some(ClassLabel::B1));
    assert!(vi_t.matches);
    assert_eq!(row("VIII_T_a", Some(1.0)).label, Some(ClassLabel::L2));
    let ix = row("IX_a", Some(1.0));
    assert!(matches!(ix.label, Some(ClassLabel::EMinus { .. })) && ix.matches);
    assert!(r.rows.iter().all(|x| x.convention == Some(Convention::Minus)));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let cfg = TrialConfig::new(11, 300, Field::Real);
    assert_eq!(
        to_json(&run_completeness(&cfg).unwrap()),
        to_json(&run_completeness(&cfg).unwrap())
    );
    let cfg = TrialConfig::new(11, 20, Field::Complex);
    assert_eq!(
        to_json(&run_invariance(&cfg).unwrap()),
        to_json(&run_invariance(&cfg).unwrap())
    );
    let cfg = TrialConfig::new(11, 1, Field::Real);
    assert_eq!(to_json(&run_table1(&cfg).unwrap()), to_json(&run_table1(&cfg).unwrap()));
}
