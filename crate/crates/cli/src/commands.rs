//! Command implementations. Each writes its report to `out` and returns the
//! exit code.

use std::io::Write;

use serde::Serialize;

use omega_lie::catalog::{default_field, lookup};
use omega_lie::linalg::fmt_scalar;
use omega_lie::oracle::{run_completeness, run_invariance, run_table1, TrialConfig};
use omega_lie::{
    classify, is_isomorphic, search_witness, validate, Algebra, ClassLabel, Convention, Field, Matrix3, OmegaForm,
    Scalar, SearchConfig, Tolerances, Via,
};

use crate::args::{check_tol, CatalogCommand, Cli, Command, ConventionArg, OmegaArg, OracleKind};
use crate::document::AlgebraDocument;
use crate::error::{CliError, EXIT_DOMAIN, EXIT_OK};
use crate::report::{
    rows, CatalogListJson, ClassifyJson, IsomorphismJson, LabelJson, OmegaJson, OracleJson, Residuals, SearchJson,
    ValidateJson, Versioned,
};

type Out<'a> = &'a mut dyn Write;

fn emit<T: Serialize>(out: Out, body: T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(&Versioned::new(body)).expect("reports serialize");
    writeln!(out, "{text}")?;
    Ok(())
}

fn exit(pass: bool) -> i32 {
    if pass {
        EXIT_OK
    } else {
        EXIT_DOMAIN
    }
}

/// Formats a scalar without negative zeros.
fn fmt(x: Scalar) -> String {
    fmt_scalar(Scalar::new(x.re + 0.0, x.im + 0.0))
}

fn fmt_omega(w: &OmegaForm) -> String {
    format!("xy = {}, xz = {}, yz = {}", fmt(w.xy), fmt(w.xz), fmt(w.yz))
}

fn fmt_matrix(out: Out, m: &Matrix3) -> Result<(), CliError> {
    for row in m.0 {
        let cells: Vec<String> = row.iter().map(|x| format!("{:>12}", fmt(*x))).collect();
        writeln!(out, "  [{} ]", cells.join(""))?;
    }
    Ok(())
}

fn load(path: &str) -> Result<(AlgebraDocument, Algebra), CliError> {
    let doc = AlgebraDocument::read(path)?;
    let a = doc.algebra()?;
    Ok((doc, a))
}

pub fn execute(cli: &Cli, out: Out) -> Result<i32, CliError> {
    match &cli.command {
        Command::Validate {
            path,
            tol,
            convention,
            json,
        } => cmd_validate(out, path, *tol, *convention, *json),
        Command::Classify { path, tol, json } => cmd_classify(out, path, &tol.tolerances()?, *json),
        Command::Isomorphic {
            a,
            b,
            search,
            complexify,
            seed,
            attempts,
            tol,
            json,
        } => {
            let cfg = search.then_some(SearchConfig {
                attempts: *attempts,
                seed: *seed,
                ..SearchConfig::default()
            });
            cmd_isomorphic(out, a, b, cfg, *complexify, &tol.tolerances()?, *json)
        }
        Command::Catalog { command } => match command {
            CatalogCommand::List { json } => cmd_catalog_list(out, *json),
            CatalogCommand::Show {
                name,
                params,
                field,
                omega,
            } => cmd_catalog_show(out, name, params, field.map(Field::from), *omega),
        },
        Command::Table1 { seed, tol, json } => {
            let mut cfg = TrialConfig::new(*seed, 1, Field::Real);
            cfg.tolerances = tol.tolerances()?;
            cmd_table1(out, &cfg, *json)
        }
        Command::Oracle {
            kind,
            seed,
            trials,
            field,
            sampler,
            cond_cap,
            tol,
            json,
        } => {
            let mut cfg = TrialConfig::new(*seed, *trials, Field::from(*field));
            cfg.sampler = (*sampler).into();
            cfg.cond_cap = *cond_cap;
            cfg.tolerances = tol.tolerances()?;
            if *trials == 0 || !(*cond_cap > 1.0) {
                return Err(CliError::Input(
                    "--trials must be positive and --cond-cap above 1".into(),
                ));
            }
            cmd_oracle(out, *kind, &cfg, *json)
        }
    }
}

pub fn cmd_validate(
    out: Out,
    path: &str,
    tol: Option<f64>,
    requested: ConventionArg,
    json: bool,
) -> Result<i32, CliError> {
    let tol = match tol {
        Some(t) => check_tol("tol", t)?,
        None => Tolerances::default().val,
    };
    let (doc, mut a) = load(path)?;
    // A missing omega is filled in under the requested convention.
    if !doc.has_omega() && requested == ConventionArg::Minus {
        a.omega = a.omega.neg();
    }
    let v = validate(&a, tol);
    let (plus, minus) = match requested {
        ConventionArg::Auto => (Some(v.discrepancy), Some(v.discrepancy_negated)),
        ConventionArg::Plus => (Some(v.discrepancy), None),
        ConventionArg::Minus => (None, Some(v.discrepancy_negated)),
    };
    let convention = match requested {
        ConventionArg::Auto => v.convention(),
        ConventionArg::Plus => v.pass.then_some(Convention::Plus),
        ConventionArg::Minus => v.pass_negated.then_some(Convention::Minus),
    };
    let pass = convention.is_some();
    let report = ValidateJson {
        field: a.field,
        omega_supplied: doc.has_omega(),
        requested: format!("{requested:?}").to_lowercase(),
        induced_omega: OmegaJson::from(&v.induced_omega),
        stored_omega: OmegaJson::from(&a.omega),
        residuals: Residuals { plus, minus },
        threshold: v.threshold,
        convention,
        lie: v.is_lie,
        pass,
    };
    if json {
        emit(out, report)?;
    } else {
        writeln!(out, "field: {}", a.field.as_str())?;
        writeln!(out, "omega: {}", if doc.has_omega() { "supplied" } else { "induced" })?;
        writeln!(out, "induced omega: {}", fmt_omega(&v.induced_omega))?;
        if let Some(r) = plus {
            writeln!(out, "residual (plus): {r:e}")?;
        }
        if let Some(r) = minus {
            writeln!(out, "residual (minus): {r:e}")?;
        }
        writeln!(out, "threshold: {:e}", v.threshold)?;
        if v.is_lie {
            writeln!(out, "lie: yes")?;
        }
        match convention {
            Some(c) => writeln!(out, "convention: {}\nresult: pass", c.as_str())?,
            None => writeln!(out, "result: FAIL")?,
        }
    }
    Ok(exit(pass))
}

pub fn cmd_classify(out: Out, path: &str, tol: &Tolerances, json: bool) -> Result<i32, CliError> {
    let (_, a) = load(path)?;
    let r = classify(&a, tol)?;
    if json {
        emit(out, ClassifyJson::from(&r))?;
    } else {
        let d = &r.diagnostics;
        writeln!(out, "class: {}", r.label)?;
        writeln!(out, "field: {}", d.field.as_str())?;
        writeln!(out, "convention: {}", d.convention.as_str())?;
        writeln!(out, "induced omega: {}", fmt_omega(&d.induced_omega))?;
        writeln!(out, "derived rank: {}", d.derived_rank)?;
        if let Some(s) = &d.spectral_type {
            writeln!(out, "spectral type: {}", s.name())?;
        }
        writeln!(
            out,
            "witness (columns are the canonical basis), residual {:e}:",
            r.witness.residual
        )?;
        fmt_matrix(out, &r.witness.matrix)?;
    }
    Ok(EXIT_OK)
}

pub fn cmd_isomorphic(
    out: Out,
    path_a: &str,
    path_b: &str,
    search: Option<SearchConfig>,
    complexify: bool,
    tol: &Tolerances,
    json: bool,
) -> Result<i32, CliError> {
    let (_, mut a) = load(path_a)?;
    let (_, mut b) = load(path_b)?;
    if complexify {
        a = a.complexify();
        b = b.complexify();
    }
    if a.field != b.field {
        return Err(CliError::Input(format!(
            "documents are over different fields ({} and {}); pass --complexify to compare over ℂ",
            a.field.as_str(),
            b.field.as_str()
        )));
    }
    let labels = [&a, &b].map(|x| classify(x, tol).ok().map(|r| LabelJson::from(&r.label)));
    let decided = is_isomorphic(&a, &b, tol);
    let found = search.as_ref().and_then(|cfg| search_witness(&a, &b, cfg, tol));
    let (isomorphic, via, witness) = match (&decided, &found) {
        (Ok(r), _) if r.isomorphic => (true, r.via, r.witness),
        (_, Some(w)) => (true, Via::DirectSearch, Some(*w)),
        (Ok(r), None) => (false, r.via, None),
        (Err(_), None) if search.is_some() => (false, Via::DirectSearch, None),
        (Err(e), None) => return Err(e.clone().into()),
    };
    let via = match via {
        Via::CanonicalCompare => "canonical-compare",
        Via::DirectSearch => "direct-search",
    };
    let report = IsomorphismJson {
        field: a.field,
        complexified: complexify,
        isomorphic,
        via: via.to_string(),
        witness: witness.map(|w| rows(&w.matrix)),
        residual: witness.map(|w| w.residual),
        labels: labels.clone(),
        search: search.map(|cfg| SearchJson {
            found: found.is_some(),
            residual: found.map(|w| w.residual),
            witness: found.map(|w| rows(&w.matrix)),
            attempts: cfg.attempts,
            seed: cfg.seed,
        }),
    };
    if json {
        emit(out, report)?;
    } else {
        let show = |l: &Option<LabelJson>| l.as_ref().map_or("unclassified".to_string(), |l| l.label.clone());
        writeln!(out, "field: {}", a.field.as_str())?;
        writeln!(out, "classes: {} / {}", show(&labels[0]), show(&labels[1]))?;
        if isomorphic {
            writeln!(out, "isomorphic ({via})")?;
        } else {
            writeln!(out, "not isomorphic ({via})")?;
        }
        if let Some(w) = witness {
            writeln!(out, "witness, residual {:e}:", w.residual)?;
            fmt_matrix(out, &w.matrix)?;
        }
        if let Some(cfg) = search {
            match found {
                Some(w) => writeln!(out, "search: witness found, residual {:e}", w.residual)?,
                None => writeln!(out, "search: no witness in {} attempts", cfg.attempts)?,
            }
        }
    }
    Ok(EXIT_OK)
}

pub fn cmd_catalog_list(out: Out, json: bool) -> Result<i32, CliError> {
    let list = CatalogListJson::build();
    if json {
        emit(out, list)?;
    } else {
        for c in &list.classes {
            let fields: Vec<&str> = c.fields.iter().map(|f| f.as_str()).collect();
            let kind = if c.lie { "Lie" } else { "non-Lie" };
            writeln!(
                out,
                "{:<8} {:<8} {:<7} {}",
                c.name,
                kind,
                c.params.join(","),
                fields.join(",")
            )?;
        }
        for r in &list.bianchi {
            writeln!(out, "{:<8} {:<8} {:<7} real", r.name, "table", r.params.join(","))?;
        }
    }
    Ok(EXIT_OK)
}

pub fn cmd_catalog_show(
    out: Out,
    name: &str,
    params: &[(String, Scalar)],
    field: Option<Field>,
    omega: OmegaArg,
) -> Result<i32, CliError> {
    let field = field.unwrap_or_else(|| default_field(name));
    let entry = lookup(name, params, field).map_err(|e| CliError::Input(e.to_string()))?;
    let mut algebra = entry.algebra;
    if omega == OmegaArg::Printed {
        algebra.omega = entry.printed_omega;
    }
    let metadata = serde_json::json!({
        "name": entry.name,
        "params": entry.params.iter().map(|(k, v)| (k.clone(), [v.re, v.im])).collect::<std::collections::BTreeMap<_, _>>(),
        "source": entry.source,
        "printed_omega": OmegaJson::from(&entry.printed_omega),
        "induced_omega": OmegaJson::from(&entry.algebra.omega),
        "convention": entry.convention,
    });
    let doc = AlgebraDocument::from_algebra(&algebra, omega != OmegaArg::None, Some(metadata));
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(&doc).expect("documents serialize")
    )?;
    Ok(EXIT_OK)
}

fn label_text(l: &Option<ClassLabel>) -> String {
    l.map_or("-".to_string(), |l| l.to_string())
}

pub fn cmd_table1(out: Out, cfg: &TrialConfig, json: bool) -> Result<i32, CliError> {
    let report = run_table1(cfg)?;
    let pass = report.all_match;
    if json {
        emit(out, report)?;
    } else {
        writeln!(
            out,
            "{:<10} {:>4}  {:<20} {:<16} {:<6} match",
            "row", "a", "stated", "classified", "sign"
        )?;
        for r in &report.rows {
            let a = r.a.map_or("-".to_string(), |a| a.to_string());
            let sign = r.convention.map_or("none", |c| c.as_str());
            let got = match &r.error {
                Some(e) => e.clone(),
                None => label_text(&r.label),
            };
            let ok = if r.matches { "yes" } else { "NO" };
            writeln!(
                out,
                "{:<10} {:>4}  {:<20} {:<16} {:<6} {ok}",
                r.row, a, r.stated, got, sign
            )?;
        }
        writeln!(out, "all rows match: {}", if pass { "yes" } else { "no" })?;
    }
    Ok(exit(pass))
}

pub fn cmd_oracle(out: Out, kind: OracleKind, cfg: &TrialConfig, json: bool) -> Result<i32, CliError> {
    match kind {
        OracleKind::Completeness => {
            let r = run_completeness(cfg)?;
            let pass = r.pass;
            if json {
                emit(
                    out,
                    OracleJson {
                        kind: "completeness".into(),
                        report: r,
                    },
                )?;
            } else {
                writeln!(out, "completeness, {} trials over {}", cfg.trials, cfg.field.as_str())?;
                writeln!(out, "non-Lie: {}, Lie: {}", r.non_lie, r.lie)?;
                for (label, n) in &r.histogram {
                    writeln!(out, "  {label:<8} {n}")?;
                }
                writeln!(out, "quarantined: {}", r.quarantined.len())?;
                writeln!(out, "failures: {}", r.failures.len())?;
                writeln!(out, "impossible case D: {}", r.impossible_case_d)?;
                writeln!(out, "max witness residual: {:e}", r.max_residual)?;
                writeln!(out, "result: {}", if pass { "pass" } else { "FAIL" })?;
            }
            Ok(exit(pass))
        }
        OracleKind::Invariance => {
            let r = run_invariance(cfg)?;
            let pass = r.pass;
            if json {
                emit(
                    out,
                    OracleJson {
                        kind: "invariance".into(),
                        report: r,
                    },
                )?;
            } else {
                writeln!(
                    out,
                    "invariance, {} trials per model over {}",
                    cfg.trials,
                    cfg.field.as_str()
                )?;
                for m in &r.models {
                    writeln!(
                        out,
                        "  {:<24} stable {}/{}  drift {:.1e}  residual {:.1e}",
                        m.model, m.stable, m.trials, m.max_param_drift, m.max_residual
                    )?;
                }
                writeln!(out, "result: {}", if pass { "pass" } else { "FAIL" })?;
            }
            Ok(exit(pass))
        }
    }
}
