use std::fs;

use froeberg_core::arith::PrimeField;
use froeberg_core::bounds::{build_table, parse_n_values, BoundReport};
use froeberg_core::froeberg::{DegreeType, FroebergProfile};
use froeberg_core::macaulay::{froeberg_lower_bound, froeberg_trial, parse_system, FroebergCheckReport};
use froeberg_core::quotient::{verify_theorem_b, verify_theorem_c, Fixture, FixtureRing, DEFAULT_ROW_CAP};
use num_bigint::{BigInt, Sign};
use rayon::prelude::*;
use serde_json::json;

use crate::args::{Command, DegreeArgs, FixtureArgs, ShapeArgs, Verify};
use crate::output::{aligned, big, envelope, opt, tsv_row, Rendered};
use crate::CliError;

fn degree_type(d: u32, shape: &ShapeArgs) -> Result<DegreeType, CliError> {
    match (&shape.degrees, shape.n, shape.a) {
        (Some(list), _, _) => Ok(DegreeType::new(d, list.clone())?),
        (None, Some(n), Some(a)) => Ok(DegreeType::constant(d, n, a)?),
        _ => Err(CliError::Usage("give either --degrees or both --n and --a".into())),
    }
}

fn required(args: &DegreeArgs) -> Result<DegreeType, CliError> {
    degree_type(args.d, &args.shape)
}

pub fn run(command: &Command, seed: u64) -> Result<Rendered, CliError> {
    match command {
        Command::Froeberg { degrees, through } => froeberg(&required(degrees)?, *through, seed),
        Command::Bounds { degrees, ainv } => bounds(&required(degrees)?, *ainv, seed),
        Command::Table { d, a, n } => {
            let n_values = parse_n_values(n).map_err(|e| CliError::Usage(e.to_string()))?;
            table(*d, *a, &n_values, seed)
        }
        Command::Verify { check } => match check {
            Verify::Hilbert {
                degrees,
                p,
                trials,
                workers,
            } => hilbert(&required(degrees)?, *p, *trials, *workers, seed),
            Verify::TheoremC { ring, ainv, draws } => theorem_c(ring, *ainv, *draws, seed),
            Verify::TheoremB { ring, ideal_file, qmax } => {
                let ideal = match ideal_file {
                    Some(path) => Some(parse_system(&fs::read_to_string(path)?)?),
                    None => None,
                };
                theorem_b(ring, ideal, *qmax, seed)
            }
        },
    }
}

fn froeberg(dt: &DegreeType, through: Option<u64>, seed: u64) -> Result<Rendered, CliError> {
    let profile = FroebergProfile::compute(dt);
    let m0 = profile.m0.ok_or_else(|| CliError::Core(froeberg_core::Error::NoInclusionBound {
        n: dt.n(),
        d: dt.d(),
    }))?;
    let last = through.unwrap_or(m0 + dt.d() as u64 + 1);
    let values: Vec<BigInt> = (0..=last)
        .map(|m| profile.values.get(m as usize).cloned().unwrap_or_default())
        .collect();
    let lower = froeberg_lower_bound(dt, last);
    let clip = |v: &BigInt| if v.sign() == Sign::Minus { BigInt::default() } else { v.clone() };

    let rows: Vec<_> = values
        .iter()
        .zip(&lower)
        .enumerate()
        .map(|(m, (f, h))| json!({"m": m, "F": big(f), "F_plus": big(&clip(f)), "hilbert_lower": h}))
        .collect();
    let json = envelope(
        "froeberg",
        seed,
        &json!({"degree_type": dt, "m0": m0, "values": rows}),
    );

    let mut tsv = format!("# {dt} m0={m0}\n");
    tsv += &tsv_row(["m", "F", "F_plus", "hilbert_lower"]);
    let mut table = vec![vec!["m".to_string(), "F(m)".into(), "F⁺(m)".into(), "H lower".into()]];
    for (m, (f, h)) in values.iter().zip(&lower).enumerate() {
        tsv += &tsv_row([m.to_string(), f.to_string(), clip(f).to_string(), h.to_string()]);
        table.push(vec![m.to_string(), f.to_string(), clip(f).to_string(), h.to_string()]);
    }
    let pretty = format!("{dt}\nm0 = {m0}\n\n{}", aligned(&table));
    Ok(Rendered {
        json,
        tsv,
        pretty,
        failed: false,
    })
}

fn bounds(dt: &DegreeType, ainv: Option<i64>, seed: u64) -> Result<Rendered, CliError> {
    let report = BoundReport::compute(dt, ainv)?;
    let mut pairs: Vec<(&str, String)> = vec![
        ("m0", report.m0.to_string()),
        ("tight", report.tight.to_string()),
        ("frobenius", report.frobenius.to_string()),
    ];
    if let Some(b) = report.ideal_cm {
        pairs.push(("ideal", b.to_string()));
    }
    pairs.push(("koszul", report.koszul.to_string()));
    pairs.push(("semistable", report.semistable.to_string()));
    if let Some(b) = report.semistable_frobenius {
        pairs.push(("semistable_frobenius", b.to_string()));
    }
    let tsv: String = pairs.iter().map(|(k, v)| tsv_row([*k, v.as_str()])).collect();
    let mut rows = vec![vec!["bound".to_string(), "degree".into(), "inclusion".into(), "holds for".into()]];
    rows.push(vec!["m0".into(), report.m0.to_string(), "P_m ⊆ I".into(), "generic forms in the polynomial ring".into()]);
    let family_value = |name: &str| pairs.iter().find(|(k, _)| *k == name).map(|(_, v)| v.clone());
    for note in &report.notes {
        let name = serde_json::to_value(note.family).expect("enum").as_str().unwrap_or_default().replace('-', "_");
        if name == "inclusion" {
            continue;
        }
        rows.push(vec![
            name.clone(),
            family_value(&name).unwrap_or_default(),
            note.closure.into(),
            note.condition.into(),
        ]);
    }
    let pretty = format!("{dt}\n\n{}", aligned(&rows));
    Ok(Rendered {
        json: envelope("bounds", seed, &report),
        tsv,
        pretty,
        failed: false,
    })
}

fn table(d: u32, a: u32, n_values: &[usize], seed: u64) -> Result<Rendered, CliError> {
    let t = build_table(d, a, n_values)?;
    let lines: [(&str, &Vec<u64>, u64); 3] = [
        ("koszul", &t.koszul, t.limit.koszul),
        ("semistable", &t.semistable, t.limit.semistable),
        ("generic", &t.generic, t.limit.generic),
    ];
    let mut tsv = tsv_row(std::iter::once("n".to_string()).chain(n_values.iter().map(|n| n.to_string())).chain(["limit".to_string()]));
    let mut rows = vec![std::iter::once("n".to_string())
        .chain(n_values.iter().map(|n| n.to_string()))
        .chain(["n→∞".to_string()])
        .collect::<Vec<_>>()];
    for (name, values, limit) in lines {
        let row: Vec<String> = std::iter::once(name.to_string())
            .chain(values.iter().map(u64::to_string))
            .chain([limit.to_string()])
            .collect();
        tsv += &tsv_row(&row);
        rows.push(row);
    }
    let pretty = format!("tight closure bounds, d = {d}, a = {a}\n\n{}", aligned(&rows));
    Ok(Rendered {
        json: envelope("table", seed, &t),
        tsv,
        pretty,
        failed: false,
    })
}

fn hilbert(dt: &DegreeType, p: u64, trials: usize, workers: Option<usize>, seed: u64) -> Result<Rendered, CliError> {
    if trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    let field = PrimeField::new(p)?;
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(w) = workers {
        pool = pool.num_threads(w.max(1));
    }
    let pool = pool.build().map_err(|e| CliError::Usage(e.to_string()))?;
    let records = pool.install(|| {
        (0..trials)
            .into_par_iter()
            .map(|t| froeberg_trial(dt, field, seed, t))
            .collect::<Vec<_>>()
    });
    let report = FroebergCheckReport::from_trials(dt, field, seed, records);

    let mut tsv = tsv_row(["trial", "seed", "first_zero", "equals_prediction", "violations", "hilbert"]);
    let mut rows = vec![vec!["trial".to_string(), "first zero".into(), "H = F⁺".into(), "violations".into()]];
    for r in &report.per_trial {
        let h: Vec<String> = r.hilbert.iter().map(u64::to_string).collect();
        tsv += &tsv_row([
            r.trial.to_string(),
            r.seed.to_string(),
            opt(r.first_zero),
            r.equals_prediction.to_string(),
            r.violations.len().to_string(),
            h.join(","),
        ]);
        rows.push(vec![r.trial.to_string(), opt(r.first_zero), r.equals_prediction.to_string(), r.violations.len().to_string()]);
    }
    let status = if report.passed() { "PASS" } else { "FAIL" };
    let pretty = format!(
        "{dt} over F_{p}, {trials} trials, seed {seed}\nm0 (prediction) = {}\ninequality violations = {}\nequality rate = {}\n{status}\n\n{}",
        opt(report.m0),
        report.inequality_violations,
        report.equality_rate,
        aligned(&rows)
    );
    Ok(Rendered {
        json: envelope("verify-hilbert", seed, &report),
        tsv,
        pretty,
        failed: !report.passed(),
    })
}

fn fixture_ring(args: &FixtureArgs) -> Result<FixtureRing, CliError> {
    let fixture: Fixture = args.fixture.parse()?;
    Ok(match args.p {
        Some(p) => fixture.with_prime(p)?,
        None => fixture.build(),
    })
}

fn theorem_c(args: &FixtureArgs, ainv: Option<i64>, draws: usize, seed: u64) -> Result<Rendered, CliError> {
    let fx = fixture_ring(args)?;
    let dt = degree_type(args.d.unwrap_or(fx.d()), &args.shape)?;
    let ainv = ainv.unwrap_or(fx.a_invariant());
    let report = verify_theorem_c(fx.quotient(), &dt, ainv, seed, draws)?;
    let tsv = tsv_row(["element", "contained"])
        + &report
            .elements
            .iter()
            .map(|e| tsv_row([e.element.clone(), e.contained.to_string()]))
            .collect::<String>();
    let status = if report.passed { "PASS" } else { "FAIL" };
    let pretty = format!(
        "{} ({})\n{dt}, a-invariant {ainv}\nm0 = {}, bound m0 + d + 1 + a = {}\ndraws = {}\nbasis elements of R_{}: {}, outside I: {}\n{status}\n",
        fx.fixture,
        fx.fixture.describe(),
        report.m0,
        report.bound,
        report.draws,
        report.bound,
        report.basis_size,
        report.not_contained,
    );
    let mut json = envelope("verify-theorem-c", seed, &report);
    json["fixture"] = fx.fixture.name().into();
    json["status"] = status.into();
    Ok(Rendered {
        json,
        tsv,
        pretty,
        failed: !report.passed,
    })
}

fn theorem_b(args: &FixtureArgs, ideal: Option<froeberg_core::macaulay::FormSystem>, qmax: Option<u64>, seed: u64) -> Result<Rendered, CliError> {
    let fx = fixture_ring(args)?;
    let d = args.d.unwrap_or(fx.d());
    let shape_given = args.shape.degrees.is_some() || args.shape.n.is_some();
    let ideal = match ideal {
        Some(i) => Some(i),
        None if !shape_given => Some(fx.default_ideal()),
        None => None,
    };
    let dt = match (&ideal, shape_given) {
        (_, true) => degree_type(d, &args.shape)?,
        (Some(i), false) => DegreeType::new(d, i.degrees())?,
        (None, false) => unreachable!("default ideal is set when no degrees are given"),
    };
    let report = verify_theorem_b(fx.quotient(), &dt, ideal.as_ref(), qmax, seed, DEFAULT_ROW_CAP)?;
    let tsv = tsv_row(["element", "resolved_at"])
        + &report
            .elements
            .iter()
            .map(|e| tsv_row([e.element.clone(), opt(e.resolved_at)]))
            .collect::<String>();
    let rows: Vec<Vec<String>> = std::iter::once(vec!["element".to_string(), "smallest q".into()])
        .chain(report.elements.iter().map(|e| {
            vec![e.element.clone(), e.resolved_at.map_or_else(|| "unresolved".into(), |q| q.to_string())]
        }))
        .collect();
    let pretty = format!(
        "{} ({})\n{dt}, bound m0 + d + 1 = {}\nq candidates: {:?}\nresolved {}/{}\n{}\n\n{}",
        fx.fixture,
        fx.fixture.describe(),
        report.bound,
        report.q_values,
        report.resolved,
        report.basis_size,
        report.evidence,
        aligned(&rows)
    );
    let mut json = envelope("verify-theorem-b", seed, &report);
    json["fixture"] = fx.fixture.name().into();
    Ok(Rendered {
        json,
        tsv,
        pretty,
        failed: false,
    })
}
