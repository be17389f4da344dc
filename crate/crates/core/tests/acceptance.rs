//! Acceptance criteria 1 to 10. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails. All comparisons are exact.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use racahlab::suite::{run_suite, IntRange, SuiteConfig, SuiteReport, Target};

struct Criterion {
    id: u32,
    title: &'static str,
    targets: &'static [Target],
    big_d: (usize, usize),
    limit: Option<Duration>,
    /// Extra exact conditions on the report beyond every check passing.
    extra: fn(&SuiteReport) -> Result<String, String>,
}

const SEED: u64 = 2026;
/// 7 sizes × 29 draws = 203 seeded parameter sets.
const SAMPLES_PER_D: usize = 29;

fn workers() -> usize {
    std::thread::available_parallelism().map_or(1, usize::from)
}

fn config(c: &Criterion) -> SuiteConfig {
    SuiteConfig {
        targets: c.targets.to_vec(),
        big_d: IntRange::new(c.big_d.0, c.big_d.1).expect("valid range"),
        d: IntRange::new(0, 6).expect("valid range"),
        n: IntRange::new(0, 12).expect("valid range"),
        samples: SAMPLES_PER_D,
        seed: SEED,
        export_matrices: None,
        workers: workers(),
    }
}

fn count(report: &SuiteReport) -> usize {
    report.targets.iter().map(|t| t.checks.len()).sum()
}

fn no_extra(report: &SuiteReport) -> Result<String, String> {
    Ok(format!("{} checks", count(report)))
}

fn detail<'a>(report: &'a SuiteReport, t: Target, key: &str) -> Vec<&'a str> {
    report
        .target(t)
        .map(|r| {
            r.checks
                .iter()
                .filter_map(|c| c.details.get(key).map(String::as_str))
                .collect()
        })
        .unwrap_or_default()
}

/// Both the reducible and the irreducible paths must be exercised.
fn seeded_coverage(report: &SuiteReport) -> Result<String, String> {
    let non_diag = report.target(Target::RdCriteria).map_or(0, |t| {
        t.checks
            .iter()
            .filter(|c| {
                c.name.ends_with("diagonalizable") && c.details.get("criterion").map(String::as_str) == Some("false")
            })
            .count()
    });
    let draws = report.target(Target::RdConstruct).map_or(0, |t| t.checks.len() / 3);
    let reducible = report.target(Target::RdCriteria).map_or(0, |t| {
        t.checks.iter().filter(|c| c.details.contains_key("witness")).count()
    });
    if draws < 200 {
        return Err(format!("only {draws} draws"));
    }
    if reducible == 0 || reducible == draws {
        return Err(format!("{reducible} of {draws} draws reducible; both paths must occur"));
    }
    Ok(format!(
        "{draws} draws, {reducible} reducible, {non_diag} non-diagonalizable operators"
    ))
}

/// Seven `D` values with both routes agreeing on the algebra dimension.
fn seven_dims(report: &SuiteReport) -> Result<String, String> {
    let closure = detail(report, Target::AlgebraDim, "closure_dim");
    let formula = detail(report, Target::AlgebraDim, "formula_dim");
    if closure.len() != 7 || closure != formula {
        return Err(format!("closure {closure:?} vs formula {formula:?}"));
    }
    Ok(format!("dims {}", closure.join(", ")))
}

fn te_re(report: &SuiteReport) -> Result<String, String> {
    let te = detail(report, Target::HalvedCube, "dim_Te");
    let re = detail(report, Target::HalvedCube, "dim_Re");
    let pairs: Vec<String> = te.iter().zip(&re).map(|(t, r)| format!("{t}/{r}")).collect();
    if pairs.len() != 7 {
        return Err(format!("expected 7 values of D, got {}", pairs.len()));
    }
    Ok(format!("T_e/R_e for D=2..8: {}", pairs.join(", ")))
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        id: 1,
        title: "defining identities of the homomorphism",
        targets: &[Target::Sharp],
        big_d: (2, 2),
        limit: Some(Duration::from_secs(1)),
        extra: no_extra,
    },
    Criterion {
        id: 2,
        title: "Casimir images",
        targets: &[Target::Casimir],
        big_d: (2, 2),
        limit: Some(Duration::from_secs(1)),
        extra: no_extra,
    },
    Criterion {
        id: 3,
        title: "kernel polynomial vanishes",
        targets: &[Target::Kernel],
        big_d: (2, 2),
        limit: None,
        extra: no_extra,
    },
    Criterion {
        id: 4,
        title: "D3 relations and equivariance",
        targets: &[Target::D3],
        big_d: (2, 2),
        limit: None,
        extra: no_extra,
    },
    Criterion {
        id: 5,
        title: "seeded R_d(a,b,c): construction and criteria",
        targets: &[Target::RdConstruct, Target::RdCriteria, Target::LeonardCriterion],
        big_d: (2, 2),
        limit: Some(Duration::from_secs(120)),
        extra: seeded_coverage,
    },
    Criterion {
        id: 6,
        title: "even halves split as tabulated, families distinct",
        targets: &[Target::HalvesZero, Target::HalvesOne, Target::HalfFamilies],
        big_d: (2, 2),
        limit: Some(Duration::from_secs(60)),
        extra: no_extra,
    },
    Criterion {
        id: 7,
        title: "complete reducibility with Leonard summands",
        targets: &[Target::Reducibility],
        big_d: (2, 8),
        limit: Some(Duration::from_secs(300)),
        extra: no_extra,
    },
    Criterion {
        id: 8,
        title: "graph-operator forms and surjectivity",
        targets: &[Target::HypercubeForms],
        big_d: (2, 8),
        limit: None,
        extra: no_extra,
    },
    Criterion {
        id: 9,
        title: "operator algebra dimension and block profile",
        targets: &[Target::AlgebraDim],
        big_d: (2, 8),
        limit: Some(Duration::from_secs(600)),
        extra: seven_dims,
    },
    Criterion {
        id: 10,
        title: "T_e against R_e on the halved cube",
        targets: &[Target::HalvedCube],
        big_d: (2, 8),
        limit: None,
        extra: te_re,
    },
];

fn main() -> ExitCode {
    let mut failed = 0;
    for c in CRITERIA {
        let start = Instant::now();
        let outcome = run_suite(&config(c)).map_err(|e| e.to_string()).and_then(|report| {
            if !report.pass {
                let bad: Vec<String> = report
                    .targets
                    .iter()
                    .flat_map(|t| {
                        t.checks
                            .iter()
                            .filter(|k| !k.pass)
                            .map(move |k| format!("{}: {}", t.target, k.name))
                    })
                    .take(5)
                    .collect();
                return Err(format!("failing checks: {}", bad.join(" | ")));
            }
            (c.extra)(&report)
        });
        let elapsed = start.elapsed();
        let outcome = match (outcome, c.limit) {
            (Ok(_), Some(limit)) if elapsed > limit => Err(format!("took {elapsed:.2?}, limit {limit:?}")),
            (o, _) => o,
        };
        match outcome {
            Ok(msg) => println!("criterion {:>2} PASS  {} ({msg}; {elapsed:.2?})", c.id, c.title),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {} ({msg}; {elapsed:.2?})", c.id, c.title);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        CRITERIA.len() - failed,
        CRITERIA.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
