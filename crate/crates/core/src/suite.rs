//! Reproducible verification suites with deterministic JSON reports.
//!
//! Work is split into independent jobs that run on a bounded rayon pool;
//! results are reassembled in job order, so the report never depends on
//! scheduling or on the worker count.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::check::IdentityCheck;
use crate::decompose::{
    compare_te_re, decompose_halved, decompose_hypercube, decompose_ln, semisimple_profile, split_even_half, tables,
    DecompositionReport,
};
use crate::error::{Error, Result};
use crate::exact_linalg::text::write_matrix;
use crate::exact_linalg::{algebra_closure, minimal_polynomial, ExactMatrix};
use crate::gaussian::Q;
use crate::leonard;
use crate::racah_ops::RacahRep;
use crate::rational::Rational;
use crate::rd_modules::{burnside_irreducible, construct, iso_class, IsoClass, RdParams};
use crate::sl2_reps::{build_hypercube, build_ln, even_halves, verify_hypercube, Hypercube};
use crate::usl2_pbw::{
    verify_casimir_images, verify_equivariance, verify_even_identities, verify_kernel_generators,
    verify_sharp_relations,
};

pub const SCHEMA_VERSION: &str = "racahlab-suite/1";

/// A selectable group of checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Target {
    /// Defining identities of `♯` in `U(sl₂)`.
    Sharp,
    /// Images of the three Casimir elements.
    Casimir,
    /// The kernel polynomial vanishes under `♯`.
    Kernel,
    /// `D₃` relations and equivariance of `♯`.
    D3,
    /// Identities in the even subalgebra.
    EvenIdentities,
    /// Seeded `R_d(a,b,c)`: presentation, central values, traces.
    RdConstruct,
    /// Seeded `R_d(a,b,c)`: irreducibility and diagonalizability criteria.
    RdCriteria,
    /// Seeded `R_d(a,b,c)`: parameter criterion against the Leonard checker.
    LeonardCriterion,
    /// Splitting of the zero halves `L_n^(0)`.
    HalvesZero,
    /// Splitting of the one halves `L_n^(1)`.
    HalvesOne,
    /// The classes met in even halves are pairwise distinct.
    HalfFamilies,
    /// Complete reducibility of `ℂ^X`, `ℂ^{X_e}` and `L_n` pullbacks.
    Reducibility,
    /// Graph-operator forms of `A, B, C` on `ℂ^X` and surjectivity.
    HypercubeForms,
    /// Dimension and block profile of the hypercube operator algebra.
    AlgebraDim,
    /// `T_e` against `R_e` on the halved cube.
    HalvedCube,
}

impl Target {
    pub const ALL: [Target; 15] = [
        Target::Sharp,
        Target::Casimir,
        Target::Kernel,
        Target::D3,
        Target::EvenIdentities,
        Target::RdConstruct,
        Target::RdCriteria,
        Target::LeonardCriterion,
        Target::HalvesZero,
        Target::HalvesOne,
        Target::HalfFamilies,
        Target::Reducibility,
        Target::HypercubeForms,
        Target::AlgebraDim,
        Target::HalvedCube,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Target::Sharp => "sharp",
            Target::Casimir => "casimir",
            Target::Kernel => "kernel",
            Target::D3 => "d3",
            Target::EvenIdentities => "even-identities",
            Target::RdConstruct => "rd-construct",
            Target::RdCriteria => "rd-criteria",
            Target::LeonardCriterion => "leonard-criterion",
            Target::HalvesZero => "halves-zero",
            Target::HalvesOne => "halves-one",
            Target::HalfFamilies => "half-families",
            Target::Reducibility => "reducibility",
            Target::HypercubeForms => "hypercube-forms",
            Target::AlgebraDim => "algebra-dim",
            Target::HalvedCube => "halved-cube",
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Target::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown target `{s}`")))
    }
}

/// Parses a comma-separated target list; `all` selects everything.
pub fn parse_targets(s: &str) -> Result<Vec<Target>> {
    if s.trim() == "all" {
        return Ok(Target::ALL.to_vec());
    }
    let mut out: Vec<Target> = s.split(',').map(|t| t.trim().parse()).collect::<Result<_>>()?;
    out.sort();
    out.dedup();
    if out.is_empty() {
        return Err(Error::Config("no targets selected".into()));
    }
    Ok(out)
}

/// Inclusive integer range, written `lo..hi` or `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IntRange {
    pub lo: usize,
    pub hi: usize,
}

impl IntRange {
    pub fn new(lo: usize, hi: usize) -> Result<Self> {
        if lo > hi {
            return Err(Error::Config(format!("empty range {lo}..{hi}")));
        }
        Ok(Self { lo, hi })
    }

    pub fn iter(self) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi
    }
}

impl FromStr for IntRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Config(format!("malformed range `{s}`")))
        };
        match s.split_once("..") {
            Some((lo, hi)) => Self::new(num(lo)?, num(hi.trim_start_matches('='))?),
            None => {
                let n = num(s)?;
                Self::new(n, n)
            }
        }
    }
}

impl fmt::Display for IntRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub targets: Vec<Target>,
    /// Hypercube dimensions `D`.
    #[serde(rename = "D")]
    pub big_d: IntRange,
    /// Module sizes `d` for seeded `R_d` draws.
    pub d: IntRange,
    /// Highest weights `n` for `L_n` and its halves.
    pub n: IntRange,
    /// Seeded draws per `d`.
    pub samples: usize,
    #[serde(serialize_with = "as_string")]
    pub seed: u64,
    /// Directory receiving hypercube matrices, if any.
    pub export_matrices: Option<PathBuf>,
    /// Pool size; never affects the report.
    #[serde(skip)]
    pub workers: usize,
}

fn as_string<S: serde::Serializer>(x: &u64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            targets: Target::ALL.to_vec(),
            big_d: IntRange { lo: 2, hi: 8 },
            d: IntRange { lo: 0, hi: 6 },
            n: IntRange { lo: 0, hi: 12 },
            samples: 20,
            seed: 0,
            export_matrices: None,
            workers: 1,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if self.targets.is_empty() {
            return Err(Error::Config("no targets selected".into()));
        }
        if self.big_d.lo < 2 || self.big_d.hi > crate::sl2_reps::MAX_DENSE_D {
            return Err(Error::Config(format!(
                "D range {} must lie in 2..{}",
                self.big_d,
                crate::sl2_reps::MAX_DENSE_D
            )));
        }
        if self.workers == 0 {
            return Err(Error::Config("worker count must be positive".into()));
        }
        Ok(())
    }
}

/// One check in a report. Every numeric detail is an exact string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub pass: bool,
    pub residual_term_count: usize,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, String>,
}

impl CheckRecord {
    fn flag(name: impl Into<String>, pass: bool) -> Self {
        Self::from(IdentityCheck::flag(name, pass))
    }

    fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.details.insert(key.to_string(), value.to_string());
        self
    }

    fn failed(name: impl Into<String>, err: &Error) -> Self {
        Self::flag(name, false).with("error", err)
    }
}

impl From<IdentityCheck> for CheckRecord {
    fn from(c: IdentityCheck) -> Self {
        Self {
            name: c.identity,
            pass: c.pass,
            residual_term_count: c.residual_term_count,
            details: BTreeMap::new(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TargetReport {
    pub target: Target,
    pub pass: bool,
    pub checks: Vec<CheckRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub schema_version: &'static str,
    pub config: SuiteConfig,
    pub targets: Vec<TargetReport>,
    pub pass: bool,
}

impl SuiteReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Process exit status: 0 iff every check passed.
    pub fn exit_code(&self) -> i32 {
        i32::from(!self.pass)
    }

    pub fn target(&self, t: Target) -> Option<&TargetReport> {
        self.targets.iter().find(|r| r.target == t)
    }
}

/// A Gaussian rational `(re + i·im)/den` from a small box. About a quarter
/// of draws are non-real; small denominators make reducible draws common.
fn draw_scalar(rng: &mut ChaCha8Rng) -> Q {
    let den = [1, 2, 4][rng.gen_range(0..3)];
    let re = rng.gen_range(-8i64..=8);
    let im = if rng.gen_bool(0.25) {
        rng.gen_range(-2i64..=2)
    } else {
        0
    };
    Q::new(Rational::new(re, den), Rational::new(im, den))
}

/// The seeded draws for one `d`. Each `d` uses its own ChaCha stream, so the
/// draws do not depend on which other sizes are selected.
pub fn sample_params(seed: u64, d: usize, samples: usize) -> Vec<RdParams> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(d as u64);
    (0..samples)
        .map(|_| {
            let a = draw_scalar(&mut rng);
            let b = draw_scalar(&mut rng);
            let c = draw_scalar(&mut rng);
            RdParams::new(a, b, c, d)
        })
        .collect()
}

#[derive(Clone, Debug)]
enum Job {
    Whole(Target),
    Draw(Target, RdParams),
    Cube(Target, usize),
    Weight(Target, usize),
}

impl Job {
    fn target(&self) -> Target {
        match self {
            Job::Whole(t) | Job::Draw(t, _) | Job::Cube(t, _) | Job::Weight(t, _) => *t,
        }
    }
}

fn plan(cfg: &SuiteConfig) -> Vec<Job> {
    let mut jobs = Vec::new();
    for &t in &cfg.targets {
        match t {
            Target::Sharp | Target::Casimir | Target::Kernel | Target::D3 | Target::EvenIdentities => {
                jobs.push(Job::Whole(t))
            }
            Target::HalfFamilies => jobs.push(Job::Whole(t)),
            Target::RdConstruct | Target::RdCriteria | Target::LeonardCriterion => {
                for d in cfg.d.iter() {
                    jobs.extend(
                        sample_params(cfg.seed, d, cfg.samples)
                            .into_iter()
                            .map(|p| Job::Draw(t, p)),
                    );
                }
            }
            Target::HalvesZero | Target::HalvesOne => jobs.extend(cfg.n.iter().map(|n| Job::Weight(t, n))),
            Target::Reducibility => {
                jobs.extend(cfg.big_d.iter().map(|d| Job::Cube(t, d)));
                jobs.extend(cfg.n.iter().map(|n| Job::Weight(t, n)));
            }
            Target::HypercubeForms | Target::AlgebraDim | Target::HalvedCube => {
                jobs.extend(cfg.big_d.iter().map(|d| Job::Cube(t, d)))
            }
        }
    }
    jobs
}

/// Runs the selected targets. Errors only on an invalid configuration; a
/// failing computation is reported as a failing check.
pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    cfg.validate()?;
    let jobs = plan(cfg);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| Error::Config(e.to_string()))?;
    let results: Vec<Vec<CheckRecord>> = pool.install(|| jobs.par_iter().map(|j| run_job(j, cfg)).collect());
    let mut by_target: BTreeMap<Target, Vec<CheckRecord>> = cfg.targets.iter().map(|&t| (t, Vec::new())).collect();
    for (job, checks) in jobs.iter().zip(results) {
        by_target.entry(job.target()).or_default().extend(checks);
    }
    let targets: Vec<TargetReport> = by_target
        .into_iter()
        .map(|(target, checks)| TargetReport {
            target,
            pass: checks.iter().all(|c| c.pass),
            checks,
        })
        .collect();
    let pass = targets.iter().all(|t| t.pass);
    Ok(SuiteReport {
        schema_version: SCHEMA_VERSION,
        config: cfg.clone(),
        targets,
        pass,
    })
}

fn identity_checks(checks: Vec<IdentityCheck>) -> Vec<CheckRecord> {
    checks.into_iter().map(CheckRecord::from).collect()
}

fn run_job(job: &Job, cfg: &SuiteConfig) -> Vec<CheckRecord> {
    match job {
        Job::Whole(Target::Sharp) => identity_checks(verify_sharp_relations()),
        Job::Whole(Target::Casimir) => identity_checks(verify_casimir_images()),
        Job::Whole(Target::Kernel) => identity_checks(verify_kernel_generators()),
        Job::Whole(Target::D3) => identity_checks(verify_equivariance()),
        Job::Whole(Target::EvenIdentities) => identity_checks(verify_even_identities()),
        Job::Whole(_) => half_family_checks(cfg.n.hi),
        Job::Draw(Target::RdConstruct, p) => construct_checks(p),
        Job::Draw(Target::RdCriteria, p) => criteria_checks(p),
        Job::Draw(_, p) => vec![leonard_check(p)],
        Job::Weight(Target::HalvesZero, n) => half_checks(*n, 0),
        Job::Weight(Target::HalvesOne, n) => half_checks(*n, 1),
        Job::Weight(_, n) => vec![decomposition_check(&format!("L_{n} pullback"), decompose_ln(*n))],
        Job::Cube(Target::Reducibility, d) => vec![
            decomposition_check(&format!("C^X, D={d}"), decompose_hypercube(*d)),
            decomposition_check(&format!("C^X_e, D={d}"), decompose_halved(*d)),
        ],
        Job::Cube(Target::HypercubeForms, d) => hypercube_form_checks(*d, cfg.export_matrices.as_deref()),
        Job::Cube(Target::AlgebraDim, d) => vec![algebra_dim_check(*d)],
        Job::Cube(_, d) => vec![halved_cube_check(*d)],
    }
}

fn construct_checks(p: &RdParams) -> Vec<CheckRecord> {
    let r = construct(p);
    let presentation = r.verify_presentation();
    let residual: usize = presentation.iter().map(|c| c.residual_term_count).sum();
    let central = r.central_values().scalars();
    let want_central = p.central_scalars();
    let traces = [r.a(), r.b(), r.c()].map(ExactMatrix::trace);
    let want_traces = p.traces();
    vec![
        CheckRecord {
            name: format!("{p}: presentation"),
            pass: presentation.iter().all(|c| c.pass),
            residual_term_count: residual,
            details: BTreeMap::new(),
        },
        CheckRecord::flag(format!("{p}: central values"), central.as_ref() == Some(&want_central))
            .with("expected", join(&want_central)),
        CheckRecord::flag(format!("{p}: traces"), traces == want_traces).with("expected", join(&want_traces)),
    ]
}

fn criteria_checks(p: &RdParams) -> Vec<CheckRecord> {
    let r = construct(p);
    let criterion = p.is_irreducible();
    let closure = burnside_irreducible(&r);
    let mut out = vec![
        CheckRecord::flag(format!("{p}: irreducibility criterion"), criterion == closure)
            .with("criterion", criterion)
            .with("closure", closure),
    ];
    if let Some(w) = p.irreducibility_witness() {
        out[0] = out[0].clone().with("witness", w);
        // reducible draws: the class finder must refuse them
        let refused = matches!(iso_class(&r, p.d), Err(Error::NotIrreducible(_)));
        out.push(CheckRecord::flag(
            format!("{p}: class finder refuses reducible module"),
            refused,
        ));
        return out;
    }
    let flags = p.diagonalizable_flags();
    for (k, (name, m)) in [("A", r.a()), ("B", r.b()), ("C", r.c())].into_iter().enumerate() {
        let squarefree = minimal_polynomial(m).is_squarefree();
        out.push(
            CheckRecord::flag(format!("{p}: {name} diagonalizable"), flags[k] == squarefree)
                .with("criterion", flags[k])
                .with("squarefree", squarefree),
        );
    }
    out
}

fn leonard_check(p: &RdParams) -> CheckRecord {
    let name = format!("{p}: Leonard criterion");
    if !p.is_irreducible() {
        let refused = matches!(p.leonard_criterion(), Err(Error::NotIrreducible(_)));
        return CheckRecord::flag(format!("{name} refuses reducible module"), refused);
    }
    let r = construct(p);
    let criterion = p.leonard_criterion().expect("irreducible");
    match leonard::check(r.a(), r.b(), r.c(), [None, None, None]) {
        Ok(report) => CheckRecord::flag(name, criterion == report.verdict)
            .with("criterion", criterion)
            .with("checker", report.verdict),
        Err(e) => CheckRecord::failed(name, &e),
    }
}

fn join(xs: &[Q]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn half_checks(n: usize, parity: u8) -> Vec<CheckRecord> {
    let name = format!("L_{n}^({parity}) split");
    let halves = match even_halves(&build_ln(n)) {
        Ok(h) => h,
        Err(e) => return vec![CheckRecord::failed(name, &e)],
    };
    let Some(half) = (if parity == 0 { Some(halves.zero) } else { halves.one }) else {
        return Vec::new();
    };
    let report = match split_even_half(&half) {
        Ok(r) => r,
        Err(e) => return vec![CheckRecord::failed(name, &e)],
    };
    let want: BTreeSet<IsoClass> = tables::half_table(n, parity)
        .iter()
        .map(|(_, p)| p.iso_class())
        .collect();
    let got: BTreeSet<IsoClass> = report.classes().into_iter().collect();
    let all_irreducible = report.summands.iter().all(|s| s.class.is_some());
    vec![
        CheckRecord::flag(name, report.passes() && all_irreducible && got == want)
            .with("summands", labels(&report))
            .with(
                "expected",
                want.iter().map(IsoClass::label).collect::<Vec<_>>().join("; "),
            ),
    ]
}

fn labels(report: &DecompositionReport) -> String {
    report
        .summands
        .iter()
        .map(|s| format!("{} x{}", s.label, s.multiplicity))
        .collect::<Vec<_>>()
        .join("; ")
}

fn half_family_checks(max_n: usize) -> Vec<CheckRecord> {
    let list = tables::half_family_list(max_n);
    let classes: Vec<IsoClass> = list.iter().map(|(_, p)| p.iso_class()).collect();
    let distinct: BTreeSet<&IsoClass> = classes.iter().collect();
    let mut out = vec![CheckRecord::flag(
        format!("{} family classes for n <= {max_n} are pairwise distinct", list.len()),
        distinct.len() == classes.len(),
    )];
    let reducible: Vec<&str> = list
        .iter()
        .filter(|(_, p)| !p.is_irreducible())
        .map(|(f, _)| f.as_str())
        .collect();
    out.push(
        CheckRecord::flag("every family member is irreducible", reducible.is_empty())
            .with("reducible", reducible.join(", ")),
    );
    let met: BTreeSet<IsoClass> = (0..=max_n)
        .flat_map(|n| (0..=u8::from(n > 0)).flat_map(move |p| tables::half_table(n, p)))
        .map(|(_, p)| p.iso_class())
        .collect();
    let listed: BTreeSet<IsoClass> = classes.into_iter().collect();
    out.push(CheckRecord::flag(
        "families list exactly the classes met in the halves",
        met == listed,
    ));
    out
}

fn decomposition_check(name: &str, report: Result<DecompositionReport>) -> CheckRecord {
    match report {
        Ok(r) => {
            let leonard = r.summands.iter().all(|s| s.leonard == Some(true));
            let residual = r.checks.iter().map(|c| c.residual_term_count).sum();
            CheckRecord {
                name: name.to_string(),
                pass: r.passes() && leonard,
                residual_term_count: residual,
                details: BTreeMap::new(),
            }
            .with("summands", labels(&r))
            .with("dims_sum", r.total_dim_ok)
            .with("spans", r.spans_ambient)
            .with("invariant", r.invariant)
            .with("leonard_on_every_class", leonard)
        }
        Err(e) => CheckRecord::failed(name, &e),
    }
}

fn hypercube_form_checks(d: usize, export: Option<&Path>) -> Vec<CheckRecord> {
    let prefix = format!("D={d}");
    let mut out: Vec<CheckRecord> = match verify_hypercube(d) {
        Ok(checks) => checks
            .into_iter()
            .map(|c| {
                let mut r = CheckRecord::from(c);
                r.name = format!("{prefix}: {}", r.name);
                r
            })
            .collect(),
        Err(e) => return vec![CheckRecord::failed(prefix, &e)],
    };
    let cube = match build_hypercube(d) {
        Ok(c) => c,
        Err(e) => return vec![CheckRecord::failed(prefix, &e)],
    };
    let graph: Vec<ExactMatrix> = cube.ops.generators().into_iter().cloned().collect();
    let r = cube.racah_rep();
    let pulled: Vec<ExactMatrix> = [r.a(), r.b(), r.c()].into_iter().cloned().collect();
    let (cg, cp) = (algebra_closure(&graph), algebra_closure(&pulled));
    out.push(
        CheckRecord::flag(
            format!("{prefix}: graph operators and pulled-back A, B, C generate one algebra"),
            cg.same_span(&cp),
        )
        .with("dim", cg.dim),
    );
    if let Some(dir) = export {
        let name = format!("{prefix}: export matrices");
        out.push(match export_hypercube(&cube, &dir.join(format!("D{d}"))) {
            Ok(files) => CheckRecord::flag(name, true).with("files", files.len()),
            Err(e) => CheckRecord::failed(name, &e),
        });
    }
    out
}

fn algebra_dim_check(d: usize) -> CheckRecord {
    let name = format!("D={d}: operator algebra dimension and blocks");
    let run = || -> Result<CheckRecord> {
        let cube = build_hypercube(d)?;
        let gens: Vec<ExactMatrix> = cube.ops.generators().into_iter().cloned().collect();
        let profile = semisimple_profile(&gens, &decompose_hypercube(d)?)?;
        let want_dim = tables::hypercube_algebra_dim(d);
        let want_blocks: Vec<(usize, usize)> = tables::hypercube_block_profile(d).into_iter().collect();
        Ok(CheckRecord::flag(
            name.clone(),
            profile.closure_dim == want_dim && profile.blocks == want_blocks,
        )
        .with("closure_dim", profile.closure_dim)
        .with("formula_dim", want_dim)
        .with("blocks", format!("{:?}", profile.blocks)))
    };
    run().unwrap_or_else(|e| CheckRecord::failed(name.clone(), &e))
}

fn halved_cube_check(d: usize) -> CheckRecord {
    let name = format!("D={d}: T_e against R_e");
    match compare_te_re(d) {
        Ok(c) => {
            let order_ok = if d % 2 == 1 {
                c.dim_re == c.dim_te
            } else {
                c.dim_re < c.dim_te
            };
            CheckRecord::flag(name, order_ok && c.te_classes_ok && c.re_classes_ok)
                .with("dim_Te", c.dim_te)
                .with("dim_Re", c.dim_re)
        }
        Err(e) => CheckRecord::failed(name, &e),
    }
}

/// Writes `E, F, H` and the graph operators of a hypercube in the exact
/// matrix text format, plus the vertex labels. Returns the written paths.
pub fn export_hypercube(cube: &Hypercube, dir: &Path) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir)?;
    let mats = [
        ("E", cube.rep.e()),
        ("F", cube.rep.f()),
        ("H", cube.rep.h()),
        ("A2J", &cube.ops.a2j),
        ("A2Jbar", &cube.ops.a2jbar),
        ("A2star", &cube.ops.a2star),
    ];
    let mut files = Vec::new();
    for (name, m) in mats {
        let path = dir.join(format!("{name}.txt"));
        std::fs::write(&path, write_matrix(m))?;
        files.push(path);
    }
    let path = dir.join("labels.txt");
    std::fs::write(&path, cube.rep.labels().join("\n") + "\n")?;
    files.push(path);
    let path = dir.join("racah.txt");
    std::fs::write(&path, RacahRep::to_text(&cube.racah_rep()))?;
    files.push(path);
    Ok(files)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_parse() {
        assert_eq!("2..8".parse::<IntRange>().unwrap(), IntRange { lo: 2, hi: 8 });
        assert_eq!("2..=8".parse::<IntRange>().unwrap(), IntRange { lo: 2, hi: 8 });
        assert_eq!("5".parse::<IntRange>().unwrap(), IntRange { lo: 5, hi: 5 });
        assert!("8..2".parse::<IntRange>().is_err());
        assert!("x".parse::<IntRange>().is_err());
    }

    #[test]
    fn targets_parse() {
        assert_eq!(parse_targets("d3,sharp,d3").unwrap(), vec![Target::Sharp, Target::D3]);
        assert_eq!(parse_targets("all").unwrap().len(), Target::ALL.len());
        assert!(matches!(parse_targets("bogus"), Err(Error::Config(_))));
    }

    #[test]
    fn draws_are_seeded_per_size() {
        assert_eq!(sample_params(7, 3, 5), sample_params(7, 3, 5));
        assert_ne!(sample_params(7, 3, 5), sample_params(8, 3, 5));
        assert_eq!(sample_params(7, 3, 5)[..2], sample_params(7, 3, 2)[..]);
    }

    #[test]
    fn sharp_target_passes() {
        let cfg = SuiteConfig {
            targets: vec![Target::Sharp],
            ..SuiteConfig::default()
        };
        let report = run_suite(&cfg).unwrap();
        assert!(report.pass);
        assert_eq!(report.exit_code(), 0);
        assert!(report.to_json().contains(SCHEMA_VERSION));
    }

    #[test]
    fn zero_workers_is_a_config_error() {
        let cfg = SuiteConfig {
            workers: 0,
            ..SuiteConfig::default()
        };
        assert!(matches!(run_suite(&cfg), Err(Error::Config(_))));
    }

    #[test]
    fn report_ignores_worker_count() {
        let mut cfg = SuiteConfig {
            targets: vec![Target::RdConstruct, Target::LeonardCriterion],
            d: IntRange { lo: 0, hi: 3 },
            samples: 6,
            seed: 11,
            ..SuiteConfig::default()
        };
        let one = run_suite(&cfg).unwrap().to_json();
        cfg.workers = 4;
        assert_eq!(one, run_suite(&cfg).unwrap().to_json());
    }
}
