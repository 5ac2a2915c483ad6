//! The enumeration pipeline: cubic Thue stage, one quartic Thue problem per
//! cubic solution class, lifting back to triples, verification and
//! deduplication.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::algebra::{content, BinaryForm, Mat2, TernaryQuadForm, Triple};
use crate::error::{Error, Result};
use crate::forms::{
    branch_quartic, canonical_triple, conic_point, literal_branch_quartic, ConicParametrization,
    QuarticGenerator, DEFAULT_CONIC_POINT_BOUND,
};
use crate::oracle::{oracle_monogenizers, oracle_system, SearchBox};
use crate::thue::{solve_bounded, SolutionSet, ThueProblem};

pub const CUBIC_CLASS_MAX: usize = 10;
pub const QUARTIC_CLASS_MAX: usize = 276;
pub const TOTAL_CLASS_MAX: usize = 2760;

/// Sharper counts that hold only under extra hypotheses; reported, never
/// asserted.
pub const CONDITIONAL_BOUNDS: [(&str, usize); 5] = [
    ("total, large discriminant", 182),
    ("total, large discriminant, totally complex or mixed", 70),
    ("cubic classes, large discriminant", 7),
    ("quartic classes per branch, large discriminant", 26),
    ("quartic classes per branch, large positive discriminant", 14),
];

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PipelineConfig {
    pub cubic_height: u64,
    pub quartic_height: u64,
    pub conic_point_bound: u64,
    /// Box for the direct system search used as fallback.
    pub fallback_box: u64,
    /// Run the direct system search on every non-trivial branch and merge
    /// what the parametrization missed.
    pub cross_validate: bool,
    /// Also record `Q′₁` composed with the trivial parametrization.
    pub literal_comparison: bool,
    /// Compare against the exhaustive oracle on this box.
    pub oracle_box: Option<u64>,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            cubic_height: 10_000,
            quartic_height: 1_000,
            conic_point_bound: DEFAULT_CONIC_POINT_BOUND,
            fallback_box: 20,
            cross_validate: false,
            literal_comparison: false,
            oracle_box: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Provenance {
    /// Quartic solution `(p, q)` of branch `(u₀, v₀)`.
    Branch { u0: BigInt, v0: BigInt, p: BigInt, q: BigInt },
    /// Direct bounded search of the branch system.
    Fallback { u0: BigInt, v0: BigInt },
    Oracle,
}

impl std::fmt::Display for Provenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Provenance::Branch { u0, v0, p, q } => write!(f, "branch({u0},{v0}) quartic({p},{q})"),
            Provenance::Fallback { u0, v0 } => write!(f, "branch({u0},{v0}) fallback"),
            Provenance::Oracle => write!(f, "oracle"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonogenizationClass {
    pub triple: Triple,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedTriple {
    pub triple: Triple,
    pub verified: bool,
    pub provenance: Provenance,
}

/// A solution of the branch quartic and where it leads.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticSolution {
    pub p: BigInt,
    pub q: BigInt,
    pub value: BigInt,
    /// The primitive conic point it parametrizes, when that point solves
    /// `Q′₁ = ±1`; otherwise the solution does not lift.
    pub lifted: Option<Triple>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchReport {
    pub source: (BigInt, BigInt),
    pub bezout: Mat2,
    pub first: TernaryQuadForm,
    pub conic: TernaryQuadForm,
    pub conic_point: Option<Triple>,
    pub parametrization: Option<ConicParametrization>,
    pub quartic: Option<BinaryForm>,
    pub rhs: Vec<BigInt>,
    pub quartic_solutions: Vec<QuarticSolution>,
    pub potentially_infinite: bool,
    pub triples: Vec<DerivedTriple>,
    pub fallback_used: bool,
    pub literal_quartic: Option<BinaryForm>,
    /// Triples that failed verification, or errors raised on the branch.
    pub discrepancies: Vec<String>,
}

impl BranchReport {
    /// Quartic solution classes that lift to system solutions.
    pub fn quartic_class_count(&self) -> usize {
        self.quartic_solutions.iter().filter(|s| s.lifted.is_some()).count()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counts {
    pub cubic: usize,
    pub branches: usize,
    pub quartic_forms: usize,
    pub per_branch: Vec<usize>,
    pub total: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundDiagnostics {
    pub cubic_classes: usize,
    pub cubic_ok: bool,
    pub max_quartic_classes: usize,
    pub quartic_ok: bool,
    pub total_classes: usize,
    pub total_ok: bool,
    pub discriminant_sign: i8,
    /// `(description, bound, observed)`; informational only.
    pub conditional: Vec<(String, usize, usize)>,
}

impl BoundDiagnostics {
    pub fn pass(&self) -> bool {
        self.cubic_ok && self.quartic_ok && self.total_ok
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleComparison {
    pub bound: u64,
    pub oracle_classes: Vec<Triple>,
    /// Oracle classes the pipeline did not produce.
    pub missing_from_pipeline: Vec<Triple>,
    /// Pipeline classes inside the box the oracle did not find.
    pub missing_from_oracle: Vec<Triple>,
    /// Pipeline classes lying outside the box.
    pub outside_box: Vec<Triple>,
}

impl OracleComparison {
    pub fn agrees(&self) -> bool {
        self.missing_from_pipeline.is_empty() && self.missing_from_oracle.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineReport {
    pub generator: QuarticGenerator,
    pub discriminant: BigInt,
    pub resolvent: BinaryForm,
    pub resolvent_discriminant: BigInt,
    pub cubic: SolutionSet,
    pub branches: Vec<BranchReport>,
    pub classes: Vec<MonogenizationClass>,
    pub counts: Counts,
    pub diagnostics: BoundDiagnostics,
    pub oracle: Option<OracleComparison>,
    pub config: PipelineConfig,
}

impl PipelineReport {
    pub fn class_set(&self) -> BTreeSet<Triple> {
        self.classes.iter().map(|c| c.triple.clone()).collect()
    }
}

/// Representative with first nonzero coordinate positive.
pub fn canonicalize(t: &Triple) -> Result<Triple> {
    if t.iter().all(Zero::is_zero) {
        return Err(Error::ZeroTriple);
    }
    Ok(canonical_triple(t))
}

/// `true` iff `xξ + yξ² + zξ³` generates `Z[ξ]`.
pub fn verify_monogenizer(p: &QuarticGenerator, t: &Triple) -> bool {
    p.index_of(t).is_one()
}

pub fn enumerate_monogenizations(p: &QuarticGenerator, cfg: &PipelineConfig) -> PipelineReport {
    let resolvent = p.cubic_resolvent();
    let resolvent_discriminant = resolvent.discriminant().expect("resolvent is monic");
    let cubic_problem = ThueProblem::new(resolvent.clone(), [BigInt::one(), -BigInt::one()], cfg.cubic_height)
        .expect("resolvent is a nonzero cubic");
    let cubic = solve_bounded(&cubic_problem);

    let branches: Vec<BranchReport> = cubic
        .solutions
        .par_iter()
        .map(|(u0, v0)| run_branch(p, u0, v0, cfg))
        .collect();

    let mut seen: BTreeMap<Triple, Provenance> = BTreeMap::new();
    for b in &branches {
        for d in b.triples.iter().filter(|d| d.verified) {
            seen.entry(d.triple.clone()).or_insert_with(|| d.provenance.clone());
        }
    }
    let classes: Vec<MonogenizationClass> = seen
        .into_iter()
        .map(|(triple, provenance)| MonogenizationClass { triple, provenance })
        .collect();

    let counts = Counts {
        cubic: cubic.len(),
        branches: branches.len(),
        quartic_forms: branches.iter().filter(|b| b.quartic.is_some()).count(),
        per_branch: branches.iter().map(BranchReport::quartic_class_count).collect(),
        total: classes.len(),
    };
    let mut report = PipelineReport {
        generator: p.clone(),
        discriminant: p.discriminant(),
        resolvent,
        resolvent_discriminant,
        cubic,
        branches,
        classes,
        counts,
        diagnostics: BoundDiagnostics {
            cubic_classes: 0,
            cubic_ok: true,
            max_quartic_classes: 0,
            quartic_ok: true,
            total_classes: 0,
            total_ok: true,
            discriminant_sign: 0,
            conditional: Vec::new(),
        },
        oracle: None,
        config: cfg.clone(),
    };
    report.diagnostics = bound_diagnostics(&report);
    if let Some(b) = cfg.oracle_box.and_then(SearchBox::new) {
        report.oracle = Some(compare_with_oracle(&report, b));
    }
    report
}

fn run_branch(p: &QuarticGenerator, u0: &BigInt, v0: &BigInt, cfg: &PipelineConfig) -> BranchReport {
    let pair = p.quadratic_pair();
    let mut report = BranchReport {
        source: (u0.clone(), v0.clone()),
        bezout: Mat2::identity(),
        first: pair.q1.clone(),
        conic: pair.q2.neg(),
        conic_point: None,
        parametrization: None,
        quartic: None,
        rhs: Vec::new(),
        quartic_solutions: Vec::new(),
        potentially_infinite: false,
        triples: Vec::new(),
        fallback_used: false,
        literal_quartic: None,
        discrepancies: Vec::new(),
    };
    if cfg.literal_comparison {
        report.literal_quartic = literal_branch_quartic(p, u0, v0).ok();
    }
    let branch = match branch_quartic(p, u0, v0, cfg.conic_point_bound) {
        Ok(b) => b,
        Err(e) => {
            report.discrepancies.push(format!("branch construction failed: {e}"));
            None
        }
    };
    let mut found: BTreeMap<Triple, Provenance> = BTreeMap::new();
    if let Some(b) = branch {
        report.bezout = b.bezout.clone();
        report.first = b.first.clone();
        report.conic = b.conic.clone();
        if !v0.is_zero() {
            report.conic_point = conic_point(&b.conic, cfg.conic_point_bound);
        }
        report.rhs = b.rhs.clone();
        match ThueProblem::new(b.form.clone(), b.rhs.iter().cloned(), cfg.quartic_height) {
            Ok(problem) => {
                let sols = solve_bounded(&problem);
                report.potentially_infinite = sols.potentially_infinite;
                for (pp, qq) in &sols.solutions {
                    let lifted = lift(&b.parametrization, &b.first, pp, qq);
                    if let Some(t) = &lifted {
                        found.entry(t.clone()).or_insert_with(|| Provenance::Branch {
                            u0: u0.clone(),
                            v0: v0.clone(),
                            p: pp.clone(),
                            q: qq.clone(),
                        });
                    }
                    report.quartic_solutions.push(QuarticSolution {
                        p: pp.clone(),
                        q: qq.clone(),
                        value: b.form.eval(pp, qq),
                        lifted,
                    });
                }
            }
            Err(e) => report.discrepancies.push(format!("quartic stage failed: {e}")),
        }
        report.quartic = Some(b.form);
        report.parametrization = Some(b.parametrization);
    }
    let need_fallback = report.quartic.is_none();
    if need_fallback || (cfg.cross_validate && !v0.is_zero()) {
        if let Some(bx) = SearchBox::new(cfg.fallback_box) {
            for (u, v) in [(u0.clone(), v0.clone()), (-u0, -v0)] {
                for t in oracle_system(&pair, &u, &v, bx) {
                    if !found.contains_key(&t) {
                        report.fallback_used = true;
                        found.insert(t, Provenance::Fallback { u0: u0.clone(), v0: v0.clone() });
                    }
                }
            }
        }
    }
    for (triple, provenance) in found {
        let verified = verify_monogenizer(p, &triple);
        if !verified {
            report
                .discrepancies
                .push(format!("triple {triple:?} from {provenance} has index {}", p.index_of(&triple)));
        }
        report.triples.push(DerivedTriple { triple, verified, provenance });
    }
    report
}

/// Primitive conic point behind the quartic solution `(p, q)`, when it
/// solves `Q′₁ = ±1`.
fn lift(param: &ConicParametrization, first: &TernaryQuadForm, p: &BigInt, q: &BigInt) -> Option<Triple> {
    let w = param.eval(p, q);
    let c = content(w.iter());
    if c.is_zero() {
        return None;
    }
    let w = w.map(|x| x / &c);
    first.eval(&w).abs().is_one().then(|| canonical_triple(&w))
}

/// Checks the unconditional counts and lists the conditional ones.
pub fn bound_diagnostics(report: &PipelineReport) -> BoundDiagnostics {
    let cubic_classes = report.cubic.len();
    let max_quartic_classes = report
        .branches
        .iter()
        .map(BranchReport::quartic_class_count)
        .max()
        .unwrap_or(0);
    let total_classes = report.classes.len();
    let observed = [total_classes, total_classes, cubic_classes, max_quartic_classes, max_quartic_classes];
    BoundDiagnostics {
        cubic_classes,
        cubic_ok: cubic_classes <= CUBIC_CLASS_MAX,
        max_quartic_classes,
        quartic_ok: max_quartic_classes <= QUARTIC_CLASS_MAX,
        total_classes,
        total_ok: total_classes <= TOTAL_CLASS_MAX,
        discriminant_sign: crate::algebra::signum(&report.discriminant),
        conditional: CONDITIONAL_BOUNDS
            .iter()
            .zip(observed)
            .map(|((d, b), o)| (d.to_string(), *b, o))
            .collect(),
    }
}

pub fn compare_with_oracle(report: &PipelineReport, b: SearchBox) -> OracleComparison {
    let oracle = oracle_monogenizers(&report.generator, b);
    let pipeline = report.class_set();
    let (inside, outside): (BTreeSet<_>, BTreeSet<_>) = pipeline.into_iter().partition(|t| b.contains(t));
    OracleComparison {
        bound: b.bound(),
        missing_from_pipeline: oracle.difference(&inside).cloned().collect(),
        missing_from_oracle: inside.difference(&oracle).cloned().collect(),
        outside_box: outside.into_iter().collect(),
        oracle_classes: oracle.into_iter().collect(),
    }
}
