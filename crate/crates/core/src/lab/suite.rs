//! Exhaustive property checks over an enumerated carrier of indecomposables.
//!
//! Every quantifier over a module category is restricted to the indecomposables
//! found up to the dimension bound; Hom and Ext are additive, so this loses
//! nothing as long as the enumeration is complete for the algebra at hand. The
//! report always states the bound it used.

use std::fmt::Write as _;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::error::Result;
use crate::homological::{ar_translate, projective_dimension, projective_resolution, stable_hom_dim, PdResult};
use crate::io::{algebra_to_string, module_to_string};
use crate::lab::approx::{add_t_resolution_from_types, minimal_right_add_approximation_from_types};
use crate::lab::enumerate::{enumerate_indecomposables, enumerate_support_tau_tilting};
use crate::lab::predicates::{
    combinations, is_partial_tilting, is_support_tau_tilting, is_tau_rigid, is_tau_tilting, is_tilting,
    is_tilting_via_fac_criterion, self_orthogonal, torsion_decomposition, Bounds, FacVerdict, FacWitness, Tri,
};
use crate::rep::{
    direct_sum, direct_sum_of, fac_membership, hom_dim, is_injective, is_projective, sub_membership, Representation,
};
use crate::ring::summand_type_count;

/// Steps of each `add T`-resolution built by the suite.
pub const ADD_RESOLUTION_LENGTH: usize = 4;

/// Every fourth candidate is also checked against `T ⊕ T`.
const MULTIPLICITY_SAMPLE_STRIDE: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum CheckId {
    TiltingFac,
    FinitePdSelfOrthogonal,
    TorsionPair,
    HomDetects,
    ApproximationKernel,
    AddResolution,
    FacInsidePerp,
    ArFormula,
    TiltingTauPd,
    Multiplicity,
    SupportEnumeration,
}

const CHECKS: [(CheckId, &str, &str); 11] = [
    (
        CheckId::TiltingFac,
        "tilting_iff_fac_ext_vanishing",
        "T tilting <=> |T| = n and Ext^i(T, M) = 0 for all listed M in Fac T",
    ),
    (
        CheckId::FinitePdSelfOrthogonal,
        "tau_tilting_finite_pd_tilting_iff_self_orthogonal",
        "for tau-tilting T of finite pd: T tilting <=> Ext^i(T, T) = 0 for 1 <= i <= pd T",
    ),
    (
        CheckId::TorsionPair,
        "torsion_pair_iff_tau_tilting",
        "for tau-rigid T: (Fac T, Sub tau T) is a torsion pair on the listed modules <=> T tau-tilting",
    ),
    (
        CheckId::HomDetects,
        "hom_detects_nonzero_in_ext1_perp",
        "for tau-tilting T and listed M != 0 with Ext^1(T, M) = 0: Hom(T, M) != 0",
    ),
    (
        CheckId::ApproximationKernel,
        "approximation_kernel_hom_vanishing",
        "for tau-rigid T and listed X: the kernel Y of a minimal right add T-approximation has Hom(Y, tau T) = 0",
    ),
    (
        CheckId::AddResolution,
        "add_resolution_kernels_in_fac",
        "for tau-tilting T and listed M in Fac T: iterated minimal approximations are onto with kernels in Fac T",
    ),
    (
        CheckId::FacInsidePerp,
        "fac_inside_ext_perp",
        "for self-orthogonal tau-tilting T of finite pd d: Ext^i(T, M) = 0 for listed M in Fac T and 1 <= i <= d",
    ),
    (
        CheckId::ArFormula,
        "ar_formula",
        "dim Ext^1(M, N) = dim of Hom(N, tau M) modulo maps through injectives, for listed M, N",
    ),
    (CheckId::TiltingTauPd, "tilting_iff_tau_tilting_pd_le_1", "T tilting <=> T tau-tilting and pd T <= 1"),
    (CheckId::Multiplicity, "multiplicity_invariance", "predicates agree on T and T + T (sampled candidates)"),
    (
        CheckId::SupportEnumeration,
        "support_tau_tilting_enumeration_agrees",
        "the support tau-tilting predicate agrees with the enumerated list on every candidate",
    ),
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSummary {
    pub name: String,
    pub field: u32,
    pub vertices: Vec<String>,
    pub arrows: Vec<String>,
    pub relations: Vec<String>,
    pub dimension: usize,
    /// The algebra in file format.
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportBounds {
    pub max_dim: usize,
    pub ext_bound: usize,
    pub l_max: usize,
    pub add_resolution_length: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleEntry {
    pub label: String,
    pub dim_vector: Vec<usize>,
    /// The module in file format.
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportEntry {
    pub summands: Vec<String>,
    pub killed_vertices: Vec<String>,
    pub tau_tilting: bool,
    /// The zero module, included by convention with every vertex killed.
    pub zero_module: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub indecomposables: usize,
    pub candidates: usize,
    pub tau_rigid: usize,
    pub tau_tilting: usize,
    pub tilting: usize,
    /// Nonzero support τ-tilting modules.
    pub support_tau_tilting_nonzero: usize,
    pub zero_module_listed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessModule {
    pub label: String,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub subject: String,
    pub detail: String,
    pub modules: Vec<WitnessModule>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// No counterexample, but some case could not be decided at the bounds used.
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub statement: String,
    pub status: CheckStatus,
    pub cases: usize,
    pub failures: Vec<Failure>,
    pub inconclusive: Vec<Failure>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleProfile {
    pub vertex: String,
    pub injective: bool,
    pub projective: bool,
    pub projective_dimension: PdResult,
    pub support_tau_tilting: bool,
    pub tau_tilting: bool,
    pub partial_tilting: Tri,
    pub self_orthogonal: Tri,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub algebra: AlgebraSummary,
    pub bounds: ReportBounds,
    pub indecomposables: Vec<ModuleEntry>,
    pub counts: Counts,
    pub support_tau_tilting: Vec<SupportEntry>,
    pub checks: Vec<CheckResult>,
    pub simple_profiles: Vec<SimpleProfile>,
    pub all_passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

enum Case {
    Pass,
    Fail(Failure),
    Inconclusive(Failure),
}

struct Carrier<'a> {
    indecs: &'a [Representation],
    labels: Vec<String>,
    bounds: Bounds,
    n: usize,
}

impl Carrier<'_> {
    fn witness(&self, label: &str, m: &Representation) -> WitnessModule {
        WitnessModule { label: label.to_string(), text: module_to_string(m) }
    }

    fn failure(&self, subject: &str, t: &Representation, detail: String, extra: &[usize]) -> Failure {
        let mut modules = vec![self.witness(subject, t)];
        modules.extend(extra.iter().map(|&i| self.witness(&self.labels[i], &self.indecs[i])));
        Failure { subject: subject.to_string(), detail, modules }
    }
}

struct CandidateSummary {
    tau_rigid: bool,
    tau_tilting: bool,
    tilting: bool,
}

fn truncate_pd(pd: PdResult, l_max: usize) -> PdResult {
    match pd {
        PdResult::Exact(d) if d <= l_max => PdResult::Exact(d),
        _ => PdResult::AtLeast(l_max + 1),
    }
}

fn evaluate_candidate(
    c: &Carrier<'_>,
    indices: &[usize],
    index: usize,
    enumerated_support: &[Vec<usize>],
) -> Result<(Vec<(CheckId, Case)>, CandidateSummary)> {
    let alg = c.indecs[0].algebra();
    let types: Vec<Representation> = indices.iter().map(|&i| c.indecs[i].clone()).collect();
    let t = direct_sum_of(alg, &types)?.module;
    let subject = indices.iter().map(|&i| c.labels[i].as_str()).collect::<Vec<_>>().join("+");
    let tau_t = ar_translate(&t);
    let tau_rigid = hom_dim(&t, &tau_t)? == 0;
    let count = summand_type_count(&t)?;
    let tau_tilting = tau_rigid && count == c.n;
    let tilting = is_tilting(&t, c.bounds)?;
    let fac = is_tilting_via_fac_criterion(&t, c.indecs, c.bounds)?;
    let res = projective_resolution(&t, c.bounds.l_max.max(c.bounds.i_max + 1));
    let pd = truncate_pd(res.projective_dimension(), c.bounds.l_max);
    let fac_members: Vec<usize> = (0..c.indecs.len())
        .filter_map(|i| fac_membership(&t, &c.indecs[i]).map(|b| b.then_some(i)).transpose())
        .collect::<Result<_>>()?;
    let mut out = Vec::new();

    // Fac-criterion against the direct definition.
    let case = match (tilting, fac.verdict) {
        (Tri::True, FacVerdict::Holds) | (Tri::False, FacVerdict::Fails) => Case::Pass,
        (Tri::UnknownAtBound, _) | (Tri::False, FacVerdict::HoldsUpToBound) => Case::Inconclusive(c.failure(
            &subject,
            &t,
            format!("tilting = {tilting}, Fac-criterion {:?} after {} degrees", fac.verdict, fac.degrees_checked),
            &[],
        )),
        _ => {
            let extra: Vec<usize> = match &fac.witness {
                Some(FacWitness::Ext { module, .. }) => vec![*module],
                _ => vec![],
            };
            Case::Fail(c.failure(
                &subject,
                &t,
                format!("tilting = {tilting} but Fac-criterion gives {:?} ({:?})", fac.verdict, fac.witness),
                &extra,
            ))
        }
    };
    out.push((CheckId::TiltingFac, case));

    // Self-orthogonality up to pd, for τ-tilting modules of finite pd.
    let mut self_orth_exact = None;
    if let (true, PdResult::Exact(d)) = (tau_tilting, pd) {
        let mut so = true;
        for i in 1..=d {
            if res.ext_dim(&t, i)? != 0 {
                so = false;
                break;
            }
        }
        self_orth_exact = Some((d, so));
        let is_t = tilting == Tri::True;
        let case = if is_t == so {
            Case::Pass
        } else {
            Case::Fail(c.failure(&subject, &t, format!("pd {d}, tilting = {is_t}, self-orthogonal = {so}"), &[]))
        };
        out.push((CheckId::FinitePdSelfOrthogonal, case));
    }

    if tau_rigid {
        // Torsion pair on the carrier.
        let sub_members: Vec<usize> = (0..c.indecs.len())
            .filter_map(|i| sub_membership(&c.indecs[i], &tau_t).map(|b| b.then_some(i)).transpose())
            .collect::<Result<_>>()?;
        let mut violation: Option<(String, Vec<usize>)> = None;
        'outer: for &x in &fac_members {
            for &y in &sub_members {
                if hom_dim(&c.indecs[x], &c.indecs[y])? != 0 {
                    violation = Some((format!("Hom({}, {}) != 0", c.labels[x], c.labels[y]), vec![x, y]));
                    break 'outer;
                }
            }
        }
        if violation.is_none() {
            for (i, m) in c.indecs.iter().enumerate() {
                let d = torsion_decomposition(&t, m)?;
                if !d.is_exact() || !d.certify(&t, &tau_t)? {
                    violation = Some((format!("{} has no (Fac T, Sub tau T) decomposition", c.labels[i]), vec![i]));
                    break;
                }
            }
        }
        let holds = violation.is_none();
        let case = if holds == tau_tilting {
            Case::Pass
        } else {
            let (detail, extra) = violation.unwrap_or_else(|| ("torsion pair laws hold".into(), vec![]));
            Case::Fail(c.failure(&subject, &t, format!("tau-tilting = {tau_tilting}; {detail}"), &extra))
        };
        out.push((CheckId::TorsionPair, case));

        // Kernels of minimal approximations.
        for (i, x) in c.indecs.iter().enumerate() {
            let approx = minimal_right_add_approximation_from_types(&types, x)?;
            let y = approx.kernel();
            let case = if hom_dim(&y, &tau_t)? == 0 {
                Case::Pass
            } else {
                Case::Fail(c.failure(
                    &subject,
                    &t,
                    format!("kernel of the approximation of {} maps to tau T", c.labels[i]),
                    &[i],
                ))
            };
            out.push((CheckId::ApproximationKernel, case));
        }
    }

    if tau_tilting {
        for (i, m) in c.indecs.iter().enumerate() {
            if res.ext_dim(m, 1)? == 0 {
                let case = if hom_dim(&t, m)? != 0 {
                    Case::Pass
                } else {
                    Case::Fail(c.failure(
                        &subject,
                        &t,
                        format!("Ext^1(T, {0}) = 0 and Hom(T, {0}) = 0", c.labels[i]),
                        &[i],
                    ))
                };
                out.push((CheckId::HomDetects, case));
            }
        }
        for &i in &fac_members {
            let r = add_t_resolution_from_types(&t, &types, &c.indecs[i], ADD_RESOLUTION_LENGTH)?;
            let case = if r.certified() {
                Case::Pass
            } else {
                Case::Fail(c.failure(
                    &subject,
                    &t,
                    format!("add T-resolution of {} is not certified", c.labels[i]),
                    &[i],
                ))
            };
            out.push((CheckId::AddResolution, case));
        }
        if let Some((d, true)) = self_orth_exact {
            for &i in &fac_members {
                let mut bad = None;
                for deg in 1..=d {
                    if res.ext_dim(&c.indecs[i], deg)? != 0 {
                        bad = Some(deg);
                        break;
                    }
                }
                let case = match bad {
                    None => Case::Pass,
                    Some(deg) => {
                        Case::Fail(c.failure(&subject, &t, format!("Ext^{deg}(T, {}) != 0", c.labels[i]), &[i]))
                    }
                };
                out.push((CheckId::FacInsidePerp, case));
            }
        }
    }

    // Tilting = τ-tilting of pd at most one.
    let case = match (tilting.decided(), pd.at_most(1)) {
        (Some(lhs), Some(small)) => {
            if lhs == (tau_tilting && small) {
                Case::Pass
            } else {
                Case::Fail(c.failure(
                    &subject,
                    &t,
                    format!("tilting = {lhs}, tau-tilting = {tau_tilting}, pd = {pd}"),
                    &[],
                ))
            }
        }
        _ => Case::Inconclusive(c.failure(&subject, &t, format!("pd = {pd} unresolved"), &[])),
    };
    out.push((CheckId::TiltingTauPd, case));

    if index.is_multiple_of(MULTIPLICITY_SAMPLE_STRIDE) {
        let tt = direct_sum(&t, &t)?;
        let lhs = (tau_rigid, tau_tilting, is_support_tau_tilting(&t)?, tilting);
        let rhs = (is_tau_rigid(&tt)?, is_tau_tilting(&tt)?, is_support_tau_tilting(&tt)?, is_tilting(&tt, c.bounds)?);
        let case = if lhs == rhs {
            Case::Pass
        } else {
            Case::Fail(c.failure(&subject, &t, format!("predicates on T {lhs:?} differ from T+T {rhs:?}"), &[]))
        };
        out.push((CheckId::Multiplicity, case));
    }

    let predicate = is_support_tau_tilting(&t)?;
    let listed = enumerated_support.iter().any(|s| s.as_slice() == indices);
    let case = if predicate == listed {
        Case::Pass
    } else {
        Case::Fail(c.failure(&subject, &t, format!("predicate {predicate}, enumerated {listed}"), &[]))
    };
    out.push((CheckId::SupportEnumeration, case));

    Ok((out, CandidateSummary { tau_rigid, tau_tilting, tilting: tilting == Tri::True }))
}

fn simple_profile(alg: &Arc<Algebra>, v: usize, bounds: Bounds) -> Result<SimpleProfile> {
    let s = Representation::simple(alg, v);
    Ok(SimpleProfile {
        vertex: alg.quiver().vertices()[v].clone(),
        injective: is_injective(&s),
        projective: is_projective(&s),
        projective_dimension: projective_dimension(&s, bounds.l_max),
        support_tau_tilting: is_support_tau_tilting(&s)?,
        tau_tilting: is_tau_tilting(&s)?,
        partial_tilting: is_partial_tilting(&s, bounds)?,
        self_orthogonal: self_orthogonal(&s, bounds)?,
    })
}

/// Runs every check over all multiplicity-free sums of at most `n` enumerated
/// indecomposables of total dimension at most `dim_bound`.
pub fn verify_theorem_suite(
    alg: &Arc<Algebra>,
    name: &str,
    dim_bound: usize,
    bounds: Bounds,
) -> Result<VerificationReport> {
    let n = alg.vertex_count();
    let indecs = enumerate_indecomposables(alg, dim_bound)?;
    let labels: Vec<String> = (0..indecs.len()).map(|i| format!("X{i}")).collect();
    let carrier = Carrier { indecs: &indecs, labels: labels.clone(), bounds, n };
    let support = enumerate_support_tau_tilting(alg, &indecs)?;
    let enumerated_support: Vec<Vec<usize>> = support.iter().map(|s| s.summands.clone()).collect();

    let all: Vec<usize> = (0..indecs.len()).collect();
    let candidates: Vec<Vec<usize>> = (1..=n.min(indecs.len())).flat_map(|k| combinations(&all, k)).collect();
    let evaluated: Vec<(Vec<(CheckId, Case)>, CandidateSummary)> = candidates
        .par_iter()
        .enumerate()
        .map(|(idx, cand)| evaluate_candidate(&carrier, cand, idx, &enumerated_support))
        .collect::<Result<_>>()?;

    let taus: Vec<Representation> = indecs.par_iter().map(ar_translate).collect();
    let ar_cases: Vec<Case> = (0..indecs.len() * indecs.len())
        .into_par_iter()
        .map(|k| {
            let (i, j) = (k / indecs.len(), k % indecs.len());
            let ext = projective_resolution(&indecs[i], 2).ext_dim(&indecs[j], 1)?;
            let stable = stable_hom_dim(&indecs[j], &taus[i])?;
            Ok(if ext == stable {
                Case::Pass
            } else {
                let subject = format!("({}, {})", labels[i], labels[j]);
                Case::Fail(Failure {
                    subject: subject.clone(),
                    detail: format!("dim Ext^1 = {ext}, stable Hom = {stable}"),
                    modules: vec![carrier.witness(&labels[i], &indecs[i]), carrier.witness(&labels[j], &indecs[j])],
                })
            })
        })
        .collect::<Result<_>>()?;

    let mut checks: Vec<CheckResult> = CHECKS
        .iter()
        .map(|(_, name, statement)| CheckResult {
            name: name.to_string(),
            statement: statement.to_string(),
            status: CheckStatus::Pass,
            cases: 0,
            failures: Vec::new(),
            inconclusive: Vec::new(),
        })
        .collect();
    let slot = |id: CheckId| CHECKS.iter().position(|(c, _, _)| *c == id).expect("listed check");
    let mut record = |id: CheckId, case: Case| {
        let entry = &mut checks[slot(id)];
        entry.cases += 1;
        match case {
            Case::Pass => {}
            Case::Fail(f) => entry.failures.push(f),
            Case::Inconclusive(f) => entry.inconclusive.push(f),
        }
    };
    let mut counts = Counts {
        indecomposables: indecs.len(),
        candidates: candidates.len(),
        tau_rigid: 0,
        tau_tilting: 0,
        tilting: 0,
        support_tau_tilting_nonzero: support.iter().filter(|s| !s.is_zero()).count(),
        zero_module_listed: support.iter().any(|s| s.is_zero()),
    };
    for (cases, summary) in evaluated {
        counts.tau_rigid += usize::from(summary.tau_rigid);
        counts.tau_tilting += usize::from(summary.tau_tilting);
        counts.tilting += usize::from(summary.tilting);
        for (id, case) in cases {
            record(id, case);
        }
    }
    for case in ar_cases {
        record(CheckId::ArFormula, case);
    }
    for check in &mut checks {
        check.status = if !check.failures.is_empty() {
            CheckStatus::Fail
        } else if !check.inconclusive.is_empty() {
            CheckStatus::Inconclusive
        } else {
            CheckStatus::Pass
        };
    }

    let q = alg.quiver();
    let algebra = AlgebraSummary {
        name: name.to_string(),
        field: alg.prime(),
        vertices: q.vertices().to_vec(),
        arrows: q
            .arrows()
            .iter()
            .map(|a| format!("{}: {} -> {}", a.name, q.vertices()[a.source], q.vertices()[a.target]))
            .collect(),
        relations: alg.relations().iter().map(|r| r.display(q)).collect(),
        dimension: alg.dim(),
        text: algebra_to_string(alg),
    };
    let indecomposables = indecs
        .iter()
        .zip(&labels)
        .map(|(m, l)| ModuleEntry { label: l.clone(), dim_vector: m.dim_vector().to_vec(), text: module_to_string(m) })
        .collect();
    let support_tau_tilting = support
        .iter()
        .map(|s| SupportEntry {
            summands: s.summands.iter().map(|&i| labels[i].clone()).collect(),
            killed_vertices: s.killed.iter().map(|&v| q.vertices()[v].clone()).collect(),
            tau_tilting: s.tau_tilting,
            zero_module: s.is_zero(),
        })
        .collect();
    let simple_profiles = (0..n).map(|v| simple_profile(alg, v, bounds)).collect::<Result<_>>()?;
    let all_passed = checks.iter().all(|c| c.status == CheckStatus::Pass);
    Ok(VerificationReport {
        algebra,
        bounds: ReportBounds {
            max_dim: dim_bound,
            ext_bound: bounds.i_max,
            l_max: bounds.l_max,
            add_resolution_length: ADD_RESOLUTION_LENGTH,
        },
        indecomposables,
        counts,
        support_tau_tilting,
        checks,
        simple_profiles,
        all_passed,
        elapsed_ms: None,
    })
}

impl VerificationReport {
    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable summary rendered from the same data as the JSON.
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "algebra {} over F_{}: {} vertices, dimension {}",
            self.algebra.name,
            self.algebra.field,
            self.algebra.vertices.len(),
            self.algebra.dimension
        );
        let _ = writeln!(
            out,
            "bounds: max-dim {}, ext-bound {}, L_max {}",
            self.bounds.max_dim, self.bounds.ext_bound, self.bounds.l_max
        );
        let c = &self.counts;
        let _ = writeln!(
            out,
            "indecomposables {}, candidates {}, tau-rigid {}, tau-tilting {}, tilting {}, support tau-tilting {} (+ zero module)",
            c.indecomposables, c.candidates, c.tau_rigid, c.tau_tilting, c.tilting, c.support_tau_tilting_nonzero
        );
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for check in &self.checks {
            let status = match check.status {
                CheckStatus::Pass => "PASS",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Inconclusive => "INCONCLUSIVE",
            };
            let _ = writeln!(
                out,
                "  {:<width$}  {:<12}  cases {:>5}  failures {}  inconclusive {}",
                check.name,
                status,
                check.cases,
                check.failures.len(),
                check.inconclusive.len()
            );
            for f in check.failures.iter().chain(&check.inconclusive).take(3) {
                let _ = writeln!(out, "      {}: {}", f.subject, f.detail);
            }
        }
        for s in &self.simple_profiles {
            let _ = writeln!(
                out,
                "  S({}): injective {}, projective {}, pd {}, support tau-tilting {}, tau-tilting {}, partial tilting {}, self-orthogonal {}",
                s.vertex,
                s.injective,
                s.projective,
                s.projective_dimension,
                s.support_tau_tilting,
                s.tau_tilting,
                s.partial_tilting,
                s.self_orthogonal
            );
        }
        let _ = writeln!(out, "all checks passed: {}", self.all_passed);
        out
    }
}
