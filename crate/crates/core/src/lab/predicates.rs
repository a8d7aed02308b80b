//! τ-rigid, τ-tilting, support τ-tilting and tilting predicates, the
//! Fac-criterion for tilting, and torsion decompositions.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::DEFAULT_L_MAX;
use crate::error::Result;
use crate::homological::{ar_translate, projective_dimension, projective_resolution, PdResult, DEFAULT_EXT_BOUND};
use crate::rep::{cokernel, fac_membership, hom_dim, sub_membership, trace_submodule, Morphism, Representation};
use crate::ring::summand_type_count;

/// Outcome of a predicate that may depend on an unresolved projective dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Tri {
    True,
    False,
    UnknownAtBound,
}

impl Tri {
    pub fn decided(self) -> Option<bool> {
        match self {
            Tri::True => Some(true),
            Tri::False => Some(false),
            Tri::UnknownAtBound => None,
        }
    }
}

impl From<bool> for Tri {
    fn from(b: bool) -> Self {
        if b {
            Tri::True
        } else {
            Tri::False
        }
    }
}

impl fmt::Display for Tri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tri::True => "true",
            Tri::False => "false",
            Tri::UnknownAtBound => "unknown_at_bound",
        })
    }
}

/// Search limits: `l_max` for projective resolutions, `i_max` for Ext degrees
/// when the projective dimension is not known.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub l_max: usize,
    pub i_max: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { l_max: DEFAULT_L_MAX, i_max: DEFAULT_EXT_BOUND }
    }
}

/// `Hom(t, τt) = 0`.
pub fn is_tau_rigid(t: &Representation) -> Result<bool> {
    if t.is_zero() {
        return Ok(true);
    }
    Ok(hom_dim(t, &ar_translate(t))? == 0)
}

/// τ-rigid with `|t|` equal to the number of vertices.
pub fn is_tau_tilting(t: &Representation) -> Result<bool> {
    Ok(summand_type_count(t)? == t.algebra().vertex_count() && is_tau_rigid(t)?)
}

/// Vertices `S` such that `t` is τ-tilting over `Λ/(e_S)`, if any.
///
/// Only sums of vertex idempotents are searched: over a basic algebra every
/// idempotent ideal is generated by one of them. Since `|t|` does not change
/// under restriction, only `|S| = n - |t|` can work. The zero module is treated
/// as support τ-tilting with every vertex killed.
pub fn support_tau_tilting_witness(t: &Representation) -> Result<Option<Vec<usize>>> {
    let alg = t.algebra();
    let n = alg.vertex_count();
    if t.is_zero() {
        return Ok(Some((0..n).collect()));
    }
    let count = summand_type_count(t)?;
    if count > n {
        return Ok(None);
    }
    let need = n - count;
    let zeros: Vec<usize> = (0..n).filter(|&v| t.dim_at(v) == 0).collect();
    for killed in combinations(&zeros, need) {
        let rigid = if killed.is_empty() {
            is_tau_rigid(t)?
        } else {
            let quotient = Arc::new(alg.vertex_quotient(&killed)?);
            is_tau_rigid(&t.restrict_to(&quotient)?)?
        };
        if rigid {
            return Ok(Some(killed));
        }
    }
    Ok(None)
}

pub fn is_support_tau_tilting(t: &Representation) -> Result<bool> {
    Ok(support_tau_tilting_witness(t)?.is_some())
}

/// All `k`-element subsets of `items`, in lexicographic order.
pub(crate) fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn go(items: &[usize], k: usize, start: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() == k {
            out.push(acc.clone());
            return;
        }
        for i in start..items.len() {
            acc.push(items[i]);
            go(items, k, i + 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if k <= items.len() {
        go(items, k, 0, &mut Vec::new(), &mut out);
    }
    out
}

/// `Ext^i(t, t) = 0` for all `i >= 1`: decided exactly when `pd t` is found,
/// otherwise checked up to `i_max`.
pub fn self_orthogonal(t: &Representation, bounds: Bounds) -> Result<Tri> {
    let res = projective_resolution(t, bounds.l_max.max(bounds.i_max + 1));
    let (top, exact) = match res.projective_dimension() {
        PdResult::Exact(d) => (d, true),
        PdResult::AtLeast(_) => (bounds.i_max, false),
    };
    for i in 1..=top {
        if res.ext_dim(t, i)? != 0 {
            return Ok(Tri::False);
        }
    }
    Ok(if exact { Tri::True } else { Tri::UnknownAtBound })
}

/// `pd t <= 1` and `Ext^1(t, t) = 0`.
pub fn is_partial_tilting(t: &Representation, bounds: Bounds) -> Result<Tri> {
    match projective_dimension(t, bounds.l_max).at_most(1) {
        None => Ok(Tri::UnknownAtBound),
        Some(false) => Ok(Tri::False),
        Some(true) => Ok(Tri::from(projective_resolution(t, 2).ext_dim(t, 1)? == 0)),
    }
}

/// Partial tilting with `|t| = |Λ|`.
pub fn is_tilting(t: &Representation, bounds: Bounds) -> Result<Tri> {
    if summand_type_count(t)? != t.algebra().vertex_count() {
        return Ok(Tri::False);
    }
    is_partial_tilting(t, bounds)
}

/// Why the Fac-criterion failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum FacWitness {
    SummandCount { found: usize, expected: usize },
    Ext { module: usize, degree: usize, dim: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FacVerdict {
    Holds,
    Fails,
    /// Every degree up to `i_max` vanished but `pd t` was not found.
    HoldsUpToBound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacCriterion {
    pub verdict: FacVerdict,
    pub degrees_checked: usize,
    pub witness: Option<FacWitness>,
}

/// `|t| = n` and `Ext^i(t, M) = 0` for every listed `M ∈ Fac t`.
///
/// `indecs` should be a complete list of indecomposables up to some bound;
/// additivity of Ext reduces `Fac t` to its indecomposable members.
pub fn is_tilting_via_fac_criterion(
    t: &Representation,
    indecs: &[Representation],
    bounds: Bounds,
) -> Result<FacCriterion> {
    let n = t.algebra().vertex_count();
    let count = summand_type_count(t)?;
    if count != n {
        return Ok(FacCriterion {
            verdict: FacVerdict::Fails,
            degrees_checked: 0,
            witness: Some(FacWitness::SummandCount { found: count, expected: n }),
        });
    }
    let res = projective_resolution(t, bounds.l_max.max(bounds.i_max + 1));
    let (degrees, exact) = match res.projective_dimension() {
        PdResult::Exact(d) if d <= bounds.i_max => (d, true),
        _ => (bounds.i_max, false),
    };
    for (idx, m) in indecs.iter().enumerate() {
        if !fac_membership(t, m)? {
            continue;
        }
        for i in 1..=degrees {
            let dim = res.ext_dim(m, i)?;
            if dim != 0 {
                return Ok(FacCriterion {
                    verdict: FacVerdict::Fails,
                    degrees_checked: degrees,
                    witness: Some(FacWitness::Ext { module: idx, degree: i, dim }),
                });
            }
        }
    }
    let verdict = if exact { FacVerdict::Holds } else { FacVerdict::HoldsUpToBound };
    Ok(FacCriterion { verdict, degrees_checked: degrees, witness: None })
}

/// `0 -> tM -> M -> fM -> 0` with `tM` the trace of `t` in `M`.
#[derive(Clone, Debug)]
pub struct TorsionDecomposition {
    pub torsion: Representation,
    pub inclusion: Morphism,
    pub free: Representation,
    pub projection: Morphism,
}

impl TorsionDecomposition {
    /// The sequence is short exact.
    pub fn is_exact(&self) -> bool {
        self.inclusion.is_injective()
            && self.projection.is_surjective()
            && self.projection.compose(&self.inclusion).map(|c| c.is_zero()).unwrap_or(false)
            && self.torsion.total_dim() + self.free.total_dim() == self.inclusion.target().total_dim()
    }

    /// `tM ∈ Fac t` and `fM ∈ Sub τt`.
    pub fn certify(&self, t: &Representation, tau_t: &Representation) -> Result<bool> {
        Ok(fac_membership(t, &self.torsion)? && sub_membership(&self.free, tau_t)?)
    }
}

pub fn torsion_decomposition(t: &Representation, m: &Representation) -> Result<TorsionDecomposition> {
    let (torsion, inclusion) = trace_submodule(t, m)?;
    let (free, projection) = cokernel(&inclusion);
    Ok(TorsionDecomposition { torsion, inclusion, free, projection })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::catalog;
    use crate::rep::is_injective;
    use crate::rep::{direct_sum, indecomposable_injectives, indecomposable_projectives, regular_module};

    fn a2() -> Arc<Algebra> {
        Arc::new(catalog::linear(2, 2))
    }

    fn zero_rel() -> Arc<Algebra> {
        Arc::new(catalog::linear_radical_square_zero(3, 2))
    }

    #[test]
    fn tau_rigidity_over_a2() {
        let a = a2();
        let ps = indecomposable_projectives(&a);
        let s1 = Representation::simple(&a, 0);
        let s2 = Representation::simple(&a, 1);
        for p in &ps {
            assert!(is_tau_rigid(p).unwrap());
        }
        assert!(!is_tau_rigid(&direct_sum(&s1, &s2).unwrap()).unwrap());
        let p1s1 = direct_sum(&ps[0], &s1).unwrap();
        assert!(is_tau_rigid(&p1s1).unwrap());
        assert!(is_tau_tilting(&p1s1).unwrap());
        assert_eq!(is_tilting(&p1s1, Bounds::default()).unwrap(), Tri::True);
        let fac = is_tilting_via_fac_criterion(&p1s1, &[ps[0].clone(), ps[1].clone(), s1.clone()], Bounds::default())
            .unwrap();
        assert_eq!(fac.verdict, FacVerdict::Holds);
    }

    #[test]
    fn regular_module_is_tilting_everywhere() {
        for a in [a2(), zero_rel(), Arc::new(catalog::cyclic_radical_square_zero(3, 2))] {
            let lam = regular_module(&a);
            assert!(is_tau_tilting(&lam).unwrap());
            assert!(is_support_tau_tilting(&lam).unwrap());
            assert_eq!(is_tilting(&lam, Bounds::default()).unwrap(), Tri::True);
            assert_eq!(self_orthogonal(&lam, Bounds::default()).unwrap(), Tri::True);
        }
    }

    #[test]
    fn simple_top_of_zero_relation_algebra() {
        let a = zero_rel();
        let s1 = Representation::simple(&a, 0);
        assert!(is_injective(&s1));
        assert_eq!(projective_dimension(&s1, DEFAULT_L_MAX), PdResult::Exact(2));
        assert!(is_support_tau_tilting(&s1).unwrap());
        assert_eq!(support_tau_tilting_witness(&s1).unwrap(), Some(vec![1, 2]));
        assert!(!is_tau_tilting(&s1).unwrap());
        assert_eq!(is_partial_tilting(&s1, Bounds::default()).unwrap(), Tri::False);
        assert_eq!(self_orthogonal(&s1, Bounds::default()).unwrap(), Tri::True);
        assert_eq!(indecomposable_injectives(&a)[0], s1);
    }

    #[test]
    fn unresolved_dimensions_are_reported() {
        let c = Arc::new(catalog::cyclic_radical_square_zero(3, 2));
        let s = Representation::simple(&c, 0);
        let tight = Bounds { l_max: 0, i_max: 3 };
        assert_eq!(is_partial_tilting(&s, tight).unwrap(), Tri::UnknownAtBound);
        assert_eq!(is_partial_tilting(&s, Bounds::default()).unwrap(), Tri::False);
        assert_eq!(self_orthogonal(&s, tight).unwrap(), Tri::False);
    }

    #[test]
    fn support_tau_tilting_of_zero_is_flagged() {
        let a = a2();
        let z = Representation::zero(&a);
        assert_eq!(support_tau_tilting_witness(&z).unwrap(), Some(vec![0, 1]));
    }

    #[test]
    fn torsion_decomposition_examples() {
        let a = a2();
        let ps = indecomposable_projectives(&a);
        let lam = regular_module(&a);
        let s2 = Representation::simple(&a, 1);
        let d = torsion_decomposition(&lam, &s2).unwrap();
        assert_eq!(d.torsion, s2);
        assert!(d.free.is_zero());
        assert!(d.is_exact());
        let p1s1 = direct_sum(&ps[0], &Representation::simple(&a, 0)).unwrap();
        let tau = ar_translate(&p1s1);
        let d = torsion_decomposition(&p1s1, &s2).unwrap();
        assert!(d.torsion.is_zero());
        assert_eq!(d.free, s2);
        assert!(d.certify(&p1s1, &tau).unwrap());
    }

    #[test]
    fn combinations_are_lexicographic() {
        assert_eq!(combinations(&[1, 2, 3], 2), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(combinations(&[1], 0), vec![Vec::<usize>::new()]);
        assert!(combinations(&[1], 2).is_empty());
    }
}
