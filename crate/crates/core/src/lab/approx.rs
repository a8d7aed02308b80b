//! Minimal right `add T`-approximations and `add T`-resolutions.

use crate::error::Result;
use crate::linalg::Subspace;
use crate::rep::{direct_sum_of, fac_membership, hom_basis, hom_dim, hom_space, kernel, Morphism, Representation};
use crate::ring::{decompose, indecomposables_isomorphic};

/// Pairwise non-isomorphic indecomposable summands of `t`, in decomposition order.
pub fn summand_types(t: &Representation) -> Result<Vec<Representation>> {
    let mut types: Vec<Representation> = Vec::new();
    for x in decompose(t)? {
        let mut seen = false;
        for y in &types {
            if indecomposables_isomorphic(&x, y)? {
                seen = true;
                break;
            }
        }
        if !seen {
            types.push(x);
        }
    }
    Ok(types)
}

/// `f: T_0 -> x` with `T_0 = ⊕ types[copies[c]]`.
#[derive(Clone, Debug)]
pub struct AddApproximation {
    pub target: Representation,
    pub types: Vec<Representation>,
    pub copies: Vec<usize>,
    pub source: Representation,
    pub map: Morphism,
    /// No single summand copy can be dropped without losing the approximation property.
    pub minimal: bool,
}

fn assemble(
    target: &Representation,
    types: &[Representation],
    family: &[(usize, Morphism)],
) -> Result<(Representation, Morphism)> {
    let parts: Vec<Representation> = family.iter().map(|(j, _)| types[*j].clone()).collect();
    let sum = direct_sum_of(target.algebra(), &parts)?;
    let mut map = Morphism::zero(&sum.module, target);
    for ((_, f), proj) in family.iter().zip(&sum.projections) {
        map = map.add(&f.compose(proj)?);
    }
    Ok((sum.module, map))
}

/// Every map from every type into the target factors through `map`.
fn is_approximation(types: &[Representation], source: &Representation, map: &Morphism) -> Result<bool> {
    let target = map.target();
    for t in types {
        let need = hom_dim(t, target)?;
        if need == 0 {
            continue;
        }
        let images: Vec<Vec<u32>> =
            hom_basis(t, source)?.iter().map(|g| map.compose(g).map(|h| h.flatten())).collect::<Result<_>>()?;
        let width = hom_space(t, target)?.ambient_dim();
        if Subspace::from_vectors(target.prime(), width, &images).dim() != need {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Greedy pruning of the universal map `⊕_j T_j^{dim Hom(T_j, x)} -> x`.
///
/// The factoring property only gets harder as copies are removed, so one pass
/// that drops every removable copy leaves no removable copy behind.
pub fn minimal_right_add_approximation_from_types(
    types: &[Representation],
    x: &Representation,
) -> Result<AddApproximation> {
    let mut family: Vec<(usize, Morphism)> = Vec::new();
    for (j, t) in types.iter().enumerate() {
        for f in hom_basis(t, x)? {
            family.push((j, f));
        }
    }
    let mut c = 0;
    while c < family.len() {
        let mut trial = family.clone();
        trial.remove(c);
        let (source, map) = assemble(x, types, &trial)?;
        if is_approximation(types, &source, &map)? {
            family = trial;
        } else {
            c += 1;
        }
    }
    let (source, map) = assemble(x, types, &family)?;
    debug_assert!(is_approximation(types, &source, &map)?);
    Ok(AddApproximation {
        target: x.clone(),
        types: types.to_vec(),
        copies: family.iter().map(|(j, _)| *j).collect(),
        source,
        map,
        minimal: true,
    })
}

pub fn minimal_right_add_approximation(t: &Representation, x: &Representation) -> Result<AddApproximation> {
    minimal_right_add_approximation_from_types(&summand_types(t)?, x)
}

impl AddApproximation {
    pub fn kernel(&self) -> Representation {
        kernel(&self.map).0
    }

    /// Re-checks the approximation property and that no copy is removable.
    pub fn verify(&self) -> Result<bool> {
        if !is_approximation(&self.types, &self.source, &self.map)? {
            return Ok(false);
        }
        let comps = hom_basis_family(self)?;
        for c in 0..comps.len() {
            let mut trial = comps.clone();
            trial.remove(c);
            let (source, map) = assemble(&self.target, &self.types, &trial)?;
            if is_approximation(&self.types, &source, &map)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn hom_basis_family(a: &AddApproximation) -> Result<Vec<(usize, Morphism)>> {
    let parts: Vec<Representation> = a.copies.iter().map(|&j| a.types[j].clone()).collect();
    let sum = direct_sum_of(a.target.algebra(), &parts)?;
    a.copies.iter().zip(&sum.inclusions).map(|(&j, inc)| Ok((j, a.map.compose(inc)?))).collect()
}

/// `Hom(Y, τt) = 0` for `Y` the kernel of the minimal approximation of `x`.
pub fn approximation_kernel_check(t: &Representation, x: &Representation) -> Result<bool> {
    let tau_t = crate::homological::ar_translate(t);
    let approx = minimal_right_add_approximation(t, x)?;
    Ok(hom_dim(&approx.kernel(), &tau_t)? == 0)
}

#[derive(Clone, Debug)]
pub struct AddResolutionStep {
    pub approximation: AddApproximation,
    pub kernel: Representation,
    pub epi: bool,
    pub kernel_in_fac: bool,
}

/// `... -> T_1 -> T_0 -> m -> 0` by iterated minimal approximations.
#[derive(Clone, Debug)]
pub struct AddResolution {
    pub module: Representation,
    pub steps: Vec<AddResolutionStep>,
}

impl AddResolution {
    /// Every step is onto its target and has kernel in `Fac t`.
    pub fn certified(&self) -> bool {
        self.steps.iter().all(|s| s.epi && s.kernel_in_fac)
    }
}

pub fn add_t_resolution(t: &Representation, m: &Representation, length: usize) -> Result<AddResolution> {
    add_t_resolution_from_types(t, &summand_types(t)?, m, length)
}

pub fn add_t_resolution_from_types(
    t: &Representation,
    types: &[Representation],
    m: &Representation,
    length: usize,
) -> Result<AddResolution> {
    let mut steps = Vec::new();
    let mut current = m.clone();
    for _ in 0..length {
        if current.is_zero() {
            break;
        }
        let approximation = minimal_right_add_approximation_from_types(types, &current)?;
        let epi = approximation.map.is_surjective();
        let kernel = approximation.kernel();
        let kernel_in_fac = fac_membership(t, &kernel)?;
        current = kernel.clone();
        steps.push(AddResolutionStep { approximation, kernel, epi, kernel_in_fac });
    }
    Ok(AddResolution { module: m.clone(), steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::rep::{direct_sum, indecomposable_projectives, regular_module};
    use crate::ring::is_isomorphic;
    use std::sync::Arc;

    #[test]
    fn approximation_of_simple_by_projectives() {
        let a = Arc::new(catalog::linear(2, 2));
        let lam = regular_module(&a);
        let s1 = Representation::simple(&a, 0);
        let approx = minimal_right_add_approximation(&lam, &s1).unwrap();
        assert_eq!(approx.copies.len(), 1);
        assert!(approx.map.is_surjective());
        let ps = indecomposable_projectives(&a);
        assert!(is_isomorphic(&approx.source, &ps[0]).unwrap());
        assert!(is_isomorphic(&approx.kernel(), &ps[1]).unwrap());
        assert!(approx.verify().unwrap());
        assert!(approximation_kernel_check(&lam, &s1).unwrap());
    }

    #[test]
    fn approximation_edge_cases() {
        let a = Arc::new(catalog::linear(2, 2));
        let s1 = Representation::simple(&a, 0);
        let s2 = Representation::simple(&a, 1);
        let none = minimal_right_add_approximation(&s1, &s2).unwrap();
        assert!(none.source.is_zero());
        assert!(none.copies.is_empty());
        let same = minimal_right_add_approximation(&s1, &s1).unwrap();
        assert!(same.map.is_isomorphism());
    }

    #[test]
    fn redundant_copies_are_pruned() {
        let a = Arc::new(catalog::linear(3, 2));
        let lam = regular_module(&a);
        let ps = indecomposable_projectives(&a);
        // Hom(P_i, P_1) is spanned by maps that all factor through id_{P_1}.
        let approx = minimal_right_add_approximation(&lam, &ps[0]).unwrap();
        assert_eq!(approx.copies.len(), 1);
        assert!(approx.map.is_isomorphism());
    }

    #[test]
    fn add_resolutions() {
        let a = Arc::new(catalog::linear(2, 2));
        let ps = indecomposable_projectives(&a);
        let s1 = Representation::simple(&a, 0);
        let t = direct_sum(&ps[0], &s1).unwrap();
        let res = add_t_resolution(&t, &s1, 4).unwrap();
        assert_eq!(res.steps.len(), 1);
        assert!(res.steps[0].kernel.is_zero());
        assert!(res.certified());
        let z = Arc::new(catalog::linear_radical_square_zero(3, 2));
        let lam = regular_module(&z);
        let res = add_t_resolution(&lam, &Representation::simple(&z, 0), 5).unwrap();
        assert_eq!(res.steps.len(), 3);
        assert!(res.certified());
    }
}
