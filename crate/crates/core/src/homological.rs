//! Minimal projective resolutions, Ext, projective dimension, the transpose and
//! the Auslander–Reiten translate.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, Matrix, Subspace};
use crate::rep::{
    cokernel, dual, hom_basis, hom_dim, hom_space, injective_envelope, kernel, projective_cover, radical_subspaces,
    same_algebra, Morphism, ProjectiveSum, Representation,
};

/// Default for the "for all i" searches and for resolution lengths.
pub const DEFAULT_EXT_BOUND: usize = 12;

/// `P_1 --d1--> P_0 --epi--> M -> 0` with both terms projective covers.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub p1: ProjectiveSum,
    pub p0: ProjectiveSum,
    pub d1: Morphism,
    pub epi: Morphism,
}

pub fn minimal_projective_presentation(m: &Representation) -> Presentation {
    let (p0, epi) = projective_cover(m);
    let (k, inc) = kernel(&epi);
    let (p1, cover) = projective_cover(&k);
    let d1 = inc.compose(&cover).expect("composable");
    Presentation { p1, p0, d1, epi }
}

/// Projective dimension: exact, or a lower bound when the search ran out.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "value")]
pub enum PdResult {
    Exact(usize),
    AtLeast(usize),
}

impl PdResult {
    pub fn exact(self) -> Option<usize> {
        match self {
            PdResult::Exact(d) => Some(d),
            PdResult::AtLeast(_) => None,
        }
    }

    /// `Some(true)` / `Some(false)` when decided, `None` when unknown at this bound.
    pub fn at_most(self, bound: usize) -> Option<bool> {
        match self {
            PdResult::Exact(d) => Some(d <= bound),
            PdResult::AtLeast(l) if l > bound => Some(false),
            PdResult::AtLeast(_) => None,
        }
    }
}

impl fmt::Display for PdResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PdResult::Exact(d) => write!(f, "{d}"),
            PdResult::AtLeast(l) => write!(f, ">= {l}"),
        }
    }
}

/// A prefix `P_L -> ... -> P_0 -> M -> 0` of the minimal projective resolution.
///
/// `differentials[0]` is the cover `P_0 -> M` and `differentials[i]` maps `P_i -> P_{i-1}`.
/// `syzygies[i]` is `Ω^(i+1) M = ker differentials[i]`, with its inclusion.
#[derive(Clone, Debug)]
pub struct ProjectiveResolution {
    module: Representation,
    terms: Vec<ProjectiveSum>,
    differentials: Vec<Morphism>,
    syzygies: Vec<(Representation, Morphism)>,
    complete: bool,
}

/// Minimal resolution computed up to `P_len`.
pub fn projective_resolution(m: &Representation, len: usize) -> ProjectiveResolution {
    let mut terms = Vec::new();
    let mut differentials = Vec::new();
    let mut syzygies: Vec<(Representation, Morphism)> = Vec::new();
    let mut omega = m.clone();
    for _ in 0..=len {
        if omega.is_zero() {
            break;
        }
        let (p, eps) = projective_cover(&omega);
        let d = match syzygies.last() {
            None => eps,
            Some((_, inc)) => inc.compose(&eps).expect("composable"),
        };
        let (k, inc) = kernel(&d);
        omega = k.clone();
        terms.push(p);
        differentials.push(d);
        syzygies.push((k, inc));
    }
    let complete = omega.is_zero();
    ProjectiveResolution { module: m.clone(), terms, differentials, syzygies, complete }
}

impl ProjectiveResolution {
    pub fn module(&self) -> &Representation {
        &self.module
    }

    pub fn terms(&self) -> &[ProjectiveSum] {
        &self.terms
    }

    pub fn differentials(&self) -> &[Morphism] {
        &self.differentials
    }

    /// `Ω^i M` for `1 <= i <= computed length + 1`.
    pub fn syzygy(&self, i: usize) -> Option<&Representation> {
        match i {
            0 => Some(&self.module),
            _ => self.syzygies.get(i - 1).map(|(k, _)| k),
        }
    }

    /// True once a syzygy vanished: every later term is zero.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Number of computed degrees; `P_i` is known for `i < known_degrees()`, or for all `i` when complete.
    pub fn known_degrees(&self) -> usize {
        self.terms.len()
    }

    pub fn projective_dimension(&self) -> PdResult {
        if self.complete {
            PdResult::Exact(self.terms.len().saturating_sub(1))
        } else {
            PdResult::AtLeast(self.terms.len())
        }
    }

    /// `P_i` tops, or `None` if the degree lies beyond the computed prefix.
    pub fn term_tops(&self, i: usize) -> Option<&[usize]> {
        match self.terms.get(i) {
            Some(t) => Some(t.tops()),
            None if self.complete => Some(&[]),
            None => None,
        }
    }

    /// Composites vanish, `P_0 -> M` is onto, images equal kernels and the last
    /// computed syzygy inclusion is really the kernel.
    pub fn is_exact(&self) -> bool {
        if self.terms.is_empty() {
            return self.module.is_zero();
        }
        if !self.differentials[0].is_surjective() {
            return false;
        }
        for i in 1..self.differentials.len() {
            let (d, prev) = (&self.differentials[i], &self.differentials[i - 1]);
            if !prev.compose(d).map(|c| c.is_zero()).unwrap_or(false) {
                return false;
            }
            let equal =
                (0..d.components().len()).all(|v| d.component(v).column_space() == kernel_basis(prev.component(v)));
            if !equal {
                return false;
            }
        }
        let (last_k, last_inc) = self.syzygies.last().expect("one syzygy per term");
        let last_d = self.differentials.last().expect("nonempty");
        let kernel_ok = (0..last_d.components().len())
            .all(|v| last_inc.component(v).column_space() == kernel_basis(last_d.component(v)));
        kernel_ok && (!self.complete || last_k.is_zero())
    }

    /// Every differential beyond the cover lands in the radical of its target.
    pub fn is_minimal(&self) -> bool {
        (1..self.differentials.len()).all(|i| {
            let d = &self.differentials[i];
            let rad = radical_subspaces(d.target());
            (0..rad.len()).all(|v| d.component(v).column_space().is_subspace_of(&rad[v]).unwrap_or(false))
        })
    }

    /// Matrix of `Hom(P_i, N) -> Hom(P_{i+1}, N)` in generator-image coordinates.
    fn hom_differential(&self, i: usize, n: &Representation) -> Matrix {
        let p = n.prime();
        let src = &self.terms[i];
        let row_dims: Vec<usize> = match self.terms.get(i + 1) {
            Some(next) => next.tops().iter().map(|&u| n.dim_at(u)).collect(),
            None => Vec::new(),
        };
        let col_dims: Vec<usize> = src.tops().iter().map(|&v| n.dim_at(v)).collect();
        let rows: usize = row_dims.iter().sum();
        let cols: usize = col_dims.iter().sum();
        let mut out = Matrix::zeros(p, rows, cols);
        let Some(next) = self.terms.get(i + 1) else {
            return out;
        };
        let d = &self.differentials[i + 1];
        let col_off: Vec<usize> = offsets(&col_dims);
        let row_off: Vec<usize> = offsets(&row_dims);
        for (k, &u) in next.tops().iter().enumerate() {
            let image = d.component(u).column(next.generator(k));
            for (pos, &(j, b)) in src.coordinates_at(u).iter().enumerate() {
                let c = image[pos];
                if c == 0 {
                    continue;
                }
                let block = n.basis_action(b).scale(c);
                let current = out.block(row_off[k], col_off[j], row_dims[k], col_dims[j]);
                out.set_block(row_off[k], col_off[j], &current.add(&block));
            }
        }
        out
    }

    /// `dim Ext^i(M, N)`; fails if degree `i + 1` of an unfinished resolution is unknown.
    pub fn ext_dim(&self, n: &Representation, i: usize) -> Result<usize> {
        if !same_algebra(self.module.algebra(), n.algebra()) {
            return Err(Error::AlgebraMismatch);
        }
        if i == 0 {
            return hom_dim(&self.module, n);
        }
        if i >= self.terms.len() {
            if self.complete {
                return Ok(0);
            }
            return Err(Error::UnknownBeyondPrefix { degree: i, prefix: self.terms.len() });
        }
        if i + 1 >= self.terms.len() && !self.complete {
            return Err(Error::UnknownBeyondPrefix { degree: i, prefix: self.terms.len() });
        }
        let outgoing = self.hom_differential(i, n);
        let incoming = self.hom_differential(i - 1, n);
        Ok(outgoing.cols() - outgoing.rank() - incoming.rank())
    }
}

fn offsets(dims: &[usize]) -> Vec<usize> {
    let mut acc = 0;
    dims.iter()
        .map(|&d| {
            let o = acc;
            acc += d;
            o
        })
        .collect()
}

/// `pd m`, exact if the resolution terminates by `P_{l_max}`.
pub fn projective_dimension(m: &Representation, l_max: usize) -> PdResult {
    projective_resolution(m, l_max).projective_dimension()
}

/// `dim Ext^i(m, n)` from a minimal resolution of length `i + 1`.
pub fn ext_dim(m: &Representation, n: &Representation, i: usize) -> Result<usize> {
    projective_resolution(m, i + 1).ext_dim(n, i)
}

/// The transpose `Tr m`, a module over the opposite algebra.
pub fn transpose(m: &Representation) -> Representation {
    let pres = minimal_projective_presentation(m);
    let op = m.algebra().opposite_arc();
    let q0 = ProjectiveSum::new(&op, pres.p0.tops().to_vec());
    let q1 = ProjectiveSum::new(&op, pres.p1.tops().to_vec());
    // Generator j of Hom(P_0, Λ) goes to Σ_k Σ_b c_(j,b) b, where d1(gen_k) = Σ c_(j,b) gen_j b.
    let mut images: Vec<Vec<u32>> = pres.p0.tops().iter().map(|&v| vec![0u32; q1.module().dim_at(v)]).collect();
    for (k, &u) in pres.p1.tops().iter().enumerate() {
        let image = pres.d1.component(u).column(pres.p1.generator(k));
        for (pos, &(j, b)) in pres.p0.coordinates_at(u).iter().enumerate() {
            if image[pos] == 0 {
                continue;
            }
            let v = pres.p0.tops()[j];
            let at = q1.coordinate(v, k, b).expect("reversed path lies in the opposite projective");
            images[j][at] = image[pos];
        }
    }
    let map = q0.morphism_to(q1.module(), &images);
    cokernel(&map).0
}

/// `τ m = D Tr m`.
pub fn ar_translate(m: &Representation) -> Representation {
    dual(&transpose(m))
}

/// `dim Hom(n, x)` modulo maps factoring through an injective module.
pub fn stable_hom_dim(n: &Representation, x: &Representation) -> Result<usize> {
    let total = hom_dim(n, x)?;
    if total == 0 {
        return Ok(0);
    }
    let (envelope, iota) = injective_envelope(n);
    let through: Vec<Vec<u32>> =
        hom_basis(&envelope, x)?.iter().map(|g| g.compose(&iota).map(|f| f.flatten())).collect::<Result<_>>()?;
    let width = hom_space(n, x)?.ambient_dim();
    Ok(total - Subspace::from_vectors(n.prime(), width, &through).dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::rep::{direct_sum, indecomposable_injectives, indecomposable_projectives, regular_module};
    use crate::ring::is_isomorphic;
    use std::sync::Arc;

    fn a2() -> Arc<crate::algebra::Algebra> {
        Arc::new(catalog::linear(2, 2))
    }

    fn zero_rel() -> Arc<crate::algebra::Algebra> {
        Arc::new(catalog::linear_radical_square_zero(3, 2))
    }

    #[test]
    fn presentations() {
        let a = a2();
        let ps = indecomposable_projectives(&a);
        let pres = minimal_projective_presentation(&ps[0]);
        assert!(pres.p1.is_zero());
        assert_eq!(pres.p0.tops(), &[0]);
        let s1 = Representation::simple(&a, 0);
        let pres = minimal_projective_presentation(&s1);
        assert_eq!(pres.p0.tops(), &[0]);
        assert_eq!(pres.p1.tops(), &[1]);
        let z = zero_rel();
        let pres = minimal_projective_presentation(&Representation::simple(&z, 0));
        assert_eq!((pres.p0.tops(), pres.p1.tops()), (&[0usize][..], &[1usize][..]));
    }

    #[test]
    fn projective_dimensions() {
        let a = a2();
        assert_eq!(projective_dimension(&Representation::simple(&a, 0), 4), PdResult::Exact(1));
        let z = zero_rel();
        for p in indecomposable_projectives(&z) {
            assert_eq!(projective_dimension(&p, 4), PdResult::Exact(0));
        }
        let s1 = Representation::simple(&z, 0);
        assert_eq!(projective_dimension(&s1, 4), PdResult::Exact(2));
        assert_eq!(projective_dimension(&s1, 1), PdResult::AtLeast(2));
        let res = projective_resolution(&s1, 4);
        assert_eq!(res.terms().iter().map(|t| t.tops().to_vec()).collect::<Vec<_>>(), vec![vec![0], vec![1], vec![2]]);
        assert!(res.is_exact());
        assert!(res.is_minimal());
    }

    #[test]
    fn cyclic_nakayama_simples_have_infinite_pd() {
        let c = Arc::new(catalog::cyclic_radical_square_zero(3, 2));
        let s = Representation::simple(&c, 0);
        assert_eq!(projective_dimension(&s, 6), PdResult::AtLeast(7));
        let res = projective_resolution(&s, 6);
        assert!(res.is_exact());
        assert!(matches!(res.ext_dim(&s, 9), Err(Error::UnknownBeyondPrefix { .. })));
    }

    #[test]
    fn ext_examples() {
        let a = a2();
        let s1 = Representation::simple(&a, 0);
        let s2 = Representation::simple(&a, 1);
        assert_eq!(ext_dim(&s1, &s2, 1).unwrap(), 1);
        assert_eq!(ext_dim(&s2, &s1, 1).unwrap(), 0);
        assert_eq!(ext_dim(&s1, &s1, 0).unwrap(), 1);
        for p in indecomposable_projectives(&a) {
            for i in 1..4 {
                assert_eq!(ext_dim(&p, &s2, i).unwrap(), 0);
            }
        }
        let z = zero_rel();
        let t = Representation::simple(&z, 0);
        assert_eq!(ext_dim(&t, &t, 1).unwrap(), 0);
        assert_eq!(ext_dim(&t, &t, 2).unwrap(), 0);
        assert_eq!(ext_dim(&t, &Representation::simple(&z, 2), 2).unwrap(), 1);
    }

    #[test]
    fn ext_is_additive() {
        let z = zero_rel();
        let s: Vec<Representation> = (0..3).map(|v| Representation::simple(&z, v)).collect();
        let sum = direct_sum(&s[0], &s[1]).unwrap();
        for n in &s {
            for i in 0..3 {
                let whole = ext_dim(&sum, n, i).unwrap();
                assert_eq!(whole, ext_dim(&s[0], n, i).unwrap() + ext_dim(&s[1], n, i).unwrap());
            }
        }
    }

    #[test]
    fn transpose_and_translate() {
        let a = a2();
        let ps = indecomposable_projectives(&a);
        for p in &ps {
            assert!(transpose(p).is_zero());
            assert!(ar_translate(p).is_zero());
        }
        let s1 = Representation::simple(&a, 0);
        let t = transpose(&s1);
        assert!(Arc::ptr_eq(t.algebra(), &a.opposite_arc()));
        let tau = ar_translate(&s1);
        assert!(Arc::ptr_eq(tau.algebra(), &a));
        assert!(is_isomorphic(&tau, &Representation::simple(&a, 1)).unwrap());
    }

    #[test]
    fn translate_of_s1_over_zero_relation_algebra() {
        let z = zero_rel();
        let s1 = Representation::simple(&z, 0);
        let tau = ar_translate(&s1);
        assert!(!tau.is_zero());
        assert!(is_isomorphic(&tau, &Representation::simple(&z, 1)).unwrap());
        assert_eq!(hom_dim(&s1, &tau).unwrap(), 0);
    }

    #[test]
    fn stable_hom_examples() {
        let a = a2();
        let s2 = Representation::simple(&a, 1);
        assert_eq!(stable_hom_dim(&s2, &s2).unwrap(), 1);
        for i in indecomposable_injectives(&a) {
            assert_eq!(stable_hom_dim(&i, &regular_module(&a)).unwrap(), 0);
        }
        assert_eq!(stable_hom_dim(&Representation::zero(&a), &s2).unwrap(), 0);
    }

    #[test]
    fn dimension_shifting_on_syzygies() {
        let z = zero_rel();
        let m = Representation::simple(&z, 0);
        let res = projective_resolution(&m, 4);
        let k = res.syzygy(1).unwrap().clone();
        for n in (0..3).map(|v| Representation::simple(&z, v)) {
            for i in 1..3 {
                assert_eq!(ext_dim(&m, &n, i + 1).unwrap(), ext_dim(&k, &n, i).unwrap());
            }
        }
    }
}
