//! Strategies and property bodies shared by `properties` and `acceptance`.

use std::sync::Arc;

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;
use taulab::catalog;
use taulab::homological::{ext_dim, projective_resolution};
use taulab::linalg::{kernel_basis, solve, Subspace};
use taulab::rep::{direct_sum, direct_sum_of, hom_dim};
use taulab::ring::{decompose, endomorphism_algebra, is_indecomposable, is_isomorphic, StructureConstantAlgebra};
use taulab::{Algebra, Matrix, Representation};

pub fn matrix(p: u32) -> impl Strategy<Value = Matrix> {
    (1usize..6, 1usize..6).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(0..p, r * c).prop_map(move |v| Matrix::from_vec(p, r, c, v))
    })
}

/// Random module over `alg` with each vertex of dimension at most `max`;
/// tuples violating the relations are discarded.
pub fn module(alg: Arc<Algebra>, max: usize) -> impl Strategy<Value = Representation> {
    let n = alg.vertex_count();
    proptest::collection::vec(0..=max, n).prop_flat_map(move |dims| {
        let alg = alg.clone();
        let p = alg.prime();
        let shapes: Vec<(usize, usize)> =
            alg.quiver().arrows().iter().map(|a| (dims[a.target], dims[a.source])).collect();
        let len: usize = shapes.iter().map(|(r, c)| r * c).sum();
        proptest::collection::vec(0..p, len).prop_filter_map("relations", move |entries| {
            let mut at = 0;
            let maps = shapes
                .iter()
                .map(|&(r, c)| {
                    let m = Matrix::from_vec(p, r, c, entries[at..at + r * c].to_vec());
                    at += r * c;
                    m
                })
                .collect();
            Representation::new(alg.clone(), dims.clone(), maps).ok()
        })
    })
}

pub fn a3() -> Arc<Algebra> {
    catalog::shared(catalog::linear(3, 3))
}

pub fn zero_rel() -> Arc<Algebra> {
    catalog::shared(catalog::linear_radical_square_zero(3, 2))
}

pub fn cyclic() -> Arc<Algebra> {
    catalog::shared(catalog::cyclic_radical_square_zero(3, 2))
}

fn span_power(alg: &StructureConstantAlgebra, r: &Subspace, k: usize) -> Subspace {
    let mut acc = r.clone();
    for _ in 1..k {
        let mut vs = Vec::new();
        for x in acc.basis_vectors() {
            for y in r.basis_vectors() {
                vs.push(alg.multiply(&x, &y));
            }
        }
        acc = Subspace::from_vectors(alg.prime(), alg.dim(), &vs);
    }
    acc
}

pub fn rank_nullity(m: &Matrix) -> Result<(), TestCaseError> {
    prop_assert_eq!(m.rank() + kernel_basis(m).dim(), m.cols());
    prop_assert_eq!(m.rank(), m.transpose().rank());
    Ok(())
}

pub fn solve_consistent(m: &Matrix, seed: &[u32]) -> Result<(), TestCaseError> {
    let b = m.mul_vec(&seed[..m.cols()]);
    let y = solve(m, &b).unwrap().expect("consistent");
    prop_assert_eq!(m.mul_vec(&y), b);
    Ok(())
}

pub fn subspace_dimensions(a: &Matrix, b: &Matrix) -> Result<(), TestCaseError> {
    if a.cols() != b.cols() {
        return Ok(());
    }
    let (u, w) = (a.row_space(), b.row_space());
    prop_assert_eq!(u.sum(&w).unwrap().dim() + u.intersection(&w).unwrap().dim(), u.dim() + w.dim());
    Ok(())
}

pub fn decomposition_reconstructs(m: &Representation) -> Result<(), TestCaseError> {
    let parts = decompose(m).unwrap();
    let total: usize = parts.iter().map(|x| x.total_dim()).sum();
    prop_assert_eq!(total, m.total_dim());
    for x in &parts {
        prop_assert!(is_indecomposable(x).unwrap());
    }
    let rebuilt = direct_sum_of(m.algebra(), &parts).unwrap().module;
    prop_assert!(is_isomorphic(&rebuilt, m).unwrap());
    Ok(())
}

pub fn isomorphism_equivalence(m: &Representation, n: &Representation) -> Result<(), TestCaseError> {
    prop_assert!(is_isomorphic(m, m).unwrap());
    prop_assert_eq!(is_isomorphic(m, n).unwrap(), is_isomorphic(n, m).unwrap());
    let mn = direct_sum(m, n).unwrap();
    let nm = direct_sum(n, m).unwrap();
    prop_assert!(is_isomorphic(&mn, &nm).unwrap());
    Ok(())
}

pub fn radical_certifies_itself(m: &Representation) -> Result<(), TestCaseError> {
    if m.is_zero() {
        return Ok(());
    }
    let end = endomorphism_algebra(m).unwrap();
    let rad = end.jacobson_radical().unwrap();
    prop_assert!(end.is_two_sided_ideal(&rad.radical));
    prop_assert!(span_power(&end, &rad.radical, rad.nilpotency_index).is_zero());
    let (quotient, _, _, same) = end.semisimple_quotient().unwrap();
    prop_assert_eq!(same.radical, rad.radical.clone());
    prop_assert_eq!(quotient.dim(), end.dim() - rad.radical.dim());
    prop_assert!(quotient.jacobson_radical().unwrap().radical.is_zero());
    Ok(())
}

pub fn hom_ext_additive(m: &Representation, n: &Representation, x: &Representation) -> Result<(), TestCaseError> {
    let mn = direct_sum(m, n).unwrap();
    prop_assert_eq!(hom_dim(&mn, x).unwrap(), hom_dim(m, x).unwrap() + hom_dim(n, x).unwrap());
    prop_assert_eq!(hom_dim(x, &mn).unwrap(), hom_dim(x, m).unwrap() + hom_dim(x, n).unwrap());
    for i in 1..=2 {
        prop_assert_eq!(ext_dim(&mn, x, i).unwrap(), ext_dim(m, x, i).unwrap() + ext_dim(n, x, i).unwrap());
        prop_assert_eq!(ext_dim(x, &mn, i).unwrap(), ext_dim(x, m, i).unwrap() + ext_dim(x, n, i).unwrap());
    }
    Ok(())
}

pub fn dimension_shifting(m: &Representation, n: &Representation) -> Result<(), TestCaseError> {
    if m.is_zero() {
        return Ok(());
    }
    let res = projective_resolution(m, 4);
    prop_assert!(res.is_exact());
    prop_assert!(res.is_minimal());
    let omega = res.syzygy(1).unwrap().clone();
    for i in 1..=2 {
        prop_assert_eq!(res.ext_dim(n, i + 1).unwrap(), ext_dim(&omega, n, i).unwrap());
    }
    Ok(())
}
