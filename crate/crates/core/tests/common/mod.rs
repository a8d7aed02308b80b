//! Brute-force oracles shared by the integration and acceptance tests.
//!
//! Nothing here goes through the ring-structure or enumeration code: Hom spaces
//! are found by trying every tuple of component matrices, indecomposability by
//! listing idempotents, and τ-rigidity through `Ext^1(M, Fac M) = 0`.

#![allow(dead_code)]

pub mod props;

use std::sync::Arc;

use taulab::homological::ext_dim;
use taulab::rep::{direct_sum_of, fac_membership};
use taulab::{Algebra, Matrix, Representation};

/// Every vector in `F_p^len`, in counting order.
pub fn all_vectors(p: u32, len: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                (0..p).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// All module maps `m -> n`, as per-vertex component matrices.
pub fn brute_hom(m: &Representation, n: &Representation) -> Vec<Vec<Matrix>> {
    let p = m.prime();
    let alg = m.algebra();
    let shapes: Vec<(usize, usize)> = (0..alg.vertex_count()).map(|v| (n.dim_at(v), m.dim_at(v))).collect();
    let len: usize = shapes.iter().map(|(r, c)| r * c).sum();
    let mut out = Vec::new();
    for entries in all_vectors(p, len) {
        let mut at = 0;
        let comps: Vec<Matrix> = shapes
            .iter()
            .map(|&(r, c)| {
                let f = Matrix::from_vec(p, r, c, entries[at..at + r * c].to_vec());
                at += r * c;
                f
            })
            .collect();
        let commutes = alg
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .all(|(a, arrow)| n.map(a).mul(&comps[arrow.source]) == comps[arrow.target].mul(m.map(a)));
        if commutes {
            out.push(comps);
        }
    }
    out
}

fn compose(f: &[Matrix], g: &[Matrix]) -> Vec<Matrix> {
    f.iter().zip(g).map(|(a, b)| a.mul(b)).collect()
}

/// Nonzero with `0` and `1` the only idempotent endomorphisms.
pub fn brute_is_indecomposable(m: &Representation) -> bool {
    if m.is_zero() {
        return false;
    }
    brute_hom(m, m).iter().all(|e| {
        let e2 = compose(e, e);
        e2 != *e
            || e.iter().all(|c| c.is_zero())
            || e.iter().enumerate().all(|(v, c)| *c == Matrix::identity(m.prime(), m.dim_at(v)))
    })
}

pub fn brute_isomorphic(m: &Representation, n: &Representation) -> bool {
    m.dim_vector() == n.dim_vector()
        && brute_hom(m, n).iter().any(|f| f.iter().all(|c| c.rows() == 0 || c.rank() == c.rows()))
}

/// Indecomposables up to isomorphism with total dimension at most `bound`,
/// by trying every arrow-matrix tuple for every dimension vector.
pub fn brute_indecomposables(alg: &Arc<Algebra>, bound: usize) -> Vec<Representation> {
    let n = alg.vertex_count();
    let p = alg.prime();
    let mut found: Vec<Representation> = Vec::new();
    for dims in all_vectors(bound as u32 + 1, n) {
        let total: u32 = dims.iter().sum();
        if total == 0 || total as usize > bound {
            continue;
        }
        let dims: Vec<usize> = dims.iter().map(|&d| d as usize).collect();
        let shapes: Vec<(usize, usize)> =
            alg.quiver().arrows().iter().map(|a| (dims[a.target], dims[a.source])).collect();
        let len: usize = shapes.iter().map(|(r, c)| r * c).sum();
        for entries in all_vectors(p, len) {
            let mut at = 0;
            let maps: Vec<Matrix> = shapes
                .iter()
                .map(|&(r, c)| {
                    let f = Matrix::from_vec(p, r, c, entries[at..at + r * c].to_vec());
                    at += r * c;
                    f
                })
                .collect();
            let Ok(m) = Representation::new(alg.clone(), dims.clone(), maps) else { continue };
            if brute_is_indecomposable(&m) && !found.iter().any(|f| brute_isomorphic(f, &m)) {
                found.push(m);
            }
        }
    }
    found
}

/// τ-rigidity through `Ext^1(M, X) = 0` for every listed indecomposable `X` in `Fac M`.
pub fn rigid_via_ext(m: &Representation, indecs: &[Representation]) -> bool {
    indecs.iter().all(|x| !fac_membership(m, x).unwrap() || ext_dim(m, x, 1).unwrap() == 0)
}

/// Support τ-tilting pairs `(M, P)`, `M` a multiplicity-free sum of listed
/// indecomposables and `P = ⊕_{v in S} P_v`: `M` τ-rigid, `Hom(P, M) = 0`
/// (i.e. `M` vanishes on `S`) and `|M| + |S| = n`. Returned as `(summands, S)`.
pub fn brute_support_pairs(alg: &Arc<Algebra>, indecs: &[Representation]) -> Vec<(Vec<usize>, Vec<usize>)> {
    let n = alg.vertex_count();
    let mut out = Vec::new();
    for mask in 0u32..(1 << indecs.len()) {
        let summands: Vec<usize> = (0..indecs.len()).filter(|&i| mask >> i & 1 == 1).collect();
        if summands.len() > n {
            continue;
        }
        let parts: Vec<Representation> = summands.iter().map(|&i| indecs[i].clone()).collect();
        let m = direct_sum_of(alg, &parts).unwrap().module;
        if !rigid_via_ext(&m, indecs) {
            continue;
        }
        let zeros: Vec<usize> = (0..n).filter(|&v| m.dim_at(v) == 0).collect();
        for smask in 0u32..(1 << zeros.len()) {
            let s: Vec<usize> = (0..zeros.len()).filter(|&i| smask >> i & 1 == 1).map(|i| zeros[i]).collect();
            if summands.len() + s.len() == n {
                out.push((summands.clone(), s));
            }
        }
    }
    out
}

pub fn test_algebras() -> Vec<(&'static str, Arc<Algebra>)> {
    use taulab::catalog;
    vec![
        ("a2", catalog::shared(catalog::linear(2, 2))),
        ("a3", catalog::shared(catalog::linear(3, 2))),
        ("a3_zero_relation", catalog::shared(catalog::linear_radical_square_zero(3, 2))),
        ("nakayama_cyclic3", catalog::shared(catalog::cyclic_radical_square_zero(3, 2))),
    ]
}

pub fn data_path(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}
