//! Brute-force enumeration of indecomposables and of support τ-tilting modules.

use std::sync::Arc;

use rayon::prelude::*;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::homological::ar_translate;
use crate::linalg::Matrix;
use crate::rep::{direct_sum_of, hom_dim, Representation};
use crate::ring::{indecomposables_isomorphic, is_indecomposable};

/// Upper limit on arrow-matrix tuples tried for a single dimension vector.
pub const TUPLE_LIMIT: u128 = 1 << 22;

/// Dimension vectors with total dimension in `1..=bound`, in lexicographic order.
pub fn dimension_vectors(n: usize, bound: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, left: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() == n {
            if acc.iter().any(|&d| d > 0) {
                out.push(acc.clone());
            }
            return;
        }
        for d in 0..=left {
            acc.push(d);
            go(n, left - d, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(n, bound, &mut Vec::new(), &mut out);
    out
}

/// An indecomposable has connected support.
fn support_is_connected(alg: &Algebra, dims: &[usize]) -> bool {
    let support: Vec<usize> = (0..dims.len()).filter(|&v| dims[v] > 0).collect();
    let Some(&first) = support.first() else {
        return false;
    };
    let mut seen = vec![false; dims.len()];
    let mut stack = vec![first];
    seen[first] = true;
    while let Some(v) = stack.pop() {
        for a in alg.quiver().arrows() {
            for (x, y) in [(a.source, a.target), (a.target, a.source)] {
                if x == v && dims[y] > 0 && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    support.iter().all(|&v| seen[v])
}

/// Indecomposables with a fixed dimension vector, one per isomorphism class,
/// each represented by the first matrix tuple (in counting order) of its class.
pub fn indecomposables_with_dims(alg: &Arc<Algebra>, dims: &[usize]) -> Result<Vec<Representation>> {
    if !support_is_connected(alg, dims) {
        return Ok(Vec::new());
    }
    let p = alg.prime();
    let shapes: Vec<(usize, usize)> = alg.quiver().arrows().iter().map(|a| (dims[a.target], dims[a.source])).collect();
    let entries: usize = shapes.iter().map(|(r, c)| r * c).sum();
    let tuples = (p as u128).checked_pow(entries as u32).unwrap_or(u128::MAX);
    if tuples > TUPLE_LIMIT {
        return Err(Error::SearchTooLarge(format!(
            "dimension vector {dims:?} needs {p}^{entries} arrow-matrix tuples; lower the dimension bound"
        )));
    }
    let mut found: Vec<Representation> = Vec::new();
    let mut digits = vec![0u32; entries];
    loop {
        let mut at = 0;
        let maps: Vec<Matrix> = shapes
            .iter()
            .map(|&(r, c)| {
                let m = Matrix::from_vec(p, r, c, digits[at..at + r * c].to_vec());
                at += r * c;
                m
            })
            .collect();
        if let Ok(m) = Representation::new(alg.clone(), dims.to_vec(), maps) {
            if is_indecomposable(&m)? {
                let mut new = true;
                for f in &found {
                    if indecomposables_isomorphic(f, &m)? {
                        new = false;
                        break;
                    }
                }
                if new {
                    found.push(m);
                }
            }
        }
        // Last entry varies slowest so that the counting order is lexicographic.
        let mut i = entries;
        loop {
            if i == 0 {
                return Ok(found);
            }
            i -= 1;
            if digits[i] + 1 < p {
                digits[i] += 1;
                for d in digits.iter_mut().skip(i + 1) {
                    *d = 0;
                }
                break;
            }
        }
    }
}

/// All indecomposables of total dimension at most `dim_bound`, up to isomorphism,
/// ordered by dimension vector and then by the matrix-tuple key.
pub fn enumerate_indecomposables(alg: &Arc<Algebra>, dim_bound: usize) -> Result<Vec<Representation>> {
    let vectors = dimension_vectors(alg.vertex_count(), dim_bound);
    let per_vector: Vec<Vec<Representation>> =
        vectors.par_iter().map(|dims| indecomposables_with_dims(alg, dims)).collect::<Result<_>>()?;
    Ok(per_vector.into_iter().flatten().collect())
}

/// A support τ-tilting module found by [`enumerate_support_tau_tilting`].
#[derive(Clone, Debug)]
pub struct SupportTauTiltingModule {
    /// Indices into the indecomposable list; empty for the zero module.
    pub summands: Vec<usize>,
    pub module: Representation,
    /// Vertices `S` with the module τ-tilting over `Λ/(e_S)`.
    pub killed: Vec<usize>,
    pub tau_tilting: bool,
}

impl SupportTauTiltingModule {
    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }
}

/// Cliques of size `k` in the "pairwise τ-rigid" relation, lexicographic.
fn rigid_cliques(members: &[usize], compatible: &dyn Fn(usize, usize) -> bool, k: usize) -> Vec<Vec<usize>> {
    fn go(
        members: &[usize],
        compatible: &dyn Fn(usize, usize) -> bool,
        k: usize,
        start: usize,
        acc: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if acc.len() == k {
            out.push(acc.clone());
            return;
        }
        for i in start..members.len() {
            let x = members[i];
            if acc.iter().all(|&y| compatible(x, y)) {
                acc.push(x);
                go(members, compatible, k, i + 1, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(members, compatible, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Every multiplicity-free sum of listed indecomposables that is support
/// τ-tilting, plus the zero module (last, with every vertex killed).
///
/// For each vertex set `S`, the indecomposables vanishing on `S` are restricted
/// to `Λ/(e_S)`; a sum of `n - |S|` of them is τ-tilting there iff it is
/// pairwise τ-rigid there. The list entries are pairwise non-isomorphic
/// indecomposables, so distinct index sets give non-isomorphic sums.
pub fn enumerate_support_tau_tilting(
    alg: &Arc<Algebra>,
    indecs: &[Representation],
) -> Result<Vec<SupportTauTiltingModule>> {
    let n = alg.vertex_count();
    let mut found: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for mask in 0u64..(1u64 << n) - 1 {
        let killed: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let members: Vec<usize> =
            (0..indecs.len()).filter(|&i| killed.iter().all(|&v| indecs[i].dim_at(v) == 0)).collect();
        let quotient = if killed.is_empty() { alg.clone() } else { Arc::new(alg.vertex_quotient(&killed)?) };
        let restricted: Vec<Representation> = members
            .iter()
            .map(|&i| if killed.is_empty() { Ok(indecs[i].clone()) } else { indecs[i].restrict_to(&quotient) })
            .collect::<Result<_>>()?;
        let taus: Vec<Representation> = restricted.par_iter().map(ar_translate).collect();
        let m = members.len();
        let mut rigid = vec![vec![false; m]; m];
        let rows: Vec<Vec<bool>> = (0..m)
            .into_par_iter()
            .map(|i| (0..m).map(|j| hom_dim(&restricted[i], &taus[j]).map(|d| d == 0)).collect::<Result<Vec<bool>>>())
            .collect::<Result<_>>()?;
        for (i, row) in rows.into_iter().enumerate() {
            rigid[i] = row;
        }
        let local: Vec<usize> = (0..m).filter(|&i| rigid[i][i]).collect();
        let compatible = |x: usize, y: usize| rigid[x][y] && rigid[y][x];
        for clique in rigid_cliques(&local, &compatible, n - killed.len()) {
            let summands: Vec<usize> = clique.iter().map(|&i| members[i]).collect();
            if !found.iter().any(|(s, _)| *s == summands) {
                found.push((summands, killed.clone()));
            }
        }
    }
    found.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
    let mut out = Vec::with_capacity(found.len() + 1);
    for (summands, killed) in found {
        let parts: Vec<Representation> = summands.iter().map(|&i| indecs[i].clone()).collect();
        let module = direct_sum_of(alg, &parts)?.module;
        let tau_tilting = killed.is_empty();
        out.push(SupportTauTiltingModule { summands, module, killed, tau_tilting });
    }
    out.push(SupportTauTiltingModule {
        summands: Vec::new(),
        module: Representation::zero(alg),
        killed: (0..n).collect(),
        tau_tilting: false,
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn dimension_vectors_are_lexicographic() {
        let v = dimension_vectors(2, 2);
        assert_eq!(v, vec![vec![0, 1], vec![0, 2], vec![1, 0], vec![1, 1], vec![2, 0]]);
    }

    #[test]
    fn semisimple_algebra_has_only_simples() {
        let a = Arc::new(catalog::semisimple(3, 2));
        let ind = enumerate_indecomposables(&a, 3).unwrap();
        assert_eq!(ind.len(), 3);
        assert!(ind.iter().all(|m| m.total_dim() == 1));
        let stt = enumerate_support_tau_tilting(&a, &ind).unwrap();
        assert_eq!(stt.len(), 8);
    }

    #[test]
    fn search_limit_is_enforced() {
        let a = Arc::new(catalog::linear(2, 2));
        assert!(matches!(indecomposables_with_dims(&a, &[5, 5]), Err(Error::SearchTooLarge(_))));
    }
}
