//! Small named algebras used by the examples, the tests and the suite.
//!
//! Vertices are named `1..=n` and arrows `a1, a2, ...`, with `ai: i -> i+1`.

use std::sync::Arc;

use crate::algebra::{build_algebra, Algebra, Path, Quiver, Relation, DEFAULT_L_MAX};

fn linear_quiver(n: usize) -> Quiver {
    let names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let mut q = Quiver::new(&names, &[]).expect("distinct names");
    for i in 1..n {
        q.add_arrow(&format!("a{i}"), &i.to_string(), &(i + 1).to_string()).expect("fresh arrow");
    }
    q
}

/// Path algebra of `1 -> 2 -> ... -> n` without relations.
pub fn linear(n: usize, p: u32) -> Algebra {
    build_algebra(linear_quiver(n), vec![], p, DEFAULT_L_MAX).expect("linear quiver is admissible")
}

/// `1 -> 2 -> ... -> n` with every composite of two consecutive arrows set to zero.
pub fn linear_radical_square_zero(n: usize, p: u32) -> Algebra {
    let q = linear_quiver(n);
    let relations = (0..n.saturating_sub(2))
        .map(|i| Relation::monomial(Path::from_arrows(&q, vec![i, i + 1]).expect("composable")))
        .collect();
    build_algebra(q, relations, p, DEFAULT_L_MAX).expect("admissible")
}

/// Cyclic quiver `1 -> 2 -> ... -> n -> 1` with all paths of length two set to zero.
/// Self-injective Nakayama algebra.
pub fn cyclic_radical_square_zero(n: usize, p: u32) -> Algebra {
    let mut q = linear_quiver(n);
    q.add_arrow(&format!("a{n}"), &n.to_string(), "1").expect("fresh arrow");
    let relations =
        (0..n).map(|i| Relation::monomial(Path::from_arrows(&q, vec![i, (i + 1) % n]).expect("composable"))).collect();
    build_algebra(q, relations, p, DEFAULT_L_MAX).expect("admissible")
}

/// `n` isolated vertices: the semisimple algebra `F_p^n`.
pub fn semisimple(n: usize, p: u32) -> Algebra {
    let names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    build_algebra(Quiver::new(&names, &[]).expect("distinct names"), vec![], p, DEFAULT_L_MAX).expect("no arrows")
}

pub fn shared(a: Algebra) -> Arc<Algebra> {
    Arc::new(a)
}
