//! Rank, kernel and linear solves over F_5.

use taulab::linalg::{kernel_basis, solve, Subspace};
use taulab::Matrix;

fn main() -> taulab::Result<()> {
    let p = 5;
    let a = Matrix::from_rows(p, &[vec![1, 2, 3, 4], vec![2, 4, 1, 3], vec![3, 1, 4, 2]]);
    println!("rank A = {}", a.rank());
    let ker = kernel_basis(&a);
    println!("dim ker A = {} (rank-nullity: {} + {} = {})", ker.dim(), a.rank(), ker.dim(), a.cols());
    for v in ker.basis_vectors() {
        assert!(a.mul_vec(&v).iter().all(|&x| x == 0));
        println!("  kernel vector {v:?}");
    }
    let b = a.mul_vec(&[1, 1, 0, 0]);
    let x = solve(&a, &b)?.expect("b is in the column space");
    println!("solved A x = {b:?}: x = {x:?}");

    let u = Subspace::from_vectors(p, 4, &[vec![1, 0, 0, 0], vec![0, 1, 0, 0]]);
    let w = Subspace::from_vectors(p, 4, &[vec![1, 1, 0, 0], vec![0, 0, 1, 0]]);
    println!("dim(U + W) = {}, dim(U ∩ W) = {}", u.sum(&w)?.dim(), u.intersection(&w)?.dim());
    Ok(())
}
