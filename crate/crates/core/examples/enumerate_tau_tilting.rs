//! Indecomposables and support tau-tilting modules of the cyclic Nakayama algebra
//! on three vertices with radical square zero.

use taulab::catalog;
use taulab::lab::enumerate::{enumerate_indecomposables, enumerate_support_tau_tilting};
use taulab::lab::predicates::{is_tilting, Bounds};

fn main() -> taulab::Result<()> {
    let alg = catalog::shared(catalog::cyclic_radical_square_zero(3, 2));
    let indecs = enumerate_indecomposables(&alg, 4)?;
    for (i, m) in indecs.iter().enumerate() {
        println!("X{i}: {:?}", m.dim_vector());
    }
    let list = enumerate_support_tau_tilting(&alg, &indecs)?;
    println!("{} support tau-tilting modules", list.len());
    for s in &list {
        let tilting = if s.is_zero() { "-".to_string() } else { is_tilting(&s.module, Bounds::default())?.to_string() };
        println!("  {:?} killed {:?} tau-tilting {} tilting {tilting}", s.summands, s.killed, s.tau_tilting);
    }
    Ok(())
}
