//! Projectives, injectives, Hom spaces and traces over 1 -> 2 -> 3.

use taulab::catalog;
use taulab::io::module_to_string;
use taulab::rep::{
    hom_dim, indecomposable_injectives, indecomposable_projectives, projective_cover, socle, top, trace_submodule,
};

fn main() -> taulab::Result<()> {
    let alg = catalog::shared(catalog::linear(3, 2));
    let ps = indecomposable_projectives(&alg);
    let is = indecomposable_injectives(&alg);
    for (v, (p, i)) in ps.iter().zip(&is).enumerate() {
        println!("P({}) dims {:?}, I({}) dims {:?}", v + 1, p.dim_vector(), v + 1, i.dim_vector());
    }
    println!("Hom matrix between projectives:");
    for p in &ps {
        let row: Vec<usize> = ps.iter().map(|q| hom_dim(p, q)).collect::<taulab::Result<_>>()?;
        println!("  {row:?}");
    }
    let m = &is[1];
    println!("top of I(2): {:?}, socle: {:?}", top(m).0.dim_vector(), socle(m).0.dim_vector());
    let (cover, epi) = projective_cover(m);
    println!("projective cover of I(2) has tops {:?} and is onto: {}", cover.tops(), epi.is_surjective());
    let (tr, _) = trace_submodule(&ps[2], m)?;
    println!("trace of P(3) in I(2):\n{}", module_to_string(&tr));
    Ok(())
}
