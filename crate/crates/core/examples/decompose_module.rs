//! Krull-Schmidt decomposition through the endomorphism algebra.

use taulab::catalog;
use taulab::rep::{direct_sum_of, indecomposable_projectives, Representation};
use taulab::ring::{decompose, endomorphism_algebra, is_isomorphic};

fn main() -> taulab::Result<()> {
    let alg = catalog::shared(catalog::linear(3, 3));
    let ps = indecomposable_projectives(&alg);
    let s2 = Representation::simple(&alg, 1);
    let m = direct_sum_of(&alg, &[ps[0].clone(), s2.clone(), ps[0].clone(), ps[2].clone()])?.module;

    let end = endomorphism_algebra(&m)?;
    let rad = end.jacobson_radical()?;
    println!("dim End(M) = {}, dim rad = {}, nilpotency index {}", end.dim(), rad.radical.dim(), rad.nilpotency_index);
    println!("blocks of End(M)/rad: {}", end.semisimple_quotient()?.0.block_count()?);

    let parts = decompose(&m)?;
    for part in &parts {
        println!("summand with dims {:?}", part.dim_vector());
    }
    let rebuilt = direct_sum_of(&alg, &parts)?.module;
    println!("sum of summands is isomorphic to M: {}", is_isomorphic(&rebuilt, &m)?);
    Ok(())
}
