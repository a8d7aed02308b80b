//! Minimal resolutions, Ext and the Auslander-Reiten translate on 1 -> 2 -> 3 with a1.a2 = 0.

use taulab::catalog;
use taulab::homological::{ar_translate, projective_resolution, stable_hom_dim};
use taulab::rep::{is_injective, Representation};

fn main() -> taulab::Result<()> {
    let alg = catalog::shared(catalog::linear_radical_square_zero(3, 2));
    for v in 0..3 {
        let s = Representation::simple(&alg, v);
        let res = projective_resolution(&s, 6);
        let tops: Vec<_> = (0..res.known_degrees()).map(|i| res.term_tops(i).unwrap_or(&[]).to_vec()).collect();
        let tau = ar_translate(&s);
        println!(
            "S({}): resolution tops {tops:?}, pd {}, injective {}, tau dims {:?}",
            v + 1,
            res.projective_dimension(),
            is_injective(&s),
            tau.dim_vector()
        );
        for w in 0..3 {
            let n = Representation::simple(&alg, w);
            let ext = res.ext_dim(&n, 1)?;
            let stable = stable_hom_dim(&n, &tau)?;
            println!(
                "  Ext^1(S({}), S({})) = {ext}, stable Hom(S({}), tau S({})) = {stable}",
                v + 1,
                w + 1,
                w + 1,
                v + 1
            );
        }
    }
    Ok(())
}
