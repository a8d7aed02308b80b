//! Parse a bound quiver algebra, list its path basis and multiply paths.

use taulab::io::parse_algebra;

const TEXT: &str = "\
field 3
vertex 1
vertex 2
vertex 3
vertex 4
arrow a 1 2
arrow b 2 4
arrow c 1 3
arrow d 3 4
# commutative square: a.b = c.d
relation 1*a.b + 2*c.d
";

fn main() -> taulab::Result<()> {
    let alg = parse_algebra(TEXT)?;
    println!("dim = {}", alg.dim());
    println!("basis = {:?}", alg.basis_names());
    println!("associative: {}", alg.is_associative());
    for (i, name) in alg.basis_names().iter().enumerate() {
        for (j, other) in alg.basis_names().iter().enumerate() {
            let prod = alg.mult_basis(i, j);
            if !prod.is_empty() && !alg.basis()[i].is_trivial() && !alg.basis()[j].is_trivial() {
                let terms: Vec<String> = prod.iter().map(|(k, c)| format!("{c}*{}", alg.basis_names()[*k])).collect();
                println!("{name} . {other} = {}", terms.join(" + "));
            }
        }
    }
    // An ideal missing a power of the arrow ideal is rejected with the surviving path.
    let err = parse_algebra("field 2\nvertex 1\narrow x 1 1\n").unwrap_err();
    println!("loop without relations: {err}");
    Ok(())
}
