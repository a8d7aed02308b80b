//! Finite-dimensional algebras given by structure constants: endomorphism rings,
//! the Jacobson radical, block counts and idempotent-driven decomposition.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{self, kernel_basis, solve, Matrix, Subspace};
use crate::rep::{hom_basis, hom_space, image, same_algebra, Morphism, Representation};

/// An associative unital algebra over `F_p` with an explicit basis.
#[derive(Clone, Debug)]
pub struct StructureConstantAlgebra {
    p: u32,
    dim: usize,
    // Coordinates of b_i b_j live at mult[(i * dim + j) * dim ..][..dim].
    mult: Vec<u32>,
    identity: Vec<u32>,
    action: Option<Vec<Morphism>>,
    hom_pivots: Option<Vec<usize>>,
}

/// The radical together with its nilpotency index `k` (`R^k = 0 ≠ R^(k-1)`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalData {
    pub radical: Subspace,
    pub nilpotency_index: usize,
}

fn unit_vector(d: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0u32; d];
    v[i] = 1;
    v
}

impl StructureConstantAlgebra {
    /// `products[i * dim + j]` holds the coordinates of `b_i b_j`. Associativity
    /// and the identity are checked.
    pub fn new(p: u32, dim: usize, products: Vec<Vec<u32>>, identity: Vec<u32>) -> Result<Self> {
        if !linalg::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if products.len() != dim * dim || products.iter().any(|v| v.len() != dim) || identity.len() != dim {
            return Err(Error::DimensionMismatch("structure constants do not match the dimension".into()));
        }
        let mult = products.into_iter().flatten().map(|x| x % p).collect();
        let a = StructureConstantAlgebra { p, dim, mult, identity, action: None, hom_pivots: None };
        if !a.identity_holds() {
            return Err(Error::Internal("identity element does not act as identity".into()));
        }
        if !a.is_associative() {
            return Err(Error::Internal("structure constants are not associative".into()));
        }
        Ok(a)
    }

    pub fn from_path_algebra(alg: &Algebra) -> Self {
        let d = alg.dim();
        let mut mult = vec![0u32; d * d * d];
        for i in 0..d {
            for j in 0..d {
                for &(k, c) in alg.mult_basis(i, j) {
                    mult[(i * d + j) * d + k] = c;
                }
            }
        }
        StructureConstantAlgebra { p: alg.prime(), dim: d, mult, identity: alg.unit(), action: None, hom_pivots: None }
    }

    /// `F_p[x]/(x^n)` with basis `1, x, ..., x^(n-1)`.
    pub fn truncated_polynomial(p: u32, n: usize) -> Self {
        let mut mult = vec![0u32; n * n * n];
        for i in 0..n {
            for j in 0..n {
                if i + j < n {
                    mult[(i * n + j) * n + i + j] = 1;
                }
            }
        }
        let identity = if n == 0 { vec![] } else { unit_vector(n, 0) };
        StructureConstantAlgebra { p, dim: n, mult, identity, action: None, hom_pivots: None }
    }

    /// Full matrix algebra `M_n(F_p)` on matrix units, `E_ij` at index `i * n + j`.
    pub fn matrix_algebra(p: u32, n: usize) -> Self {
        let d = n * n;
        let mut mult = vec![0u32; d * d * d];
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    let (a, b, c) = (i * n + j, j * n + l, i * n + l);
                    mult[(a * d + b) * d + c] = 1;
                }
            }
        }
        let mut identity = vec![0u32; d];
        for i in 0..n {
            identity[i * n + i] = 1;
        }
        StructureConstantAlgebra { p, dim: d, mult, identity, action: None, hom_pivots: None }
    }

    /// Direct product `self × other`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        if self.p != other.p {
            return Err(Error::DimensionMismatch("product of algebras over different fields".into()));
        }
        let (d1, d2) = (self.dim, other.dim);
        let d = d1 + d2;
        let mut mult = vec![0u32; d * d * d];
        for i in 0..d1 {
            for j in 0..d1 {
                for k in 0..d1 {
                    mult[(i * d + j) * d + k] = self.basis_product(i, j)[k];
                }
            }
        }
        for i in 0..d2 {
            for j in 0..d2 {
                for k in 0..d2 {
                    mult[((d1 + i) * d + d1 + j) * d + d1 + k] = other.basis_product(i, j)[k];
                }
            }
        }
        let identity = self.identity.iter().chain(&other.identity).copied().collect();
        Ok(StructureConstantAlgebra { p: self.p, dim: d, mult, identity, action: None, hom_pivots: None })
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn identity(&self) -> &[u32] {
        &self.identity
    }

    /// For an endomorphism algebra: the morphism represented by each basis element.
    pub fn action(&self) -> Option<&[Morphism]> {
        self.action.as_deref()
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[u32] {
        let d = self.dim;
        &self.mult[(i * d + j) * d..(i * d + j + 1) * d]
    }

    pub fn multiply(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let p = self.p;
        let mut out = vec![0u32; self.dim];
        for (i, &a) in x.iter().enumerate().filter(|(_, &a)| a != 0) {
            for (j, &b) in y.iter().enumerate().filter(|(_, &b)| b != 0) {
                let ab = linalg::mul(a, b, p);
                for (o, &c) in out.iter_mut().zip(self.basis_product(i, j)) {
                    if c != 0 {
                        *o = linalg::add(*o, linalg::mul(ab, c, p), p);
                    }
                }
            }
        }
        out
    }

    pub fn power(&self, x: &[u32], mut e: u64) -> Vec<u32> {
        let mut result = self.identity.clone();
        let mut base = x.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                result = self.multiply(&result, &base);
            }
            base = self.multiply(&base, &base);
            e >>= 1;
        }
        result
    }

    fn combination(&self, coeffs: &[u32], vectors: &[Vec<u32>]) -> Vec<u32> {
        let p = self.p;
        let mut out = vec![0u32; self.dim];
        for (&c, v) in coeffs.iter().zip(vectors) {
            if c != 0 {
                for (o, &x) in out.iter_mut().zip(v) {
                    *o = linalg::add(*o, linalg::mul(c, x, p), p);
                }
            }
        }
        out
    }

    /// Matrix of `y ↦ x y`.
    pub fn left_mult(&self, x: &[u32]) -> Matrix {
        let cols: Vec<Vec<u32>> = (0..self.dim).map(|j| self.multiply(x, &unit_vector(self.dim, j))).collect();
        Matrix::from_columns(self.p, self.dim, &cols)
    }

    /// Matrix of `y ↦ y x`.
    pub fn right_mult(&self, x: &[u32]) -> Matrix {
        let cols: Vec<Vec<u32>> = (0..self.dim).map(|j| self.multiply(&unit_vector(self.dim, j), x)).collect();
        Matrix::from_columns(self.p, self.dim, &cols)
    }

    pub fn is_invertible(&self, x: &[u32]) -> bool {
        self.left_mult(x).rank() == self.dim
    }

    fn identity_holds(&self) -> bool {
        (0..self.dim).all(|i| {
            let b = unit_vector(self.dim, i);
            self.multiply(&self.identity, &b) == b && self.multiply(&b, &self.identity) == b
        })
    }

    pub fn is_associative(&self) -> bool {
        let d = self.dim;
        (0..d).all(|i| {
            (0..d).all(|j| {
                let ij = self.basis_product(i, j).to_vec();
                (0..d).all(|k| {
                    let left = self.multiply(&ij, &unit_vector(d, k));
                    let right = self.multiply(&unit_vector(d, i), self.basis_product(j, k));
                    left == right
                })
            })
        })
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    pub fn center(&self) -> Subspace {
        let d = self.dim;
        let p = self.p;
        let mut rows = Vec::with_capacity(d * d);
        for j in 0..d {
            for k in 0..d {
                let row: Vec<u32> =
                    (0..d).map(|i| linalg::sub(self.basis_product(i, j)[k], self.basis_product(j, i)[k], p)).collect();
                if row.iter().any(|&x| x != 0) {
                    rows.push(row);
                }
            }
        }
        kernel_basis(&Matrix::from_row_vectors(p, d, &rows))
    }

    /// Is `s` closed under multiplication by basis elements on both sides?
    pub fn is_two_sided_ideal(&self, s: &Subspace) -> bool {
        let d = self.dim;
        s.basis_vectors().iter().all(|r| {
            (0..d).all(|j| {
                let b = unit_vector(d, j);
                s.contains(&self.multiply(r, &b)) && s.contains(&self.multiply(&b, r))
            })
        })
    }

    /// `self / ideal`, with the quotient map (`rows = quotient dim`) and a linear section.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(Self, Matrix, Matrix)> {
        if ideal.ambient_dim() != self.dim {
            return Err(Error::AmbientMismatch(ideal.ambient_dim(), self.dim));
        }
        if !self.is_two_sided_ideal(ideal) {
            return Err(Error::Internal("quotient by a subspace that is not an ideal".into()));
        }
        let q = ideal.quotient_map();
        let s = ideal.complement_section();
        let keep = ideal.complement_positions();
        let r = keep.len();
        let mut mult = Vec::with_capacity(r * r * r);
        for &a in &keep {
            for &b in &keep {
                mult.extend(q.mul_vec(self.basis_product(a, b)));
            }
        }
        let identity = q.mul_vec(&self.identity);
        let quotient = StructureConstantAlgebra { p: self.p, dim: r, mult, identity, action: None, hom_pivots: None };
        Ok((quotient, q, s))
    }

    /// Integer-lifted trace functional `x ↦ (Tr(L̃_x^(p^l)) mod p^(l+1)) / p^l`.
    fn trace_functional(&self, x: &[u32], l: u32) -> Result<u32> {
        let p = self.p as u128;
        let pl = p.pow(l);
        let modulus = pl * p;
        let lift = self.left_mult(x);
        let d = self.dim;
        let base: Vec<u128> = lift.entries().iter().map(|&e| e as u128).collect();
        let matmul = |a: &[u128], b: &[u128]| -> Vec<u128> {
            let mut c = vec![0u128; d * d];
            for i in 0..d {
                for k in 0..d {
                    let aik = a[i * d + k];
                    if aik == 0 {
                        continue;
                    }
                    for j in 0..d {
                        c[i * d + j] = (c[i * d + j] + aik * b[k * d + j]) % modulus;
                    }
                }
            }
            c
        };
        let mut result: Vec<u128> = (0..d * d).map(|i| u128::from(i % (d + 1) == 0)).collect();
        let mut b = base;
        let mut e = pl;
        while e > 0 {
            if e & 1 == 1 {
                result = matmul(&result, &b);
            }
            e >>= 1;
            if e > 0 {
                b = matmul(&b, &b);
            }
        }
        let trace = (0..d).map(|i| result[i * d + i]).sum::<u128>() % modulus;
        if !trace.is_multiple_of(pl) {
            return Err(Error::Internal(format!("trace functional at level {l} is not divisible by p^{l}")));
        }
        Ok(((trace / pl) % p) as u32)
    }

    /// The trace-method radical without post-verification.
    fn trace_radical(&self) -> Result<Subspace> {
        let d = self.dim;
        let p = self.p;
        let mut current = Subspace::full(p, d);
        let mut l = 0u32;
        while (p as u64).pow(l) <= d as u64 {
            let basis = current.basis_vectors();
            if basis.is_empty() {
                break;
            }
            let mut rows = Vec::with_capacity(d);
            for j in 0..d {
                let b = unit_vector(d, j);
                let row = basis
                    .iter()
                    .map(|x| self.trace_functional(&self.multiply(x, &b), l))
                    .collect::<Result<Vec<u32>>>()?;
                rows.push(row);
            }
            let ker = kernel_basis(&Matrix::from_row_vectors(p, basis.len(), &rows));
            let vectors: Vec<Vec<u32>> = ker.basis_vectors().iter().map(|c| self.combination(c, &basis)).collect();
            current = Subspace::from_vectors(p, d, &vectors);
            l += 1;
        }
        Ok(current)
    }

    /// Products `u r` for `u` in `a` and `r` in `b`, spanned.
    fn ideal_product(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let bv = b.basis_vectors();
        let vectors: Vec<Vec<u32>> = a
            .basis_vectors()
            .iter()
            .flat_map(|u| bv.iter().map(move |r| (u, r)))
            .map(|(u, r)| self.multiply(u, r))
            .collect();
        Subspace::from_vectors(self.p, self.dim, &vectors)
    }

    /// Jacobson radical by the iterated trace method, then certified: it is a
    /// two-sided ideal, it is nilpotent and the quotient has zero radical.
    pub fn jacobson_radical(&self) -> Result<RadicalData> {
        if self.dim == 0 {
            return Err(Error::DimensionMismatch("the zero algebra has no radical to compute".into()));
        }
        let radical = self.trace_radical()?;
        if !self.is_two_sided_ideal(&radical) {
            return Err(Error::Internal("computed radical is not a two-sided ideal".into()));
        }
        let mut power = radical.clone();
        let mut k = 1;
        while !power.is_zero() {
            power = self.ideal_product(&power, &radical);
            k += 1;
            if k > self.dim + 1 {
                return Err(Error::Internal("computed radical is not nilpotent".into()));
            }
        }
        let (quotient, _, _) = self.quotient(&radical)?;
        if quotient.dim > 0 && !quotient.trace_radical()?.is_zero() {
            return Err(Error::Internal("quotient by the computed radical is not semisimple".into()));
        }
        Ok(RadicalData { radical, nilpotency_index: k })
    }

    /// `A / rad A` with quotient map and section, plus the radical itself.
    pub fn semisimple_quotient(&self) -> Result<(Self, Matrix, Matrix, RadicalData)> {
        let rad = self.jacobson_radical()?;
        let (b, q, s) = self.quotient(&rad.radical)?;
        Ok((b, q, s, rad))
    }

    /// Matrix of `z ↦ z^p` on the center, in the center's echelon coordinates.
    fn frobenius_on_center(&self, center: &Subspace) -> Matrix {
        let basis = center.basis_vectors();
        let cols: Vec<Vec<u32>> = basis
            .iter()
            .map(|z| {
                let fz = self.power(z, self.p as u64);
                center.pivots().iter().map(|&c| fz[c]).collect()
            })
            .collect();
        Matrix::from_columns(self.p, basis.len(), &cols)
    }

    /// `F_p`-points fixed by Frobenius in the center of a semisimple algebra.
    fn berlekamp_kernel(&self) -> (Subspace, Vec<Vec<u32>>) {
        let center = self.center();
        let f = self.frobenius_on_center(&center);
        let fixed = kernel_basis(&f.sub(&Matrix::identity(self.p, center.dim())));
        let basis = center.basis_vectors();
        let elements = fixed.basis_vectors().iter().map(|c| self.combination(c, &basis)).collect();
        (fixed, elements)
    }

    /// Number of simple blocks of `A / rad A`.
    pub fn block_count(&self) -> Result<usize> {
        if self.dim == 0 {
            return Ok(0);
        }
        let (b, _, _, _) = self.semisimple_quotient()?;
        Ok(b.berlekamp_kernel().0.dim())
    }

    /// A nontrivial idempotent of a semisimple algebra that is not a field.
    fn split_idempotent(&self) -> Result<Option<Vec<u32>>> {
        let p = self.p;
        let (fixed, elements) = self.berlekamp_kernel();
        if fixed.dim() >= 2 {
            let one = &self.identity;
            let is_scalar = |z: &[u32]| (0..p).any(|c| z.iter().zip(one).all(|(&a, &u)| a == linalg::mul(c, u, p)));
            let z = elements
                .iter()
                .find(|z| !is_scalar(z))
                .ok_or_else(|| Error::Internal("no non-scalar central element".into()))?;
            let shifted = |lambda: u32| -> Vec<u32> {
                z.iter().zip(one).map(|(&a, &u)| linalg::sub(a, linalg::mul(lambda, u, p), p)).collect()
            };
            let lambda = (0..p)
                .find(|&l| !self.is_invertible(&shifted(l)))
                .ok_or_else(|| Error::Internal("central element has no eigenvalue".into()))?;
            let w = self.power(&shifted(lambda), (p - 1) as u64);
            let e: Vec<u32> = one.iter().zip(&w).map(|(&u, &x)| linalg::sub(u, x, p)).collect();
            return Ok(Some(e));
        }
        if self.is_commutative() {
            return Ok(None);
        }
        // A single matrix block: a proper left ideal B x has a right identity, which is idempotent.
        let x = self
            .find_zero_divisor()
            .ok_or_else(|| Error::Internal("non-commutative simple algebra without zero divisors".into()))?;
        let ideal = self.right_mult(&x).column_space().basis_vectors();
        let t = ideal.len();
        let d = self.dim;
        let mut a = Matrix::zeros(p, t * d, t);
        let mut rhs = Vec::with_capacity(t * d);
        for (i, li) in ideal.iter().enumerate() {
            for (k, lk) in ideal.iter().enumerate() {
                for (r, &v) in self.multiply(li, lk).iter().enumerate() {
                    a.set(i * d + r, k, v);
                }
            }
            rhs.extend_from_slice(li);
        }
        let coeffs = solve(&a, &rhs)?.ok_or_else(|| Error::Internal("left ideal has no right identity".into()))?;
        Ok(Some(self.combination(&coeffs, &ideal)))
    }

    /// Deterministic search by increasing support size for a nonzero non-unit.
    fn find_zero_divisor(&self) -> Option<Vec<u32>> {
        let d = self.dim;
        let p = self.p;
        for weight in 1..=d {
            let mut positions: Vec<usize> = (0..weight).collect();
            loop {
                let mut coeffs = vec![1u32; weight];
                loop {
                    let mut x = vec![0u32; d];
                    for (&pos, &c) in positions.iter().zip(&coeffs) {
                        x[pos] = c;
                    }
                    if self.right_mult(&x).rank() < d {
                        return Some(x);
                    }
                    // next coefficient assignment in (1..p)^weight
                    let mut i = 0;
                    while i < weight && coeffs[i] == p - 1 {
                        coeffs[i] = 1;
                        i += 1;
                    }
                    if i == weight {
                        break;
                    }
                    coeffs[i] += 1;
                }
                // next combination of positions
                let mut i = weight;
                while i > 0 && positions[i - 1] == d - weight + i - 1 {
                    i -= 1;
                }
                if i == 0 {
                    break;
                }
                positions[i - 1] += 1;
                for j in i..weight {
                    positions[j] = positions[j - 1] + 1;
                }
            }
        }
        None
    }

    /// Lifts an idempotent modulo the radical by `e ← 3e² − 2e³`.
    fn lift_idempotent(&self, approx: Vec<u32>, nilpotency_index: usize) -> Result<Vec<u32>> {
        let p = self.p;
        let bound = (usize::BITS - nilpotency_index.leading_zeros()) as usize + 1;
        let mut e = approx;
        for _ in 0..=bound {
            let e2 = self.multiply(&e, &e);
            if e2 == e {
                return Ok(e);
            }
            let e3 = self.multiply(&e2, &e);
            e = e2
                .iter()
                .zip(&e3)
                .map(|(&a, &b)| linalg::sub(linalg::mul(3 % p, a, p), linalg::mul(2 % p, b, p), p))
                .collect();
        }
        Err(Error::Internal("idempotent lifting did not converge".into()))
    }

    /// Coordinates of an endomorphism in the basis of an endomorphism algebra.
    pub fn coordinates_of(&self, f: &Morphism) -> Option<Vec<u32>> {
        let pivots = self.hom_pivots.as_ref()?;
        let flat = f.flatten();
        Some(pivots.iter().map(|&c| flat[c]).collect())
    }

    /// The module endomorphism represented by `x`.
    pub fn as_morphism(&self, x: &[u32]) -> Option<Morphism> {
        let action = self.action.as_ref()?;
        let first = action.first()?;
        let mut f = Morphism::zero(first.source(), first.target());
        for (&c, g) in x.iter().zip(action) {
            if c != 0 {
                f = f.add(&g.scale(c));
            }
        }
        Some(f)
    }
}

/// `End(m)` with basis `hom_basis(m, m)` and product `x y = x ∘ y`.
pub fn endomorphism_algebra(m: &Representation) -> Result<StructureConstantAlgebra> {
    let p = m.prime();
    let space = hom_space(m, m)?;
    let basis = hom_basis(m, m)?;
    let pivots = space.pivots().to_vec();
    let d = basis.len();
    let coords = |f: &Morphism| -> Vec<u32> {
        let flat = f.flatten();
        pivots.iter().map(|&c| flat[c]).collect()
    };
    let mut mult = Vec::with_capacity(d * d * d);
    for f in &basis {
        for g in &basis {
            mult.extend(coords(&f.compose(g)?));
        }
    }
    let identity = if d == 0 { vec![] } else { coords(&Morphism::identity(m)) };
    let a = StructureConstantAlgebra { p, dim: d, mult, identity, action: Some(basis), hom_pivots: Some(pivots) };
    if !a.identity_holds() {
        return Err(Error::Internal("identity morphism is not a unit of the endomorphism algebra".into()));
    }
    Ok(a)
}

/// `|m|`: the number of isomorphism classes of indecomposable summands.
pub fn summand_type_count(m: &Representation) -> Result<usize> {
    if m.is_zero() {
        return Ok(0);
    }
    endomorphism_algebra(m)?.block_count()
}

/// `m` is indecomposable iff `End(m)/rad` is a field.
pub fn is_indecomposable(m: &Representation) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    let end = endomorphism_algebra(m)?;
    let (b, _, _, _) = end.semisimple_quotient()?;
    Ok(b.is_commutative() && b.berlekamp_kernel().0.dim() == 1)
}

/// Krull–Schmidt decomposition into indecomposable summands.
pub fn decompose(m: &Representation) -> Result<Vec<Representation>> {
    let mut out = Vec::new();
    decompose_into(m, &mut out)?;
    Ok(out)
}

fn decompose_into(m: &Representation, out: &mut Vec<Representation>) -> Result<()> {
    if m.is_zero() {
        return Ok(());
    }
    let end = endomorphism_algebra(m)?;
    let (b, _, section, rad) = end.semisimple_quotient()?;
    let Some(eps) = b.split_idempotent()? else {
        out.push(m.clone());
        return Ok(());
    };
    let lifted = end.lift_idempotent(section.mul_vec(&eps), rad.nilpotency_index)?;
    let e = end.as_morphism(&lifted).expect("endomorphism algebra carries its action");
    let complement = Morphism::identity(m).add(&e.scale(linalg::neg(1, m.prime())));
    let (first, _) = image(&e);
    let (second, _) = image(&complement);
    if first.is_zero() || second.is_zero() {
        return Err(Error::Internal("lifted idempotent is trivial".into()));
    }
    decompose_into(&first, out)?;
    decompose_into(&second, out)
}

/// Isomorphism of two indecomposable modules: some `g ∘ f` is a unit of `End(m)`.
pub fn indecomposables_isomorphic(m: &Representation, n: &Representation) -> Result<bool> {
    if !same_algebra(m.algebra(), n.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    if m.dim_vector() != n.dim_vector() {
        return Ok(false);
    }
    if m.is_zero() {
        return Ok(true);
    }
    let end = endomorphism_algebra(m)?;
    let rad = end.jacobson_radical()?.radical;
    let there = hom_basis(m, n)?;
    let back = hom_basis(n, m)?;
    for f in &there {
        for g in &back {
            let c = end.coordinates_of(&g.compose(f)?).expect("endomorphism coordinates");
            if !rad.contains(&c) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Isomorphism via matching the multisets of indecomposable summands.
pub fn is_isomorphic(m: &Representation, n: &Representation) -> Result<bool> {
    if !same_algebra(m.algebra(), n.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    if m.dim_vector() != n.dim_vector() {
        return Ok(false);
    }
    if m == n {
        return Ok(true);
    }
    let left = decompose(m)?;
    let mut right = decompose(n)?;
    if left.len() != right.len() {
        return Ok(false);
    }
    for x in &left {
        let mut hit = None;
        for (i, y) in right.iter().enumerate() {
            if indecomposables_isomorphic(x, y)? {
                hit = Some(i);
                break;
            }
        }
        match hit {
            Some(i) => {
                right.swap_remove(i);
            }
            None => return Ok(false),
        }
    }
    Ok(true)
}
