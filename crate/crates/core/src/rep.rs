//! Modules as quiver representations and the morphisms between them.
//!
//! A representation stores one vector space dimension per vertex and one matrix
//! per arrow `a: v -> w`, of shape `dim_w x dim_v`. Global coordinates are
//! vertex-major: the coordinates of `M_0` come first, then `M_1`, and so on.

use std::sync::Arc;

use crate::algebra::{Algebra, Path};
use crate::error::{Error, Result};
use crate::linalg::{self, kernel_basis, solve_matrix, Matrix, Subspace};

#[derive(Clone, Debug)]
pub struct Representation {
    alg: Arc<Algebra>,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.alg, &other.alg) && self.dims == other.dims && self.maps == other.maps
    }
}

impl Eq for Representation {}

pub(crate) fn same_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Representation {
    /// Validates shapes and checks that every relation acts as zero.
    pub fn new(alg: Arc<Algebra>, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        let q = alg.quiver();
        if dims.len() != q.vertex_count() {
            return Err(Error::InvalidRepresentation(format!(
                "{} dimensions for {} vertices",
                dims.len(),
                q.vertex_count()
            )));
        }
        if maps.len() != q.arrows().len() {
            return Err(Error::InvalidRepresentation(format!("{} maps for {} arrows", maps.len(), q.arrows().len())));
        }
        for (arrow, m) in q.arrows().iter().zip(&maps) {
            if m.prime() != alg.prime() {
                return Err(Error::InvalidRepresentation(format!("map for {} is over the wrong field", arrow.name)));
            }
            if m.rows() != dims[arrow.target] || m.cols() != dims[arrow.source] {
                return Err(Error::InvalidRepresentation(format!(
                    "map for {} has shape {}x{}, expected {}x{}",
                    arrow.name,
                    m.rows(),
                    m.cols(),
                    dims[arrow.target],
                    dims[arrow.source]
                )));
            }
        }
        let rep = Representation { alg, dims, maps };
        if let Some(bad) = rep.violated_relation() {
            return Err(Error::InvalidRepresentation(format!("relation {bad} does not act as zero")));
        }
        Ok(rep)
    }

    /// Trusted constructor for values built from already-valid data.
    pub(crate) fn from_parts(alg: Arc<Algebra>, dims: Vec<usize>, maps: Vec<Matrix>) -> Self {
        let rep = Representation { alg, dims, maps };
        debug_assert!(rep.violated_relation().is_none(), "constructed representation violates a relation");
        rep
    }

    pub fn zero(alg: &Arc<Algebra>) -> Self {
        let n = alg.vertex_count();
        let p = alg.prime();
        let maps = alg.quiver().arrows().iter().map(|_| Matrix::zeros(p, 0, 0)).collect();
        Representation { alg: alg.clone(), dims: vec![0; n], maps }
    }

    /// The simple module `S_v`.
    pub fn simple(alg: &Arc<Algebra>, v: usize) -> Self {
        let mut dims = vec![0; alg.vertex_count()];
        dims[v] = 1;
        let p = alg.prime();
        let maps = alg.quiver().arrows().iter().map(|a| Matrix::zeros(p, dims[a.target], dims[a.source])).collect();
        Representation { alg: alg.clone(), dims, maps }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn prime(&self) -> u32 {
        self.alg.prime()
    }

    pub fn dim_vector(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.maps[arrow]
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    /// Start of each vertex block in global coordinates.
    pub fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.dims
            .iter()
            .map(|&d| {
                let o = acc;
                acc += d;
                o
            })
            .collect()
    }

    /// Linear map `M_start -> M_end` of a path.
    pub fn path_matrix(&self, path: &Path) -> Matrix {
        let p = self.prime();
        let mut m = Matrix::identity(p, self.dims[path.start()]);
        for &a in path.arrows() {
            m = self.maps[a].mul(&m);
        }
        m
    }

    /// Action of the `i`-th basis element of the algebra.
    pub fn basis_action(&self, i: usize) -> Matrix {
        self.path_matrix(&self.alg.basis()[i])
    }

    fn violated_relation(&self) -> Option<String> {
        let q = self.alg.quiver();
        for r in self.alg.relations() {
            let (_, first) = &r.terms()[0];
            let (s, t) = (first.start(), first.end(q));
            let mut total = Matrix::zeros(self.prime(), self.dims[t], self.dims[s]);
            for (c, path) in r.terms() {
                total = total.add(&self.path_matrix(path).scale(*c));
            }
            if !total.is_zero() {
                return Some(r.display(q));
            }
        }
        None
    }

    /// The same data viewed over a structurally identical algebra handle.
    pub fn rebase(&self, alg: &Arc<Algebra>) -> Result<Self> {
        if !same_algebra(&self.alg, alg) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(Representation { alg: alg.clone(), dims: self.dims.clone(), maps: self.maps.clone() })
    }

    /// Restriction to a vertex quotient `Λ/(e)`; the module must vanish on the
    /// killed vertices. Vertices and arrows are matched by name.
    pub fn restrict_to(&self, quotient: &Arc<Algebra>) -> Result<Self> {
        let q = self.alg.quiver();
        let qq = quotient.quiver();
        for (v, name) in q.vertices().iter().enumerate() {
            if qq.vertex_index(name).is_none() && self.dims[v] != 0 {
                return Err(Error::InvalidRepresentation(format!("module does not vanish at killed vertex {name}")));
            }
        }
        let mut dims = Vec::with_capacity(qq.vertex_count());
        for name in qq.vertices() {
            let v =
                q.vertex_index(name).ok_or_else(|| Error::InvalidRepresentation(format!("unknown vertex {name}")))?;
            dims.push(self.dims[v]);
        }
        let mut maps = Vec::with_capacity(qq.arrows().len());
        for arrow in qq.arrows() {
            let a = q
                .arrow_index(&arrow.name)
                .ok_or_else(|| Error::InvalidRepresentation(format!("unknown arrow {}", arrow.name)))?;
            maps.push(self.maps[a].clone());
        }
        Representation::new(quotient.clone(), dims, maps)
    }

    fn check_same_algebra(&self, other: &Representation) -> Result<()> {
        if same_algebra(&self.alg, &other.alg) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }
}

/// A module homomorphism, stored as one matrix `f_v: M_v -> N_v` per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    source: Representation,
    target: Representation,
    comps: Vec<Matrix>,
}

impl Morphism {
    /// Checks shapes and the commuting condition `f_w M_a = N_a f_v`.
    pub fn new(source: Representation, target: Representation, comps: Vec<Matrix>) -> Result<Self> {
        source.check_same_algebra(&target)?;
        let n = source.alg.vertex_count();
        if comps.len() != n {
            return Err(Error::InvalidMorphism(format!("{} components for {n} vertices", comps.len())));
        }
        for (v, c) in comps.iter().enumerate() {
            if c.rows() != target.dims[v] || c.cols() != source.dims[v] {
                return Err(Error::InvalidMorphism(format!("component at vertex {v} has the wrong shape")));
            }
        }
        let f = Morphism { source, target, comps };
        if !f.commutes() {
            return Err(Error::InvalidMorphism("components do not commute with the arrow maps".into()));
        }
        Ok(f)
    }

    pub(crate) fn from_parts(source: Representation, target: Representation, comps: Vec<Matrix>) -> Self {
        let f = Morphism { source, target, comps };
        debug_assert!(f.commutes(), "constructed morphism does not commute");
        f
    }

    fn commutes(&self) -> bool {
        self.source.alg.quiver().arrows().iter().enumerate().all(|(a, arrow)| {
            let lhs = self.comps[arrow.target].mul(&self.source.maps[a]);
            let rhs = self.target.maps[a].mul(&self.comps[arrow.source]);
            lhs == rhs
        })
    }

    pub fn zero(source: &Representation, target: &Representation) -> Self {
        let p = source.prime();
        let comps = (0..source.dims.len()).map(|v| Matrix::zeros(p, target.dims[v], source.dims[v])).collect();
        Morphism { source: source.clone(), target: target.clone(), comps }
    }

    pub fn identity(m: &Representation) -> Self {
        let p = m.prime();
        let comps = m.dims.iter().map(|&d| Matrix::identity(p, d)).collect();
        Morphism { source: m.clone(), target: m.clone(), comps }
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    pub fn component(&self, v: usize) -> &Matrix {
        &self.comps[v]
    }

    pub fn components(&self) -> &[Matrix] {
        &self.comps
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Morphism) -> Result<Morphism> {
        if other.target != self.source {
            return Err(Error::InvalidMorphism("composite of non-composable morphisms".into()));
        }
        let comps = self.comps.iter().zip(&other.comps).map(|(g, f)| g.mul(f)).collect();
        Ok(Morphism { source: other.source.clone(), target: self.target.clone(), comps })
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        assert!(self.source == other.source && self.target == other.target, "sum of non-parallel morphisms");
        let comps = self.comps.iter().zip(&other.comps).map(|(a, b)| a.add(b)).collect();
        Morphism { source: self.source.clone(), target: self.target.clone(), comps }
    }

    pub fn scale(&self, c: u32) -> Morphism {
        let comps = self.comps.iter().map(|a| a.scale(c)).collect();
        Morphism { source: self.source.clone(), target: self.target.clone(), comps }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Matrix::is_zero)
    }

    pub fn is_injective(&self) -> bool {
        self.comps.iter().all(|c| c.rank() == c.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.comps.iter().all(|c| c.rank() == c.rows())
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    pub fn rank(&self) -> usize {
        self.comps.iter().map(Matrix::rank).sum()
    }

    /// Block-diagonal matrix in global coordinates.
    pub fn global_matrix(&self) -> Matrix {
        Matrix::block_diagonal(self.source.prime(), &self.comps)
    }

    /// Coordinates in the Hom-space variable order: vertex-major, then row-major.
    pub fn flatten(&self) -> Vec<u32> {
        self.comps.iter().flat_map(|c| c.entries().iter().copied()).collect()
    }

    pub fn from_flat(source: &Representation, target: &Representation, flat: &[u32]) -> Morphism {
        let p = source.prime();
        let mut comps = Vec::with_capacity(source.dims.len());
        let mut at = 0;
        for v in 0..source.dims.len() {
            let (r, c) = (target.dims[v], source.dims[v]);
            comps.push(Matrix::from_vec(p, r, c, flat[at..at + r * c].to_vec()));
            at += r * c;
        }
        Morphism { source: source.clone(), target: target.clone(), comps }
    }
}

/// Solution space of the commuting equations, in flattened coordinates.
pub fn hom_space(m: &Representation, n: &Representation) -> Result<Subspace> {
    m.check_same_algebra(n)?;
    let p = m.prime();
    let nv = m.dims.len();
    let mut var_offset = Vec::with_capacity(nv);
    let mut vars = 0;
    for v in 0..nv {
        var_offset.push(vars);
        vars += n.dims[v] * m.dims[v];
    }
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for (a, arrow) in m.alg.quiver().arrows().iter().enumerate() {
        let (v, w) = (arrow.source, arrow.target);
        let (ma, na) = (&m.maps[a], &n.maps[a]);
        // (f_w M_a - N_a f_v)[r][c] = 0
        for r in 0..n.dims[w] {
            for c in 0..m.dims[v] {
                let mut row = vec![0u32; vars];
                for k in 0..m.dims[w] {
                    let x = ma.get(k, c);
                    if x != 0 {
                        let idx = var_offset[w] + r * m.dims[w] + k;
                        row[idx] = linalg::add(row[idx], x, p);
                    }
                }
                for k in 0..n.dims[v] {
                    let x = na.get(r, k);
                    if x != 0 {
                        let idx = var_offset[v] + k * m.dims[v] + c;
                        row[idx] = linalg::sub(row[idx], x, p);
                    }
                }
                if row.iter().any(|&x| x != 0) {
                    rows.push(row);
                }
            }
        }
    }
    Ok(kernel_basis(&Matrix::from_row_vectors(p, vars, &rows)))
}

/// Basis of `Hom(m, n)`, ordered by the canonical echelon basis of the solution space.
pub fn hom_basis(m: &Representation, n: &Representation) -> Result<Vec<Morphism>> {
    let space = hom_space(m, n)?;
    Ok(space.basis_vectors().iter().map(|v| Morphism::from_flat(m, n, v)).collect())
}

pub fn hom_dim(m: &Representation, n: &Representation) -> Result<usize> {
    Ok(hom_space(m, n)?.dim())
}

/// A direct sum with its structure maps.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub module: Representation,
    pub inclusions: Vec<Morphism>,
    pub projections: Vec<Morphism>,
}

/// `⊕ summands`; summand blocks are laid out in order inside each vertex space.
pub fn direct_sum_of(alg: &Arc<Algebra>, summands: &[Representation]) -> Result<DirectSum> {
    for s in summands {
        if !same_algebra(alg, &s.alg) {
            return Err(Error::AlgebraMismatch);
        }
    }
    let p = alg.prime();
    let n = alg.vertex_count();
    let dims: Vec<usize> = (0..n).map(|v| summands.iter().map(|s| s.dims[v]).sum()).collect();
    let maps = alg
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, _)| {
            let blocks: Vec<Matrix> = summands.iter().map(|s| s.maps[a].clone()).collect();
            Matrix::block_diagonal(p, &blocks)
        })
        .collect();
    let module = Representation { alg: alg.clone(), dims, maps };
    let mut inclusions = Vec::with_capacity(summands.len());
    let mut projections = Vec::with_capacity(summands.len());
    let mut offsets = vec![0usize; n];
    for s in summands {
        let mut inc = Vec::with_capacity(n);
        let mut proj = Vec::with_capacity(n);
        for v in 0..n {
            let mut i = Matrix::zeros(p, module.dims[v], s.dims[v]);
            i.set_block(offsets[v], 0, &Matrix::identity(p, s.dims[v]));
            proj.push(i.transpose());
            inc.push(i);
            offsets[v] += s.dims[v];
        }
        inclusions.push(Morphism { source: s.clone(), target: module.clone(), comps: inc });
        projections.push(Morphism { source: module.clone(), target: s.clone(), comps: proj });
    }
    Ok(DirectSum { module, inclusions, projections })
}

pub fn direct_sum(m: &Representation, n: &Representation) -> Result<Representation> {
    m.check_same_algebra(n)?;
    Ok(direct_sum_of(&m.alg, &[m.clone(), n.clone()])?.module)
}

/// `m^k`.
pub fn power(m: &Representation, k: usize) -> Representation {
    direct_sum_of(&m.alg, &vec![m.clone(); k]).expect("same algebra").module
}

fn check_subspaces(m: &Representation, subspaces: &[Subspace]) -> Result<()> {
    if subspaces.len() != m.dims.len() {
        return Err(Error::DimensionMismatch("one subspace per vertex expected".into()));
    }
    for (v, u) in subspaces.iter().enumerate() {
        if u.ambient_dim() != m.dims[v] {
            return Err(Error::AmbientMismatch(u.ambient_dim(), m.dims[v]));
        }
    }
    for (a, arrow) in m.alg.quiver().arrows().iter().enumerate() {
        let target = &subspaces[arrow.target];
        for u in subspaces[arrow.source].basis_vectors() {
            if !target.contains(&m.maps[a].mul_vec(&u)) {
                return Err(Error::NotArrowStable(arrow.name.clone()));
            }
        }
    }
    Ok(())
}

/// The subrepresentation spanned by arrow-stable per-vertex subspaces, with its inclusion.
pub fn submodule_from_subspaces(m: &Representation, subspaces: &[Subspace]) -> Result<(Representation, Morphism)> {
    check_subspaces(m, subspaces)?;
    let bases: Vec<Matrix> = subspaces.iter().map(|u| u.basis().transpose()).collect();
    let dims: Vec<usize> = subspaces.iter().map(Subspace::dim).collect();
    let maps = m
        .alg
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, arrow)| {
            let image = m.maps[a].mul(&bases[arrow.source]);
            solve_matrix(&bases[arrow.target], &image).expect("subspaces are arrow-stable")
        })
        .collect();
    let sub = Representation::from_parts(m.alg.clone(), dims, maps);
    let inclusion = Morphism::from_parts(sub.clone(), m.clone(), bases);
    Ok((sub, inclusion))
}

/// `m / U` with the canonical projection.
pub fn quotient_by_subspaces(m: &Representation, subspaces: &[Subspace]) -> Result<(Representation, Morphism)> {
    check_subspaces(m, subspaces)?;
    let qmaps: Vec<Matrix> = subspaces.iter().map(Subspace::quotient_map).collect();
    let sections: Vec<Matrix> = subspaces.iter().map(Subspace::complement_section).collect();
    let dims: Vec<usize> = qmaps.iter().map(Matrix::rows).collect();
    let maps = m
        .alg
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, arrow)| qmaps[arrow.target].mul(&m.maps[a]).mul(&sections[arrow.source]))
        .collect();
    let quotient = Representation::from_parts(m.alg.clone(), dims, maps);
    let projection = Morphism::from_parts(m.clone(), quotient.clone(), qmaps);
    Ok((quotient, projection))
}

pub fn kernel(f: &Morphism) -> (Representation, Morphism) {
    let subspaces: Vec<Subspace> = f.comps.iter().map(kernel_basis).collect();
    submodule_from_subspaces(&f.source, &subspaces).expect("kernels are submodules")
}

fn image_subspaces(f: &Morphism) -> Vec<Subspace> {
    f.comps.iter().map(Matrix::column_space).collect()
}

pub fn image(f: &Morphism) -> (Representation, Morphism) {
    submodule_from_subspaces(&f.target, &image_subspaces(f)).expect("images are submodules")
}

pub fn cokernel(f: &Morphism) -> (Representation, Morphism) {
    quotient_by_subspaces(&f.target, &image_subspaces(f)).expect("images are submodules")
}

/// Per-vertex subspaces of the trace of `t` in `m`.
pub fn trace_subspaces(t: &Representation, m: &Representation) -> Result<Vec<Subspace>> {
    let p = m.prime();
    let mut spans: Vec<Subspace> = m.dims.iter().map(|&d| Subspace::zero(p, d)).collect();
    for f in hom_basis(t, m)? {
        for (v, span) in spans.iter_mut().enumerate() {
            *span = span.sum(&f.comps[v].column_space())?;
        }
    }
    Ok(spans)
}

/// The trace of `t` in `m`: the sum of the images of all maps `t -> m`.
pub fn trace_submodule(t: &Representation, m: &Representation) -> Result<(Representation, Morphism)> {
    let spans = trace_subspaces(t, m)?;
    submodule_from_subspaces(m, &spans)
}

/// `m ∈ Fac t`.
pub fn fac_membership(t: &Representation, m: &Representation) -> Result<bool> {
    Ok(trace_subspaces(t, m)?.iter().all(Subspace::is_full))
}

/// `m ∈ Sub n`: the maps `m -> n` jointly separate the points of `m`.
pub fn sub_membership(m: &Representation, n: &Representation) -> Result<bool> {
    let basis = hom_basis(m, n)?;
    let p = m.prime();
    Ok((0..m.dims.len()).all(|v| {
        let stacked = basis.iter().fold(Matrix::zeros(p, 0, m.dims[v]), |acc, f| acc.vstack(&f.comps[v]));
        stacked.rank() == m.dims[v]
    }))
}

/// Per-vertex subspaces of `rad m`: the images of the arrows into each vertex.
pub fn radical_subspaces(m: &Representation) -> Vec<Subspace> {
    let p = m.prime();
    let mut spans: Vec<Subspace> = m.dims.iter().map(|&d| Subspace::zero(p, d)).collect();
    for (a, arrow) in m.alg.quiver().arrows().iter().enumerate() {
        let img = m.maps[a].column_space();
        spans[arrow.target] = spans[arrow.target].sum(&img).expect("same ambient");
    }
    spans
}

/// Per-vertex subspaces of `soc m`: the joint kernels of the outgoing arrows.
pub fn socle_subspaces(m: &Representation) -> Vec<Subspace> {
    let p = m.prime();
    let mut spans: Vec<Subspace> = m.dims.iter().map(|&d| Subspace::full(p, d)).collect();
    for (a, arrow) in m.alg.quiver().arrows().iter().enumerate() {
        let ker = kernel_basis(&m.maps[a]);
        spans[arrow.source] = spans[arrow.source].intersection(&ker).expect("same ambient");
    }
    spans
}

pub fn radical(m: &Representation) -> (Representation, Morphism) {
    submodule_from_subspaces(m, &radical_subspaces(m)).expect("radical is a submodule")
}

pub fn top(m: &Representation) -> (Representation, Morphism) {
    quotient_by_subspaces(m, &radical_subspaces(m)).expect("radical is a submodule")
}

pub fn socle(m: &Representation) -> (Representation, Morphism) {
    submodule_from_subspaces(m, &socle_subspaces(m)).expect("socle is a submodule")
}

/// A direct sum `⊕ P_{v_i}` of indecomposable projectives with explicit path
/// coordinates: at vertex `w`, coordinate `(i, b)` is the basis path `b` from
/// `v_i` to `w` in summand `i`.
#[derive(Clone, Debug)]
pub struct ProjectiveSum {
    tops: Vec<usize>,
    module: Representation,
    coords: Vec<Vec<(usize, usize)>>,
}

impl ProjectiveSum {
    pub fn new(alg: &Arc<Algebra>, tops: Vec<usize>) -> Self {
        let p = alg.prime();
        let n = alg.vertex_count();
        let coords: Vec<Vec<(usize, usize)>> = (0..n)
            .map(|w| {
                tops.iter()
                    .enumerate()
                    .flat_map(|(i, &v)| alg.paths_between(v, w).into_iter().map(move |b| (i, b)))
                    .collect()
            })
            .collect();
        let dims: Vec<usize> = coords.iter().map(Vec::len).collect();
        let maps = alg
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                let (w, w2) = (arrow.source, arrow.target);
                let ab = alg.arrow_basis(a);
                let mut m = Matrix::zeros(p, dims[w2], dims[w]);
                for (col, &(i, b)) in coords[w].iter().enumerate() {
                    for &(k, c) in alg.mult_basis(b, ab) {
                        let row = coords[w2].iter().position(|&x| x == (i, k)).expect("product stays in the summand");
                        m.set(row, col, c);
                    }
                }
                m
            })
            .collect();
        let module = Representation::from_parts(alg.clone(), dims, maps);
        ProjectiveSum { tops, module, coords }
    }

    pub fn tops(&self) -> &[usize] {
        &self.tops
    }

    pub fn module(&self) -> &Representation {
        &self.module
    }

    pub fn is_zero(&self) -> bool {
        self.tops.is_empty()
    }

    /// Position of coordinate `(summand, basis path)` inside vertex `w`.
    pub fn coordinate(&self, w: usize, summand: usize, basis: usize) -> Option<usize> {
        self.coords[w].iter().position(|&x| x == (summand, basis))
    }

    pub fn coordinates_at(&self, w: usize) -> &[(usize, usize)] {
        &self.coords[w]
    }

    /// Position of the generator `e_{v_i}` of summand `i` inside its vertex space.
    pub fn generator(&self, i: usize) -> usize {
        let v = self.tops[i];
        let e = self.module.alg.idempotent(v);
        self.coordinate(v, i, e).expect("generator present")
    }

    /// The morphism sending the generator of summand `i` to `images[i] ∈ N_{v_i}`.
    pub fn morphism_to(&self, target: &Representation, images: &[Vec<u32>]) -> Morphism {
        assert_eq!(images.len(), self.tops.len(), "one image per summand");
        let alg = &self.module.alg;
        let p = alg.prime();
        let actions: Vec<Option<Matrix>> = vec![None; alg.dim()];
        let mut actions = actions;
        let comps = (0..alg.vertex_count())
            .map(|w| {
                let mut m = Matrix::zeros(p, target.dims[w], self.module.dims[w]);
                for (col, &(i, b)) in self.coords[w].iter().enumerate() {
                    let act = actions[b].get_or_insert_with(|| target.basis_action(b));
                    let v = act.mul_vec(&images[i]);
                    for (r, x) in v.into_iter().enumerate() {
                        m.set(r, col, x);
                    }
                }
                m
            })
            .collect();
        Morphism::from_parts(self.module.clone(), target.clone(), comps)
    }

    /// Images of the generators under `f`.
    pub fn generator_images(&self, f: &Morphism) -> Vec<Vec<u32>> {
        (0..self.tops.len()).map(|i| f.comps[self.tops[i]].column(self.generator(i))).collect()
    }
}

/// Projective cover `P -> m`, with `P` a sum of `P_v` indexed by a basis of `top m`.
pub fn projective_cover(m: &Representation) -> (ProjectiveSum, Morphism) {
    let rad = radical_subspaces(m);
    let mut tops = Vec::new();
    let mut images = Vec::new();
    for (v, r) in rad.iter().enumerate() {
        let section = r.complement_section();
        for c in 0..section.cols() {
            tops.push(v);
            images.push(section.column(c));
        }
    }
    let proj = ProjectiveSum::new(&m.alg, tops);
    let epi = proj.morphism_to(m, &images);
    (proj, epi)
}

/// `D m = Hom_k(m, k)` as a module over the opposite algebra.
pub fn dual(m: &Representation) -> Representation {
    let maps = m.maps.iter().map(Matrix::transpose).collect();
    Representation::from_parts(m.alg.opposite_arc(), m.dims.clone(), maps)
}

/// `D f: D target -> D source`.
pub fn dual_morphism(f: &Morphism) -> Morphism {
    let comps = f.comps.iter().map(Matrix::transpose).collect();
    Morphism::from_parts(dual(&f.target), dual(&f.source), comps)
}

/// Injective envelope `m -> I`, obtained by dualizing the projective cover of `D m`.
pub fn injective_envelope(m: &Representation) -> (Representation, Morphism) {
    let (_, epi) = projective_cover(&dual(m));
    let mono = dual_morphism(&epi);
    (mono.target.clone(), mono)
}

/// `P_v = e_v Λ` for every vertex.
pub fn indecomposable_projectives(alg: &Arc<Algebra>) -> Vec<Representation> {
    (0..alg.vertex_count()).map(|v| ProjectiveSum::new(alg, vec![v]).module).collect()
}

/// `I_v = D(Λ^op e_v)` for every vertex.
pub fn indecomposable_injectives(alg: &Arc<Algebra>) -> Vec<Representation> {
    let op = alg.opposite_arc();
    indecomposable_projectives(&op).iter().map(dual).collect()
}

/// The regular module `Λ = ⊕ P_v`.
pub fn regular_module(alg: &Arc<Algebra>) -> Representation {
    ProjectiveSum::new(alg, (0..alg.vertex_count()).collect()).module
}

pub fn is_projective(m: &Representation) -> bool {
    projective_cover(m).0.module.total_dim() == m.total_dim()
}

pub fn is_injective(m: &Representation) -> bool {
    injective_envelope(m).0.total_dim() == m.total_dim()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn a2() -> Arc<Algebra> {
        Arc::new(catalog::linear(2, 2))
    }

    fn zero_rel() -> Arc<Algebra> {
        Arc::new(catalog::linear_radical_square_zero(3, 2))
    }

    #[test]
    fn projectives_and_injectives_of_a2() {
        let a = a2();
        let ps = indecomposable_projectives(&a);
        assert_eq!(ps[0].dim_vector(), &[1, 1]);
        assert_eq!(ps[1].dim_vector(), &[0, 1]);
        let is = indecomposable_injectives(&a);
        assert_eq!(is[0].dim_vector(), &[1, 0]);
        assert_eq!(is[1].dim_vector(), &[1, 1]);
        assert!(Arc::ptr_eq(is[0].algebra(), &a));
    }

    #[test]
    fn projectives_of_zero_relation_algebra() {
        let a = zero_rel();
        let dims: Vec<Vec<usize>> = indecomposable_projectives(&a).iter().map(|p| p.dim_vector().to_vec()).collect();
        assert_eq!(dims, vec![vec![1, 1, 0], vec![0, 1, 1], vec![0, 0, 1]]);
        let total: usize = indecomposable_injectives(&a).iter().map(Representation::total_dim).sum();
        assert_eq!(total, a.dim());
    }

    #[test]
    fn hom_examples_over_a2() {
        let a = a2();
        let p1 = &indecomposable_projectives(&a)[0];
        let s1 = Representation::simple(&a, 0);
        let s2 = Representation::simple(&a, 1);
        assert_eq!(hom_dim(p1, &s2).unwrap(), 0);
        assert_eq!(hom_dim(p1, &s1).unwrap(), 1);
        assert_eq!(hom_dim(&s1, p1).unwrap(), 0);
        let id_space = hom_space(p1, p1).unwrap();
        assert!(id_space.contains(&Morphism::identity(p1).flatten()));
    }

    #[test]
    fn hom_basis_elements_commute() {
        let a = zero_rel();
        let lam = regular_module(&a);
        for f in hom_basis(&lam, &lam).unwrap() {
            assert!(Morphism::new(f.source().clone(), f.target().clone(), f.components().to_vec()).is_ok());
        }
        assert_eq!(hom_dim(&lam, &lam).unwrap(), a.dim());
    }

    #[test]
    fn kernel_cokernel_of_identity() {
        let a = zero_rel();
        let p1 = &indecomposable_projectives(&a)[0];
        let id = Morphism::identity(p1);
        assert!(kernel(&id).0.is_zero());
        assert!(cokernel(&id).0.is_zero());
        assert_eq!(image(&id).0.dim_vector(), p1.dim_vector());
    }

    #[test]
    fn cokernel_of_radical_inclusion_is_simple_top() {
        let a = a2();
        let ps = indecomposable_projectives(&a);
        let f = &hom_basis(&ps[1], &ps[0]).unwrap()[0];
        assert!(f.is_injective());
        let (c, proj) = cokernel(f);
        assert_eq!(c.dim_vector(), &[1, 0]);
        assert_eq!(c, Representation::simple(&a, 0));
        assert!(proj.is_surjective());
    }

    #[test]
    fn direct_sum_dims_add() {
        let a = zero_rel();
        let ps = indecomposable_projectives(&a);
        let s = direct_sum_of(&a, &ps).unwrap();
        assert_eq!(s.module.dim_vector(), &[1, 2, 2]);
        assert_eq!(s.module.total_dim(), a.dim());
        for (i, p) in s.projections.iter().zip(&s.inclusions) {
            assert_eq!(i.compose(p).unwrap(), Morphism::identity(p.source()));
        }
    }

    #[test]
    fn trace_examples() {
        let a = a2();
        let lam = regular_module(&a);
        let p1 = indecomposable_projectives(&a)[0].clone();
        let s1 = Representation::simple(&a, 0);
        assert_eq!(trace_submodule(&lam, &p1).unwrap().0, p1);
        assert_eq!(trace_submodule(&p1, &p1).unwrap().0, p1);
        assert!(trace_submodule(&s1, &p1).unwrap().0.is_zero());
        assert!(!fac_membership(&s1, &p1).unwrap());
        assert!(fac_membership(&lam, &s1).unwrap());
        assert!(fac_membership(&s1, &Representation::zero(&a)).unwrap());
        assert!(sub_membership(&Representation::zero(&a), &s1).unwrap());
    }

    #[test]
    fn non_stable_subspaces_are_rejected() {
        let a = a2();
        let p1 = indecomposable_projectives(&a)[0].clone();
        let subs = vec![Subspace::full(2, 1), Subspace::zero(2, 1)];
        assert!(matches!(submodule_from_subspaces(&p1, &subs), Err(Error::NotArrowStable(_))));
    }

    #[test]
    fn top_socle_radical() {
        for a in [a2(), zero_rel(), Arc::new(catalog::cyclic_radical_square_zero(3, 3))] {
            let ps = indecomposable_projectives(&a);
            let is = indecomposable_injectives(&a);
            for v in 0..a.vertex_count() {
                let s = Representation::simple(&a, v);
                assert_eq!(top(&ps[v]).0, s);
                assert_eq!(socle(&is[v]).0, s);
                assert!(radical(&s).0.is_zero());
            }
        }
    }

    #[test]
    fn covers_and_envelopes() {
        let a = zero_rel();
        let ps = indecomposable_projectives(&a);
        for v in 0..3 {
            let s = Representation::simple(&a, v);
            let (p, epi) = projective_cover(&s);
            assert_eq!(p.tops(), &[v]);
            assert_eq!(p.module(), &ps[v]);
            assert!(epi.is_surjective());
            let (p2, epi2) = projective_cover(&ps[v]);
            assert_eq!(p2.module(), &ps[v]);
            assert!(epi2.is_isomorphism());
        }
        let s1 = Representation::simple(&a, 0);
        let (i, mono) = injective_envelope(&s1);
        assert_eq!(i, s1);
        assert!(mono.is_isomorphism());
        assert!(is_injective(&s1));
        assert!(!is_projective(&s1));
    }

    #[test]
    fn double_dual_is_identity() {
        let a = zero_rel();
        let m = regular_module(&a);
        let dd = dual(&dual(&m));
        assert!(Arc::ptr_eq(dd.algebra(), &a));
        assert_eq!(dd, m);
    }

    #[test]
    fn restriction_to_vertex_quotient() {
        let a = zero_rel();
        let q = Arc::new(a.vertex_quotient(&[1, 2]).unwrap());
        let s1 = Representation::simple(&a, 0);
        let r = s1.restrict_to(&q).unwrap();
        assert_eq!(r.dim_vector(), &[1]);
        assert!(Representation::simple(&a, 1).restrict_to(&q).is_err());
    }

    #[test]
    fn relations_are_enforced() {
        let a = zero_rel();
        let one = Matrix::identity(2, 1);
        let bad = Representation::new(a.clone(), vec![1, 1, 1], vec![one.clone(), one.clone()]);
        assert!(matches!(bad, Err(Error::InvalidRepresentation(_))));
        let shape = Representation::new(a, vec![1, 1, 1], vec![Matrix::zeros(2, 2, 1), one]);
        assert!(matches!(shape, Err(Error::InvalidRepresentation(_))));
    }
}
