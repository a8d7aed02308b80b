//! Bound quiver algebras `kQ/I` over `F_p`.
//!
//! Paths compose left to right: `a1.a2` means "first `a1`, then `a2`". Right
//! modules are then representations with a linear map `M_v -> M_w` for every
//! arrow `v -> w`.
//!
//! The basis of `kQ/I` is a set of residue paths chosen as the standard
//! monomials of the ideal with respect to an order that prefers eliminating long
//! paths, so trivial paths and arrows are always basis elements.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, Weak};

use crate::error::{Error, Result};
use crate::linalg::{self, Subspace};

/// Truncation bound used when none is given.
pub const DEFAULT_L_MAX: usize = 12;

/// Upper limit on the number of paths enumerated while reducing relations.
const PATH_LIMIT: usize = 50_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// Builds a quiver from vertex names and `(name, source, target)` triples.
    pub fn new<S: AsRef<str>>(vertices: &[S], arrows: &[(S, S, S)]) -> Result<Self> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(Error::InvalidQuiver(format!("duplicate vertex {v}")));
            }
        }
        let mut q = Quiver { vertices, arrows: Vec::new() };
        for (name, s, t) in arrows {
            q.add_arrow(name.as_ref(), s.as_ref(), t.as_ref())?;
        }
        Ok(q)
    }

    pub fn add_vertex(&mut self, name: &str) -> Result<usize> {
        if self.vertex_index(name).is_some() {
            return Err(Error::InvalidQuiver(format!("duplicate vertex {name}")));
        }
        self.vertices.push(name.to_string());
        Ok(self.vertices.len() - 1)
    }

    pub fn add_arrow(&mut self, name: &str, source: &str, target: &str) -> Result<usize> {
        if self.arrow_index(name).is_some() || self.vertex_index(name).is_some() {
            return Err(Error::InvalidQuiver(format!("duplicate name {name}")));
        }
        let s = self
            .vertex_index(source)
            .ok_or_else(|| Error::InvalidQuiver(format!("arrow {name}: unknown source vertex {source}")))?;
        let t = self
            .vertex_index(target)
            .ok_or_else(|| Error::InvalidQuiver(format!("arrow {name}: unknown target vertex {target}")))?;
        self.arrows.push(Arrow { name: name.to_string(), source: s, target: t });
        Ok(self.arrows.len() - 1)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Same vertices, every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        let arrows =
            self.arrows.iter().map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source }).collect();
        Quiver { vertices: self.vertices.clone(), arrows }
    }

    /// Parses a dotted arrow sequence such as `a1.a2`.
    pub fn parse_path(&self, text: &str) -> Result<Path> {
        let names: Vec<&str> = text.split('.').map(str::trim).collect();
        let mut arrows = Vec::with_capacity(names.len());
        for n in &names {
            let a = self
                .arrow_index(n)
                .ok_or_else(|| Error::InvalidRelation(format!("unknown arrow {n} in path {text}")))?;
            arrows.push(a);
        }
        let start = self.arrows[arrows[0]].source;
        let path = Path { start, arrows };
        if !path.is_composable(self) {
            return Err(Error::InvalidRelation(format!("arrows in {text} do not compose")));
        }
        Ok(path)
    }
}

/// A path in a quiver; the empty arrow list is the trivial path at `start`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    start: usize,
    arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(vertex: usize) -> Self {
        Path { start: vertex, arrows: Vec::new() }
    }

    pub fn arrow(q: &Quiver, arrow: usize) -> Self {
        Path { start: q.arrows[arrow].source, arrows: vec![arrow] }
    }

    pub fn from_arrows(q: &Quiver, arrows: Vec<usize>) -> Option<Self> {
        let start = q.arrows.get(*arrows.first()?)?.source;
        let p = Path { start, arrows };
        p.is_composable(q).then_some(p)
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn end(&self, q: &Quiver) -> usize {
        self.arrows.last().map_or(self.start, |&a| q.arrows[a].target)
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    fn is_composable(&self, q: &Quiver) -> bool {
        let mut at = self.start;
        for &a in &self.arrows {
            let Some(arrow) = q.arrows.get(a) else { return false };
            if arrow.source != at {
                return false;
            }
            at = arrow.target;
        }
        true
    }

    /// `self` followed by `other`, if the endpoints match.
    pub fn concat(&self, other: &Path, q: &Quiver) -> Option<Path> {
        if self.end(q) != other.start {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path { start: self.start, arrows })
    }

    /// The same arrows read backwards: a path of the opposite quiver.
    pub fn reversed(&self, q: &Quiver) -> Path {
        let mut arrows = self.arrows.clone();
        arrows.reverse();
        Path { start: self.end(q), arrows }
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e{}", q.vertices[self.start])
        } else {
            self.arrows.iter().map(|&a| q.arrows[a].name.as_str()).collect::<Vec<_>>().join(".")
        }
    }
}

/// A linear combination of parallel paths of length at least two.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    terms: Vec<(u32, Path)>,
}

impl Relation {
    pub fn new(terms: Vec<(u32, Path)>) -> Self {
        Relation { terms }
    }

    pub fn terms(&self) -> &[(u32, Path)] {
        &self.terms
    }

    /// Single-path (zero) relation.
    pub fn monomial(path: Path) -> Self {
        Relation { terms: vec![(1, path)] }
    }

    fn normalized(&self, q: &Quiver, p: u32) -> Result<Relation> {
        let mut terms: Vec<(u32, Path)> = Vec::new();
        for (c, path) in &self.terms {
            if !path.is_composable(q) {
                return Err(Error::InvalidRelation("relation term is not a path".into()));
            }
            if path.len() < 2 {
                return Err(Error::InvalidRelation(format!("term {} has length {} < 2", path.display(q), path.len())));
            }
            let c = c % p;
            match terms.iter_mut().find(|(_, p2)| p2 == path) {
                Some(t) => t.0 = linalg::add(t.0, c, p),
                None => terms.push((c, path.clone())),
            }
        }
        terms.retain(|(c, _)| *c != 0);
        let Some((_, first)) = terms.first() else {
            return Err(Error::InvalidRelation("relation has no nonzero term".into()));
        };
        let (s, t) = (first.start(), first.end(q));
        if let Some((_, bad)) = terms.iter().find(|(_, x)| x.start() != s || x.end(q) != t) {
            return Err(Error::InvalidRelation(format!(
                "terms {} and {} are not parallel",
                first.display(q),
                bad.display(q)
            )));
        }
        Ok(Relation { terms })
    }

    fn source(&self) -> usize {
        self.terms[0].1.start()
    }

    fn target(&self, q: &Quiver) -> usize {
        self.terms[0].1.end(q)
    }

    fn min_len(&self) -> usize {
        self.terms.iter().map(|(_, p)| p.len()).min().unwrap_or(0)
    }

    pub fn display(&self, q: &Quiver) -> String {
        self.terms.iter().map(|(c, p)| format!("{c}*{}", p.display(q))).collect::<Vec<_>>().join(" + ")
    }
}

/// A finite-dimensional basic algebra `kQ/I` with an explicit path basis and
/// multiplication table.
pub struct Algebra {
    quiver: Quiver,
    p: u32,
    relations: Vec<Relation>,
    truncation: usize,
    basis: Vec<Path>,
    /// `mult[i * dim + j]` is the sparse coordinate vector of `basis[i] * basis[j]`.
    mult: Vec<Vec<(usize, u32)>>,
    idempotents: Vec<usize>,
    opposite: OnceLock<Arc<Algebra>>,
    /// Set on algebras produced by `opposite_arc`, pointing back at their origin.
    origin: OnceLock<Weak<Algebra>>,
}

impl Clone for Algebra {
    fn clone(&self) -> Self {
        Algebra {
            quiver: self.quiver.clone(),
            p: self.p,
            relations: self.relations.clone(),
            truncation: self.truncation,
            basis: self.basis.clone(),
            mult: self.mult.clone(),
            idempotents: self.idempotents.clone(),
            opposite: OnceLock::new(),
            origin: OnceLock::new(),
        }
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p
            && self.quiver == other.quiver
            && self.basis == other.basis
            && self.mult == other.mult
            && self.relations == other.relations
    }
}

impl Eq for Algebra {}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("p", &self.p)
            .field("vertices", &self.quiver.vertices)
            .field("basis", &self.basis_names())
            .finish()
    }
}

/// Builds `kQ/I` where `I` is generated by `relations`.
///
/// The ideal is reduced inside `kQ/J^(L+1)` for `L = 2, 3, ..., l_max` until every
/// path of length `L` is seen to lie in it; the first such `L` witnesses
/// admissibility and fixes the basis.
pub fn build_algebra(quiver: Quiver, relations: Vec<Relation>, p: u32, l_max: usize) -> Result<Algebra> {
    if !linalg::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if l_max < 2 {
        return Err(Error::InvalidRelation(format!("L_max must be at least 2, got {l_max}")));
    }
    let relations = relations.iter().map(|r| r.normalized(&quiver, p)).collect::<Result<Vec<_>>>()?;
    let mut survivor = None;
    for bound in 2..=l_max {
        let space = PathSpace::new(&quiver, bound)?;
        let ideal = space.ideal(&quiver, &relations, p);
        match space.surviving_path(&ideal, p) {
            Some(path) => survivor = Some(path),
            None => return Ok(assemble(quiver, relations, p, bound, &space, &ideal)),
        }
    }
    let path = survivor.expect("loop ran at least once");
    Err(Error::NotAdmissible { path: path.display(&quiver), length: l_max })
}

/// All paths of length at most `bound`, indexed so that long paths come first.
struct PathSpace {
    bound: usize,
    paths: Vec<Path>,
    ends: Vec<usize>,
    index: HashMap<Path, usize>,
}

impl PathSpace {
    fn new(q: &Quiver, bound: usize) -> Result<Self> {
        let mut layers: Vec<Vec<Path>> = vec![(0..q.vertex_count()).map(Path::trivial).collect()];
        let mut total = layers[0].len();
        for _ in 0..bound {
            let last = layers.last().expect("nonempty");
            let mut next = Vec::new();
            for path in last {
                let end = path.end(q);
                for (a, arrow) in q.arrows.iter().enumerate() {
                    if arrow.source == end {
                        let mut arrows = path.arrows.clone();
                        arrows.push(a);
                        next.push(Path { start: path.start, arrows });
                    }
                }
            }
            total += next.len();
            if total > PATH_LIMIT {
                return Err(Error::InvalidQuiver(format!(
                    "more than {PATH_LIMIT} paths of length <= {bound}; lower L_max or add relations"
                )));
            }
            layers.push(next);
        }
        let mut paths: Vec<Path> = layers.into_iter().flatten().collect();
        paths.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        let ends = paths.iter().map(|p| p.end(q)).collect();
        let index = paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        Ok(PathSpace { bound, paths, ends, index })
    }

    /// Image of the ideal generated by `relations` in `kQ/J^(bound+1)`.
    fn ideal(&self, q: &Quiver, relations: &[Relation], p: u32) -> Subspace {
        Subspace::from_vectors(p, self.paths.len(), &self.ideal_generators(q, relations, p))
    }

    /// The vectors `u r v` spanning the truncated ideal.
    fn ideal_generators(&self, q: &Quiver, relations: &[Relation], p: u32) -> Vec<Vec<u32>> {
        let mut rows = Vec::new();
        for r in relations {
            let Some(budget) = self.bound.checked_sub(r.min_len()) else { continue };
            let (s, t) = (r.source(), r.target(q));
            let lefts = (0..self.paths.len()).filter(|&i| self.ends[i] == s && self.paths[i].len() <= budget);
            for u in lefts.map(|i| &self.paths[i]) {
                let rights = self.paths.iter().filter(|v| v.start == t && v.len() + u.len() <= budget);
                for v in rights {
                    let mut row = vec![0u32; self.paths.len()];
                    for (c, term) in &r.terms {
                        if u.len() + term.len() + v.len() > self.bound {
                            continue;
                        }
                        let mut arrows = u.arrows.clone();
                        arrows.extend_from_slice(&term.arrows);
                        arrows.extend_from_slice(&v.arrows);
                        let col = self.index[&Path { start: u.start, arrows }];
                        row[col] = linalg::add(row[col], *c, p);
                    }
                    if row.iter().any(|&x| x != 0) {
                        rows.push(row);
                    }
                }
            }
        }
        rows
    }

    fn surviving_path(&self, ideal: &Subspace, p: u32) -> Option<Path> {
        self.paths.iter().filter(|path| path.len() == self.bound).find_map(|path| {
            let mut unit = vec![0u32; self.paths.len()];
            unit[self.index[path]] = 1 % p;
            (!ideal.contains(&unit)).then(|| path.clone())
        })
    }

    /// Coordinates of a path in the residue basis (`basis_of_column` maps
    /// surviving columns to basis indices).
    fn reduce_path(
        &self,
        path: &Path,
        ideal: &Subspace,
        basis_of_column: &HashMap<usize, usize>,
        p: u32,
    ) -> Vec<(usize, u32)> {
        if path.len() > self.bound {
            return Vec::new();
        }
        let mut unit = vec![0u32; self.paths.len()];
        unit[self.index[path]] = 1 % p;
        let reduced = ideal.reduce(&unit);
        let mut out: Vec<(usize, u32)> =
            reduced.iter().enumerate().filter(|(_, &c)| c != 0).map(|(col, &c)| (basis_of_column[&col], c)).collect();
        out.sort();
        out
    }
}

fn assemble(
    quiver: Quiver,
    relations: Vec<Relation>,
    p: u32,
    bound: usize,
    space: &PathSpace,
    ideal: &Subspace,
) -> Algebra {
    let mut basis: Vec<Path> = ideal.complement_positions().into_iter().map(|c| space.paths[c].clone()).collect();
    basis.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let basis_of_column: HashMap<usize, usize> =
        basis.iter().enumerate().map(|(i, path)| (space.index[path], i)).collect();
    let dim = basis.len();
    let mut mult = Vec::with_capacity(dim * dim);
    for x in &basis {
        for y in &basis {
            let entry = match x.concat(y, &quiver) {
                Some(xy) => space.reduce_path(&xy, ideal, &basis_of_column, p),
                None => Vec::new(),
            };
            mult.push(entry);
        }
    }
    let idempotents = (0..quiver.vertex_count())
        .map(|v| basis.iter().position(|b| *b == Path::trivial(v)).expect("trivial paths are never reduced"))
        .collect();
    Algebra {
        quiver,
        p,
        relations,
        truncation: bound,
        basis,
        mult,
        idempotents,
        opposite: OnceLock::new(),
        origin: OnceLock::new(),
    }
}

impl Algebra {
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    /// Path length at which admissibility was witnessed.
    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn basis_names(&self) -> Vec<String> {
        self.basis.iter().map(|b| b.display(&self.quiver)).collect()
    }

    /// Basis index of the idempotent `e_v`.
    pub fn idempotent(&self, v: usize) -> usize {
        self.idempotents[v]
    }

    pub fn basis_start(&self, i: usize) -> usize {
        self.basis[i].start()
    }

    pub fn basis_end(&self, i: usize) -> usize {
        self.basis[i].end(&self.quiver)
    }

    /// Basis indices of residue paths from `v` to `w`, in basis order.
    pub fn paths_between(&self, v: usize, w: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.basis_start(i) == v && self.basis_end(i) == w).collect()
    }

    /// Coordinates of `basis[i] * basis[j]`.
    pub fn mult_basis(&self, i: usize, j: usize) -> &[(usize, u32)] {
        &self.mult[i * self.dim() + j]
    }

    /// Product of two elements given in basis coordinates.
    pub fn multiply(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let p = self.p;
        let mut out = vec![0u32; self.dim()];
        for (i, &a) in x.iter().enumerate().filter(|(_, &a)| a != 0) {
            for (j, &b) in y.iter().enumerate().filter(|(_, &b)| b != 0) {
                let ab = linalg::mul(a, b, p);
                for &(k, c) in self.mult_basis(i, j) {
                    out[k] = linalg::add(out[k], linalg::mul(ab, c, p), p);
                }
            }
        }
        out
    }

    pub fn unit(&self) -> Vec<u32> {
        let mut e = vec![0u32; self.dim()];
        for &i in &self.idempotents {
            e[i] = 1;
        }
        e
    }

    /// Spanning vectors (over the basis) of the `k`-th power of the arrow ideal.
    pub fn arrow_ideal_power(&self, k: usize) -> Subspace {
        let d = self.dim();
        let units = |i: usize| {
            let mut v = vec![0u32; d];
            v[i] = 1;
            v
        };
        let mut current: Vec<Vec<u32>> = (0..d).filter(|&i| !self.basis[i].is_trivial()).map(units).collect();
        let arrows = current.clone();
        for _ in 1..k {
            let mut next = Vec::new();
            for x in &current {
                for a in &arrows {
                    next.push(self.multiply(x, a));
                }
            }
            current = Subspace::from_vectors(self.p, d, &next).basis_vectors();
        }
        if k == 0 {
            return Subspace::full(self.p, d);
        }
        Subspace::from_vectors(self.p, d, &current)
    }

    /// Every basis triple associates.
    pub fn is_associative(&self) -> bool {
        let d = self.dim();
        let unit = |i: usize| {
            let mut v = vec![0u32; d];
            v[i] = 1;
            v
        };
        (0..d).all(|i| {
            (0..d).all(|j| {
                let xy = self.multiply(&unit(i), &unit(j));
                (0..d).all(|k| {
                    let z = unit(k);
                    let left = self.multiply(&xy, &z);
                    let right = self.multiply(&unit(i), &self.multiply(&unit(j), &z));
                    left == right
                })
            })
        })
    }

    /// The opposite algebra: reversed quiver and relations, same basis indices
    /// (each path reversed) and transposed multiplication.
    pub fn opposite(&self) -> Algebra {
        let quiver = self.quiver.opposite();
        let relations = self
            .relations
            .iter()
            .map(|r| Relation { terms: r.terms.iter().map(|(c, path)| (*c, path.reversed(&self.quiver))).collect() })
            .collect();
        let basis = self.basis.iter().map(|b| b.reversed(&self.quiver)).collect();
        let d = self.dim();
        let mut mult = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                mult.push(self.mult[j * d + i].clone());
            }
        }
        Algebra {
            quiver,
            p: self.p,
            relations,
            truncation: self.truncation,
            basis,
            mult,
            idempotents: self.idempotents.clone(),
            opposite: OnceLock::new(),
            origin: OnceLock::new(),
        }
    }

    /// Shared handle to the opposite algebra. Taking the opposite twice returns
    /// the original handle while it is alive.
    pub fn opposite_arc(self: &Arc<Self>) -> Arc<Algebra> {
        if let Some(origin) = self.origin.get().and_then(Weak::upgrade) {
            return origin;
        }
        self.opposite
            .get_or_init(|| {
                let op = Arc::new(self.opposite());
                let _ = op.origin.set(Arc::downgrade(self));
                op
            })
            .clone()
    }

    /// Basis index of the arrow `a` (arrows are never reduced away).
    pub fn arrow_basis(&self, a: usize) -> usize {
        let path = Path::arrow(&self.quiver, a);
        self.basis.iter().position(|b| *b == path).expect("arrows are basis elements")
    }

    /// `Λ/(e)` for `e` the sum of the vertex idempotents in `kill`.
    pub fn vertex_quotient(&self, kill: &[usize]) -> Result<Algebra> {
        let n = self.vertex_count();
        let killed: Vec<bool> = (0..n).map(|v| kill.contains(&v)).collect();
        if killed.iter().all(|&k| k) {
            return Err(Error::ZeroQuotient);
        }
        if killed.iter().all(|&k| !k) {
            return Ok(self.clone());
        }
        let survivors: Vec<usize> = (0..n).filter(|&v| !killed[v]).collect();
        let names: Vec<&str> = survivors.iter().map(|&v| self.quiver.vertices[v].as_str()).collect();
        let mut quiver = Quiver::new::<&str>(&names, &[])?;
        let mut arrow_map = HashMap::new();
        for (a, arrow) in self.quiver.arrows.iter().enumerate() {
            if !killed[arrow.source] && !killed[arrow.target] {
                let s = &self.quiver.vertices[arrow.source];
                let t = &self.quiver.vertices[arrow.target];
                arrow_map.insert(a, quiver.add_arrow(&arrow.name, s, t)?);
            }
        }
        let vertex_map: HashMap<usize, usize> = survivors.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let translate = |path: &Path| -> Option<Path> {
            if path.arrows.iter().any(|a| !arrow_map.contains_key(a)) || killed[path.start] {
                return None;
            }
            Some(Path { start: vertex_map[&path.start], arrows: path.arrows.iter().map(|a| arrow_map[a]).collect() })
        };

        // Project the ideal onto paths that avoid the killed vertices.
        let space = PathSpace::new(&self.quiver, self.truncation)?;
        let mut groups: HashMap<(usize, usize), Vec<Vec<u32>>> = HashMap::new();
        for row in space.ideal_generators(&self.quiver, &self.relations, self.p) {
            let mut kept = vec![0u32; row.len()];
            let mut ends = None;
            for (col, &c) in row.iter().enumerate() {
                if c != 0 && translate(&space.paths[col]).is_some() {
                    kept[col] = c;
                    ends = Some((space.paths[col].start, space.ends[col]));
                }
            }
            if let Some(key) = ends {
                groups.entry(key).or_default().push(kept);
            }
        }
        let mut keys: Vec<_> = groups.keys().copied().collect();
        keys.sort();
        let mut relations = Vec::new();
        for key in keys {
            let span = Subspace::from_vectors(self.p, space.paths.len(), &groups[&key]);
            for v in span.basis_vectors() {
                let terms = v
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(col, &c)| (c, translate(&space.paths[col]).expect("kept columns survive")))
                    .collect();
                relations.push(Relation { terms });
            }
        }
        build_algebra(quiver, relations, self.p, self.truncation.max(2))
    }
}

/// Parses a relation such as `"1*a1.a2 + 2*b1.b2"`; coefficients are reduced mod `p`.
pub fn parse_relation(q: &Quiver, text: &str, p: u32) -> Result<Relation> {
    let mut terms = Vec::new();
    for raw in text.split('+') {
        let raw = raw.trim();
        if raw.is_empty() {
            return Err(Error::InvalidRelation(format!("empty term in relation {text}")));
        }
        let (coeff, path) = match raw.split_once('*') {
            Some((c, path)) => {
                let c: i64 = c.trim().parse().map_err(|_| Error::InvalidRelation(format!("bad coefficient {c:?}")))?;
                (c, path)
            }
            None => (1, raw),
        };
        terms.push((coeff, q.parse_path(path)?));
    }
    Ok(Relation { terms: terms.into_iter().map(|(c, path)| (linalg::reduce(c, p), path)).collect() })
}
