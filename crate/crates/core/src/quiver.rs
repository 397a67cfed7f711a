//! Quivers with homogeneous relations and their path algebras `kQ/I`.
//!
//! Paths compose left to right: the word `[p, q]` traverses `p` first. In the
//! resulting algebra the product `p · q` of basis paths is their
//! concatenation, so a path from `s` to `t` lies in `e_s A e_t`.
//!
//! The algebra is built one path length at a time. With `A_ℓ` the degree-ℓ
//! part of `kQ/I`, we have `A_ℓ = (A_{ℓ-1} ⊗ kQ_1) / span{u·ρ}` where `ρ`
//! runs over relations and `u` over a basis of `A_{ℓ-|ρ|}`; the reduction is
//! done separately in every (source, target) cell.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{check_anti_automorphism, Algebra, AlgebraData, AlgebraError, AntiAutomorphism, Sparse};
use crate::exactlin::{is_zero_vec, FieldSpec, Matrix, Scalar, Subspace};

pub const DEFAULT_MAX_PATH_LEN: usize = 64;
pub const MAX_PATH_LEN_ENV: &str = "QHA_MAX_PATH_LEN";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuiverError {
    #[error("duplicate name {0:?}")]
    DuplicateName(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("unknown arrow {0:?}")]
    UnknownArrow(String),
    #[error("non-composable path [{0}]")]
    NonComposable(String),
    #[error("relation {0} is not admissible: every path needs length at least 2")]
    NotAdmissible(usize),
    #[error("relation {0} is empty")]
    EmptyRelation(usize),
    #[error("relation {0} mixes paths with different endpoints")]
    MixedEndpoints(usize),
    #[error("relation {0} is not homogeneous: all paths must have the same length")]
    NotHomogeneous(usize),
    #[error("order has a cycle through {0:?}")]
    OrderCycle(String),
    #[error("duality map is not an involution at arrow {0:?}")]
    DualityNotInvolution(String),
    #[error("duality map does not reverse arrow {0:?}")]
    DualityNotReversing(String),
    #[error("duality map is missing arrow {0:?}")]
    DualityIncomplete(String),
    #[error("presentation not finite-dimensional: paths of length {0} survive")]
    NotFiniteDimensional(usize),
    #[error("relation ideal is not stable under the duality: image of relation {index} ({relation}) is nonzero")]
    DualityNotStable { index: usize, relation: String },
    #[error("no duality given")]
    NoDuality,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<(String, String, String)>) -> Result<Self, QuiverError> {
        let mut seen = BTreeSet::new();
        for v in &vertices {
            if !seen.insert(v.clone()) {
                return Err(QuiverError::DuplicateName(v.clone()));
            }
        }
        let find = |v: &str| vertices.iter().position(|x| x == v).ok_or_else(|| QuiverError::UnknownVertex(v.into()));
        let mut names = BTreeSet::new();
        let mut out = Vec::new();
        for (name, s, t) in arrows {
            if !names.insert(name.clone()) {
                return Err(QuiverError::DuplicateName(name));
            }
            out.push(Arrow { source: find(&s)?, target: find(&t)?, name });
        }
        Ok(Quiver { vertices, arrows: out })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_index(&self, name: &str) -> Result<usize, QuiverError> {
        self.arrows.iter().position(|a| a.name == name).ok_or_else(|| QuiverError::UnknownArrow(name.into()))
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize, QuiverError> {
        self.vertices.iter().position(|v| v == name).ok_or_else(|| QuiverError::UnknownVertex(name.into()))
    }

    /// Checks composability of a nonempty arrow word; returns (source, target).
    pub fn endpoints(&self, word: &[usize]) -> Result<(usize, usize), QuiverError> {
        let first = word.first().expect("nonempty word");
        for w in word.windows(2) {
            if self.arrows[w[0]].target != self.arrows[w[1]].source {
                return Err(QuiverError::NonComposable(self.word_names(word).join(", ")));
            }
        }
        Ok((self.arrows[*first].source, self.arrows[*word.last().unwrap()].target))
    }

    pub fn word_names(&self, word: &[usize]) -> Vec<String> {
        word.iter().map(|&a| self.arrows[a].name.clone()).collect()
    }
}

/// A path: start vertex plus arrow word (traversed first to last).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub start: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn end(&self, q: &Quiver) -> usize {
        self.arrows.last().map_or(self.start, |&a| q.arrows[a].target)
    }

    pub fn label(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e{}", q.vertices[self.start])
        } else {
            q.word_names(&self.arrows).join(".")
        }
    }
}

/// Linear combination of parallel paths of one common length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Scalar, Vec<usize>)>,
    pub source: usize,
    pub target: usize,
    pub length: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    field: FieldSpec,
    quiver: Quiver,
    relations: Vec<Relation>,
    order: Vec<(usize, usize)>,
    duality: Option<Vec<usize>>,
}

/// Named input for [`Presentation::from_names`].
#[derive(Clone, Debug, Default)]
pub struct PresentationSpec {
    pub vertices: Vec<String>,
    /// `(name, from, to)`.
    pub arrows: Vec<(String, String, String)>,
    /// Each relation is a list of `(coefficient, arrow names)`.
    pub relations: Vec<Vec<(Scalar, Vec<String>)>>,
    /// Covering pairs `(smaller, larger)`.
    pub order: Vec<(String, String)>,
    pub duality: Option<Vec<(String, String)>>,
}

impl Presentation {
    pub fn from_names(field: FieldSpec, spec: PresentationSpec) -> Result<Self, QuiverError> {
        let quiver = Quiver::new(spec.vertices, spec.arrows)?;
        let mut relations = Vec::new();
        for (idx, rel) in spec.relations.into_iter().enumerate() {
            let mut terms = Vec::new();
            for (c, names) in rel {
                let word = names.iter().map(|n| quiver.arrow_index(n)).collect::<Result<Vec<_>, _>>()?;
                terms.push((field.normalize(c), word));
            }
            relations.push(Self::check_relation(&quiver, idx, terms)?);
        }
        let mut order = Vec::new();
        for (a, b) in spec.order {
            order.push((quiver.vertex_index(&a)?, quiver.vertex_index(&b)?));
        }
        let duality = match spec.duality {
            None => None,
            Some(pairs) => {
                let mut map = vec![None; quiver.arrows.len()];
                for (a, b) in pairs {
                    map[quiver.arrow_index(&a)?] = Some(quiver.arrow_index(&b)?);
                }
                let map = map
                    .into_iter()
                    .enumerate()
                    .map(|(i, m)| m.ok_or_else(|| QuiverError::DualityIncomplete(quiver.arrows[i].name.clone())))
                    .collect::<Result<Vec<_>, _>>()?;
                Some(map)
            }
        };
        let p = Presentation { field, quiver, relations, order, duality };
        p.validate_order()?;
        p.validate_duality()?;
        Ok(p)
    }

    fn check_relation(q: &Quiver, idx: usize, terms: Vec<(Scalar, Vec<usize>)>) -> Result<Relation, QuiverError> {
        if terms.is_empty() {
            return Err(QuiverError::EmptyRelation(idx));
        }
        let mut ends = None;
        let mut length = None;
        for (_, w) in &terms {
            if w.len() < 2 {
                return Err(QuiverError::NotAdmissible(idx));
            }
            let e = q.endpoints(w)?;
            if *ends.get_or_insert(e) != e {
                return Err(QuiverError::MixedEndpoints(idx));
            }
            if *length.get_or_insert(w.len()) != w.len() {
                return Err(QuiverError::NotHomogeneous(idx));
            }
        }
        let (source, target) = ends.unwrap();
        Ok(Relation { terms, source, target, length: length.unwrap() })
    }

    fn validate_order(&self) -> Result<(), QuiverError> {
        // Kahn's algorithm; anything left over sits on a cycle.
        let n = self.quiver.vertices.len();
        let mut indeg = vec![0usize; n];
        for &(_, b) in &self.order {
            indeg[b] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut done = 0;
        while let Some(v) = stack.pop() {
            done += 1;
            for &(a, b) in &self.order {
                if a == v {
                    indeg[b] -= 1;
                    if indeg[b] == 0 {
                        stack.push(b);
                    }
                }
            }
        }
        if done < n {
            let v = (0..n).find(|&v| indeg[v] > 0).unwrap();
            return Err(QuiverError::OrderCycle(self.quiver.vertices[v].clone()));
        }
        Ok(())
    }

    fn validate_duality(&self) -> Result<(), QuiverError> {
        let Some(map) = &self.duality else { return Ok(()) };
        for (i, &j) in map.iter().enumerate() {
            let (a, b) = (&self.quiver.arrows[i], &self.quiver.arrows[j]);
            if map[j] != i {
                return Err(QuiverError::DualityNotInvolution(a.name.clone()));
            }
            if a.source != b.target || a.target != b.source {
                return Err(QuiverError::DualityNotReversing(a.name.clone()));
            }
        }
        Ok(())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// Covering pairs `(smaller, larger)` as vertex indices.
    pub fn order(&self) -> &[(usize, usize)] {
        &self.order
    }

    pub fn duality(&self) -> Option<&[usize]> {
        self.duality.as_deref()
    }

    /// Same presentation over another field.
    pub fn with_field(&self, field: FieldSpec) -> Self {
        let mut p = self.clone();
        p.field = field;
        for r in &mut p.relations {
            for (c, _) in &mut r.terms {
                *c = field.normalize(c.clone());
            }
        }
        p
    }

    pub fn relation_label(&self, idx: usize) -> String {
        let r = &self.relations[idx];
        r.terms
            .iter()
            .map(|(c, w)| format!("{}*{}", crate::exactlin::format_scalar(c), self.quiver.word_names(w).join(".")))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// The algebra `kQ/I` with its chosen path basis and normal-form machinery.
#[derive(Clone, Debug)]
pub struct PathAlgebra {
    pub algebra: Arc<Algebra>,
    presentation: Presentation,
    /// Basis paths per length.
    layers: Vec<Vec<Path>>,
    /// `right_mult[ℓ][b][a]`: image of (basis path b of length ℓ)·(arrow a)
    /// in layer ℓ+1 coordinates, when composable.
    right_mult: Vec<Vec<Vec<Option<Sparse>>>>,
    /// Global basis index of (layer, position).
    offsets: Vec<usize>,
}

pub fn max_path_len_from_env() -> usize {
    std::env::var(MAX_PATH_LEN_ENV).ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_MAX_PATH_LEN)
}

/// Builds `kQ/I` with the path-length cap taken from the environment.
pub fn build_algebra(p: &Presentation) -> Result<PathAlgebra, QuiverError> {
    build_algebra_with_cap(p, max_path_len_from_env())
}

pub fn build_algebra_with_cap(p: &Presentation, cap: usize) -> Result<PathAlgebra, QuiverError> {
    let q = &p.quiver;
    let f = p.field;
    let n_arrows = q.arrows.len();
    let mut layers: Vec<Vec<Path>> = vec![(0..q.vertices.len()).map(|v| Path { start: v, arrows: vec![] }).collect()];
    let mut right_mult: Vec<Vec<Vec<Option<Sparse>>>> = Vec::new();

    let name_key = |path: &Path| -> Vec<String> { q.word_names(&path.arrows) };

    loop {
        let ell = layers.len();
        if ell > cap {
            return Err(QuiverError::NotFiniteDimensional(ell - 1));
        }
        let prev = &layers[ell - 1];
        // Candidate columns (b, a), grouped by cell.
        let mut cells: BTreeMap<(usize, usize), Vec<(usize, usize)>> = BTreeMap::new();
        for (bi, b) in prev.iter().enumerate() {
            let end = b.end(q);
            for (ai, a) in q.arrows.iter().enumerate() {
                if a.source == end {
                    cells.entry((b.start, a.target)).or_default().push((bi, ai));
                }
            }
        }
        // Relation vectors u·ρ, expressed on candidate columns.
        let mut rel_vectors: BTreeMap<(usize, usize), Vec<BTreeMap<(usize, usize), Scalar>>> = BTreeMap::new();
        if ell >= 2 {
            for r in p.relations.iter().filter(|r| r.length <= ell) {
                for (ui, u) in layers[ell - r.length].iter().enumerate() {
                    if u.end(q) != r.source {
                        continue;
                    }
                    let mut vec: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
                    for (c, word) in &r.terms {
                        let (init, last) = word.split_at(word.len() - 1);
                        let nf = apply_word(f, &right_mult, ell - r.length, vec![(ui, Scalar::one())], init);
                        for (bi, x) in nf {
                            let e = vec.entry((bi, last[0])).or_insert_with(Scalar::zero);
                            *e = f.add(e, &f.mul(c, &x));
                        }
                    }
                    vec.retain(|_, x| !x.is_zero());
                    if !vec.is_empty() {
                        rel_vectors.entry((u.start, r.target)).or_default().push(vec);
                    }
                }
            }
        }
        let mut new_layer: Vec<Path> = Vec::new();
        // Per cell: candidate → Ok(new index) or reduction over kept columns.
        let mut images: BTreeMap<(usize, usize), Sparse> = BTreeMap::new();
        let mut pending: Vec<((usize, usize), Vec<(usize, Scalar)>)> = Vec::new();
        for (cell, mut cols) in cells {
            // Largest paths first, so elimination removes them and keeps the small ones.
            cols.sort_by(|x, y| {
                let px = extend(&prev[x.0], x.1);
                let py = extend(&prev[y.0], y.1);
                name_key(&py).cmp(&name_key(&px))
            });
            let pos: BTreeMap<(usize, usize), usize> = cols.iter().enumerate().map(|(i, c)| (*c, i)).collect();
            let rows: Vec<Vec<Scalar>> = rel_vectors
                .get(&cell)
                .map(|vs| {
                    vs.iter()
                        .map(|v| {
                            let mut row = vec![Scalar::zero(); cols.len()];
                            for (k, x) in v {
                                row[pos[k]] = x.clone();
                            }
                            row
                        })
                        .collect()
                })
                .unwrap_or_default();
            let sub = Subspace::from_spanning(f, cols.len(), rows);
            let kept = sub.complement_indices();
            let mut kept_sorted: Vec<usize> = kept.clone();
            kept_sorted.sort_by_key(|&c| name_key(&extend(&prev[cols[c].0], cols[c].1)));
            let base = new_layer.len();
            let mut local = vec![usize::MAX; cols.len()];
            for (k, &c) in kept_sorted.iter().enumerate() {
                local[c] = base + k;
                new_layer.push(extend(&prev[cols[c].0], cols[c].1));
            }
            for (c, key) in cols.iter().enumerate() {
                let mut unit = vec![Scalar::zero(); cols.len()];
                unit[c] = Scalar::one();
                let red = sub.reduce(&unit);
                let img: Vec<(usize, Scalar)> =
                    red.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (local[i], x)).collect();
                pending.push((*key, img));
            }
        }
        // Sort the whole layer by name so indices are global-lexicographic.
        let mut perm: Vec<usize> = (0..new_layer.len()).collect();
        perm.sort_by_key(|&i| (name_key(&new_layer[i]), new_layer[i].start));
        let mut inv = vec![0; perm.len()];
        for (new, &old) in perm.iter().enumerate() {
            inv[old] = new;
        }
        let sorted_layer: Vec<Path> = perm.iter().map(|&i| new_layer[i].clone()).collect();
        for (key, img) in pending {
            let mut v: Sparse = img.into_iter().map(|(i, x)| (inv[i], x)).collect();
            v.sort_by_key(|(i, _)| *i);
            images.insert(key, v);
        }
        let mut table = vec![vec![None; n_arrows]; prev.len()];
        for ((bi, ai), v) in images {
            table[bi][ai] = Some(v);
        }
        right_mult.push(table);
        if sorted_layer.is_empty() {
            break;
        }
        layers.push(sorted_layer);
    }

    let mut offsets = Vec::with_capacity(layers.len());
    let mut total = 0;
    for l in &layers {
        offsets.push(total);
        total += l.len();
    }
    let algebra = Arc::new(assemble(p, &layers, &right_mult, &offsets)?);
    Ok(PathAlgebra { algebra, presentation: p.clone(), layers, right_mult, offsets })
}

fn assemble(
    p: &Presentation,
    layers: &[Vec<Path>],
    right_mult: &[Vec<Vec<Option<Sparse>>>],
    offsets: &[usize],
) -> Result<Algebra, AlgebraError> {
    let q = &p.quiver;
    let paths: Vec<(usize, &Path)> =
        layers.iter().enumerate().flat_map(|(l, ps)| ps.iter().map(move |p| (l, p))).collect();
    let n = paths.len();
    let mut products = vec![vec![Vec::new(); n]; n];
    for (i, (li, pi)) in paths.iter().enumerate() {
        for (j, (_, pj)) in paths.iter().enumerate() {
            if pi.end(q) != pj.start {
                continue;
            }
            let local = i - offsets[*li];
            let v = apply_word(p.field, right_mult, *li, vec![(local, Scalar::one())], &pj.arrows);
            let lj = li + pj.len();
            products[i][j] = v.into_iter().map(|(k, x)| (offsets[lj] + k, x)).collect();
        }
    }
    Algebra::new(AlgebraData {
        field: p.field,
        basis_labels: paths.iter().map(|(_, p)| p.label(q)).collect(),
        weights: q.vertices.clone(),
        idempotents: (0..q.vertices.len()).collect(),
        products,
    })
}

fn extend(p: &Path, a: usize) -> Path {
    let mut arrows = p.arrows.clone();
    arrows.push(a);
    Path { start: p.start, arrows }
}

/// Applies right multiplication by each arrow of `word` to a sparse vector in layer `ell`.
fn apply_word(
    f: FieldSpec,
    right_mult: &[Vec<Vec<Option<Sparse>>>],
    ell: usize,
    mut v: Sparse,
    word: &[usize],
) -> Sparse {
    for (step, &a) in word.iter().enumerate() {
        let table = &right_mult[ell + step];
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (b, x) in &v {
            if let Some(img) = &table[*b][a] {
                for (k, y) in img {
                    let e = acc.entry(*k).or_insert_with(Scalar::zero);
                    *e = f.add(e, &f.mul(x, y));
                }
            }
        }
        v = acc.into_iter().filter(|(_, x)| !x.is_zero()).collect();
        if v.is_empty() {
            break;
        }
    }
    v
}

impl PathAlgebra {
    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    /// Number of basis paths of each length.
    pub fn layer_counts(&self) -> Vec<usize> {
        self.layers.iter().map(Vec::len).collect()
    }

    pub fn basis_paths(&self) -> Vec<Path> {
        self.layers.iter().flatten().cloned().collect()
    }

    /// Normal form of an arbitrary path in the global basis.
    pub fn normal_form(&self, path: &Path) -> Result<Vec<Scalar>, QuiverError> {
        if !path.arrows.is_empty() {
            let (s, _) = self.presentation.quiver.endpoints(&path.arrows)?;
            if s != path.start {
                return Err(QuiverError::NonComposable(path.label(&self.presentation.quiver)));
            }
        }
        let mut out = vec![Scalar::zero(); self.algebra.dim()];
        let len = path.len();
        if len >= self.layers.len() {
            return Ok(out);
        }
        let v = apply_word(self.presentation.field, &self.right_mult, 0, vec![(path.start, Scalar::one())], &path.arrows);
        for (k, x) in v {
            out[self.offsets[len] + k] = x;
        }
        Ok(out)
    }

    /// Index of the basis element for a given arrow.
    pub fn arrow_basis_index(&self, arrow: usize) -> usize {
        let pos = self.layers[1].iter().position(|p| p.arrows == [arrow]).expect("arrows survive");
        self.offsets[1] + pos
    }
}

/// Extends the arrow involution to an anti-automorphism by reverse-and-swap.
pub fn induced_duality(pa: &PathAlgebra) -> Result<AntiAutomorphism, QuiverError> {
    let p = &pa.presentation;
    let sigma = p.duality.as_ref().ok_or(QuiverError::NoDuality)?;
    let q = &p.quiver;
    let f = p.field;
    let image_path = |path: &Path| -> Path {
        let arrows: Vec<usize> = path.arrows.iter().rev().map(|&a| sigma[a]).collect();
        Path { start: path.end(q), arrows }
    };
    for (idx, r) in p.relations.iter().enumerate() {
        let mut total = vec![Scalar::zero(); pa.algebra.dim()];
        for (c, w) in &r.terms {
            let img = image_path(&Path { start: r.source, arrows: w.clone() });
            for (t, x) in total.iter_mut().zip(pa.normal_form(&img)?) {
                f.add_mul_assign(t, c, &x);
            }
        }
        if !is_zero_vec(&total) {
            return Err(QuiverError::DualityNotStable { index: idx, relation: p.relation_label(idx) });
        }
    }
    let columns: Vec<Vec<Scalar>> =
        pa.basis_paths().iter().map(|b| pa.normal_form(&image_path(b))).collect::<Result<_, _>>()?;
    let m = Matrix::from_columns(f, pa.algebra.dim(), &columns);
    Ok(check_anti_automorphism(&pa.algebra, m)?)
}
