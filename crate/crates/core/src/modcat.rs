//! Finite-dimensional left modules over an [`Algebra`].
//!
//! A module is stored weight by weight: `M = ⊕_λ e_λ M`, with one action
//! matrix per algebra basis element. A basis element `b ∈ e_s A e_t` acts by
//! a `dim M_s × dim M_t` matrix. Vectors of `M` are concatenations of their
//! weight components in weight order.

use std::sync::Arc;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::algebra::{Algebra, AntiAutomorphism};
use crate::exactlin::{is_zero_vec, FieldSpec, Matrix, Scalar, Subspace};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModuleError {
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("action matrix for basis element {0} has the wrong shape")]
    Shape(usize),
    #[error("action does not respect the product b_{0} · b_{1}")]
    NotMultiplicative(usize, usize),
    #[error("idempotent {0} does not act as the identity on its weight space")]
    Idempotent(usize),
    #[error("unknown weight {0}")]
    UnknownWeight(usize),
    #[error("could not decide whether the modules are isomorphic")]
    Undetermined,
    #[error("vector does not lie in the module")]
    NotInModule,
}

#[derive(Clone, Debug)]
pub struct Module {
    algebra: Arc<Algebra>,
    dims: Vec<usize>,
    offsets: Vec<usize>,
    action: Vec<Matrix>,
}

impl PartialEq for Module {
    fn eq(&self, other: &Self) -> bool {
        Algebra::same(&self.algebra, &other.algebra) && self.dims == other.dims && self.action == other.action
    }
}

fn offsets_of(dims: &[usize]) -> Vec<usize> {
    let mut acc = 0;
    dims.iter()
        .map(|d| {
            let o = acc;
            acc += d;
            o
        })
        .collect()
}

impl Module {
    /// Validated constructor.
    pub fn new(algebra: Arc<Algebra>, dims: Vec<usize>, action: Vec<Matrix>) -> Result<Self, ModuleError> {
        let m = Module::from_parts(algebra, dims, action);
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn from_parts(algebra: Arc<Algebra>, dims: Vec<usize>, action: Vec<Matrix>) -> Self {
        let offsets = offsets_of(&dims);
        Module { algebra, dims, offsets, action }
    }

    pub fn zero(algebra: &Arc<Algebra>) -> Self {
        let dims = vec![0; algebra.num_weights()];
        let action = (0..algebra.dim()).map(|_| Matrix::zeros(algebra.field(), 0, 0)).collect();
        Module::from_parts(algebra.clone(), dims, action)
    }

    /// Checks shapes, unit action and multiplicativity on all basis pairs.
    pub fn validate(&self) -> Result<(), ModuleError> {
        let a = &self.algebra;
        if self.dims.len() != a.num_weights() || self.action.len() != a.dim() {
            return Err(ModuleError::Shape(0));
        }
        for i in 0..a.dim() {
            let (s, t) = a.block(i);
            let m = &self.action[i];
            if m.rows() != self.dims[s] || m.cols() != self.dims[t] {
                return Err(ModuleError::Shape(i));
            }
        }
        for (w, &e) in a.idempotents().iter().enumerate() {
            if self.action[e] != Matrix::identity(a.field(), self.dims[w]) {
                return Err(ModuleError::Idempotent(w));
            }
        }
        for i in 0..a.dim() {
            let (s, t) = a.block(i);
            for j in 0..a.dim() {
                let (u, v) = a.block(j);
                if t != u {
                    continue;
                }
                let lhs = self.action[i].mul(&self.action[j]);
                let mut rhs = Matrix::zeros(a.field(), self.dims[s], self.dims[v]);
                for (k, c) in a.product(i, j) {
                    rhs.add_scaled(c, &self.action[*k]);
                }
                if lhs != rhs {
                    return Err(ModuleError::NotMultiplicative(i, j));
                }
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Dimension vector `(dim e_λ M)_λ`; for these split basic algebras this is
    /// also the composition multiplicity vector.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn offset(&self, w: usize) -> usize {
        self.offsets[w]
    }

    pub fn action(&self, b: usize) -> &Matrix {
        &self.action[b]
    }

    /// Weight component `e_w v` of a global vector.
    pub fn component<'v>(&self, v: &'v [Scalar], w: usize) -> &'v [Scalar] {
        &v[self.offsets[w]..self.offsets[w] + self.dims[w]]
    }

    pub fn embed(&self, w: usize, part: &[Scalar]) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim()];
        v[self.offsets[w]..self.offsets[w] + self.dims[w]].clone_from_slice(part);
        v
    }

    /// `b · v` for a basis element `b` and a global vector `v`.
    pub fn act(&self, b: usize, v: &[Scalar]) -> Vec<Scalar> {
        let (s, t) = self.algebra.block(b);
        let part = self.action[b].mul_vec(self.component(v, t));
        self.embed(s, &part)
    }

    /// Action of an algebra element given in the basis.
    pub fn act_element(&self, x: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let f = self.field();
        let mut out = vec![Scalar::zero(); self.dim()];
        for (b, c) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (o, y) in out.iter_mut().zip(self.act(b, v)) {
                f.add_mul_assign(o, c, &y);
            }
        }
        out
    }

    /// Matrix of an algebra element on the `t → s` block.
    pub fn element_block(&self, x: &[Scalar], s: usize, t: usize) -> Matrix {
        let mut m = Matrix::zeros(self.field(), self.dims[s], self.dims[t]);
        for &b in self.algebra.block_basis(s, t) {
            if !x[b].is_zero() {
                m.add_scaled(&x[b], &self.action[b]);
            }
        }
        m
    }

    pub fn whole(&self) -> Submodule {
        Submodule { parts: self.dims.iter().map(|&d| Subspace::full(self.field(), d)).collect() }
    }

    pub fn zero_submodule(&self) -> Submodule {
        Submodule { parts: self.dims.iter().map(|&d| Subspace::zero(self.field(), d)).collect() }
    }

    /// Smallest submodule containing `vectors` (global coordinates).
    pub fn submodule_generated(&self, vectors: &[Vec<Scalar>]) -> Submodule {
        let mut sub = self.zero_submodule();
        let mut queue: Vec<(usize, Vec<Scalar>)> = Vec::new();
        for v in vectors {
            assert_eq!(v.len(), self.dim(), "vector of wrong length");
            for w in 0..self.dims.len() {
                let c = self.component(v, w);
                if !is_zero_vec(c) {
                    queue.push((w, c.to_vec()));
                }
            }
        }
        self.close(&mut sub, queue);
        sub
    }

    /// Smallest submodule containing the given weight-homogeneous vectors.
    pub fn submodule_generated_by_parts(&self, parts: &[(usize, Vec<Scalar>)]) -> Submodule {
        let mut sub = self.zero_submodule();
        self.close(&mut sub, parts.to_vec());
        sub
    }

    fn close(&self, sub: &mut Submodule, mut queue: Vec<(usize, Vec<Scalar>)>) {
        let a = &self.algebra;
        while let Some((w, v)) = queue.pop() {
            if !sub.parts[w].insert(&v) {
                continue;
            }
            for &arrow in a.arrows() {
                let (s, t) = a.block(arrow);
                if t == w {
                    let img = self.action[arrow].mul_vec(&v);
                    if !is_zero_vec(&img) && !sub.parts[s].contains(&img) {
                        queue.push((s, img));
                    }
                }
            }
        }
    }

    /// `rad(A) · M`, spanned by the images of the arrows since those
    /// generate `rad(A)` as a right ideal.
    pub fn radical(&self) -> Submodule {
        let a = &self.algebra;
        let mut parts: Vec<Vec<Vec<Scalar>>> = vec![Vec::new(); self.dims.len()];
        for &r in a.arrows() {
            let (s, _) = a.block(r);
            let m = &self.action[r];
            for c in 0..m.cols() {
                let col = m.column(c);
                if !is_zero_vec(&col) {
                    parts[s].push(col);
                }
            }
        }
        Submodule {
            parts: parts
                .into_iter()
                .zip(&self.dims)
                .map(|(vs, &d)| Subspace::from_spanning(self.field(), d, vs))
                .collect(),
        }
    }

    /// Vectors killed by every arrow.
    pub fn socle(&self) -> Submodule {
        let a = &self.algebra;
        let f = self.field();
        let parts = (0..self.dims.len())
            .map(|w| {
                let mut rows = Vec::new();
                for &arrow in a.arrows() {
                    let (_, t) = a.block(arrow);
                    if t == w {
                        rows.extend(self.action[arrow].to_rows());
                    }
                }
                let m = Matrix::from_rows_with_cols(f, rows, self.dims[w]).expect("shape");
                Subspace::from_spanning(f, self.dims[w], m.kernel_basis())
            })
            .collect();
        Submodule { parts }
    }

    pub fn top(&self) -> Module {
        self.quotient(&self.radical()).0
    }

    /// Dimension vectors of `rad^i M / rad^{i+1} M`.
    pub fn radical_layers(&self) -> Vec<Vec<usize>> {
        let mut layers = Vec::new();
        let mut current = self.clone();
        while !current.is_zero() {
            let rad = current.radical();
            let top: Vec<usize> = current.dims.iter().zip(&rad.parts).map(|(d, r)| d - r.dim()).collect();
            layers.push(top);
            current = current.submodule(&rad).0;
        }
        layers
    }

    /// `[M : L(λ)]` summed over the radical layers.
    pub fn composition_multiplicities(&self) -> Vec<usize> {
        let mut out = vec![0; self.dims.len()];
        for layer in self.radical_layers() {
            for (o, x) in out.iter_mut().zip(layer) {
                *o += x;
            }
        }
        out
    }

    /// `M/U` with the canonical projection.
    pub fn quotient(&self, sub: &Submodule) -> (Module, ModuleMap) {
        let a = &self.algebra;
        let f = self.field();
        let keep: Vec<Vec<usize>> = sub.parts.iter().map(Subspace::complement_indices).collect();
        let dims: Vec<usize> = keep.iter().map(Vec::len).collect();
        let coords = |w: usize, v: &[Scalar]| -> Vec<Scalar> {
            let r = sub.parts[w].reduce(v);
            keep[w].iter().map(|&i| r[i].clone()).collect()
        };
        let action = (0..a.dim())
            .map(|b| {
                let (s, t) = a.block(b);
                let cols: Vec<Vec<Scalar>> = keep[t]
                    .iter()
                    .map(|&j| coords(s, &self.action[b].column(j)))
                    .collect();
                Matrix::from_columns(f, dims[s], &cols)
            })
            .collect();
        let quotient = Module::from_parts(a.clone(), dims.clone(), action);
        let blocks = (0..self.dims.len())
            .map(|w| {
                let cols: Vec<Vec<Scalar>> = (0..self.dims[w])
                    .map(|j| {
                        let mut e = vec![Scalar::zero(); self.dims[w]];
                        e[j] = Scalar::one();
                        coords(w, &e)
                    })
                    .collect();
                Matrix::from_columns(f, dims[w], &cols)
            })
            .collect();
        (quotient, ModuleMap { blocks })
    }

    /// `U` as a module with its inclusion into `M`.
    pub fn submodule(&self, sub: &Submodule) -> (Module, ModuleMap) {
        let a = &self.algebra;
        let f = self.field();
        let dims: Vec<usize> = sub.parts.iter().map(Subspace::dim).collect();
        let action = (0..a.dim())
            .map(|b| {
                let (s, t) = a.block(b);
                let cols: Vec<Vec<Scalar>> = sub.parts[t]
                    .basis()
                    .iter()
                    .map(|u| {
                        let img = self.action[b].mul_vec(u);
                        sub.parts[s].coordinates(&img).expect("submodule is stable")
                    })
                    .collect();
                Matrix::from_columns(f, dims[s], &cols)
            })
            .collect();
        let inclusion = ModuleMap {
            blocks: sub
                .parts
                .iter()
                .zip(&self.dims)
                .map(|(p, &d)| Matrix::from_columns(f, d, p.basis()))
                .collect(),
        };
        (Module::from_parts(a.clone(), dims, action), inclusion)
    }

    /// Hom-space as a subspace of block-diagonal matrices.
    pub fn hom_space(&self, other: &Module) -> Result<HomSpace, ModuleError> {
        hom_space(self, other)
    }

    /// Linear dual `Hom_k(M, k)` as a left module over the opposite algebra.
    pub fn linear_dual(&self) -> Module {
        let op = self.algebra.opposite();
        let action = self.action.iter().map(Matrix::transpose).collect();
        Module::from_parts(op, self.dims.clone(), action)
    }

    /// `M°`: the dual space with `b` acting as the transpose of `σ(b)`.
    pub fn dualize(&self, sigma: &AntiAutomorphism) -> Result<Module, ModuleError> {
        if !Algebra::same(sigma.algebra(), &self.algebra) {
            return Err(ModuleError::AlgebraMismatch);
        }
        let a = &self.algebra;
        let action = (0..a.dim())
            .map(|b| {
                let (s, t) = a.block(b);
                self.element_block(&sigma.image(b), t, s).transpose()
            })
            .collect();
        Ok(Module::from_parts(a.clone(), self.dims.clone(), action))
    }

    pub fn is_isomorphic(&self, other: &Module) -> Result<bool, ModuleError> {
        is_isomorphic(self, other)
    }
}

/// A submodule, stored weight by weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Submodule {
    pub parts: Vec<Subspace>,
}

impl Submodule {
    pub fn dim(&self) -> usize {
        self.parts.iter().map(Subspace::dim).sum()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.parts.iter().map(Subspace::dim).collect()
    }

    pub fn sum(&self, other: &Submodule) -> Submodule {
        Submodule { parts: self.parts.iter().zip(&other.parts).map(|(a, b)| a.sum(b)).collect() }
    }

    pub fn intersection(&self, other: &Submodule) -> Submodule {
        Submodule { parts: self.parts.iter().zip(&other.parts).map(|(a, b)| a.intersection(b)).collect() }
    }

    pub fn contains(&self, other: &Submodule) -> bool {
        other.parts.iter().zip(&self.parts).all(|(o, s)| o.is_subspace_of(s))
    }
}

/// A module homomorphism, one block per weight (`dim N_λ × dim M_λ`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap {
    pub blocks: Vec<Matrix>,
}

impl ModuleMap {
    pub fn zero(source: &Module, target: &Module) -> Self {
        ModuleMap {
            blocks: (0..source.dims.len())
                .map(|w| Matrix::zeros(source.field(), target.dims[w], source.dims[w]))
                .collect(),
        }
    }

    pub fn identity(m: &Module) -> Self {
        ModuleMap { blocks: m.dims.iter().map(|&d| Matrix::identity(m.field(), d)).collect() }
    }

    pub fn apply(&self, source: &Module, target: &Module, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); target.dim()];
        for (w, b) in self.blocks.iter().enumerate() {
            let part = b.mul_vec(source.component(v, w));
            out[target.offsets[w]..target.offsets[w] + target.dims[w]].clone_from_slice(&part);
        }
        out
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &ModuleMap) -> ModuleMap {
        ModuleMap { blocks: self.blocks.iter().zip(&first.blocks).map(|(a, b)| a.mul(b)).collect() }
    }

    pub fn add_scaled(&mut self, c: &Scalar, other: &ModuleMap) {
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            a.add_scaled(c, b);
        }
    }

    pub fn scale(&self, c: &Scalar) -> ModuleMap {
        ModuleMap { blocks: self.blocks.iter().map(|b| b.scale(c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(Matrix::rank).sum()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.blocks.iter().all(Matrix::is_invertible)
    }

    pub fn kernel(&self, source: &Module) -> Submodule {
        Submodule {
            parts: self
                .blocks
                .iter()
                .zip(&source.dims)
                .map(|(b, &d)| Subspace::from_spanning(source.field(), d, b.kernel_basis()))
                .collect(),
        }
    }

    pub fn image(&self, target: &Module) -> Submodule {
        Submodule {
            parts: self
                .blocks
                .iter()
                .zip(&target.dims)
                .map(|(b, &d)| Subspace::from_spanning(target.field(), d, (0..b.cols()).map(|c| b.column(c)).collect()))
                .collect(),
        }
    }

    /// True if the map commutes with every arrow (hence with all of A).
    pub fn is_homomorphism(&self, source: &Module, target: &Module) -> bool {
        let a = source.algebra();
        a.arrows().iter().all(|&b| {
            let (s, t) = a.block(b);
            self.blocks[s].mul(source.action(b)) == target.action(b).mul(&self.blocks[t])
        })
    }

    /// Flattened coordinates, weight blocks row-major in weight order.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.blocks.iter().flat_map(|b| b.to_rows().into_iter().flatten()).collect()
    }
}

/// Basis of `Hom_A(M, N)`.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub basis: Vec<ModuleMap>,
    shapes: Vec<(usize, usize)>,
    coords: Subspace,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a homomorphism in the echelon basis of the space, if it lies in it.
    pub fn coordinates(&self, f: &ModuleMap) -> Option<Vec<Scalar>> {
        self.coords.coordinates(&f.flatten())
    }

    /// Map from a coordinate vector.
    pub fn combine(&self, field: FieldSpec, coeffs: &[Scalar]) -> ModuleMap {
        let mut out = ModuleMap {
            blocks: self.shapes.iter().map(|&(r, c)| Matrix::zeros(field, r, c)).collect(),
        };
        for (c, b) in coeffs.iter().zip(&self.basis) {
            out.add_scaled(c, b);
        }
        out
    }
}

pub fn hom_space(m: &Module, n: &Module) -> Result<HomSpace, ModuleError> {
    if !Algebra::same(&m.algebra, &n.algebra) {
        return Err(ModuleError::AlgebraMismatch);
    }
    let a = &m.algebra;
    let f = m.field();
    let k = m.dims.len();
    let shapes: Vec<(usize, usize)> = (0..k).map(|w| (n.dims[w], m.dims[w])).collect();
    let mut off = Vec::with_capacity(k);
    let mut total = 0;
    for &(r, c) in &shapes {
        off.push(total);
        total += r * c;
    }
    let var = |w: usize, i: usize, j: usize| off[w] + i * m.dims[w] + j;
    // F_s · M(a) − N(a) · F_t = 0 for each arrow a ∈ e_s A e_t.
    let mut rows = Vec::new();
    for &arrow in a.arrows() {
        let (s, t) = a.block(arrow);
        let ma = &m.action[arrow];
        let na = &n.action[arrow];
        for i in 0..n.dims[s] {
            for j in 0..m.dims[t] {
                let mut row = vec![Scalar::zero(); total];
                for l in 0..m.dims[s] {
                    let x = ma.get(l, j);
                    if !x.is_zero() {
                        let e = &mut row[var(s, i, l)];
                        *e = f.add(e, x);
                    }
                }
                for l in 0..n.dims[t] {
                    let x = na.get(i, l);
                    if !x.is_zero() {
                        let e = &mut row[var(t, l, j)];
                        *e = f.sub(e, x);
                    }
                }
                if !is_zero_vec(&row) {
                    rows.push(row);
                }
            }
        }
    }
    let system = Matrix::from_rows_with_cols(f, rows, total).expect("shape");
    let kernel = system.kernel_basis();
    let coords = Subspace::from_spanning(f, total, kernel);
    // The echelon basis, so that coordinates() refers to `basis`.
    let basis: Vec<ModuleMap> = coords
        .basis()
        .iter()
        .map(|v| ModuleMap {
            blocks: (0..k)
                .map(|w| {
                    let (r, c) = shapes[w];
                    let rows = (0..r).map(|i| v[off[w] + i * c..off[w] + (i + 1) * c].to_vec()).collect();
                    Matrix::from_rows_with_cols(f, rows, c).expect("shape")
                })
                .collect(),
        })
        .collect();
    Ok(HomSpace { basis, shapes, coords })
}

pub fn simple(a: &Arc<Algebra>, lambda: usize) -> Result<Module, ModuleError> {
    if lambda >= a.num_weights() {
        return Err(ModuleError::UnknownWeight(lambda));
    }
    let f = a.field();
    let mut dims = vec![0; a.num_weights()];
    dims[lambda] = 1;
    let action = (0..a.dim())
        .map(|b| {
            let (s, t) = a.block(b);
            if b == a.idempotent(lambda) {
                Matrix::identity(f, 1)
            } else {
                Matrix::zeros(f, dims[s], dims[t])
            }
        })
        .collect();
    Ok(Module::from_parts(a.clone(), dims, action))
}

/// `P(λ) = A e_λ`, with basis the algebra basis elements in `A e_λ`.
pub fn projective(a: &Arc<Algebra>, lambda: usize) -> Result<Module, ModuleError> {
    if lambda >= a.num_weights() {
        return Err(ModuleError::UnknownWeight(lambda));
    }
    let f = a.field();
    let k = a.num_weights();
    let dims: Vec<usize> = (0..k).map(|s| a.block_basis(s, lambda).len()).collect();
    let mut position = vec![usize::MAX; a.dim()];
    for s in 0..k {
        for (p, &i) in a.block_basis(s, lambda).iter().enumerate() {
            position[i] = p;
        }
    }
    let action = (0..a.dim())
        .map(|b| {
            let (s, t) = a.block(b);
            let mut m = Matrix::zeros(f, dims[s], dims[t]);
            for (col, &i) in a.block_basis(t, lambda).iter().enumerate() {
                for (r, c) in a.product(b, i) {
                    m.set(position[*r], col, c.clone());
                }
            }
            m
        })
        .collect();
    Ok(Module::from_parts(a.clone(), dims, action))
}

/// Basis element of `A e_λ` that generates `P(λ)`, as a global vector.
pub fn projective_generator(p: &Module, lambda: usize) -> Vec<Scalar> {
    let a = p.algebra();
    let pos = a.block_basis(lambda, lambda).iter().position(|&i| i == a.idempotent(lambda)).expect("e_λ in block");
    let mut part = vec![Scalar::zero(); p.dims()[lambda]];
    part[pos] = Scalar::one();
    p.embed(lambda, &part)
}

/// `I(λ)`: the linear dual of the projective `A^op e_λ`.
pub fn injective(a: &Arc<Algebra>, lambda: usize) -> Result<Module, ModuleError> {
    let op = a.opposite();
    Ok(projective(&op, lambda)?.linear_dual())
}

pub fn direct_sum(a: &Arc<Algebra>, mods: &[&Module]) -> Module {
    let f = a.field();
    let k = a.num_weights();
    let dims: Vec<usize> = (0..k).map(|w| mods.iter().map(|m| m.dims[w]).sum()).collect();
    let action = (0..a.dim())
        .map(|b| {
            let (s, t) = a.block(b);
            let mut out = Matrix::zeros(f, dims[s], dims[t]);
            let (mut r0, mut c0) = (0, 0);
            for m in mods {
                out.set_block(r0, c0, &m.action[b]);
                r0 += m.dims[s];
                c0 += m.dims[t];
            }
            out
        })
        .collect();
    Module::from_parts(a.clone(), dims, action)
}

/// Map `P(λ) → M` sending the generator `e_λ` to `v ∈ e_λ M`.
pub fn map_from_projective(p: &Module, lambda: usize, target: &Module, v: &[Scalar]) -> ModuleMap {
    let a = p.algebra();
    let f = p.field();
    let k = a.num_weights();
    let blocks = (0..k)
        .map(|s| {
            let cols: Vec<Vec<Scalar>> = a
                .block_basis(s, lambda)
                .iter()
                .map(|&b| target.action(b).mul_vec(v))
                .collect();
            Matrix::from_columns(f, target.dims()[s], &cols)
        })
        .collect();
    ModuleMap { blocks }
}

/// Projective cover `⊕ P(λ)^{[top M : L(λ)]} → M`.
pub fn projective_cover(m: &Module) -> (Module, ModuleMap, Vec<usize>) {
    let a = m.algebra();
    let rad = m.radical();
    let mut summands = Vec::new();
    let mut generators: Vec<(usize, Vec<Scalar>)> = Vec::new();
    for w in 0..a.num_weights() {
        for idx in rad.parts[w].complement_indices() {
            let mut v = vec![Scalar::zero(); m.dims[w]];
            v[idx] = Scalar::one();
            generators.push((w, v));
            summands.push(w);
        }
    }
    cover_from_generators(m, &generators, summands)
}

/// `⊕ P(λ_i) → M` sending the i-th generator to `v_i ∈ e_{λ_i} M`.
pub fn cover_from_generators(
    m: &Module,
    generators: &[(usize, Vec<Scalar>)],
    summands: Vec<usize>,
) -> (Module, ModuleMap, Vec<usize>) {
    let a = m.algebra();
    let f = m.field();
    let projs: Vec<Module> = summands.iter().map(|&w| projective(a, w).expect("weight")).collect();
    let refs: Vec<&Module> = projs.iter().collect();
    let p = direct_sum(a, &refs);
    let k = a.num_weights();
    let blocks = (0..k)
        .map(|s| {
            let mut cols = Vec::new();
            for (q, (w, v)) in projs.iter().zip(generators) {
                let full = m.embed(*w, v);
                let map = map_from_projective(q, *w, m, m.component(&full, *w));
                cols.extend((0..map.blocks[s].cols()).map(|c| map.blocks[s].column(c)));
            }
            Matrix::from_columns(f, m.dims[s], &cols)
        })
        .collect();
    (p, ModuleMap { blocks }, summands)
}

/// `M ≅ P(λ)` exactly when `M` has the dimension vector of `P(λ)` and top
/// `L(λ)`: such an `M` is a quotient of `P(λ)` of the same dimension.
pub fn is_isomorphic_to_projective(m: &Module, lambda: usize) -> Result<bool, ModuleError> {
    let p = projective(&m.algebra, lambda)?;
    if m.dims != p.dims {
        return Ok(false);
    }
    let rad = m.radical();
    Ok((0..m.dims.len()).all(|w| m.dims[w] - rad.parts[w].dim() == usize::from(w == lambda)))
}

const ISO_TRIALS: usize = 64;
const ENUMERATION_LIMIT: u64 = 65_536;

pub fn is_isomorphic(m: &Module, n: &Module) -> Result<bool, ModuleError> {
    if !Algebra::same(&m.algebra, &n.algebra) {
        return Err(ModuleError::AlgebraMismatch);
    }
    if m.dims != n.dims {
        return Ok(false);
    }
    if m.dim() == 0 {
        return Ok(true);
    }
    let hom = hom_space(m, n)?;
    let end_m = hom_space(m, m)?.dim();
    let end_n = hom_space(n, n)?.dim();
    if hom.dim() != end_m || hom.dim() != end_n || hom.dim() == 0 {
        return Ok(false);
    }
    let f = m.field();
    let k = hom.dim();
    if let FieldSpec::Prime(p) = f {
        if (k as u32) < 64 && p.checked_pow(k as u32).is_some_and(|total| total <= ENUMERATION_LIMIT) {
            let total = p.pow(k as u32);
            for code in 0..total {
                let mut c = code;
                let coeffs: Vec<Scalar> = (0..k)
                    .map(|_| {
                        let x = f.element(c % p);
                        c /= p;
                        x
                    })
                    .collect();
                if hom.combine(f, &coeffs).is_isomorphism() {
                    return Ok(true);
                }
            }
            return Ok(false);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..ISO_TRIALS {
        let coeffs: Vec<Scalar> = (0..k)
            .map(|_| match f {
                FieldSpec::Rationals => f.from_i64(rng.gen_range(-7..=7)),
                FieldSpec::Prime(p) => f.element(rng.gen_range(0..p)),
            })
            .collect();
        if hom.combine(f, &coeffs).is_isomorphism() {
            return Ok(true);
        }
    }
    Err(ModuleError::Undetermined)
}
