//! Finite-dimensional basic algebras given by structure constants.
//!
//! Every algebra here carries a basis adapted to a complete set of orthogonal
//! primitive idempotents `e_λ`: each basis element lies in a single block
//! `e_s A e_t`, the idempotents themselves are basis elements, and the
//! remaining basis elements span the Jacobson radical. Construction validates
//! all of this, so downstream code can rely on it.

use std::sync::{Arc, OnceLock, Weak};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactlin::{is_zero_vec, FieldSpec, Matrix, Scalar, Subspace};

/// Sparse vector: `(basis index, coefficient)` pairs with nonzero coefficients.
pub type Sparse = Vec<(usize, Scalar)>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("structure constant table has wrong shape")]
    Shape,
    #[error("idempotent {0:?} is not idempotent or not orthogonal to the others")]
    Idempotents(String),
    #[error("basis element {0:?} does not lie in a single block e_s A e_t")]
    NotAdapted(String),
    #[error("associativity fails on basis triple ({0}, {1}, {2})")]
    Associativity(usize, usize, usize),
    #[error("non-idempotent basis elements do not span a two-sided ideal")]
    RadicalNotIdeal,
    #[error("non-idempotent basis elements do not span a nilpotent ideal")]
    RadicalNotNilpotent,
    #[error("unknown weight {0:?}")]
    UnknownWeight(String),
    #[error("{identity} fails at basis indices {indices:?}")]
    NotAntiAutomorphism { identity: String, indices: Vec<usize> },
}

/// Raw input for [`Algebra::new`].
#[derive(Clone, Debug)]
pub struct AlgebraData {
    pub field: FieldSpec,
    pub basis_labels: Vec<String>,
    pub weights: Vec<String>,
    /// Basis index of `e_λ`, one per weight.
    pub idempotents: Vec<usize>,
    /// `products[i][j]` expresses `b_i · b_j` in the basis.
    pub products: Vec<Vec<Sparse>>,
}

pub struct Algebra {
    field: FieldSpec,
    labels: Vec<String>,
    weights: Vec<String>,
    idempotents: Vec<usize>,
    products: Vec<Vec<Sparse>>,
    blocks: Vec<(usize, usize)>,
    block_basis: Vec<Vec<Vec<usize>>>,
    radical: Vec<usize>,
    arrows: Vec<usize>,
    loewy_length: usize,
    opposite: OnceLock<Arc<Algebra>>,
    opposite_of: Weak<Algebra>,
}

impl std::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Algebra")
            .field("field", &self.field)
            .field("dim", &self.dim())
            .field("weights", &self.weights)
            .finish()
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.weights == other.weights
            && self.idempotents == other.idempotents
            && self.products == other.products
    }
}

impl Algebra {
    pub fn new(data: AlgebraData) -> Result<Self, AlgebraError> {
        Self::build(data, Weak::new())
    }

    fn build(data: AlgebraData, opposite_of: Weak<Algebra>) -> Result<Self, AlgebraError> {
        let AlgebraData { field, basis_labels, weights, idempotents, products } = data;
        let n = basis_labels.len();
        if products.len() != n
            || products.iter().any(|row| row.len() != n)
            || idempotents.len() != weights.len()
            || idempotents.iter().any(|&e| e >= n)
        {
            return Err(AlgebraError::Shape);
        }
        let products: Vec<Vec<Sparse>> = products
            .into_iter()
            .map(|row| row.into_iter().map(|v| canonical_sparse(field, v, n)).collect::<Result<_, _>>())
            .collect::<Result<_, _>>()?;

        // Orthogonal idempotents.
        for (a, &ea) in idempotents.iter().enumerate() {
            for (b, &eb) in idempotents.iter().enumerate() {
                let expect: Sparse = if a == b { vec![(ea, Scalar::one())] } else { Vec::new() };
                if products[ea][eb] != expect {
                    return Err(AlgebraError::Idempotents(weights[a].clone()));
                }
            }
        }

        // Block adaptation: e_s b = b for exactly one s, b e_t = b for exactly one t.
        let mut blocks = Vec::with_capacity(n);
        for i in 0..n {
            let unit: Sparse = vec![(i, Scalar::one())];
            let side = |left: bool| -> Option<usize> {
                let mut found = None;
                for (w, &e) in idempotents.iter().enumerate() {
                    let p = if left { &products[e][i] } else { &products[i][e] };
                    if *p == unit {
                        if found.is_some() {
                            return None;
                        }
                        found = Some(w);
                    } else if !p.is_empty() {
                        return None;
                    }
                }
                found
            };
            match (side(true), side(false)) {
                (Some(s), Some(t)) => blocks.push((s, t)),
                _ => return Err(AlgebraError::NotAdapted(basis_labels[i].clone())),
            }
        }
        let k = weights.len();
        let mut block_basis = vec![vec![Vec::new(); k]; k];
        for (i, &(s, t)) in blocks.iter().enumerate() {
            block_basis[s][t].push(i);
        }

        let mut alg = Algebra {
            field,
            labels: basis_labels,
            weights,
            idempotents,
            products,
            blocks,
            block_basis,
            radical: Vec::new(),
            arrows: Vec::new(),
            loewy_length: 0,
            opposite: OnceLock::new(),
            opposite_of,
        };
        alg.check_products_respect_blocks()?;
        // The opposite of a validated algebra is associative and shares its radical filtration.
        match alg.opposite_of.upgrade() {
            Some(orig) => {
                alg.radical = orig.radical.clone();
                alg.arrows = orig.arrows.clone();
                alg.loewy_length = orig.loewy_length;
            }
            None => {
                alg.check_associativity()?;
                alg.compute_radical()?;
            }
        }
        Ok(alg)
    }

    fn check_products_respect_blocks(&self) -> Result<(), AlgebraError> {
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let (s, t) = self.blocks[i];
                let (u, v) = self.blocks[j];
                let p = &self.products[i][j];
                let ok = if t != u {
                    p.is_empty()
                } else {
                    p.iter().all(|(r, _)| self.blocks[*r] == (s, v))
                };
                if !ok {
                    return Err(AlgebraError::NotAdapted(self.labels[i].clone()));
                }
            }
        }
        Ok(())
    }

    fn check_associativity(&self) -> Result<(), AlgebraError> {
        let n = self.dim();
        for i in 0..n {
            let (_, t) = self.blocks[i];
            for j in (0..n).filter(|&j| self.blocks[j].0 == t) {
                let (_, u) = self.blocks[j];
                let ij = &self.products[i][j];
                for k in (0..n).filter(|&k| self.blocks[k].0 == u) {
                    let left = self.mul_sparse_basis(ij, k);
                    let right = self.basis_mul_sparse(i, &self.products[j][k]);
                    if left != right {
                        return Err(AlgebraError::Associativity(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    fn compute_radical(&mut self) -> Result<(), AlgebraError> {
        let n = self.dim();
        let f = self.field;
        let is_idem: Vec<bool> = (0..n).map(|i| self.idempotents.contains(&i)).collect();
        let radical: Vec<usize> = (0..n).filter(|&i| !is_idem[i]).collect();
        // Two-sided ideal: b·r and r·b stay in the span of radical basis elements.
        for &r in &radical {
            for b in 0..n {
                let stays = |v: &Sparse| v.iter().all(|(x, _)| !is_idem[*x]);
                if !stays(&self.products[r][b]) || !stays(&self.products[b][r]) {
                    return Err(AlgebraError::RadicalNotIdeal);
                }
            }
        }
        // Powers R^m until zero, computed blockwise in e_s A e_t since products
        // respect blocks; R^2 also yields the arrow complement.
        let k = self.weights.len();
        let mut pos = vec![0; n];
        for row in &self.block_basis {
            for b in row {
                for (p, &i) in b.iter().enumerate() {
                    pos[i] = p;
                }
            }
        }
        let rad_in = |s: usize, t: usize| -> Vec<usize> {
            self.block_basis[s][t].iter().copied().filter(|&i| !is_idem[i]).collect()
        };
        let unit = |s: usize, t: usize, i: usize| -> Vec<Scalar> {
            let mut v = vec![Scalar::zero(); self.block_basis[s][t].len()];
            v[pos[i]] = Scalar::one();
            v
        };
        let total = |p: &Vec<Vec<Subspace>>| p.iter().flatten().map(Subspace::dim).sum::<usize>();
        let mut power: Vec<Vec<Subspace>> = (0..k)
            .map(|s| {
                (0..k)
                    .map(|t| {
                        let vs = rad_in(s, t).into_iter().map(|i| unit(s, t, i)).collect();
                        Subspace::from_spanning(f, self.block_basis[s][t].len(), vs)
                    })
                    .collect()
            })
            .collect();
        let mut loewy = 1;
        let mut r2 = None;
        while total(&power) > 0 {
            loewy += 1;
            if loewy > n + 1 {
                return Err(AlgebraError::RadicalNotNilpotent);
            }
            let mut next = Vec::with_capacity(k);
            for s in 0..k {
                let mut row = Vec::with_capacity(k);
                for v in 0..k {
                    let mut vs = Vec::new();
                    for u in 0..k {
                        for x in power[s][u].basis() {
                            for r in rad_in(u, v) {
                                let mut out = vec![Scalar::zero(); self.block_basis[s][v].len()];
                                for (&b, c) in self.block_basis[s][u].iter().zip(x) {
                                    for (idx, y) in &self.products[b][r] {
                                        f.add_mul_assign(&mut out[pos[*idx]], c, y);
                                    }
                                }
                                if !is_zero_vec(&out) {
                                    vs.push(out);
                                }
                            }
                        }
                    }
                    row.push(Subspace::from_spanning(f, self.block_basis[s][v].len(), vs));
                }
                next.push(row);
            }
            if total(&next) == total(&power) {
                return Err(AlgebraError::RadicalNotNilpotent);
            }
            if r2.is_none() {
                r2 = Some(next.clone());
            }
            power = next;
        }
        let mut arrows = Vec::new();
        if let Some(mut span) = r2 {
            for &r in &radical {
                let (s, t) = self.blocks[r];
                let v = unit(s, t, r);
                if !span[s][t].contains(&v) {
                    span[s][t] = span[s][t].sum(&Subspace::from_spanning(f, v.len(), vec![v]));
                    arrows.push(r);
                }
            }
        }
        self.radical = radical;
        self.arrows = arrows;
        self.loewy_length = loewy;
        Ok(())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.labels
    }

    pub fn weights(&self) -> &[String] {
        &self.weights
    }

    pub fn num_weights(&self) -> usize {
        self.weights.len()
    }

    pub fn weight_index(&self, label: &str) -> Result<usize, AlgebraError> {
        self.weights
            .iter()
            .position(|w| w == label)
            .ok_or_else(|| AlgebraError::UnknownWeight(label.to_string()))
    }

    /// Basis index of `e_λ`.
    pub fn idempotent(&self, weight: usize) -> usize {
        self.idempotents[weight]
    }

    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    /// `(s, t)` with `b_i ∈ e_s A e_t`.
    pub fn block(&self, i: usize) -> (usize, usize) {
        self.blocks[i]
    }

    /// Basis indices lying in `e_s A e_t`.
    pub fn block_basis(&self, s: usize, t: usize) -> &[usize] {
        &self.block_basis[s][t]
    }

    /// Basis indices spanning the Jacobson radical.
    pub fn radical_basis(&self) -> &[usize] {
        &self.radical
    }

    /// Radical basis elements spanning a complement of rad² in rad. Together
    /// with the idempotents they generate the algebra.
    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    pub fn loewy_length(&self) -> usize {
        self.loewy_length
    }

    pub fn product(&self, i: usize, j: usize) -> &Sparse {
        &self.products[i][j]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim()];
        v[i] = Scalar::one();
        v
    }

    pub fn one(&self) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim()];
        for &e in &self.idempotents {
            v[e] = Scalar::one();
        }
        v
    }

    /// Bilinear product of two elements given in the basis.
    pub fn multiply(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let f = self.field;
        let mut out = vec![Scalar::zero(); self.dim()];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let xy = f.mul(x, y);
                for (k, c) in &self.products[i][j] {
                    f.add_mul_assign(&mut out[*k], &xy, c);
                }
            }
        }
        out
    }

    fn mul_sparse_basis(&self, a: &Sparse, k: usize) -> Sparse {
        self.accumulate(a.iter().flat_map(|(i, x)| self.products[*i][k].iter().map(move |(r, c)| (*r, x, c))))
    }

    fn basis_mul_sparse(&self, i: usize, b: &Sparse) -> Sparse {
        self.accumulate(b.iter().flat_map(|(j, y)| self.products[i][*j].iter().map(move |(r, c)| (*r, y, c))))
    }

    /// Sums `x·c` into coordinate `r`, returning a sorted sparse vector without zeros.
    fn accumulate<'a>(&self, terms: impl Iterator<Item = (usize, &'a Scalar, &'a Scalar)>) -> Sparse {
        let f = self.field;
        let mut out: Sparse = Vec::new();
        for (r, x, c) in terms {
            match out.binary_search_by_key(&r, |e| e.0) {
                Ok(pos) => f.add_mul_assign(&mut out[pos].1, x, c),
                Err(pos) => {
                    let mut v = Scalar::zero();
                    f.add_mul_assign(&mut v, x, c);
                    out.insert(pos, (r, v));
                }
            }
        }
        out.retain(|(_, v)| !v.is_zero());
        out
    }

    /// Matrix of left multiplication by `b_i` on the whole algebra.
    pub fn left_multiplication(&self, i: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(self.field, n, n);
        for j in 0..n {
            for (k, c) in &self.products[i][j] {
                m.set(*k, j, c.clone());
            }
        }
        m
    }

    fn data(&self) -> AlgebraData {
        AlgebraData {
            field: self.field,
            basis_labels: self.labels.clone(),
            weights: self.weights.clone(),
            idempotents: self.idempotents.clone(),
            products: self.products.clone(),
        }
    }

    /// The opposite algebra, same basis, `b_i ∘ b_j = b_j b_i`. Cached; the
    /// opposite of the opposite is the original `Arc`.
    pub fn opposite(self: &Arc<Self>) -> Arc<Algebra> {
        if let Some(orig) = self.opposite_of.upgrade() {
            return orig;
        }
        self.opposite
            .get_or_init(|| {
                let mut data = self.data();
                let n = self.dim();
                data.products = (0..n).map(|i| (0..n).map(|j| self.products[j][i].clone()).collect()).collect();
                Arc::new(Algebra::build(data, Arc::downgrade(self)).expect("opposite of a valid algebra"))
            })
            .clone()
    }

    /// True if both handles denote the same algebra (pointer or structure).
    pub fn same(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
        Arc::ptr_eq(a, b) || **a == **b
    }
}

fn canonical_sparse(f: FieldSpec, v: Sparse, n: usize) -> Result<Sparse, AlgebraError> {
    let mut dense = vec![Scalar::zero(); n];
    for (i, c) in v {
        if i >= n {
            return Err(AlgebraError::Shape);
        }
        dense[i] = f.add(&dense[i], &f.normalize(c));
    }
    Ok(to_sparse(&dense))
}

pub fn to_sparse(v: &[Scalar]) -> Sparse {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

/// `S / S e_Γ S` together with the bookkeeping that relates it to `S`.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    pub algebra: Arc<Algebra>,
    /// `kept_basis[k]` is the original basis index whose image is the k-th
    /// quotient basis element.
    pub kept_basis: Vec<usize>,
    /// Column `j` is the image of original basis element `j`.
    pub projection: Matrix,
    /// Quotient weight index → original weight index.
    pub weight_map: Vec<usize>,
    pub ideal_dim: usize,
}

/// Quotient by the two-sided ideal generated by `{e_γ : γ ∈ gamma}`.
pub fn quotient_by_idempotent_ideal(a: &Arc<Algebra>, gamma: &[usize]) -> Result<QuotientAlgebra, AlgebraError> {
    let n = a.dim();
    let f = a.field();
    for &g in gamma {
        if g >= a.num_weights() {
            return Err(AlgebraError::UnknownWeight(g.to_string()));
        }
    }
    // Column order used for elimination: non-idempotents from the end of the
    // basis first, idempotents last, so pivots remove the latest basis elements.
    let is_idem: Vec<bool> = (0..n).map(|i| a.idempotents().contains(&i)).collect();
    let mut order: Vec<usize> = (0..n).rev().filter(|&i| !is_idem[i]).collect();
    order.extend((0..n).filter(|&i| is_idem[i]));
    let permute = |v: &[Scalar]| -> Vec<Scalar> { order.iter().map(|&i| v[i].clone()).collect() };

    let mut gens = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let (_, t) = a.block(i);
            let (s, _) = a.block(j);
            if t == s && gamma.contains(&t) {
                let p = a.product(i, j);
                if !p.is_empty() {
                    let mut v = vec![Scalar::zero(); n];
                    for (k, c) in p {
                        v[*k] = c.clone();
                    }
                    gens.push(permute(&v));
                }
            }
        }
    }
    let ideal = Subspace::from_spanning(f, n, gens);
    let mut kept: Vec<usize> = ideal.complement_indices().into_iter().map(|c| order[c]).collect();
    kept.sort_unstable();
    let mut position = vec![usize::MAX; n];
    for (k, &i) in kept.iter().enumerate() {
        position[i] = k;
    }
    let image = |v: &[Scalar]| -> Vec<Scalar> {
        let reduced = ideal.reduce(&permute(v));
        let mut out = vec![Scalar::zero(); kept.len()];
        for (c, x) in reduced.iter().enumerate() {
            if !x.is_zero() {
                let k = position[order[c]];
                assert!(k != usize::MAX, "reduced vector has support on a pivot column");
                out[k] = x.clone();
            }
        }
        out
    };
    let mut projection = Matrix::zeros(f, kept.len(), n);
    for j in 0..n {
        for (k, x) in image(&a.basis_vector(j)).into_iter().enumerate() {
            if !x.is_zero() {
                projection.set(k, j, x);
            }
        }
    }
    let weight_map: Vec<usize> = (0..a.num_weights()).filter(|w| !gamma.contains(w)).collect();
    let idempotents: Vec<usize> = weight_map
        .iter()
        .map(|&w| {
            let k = position[a.idempotent(w)];
            assert!(k != usize::MAX, "idempotent outside the ideal was eliminated");
            k
        })
        .collect();
    let products = kept
        .iter()
        .map(|&i| {
            kept.iter()
                .map(|&j| {
                    let mut v = vec![Scalar::zero(); n];
                    for (k, c) in a.product(i, j) {
                        v[*k] = c.clone();
                    }
                    to_sparse(&image(&v))
                })
                .collect()
        })
        .collect();
    let data = AlgebraData {
        field: f,
        basis_labels: kept.iter().map(|&i| a.basis_labels()[i].clone()).collect(),
        weights: weight_map.iter().map(|&w| a.weights()[w].clone()).collect(),
        idempotents,
        products,
    };
    Ok(QuotientAlgebra {
        algebra: Arc::new(Algebra::new(data)?),
        kept_basis: kept,
        projection,
        weight_map,
        ideal_dim: ideal.dim(),
    })
}

/// `e A e` for `e = Σ_{γ∈gamma} e_γ`.
#[derive(Clone, Debug)]
pub struct CornerAlgebra {
    pub algebra: Arc<Algebra>,
    /// Corner basis index → original basis index.
    pub basis_map: Vec<usize>,
    /// Corner weight index → original weight index.
    pub weight_map: Vec<usize>,
}

pub fn corner_algebra(a: &Arc<Algebra>, gamma: &[usize]) -> Result<CornerAlgebra, AlgebraError> {
    for &g in gamma {
        if g >= a.num_weights() {
            return Err(AlgebraError::UnknownWeight(g.to_string()));
        }
    }
    let mut weight_map: Vec<usize> = gamma.to_vec();
    weight_map.sort_unstable();
    weight_map.dedup();
    let basis_map: Vec<usize> = (0..a.dim())
        .filter(|&i| {
            let (s, t) = a.block(i);
            weight_map.contains(&s) && weight_map.contains(&t)
        })
        .collect();
    let mut position = vec![usize::MAX; a.dim()];
    for (k, &i) in basis_map.iter().enumerate() {
        position[i] = k;
    }
    let products = basis_map
        .iter()
        .map(|&i| {
            basis_map
                .iter()
                .map(|&j| a.product(i, j).iter().map(|(k, c)| (position[*k], c.clone())).collect())
                .collect()
        })
        .collect();
    let data = AlgebraData {
        field: a.field(),
        basis_labels: basis_map.iter().map(|&i| a.basis_labels()[i].clone()).collect(),
        weights: weight_map.iter().map(|&w| a.weights()[w].clone()).collect(),
        idempotents: weight_map.iter().map(|&w| position[a.idempotent(w)]).collect(),
        products,
    };
    Ok(CornerAlgebra { algebra: Arc::new(Algebra::new(data)?), basis_map, weight_map })
}

/// A validated anti-automorphism of order two fixing every `e_λ`.
#[derive(Clone, Debug)]
pub struct AntiAutomorphism {
    algebra: Arc<Algebra>,
    matrix: Matrix,
}

impl AntiAutomorphism {
    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    /// Column `i` is `σ(b_i)`.
    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn image(&self, i: usize) -> Vec<Scalar> {
        self.matrix.column(i)
    }

    pub fn apply(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.matrix.mul_vec(x)
    }
}

pub fn check_anti_automorphism(a: &Arc<Algebra>, sigma: Matrix) -> Result<AntiAutomorphism, AlgebraError> {
    let n = a.dim();
    if sigma.rows() != n || sigma.cols() != n || sigma.field() != a.field() {
        return Err(AlgebraError::Shape);
    }
    let fail = |identity: &str, indices: Vec<usize>| AlgebraError::NotAntiAutomorphism {
        identity: identity.to_string(),
        indices,
    };
    for &e in a.idempotents() {
        if sigma.column(e) != a.basis_vector(e) {
            return Err(fail("idempotent not fixed", vec![e]));
        }
    }
    let square = sigma.mul(&sigma);
    for i in 0..n {
        if square.column(i) != a.basis_vector(i) {
            return Err(fail("not an involution", vec![i]));
        }
    }
    let images: Vec<Vec<Scalar>> = (0..n).map(|i| sigma.column(i)).collect();
    for i in 0..n {
        for j in 0..n {
            let mut ij = vec![Scalar::zero(); n];
            for (k, c) in a.product(i, j) {
                ij[*k] = c.clone();
            }
            let lhs = sigma.mul_vec(&ij);
            let rhs = a.multiply(&images[j], &images[i]);
            if lhs != rhs {
                return Err(fail("not anti-multiplicative", vec![i, j]));
            }
        }
    }
    Ok(AntiAutomorphism { algebra: a.clone(), matrix: sigma })
}

/// Semisimple algebra `k^n` with one idempotent per weight.
pub fn semisimple(field: FieldSpec, weights: &[&str]) -> Algebra {
    let n = weights.len();
    let products = (0..n)
        .map(|i| (0..n).map(|j| if i == j { vec![(i, Scalar::one())] } else { Vec::new() }).collect())
        .collect();
    Algebra::new(AlgebraData {
        field,
        basis_labels: weights.iter().map(|w| format!("e{w}")).collect(),
        weights: weights.iter().map(|w| w.to_string()).collect(),
        idempotents: (0..n).collect(),
        products,
    })
    .expect("semisimple algebra is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    /// e0, e1, a: 0→1, b: 1→0, ab (a then b, a loop at 0); b·a = 0.
    fn a1() -> Arc<Algebra> {
        let one = || Scalar::one();
        let mut p = vec![vec![Vec::new(); 5]; 5];
        // Blocks: e0 ∈ (0,0), e1 ∈ (1,1), a ∈ (1,0) (acts 0 → 1), b ∈ (0,1), ab ∈ (0,0).
        // Product x·y = "y then x" as composition of maps; the path "a then b" is b·a.
        p[0][0] = vec![(0, one())];
        p[1][1] = vec![(1, one())];
        p[1][2] = vec![(2, one())];
        p[2][0] = vec![(2, one())];
        p[0][3] = vec![(3, one())];
        p[3][1] = vec![(3, one())];
        p[0][4] = vec![(4, one())];
        p[4][0] = vec![(4, one())];
        p[3][2] = vec![(4, one())];
        Arc::new(
            Algebra::new(AlgebraData {
                field: Q,
                basis_labels: ["e0", "e1", "a", "b", "ab"].map(String::from).to_vec(),
                weights: vec!["0".into(), "1".into()],
                idempotents: vec![0, 1],
                products: p,
            })
            .unwrap(),
        )
    }

    #[test]
    fn idempotent_products() {
        let a = a1();
        assert_eq!(a.multiply(&a.basis_vector(0), &a.basis_vector(0)), a.basis_vector(0));
        assert!(is_zero_vec(&a.multiply(&a.basis_vector(0), &a.basis_vector(1))));
        assert_eq!(a.radical_basis(), &[2, 3, 4]);
        assert_eq!(a.arrows(), &[2, 3]);
        assert_eq!(a.loewy_length(), 3);
    }

    #[test]
    fn opposite_is_involutive() {
        let a = a1();
        let op = a.opposite();
        assert_eq!(op.dim(), 5);
        assert_eq!(op.product(2, 3), a.product(3, 2));
        assert!(Arc::ptr_eq(&op.opposite(), &a));
        let s = Arc::new(semisimple(Q, &["0", "1"]));
        assert!(Algebra::same(&s.opposite(), &s));
    }

    #[test]
    fn quotient_and_corner() {
        let a = a1();
        let q = quotient_by_idempotent_ideal(&a, &[1]).unwrap();
        assert_eq!(q.algebra.dim(), 1);
        assert_eq!(q.algebra.dim() + q.ideal_dim, a.dim());
        let q0 = quotient_by_idempotent_ideal(&a, &[]).unwrap();
        assert_eq!(*q0.algebra, *a);
        let c = corner_algebra(&a, &[0]).unwrap();
        assert_eq!(c.algebra.dim(), 2);
        assert_eq!(c.basis_map, vec![0, 4]);
    }

    #[test]
    fn anti_automorphisms() {
        let a = a1();
        let mut swap = Matrix::identity(Q, 5);
        swap.set(2, 2, Scalar::zero());
        swap.set(3, 3, Scalar::zero());
        swap.set(3, 2, Scalar::one());
        swap.set(2, 3, Scalar::one());
        assert!(check_anti_automorphism(&a, swap).is_ok());

        let mut bad = Matrix::identity(Q, 5);
        bad.set(0, 0, Scalar::zero());
        bad.set(1, 0, Scalar::one());
        let err = check_anti_automorphism(&a, bad).unwrap_err();
        assert!(err.to_string().contains("idempotent not fixed"));

        // The identity is not anti-multiplicative on a noncommutative algebra.
        assert!(check_anti_automorphism(&a, Matrix::identity(Q, 5)).is_err());
        let s = Arc::new(semisimple(Q, &["0", "1", "2"]));
        assert!(check_anti_automorphism(&s, Matrix::identity(Q, 3)).is_ok());
    }

    #[test]
    fn rejects_bad_input() {
        let mut data = a1().data();
        data.products[3][2] = vec![(0, Scalar::one())];
        assert!(Algebra::new(data).is_err());
    }
}
