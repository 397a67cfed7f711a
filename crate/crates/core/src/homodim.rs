//! Minimal projective resolutions, Ext dimensions and projective, injective
//! and global dimensions.
//!
//! A term `P_i = ⊕_j P(λ_j)` of a resolution is recorded by its list of
//! weights. The differential `P_{i+1} → P_i` sends the generator of the k-th
//! summand to `Σ_j x_kj · gen_j` with `x_kj ∈ e_{μ_k} A e_{λ_j}`; these
//! algebra elements are all that is needed to compute `Hom(P_•, N)`.

use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use crate::algebra::Algebra;
use crate::exactlin::{Matrix, Scalar};
use crate::modcat::{cover_from_generators, projective_cover, Module, ModuleMap};

/// Projective (or injective, global) dimension, or a lower bound when the
/// resolution was cut off.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dimension {
    Finite(usize),
    AtLeast(usize),
}

impl Dimension {
    pub fn finite(self) -> Option<usize> {
        match self {
            Dimension::Finite(n) => Some(n),
            Dimension::AtLeast(_) => None,
        }
    }

    /// The value, panicking if only a bound is known.
    pub fn expect_finite(self, what: &str) -> usize {
        self.finite().unwrap_or_else(|| panic!("{what}: resolution did not terminate ({self})"))
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dimension::Finite(n) => write!(f, "{n}"),
            Dimension::AtLeast(n) => write!(f, ">={n}"),
        }
    }
}

/// Resolution depth used when the caller gives none.
pub fn default_depth(a: &Algebra) -> usize {
    2 * a.num_weights().saturating_sub(1) + 2
}

#[derive(Clone, Debug)]
pub struct Resolution {
    algebra: Arc<Algebra>,
    /// Weights of the summands of each `P_i`.
    terms: Vec<Vec<usize>>,
    /// `differentials[i][k][j]`: component `x_kj` of `d_{i+1}: P_{i+1} → P_i`.
    differentials: Vec<Vec<Vec<Vec<Scalar>>>>,
    /// `Ω^{i+1} M = ker(P_i → P_{i-1})`, as modules.
    syzygies: Vec<Module>,
    complete: bool,
}

impl Resolution {
    pub fn terms(&self) -> &[Vec<usize>] {
        &self.terms
    }

    pub fn differentials(&self) -> &[Vec<Vec<Vec<Scalar>>>] {
        &self.differentials
    }

    /// True if the resolution reached a zero kernel.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Number of terms actually computed.
    pub fn computed_degree(&self) -> usize {
        self.terms.len().saturating_sub(1)
    }

    pub fn length(&self) -> Dimension {
        if self.complete {
            Dimension::Finite(self.terms.iter().rposition(|t| !t.is_empty()).unwrap_or(0))
        } else {
            Dimension::AtLeast(self.terms.len())
        }
    }

    /// `Ω^i M` for `i ≥ 1`, when computed.
    pub fn syzygy(&self, i: usize) -> Option<&Module> {
        i.checked_sub(1).and_then(|k| self.syzygies.get(k))
    }

    /// Multiplicity vectors of the terms: `[P_i : P(λ)]`.
    pub fn term_multiplicities(&self) -> Vec<Vec<usize>> {
        let k = self.algebra.num_weights();
        self.terms
            .iter()
            .map(|t| {
                let mut v = vec![0; k];
                for &w in t {
                    v[w] += 1;
                }
                v
            })
            .collect()
    }

    /// `dim Ext^i(M, N)` for `0 ≤ i ≤ max_i`. Needs terms up to `max_i + 1`
    /// or a complete resolution.
    pub fn ext_dims(&self, n: &Module, max_i: usize) -> Vec<usize> {
        assert!(
            self.complete || self.terms.len() > max_i + 1,
            "resolution too short for Ext^{max_i}"
        );
        assert!(Algebra::same(&self.algebra, n.algebra()), "Ext across different algebras");
        let f = n.field();
        let cochain_dim = |i: usize| -> usize {
            self.terms.get(i).map_or(0, |t| t.iter().map(|&w| n.dims()[w]).sum())
        };
        // δ^i: Hom(P_i, N) → Hom(P_{i+1}, N).
        let delta_rank = |i: usize| -> usize {
            let Some(d) = self.differentials.get(i) else { return 0 };
            let src = &self.terms[i];
            let tgt = &self.terms[i + 1];
            let rows: usize = tgt.iter().map(|&w| n.dims()[w]).sum();
            let cols: usize = src.iter().map(|&w| n.dims()[w]).sum();
            if rows == 0 || cols == 0 {
                return 0;
            }
            let mut m = Matrix::zeros(f, rows, cols);
            let mut r0 = 0;
            for (k, &mu) in tgt.iter().enumerate() {
                let mut c0 = 0;
                for (j, &lambda) in src.iter().enumerate() {
                    let x = &d[k][j];
                    if x.iter().any(|c| !c.is_zero()) {
                        m.set_block(r0, c0, &n.element_block(x, mu, lambda));
                    }
                    c0 += n.dims()[lambda];
                }
                r0 += n.dims()[mu];
            }
            m.rank()
        };
        let mut ranks = Vec::with_capacity(max_i + 1);
        for i in 0..=max_i {
            ranks.push(delta_rank(i));
        }
        (0..=max_i)
            .map(|i| {
                let before = if i == 0 { 0 } else { ranks[i - 1] };
                cochain_dim(i) - ranks[i] - before
            })
            .collect()
    }
}

/// Minimal projective resolution computed through degree `max_deg` (or until
/// the kernel vanishes).
pub fn min_projective_resolution(m: &Module, max_deg: usize) -> Resolution {
    let a = m.algebra().clone();
    let (p0, eps, weights0) = projective_cover(m);
    let mut terms = vec![weights0];
    let mut differentials = Vec::new();
    let mut syzygies = Vec::new();
    let mut current = p0;
    let mut map: ModuleMap = eps;
    let mut complete = false;
    loop {
        let kernel = map.kernel(&current);
        if kernel.dim() == 0 {
            complete = true;
            break;
        }
        let (kmod, inclusion) = current.submodule(&kernel);
        syzygies.push(kmod.clone());
        if terms.len() > max_deg {
            break;
        }
        // Minimal generators of the kernel: a complement of its radical.
        let rad = kmod.radical();
        let mut generators = Vec::new();
        let mut summands = Vec::new();
        for w in 0..a.num_weights() {
            for idx in rad.parts[w].complement_indices() {
                let mut e = vec![Scalar::zero(); kmod.dims()[w]];
                e[idx] = num_traits::One::one();
                generators.push((w, inclusion.blocks[w].mul_vec(&e)));
                summands.push(w);
            }
        }
        let (next, d, summands) = cover_from_generators(&current, &generators, summands);
        let src = terms.last().expect("previous term");
        differentials.push(components(&a, src, &generators));
        terms.push(summands);
        current = next;
        map = d;
    }
    Resolution { algebra: a, terms, differentials, syzygies, complete }
}

/// Splits generator vectors of `⊕_j P(λ_j)` into algebra elements `x_kj`.
fn components(a: &Algebra, src: &[usize], generators: &[(usize, Vec<Scalar>)]) -> Vec<Vec<Vec<Scalar>>> {
    generators
        .iter()
        .map(|(mu, v)| {
            let mut pos = 0;
            src.iter()
                .map(|&lambda| {
                    let mut x = vec![Scalar::zero(); a.dim()];
                    for &b in a.block_basis(*mu, lambda) {
                        x[b] = v[pos].clone();
                        pos += 1;
                    }
                    x
                })
                .collect()
        })
        .collect()
}

pub fn ext_dims(m: &Module, n: &Module, max_i: usize) -> Vec<usize> {
    min_projective_resolution(m, max_i + 1).ext_dims(n, max_i)
}

pub fn ext_dim(m: &Module, n: &Module, i: usize) -> usize {
    ext_dims(m, n, i)[i]
}

pub fn projective_dimension(m: &Module, bound: usize) -> Dimension {
    min_projective_resolution(m, bound).length()
}

/// Projective dimension of the linear dual over the opposite algebra.
pub fn injective_dimension(m: &Module, bound: usize) -> Dimension {
    projective_dimension(&m.linear_dual(), bound)
}

/// `max_λ proj L(λ)`.
pub fn global_dimension(a: &Arc<Algebra>, bound: usize) -> Dimension {
    let mut best = Dimension::Finite(0);
    for w in 0..a.num_weights() {
        let l = crate::modcat::simple(a, w).expect("weight");
        match (projective_dimension(&l, bound), best) {
            (Dimension::AtLeast(n), _) => return Dimension::AtLeast(n),
            (Dimension::Finite(n), Dimension::Finite(b)) if n > b => best = Dimension::Finite(n),
            _ => {}
        }
    }
    best
}
