//! Tilting modules and Ringel duality.
//!
//! `T(λ)` is built from `Δ(λ)` by repeated universal extensions: while some
//! `Ext^1(Δ(μ), X)` is nonzero, `X` is replaced by the middle term of
//! `0 → X → X' → Δ(μ)^d → 0` whose connecting map is an isomorphism on
//! `Hom(Δ(μ), Δ(μ)^d) → Ext^1(Δ(μ), X)`. The offender `μ` is taken maximal
//! first: `Ext^1(Δ(ν), Δ(μ)) ≠ 0` forces `ν < μ`, so later extensions never
//! revive an offender that has been handled.
//!
//! The Ringel dual is `S' = End_S(T)^op` for `T = ⊕_λ T(λ)`. A homomorphism
//! `h: T(λ) → T(μ)` is the basis element of `e_λ S' e_μ`; it acts on
//! `F(M) = Hom_S(T, M)` by precomposition, sending `Hom(T(μ), M)` to
//! `Hom(T(λ), M)`.

use std::sync::Arc;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{to_sparse, Algebra, AlgebraData, AlgebraError};
use crate::exactlin::{CoordinateMap, LinAlgError, Matrix, Scalar, Subspace};
use crate::highest_weight::{HighestWeight, HwError};
use crate::modcat::{direct_sum, hom_space, injective, is_isomorphic, is_isomorphic_to_projective, projective, HomSpace, Module, ModuleError, ModuleMap};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TiltingError {
    #[error("universal extensions for weight {0} did not terminate")]
    NotTerminating(usize),
    #[error("module built for weight {0} is not tilting: {1}")]
    NotTilting(usize, String),
    #[error("tilting module for weight {0} is decomposable")]
    Decomposable(usize),
    #[error("module has no ∇-filtration")]
    NotNablaFiltered,
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    HighestWeight(#[from] HwError),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}

#[derive(Clone, Debug)]
pub struct TiltingSummand {
    pub weight: usize,
    pub module: Module,
    /// `(T(λ) : Δ(μ))` from the trace filtration.
    pub delta_multiplicities: Vec<usize>,
    /// Universal extension steps as `(μ, d)`: extended by `Δ(μ)^d`.
    pub extension_steps: Vec<(usize, usize)>,
}

/// `T = ⊕_λ T(λ)` with a basis of every `Hom(T(λ), T(μ))`; for `λ = μ` the
/// identity comes first and the remaining maps span the radical of `End(T(λ))`.
#[derive(Clone, Debug)]
pub struct FullTilting {
    pub summands: Vec<TiltingSummand>,
    homs: Vec<Vec<Vec<ModuleMap>>>,
}

impl FullTilting {
    /// Chosen basis of `Hom(T(λ), T(μ))`.
    pub fn homs(&self, lambda: usize, mu: usize) -> &[ModuleMap] {
        &self.homs[lambda][mu]
    }

    /// Basis maps of `Hom(T(λ), T(μ))` lying in the radical of `add T`.
    fn radical_homs(&self, lambda: usize, mu: usize) -> &[ModuleMap] {
        let all = &self.homs[lambda][mu];
        if lambda == mu {
            &all[1..]
        } else {
            all
        }
    }

    pub fn module(&self, lambda: usize) -> &Module {
        &self.summands[lambda].module
    }
}

/// `W = ker(P(μ) → Δ(μ))` with its inclusion into `P(μ)`.
fn standard_presentation(hw: &HighestWeight, mu: usize) -> Result<(Module, Module, ModuleMap), TiltingError> {
    let a = hw.algebra();
    let p = projective(a, mu)?;
    let mut gens = Vec::new();
    for nu in (0..a.num_weights()).filter(|&nu| !hw.poset().le(nu, mu)) {
        for i in 0..p.dims()[nu] {
            let mut v = vec![Scalar::zero(); p.dims()[nu]];
            v[i] = Scalar::one();
            gens.push((nu, v));
        }
    }
    let trace = p.submodule_generated_by_parts(&gens);
    let (w, inc) = p.submodule(&trace);
    Ok((p, w, inc))
}

/// Universal extension of `x` by copies of `Δ(μ)`, or `None` if `Ext^1(Δ(μ), x) = 0`.
fn universal_extension(hw: &HighestWeight, x: &Module, mu: usize) -> Result<Option<(Module, usize)>, TiltingError> {
    let a = hw.algebra();
    let f = a.field();
    let (p, w, inc) = standard_presentation(hw, mu)?;
    let hom_w = hom_space(&w, x)?;
    let hom_p = hom_space(&p, x)?;
    let restricted: Vec<Vec<Scalar>> = hom_p
        .basis
        .iter()
        .map(|g| hom_w.coordinates(&g.compose(&inc)).expect("restriction is a homomorphism"))
        .collect();
    let image = Subspace::from_spanning(f, hom_w.dim(), restricted);
    let chosen = image.complement_indices();
    let d = chosen.len();
    if d == 0 {
        return Ok(None);
    }
    let copies: Vec<&Module> = std::iter::once(x).chain(std::iter::repeat_n(&p, d)).collect();
    let sum = direct_sum(a, &copies);
    let mut gens = Vec::new();
    for s in 0..a.num_weights() {
        let (xs, ps) = (x.dims()[s], p.dims()[s]);
        for j in 0..w.dims()[s] {
            let mut u = vec![Scalar::zero(); w.dims()[s]];
            u[j] = Scalar::one();
            let inside = inc.blocks[s].mul_vec(&u);
            for (slot, &idx) in chosen.iter().enumerate() {
                let fx = hom_w.basis[idx].blocks[s].mul_vec(&u);
                let mut v = vec![Scalar::zero(); xs + d * ps];
                v[..xs].clone_from_slice(&fx);
                for (k, c) in inside.iter().enumerate() {
                    v[xs + slot * ps + k] = f.neg(c);
                }
                gens.push((s, v));
            }
        }
    }
    let relations = sum.submodule_generated_by_parts(&gens);
    let (ext, _) = sum.quotient(&relations);
    let expected = x.dim() + d * hw.standard(mu).dim();
    if ext.dim() != expected {
        return Err(TiltingError::Inconsistent(format!(
            "universal extension has dimension {} instead of {expected}",
            ext.dim()
        )));
    }
    Ok(Some((ext, d)))
}

/// `T(λ)` by universal extensions of `Δ(λ)`, maximal offender first.
pub fn indecomposable_tilting(hw: &HighestWeight, lambda: usize) -> Result<TiltingSummand, TiltingError> {
    let k = hw.num_weights();
    if lambda >= k {
        return Err(HwError::UnknownWeight(lambda).into());
    }
    let order = hw.poset().linear_extension();
    let mut x = hw.standard(lambda).clone();
    let mut steps = Vec::new();
    let bound = 16 * k.max(1);
    loop {
        let mut offender = None;
        for &mu in order.iter().rev() {
            let ext = hw.ext_from_standard(mu, &x)?;
            if ext.get(1).copied().unwrap_or(0) > 0 {
                offender = Some((mu, ext[1]));
                break;
            }
        }
        let Some((mu, d)) = offender else { break };
        if !hw.poset().lt(mu, lambda) {
            return Err(TiltingError::Inconsistent(format!("Ext^1(Δ({mu}), X) ≠ 0 for μ not below {lambda}")));
        }
        if steps.len() >= bound {
            return Err(TiltingError::NotTerminating(lambda));
        }
        let (next, used) = universal_extension(hw, &x, mu)?
            .ok_or_else(|| TiltingError::Inconsistent("Ext^1 nonzero but no extension found".into()))?;
        if used != d {
            return Err(TiltingError::Inconsistent(format!(
                "Ext^1(Δ({mu}), X) has dimension {d} by resolution but {used} by presentation"
            )));
        }
        steps.push((mu, d));
        x = next;
    }
    if !hw.has_nabla_filtration(&x)? {
        return Err(TiltingError::NotTilting(lambda, "no ∇-filtration".into()));
    }
    if !hw.has_delta_filtration(&x)? {
        return Err(TiltingError::NotTilting(lambda, "no Δ-filtration".into()));
    }
    if x.dims()[lambda] != 1 || (0..k).any(|mu| mu != lambda && x.dims()[mu] > 0 && !hw.poset().lt(mu, lambda)) {
        return Err(TiltingError::NotTilting(lambda, format!("composition factors {:?}", x.dims())));
    }
    let delta_multiplicities = hw
        .delta_filtration_multiplicities(&x)?
        .ok_or_else(|| TiltingError::NotTilting(lambda, "trace filtration is not a Δ-filtration".into()))?;
    Ok(TiltingSummand { weight: lambda, module: x, delta_multiplicities, extension_steps: steps })
}

fn unflatten(shapes: &[(usize, usize)], field: crate::exactlin::FieldSpec, v: &[Scalar]) -> ModuleMap {
    let mut pos = 0;
    let blocks = shapes
        .iter()
        .map(|&(r, c)| {
            let rows = (0..r).map(|i| v[pos + i * c..pos + (i + 1) * c].to_vec()).collect();
            pos += r * c;
            Matrix::from_rows_with_cols(field, rows, c).expect("shape")
        })
        .collect();
    ModuleMap { blocks }
}

/// Radical of `End(T(λ))`: the kernel of the scalar by which an endomorphism
/// acts on the one-dimensional `e_λ T(λ)`. Fails if that ideal is not
/// nilpotent, i.e. if `End(T(λ))` is not local.
fn local_radical(t: &Module, lambda: usize) -> Result<Vec<ModuleMap>, TiltingError> {
    let f = t.field();
    let end = hom_space(t, t)?;
    let shapes: Vec<(usize, usize)> = t.dims().iter().map(|&d| (d, d)).collect();
    let scalars: Vec<Scalar> = end.basis.iter().map(|m| m.blocks[lambda].get(0, 0).clone()).collect();
    let functional = Matrix::from_rows_with_cols(f, vec![scalars], end.dim())?;
    let radical: Vec<ModuleMap> = functional.kernel_basis().iter().map(|c| end.combine(f, c)).collect();
    let flat_len: usize = shapes.iter().map(|(r, c)| r * c).sum();
    let mut power: Vec<ModuleMap> = radical.clone();
    for _ in 0..=t.dim() {
        if power.is_empty() {
            return Ok(radical);
        }
        let products: Vec<Vec<Scalar>> =
            radical.iter().flat_map(|r| power.iter().map(move |p| r.compose(p).flatten())).collect();
        let span = Subspace::from_spanning(f, flat_len, products);
        power = span.basis().iter().map(|v| unflatten(&shapes, f, v)).collect();
    }
    Err(TiltingError::Decomposable(lambda))
}

/// All `T(λ)` with adapted bases of the Hom-spaces between them.
pub fn full_tilting(hw: &HighestWeight) -> Result<FullTilting, TiltingError> {
    let k = hw.num_weights();
    let summands: Vec<TiltingSummand> = (0..k).map(|l| indecomposable_tilting(hw, l)).collect::<Result<_, _>>()?;
    let mut homs = Vec::with_capacity(k);
    for l in 0..k {
        let mut row = Vec::with_capacity(k);
        for m in 0..k {
            let (tl, tm) = (&summands[l].module, &summands[m].module);
            if l == m {
                let mut basis = vec![ModuleMap::identity(tl)];
                basis.extend(local_radical(tl, l)?);
                row.push(basis);
            } else {
                row.push(hom_space(tl, tm)?.basis);
            }
        }
        homs.push(row);
    }
    Ok(FullTilting { summands, homs })
}

/// The Ringel dual `End(T)^op` with its highest weight structure over the reversed order.
#[derive(Clone, Debug)]
pub struct RingelDual {
    pub source: HighestWeight,
    pub tilting: FullTilting,
    pub dual: HighestWeight,
    /// `offsets[λ][μ]`: index of the first basis element of `e_λ S' e_μ`.
    offsets: Vec<Vec<usize>>,
}

pub fn ringel_dual(hw: &HighestWeight) -> Result<RingelDual, TiltingError> {
    if !hw.is_certified() {
        return Err(HwError::NotCertified(hw.certificate().failures.join("; ")).into());
    }
    let a = hw.algebra();
    let f = a.field();
    let k = hw.num_weights();
    let tilting = full_tilting(hw)?;
    let mut offsets = vec![vec![0; k]; k];
    let mut labels = Vec::new();
    let mut idempotents = vec![0; k];
    let mut owner = Vec::new();
    for l in 0..k {
        for m in 0..k {
            offsets[l][m] = labels.len();
            for i in 0..tilting.homs[l][m].len() {
                if l == m && i == 0 {
                    idempotents[l] = labels.len();
                    labels.push(format!("id[{}]", a.weights()[l]));
                } else {
                    labels.push(format!("h[{}>{}]{}", a.weights()[l], a.weights()[m], i));
                }
                owner.push((l, m, i));
            }
        }
    }
    let n = labels.len();
    let mut coords: Vec<Vec<CoordinateMap>> = Vec::with_capacity(k);
    for l in 0..k {
        let mut row = Vec::with_capacity(k);
        for m in 0..k {
            let basis: Vec<Vec<Scalar>> = tilting.homs[l][m].iter().map(ModuleMap::flatten).collect();
            let len = tilting.module(l).dims().iter().zip(tilting.module(m).dims()).map(|(x, y)| x * y).sum();
            row.push(CoordinateMap::new(f, len, basis)?);
        }
        coords.push(row);
    }
    // x ∈ e_λ S' e_μ, y ∈ e_μ S' e_ν: x · y = y ∘ x in End(T).
    let products = owner
        .iter()
        .map(|&(l, m, i)| {
            owner
                .iter()
                .map(|&(m2, nu, j)| {
                    if m2 != m {
                        return Vec::new();
                    }
                    let comp = tilting.homs[m][nu][j].compose(&tilting.homs[l][m][i]);
                    let c = coords[l][nu].coordinates(&comp.flatten());
                    to_sparse(&c).into_iter().map(|(t, x)| (offsets[l][nu] + t, x)).collect()
                })
                .collect()
        })
        .collect();
    let data = AlgebraData { field: f, basis_labels: labels, weights: a.weights().to_vec(), idempotents, products };
    let algebra = Arc::new(Algebra::new(data)?);
    debug_assert_eq!(algebra.dim(), n);
    let dual = HighestWeight::new(algebra, hw.poset().reversed())?;
    if !dual.is_certified() {
        return Err(TiltingError::Inconsistent(format!(
            "Ringel dual fails certification: {}",
            dual.certificate().failures.join("; ")
        )));
    }
    let rd = RingelDual { source: hw.clone(), tilting, dual, offsets };
    for l in 0..k {
        let image = rd.f_functor(hw.costandard(l))?;
        if !is_isomorphic(&image, rd.dual.standard(l))? {
            return Err(TiltingError::Inconsistent(format!("F∇({}) is not Δ'({})", a.weights()[l], a.weights()[l])));
        }
    }
    Ok(rd)
}

/// Outcome of the functor checks `FT(λ) ≅ P'(λ)` and `FI(λ) ≅ T'(λ)` per weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctorCheck {
    pub weight: usize,
    pub costandard_to_standard: bool,
    pub tilting_to_projective: bool,
    pub injective_to_tilting: bool,
}

impl FunctorCheck {
    pub fn holds(&self) -> bool {
        self.costandard_to_standard && self.tilting_to_projective && self.injective_to_tilting
    }
}

/// One side-by-side comparison; `lhs` is computed over `S`, `rhs` over `S'`
/// (or both over `S` for the duality chain).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    pub weight: Option<usize>,
    pub lhs: usize,
    pub rhs: usize,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

impl RingelDual {
    pub fn algebra(&self) -> &Arc<Algebra> {
        self.dual.algebra()
    }

    /// Basis index in `S'` of the `i`-th chosen map `T(λ) → T(μ)`.
    pub fn basis_index(&self, lambda: usize, mu: usize, i: usize) -> usize {
        self.offsets[lambda][mu] + i
    }

    /// `F(M) = Hom_S(T, M)` as a left `S'`-module.
    pub fn f_functor(&self, m: &Module) -> Result<Module, TiltingError> {
        let k = self.source.num_weights();
        let f = m.field();
        let spaces: Vec<HomSpace> =
            (0..k).map(|l| hom_space(self.tilting.module(l), m)).collect::<Result<_, _>>()?;
        let dims: Vec<usize> = spaces.iter().map(HomSpace::dim).collect();
        let s = self.dual.algebra();
        let mut action = Vec::with_capacity(s.dim());
        for l in 0..k {
            for mu in 0..k {
                for h in &self.tilting.homs[l][mu] {
                    let cols: Vec<Vec<Scalar>> = spaces[mu]
                        .basis
                        .iter()
                        .map(|g| spaces[l].coordinates(&g.compose(h)).expect("composite is a homomorphism"))
                        .collect();
                    action.push(Matrix::from_columns(f, dims[l], &cols));
                }
            }
        }
        Ok(Module::new(s.clone(), dims, action)?)
    }

    /// `F∇(λ) ≅ Δ'(λ)`, `FT(λ) ≅ P'(λ)` and `FI(λ) ≅ T'(λ)` for every weight.
    pub fn verify_functor(&self) -> Result<Vec<FunctorCheck>, TiltingError> {
        let a = self.source.algebra();
        let mut out = Vec::new();
        for l in 0..self.source.num_weights() {
            let fd = self.f_functor(self.source.costandard(l))?;
            let ft = self.f_functor(self.tilting.module(l))?;
            let fi = self.f_functor(&injective(a, l)?)?;
            let t_dual = indecomposable_tilting(&self.dual, l)?;
            out.push(FunctorCheck {
                weight: l,
                costandard_to_standard: is_isomorphic(&fd, self.dual.standard(l))?,
                tilting_to_projective: is_isomorphic_to_projective(&ft, l)?,
                injective_to_tilting: is_isomorphic(&fi, &t_dual.module)?,
            });
        }
        Ok(out)
    }

    /// The four per-weight identities, both corollary lines, and with a
    /// duality on `S` the chain `gfd(S) = wfd(S) = wfd(S') = gfd(S')`.
    pub fn verify_identities(&self, has_duality: bool) -> Result<Vec<IdentityCheck>, TiltingError> {
        let (s, d) = (&self.source, &self.dual);
        let mut out = Vec::new();
        let mut push = |name: &str, weight: Option<usize>, lhs: usize, rhs: usize| {
            out.push(IdentityCheck { name: name.to_string(), weight, lhs, rhs });
        };
        for l in 0..s.num_weights() {
            push("wfd ∇ = proj Δ'", Some(l), s.wfd(s.costandard(l))?, d.proj_standard(l)?);
            push("inj ∇ = gfd Δ'", Some(l), s.inj_costandard(l)?, d.gfd(d.standard(l))?);
            push("proj Δ = wfd ∇'", Some(l), s.proj_standard(l)?, d.wfd(d.costandard(l))?);
            push("gfd Δ = inj ∇'", Some(l), s.gfd(s.standard(l))?, d.inj_costandard(l)?);
        }
        push("gfd(S) = wfd(S')", None, s.gfd_algebra()?, d.wfd_algebra()?);
        push("wfd(S) = gfd(S')", None, s.wfd_algebra()?, d.gfd_algebra()?);
        if has_duality {
            push("gfd(S) = wfd(S)", None, s.gfd_algebra()?, s.wfd_algebra()?);
            push("wfd(S) = wfd(S')", None, s.wfd_algebra()?, d.wfd_algebra()?);
            push("wfd(S') = gfd(S')", None, d.wfd_algebra()?, d.gfd_algebra()?);
        }
        Ok(out)
    }

    /// Length of a minimal tilting resolution of a `∇`-filtered `S`-module.
    pub fn tilting_resolution_length(&self, m: &Module) -> Result<usize, TiltingError> {
        tilting_resolution_length(&self.source, &self.tilting, m)
    }
}

/// Minimal right `add T`-approximation `⊕ T(λ)^{n_λ} → m`: for each `λ`, maps
/// `T(λ) → m` completing the radical composites `T(λ) → T(μ) → m` to a basis.
fn tilting_approximation(t: &FullTilting, m: &Module) -> Result<(Module, ModuleMap), TiltingError> {
    let a = m.algebra();
    let f = m.field();
    let k = a.num_weights();
    let spaces: Vec<HomSpace> = (0..k).map(|l| hom_space(t.module(l), m)).collect::<Result<_, _>>()?;
    let mut parts: Vec<(usize, ModuleMap)> = Vec::new();
    for l in 0..k {
        let mut composites = Vec::new();
        for mu in 0..k {
            for r in t.radical_homs(l, mu) {
                for g in &spaces[mu].basis {
                    composites.push(spaces[l].coordinates(&g.compose(r)).expect("homomorphism"));
                }
            }
        }
        let rad = Subspace::from_spanning(f, spaces[l].dim(), composites);
        for idx in rad.complement_indices() {
            parts.push((l, spaces[l].basis[idx].clone()));
        }
    }
    let mods: Vec<&Module> = parts.iter().map(|(l, _)| t.module(*l)).collect();
    let domain = direct_sum(a, &mods);
    let blocks = (0..k)
        .map(|s| {
            let mut cols = Vec::new();
            for (_, map) in &parts {
                cols.extend((0..map.blocks[s].cols()).map(|c| map.blocks[s].column(c)));
            }
            Matrix::from_columns(f, m.dims()[s], &cols)
        })
        .collect();
    Ok((domain, ModuleMap { blocks }))
}

/// Minimal number of tilting terms beyond the first needed to resolve a
/// `∇`-filtered module, asserted equal to its `Δ`-filtration dimension.
///
/// A kernel `K_i` of any (not necessarily minimal) approximation differs from
/// the minimal one by tilting summands, so the length is the first `i` with
/// `K_i` Δ-filtered.
pub fn tilting_resolution_length(hw: &HighestWeight, t: &FullTilting, m: &Module) -> Result<usize, TiltingError> {
    if !hw.has_nabla_filtration(m)? {
        return Err(TiltingError::NotNablaFiltered);
    }
    let mut current = m.clone();
    let mut length = 0;
    while hw.delta_filtration_multiplicities(&current)?.is_none() {
        if length > hw.depth() {
            return Err(TiltingError::Inconsistent("tilting resolution exceeds the depth bound".into()));
        }
        let (domain, map) = tilting_approximation(t, &current)?;
        if map.rank() != current.dim() {
            return Err(TiltingError::Inconsistent("tilting approximation is not surjective".into()));
        }
        let kernel = map.kernel(&domain);
        current = domain.submodule(&kernel).0;
        length += 1;
    }
    let wfd = hw.wfd(m)?;
    if wfd != length {
        return Err(TiltingError::Inconsistent(format!("tilting resolution length {length} but wfd {wfd}")));
    }
    Ok(length)
}

/// Morita-invariant data of a highest weight algebra, keyed by weight labels
/// in sorted order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fingerprint {
    pub weights: Vec<String>,
    /// `[Δ(λ):L(μ)]`.
    pub standard: Vec<Vec<usize>>,
    /// `[∇(λ):L(μ)]`.
    pub costandard: Vec<Vec<usize>>,
    /// `dim e_λ A e_μ`.
    pub cartan: Vec<Vec<usize>>,
    /// Strict order relations as label pairs.
    pub order: Vec<(String, String)>,
}

pub fn fingerprint(hw: &HighestWeight) -> Fingerprint {
    let a = hw.algebra();
    let names = a.weights();
    let mut perm: Vec<usize> = (0..names.len()).collect();
    perm.sort_by(|&x, &y| names[x].cmp(&names[y]));
    let table = |g: &dyn Fn(usize, usize) -> usize| -> Vec<Vec<usize>> {
        perm.iter().map(|&l| perm.iter().map(|&m| g(l, m)).collect()).collect()
    };
    let mut order: Vec<(String, String)> =
        hw.poset().relations().into_iter().map(|(x, y)| (names[x].clone(), names[y].clone())).collect();
    order.sort();
    Fingerprint {
        weights: perm.iter().map(|&l| names[l].clone()).collect(),
        standard: table(&|l, m| hw.standard(l).dims()[m]),
        costandard: table(&|l, m| hw.costandard(l).dims()[m]),
        cartan: table(&|l, m| a.block_basis(l, m).len()),
        order,
    }
}

/// Fingerprints of `e_Γ S e_Γ` and of the Ringel dual of `S'(Γ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncationDuality {
    pub corner: Fingerprint,
    pub dual_of_quotient: Fingerprint,
}

impl TruncationDuality {
    pub fn matches(&self) -> bool {
        self.corner == self.dual_of_quotient
    }
}

/// Builds both sides of the exchange of the two truncations under Ringel duality.
pub fn verify_truncation_duality(rd: &RingelDual, gamma: &[usize]) -> Result<TruncationDuality, TiltingError> {
    let corner = rd.source.truncate_corner(gamma)?;
    let quotient = rd.dual.truncate_saturated(gamma)?;
    let back = ringel_dual(&quotient.hw)?;
    Ok(TruncationDuality { corner: fingerprint(&corner.hw), dual_of_quotient: fingerprint(&back.dual) })
}
