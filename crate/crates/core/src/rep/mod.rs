//! Finite-dimensional representations of a bound quiver and their morphisms.
//!
//! A representation assigns a vector space `M(x)` to each vertex and a
//! `dim M(t) × dim M(s)` matrix to each arrow `s -> t`, so that every
//! relation evaluates to zero. The path `b*a` acts as `M(b)·M(a)`.

mod decompose;
pub mod random;

use std::sync::Arc;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgebraElement, BoundQuiverAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Scalar};
use crate::quiver::Path;

pub use decompose::{decompose, is_certified_indecomposable, Certificate, Summand};

#[derive(Clone, Debug)]
pub struct Representation {
    alg: Arc<BoundQuiverAlgebra>,
    dims: Vec<usize>,
    mats: Vec<Matrix>,
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        self.alg.same_as(&other.alg) && self.dims == other.dims && self.mats == other.mats
    }
}

impl Eq for Representation {}

impl Representation {
    /// Checks shapes and relations.
    pub fn new(alg: &Arc<BoundQuiverAlgebra>, dims: Vec<usize>, mats: Vec<Matrix>) -> Result<Representation> {
        let q = alg.quiver();
        if dims.len() != q.num_vertices() || mats.len() != q.num_arrows() {
            return Err(Error::Shape(format!(
                "representation needs {} dimensions and {} matrices",
                q.num_vertices(),
                q.num_arrows()
            )));
        }
        for (a, m) in mats.iter().enumerate() {
            let arrow = q.arrow(a);
            if m.shape() != (dims[arrow.target], dims[arrow.source]) {
                return Err(Error::Shape(format!(
                    "matrix of {} is {}x{}, expected {}x{}",
                    arrow.name,
                    m.rows(),
                    m.cols(),
                    dims[arrow.target],
                    dims[arrow.source]
                )));
            }
            if m.field() != alg.field() {
                return Err(Error::Input(format!("matrix of {} is over another field", arrow.name)));
            }
        }
        let rep = Representation { alg: alg.clone(), dims, mats };
        rep.check_relations()?;
        Ok(rep)
    }

    pub(crate) fn raw(alg: &Arc<BoundQuiverAlgebra>, dims: Vec<usize>, mats: Vec<Matrix>) -> Representation {
        debug_assert!(mats.iter().enumerate().all(|(a, m)| {
            let arrow = alg.quiver().arrow(a);
            m.shape() == (dims[arrow.target], dims[arrow.source])
        }));
        Representation { alg: alg.clone(), dims, mats }
    }

    pub fn zero(alg: &Arc<BoundQuiverAlgebra>) -> Representation {
        Representation::from_dims(alg, vec![0; alg.num_vertices()])
    }

    /// All arrows act by zero.
    pub fn from_dims(alg: &Arc<BoundQuiverAlgebra>, dims: Vec<usize>) -> Representation {
        let f = alg.field();
        let mats = alg.quiver().arrows().iter().map(|a| Matrix::zeros(f, dims[a.target], dims[a.source])).collect();
        Representation { alg: alg.clone(), dims, mats }
    }

    /// `S_x`.
    pub fn simple(alg: &Arc<BoundQuiverAlgebra>, x: usize) -> Representation {
        let mut dims = vec![0; alg.num_vertices()];
        dims[x] = 1;
        Representation::from_dims(alg, dims)
    }

    /// `P_x = Λe_x`: paths out of `x`, arrows acting by composition on the left.
    pub fn projective(alg: &Arc<BoundQuiverAlgebra>, x: usize) -> Result<Representation> {
        alg.require_decided("projective module")?;
        let q = alg.quiver();
        let f = alg.field();
        let n = q.num_vertices();
        let dims: Vec<usize> = (0..n).map(|y| alg.pair_dim(x, y)).collect();
        let mut mats = Vec::with_capacity(q.num_arrows());
        for (a, arrow) in q.arrows().iter().enumerate() {
            let src = alg.pair_basis(x, arrow.source);
            let tgt = alg.pair_basis(x, arrow.target);
            let alpha = alg.path_element(&q.arrow_path(a))?;
            let mut m = Matrix::zeros(f, tgt.len(), src.len());
            for (col, &i) in src.iter().enumerate() {
                let prod = alg.multiply(&alpha, &alg.basis_element(i))?;
                write_coords(&mut m, col, tgt, &prod)?;
            }
            mats.push(m);
        }
        Ok(Representation { alg: alg.clone(), dims, mats })
    }

    /// `I_x = D(e_xΛ)`: duals of paths into `x`, arrows acting by the
    /// transpose of composition on the right.
    pub fn injective(alg: &Arc<BoundQuiverAlgebra>, x: usize) -> Result<Representation> {
        alg.require_decided("injective module")?;
        let q = alg.quiver();
        let f = alg.field();
        let n = q.num_vertices();
        let dims: Vec<usize> = (0..n).map(|y| alg.pair_dim(y, x)).collect();
        let mut mats = Vec::with_capacity(q.num_arrows());
        for (a, arrow) in q.arrows().iter().enumerate() {
            let src = alg.pair_basis(arrow.source, x);
            let tgt = alg.pair_basis(arrow.target, x);
            let alpha = alg.path_element(&q.arrow_path(a))?;
            // right multiplication by alpha, e_xΛe_t -> e_xΛe_s, then transpose
            let mut r = Matrix::zeros(f, src.len(), tgt.len());
            for (col, &j) in tgt.iter().enumerate() {
                let prod = alg.multiply(&alg.basis_element(j), &alpha)?;
                write_coords(&mut r, col, src, &prod)?;
            }
            mats.push(r.transpose());
        }
        Ok(Representation { alg: alg.clone(), dims, mats })
    }

    pub fn algebra(&self) -> &Arc<BoundQuiverAlgebra> {
        &self.alg
    }

    pub fn field(&self) -> Field {
        self.alg.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, x: usize) -> usize {
        self.dims[x]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn mat(&self, a: usize) -> &Matrix {
        &self.mats[a]
    }

    pub fn mats(&self) -> &[Matrix] {
        &self.mats
    }

    /// Matrix of a path, the identity on `M(x)` for `e_x`.
    pub fn path_action(&self, p: &Path) -> Matrix {
        let mut m = Matrix::identity(self.field(), self.dims[p.source()]);
        for &a in p.arrows() {
            m = self.mats[a].mul(&m);
        }
        m
    }

    /// Action of the part of `u` running from `x` to `y`, as a map `M(x) -> M(y)`.
    pub fn element_action(&self, u: &AlgebraElement, x: usize, y: usize) -> Matrix {
        let mut m = Matrix::zeros(self.field(), self.dims[y], self.dims[x]);
        for (i, c) in u.terms() {
            if self.alg.basis_source(i) == x && self.alg.basis_target(i) == y {
                m = m.add(&self.path_action(&self.alg.basis_path(i)).scale(c));
            }
        }
        m
    }

    pub fn check_relations(&self) -> Result<()> {
        for rel in self.alg.relations() {
            let (s, t) = match rel.first() {
                Some((_, p)) => (p.source(), p.target()),
                None => continue,
            };
            let mut sum = Matrix::zeros(self.field(), self.dims[t], self.dims[s]);
            for (c, p) in &rel {
                sum = sum.add(&self.path_action(p).scale(c));
            }
            if !sum.is_zero() {
                let text: Vec<String> = rel.iter().map(|(c, p)| format!("{c}*{}", self.alg.quiver().path_string(p))).collect();
                return Err(Error::Input(format!("relation {} does not vanish", text.join(" + "))));
            }
        }
        Ok(())
    }

    /// Dimension vector written as `(d_1, ..., d_n)`.
    pub fn dim_vector_string(&self) -> String {
        let parts: Vec<String> = self.dims.iter().map(usize::to_string).collect();
        format!("({})", parts.join(","))
    }
}

fn write_coords(m: &mut Matrix, col: usize, basis: &[usize], e: &AlgebraElement) -> Result<()> {
    for (k, c) in e.terms() {
        let row = basis
            .iter()
            .position(|&b| b == k)
            .ok_or_else(|| Error::Consistency("product left the expected idempotent corner".into()))?;
        m.set(row, col, c.clone());
    }
    Ok(())
}

/// A morphism of representations, one matrix `f_x: M(x) -> N(x)` per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMorphism {
    source: Representation,
    target: Representation,
    maps: Vec<Matrix>,
}

impl RepMorphism {
    /// Checks shapes and commuting squares.
    pub fn new(source: &Representation, target: &Representation, maps: Vec<Matrix>) -> Result<RepMorphism> {
        if !source.alg.same_as(&target.alg) {
            return Err(Error::Input("morphism between representations of different algebras".into()));
        }
        if maps.len() != source.dims.len() {
            return Err(Error::Shape("one matrix per vertex is required".into()));
        }
        for (x, m) in maps.iter().enumerate() {
            if m.shape() != (target.dims[x], source.dims[x]) {
                return Err(Error::Shape(format!("map at vertex {} has the wrong shape", source.alg.quiver().vertex_name(x))));
            }
        }
        for (a, arrow) in source.alg.quiver().arrows().iter().enumerate() {
            let lhs = target.mats[a].mul(&maps[arrow.source]);
            let rhs = maps[arrow.target].mul(&source.mats[a]);
            if lhs != rhs {
                return Err(Error::Input(format!("square at arrow {} does not commute", arrow.name)));
            }
        }
        Ok(RepMorphism { source: source.clone(), target: target.clone(), maps })
    }

    pub(crate) fn raw(source: &Representation, target: &Representation, maps: Vec<Matrix>) -> RepMorphism {
        RepMorphism { source: source.clone(), target: target.clone(), maps }
    }

    pub fn zero(source: &Representation, target: &Representation) -> RepMorphism {
        let f = source.field();
        let maps = (0..source.dims.len()).map(|x| Matrix::zeros(f, target.dims[x], source.dims[x])).collect();
        RepMorphism::raw(source, target, maps)
    }

    pub fn identity(m: &Representation) -> RepMorphism {
        let maps = m.dims.iter().map(|&d| Matrix::identity(m.field(), d)).collect();
        RepMorphism::raw(m, m, maps)
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    pub fn map(&self, x: usize) -> &Matrix {
        &self.maps[x]
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn field(&self) -> Field {
        self.source.field()
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &RepMorphism) -> RepMorphism {
        assert_eq!(first.target.dims, self.source.dims, "composing morphisms with mismatched ends");
        let maps = self.maps.iter().zip(&first.maps).map(|(g, f)| g.mul(f)).collect();
        RepMorphism::raw(&first.source, &self.target, maps)
    }

    pub fn add(&self, other: &RepMorphism) -> RepMorphism {
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| a.add(b)).collect();
        RepMorphism::raw(&self.source, &self.target, maps)
    }

    pub fn sub(&self, other: &RepMorphism) -> RepMorphism {
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| a.sub(b)).collect();
        RepMorphism::raw(&self.source, &self.target, maps)
    }

    pub fn scale(&self, c: &Scalar) -> RepMorphism {
        let maps = self.maps.iter().map(|a| a.scale(c)).collect();
        RepMorphism::raw(&self.source, &self.target, maps)
    }

    pub fn neg(&self) -> RepMorphism {
        self.scale(&-self.field().one())
    }

    /// All entries, vertex by vertex in row-major order.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.maps.iter().flat_map(|m| m.data().iter().cloned()).collect()
    }

    pub fn from_flat(source: &Representation, target: &Representation, v: &[Scalar]) -> RepMorphism {
        let f = source.field();
        let mut off = 0;
        let mut maps = Vec::with_capacity(source.dims.len());
        for x in 0..source.dims.len() {
            let (r, c) = (target.dims[x], source.dims[x]);
            maps.push(Matrix::from_vec(f, r, c, v[off..off + r * c].to_vec()));
            off += r * c;
        }
        RepMorphism::raw(source, target, maps)
    }

    pub fn is_injective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.rows())
    }

    pub fn is_iso(&self) -> bool {
        self.maps.iter().all(Matrix::is_invertible)
    }

    pub fn inverse(&self) -> Option<RepMorphism> {
        let maps = self.maps.iter().map(Matrix::inverse).collect::<Option<Vec<_>>>()?;
        Some(RepMorphism::raw(&self.target, &self.source, maps))
    }

    pub fn rank(&self) -> usize {
        self.maps.iter().map(Matrix::rank).sum()
    }

    /// Inclusion of the kernel.
    pub fn kernel(&self) -> RepMorphism {
        submodule(&self.source, self.maps.iter().map(Matrix::kernel_basis).collect())
    }

    /// Inclusion of the image.
    pub fn image(&self) -> RepMorphism {
        submodule(&self.target, self.maps.iter().map(Matrix::image_basis).collect())
    }

    /// Projection onto the cokernel.
    pub fn cokernel(&self) -> RepMorphism {
        quotient(&self.target, self.maps.iter().map(Matrix::image_basis).collect())
    }

    pub fn exact_parts(&self) -> ExactParts {
        ExactParts { kernel: self.kernel(), image: self.image(), cokernel: self.cokernel() }
    }
}

/// Kernel inclusion, image inclusion and cokernel projection of a morphism.
#[derive(Clone, Debug)]
pub struct ExactParts {
    pub kernel: RepMorphism,
    pub image: RepMorphism,
    pub cokernel: RepMorphism,
}

/// Inclusion of the subrepresentation spanned vertexwise by the columns of
/// `bases`, which must be stable under the arrows. Columns are reduced to a basis.
pub fn submodule(m: &Representation, bases: Vec<Matrix>) -> RepMorphism {
    try_submodule(m, bases).expect("subspaces are stable under the arrows")
}

/// As [`submodule`], failing when some arrow leaves the subspaces.
pub fn try_submodule(m: &Representation, bases: Vec<Matrix>) -> Result<RepMorphism> {
    let bases: Vec<Matrix> = bases.iter().map(Matrix::image_basis).collect();
    let dims: Vec<usize> = bases.iter().map(Matrix::cols).collect();
    let mut mats = Vec::with_capacity(m.mats.len());
    for (a, arrow) in m.alg.quiver().arrows().iter().enumerate() {
        let img = m.mats[a].mul(&bases[arrow.source]);
        let x = bases[arrow.target]
            .solve(&img)?
            .ok_or_else(|| Error::Input(format!("subspace is not stable under {}", arrow.name)))?;
        mats.push(x);
    }
    let sub = Representation::raw(&m.alg, dims, mats);
    Ok(RepMorphism::raw(&sub, m, bases))
}

/// Projection onto the quotient by the stable subspaces spanned by `bases`.
pub fn quotient(m: &Representation, bases: Vec<Matrix>) -> RepMorphism {
    let mut sections = Vec::with_capacity(bases.len());
    let mut projs = Vec::with_capacity(bases.len());
    for (x, b) in bases.iter().enumerate() {
        let b = b.image_basis();
        let c = b.complement_basis();
        let t = b.hstack(&c).inverse().expect("basis extended by a complement");
        projs.push(t.submatrix(b.cols()..m.dims[x], 0..m.dims[x]));
        sections.push(c);
    }
    let dims: Vec<usize> = sections.iter().map(Matrix::cols).collect();
    let mats = m
        .alg
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, arrow)| projs[arrow.target].mul(&m.mats[a]).mul(&sections[arrow.source]))
        .collect();
    let q = Representation::raw(&m.alg, dims, mats);
    RepMorphism::raw(m, &q, projs)
}

/// The smallest subrepresentation containing the given vectors, each a
/// column in `M(x)`.
pub fn generated_submodule(m: &Representation, gens: &[(usize, Matrix)]) -> RepMorphism {
    let f = m.field();
    let mut bases: Vec<Matrix> = m.dims.iter().map(|&d| Matrix::zeros(f, d, 0)).collect();
    let mut queue: Vec<(usize, Matrix)> = gens.to_vec();
    while let Some((x, v)) = queue.pop() {
        if v.is_zero() || bases[x].spans(&v) {
            continue;
        }
        bases[x] = bases[x].hstack(&v);
        for a in m.alg.quiver().arrows_from(x) {
            let t = m.alg.quiver().arrow(a).target;
            queue.push((t, m.mats[a].mul(&v)));
        }
    }
    submodule(m, bases)
}

/// `g` with `g ∘ proj = h`, for `proj` surjective and `h` vanishing on its kernel.
pub fn factor_through_epi(proj: &RepMorphism, h: &RepMorphism) -> Result<RepMorphism> {
    let mut maps = Vec::with_capacity(proj.maps.len());
    for (p, hx) in proj.maps.iter().zip(&h.maps) {
        let r = p.right_inverse().ok_or_else(|| Error::Input("factor_through_epi: map is not surjective".into()))?;
        let g = hx.mul(&r);
        if g.mul(p) != *hx {
            return Err(Error::Input("morphism does not vanish on the kernel".into()));
        }
        maps.push(g);
    }
    Ok(RepMorphism::raw(&proj.target, &h.target, maps))
}

/// `g` with `incl ∘ g = h`, for `incl` injective and `im h ⊆ im incl`.
pub fn factor_through_mono(incl: &RepMorphism, h: &RepMorphism) -> Result<RepMorphism> {
    let mut maps = Vec::with_capacity(incl.maps.len());
    for (i, hx) in incl.maps.iter().zip(&h.maps) {
        let g = i.solve(hx)?.ok_or_else(|| Error::Input("image is not contained in the submodule".into()))?;
        maps.push(g);
    }
    Ok(RepMorphism::raw(&h.source, &incl.source, maps))
}

/// A basis of `Hom(M, N)` stored as flattened column vectors.
#[derive(Clone, Debug)]
pub struct HomSpace {
    source: Representation,
    target: Representation,
    basis: Matrix,
}

impl HomSpace {
    pub fn new(m: &Representation, n: &Representation) -> HomSpace {
        let f = m.field();
        let k = m.dims.len();
        let mut offsets = Vec::with_capacity(k);
        let mut total = 0;
        for x in 0..k {
            offsets.push(total);
            total += n.dims[x] * m.dims[x];
        }
        let arrows = m.alg.quiver().arrows();
        let eqs: usize = arrows.iter().map(|a| n.dims[a.target] * m.dims[a.source]).sum();
        let mut sys = Matrix::zeros(f, eqs, total);
        let mut row = 0;
        for (a, arrow) in arrows.iter().enumerate() {
            let (s, t) = (arrow.source, arrow.target);
            let (na, ma) = (&n.mats[a], &m.mats[a]);
            for r in 0..n.dims[t] {
                for c in 0..m.dims[s] {
                    // (N(a) f_s - f_t M(a))[r][c]
                    for kk in 0..n.dims[s] {
                        let col = offsets[s] + kk * m.dims[s] + c;
                        let v = sys.get(row, col) + na.get(r, kk);
                        sys.set(row, col, v);
                    }
                    for kk in 0..m.dims[t] {
                        let col = offsets[t] + r * m.dims[t] + kk;
                        let v = sys.get(row, col) - ma.get(kk, c);
                        sys.set(row, col, v);
                    }
                    row += 1;
                }
            }
        }
        HomSpace { source: m.clone(), target: n.clone(), basis: sys.kernel_basis() }
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    /// Flattened basis morphisms as columns.
    pub fn basis_matrix(&self) -> &Matrix {
        &self.basis
    }

    pub fn morphism(&self, j: usize) -> RepMorphism {
        RepMorphism::from_flat(&self.source, &self.target, &self.basis.column(j))
    }

    pub fn morphisms(&self) -> Vec<RepMorphism> {
        (0..self.dim()).map(|j| self.morphism(j)).collect()
    }

    pub fn combination(&self, coeffs: &[Scalar]) -> RepMorphism {
        let v = self.basis.mul(&Matrix::column_vector(self.source.field(), coeffs.to_vec()));
        RepMorphism::from_flat(&self.source, &self.target, v.data())
    }

    /// Coordinates of `f` in this basis.
    pub fn coords(&self, f: &RepMorphism) -> Option<Vec<Scalar>> {
        let v = Matrix::column_vector(self.source.field(), f.flatten());
        self.basis.solve(&v).ok().flatten().map(|c| c.column(0))
    }
}

pub fn hom_basis(m: &Representation, n: &Representation) -> Vec<RepMorphism> {
    HomSpace::new(m, n).morphisms()
}

pub fn hom_dim(m: &Representation, n: &Representation) -> usize {
    HomSpace::new(m, n).dim()
}

/// Dimension of the span of some morphisms `M -> N`.
pub fn span_dim(maps: &[RepMorphism], field: Field) -> usize {
    span_matrix(maps, field).rank()
}

pub(crate) fn span_matrix(maps: &[RepMorphism], field: Field) -> Matrix {
    let rows = maps.first().map_or(0, |f| f.flatten().len());
    let cols: Vec<Matrix> = maps.iter().map(|f| Matrix::column_vector(field, f.flatten())).collect();
    Matrix::hcat(field, rows, &cols)
}

/// `rad M`: the sum of the images of all arrows.
pub fn radical(m: &Representation) -> RepMorphism {
    let f = m.field();
    let q = m.alg.quiver();
    let bases = (0..m.dims.len())
        .map(|x| {
            let parts: Vec<Matrix> = q.arrows_into(x).map(|a| m.mats[a].clone()).collect();
            Matrix::hcat(f, m.dims[x], &parts).image_basis()
        })
        .collect();
    submodule(m, bases)
}

/// `M -> top M = M / rad M`.
pub fn top(m: &Representation) -> RepMorphism {
    let rad = radical(m);
    quotient(m, rad.maps)
}

/// `soc M`: vectors killed by every arrow.
pub fn socle(m: &Representation) -> RepMorphism {
    let f = m.field();
    let q = m.alg.quiver();
    let bases = (0..m.dims.len())
        .map(|x| {
            let parts: Vec<Matrix> = q.arrows_from(x).map(|a| m.mats[a].clone()).collect();
            Matrix::vcat(f, m.dims[x], &parts).kernel_basis()
        })
        .collect();
    submodule(m, bases)
}

/// `𝔇M` over the opposite algebra: dual spaces and transposed matrices.
pub fn dualize(m: &Representation) -> Representation {
    let op = m.alg.opposite();
    Representation::raw(&op, m.dims.clone(), m.mats.iter().map(Matrix::transpose).collect())
}

/// `𝔇f: 𝔇N -> 𝔇M`.
pub fn dualize_morphism(f: &RepMorphism) -> RepMorphism {
    RepMorphism::raw(&dualize(&f.target), &dualize(&f.source), f.maps.iter().map(Matrix::transpose).collect())
}

#[derive(Clone, Debug)]
pub struct DirectSum {
    pub module: Representation,
    pub injections: Vec<RepMorphism>,
    pub projections: Vec<RepMorphism>,
}

pub fn direct_sum(alg: &Arc<BoundQuiverAlgebra>, parts: &[Representation]) -> DirectSum {
    let f = alg.field();
    let n = alg.num_vertices();
    let dims: Vec<usize> = (0..n).map(|x| parts.iter().map(|p| p.dims[x]).sum()).collect();
    let mats = (0..alg.quiver().num_arrows())
        .map(|a| Matrix::block_diag(f, &parts.iter().map(|p| p.mats[a].clone()).collect::<Vec<_>>()))
        .collect();
    let module = Representation::raw(alg, dims.clone(), mats);
    let mut offsets = vec![0usize; n];
    let mut injections = Vec::with_capacity(parts.len());
    let mut projections = Vec::with_capacity(parts.len());
    for p in parts {
        let mut inj = Vec::with_capacity(n);
        let mut proj = Vec::with_capacity(n);
        for x in 0..n {
            let mut i = Matrix::zeros(f, dims[x], p.dims[x]);
            let mut q = Matrix::zeros(f, p.dims[x], dims[x]);
            for k in 0..p.dims[x] {
                i.set(offsets[x] + k, k, f.one());
                q.set(k, offsets[x] + k, f.one());
            }
            offsets[x] += p.dims[x];
            inj.push(i);
            proj.push(q);
        }
        injections.push(RepMorphism::raw(p, &module, inj));
        projections.push(RepMorphism::raw(&module, p, proj));
    }
    DirectSum { module, injections, projections }
}

const ENUMERATION_CAP: u64 = 4096;
const RANDOM_TRIALS: usize = 48;

/// An isomorphism `M -> N` if one is found. Over a prime field with few
/// homomorphisms, all of them are tried; otherwise random combinations are
/// tested.
pub fn is_isomorphic(m: &Representation, n: &Representation) -> Option<RepMorphism> {
    find_isomorphism(m, n, 0)
}

pub fn find_isomorphism(m: &Representation, n: &Representation, seed: u64) -> Option<RepMorphism> {
    if !m.alg.same_as(&n.alg) || m.dims != n.dims {
        return None;
    }
    if m.is_zero() {
        return Some(RepMorphism::zero(m, n));
    }
    let hom = HomSpace::new(m, n);
    let d = hom.dim();
    if d == 0 || d != HomSpace::new(m, m).dim() {
        return None;
    }
    let f = m.field();
    if let Some(q) = f.order() {
        if q.checked_pow(d as u32).is_some_and(|t| t <= ENUMERATION_CAP) {
            let elems: Vec<Scalar> = f.elements().unwrap().collect();
            let mut idx = vec![0usize; d];
            loop {
                let coeffs: Vec<Scalar> = idx.iter().map(|&i| elems[i].clone()).collect();
                let g = hom.combination(&coeffs);
                if g.is_iso() {
                    return Some(g);
                }
                let mut k = 0;
                while k < d {
                    idx[k] += 1;
                    if idx[k] < elems.len() {
                        break;
                    }
                    idx[k] = 0;
                    k += 1;
                }
                if k == d {
                    return None;
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_TRIALS {
        let coeffs: Vec<Scalar> = (0..d)
            .map(|_| match f {
                Field::Rational => f.from_i64(rng.gen_range(-8..=8)),
                Field::Prime(_) => f.random(&mut rng),
            })
            .collect();
        let g = hom.combination(&coeffs);
        if g.is_iso() {
            return Some(g);
        }
    }
    None
}

/// Random module morphism `M -> N` from a seeded combination of a Hom basis.
pub fn random_morphism<R: Rng + ?Sized>(m: &Representation, n: &Representation, rng: &mut R) -> RepMorphism {
    let hom = HomSpace::new(m, n);
    let f = m.field();
    let coeffs: Vec<Scalar> = (0..hom.dim()).map(|_| f.random(rng)).collect();
    hom.combination(&coeffs)
}

#[cfg(test)]
mod tests;
