//! The Nakayama functor on labeled sums of indecomposable projectives, its
//! quasi-inverse, and the translates `τ`, `τ⁻`.

use std::sync::Arc;

use crate::algebra::{AlgebraElement, BoundQuiverAlgebra};
use crate::error::{Error, Result};
use crate::homalg::{
    generator, injective_sum, map_from_projectives, minimal_copresentation, minimal_presentation, projective_sum,
    Copresentation, Presentation,
};
use crate::linalg::Matrix;
use crate::rep::{decompose, direct_sum, Certificate, RepMorphism, Representation};

/// A morphism `⊕P_{x_i} -> ⊕P_{y_j}` with `entries[j][i] ∈ e_{x_i} Λ e_{y_j}`,
/// the summand `P_{x_i}` sending `e_{x_i}` to `entries[j][i]` in `P_{y_j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjMap {
    pub source: Vec<usize>,
    pub target: Vec<usize>,
    pub entries: Vec<Vec<AlgebraElement>>,
}

impl ProjMap {
    pub fn new(
        alg: &BoundQuiverAlgebra,
        source: Vec<usize>,
        target: Vec<usize>,
        entries: Vec<Vec<AlgebraElement>>,
    ) -> Result<ProjMap> {
        if entries.len() != target.len() || entries.iter().any(|r| r.len() != source.len()) {
            return Err(Error::Shape("entry matrix must be |target| x |source|".into()));
        }
        for (j, row) in entries.iter().enumerate() {
            for (i, u) in row.iter().enumerate() {
                let ok = u.terms().all(|(b, _)| alg.basis_source(b) == target[j] && alg.basis_target(b) == source[i]);
                if !ok {
                    return Err(Error::Input(format!("entry ({j},{i}) is not a combination of paths y_j -> x_i")));
                }
            }
        }
        Ok(ProjMap { source, target, entries })
    }

    pub fn zero(alg: &BoundQuiverAlgebra, source: Vec<usize>, target: Vec<usize>) -> ProjMap {
        let entries = vec![vec![alg.zero_element(); source.len()]; target.len()];
        ProjMap { source, target, entries }
    }

    pub fn identity(alg: &BoundQuiverAlgebra, labels: Vec<usize>) -> ProjMap {
        let n = labels.len();
        let entries = (0..n)
            .map(|j| (0..n).map(|i| if i == j { alg.idempotent(labels[i]) } else { alg.zero_element() }).collect())
            .collect();
        ProjMap { source: labels.clone(), target: labels, entries }
    }

    /// Reads the entries off a morphism between the labeled sums.
    pub fn from_morphism(source: &[usize], target: &[usize], f: &RepMorphism) -> Result<ProjMap> {
        let alg = f.source().algebra();
        let mut entries = vec![vec![alg.zero_element(); source.len()]; target.len()];
        for (i, &x) in source.iter().enumerate() {
            let img = f.map(x).mul(&generator(f.source(), source, i));
            let mut off = 0;
            for (j, &y) in target.iter().enumerate() {
                let basis = alg.pair_basis(y, x);
                entries[j][i] = alg.element(basis.iter().enumerate().map(|(k, &b)| (b, img.get(off + k, 0).clone())));
                off += basis.len();
            }
            if off != img.rows() {
                return Err(Error::Shape("target labels do not match the morphism".into()));
            }
        }
        Ok(ProjMap { source: source.to_vec(), target: target.to_vec(), entries })
    }

    /// The morphism of representations between the labeled sums.
    pub fn to_morphism(&self, alg: &Arc<BoundQuiverAlgebra>) -> Result<RepMorphism> {
        let src = projective_sum(alg, &self.source)?.module;
        let tgt = projective_sum(alg, &self.target)?.module;
        let f = alg.field();
        let images: Vec<Matrix> = self
            .source
            .iter()
            .enumerate()
            .map(|(i, &x)| {
                let mut col = Vec::new();
                for (j, &y) in self.target.iter().enumerate() {
                    col.extend(alg.pair_basis(y, x).iter().map(|&b| self.entries[j][i].coeff(b)));
                }
                Matrix::column_vector(f, col)
            })
            .collect();
        Ok(map_from_projectives(&src, &self.source, &tgt, &images))
    }

    /// `self ∘ first`.
    pub fn compose(&self, alg: &BoundQuiverAlgebra, first: &ProjMap) -> Result<ProjMap> {
        if first.target != self.source {
            return Err(Error::Shape("composing projective maps with mismatched labels".into()));
        }
        let mut entries = vec![vec![alg.zero_element(); first.source.len()]; self.target.len()];
        for (k, row) in entries.iter_mut().enumerate() {
            for (i, cell) in row.iter_mut().enumerate() {
                for j in 0..self.source.len() {
                    *cell = cell.add(&alg.multiply(&first.entries[j][i], &self.entries[k][j])?);
                }
            }
        }
        Ok(ProjMap { source: first.source.clone(), target: self.target.clone(), entries })
    }
}

/// Transpose of `w ↦ u·w` from `e_yΛe_z` to `e_xΛe_z`, for `u ∈ e_xΛe_y`.
fn nu_block(alg: &BoundQuiverAlgebra, u: &AlgebraElement, x: usize, y: usize, z: usize) -> Result<Matrix> {
    let from = alg.pair_basis(z, y);
    let to = alg.pair_basis(z, x);
    let mut l = Matrix::zeros(alg.field(), to.len(), from.len());
    for (col, &w) in from.iter().enumerate() {
        let prod = alg.multiply(u, &alg.basis_element(w))?;
        for (b, c) in prod.terms() {
            let row = to.iter().position(|&t| t == b).ok_or_else(|| Error::Consistency("product left e_xΛe_z".into()))?;
            l.set(row, col, c.clone());
        }
    }
    Ok(l.transpose())
}

/// `ν(f): ⊕I_{x_i} -> ⊕I_{y_j}`.
pub fn nu(alg: &Arc<BoundQuiverAlgebra>, f: &ProjMap) -> Result<RepMorphism> {
    alg.require_decided("Nakayama functor")?;
    let src = injective_sum(alg, &f.source)?.module;
    let tgt = injective_sum(alg, &f.target)?.module;
    let field = alg.field();
    let mut maps = Vec::with_capacity(alg.num_vertices());
    for z in 0..alg.num_vertices() {
        let mut rows = Vec::with_capacity(f.target.len());
        for (j, &y) in f.target.iter().enumerate() {
            let blocks = f
                .source
                .iter()
                .enumerate()
                .map(|(i, &x)| nu_block(alg, &f.entries[j][i], x, y, z))
                .collect::<Result<Vec<_>>>()?;
            rows.push(Matrix::hcat(field, alg.pair_dim(z, y), &blocks));
        }
        maps.push(Matrix::vcat(field, src.dim(z), &rows));
    }
    Ok(RepMorphism::raw(&src, &tgt, maps))
}

/// The quasi-inverse: recovers `f` with `ν(f) = g` from the rows of `e_{y_j}`.
pub fn nu_minus(alg: &Arc<BoundQuiverAlgebra>, source: &[usize], target: &[usize], g: &RepMorphism) -> Result<ProjMap> {
    let src = injective_sum(alg, source)?.module;
    let tgt = injective_sum(alg, target)?.module;
    if *g.source() != src || *g.target() != tgt {
        return Err(Error::Input("morphism is not between the labeled sums of canonical injectives".into()));
    }
    let mut entries = vec![vec![alg.zero_element(); source.len()]; target.len()];
    for (j, &y) in target.iter().enumerate() {
        let m = g.map(y);
        let e_pos = alg.pair_basis(y, y).iter().position(|&b| b == y).expect("trivial path");
        let row_of_labels: usize = target[..j].iter().map(|&t| alg.pair_dim(y, t)).sum();
        let r = row_of_labels + e_pos;
        let mut col_off = 0;
        for (i, &x) in source.iter().enumerate() {
            let basis = alg.pair_basis(y, x);
            entries[j][i] = alg.element(basis.iter().enumerate().map(|(k, &b)| (b, m.get(r, col_off + k).clone())));
            col_off += basis.len();
        }
    }
    let f = ProjMap { source: source.to_vec(), target: target.to_vec(), entries };
    if nu(alg, &f)? != *g {
        return Err(Error::Input("morphism is not in the image of the Nakayama functor".into()));
    }
    Ok(f)
}

/// `τ_δ M = Ker(ν d₁)` with its inclusion into `νP₁`.
#[derive(Clone, Debug)]
pub struct Translate {
    pub module: Representation,
    pub inclusion: RepMorphism,
    pub presentation: Presentation,
}

pub fn tau(m: &Representation) -> Result<Translate> {
    tau_with(&minimal_presentation(m)?)
}

pub fn tau_with(pres: &Presentation) -> Result<Translate> {
    let alg = pres.d0.source().algebra();
    let d1 = ProjMap::from_morphism(&pres.p1, &pres.p0, &pres.d1)?;
    let nd1 = nu(alg, &d1)?;
    let inclusion = nd1.kernel();
    Ok(Translate { module: inclusion.source().clone(), inclusion, presentation: pres.clone() })
}

/// `τ⁻N = Coker(ν⁻ d¹)` with its projection from `ν⁻I¹`.
#[derive(Clone, Debug)]
pub struct CoTranslate {
    pub module: Representation,
    pub projection: RepMorphism,
    pub copresentation: Copresentation,
}

pub fn tau_minus(n: &Representation) -> Result<CoTranslate> {
    tau_minus_with(&minimal_copresentation(n)?)
}

pub fn tau_minus_with(copres: &Copresentation) -> Result<CoTranslate> {
    let alg = copres.d0.source().algebra();
    let f = nu_minus(alg, &copres.i0, &copres.i1, &copres.d1)?;
    let projection = f.to_morphism(alg)?.cokernel();
    Ok(CoTranslate { module: projection.target().clone(), projection, copresentation: copres.clone() })
}

/// `τ` of each indecomposable summand, reassembled. Summands without a
/// locality certificate are rejected.
pub fn tau_summandwise(m: &Representation, seed: u64) -> Result<Representation> {
    let alg = m.algebra();
    let mut parts = Vec::new();
    for s in decompose(m, seed) {
        if let Certificate::Probable(why) = &s.certificate {
            return Err(Error::Undecided(format!("summand is only probably indecomposable: {why}")));
        }
        parts.push(tau(&s.module)?.module);
    }
    Ok(direct_sum(alg, &parts).module)
}
