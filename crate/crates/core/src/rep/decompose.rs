//! Krull-Schmidt decomposition by Fitting splits and an endomorphism locality test.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{submodule, HomSpace, RepMorphism, Representation};
use crate::finalg::{Locality, MatrixAlgebra};
use crate::linalg::{minimal_polynomial, Matrix};

const FITTING_TRIES: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// `End(M)` was shown to be local.
    Local,
    /// No splitting was found, but locality could not be shown.
    Probable(String),
}

impl Certificate {
    pub fn is_local(&self) -> bool {
        matches!(self, Certificate::Local)
    }
}

#[derive(Clone, Debug)]
pub struct Summand {
    pub module: Representation,
    pub inclusion: RepMorphism,
    pub projection: RepMorphism,
    pub certificate: Certificate,
}

/// Splits `M` into indecomposable summands. The zero module has none.
pub fn decompose(m: &Representation, seed: u64) -> Vec<Summand> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    split(m, &RepMorphism::identity(m), &RepMorphism::identity(m), &mut rng, &mut out);
    out
}

/// Whether `M` is nonzero with a local endomorphism algebra.
pub fn is_certified_indecomposable(m: &Representation) -> bool {
    let parts = decompose(m, 0);
    parts.len() == 1 && parts[0].certificate.is_local()
}

fn block_matrix(f: &RepMorphism) -> Matrix {
    Matrix::block_diag(f.field(), f.maps())
}

/// Complementary submodules `K = ker φ^n`, `I = im φ^n` with inclusions and projections.
fn fitting_pair(m: &Representation, phi: &RepMorphism) -> Option<[(RepMorphism, RepMorphism); 2]> {
    let n = m.total_dim() as u64;
    let powers: Vec<Matrix> = phi.maps().iter().map(|a| a.pow(n)).collect();
    let ker: Vec<Matrix> = powers.iter().map(Matrix::kernel_basis).collect();
    let img: Vec<Matrix> = powers.iter().map(Matrix::image_basis).collect();
    let kd: usize = ker.iter().map(Matrix::cols).sum();
    if kd == 0 || kd == m.total_dim() {
        return None;
    }
    Some(complementary(m, ker, img))
}

fn complementary(m: &Representation, a: Vec<Matrix>, b: Vec<Matrix>) -> [(RepMorphism, RepMorphism); 2] {
    let ia = submodule(m, a);
    let ib = submodule(m, b);
    let mut pa = Vec::new();
    let mut pb = Vec::new();
    for x in 0..m.dims().len() {
        let t = ia.map(x).hstack(ib.map(x)).inverse().expect("complementary subspaces");
        let k = ia.map(x).cols();
        pa.push(t.submatrix(0..k, 0..m.dim(x)));
        pb.push(t.submatrix(k..m.dim(x), 0..m.dim(x)));
    }
    let pa = RepMorphism::raw(m, ia.source(), pa);
    let pb = RepMorphism::raw(m, ib.source(), pb);
    [(ia, pa), (ib, pb)]
}

fn split(
    m: &Representation,
    incl: &RepMorphism,
    proj: &RepMorphism,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<Summand>,
) {
    if m.is_zero() {
        return;
    }
    let end = HomSpace::new(m, m);
    let mut push = |certificate| {
        out.push(Summand { module: m.clone(), inclusion: incl.clone(), projection: proj.clone(), certificate })
    };
    if end.dim() == 1 {
        push(Certificate::Local);
        return;
    }
    let f = m.field();
    let mut parts = None;
    for _ in 0..FITTING_TRIES {
        let coeffs: Vec<_> = (0..end.dim()).map(|_| f.random(rng)).collect();
        let phi = end.combination(&coeffs);
        let Some(lambda) = minimal_polynomial(&block_matrix(&phi)).find_root(rng) else {
            continue;
        };
        let shifted = phi.sub(&RepMorphism::identity(m).scale(&lambda));
        if let Some(p) = fitting_pair(m, &shifted) {
            parts = Some(p);
            break;
        }
    }
    if parts.is_none() {
        let mats: Vec<Matrix> = end.morphisms().iter().map(block_matrix).collect();
        let alg = MatrixAlgebra::new(f, m.total_dim(), mats);
        match alg.locality(rand::Rng::gen(rng)) {
            Ok(Locality::Local) => {
                push(Certificate::Local);
                return;
            }
            Ok(Locality::NotLocal(e)) => {
                let mut off = 0;
                let mut maps = Vec::new();
                for x in 0..m.dims().len() {
                    let d = m.dim(x);
                    maps.push(e.submatrix(off..off + d, off..off + d));
                    off += d;
                }
                let e = RepMorphism::raw(m, m, maps);
                let one_minus = RepMorphism::identity(m).sub(&e);
                let img: Vec<Matrix> = e.maps().iter().map(Matrix::image_basis).collect();
                let ker: Vec<Matrix> = one_minus.maps().iter().map(Matrix::image_basis).collect();
                parts = Some(complementary(m, img, ker));
            }
            Ok(Locality::Undecided(why)) => {
                push(Certificate::Probable(why));
                return;
            }
            Err(e) => {
                push(Certificate::Probable(e.to_string()));
                return;
            }
        }
    }
    for (i, p) in parts.unwrap() {
        let sub = i.source().clone();
        split(&sub, &incl.compose(&i), &p.compose(proj), rng, out);
    }
}
