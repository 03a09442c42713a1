//! Projective covers, minimal presentations and copresentations, `Ext¹`,
//! and Hom modulo projectively or injectively trivial maps.

use std::sync::Arc;

use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};
use crate::rep::{
    direct_sum, dualize, dualize_morphism, radical, DirectSum, HomSpace, RepMorphism, Representation,
};

/// `⊕ P_x` over the labels, in order.
pub fn projective_sum(alg: &Arc<BoundQuiverAlgebra>, labels: &[usize]) -> Result<DirectSum> {
    let parts = labels.iter().map(|&x| Representation::projective(alg, x)).collect::<Result<Vec<_>>>()?;
    Ok(direct_sum(alg, &parts))
}

/// `⊕ I_x` over the labels, in order.
pub fn injective_sum(alg: &Arc<BoundQuiverAlgebra>, labels: &[usize]) -> Result<DirectSum> {
    let parts = labels.iter().map(|&x| Representation::injective(alg, x)).collect::<Result<Vec<_>>>()?;
    Ok(direct_sum(alg, &parts))
}

/// Column of `(⊕P)(x_i)` holding the generator `e_{x_i}` of summand `i`.
pub fn generator(p: &Representation, labels: &[usize], i: usize) -> Matrix {
    let alg = p.algebra();
    let x = labels[i];
    let offset: usize = labels[..i].iter().map(|&y| alg.pair_dim(y, x)).sum();
    let pos = alg.pair_basis(x, x).iter().position(|&b| b == x).expect("trivial path in its own corner");
    let mut v = Matrix::zeros(p.field(), p.dim(x), 1);
    v.set(offset + pos, 0, p.field().one());
    v
}

/// The map `⊕P_{x_i} -> M` sending the `i`-th generator to `images[i] ∈ M(x_i)`.
pub fn map_from_projectives(p: &Representation, labels: &[usize], m: &Representation, images: &[Matrix]) -> RepMorphism {
    let alg = p.algebra();
    let f = p.field();
    let maps = (0..alg.num_vertices())
        .map(|y| {
            let blocks: Vec<Matrix> = labels
                .iter()
                .zip(images)
                .map(|(&x, v)| {
                    let cols: Vec<Matrix> =
                        alg.pair_basis(x, y).iter().map(|&b| m.path_action(&alg.basis_path(b)).mul(v)).collect();
                    Matrix::hcat(f, m.dim(y), &cols)
                })
                .collect();
            Matrix::hcat(f, m.dim(y), &blocks)
        })
        .collect();
    RepMorphism::raw(p, m, maps)
}

#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    pub labels: Vec<usize>,
    pub map: RepMorphism,
}

/// `⊕_{S_x in top M} P_x -> M`, lifting the standard complement of `rad M`.
pub fn projective_cover(m: &Representation) -> Result<ProjectiveCover> {
    let alg = m.algebra();
    alg.require_semiperfect("projective cover")?;
    let rad = radical(m);
    let mut labels = Vec::new();
    let mut images = Vec::new();
    for x in 0..alg.num_vertices() {
        let comp = rad.map(x).complement_basis();
        for j in 0..comp.cols() {
            labels.push(x);
            images.push(comp.submatrix(0..comp.rows(), j..j + 1));
        }
    }
    let p = projective_sum(alg, &labels)?.module;
    let map = map_from_projectives(&p, &labels, m, &images);
    if !map.is_surjective() {
        return Err(Error::Consistency("lifted top does not generate the module".into()));
    }
    Ok(ProjectiveCover { labels, map })
}

/// `P₁ --d₁--> P₀ --d₀--> M -> 0`.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub p1: Vec<usize>,
    pub p0: Vec<usize>,
    pub d1: RepMorphism,
    pub d0: RepMorphism,
    /// `Ω = ker d₀ -> P₀`.
    pub omega: RepMorphism,
    pub minimal: bool,
}

impl Presentation {
    pub fn module(&self) -> &Representation {
        self.d0.target()
    }

    /// The same `d₀` with `P₁` enlarged by `P_x` mapping to zero.
    pub fn padded(&self, x: usize) -> Result<Presentation> {
        let alg = self.d0.source().algebra();
        let mut p1 = self.p1.clone();
        p1.push(x);
        let src = projective_sum(alg, &p1)?.module;
        let f = alg.field();
        let maps = (0..alg.num_vertices())
            .map(|y| {
                let extra = Matrix::zeros(f, self.d1.map(y).rows(), alg.pair_dim(x, y));
                self.d1.map(y).hstack(&extra)
            })
            .collect();
        let d1 = RepMorphism::raw(&src, self.d0.source(), maps);
        Ok(Presentation { p1, p0: self.p0.clone(), d1, d0: self.d0.clone(), omega: self.omega.clone(), minimal: false })
    }

    /// Exactness of `P₁ -> P₀ -> M -> 0`.
    pub fn is_exact(&self) -> bool {
        self.d0.is_surjective()
            && self.d0.compose(&self.d1).is_zero()
            && self.d1.rank() == self.d0.source().total_dim() - self.d0.rank()
    }
}

/// Cover of `M`, then cover of `Ω = ker d₀`.
pub fn minimal_presentation(m: &Representation) -> Result<Presentation> {
    let c0 = projective_cover(m)?;
    let omega = c0.map.kernel();
    let c1 = projective_cover(omega.source())?;
    let d1 = omega.compose(&c1.map);
    Ok(Presentation { p1: c1.labels, p0: c0.labels, d1, d0: c0.map, omega, minimal: true })
}

/// `0 -> N --d⁰--> I⁰ --d¹--> I¹`.
#[derive(Clone, Debug)]
pub struct Copresentation {
    pub i0: Vec<usize>,
    pub i1: Vec<usize>,
    pub d0: RepMorphism,
    pub d1: RepMorphism,
    pub minimal: bool,
}

impl Copresentation {
    pub fn is_exact(&self) -> bool {
        self.d0.is_injective()
            && self.d1.compose(&self.d0).is_zero()
            && self.d0.rank() == self.d0.target().total_dim() - self.d1.rank()
    }
}

/// Dual of the minimal presentation of `𝔇N` over the opposite algebra.
pub fn minimal_copresentation(n: &Representation) -> Result<Copresentation> {
    let alg = n.algebra();
    let pres = minimal_presentation(&dualize(n))?;
    let i0m = injective_sum(alg, &pres.p0)?.module;
    let i1m = injective_sum(alg, &pres.p1)?.module;
    let d0 = dualize_morphism(&pres.d0);
    let d1 = dualize_morphism(&pres.d1);
    debug_assert_eq!(d0.target().mats(), i0m.mats());
    let d0 = RepMorphism::raw(n, &i0m, d0.maps().to_vec());
    let d1 = RepMorphism::raw(&i0m, &i1m, d1.maps().to_vec());
    Ok(Copresentation { i0: pres.p0, i1: pres.p1, d0, d1, minimal: true })
}

/// `N -> I⁰`, the injective envelope.
pub fn injective_envelope(n: &Representation) -> Result<(Vec<usize>, RepMorphism)> {
    let c = minimal_copresentation(n)?;
    Ok((c.i0, c.d0))
}

/// A Hom space modulo a subspace, with standard coordinate representatives
/// for a complement.
#[derive(Clone, Debug)]
pub struct HomQuotient {
    pub hom: HomSpace,
    /// Columns: coordinates of a basis of the subspace.
    pub sub: Matrix,
    /// Hom basis positions whose classes form a basis of the quotient.
    pub reps: Vec<usize>,
}

impl HomQuotient {
    fn new(hom: HomSpace, spanning: &[RepMorphism]) -> HomQuotient {
        let f = hom.source().field();
        let cols: Vec<Matrix> = spanning
            .iter()
            .map(|g| Matrix::column_vector(f, hom.coords(g).expect("subspace lies in the Hom space")))
            .collect();
        let sub = Matrix::hcat(f, hom.dim(), &cols).image_basis();
        let comp = sub.complement_basis();
        let reps = (0..comp.cols()).map(|j| (0..comp.rows()).find(|&r| !comp.get(r, j).is_zero()).unwrap()).collect();
        HomQuotient { hom, sub, reps }
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    /// Representatives of a basis of the quotient.
    pub fn basis(&self) -> Vec<RepMorphism> {
        self.reps.iter().map(|&j| self.hom.morphism(j)).collect()
    }

    /// Coordinates of the class of `g` in the quotient basis.
    pub fn class_coords(&self, g: &RepMorphism) -> Result<Vec<Scalar>> {
        let f = self.hom.source().field();
        let c = self.hom.coords(g).ok_or_else(|| Error::Input("morphism outside the Hom space".into()))?;
        let mut full = self.sub.clone();
        for &j in &self.reps {
            let mut e = Matrix::zeros(f, self.hom.dim(), 1);
            e.set(j, 0, f.one());
            full = full.hstack(&e);
        }
        let x = full.solve(&Matrix::column_vector(f, c))?.expect("basis of the ambient space");
        Ok(x.column(0)[self.sub.cols()..].to_vec())
    }

    pub fn is_zero_class(&self, g: &RepMorphism) -> Result<bool> {
        Ok(self.class_coords(g)?.iter().all(Scalar::is_zero))
    }
}

/// `Ext¹(M, N) = Hom(Ω, N) / restrictions of Hom(P₀, N)`.
#[derive(Clone, Debug)]
pub struct Ext {
    pub presentation: Presentation,
    pub space: HomQuotient,
}

impl Ext {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Cocycles `Ω -> N` representing a basis.
    pub fn cocycles(&self) -> Vec<RepMorphism> {
        self.space.basis()
    }
}

pub fn ext1(m: &Representation, n: &Representation) -> Result<Ext> {
    Ok(ext1_with(&minimal_presentation(m)?, n))
}

pub fn ext1_with(pres: &Presentation, n: &Representation) -> Ext {
    let hom = HomSpace::new(pres.omega.source(), n);
    let restrictions: Vec<RepMorphism> =
        HomSpace::new(pres.d0.source(), n).morphisms().iter().map(|h| h.compose(&pres.omega)).collect();
    Ext { presentation: pres.clone(), space: HomQuotient::new(hom, &restrictions) }
}

/// `Hom(M, N)` modulo maps through the projective cover of `N`.
pub fn stable_hom(m: &Representation, n: &Representation) -> Result<HomQuotient> {
    let cover = projective_cover(n)?;
    let through: Vec<RepMorphism> =
        HomSpace::new(m, cover.map.source()).morphisms().iter().map(|g| cover.map.compose(g)).collect();
    Ok(HomQuotient::new(HomSpace::new(m, n), &through))
}

/// `Hom(M, N)` modulo maps through the injective envelope of `M`.
pub fn costable_hom(m: &Representation, n: &Representation) -> Result<HomQuotient> {
    let (_, env) = injective_envelope(m)?;
    let through: Vec<RepMorphism> =
        HomSpace::new(env.target(), n).morphisms().iter().map(|g| g.compose(&env)).collect();
    Ok(HomQuotient::new(HomSpace::new(m, n), &through))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{is_isomorphic, socle};
    use crate::testutil::*;

    #[test]
    fn covers() {
        let a = a2();
        let s1 = Representation::simple(&a, 0);
        let c = projective_cover(&s1).unwrap();
        assert_eq!(c.labels, vec![0]);
        let p1 = Representation::projective(&a, 0).unwrap();
        let c = projective_cover(&p1).unwrap();
        assert_eq!(c.labels, vec![0]);
        assert!(c.map.is_iso());
        let rad = radical(&p1);
        assert_eq!(projective_cover(rad.source()).unwrap().labels, vec![1]);
    }

    #[test]
    fn cover_is_superfluous() {
        let alg = bound_a3();
        for x in 0..3 {
            let i = Representation::injective(&alg, x).unwrap();
            let c = projective_cover(&i).unwrap();
            let p = projective_sum(&alg, &c.labels).unwrap();
            for inj in &p.injections {
                if c.labels.len() > 1 {
                    assert!(!c.map.compose(inj).is_surjective());
                }
            }
        }
    }

    #[test]
    fn presentations() {
        let a = a2();
        let pres = minimal_presentation(&Representation::simple(&a, 0)).unwrap();
        assert_eq!((pres.p1.clone(), pres.p0.clone()), (vec![1], vec![0]));
        assert!(pres.is_exact());
        let pres = minimal_presentation(&Representation::projective(&a, 0).unwrap()).unwrap();
        assert!(pres.p1.is_empty());
        assert!(pres.d1.source().is_zero());

        let d = dual_numbers();
        let s = Representation::simple(&d, 0);
        let pres = minimal_presentation(&s).unwrap();
        assert_eq!((pres.p1.clone(), pres.p0.clone()), (vec![0], vec![0]));
        // d1 sends the generator e to alpha
        let alpha = d.path_element(&d.quiver().arrow_path(0)).unwrap();
        let g = generator(pres.d1.source(), &pres.p1, 0);
        let img = pres.d1.map(0).mul(&g);
        let expect = Matrix::column_vector(d.field(), vec![alpha.coeff(0), alpha.coeff(1)]);
        assert_eq!(img, expect);
    }

    #[test]
    fn copresentations() {
        let a = a2();
        let s2 = Representation::simple(&a, 1);
        let c = minimal_copresentation(&s2).unwrap();
        assert_eq!((c.i0.clone(), c.i1.clone()), (vec![1], vec![0]));
        assert!(c.is_exact());
        let i1 = Representation::injective(&a, 0).unwrap();
        assert!(minimal_copresentation(&i1).unwrap().i1.is_empty());
        let alg = bound_a3();
        for x in 0..3 {
            let p = Representation::projective(&alg, x).unwrap();
            let c = minimal_copresentation(&p).unwrap();
            assert!(c.is_exact());
            let soc = socle(&p);
            let mut labels = Vec::new();
            for y in 0..3 {
                labels.extend(std::iter::repeat(y).take(soc.source().dim(y)));
            }
            assert_eq!(c.i0, labels);
        }
    }

    #[test]
    fn ext_examples() {
        let a = a2();
        let s1 = Representation::simple(&a, 0);
        let s2 = Representation::simple(&a, 1);
        let p1 = Representation::projective(&a, 0).unwrap();
        assert_eq!(ext1(&s1, &s2).unwrap().dim(), 1);
        assert_eq!(ext1(&s1, &s1).unwrap().dim(), 0);
        assert_eq!(ext1(&p1, &s2).unwrap().dim(), 0);
        let pres = minimal_presentation(&s1).unwrap().padded(0).unwrap();
        assert!(pres.is_exact());
        assert_eq!(ext1_with(&pres, &s2).dim(), 1);
    }

    #[test]
    fn stable_and_costable() {
        let a = a2();
        let s1 = Representation::simple(&a, 0);
        let s2 = Representation::simple(&a, 1);
        assert_eq!(stable_hom(&s1, &s1).unwrap().dim(), 1);
        for x in 0..2 {
            let p = Representation::projective(&a, x).unwrap();
            let i = Representation::injective(&a, x).unwrap();
            for n in [&s1, &s2, &p] {
                assert_eq!(stable_hom(&p, n).unwrap().dim(), 0);
                assert_eq!(costable_hom(n, &i).unwrap().dim(), 0);
            }
        }
        assert_eq!(costable_hom(&s2, &s2).unwrap().dim(), 1);
    }

    #[test]
    fn loop_algebra_is_refused() {
        let l = build(&["x"], &[("alpha", "x", "x")], &[&[(1, &["alpha", "alpha"]), (-1, &["alpha", "alpha", "alpha"])]]);
        let err = projective_cover(&Representation::simple(&l, 0)).unwrap_err();
        assert!(matches!(err, Error::Refused(_)));
    }

    #[test]
    fn presentation_labels_are_invariant() {
        let alg = hereditary_a3();
        let i = Representation::injective(&alg, 0).unwrap();
        let iso = crate::rep::find_isomorphism(&i, &i, 3).unwrap();
        let p = minimal_presentation(&i).unwrap();
        let twisted = crate::rep::try_submodule(&i, iso.maps().to_vec()).unwrap();
        let q = minimal_presentation(twisted.source()).unwrap();
        assert_eq!((p.p0, p.p1), (q.p0, q.p1));
        assert!(is_isomorphic(twisted.source(), &i).is_some());
    }
}
