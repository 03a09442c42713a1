use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::random::{random_module, random_short_exact};
use super::*;
use crate::testutil::*;

fn q_mat(rows: &[Vec<i64>]) -> Matrix {
    Matrix::from_i64(Field::Rational, rows)
}

#[test]
fn a2_projective_and_injective_dims() {
    let a = a2();
    let dims = |m: Representation| m.dims().to_vec();
    assert_eq!(dims(Representation::projective(&a, 0).unwrap()), vec![1, 1]);
    assert_eq!(dims(Representation::projective(&a, 1).unwrap()), vec![0, 1]);
    assert_eq!(dims(Representation::injective(&a, 0).unwrap()), vec![1, 0]);
    assert_eq!(dims(Representation::injective(&a, 1).unwrap()), vec![1, 1]);
}

#[test]
fn loop_projective_action() {
    let l = build(&["x"], &[("alpha", "x", "x")], &[&[(1, &["alpha", "alpha"]), (-1, &["alpha", "alpha", "alpha"])]]);
    let p = Representation::projective(&l, 0).unwrap();
    assert_eq!(p.dims(), &[3]);
    // alpha on {e, alpha, alpha^2}, using alpha^3 = alpha^2
    assert_eq!(p.mat(0), &q_mat(&[vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 1]]));
    p.check_relations().unwrap();
}

#[test]
fn relation_violations_are_rejected() {
    let b = bound_a3();
    let one = q_mat(&[vec![1]]);
    assert!(Representation::new(&b, vec![1, 1, 1], vec![one.clone(), one.clone()]).is_err());
    assert!(Representation::new(&b, vec![1, 1, 1], vec![one, q_mat(&[vec![0]])]).is_ok());
}

#[test]
fn yoneda_dimensions() {
    for alg in [a2(), bound_a3(), hereditary_a3(), dual_numbers()] {
        let n = alg.num_vertices();
        let mut corpus = Vec::new();
        for x in 0..n {
            corpus.push(Representation::simple(&alg, x));
            corpus.push(Representation::projective(&alg, x).unwrap());
            corpus.push(Representation::injective(&alg, x).unwrap());
        }
        for m in &corpus {
            for x in 0..n {
                let p = Representation::projective(&alg, x).unwrap();
                let i = Representation::injective(&alg, x).unwrap();
                assert_eq!(hom_dim(&p, m), m.dim(x));
                assert_eq!(hom_dim(m, &i), m.dim(x));
            }
        }
    }
}

#[test]
fn hom_between_simples_and_morphism_checks() {
    let a = a2();
    let s1 = Representation::simple(&a, 0);
    let s2 = Representation::simple(&a, 1);
    assert!(hom_basis(&s1, &s2).is_empty());
    assert_eq!(hom_basis(&s1, &s1).len(), 1);
    let p1 = Representation::projective(&a, 0).unwrap();
    let good = vec![q_mat(&[vec![1]]), Matrix::zeros(Field::Rational, 0, 1)];
    assert!(RepMorphism::new(&p1, &s1, good).is_ok());
    let bad = vec![Matrix::zeros(Field::Rational, 1, 1), q_mat(&[vec![1]])];
    assert!(RepMorphism::new(&p1, &p1, bad).is_err());
}

#[test]
fn exact_parts_examples() {
    let a = a2();
    let p1 = Representation::projective(&a, 0).unwrap();
    let id = RepMorphism::identity(&p1).exact_parts();
    assert!(id.kernel.source().is_zero() && id.cokernel.target().is_zero());
    let s2 = Representation::simple(&a, 1);
    let z = RepMorphism::zero(&p1, &s2).exact_parts();
    assert_eq!(z.kernel.source().dims(), p1.dims());
    assert_eq!(z.cokernel.target().dims(), s2.dims());
    let incl = radical(&p1);
    assert_eq!(incl.source().dims(), &[0, 1]);
    let coker = incl.cokernel();
    assert!(is_isomorphic(coker.target(), &Representation::simple(&a, 0)).is_some());
    assert_eq!(incl.cokernel().compose(&incl).rank(), 0);
}

#[test]
fn radical_top_socle() {
    for alg in [a2(), bound_a3(), hereditary_a3(), dual_numbers()] {
        for x in 0..alg.num_vertices() {
            let s = Representation::simple(&alg, x);
            let p = Representation::projective(&alg, x).unwrap();
            let i = Representation::injective(&alg, x).unwrap();
            assert!(is_isomorphic(top(&p).target(), &s).is_some());
            assert!(is_isomorphic(socle(&i).source(), &s).is_some());
        }
    }
    let a = a2();
    let p1 = Representation::projective(&a, 0).unwrap();
    assert!(is_isomorphic(radical(&p1).source(), &Representation::simple(&a, 1)).is_some());
}

#[test]
fn duality_examples() {
    let a = a2();
    let op = a.opposite();
    for x in 0..2 {
        let ds = dualize(&Representation::simple(&a, x));
        assert!(is_isomorphic(&ds, &Representation::simple(&op, x)).is_some());
        let dp = dualize(&Representation::projective(&op, x).unwrap());
        assert_eq!(dp, Representation::injective(&a, x).unwrap());
    }
    let p1 = Representation::projective(&a, 0).unwrap();
    assert_eq!(dualize(&p1).dims(), p1.dims());
    assert_eq!(dualize(&dualize(&p1)), p1);
}

#[test]
fn direct_sums() {
    let a = a2();
    let p1 = Representation::projective(&a, 0).unwrap();
    let s2 = Representation::simple(&a, 1);
    let sum = direct_sum(&a, &[p1.clone(), s2.clone()]);
    assert_eq!(sum.module.dims(), &[1, 2]);
    for (i, p) in sum.injections.iter().zip(&sum.projections) {
        assert!(p.compose(i).is_iso());
    }
    let with_zero = direct_sum(&a, &[p1.clone(), Representation::zero(&a)]).module;
    assert!(is_isomorphic(&with_zero, &p1).is_some());
}

#[test]
fn isomorphism_examples() {
    let a = a2();
    let s1 = Representation::simple(&a, 0);
    let s2 = Representation::simple(&a, 1);
    let p2 = Representation::projective(&a, 1).unwrap();
    assert!(is_isomorphic(&s1, &s1).unwrap().is_iso());
    assert!(is_isomorphic(&s1, &s2).is_none());
    assert!(is_isomorphic(&p2, &s2).is_some());
    let k = kronecker();
    let s = Representation::simple(&k, 0);
    let p = Representation::projective(&k, 0).unwrap();
    assert!(is_isomorphic(&s, &p).is_none());
}

#[test]
fn kronecker_regular_modules_distinguished() {
    let k = kronecker();
    let f = k.field();
    let one = Matrix::from_i64(f, &[vec![1]]);
    let m = |b: i64| Representation::new(&k, vec![1, 1], vec![one.clone(), Matrix::from_i64(f, &[vec![b]])]).unwrap();
    assert!(is_isomorphic(&m(3), &m(3)).is_some());
    assert!(is_isomorphic(&m(3), &m(4)).is_none());
}

#[test]
fn decompose_examples() {
    let a = a2();
    let s1 = Representation::simple(&a, 0);
    let parts = decompose(&s1, 1);
    assert_eq!(parts.len(), 1);
    assert!(parts[0].certificate.is_local());

    let p1 = Representation::projective(&a, 0).unwrap();
    let s2 = Representation::simple(&a, 1);
    for seed in 0..5 {
        let sum = direct_sum(&a, &[p1.clone(), s2.clone()]).module;
        let parts = decompose(&sum, seed);
        assert_eq!(parts.len(), 2);
        let mut found = [false, false];
        for p in &parts {
            assert!(p.certificate.is_local());
            assert!(p.projection.compose(&p.inclusion).is_iso());
            if is_isomorphic(&p.module, &p1).is_some() {
                found[0] = true;
            }
            if is_isomorphic(&p.module, &s2).is_some() {
                found[1] = true;
            }
        }
        assert_eq!(found, [true, true]);
    }

    let ss = direct_sum(&a, &[s1.clone(), s1.clone()]).module;
    let parts = decompose(&ss, 3);
    assert_eq!(parts.len(), 2);
    assert!(parts.iter().all(|p| is_isomorphic(&p.module, &s1).is_some()));
    assert!(decompose(&Representation::zero(&a), 0).is_empty());
}

#[test]
fn decompose_reassembles() {
    let alg = bound_a3();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for seed in 0..6 {
        let m = random_module(&alg, 6, &mut rng).unwrap();
        let parts = decompose(&m, seed);
        let sum = direct_sum(&alg, &parts.iter().map(|p| p.module.clone()).collect::<Vec<_>>());
        let mut total = RepMorphism::zero(&sum.module, &m);
        for (p, proj) in parts.iter().zip(&sum.projections) {
            total = total.add(&p.inclusion.compose(proj));
        }
        assert!(total.is_iso());
    }
}

#[test]
fn random_modules_satisfy_relations() {
    let alg = dual_numbers();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..10 {
        let m = random_module(&alg, 5, &mut rng).unwrap();
        m.check_relations().unwrap();
        assert!(m.total_dim() <= 5);
        let (f, g) = random_short_exact(&alg, 5, &mut rng).unwrap();
        assert!(f.is_injective() && g.is_surjective());
        assert!(g.compose(&f).is_zero());
        assert_eq!(f.target().total_dim(), f.source().total_dim() + g.target().total_dim());
    }
}

#[test]
fn socle_is_essential() {
    let alg = bound_a3();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..6 {
        let m = random_module(&alg, 6, &mut rng).unwrap();
        let soc = socle(&m);
        for x in 0..3 {
            for j in 0..m.dim(x) {
                let mut v = Matrix::zeros(m.field(), m.dim(x), 1);
                v.set(j, 0, m.field().one());
                let sub = generated_submodule(&m, &[(x, v)]);
                let meet: usize =
                    (0..3).map(|y| sub.map(y).column_space_intersection(soc.map(y)).cols()).sum();
                assert!(meet > 0);
            }
        }
    }
}
