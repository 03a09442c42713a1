//! Seeded random modules and short exact sequences.

use std::sync::Arc;

use rand::Rng;

use super::{dualize, generated_submodule, quotient, RepMorphism, Representation};
use crate::algebra::BoundQuiverAlgebra;
use crate::error::Result;
use crate::linalg::Matrix;

/// A random module of total dimension at most `max_dim`: a quotient of a
/// projective or of a sum of two, or the dual of such a module over the
/// opposite algebra. Falls back to a simple module.
pub fn random_module<R: Rng + ?Sized>(
    alg: &Arc<BoundQuiverAlgebra>,
    max_dim: usize,
    rng: &mut R,
) -> Result<Representation> {
    let n = alg.num_vertices();
    for _ in 0..32 {
        let dual = rng.gen_bool(0.5);
        let base = if dual { alg.opposite() } else { alg.clone() };
        let k = rng.gen_range(1..=2);
        let parts: Vec<Representation> =
            (0..k).map(|_| Representation::projective(&base, rng.gen_range(0..n))).collect::<Result<_>>()?;
        let p = super::direct_sum(&base, &parts).module;
        if p.total_dim() == 0 {
            continue;
        }
        let gens = rng.gen_range(0..=2);
        let vectors: Vec<(usize, Matrix)> = (0..gens)
            .filter_map(|_| {
                let support: Vec<usize> = (0..n).filter(|&x| p.dim(x) > 0).collect();
                let x = support[rng.gen_range(0..support.len())];
                let v = Matrix::random(p.field(), p.dim(x), 1, rng);
                (!v.is_zero()).then_some((x, v))
            })
            .collect();
        let sub = generated_submodule(&p, &vectors);
        let q = quotient(&p, sub.maps().to_vec()).target().clone();
        if q.is_zero() || q.total_dim() > max_dim {
            continue;
        }
        return Ok(if dual { dualize(&q) } else { q });
    }
    Ok(Representation::simple(alg, rng.gen_range(0..n)))
}

/// A random short exact sequence `0 -> X -> Y -> Z -> 0` with `Y` random
/// and `X` generated by random vectors of `Y`.
pub fn random_short_exact<R: Rng + ?Sized>(
    alg: &Arc<BoundQuiverAlgebra>,
    max_dim: usize,
    rng: &mut R,
) -> Result<(RepMorphism, RepMorphism)> {
    let y = random_module(alg, max_dim, rng)?;
    let n = alg.num_vertices();
    let support: Vec<usize> = (0..n).filter(|&x| y.dim(x) > 0).collect();
    let gens: Vec<(usize, Matrix)> = (0..rng.gen_range(1..=2))
        .map(|_| {
            let x = support[rng.gen_range(0..support.len())];
            (x, Matrix::random(y.field(), y.dim(x), 1, rng))
        })
        .collect();
    let f = generated_submodule(&y, &gens);
    let g = quotient(&y, f.maps().to_vec());
    Ok((f, g))
}
