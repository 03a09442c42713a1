use std::sync::Arc;

use crate::algebra::{BoundQuiverAlgebra, Caps};
use crate::linalg::Field;
use crate::quiver::Quiver;

/// Relations are lists of `(coefficient, arrows)` with arrows written left to right as in `b*a`.
pub fn build_over(
    field: Field,
    vertices: &[&str],
    arrows: &[(&str, &str, &str)],
    rels: &[&[(i64, &[&str])]],
) -> Arc<BoundQuiverAlgebra> {
    let q = Quiver::new(vertices, arrows).unwrap();
    let relations = rels
        .iter()
        .map(|r| {
            r.iter()
                .map(|(c, names)| {
                    let ids: Vec<usize> = names.iter().rev().map(|n| q.arrow_id(n).unwrap()).collect();
                    (field.from_i64(*c), q.path_from_traversal(&ids).unwrap())
                })
                .collect()
        })
        .collect();
    BoundQuiverAlgebra::build(q, relations, field, Caps::default()).unwrap()
}

pub fn build(vertices: &[&str], arrows: &[(&str, &str, &str)], rels: &[&[(i64, &[&str])]]) -> Arc<BoundQuiverAlgebra> {
    build_over(Field::Rational, vertices, arrows, rels)
}

pub fn a2() -> Arc<BoundQuiverAlgebra> {
    build(&["1", "2"], &[("alpha", "1", "2")], &[])
}

pub fn bound_a3() -> Arc<BoundQuiverAlgebra> {
    build(&["1", "2", "3"], &[("alpha", "1", "2"), ("beta", "2", "3")], &[&[(1, &["beta", "alpha"])]])
}

pub fn hereditary_a3() -> Arc<BoundQuiverAlgebra> {
    build(&["1", "2", "3"], &[("alpha", "1", "2"), ("beta", "2", "3")], &[])
}

pub fn kronecker() -> Arc<BoundQuiverAlgebra> {
    build_over(Field::Prime(101), &["1", "2"], &[("a", "1", "2"), ("b", "1", "2")], &[])
}

pub fn dual_numbers() -> Arc<BoundQuiverAlgebra> {
    build(&["x"], &[("alpha", "x", "x")], &[&[(1, &["alpha", "alpha"])]])
}
