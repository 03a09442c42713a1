//! Finite quivers and their paths.
//!
//! A [`Path`] stores its arrows in the order they are traversed. Display
//! follows the composition convention instead: the path "first `a`, then
//! `b`" prints as `b*a`.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};

/// Arrow names of an opposite quiver carry this suffix.
pub const OPPOSITE_SUFFIX: &str = "_op";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_index: HashMap<String, usize>,
    arrow_index: HashMap<String, usize>,
}

/// A path given by its endpoints and its arrows in traversal order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    source: usize,
    target: usize,
    arrows: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LocalFiniteness {
    pub left_locally_finite: bool,
    pub right_locally_finite: bool,
    pub locally_finite: bool,
}

impl Quiver {
    /// Builds a quiver from vertex names and `(name, source, target)` triples.
    pub fn new<S: AsRef<str>>(vertices: &[S], arrows: &[(S, S, S)]) -> Result<Quiver> {
        let mut q = Quiver {
            vertices: Vec::new(),
            arrows: Vec::new(),
            vertex_index: HashMap::new(),
            arrow_index: HashMap::new(),
        };
        for v in vertices {
            q.add_vertex(v.as_ref())?;
        }
        for (a, s, t) in arrows {
            let s = q.vertex(s.as_ref())?;
            let t = q.vertex(t.as_ref())?;
            q.add_arrow(a.as_ref(), s, t)?;
        }
        Ok(q)
    }

    pub fn empty() -> Quiver {
        Quiver::new::<&str>(&[], &[]).expect("empty quiver")
    }

    pub fn add_vertex(&mut self, name: &str) -> Result<usize> {
        if self.vertex_index.contains_key(name) || self.arrow_index.contains_key(name) {
            return Err(Error::Input(format!("duplicate identifier `{name}`")));
        }
        let i = self.vertices.len();
        self.vertices.push(name.to_string());
        self.vertex_index.insert(name.to_string(), i);
        Ok(i)
    }

    pub fn add_arrow(&mut self, name: &str, source: usize, target: usize) -> Result<usize> {
        if self.vertex_index.contains_key(name) || self.arrow_index.contains_key(name) {
            return Err(Error::Input(format!("duplicate identifier `{name}`")));
        }
        if source >= self.vertices.len() || target >= self.vertices.len() {
            return Err(Error::Input(format!("arrow `{name}` has an undeclared endpoint")));
        }
        let i = self.arrows.len();
        self.arrows.push(Arrow { name: name.to_string(), source, target });
        self.arrow_index.insert(name.to_string(), i);
        Ok(i)
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.vertex_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::Input(format!("unknown vertex `{name}`")))
    }

    pub fn arrow_id(&self, name: &str) -> Result<usize> {
        self.arrow_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::Input(format!("unknown arrow `{name}`")))
    }

    pub fn find_vertex(&self, name: &str) -> Option<usize> {
        self.vertex_index.get(name).copied()
    }

    pub fn find_arrow(&self, name: &str) -> Option<usize> {
        self.arrow_index.get(name).copied()
    }

    /// Arrows leaving `v`, in declaration order.
    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].source == v)
    }

    /// Arrows entering `v`, in declaration order.
    pub fn arrows_into(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].target == v)
    }

    pub fn trivial_path(&self, v: usize) -> Path {
        assert!(v < self.vertices.len());
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub fn arrow_path(&self, a: usize) -> Path {
        let ar = &self.arrows[a];
        Path { source: ar.source, target: ar.target, arrows: vec![a] }
    }

    /// A path from arrows listed in traversal order; `None` if not composable.
    pub fn path_from_traversal(&self, arrows: &[usize]) -> Option<Path> {
        let first = *arrows.first()?;
        let mut end = self.arrows.get(first)?.target;
        for &a in &arrows[1..] {
            let ar = self.arrows.get(a)?;
            if ar.source != end {
                return None;
            }
            end = ar.target;
        }
        Some(Path { source: self.arrows[first].source, target: end, arrows: arrows.to_vec() })
    }

    /// `p∘q`: first `q`, then `p`.
    pub fn compose(&self, p: &Path, q: &Path) -> Option<Path> {
        if q.target != p.source {
            return None;
        }
        let mut arrows = q.arrows.clone();
        arrows.extend_from_slice(&p.arrows);
        Some(Path { source: q.source, target: p.target, arrows })
    }

    /// All paths `x -> y` of length at most `max_len`, in canonical order.
    pub fn paths_between(&self, x: usize, y: usize, max_len: usize) -> Result<Vec<Path>> {
        if x >= self.vertices.len() || y >= self.vertices.len() {
            return Err(Error::Input("unknown vertex in path query".into()));
        }
        let mut out = Vec::new();
        let mut layer = vec![self.trivial_path(x)];
        for len in 0..=max_len {
            out.extend(layer.iter().filter(|p| p.target == y).cloned());
            if len == max_len {
                break;
            }
            let mut next = Vec::new();
            for p in &layer {
                for a in self.arrows_from(p.target) {
                    let mut arrows = p.arrows.clone();
                    arrows.push(a);
                    next.push(Path { source: x, target: self.arrows[a].target, arrows });
                }
            }
            next.sort_by(Path::canonical_cmp);
            layer = next;
        }
        Ok(out)
    }

    pub fn opposite(&self) -> Quiver {
        let arrows: Vec<(String, String, String)> = self
            .arrows
            .iter()
            .map(|a| {
                (opposite_name(&a.name), self.vertices[a.target].clone(), self.vertices[a.source].clone())
            })
            .collect();
        Quiver::new(&self.vertices, &arrows).expect("opposite of a valid quiver")
    }

    /// Fan-out and fan-in are finite sets for a finite quiver, so every flag holds.
    pub fn local_finiteness(&self) -> LocalFiniteness {
        LocalFiniteness { left_locally_finite: true, right_locally_finite: true, locally_finite: true }
    }

    /// Vertices reachable from `v` by paths of any length, `v` included.
    pub fn reachable_from(&self, v: usize) -> BTreeSet<usize> {
        let mut seen = BTreeSet::from([v]);
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            for a in self.arrows_from(u) {
                let t = self.arrows[a].target;
                if seen.insert(t) {
                    stack.push(t);
                }
            }
        }
        seen
    }

    /// Renders a path right-to-left, e.g. `b*a`; trivial paths print as `e_x`.
    pub fn path_string(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            return format!("e_{}", self.vertices[p.source]);
        }
        p.arrows.iter().rev().map(|&a| self.arrows[a].name.as_str()).collect::<Vec<_>>().join("*")
    }
}

/// `a` becomes `a_op`, and `a_op` becomes `a`.
pub fn opposite_name(name: &str) -> String {
    match name.strip_suffix(OPPOSITE_SUFFIX) {
        Some(base) if !base.is_empty() => base.to_string(),
        _ => format!("{name}{OPPOSITE_SUFFIX}"),
    }
}

impl Path {
    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Arrows in traversal order (first applied first).
    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    /// Length first, then lexicographic in arrow declaration order.
    pub fn canonical_cmp(&self, other: &Path) -> Ordering {
        self.arrows
            .len()
            .cmp(&other.arrows.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| (self.source, self.target).cmp(&(other.source, other.target)))
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.arrows.is_empty() {
            write!(f, "e{}", self.source)
        } else {
            let names: Vec<String> = self.arrows.iter().rev().map(|a| format!("#{a}")).collect();
            write!(f, "{}", names.join("*"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Quiver {
        Quiver::new(&["1", "2"], &[("alpha", "1", "2")]).unwrap()
    }

    fn kronecker() -> Quiver {
        Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "1", "2")]).unwrap()
    }

    fn one_loop() -> Quiver {
        Quiver::new(&["x"], &[("alpha", "x", "x")]).unwrap()
    }

    #[test]
    fn compose_conventions() {
        let q = Quiver::new(&["x", "y", "z"], &[("alpha", "x", "y"), ("beta", "y", "z")]).unwrap();
        let alpha = q.arrow_path(0);
        let beta = q.arrow_path(1);
        assert_eq!(q.compose(&q.trivial_path(1), &alpha), Some(alpha.clone()));
        let ba = q.compose(&beta, &alpha).unwrap();
        assert_eq!(ba.len(), 2);
        assert_eq!(q.path_string(&ba), "beta*alpha");
        assert_eq!(q.compose(&alpha, &beta), None);
    }

    #[test]
    fn paths_between_examples() {
        let q = a2();
        let ps = q.paths_between(0, 1, 3).unwrap();
        assert_eq!(ps.iter().map(|p| q.path_string(p)).collect::<Vec<_>>(), vec!["alpha"]);

        let l = one_loop();
        let ps = l.paths_between(0, 0, 2).unwrap();
        let names: Vec<String> = ps.iter().map(|p| l.path_string(p)).collect();
        assert_eq!(names, vec!["e_x", "alpha", "alpha*alpha"]);

        let k = kronecker();
        let ps = k.paths_between(0, 1, 1).unwrap();
        assert_eq!(ps.iter().map(|p| k.path_string(p)).collect::<Vec<_>>(), vec!["a", "b"]);

        assert!(q.paths_between(0, 7, 1).is_err());
    }

    #[test]
    fn loop_path_count() {
        let l = one_loop();
        for len in 0..6 {
            assert_eq!(l.paths_between(0, 0, len).unwrap().len(), len + 1);
        }
    }

    #[test]
    fn subpaths_are_listed() {
        let q = Quiver::new(
            &["1", "2", "3", "4"],
            &[("a", "1", "2"), ("b", "2", "3"), ("c", "2", "3"), ("d", "3", "4")],
        )
        .unwrap();
        for x in 0..4 {
            for y in 0..4 {
                for p in q.paths_between(x, y, 3).unwrap() {
                    for i in 0..=p.len() {
                        for j in i + 1..=p.len() {
                            let sub = q.path_from_traversal(&p.arrows()[i..j]).unwrap();
                            let listed = q.paths_between(sub.source(), sub.target(), 3).unwrap();
                            assert!(listed.contains(&sub));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn opposites() {
        let op = a2().opposite();
        assert_eq!(op.arrow(0).name, "alpha_op");
        assert_eq!((op.arrow(0).source, op.arrow(0).target), (1, 0));
        assert_eq!(a2().opposite().opposite(), a2());
        let l = one_loop().opposite();
        assert_eq!((l.arrow(0).source, l.arrow(0).target), (0, 0));
        let k = kronecker().opposite();
        assert!(k.arrows().iter().all(|a| a.source == 1 && a.target == 0));
    }

    #[test]
    fn finite_quivers_are_locally_finite() {
        for q in [a2(), kronecker(), one_loop()] {
            let lf = q.local_finiteness();
            assert!(lf.left_locally_finite && lf.right_locally_finite && lf.locally_finite);
        }
    }

    #[test]
    fn rejects_duplicates_and_unknown_endpoints() {
        assert!(Quiver::new(&["1", "1"], &[]).is_err());
        assert!(Quiver::new(&["1"], &[("a", "1", "2")]).is_err());
        assert!(Quiver::new(&["1"], &[("1", "1", "1")]).is_err());
    }
}
