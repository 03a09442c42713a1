//! Structural flags of a bound quiver algebra and the theorems they trigger.

use std::sync::Arc;

use super::{AlgebraElement, BoundQuiverAlgebra, Tri};
use crate::finalg::{Locality, MatrixAlgebra};
use crate::linalg::Matrix;
use crate::quiver::{LocalFiniteness, Path};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassifyCaps {
    pub path_length_cap: usize,
    pub multiserial_n_cap: usize,
}

impl Default for ClassifyCaps {
    fn default() -> Self {
        ClassifyCaps { path_length_cap: 24, multiserial_n_cap: 8 }
    }
}

/// Evidence attached to a flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// An idempotent of `e_x Λ e_x` other than 0 and `e_x`.
    Idempotent { vertex: usize, element: AlgebraElement, display: String },
    /// A cycle at `vertex` whose `power`-th power is nonzero, with `power = dim e_x Λ e_x`.
    NonNilpotentCycle { vertex: usize, cycle: Path, power: usize, display: String },
    /// A nonzero path of length `cap`: nonzero paths did not die out below the cap.
    LongPath { path: Path, display: String },
}

impl Witness {
    pub fn display(&self) -> &str {
        match self {
            Witness::Idempotent { display, .. }
            | Witness::NonNilpotentCycle { display, .. }
            | Witness::LongPath { display, .. } => display,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flag {
    pub value: Tri,
    pub witness: Option<Witness>,
}

impl Flag {
    fn plain(value: Tri) -> Flag {
        Flag { value, witness: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexReport {
    pub vertex: usize,
    pub name: String,
    pub local_endomorphisms: Flag,
    /// `dim Λe_x` and `dim e_xΛ` when known.
    pub dim_left: Option<usize>,
    pub dim_right: Option<usize>,
    pub left_bounded: Tri,
    pub right_bounded: Tri,
    pub left_multiserial: Tri,
    pub left_n: Option<usize>,
    pub right_multiserial: Tri,
    pub right_n: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub finiteness: LocalFiniteness,
    pub locally_semiperfect: Flag,
    pub locally_semiprimary: Flag,
    pub locally_left_bounded: Flag,
    pub locally_right_bounded: Flag,
    pub left_eventually_multiserial: Flag,
    pub right_eventually_multiserial: Flag,
    pub vertices: Vec<VertexReport>,
}

/// A theorem evaluated on a report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conclusion {
    pub statement: String,
    pub status: Tri,
    pub hypotheses: Vec<String>,
}

/// Left-regular representation of `e_x Λ e_x` on itself.
pub fn corner_algebra(alg: &BoundQuiverAlgebra, x: usize) -> crate::Result<MatrixAlgebra> {
    let idx = alg.pair_basis(x, x).to_vec();
    let f = alg.field();
    let d = idx.len();
    let pos = |i: usize| idx.iter().position(|&j| j == i).expect("product stays in the corner");
    let mut mats = Vec::with_capacity(d);
    for &i in &idx {
        let mut m = Matrix::zeros(f, d, d);
        for (col, &j) in idx.iter().enumerate() {
            for (k, c) in alg.mul_basis(i, j)?.iter() {
                m.set(pos(*k), col, c.clone());
            }
        }
        mats.push(m);
    }
    Ok(MatrixAlgebra::new(f, d, mats))
}

fn local_corner(alg: &BoundQuiverAlgebra, x: usize) -> Flag {
    let undecided = Flag::plain(Tri::Undecided(alg.caps().saturation_length));
    if !alg.status().is_decided() {
        return undecided;
    }
    let Ok(corner) = corner_algebra(alg, x) else {
        return undecided;
    };
    match corner.locality(x as u64) {
        Ok(Locality::Local) => Flag::plain(Tri::True),
        Ok(Locality::NotLocal(e)) => {
            let idx = alg.pair_basis(x, x);
            let element = alg.element(idx.iter().enumerate().map(|(r, &i)| (i, e.get(r, 0).clone())));
            let display = element_string(alg, &element);
            Flag { value: Tri::False, witness: Some(Witness::Idempotent { vertex: x, element, display }) }
        }
        Ok(Locality::Undecided(_)) | Err(_) => undecided,
    }
}

impl BoundQuiverAlgebra {
    /// Whether every `e_x Λ e_x` is local, with the first failing idempotent as witness.
    pub fn locally_semiperfect(&self) -> Flag {
        self.semiperfect
            .get_or_init(|| {
                let flags: Vec<Flag> = (0..self.num_vertices()).map(|x| local_corner(self, x)).collect();
                flags
                    .iter()
                    .find(|f| f.value.is_false())
                    .cloned()
                    .unwrap_or_else(|| all_flag(flags.iter().map(|f| f.value)))
            })
            .clone()
    }

    /// Fails unless the algebra is known to be locally semiperfect.
    pub fn require_semiperfect(&self, what: &str) -> crate::Result<()> {
        let flag = self.locally_semiperfect();
        match flag.value {
            Tri::True => Ok(()),
            Tri::False => Err(crate::Error::Refused(format!(
                "{what} needs a locally semiperfect algebra; classify reports semiperfect = false (idempotent {})",
                flag.witness.as_ref().map_or("?", Witness::display)
            ))),
            Tri::Undecided(b) => Err(crate::Error::Undecided(format!(
                "{what} needs a locally semiperfect algebra; classify reports semiperfect undecided (bound {b})"
            ))),
        }
    }
}

/// `c1*p1 + c2*p2`, coefficients 1 omitted.
pub fn element_string(alg: &BoundQuiverAlgebra, e: &AlgebraElement) -> String {
    if e.is_zero() {
        return "0".into();
    }
    let parts: Vec<String> = e
        .terms()
        .map(|(i, c)| if c.is_one() { alg.basis_name(i) } else { format!("{c}*{}", alg.basis_name(i)) })
        .collect();
    parts.join(" + ")
}

/// Nonzero paths by length, starting from the trivial paths at `starts`.
/// Returns the layers found and whether they died out within `cap`.
fn nonzero_layers(alg: &BoundQuiverAlgebra, starts: &[usize], cap: usize) -> (Vec<Vec<Path>>, Tri) {
    let q = alg.quiver();
    let mut layers = vec![starts.iter().map(|&v| q.trivial_path(v)).collect::<Vec<_>>()];
    let mut state = Tri::True;
    for _ in 0..cap {
        let mut next = Vec::new();
        for p in layers.last().unwrap() {
            for a in q.arrows_from(p.target()) {
                let ext = q.compose(&q.arrow_path(a), p).unwrap();
                match alg.is_nonzero_path(&ext) {
                    Tri::True => next.push(ext),
                    Tri::False => {}
                    Tri::Undecided(b) => state = state.and(Tri::Undecided(b)),
                }
            }
        }
        if next.is_empty() {
            return (layers, state);
        }
        layers.push(next);
    }
    (layers, state.and(Tri::Undecided(cap)))
}

fn semiprimary(alg: &BoundQuiverAlgebra, cap: usize) -> Flag {
    let all: Vec<usize> = (0..alg.num_vertices()).collect();
    let (layers, state) = nonzero_layers(alg, &all, cap);
    if state.is_true() {
        return Flag::plain(Tri::True);
    }
    if alg.status().is_decided() {
        let q = alg.quiver();
        for layer in layers.iter().skip(1) {
            for c in layer.iter().filter(|p| p.source() == p.target()) {
                let d = alg.pair_dim(c.source(), c.source());
                let mut power = c.clone();
                for _ in 1..d {
                    power = q.compose(c, &power).unwrap();
                }
                if alg.is_nonzero_path(&power).is_true() {
                    let display = q.path_string(c);
                    return Flag {
                        value: Tri::False,
                        witness: Some(Witness::NonNilpotentCycle { vertex: c.source(), cycle: c.clone(), power: d, display }),
                    };
                }
            }
        }
    }
    let witness = layers.last().and_then(|l| l.first()).map(|p| Witness::LongPath {
        path: p.clone(),
        display: alg.quiver().path_string(p),
    });
    Flag { value: match state {
        Tri::Undecided(b) => Tri::Undecided(b),
        _ => Tri::Undecided(cap),
    }, witness }
}

enum Chain {
    Yes,
    Branches,
    Unknown(usize),
}

/// Whether the nonzero extensions of `rho` (later arrows) form a chain.
fn extensions_form_chain(alg: &BoundQuiverAlgebra, rho: &Path, cap: usize) -> Chain {
    let q = alg.quiver();
    let mut current = rho.clone();
    loop {
        let reach = q.reachable_from(current.target());
        if reach.iter().all(|&v| q.arrows_from(v).count() <= 1) {
            return Chain::Yes;
        }
        if current.len() >= cap {
            return Chain::Unknown(cap);
        }
        let mut children = Vec::new();
        for a in q.arrows_from(current.target()) {
            let ext = q.compose(&q.arrow_path(a), &current).unwrap();
            match alg.is_nonzero_path(&ext) {
                Tri::True => children.push(ext),
                Tri::False => {}
                Tri::Undecided(b) => return Chain::Unknown(b),
            }
        }
        match children.len() {
            0 => return Chain::Yes,
            1 => current = children.pop().unwrap(),
            _ => return Chain::Branches,
        }
    }
}

/// Least `n` such that nonzero paths from `x` of length `n` have chains of extensions.
fn left_multiserial_at(alg: &BoundQuiverAlgebra, x: usize, caps: ClassifyCaps) -> (Tri, Option<usize>) {
    let (layers, _) = nonzero_layers(alg, &[x], caps.multiserial_n_cap);
    let mut undecided = None;
    for n in 0..=caps.multiserial_n_cap {
        let Some(rhos) = layers.get(n) else {
            return (Tri::True, Some(n));
        };
        let mut chain = true;
        let mut unknown = None;
        for rho in rhos {
            match extensions_form_chain(alg, rho, caps.path_length_cap) {
                Chain::Yes => {}
                Chain::Branches => {
                    chain = false;
                    break;
                }
                Chain::Unknown(b) => unknown = Some(b),
            }
        }
        match (chain, unknown) {
            (true, None) => return (Tri::True, Some(n)),
            (true, Some(b)) => undecided = Some(b),
            _ => {}
        }
    }
    (Tri::Undecided(undecided.unwrap_or(caps.multiserial_n_cap)), None)
}

fn all_flag(values: impl Iterator<Item = Tri>) -> Flag {
    Flag::plain(values.fold(Tri::True, Tri::and))
}

/// Classifies `alg` against the local finiteness notions of bound quiver algebras.
pub fn classify(alg: &Arc<BoundQuiverAlgebra>, caps: ClassifyCaps) -> ClassificationReport {
    let n = alg.num_vertices();
    let decided = alg.status().is_decided();
    let undecided = Tri::Undecided(alg.caps().saturation_length);
    let op = alg.opposite();
    let mut vertices = Vec::with_capacity(n);
    for x in 0..n {
        let dim_left = decided.then(|| (0..n).map(|y| alg.pair_dim(x, y)).sum());
        let dim_right = decided.then(|| (0..n).map(|y| alg.pair_dim(y, x)).sum());
        let (left_multiserial, left_n) = left_multiserial_at(alg, x, caps);
        let (right_multiserial, right_n) = left_multiserial_at(&op, x, caps);
        vertices.push(VertexReport {
            vertex: x,
            name: alg.quiver().vertex_name(x).to_string(),
            local_endomorphisms: local_corner(alg, x),
            dim_left,
            dim_right,
            left_bounded: if decided { Tri::True } else { undecided },
            right_bounded: if decided { Tri::True } else { undecided },
            left_multiserial,
            left_n,
            right_multiserial,
            right_n,
        });
    }
    let semiperfect = alg.locally_semiperfect();
    ClassificationReport {
        finiteness: alg.quiver().local_finiteness(),
        locally_semiperfect: semiperfect,
        locally_semiprimary: semiprimary(alg, caps.path_length_cap),
        locally_left_bounded: all_flag(vertices.iter().map(|v| v.left_bounded)),
        locally_right_bounded: all_flag(vertices.iter().map(|v| v.right_bounded)),
        left_eventually_multiserial: all_flag(vertices.iter().map(|v| v.left_multiserial)),
        right_eventually_multiserial: all_flag(vertices.iter().map(|v| v.right_multiserial)),
        vertices,
    }
}

/// Theorems whose hypotheses are not refuted by the report. A conclusion
/// is `True` when every hypothesis holds and `Undecided` otherwise.
pub fn ass_theorem_conclusions(r: &ClassificationReport) -> Vec<Conclusion> {
    let lf = Tri::from_bool(r.finiteness.locally_finite);
    let sp = r.locally_semiperfect.value;
    let spr = r.locally_semiprimary.value;
    let lb = r.locally_left_bounded.value;
    let rb = r.locally_right_bounded.value;
    let h = |s: &str| s.to_string();
    let rules: Vec<(Vec<(String, Tri)>, &str)> = vec![
        (
            vec![(h("locally semiperfect"), sp)],
            "Mod Λ has an almost split sequence ending at each indecomposable nonprojective module of mod⁺Λ \
             and one starting at each indecomposable noninjective module of mod⁻Λ",
        ),
        (vec![(h("left eventually multiserial"), r.left_eventually_multiserial.value)], "Λ is locally left noetherian"),
        (vec![(h("right eventually multiserial"), r.right_eventually_multiserial.value)], "Λ is locally right noetherian"),
        (
            vec![(h("locally semiprimary"), spr), (h("locally finite quiver"), lf), (h("locally left bounded"), lb)],
            "mod⁺Λ has almost split sequences on the left",
        ),
        (
            vec![(h("locally semiprimary"), spr), (h("locally finite quiver"), lf), (h("locally left bounded"), lb)],
            "mod⁻Λ has almost split sequences on the left",
        ),
        (
            vec![(h("locally semiprimary"), spr), (h("locally finite quiver"), lf), (h("locally left bounded"), lb)],
            "modᵇΛ has almost split sequences on the left",
        ),
        (
            vec![(h("locally semiprimary"), spr), (h("locally finite quiver"), lf), (h("locally right bounded"), rb)],
            "mod⁺Λ has almost split sequences on the right",
        ),
        (
            vec![(h("locally semiprimary"), spr), (h("locally finite quiver"), lf), (h("locally right bounded"), rb)],
            "mod⁻Λ has almost split sequences on the right",
        ),
        (
            vec![(h("locally semiprimary"), spr), (h("locally finite quiver"), lf), (h("locally right bounded"), rb)],
            "modᵇΛ has almost split sequences on the right",
        ),
    ];
    rules
        .into_iter()
        .filter_map(|(hyps, statement)| {
            let status = hyps.iter().fold(Tri::True, |acc, (_, t)| acc.and(*t));
            (!status.is_false()).then(|| Conclusion {
                statement: statement.to_string(),
                status,
                hypotheses: hyps.into_iter().map(|(s, _)| s).collect(),
            })
        })
        .collect()
}
