//! Bound quiver algebras `kQ/I` with normal forms from a completed rewrite system.
//!
//! An algebra and its opposite share one rewrite system. The opposite swaps
//! the roles of source and target and reads every word backwards, so no
//! second completion is needed and `opposite(opposite(A))` is `A` again.

pub mod classify;
pub mod rewrite;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::linalg::{Field, Scalar};
use crate::quiver::{Path, Quiver};

pub use classify::{
    ass_theorem_conclusions, classify, ClassifyCaps, ClassificationReport, Conclusion, Flag, VertexReport,
};
use rewrite::{Mono, RewriteSystem, Word, WordPoly};

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// Bounds for completion and basis saturation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub completion_degree: usize,
    pub saturation_length: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { completion_degree: 12, saturation_length: 24 }
    }
}

/// How the basis search ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Saturation {
    /// No irreducible word of length `N`, and every path of length `N` is zero.
    NilpotentVerified(usize),
    /// No irreducible word of length `L`, but some path of length `L` is nonzero.
    Stabilized(usize),
    /// A cap was reached before the basis closed up.
    Undecided(usize),
}

impl Saturation {
    pub fn is_decided(self) -> bool {
        !matches!(self, Saturation::Undecided(_))
    }
}

impl fmt::Display for Saturation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Saturation::NilpotentVerified(n) => write!(f, "nilpotent-verified({n})"),
            Saturation::Stabilized(l) => write!(f, "stabilized({l})"),
            Saturation::Undecided(c) => write!(f, "undecided({c})"),
        }
    }
}

/// Three-valued answers; `Undecided` records the bound that was hit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tri {
    True,
    False,
    Undecided(usize),
}

impl Tri {
    pub fn from_bool(b: bool) -> Tri {
        if b {
            Tri::True
        } else {
            Tri::False
        }
    }

    pub fn is_true(self) -> bool {
        self == Tri::True
    }

    pub fn is_false(self) -> bool {
        self == Tri::False
    }

    /// Conjunction: any `False` wins, then any `Undecided`.
    pub fn and(self, other: Tri) -> Tri {
        match (self, other) {
            (Tri::False, _) | (_, Tri::False) => Tri::False,
            (Tri::Undecided(a), Tri::Undecided(b)) => Tri::Undecided(a.max(b)),
            (Tri::Undecided(a), _) | (_, Tri::Undecided(a)) => Tri::Undecided(a),
            _ => Tri::True,
        }
    }
}

impl fmt::Display for Tri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tri::True => write!(f, "true"),
            Tri::False => write!(f, "false"),
            Tri::Undecided(b) => write!(f, "undecided({b})"),
        }
    }
}

/// A linear combination of parallel paths.
pub type Relation = Vec<(Scalar, Path)>;

struct Core {
    id: u64,
    quiver: Quiver,
    field: Field,
    relations: Vec<Relation>,
    system: RewriteSystem,
    status: Saturation,
    caps: Caps,
    /// `(source, target, word)`; the first `|Q_0|` entries are trivial paths.
    basis: Vec<(usize, usize, Word)>,
    index: HashMap<Word, usize>,
    pairs: HashMap<(usize, usize), Vec<usize>>,
    products: Mutex<HashMap<(usize, usize), Arc<Vec<(usize, Scalar)>>>>,
}

/// `Λ = kQ/I` together with a normal-form basis.
pub struct BoundQuiverAlgebra {
    core: Arc<Core>,
    reversed: bool,
    quiver: Quiver,
    opposite: OnceLock<Arc<BoundQuiverAlgebra>>,
    semiperfect: OnceLock<classify::Flag>,
}

impl fmt::Debug for BoundQuiverAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BoundQuiverAlgebra")
            .field("id", &self.core.id)
            .field("reversed", &self.reversed)
            .field("dim", &self.dim())
            .field("status", &self.core.status)
            .finish()
    }
}

/// Finitely supported coefficients on the global basis of one algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    owner: (u64, bool),
    field: Field,
    coeffs: BTreeMap<usize, Scalar>,
}

impl AlgebraElement {
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(&i).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Nonzero `(basis index, coefficient)` pairs in index order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coeffs.iter().map(|(&i, c)| (i, c))
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.owner, other.owner, "elements of different algebras");
        let mut out = self.clone();
        for (&i, c) in &other.coeffs {
            out.add_term(i, c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> AlgebraElement {
        let mut out = AlgebraElement { owner: self.owner, field: self.field, coeffs: BTreeMap::new() };
        for (&i, c) in &self.coeffs {
            out.add_term(i, c * s);
        }
        out
    }

    fn add_term(&mut self, i: usize, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let sum = match self.coeffs.remove(&i) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.coeffs.insert(i, sum);
        }
    }
}

fn span_insert(basis: &mut Vec<WordPoly>, mut p: WordPoly) {
    loop {
        let Some((lead, c)) = p.lead().map(|(w, c)| (w.clone(), c.clone())) else {
            return;
        };
        match basis.iter().find(|q| q.lead().map(|(w, _)| w) == Some(&lead)) {
            Some(q) => {
                let d = q.lead().unwrap().1.clone();
                p.add_scaled(q, &-(&c * &d.inv()));
            }
            None => {
                basis.push(p);
                return;
            }
        }
    }
}

impl BoundQuiverAlgebra {
    /// Builds `kQ/I`. Relations must be combinations of parallel paths of length at least 2.
    pub fn build(quiver: Quiver, relations: Vec<Relation>, field: Field, caps: Caps) -> Result<Arc<Self>> {
        if caps.completion_degree < 2 || caps.saturation_length < 2 {
            return Err(Error::Input("caps must be at least 2".into()));
        }
        let mut gens = Vec::new();
        for (k, rel) in relations.iter().enumerate() {
            let mut ends = None;
            let mut poly = WordPoly::zero(field);
            for (c, p) in rel {
                if c.field() != field {
                    return Err(Error::Input(format!("relation {} has a coefficient outside {field}", k + 1)));
                }
                if p.len() < 2 {
                    return Err(Error::Input(format!(
                        "relation {} has the monomial {} of length below 2",
                        k + 1,
                        quiver.path_string(p)
                    )));
                }
                let e = (p.source(), p.target());
                if *ends.get_or_insert(e) != e {
                    return Err(Error::Input(format!("relation {} mixes non-parallel paths", k + 1)));
                }
                poly.add_term(p.arrows().to_vec(), c.clone());
            }
            gens.push(poly);
        }
        let system = RewriteSystem::complete(field, &gens, caps.completion_degree);

        let n = quiver.num_vertices();
        let mut basis: Vec<(usize, usize, Word)> = (0..n).map(|v| (v, v, Vec::new())).collect();
        let mut layer: Vec<Word> = (0..quiver.num_arrows()).map(|a| vec![a]).collect();
        let mut len = 1;
        let end = |w: &Word| quiver.arrow(*w.last().unwrap()).target;
        let closed_at = loop {
            if layer.is_empty() {
                break Some(len);
            }
            if len > caps.saturation_length {
                break None;
            }
            let mut next = Vec::new();
            for w in &layer {
                for a in quiver.arrows_from(end(w)) {
                    let mut x = w.clone();
                    x.push(a);
                    if !system.has_lead_suffix(&x) {
                        next.push(x);
                    }
                }
            }
            next.sort_by(|a, b| Mono(a.clone()).cmp(&Mono(b.clone())));
            for w in layer {
                let s = quiver.arrow(w[0]).source;
                let t = end(&w);
                basis.push((s, t, w));
            }
            layer = next;
            len += 1;
        };

        let mut status = match closed_at {
            None => Saturation::Undecided(caps.saturation_length),
            Some(l) => {
                let mut span: Vec<WordPoly> = Vec::new();
                for a in 0..quiver.num_arrows() {
                    span_insert(&mut span, WordPoly::word(field, vec![a]));
                }
                for _ in 1..l {
                    let mut next = Vec::new();
                    for p in &span {
                        let t = end(p.lead().unwrap().0);
                        for a in quiver.arrows_from(t) {
                            span_insert(&mut next, system.reduce(&p.sandwich(&[], &[a])));
                        }
                    }
                    span = next;
                }
                if span.is_empty() {
                    Saturation::NilpotentVerified(l)
                } else {
                    Saturation::Stabilized(l)
                }
            }
        };
        if !system.is_complete() {
            status = Saturation::Undecided(caps.completion_degree);
        }

        let mut index = HashMap::new();
        let mut pairs: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for (i, (s, t, w)) in basis.iter().enumerate() {
            if !w.is_empty() {
                index.insert(w.clone(), i);
            }
            pairs.entry((*s, *t)).or_default().push(i);
        }
        let core = Core {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            quiver: quiver.clone(),
            field,
            relations,
            system,
            status,
            caps,
            basis,
            index,
            pairs,
            products: Mutex::new(HashMap::new()),
        };
        let alg = Arc::new(BoundQuiverAlgebra { core: Arc::new(core), reversed: false, quiver, opposite: OnceLock::new(), semiperfect: OnceLock::new() });
        if status.is_decided() && alg.dim() <= 24 {
            alg.check_associativity()?;
        }
        Ok(alg)
    }

    fn check_associativity(&self) -> Result<()> {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                let ij = self.basis_element(i).clone();
                let ij = self.multiply(&ij, &self.basis_element(j))?;
                for k in 0..d {
                    let left = self.multiply(&ij, &self.basis_element(k))?;
                    let jk = self.multiply(&self.basis_element(j), &self.basis_element(k))?;
                    let right = self.multiply(&self.basis_element(i), &jk)?;
                    if left != right {
                        return Err(Error::Consistency(format!(
                            "multiplication is not associative on basis elements {i}, {j}, {k}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Identity of the algebra: a build counter plus the orientation.
    pub fn id(&self) -> (u64, bool) {
        (self.core.id, self.reversed)
    }

    pub fn same_as(&self, other: &BoundQuiverAlgebra) -> bool {
        self.id() == other.id()
    }

    pub fn is_reversed(&self) -> bool {
        self.reversed
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn field(&self) -> Field {
        self.core.field
    }

    pub fn caps(&self) -> Caps {
        self.core.caps
    }

    pub fn status(&self) -> Saturation {
        self.core.status
    }

    pub fn completion_finished(&self) -> bool {
        self.core.system.is_complete()
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver.num_vertices()
    }

    pub fn dim(&self) -> usize {
        self.core.basis.len()
    }

    /// Generators of the relation ideal as paths of this algebra's quiver.
    pub fn relations(&self) -> Vec<Relation> {
        self.core
            .relations
            .iter()
            .map(|rel| rel.iter().map(|(c, p)| (c.clone(), self.public_path(p.source(), p.arrows()))).collect())
            .collect()
    }

    /// Completed rules as `(lead, tail)` in this algebra's quiver.
    pub fn rewrite_rules(&self) -> Vec<(Path, Vec<(Scalar, Path)>)> {
        let q = &self.core.quiver;
        self.core
            .system
            .rules()
            .iter()
            .map(|r| {
                let s = q.arrow(r.lead[0]).source;
                let lead = self.public_path(s, &r.lead);
                let tail = r.tail.terms().map(|(w, c)| (c.clone(), self.public_path(s, w))).collect();
                (lead, tail)
            })
            .collect()
    }

    fn public_path(&self, internal_source: usize, w: &[usize]) -> Path {
        if w.is_empty() {
            return self.quiver.trivial_path(internal_source);
        }
        let arrows: Vec<usize> = if self.reversed { w.iter().rev().copied().collect() } else { w.to_vec() };
        self.quiver.path_from_traversal(&arrows).expect("basis words are paths")
    }

    fn internal_word(&self, p: &Path) -> Word {
        if self.reversed {
            p.arrows().iter().rev().copied().collect()
        } else {
            p.arrows().to_vec()
        }
    }

    /// The `i`-th basis path.
    pub fn basis_path(&self, i: usize) -> Path {
        let (s, _, w) = &self.core.basis[i];
        self.public_path(*s, w)
    }

    pub fn basis_name(&self, i: usize) -> String {
        self.quiver.path_string(&self.basis_path(i))
    }

    pub fn basis_source(&self, i: usize) -> usize {
        let (s, t, _) = self.core.basis[i];
        if self.reversed {
            t
        } else {
            s
        }
    }

    pub fn basis_target(&self, i: usize) -> usize {
        let (s, t, _) = self.core.basis[i];
        if self.reversed {
            s
        } else {
            t
        }
    }

    pub fn basis_len(&self, i: usize) -> usize {
        self.core.basis[i].2.len()
    }

    /// Basis indices of paths `x -> y`, in canonical order.
    pub fn pair_basis(&self, x: usize, y: usize) -> &[usize] {
        let key = if self.reversed { (y, x) } else { (x, y) };
        self.core.pairs.get(&key).map_or(&[], Vec::as_slice)
    }

    pub fn zero_element(&self) -> AlgebraElement {
        AlgebraElement { owner: self.id(), field: self.field(), coeffs: BTreeMap::new() }
    }

    pub fn basis_element(&self, i: usize) -> AlgebraElement {
        let mut e = self.zero_element();
        e.add_term(i, self.field().one());
        e
    }

    /// `e_x`.
    pub fn idempotent(&self, x: usize) -> AlgebraElement {
        self.basis_element(x)
    }

    pub fn element(&self, coeffs: impl IntoIterator<Item = (usize, Scalar)>) -> AlgebraElement {
        let mut e = self.zero_element();
        for (i, c) in coeffs {
            assert!(i < self.dim(), "basis index out of range");
            e.add_term(i, c);
        }
        e
    }

    fn words_to_element(&self, p: &WordPoly) -> Result<AlgebraElement> {
        let mut e = self.zero_element();
        for (w, c) in p.terms() {
            match self.core.index.get(w) {
                Some(&i) => e.add_term(i, c.clone()),
                None if !self.status().is_decided() => {
                    return Err(Error::Undecided(format!(
                        "normal form involves a word of length {} beyond the saturated basis",
                        w.len()
                    )))
                }
                None => {
                    return Err(Error::Consistency("normal form left the computed basis".into()));
                }
            }
        }
        if !e.is_zero() && !self.completion_finished() {
            return Err(Error::Undecided(format!(
                "completion stopped at degree {}, nonzero normal forms are not certified",
                self.core.caps.completion_degree
            )));
        }
        Ok(e)
    }

    /// Normal form of a linear combination of paths.
    pub fn normalize(&self, expr: &[(Scalar, Path)]) -> Result<AlgebraElement> {
        let mut trivial = self.zero_element();
        let mut poly = WordPoly::zero(self.field());
        for (c, p) in expr {
            if c.field() != self.field() {
                return Err(Error::Input("coefficient from another field".into()));
            }
            if p.is_trivial() {
                trivial.add_term(p.source(), c.clone());
            } else {
                poly.add_term(self.internal_word(p), c.clone());
            }
        }
        let reduced = self.core.system.reduce(&poly);
        Ok(self.words_to_element(&reduced)?.add(&trivial))
    }

    pub fn path_element(&self, p: &Path) -> Result<AlgebraElement> {
        self.normalize(&[(self.field().one(), p.clone())])
    }

    /// Normal form of internal basis `a` followed by internal basis `b`.
    fn internal_product(&self, a: usize, b: usize) -> Result<Arc<Vec<(usize, Scalar)>>> {
        let core = &self.core;
        let (_, ta, wa) = &core.basis[a];
        let (sb, _, wb) = &core.basis[b];
        if ta != sb {
            return Ok(Arc::new(Vec::new()));
        }
        let one = core.field.one();
        if wa.is_empty() {
            return Ok(Arc::new(vec![(b, one)]));
        }
        if wb.is_empty() {
            return Ok(Arc::new(vec![(a, one)]));
        }
        if let Some(hit) = core.products.lock().unwrap().get(&(a, b)) {
            return Ok(hit.clone());
        }
        let mut w = wa.clone();
        w.extend_from_slice(wb);
        let nf = core.system.reduce(&WordPoly::word(core.field, w));
        let e = self.words_to_element(&nf)?;
        let out: Arc<Vec<(usize, Scalar)>> = Arc::new(e.coeffs.into_iter().collect());
        core.products.lock().unwrap().insert((a, b), out.clone());
        Ok(out)
    }

    /// `b_i · b_j`: first `b_j`, then `b_i`.
    pub fn mul_basis(&self, i: usize, j: usize) -> Result<Arc<Vec<(usize, Scalar)>>> {
        if self.reversed {
            self.internal_product(i, j)
        } else {
            self.internal_product(j, i)
        }
    }

    pub fn multiply(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        if a.owner != self.id() || b.owner != self.id() {
            return Err(Error::Input("element of another algebra".into()));
        }
        let mut out = self.zero_element();
        for (&i, ci) in &a.coeffs {
            for (&j, cj) in &b.coeffs {
                let c = ci * cj;
                for (k, ck) in self.mul_basis(i, j)?.iter() {
                    out.add_term(*k, &c * ck);
                }
            }
        }
        Ok(out)
    }

    pub fn is_nonzero_path(&self, p: &Path) -> Tri {
        match self.path_element(p) {
            Ok(e) => Tri::from_bool(!e.is_zero()),
            Err(_) => Tri::Undecided(self.core.caps.saturation_length.max(self.core.caps.completion_degree)),
        }
    }

    /// Dimension of `e_y Λ e_x`, the span of paths `x -> y`.
    pub fn pair_dim(&self, x: usize, y: usize) -> usize {
        self.pair_basis(x, y).len()
    }

    /// Requires a decided basis, with a message naming the operation.
    pub fn require_decided(&self, what: &str) -> Result<()> {
        if self.status().is_decided() {
            Ok(())
        } else {
            Err(Error::Undecided(format!("{what} needs a decided basis, algebra status is {}", self.status())))
        }
    }

    /// `kQ°/I°`, sharing this algebra's rewrite system.
    pub fn opposite(self: &Arc<Self>) -> Arc<Self> {
        self.opposite
            .get_or_init(|| {
                Arc::new(BoundQuiverAlgebra {
                    core: self.core.clone(),
                    reversed: !self.reversed,
                    quiver: self.quiver.opposite(),
                    opposite: OnceLock::new(),
                    semiperfect: OnceLock::new(),
                })
            })
            .clone()
    }
}
