//! Acceptance criteria over the fixture corpus. Prints one PASS/FAIL line per
//! criterion and exits nonzero if any fails.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::sync::Arc;

use auslander::algebra::classify::Witness;
use auslander::algebra::{classify, BoundQuiverAlgebra, ClassifyCaps, Tri};
use auslander::almost_split::{almost_split_sequence, ar_duality_check, verify_almost_split};
use auslander::corpus::{Fixture, FIXTURES};
use auslander::homalg::{minimal_copresentation, minimal_presentation};
use auslander::linalg::Matrix;
use auslander::nakayama::{tau, tau_minus, tau_with};
use auslander::rep::random::{random_module, random_short_exact};
use auslander::rep::{
    decompose, direct_sum, dualize, hom_dim, is_certified_indecomposable, is_isomorphic, socle, top, RepMorphism,
    Representation,
};
use auslander::workspace::Loaded;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

struct Alg {
    fx: &'static Fixture,
    l: Loaded,
}

impl Alg {
    fn alg(&self) -> &Arc<BoundQuiverAlgebra> {
        &self.l.algebra
    }

    fn n(&self) -> usize {
        self.alg().num_vertices()
    }

    /// Named modules, then `S_x`, `P_x`, `I_x` for every vertex.
    fn corpus(&self) -> Vec<(String, Representation)> {
        let a = self.alg();
        let mut out = self.l.modules.clone();
        for x in 0..self.n() {
            let v = a.quiver().vertex_name(x);
            out.push((format!("S({v})"), Representation::simple(a, x)));
            out.push((format!("P({v})"), Representation::projective(a, x).unwrap()));
            out.push((format!("I({v})"), Representation::injective(a, x).unwrap()));
        }
        out
    }

    /// The complete list when the fixture has one, otherwise the certified
    /// indecomposables of the corpus up to isomorphism.
    fn indecomposables(&self) -> Vec<(String, Representation)> {
        if let Some(names) = self.fx.indecomposables {
            return names.iter().map(|n| (n.to_string(), self.l.module(n).unwrap().clone())).collect();
        }
        let mut out: Vec<(String, Representation)> = Vec::new();
        for (name, m) in self.corpus() {
            if is_certified_indecomposable(&m) && !out.iter().any(|(_, x)| is_isomorphic(x, &m).is_some()) {
                out.push((name, m));
            }
        }
        out
    }

    fn is_projective(&self, m: &Representation) -> bool {
        (0..self.n()).any(|x| is_isomorphic(m, &Representation::projective(self.alg(), x).unwrap()).is_some())
    }

    fn is_injective(&self, m: &Representation) -> bool {
        (0..self.n()).any(|x| is_isomorphic(m, &Representation::injective(self.alg(), x).unwrap()).is_some())
    }

    fn random_modules(&self, count: usize, max_dim: usize, seed: u64) -> Vec<Representation> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count).map(|_| random_module(self.alg(), max_dim, &mut rng).unwrap()).collect()
    }

    fn has_full_list(&self) -> bool {
        matches!(self.fx.name, "a2" | "bound_a3" | "hereditary_a3")
    }
}

fn corpus() -> Vec<Alg> {
    FIXTURES.iter().map(|fx| Alg { fx, l: fx.load().expect("fixture loads") }).collect()
}

fn semiperfect(algs: &[Alg]) -> impl Iterator<Item = &Alg> {
    algs.iter().filter(|a| a.fx.semiperfect)
}

fn dims_add(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Path count when every relation is a single monomial: a path is nonzero
/// exactly when it contains no relation word.
fn monomial_path_count(a: &Alg) -> Option<usize> {
    let q = a.alg().quiver();
    let mut words: Vec<Vec<usize>> = Vec::new();
    for r in &a.l.workspace.relations {
        if r.len() != 1 {
            return None;
        }
        words.push(r[0].1.arrows().to_vec());
    }
    let mut count = q.num_vertices();
    let mut stack: Vec<Vec<usize>> = (0..q.num_arrows()).map(|x| vec![x]).collect();
    while let Some(p) = stack.pop() {
        if words.iter().any(|w| p.windows(w.len()).any(|s| s == w.as_slice())) {
            continue;
        }
        assert!(p.len() < 64, "unbounded path family");
        count += 1;
        let end = q.arrow(*p.last().unwrap()).target;
        for b in q.arrows_from(end) {
            let mut next = p.clone();
            next.push(b);
            stack.push(next);
        }
    }
    Some(count)
}

fn c1_fixture_dimensions(algs: &[Alg]) -> Check {
    let mut lines = Vec::new();
    for a in algs {
        let got = a.alg().dim();
        if got != a.fx.dim {
            return Err(format!("{}: dim {got}, recorded {}", a.fx.name, a.fx.dim));
        }
        let oracle = match monomial_path_count(a) {
            Some(c) => c,
            // e, alpha, alpha^2: every higher power equals alpha^2
            None if a.fx.name == "loop_idempotent" => 3,
            None => return Err(format!("{}: no oracle", a.fx.name)),
        };
        if oracle != got {
            return Err(format!("{}: dim {got}, oracle {oracle}", a.fx.name));
        }
        lines.push(format!("{}={got}", a.fx.name));
    }
    Ok(lines.join(" "))
}

fn c2_classifier_verdicts(algs: &[Alg]) -> Check {
    let find = |n: &str| algs.iter().find(|a| a.fx.name == n).unwrap();
    let lp = classify(find("loop_idempotent").alg(), ClassifyCaps::default());
    if !lp.locally_left_bounded.value.is_true() || !lp.locally_right_bounded.value.is_true() {
        return Err("loop: not locally bounded".into());
    }
    if !lp.locally_semiperfect.value.is_false() {
        return Err(format!("loop: semiperfect {}", lp.locally_semiperfect.value));
    }
    match &lp.locally_semiperfect.witness {
        Some(w @ Witness::Idempotent { .. }) if w.display() == "alpha*alpha" => {}
        other => return Err(format!("loop: witness {other:?}")),
    }
    let w = find("window_multiserial");
    let r = classify(w.alg(), ClassifyCaps::default());
    let boundary = &w.l.workspace.boundary;
    for v in r.vertices.iter().filter(|v| !boundary.contains(&v.vertex)) {
        if v.left_multiserial != Tri::True || v.right_multiserial != Tri::True {
            return Err(format!("window vertex {}: {} / {}", v.name, v.left_multiserial, v.right_multiserial));
        }
    }
    Ok(format!(
        "loop bounded, not semiperfect (witness alpha*alpha); window multiserial on {} interior vertices",
        r.vertices.len() - boundary.len()
    ))
}

fn c3_ar_duality(algs: &[Alg]) -> Check {
    let mut rows = 0;
    for a in semiperfect(algs) {
        let probes: Vec<Representation> = if a.has_full_list() {
            a.indecomposables().into_iter().map(|(_, m)| m).collect()
        } else {
            a.random_modules(20, 6, 3)
        };
        for (name, m) in a.indecomposables() {
            if m.total_dim() > 6 || a.is_projective(&m) {
                continue;
            }
            for r in ar_duality_check(&m, &probes).map_err(|e| format!("{}/{name}: {e}", a.fx.name))? {
                if !r.holds() {
                    return Err(format!("{}/{name} probe {}: {r:?}", a.fx.name, r.probe));
                }
                rows += 1;
            }
        }
    }
    Ok(format!("{rows} probe rows, zero failures"))
}

fn c4_tau_round_trip(algs: &[Alg]) -> Check {
    let mut count = 0;
    for a in semiperfect(algs) {
        for (name, m) in a.indecomposables() {
            if m.total_dim() > 6 {
                continue;
            }
            let ctx = |what: &str| format!("{}/{name}: {what}", a.fx.name);
            if !a.is_projective(&m) {
                let t = tau(&m).map_err(|e| ctx(&e.to_string()))?.module;
                if !is_certified_indecomposable(&t) || a.is_injective(&t) {
                    return Err(ctx("tau M is not an indecomposable noninjective"));
                }
                let back = tau_minus(&t).map_err(|e| ctx(&e.to_string()))?.module;
                if is_isomorphic(&back, &m).is_none() {
                    return Err(ctx("tau^- tau M is not M"));
                }
                count += 1;
            }
            if !a.is_injective(&m) {
                let t = tau_minus(&m).map_err(|e| ctx(&e.to_string()))?.module;
                let back = tau(&t).map_err(|e| ctx(&e.to_string()))?.module;
                if is_isomorphic(&back, &m).is_none() {
                    return Err(ctx("tau tau^- N is not N"));
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} round trips"))
}

fn c5_almost_split(algs: &[Alg]) -> Check {
    let mut count = 0;
    for a in algs.iter().filter(|a| a.has_full_list()) {
        let probes: Vec<Representation> = a.indecomposables().into_iter().map(|(_, m)| m).collect();
        for (name, m) in a.indecomposables() {
            if a.is_projective(&m) {
                continue;
            }
            let ctx = |what: String| format!("{}/{name}: {what}", a.fx.name);
            let seq = almost_split_sequence(&m).map_err(|e| ctx(e.to_string()))?;
            let report = verify_almost_split(&seq, &probes, 0);
            if !report.passed() {
                return Err(ctx(format!("{:?}", report.clauses)));
            }
            if is_isomorphic(seq.start(), &tau(&m).unwrap().module).is_none() {
                return Err(ctx("start term is not tau M".into()));
            }
            count += 1;
        }
    }
    let a2 = &algs.iter().find(|a| a.fx.name == "a2").unwrap().l;
    let alg = &a2.algebra;
    let f = alg.field();
    let (s1, s2, p1) = (a2.module("S1").unwrap(), a2.module("S2").unwrap(), a2.module("P1").unwrap());
    let one = Matrix::identity(f, 1);
    let golden_f = RepMorphism::new(s2, p1, vec![Matrix::zeros(f, 1, 0), one.clone()]).unwrap();
    let golden_g = RepMorphism::new(p1, s1, vec![one, Matrix::zeros(f, 0, 1)]).unwrap();
    let seq = almost_split_sequence(s1).unwrap();
    if is_isomorphic(seq.start(), golden_f.source()).is_none()
        || is_isomorphic(seq.middle(), golden_f.target()).is_none()
        || is_isomorphic(seq.end(), golden_g.target()).is_none()
    {
        return Err("A2 sequence does not match 0 -> S2 -> P1 -> S1 -> 0".into());
    }
    if !golden_f.is_injective() || !golden_g.is_surjective() || !golden_g.compose(&golden_f).is_zero() {
        return Err("golden fixture is not exact".into());
    }
    Ok(format!("{count} sequences verified; A2 gives 0 -> S2 -> P1 -> S1 -> 0"))
}

fn c6_yoneda(algs: &[Alg]) -> Check {
    let mut checks = 0;
    for a in algs {
        let alg = a.alg();
        for (name, m) in a.corpus() {
            for x in 0..a.n() {
                let p = Representation::projective(alg, x).unwrap();
                let i = Representation::injective(alg, x).unwrap();
                if hom_dim(&p, &m) != m.dim(x) || hom_dim(&m, &i) != m.dim(x) {
                    return Err(format!("{}/{name} at vertex {x}", a.fx.name));
                }
                checks += 1;
            }
        }
        for x in 0..a.n() {
            let s = Representation::simple(alg, x);
            let p = Representation::projective(alg, x).unwrap();
            let i = Representation::injective(alg, x).unwrap();
            if is_isomorphic(socle(&i).source(), &s).is_none() || is_isomorphic(top(&p).target(), &s).is_none() {
                return Err(format!("{}: top/socle at vertex {x}", a.fx.name));
            }
        }
    }
    Ok(format!("{checks} Hom identities, top/socle on every vertex"))
}

fn label_multiset(labels: &[usize]) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for &x in labels {
        *m.entry(x).or_default() += 1;
    }
    m
}

fn c7_duality(algs: &[Alg]) -> Check {
    let mut count = 0;
    for a in algs {
        for (k, m) in a.random_modules(50, 6, 7).into_iter().enumerate() {
            if is_isomorphic(&dualize(&dualize(&m)), &m).is_none() {
                return Err(format!("{} #{k}: DD M is not M", a.fx.name));
            }
            if a.fx.semiperfect {
                let p = minimal_presentation(&m).map_err(|e| e.to_string())?;
                let c = minimal_copresentation(&dualize(&m)).map_err(|e| e.to_string())?;
                if label_multiset(&p.p0) != label_multiset(&c.i0) || label_multiset(&p.p1) != label_multiset(&c.i1) {
                    return Err(format!("{} #{k}: labels {:?}/{:?} vs {:?}/{:?}", a.fx.name, p.p0, p.p1, c.i0, c.i1));
                }
            }
            count += 1;
        }
    }
    Ok(format!("{count} modules"))
}

fn c8_six_term(algs: &[Alg]) -> Check {
    let mut count = 0;
    for a in semiperfect(algs) {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let seqs: Vec<_> = (0..20).map(|_| random_short_exact(a.alg(), 6, &mut rng).unwrap()).collect();
        for (name, m) in a.corpus() {
            let t = tau(&m).map_err(|e| e.to_string())?.module;
            for (k, (f, g)) in seqs.iter().enumerate() {
                let (x, y, z) = (f.source(), f.target(), g.target());
                let sum = hom_dim(z, &t) as i64 - hom_dim(y, &t) as i64 + hom_dim(x, &t) as i64
                    - hom_dim(&m, z) as i64
                    + hom_dim(&m, y) as i64
                    - hom_dim(&m, x) as i64;
                if sum != 0 {
                    return Err(format!("{}/{name} sequence {k}: alternating sum {sum}", a.fx.name));
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} sequence/module pairs"))
}

/// A product of unit triangular matrices with small entries: determinant 1
/// and an integral inverse, so conjugation hides the block structure
/// without blowing up rational coefficients.
fn random_unimodular<R: Rng>(a: &Alg, n: usize, rng: &mut R) -> Matrix {
    let f = a.alg().field();
    let mut lower = Matrix::identity(f, n);
    let mut upper = Matrix::identity(f, n);
    for i in 0..n {
        for j in 0..i {
            lower.set(i, j, f.from_i64(rng.gen_range(-2..=2)));
            upper.set(j, i, f.from_i64(rng.gen_range(-2..=2)));
        }
    }
    lower.mul(&upper)
}

fn c9_decompose(algs: &[Alg]) -> Check {
    let mut count = 0;
    for a in algs {
        let known = a.indecomposables();
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for trial in 0..50 {
            let k = rng.gen_range(1..=4);
            let picks: Vec<usize> = (0..k).map(|_| rng.gen_range(0..known.len())).collect();
            let parts: Vec<Representation> = picks.iter().map(|&i| known[i].1.clone()).collect();
            let sum = direct_sum(a.alg(), &parts).module;
            let t: Vec<Matrix> = (0..a.n()).map(|x| random_unimodular(a, sum.dim(x), &mut rng)).collect();
            let mats = a
                .alg()
                .quiver()
                .arrows()
                .iter()
                .zip(sum.mats())
                .map(|(arr, m)| t[arr.target].mul(m).mul(&t[arr.source].inverse().unwrap()))
                .collect();
            let m = Representation::new(a.alg(), sum.dims().to_vec(), mats).map_err(|e| e.to_string())?;
            let ctx = |what: &str| format!("{} trial {trial}: {what}", a.fx.name);
            let found = decompose(&m, trial);
            let mut expected: Vec<usize> = picks.clone();
            expected.sort_unstable();
            let mut got = Vec::new();
            for s in &found {
                if !s.certificate.is_local() {
                    return Err(ctx("summand without locality certificate"));
                }
                match known.iter().position(|(_, x)| is_isomorphic(x, &s.module).is_some()) {
                    Some(i) => got.push(i),
                    None => return Err(ctx("summand not in the known list")),
                }
            }
            got.sort_unstable();
            if got != expected {
                return Err(ctx(&format!("multiset {got:?}, expected {expected:?}")));
            }
            let reassembled = direct_sum(a.alg(), &found.iter().map(|s| s.module.clone()).collect::<Vec<_>>());
            let mut total = RepMorphism::zero(&reassembled.module, &m);
            for (s, p) in found.iter().zip(&reassembled.projections) {
                total = total.add(&s.inclusion.compose(p));
            }
            if !total.is_iso() {
                return Err(ctx("reassembly is not an isomorphism"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} sums"))
}

fn c10_padded_presentation(algs: &[Alg]) -> Check {
    let mut count = 0;
    for a in semiperfect(algs) {
        let alg = a.alg();
        for (name, m) in a.indecomposables() {
            if m.total_dim() > 6 || a.is_projective(&m) {
                continue;
            }
            let pres = minimal_presentation(&m).map_err(|e| e.to_string())?;
            let t = tau_with(&pres).unwrap().module;
            for x in 0..a.n() {
                let i = Representation::injective(alg, x).unwrap();
                let padded = tau_with(&pres.padded(x).unwrap()).unwrap().module;
                let ctx = format!("{}/{name} padded by P_{x}", a.fx.name);
                // dim I_x(y) is the number of nonzero path classes y -> x
                let ix: Vec<usize> = (0..a.n()).map(|y| alg.pair_basis(y, x).len()).collect();
                if padded.dims() != dims_add(t.dims(), &ix).as_slice() {
                    return Err(format!("{ctx}: dims {:?}", padded.dims()));
                }
                let expected = direct_sum(alg, &[t.clone(), i]).module;
                if is_isomorphic(&padded, &expected).is_none() {
                    return Err(format!("{ctx}: not tau M + I_x"));
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} padded presentations"))
}

fn main() -> ExitCode {
    let algs = corpus();
    let criteria: [(&str, fn(&[Alg]) -> Check); 10] = [
        ("fixture corpus builds with recorded dimensions", c1_fixture_dimensions),
        ("classifier verdicts", c2_classifier_verdicts),
        ("AR-duality dimension identities", c3_ar_duality),
        ("tau round trip", c4_tau_round_trip),
        ("almost split pipeline", c5_almost_split),
        ("Yoneda identities, top and socle", c6_yoneda),
        ("duality functor", c7_duality),
        ("six-term identity", c8_six_term),
        ("decompose soundness", c9_decompose),
        ("padded presentation gives tau M + I_x", c10_padded_presentation),
    ];
    let mut failed = 0;
    for (k, (title, run)) in criteria.iter().enumerate() {
        let start = std::time::Instant::now();
        let result = catch_unwind(AssertUnwindSafe(|| run(&algs))).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panic: {}", msg.unwrap_or_default()))
        });
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {:>2} PASS  {title}: {detail} ({secs:.2}s)", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {title}: {detail} ({secs:.2}s)", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
