//! Command dispatch and reporting for the `auslander` binary.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::algebra::{ass_theorem_conclusions, classify, BoundQuiverAlgebra, ClassifyCaps, Flag, Tri};
use crate::almost_split::{almost_split_sequence, ar_duality_check, verify_almost_split};
use crate::error::{Error, Result};
use crate::homalg::{injective_envelope, minimal_copresentation, minimal_presentation, projective_cover};
use crate::linalg::Matrix;
use crate::nakayama::{tau_minus_with, tau_with};
use crate::rep::{decompose, dualize, find_isomorphism, Certificate, Representation};
use crate::workspace::{matrix_string, module_string, relation_string, Loaded, Workspace};

const LONG_ABOUT: &str = "\
Auslander-Reiten computations for bound quiver algebras kQ/I.

The workspace file is line oriented:

  field Q                      (or: field F 101)
  vertex 1 2 3
  arrow alpha: 1 -> 2
  arrow beta: 2 -> 3
  relation beta*alpha
  boundary 3
  module P1 { dim 1 = 1; dim 2 = 1; mat alpha = [[1]]; }

Monomials are read right to left: beta*alpha means first alpha, then beta,
so it is a path from 1 to 3. A relation is a sum c1*m1 + c2*m2 + ... of
parallel monomials of length at least 2. In a module, the matrix of an
arrow s -> t has dim t rows and dim s columns; omitted matrices are zero.
A boundary marks the vertices where a finite window cuts an infinite quiver.

Exit codes: 0 success, 1 error or failed check, 2 undecided or window-unsafe.";

#[derive(Parser, Debug)]
#[command(name = "auslander", version, about = "Auslander-Reiten computations for bound quiver algebras")]
#[command(long_about = LONG_ABOUT)]
pub struct Cli {
    /// Workspace file
    pub file: PathBuf,
    /// Print a JSON report instead of text
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Normal-form basis and saturation status of the algebra
    Build,
    /// Structural flags: semiperfect, semiprimary, bounded, eventually multiserial
    Classify {
        #[arg(long, default_value_t = 24)]
        len_cap: usize,
        #[arg(long, default_value_t = 8)]
        mult_cap: usize,
    },
    /// Indecomposable summands of a module
    Decompose {
        #[arg(short, long)]
        module: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// The AR-translate of a module
    Tau {
        #[arg(short, long)]
        module: String,
        /// `minimal`, or `pad:<vertex>` to add a summand P_x -> 0 to the minimal presentation
        #[arg(long, default_value = "minimal")]
        presentation: String,
    },
    /// The inverse AR-translate of a module
    TauMinus {
        #[arg(short, long)]
        module: String,
    },
    /// The almost split sequence ending at a module
    Ass {
        #[arg(short, long)]
        module: String,
        /// Check the defining properties against the probes
        #[arg(long)]
        verify: bool,
        /// `all` or a comma-separated list of module names
        #[arg(long, default_value = "all")]
        probes: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// AR-duality dimension identities against probe modules
    DualityCheck {
        #[arg(short, long)]
        module: String,
        #[arg(long, default_value = "all")]
        probes: String,
    },
    /// Existence theorems whose hypotheses are not refuted
    Conclusions,
    /// The dual module over the opposite algebra
    Dualize {
        #[arg(short, long)]
        module: String,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Build => "build",
            Command::Classify { .. } => "classify",
            Command::Decompose { .. } => "decompose",
            Command::Tau { .. } => "tau",
            Command::TauMinus { .. } => "tau-minus",
            Command::Ass { .. } => "ass",
            Command::DualityCheck { .. } => "duality-check",
            Command::Conclusions => "conclusions",
            Command::Dualize { .. } => "dualize",
        }
    }
}

/// What the binary prints and how it exits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

/// Parses arguments (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            Outcome { stdout: e.render().to_string(), code }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let text = std::fs::read_to_string(&cli.file)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", cli.file.display())));
    run_text(&cli.command, text, cli.json)
}

/// Runs a command against workspace text.
pub fn run_on_text(command: &Command, text: &str, json: bool) -> Outcome {
    run_text(command, Ok(text.to_string()), json)
}

fn run_text(command: &Command, text: Result<String>, json: bool) -> Outcome {
    let result = text.and_then(|t| Workspace::load(&t, Default::default())).and_then(|l| {
        let mut ctx = Ctx::new(&l);
        let (body, data) = dispatch(&mut ctx, command)?;
        Ok(ctx.finish(command.name(), body, data))
    });
    let report = result.unwrap_or_else(|e| error_report(command.name(), &e));
    Outcome { stdout: if json { report.json_string() } else { report.text }, code: report.code }
}

struct Report {
    text: String,
    json: Value,
    code: i32,
}

impl Report {
    fn json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.json).expect("reports serialize");
        s.push('\n');
        s
    }
}

fn error_report(command: &str, e: &Error) -> Report {
    let (status, code) = match e {
        Error::Undecided(_) => ("undecided", 2),
        _ => ("error", 1),
    };
    Report {
        text: format!("{status}: {e}\n"),
        json: json!({ "command": command, "status": status, "error": e.to_string() }),
        code,
    }
}

struct Ctx<'a> {
    l: &'a Loaded,
    notes: Vec<String>,
    unsafe_objects: BTreeSet<String>,
    undecided: bool,
    failed: bool,
}

impl<'a> Ctx<'a> {
    fn new(l: &'a Loaded) -> Ctx<'a> {
        let undecided = !l.algebra.status().is_decided();
        let mut notes = Vec::new();
        if undecided {
            notes.push(format!("algebra basis is {}", l.algebra.status()));
        }
        Ctx { l, notes, unsafe_objects: BTreeSet::new(), undecided, failed: false }
    }

    fn alg(&self) -> &Arc<BoundQuiverAlgebra> {
        &self.l.algebra
    }

    fn vname(&self, x: usize) -> &str {
        self.alg().quiver().vertex_name(x)
    }

    fn boundary_hit(&self, support: impl Iterator<Item = usize>) -> bool {
        support.into_iter().any(|y| self.l.workspace.boundary.contains(&y))
    }

    fn touch_projectives(&mut self, labels: &[usize]) {
        let alg = self.alg().clone();
        let n = alg.num_vertices();
        for &x in labels {
            if self.boundary_hit((0..n).filter(|&y| alg.pair_dim(x, y) > 0)) {
                self.unsafe_objects.insert(format!("P({})", self.vname(x)));
            }
        }
    }

    fn touch_injectives(&mut self, labels: &[usize]) {
        let alg = self.alg().clone();
        let n = alg.num_vertices();
        for &x in labels {
            if self.boundary_hit((0..n).filter(|&y| alg.pair_dim(y, x) > 0)) {
                self.unsafe_objects.insert(format!("I({})", self.vname(x)));
            }
        }
    }

    fn tri(&mut self, t: Tri) -> String {
        if let Tri::Undecided(_) = t {
            self.undecided = true;
        }
        t.to_string()
    }

    fn finish(self, command: &str, mut body: String, data: Value) -> Report {
        let window_unsafe = !self.unsafe_objects.is_empty();
        let (status, code) = if self.failed {
            ("failed", 1)
        } else if self.undecided {
            ("undecided", 2)
        } else if window_unsafe {
            ("window-unsafe", 2)
        } else {
            ("ok", 0)
        };
        for n in &self.notes {
            body.push_str(&format!("note: {n}\n"));
        }
        let objects: Vec<&String> = self.unsafe_objects.iter().collect();
        if window_unsafe {
            body.push_str(&format!(
                "window-unsafe: {} supported on a boundary vertex\n",
                objects.iter().map(|s| s.as_str()).collect::<Vec<_>>().join(", ")
            ));
        }
        if status != "ok" {
            body.push_str(&format!("status: {status}\n"));
        }
        let json = json!({
            "command": command,
            "status": status,
            "window_unsafe": window_unsafe,
            "unsafe_objects": objects,
            "notes": self.notes,
            "result": data,
        });
        Report { text: body, json, code }
    }

    /// A name for `m` up to isomorphism: a named module, `S(x)`, `P(x)`,
    /// `I(x)`, a direct sum of those, or its dimension vector.
    fn identify(&self, m: &Representation, seed: u64) -> String {
        if m.is_zero() {
            return "0".into();
        }
        if let Some(name) = self.identify_single(m, seed) {
            return name;
        }
        let parts = decompose(m, seed);
        if parts.len() > 1 {
            return parts.iter().map(|p| self.identify(&p.module, seed)).collect::<Vec<_>>().join(" + ");
        }
        format!("M{}", m.dim_vector_string())
    }

    fn identify_single(&self, m: &Representation, seed: u64) -> Option<String> {
        for (name, n) in &self.l.modules {
            if find_isomorphism(m, n, seed).is_some() {
                return Some(name.clone());
            }
        }
        let alg = self.alg();
        for x in 0..alg.num_vertices() {
            let v = self.vname(x).to_string();
            let candidates = [
                ("S", Ok(Representation::simple(alg, x))),
                ("P", Representation::projective(alg, x)),
                ("I", Representation::injective(alg, x)),
            ];
            for (tag, c) in candidates {
                if let Ok(c) = c {
                    if find_isomorphism(m, &c, seed).is_some() {
                        return Some(format!("{tag}({v})"));
                    }
                }
            }
        }
        None
    }

    fn labels(&self, labels: &[usize]) -> Vec<String> {
        labels.iter().map(|&x| self.vname(x).to_string()).collect()
    }

    /// Named probes, or every indecomposable reachable from the named
    /// modules together with simples, projectives and injectives.
    fn probes(&self, spec: &str, seed: u64) -> Result<Vec<(String, Representation)>> {
        if spec != "all" {
            return spec
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| Ok((s.to_string(), self.l.module(s)?.clone())))
                .collect();
        }
        let alg = self.alg();
        let mut candidates: Vec<Representation> = Vec::new();
        for (_, m) in &self.l.modules {
            candidates.extend(decompose(m, seed).into_iter().map(|s| s.module));
        }
        for x in 0..alg.num_vertices() {
            candidates.push(Representation::simple(alg, x));
            candidates.push(Representation::projective(alg, x)?);
            candidates.push(Representation::injective(alg, x)?);
        }
        let mut out: Vec<(String, Representation)> = Vec::new();
        for c in candidates {
            if c.is_zero() || out.iter().any(|(_, p)| find_isomorphism(&c, p, seed).is_some()) {
                continue;
            }
            out.push((self.identify(&c, seed), c));
        }
        Ok(out)
    }
}

fn scalar_rows(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|r| m.row(r).iter().map(ToString::to_string).collect()).collect()
}

fn module_json(m: &Representation) -> Value {
    let q = m.algebra().quiver();
    let mats: serde_json::Map<String, Value> =
        q.arrows().iter().zip(m.mats()).map(|(a, mat)| (a.name.clone(), json!(scalar_rows(mat)))).collect();
    json!({ "dims": m.dims(), "mats": mats })
}

fn module_line(name: &str, m: &Representation) -> String {
    module_string(m.algebra().quiver(), name, m.dims(), m.mats())
}

fn flag_json(f: &Flag) -> Value {
    json!({ "value": f.value.to_string(), "witness": f.witness.as_ref().map(|w| w.display().to_string()) })
}

fn flag_text(f: &Flag) -> String {
    match &f.witness {
        Some(w) => format!("{} (witness {})", f.value, w.display()),
        None => f.value.to_string(),
    }
}

fn dispatch(ctx: &mut Ctx<'_>, command: &Command) -> Result<(String, Value)> {
    match command {
        Command::Build => build(ctx),
        Command::Classify { len_cap, mult_cap } => {
            classify_cmd(ctx, ClassifyCaps { path_length_cap: *len_cap, multiserial_n_cap: *mult_cap })
        }
        Command::Decompose { module, seed } => decompose_cmd(ctx, module, *seed),
        Command::Tau { module, presentation } => tau_cmd(ctx, module, presentation),
        Command::TauMinus { module } => tau_minus_cmd(ctx, module),
        Command::Ass { module, verify, probes, seed } => ass_cmd(ctx, module, *verify, probes, *seed),
        Command::DualityCheck { module, probes } => duality_cmd(ctx, module, probes),
        Command::Conclusions => conclusions_cmd(ctx),
        Command::Dualize { module } => dualize_cmd(ctx, module),
    }
}

fn build(ctx: &mut Ctx<'_>) -> Result<(String, Value)> {
    let alg = ctx.alg().clone();
    let q = alg.quiver();
    let mut text = format!(
        "field {}; {} vertices, {} arrows, {} relations\n",
        alg.field(),
        q.num_vertices(),
        q.num_arrows(),
        ctx.l.workspace.relations.len()
    );
    text.push_str(&format!("basis status: {}\ndim = {}\n", alg.status(), alg.dim()));
    let mut basis = Vec::new();
    for i in 0..alg.dim() {
        let (s, t) = (q.vertex_name(alg.basis_source(i)), q.vertex_name(alg.basis_target(i)));
        text.push_str(&format!("  {}: {s} -> {t}\n", alg.basis_name(i)));
        basis.push(json!({ "path": alg.basis_name(i), "source": s, "target": t }));
    }
    let relations: Vec<String> = ctx.l.workspace.relations.iter().map(|r| relation_string(q, r)).collect();
    let rules: Vec<String> = alg
        .rewrite_rules()
        .iter()
        .map(|(lead, tail)| {
            let rhs = if tail.is_empty() { "0".to_string() } else { relation_string(q, tail) };
            format!("{} -> {rhs}", q.path_string(lead))
        })
        .collect();
    let data = json!({
        "field": alg.field().to_string(),
        "vertices": q.vertex_names(),
        "arrows": q.arrows().iter().map(|a| json!({
            "name": a.name, "source": q.vertex_name(a.source), "target": q.vertex_name(a.target)
        })).collect::<Vec<_>>(),
        "relations": relations,
        "rewrite_rules": rules,
        "boundary": ctx.labels(&ctx.l.workspace.boundary.iter().copied().collect::<Vec<_>>()),
        "basis_status": alg.status().to_string(),
        "dim": alg.dim(),
        "basis": basis,
    });
    Ok((text, data))
}

fn classify_cmd(ctx: &mut Ctx<'_>, caps: ClassifyCaps) -> Result<(String, Value)> {
    let alg = ctx.alg().clone();
    let r = classify(&alg, caps);
    let flags = [
        ("locally semiperfect", &r.locally_semiperfect),
        ("locally semiprimary", &r.locally_semiprimary),
        ("locally left bounded", &r.locally_left_bounded),
        ("locally right bounded", &r.locally_right_bounded),
        ("left eventually multiserial", &r.left_eventually_multiserial),
        ("right eventually multiserial", &r.right_eventually_multiserial),
    ];
    let mut text = format!(
        "quiver: locally finite {}, left locally finite {}, right locally finite {}\n",
        r.finiteness.locally_finite, r.finiteness.left_locally_finite, r.finiteness.right_locally_finite
    );
    let mut fj = serde_json::Map::new();
    for (name, f) in flags {
        ctx.tri(f.value);
        text.push_str(&format!("{name}: {}\n", flag_text(f)));
        fj.insert(name.replace(' ', "_"), flag_json(f));
    }
    let boundary = &ctx.l.workspace.boundary;
    let mut vj = Vec::new();
    for v in &r.vertices {
        let on_boundary = boundary.contains(&v.vertex);
        let fmt_n = |n: Option<usize>| n.map_or("-".to_string(), |n| n.to_string());
        text.push_str(&format!(
            "vertex {}{}: local End {}, dim left {}, dim right {}, left multiserial {} (n = {}), right multiserial {} (n = {})\n",
            v.name,
            if on_boundary { " [boundary]" } else { "" },
            flag_text(&v.local_endomorphisms),
            fmt_n(v.dim_left),
            fmt_n(v.dim_right),
            v.left_multiserial,
            fmt_n(v.left_n),
            v.right_multiserial,
            fmt_n(v.right_n),
        ));
        vj.push(json!({
            "vertex": v.name,
            "boundary": on_boundary,
            "local_endomorphisms": flag_json(&v.local_endomorphisms),
            "dim_left": v.dim_left,
            "dim_right": v.dim_right,
            "left_bounded": v.left_bounded.to_string(),
            "right_bounded": v.right_bounded.to_string(),
            "left_multiserial": v.left_multiserial.to_string(),
            "left_n": v.left_n,
            "right_multiserial": v.right_multiserial.to_string(),
            "right_n": v.right_n,
        }));
    }
    let mut data = json!({ "flags": fj, "vertices": vj, "caps": {
        "len_cap": caps.path_length_cap, "mult_cap": caps.multiserial_n_cap } });
    if !boundary.is_empty() {
        let interior: Vec<_> = r.vertices.iter().filter(|v| !boundary.contains(&v.vertex)).collect();
        let left = interior.iter().fold(Tri::True, |a, v| a.and(v.left_multiserial));
        let right = interior.iter().fold(Tri::True, |a, v| a.and(v.right_multiserial));
        text.push_str(&format!("interior: left eventually multiserial {left}, right eventually multiserial {right}\n"));
        data["interior"] = json!({
            "left_eventually_multiserial": ctx.tri(left),
            "right_eventually_multiserial": ctx.tri(right),
        });
    }
    Ok((text, data))
}

fn conclusions_cmd(ctx: &mut Ctx<'_>) -> Result<(String, Value)> {
    let r = classify(ctx.alg(), ClassifyCaps::default());
    let mut text = String::new();
    let mut items = Vec::new();
    for c in ass_theorem_conclusions(&r) {
        let status = ctx.tri(c.status);
        text.push_str(&format!("[{status}] {}\n    if {}\n", c.statement, c.hypotheses.join(", ")));
        items.push(json!({ "statement": c.statement, "status": status, "hypotheses": c.hypotheses }));
    }
    if items.is_empty() {
        text.push_str("no conclusions: every theorem has a refuted hypothesis\n");
    }
    Ok((text, json!({ "conclusions": items })))
}

fn decompose_cmd(ctx: &mut Ctx<'_>, name: &str, seed: u64) -> Result<(String, Value)> {
    let m = ctx.l.module(name)?.clone();
    let parts = decompose(&m, seed);
    let mut text = format!("{name} {} has {} indecomposable summands\n", m.dim_vector_string(), parts.len());
    let mut items = Vec::new();
    for (k, p) in parts.iter().enumerate() {
        let cert = match &p.certificate {
            Certificate::Local => "local".to_string(),
            Certificate::Probable(why) => {
                ctx.undecided = true;
                format!("probable: {why}")
            }
        };
        let label = ctx.identify(&p.module, seed);
        let line = module_line(&format!("{name}_{}", k + 1), &p.module);
        text.push_str(&format!("  {line}  ~ {label}  [{cert}]\n"));
        items.push(json!({ "iso_to": label, "certificate": cert, "module": module_json(&p.module) }));
    }
    Ok((text, json!({ "module": name, "summands": items })))
}

fn tau_cmd(ctx: &mut Ctx<'_>, name: &str, presentation: &str) -> Result<(String, Value)> {
    let m = ctx.l.module(name)?.clone();
    let mut pres = minimal_presentation(&m)?;
    let projective = pres.omega.source().is_zero();
    if let Some(v) = presentation.strip_prefix("pad:") {
        let x = ctx.alg().quiver().vertex(v)?;
        pres = pres.padded(x)?;
    } else if presentation != "minimal" {
        return Err(Error::Input(format!("unknown presentation {presentation:?}; use minimal or pad:<vertex>")));
    }
    ctx.touch_projectives(&pres.p0);
    ctx.touch_projectives(&pres.p1);
    ctx.touch_injectives(&pres.p1);
    let t = tau_with(&pres)?;
    if projective && presentation == "minimal" {
        ctx.notes.push("projective input, τ = 0".into());
    }
    let label = ctx.identify(&t.module, 0);
    let text = format!(
        "presentation: P1 = [{}] -> P0 = [{}]{}\n{}  ~ {label}\n",
        ctx.labels(&pres.p1).join(", "),
        ctx.labels(&pres.p0).join(", "),
        if pres.minimal { " (minimal)" } else { "" },
        module_line(&format!("tau_{name}"), &t.module),
    );
    let data = json!({
        "module": name,
        "presentation": { "p0": ctx.labels(&pres.p0), "p1": ctx.labels(&pres.p1), "minimal": pres.minimal },
        "tau": module_json(&t.module),
        "iso_to": label,
    });
    Ok((text, data))
}

fn tau_minus_cmd(ctx: &mut Ctx<'_>, name: &str) -> Result<(String, Value)> {
    let n = ctx.l.module(name)?.clone();
    let copres = minimal_copresentation(&n)?;
    for labels in [&copres.i0, &copres.i1] {
        ctx.touch_injectives(labels);
        ctx.touch_projectives(labels);
    }
    let t = tau_minus_with(&copres)?;
    if copres.i1.is_empty() {
        ctx.notes.push("injective input, τ⁻ = 0".into());
    }
    let label = ctx.identify(&t.module, 0);
    let text = format!(
        "copresentation: I0 = [{}] -> I1 = [{}]\n{}  ~ {label}\n",
        ctx.labels(&copres.i0).join(", "),
        ctx.labels(&copres.i1).join(", "),
        module_line(&format!("tau_minus_{name}"), &t.module),
    );
    let data = json!({
        "module": name,
        "copresentation": { "i0": ctx.labels(&copres.i0), "i1": ctx.labels(&copres.i1), "minimal": copres.minimal },
        "tau_minus": module_json(&t.module),
        "iso_to": label,
    });
    Ok((text, data))
}

fn ass_cmd(ctx: &mut Ctx<'_>, name: &str, verify: bool, probes: &str, seed: u64) -> Result<(String, Value)> {
    let m = ctx.l.module(name)?.clone();
    let pres = minimal_presentation(&m)?;
    ctx.touch_projectives(&pres.p0);
    ctx.touch_projectives(&pres.p1);
    ctx.touch_injectives(&pres.p1);
    let seq = almost_split_sequence(&m)?;
    let (x, y, z) = (ctx.identify(seq.start(), seed), ctx.identify(seq.middle(), seed), ctx.identify(seq.end(), seed));
    let verdict = ctx.tri(seq.almost_split);
    let mut text = format!("0 -> {x} -> {y} -> {z} -> 0\n");
    text.push_str(&format!("  {}\n  {}\n", module_line("start", seq.start()), module_line("middle", seq.middle())));
    text.push_str(&format!("  f = {}\n  g = {}\n", maps_string(&seq.f), maps_string(&seq.g)));
    text.push_str(&format!("socle criterion: almost split {verdict}\n"));
    let mut data = json!({
        "module": name,
        "sequence": [x, y, z],
        "start": module_json(seq.start()),
        "middle": module_json(seq.middle()),
        "end": module_json(seq.end()),
        "almost_split": verdict,
        "evidence": seq.evidence,
    });
    if verify {
        let probes = ctx.probes(probes, seed)?;
        let mods: Vec<Representation> = probes.iter().map(|(_, p)| p.clone()).collect();
        let report = verify_almost_split(&seq, &mods, seed);
        text.push_str(&format!(
            "verification against {} probes: {}\n",
            probes.len(),
            probes.iter().map(|(n, _)| n.as_str()).collect::<Vec<_>>().join(", ")
        ));
        let mut clauses = Vec::new();
        for c in &report.clauses {
            let status = ctx.tri(c.status);
            if c.status.is_false() {
                ctx.failed = true;
            }
            match &c.witness {
                Some(w) => text.push_str(&format!("  {}: {status} ({w})\n", c.clause)),
                None => text.push_str(&format!("  {}: {status}\n", c.clause)),
            }
            clauses.push(json!({ "clause": c.clause, "status": status, "witness": c.witness }));
        }
        data["verification"] = json!({
            "probes": probes.iter().map(|(n, _)| n.clone()).collect::<Vec<_>>(),
            "clauses": clauses,
            "passed": report.passed(),
        });
    }
    Ok((text, data))
}

fn maps_string(f: &crate::rep::RepMorphism) -> String {
    let q = f.source().algebra().quiver();
    (0..q.num_vertices())
        .filter(|&x| f.map(x).rows() > 0 || f.map(x).cols() > 0)
        .map(|x| format!("{}: {}", q.vertex_name(x), matrix_string(f.map(x))))
        .collect::<Vec<_>>()
        .join("; ")
}

fn duality_cmd(ctx: &mut Ctx<'_>, name: &str, probes: &str) -> Result<(String, Value)> {
    let m = ctx.l.module(name)?.clone();
    let pres = minimal_presentation(&m)?;
    ctx.touch_projectives(&pres.p0);
    ctx.touch_projectives(&pres.p1);
    ctx.touch_injectives(&pres.p1);
    let probes = ctx.probes(probes, 0)?;
    for (_, x) in &probes {
        let cover = projective_cover(x)?;
        ctx.touch_projectives(&cover.labels);
        let (env, _) = injective_envelope(x)?;
        ctx.touch_injectives(&env);
    }
    let mods: Vec<Representation> = probes.iter().map(|(_, p)| p.clone()).collect();
    let rows = ar_duality_check(&m, &mods)?;
    let mut text = format!("M = {name}; columns: Ext1(X,tau M) stable(M,X) | Ext1(M,X) costable(X,tau M)\n");
    let mut items = Vec::new();
    for r in &rows {
        let holds = r.holds();
        if !holds {
            ctx.failed = true;
        }
        let probe = &probes[r.probe].0;
        text.push_str(&format!(
            "  {probe}: {} {} | {} {}{}\n",
            r.ext_x_tau,
            r.stable_m_x,
            r.ext_m_x,
            r.costable_x_tau,
            if holds { "" } else { "  MISMATCH" }
        ));
        items.push(json!({
            "probe": probe,
            "ext_x_tau": r.ext_x_tau,
            "stable_m_x": r.stable_m_x,
            "ext_m_x": r.ext_m_x,
            "costable_x_tau": r.costable_x_tau,
            "holds": holds,
        }));
    }
    Ok((text, json!({ "module": name, "rows": items })))
}

fn dualize_cmd(ctx: &mut Ctx<'_>, name: &str) -> Result<(String, Value)> {
    let m = ctx.l.module(name)?.clone();
    let d = dualize(&m);
    let text = format!("over the opposite algebra:\n{}\n", module_line(&format!("D{name}"), &d));
    Ok((text, json!({ "module": name, "opposite": true, "dual": module_json(&d) })))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::fixture;

    fn cmd(args: &[&str]) -> Command {
        let mut full = vec!["auslander", "file"];
        full.extend_from_slice(args);
        Cli::try_parse_from(full).unwrap().command
    }

    fn run_fixture(name: &str, args: &[&str], json: bool) -> Outcome {
        run_on_text(&cmd(args), fixture(name).unwrap().text, json)
    }

    #[test]
    fn ass_on_a2_reproduces_the_golden_sequence() {
        let out = run_fixture("a2", &["ass", "-m", "S1", "--verify", "--probes", "all"], false);
        assert_eq!(out.code, 0, "{}", out.stdout);
        assert!(out.stdout.starts_with("0 -> S2 -> P1 -> S1 -> 0\n"), "{}", out.stdout);
        assert!(out.stdout.contains("minimal: true"));
    }

    #[test]
    fn classify_loop_reports_witness() {
        let out = run_fixture("loop_idempotent", &["classify"], false);
        assert!(out.stdout.contains("locally semiperfect: false (witness alpha*alpha)"), "{}", out.stdout);
        assert!(out.stdout.contains("locally left bounded: true"));
        let j: Value = serde_json::from_str(&run_fixture("loop_idempotent", &["classify"], true).stdout).unwrap();
        assert_eq!(j["result"]["flags"]["locally_semiperfect"]["witness"], "alpha*alpha");
    }

    #[test]
    fn tau_of_projective_is_zero() {
        let out = run_fixture("a2", &["tau", "-m", "P1"], false);
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("module tau_P1 { }"));
        assert!(out.stdout.contains("note: projective input, τ = 0"));
        let out = run_fixture("a2", &["tau", "-m", "S1", "--presentation", "pad:1"], false);
        assert!(out.stdout.contains("~ S1 + S2") || out.stdout.contains("~ S2 + S1"), "{}", out.stdout);
    }

    #[test]
    fn json_is_stable() {
        let a = run_fixture("bound_a3", &["ass", "-m", "S2", "--verify", "--json"], true);
        let b = run_fixture("bound_a3", &["ass", "-m", "S2", "--verify", "--json"], true);
        assert_eq!(a, b);
        let j: Value = serde_json::from_str(&a.stdout).unwrap();
        assert_eq!(j["status"], "ok");
        assert_eq!(j["result"]["verification"]["passed"], true);
    }

    #[test]
    fn errors_and_refusals_exit_one() {
        let out = run_fixture("a2", &["tau", "-m", "Nope"], false);
        assert_eq!(out.code, 1);
        let out = run_fixture("loop_idempotent", &["tau", "-m", "S"], false);
        assert_eq!(out.code, 1);
        assert!(out.stdout.contains("refused"));
        let out = run_on_text(&cmd(&["build"]), "field Q\nvertex 1\narrow a: 1 -> 2\n", true);
        assert_eq!(out.code, 1);
        assert!(out.stdout.contains("line 3, column 15"));
    }

    #[test]
    fn window_boundary_stamps_reports() {
        let out = run_fixture("window_unbounded", &["tau", "-m", "Sb1"], false);
        assert_eq!(out.code, 2, "{}", out.stdout);
        assert!(out.stdout.contains("window-unsafe"));
        let out = run_fixture("window_multiserial", &["tau", "-m", "S0"], false);
        assert_eq!(out.code, 0, "{}", out.stdout);
    }

    #[test]
    fn undecided_algebra_exits_two() {
        let text = "field Q\nvertex x\narrow a: x -> x\n";
        let out = run_on_text(&cmd(&["build"]), text, false);
        assert_eq!(out.code, 2, "{}", out.stdout);
        let out = run_on_text(&cmd(&["conclusions"]), text, false);
        assert_eq!(out.code, 2, "{}", out.stdout);
    }

    #[test]
    fn help_mentions_reading_order() {
        let out = run_args(["auslander", "--help"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("first alpha, then beta"));
    }
}
