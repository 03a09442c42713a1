//! The line-oriented workspace format.
//!
//! ```text
//! # A2 with its simple modules
//! field Q
//! vertex 1 2
//! arrow alpha: 1 -> 2
//! module S1 { dim 1 = 1; }
//! module P1 { dim 1 = 1; dim 2 = 1; mat alpha = [[1]]; }
//! ```
//!
//! Monomials read right to left: `beta*alpha` is "first `alpha`, then
//! `beta`". A relation is a sum `c1*m1 + c2*m2 + ...` of parallel monomials
//! of length at least 2; coefficients are integers or fractions `p/q` and
//! default to 1. Module items end with `;` or a line break. `boundary` lists the vertices where a finite window cuts an
//! infinite quiver. Matrices not given in a module are zero, and a matrix
//! for `a: s -> t` has `dim t` rows and `dim s` columns.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::algebra::{BoundQuiverAlgebra, Caps, Relation};
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Scalar};
use crate::quiver::Quiver;
use crate::rep::Representation;

#[derive(Clone, Debug)]
pub struct ModuleDecl {
    pub name: String,
    pub dims: Vec<usize>,
    pub mats: Vec<Matrix>,
    pub line: usize,
}

/// Ignores the source line.
impl PartialEq for ModuleDecl {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.dims == other.dims && self.mats == other.mats
    }
}

impl Eq for ModuleDecl {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Workspace {
    pub field: Field,
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
    pub boundary: BTreeSet<usize>,
    pub modules: Vec<ModuleDecl>,
}

/// A parsed workspace with its algebra built and its modules checked.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub workspace: Workspace,
    pub algebra: Arc<BoundQuiverAlgebra>,
    pub modules: Vec<(String, Representation)>,
}

impl Loaded {
    pub fn module(&self, name: &str) -> Result<&Representation> {
        self.modules
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, m)| m)
            .ok_or_else(|| Error::Input(format!("no module named {name}")))
    }

    pub fn is_window(&self) -> bool {
        !self.workspace.boundary.is_empty()
    }
}

impl Workspace {
    pub fn parse(text: &str) -> Result<Workspace> {
        Parser::new(text)?.workspace()
    }

    pub fn build(&self, caps: Caps) -> Result<Arc<BoundQuiverAlgebra>> {
        BoundQuiverAlgebra::build(self.quiver.clone(), self.relations.clone(), self.field, caps)
    }

    /// Parses, builds the algebra and checks every module against the relations.
    pub fn load(text: &str, caps: Caps) -> Result<Loaded> {
        let workspace = Workspace::parse(text)?;
        let algebra = workspace.build(caps)?;
        let mut modules = Vec::new();
        for decl in &workspace.modules {
            let m = Representation::new(&algebra, decl.dims.clone(), decl.mats.clone()).map_err(|e| Error::Parse {
                line: decl.line,
                col: 1,
                msg: format!("module {}: {e}", decl.name),
            })?;
            modules.push((decl.name.clone(), m));
        }
        Ok(Loaded { workspace, algebra, modules })
    }

    /// Canonical text: declarations in a fixed order, zero dimensions and zero
    /// matrices omitted.
    pub fn print(&self) -> String {
        let q = &self.quiver;
        let mut out = String::new();
        writeln!(out, "field {}", self.field).unwrap();
        if q.num_vertices() > 0 {
            writeln!(out, "vertex {}", q.vertex_names().join(" ")).unwrap();
        }
        for a in q.arrows() {
            writeln!(out, "arrow {}: {} -> {}", a.name, q.vertex_name(a.source), q.vertex_name(a.target)).unwrap();
        }
        for rel in &self.relations {
            writeln!(out, "relation {}", relation_string(q, rel)).unwrap();
        }
        if !self.boundary.is_empty() {
            let names: Vec<&str> = self.boundary.iter().map(|&v| q.vertex_name(v)).collect();
            writeln!(out, "boundary {}", names.join(" ")).unwrap();
        }
        for m in &self.modules {
            writeln!(out, "{}", module_string(q, &m.name, &m.dims, &m.mats)).unwrap();
        }
        out
    }
}

/// A `module` declaration; zero dimensions and zero matrices are omitted.
pub fn module_string(q: &Quiver, name: &str, dims: &[usize], mats: &[Matrix]) -> String {
    let mut parts = Vec::new();
    for (v, &d) in dims.iter().enumerate() {
        if d > 0 {
            parts.push(format!("dim {} = {d};", q.vertex_name(v)));
        }
    }
    for (a, mat) in mats.iter().enumerate() {
        if !mat.is_zero() {
            parts.push(format!("mat {} = {};", q.arrow(a).name, matrix_string(mat)));
        }
    }
    if parts.is_empty() {
        format!("module {name} {{ }}")
    } else {
        format!("module {name} {{ {} }}", parts.join(" "))
    }
}

pub fn relation_string(q: &Quiver, rel: &Relation) -> String {
    let mut s = String::new();
    for (k, (c, p)) in rel.iter().enumerate() {
        let neg = c.is_negative();
        let abs = if neg { -c } else { c.clone() };
        if k == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        if !abs.is_one() {
            write!(s, "{abs}*").unwrap();
        }
        s.push_str(&q.path_string(p));
    }
    s
}

pub fn matrix_string(m: &Matrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|r| format!("[{}]", m.row(r).iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")))
        .collect();
    format!("[{}]", rows.join(", "))
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Word(String),
    Sym(&'static str),
    Newline,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn is_word_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\'' || c == '.'
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let col = i + 1;
            let at = |tok| Token { tok, line: ln + 1, col };
            if c == '#' {
                break;
            }
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            if is_word_char(c) {
                let start = i;
                while i < chars.len() && is_word_char(chars[i]) {
                    i += 1;
                }
                out.push(at(Tok::Word(chars[start..i].iter().collect())));
                continue;
            }
            if c == '-' && chars.get(i + 1) == Some(&'>') {
                out.push(at(Tok::Sym("->")));
                i += 2;
                continue;
            }
            let sym = match c {
                ':' => ":",
                '+' => "+",
                '-' => "-",
                '*' => "*",
                '/' => "/",
                '=' => "=",
                ';' => ";",
                ',' => ",",
                '{' => "{",
                '}' => "}",
                '[' => "[",
                ']' => "]",
                _ => return Err(Error::Parse { line: ln + 1, col, msg: format!("unexpected character {c:?}") }),
            };
            out.push(at(Tok::Sym(sym)));
            i += 1;
        }
        out.push(Token { tok: Tok::Newline, line: ln + 1, col: chars.len() + 1 });
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    field: Option<Field>,
    quiver: Quiver,
    relations: Vec<Relation>,
    boundary: BTreeSet<usize>,
    modules: Vec<ModuleDecl>,
}

fn err<T>(t: &Token, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line: t.line, col: t.col, msg: msg.into() })
}

impl Parser {
    fn new(text: &str) -> Result<Parser> {
        Ok(Parser {
            toks: lex(text)?,
            pos: 0,
            field: None,
            quiver: Quiver::empty(),
            relations: Vec::new(),
            boundary: BTreeSet::new(),
            modules: Vec::new(),
        })
    }

    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Result<Token> {
        match self.toks.get(self.pos) {
            Some(t) => {
                self.pos += 1;
                Ok(t.clone())
            }
            None => {
                let (line, col) = self.toks.last().map_or((1, 1), |t| (t.line, t.col));
                Err(Error::Parse { line, col, msg: "unexpected end of input".into() })
            }
        }
    }

    fn skip_newlines(&mut self) {
        while matches!(self.peek(), Some(Token { tok: Tok::Newline, .. })) {
            self.pos += 1;
        }
    }

    fn at_sym(&self, s: &str) -> bool {
        matches!(self.peek(), Some(Token { tok: Tok::Sym(x), .. }) if *x == s)
    }

    fn at_line_end(&self) -> bool {
        matches!(self.peek(), None | Some(Token { tok: Tok::Newline, .. }))
    }

    fn expect_sym(&mut self, s: &str) -> Result<Token> {
        let t = self.next()?;
        match &t.tok {
            Tok::Sym(x) if *x == s => Ok(t),
            _ => err(&t, format!("expected {s:?}")),
        }
    }

    fn word(&mut self, what: &str) -> Result<(String, Token)> {
        let t = self.next()?;
        match &t.tok {
            Tok::Word(w) => Ok((w.clone(), t.clone())),
            _ => err(&t, format!("expected {what}")),
        }
    }

    fn end_statement(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(Token { tok: Tok::Newline, .. }) => {
                self.pos += 1;
                Ok(())
            }
            Some(t) => err(t, "unexpected token at end of statement"),
        }
    }

    fn field(&self, t: &Token) -> Result<Field> {
        self.field.map_or_else(|| err(t, "the field must be declared first"), Ok)
    }

    fn vertex(&mut self) -> Result<usize> {
        let (name, t) = self.word("a vertex")?;
        self.quiver.find_vertex(&name).map_or_else(|| err(&t, format!("unknown vertex {name}")), Ok)
    }

    fn workspace(mut self) -> Result<Workspace> {
        loop {
            self.skip_newlines();
            let Some(first) = self.peek().cloned() else { break };
            let (kw, t) = self.word("a declaration")?;
            match kw.as_str() {
                "field" => self.field_decl(&t)?,
                "vertex" => self.vertex_decl(&t)?,
                "arrow" => self.arrow_decl(&t)?,
                "relation" => self.relation_decl(&t)?,
                "boundary" => self.boundary_decl(&t)?,
                "module" => self.module_decl(&t)?,
                _ => return err(&first, format!("unknown declaration {kw}")),
            }
            self.end_statement()?;
        }
        let field = match self.field {
            Some(f) => f,
            None => return Err(Error::Parse { line: 1, col: 1, msg: "missing field declaration".into() }),
        };
        Ok(Workspace {
            field,
            quiver: self.quiver,
            relations: self.relations,
            boundary: self.boundary,
            modules: self.modules,
        })
    }

    fn field_decl(&mut self, kw: &Token) -> Result<()> {
        if self.field.is_some() {
            return err(kw, "field declared twice");
        }
        if !self.quiver.vertex_names().is_empty() {
            return err(kw, "the field must be declared before the quiver");
        }
        let (name, t) = self.word("Q or F")?;
        self.field = Some(match name.as_str() {
            "Q" => Field::Rational,
            "F" => {
                let (p, pt) = self.word("a prime")?;
                let p: u64 = p.parse().or_else(|_| err(&pt, "expected a prime"))?;
                Field::prime(p).or_else(|e| err(&pt, e.to_string()))?
            }
            _ => return err(&t, "expected Q or F <p>"),
        });
        Ok(())
    }

    fn vertex_decl(&mut self, kw: &Token) -> Result<()> {
        if !self.quiver.arrows().is_empty() || !self.modules.is_empty() {
            return err(kw, "vertices must be declared before arrows and modules");
        }
        if self.at_line_end() {
            return err(kw, "expected at least one vertex");
        }
        while !self.at_line_end() {
            let (name, t) = self.word("a vertex name")?;
            self.quiver.add_vertex(&name).or_else(|e| err(&t, e.to_string()))?;
        }
        Ok(())
    }

    fn arrow_decl(&mut self, kw: &Token) -> Result<()> {
        if !self.relations.is_empty() || !self.modules.is_empty() {
            return err(kw, "arrows must be declared before relations and modules");
        }
        let (name, t) = self.word("an arrow name")?;
        if name.parse::<f64>().is_ok() {
            return err(&t, "arrow names must not be numbers");
        }
        self.expect_sym(":")?;
        let s = self.vertex()?;
        self.expect_sym("->")?;
        let v = self.vertex()?;
        self.quiver.add_arrow(&name, s, v).or_else(|e| err(&t, e.to_string()))?;
        Ok(())
    }

    fn boundary_decl(&mut self, kw: &Token) -> Result<()> {
        if self.at_line_end() {
            return err(kw, "expected at least one vertex");
        }
        while !self.at_line_end() {
            let v = self.vertex()?;
            self.boundary.insert(v);
        }
        Ok(())
    }

    /// `int` or `int/int`, after an optional sign handled by the caller.
    fn number(&mut self, field: Field) -> Result<Scalar> {
        let (w, t) = self.word("a number")?;
        let num: i64 = w.parse().or_else(|_| err(&t, format!("expected a number, found {w}")))?;
        if self.at_sym("/") {
            self.pos += 1;
            let (d, dt) = self.word("a denominator")?;
            let den: i64 = d.parse().or_else(|_| err(&dt, "expected a denominator"))?;
            return field.from_fraction(num, den).or_else(|e| err(&dt, e.to_string()));
        }
        Ok(field.from_i64(num))
    }

    fn signed_number(&mut self, field: Field) -> Result<Scalar> {
        if self.at_sym("-") {
            self.pos += 1;
            return Ok(-&self.number(field)?);
        }
        self.number(field)
    }

    fn relation_decl(&mut self, kw: &Token) -> Result<()> {
        let field = self.field(kw)?;
        let mut terms: Relation = Vec::new();
        let mut ends: Option<(usize, usize)> = None;
        let mut first = true;
        while !self.at_line_end() {
            let mut sign = field.one();
            if self.at_sym("-") {
                sign = -&sign;
                self.pos += 1;
            } else if self.at_sym("+") {
                if first {
                    let t = self.next()?;
                    return err(&t, "unexpected +");
                }
                self.pos += 1;
            } else if !first {
                let t = self.next()?;
                return err(&t, "expected + or -");
            }
            first = false;
            let start = self.peek().cloned().map_or_else(|| kw.clone(), |t| t);
            let mut coeff = field.one();
            if let Some(Token { tok: Tok::Word(w), .. }) = self.peek() {
                if w.parse::<i64>().is_ok() {
                    coeff = self.number(field)?;
                    self.expect_sym("*")?;
                }
            }
            let mut names = vec![self.word("an arrow")?];
            while self.at_sym("*") {
                self.pos += 1;
                names.push(self.word("an arrow")?);
            }
            let mut ids = Vec::new();
            for (n, t) in names.iter().rev() {
                match self.quiver.find_arrow(n) {
                    Some(a) => ids.push(a),
                    None => return err(t, format!("unknown arrow {n}")),
                }
            }
            if ids.len() < 2 {
                return err(&start, "relation monomials must have length at least 2");
            }
            let Some(path) = self.quiver.path_from_traversal(&ids) else {
                return err(&start, "monomial is not a composable path");
            };
            let e = (path.source(), path.target());
            if *ends.get_or_insert(e) != e {
                return err(&start, "relation monomials are not parallel");
            }
            let c = &sign * &coeff;
            if !c.is_zero() {
                terms.push((c, path));
            }
        }
        if terms.is_empty() {
            return err(kw, "empty relation");
        }
        self.relations.push(terms);
        Ok(())
    }

    fn module_decl(&mut self, kw: &Token) -> Result<()> {
        let field = self.field(kw)?;
        let (name, nt) = self.word("a module name")?;
        if self.modules.iter().any(|m| m.name == name) {
            return err(&nt, format!("module {name} declared twice"));
        }
        self.expect_sym("{")?;
        let n = self.quiver.num_vertices();
        let mut dims = vec![0usize; n];
        let mut dim_set = vec![false; n];
        let mut given: Vec<Option<(Vec<Vec<Scalar>>, Token)>> = vec![None; self.quiver.num_arrows()];
        loop {
            self.skip_newlines();
            if self.at_sym("}") {
                self.pos += 1;
                break;
            }
            let (item, it) = self.word("dim, mat or }")?;
            match item.as_str() {
                "dim" => {
                    let vt = self.peek().cloned().unwrap_or_else(|| it.clone());
                    let v = self.vertex()?;
                    if dim_set[v] {
                        return err(&vt, "dimension given twice");
                    }
                    self.expect_sym("=")?;
                    let (d, dt) = self.word("a dimension")?;
                    dims[v] = d.parse().or_else(|_| err(&dt, "expected a dimension"))?;
                    dim_set[v] = true;
                }
                "mat" => {
                    let (a, at) = self.word("an arrow")?;
                    let Some(a) = self.quiver.find_arrow(&a) else {
                        return err(&at, format!("unknown arrow {a}"));
                    };
                    if given[a].is_some() {
                        return err(&at, "matrix given twice");
                    }
                    self.expect_sym("=")?;
                    given[a] = Some((self.matrix(field)?, at));
                }
                _ => return err(&it, format!("expected dim or mat, found {item}")),
            }
            if self.at_line_end() {
                continue;
            }
            if !self.at_sym("}") {
                self.expect_sym(";")?;
            }
        }
        let mut mats = Vec::new();
        for (a, g) in given.into_iter().enumerate() {
            let arrow = self.quiver.arrow(a);
            let (r, c) = (dims[arrow.target], dims[arrow.source]);
            match g {
                None => mats.push(Matrix::zeros(field, r, c)),
                Some((rows, t)) => {
                    if rows.len() != r || rows.iter().any(|x| x.len() != c) {
                        return err(&t, format!("matrix for {} must be {r} x {c}", arrow.name));
                    }
                    mats.push(Matrix::from_vec(field, r, c, rows.into_iter().flatten().collect()));
                }
            }
        }
        self.modules.push(ModuleDecl { name, dims, mats, line: kw.line });
        Ok(())
    }

    fn matrix(&mut self, field: Field) -> Result<Vec<Vec<Scalar>>> {
        self.expect_sym("[")?;
        let mut rows = Vec::new();
        self.skip_newlines();
        if self.at_sym("]") {
            self.pos += 1;
            return Ok(rows);
        }
        loop {
            self.skip_newlines();
            self.expect_sym("[")?;
            let mut row = Vec::new();
            if !self.at_sym("]") {
                loop {
                    row.push(self.signed_number(field)?);
                    if !self.at_sym(",") {
                        break;
                    }
                    self.pos += 1;
                }
            }
            self.expect_sym("]")?;
            rows.push(row);
            self.skip_newlines();
            if self.at_sym(",") {
                self.pos += 1;
                continue;
            }
            self.expect_sym("]")?;
            return Ok(rows);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const A2: &str = "field Q\nvertex 1 2\narrow alpha: 1 -> 2\n\
        module S1 { dim 1 = 1; }\nmodule S2 { dim 2 = 1; }\n\
        module P1 { dim 1 = 1; dim 2 = 1; mat alpha = [[1]]; }\n";

    fn parse_err(text: &str) -> (usize, usize, String) {
        match Workspace::parse(text) {
            Err(Error::Parse { line, col, msg }) => (line, col, msg),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn a2_round_trip() {
        let ws = Workspace::parse(A2).unwrap();
        let printed = ws.print();
        assert_eq!(printed, A2);
        assert_eq!(Workspace::parse(&printed).unwrap(), ws);
        let loaded = Workspace::load(A2, Caps::default()).unwrap();
        assert_eq!(loaded.algebra.dim(), 3);
        let a = &loaded.algebra;
        assert_eq!(loaded.module("P1").unwrap(), &Representation::projective(a, 0).unwrap());
        assert_eq!(loaded.module("S2").unwrap(), &Representation::simple(a, 1));
    }

    #[test]
    fn loop_relation_reads_right_to_left() {
        let text = "field Q\nvertex x\narrow a: x -> x\nrelation a*a - a*a*a\n";
        let ws = Workspace::parse(text).unwrap();
        assert_eq!(ws.relations[0].len(), 2);
        assert_eq!(ws.relations[0][1].0, Field::Rational.from_i64(-1));
        assert_eq!(ws.build(Caps::default()).unwrap().dim(), 3);
        assert_eq!(ws.print(), text);
    }

    #[test]
    fn composition_order() {
        let text = "field Q\nvertex 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\nrelation b*a\n";
        let ws = Workspace::parse(text).unwrap();
        let p = &ws.relations[0][0].1;
        assert_eq!((p.source(), p.target()), (0, 2));
        let (line, col, msg) = parse_err("field Q\nvertex 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\nrelation a*b\n");
        assert_eq!((line, col), (5, 10));
        assert!(msg.contains("composable"));
    }

    #[test]
    fn parallelism_and_length_errors() {
        let base = "field Q\nvertex 1 2\narrow a: 1 -> 1\narrow b: 2 -> 2\n";
        let (line, col, msg) = parse_err(&format!("{base}relation b*b + a*a\n"));
        assert_eq!((line, col), (5, 16));
        assert!(msg.contains("parallel"));
        let (line, _, msg) = parse_err(&format!("{base}relation a\n"));
        assert_eq!(line, 5);
        assert!(msg.contains("length"));

        let base = "field Q\nvertex x\narrow a: x -> x\narrow b: x -> x\n";
        assert!(Workspace::parse(&format!("{base}relation b*a + a*b\n")).is_ok());
        let q = "field Q\nvertex 1 2\narrow a: 1 -> 2\narrow b: 2 -> 1\nrelation b*a + a*b\n";
        assert!(parse_err(q).2.contains("parallel"));
    }

    #[test]
    fn unknown_identifiers_located() {
        let (line, col, msg) = parse_err("field Q\nvertex 1 2\narrow a: 1 -> 3\n");
        assert_eq!((line, col), (3, 15));
        assert!(msg.contains("unknown vertex"));
        let (line, col, _) = parse_err("field Q\nvertex 1\narrow a: 1 -> 1\nrelation a*c\n");
        assert_eq!((line, col), (4, 12));
        let (line, col, _) = parse_err("field Q\nvertex 1\nmodule M { dim 2 = 1; }\n");
        assert_eq!((line, col), (3, 16));
        assert!(parse_err("field R\n").2.contains("Q or F"));
        assert!(parse_err("field F 12\n").2.contains("prime"));
        assert!(parse_err("vertex 1\n").2.contains("field"));
    }

    #[test]
    fn module_shapes_and_relations_checked() {
        let base = "field F 7\nvertex 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\nrelation b*a\n";
        let (line, _, msg) = parse_err(&format!("{base}module M {{ dim 1 = 1; dim 2 = 1; mat a = [[1, 0]]; }}\n"));
        assert_eq!(line, 6);
        assert!(msg.contains("1 x 1"));
        let bad = format!("{base}module M {{ dim 1 = 1; dim 2 = 1; dim 3 = 1; mat a = [[1]]; mat b = [[-1]]; }}\n");
        assert!(Workspace::parse(&bad).is_ok());
        match Workspace::load(&bad, Caps::default()) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 6),
            other => panic!("{other:?}"),
        }
        let good = format!("{base}module M {{\n  dim 1 = 1\n  dim 2 = 1;\n  mat a = [[3/2]]\n}}\n");
        let loaded = Workspace::load(&good, Caps::default()).unwrap();
        let m = loaded.module("M").unwrap();
        assert_eq!(m.mat(0).get(0, 0), &Field::Prime(7).from_fraction(3, 2).unwrap());
        let ws = &loaded.workspace;
        assert_eq!(&Workspace::parse(&ws.print()).unwrap(), ws);
    }

    #[test]
    fn boundary_and_signs_round_trip() {
        let text = "field Q\nvertex 0 1 2\narrow a: 0 -> 1\narrow b: 1 -> 2\narrow c: 0 -> 1\narrow d: 1 -> 2\n\
            relation -b*a + 3/2*d*c - 2*b*c\nboundary 0 2\n";
        let ws = Workspace::parse(text).unwrap();
        assert_eq!(ws.print(), text);
        assert_eq!(ws.boundary.iter().copied().collect::<Vec<_>>(), vec![0, 2]);
    }

    #[test]
    fn comments_and_zero_rows() {
        let text = "# header\nfield Q\nvertex 1 2 # two\narrow a: 1 -> 2\nmodule Z { dim 1 = 2; mat a = []; }\n";
        let loaded = Workspace::load(text, Caps::default()).unwrap();
        assert_eq!(loaded.module("Z").unwrap().dims(), &[2, 0]);
    }
}
