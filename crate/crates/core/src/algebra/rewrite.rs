//! Noncommutative rewriting on words of arrows.
//!
//! Words list arrows in traversal order. Monomials are compared by length
//! and then lexicographically by arrow index; this order is compatible with
//! concatenation, so every reduction terminates.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::linalg::{Field, Scalar};

pub type Word = Vec<usize>;

/// A word under the length-then-lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mono(pub Word);

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite linear combination of words with nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordPoly {
    field: Field,
    terms: BTreeMap<Mono, Scalar>,
}

impl WordPoly {
    pub fn zero(field: Field) -> WordPoly {
        WordPoly { field, terms: BTreeMap::new() }
    }

    pub fn word(field: Field, w: Word) -> WordPoly {
        let mut p = WordPoly::zero(field);
        p.add_term(w, field.one());
        p
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let key = Mono(w);
        let sum = match self.terms.remove(&key) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    pub fn add_scaled(&mut self, other: &WordPoly, c: &Scalar) {
        for (m, d) in &other.terms {
            self.add_term(m.0.clone(), d * c);
        }
    }

    /// Largest monomial and its coefficient.
    pub fn lead(&self) -> Option<(&Word, &Scalar)> {
        self.terms.last_key_value().map(|(m, c)| (&m.0, c))
    }

    pub fn pop_lead(&mut self) -> Option<(Word, Scalar)> {
        self.terms.pop_last().map(|(m, c)| (m.0, c))
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter().map(|(m, c)| (&m.0, c))
    }

    pub fn scale(&self, c: &Scalar) -> WordPoly {
        let mut out = WordPoly::zero(self.field);
        out.add_scaled(self, c);
        out
    }

    /// `u · self · v` as words, `u` traversed first.
    pub fn sandwich(&self, u: &[usize], v: &[usize]) -> WordPoly {
        let mut out = WordPoly::zero(self.field);
        for (m, c) in &self.terms {
            let mut w = u.to_vec();
            w.extend_from_slice(&m.0);
            w.extend_from_slice(v);
            out.add_term(w, c.clone());
        }
        out
    }

    pub fn max_len(&self) -> usize {
        self.terms.keys().map(|m| m.0.len()).max().unwrap_or(0)
    }
}

/// `lead -> tail`, with every tail monomial smaller than `lead`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub lead: Word,
    pub tail: WordPoly,
}

impl Rule {
    /// Orients a nonzero polynomial, making its largest monomial the lead.
    pub fn from_poly(p: &WordPoly) -> Option<Rule> {
        let (lead, c) = p.lead()?;
        let lead = lead.clone();
        let monic = p.scale(&c.inv());
        let mut tail = monic.scale(&-p.field.one());
        tail.add_term(lead.clone(), p.field.one());
        Some(Rule { lead, tail })
    }

    /// `lead - tail`.
    pub fn poly(&self) -> WordPoly {
        let mut p = self.tail.scale(&-self.tail.field.one());
        p.add_term(self.lead.clone(), self.tail.field.one());
        p
    }
}

/// A rewrite system together with a flag recording whether completion finished.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    field: Field,
    rules: Vec<Rule>,
    complete: bool,
}

fn find_sub(hay: &[usize], needle: &[usize]) -> Option<usize> {
    if needle.len() > hay.len() {
        return None;
    }
    (0..=hay.len() - needle.len()).find(|&i| &hay[i..i + needle.len()] == needle)
}

fn reduce_with(rules: &[&Rule], field: Field, mut work: WordPoly) -> WordPoly {
    let mut out = WordPoly::zero(field);
    while let Some((w, c)) = work.pop_lead() {
        let hit = rules.iter().find_map(|r| find_sub(&w, &r.lead).map(|pos| (r, pos)));
        match hit {
            Some((r, pos)) => {
                let repl = r.tail.sandwich(&w[..pos], &w[pos + r.lead.len()..]);
                work.add_scaled(&repl, &c);
            }
            None => out.add_term(w, c),
        }
    }
    out
}

impl RewriteSystem {
    /// Completes the generators, ignoring overlaps whose combined word is
    /// longer than `max_degree`. Skipping an overlap in the final round clears
    /// the completeness flag.
    pub fn complete(field: Field, generators: &[WordPoly], max_degree: usize) -> RewriteSystem {
        let mut sys = RewriteSystem { field, rules: Vec::new(), complete: true };
        let mut pending: Vec<WordPoly> = generators.to_vec();
        loop {
            let mut added = false;
            for p in pending.drain(..) {
                let r = sys.reduce(&p);
                if let Some(rule) = Rule::from_poly(&r) {
                    sys.rules.push(rule);
                    added = true;
                }
            }
            if !added {
                break;
            }
            sys.interreduce();
            pending = sys.overlap_polys(max_degree);
        }
        sys.rules.sort_by(|a, b| Mono(a.lead.clone()).cmp(&Mono(b.lead.clone())));
        sys
    }

    fn interreduce(&mut self) {
        'outer: loop {
            for i in 0..self.rules.len() {
                let others: Vec<&Rule> =
                    self.rules.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, r)| r).collect();
                let p = self.rules[i].poly();
                let q = reduce_with(&others, self.field, p.clone());
                if q != p {
                    match Rule::from_poly(&q) {
                        Some(rule) => self.rules[i] = rule,
                        None => {
                            self.rules.remove(i);
                        }
                    }
                    continue 'outer;
                }
            }
            break;
        }
    }

    fn overlap_polys(&mut self, max_degree: usize) -> Vec<WordPoly> {
        let mut out = Vec::new();
        let mut skipped = false;
        for a in &self.rules {
            for b in &self.rules {
                let max_k = a.lead.len().min(b.lead.len());
                for k in 1..max_k {
                    if a.lead[a.lead.len() - k..] != b.lead[..k] {
                        continue;
                    }
                    if a.lead.len() + b.lead.len() - k > max_degree {
                        skipped = true;
                        continue;
                    }
                    let u = &a.lead[..a.lead.len() - k];
                    let v = &b.lead[k..];
                    let mut s = b.tail.sandwich(u, &[]);
                    s.add_scaled(&a.tail.sandwich(&[], v), &-self.field.one());
                    let r = self.reduce(&s);
                    if !r.is_zero() {
                        out.push(r);
                    }
                }
            }
        }
        self.complete = !skipped;
        out
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Normal form of `p`.
    pub fn reduce(&self, p: &WordPoly) -> WordPoly {
        let rules: Vec<&Rule> = self.rules.iter().collect();
        reduce_with(&rules, self.field, p.clone())
    }

    /// Whether `w` contains no lead word.
    pub fn is_irreducible(&self, w: &[usize]) -> bool {
        self.rules.iter().all(|r| find_sub(w, &r.lead).is_none())
    }

    /// Whether some lead word is a suffix of `w`.
    pub fn has_lead_suffix(&self, w: &[usize]) -> bool {
        self.rules.iter().any(|r| w.ends_with(&r.lead))
    }
}
