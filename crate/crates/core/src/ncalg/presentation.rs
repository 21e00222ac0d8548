use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::qscalar::LaurentScalar;

use super::expr::{Letter, NcExpr, TensorExpr, Word};

/// Default bound on rewrite steps in one normal-form computation.
pub const DEFAULT_REWRITE_CAP: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenSymbol {
    pub name: String,
    pub starred: bool,
    /// Position in the normal order. Distinct letters of equal rank never
    /// stand next to each other in a normal word.
    pub rank: u8,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub pattern: (Letter, Letter),
    pub replacement: NcExpr,
}

/// Which redex a rewriting pass contracts first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// Generators, two-letter rewrite rules and an optional star table.
#[derive(Clone, Debug)]
pub struct Presentation {
    name: String,
    alphabet: Vec<GenSymbol>,
    rules: Vec<Rule>,
    index: HashMap<(Letter, Letter), usize>,
    star: Option<Vec<NcExpr>>,
    aliases: Vec<(String, NcExpr)>,
    cap: usize,
}

impl Presentation {
    pub fn new(name: &str, alphabet: Vec<GenSymbol>) -> Self {
        Presentation {
            name: name.to_string(),
            alphabet,
            rules: Vec::new(),
            index: HashMap::new(),
            star: None,
            aliases: Vec::new(),
            cap: DEFAULT_REWRITE_CAP,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn alphabet(&self) -> &[GenSymbol] {
        &self.alphabet
    }

    pub fn generator(&self, l: Letter) -> &GenSymbol {
        &self.alphabet[l as usize]
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn aliases(&self) -> &[(String, NcExpr)] {
        &self.aliases
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn has_star(&self) -> bool {
        self.star.is_some()
    }

    /// Adds or replaces the rule for `a b`.
    pub fn add_rule(&mut self, a: Letter, b: Letter, replacement: NcExpr) {
        match self.index.get(&(a, b)) {
            Some(&k) => self.rules[k].replacement = replacement,
            None => {
                self.index.insert((a, b), self.rules.len());
                self.rules.push(Rule {
                    pattern: (a, b),
                    replacement,
                });
            }
        }
    }

    pub fn set_star(&mut self, table: Vec<NcExpr>) {
        assert_eq!(table.len(), self.alphabet.len());
        self.star = Some(table);
    }

    pub fn add_alias(&mut self, name: &str, value: NcExpr) {
        self.aliases.push((name.to_string(), value));
    }

    /// Copy with the rule for `a b` removed.
    pub fn without_rule(&self, a: Letter, b: Letter) -> Presentation {
        let mut p = Presentation::new(&self.name, self.alphabet.clone());
        p.star = self.star.clone();
        p.aliases = self.aliases.clone();
        p.cap = self.cap;
        for r in &self.rules {
            if r.pattern != (a, b) {
                p.add_rule(r.pattern.0, r.pattern.1, r.replacement.clone());
            }
        }
        p
    }

    /// Copy with one rule's replacement swapped out.
    pub fn with_rule(&self, a: Letter, b: Letter, replacement: NcExpr) -> Presentation {
        let mut p = self.clone();
        p.add_rule(a, b, replacement);
        p
    }

    pub fn rule(&self, a: Letter, b: Letter) -> Option<&NcExpr> {
        self.index.get(&(a, b)).map(|&k| &self.rules[k].replacement)
    }

    /// Whether `a b` may appear in a normal word.
    pub fn in_order(&self, a: Letter, b: Letter) -> bool {
        a == b || self.generator(a).rank < self.generator(b).rank
    }

    pub fn letter(&self, name: &str) -> Result<Letter> {
        self.alphabet
            .iter()
            .position(|g| g.name == name)
            .map(|k| k as Letter)
            .ok_or_else(|| Error::UnknownGenerator {
                algebra: self.name.clone(),
                name: name.to_string(),
            })
    }

    /// A generator or alias as an expression.
    pub fn gen(&self, name: &str) -> Result<NcExpr> {
        if let Some((_, v)) = self.aliases.iter().find(|(n, _)| n == name) {
            return Ok(v.clone());
        }
        self.letter(name).map(NcExpr::letter)
    }

    /// Product of whitespace-separated generator names, normalized.
    pub fn parse_word(&self, text: &str) -> Result<NcExpr> {
        let mut acc = NcExpr::one();
        for tok in text.split_whitespace() {
            acc = acc.mul_raw(&self.gen(tok)?);
        }
        self.normal_form(&acc)
    }

    pub fn word_of(&self, names: &[&str]) -> Result<Word> {
        names
            .iter()
            .map(|n| self.letter(n))
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    fn redex(&self, w: &Word, strategy: Strategy) -> Option<usize> {
        let l = w.letters();
        if l.len() < 2 {
            return None;
        }
        let found = |i: usize| self.index.contains_key(&(l[i], l[i + 1]));
        match strategy {
            Strategy::Leftmost => (0..l.len() - 1).find(|&i| found(i)),
            Strategy::Rightmost => (0..l.len() - 1).rev().find(|&i| found(i)),
        }
    }

    /// Contracts the redex at position `i` of `w`.
    pub fn rewrite_at(&self, w: &Word, i: usize) -> Option<NcExpr> {
        let l = w.letters();
        let rep = self.rule(l[i], l[i + 1])?;
        let mut out = NcExpr::zero();
        for (rw, rc) in rep.terms() {
            let mut v = Vec::with_capacity(l.len() + rw.len());
            v.extend_from_slice(&l[..i]);
            v.extend_from_slice(rw.letters());
            v.extend_from_slice(&l[i + 2..]);
            out.add_term(Word(v), rc.clone());
        }
        Some(out)
    }

    /// Positions of all redexes in `w`.
    pub fn redexes(&self, w: &Word) -> Vec<usize> {
        let l = w.letters();
        (0..l.len().saturating_sub(1))
            .filter(|&i| self.index.contains_key(&(l[i], l[i + 1])))
            .collect()
    }

    pub fn is_normal(&self, e: &NcExpr) -> bool {
        e.terms()
            .keys()
            .all(|w| self.redex(w, Strategy::Leftmost).is_none())
    }

    pub fn normal_form(&self, e: &NcExpr) -> Result<NcExpr> {
        self.normal_form_with(e, Strategy::Leftmost)
    }

    pub fn normal_form_with(&self, e: &NcExpr, strategy: Strategy) -> Result<NcExpr> {
        let mut pending: BTreeMap<Word, LaurentScalar> = e.terms().clone();
        let mut done = NcExpr::zero();
        let mut steps = 0usize;
        while let Some((w, c)) = pending.pop_last() {
            let Some(i) = self.redex(&w, strategy) else {
                done.add_term(w, c);
                continue;
            };
            steps += 1;
            if steps > self.cap {
                return Err(Error::IterationCap(self.cap));
            }
            let rewritten = self.rewrite_at(&w, i).expect("redex has a rule");
            for (rw, rc) in rewritten.into_terms() {
                let v = &c * &rc;
                if v.is_zero() {
                    continue;
                }
                match pending.get_mut(&rw) {
                    Some(slot) => {
                        *slot += &v;
                        if slot.is_zero() {
                            pending.remove(&rw);
                        }
                    }
                    None => {
                        pending.insert(rw, v);
                    }
                }
            }
        }
        Ok(done)
    }

    pub fn mul(&self, a: &NcExpr, b: &NcExpr) -> Result<NcExpr> {
        self.normal_form(&a.mul_raw(b))
    }

    /// Normal form of a product of several factors, reduced after each step.
    pub fn product(&self, factors: &[&NcExpr]) -> Result<NcExpr> {
        let mut acc = NcExpr::one();
        for f in factors {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    pub fn pow(&self, a: &NcExpr, k: u32) -> Result<NcExpr> {
        let mut acc = NcExpr::one();
        for _ in 0..k {
            acc = self.mul(&acc, a)?;
        }
        Ok(acc)
    }

    pub fn equal(&self, a: &NcExpr, b: &NcExpr) -> Result<bool> {
        Ok(self.normal_form(&(a - b))?.is_zero())
    }

    /// The involution: reverses words, stars letters, conjugates scalars.
    pub fn star(&self, e: &NcExpr) -> Result<NcExpr> {
        let table = self
            .star
            .as_ref()
            .ok_or_else(|| Error::StarUndefined(self.name.clone()))?;
        let mut out = NcExpr::zero();
        for (w, c) in e.terms() {
            let mut acc = NcExpr::scalar(c.conj());
            for &l in w.letters().iter().rev() {
                acc = self.mul(&acc, &table[l as usize])?;
            }
            out.add_scaled(&acc, &LaurentScalar::one());
        }
        Ok(out)
    }

    pub fn star_of_letter(&self, l: Letter) -> Result<&NcExpr> {
        self.star
            .as_ref()
            .map(|t| &t[l as usize])
            .ok_or_else(|| Error::StarUndefined(self.name.clone()))
    }

    /// Applies a letter-to-expression substitution multiplicatively, reducing
    /// in the target presentation `target`.
    pub fn substitute(
        &self,
        e: &NcExpr,
        target: &Presentation,
        image: impl Fn(Letter) -> NcExpr,
    ) -> Result<NcExpr> {
        let images: Vec<NcExpr> = (0..self.alphabet.len() as Letter).map(&image).collect();
        let mut out = NcExpr::zero();
        for (w, c) in e.terms() {
            let mut acc = NcExpr::scalar(c.clone());
            for &l in w.letters() {
                acc = target.mul(&acc, &images[l as usize])?;
            }
            out.add_scaled(&acc, &LaurentScalar::one());
        }
        Ok(out)
    }

    /// Every defining relation as `pattern - replacement`, which vanishes in
    /// the algebra.
    pub fn relation_elements(&self) -> Vec<(String, NcExpr)> {
        self.rules
            .iter()
            .map(|r| {
                let lhs = NcExpr::word(vec![r.pattern.0, r.pattern.1]);
                let label = format!(
                    "{} {} = {}",
                    self.generator(r.pattern.0).name,
                    self.generator(r.pattern.1).name,
                    r.replacement.show(self)
                );
                (label, &lhs - &r.replacement)
            })
            .collect()
    }

    pub fn show_rules(&self) -> impl fmt::Display + '_ {
        ShowPresentation { p: self }
    }
}

/// Legwise normal form of a tensor expression.
pub fn tensor_normal_form(t: &TensorExpr, ps: &[&Presentation]) -> Result<TensorExpr> {
    let mut out = TensorExpr::zero();
    for (ws, c) in t.terms() {
        let legs = ws
            .iter()
            .zip(ps)
            .map(|(w, p)| p.normal_form(&NcExpr::word(w.clone())))
            .collect::<Result<Vec<_>>>()?;
        let refs: Vec<&NcExpr> = legs.iter().collect();
        out.add_scaled(&TensorExpr::product_of(&refs), c);
    }
    Ok(out)
}

pub fn tensor_mul(a: &TensorExpr, b: &TensorExpr, ps: &[&Presentation]) -> Result<TensorExpr> {
    tensor_normal_form(&a.mul_raw(b), ps)
}

struct ShowPresentation<'a> {
    p: &'a Presentation,
}

impl fmt::Display for ShowPresentation<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.p;
        let names: Vec<&str> = p.alphabet.iter().map(|g| g.name.as_str()).collect();
        writeln!(f, "{} <{}>", p.name, names.join(", "))?;
        for r in &p.rules {
            writeln!(
                f,
                "  {} {} -> {}",
                p.generator(r.pattern.0).name,
                p.generator(r.pattern.1).name,
                r.replacement.show(p)
            )?;
        }
        if let Some(t) = &p.star {
            for (k, img) in t.iter().enumerate() {
                writeln!(f, "  ({})* = {}", p.alphabet[k].name, img.show(p))?;
            }
        }
        for (n, v) in &p.aliases {
            writeln!(f, "  {n} := {}", v.show(p))?;
        }
        Ok(())
    }
}
