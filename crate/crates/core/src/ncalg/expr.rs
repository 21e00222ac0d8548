use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::qscalar::LaurentScalar;

use super::Presentation;

/// Index of a generator in its presentation's alphabet.
pub type Letter = u8;

/// A monomial; the empty word is the unit.
///
/// Words order by length first, then letter by letter, so expressions print
/// low degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn unit() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn show<'a>(&'a self, p: &'a Presentation) -> impl fmt::Display + 'a {
        ShowWord { w: self, p }
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

struct ShowWord<'a> {
    w: &'a Word,
    p: &'a Presentation,
}

impl fmt::Display for ShowWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.w.is_empty() {
            return write!(f, "1");
        }
        // Runs of a repeated letter print as powers.
        let letters = self.w.letters();
        let mut i = 0;
        let mut first = true;
        while i < letters.len() {
            let mut j = i;
            while j < letters.len() && letters[j] == letters[i] {
                j += 1;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let name = &self.p.generator(letters[i]).name;
            if j - i > 1 {
                write!(f, "{name}^{}", j - i)?;
            } else {
                write!(f, "{name}")?;
            }
            i = j;
        }
        Ok(())
    }
}

/// Finite linear combination of words with exact coefficients.
///
/// Zero coefficients are never stored. An expression is only meaningful
/// relative to the presentation whose alphabet its letters index.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct NcExpr {
    terms: BTreeMap<Word, LaurentScalar>,
}

impl NcExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(LaurentScalar::one())
    }

    pub fn scalar(c: LaurentScalar) -> Self {
        Self::term(Word::unit(), c)
    }

    pub fn letter(l: Letter) -> Self {
        Self::term(Word(vec![l]), LaurentScalar::one())
    }

    pub fn word(w: impl Into<Word>) -> Self {
        Self::term(w.into(), LaurentScalar::one())
    }

    pub fn term(w: Word, c: LaurentScalar) -> Self {
        let mut e = Self::zero();
        e.add_term(w, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Word, LaurentScalar> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Word, LaurentScalar> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Maximum word length; zero for scalars and for the zero expression.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    pub fn coeff(&self, w: &Word) -> LaurentScalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, w: Word, c: LaurentScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(slot) => {
                *slot += &c;
                if slot.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &NcExpr, c: &LaurentScalar) {
        for (w, a) in &other.terms {
            self.add_term(w.clone(), a * c);
        }
    }

    pub fn scale(&self, c: &LaurentScalar) -> NcExpr {
        let mut out = NcExpr::zero();
        out.add_scaled(self, c);
        out
    }

    /// Word concatenation without any rewriting.
    pub fn mul_raw(&self, other: &NcExpr) -> NcExpr {
        let mut out = NcExpr::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                out.add_term(wa.concat(wb), ca * cb);
            }
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&LaurentScalar) -> LaurentScalar) -> NcExpr {
        let mut out = NcExpr::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c));
        }
        out
    }

    pub fn show<'a>(&'a self, p: &'a Presentation) -> impl fmt::Display + 'a {
        ShowExpr { e: self, p }
    }
}

impl std::ops::Add for &NcExpr {
    type Output = NcExpr;
    fn add(self, rhs: &NcExpr) -> NcExpr {
        let mut out = self.clone();
        out.add_scaled(rhs, &LaurentScalar::one());
        out
    }
}

impl std::ops::Sub for &NcExpr {
    type Output = NcExpr;
    fn sub(self, rhs: &NcExpr) -> NcExpr {
        let mut out = self.clone();
        out.add_scaled(rhs, &LaurentScalar::from_int(-1));
        out
    }
}

impl std::ops::Neg for &NcExpr {
    type Output = NcExpr;
    fn neg(self) -> NcExpr {
        self.scale(&LaurentScalar::from_int(-1))
    }
}

struct ShowExpr<'a> {
    e: &'a NcExpr,
    p: &'a Presentation,
}

impl fmt::Display for ShowExpr<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.e.is_zero() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.e.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if w.is_empty() {
                write!(f, "[{c}]")?;
            } else if c.is_one() {
                write!(f, "{}", w.show(self.p))?;
            } else {
                write!(f, "[{c}] {}", w.show(self.p))?;
            }
        }
        Ok(())
    }
}

/// Element of a tensor product of presented algebras: a combination of
/// tuples of words, one word per leg.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TensorExpr {
    terms: BTreeMap<Vec<Word>, LaurentScalar>,
}

impl TensorExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `1 ⊗ ... ⊗ 1` with `legs` factors.
    pub fn unit(legs: usize) -> Self {
        let mut t = Self::zero();
        t.add_term(vec![Word::unit(); legs], LaurentScalar::one());
        t
    }

    /// Tensor product of expressions, expanded termwise.
    pub fn product_of(legs: &[&NcExpr]) -> Self {
        let mut acc: Vec<(Vec<Word>, LaurentScalar)> = vec![(Vec::new(), LaurentScalar::one())];
        for leg in legs {
            let mut next = Vec::new();
            for (ws, c) in &acc {
                for (w, d) in leg.terms() {
                    let mut ws2 = ws.clone();
                    ws2.push(w.clone());
                    next.push((ws2, c * d));
                }
            }
            acc = next;
        }
        let mut out = Self::zero();
        for (ws, c) in acc {
            out.add_term(ws, c);
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<Vec<Word>, LaurentScalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, legs: Vec<Word>, c: LaurentScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&legs) {
            Some(slot) => {
                *slot += &c;
                if slot.is_zero() {
                    self.terms.remove(&legs);
                }
            }
            None => {
                self.terms.insert(legs, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &TensorExpr, c: &LaurentScalar) {
        for (ws, a) in &other.terms {
            self.add_term(ws.clone(), a * c);
        }
    }

    pub fn scale(&self, c: &LaurentScalar) -> TensorExpr {
        let mut out = TensorExpr::zero();
        out.add_scaled(self, c);
        out
    }

    /// Legwise concatenation without rewriting.
    pub fn mul_raw(&self, other: &TensorExpr) -> TensorExpr {
        let mut out = TensorExpr::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                let legs = wa.iter().zip(wb).map(|(x, y)| x.concat(y)).collect();
                out.add_term(legs, ca * cb);
            }
        }
        out
    }

    pub fn show<'a>(&'a self, ps: &'a [&'a Presentation]) -> impl fmt::Display + 'a {
        ShowTensor { t: self, ps }
    }
}

impl std::ops::Sub for &TensorExpr {
    type Output = TensorExpr;
    fn sub(self, rhs: &TensorExpr) -> TensorExpr {
        let mut out = self.clone();
        out.add_scaled(rhs, &LaurentScalar::from_int(-1));
        out
    }
}

impl std::ops::Add for &TensorExpr {
    type Output = TensorExpr;
    fn add(self, rhs: &TensorExpr) -> TensorExpr {
        let mut out = self.clone();
        out.add_scaled(rhs, &LaurentScalar::one());
        out
    }
}

struct ShowTensor<'a> {
    t: &'a TensorExpr,
    ps: &'a [&'a Presentation],
}

impl fmt::Display for ShowTensor<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.t.is_zero() {
            return write!(f, "0");
        }
        for (k, (ws, c)) in self.t.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if !c.is_one() {
                write!(f, "[{c}] ")?;
            }
            for (i, w) in ws.iter().enumerate() {
                if i > 0 {
                    write!(f, " ⊗ ")?;
                }
                write!(f, "{}", w.show(self.ps[i.min(self.ps.len() - 1)]))?;
            }
        }
        Ok(())
    }
}
