use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::qscalar::{GaussianRational, LaurentScalar};

/// Affine phase `Σ a_v φ_v + c π` with rational coefficients.
///
/// Phase variables are numbered; a valuation assigns each one a real value
/// when an expression is evaluated numerically.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Phase {
    vars: BTreeMap<usize, Rational64>,
    pi: Rational64,
}

impl Phase {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn var(v: usize) -> Self {
        let mut p = Self::zero();
        p.vars.insert(v, Rational64::one());
        p
    }

    /// `r π`.
    pub fn pi(r: Rational64) -> Self {
        Phase {
            vars: BTreeMap::new(),
            pi: r,
        }
    }

    /// `2π k / n`, a point on an n-point grid.
    pub fn grid(k: i64, n: i64) -> Self {
        Self::pi(Rational64::new(2 * k, n))
    }

    pub fn is_zero(&self) -> bool {
        self.vars.is_empty() && self.pi.is_zero()
    }

    pub fn pi_part(&self) -> Rational64 {
        self.pi
    }

    pub fn var_coeffs(&self) -> &BTreeMap<usize, Rational64> {
        &self.vars
    }

    pub fn add(&self, other: &Phase) -> Phase {
        let mut out = self.clone();
        for (v, a) in &other.vars {
            let e = out.vars.entry(*v).or_insert_with(Rational64::zero);
            *e += a;
            if e.is_zero() {
                out.vars.remove(v);
            }
        }
        out.pi += other.pi;
        out
    }

    pub fn scale(&self, r: Rational64) -> Phase {
        if r.is_zero() {
            return Phase::zero();
        }
        Phase {
            vars: self.vars.iter().map(|(v, a)| (*v, a * r)).collect(),
            pi: self.pi * r,
        }
    }

    pub fn neg(&self) -> Phase {
        self.scale(-Rational64::one())
    }

    pub fn eval(&self, vals: &[f64]) -> f64 {
        let mut x = self.pi.to_f64().unwrap_or(0.0) * std::f64::consts::PI;
        for (v, a) in &self.vars {
            let val = vals.get(*v).copied().unwrap_or(0.0);
            x += a.to_f64().unwrap_or(0.0) * val;
        }
        x
    }

    /// Splits off `i^k` so that the remaining constant lies in `[0, 1/2) π`.
    fn reduce(mut self) -> (Phase, i64) {
        let half = Rational64::new(1, 2);
        let k = (self.pi / half).floor();
        self.pi -= k * half;
        let k = k.to_integer().rem_euclid(4);
        (self, k)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (v, a) in &self.vars {
            if a.is_one() {
                parts.push(format!("φ{v}"));
            } else {
                parts.push(format!("{a}·φ{v}"));
            }
        }
        if !self.pi.is_zero() || parts.is_empty() {
            parts.push(format!("{}π", self.pi));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Exact coefficient `Σ c_k e^{i θ_k}` with `c_k` q-scalars and `θ_k` phases.
///
/// Keys are reduced so that two equal coefficients compare equal: constant
/// phases that are multiples of π/2 are absorbed into the scalar as powers
/// of `i`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Coeff {
    terms: BTreeMap<Phase, LaurentScalar>,
}

impl Coeff {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(LaurentScalar::one())
    }

    pub fn scalar(c: LaurentScalar) -> Self {
        let mut out = Self::zero();
        out.add_term(Phase::zero(), c);
        out
    }

    /// `e^{i θ}`.
    pub fn unit(theta: &Phase) -> Self {
        let mut out = Self::zero();
        out.add_term(theta.clone(), LaurentScalar::one());
        out
    }

    pub fn term(theta: &Phase, c: LaurentScalar) -> Self {
        let mut out = Self::zero();
        out.add_term(theta.clone(), c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Phase, LaurentScalar> {
        &self.terms
    }

    fn add_term(&mut self, theta: Phase, c: LaurentScalar) {
        if c.is_zero() {
            return;
        }
        let (key, k) = theta.reduce();
        let c = &c * &LaurentScalar::constant(GaussianRational::i_pow(k));
        let slot = self.terms.entry(key.clone()).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &Coeff) -> Coeff {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Coeff {
        self.scale(&LaurentScalar::from_int(-1))
    }

    pub fn scale(&self, c: &LaurentScalar) -> Coeff {
        let mut out = Coeff::zero();
        for (p, a) in &self.terms {
            out.add_term(p.clone(), a * c);
        }
        out
    }

    pub fn mul(&self, other: &Coeff) -> Coeff {
        let mut out = Coeff::zero();
        for (pa, a) in &self.terms {
            for (pb, b) in &other.terms {
                out.add_term(pa.add(pb), a * b);
            }
        }
        out
    }

    pub fn conj(&self) -> Coeff {
        let mut out = Coeff::zero();
        for (p, a) in &self.terms {
            out.add_term(p.neg(), a.conj());
        }
        out
    }

    pub fn eval(&self, q: f64, vals: &[f64]) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (p, a) in &self.terms {
            acc += a.eval_unchecked(q) * Complex64::from_polar(1.0, p.eval(vals));
        }
        acc
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (p, a)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if p.is_zero() {
                write!(f, "({a})")?;
            } else {
                write!(f, "({a}) e^(i({p}))")?;
            }
        }
        Ok(())
    }
}

/// Helper for writing `Rational64` literals.
pub fn ratio(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}
