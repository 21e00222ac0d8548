//! Exact coefficients: Laurent polynomials in `s = q^{1/2}` over the Gaussian
//! rationals, localized at `1 - q^2`.
//!
//! Every q-dependent constant of the algebras lives here. Half-integer powers
//! of `q` (needed by the `U_q(sl_2)` action and pairing) are plain odd powers
//! of `s`. The only denominator ever produced is a power of `1 - q^2 = 1 - s^4`,
//! which comes from the `[E, F]` relation; a value is stored as
//! `num(s) / (1 - s^4)^den` with `den` minimal, so equality is structural.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// `re + i im` with arbitrary-precision rational parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(
            BigRational::from_integer(BigInt::from(n)),
            BigRational::zero(),
        )
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        )
    }

    pub fn zero() -> Self {
        Self::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn i() -> Self {
        Self::new(BigRational::zero(), BigRational::one())
    }

    /// `i^k` for any integer `k`.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Self::from_int(1),
            1 => Self::i(),
            2 => Self::from_int(-1),
            _ => -Self::i(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(ratio_to_f64(&self.re), ratio_to_f64(&self.im))
    }
}

fn ratio_to_f64(r: &BigRational) -> f64 {
    // Both parts fit comfortably in f64 for every coefficient this crate produces;
    // fall back to a scaled division when they do not.
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            let bits = r.numer().bits().max(r.denom().bits()) as i64 - 900;
            let shift = bits.max(0) as usize;
            let n = (r.numer() >> shift).to_f64().unwrap_or(0.0);
            let d = (r.denom() >> shift).to_f64().unwrap_or(1.0);
            n / d
        }
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: Self) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: Self) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: Self) -> GaussianRational {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussianRational::new(&self.re * &rhs.re, BigRational::zero());
        }
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(f, "({} {} {}i)", self.re, sign, self.im.abs())
            }
        }
    }
}

/// Exact scalar `num(s) / (1 - s^4)^den` with `s^2 = q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentScalar {
    num: BTreeMap<i32, GaussianRational>,
    den: u32,
}

impl Default for LaurentScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl LaurentScalar {
    pub fn zero() -> Self {
        Self {
            num: BTreeMap::new(),
            den: 0,
        }
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(GaussianRational::from_int(n))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::constant(GaussianRational::from_ratio(num, den))
    }

    pub fn i() -> Self {
        Self::constant(GaussianRational::i())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * s^exp`.
    pub fn monomial(c: GaussianRational, exp: i32) -> Self {
        let mut num = BTreeMap::new();
        if !c.is_zero() {
            num.insert(exp, c);
        }
        Self { num, den: 0 }
    }

    /// `s^exp = q^{exp/2}`.
    pub fn s_pow(exp: i32) -> Self {
        Self::monomial(GaussianRational::one(), exp)
    }

    /// `q^k`.
    pub fn q_pow(k: i32) -> Self {
        Self::s_pow(2 * k)
    }

    /// `1 / (1 - q^2)`.
    pub fn inv_one_minus_q2() -> Self {
        Self {
            num: Self::one().num,
            den: 1,
        }
    }

    /// `1 / (q - q^{-1}) = -q / (1 - q^2)`.
    pub fn inv_q_minus_qinv() -> Self {
        Self {
            num: (-Self::q_pow(1)).num,
            den: 1,
        }
    }

    /// Builds `sum c_k q^k` from `(k, c_k)` integer pairs.
    pub fn q_poly(terms: &[(i32, i64)]) -> Self {
        let mut out = Self::zero();
        for &(k, c) in terms {
            out += &Self::monomial(GaussianRational::from_int(c), 2 * k);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Numerator coefficients keyed by exponent of `s`.
    pub fn numerator(&self) -> &BTreeMap<i32, GaussianRational> {
        &self.num
    }

    /// Power of `(1 - q^2)` in the denominator.
    pub fn denominator_power(&self) -> u32 {
        self.den
    }

    /// Coefficient of `s^exp` when the denominator is trivial.
    pub fn coeff(&self, exp: i32) -> GaussianRational {
        self.num
            .get(&exp)
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    /// Complex conjugation of coefficients; `s` is real and stays fixed.
    pub fn conj(&self) -> Self {
        Self {
            num: self.num.iter().map(|(e, c)| (*e, c.conj())).collect(),
            den: self.den,
        }
    }

    /// Substitutes `s = sqrt(q)`.
    pub fn eval(&self, q: f64) -> Result<Complex64> {
        check_q(q)?;
        Ok(self.eval_unchecked(q))
    }

    pub(crate) fn eval_unchecked(&self, q: f64) -> Complex64 {
        let s = q.sqrt();
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in &self.num {
            acc += c.to_complex() * s.powi(*e);
        }
        if self.den > 0 {
            acc /= (1.0 - q * q).powi(self.den as i32);
        }
        acc
    }

    fn mul_num(
        a: &BTreeMap<i32, GaussianRational>,
        b: &BTreeMap<i32, GaussianRational>,
    ) -> BTreeMap<i32, GaussianRational> {
        let mut out: BTreeMap<i32, GaussianRational> = BTreeMap::new();
        for (ea, ca) in a {
            for (eb, cb) in b {
                let prod = ca * cb;
                add_coeff(&mut out, ea + eb, prod);
            }
        }
        out
    }

    /// Multiplies a numerator by `(1 - s^4)^k`.
    fn raise(num: &BTreeMap<i32, GaussianRational>, k: u32) -> BTreeMap<i32, GaussianRational> {
        let mut out = num.clone();
        for _ in 0..k {
            let mut next = out.clone();
            for (e, c) in &out {
                add_coeff(&mut next, e + 4, -c.clone());
            }
            out = next;
        }
        out
    }

    /// Exact division of a numerator by `1 - s^4`, if it divides.
    fn divide_once(
        num: &BTreeMap<i32, GaussianRational>,
    ) -> Option<BTreeMap<i32, GaussianRational>> {
        let (&lo, _) = num.iter().next()?;
        let (&hi, _) = num.iter().next_back()?;
        if hi - lo < 4 {
            return None;
        }
        let mut rem = num.clone();
        let mut quot = BTreeMap::new();
        for e in lo..=hi - 4 {
            if let Some(c) = rem.remove(&e) {
                add_coeff(&mut rem, e + 4, c.clone());
                quot.insert(e, c);
            }
        }
        if rem.is_empty() {
            Some(quot)
        } else {
            None
        }
    }

    fn reduced(mut num: BTreeMap<i32, GaussianRational>, mut den: u32) -> Self {
        if num.is_empty() {
            return Self::zero();
        }
        while den > 0 {
            match Self::divide_once(&num) {
                Some(q) => {
                    num = q;
                    den -= 1;
                }
                None => break,
            }
        }
        Self { num, den }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }
}

fn add_coeff(map: &mut BTreeMap<i32, GaussianRational>, e: i32, c: GaussianRational) {
    if c.is_zero() {
        return;
    }
    match map.get_mut(&e) {
        Some(slot) => {
            let sum = &*slot + &c;
            if sum.is_zero() {
                map.remove(&e);
            } else {
                *slot = sum;
            }
        }
        None => {
            map.insert(e, c);
        }
    }
}

impl Add for &LaurentScalar {
    type Output = LaurentScalar;
    fn add(self, rhs: Self) -> LaurentScalar {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        let den = self.den.max(rhs.den);
        let mut num = LaurentScalar::raise(&self.num, den - self.den);
        for (e, c) in LaurentScalar::raise(&rhs.num, den - rhs.den) {
            add_coeff(&mut num, e, c);
        }
        if den == 0 {
            return LaurentScalar { num, den };
        }
        LaurentScalar::reduced(num, den)
    }
}

impl Add for LaurentScalar {
    type Output = LaurentScalar;
    fn add(self, rhs: Self) -> LaurentScalar {
        &self + &rhs
    }
}

impl AddAssign<&LaurentScalar> for LaurentScalar {
    fn add_assign(&mut self, rhs: &LaurentScalar) {
        if self.den == 0 && rhs.den == 0 {
            for (e, c) in &rhs.num {
                add_coeff(&mut self.num, *e, c.clone());
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

impl Sub for &LaurentScalar {
    type Output = LaurentScalar;
    fn sub(self, rhs: Self) -> LaurentScalar {
        self + &(-rhs.clone())
    }
}

impl Sub for LaurentScalar {
    type Output = LaurentScalar;
    fn sub(self, rhs: Self) -> LaurentScalar {
        &self - &rhs
    }
}

impl Mul for &LaurentScalar {
    type Output = LaurentScalar;
    fn mul(self, rhs: Self) -> LaurentScalar {
        if self.is_zero() || rhs.is_zero() {
            return LaurentScalar::zero();
        }
        let num = LaurentScalar::mul_num(&self.num, &rhs.num);
        let den = self.den + rhs.den;
        if den == 0 || num.len() < 2 {
            return LaurentScalar { num, den };
        }
        LaurentScalar::reduced(num, den)
    }
}

impl Mul for LaurentScalar {
    type Output = LaurentScalar;
    fn mul(self, rhs: Self) -> LaurentScalar {
        &self * &rhs
    }
}

impl Neg for LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        LaurentScalar {
            num: self.num.into_iter().map(|(e, c)| (e, -c)).collect(),
            den: self.den,
        }
    }
}

impl Neg for &LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        -self.clone()
    }
}

impl From<i64> for LaurentScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl fmt::Display for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (e, c) in self.num.iter().rev() {
            let power = match *e {
                0 => String::new(),
                e if e % 2 == 0 => format!("q^{}", e / 2),
                e => format!("q^({}/2)", e),
            };
            let coeff = c.to_string();
            parts.push(match (power.is_empty(), coeff.as_str()) {
                (true, _) => coeff,
                (false, "1") => power,
                (false, "-1") => format!("-{power}"),
                (false, _) => format!("{coeff}*{power}"),
            });
        }
        let body = parts.join(" + ").replace("+ -", "- ");
        match self.den {
            0 => write!(f, "{body}"),
            1 => write!(f, "({body})/(1 - q^2)"),
            d => write!(f, "({body})/(1 - q^2)^{d}"),
        }
    }
}

/// Rejects `q` outside the open unit interval.
pub fn check_q(q: f64) -> Result<()> {
    if q > 0.0 && q < 1.0 {
        Ok(())
    } else {
        Err(Error::QOutOfRange(q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> LaurentScalar {
        LaurentScalar::q_pow(1)
    }

    #[test]
    fn additive_inverse_cancels() {
        let s2 = LaurentScalar::s_pow(2);
        assert!((&s2 + &(-s2.clone())).is_zero());
    }

    #[test]
    fn doubling_q() {
        let two_q = &q() + &q();
        assert_eq!(two_q.coeff(2), GaussianRational::from_int(2));
        assert_eq!(two_q.numerator().len(), 1);
    }

    #[test]
    fn one_minus_q4_plus_q4() {
        let a = LaurentScalar::q_poly(&[(0, 1), (4, -1)]);
        assert!((&a + &LaurentScalar::q_pow(4)).is_one());
    }

    #[test]
    fn products() {
        assert!((&LaurentScalar::s_pow(2) * &LaurentScalar::s_pow(-2)).is_one());
        let lhs = &q() * &LaurentScalar::q_poly(&[(2, 1), (-2, -1)]);
        assert_eq!(lhs, LaurentScalar::q_poly(&[(3, 1), (-1, -1)]));
        assert_eq!(
            &LaurentScalar::i() * &LaurentScalar::i(),
            LaurentScalar::from_int(-1)
        );
    }

    #[test]
    fn conjugation() {
        let is = &LaurentScalar::i() * &LaurentScalar::s_pow(1);
        assert_eq!(is.conj(), -is.clone());
        assert_eq!(LaurentScalar::q_pow(-1).conj(), LaurentScalar::q_pow(-1));
        let one_plus_i = &LaurentScalar::one() + &LaurentScalar::i();
        let one_minus_i = &LaurentScalar::one() - &LaurentScalar::i();
        assert_eq!(
            (&one_plus_i * &LaurentScalar::q_pow(2)).conj(),
            &one_minus_i * &LaurentScalar::q_pow(2)
        );
    }

    #[test]
    fn evaluation() {
        let e = &q() * &LaurentScalar::q_poly(&[(2, 1), (-2, -1)]);
        assert!((e.eval(0.5).unwrap().re - (-1.875)).abs() < 1e-15);
        let e = LaurentScalar::q_poly(&[(0, 1), (4, -1)]);
        assert!((e.eval(0.5).unwrap().re - 0.9375).abs() < 1e-15);
        assert!((LaurentScalar::s_pow(1).eval(0.25).unwrap().re - 0.5).abs() < 1e-15);
        assert!(matches!(q().eval(1.0), Err(Error::QOutOfRange(_))));
        assert!(q().eval(0.0).is_err());
    }

    #[test]
    fn localization_cancels() {
        // (q - q^{-1}) * 1/(q - q^{-1}) = 1, with the denominator reduced away.
        let d = LaurentScalar::q_poly(&[(1, 1), (-1, -1)]);
        let prod = &d * &LaurentScalar::inv_q_minus_qinv();
        assert!(prod.is_one());
        assert_eq!(prod.denominator_power(), 0);
        // [2]_q = (q^2 - q^{-2}) / (q - q^{-1}) = q + q^{-1}
        let q2 = LaurentScalar::q_poly(&[(2, 1), (-2, -1)]);
        assert_eq!(
            &q2 * &LaurentScalar::inv_q_minus_qinv(),
            LaurentScalar::q_poly(&[(1, 1), (-1, 1)])
        );
        let half = &LaurentScalar::inv_q_minus_qinv() + &LaurentScalar::one();
        assert_eq!(half.denominator_power(), 1);
        assert!((half.eval(0.5).unwrap().re - (1.0 / (0.5 - 2.0) + 1.0)).abs() < 1e-14);
    }
}
