use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::HomflyError;

/// An integer Laurent polynomial in `x` and `z`, stored sparsely by
/// `(x exponent, z exponent)`. Zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly2 {
    terms: BTreeMap<(i32, i32), i64>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    /// `c · x^xe · z^ze`
    pub fn monomial(c: i64, xe: i32, ze: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(c, xe, ze);
        p
    }

    pub fn add_term(&mut self, c: i64, xe: i32, ze: i32) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry((xe, ze)).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&(xe, ze));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, xe: i32, ze: i32) -> i64 {
        self.terms.get(&(xe, ze)).copied().unwrap_or(0)
    }

    /// `(x exponent, z exponent, coefficient)` in the canonical print order:
    /// by `z` exponent, then `x` exponent.
    pub fn terms(&self) -> Vec<(i32, i32, i64)> {
        let mut v: Vec<(i32, i32, i64)> = self
            .terms
            .iter()
            .map(|(&(xe, ze), &c)| (xe, ze, c))
            .collect();
        v.sort_by_key(|&(xe, ze, _)| (ze, xe));
        v
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut out = Self::zero();
        for (&(xe, ze), &v) in &self.terms {
            out.add_term(v * c, xe, ze);
        }
        out
    }

    /// Multiplies by the monomial `c · x^xe · z^ze`.
    pub fn shift(&self, c: i64, xe: i32, ze: i32) -> Self {
        let mut out = Self::zero();
        for (&(a, b), &v) in &self.terms {
            out.add_term(v * c, a + xe, b + ze);
        }
        out
    }

    /// Substitutes `z = 0`. Fails if a negative power of `z` is present.
    pub fn eval_z0(&self) -> Result<LaurentPoly1, HomflyError> {
        let mut out = LaurentPoly1::zero();
        for (&(xe, ze), &c) in &self.terms {
            if ze < 0 {
                return Err(HomflyError::NegativeZPower(ze));
            }
            if ze == 0 {
                out.add_term(c, xe);
            }
        }
        Ok(out)
    }

    /// Substitutes `z = 2i`. Fails if a negative power of `z` is present.
    pub fn eval_z2i(&self) -> Result<GaussLaurentPoly, HomflyError> {
        let mut out = GaussLaurentPoly::zero();
        for (&(xe, ze), &c) in &self.terms {
            if ze < 0 {
                return Err(HomflyError::NegativeZPower(ze));
            }
            // (2i)^ze
            let mag = c * 2i64.pow(ze as u32);
            let (re, im) = match ze % 4 {
                0 => (mag, 0),
                1 => (0, mag),
                2 => (-mag, 0),
                _ => (0, -mag),
            };
            out.add_term(re, im, xe);
        }
        Ok(out)
    }

    /// True when every `z` exponent is even.
    pub fn z_parity_even(&self) -> bool {
        self.terms.keys().all(|&(_, ze)| ze % 2 == 0)
    }
}

impl Add for &LaurentPoly2 {
    type Output = LaurentPoly2;

    fn add(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        for (&(xe, ze), &c) in &rhs.terms {
            out.add_term(c, xe, ze);
        }
        out
    }
}

impl Sub for &LaurentPoly2 {
    type Output = LaurentPoly2;

    fn sub(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        for (&(xe, ze), &c) in &rhs.terms {
            out.add_term(-c, xe, ze);
        }
        out
    }
}

impl Mul for &LaurentPoly2 {
    type Output = LaurentPoly2;

    fn mul(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = LaurentPoly2::zero();
        for (&(a, b), &c) in &self.terms {
            for (&(d, e), &f) in &rhs.terms {
                out.add_term(c * f, a + d, b + e);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly2 {
    type Output = LaurentPoly2;

    fn neg(self) -> LaurentPoly2 {
        self.scale(-1)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, c: &str, vars: &[(&str, i32)]) -> fmt::Result {
    write!(f, "{c}")?;
    for &(v, e) in vars {
        if e != 0 {
            write!(f, "*{v}^{e}")?;
        }
    }
    Ok(())
}

/// Sorted monomials joined by `" + "`, e.g. `-1*x^-4 + 2*x^-2 + 1*x^-2*z^2`.
impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (xe, ze, c)) in self.terms().into_iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write_monomial(f, &c.to_string(), &[("x", xe), ("z", ze)])?;
        }
        Ok(())
    }
}

fn parse_monomial(tok: &str) -> Result<(i64, i32, i32), HomflyError> {
    let bad = || HomflyError::Parse(format!("bad monomial {tok:?}"));
    let mut parts = tok.split('*');
    let c = parts
        .next()
        .ok_or_else(bad)?
        .trim()
        .parse::<i64>()
        .map_err(|_| bad())?;
    let (mut xe, mut ze) = (0, 0);
    for p in parts {
        let (v, e) = p.trim().split_once('^').unwrap_or((p.trim(), "1"));
        let e = e.parse::<i32>().map_err(|_| bad())?;
        match v {
            "x" => xe += e,
            "z" => ze += e,
            _ => return Err(bad()),
        }
    }
    Ok((c, xe, ze))
}

impl FromStr for LaurentPoly2 {
    type Err = HomflyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = LaurentPoly2::zero();
        if s.trim() == "0" {
            return Ok(p);
        }
        for tok in s.split(" + ") {
            let (c, xe, ze) = parse_monomial(tok)?;
            p.add_term(c, xe, ze);
        }
        Ok(p)
    }
}

impl Serialize for LaurentPoly2 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for LaurentPoly2 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// An integer Laurent polynomial in `x`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly1 {
    terms: BTreeMap<i32, i64>,
}

impl LaurentPoly1 {
    pub fn zero() -> Self {
        Self::default()
    }

    /// From `(exponent, coefficient)` pairs.
    pub fn from_terms(terms: &[(i32, i64)]) -> Self {
        let mut p = Self::zero();
        for &(e, c) in terms {
            p.add_term(c, e);
        }
        p
    }

    pub fn add_term(&mut self, c: i64, e: i32) {
        if c == 0 {
            return;
        }
        let v = self.terms.entry(e).or_insert(0);
        *v += c;
        if *v == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn coefficient(&self, e: i32) -> i64 {
        self.terms.get(&e).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> Vec<(i32, i64)> {
        self.terms.iter().map(|(&e, &c)| (e, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for LaurentPoly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, &c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write_monomial(f, &c.to_string(), &[("x", e)])?;
        }
        Ok(())
    }
}

impl Serialize for LaurentPoly1 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A Laurent polynomial in `x` with Gaussian-integer coefficients, the value
/// of a HOMFLY polynomial at `z = 2i`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct GaussLaurentPoly {
    terms: BTreeMap<i32, (i64, i64)>,
}

impl GaussLaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Real polynomial from `(exponent, coefficient)` pairs.
    pub fn from_real_terms(terms: &[(i32, i64)]) -> Self {
        let mut p = Self::zero();
        for &(e, c) in terms {
            p.add_term(c, 0, e);
        }
        p
    }

    /// Adds `(re + im·i) · x^e`.
    pub fn add_term(&mut self, re: i64, im: i64, e: i32) {
        let v = self.terms.entry(e).or_insert((0, 0));
        v.0 += re;
        v.1 += im;
        if *v == (0, 0) {
            self.terms.remove(&e);
        }
    }

    pub fn coefficient(&self, e: i32) -> (i64, i64) {
        self.terms.get(&e).copied().unwrap_or((0, 0))
    }

    pub fn terms(&self) -> Vec<(i32, (i64, i64))> {
        self.terms.iter().map(|(&e, &c)| (e, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(|&(_, im)| im == 0)
    }
}

impl fmt::Display for GaussLaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, &(re, im))) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let c = match (re, im) {
                (re, 0) => re.to_string(),
                (0, im) => format!("{im}i"),
                (re, im) => format!("({re}{im:+}i)"),
            };
            write_monomial(f, &c, &[("x", e)])?;
        }
        Ok(())
    }
}

impl Serialize for GaussLaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
