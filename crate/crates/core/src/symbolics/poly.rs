use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{pow, Coefficient};

/// Number of variables a monomial can carry (the maximal rank in scope).
pub const MAX_VARS: usize = 8;

/// Exponent vector over `a1..a8`, ordered graded-lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial([u16; MAX_VARS]);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn var(i: usize) -> Monomial {
        let mut e = [0; MAX_VARS];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exponents(exps: &[u16]) -> Monomial {
        let mut e = [0; MAX_VARS];
        e[..exps.len()].copy_from_slice(exps);
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u16; MAX_VARS] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a += b;
        }
        Monomial(e)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    fn div(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a -= b;
        }
        Monomial(e)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// Sparse multivariate polynomial with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<C> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coefficient> Default for Poly<C> {
    fn default() -> Self {
        Poly::zero()
    }
}

impl<C: Coefficient> Poly<C> {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Poly::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        let mut p = Poly::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn var(i: usize) -> Self {
        let mut p = Poly::zero();
        p.add_term(Monomial::var(i - 1), C::one());
        p
    }

    /// `Σ c_i a_i`.
    pub fn linear(coeffs: &[i64]) -> Self {
        let mut p = Poly::zero();
        for (i, &c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(i), C::from_i64(c));
        }
        p
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

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v = v.clone() + c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, c.clone() * k.clone()))
                .collect(),
        }
    }

    /// Coefficientwise quotient by `k`; exact when `k` divides every coefficient.
    pub fn div_scalar(&self, k: &C) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, c.clone() / k.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        out
    }

    /// Multiplication by the linear form `Σ c_i a_i`.
    pub fn mul_linear(&self, coeffs: &[i64]) -> Self {
        let mut out = Poly::zero();
        for (i, &k) in coeffs.iter().enumerate() {
            if k == 0 {
                continue;
            }
            let v = Monomial::var(i);
            let kc = C::from_i64(k);
            for (m, c) in &self.terms {
                out.add_term(m.mul(&v), c.clone() * kc.clone());
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Poly::one(), |acc, _| acc.mul(self))
    }

    /// Exact quotient by a divisor, or `None` when the division leaves a remainder.
    ///
    /// Works over any coefficient ring as long as the divisor's leading
    /// coefficient divides the leading coefficient of each intermediate
    /// remainder; this holds for primitive divisors over the integers.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (lm, lc) = divisor.leading_term()?;
        let (lm, lc) = (*lm, lc.clone());
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((m, c)) = rem.leading_term() {
            if !lm.divides(m) {
                return None;
            }
            let (m, c) = (*m, c.clone());
            if !(c.clone() % lc.clone()).is_zero() {
                return None;
            }
            let qm = m.div(&lm);
            let qc = c / lc.clone();
            for (dm, dc) in &divisor.terms {
                rem.add_term(dm.mul(&qm), -(dc.clone() * qc.clone()));
            }
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Exact quotient by the linear form `Σ c_i a_i`.
    pub fn div_linear(&self, coeffs: &[i64]) -> Option<Self> {
        self.div_exact(&Poly::linear(coeffs))
    }

    pub fn evaluate(&self, point: &[C]) -> C {
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.0.iter()) {
                if e > 0 {
                    t = t * pow(x, e as u32);
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Substitutes `a_i -> 1` for every variable.
    pub fn sum_of_coefficients(&self) -> C {
        self.terms.values().fold(C::zero(), |a, c| a + c.clone())
    }

    /// Parses the textual format produced by `Display`.
    pub fn parse(s: &str) -> Result<Self>
    where
        C: std::str::FromStr,
    {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = Poly::zero();
        if t == "0" {
            return Ok(p);
        }
        for term in t.split('+') {
            let mut parts = term.split('*');
            let head = parts.next().unwrap_or("");
            let (coeff, first_var) = if head.starts_with('a') || head.starts_with("-a") {
                let (sign, rest) = match head.strip_prefix('-') {
                    Some(r) => (-C::one(), r),
                    None => (C::one(), head),
                };
                (sign, Some(rest))
            } else {
                let c = head
                    .parse::<C>()
                    .map_err(|_| Error::Parse(format!("bad coefficient {head:?} in {s:?}")))?;
                (c, None)
            };
            let mut exps = [0u16; MAX_VARS];
            for v in first_var.into_iter().chain(parts) {
                let body = v
                    .strip_prefix('a')
                    .ok_or_else(|| Error::Parse(format!("bad factor {v:?} in {s:?}")))?;
                let (idx, e) = match body.split_once('^') {
                    Some((i, e)) => (i, e),
                    None => (body, "1"),
                };
                let i: usize = idx
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad variable {v:?} in {s:?}")))?;
                let e: u16 = e
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent {v:?} in {s:?}")))?;
                if i == 0 || i > MAX_VARS {
                    return Err(Error::Parse(format!("variable {v:?} out of range")));
                }
                exps[i - 1] += e;
            }
            p.add_term(Monomial(exps), coeff);
        }
        Ok(p)
    }
}

/// Terms `c*a1^e1*…*an^en` joined by `+`, highest graded-lex term first.
/// Variables with exponent zero are omitted; the zero polynomial prints as `0`.
impl<C: Coefficient> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                f.write_str("+")?;
            }
            write!(f, "{c}")?;
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    write!(f, "*a{}^{}", i + 1, e)?;
                }
            }
        }
        Ok(())
    }
}
