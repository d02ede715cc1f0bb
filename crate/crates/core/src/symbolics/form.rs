use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rootsys::{write_linear_combination, Root};
use crate::scalar::Coefficient;

use super::poly::Poly;

/// A nonzero linear form `Σ c_i α_i` with `c_i ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm(Vec<i64>);

impl LinearForm {
    pub fn new(coeffs: Vec<i64>) -> Result<LinearForm> {
        if coeffs.iter().any(|&c| c < 0) || coeffs.iter().all(|&c| c == 0) {
            return Err(Error::Range(format!(
                "linear form {coeffs:?} must be nonnegative and nonzero"
            )));
        }
        Ok(LinearForm(coeffs))
    }

    pub fn simple(rank: usize, i: usize) -> LinearForm {
        LinearForm(Root::simple(rank, i).0)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    /// `(g, f)` with `self = g·f` and the coefficients of `f` coprime.
    pub fn primitive(&self) -> (i64, LinearForm) {
        let g = self.0.iter().fold(0i64, |acc, &c| num_integer::gcd(acc, c));
        (g, LinearForm(self.0.iter().map(|c| c / g).collect()))
    }

    pub fn is_primitive(&self) -> bool {
        self.primitive().0 == 1
    }

    pub fn to_root(&self) -> Root {
        Root(self.0.clone())
    }

    /// The form as a degree-one polynomial.
    pub fn to_poly<C: Coefficient>(&self) -> Poly<C> {
        Poly::linear(&self.0)
    }

    pub fn evaluate<C: Coefficient>(&self, point: &[C]) -> C {
        self.0
            .iter()
            .zip(point)
            .fold(C::zero(), |acc, (&c, x)| acc + C::from_i64(c) * x.clone())
    }

    /// Parses `a1+a2+2*a3+a4` (also `2a3`, spaces and the array form `[1,1,2,1]`).
    pub fn parse(s: &str, rank: usize) -> Result<LinearForm> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.starts_with('[') {
            let v: Vec<i64> =
                serde_json::from_str(&t).map_err(|e| Error::Parse(format!("{t:?}: {e}")))?;
            if v.len() != rank {
                return Err(Error::Parse(format!(
                    "{t:?} does not have {rank} coordinates"
                )));
            }
            return LinearForm::new(v);
        }
        let t = t.trim_start_matches('(').trim_end_matches(')');
        let mut coeffs = vec![0i64; rank];
        for term in t.split('+') {
            let (c, var) = match term.find('a') {
                Some(pos) => (&term[..pos], &term[pos + 1..]),
                None => return Err(Error::Parse(format!("bad term {term:?} in {s:?}"))),
            };
            let c = c.trim_end_matches('*');
            let c: i64 = if c.is_empty() {
                1
            } else {
                c.parse()
                    .map_err(|_| Error::Parse(format!("bad coefficient {c:?} in {s:?}")))?
            };
            let i: usize = var
                .parse()
                .map_err(|_| Error::Parse(format!("bad variable a{var} in {s:?}")))?;
            if i == 0 || i > rank {
                return Err(Error::Parse(format!("variable a{i} out of range in {s:?}")));
            }
            coeffs[i - 1] += c;
        }
        LinearForm::new(coeffs)
    }
}

impl TryFrom<&Root> for LinearForm {
    type Error = Error;
    fn try_from(r: &Root) -> Result<LinearForm> {
        LinearForm::new(r.0.clone())
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_linear_combination(f, &self.0)
    }
}

/// A finite multiset of linear forms, read as their product.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FormProduct {
    factors: BTreeMap<LinearForm, u32>,
}

impl FormProduct {
    pub fn one() -> FormProduct {
        FormProduct::default()
    }

    pub fn from_form(f: LinearForm) -> FormProduct {
        let mut p = FormProduct::one();
        p.insert(f, 1);
        p
    }

    pub fn from_forms<I: IntoIterator<Item = LinearForm>>(forms: I) -> FormProduct {
        let mut p = FormProduct::one();
        for f in forms {
            p.insert(f, 1);
        }
        p
    }

    /// Product of positive roots. Panics on a non-positive vector.
    pub fn from_roots<'a, I: IntoIterator<Item = &'a Root>>(roots: I) -> FormProduct {
        FormProduct::from_forms(
            roots
                .into_iter()
                .map(|r| LinearForm::try_from(r).expect("positive root")),
        )
    }

    pub fn insert(&mut self, f: LinearForm, mult: u32) {
        if mult > 0 {
            *self.factors.entry(f).or_insert(0) += mult;
        }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.factors.values().sum()
    }

    pub fn factors(&self) -> &BTreeMap<LinearForm, u32> {
        &self.factors
    }

    pub fn iter(&self) -> impl Iterator<Item = (&LinearForm, u32)> {
        self.factors.iter().map(|(f, &m)| (f, m))
    }

    /// `(β ; P)`.
    pub fn multiplicity(&self, beta: &LinearForm) -> u32 {
        self.factors.get(beta).copied().unwrap_or(0)
    }

    pub fn mul(&self, other: &FormProduct) -> FormProduct {
        let mut out = self.clone();
        for (f, &m) in &other.factors {
            out.insert(f.clone(), m);
        }
        out
    }

    pub fn mul_form(&self, f: &LinearForm) -> FormProduct {
        let mut out = self.clone();
        out.insert(f.clone(), 1);
        out
    }

    pub fn divides(&self, other: &FormProduct) -> bool {
        self.factors
            .iter()
            .all(|(f, &m)| other.multiplicity(f) >= m)
    }

    /// Exact multiset difference `self / q`.
    pub fn divide_exact(&self, q: &FormProduct) -> Result<FormProduct> {
        if !q.divides(self) {
            return Err(Error::NotDivisible {
                numerator: self.to_string(),
                divisor: q.to_string(),
            });
        }
        let mut out = self.clone();
        for (f, &m) in &q.factors {
            let e = out.factors.get_mut(f).expect("checked above");
            *e -= m;
            if *e == 0 {
                out.factors.remove(f);
            }
        }
        Ok(out)
    }

    /// Componentwise maximum of multiplicities.
    pub fn lcm(&self, other: &FormProduct) -> FormProduct {
        let mut out = self.clone();
        for (f, &m) in &other.factors {
            let e = out.factors.entry(f.clone()).or_insert(0);
            *e = (*e).max(m);
        }
        out
    }

    /// Componentwise minimum of multiplicities.
    pub fn gcd(&self, other: &FormProduct) -> FormProduct {
        let mut out = FormProduct::one();
        for (f, &m) in &self.factors {
            out.insert(f.clone(), m.min(other.multiplicity(f)));
        }
        out
    }

    /// `(c, q)` with `self = c·q` and every factor of `q` primitive.
    pub fn primitive_split(&self) -> (num_bigint::BigInt, FormProduct) {
        let mut content = num_bigint::BigInt::from(1);
        let mut q = FormProduct::one();
        for (f, &m) in &self.factors {
            let (g, pf) = f.primitive();
            content *= num_bigint::BigInt::from(g).pow(m);
            q.insert(pf, m);
        }
        (content, q)
    }

    pub fn expand<C: Coefficient>(&self) -> Poly<C> {
        let mut p = Poly::one();
        for (f, &m) in &self.factors {
            for _ in 0..m {
                p = p.mul_linear(f.coeffs());
            }
        }
        p
    }

    pub fn evaluate<C: Coefficient>(&self, point: &[C]) -> C {
        self.factors.iter().fold(C::one(), |acc, (f, &m)| {
            acc * crate::scalar::pow(&f.evaluate(point), m)
        })
    }

    /// `[["a1",1],["a1+a2",1]]` rows.
    pub fn to_rows(&self) -> Vec<(String, u32)> {
        self.factors
            .iter()
            .map(|(f, &m)| (f.to_string(), m))
            .collect()
    }

    pub fn from_rows(rows: &[(String, u32)], rank: usize) -> Result<FormProduct> {
        let mut p = FormProduct::one();
        for (s, m) in rows {
            p.insert(LinearForm::parse(s, rank)?, *m);
        }
        Ok(p)
    }

    /// Parses `(a1)^2*(a1+a3)`, `a1*(a1+a3)` or `1`.
    pub fn parse(s: &str, rank: usize) -> Result<FormProduct> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t == "1" || t.is_empty() {
            return Ok(FormProduct::one());
        }
        let mut p = FormProduct::one();
        let mut depth = 0i32;
        let mut start = 0usize;
        let bytes = t.as_bytes();
        let mut pieces = Vec::new();
        for (i, &b) in bytes.iter().enumerate() {
            match b {
                b'(' => depth += 1,
                b')' => depth -= 1,
                b'*' if depth == 0 => {
                    pieces.push(&t[start..i]);
                    start = i + 1;
                }
                _ => {}
            }
        }
        pieces.push(&t[start..]);
        for piece in pieces {
            let (base, exp) = match piece.rfind(")^") {
                Some(pos) => (&piece[..=pos], &piece[pos + 2..]),
                None => match piece.rfind('^') {
                    Some(pos) if !piece.contains('(') => (&piece[..pos], &piece[pos + 1..]),
                    _ => (piece, "1"),
                },
            };
            let m: u32 = exp
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent {exp:?} in {s:?}")))?;
            let body = base
                .strip_prefix('(')
                .and_then(|b| b.strip_suffix(')'))
                .unwrap_or(base);
            p.insert(LinearForm::parse(body, rank)?, m);
        }
        Ok(p)
    }
}

/// `(a1)^2*(a1+a3)`, or `1` for the empty product.
impl fmt::Display for FormProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (k, (form, &m)) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "({form})")?;
            if m != 1 {
                write!(f, "^{m}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for FormProduct {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

/// Serialized form of a [`FormProduct`] before the rank is known.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FormRows(pub Vec<(String, u32)>);

impl FormRows {
    pub fn resolve(&self, rank: usize) -> Result<FormProduct> {
        FormProduct::from_rows(&self.0, rank)
    }
}
