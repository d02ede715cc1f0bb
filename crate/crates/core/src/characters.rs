//! Graded characters, the quantum shuffle product and the evaluation map
//! from characters to sums of reciprocals of linear-form products.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem};
use crate::scalar::Coefficient;
use crate::symbolics::{FormProduct, LinearForm, RationalSum};
use crate::weylwords::{classify, reduced_words, WeylElement, Word};

/// Laurent polynomial in `q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentQ<C> {
    coeffs: BTreeMap<i64, C>,
}

impl<C: Coefficient> Default for LaurentQ<C> {
    fn default() -> Self {
        LaurentQ::zero()
    }
}

impl<C: Coefficient> LaurentQ<C> {
    pub fn zero() -> Self {
        LaurentQ {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        LaurentQ::monomial(0, C::one())
    }

    /// `c q^e`.
    pub fn monomial(e: i64, c: C) -> Self {
        let mut l = LaurentQ::zero();
        l.add_term(e, c);
        l
    }

    /// `q + q⁻¹`.
    pub fn q_plus_q_inverse() -> Self {
        let mut l = LaurentQ::monomial(1, C::one());
        l.add_term(-1, C::one());
        l
    }

    pub fn add_term(&mut self, e: i64, c: C) {
        if c.is_zero() {
            return;
        }
        let v = self.coeffs.entry(e).or_insert_with(C::zero);
        *v = v.clone() + c;
        if v.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &other.coeffs {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = LaurentQ::zero();
        for (&e1, c1) in &self.coeffs {
            for (&e2, c2) in &other.coeffs {
                out.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        out
    }

    /// Multiplication by `q^s`.
    pub fn shift(&self, s: i64) -> Self {
        LaurentQ {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, c)| (e + s, c.clone()))
                .collect(),
        }
    }

    /// Value at `q = 1`.
    pub fn at_one(&self) -> C {
        self.coeffs.values().fold(C::zero(), |a, c| a + c.clone())
    }

    /// Bar involution `q -> q⁻¹`.
    pub fn bar(&self) -> Self {
        LaurentQ {
            coeffs: self.coeffs.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }
}

impl LaurentQ<BigInt> {
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| c > &BigInt::zero())
    }
}

impl<C: Coefficient> fmt::Display for LaurentQ<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (k, (&e, c)) in self.coeffs.iter().enumerate() {
            if k > 0 {
                f.write_str("+")?;
            }
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*q")?,
                _ => write!(f, "{c}*q^{e}")?,
            }
        }
        Ok(())
    }
}

/// `ch_q(M) = Σ dim_q(e(j) M) j` for a module of weight `weight`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedCharacter {
    pub weight: Root,
    pub entries: BTreeMap<Word, LaurentQ<BigInt>>,
}

impl GradedCharacter {
    pub fn empty(weight: Root) -> Self {
        GradedCharacter {
            weight,
            entries: BTreeMap::new(),
        }
    }

    /// The character `1 · word`.
    pub fn word(rank: usize, word: Word) -> Self {
        let mut c = GradedCharacter::empty(word.weight(rank));
        c.entries.insert(word, LaurentQ::one());
        c
    }

    /// The character of the one-dimensional module in weight `α_i`.
    pub fn letter(rank: usize, i: usize) -> Self {
        GradedCharacter::word(rank, Word::new(vec![i as u8]))
    }

    pub fn rank(&self) -> usize {
        self.weight.rank()
    }

    pub fn add_entry(&mut self, word: Word, value: LaurentQ<BigInt>) -> Result<()> {
        if word.weight(self.rank()) != self.weight {
            return Err(Error::Range(format!(
                "word {word} does not have weight {}",
                self.weight
            )));
        }
        let slot = self.entries.entry(word.clone()).or_default();
        *slot = slot.add(&value);
        if slot.is_zero() {
            self.entries.remove(&word);
        }
        Ok(())
    }

    /// Total dimension at `q = 1`.
    pub fn dimension(&self) -> BigInt {
        self.entries.values().map(LaurentQ::at_one).sum()
    }

    /// Specialization `q -> 1`, entrywise.
    pub fn at_one(&self) -> BTreeMap<Word, BigInt> {
        self.entries
            .iter()
            .map(|(w, l)| (w.clone(), l.at_one()))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    /// Checks the stored invariants: weights match and coefficients are nonnegative.
    pub fn validate(&self) -> Result<()> {
        for (w, l) in &self.entries {
            if w.weight(self.rank()) != self.weight {
                return Err(Error::Range(format!("word {w} has the wrong weight")));
            }
            if !l.is_nonnegative() {
                return Err(Error::Range(format!("negative coefficient at {w}: {l}")));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> CharacterJson {
        CharacterJson {
            weight: self.weight.0.clone(),
            entries: self
                .entries
                .iter()
                .map(|(w, l)| EntryJson {
                    word: w.to_string(),
                    qdim: l
                        .terms()
                        .map(|(e, c)| (e.to_string(), json_int(c)))
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &CharacterJson) -> Result<Self> {
        let mut c = GradedCharacter::empty(Root(j.weight.clone()));
        for e in &j.entries {
            let word: Word = e.word.parse()?;
            let mut l = LaurentQ::zero();
            for (k, v) in &e.qdim {
                let exp: i64 = k
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad q-exponent {k:?}")))?;
                let coeff: BigInt = match v {
                    serde_json::Value::Number(n) => BigInt::from(
                        n.as_i64()
                            .ok_or_else(|| Error::Parse(format!("bad coefficient {n}")))?,
                    ),
                    serde_json::Value::String(s) => s
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad coefficient {s:?}")))?,
                    other => return Err(Error::Parse(format!("bad coefficient {other}"))),
                };
                l.add_term(exp, coeff);
            }
            c.add_entry(word, l)?;
        }
        Ok(c)
    }
}

fn json_int(c: &BigInt) -> serde_json::Value {
    match c.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(c.to_string()),
    }
}

/// `{"weight":[..],"entries":[{"word":"2,3,1","qdim":{"0":1}}]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharacterJson {
    pub weight: Vec<i64>,
    pub entries: Vec<EntryJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EntryJson {
    pub word: String,
    pub qdim: BTreeMap<String, serde_json::Value>,
}

/// All interleavings of `a` and `b` with their exponent `-ε`.
///
/// Placing a letter of `b` in front of the remaining letters of `a` inverts
/// each of those pairs, and each inverted pair contributes its Cartan pairing
/// to `ε`.
pub fn word_shuffle(rs: &RootSystem, a: &Word, b: &Word) -> Vec<(Word, i64)> {
    fn go(
        rs: &RootSystem,
        a: &[u8],
        b: &[u8],
        prefix: &mut Vec<u8>,
        eps: i64,
        out: &mut Vec<(Word, i64)>,
    ) {
        if a.is_empty() || b.is_empty() {
            let mut w = prefix.clone();
            w.extend_from_slice(a);
            w.extend_from_slice(b);
            out.push((Word::new(w), -eps));
            return;
        }
        prefix.push(a[0]);
        go(rs, &a[1..], b, prefix, eps, out);
        prefix.pop();

        let crossed: i64 = a
            .iter()
            .map(|&x| rs.pairing(x as usize, b[0] as usize))
            .sum();
        prefix.push(b[0]);
        go(rs, a, &b[1..], prefix, eps + crossed, out);
        prefix.pop();
    }
    let mut out = Vec::new();
    go(rs, a.letters(), b.letters(), &mut Vec::new(), 0, &mut out);
    out
}

/// The quantum shuffle product `c1 ∘ c2`.
pub fn shuffle(rs: &RootSystem, c1: &GradedCharacter, c2: &GradedCharacter) -> GradedCharacter {
    let mut out = GradedCharacter::empty(c1.weight.add(&c2.weight));
    for (u, p) in &c1.entries {
        for (v, r) in &c2.entries {
            let pr = p.mul(r);
            for (w, e) in word_shuffle(rs, u, v) {
                let slot = out.entries.entry(w.clone()).or_default();
                *slot = slot.add(&pr.shift(e));
                if slot.is_zero() {
                    out.entries.remove(&w);
                }
            }
        }
    }
    out
}

/// Character of the homogeneous module of a fully commutative element: every
/// reduced word with dimension one.
pub fn homogeneous_character(rs: &RootSystem, w: &WeylElement) -> Result<GradedCharacter> {
    if !classify(rs, w).fully_commutative {
        return Err(Error::NotFullyCommutative(w.reduced_word(rs).to_string()));
    }
    let red = reduced_words(rs, w);
    let weight = red[0].weight(rs.rank());
    let mut c = GradedCharacter::empty(weight);
    for word in red {
        c.entries.insert(word, LaurentQ::one());
    }
    Ok(c)
}

/// `α_{j_1} (α_{j_1}+α_{j_2}) ⋯ (α_{j_1}+⋯+α_{j_r})`.
pub fn partial_sum_product(rank: usize, word: &Word) -> FormProduct {
    let mut acc = vec![0i64; rank];
    let mut p = FormProduct::one();
    for &l in word.letters() {
        acc[l as usize - 1] += 1;
        p.insert(
            LinearForm::new(acc.clone()).expect("nonzero partial sum"),
            1,
        );
    }
    p
}

/// One term per word: the dimension at `q = 1` over the product of partial sums.
pub fn dbar(rs: &RootSystem, c: &GradedCharacter) -> RationalSum {
    let terms = c
        .entries
        .iter()
        .map(|(w, l)| (l.at_one(), partial_sum_product(rs.rank(), w)))
        .filter(|(k, _)| !k.is_zero())
        .collect();
    RationalSum::from_terms(terms)
}

/// Whether `(i) ∘ c = c ∘ (i)`.
pub fn q_commutation_check(rs: &RootSystem, i: usize, c: &GradedCharacter) -> bool {
    let li = GradedCharacter::letter(rs.rank(), i);
    shuffle(rs, &li, c) == shuffle(rs, c, &li)
}
