//! Good Lyndon words for a total order on the simple roots, the induced
//! reduced word of the longest element, and determinantal dominant words.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem};
use crate::weylwords::{WeylElement, Word};

/// A total order on `1..=n`, listed from smallest to largest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LetterOrder {
    order: Vec<usize>,
    position: Vec<usize>,
}

impl LetterOrder {
    pub fn new(order: Vec<usize>) -> Result<LetterOrder> {
        let n = order.len();
        let mut position = vec![usize::MAX; n + 1];
        for (k, &l) in order.iter().enumerate() {
            if l == 0 || l > n || position[l] != usize::MAX {
                return Err(Error::Range(format!(
                    "{order:?} is not a permutation of 1..={n}"
                )));
            }
            position[l] = k;
        }
        Ok(LetterOrder { order, position })
    }

    /// `1 < 2 < ⋯ < n`.
    pub fn natural(n: usize) -> LetterOrder {
        LetterOrder::new((1..=n).collect()).expect("identity permutation")
    }

    pub fn letters(&self) -> &[usize] {
        &self.order
    }

    /// Lexicographic comparison; a proper prefix is smaller.
    pub fn cmp_words(&self, a: &Word, b: &Word) -> Ordering {
        let key = |w: &Word| -> Vec<usize> {
            w.letters()
                .iter()
                .map(|&l| self.position[l as usize])
                .collect()
        };
        key(a).cmp(&key(b))
    }
}

/// The good Lyndon word of every positive root.
#[derive(Clone, Debug)]
pub struct GoodLyndonTable {
    pub order: LetterOrder,
    pub table: BTreeMap<Root, Word>,
}

impl GoodLyndonTable {
    pub fn word(&self, beta: &Root) -> Option<&Word> {
        self.table.get(beta)
    }

    pub fn root_of(&self, word: &Word) -> Option<&Root> {
        self.table.iter().find(|(_, w)| *w == word).map(|(r, _)| r)
    }

    /// Positive roots sorted by the lex order of their good Lyndon words.
    pub fn sorted_roots(&self) -> Vec<Root> {
        let mut v: Vec<(&Root, &Word)> = self.table.iter().collect();
        v.sort_by(|a, b| self.order.cmp_words(a.1, b.1));
        v.into_iter().map(|(r, _)| r.clone()).collect()
    }

    /// Good Lyndon words in increasing lex order.
    pub fn sorted_words(&self) -> Vec<Word> {
        let mut v: Vec<Word> = self.table.values().cloned().collect();
        v.sort_by(|a, b| self.order.cmp_words(a, b));
        v
    }
}

/// Inductive rule: `GL(α_i) = (i)` and, for `ht(β) ≥ 2`, the lex-largest
/// concatenation `GL(γ)GL(δ)` over `γ+δ = β` with `GL(γ) < GL(δ)`.
pub fn good_lyndon_words(rs: &RootSystem, order: &LetterOrder) -> Result<GoodLyndonTable> {
    if order.letters().len() != rs.rank() {
        return Err(Error::Range(format!(
            "order {:?} does not match rank {}",
            order.letters(),
            rs.rank()
        )));
    }
    let mut table: BTreeMap<Root, Word> = BTreeMap::new();
    // positive_roots is sorted by height
    for beta in rs.positive_roots() {
        if beta.height() == 1 {
            let i = beta
                .coeffs()
                .iter()
                .position(|&c| c == 1)
                .expect("simple root")
                + 1;
            table.insert(beta.clone(), Word::new(vec![i as u8]));
            continue;
        }
        let mut best: Option<Word> = None;
        for gamma in rs.positive_roots() {
            if gamma.height() >= beta.height() {
                break;
            }
            let delta = Root(
                beta.coeffs()
                    .iter()
                    .zip(gamma.coeffs())
                    .map(|(b, g)| b - g)
                    .collect(),
            );
            let (Some(g), Some(d)) = (table.get(gamma), table.get(&delta)) else {
                continue;
            };
            if order.cmp_words(g, d) != Ordering::Less {
                continue;
            }
            let cand = g.concat(d);
            if best
                .as_ref()
                .is_none_or(|b| order.cmp_words(&cand, b) == Ordering::Greater)
            {
                best = Some(cand);
            }
        }
        let w = best.ok_or_else(|| Error::ConstructionFailed {
            prefix: String::new(),
            root: beta.to_string(),
        })?;
        table.insert(beta.clone(), w);
    }
    Ok(GoodLyndonTable {
        order: order.clone(),
        table,
    })
}

/// The reduced word of `w₀` whose inversion roots appear in increasing order
/// of good Lyndon words.
pub fn w0_word_from_order(rs: &RootSystem, order: &LetterOrder) -> Result<Word> {
    let gl = good_lyndon_words(rs, order)?;
    let mut u = WeylElement::identity(rs.rank());
    let mut word = Word::empty();
    for beta in gl.sorted_roots() {
        let i = (1..=rs.rank())
            .find(|&i| u.apply(&Root::simple(rs.rank(), i)) == beta)
            .ok_or_else(|| Error::ConstructionFailed {
                prefix: word.to_string(),
                root: beta.to_string(),
            })?;
        word.push(i as u8);
        u = u.mul_simple_right(rs, i);
    }
    Ok(word)
}

/// A dominant word with its factorization into good Lyndon words.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DominantWord {
    pub word: Word,
    pub factorization: Vec<(Word, u32)>,
}

impl DominantWord {
    pub fn from_factors(factors: &[Word]) -> DominantWord {
        let mut word = Word::empty();
        let mut factorization: Vec<(Word, u32)> = Vec::new();
        for f in factors {
            word = word.concat(f);
            match factorization.last_mut() {
                Some((last, e)) if last == f => *e += 1,
                _ => factorization.push((f.clone(), 1)),
            }
        }
        DominantWord {
            word,
            factorization,
        }
    }

    /// Whether the factors are weakly decreasing in the lex order.
    pub fn is_weakly_decreasing(&self, order: &LetterOrder) -> bool {
        self.factorization
            .windows(2)
            .all(|p| order.cmp_words(&p[0].0, &p[1].0) != Ordering::Less)
    }
}

/// `μ_k`: the good Lyndon words of `β_l` over `l ≤ k` with `i_l = i_k`, in
/// decreasing `l`.
pub fn determinantal_words(rs: &RootSystem, order: &LetterOrder) -> Result<Vec<DominantWord>> {
    let gl = good_lyndon_words(rs, order)?;
    let word = w0_word_from_order(rs, order)?;
    let betas = rs.inversion_roots(&word);
    let letters = word.letters();
    let out = (0..letters.len())
        .map(|k| {
            let factors: Vec<Word> = (0..=k)
                .rev()
                .filter(|&l| letters[l] == letters[k])
                .map(|l| gl.table[&betas[l]].clone())
                .collect();
            DominantWord::from_factors(&factors)
        })
        .collect();
    Ok(out)
}

/// `(1, 2,1, 3,2,1, …, n,n−1,…,1)`.
pub fn type_a_inat(n: usize) -> Word {
    let mut v = Vec::with_capacity(n * (n + 1) / 2);
    for top in 1..=n {
        v.extend((1..=top).rev().map(|l| l as u8));
    }
    Word::new(v)
}
