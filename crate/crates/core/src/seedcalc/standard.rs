use std::collections::{BTreeMap, HashMap, VecDeque};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hookformulas::inversion_product;
use crate::lyndonwords::{type_a_inat, w0_word_from_order, LetterOrder};
use crate::rootsys::{RootSystem, TypeLetter, WeightVector};
use crate::symbolics::FormProduct;
use crate::weylwords::{
    apply_braid, apply_commutation, braid_positions, classify, commutation_positions, element, Word,
};

use super::seed::{bootstrap_b, require_longest, FlagMinorKey, Seed};

/// Where a walk or a seed computation starts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Start {
    /// `(1,2,1,3,2,1,…)` in type A, the word of the natural order otherwise.
    Nat,
    /// The word induced by the natural order on good Lyndon words.
    Lex,
    Word(Word),
}

pub fn nat_word(rs: &RootSystem) -> Result<Word> {
    match rs.type_letter() {
        TypeLetter::A => Ok(type_a_inat(rs.rank())),
        _ => w0_word_from_order(rs, &LetterOrder::natural(rs.rank())),
    }
}

pub fn lex_word(rs: &RootSystem) -> Result<Word> {
    w0_word_from_order(rs, &LetterOrder::natural(rs.rank()))
}

/// Minimal `u` with `u ω_i = μ`, as a reduced word, for `μ` in the orbit of `ω_i`.
pub fn minimal_representative(rs: &RootSystem, key: &FlagMinorKey) -> Word {
    let mut mu: WeightVector = key.weight.clone();
    let mut letters = Vec::new();
    while let Some(a) = (1..=rs.rank()).find(|&a| mu.coeffs()[a - 1] < 0) {
        letters.push(a as u8);
        mu = rs.weight_reflect(a, &mu);
    }
    Word::new(letters)
}

/// The value of a flag minor whose minimal representative is dominant
/// minuscule: the product of its inversion roots.
pub fn homogeneous_value(rs: &RootSystem, key: &FlagMinorKey) -> Option<FormProduct> {
    let u = element(rs, &minimal_representative(rs, key));
    classify(rs, &u)
        .dominant_minuscule
        .then(|| inversion_product(rs, &u))
}

/// Values at the first occurrence of each letter, from the homogeneous route.
pub fn cuspidal_inputs(rs: &RootSystem, word: &Word) -> Result<BTreeMap<usize, FormProduct>> {
    let mut out = BTreeMap::new();
    for k in 1..=word.len() {
        let i = word.at(k);
        if out.contains_key(&i) {
            continue;
        }
        let key = super::seed::flag_minor_key(rs, word, k);
        let p = homogeneous_value(rs, &key).ok_or_else(|| Error::CuspidalUnavailable {
            position: k,
            reason: format!(
                "minimal representative {} is not dominant minuscule",
                minimal_representative(rs, &key).to_reflections()
            ),
        })?;
        out.insert(i, p);
    }
    Ok(out)
}

/// Shortest sequence of moves from `from` to `to`: `(is_braid, position)`.
pub fn move_path(rs: &RootSystem, from: &Word, to: &Word) -> Option<Vec<(bool, usize)>> {
    let mut parent: HashMap<Word, (Word, bool, usize)> = HashMap::new();
    let mut queue = VecDeque::from([from.clone()]);
    let mut seen = std::collections::HashSet::from([from.clone()]);
    while let Some(u) = queue.pop_front() {
        if &u == to {
            let mut path = Vec::new();
            let mut cur = u;
            while let Some((p, b, k)) = parent.get(&cur) {
                path.push((*b, *k));
                cur = p.clone();
            }
            path.reverse();
            return Some(path);
        }
        let moves = commutation_positions(rs, &u)
            .into_iter()
            .map(|k| (false, k, apply_commutation(&u, k)))
            .chain(
                braid_positions(rs, &u)
                    .into_iter()
                    .map(|k| (true, k, apply_braid(&u, k))),
            );
        for (b, k, v) in moves {
            if seen.insert(v.clone()) {
                parent.insert(v.clone(), (u.clone(), b, k));
                queue.push_back(v);
            }
        }
    }
    None
}

/// Moves `seed` along a path of commutation and braid moves.
pub fn transport(seed: &Seed, path: &[(bool, usize)]) -> Result<Seed> {
    path.iter().try_fold(seed.clone(), |s, &(braid, k)| {
        if braid {
            s.braid_mutate(k)
        } else {
            s.commute_move(k)
        }
    })
}

pub fn standard_seed(rs: Arc<RootSystem>, start: &Start) -> Result<Seed> {
    match start {
        Start::Nat => {
            let w = nat_word(&rs)?;
            let inputs = cuspidal_inputs(&rs, &w)?;
            bootstrap_b(rs, &w, &inputs)
        }
        Start::Lex => {
            let w = lex_word(&rs)?;
            let inputs = cuspidal_inputs(&rs, &w)?;
            bootstrap_b(rs, &w, &inputs)
        }
        Start::Word(w) => {
            require_longest(&rs, w)?;
            match cuspidal_inputs(&rs, w) {
                Ok(inputs) => bootstrap_b(rs, w, &inputs),
                Err(Error::CuspidalUnavailable { .. }) => {
                    let base = standard_seed(rs.clone(), &Start::Nat)?;
                    let path = move_path(&rs, base.word(), w)
                        .ok_or_else(|| Error::NotLongestElement(w.to_string()))?;
                    transport(&base, &path)
                }
                Err(e) => Err(e),
            }
        }
    }
}
