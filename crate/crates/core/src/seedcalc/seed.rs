use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem, WeightVector};
use crate::symbolics::{rational_sum_equal, FormProduct, LinearForm, RationalSum};
use crate::weylwords::{element, is_reduced, longest_element, Word};

use super::quiver::{quiver_of, Occurrences, Quiver};
use super::violation::Violation;

/// Checks that `word` is a reduced word of `w₀` and builds its quiver.
pub fn build_quiver(rs: &RootSystem, word: &Word) -> Result<Quiver> {
    require_longest(rs, word)?;
    Ok(quiver_of(rs, word))
}

pub(crate) fn require_longest(rs: &RootSystem, word: &Word) -> Result<()> {
    rs.check_word(word)?;
    if word.len() != rs.w0_length()
        || !is_reduced(rs, word)
        || element(rs, word) != longest_element(rs)
    {
        return Err(Error::NotLongestElement(word.to_string()));
    }
    Ok(())
}

/// `(i_k, s_{i_1} ⋯ s_{i_k} ω_{i_k})`, naming the flag minor at position `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FlagMinorKey {
    pub letter: usize,
    pub weight: WeightVector,
}

impl std::fmt::Display for FlagMinorKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "D(letter {}, weight {:?})",
            self.letter,
            self.weight.coeffs()
        )
    }
}

pub fn flag_minor_key(rs: &RootSystem, word: &Word, k: usize) -> FlagMinorKey {
    let i = word.at(k);
    let prefix = Word::new(word.letters()[..k].to_vec());
    FlagMinorKey {
        letter: i,
        weight: rs.apply_word_to_weight(&prefix, &WeightVector::fundamental(rs.rank(), i)),
    }
}

/// A standard seed: reduced word of `w₀`, inversion roots, the `P` values and the quiver.
#[derive(Clone, Debug)]
pub struct Seed {
    rs: Arc<RootSystem>,
    word: Word,
    occ: Occurrences,
    betas: Vec<Root>,
    ps: Vec<FormProduct>,
    quiver: Quiver,
}

impl PartialEq for Seed {
    fn eq(&self, other: &Self) -> bool {
        self.word == other.word && self.ps == other.ps && *self.rs == *other.rs
    }
}

impl Eq for Seed {}

impl Seed {
    /// Assembles a seed; `ps[j-1]` is `P_j`.
    pub fn new(rs: Arc<RootSystem>, word: Word, ps: Vec<FormProduct>) -> Result<Seed> {
        let quiver = build_quiver(&rs, &word)?;
        if ps.len() != word.len() {
            return Err(Error::Range(format!(
                "{} values supplied for a word of length {}",
                ps.len(),
                word.len()
            )));
        }
        Ok(Self::assemble(rs, word, ps, quiver))
    }

    fn assemble(rs: Arc<RootSystem>, word: Word, ps: Vec<FormProduct>, quiver: Quiver) -> Seed {
        let betas = rs.inversion_roots(&word);
        let occ = Occurrences::new(&word);
        Seed {
            rs,
            word,
            occ,
            betas,
            ps,
            quiver,
        }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn root_system_arc(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn betas(&self) -> &[Root] {
        &self.betas
    }

    /// `β_j`, 1-based.
    pub fn beta(&self, j: usize) -> &Root {
        &self.betas[j - 1]
    }

    pub fn beta_form(&self, j: usize) -> LinearForm {
        LinearForm::try_from(self.beta(j)).expect("reduced word gives positive roots")
    }

    pub fn ps(&self) -> &[FormProduct] {
        &self.ps
    }

    /// `P_j`, 1-based, with `P_0 = 1`.
    pub fn p(&self, j: usize) -> FormProduct {
        if j == 0 {
            FormProduct::one()
        } else {
            self.ps[j - 1].clone()
        }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn plus(&self, j: usize) -> usize {
        self.occ.plus(j)
    }

    pub fn minus(&self, j: usize) -> usize {
        self.occ.minus(j)
    }

    pub fn is_frozen(&self, j: usize) -> bool {
        self.quiver.is_frozen(j)
    }

    pub fn exchangeable(&self) -> Vec<usize> {
        self.quiver.exchangeable()
    }

    fn product_of(&self, vs: &[usize]) -> FormProduct {
        vs.iter()
            .fold(FormProduct::one(), |acc, &l| acc.mul(&self.ps[l - 1]))
    }

    pub fn p_in(&self, j: usize) -> FormProduct {
        self.product_of(&self.quiver.in_vertices(j))
    }

    pub fn p_out(&self, j: usize) -> FormProduct {
        self.product_of(&self.quiver.out_vertices(j))
    }

    pub fn key(&self, k: usize) -> FlagMinorKey {
        flag_minor_key(&self.rs, &self.word, k)
    }

    /// All `N` flag-minor keys with their `P` values.
    pub fn keyed_values(&self) -> Vec<(FlagMinorKey, FormProduct)> {
        (1..=self.len())
            .map(|k| (self.key(k), self.ps[k - 1].clone()))
            .collect()
    }

    /// The positions `l < j < l₊` with `i_l.i_j = -1`.
    pub fn b_neighbours(&self, j: usize) -> Vec<usize> {
        let ij = self.word.at(j);
        (1..j)
            .filter(|&l| self.rs.pairing(self.word.at(l), ij) == -1 && j < self.plus(l))
            .collect()
    }

    /// `β_j ∏_{l<j<l₊, i_l.i_j=-1} P_l`.
    fn b_rhs(&self, j: usize) -> FormProduct {
        self.b_neighbours(j)
            .into_iter()
            .fold(FormProduct::from_form(self.beta_form(j)), |acc, l| {
                acc.mul(&self.ps[l - 1])
            })
    }

    fn violation(&self, check: &str, index: usize, lhs: String, rhs: String) -> Violation {
        Violation {
            check: check.to_string(),
            word: self.word.to_string(),
            index,
            lhs,
            rhs,
        }
    }

    /// `P_j P_{j₋} = β_j ∏_{l<j<l₊, i_l.i_j=-1} P_l` for every `j`.
    pub fn check_b(&self) -> Vec<Violation> {
        (1..=self.len())
            .filter_map(|j| {
                let lhs = self.p(j).mul(&self.p(self.minus(j)));
                let rhs = self.b_rhs(j);
                (lhs != rhs).then(|| self.violation("B", j, lhs.to_string(), rhs.to_string()))
            })
            .collect()
    }

    /// `(β_i ; P_j) - (β_i ; P_{j₊}) ≤ 1` for exchangeable `j` and every `i`.
    pub fn check_c(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for j in self.exchangeable() {
            let pj = &self.ps[j - 1];
            let pp = &self.ps[self.plus(j) - 1];
            for i in 1..=self.len() {
                let b = self.beta_form(i);
                let (x, y) = (pj.multiplicity(&b), pp.multiplicity(&b));
                if x as i64 - y as i64 > 1 {
                    out.push(self.violation(
                        "C",
                        j,
                        format!("({b} ; P_{j}) = {x}"),
                        format!("({b} ; P_{}) = {y}", self.plus(j)),
                    ));
                }
            }
        }
        out
    }

    /// `β_j P_{in(j)} = β_{j₊} P_{out(j)}`.
    pub fn yhat_check(&self, j: usize) -> bool {
        self.yhat_sides(j).is_some_and(|(l, r)| l == r)
    }

    fn yhat_sides(&self, j: usize) -> Option<(FormProduct, FormProduct)> {
        if self.is_frozen(j) {
            return None;
        }
        let lhs = self.p_in(j).mul_form(&self.beta_form(j));
        let rhs = self.p_out(j).mul_form(&self.beta_form(self.plus(j)));
        Some((lhs, rhs))
    }

    pub fn check_yhat(&self) -> Vec<Violation> {
        self.exchangeable()
            .into_iter()
            .filter_map(|j| {
                let (l, r) = self.yhat_sides(j)?;
                (l != r).then(|| self.violation("yhat", j, l.to_string(), r.to_string()))
            })
            .collect()
    }

    /// `(β_i ; P_j) = 0` for `i > j` and `(β_j ; P_j) = 1`.
    pub fn check_triangularity(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for j in 1..=self.len() {
            let pj = &self.ps[j - 1];
            let d = pj.multiplicity(&self.beta_form(j));
            if d != 1 {
                out.push(self.violation(
                    "diagonal",
                    j,
                    format!("({} ; P_{j}) = {d}", self.beta(j)),
                    "1".into(),
                ));
            }
            for i in j + 1..=self.len() {
                let m = pj.multiplicity(&self.beta_form(i));
                if m != 0 {
                    out.push(self.violation(
                        "triangularity",
                        j,
                        format!("({} ; P_{j}) = {m}", self.beta(i)),
                        "0".into(),
                    ));
                }
            }
        }
        out
    }

    /// Every factor of every `P_j` is a positive root.
    pub fn check_positivity(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for j in 1..=self.len() {
            for (f, _) in self.ps[j - 1].iter() {
                if self.rs.root_index(&f.to_root()).is_none() {
                    out.push(self.violation("A", j, f.to_string(), "a positive root".into()));
                }
            }
        }
        out
    }

    /// All per-seed checks.
    pub fn check_all(&self) -> Vec<Violation> {
        let mut v = self.check_positivity();
        v.extend(self.check_triangularity());
        v.extend(self.check_b());
        v.extend(self.check_c());
        v.extend(self.check_yhat());
        v
    }

    fn braid_ok(&self, k: usize) -> bool {
        let l = self.word.letters();
        k >= 1
            && k + 2 <= l.len()
            && l[k - 1] == l[k + 1]
            && self.rs.pairing(l[k - 1] as usize, l[k] as usize) == -1
    }

    /// Mutation at the braid position `k` (`i_k = i_{k+2} = p`, `i_{k+1} = q`).
    pub fn braid_mutate(&self, k: usize) -> Result<Seed> {
        if !self.braid_ok(k) {
            return Err(Error::BadBraidPosition {
                word: self.word.to_string(),
                position: k,
            });
        }
        let tilde = self.p_in(k).mul_form(&self.beta_form(k));
        let divisor = self.ps[k - 1].mul_form(&self.beta_form(k + 1));
        let new_k = tilde.divide_exact(&divisor)?;
        let mut ps = self.ps.clone();
        ps[k - 1] = new_k;
        ps.swap(k, k + 1);
        let word = crate::weylwords::apply_braid(&self.word, k);
        let quiver = quiver_of(&self.rs, &word);
        Ok(Self::assemble(self.rs.clone(), word, ps, quiver))
    }

    /// Swap at a commutation position `k` (`i_k . i_{k+1} = 0`).
    pub fn commute_move(&self, k: usize) -> Result<Seed> {
        let l = self.word.letters();
        if k == 0 || k >= l.len() || self.rs.pairing(l[k - 1] as usize, l[k] as usize) != 0 {
            return Err(Error::BadCommutePosition {
                word: self.word.to_string(),
                position: k,
            });
        }
        let mut ps = self.ps.clone();
        ps.swap(k - 1, k);
        let word = crate::weylwords::apply_commutation(&self.word, k);
        let quiver = quiver_of(&self.rs, &word);
        Ok(Self::assemble(self.rs.clone(), word, ps, quiver))
    }

    /// `1/(P_k P'_k) = 1/P_in(k) + 1/P_out(k)` for the mutation at `k`.
    pub fn exchange_identity(&self, k: usize, mutated: &Seed) -> bool {
        let lhs = RationalSum::reciprocal(self.ps[k - 1].mul(&mutated.ps[k - 1]));
        let rhs =
            RationalSum::reciprocal(self.p_in(k)).plus(&RationalSum::reciprocal(self.p_out(k)));
        rational_sum_equal(&lhs, &rhs)
    }

    /// `β_k + β_{k+2} = β_{k+1}` at a braid position.
    pub fn braid_root_relation(&self, k: usize) -> bool {
        self.beta(k).add(self.beta(k + 2)) == *self.beta(k + 1)
    }

    pub fn to_report(&self) -> SeedReport {
        SeedReport {
            word: self.word.to_string(),
            betas: self.betas.iter().map(|b| b.to_string()).collect(),
            ps: self.ps.clone(),
            frozen: self.quiver.frozen.iter().copied().collect(),
            arrows: self.quiver.arrows.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SeedReport {
    pub word: String,
    pub betas: Vec<String>,
    pub ps: Vec<FormProduct>,
    pub frozen: Vec<usize>,
    pub arrows: Vec<super::quiver::Arrow>,
}

/// Fills `P_j` for increasing `j` from the values at first occurrences using
/// `P_j = β_j ∏_{l<j<l₊, i_l.i_j=-1} P_l / P_{j₋}`.
pub fn bootstrap_b(
    rs: Arc<RootSystem>,
    word: &Word,
    first_occurrence_ps: &BTreeMap<usize, FormProduct>,
) -> Result<Seed> {
    let quiver = build_quiver(&rs, word)?;
    let n = word.len();
    let mut seed = Seed::assemble(
        rs.clone(),
        word.clone(),
        vec![FormProduct::one(); n],
        quiver,
    );
    for j in 1..=n {
        let jm = seed.minus(j);
        let value = if jm == 0 {
            first_occurrence_ps
                .get(&word.at(j))
                .cloned()
                .ok_or_else(|| Error::CuspidalUnavailable {
                    position: j,
                    reason: format!(
                        "no value supplied for the first occurrence of {}",
                        word.at(j)
                    ),
                })?
        } else {
            seed.b_rhs(j).divide_exact(&seed.ps[jm - 1])?
        };
        seed.ps[j - 1] = value;
    }
    Ok(seed)
}
