use std::collections::BTreeSet;
use std::sync::Arc;

use itertools::Itertools;
use serde::Serialize;

use crate::characters::{dbar, homogeneous_character};
use crate::error::{Error, Result};
use crate::hookformulas::inversion_product;
use crate::rootsys::{build_root_system, RootSystem, TypeLetter};
use crate::seedcalc::{standard_seed, walk, FlagMinorKey, Start, WalkLimits};
use crate::symbolics::{equals_inverse, FormProduct};
use crate::weylwords::{
    all_elements, classify, element, gap_split, is_reduced, Classification, Word,
};
use crate::IntPoly;

use super::d4::{a3_tables, d4_tables};

/// Strict dominant minuscule elements other than the identity, as lex-minimal
/// reduced words, by length and then lexicographically.
pub fn min_plus_zero(rs: &RootSystem) -> Vec<Word> {
    let mut out: Vec<Word> = all_elements(rs)
        .into_iter()
        .filter(|(w, l)| {
            *l > 0 && {
                let c = classify(rs, w);
                c.dominant_minuscule && c.strict
            }
        })
        .map(|(w, _)| w.reduced_word(rs))
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// An enumeration set against a listed one, compared as sets of elements.
#[derive(Clone, Debug, Default, Serialize)]
pub struct ListComparison {
    pub enumerated: usize,
    pub listed: usize,
    /// Listed entries naming an enumerated element.
    pub matched: Vec<String>,
    /// Listed entries that are not reduced words (or do not parse).
    pub garbled: Vec<String>,
    /// Listed entries that are reduced but not in the enumeration.
    pub extra: Vec<String>,
    /// Enumerated elements absent from the list.
    pub missing: Vec<String>,
}

impl ListComparison {
    pub fn exact(&self) -> bool {
        self.garbled.is_empty() && self.extra.is_empty() && self.missing.is_empty()
    }

    /// Exact up to entries that are not reduced words, each accounted for by
    /// one missing element.
    pub fn exact_modulo_garbled(&self) -> bool {
        self.extra.is_empty() && self.missing.len() == self.garbled.len()
    }
}

pub fn compare_listed(rs: &RootSystem, enumerated: &[Word], listed: &[String]) -> ListComparison {
    let enum_elems: Vec<_> = enumerated.iter().map(|w| element(rs, w)).collect();
    let mut hit = BTreeSet::new();
    let mut cmp = ListComparison {
        enumerated: enumerated.len(),
        listed: listed.len(),
        ..Default::default()
    };
    for s in listed {
        let word = match Word::from_reflections(s) {
            Ok(w) if rs.check_word(&w).is_ok() && is_reduced(rs, &w) => w,
            _ => {
                cmp.garbled.push(s.clone());
                continue;
            }
        };
        let e = element(rs, &word);
        match enum_elems.iter().position(|x| *x == e) {
            Some(i) => {
                hit.insert(i);
                cmp.matched.push(s.clone());
            }
            None => cmp.extra.push(s.clone()),
        }
    }
    cmp.missing = (0..enumerated.len())
        .filter(|i| !hit.contains(i))
        .map(|i| enumerated[i].to_reflections())
        .collect();
    cmp
}

/// The D₄ enumeration of strict dominant minuscule elements against the stored list.
pub fn d4_list_comparison() -> Result<ListComparison> {
    let rs = build_root_system(TypeLetter::D, 4)?;
    let tables = d4_tables()?;
    Ok(compare_listed(
        &rs,
        &min_plus_zero(&rs),
        &tables.strict_dominant_minuscule,
    ))
}

/// The A₃ enumeration against the stored list of flag-minor elements.
pub fn a3_flag_minor_comparison() -> Result<ListComparison> {
    let rs = build_root_system(TypeLetter::A, 3)?;
    let listed: Vec<String> = a3_tables()?
        .flag_minor_elements
        .iter()
        .map(Word::to_reflections)
        .collect();
    Ok(compare_listed(&rs, &min_plus_zero(&rs), &listed))
}

#[derive(Clone, Debug, Serialize)]
pub struct ElementEvidence {
    pub word: Word,
    pub product: FormProduct,
    pub in_atlas: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SplitCheck {
    pub word: Word,
    pub parts: Vec<Word>,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct EvidenceReport {
    pub root_system: String,
    pub walk_seeds: usize,
    pub atlas_size: usize,
    pub min_plus_zero: Vec<ElementEvidence>,
    /// Flag minors whose value is not the inversion product of any element of the enumeration.
    pub other_atlas_values: Vec<(FlagMinorKey, FormProduct)>,
    /// Non-strict dominant minuscule elements and their block factorization.
    pub non_strict: Vec<SplitCheck>,
}

impl EvidenceReport {
    pub fn all_in_atlas(&self) -> bool {
        self.min_plus_zero.iter().all(|e| e.in_atlas)
    }

    pub fn all_splits_hold(&self) -> bool {
        self.non_strict.iter().all(|s| s.holds)
    }
}

fn supported_for_evidence(rs: &RootSystem) -> bool {
    matches!(
        (rs.type_letter(), rs.rank()),
        (TypeLetter::A, 1..=5) | (TypeLetter::D, 4)
    )
}

/// Walks all standard seeds and compares their flag minors with the inversion
/// products of strict dominant minuscule elements.
pub fn conjecture_evidence(rs: Arc<RootSystem>, threads: usize) -> Result<EvidenceReport> {
    if !supported_for_evidence(&rs) {
        return Err(Error::Range(format!(
            "evidence sweeps are limited to A1..A5 and D4, not {}",
            rs.name()
        )));
    }
    let start = standard_seed(rs.clone(), &Start::Nat)?;
    let report = walk(
        &start,
        &WalkLimits {
            max_seeds: None,
            threads,
        },
    )?;
    let elems = min_plus_zero(&rs);
    let products: Vec<FormProduct> = elems
        .iter()
        .map(|w| inversion_product(&rs, &element(&rs, w)))
        .collect();
    let min_plus_zero = elems
        .iter()
        .zip(&products)
        .map(|(w, p)| ElementEvidence {
            word: w.clone(),
            product: p.clone(),
            in_atlas: report.atlas.contains_value(p),
        })
        .collect();
    let other_atlas_values = report
        .atlas
        .entries
        .iter()
        .filter(|(_, p)| !products.contains(p))
        .map(|(k, p)| (k.clone(), p.clone()))
        .collect();
    let mut non_strict = Vec::new();
    for (w, l) in all_elements(&rs) {
        if l == 0 {
            continue;
        }
        let c: Classification = classify(&rs, &w);
        if !c.dominant_minuscule || c.strict {
            continue;
        }
        let word = w.reduced_word(&rs);
        let parts = gap_split(&rs, &word)?;
        let joined = parts.iter().fold(FormProduct::one(), |acc, u| {
            acc.mul(&inversion_product(&rs, &element(&rs, u)))
        });
        non_strict.push(SplitCheck {
            holds: parts.len() > 1 && joined == inversion_product(&rs, &w),
            word,
            parts,
        });
    }
    non_strict.sort_by(|a, b| {
        a.word
            .len()
            .cmp(&b.word.len())
            .then_with(|| a.word.cmp(&b.word))
    });
    Ok(EvidenceReport {
        root_system: rs.name(),
        walk_seeds: report.stats.seeds,
        atlas_size: report.atlas.len(),
        min_plus_zero,
        other_atlas_values,
        non_strict,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct NegativeControl {
    pub word: Word,
    pub classification: Classification,
    #[serde(serialize_with = "ser_poly")]
    pub numerator: IntPoly,
    pub denominator: FormProduct,
    pub matches_table: bool,
    /// Every product of `l(w)` positive roots, with repetition.
    pub candidates_tested: usize,
    pub candidates_passing: usize,
}

fn ser_poly<S: serde::Serializer>(p: &IntPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

impl NegativeControl {
    pub fn passed(&self) -> bool {
        self.matches_table && self.candidates_passing == 0 && self.candidates_tested > 0
    }
}

/// The A₃ element `s₂s₃s₁`: reduces its character's value and checks that no
/// product of positive roots inverts it.
pub fn negative_control() -> Result<NegativeControl> {
    let rs = build_root_system(TypeLetter::A, 3)?;
    let tables = a3_tables()?;
    let word = tables.non_flag_minor.clone();
    let w = element(&rs, &word);
    let sum = dbar(&rs, &homogeneous_character(&rs, &w)?);
    let reduced = sum.reduce();
    let roots = rs.positive_roots().to_vec();
    let mut tested = 0;
    let mut passing = 0;
    for combo in roots.iter().combinations_with_replacement(w.length(&rs)) {
        tested += 1;
        if equals_inverse(&sum, &FormProduct::from_roots(combo)) {
            passing += 1;
        }
    }
    Ok(NegativeControl {
        matches_table: reduced.numerator == tables.non_flag_minor_numerator
            && reduced.denominator == tables.non_flag_minor_denominator,
        classification: classify(&rs, &w),
        word,
        numerator: reduced.numerator,
        denominator: reduced.denominator,
        candidates_tested: tested,
        candidates_passing: passing,
    })
}
