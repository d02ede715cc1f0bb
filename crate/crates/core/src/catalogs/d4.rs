use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::characters::{GradedCharacter, LaurentQ};
use crate::error::{Error, Result};
use crate::rootsys::Root;
use crate::seedcalc::Seed;
use crate::symbolics::{FormProduct, LinearForm};
use crate::weylwords::Word;
use crate::IntPoly;

/// The bundled tables, in the textual word and polynomial formats.
pub const TABLES_JSON: &str = include_str!("../../data/d4_tables.json");

/// SHA-256 of [`TABLES_JSON`]; guards against edits to the data file.
pub const TABLES_SHA256: &str = "4a6b074b055870ee7c9bab9cca2ab29f9de466f1762d33c3fff6d589e8842528";

#[derive(Deserialize)]
struct RawFile {
    version: u32,
    d4: RawD4,
    a3: RawA3,
}

#[derive(Deserialize)]
struct RawD4 {
    i_nat: String,
    dominant_words: Vec<String>,
    frozen_dominant_words: Vec<String>,
    p: Vec<String>,
    b_identities: Vec<RawB>,
    c_cases: Vec<CCase>,
    frozen_character: RawCharacter,
    strict_dominant_minuscule: Vec<String>,
}

#[derive(Deserialize)]
struct RawB {
    lhs: Vec<usize>,
    form: String,
    rhs: Vec<usize>,
}

#[derive(Deserialize)]
struct RawCharacter {
    word: String,
    weight: Vec<i64>,
    q_dimension_one: Vec<String>,
    q_plus_q_inverse: Vec<String>,
}

#[derive(Deserialize)]
struct RawA3 {
    natural_dominant_words: Vec<String>,
    flag_minor_elements: Vec<String>,
    non_flag_minor: String,
    non_flag_minor_numerator: String,
    non_flag_minor_denominator: String,
}

/// `∏_{a ∈ lhs} P_a = form · ∏_{b ∈ rhs} P_b`, indices 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BIdentity {
    pub lhs: Vec<usize>,
    pub form: LinearForm,
    pub rhs: Vec<usize>,
}

impl BIdentity {
    pub fn sides(&self, ps: &[FormProduct]) -> (FormProduct, FormProduct) {
        let prod = |ix: &[usize]| {
            ix.iter()
                .fold(FormProduct::one(), |acc, &i| acc.mul(&ps[i - 1]))
        };
        (prod(&self.lhs), prod(&self.rhs).mul_form(&self.form))
    }

    pub fn holds(&self, ps: &[FormProduct]) -> bool {
        let (l, r) = self.sides(ps);
        l == r
    }

    /// The identity the recurrence prescribes at position `j` of `seed`.
    pub fn derived(seed: &Seed, j: usize) -> BIdentity {
        let mut lhs = vec![j];
        if seed.minus(j) > 0 {
            lhs.push(seed.minus(j));
        }
        BIdentity {
            lhs,
            form: seed.beta_form(j),
            rhs: seed.b_neighbours(j),
        }
    }
}

impl fmt::Display for BIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ps = |ix: &[usize]| ix.iter().map(|i| format!("P{i}")).collect::<String>();
        write!(f, "{} = ({}){}", ps(&self.lhs), self.form, ps(&self.rhs))
    }
}

/// A stored identity next to the one derived from the seed at the same position.
#[derive(Clone, Debug, Serialize)]
pub struct BAudit {
    pub position: usize,
    pub stored: String,
    pub derived: String,
    pub stored_holds: bool,
    pub derived_holds: bool,
}

impl BAudit {
    pub fn agrees(&self) -> bool {
        self.stored == self.derived
    }
}

/// Compares each stored identity, keyed by its first left-hand index, with
/// the recurrence of `seed`, both evaluated on the stored `P` table.
pub fn audit_b_identities(tables: &D4Tables, seed: &Seed) -> Vec<BAudit> {
    tables
        .b_identities
        .iter()
        .map(|b| {
            let j = b.lhs[0];
            let d = BIdentity::derived(seed, j);
            BAudit {
                position: j,
                stored: b.to_string(),
                derived: d.to_string(),
                stored_holds: b.holds(&tables.p),
                derived_holds: d.holds(&tables.p),
            }
        })
        .collect()
}

/// `(β; P_position) = multiplicity` against `(β; P_next) = next_multiplicity`.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
pub struct CCase {
    pub form: String,
    pub position: usize,
    pub multiplicity: u32,
    pub next: usize,
    pub next_multiplicity: u32,
}

impl CCase {
    /// Both stated multiplicities match and the difference is at most one.
    pub fn holds(&self, ps: &[FormProduct]) -> Result<bool> {
        let f = LinearForm::parse(&self.form, 4)?;
        let a = ps[self.position - 1].multiplicity(&f);
        let b = ps[self.next - 1].multiplicity(&f);
        Ok(a == self.multiplicity && b == self.next_multiplicity && a <= b + 1)
    }
}

#[derive(Clone, Debug)]
pub struct D4Tables {
    pub i_nat: Word,
    pub dominant_words: Vec<Word>,
    pub frozen_dominant_words: Vec<Word>,
    /// `P_1, …, P_12` for the seed of `i_nat`.
    pub p: Vec<FormProduct>,
    pub b_identities: Vec<BIdentity>,
    pub c_cases: Vec<CCase>,
    pub frozen_word: Word,
    pub frozen_character: GradedCharacter,
    /// Kept as text: the list is compared against an enumeration, not trusted.
    pub strict_dominant_minuscule: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct A3Tables {
    pub natural_dominant_words: Vec<Word>,
    pub flag_minor_elements: Vec<Word>,
    pub non_flag_minor: Word,
    pub non_flag_minor_numerator: IntPoly,
    pub non_flag_minor_denominator: FormProduct,
}

fn load() -> Result<RawFile> {
    let found = format!("{:x}", Sha256::digest(TABLES_JSON.as_bytes()));
    if found != TABLES_SHA256 {
        return Err(Error::Checksum {
            expected: TABLES_SHA256.to_string(),
            found,
        });
    }
    let raw: RawFile =
        serde_json::from_str(TABLES_JSON).map_err(|e| Error::Parse(format!("tables: {e}")))?;
    if raw.version != 1 {
        return Err(Error::Parse(format!(
            "unknown tables version {}",
            raw.version
        )));
    }
    Ok(raw)
}

fn digit_words(v: &[String]) -> Result<Vec<Word>> {
    v.iter().map(|s| Word::from_digits(s)).collect()
}

/// Expands `3{2,4}313{1,2,4}3` into every word obtained by replacing each
/// braced set with one of its orderings.
pub fn expand_shorthand(s: &str) -> Result<Vec<Word>> {
    let mut pieces: Vec<Vec<Vec<u8>>> = Vec::new();
    let mut chars = s.chars();
    while let Some(c) = chars.next() {
        match c {
            '{' => {
                let inner: String = chars.by_ref().take_while(|&c| c != '}').collect();
                let set = inner
                    .split(',')
                    .map(|p| {
                        p.trim()
                            .parse::<u8>()
                            .map_err(|_| Error::Parse(format!("bad letter {p:?} in {s:?}")))
                    })
                    .collect::<Result<Vec<u8>>>()?;
                let k = set.len();
                pieces.push(set.into_iter().permutations(k).collect());
            }
            d if d.is_ascii_digit() && d != '0' => {
                pieces.push(vec![vec![d.to_digit(10).unwrap() as u8]]);
            }
            other => return Err(Error::Parse(format!("unexpected {other:?} in {s:?}"))),
        }
    }
    Ok(pieces
        .into_iter()
        .multi_cartesian_product()
        .map(|parts| Word::new(parts.concat()))
        .collect())
}

fn frozen_character(raw: &RawCharacter) -> Result<GradedCharacter> {
    let mut c = GradedCharacter::empty(Root(raw.weight.clone()));
    let mut count = 0;
    for (families, value) in [
        (&raw.q_dimension_one, LaurentQ::<BigInt>::one()),
        (&raw.q_plus_q_inverse, LaurentQ::q_plus_q_inverse()),
    ] {
        for fam in families {
            for w in expand_shorthand(fam)? {
                c.add_entry(w, value.clone())?;
                count += 1;
            }
        }
    }
    if c.entries.len() != count {
        return Err(Error::Parse("character families overlap".into()));
    }
    Ok(c)
}

pub fn d4_tables() -> Result<D4Tables> {
    let raw = load()?.d4;
    let p = raw
        .p
        .iter()
        .map(|s| FormProduct::parse(s, 4))
        .collect::<Result<Vec<_>>>()?;
    let b_identities = raw
        .b_identities
        .iter()
        .map(|b| {
            Ok(BIdentity {
                lhs: b.lhs.clone(),
                form: LinearForm::parse(&b.form, 4)?,
                rhs: b.rhs.clone(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(D4Tables {
        i_nat: raw.i_nat.parse()?,
        dominant_words: digit_words(&raw.dominant_words)?,
        frozen_dominant_words: digit_words(&raw.frozen_dominant_words)?,
        p,
        b_identities,
        c_cases: raw.c_cases,
        frozen_word: Word::from_digits(&raw.frozen_character.word)?,
        frozen_character: frozen_character(&raw.frozen_character)?,
        strict_dominant_minuscule: raw.strict_dominant_minuscule,
    })
}

pub fn a3_tables() -> Result<A3Tables> {
    let raw = load()?.a3;
    Ok(A3Tables {
        natural_dominant_words: digit_words(&raw.natural_dominant_words)?,
        flag_minor_elements: raw
            .flag_minor_elements
            .iter()
            .map(|s| Word::from_reflections(s))
            .collect::<Result<Vec<_>>>()?,
        non_flag_minor: Word::from_reflections(&raw.non_flag_minor)?,
        non_flag_minor_numerator: LinearForm::parse(&raw.non_flag_minor_numerator, 3)?.to_poly(),
        non_flag_minor_denominator: FormProduct::parse(&raw.non_flag_minor_denominator, 3)?,
    })
}
