//! Cartan data, positive roots and reflections for simply-laced types.
//!
//! Roots live in simple-root coordinates and weights in fundamental-weight
//! coordinates. The only bridge between the two lattices is the Cartan
//! matrix, which keeps both reflection formulas integral.
//!
//! Node labels:
//! * `A_n`: the path `1 - 2 - ... - n`.
//! * `D_4`: `3` is the trivalent node, `1, 2, 4` are leaves.
//! * `D_n`, `n != 4`: the path `1 - ... - (n-2)`, with `n-1` and `n` both
//!   attached to `n-2`.
//! * `E_n`: Bourbaki labels, `1-3-4-5-6(-7-8)` with `2` attached to `4`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weylwords::Word;

/// Family of a simply-laced Dynkin diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TypeLetter {
    A,
    D,
    E,
}

impl fmt::Display for TypeLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TypeLetter::A => "A",
            TypeLetter::D => "D",
            TypeLetter::E => "E",
        };
        f.write_str(s)
    }
}

impl FromStr for TypeLetter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(TypeLetter::A),
            "D" | "d" => Ok(TypeLetter::D),
            "E" | "e" => Ok(TypeLetter::E),
            other => Err(Error::Parse(format!("unknown type letter {other:?}"))),
        }
    }
}

/// A vector in the root lattice, in the basis of simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn simple(rank: usize, i: usize) -> Root {
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        Root(v)
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

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|&c| c <= 0) && self.0.iter().any(|&c| c < 0)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Integer array form, e.g. `[1,1,2,1]`.
    pub fn to_array_string(&self) -> String {
        serde_json::to_string(&self.0).expect("integer vectors serialize")
    }

    /// Parses either the array form or the pretty form.
    pub fn parse(s: &str, rank: usize) -> Result<Root> {
        let t = s.trim();
        if t.starts_with('[') {
            let v: Vec<i64> =
                serde_json::from_str(t).map_err(|e| Error::Parse(format!("{t:?}: {e}")))?;
            if v.len() != rank {
                return Err(Error::Parse(format!(
                    "{t:?} does not have {rank} coordinates"
                )));
            }
            return Ok(Root(v));
        }
        crate::symbolics::LinearForm::parse(t, rank).map(|f| Root(f.coeffs().to_vec()))
    }
}

/// Pretty form `a1+a2+2*a3+a4`.
impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_linear_combination(f, &self.0)
    }
}

pub(crate) fn write_linear_combination(f: &mut impl fmt::Write, coeffs: &[i64]) -> fmt::Result {
    let mut first = true;
    for (i, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if c < 0 {
            f.write_char('-')?;
        } else if !first {
            f.write_char('+')?;
        }
        let a = c.abs();
        if a != 1 {
            write!(f, "{a}*")?;
        }
        write!(f, "a{}", i + 1)?;
        first = false;
    }
    if first {
        f.write_char('0')?;
    }
    Ok(())
}

/// A weight in the basis of fundamental weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn fundamental(rank: usize, i: usize) -> WeightVector {
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        WeightVector(v)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }
}

/// Cartan data together with the enumerated positive roots.
#[derive(Clone, Debug)]
pub struct RootSystem {
    type_letter: TypeLetter,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Root>,
    index: HashMap<Root, usize>,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.type_letter == other.type_letter && self.rank == other.rank
    }
}

impl Eq for RootSystem {}

fn dynkin_edges(letter: TypeLetter, rank: usize) -> Result<Vec<(usize, usize)>> {
    let unsupported = || Error::UnsupportedType {
        letter: letter.to_string(),
        rank,
    };
    let edges = match letter {
        TypeLetter::A if rank >= 1 => (1..rank).map(|i| (i, i + 1)).collect(),
        TypeLetter::D if rank == 4 => vec![(1, 3), (2, 3), (3, 4)],
        TypeLetter::D if rank >= 3 => {
            let mut e: Vec<_> = (1..rank - 2).map(|i| (i, i + 1)).collect();
            e.push((rank - 2, rank - 1));
            e.push((rank - 2, rank));
            e
        }
        TypeLetter::E if (6..=8).contains(&rank) => {
            let mut e = vec![(1, 3), (3, 4), (2, 4)];
            e.extend((4..rank).map(|i| (i, i + 1)));
            e
        }
        _ => return Err(unsupported()),
    };
    Ok(edges)
}

/// Builds the root system of the given simply-laced type.
pub fn build_root_system(type_letter: TypeLetter, rank: usize) -> Result<RootSystem> {
    let edges = dynkin_edges(type_letter, rank)?;
    let mut cartan = vec![vec![0i64; rank]; rank];
    for (i, row) in cartan.iter_mut().enumerate() {
        row[i] = 2;
    }
    for &(a, b) in &edges {
        cartan[a - 1][b - 1] = -1;
        cartan[b - 1][a - 1] = -1;
    }

    let mut rs = RootSystem {
        type_letter,
        rank,
        cartan,
        positive_roots: Vec::new(),
        index: HashMap::new(),
    };

    // breadth-first closure of the simple roots under simple reflections
    let mut seen: BTreeSet<Root> = BTreeSet::new();
    let mut queue: VecDeque<Root> = VecDeque::new();
    for i in 1..=rank {
        let r = Root::simple(rank, i);
        seen.insert(r.clone());
        queue.push_back(r);
    }
    while let Some(beta) = queue.pop_front() {
        for i in 1..=rank {
            let image = rs.reflect(i, &beta);
            if image.is_positive() && seen.insert(image.clone()) {
                queue.push_back(image);
            }
        }
    }
    let mut roots: Vec<Root> = seen.into_iter().collect();
    roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.0.cmp(&a.0)));
    rs.index = roots
        .iter()
        .cloned()
        .enumerate()
        .map(|(k, r)| (r, k))
        .collect();
    rs.positive_roots = roots;
    Ok(rs)
}

impl RootSystem {
    pub fn type_letter(&self) -> TypeLetter {
        self.type_letter
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.type_letter, self.rank)
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// Length of the longest element, i.e. `|Φ₊|`.
    pub fn w0_length(&self) -> usize {
        self.positive_roots.len()
    }

    /// Position of a positive root in [`Self::positive_roots`].
    pub fn root_index(&self, beta: &Root) -> Option<usize> {
        self.index.get(beta).copied()
    }

    pub fn is_root(&self, v: &Root) -> bool {
        self.index.contains_key(v) || self.index.contains_key(&v.neg())
    }

    /// The symmetric pairing `i . j` on letters (1-based).
    pub fn pairing(&self, i: usize, j: usize) -> i64 {
        self.cartan[i - 1][j - 1]
    }

    pub fn check_letter(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank {
            Err(Error::LetterOutOfRange {
                letter: i,
                rank: self.rank,
            })
        } else {
            Ok(())
        }
    }

    pub fn check_word(&self, word: &Word) -> Result<()> {
        word.letters()
            .iter()
            .try_for_each(|&l| self.check_letter(l as usize))
    }

    /// `(α_i, v)` for a lattice vector `v`.
    pub fn pair_simple(&self, i: usize, v: &[i64]) -> i64 {
        self.cartan[i - 1].iter().zip(v).map(|(a, b)| a * b).sum()
    }

    /// Symmetric bilinear form on the root lattice.
    pub fn form(&self, u: &Root, v: &Root) -> i64 {
        (1..=self.rank)
            .map(|i| u.0[i - 1] * self.pair_simple(i, &v.0))
            .sum()
    }

    /// `s_i(v) = v - (α_i, v) α_i`.
    pub fn reflect(&self, i: usize, v: &Root) -> Root {
        let c = self.pair_simple(i, &v.0);
        let mut out = v.0.clone();
        out[i - 1] -= c;
        Root(out)
    }

    /// `s_i λ = λ - λ_i α_i`, with `α_i` written in fundamental weights.
    pub fn weight_reflect(&self, i: usize, lambda: &WeightVector) -> WeightVector {
        let li = lambda.0[i - 1];
        let out = lambda
            .0
            .iter()
            .enumerate()
            .map(|(j, &c)| c - li * self.cartan[j][i - 1])
            .collect();
        WeightVector(out)
    }

    /// Applies `s_{j_1} ⋯ s_{j_r}` to `v` (rightmost reflection first).
    pub fn apply_word(&self, word: &Word, v: &Root) -> Root {
        word.letters()
            .iter()
            .rev()
            .fold(v.clone(), |acc, &l| self.reflect(l as usize, &acc))
    }

    pub fn apply_word_to_weight(&self, word: &Word, lambda: &WeightVector) -> WeightVector {
        word.letters().iter().rev().fold(lambda.clone(), |acc, &l| {
            self.weight_reflect(l as usize, &acc)
        })
    }

    /// The roots `β_k = s_{j_1} ⋯ s_{j_{k-1}}(α_{j_k})`.
    pub fn inversion_roots(&self, word: &Word) -> Vec<Root> {
        let letters = word.letters();
        let mut out = Vec::with_capacity(letters.len());
        for k in 0..letters.len() {
            let prefix = Word::new(letters[..k].to_vec());
            out.push(self.apply_word(&prefix, &Root::simple(self.rank, letters[k] as usize)));
        }
        out
    }

    /// Simple roots adjacent to `i` in the Dynkin diagram.
    pub fn neighbours(&self, i: usize) -> Vec<usize> {
        (1..=self.rank)
            .filter(|&j| self.pairing(i, j) == -1)
            .collect()
    }
}

/// Free-function form of [`RootSystem::reflect`].
pub fn reflect(rs: &RootSystem, i: usize, v: &Root) -> Root {
    rs.reflect(i, v)
}

/// Free-function form of [`RootSystem::weight_reflect`].
pub fn weight_reflect(rs: &RootSystem, i: usize, lambda: &WeightVector) -> WeightVector {
    rs.weight_reflect(i, lambda)
}

/// Free-function form of [`RootSystem::inversion_roots`].
pub fn inversion_roots(rs: &RootSystem, word: &Word) -> Vec<Root> {
    rs.inversion_roots(word)
}
