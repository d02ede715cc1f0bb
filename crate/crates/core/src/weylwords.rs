//! Words in simple reflections, Weyl group elements and reduced-word combinatorics.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem};

/// A finite sequence of letters in `1..=rank`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(letters: Vec<u8>) -> Word {
        Word(letters)
    }

    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 1-based access.
    pub fn at(&self, k: usize) -> usize {
        self.0[k - 1] as usize
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&mut self, letter: u8) {
        self.0.push(letter);
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Compact form without separators, e.g. `2312`.
    pub fn to_digits(&self) -> String {
        self.0.iter().map(|l| l.to_string()).collect()
    }

    /// Parses a compact digit string such as `2312`.
    pub fn from_digits(s: &str) -> Result<Word> {
        s.trim()
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .filter(|&d| d > 0)
                    .map(|d| d as u8)
                    .ok_or_else(|| Error::Parse(format!("bad letter {c:?} in {s:?}")))
            })
            .collect::<Result<Vec<u8>>>()
            .map(Word)
    }

    /// Weight `Σ α_{j_k}` in simple-root coordinates.
    pub fn weight(&self, rank: usize) -> Root {
        let mut v = vec![0i64; rank];
        for &l in &self.0 {
            v[l as usize - 1] += 1;
        }
        Root(v)
    }

    /// Product notation `s2s3s1`.
    pub fn to_reflections(&self) -> String {
        if self.0.is_empty() {
            return "e".to_string();
        }
        self.0.iter().map(|l| format!("s{l}")).collect()
    }

    /// Parses product notation `s2s3s1` (also accepts `s_2 s_3`).
    pub fn from_reflections(s: &str) -> Result<Word> {
        let cleaned: String = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '_')
            .collect();
        if cleaned == "e" || cleaned.is_empty() {
            return Ok(Word::empty());
        }
        let mut out = Vec::new();
        for part in cleaned.split('s').skip(1) {
            let v: u8 = part
                .parse()
                .map_err(|_| Error::Parse(format!("bad reflection {part:?} in {s:?}")))?;
            if v == 0 {
                return Err(Error::Parse(format!("letter 0 in {s:?}")));
            }
            out.push(v);
        }
        if !cleaned.starts_with('s') {
            return Err(Error::Parse(format!(
                "{s:?} is not a product of reflections"
            )));
        }
        Ok(Word(out))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Accepts `2,3,1`; the empty string is the empty word.
impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        let t = s.trim();
        if t.is_empty() {
            return Ok(Word::empty());
        }
        t.split(',')
            .map(|p| {
                p.trim()
                    .parse::<u8>()
                    .ok()
                    .filter(|&v| v > 0)
                    .ok_or_else(|| Error::Parse(format!("bad letter {p:?} in word {t:?}")))
            })
            .collect::<Result<Vec<u8>>>()
            .map(Word)
    }
}

impl From<Vec<u8>> for Word {
    fn from(v: Vec<u8>) -> Word {
        Word(v)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Word, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An element of the Weyl group, stored as its integer matrix on the root
/// lattice (column `j` is the image of `α_j`) together with its inverse.
#[derive(Clone, Debug)]
pub struct WeylElement {
    rank: usize,
    m: Vec<i64>,
    inv: Vec<i64>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m
    }
}

impl Eq for WeylElement {}

impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.m.hash(state);
    }
}

impl PartialOrd for WeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for WeylElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.m.cmp(&other.m)
    }
}

impl WeylElement {
    pub fn identity(rank: usize) -> WeylElement {
        let mut m = vec![0; rank * rank];
        for i in 0..rank {
            m[i * rank + i] = 1;
        }
        WeylElement {
            rank,
            inv: m.clone(),
            m,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Row-major matrix entries.
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        self.m.chunks(self.rank).map(|r| r.to_vec()).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == WeylElement::identity(self.rank)
    }

    pub fn inverse(&self) -> WeylElement {
        WeylElement {
            rank: self.rank,
            m: self.inv.clone(),
            inv: self.m.clone(),
        }
    }

    // X <- X s_i : column operation
    fn col_op(rank: usize, x: &mut [i64], cartan: &[Vec<i64>], i: usize) {
        for j in 0..rank {
            let a = cartan[i][j];
            if j != i && a != 0 {
                for r in 0..rank {
                    x[r * rank + j] -= a * x[r * rank + i];
                }
            }
        }
        for r in 0..rank {
            x[r * rank + i] = -x[r * rank + i];
        }
    }

    // X <- s_i X : row operation
    fn row_op(rank: usize, x: &mut [i64], cartan: &[Vec<i64>], i: usize) {
        for c in 0..rank {
            let mut acc = -x[i * rank + c];
            for k in 0..rank {
                if k != i {
                    acc -= cartan[i][k] * x[k * rank + c];
                }
            }
            x[i * rank + c] = acc;
        }
    }

    /// `w s_i`.
    pub fn mul_simple_right(&self, rs: &RootSystem, i: usize) -> WeylElement {
        let mut out = self.clone();
        Self::col_op(self.rank, &mut out.m, rs.cartan(), i - 1);
        Self::row_op(self.rank, &mut out.inv, rs.cartan(), i - 1);
        out
    }

    /// `s_i w`.
    pub fn mul_simple_left(&self, rs: &RootSystem, i: usize) -> WeylElement {
        let mut out = self.clone();
        Self::row_op(self.rank, &mut out.m, rs.cartan(), i - 1);
        Self::col_op(self.rank, &mut out.inv, rs.cartan(), i - 1);
        out
    }

    fn apply_matrix(rank: usize, x: &[i64], v: &[i64]) -> Vec<i64> {
        (0..rank)
            .map(|r| (0..rank).map(|c| x[r * rank + c] * v[c]).sum())
            .collect()
    }

    pub fn apply(&self, v: &Root) -> Root {
        Root(Self::apply_matrix(self.rank, &self.m, v.coeffs()))
    }

    pub fn apply_inverse(&self, v: &Root) -> Root {
        Root(Self::apply_matrix(self.rank, &self.inv, v.coeffs()))
    }

    fn column_negative(rank: usize, x: &[i64], i: usize) -> bool {
        (0..rank).any(|r| x[r * rank + i - 1] < 0)
    }

    /// `i` with `w⁻¹(α_i) < 0`.
    pub fn is_left_descent(&self, i: usize) -> bool {
        Self::column_negative(self.rank, &self.inv, i)
    }

    /// `i` with `w(α_i) < 0`.
    pub fn is_right_descent(&self, i: usize) -> bool {
        Self::column_negative(self.rank, &self.m, i)
    }

    pub fn left_descents(&self) -> Vec<usize> {
        (1..=self.rank)
            .filter(|&i| self.is_left_descent(i))
            .collect()
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (1..=self.rank)
            .filter(|&i| self.is_right_descent(i))
            .collect()
    }

    /// Number of positive roots sent to negative roots by `w⁻¹`.
    pub fn length(&self, rs: &RootSystem) -> usize {
        rs.positive_roots()
            .iter()
            .filter(|b| self.apply_inverse(b).is_negative())
            .count()
    }

    /// The inversion set `Φ₊ ∩ w Φ₋`, in the order of `positive_roots`.
    pub fn inversion_set(&self, rs: &RootSystem) -> Vec<Root> {
        rs.positive_roots()
            .iter()
            .filter(|b| self.apply_inverse(b).is_negative())
            .cloned()
            .collect()
    }

    /// The lexicographically smallest reduced word, by stripping left descents.
    pub fn reduced_word(&self, rs: &RootSystem) -> Word {
        let mut w = self.clone();
        let mut out = Vec::new();
        while let Some(i) = (1..=self.rank).find(|&i| w.is_left_descent(i)) {
            out.push(i as u8);
            w = w.mul_simple_left(rs, i);
        }
        Word(out)
    }
}

/// The product `s_{j_1} ⋯ s_{j_r}`.
pub fn element(rs: &RootSystem, word: &Word) -> WeylElement {
    word.letters()
        .iter()
        .fold(WeylElement::identity(rs.rank()), |w, &l| {
            w.mul_simple_right(rs, l as usize)
        })
}

/// The longest element.
pub fn longest_element(rs: &RootSystem) -> WeylElement {
    let mut w = WeylElement::identity(rs.rank());
    while let Some(i) = (1..=rs.rank()).find(|&i| !w.is_right_descent(i)) {
        w = w.mul_simple_right(rs, i);
    }
    w
}

pub fn is_reduced(rs: &RootSystem, word: &Word) -> bool {
    if rs.check_word(word).is_err() {
        return false;
    }
    let betas = rs.inversion_roots(word);
    let mut seen = HashSet::with_capacity(betas.len());
    betas.into_iter().all(|b| b.is_positive() && seen.insert(b))
}

pub fn require_reduced(rs: &RootSystem, word: &Word) -> Result<()> {
    rs.check_word(word)?;
    if is_reduced(rs, word) {
        Ok(())
    } else {
        Err(Error::NotReduced(word.to_string()))
    }
}

/// Every element of `W` together with its length, in breadth-first order.
pub fn all_elements(rs: &RootSystem) -> Vec<(WeylElement, usize)> {
    let id = WeylElement::identity(rs.rank());
    let mut seen: HashSet<WeylElement> = HashSet::new();
    seen.insert(id.clone());
    let mut layer = vec![id];
    let mut out = Vec::new();
    let mut len = 0;
    while !layer.is_empty() {
        let mut next = Vec::new();
        for w in &layer {
            for i in 1..=rs.rank() {
                if !w.is_right_descent(i) {
                    let u = w.mul_simple_right(rs, i);
                    if seen.insert(u.clone()) {
                        next.push(u);
                    }
                }
            }
        }
        out.extend(layer.into_iter().map(|w| (w, len)));
        next.sort();
        layer = next;
        len += 1;
    }
    out
}

/// Memoizing enumerator of `Red(w)`.
#[derive(Default)]
pub struct ReducedWordCache {
    memo: HashMap<WeylElement, std::rc::Rc<Vec<Word>>>,
}

impl ReducedWordCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, rs: &RootSystem, w: &WeylElement) -> std::rc::Rc<Vec<Word>> {
        if let Some(v) = self.memo.get(w) {
            return v.clone();
        }
        let descents = w.left_descents();
        let result = if descents.is_empty() {
            vec![Word::empty()]
        } else {
            // descents are visited in increasing order and each tail list is
            // sorted, so the concatenation is already lexicographic
            let mut acc = Vec::new();
            for i in descents {
                let tail = self.get(rs, &w.mul_simple_left(rs, i));
                acc.extend(tail.iter().map(|t| {
                    let mut v = Vec::with_capacity(t.len() + 1);
                    v.push(i as u8);
                    v.extend_from_slice(t.letters());
                    Word(v)
                }));
            }
            acc
        };
        let rc = std::rc::Rc::new(result);
        self.memo.insert(w.clone(), rc.clone());
        rc
    }
}

/// `Red(w)` in lexicographic order.
pub fn reduced_words(rs: &RootSystem, w: &WeylElement) -> Vec<Word> {
    ReducedWordCache::new().get(rs, w).as_ref().clone()
}

/// `|Red(w)|` without materializing the words.
pub fn count_reduced_words(rs: &RootSystem, w: &WeylElement) -> u128 {
    fn go(rs: &RootSystem, w: &WeylElement, memo: &mut HashMap<WeylElement, u128>) -> u128 {
        if let Some(&c) = memo.get(w) {
            return c;
        }
        let d = w.left_descents();
        let c = if d.is_empty() {
            1
        } else {
            d.into_iter()
                .map(|i| go(rs, &w.mul_simple_left(rs, i), memo))
                .sum()
        };
        memo.insert(w.clone(), c);
        c
    }
    go(rs, w, &mut HashMap::new())
}

/// Positions `k` (1-based) where `(j_k, j_{k+1})` commute.
pub fn commutation_positions(rs: &RootSystem, word: &Word) -> Vec<usize> {
    let l = word.letters();
    (1..l.len())
        .filter(|&k| rs.pairing(l[k - 1] as usize, l[k] as usize) == 0)
        .collect()
}

/// Positions `k` (1-based) carrying a braid factor `(p,q,p)` with `p.q = -1`.
pub fn braid_positions(rs: &RootSystem, word: &Word) -> Vec<usize> {
    let l = word.letters();
    (1..l.len().saturating_sub(1))
        .filter(|&k| l[k - 1] == l[k + 1] && rs.pairing(l[k - 1] as usize, l[k] as usize) == -1)
        .collect()
}

pub fn apply_commutation(word: &Word, k: usize) -> Word {
    let mut v = word.0.clone();
    v.swap(k - 1, k);
    Word(v)
}

pub fn apply_braid(word: &Word, k: usize) -> Word {
    let mut v = word.0.clone();
    let (p, q) = (v[k - 1], v[k]);
    v[k - 1] = q;
    v[k] = p;
    v[k + 1] = q;
    Word(v)
}

fn closure(rs: &RootSystem, word: &Word, braids: bool) -> BTreeSet<Word> {
    let mut seen: HashSet<Word> = HashSet::new();
    seen.insert(word.clone());
    let mut queue = VecDeque::from([word.clone()]);
    while let Some(u) = queue.pop_front() {
        let mut nbrs: Vec<Word> = commutation_positions(rs, &u)
            .into_iter()
            .map(|k| apply_commutation(&u, k))
            .collect();
        if braids {
            nbrs.extend(
                braid_positions(rs, &u)
                    .into_iter()
                    .map(|k| apply_braid(&u, k)),
            );
        }
        for v in nbrs {
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    seen.into_iter().collect()
}

/// Connected component of `word` under commutation and braid moves.
pub fn braid_closure(rs: &RootSystem, word: &Word) -> Result<BTreeSet<Word>> {
    require_reduced(rs, word)?;
    Ok(closure(rs, word, true))
}

/// Connected component of `word` under commutation moves only.
pub fn commutation_class(rs: &RootSystem, word: &Word) -> Result<BTreeSet<Word>> {
    require_reduced(rs, word)?;
    Ok(closure(rs, word, false))
}

/// Membership in the classes FC, Min, Min⁺ and strict elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub fully_commutative: bool,
    pub minuscule: bool,
    pub dominant_minuscule: bool,
    pub strict: bool,
}

fn next_occurrence(l: &[u8], k: usize) -> usize {
    (k + 1..l.len()).find(|&m| l[m] == l[k]).unwrap_or(l.len())
}

fn has_braid_factor(rs: &RootSystem, word: &Word) -> bool {
    !braid_positions(rs, word).is_empty()
}

/// Stembridge's criterion on one reduced word.
fn stembridge(rs: &RootSystem, word: &Word) -> (bool, bool) {
    let l = word.letters();
    let n = l.len();
    let dot = |a: u8, b: u8| rs.pairing(a as usize, b as usize);
    let mut minuscule = true;
    let mut dominant = true;
    for k in 0..n {
        let kp = next_occurrence(l, k);
        if kp < n {
            let s: i64 = (k + 1..kp).map(|m| dot(l[k], l[m])).sum();
            if s != -2 {
                minuscule = false;
            }
        } else {
            let s: i64 = (k + 1..n).map(|m| dot(l[k], l[m])).sum();
            if s < -1 {
                dominant = false;
            }
        }
    }
    (minuscule, minuscule && dominant)
}

/// Whether a single reduced word has a cut with no straddling pair `j_p.j_q != 0`.
pub fn has_gap(rs: &RootSystem, word: &Word) -> bool {
    let l = word.letters();
    (1..l.len()).any(|r| {
        l[..r].iter().all(|&p| {
            l[r..]
                .iter()
                .all(|&q| rs.pairing(p as usize, q as usize) == 0)
        })
    })
}

pub fn classify(rs: &RootSystem, w: &WeylElement) -> Classification {
    let word = w.reduced_word(rs);
    let class = closure(rs, &word, false);
    let fully_commutative = !class.iter().any(|u| has_braid_factor(rs, u));
    let (minuscule, dominant_minuscule) = stembridge(rs, &word);
    let strict = if fully_commutative {
        // no braid move applies, so the commutation class is all of Red(w)
        !class.iter().any(|u| has_gap(rs, u))
    } else {
        !closure(rs, &word, true).iter().any(|u| has_gap(rs, u))
    };
    Classification {
        fully_commutative,
        minuscule,
        dominant_minuscule,
        strict,
    }
}

/// Connected components of the support of `word` in the Dynkin graph, ordered
/// by first appearance.
pub fn support_components(rs: &RootSystem, word: &Word) -> Vec<Vec<u8>> {
    let mut order: Vec<u8> = Vec::new();
    for &l in word.letters() {
        if !order.contains(&l) {
            order.push(l);
        }
    }
    let mut comps: Vec<Vec<u8>> = Vec::new();
    let mut assigned: HashSet<u8> = HashSet::new();
    for &start in &order {
        if assigned.contains(&start) {
            continue;
        }
        let mut comp = vec![start];
        assigned.insert(start);
        let mut stack = vec![start];
        while let Some(a) = stack.pop() {
            for &b in &order {
                if !assigned.contains(&b) && rs.pairing(a as usize, b as usize) == -1 {
                    assigned.insert(b);
                    comp.push(b);
                    stack.push(b);
                }
            }
        }
        comps.push(comp);
    }
    comps
}

/// Splits a reduced word into commuting blocks; one block iff the element is strict.
pub fn gap_split(rs: &RootSystem, word: &Word) -> Result<Vec<Word>> {
    require_reduced(rs, word)?;
    if word.is_empty() {
        return Ok(vec![Word::empty()]);
    }
    let comps = support_components(rs, word);
    Ok(comps
        .iter()
        .map(|c| {
            Word(
                word.letters()
                    .iter()
                    .copied()
                    .filter(|l| c.contains(l))
                    .collect(),
            )
        })
        .collect())
}
