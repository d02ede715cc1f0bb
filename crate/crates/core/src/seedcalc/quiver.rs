use std::collections::BTreeSet;

use serde::Serialize;

use crate::rootsys::RootSystem;
use crate::weylwords::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ArrowKind {
    Ordinary,
    Horizontal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub kind: ArrowKind,
}

/// Next and previous occurrence of each position's letter, 1-based, with the
/// sentinels `N+1` and `0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Occurrences {
    plus: Vec<usize>,
    minus: Vec<usize>,
}

impl Occurrences {
    pub fn new(word: &Word) -> Occurrences {
        let l = word.letters();
        let n = l.len();
        let mut plus = vec![n + 1; n + 1];
        let mut minus = vec![0; n + 1];
        for k in 0..n {
            if let Some(m) = (k + 1..n).find(|&m| l[m] == l[k]) {
                plus[k + 1] = m + 1;
                minus[m + 1] = k + 1;
            }
        }
        Occurrences { plus, minus }
    }

    /// `j₊`.
    pub fn plus(&self, j: usize) -> usize {
        self.plus[j]
    }

    /// `j₋`.
    pub fn minus(&self, j: usize) -> usize {
        self.minus[j]
    }
}

/// The quiver attached to a reduced word of the longest element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Quiver {
    pub vertices: usize,
    pub frozen: BTreeSet<usize>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn is_frozen(&self, j: usize) -> bool {
        self.frozen.contains(&j)
    }

    pub fn exchangeable(&self) -> Vec<usize> {
        (1..=self.vertices)
            .filter(|j| !self.frozen.contains(j))
            .collect()
    }

    /// Sources of arrows ending at `j`.
    pub fn in_vertices(&self, j: usize) -> Vec<usize> {
        self.arrows
            .iter()
            .filter(|a| a.target == j)
            .map(|a| a.source)
            .collect()
    }

    /// Targets of arrows starting at `j`.
    pub fn out_vertices(&self, j: usize) -> Vec<usize> {
        self.arrows
            .iter()
            .filter(|a| a.source == j)
            .map(|a| a.target)
            .collect()
    }

    pub fn horizontal_count(&self) -> usize {
        self.arrows
            .iter()
            .filter(|a| a.kind == ArrowKind::Horizontal)
            .count()
    }
}

/// Ordinary arrows `u → v` when `i_u . i_v = -1` and `u < v < u₊ < v₊`;
/// horizontal arrows `u₊ → u` for every exchangeable `u`.
pub(crate) fn quiver_of(rs: &RootSystem, word: &Word) -> Quiver {
    let n = word.len();
    let occ = Occurrences::new(word);
    let frozen: BTreeSet<usize> = (1..=n).filter(|&u| occ.plus(u) == n + 1).collect();
    let mut arrows = Vec::new();
    for u in 1..=n {
        let up = occ.plus(u);
        if up == n + 1 {
            continue;
        }
        for v in u + 1..up {
            if rs.pairing(word.at(u), word.at(v)) == -1 && up < occ.plus(v) {
                arrows.push(Arrow {
                    source: u,
                    target: v,
                    kind: ArrowKind::Ordinary,
                });
            }
        }
        arrows.push(Arrow {
            source: up,
            target: u,
            kind: ArrowKind::Horizontal,
        });
    }
    arrows.sort();
    Quiver {
        vertices: n,
        frozen,
        arrows,
    }
}
