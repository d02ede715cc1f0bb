use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::symbolics::FormProduct;
use crate::weylwords::{braid_positions, commutation_positions, Word};

use super::seed::{FlagMinorKey, Seed};
use super::violation::Violation;

#[derive(Clone, Debug)]
pub struct WalkLimits {
    /// Stop after this many seeds; `None` walks the whole graph.
    pub max_seeds: Option<usize>,
    /// Worker threads for frontier processing.
    pub threads: usize,
}

impl Default for WalkLimits {
    fn default() -> Self {
        WalkLimits {
            max_seeds: None,
            threads: 1,
        }
    }
}

/// The single-valued map from flag minors to their `P` values.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Atlas {
    pub entries: BTreeMap<FlagMinorKey, FormProduct>,
}

impl Atlas {
    pub fn insert(&mut self, key: FlagMinorKey, p: FormProduct) -> Result<()> {
        match self.entries.get(&key) {
            Some(old) if *old != p => Err(Error::KeyInconsistency {
                key: key.to_string(),
                first: old.to_string(),
                second: p.to_string(),
            }),
            Some(_) => Ok(()),
            None => {
                self.entries.insert(key, p);
                Ok(())
            }
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains_value(&self, p: &FormProduct) -> bool {
        self.entries.values().any(|v| v == p)
    }

    pub fn to_json(&self) -> Vec<AtlasEntry> {
        self.entries
            .iter()
            .map(|(k, p)| AtlasEntry {
                key: k.clone(),
                p: p.clone(),
            })
            .collect()
    }
}

/// `{"key": {"letter": 2, "weight": [..]}, "p": [["a1",1],["a1+a2",1]]}`.
#[derive(Clone, Debug, Serialize)]
pub struct AtlasEntry {
    pub key: FlagMinorKey,
    pub p: FormProduct,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct WalkStats {
    pub seeds: usize,
    pub braid_steps: usize,
    pub commutation_steps: usize,
    pub exchange_checks: usize,
    pub root_relation_checks: usize,
    pub complete: bool,
}

#[derive(Clone, Debug)]
pub struct WalkReport {
    pub atlas: Atlas,
    pub stats: WalkStats,
    pub words: Vec<Word>,
}

struct Visit {
    keyed: Vec<(FlagMinorKey, FormProduct)>,
    neighbours: Vec<Seed>,
    braid_steps: usize,
    commutation_steps: usize,
}

fn fail(v: Violation) -> Error {
    Error::PropertyViolation(Box::new(v))
}

fn visit(seed: &Seed) -> Result<Visit> {
    if let Some(v) = seed.check_all().into_iter().next() {
        return Err(fail(v));
    }
    let rs = seed.root_system();
    let mut neighbours = Vec::new();
    let braids = braid_positions(rs, seed.word());
    for &k in &braids {
        if !seed.braid_root_relation(k) {
            return Err(fail(Violation {
                check: "braid roots".into(),
                word: seed.word().to_string(),
                index: k,
                lhs: seed.beta(k).add(seed.beta(k + 2)).to_string(),
                rhs: seed.beta(k + 1).to_string(),
            }));
        }
        let m = seed.braid_mutate(k).map_err(|e| match e {
            Error::NotDivisible { numerator, divisor } => fail(Violation {
                check: "A (divisibility)".into(),
                word: seed.word().to_string(),
                index: k,
                lhs: numerator,
                rhs: divisor,
            }),
            other => other,
        })?;
        if !seed.exchange_identity(k, &m) {
            return Err(fail(Violation {
                check: "exchange".into(),
                word: seed.word().to_string(),
                index: k,
                lhs: format!("1/({}*{})", seed.p(k), m.p(k)),
                rhs: format!("1/({}) + 1/({})", seed.p_in(k), seed.p_out(k)),
            }));
        }
        neighbours.push(m);
    }
    let commutes = commutation_positions(rs, seed.word());
    for &k in &commutes {
        neighbours.push(seed.commute_move(k)?);
    }
    Ok(Visit {
        keyed: seed.keyed_values(),
        neighbours,
        braid_steps: braids.len(),
        commutation_steps: commutes.len(),
    })
}

/// Breadth-first traversal of all seeds reachable from `start`, checking every
/// property at every seed and every identity at every braid step.
///
/// Frontiers are processed in parallel and merged in word order, so the
/// result does not depend on the thread count.
pub fn walk(start: &Seed, limits: &WalkLimits) -> Result<WalkReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(limits.threads.max(1))
        .build()
        .map_err(|e| Error::Range(format!("thread pool: {e}")))?;
    pool.install(|| walk_inner(start, limits))
}

fn walk_inner(start: &Seed, limits: &WalkLimits) -> Result<WalkReport> {
    let mut atlas = Atlas::default();
    let mut stats = WalkStats::default();
    let mut seen: HashSet<Word> = HashSet::from([start.word().clone()]);
    let mut words = Vec::new();
    let mut frontier = vec![start.clone()];
    let cap = limits.max_seeds.unwrap_or(usize::MAX);
    stats.complete = true;
    while !frontier.is_empty() {
        let room = cap - words.len();
        if frontier.len() > room {
            frontier.truncate(room);
            stats.complete = false;
        }
        if frontier.is_empty() {
            break;
        }
        let visits: Vec<Result<Visit>> = frontier.par_iter().map(visit).collect();
        let mut next = Vec::new();
        for (seed, v) in frontier.iter().zip(visits) {
            let v = v?;
            words.push(seed.word().clone());
            stats.seeds += 1;
            stats.braid_steps += v.braid_steps;
            stats.exchange_checks += v.braid_steps;
            stats.root_relation_checks += v.braid_steps;
            stats.commutation_steps += v.commutation_steps;
            for (k, p) in v.keyed {
                atlas.insert(k, p)?;
            }
            for n in v.neighbours {
                if seen.insert(n.word().clone()) {
                    next.push(n);
                }
            }
        }
        if !stats.complete {
            break;
        }
        next.sort_by(|a, b| a.word().cmp(b.word()));
        frontier = next;
    }
    words.sort();
    Ok(WalkReport {
        atlas,
        stats,
        words,
    })
}
