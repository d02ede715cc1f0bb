//! Independent oracles shared by the integration tests. Nothing here goes
//! through the library's Weyl group code.

#![allow(dead_code)]

use std::collections::HashMap;

pub fn a_edges(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|i| (i, i + 1)).collect()
}

pub fn d4_edges() -> Vec<(usize, usize)> {
    vec![(1, 3), (2, 3), (3, 4)]
}

/// Chain `1-2-...-(n-2)` with `n-1` and `n` both attached to `n-2`, for `n >= 5`.
pub fn d_edges(n: usize) -> Vec<(usize, usize)> {
    if n == 4 {
        return d4_edges();
    }
    let mut e: Vec<_> = (1..n - 2).map(|i| (i, i + 1)).collect();
    e.extend([(n - 2, n - 1), (n - 2, n)]);
    e
}

pub fn cartan(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    for &(a, b) in edges {
        c[a - 1][b - 1] = -1;
        c[b - 1][a - 1] = -1;
    }
    c
}

/// Reduced words counted by left-descent recursion on the orbit of `ρ`:
/// `s_i w < w` iff the `i`-th coordinate of `w ρ` is negative.
pub struct DescentOracle {
    c: Vec<Vec<i64>>,
    memo: HashMap<Vec<i64>, u128>,
}

impl DescentOracle {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Self {
        DescentOracle {
            c: cartan(n, edges),
            memo: HashMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.c.len()
    }

    pub fn reflect(&self, i: usize, v: &[i64]) -> Vec<i64> {
        let vi = v[i - 1];
        v.iter()
            .zip(&self.c[i - 1])
            .map(|(x, cij)| x - vi * cij)
            .collect()
    }

    /// `w ρ` for `w = s_{j_1} ⋯ s_{j_l}`.
    pub fn rho_image(&self, word: &[u8]) -> Vec<i64> {
        let mut v = vec![1i64; self.rank()];
        for &l in word.iter().rev() {
            v = self.reflect(l as usize, &v);
        }
        v
    }

    pub fn count(&mut self, v: &[i64]) -> u128 {
        if v.iter().all(|&x| x > 0) {
            return 1;
        }
        if let Some(&c) = self.memo.get(v) {
            return c;
        }
        let mut total = 0;
        for i in 1..=self.rank() {
            if v[i - 1] < 0 {
                let u = self.reflect(i, v);
                total += self.count(&u);
            }
        }
        self.memo.insert(v.to_vec(), total);
        total
    }

    pub fn count_word(&mut self, word: &[u8]) -> u128 {
        let v = self.rho_image(word);
        self.count(&v)
    }

    pub fn longest_count(&mut self) -> u128 {
        let v = vec![-1i64; self.rank()];
        self.count(&v)
    }

    /// Every reduced word of the element with `w ρ = v`.
    pub fn words(&self, v: &[i64]) -> Vec<Vec<u8>> {
        if v.iter().all(|&x| x > 0) {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for i in 1..=self.rank() {
            if v[i - 1] < 0 {
                for mut tail in self.words(&self.reflect(i, v)) {
                    tail.insert(0, i as u8);
                    out.push(tail);
                }
            }
        }
        out
    }

    pub fn is_reduced(&self, word: &[u8]) -> bool {
        // each letter, read right to left, must lengthen the suffix it is applied to
        let mut v = vec![1i64; self.rank()];
        for &l in word.iter().rev() {
            if v[l as usize - 1] < 0 {
                return false;
            }
            v = self.reflect(l as usize, &v);
        }
        true
    }
}
