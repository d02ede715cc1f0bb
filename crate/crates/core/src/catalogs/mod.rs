//! Reference tables: the type A closed form, the bundled D₄ tables, and the
//! sweeps comparing enumerations against them.

mod d4;
mod evidence;

pub use d4::{
    a3_tables, audit_b_identities, d4_tables, expand_shorthand, A3Tables, BAudit, BIdentity, CCase,
    D4Tables, TABLES_JSON, TABLES_SHA256,
};
pub use evidence::{
    a3_flag_minor_comparison, compare_listed, conjecture_evidence, d4_list_comparison,
    min_plus_zero, negative_control, ElementEvidence, EvidenceReport, ListComparison,
    NegativeControl, SplitCheck,
};

use crate::error::{Error, Result};
use crate::symbolics::{FormProduct, LinearForm};

/// `[l;m] = α_l + ⋯ + α_m` in rank `n`.
pub fn segment(n: usize, l: usize, m: usize) -> LinearForm {
    let mut c = vec![0i64; n];
    for x in &mut c[l - 1..m] {
        *x = 1;
    }
    LinearForm::new(c).expect("nonempty segment")
}

/// `P[k,r] = ∏_{1 ≤ l ≤ k ≤ m ≤ r+k-1} [l;m]` in type `A_n`.
pub fn type_a_p(n: usize, k: usize, r: usize) -> Result<FormProduct> {
    if n == 0 || r > n || k + r > n + 1 {
        return Err(Error::Range(format!(
            "P[{k},{r}] needs 0 <= r <= n and 0 <= k <= n-r+1 (n = {n})"
        )));
    }
    let mut p = FormProduct::one();
    if k == 0 || r == 0 {
        return Ok(p);
    }
    for l in 1..=k {
        for m in k..=r + k - 1 {
            p.insert(segment(n, l, m), 1);
        }
    }
    Ok(p)
}
