//! Hook-length identities for dominant minuscule elements.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::characters::{dbar, homogeneous_character};
use crate::error::{Error, Result};
use crate::rootsys::RootSystem;
use crate::symbolics::{equals_inverse, equals_inverse_randomized, CheckMode, FormProduct};
use crate::weylwords::{classify, count_reduced_words, WeylElement};

/// Length up to which `nakada_identity` defaults to exact expansion.
pub const EXACT_LENGTH_LIMIT: usize = 10;

fn require_dominant_minuscule(rs: &RootSystem, w: &WeylElement) -> Result<()> {
    if classify(rs, w).dominant_minuscule {
        Ok(())
    } else {
        Err(Error::NotDominantMinuscule(w.reduced_word(rs).to_string()))
    }
}

/// Both sides of the count formula `|Red(w)| = l(w)! / ∏ ht(β)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookCount {
    pub lhs: BigInt,
    pub rhs: BigRational,
}

impl HookCount {
    pub fn equal(&self) -> bool {
        BigRational::from_integer(self.lhs.clone()) == self.rhs
    }
}

pub fn peterson_proctor(rs: &RootSystem, w: &WeylElement) -> Result<HookCount> {
    require_dominant_minuscule(rs, w)?;
    let lhs = BigInt::from(count_reduced_words(rs, w));
    let inv = w.inversion_set(rs);
    let fact: BigInt = (1..=inv.len()).map(BigInt::from).product();
    let heights: BigInt = inv.iter().map(|b| BigInt::from(b.height())).product();
    Ok(HookCount {
        lhs,
        rhs: BigRational::new(fact, heights),
    })
}

/// `∏_{β ∈ Φ₊^w} β` as a product of linear forms.
pub fn inversion_product(rs: &RootSystem, w: &WeylElement) -> FormProduct {
    FormProduct::from_roots(w.inversion_set(rs).iter())
}

/// The value of the homogeneous module of `w`: the inverse of `∏ Φ₊^w`.
pub fn dbar_strongly_homogeneous(rs: &RootSystem, w: &WeylElement) -> Result<FormProduct> {
    require_dominant_minuscule(rs, w)?;
    Ok(inversion_product(rs, w))
}

/// Default mode for an element of the given length.
pub fn default_mode(length: usize) -> CheckMode {
    if length <= EXACT_LENGTH_LIMIT {
        CheckMode::Exact
    } else {
        CheckMode::randomized_default()
    }
}

/// `∏ 1/β = Σ_{Red(w)} ∏_k 1/(α_{j_1}+⋯+α_{j_k})`.
pub fn nakada_identity(rs: &RootSystem, w: &WeylElement, mode: CheckMode) -> Result<bool> {
    require_dominant_minuscule(rs, w)?;
    let sum = dbar(rs, &homogeneous_character(rs, w)?);
    let p = inversion_product(rs, w);
    Ok(match mode {
        CheckMode::Exact => equals_inverse(&sum, &p),
        CheckMode::Randomized { trials, seed } => {
            equals_inverse_randomized(&sum, &p, rs.rank(), trials, seed)
        }
    })
}

/// Specialization of the colored identity at `α_i = 1`: the sum over reduced
/// words of `∏_k 1/k` equals `1/∏ ht(β)`, i.e. `|Red(w)| / l(w)! = 1/∏ ht(β)`.
pub fn specialized_hook_sides(
    rs: &RootSystem,
    w: &WeylElement,
) -> Result<(BigRational, BigRational)> {
    require_dominant_minuscule(rs, w)?;
    let n = w.length(rs);
    let fact: BigInt = (1..=n).map(BigInt::from).product();
    let count = BigInt::from(count_reduced_words(rs, w));
    let lhs = BigRational::new(count, fact);
    let heights: BigInt = w
        .inversion_set(rs)
        .iter()
        .map(|b| BigInt::from(b.height()))
        .product();
    Ok((lhs, BigRational::new(BigInt::one(), heights)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_root_system, TypeLetter};
    use crate::symbolics::LinearForm;
    use crate::weylwords::{element, Word};

    fn e(rs: &RootSystem, s: &str) -> WeylElement {
        element(rs, &s.parse::<Word>().unwrap())
    }

    #[test]
    fn counts() {
        let a2 = build_root_system(TypeLetter::A, 2).unwrap();
        let h = peterson_proctor(&a2, &e(&a2, "1,2")).unwrap();
        assert_eq!(h.lhs, BigInt::from(1));
        assert!(h.equal());
        let a3 = build_root_system(TypeLetter::A, 3).unwrap();
        for s in ["2,1,3,2", "2,3,1,2"] {
            let h = peterson_proctor(&a3, &e(&a3, s)).unwrap();
            assert_eq!(h.lhs, BigInt::from(2));
            assert!(h.equal());
        }
        assert!(peterson_proctor(&a3, &e(&a3, "2,3,1")).is_err());
    }

    #[test]
    fn colored_identity() {
        let a3 = build_root_system(TypeLetter::A, 3).unwrap();
        assert!(nakada_identity(&a3, &e(&a3, "2,1,3,2"), CheckMode::Exact).unwrap());
        assert!(nakada_identity(&a3, &e(&a3, "2,1,3,2"), CheckMode::randomized_default()).unwrap());
        let a2 = build_root_system(TypeLetter::A, 2).unwrap();
        assert!(nakada_identity(&a2, &e(&a2, "1,2"), CheckMode::Exact).unwrap());
    }

    #[test]
    fn strongly_homogeneous_values() {
        let a3 = build_root_system(TypeLetter::A, 3).unwrap();
        let p = dbar_strongly_homogeneous(&a3, &e(&a3, "1,2,3")).unwrap();
        let expected = FormProduct::parse("(a1)*(a1+a2)*(a1+a2+a3)", 3).unwrap();
        assert_eq!(p, expected);
        let s1 = dbar_strongly_homogeneous(&a3, &e(&a3, "1")).unwrap();
        assert_eq!(s1, FormProduct::from_form(LinearForm::simple(3, 1)));
    }
}
