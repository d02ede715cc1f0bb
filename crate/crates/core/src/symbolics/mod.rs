//! Exact symbolic kernel: linear forms, products of linear forms, sparse
//! polynomials and sums of reciprocals.

mod form;
mod poly;
mod rational;

pub use form::{FormProduct, FormRows, LinearForm};
pub use poly::{Monomial, Poly, MAX_VARS};
pub use rational::{
    equals_inverse, equals_inverse_direct, equals_inverse_randomized, equals_inverse_with,
    random_points, randomized_seed, rational_sum_equal, rational_sum_equal_randomized, CheckMode,
    RationalSum, ReducedFraction, DEFAULT_SEED, DEFAULT_TRIALS, DIRECT_DEGREE_LIMIT, POINT_RANGE,
};

/// Free-function form of [`FormProduct::expand`] over the integers.
pub fn expand(fp: &FormProduct) -> Poly<num_bigint::BigInt> {
    fp.expand()
}

/// Free-function form of [`FormProduct::multiplicity`].
pub fn multiplicity(beta: &LinearForm, p: &FormProduct) -> u32 {
    p.multiplicity(beta)
}

/// Free-function form of [`FormProduct::divide_exact`].
pub fn divide_exact(p: &FormProduct, q: &FormProduct) -> crate::Result<FormProduct> {
    p.divide_exact(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn lf(s: &str, n: usize) -> LinearForm {
        LinearForm::parse(s, n).unwrap()
    }

    fn fp(s: &str, n: usize) -> FormProduct {
        FormProduct::parse(s, n).unwrap()
    }

    #[test]
    fn expansion() {
        assert_eq!(expand(&FormProduct::one()), Poly::one());
        let p = fp("(a1)^2", 2);
        assert_eq!(p.expand::<BigInt>().to_string(), "1*a1^2");
        let q = fp("(a1)*(a1+a2)", 2);
        assert_eq!(q.expand::<BigInt>().to_string(), "1*a1^2+1*a1^1*a2^1");
    }

    #[test]
    fn poly_text_round_trip() {
        let p: Poly<BigInt> = fp("(a1+2*a2)^3*(a2+a3)", 3).expand();
        let s = p.to_string();
        assert_eq!(Poly::<BigInt>::parse(&s).unwrap(), p);
        let q = p.sub(&Poly::constant(BigInt::from(7)));
        assert_eq!(Poly::<BigInt>::parse(&q.to_string()).unwrap(), q);
        assert_eq!(Poly::<BigInt>::zero().to_string(), "0");
    }

    #[test]
    fn exact_division() {
        let p: Poly<BigInt> = fp("(a1+a2)^2*(2*a1+3*a2)", 2).expand();
        let q = p.div_linear(&[2, 3]).unwrap();
        assert_eq!(q, fp("(a1+a2)^2", 2).expand());
        assert!(fp("(a1+a2)", 2)
            .expand::<BigInt>()
            .div_linear(&[1, 0])
            .is_none());
    }

    #[test]
    fn multiplicities_and_division() {
        let p = fp("(a1)^2*(a2)", 2);
        assert_eq!(multiplicity(&lf("a1", 2), &p), 2);
        assert_eq!(multiplicity(&lf("a1", 2), &FormProduct::one()), 0);
        assert_eq!(divide_exact(&p, &fp("a1", 2)).unwrap(), fp("(a1)*(a2)", 2));
        assert!(divide_exact(&p, &p).unwrap().is_one());
        assert!(divide_exact(&fp("a1", 2), &fp("a2", 2)).is_err());
    }

    #[test]
    fn form_text() {
        let p = fp("(a1)^2*(a1+a3)*(a1+a2+2*a3+a4)", 4);
        assert_eq!(FormProduct::parse(&p.to_string(), 4).unwrap(), p);
        assert_eq!(p.degree(), 4);
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"[["a1",2],["a1+a3",1],["a1+a2+2*a3+a4",1]]"#
        );
        assert_eq!(lf("[1,1,2,1]", 4), lf("a1 + a2 + 2a3 + a4", 4));
    }

    #[test]
    fn inverse_checks() {
        let one = BigInt::from(1);
        let s = RationalSum::from_terms(vec![(one.clone(), fp("a1", 2))]);
        assert!(equals_inverse(&s, &fp("a1", 2)));
        let s = RationalSum::from_terms(vec![(one.clone(), fp("(a1)*(a1+a2)", 2))]);
        assert!(equals_inverse(&s, &fp("(a1)*(a1+a2)", 2)));
        assert!(!equals_inverse(&s, &fp("(a1)*(a2)", 2)));

        // 1/a1 + 1/a2 = (a1+a2)/(a1 a2)
        let a =
            RationalSum::from_terms(vec![(one.clone(), fp("a1", 2)), (one.clone(), fp("a2", 2))]);
        let b = RationalSum::from_terms(vec![
            (one.clone(), fp("(a1)*(a1+a2)", 2)),
            (one.clone(), fp("(a2)*(a1+a2)", 2)),
        ]);
        // 1/(a1(a1+a2)) + 1/(a2(a1+a2)) = 1/(a1 a2)
        assert!(equals_inverse(&b, &fp("(a1)*(a2)", 2)));
        assert!(rational_sum_equal(&a, &a));
        assert!(!rational_sum_equal(&a, &b));
    }

    #[test]
    fn exchange_in_rank_two() {
        let one = BigInt::from(1);
        let lhs = RationalSum::from_terms(vec![(one.clone(), fp("(a1)*(a2)", 2))]);
        let rhs = RationalSum::from_terms(vec![
            (one.clone(), fp("(a2)*(a1+a2)", 2)),
            (one, fp("(a1)*(a1+a2)", 2)),
        ]);
        assert!(rational_sum_equal(&lhs, &rhs));
        assert!(rational_sum_equal_randomized(&lhs, &rhs, 2, 20, 7));
    }

    #[test]
    fn reduction_strips_linear_factors() {
        let one = BigInt::from(1);
        let s = RationalSum::from_terms(vec![
            (one.clone(), fp("(a2)*(a2+a3)*(a1+a2+a3)", 3)),
            (one, fp("(a2)*(a1+a2)*(a1+a2+a3)", 3)),
        ]);
        let r = s.reduce();
        assert_eq!(
            r.numerator,
            LinearForm::parse("a1+2*a2+a3", 3).unwrap().to_poly()
        );
        assert_eq!(r.denominator, fp("(a2)*(a1+a2)*(a2+a3)*(a1+a2+a3)", 3));
        assert_eq!(s.reduce_pairwise(), r);
    }
}
