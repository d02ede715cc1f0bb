use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::form::FormProduct;
use super::poly::Poly;

type IntPoly = Poly<BigInt>;

/// Largest common-denominator degree for which sums are expanded in one pass.
pub const DIRECT_DEGREE_LIMIT: u32 = 24;

/// Default number of evaluation points in randomized mode.
pub const DEFAULT_TRIALS: usize = 20;

/// Default seed of the randomized mode; `FLAGMULT_SEED` overrides it.
pub const DEFAULT_SEED: u64 = 0x00f1_a9e5_eed0_2024;

/// Upper end of the coordinate range `[1, 10^6]` for evaluation points.
pub const POINT_RANGE: u64 = 1_000_000;

pub fn randomized_seed() -> u64 {
    std::env::var("FLAGMULT_SEED")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

/// How rational identities are decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckMode {
    Exact,
    Randomized { trials: usize, seed: u64 },
}

impl CheckMode {
    pub fn randomized_default() -> CheckMode {
        CheckMode::Randomized {
            trials: DEFAULT_TRIALS,
            seed: randomized_seed(),
        }
    }
}

/// A formal sum `Σ c_t / D_t` of reciprocals of form products.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RationalSum {
    pub terms: Vec<(BigInt, FormProduct)>,
}

impl RationalSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: Vec<(BigInt, FormProduct)>) -> Self {
        RationalSum { terms }
    }

    pub fn reciprocal(p: FormProduct) -> Self {
        RationalSum {
            terms: vec![(BigInt::one(), p)],
        }
    }

    pub fn push(&mut self, c: BigInt, d: FormProduct) {
        self.terms.push((c, d));
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn plus(&self, other: &RationalSum) -> RationalSum {
        let mut t = self.terms.clone();
        t.extend(other.terms.iter().cloned());
        RationalSum { terms: t }
    }

    pub fn negated(&self) -> RationalSum {
        RationalSum {
            terms: self.terms.iter().map(|(c, d)| (-c, d.clone())).collect(),
        }
    }

    /// Multiset lcm of all denominators.
    pub fn common_denominator(&self) -> FormProduct {
        self.terms
            .iter()
            .fold(FormProduct::one(), |acc, (_, d)| acc.lcm(d))
    }

    /// `Σ c_t · L / D_t` for the given common multiple `L`.
    pub fn numerator_over(&self, l: &FormProduct) -> IntPoly {
        let parts: Vec<IntPoly> = self
            .terms
            .par_iter()
            .map(|(c, d)| {
                let cofactor = l.divide_exact(d).expect("l is a common multiple");
                cofactor.expand::<BigInt>().scale(c)
            })
            .collect();
        parts.iter().fold(Poly::zero(), |acc, p| acc.add(p))
    }

    /// Exact value as a fraction whose numerator shares no linear factor with
    /// its denominator.
    pub fn reduce(&self) -> ReducedFraction {
        let l = self.common_denominator();
        if l.degree() <= DIRECT_DEGREE_LIMIT {
            ReducedFraction::new(self.numerator_over(&l), l)
        } else {
            self.reduce_pairwise()
        }
    }

    /// Divide-and-conquer accumulation, cancelling linear factors at every merge.
    pub fn reduce_pairwise(&self) -> ReducedFraction {
        fn go(terms: &[(BigInt, FormProduct)]) -> ReducedFraction {
            match terms.len() {
                0 => ReducedFraction::zero(),
                1 => ReducedFraction::new(Poly::constant(terms[0].0.clone()), terms[0].1.clone()),
                n => {
                    let (a, b) = terms.split_at(n / 2);
                    let (x, y) = rayon::join(|| go(a), || go(b));
                    x.add(&y)
                }
            }
        }
        go(&self.terms)
    }

    pub fn evaluate(&self, point: &[BigInt]) -> Option<BigRational> {
        let mut acc = BigRational::zero();
        for (c, d) in &self.terms {
            let v = d.evaluate(point);
            if v.is_zero() {
                return None;
            }
            acc += BigRational::new(c.clone(), v);
        }
        Some(acc)
    }
}

impl fmt::Display for RationalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (c, d)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}/({d})")?;
        }
        Ok(())
    }
}

/// `numerator / (scale · denominator)` with a positive integer `scale` and the
/// denominator a product of primitive linear forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedFraction {
    pub numerator: IntPoly,
    pub scale: BigInt,
    pub denominator: FormProduct,
}

impl ReducedFraction {
    pub fn zero() -> Self {
        ReducedFraction {
            numerator: Poly::zero(),
            scale: BigInt::one(),
            denominator: FormProduct::one(),
        }
    }

    /// Builds `num / den`, moving integer content into `scale` and cancelling
    /// every linear factor of `den` dividing `num`.
    pub fn new(numerator: IntPoly, denominator: FormProduct) -> Self {
        Self::scaled(numerator, BigInt::one(), denominator)
    }

    fn scaled(numerator: IntPoly, scale: BigInt, denominator: FormProduct) -> Self {
        if numerator.is_zero() {
            return Self::zero();
        }
        let (content, primitive) = denominator.primitive_split();
        let mut scale = scale * content;
        let mut num = numerator;
        let mut den = FormProduct::one();
        for (form, m) in primitive.iter() {
            let mut left = m;
            while left > 0 {
                match num.div_linear(form.coeffs()) {
                    Some(q) => {
                        num = q;
                        left -= 1;
                    }
                    None => break,
                }
            }
            den.insert(form.clone(), left);
        }
        let g = num.terms().fold(scale.clone(), |acc, (_, c)| acc.gcd(c));
        if !g.is_one() {
            num = num.div_scalar(&g);
            scale /= &g;
        }
        ReducedFraction {
            numerator: num,
            scale,
            denominator: den,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.numerator.is_zero() {
            return other.clone();
        }
        if other.numerator.is_zero() {
            return self.clone();
        }
        let l = self.denominator.lcm(&other.denominator);
        let a = self
            .numerator
            .mul(&l.divide_exact(&self.denominator).expect("lcm").expand())
            .scale(&other.scale);
        let b = other
            .numerator
            .mul(&l.divide_exact(&other.denominator).expect("lcm").expand())
            .scale(&self.scale);
        ReducedFraction::scaled(a.add(&b), &self.scale * &other.scale, l)
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// Whether the fraction is `1 / p`. Relies on unique factorization: the
    /// numerator has no factor in common with the denominator, so equality
    /// forces a unit numerator and identical multisets.
    pub fn is_inverse_of(&self, p: &FormProduct) -> bool {
        let (c, q) = p.primitive_split();
        self.denominator == q && self.numerator.scale(&c) == Poly::constant(self.scale.clone())
    }
}

impl fmt::Display for ReducedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.scale.is_one() {
            write!(f, "({}) / ({})", self.numerator, self.denominator)
        } else {
            write!(
                f,
                "({}) / ({}*{})",
                self.numerator, self.scale, self.denominator
            )
        }
    }
}

/// Direct criterion: with `D` the lcm of all `D_t` and `P`,
/// `Σ c_t · expand(D / D_t) · expand(P) = expand(D)`.
pub fn equals_inverse_direct(sum: &RationalSum, p: &FormProduct) -> bool {
    let d = sum.common_denominator().lcm(p);
    let lhs = sum.numerator_over(&d).mul(&p.expand());
    lhs == d.expand()
}

/// Exact test of `Σ c_t / D_t = 1 / P`.
pub fn equals_inverse(sum: &RationalSum, p: &FormProduct) -> bool {
    let d = sum.common_denominator().lcm(p);
    if d.degree() <= DIRECT_DEGREE_LIMIT {
        equals_inverse_direct(sum, p)
    } else {
        sum.reduce_pairwise().is_inverse_of(p)
    }
}

/// Exact test of `a = b` as rational functions.
pub fn rational_sum_equal(a: &RationalSum, b: &RationalSum) -> bool {
    let diff = a.plus(&b.negated());
    let l = diff.common_denominator();
    if l.degree() <= DIRECT_DEGREE_LIMIT {
        diff.numerator_over(&l).is_zero()
    } else {
        diff.reduce_pairwise().is_zero()
    }
}

/// Evaluation points with coordinates in `[1, 10^6]`.
pub fn random_points(rank: usize, trials: usize, seed: u64) -> Vec<Vec<BigInt>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials)
        .map(|_| {
            (0..rank)
                .map(|_| BigInt::from(rng.gen_range(1..=POINT_RANGE)))
                .collect()
        })
        .collect()
}

/// Compares both sides at random points in exact rational arithmetic. Points
/// where a denominator vanishes are skipped.
pub fn equals_inverse_randomized(
    sum: &RationalSum,
    p: &FormProduct,
    rank: usize,
    trials: usize,
    seed: u64,
) -> bool {
    random_points(rank, trials, seed).iter().all(|x| {
        let pv = p.evaluate(x);
        match sum.evaluate(x) {
            Some(_) if pv.is_zero() => true,
            Some(v) => v == BigRational::new(BigInt::one(), pv),
            None => true,
        }
    })
}

pub fn rational_sum_equal_randomized(
    a: &RationalSum,
    b: &RationalSum,
    rank: usize,
    trials: usize,
    seed: u64,
) -> bool {
    random_points(rank, trials, seed)
        .iter()
        .all(|x| match (a.evaluate(x), b.evaluate(x)) {
            (Some(u), Some(v)) => u == v,
            _ => true,
        })
}

/// Dispatches on `mode`.
pub fn equals_inverse_with(
    sum: &RationalSum,
    p: &FormProduct,
    rank: usize,
    mode: CheckMode,
) -> bool {
    match mode {
        CheckMode::Exact => equals_inverse(sum, p),
        CheckMode::Randomized { trials, seed } => {
            equals_inverse_randomized(sum, p, rank, trials, seed)
        }
    }
}
