//! Acceptance harness: one PASS/FAIL line per criterion, with timings.

mod common;

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{a_edges, d4_edges, DescentOracle};
use flagmult::catalogs::{
    audit_b_identities, conjecture_evidence, d4_list_comparison, d4_tables, negative_control,
    type_a_p,
};
use flagmult::characters::{dbar, homogeneous_character, q_commutation_check};
use flagmult::hookformulas::{nakada_identity, peterson_proctor};
use flagmult::lyndonwords::{determinantal_words, good_lyndon_words, LetterOrder};
use flagmult::seedcalc::{standard_seed, walk, Seed, Start, WalkLimits};
use flagmult::symbolics::{equals_inverse, CheckMode};
use flagmult::weylwords::{
    all_elements, braid_closure, braid_positions, classify, commutation_positions, element,
    gap_split, reduced_words,
};
use flagmult::{build_root_system, FormProduct, LinearForm, Root, RootSystem, TypeLetter, Word};

type Outcome = Result<String, String>;

fn a(n: usize) -> RootSystem {
    build_root_system(TypeLetter::A, n).unwrap()
}

fn d4() -> RootSystem {
    build_root_system(TypeLetter::D, 4).unwrap()
}

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn form(s: &str, n: usize) -> LinearForm {
    LinearForm::parse(s, n).unwrap()
}

fn criterion_1() -> Outcome {
    let a3 = a(3);
    let c = |rs: &RootSystem, s: &str| classify(rs, &element(rs, &w(s)));
    for s in ["1,2,3", "2,1,3,2"] {
        let k = c(&a3, s);
        ensure(
            k.fully_commutative && k.minuscule && k.dominant_minuscule,
            || format!("A3 {s}: {k:?}"),
        )?;
    }
    let k = c(&a3, "2,3,1");
    ensure(
        k.fully_commutative && k.minuscule && !k.dominant_minuscule,
        || format!("A3 2,3,1: {k:?}"),
    )?;
    let k = c(&a3, "3,2,1,2");
    ensure(!k.fully_commutative && !k.minuscule, || {
        format!("A3 3,2,1,2: {k:?}")
    })?;
    let d = d4();
    let k = c(&d, "3,1,2,4,3");
    ensure(k.fully_commutative && !k.minuscule, || {
        format!("D4 3,1,2,4,3: {k:?}")
    })?;
    Ok("5 examples".into())
}

fn criterion_2() -> Outcome {
    let mut checked = 0;
    let systems: Vec<(RootSystem, Vec<(usize, usize)>)> = (1..=4)
        .map(|n| (a(n), a_edges(n)))
        .chain([(d4(), d4_edges())])
        .collect();
    for (rs, edges) in systems {
        let mut oracle = DescentOracle::new(rs.rank(), &edges);
        for (e, _) in all_elements(&rs) {
            if !classify(&rs, &e).dominant_minuscule {
                continue;
            }
            let word = e.reduced_word(&rs);
            let h = peterson_proctor(&rs, &e).map_err(|x| x.to_string())?;
            let count = oracle.count_word(word.letters());
            ensure(h.lhs == BigInt::from(count), || {
                format!("{} {word}: library {} vs oracle {count}", rs.name(), h.lhs)
            })?;
            let fact: BigInt = (1..=word.len()).map(BigInt::from).product();
            let heights: BigInt = rs
                .inversion_roots(&word)
                .iter()
                .map(|b| BigInt::from(b.height()))
                .product();
            ensure(
                BigRational::new(fact, heights) == BigRational::from_integer(count.into()),
                || format!("{} {word}: hook formula fails", rs.name()),
            )?;
            ensure(h.equal(), || format!("{} {word}: {:?}", rs.name(), h))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} dominant minuscule elements"))
}

/// `Σ_{Red(w)} ∏_k 1/(partial sums)` at a point, from the oracle's reduced words.
fn nakada_at_point(oracle: &DescentOracle, word: &[u8], x: &[BigInt]) -> BigRational {
    let v = oracle.rho_image(word);
    let mut total = BigRational::zero();
    for red in oracle.words(&v) {
        let mut acc = BigInt::zero();
        let mut term = BigRational::one();
        for &l in &red {
            acc += &x[l as usize - 1];
            term /= BigRational::from_integer(acc.clone());
        }
        total += term;
    }
    total
}

fn criterion_3() -> Outcome {
    let mut checked = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (rs, edges) in [(a(4), a_edges(4)), (d4(), d4_edges())] {
        let oracle = DescentOracle::new(rs.rank(), &edges);
        for (e, l) in all_elements(&rs) {
            if l > 8 || !classify(&rs, &e).dominant_minuscule {
                continue;
            }
            let word = e.reduced_word(&rs);
            let exact = nakada_identity(&rs, &e, CheckMode::Exact).map_err(|x| x.to_string())?;
            ensure(exact, || {
                format!("{} {word}: exact identity fails", rs.name())
            })?;
            let x: Vec<BigInt> = (0..rs.rank())
                .map(|_| BigInt::from(rng.gen_range(1..1000)))
                .collect();
            let lhs: BigRational = rs
                .inversion_roots(&word)
                .iter()
                .map(|b| {
                    let v: BigInt = b
                        .coeffs()
                        .iter()
                        .zip(&x)
                        .map(|(c, xi)| BigInt::from(*c) * xi)
                        .sum();
                    BigRational::new(BigInt::one(), v)
                })
                .product();
            ensure(lhs == nakada_at_point(&oracle, word.letters(), &x), || {
                format!("{} {word}: point evaluation disagrees", rs.name())
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} elements, exact"))
}

fn criterion_4() -> Outcome {
    let n = negative_control().map_err(|e| e.to_string())?;
    ensure(n.numerator == form("a1+2*a2+a3", 3).to_poly(), || {
        format!("numerator {}", n.numerator)
    })?;
    let support: BTreeSet<LinearForm> = n.denominator.factors().keys().cloned().collect();
    let expected: BTreeSet<LinearForm> = ["a2", "a1+a2", "a2+a3", "a1+a2+a3"]
        .iter()
        .map(|s| form(s, 3))
        .collect();
    ensure(support == expected && n.denominator.degree() == 4, || {
        format!("denominator {}", n.denominator)
    })?;
    ensure(
        n.classification.minuscule && !n.classification.dominant_minuscule,
        || format!("{:?}", n.classification),
    )?;
    ensure(
        n.candidates_tested == 56 && n.candidates_passing == 0,
        || {
            format!(
                "{} of {} candidates pass",
                n.candidates_passing, n.candidates_tested
            )
        },
    )?;
    // the individual candidates with the same support, checked directly
    let rs = a(3);
    let sum = dbar(
        &rs,
        &homogeneous_character(&rs, &element(&rs, &w("2,3,1"))).unwrap(),
    );
    let forms: Vec<LinearForm> = expected.into_iter().collect();
    for i in 0..4 {
        for j in i..4 {
            for k in j..4 {
                let p =
                    FormProduct::from_forms([forms[i].clone(), forms[j].clone(), forms[k].clone()]);
                ensure(!equals_inverse(&sum, &p), || format!("1/({p}) matches"))?;
            }
        }
    }
    Ok("numerator a1+2*a2+a3, 56 candidates rejected".into())
}

fn criterion_5() -> Outcome {
    for n in 1..=6 {
        let rs = a(n);
        let gl = good_lyndon_words(&rs, &LetterOrder::natural(n)).map_err(|e| e.to_string())?;
        for i in 1..=n {
            for j in i..=n {
                let mut c = vec![0i64; n];
                for x in &mut c[i - 1..j] {
                    *x = 1;
                }
                let expected = Word::new((i..=j).map(|x| x as u8).collect());
                ensure(gl.word(&Root(c.clone())) == Some(&expected), || {
                    format!("A{n} [{i};{j}] -> {:?}", gl.word(&Root(c.clone())))
                })?;
            }
        }
    }
    let gl = good_lyndon_words(&d4(), &LetterOrder::natural(4)).map_err(|e| e.to_string())?;
    let listed = [
        "1", "13", "132", "134", "1342", "13423", "2", "23", "234", "3", "34", "4",
    ];
    let got: Vec<String> = gl.sorted_words().iter().map(Word::to_digits).collect();
    ensure(got == listed, || format!("D4 {got:?}"))?;
    Ok("A1..A6 and D4".into())
}

fn criterion_6() -> Outcome {
    let sorted = |rs: &RootSystem| -> Result<Vec<String>, String> {
        let mut v: Vec<String> = determinantal_words(rs, &LetterOrder::natural(rs.rank()))
            .map_err(|e| e.to_string())?
            .iter()
            .map(|d| d.word.to_digits())
            .collect();
        v.sort();
        Ok(v)
    };
    let a3 = sorted(&a(3))?;
    ensure(a3 == ["1", "12", "123", "21", "2312", "321"], || {
        format!("A3 {a3:?}")
    })?;
    let d = sorted(&d4())?;
    let listed = [
        "1",
        "13",
        "132",
        "134",
        "134213",
        "134231",
        "2134",
        "23134213",
        "234132",
        "32134",
        "3423134213",
        "432134",
    ];
    ensure(d == listed, || format!("D4 {d:?}"))?;
    Ok("A3 and D4".into())
}

/// `{[l;m] : 1 ≤ l ≤ k ≤ m ≤ r+k-1}` as a multiset, built from the index set.
fn closed_form_oracle(n: usize, k: usize, r: usize) -> FormProduct {
    let mut forms = Vec::new();
    for l in 1..=k {
        for m in k..r + k {
            let c: Vec<i64> = (1..=n).map(|x| i64::from(l <= x && x <= m)).collect();
            forms.push(LinearForm::new(c).unwrap());
        }
    }
    FormProduct::from_forms(forms)
}

fn criterion_7() -> Outcome {
    let mut positions = 0;
    for n in 1..=6 {
        let rs = Arc::new(a(n));
        let seed = standard_seed(rs, &Start::Nat).map_err(|e| e.to_string())?;
        let mut seen = vec![0usize; n + 1];
        for j in 1..=seed.len() {
            let r = seed.word().at(j);
            seen[r] += 1;
            let k = seen[r];
            let expected = closed_form_oracle(n, k, r);
            ensure(
                type_a_p(n, k, r).map_err(|e| e.to_string())? == expected,
                || format!("A{n} P[{k},{r}] closed form"),
            )?;
            ensure(seed.p(j) == expected, || {
                format!(
                    "A{n} position {j}: {} vs P[{k},{r}] = {expected}",
                    seed.p(j)
                )
            })?;
            positions += 1;
        }
        ensure(
            seed.check_b().is_empty() && seed.check_c().is_empty(),
            || format!("A{n}: {:?} {:?}", seed.check_b(), seed.check_c()),
        )?;
    }
    Ok(format!("{positions} positions in A1..A6"))
}

fn criterion_8() -> Outcome {
    let t = d4_tables().map_err(|e| e.to_string())?;
    let rs = Arc::new(d4());
    let seed = standard_seed(rs, &Start::Nat).map_err(|e| e.to_string())?;
    ensure(seed.word() == &t.i_nat, || format!("i_nat {}", seed.word()))?;
    for j in 1..=12 {
        ensure(seed.p(j) == t.p[j - 1], || {
            format!("P{j}: bootstrap {} vs table {}", seed.p(j), t.p[j - 1])
        })?;
    }
    ensure(
        seed.check_b().is_empty() && seed.check_c().is_empty(),
        || "seed fails B or C".into(),
    )?;
    let audit = audit_b_identities(&t, &seed);
    let mut notes = Vec::new();
    for x in &audit {
        ensure(x.derived_holds, || {
            format!("recurrence at {} fails", x.position)
        })?;
        if !x.stored_holds {
            // a displayed identity may only fail where it disagrees with the recurrence
            ensure(!x.agrees(), || format!("{} fails", x.stored))?;
            notes.push(format!("{} read as {}", x.stored, x.derived));
        }
    }
    ensure(notes.len() <= 1, || format!("{notes:?}"))?;
    for c in &t.c_cases {
        ensure(c.holds(&t.p).map_err(|e| e.to_string())?, || {
            format!("{c:?}")
        })?;
    }
    let f = form("a1", 4);
    ensure(
        t.p[4].multiplicity(&f) == 2 && t.p[7].multiplicity(&f) == 1,
        || "(a1;P5),(a1;P8)".into(),
    )?;
    let g = form("a1+a2+a3", 4);
    ensure(
        t.p[7].multiplicity(&g) == 2 && t.p[10].multiplicity(&g) == 1,
        || "(a1+a2+a3;P8),(a1+a2+a3;P11)".into(),
    )?;
    let verbatim = audit.iter().filter(|x| x.stored_holds).count();
    let mut msg = format!("P1..P12 reproduced, {verbatim}/12 identities verbatim, 2 C cases");
    if !notes.is_empty() {
        msg += &format!("; index typo: {}", notes.join(", "));
    }
    Ok(msg)
}

fn criterion_9() -> Outcome {
    let t = d4_tables().map_err(|e| e.to_string())?;
    let rs = d4();
    let ch = &t.frozen_character;
    for i in 1..=4 {
        ensure(q_commutation_check(&rs, i, ch), || {
            format!("q-commutation with L({i})")
        })?;
    }
    let mut p11 = FormProduct::one();
    for mask in 0..8u32 {
        let mut c = vec![0i64, 0, 1, 0];
        for (bit, letter) in [1usize, 2, 4].iter().enumerate() {
            if mask & (1 << bit) != 0 {
                c[letter - 1] += 1;
            }
        }
        p11.insert(LinearForm::new(c).unwrap(), 1);
    }
    p11.insert(form("a1+a2+2*a3+a4", 4), 2);
    ensure(t.p[10] == p11, || format!("stored P11 {}", t.p[10]))?;
    let sum = dbar(&rs, ch);
    ensure(equals_inverse(&sum, &p11), || {
        format!("dbar = {}", sum.reduce())
    })?;
    ensure(ch.dimension() == BigInt::from(168), || {
        format!("dimension {}", ch.dimension())
    })?;
    Ok(format!("{} words, dimension 168", ch.entries.len()))
}

fn criterion_10() -> Outcome {
    let mut parts = Vec::new();
    for (rs, edges, threads, budget) in [
        (a(3), a_edges(3), 1, 1.0),
        (a(4), a_edges(4), 1, 30.0),
        (d4(), d4_edges(), 4, 120.0),
    ] {
        let name = rs.name();
        let mut oracle = DescentOracle::new(rs.rank(), &edges);
        let expected = oracle.longest_count() as usize;
        let seed = standard_seed(Arc::new(rs), &Start::Nat).map_err(|e| e.to_string())?;
        let now = Instant::now();
        let report = walk(
            &seed,
            &WalkLimits {
                max_seeds: None,
                threads,
            },
        )
        .map_err(|e| format!("{name}: {e}"))?;
        let secs = now.elapsed().as_secs_f64();
        let distinct: HashSet<&Word> = report.words.iter().collect();
        ensure(
            report.stats.complete && distinct.len() == expected && report.stats.seeds == expected,
            || format!("{name}: {} seeds, oracle {expected}", report.stats.seeds),
        )?;
        ensure(
            report.words.iter().all(|u| {
                oracle.is_reduced(u.letters())
                    && oracle.rho_image(u.letters()).iter().all(|&x| x == -1)
            }),
            || format!("{name}: visited a word that is not reduced for w0"),
        )?;
        ensure(secs < budget, || {
            format!("{name}: {secs:.1}s over {budget}s")
        })?;
        parts.push(format!(
            "{name} {expected} seeds/{} minors",
            report.atlas.len()
        ));
    }
    Ok(parts.join(", "))
}

fn criterion_11() -> Outcome {
    let cmp = d4_list_comparison().map_err(|e| e.to_string())?;
    ensure(cmp.enumerated == 32 && cmp.exact_modulo_garbled(), || {
        format!("{cmp:?}")
    })?;
    ensure(cmp.garbled == ["s3s2s2s3"], || {
        format!("garbled {:?}", cmp.garbled)
    })?;
    let mut msg = format!(
        "D4 list matches except garbled {:?} (enumeration has {:?})",
        cmp.garbled, cmp.missing
    );
    for rs in [a(3), d4()] {
        let name = rs.name();
        let r = conjecture_evidence(Arc::new(rs), 4).map_err(|e| e.to_string())?;
        ensure(r.all_in_atlas(), || {
            format!(
                "{name}: missing {:?}",
                r.min_plus_zero
                    .iter()
                    .filter(|e| !e.in_atlas)
                    .map(|e| e.word.to_string())
                    .collect::<Vec<_>>()
            )
        })?;
        msg += &format!(
            "; {name} {}/{} in atlas",
            r.min_plus_zero.len(),
            r.min_plus_zero.len()
        );
    }
    let mut splits = 0;
    for rs in (1..=5).map(a).chain([d4()]) {
        for (e, l) in all_elements(&rs) {
            let c = classify(&rs, &e);
            if l == 0 || !c.dominant_minuscule || c.strict {
                continue;
            }
            let word = e.reduced_word(&rs);
            let parts = gap_split(&rs, &word).map_err(|x| x.to_string())?;
            let mut union: Vec<Root> = parts.iter().flat_map(|p| rs.inversion_roots(p)).collect();
            let mut whole = e.inversion_set(&rs);
            union.sort();
            whole.sort();
            ensure(parts.len() > 1 && union == whole, || {
                format!("{} {word}", rs.name())
            })?;
            splits += 1;
        }
    }
    msg += &format!("; {splits} non-strict splits");
    Ok(msg)
}

fn criterion_12() -> Outcome {
    let mut tits = 0;
    for rs in [a(4), d4()] {
        for (e, l) in all_elements(&rs) {
            if l > 8 {
                continue;
            }
            let word = e.reduced_word(&rs);
            let closure = braid_closure(&rs, &word).map_err(|x| x.to_string())?;
            let red: BTreeSet<Word> = reduced_words(&rs, &e).into_iter().collect();
            ensure(closure == red, || format!("{} {word}", rs.name()))?;
            tits += 1;
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut pairs = 0;
    let starts: Vec<Seed> = [a(4), d4()]
        .into_iter()
        .map(|rs| standard_seed(Arc::new(rs), &Start::Nat).unwrap())
        .collect();
    let mut current: Vec<Seed> = starts.clone();
    while pairs < 1000 {
        let s = &mut current[pairs % 2];
        let rs = s.root_system();
        let braids = braid_positions(rs, s.word());
        let commutes = commutation_positions(rs, s.word());
        let braid = !braids.is_empty() && (commutes.is_empty() || rng.gen_bool(0.5));
        let (moved, back) = if braid {
            let k = braids[rng.gen_range(0..braids.len())];
            let m = s.braid_mutate(k).map_err(|e| e.to_string())?;
            let b = m.braid_mutate(k).map_err(|e| e.to_string())?;
            (m, b)
        } else {
            let k = commutes[rng.gen_range(0..commutes.len())];
            let m = s.commute_move(k).map_err(|e| e.to_string())?;
            let b = m.commute_move(k).map_err(|e| e.to_string())?;
            (m, b)
        };
        ensure(back.word() == s.word() && back.ps() == s.ps(), || {
            format!("move is not involutive at {}", s.word())
        })?;
        *s = moved;
        pairs += 1;
    }

    let mut braid_checks = 0;
    let mut seeds = 0;
    for start in starts {
        let mut seen = HashSet::from([start.word().clone()]);
        let mut queue = VecDeque::from([start]);
        while let Some(s) = queue.pop_front() {
            seeds += 1;
            ensure(s.check_triangularity().is_empty(), || {
                format!("multiplicity invariant at {}", s.word())
            })?;
            let rs = s.root_system();
            let mut next = Vec::new();
            for k in braid_positions(rs, s.word()) {
                let (b0, b1, b2) = (s.beta(k), s.beta(k + 1), s.beta(k + 2));
                ensure(&b0.add(b2) == b1, || {
                    format!("beta relation at {k} of {}", s.word())
                })?;
                braid_checks += 1;
                next.push(s.braid_mutate(k).map_err(|e| e.to_string())?);
            }
            for k in commutation_positions(rs, s.word()) {
                next.push(s.commute_move(k).map_err(|e| e.to_string())?);
            }
            for n in next {
                if seen.insert(n.word().clone()) {
                    queue.push_back(n);
                }
            }
        }
    }
    Ok(format!(
        "{tits} Tits checks, {pairs} involution pairs, {braid_checks} braid relations, {seeds} seeds"
    ))
}

type Criterion = (u32, &'static str, f64, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 12] = [
        (1, "Stembridge classification examples", 1.0, criterion_1),
        (2, "Peterson-Proctor counts (A1..A4, D4)", 30.0, criterion_2),
        (3, "Nakada identity, l(w) <= 8 (A4, D4)", 60.0, criterion_3),
        (4, "negative control s2s3s1", 1.0, criterion_4),
        (5, "good Lyndon tables", 1.0, criterion_5),
        (6, "determinantal dominant words", 1.0, criterion_6),
        (7, "type A bootstrap vs P[k,r]", 10.0, criterion_7),
        (8, "D4 tables, B identities, C cases", 5.0, criterion_8),
        (9, "D4 frozen character", 30.0, criterion_9),
        (10, "full walks A3, A4, D4", 151.0, criterion_10),
        (11, "strict dominant minuscule evidence", 60.0, criterion_11),
        (12, "property suite", 60.0, criterion_12),
    ];
    let mut failed = Vec::new();
    for (n, name, budget, f) in criteria {
        let now = Instant::now();
        let outcome = f();
        let took = now.elapsed();
        let outcome = match outcome {
            Ok(m) if took > Duration::from_secs_f64(budget) => Err(format!(
                "{m}; took {:.2}s, budget {budget}s",
                took.as_secs_f64()
            )),
            o => o,
        };
        match &outcome {
            Ok(m) => println!("PASS [{n:>2}] {name} ({:.3}s): {m}", took.as_secs_f64()),
            Err(m) => {
                println!("FAIL [{n:>2}] {name} ({:.3}s): {m}", took.as_secs_f64());
                failed.push(n);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
