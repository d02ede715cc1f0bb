use std::sync::Arc;

use flagmult::catalogs::{
    a3_flag_minor_comparison, a3_tables, audit_b_identities, conjecture_evidence,
    d4_list_comparison, d4_tables, negative_control, TABLES_SHA256,
};
use flagmult::characters::{dbar as dbar_of, homogeneous_character, q_commutation_check};
use flagmult::hookformulas::{default_mode, inversion_product, nakada_identity, peterson_proctor};
use flagmult::lyndonwords::{determinantal_words, good_lyndon_words, LetterOrder};
use flagmult::seedcalc::{standard_seed, walk as walk_seeds, Seed, Start, WalkLimits};
use flagmult::symbolics::{equals_inverse, randomized_seed, CheckMode, DEFAULT_TRIALS};
use flagmult::weylwords::{
    classify as classify_element, count_reduced_words, element, reduced_words,
};
use flagmult::{build_root_system, RootSystem, TypeLetter, Word};
use serde_json::{json, Value};

use crate::render::{lib_error, CliError, Report};
use crate::{CatalogArg, Check, ModeArg, MoveArg, StartArg, StartArgs, Target};

type Res<T> = Result<T, CliError>;

fn system(t: &Target) -> Res<RootSystem> {
    build_root_system(t.type_letter, t.rank).map_err(|e| lib_error(e, "--rank"))
}

fn checked_word(rs: &RootSystem, w: &Word) -> Res<()> {
    rs.check_word(w).map_err(|e| lib_error(e, "--word"))
}

fn letter_order(rs: &RootSystem, order: Option<&Word>) -> Res<LetterOrder> {
    match order {
        None => Ok(LetterOrder::natural(rs.rank())),
        Some(w) => {
            let o = LetterOrder::new(w.letters().iter().map(|&l| l as usize).collect())
                .map_err(|e| lib_error(e, "--order"))?;
            if o.letters().len() != rs.rank() {
                return Err(CliError::usage(
                    "--order",
                    format!("need a permutation of 1..={}", rs.rank()),
                ));
            }
            Ok(o)
        }
    }
}

pub fn roots(t: &Target) -> Res<Report> {
    let rs = system(t)?;
    let roots: Vec<Value> = rs
        .positive_roots()
        .iter()
        .map(|r| json!({"root": r.to_string(), "coeffs": r.coeffs(), "height": r.height()}))
        .collect();
    Ok(Report::ok(json!({
        "type": rs.name(),
        "count": roots.len(),
        "roots": roots,
    })))
}

pub fn redwords(t: &Target, word: &Word, limit: u128) -> Res<Report> {
    let rs = system(t)?;
    checked_word(&rs, word)?;
    let w = element(&rs, word);
    let count = count_reduced_words(&rs, &w);
    let words: Value = if count <= limit {
        reduced_words(&rs, &w)
            .iter()
            .map(|u| json!(u.to_string()))
            .collect()
    } else {
        Value::Null
    };
    Ok(Report::ok(json!({
        "element": w.reduced_word(&rs).to_string(),
        "length": w.length(&rs),
        "count": count.to_string(),
        "words": words,
    })))
}

pub fn classify(t: &Target, word: &Word) -> Res<Report> {
    let rs = system(t)?;
    checked_word(&rs, word)?;
    flagmult::weylwords::require_reduced(&rs, word).map_err(|e| lib_error(e, "--word"))?;
    let c = classify_element(&rs, &element(&rs, word));
    Ok(Report::ok(json!(c)))
}

pub fn hook(t: &Target, word: &Word) -> Res<Report> {
    let rs = system(t)?;
    checked_word(&rs, word)?;
    let h = peterson_proctor(&rs, &element(&rs, word)).map_err(|e| lib_error(e, "--word"))?;
    let equal = h.equal();
    let value = json!({
        "reduced_words": h.lhs.to_string(),
        "hook_formula": h.rhs.to_string(),
        "equal": equal,
    });
    let witness = (!equal).then(|| {
        json!({"check": "hook formula", "word": word.to_string(), "lhs": h.lhs.to_string(), "rhs": h.rhs.to_string()})
    });
    Ok(Report::ok(value).with_witness(witness))
}

fn check_mode(check: &Check, length: usize) -> CheckMode {
    let trials = check.trials.unwrap_or(DEFAULT_TRIALS);
    match check.mode {
        Some(ModeArg::Exact) => CheckMode::Exact,
        Some(ModeArg::Randomized) => CheckMode::Randomized {
            trials,
            seed: randomized_seed(),
        },
        None => match default_mode(length) {
            CheckMode::Randomized { seed, .. } => CheckMode::Randomized { trials, seed },
            m => m,
        },
    }
}

pub fn nakada(t: &Target, word: &Word, check: &Check) -> Res<Report> {
    let rs = system(t)?;
    checked_word(&rs, word)?;
    let w = element(&rs, word);
    let mode = check_mode(check, w.length(&rs));
    let equal = nakada_identity(&rs, &w, mode).map_err(|e| lib_error(e, "--word"))?;
    let mut value = json!({"equal": equal});
    if let CheckMode::Randomized { trials, seed } = mode {
        value["mode"] = json!("randomized");
        value["seed"] = json!(seed);
        value["trials"] = json!(trials);
    }
    let witness = (!equal).then(|| {
        let sum = dbar_of(
            &rs,
            &homogeneous_character(&rs, &w).expect("dominant minuscule"),
        );
        json!({
            "check": "nakada",
            "word": word.to_string(),
            "lhs": sum.reduce().to_string(),
            "rhs": format!("1 / ({})", inversion_product(&rs, &w)),
        })
    });
    Ok(Report::ok(value).with_witness(witness))
}

pub fn lyndon(t: &Target, order: Option<&Word>) -> Res<Report> {
    let rs = system(t)?;
    let o = letter_order(&rs, order)?;
    let gl = good_lyndon_words(&rs, &o).map_err(|e| lib_error(e, "--order"))?;
    let entries: Vec<Value> = gl
        .sorted_roots()
        .iter()
        .map(|r| json!({"root": r.to_string(), "word": gl.table[r].to_digits()}))
        .collect();
    Ok(Report::ok(json!({"type": rs.name(), "words": entries})))
}

pub fn detwords(t: &Target, order: Option<&Word>) -> Res<Report> {
    let rs = system(t)?;
    let o = letter_order(&rs, order)?;
    let dw = determinantal_words(&rs, &o).map_err(|e| lib_error(e, "--order"))?;
    let entries: Vec<Value> = dw
        .iter()
        .map(|d| {
            json!({
                "word": d.word.to_digits(),
                "factors": d.factorization.iter().map(|(f, e)| json!([f.to_digits(), e])).collect::<Vec<_>>(),
            })
        })
        .collect();
    let mut sorted: Vec<String> = dw.iter().map(|d| d.word.to_digits()).collect();
    sorted.sort();
    Ok(Report::ok(
        json!({"type": rs.name(), "positions": entries, "sorted": sorted}),
    ))
}

fn start_of(s: &StartArgs) -> Res<Start> {
    match (s.start, &s.word) {
        (StartArg::Nat, _) => Ok(Start::Nat),
        (StartArg::Lex, _) => Ok(Start::Lex),
        (StartArg::Word, Some(w)) => Ok(Start::Word(w.clone())),
        (StartArg::Word, None) => Err(CliError::usage("--word", "--start word needs --word")),
    }
}

fn build_seed(t: &Target, s: &StartArgs) -> Res<Seed> {
    let rs = Arc::new(system(t)?);
    let start = start_of(s)?;
    if let Start::Word(w) = &start {
        checked_word(&rs, w)?;
    }
    standard_seed(rs, &start).map_err(|e| lib_error(e, "--start"))
}

fn seed_checks(seed: &Seed) -> (Value, Option<Value>) {
    let groups = [
        ("B", seed.check_b()),
        ("C", seed.check_c()),
        ("yhat", seed.check_yhat()),
        ("triangularity", seed.check_triangularity()),
        ("positivity", seed.check_positivity()),
    ];
    let witness = groups.iter().find_map(|(_, v)| v.first()).map(|v| json!(v));
    let mut checks = serde_json::Map::new();
    for (name, v) in groups {
        checks.insert(name.to_string(), json!(v.is_empty()));
    }
    (Value::Object(checks), witness)
}

pub fn seed(t: &Target, s: &StartArgs) -> Res<Report> {
    let seed = build_seed(t, s)?;
    let (checks, witness) = seed_checks(&seed);
    Ok(Report::ok(json!({"seed": seed.to_report(), "checks": checks})).with_witness(witness))
}

pub fn mutate(t: &Target, s: &StartArgs, position: usize, kind: MoveArg) -> Res<Report> {
    let seed = build_seed(t, s)?;
    let (moved, exchange) = match kind {
        MoveArg::Braid => {
            let m = seed
                .braid_mutate(position)
                .map_err(|e| lib_error(e, "--position"))?;
            let ok = seed.exchange_identity(position, &m);
            (m, Some(ok))
        }
        MoveArg::Commute => (
            seed.commute_move(position)
                .map_err(|e| lib_error(e, "--position"))?,
            None,
        ),
    };
    let (checks, mut witness) = seed_checks(&moved);
    if exchange == Some(false) {
        witness = Some(json!({
            "check": "exchange",
            "word": seed.word().to_string(),
            "index": position,
            "lhs": format!("1/(({})*({}))", seed.p(position), moved.p(position)),
            "rhs": format!("1/({}) + 1/({})", seed.p_in(position), seed.p_out(position)),
        }));
    }
    let mut value = json!({
        "from": seed.word().to_string(),
        "to": moved.word().to_string(),
        "move": match kind { MoveArg::Braid => "braid", MoveArg::Commute => "commute" },
        "position": position,
        "seed": moved.to_report(),
        "checks": checks,
    });
    if let Some(ok) = exchange {
        value["exchange_identity"] = json!(ok);
        value["old"] = json!(seed.p(position).to_string());
        value["new"] = json!(moved.p(position).to_string());
    }
    Ok(Report::ok(value).with_witness(witness))
}

pub fn walk(t: &Target, s: &StartArgs, threads: usize, max_seeds: Option<usize>) -> Res<Report> {
    if threads == 0 {
        return Err(CliError::usage("--threads", "need at least one thread"));
    }
    let seed = build_seed(t, s)?;
    let report = walk_seeds(&seed, &WalkLimits { max_seeds, threads })
        .map_err(|e| lib_error(e, "--start"))?;
    Ok(Report::ok(json!({
        "type": seed.root_system().name(),
        "start": seed.word().to_string(),
        "stats": report.stats,
        "atlas": report.atlas.to_json(),
    })))
}

pub fn dbar(t: &Target, word: Option<&Word>, catalog: Option<CatalogArg>) -> Res<Report> {
    let rs = system(t)?;
    match (word, catalog) {
        (Some(w), _) => {
            checked_word(&rs, w)?;
            let e = element(&rs, w);
            let c = classify_element(&rs, &e);
            let ch = homogeneous_character(&rs, &e).map_err(|e| lib_error(e, "--word"))?;
            let sum = dbar_of(&rs, &ch);
            let r = sum.reduce();
            let p = inversion_product(&rs, &e);
            let inverse = equals_inverse(&sum, &p);
            let witness = (c.dominant_minuscule && !inverse).then(|| {
                json!({"check": "homogeneous value", "word": w.to_string(), "lhs": r.to_string(), "rhs": format!("1 / ({p})")})
            });
            Ok(Report::ok(json!({
                "word": w.to_string(),
                "classification": c,
                "terms": sum.len(),
                "value": r.to_string(),
                "numerator": r.numerator.to_string(),
                "denominator": r.denominator.to_string(),
                "inversion_product": p.to_string(),
                "equals_inverse": inverse,
            }))
            .with_witness(witness))
        }
        (None, Some(CatalogArg::Frozen)) => {
            if (rs.type_letter(), rs.rank()) != (TypeLetter::D, 4) {
                return Err(CliError::usage(
                    "--type",
                    "the frozen character lives in type D4",
                ));
            }
            let tables = d4_tables().map_err(|e| lib_error(e, "--catalog"))?;
            let ch = &tables.frozen_character;
            let commutes: Vec<bool> = (1..=4).map(|i| q_commutation_check(&rs, i, ch)).collect();
            let sum = dbar_of(&rs, ch);
            let p11 = &tables.p[10];
            let r = sum.reduce();
            let inverse = r.is_inverse_of(p11);
            let witness = if !inverse {
                Some(
                    json!({"check": "frozen value", "word": tables.frozen_word.to_digits(), "lhs": r.to_string(), "rhs": format!("1 / ({p11})")}),
                )
            } else {
                commutes.iter().position(|c| !c).map(|i| {
                    json!({"check": "q-commutation", "word": tables.frozen_word.to_digits(), "index": i + 1, "lhs": "L(i) o M", "rhs": "M o L(i)"})
                })
            };
            Ok(Report::ok(json!({
                "word": tables.frozen_word.to_digits(),
                "weight": ch.weight.coeffs(),
                "entries": ch.entries.len(),
                "dimension": ch.dimension().to_string(),
                "q_commutes": commutes,
                "terms": sum.len(),
                "value": r.to_string(),
                "equals_inverse": inverse,
                "p": p11.to_string(),
            }))
            .with_witness(witness))
        }
        (None, None) => Err(CliError::usage("--word", "give --word or --catalog")),
    }
}

pub fn evidence(t: &Target, threads: usize) -> Res<Report> {
    let rs = Arc::new(system(t)?);
    let report =
        conjecture_evidence(rs.clone(), threads.max(1)).map_err(|e| lib_error(e, "--rank"))?;
    let mut value = json!({"report": report});
    match (rs.type_letter(), rs.rank()) {
        (TypeLetter::D, 4) => {
            value["listed"] = json!(d4_list_comparison().map_err(|e| lib_error(e, "--rank"))?);
        }
        (TypeLetter::A, 3) => {
            value["listed"] =
                json!(a3_flag_minor_comparison().map_err(|e| lib_error(e, "--rank"))?);
            value["negative_control"] =
                json!(negative_control().map_err(|e| lib_error(e, "--rank"))?);
        }
        _ => {}
    }
    let witness = report
        .min_plus_zero
        .iter()
        .find(|e| !e.in_atlas)
        .map(|e| json!({"check": "flag minor", "word": e.word.to_string(), "lhs": e.product.to_string(), "rhs": "not in atlas"}))
        .or_else(|| {
            report.non_strict.iter().find(|s| !s.holds).map(|s| {
                json!({"check": "gap split", "word": s.word.to_string(), "lhs": s.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" | "), "rhs": "inversion set"})
            })
        });
    Ok(Report::ok(value).with_witness(witness))
}

pub fn tables() -> Res<Report> {
    let d4 = d4_tables().map_err(|e| lib_error(e, "--catalog"))?;
    let a3 = a3_tables().map_err(|e| lib_error(e, "--catalog"))?;
    let rs = Arc::new(build_root_system(TypeLetter::D, 4).map_err(|e| lib_error(e, "--rank"))?);
    let seed = standard_seed(rs, &Start::Nat).map_err(|e| lib_error(e, "--start"))?;
    let digits = |v: &[Word]| v.iter().map(Word::to_digits).collect::<Vec<_>>();
    Ok(Report::ok(json!({
        "sha256": TABLES_SHA256,
        "d4": {
            "i_nat": d4.i_nat.to_string(),
            "dominant_words": digits(&d4.dominant_words),
            "frozen_dominant_words": digits(&d4.frozen_dominant_words),
            "p": d4.p.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "bootstrap_matches": seed.ps() == &d4.p[..],
            "b_identities": audit_b_identities(&d4, &seed),
            "frozen_character": d4.frozen_character.to_json(),
            "strict_dominant_minuscule": d4.strict_dominant_minuscule,
        },
        "a3": {
            "natural_dominant_words": digits(&a3.natural_dominant_words),
            "flag_minor_elements": a3.flag_minor_elements.iter().map(Word::to_reflections).collect::<Vec<_>>(),
            "non_flag_minor": a3.non_flag_minor.to_reflections(),
            "numerator": a3.non_flag_minor_numerator.to_string(),
            "denominator": a3.non_flag_minor_denominator.to_string(),
        },
    })))
}
