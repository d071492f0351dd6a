//! Acceptance suite. Each test prints one `criterion N: PASS/FAIL`
//! line (run with `cargo test --test acceptance -- --nocapture` to see
//! them all). Every threshold is pinned here; all values are exact.
//!
//! Criterion 2 is expected to fail and is shipped failing on purpose:
//! the vanishing it asserts is not a property of the signature cocycle
//! and contradicts the known signatures checked by criteria 3 and 4 --
//! the same commutator-shaped cocycle term it requires to vanish is the
//! term that produces the -1 of the one-fiber example. See the test
//! body for the counterexample data.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use meyersig::bounds;
use meyersig::fibration::{load_shipped, signature_boundary, subtract, SubtractOptions,
};
use meyersig::meyer;
use meyersig::pipeline::{run_pipeline, THM11_PIPELINE};
use meyersig::reproduce;
use meyersig::sympl::{
    commutator, transvection, HomologyVector, IntersectionForm, SymplecticMatrix, TwistSign,
};
use meyersig::words::{
    evaluate, parse_word, print_word, EvalCtx, Factorization, MoveDirection, Word,
};
use meyersig::{atlas, Error};

const SIGN: TwistSign = TwistSign::Plus;
const H: usize = 3;

fn verdict(criterion: &str, passed: bool, detail: &str) {
    println!(
        "criterion {criterion}: {} -- {detail}",
        if passed { "PASS" } else { "FAIL" }
    );
    assert!(passed, "criterion {criterion} failed: {detail}");
}

fn random_sp(rng: &mut ChaCha8Rng) -> SymplecticMatrix {
    let j = IntersectionForm::new(H);
    let mut m = SymplecticMatrix::identity(H);
    let len = rng.gen_range(1..=12);
    for _ in 0..len {
        let mut coords = [0i64; 6];
        loop {
            for c in coords.iter_mut() {
                *c = rng.gen_range(-2..=2);
            }
            if coords.iter().any(|&c| c != 0) {
                break;
            }
        }
        let power = if rng.gen() { 1 } else { -1 };
        let t = transvection(&HomologyVector::from_i64(&coords), power, &j, SIGN).unwrap();
        m = m.mul(&t);
    }
    m
}

#[test]
fn criterion_01_meyer_cocycle_properties() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5153_0001);
    let id = SymplecticMatrix::identity(H);
    let mut failures = Vec::new();
    for trial in 0..200 {
        let a = random_sp(&mut rng);
        let b = random_sp(&mut rng);
        let c = random_sp(&mut rng);
        let tab = meyer::tau(&a, &b).unwrap();
        if meyer::tau(&a.mul(&b), &c).unwrap() + tab
            != meyer::tau(&a, &b.mul(&c)).unwrap() + meyer::tau(&b, &c).unwrap()
        {
            failures.push(format!("cocycle identity at trial {trial}"));
        }
        let m = random_sp(&mut rng);
        let mi = m.inverse();
        if meyer::tau(&m.mul(&a).mul(&mi), &m.mul(&b).mul(&mi)).unwrap() != tab {
            failures.push(format!("conjugation invariance at trial {trial}"));
        }
        if meyer::tau(&id, &b).unwrap() != 0 || meyer::tau(&a, &id).unwrap() != 0 {
            failures.push(format!("normalization at trial {trial}"));
        }
        if tab.unsigned_abs() as usize > 2 * H {
            failures.push(format!("|tau| bound at trial {trial}"));
        }
        if !failures.is_empty() {
            break;
        }
    }
    verdict(
        "1 (cocycle identity, conjugation invariance, normalization, bound; 200 trials)",
        failures.is_empty(),
        &failures.first().cloned().unwrap_or_else(|| "all exact".into()),
    );
}

#[test]
fn criterion_02_torus_canary() {
    // As stated: tau([A,B], B) = 0 for 200 random pairs, exact. This is
    // implemented faithfully and FAILS: the vanishing is not an identity
    // of the cocycle. It holds when A and B commute (the only case a
    // closed torus base can produce) but not for free pairs, and it is
    // inconsistent with criterion 3: the complement signature -1 of the
    // one-fiber example arises as 0 + tau([phi1, T], T) - 0 = -1, a
    // nonvanishing value of exactly the shape this criterion outlaws.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5153_0002);
    let mut nonzero = 0usize;
    let mut example = String::new();
    for _ in 0..200 {
        let a = random_sp(&mut rng);
        let b = random_sp(&mut rng);
        let t = meyer::tau(&commutator(&a, &b), &b).unwrap();
        if t != 0 {
            nonzero += 1;
            if example.is_empty() {
                example = format!("first counterexample has tau([A,B],B) = {t}");
            }
        }
    }
    verdict(
        "2 (torus canary on 200 random pairs)",
        nonzero == 0,
        &if nonzero == 0 {
            "all zero".to_string()
        } else {
            format!(
                "{nonzero}/200 pairs give nonzero values ({example}); \
                 the vanishing contradicts the known -1 signature of criterion 3 \
                 and holds only for commuting pairs"
            )
        },
    );
}

#[test]
fn criterion_03_one_fiber_signatures() {
    let mut ok = true;
    let mut detail = String::new();
    for (name, total, complement) in [("prop43_nonsep", -1i64, -1i64), ("prop43_sep", -1, 0)] {
        let f = load_shipped(name, None, SIGN).unwrap();
        let sigma = f.signature(SIGN).unwrap();
        let ctx = EvalCtx::new(&f.atlas, &f.defs, SIGN);
        let handles: Vec<_> = f
            .handles
            .iter()
            .map(|(a, b)| (evaluate(a, &ctx).unwrap(), evaluate(b, &ctx).unwrap()))
            .collect();
        let gammas: Vec<_> = f
            .factorization(SIGN)
            .unwrap()
            .letters
            .iter()
            .map(|l| l.matrix(f.h, SIGN).unwrap())
            .collect();
        let comp = signature_boundary(f.h, &handles, &gammas).unwrap();
        if (sigma, comp) != (total, complement) {
            ok = false;
        }
        detail.push_str(&format!("{name}: sigma={sigma} complement={comp}; "));
    }
    verdict("3 (one-fiber signatures -1/-1 and complements -1/0)", ok, &detail);
}

#[test]
fn criterion_04_multi_fiber_signatures() {
    let mut ok = true;
    let mut detail = String::new();
    for (name, expected) in [("prop44", -2i64), ("prop45", -4), ("prop46_xprime", -6)] {
        let f = load_shipped(name, None, SIGN).unwrap();
        let sigma = f.signature(SIGN).unwrap();
        if sigma != expected {
            ok = false;
        }
        detail.push_str(&format!("{name}={sigma} "));
    }
    let outcome = run_pipeline(THM11_PIPELINE, Some(3), SIGN, None).unwrap();
    let step1 = outcome.steps.iter().find(|s| s.name == "step1").unwrap();
    if step1.sigma != -4 {
        ok = false;
    }
    detail.push_str(&format!("post-subtraction={}", step1.sigma));
    verdict("4 (signatures -2, -4, -6, and -4 after subtraction)", ok, &detail);
}

#[test]
fn criterion_05_relators_are_identities_after_stabilization() {
    let mut ok = true;
    let mut detail = String::new();
    for h in [3usize, 4, 5] {
        for name in [
            "prop43_nonsep",
            "prop43_sep",
            "prop44",
            "prop45",
            "prop46_xprime",
        ] {
            let f = load_shipped(name, Some(h), SIGN).unwrap();
            if !f.relator_image(SIGN).unwrap().is_identity() {
                ok = false;
                detail.push_str(&format!("{name}@h{h} fails; "));
            }
        }
    }
    if ok {
        detail = "all five relators are identities at h = 3, 4, 5".into();
    }
    verdict("5 (relator identities in Sp under stabilization)", ok, &detail);
}

#[test]
fn criterion_06_atlas_certification() {
    let mut ok = true;
    let mut detail = String::new();
    for name in atlas::BUILTIN_ATLASES {
        let a = atlas::load_atlas(name).unwrap();
        let report = a.check_constraints(SIGN);
        if !report.all_passed() {
            ok = false;
            let f = report.first_failure().unwrap();
            detail.push_str(&format!("{name}: {} ({}); ", f.constraint, f.detail));
        }
    }
    if ok {
        detail = format!(
            "{} atlases, all intersection constraints and Sp relations hold",
            atlas::BUILTIN_ATLASES.len()
        );
    }
    verdict("6 (atlas certification)", ok, &detail);
}

#[test]
fn criterion_07_subtraction_pipeline_and_pullbacks() {
    let mut ok = true;
    let mut detail = String::new();
    for h in [3usize, 4, 5] {
        match bounds::build_yh(h, SIGN) {
            Ok(c) if (c.g, c.sigma) == (9, 4) => {
                detail.push_str(&format!("h{h}:(9,4) "));
            }
            Ok(c) => {
                ok = false;
                detail.push_str(&format!("h{h}:({},{}) ", c.g, c.sigma));
            }
            Err(e) => {
                ok = false;
                detail.push_str(&format!("h{h}:error {e} "));
            }
        }
    }
    let y3 = bounds::build_yh(3, SIGN).unwrap();
    for n in 1..=5usize {
        let c = bounds::pullback_cover(&y3, n).unwrap();
        if (c.g, c.sigma) != (8 * n + 1, 4 * n as i64) {
            ok = false;
            detail.push_str(&format!("pullback n={n} gives ({}, {}) ", c.g, c.sigma));
        }
    }
    if ok {
        detail.push_str("and pullbacks meet g = 8n+1, sigma = 4n for n = 1..5");
    }
    verdict("7 (genus-9 signature-4 bundles and base pullbacks)", ok, &detail);
}

#[test]
fn criterion_08_fiber_sum_signatures() {
    let mut ok = true;
    let mut detail = String::new();
    for h in 3..=12usize {
        let c = bounds::build_sh(h, SIGN).unwrap();
        let k = (h / 3) as i64;
        if c.sigma != 4 * k || 3 * c.sigma < 4 * (h as i64 - 2) || c.g != 9 {
            ok = false;
            detail.push_str(&format!("h{h}: sigma={} g={} ", c.sigma, c.g));
        }
    }
    if ok {
        detail = "sigma = 4k with h = 3k+l for h = 3..12, all above the linear floor".into();
    }
    verdict("8 (fiber-sum signatures over the genus-9 base)", ok, &detail);
}

#[test]
fn criterion_09_bound_table() {
    let rows = bounds::genus_bound_table(12, SIGN).unwrap();
    let mut ok = rows.len() == 10;
    let mut detail = String::new();
    for r in &rows {
        let expected = if r.h % 2 == 1 {
            bounds::Rational::new(16, r.h as i64 - 1)
        } else {
            bounds::Rational::new(16, r.h as i64 - 2)
        };
        if r.upper != expected || r.lower > r.upper {
            ok = false;
            detail.push_str(&format!("h{}: upper {} lower {} ", r.h, r.upper, r.lower));
        }
    }
    if ok {
        detail = "uppers equal 16/(h-1) (odd) and 16/(h-2) (even) for h = 3..12, \
                  each above the lower bound"
            .into();
    }
    verdict("9 (asymptotic bound table)", ok, &detail);
}

#[test]
fn criterion_10_property_suites() {
    let mut ok = true;
    let mut detail = String::new();

    // Hurwitz-move invariance of product, mu_comb, and sigma on 100
    // random move sequences applied to the shipped factorizations
    let mut rng = ChaCha8Rng::seed_from_u64(0x5153_000a);
    let f = load_shipped("prop46_xprime", None, SIGN).unwrap();
    let ctx = EvalCtx::new(&f.atlas, &f.defs, SIGN);
    let handles: Vec<_> = f
        .handles
        .iter()
        .map(|(a, b)| (evaluate(a, &ctx).unwrap(), evaluate(b, &ctx).unwrap()))
        .collect();
    let base = f.factorization(SIGN).unwrap();
    let mu = |fact: &Factorization| {
        let mut v = vec![0usize; H / 2 + 1];
        for l in &fact.letters {
            v[l.sep.type_index(H)] += 1;
        }
        v
    };
    let sigma_of = |fact: &Factorization| -> i64 {
        let gammas: Vec<_> = fact
            .letters
            .iter()
            .map(|l| l.matrix(H, SIGN).unwrap())
            .collect();
        signature_boundary(H, &handles, &gammas).unwrap()
    };
    let product0 = base.product(SIGN).unwrap();
    let mu0 = mu(&base);
    let sigma0 = sigma_of(&base);
    for trial in 0..100 {
        let mut fact = base.clone();
        for _ in 0..rng.gen_range(1..=6) {
            let i = rng.gen_range(0..fact.letters.len() - 1);
            let dir = if rng.gen() {
                MoveDirection::Right
            } else {
                MoveDirection::Left
            };
            fact = fact.hurwitz_move(i, dir, SIGN).unwrap();
        }
        if fact.product(SIGN).unwrap() != product0
            || mu(&fact) != mu0
            || sigma_of(&fact) != sigma0
        {
            ok = false;
            detail.push_str(&format!("hurwitz invariance broken at trial {trial}; "));
            break;
        }
    }

    // parse/print round-trip on 200 random ASTs
    for trial in 0..200 {
        let w = random_word(&mut rng, 3);
        let printed = print_word(&w);
        match parse_word(&printed) {
            Ok(back) if back == w => {}
            _ => {
                ok = false;
                detail.push_str(&format!("round-trip broken at trial {trial}: `{printed}`; "));
                break;
            }
        }
    }

    // subtraction chi bookkeeping on randomized groupings
    let p45 = load_shipped("prop45", None, SIGN)
        .unwrap()
        .summarize(SIGN)
        .unwrap();
    for trial in 0..40 {
        // random partition of the four fibers into m groups
        let mut indices: Vec<usize> = (0..4).collect();
        for i in (1..indices.len()).rev() {
            let j = rng.gen_range(0..=i);
            indices.swap(i, j);
        }
        let m = rng.gen_range(1..=4usize);
        let mut groups: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
        for (slot, &idx) in indices.iter().enumerate() {
            let g = slot % m;
            if g >= groups.len() {
                groups.push((vec![], vec![]));
            }
            groups[g].0.push(idx);
            groups[g].1.push(idx);
        }
        let out = subtract(&p45, &p45, &groups, &SubtractOptions::default()).unwrap();
        if out.base_genus != p45.base_genus * 2 + groups.len() - 1 || out.sigma != 0 {
            ok = false;
            detail.push_str(&format!("chi bookkeeping broken at trial {trial}; "));
            break;
        }
    }

    if ok {
        detail = "hurwitz invariance (100), round-trips (200), chi bookkeeping (40)".into();
    }
    verdict("10 (property suites)", ok, &detail);
}

fn random_word(rng: &mut ChaCha8Rng, depth: usize) -> Word {
    let names = ["a1", "a2", "b3", "x", "c1"];
    let leaf = |rng: &mut ChaCha8Rng| Word::Twist {
        curve: names[rng.gen_range(0..names.len())].to_string(),
        under: None,
        exp: if rng.gen() { 1 } else { -1 },
    };
    if depth == 0 {
        return leaf(rng);
    }
    match rng.gen_range(0..7) {
        0 => leaf(rng),
        1 => Word::Named(format!("phi{}", rng.gen_range(1..4))),
        2 => Word::Inverse(Box::new(random_word(rng, depth - 1))),
        3 => {
            let k = *[-3i64, -1, 2, 4][..].iter().nth(rng.gen_range(0..4)).unwrap();
            Word::Power(Box::new(random_word(rng, depth - 1)), k)
        }
        4 => Word::Commutator(
            Box::new(random_word(rng, depth - 1)),
            Box::new(random_word(rng, depth - 1)),
        ),
        5 => Word::Twist {
            curve: names[rng.gen_range(0..names.len())].to_string(),
            under: Some(Box::new(random_word(rng, depth - 1))),
            exp: 1,
        },
        _ => {
            let n = rng.gen_range(2..4);
            Word::Concat((0..n).map(|_| random_word(rng, depth - 1)).collect())
        }
    }
}

#[test]
fn criterion_11_calibration_determinism() {
    let mut ok = true;
    let mut detail = String::new();

    // exactly one convention reproduces the known signatures
    match reproduce::calibrate() {
        Ok(sign) => {
            detail.push_str(&format!("calibrated to `{}`; ", sign.label()));
            if sign != TwistSign::Plus {
                ok = false;
            }
            // the flipped convention must fail the probe
            let flipped = sign.flipped();
            let f = load_shipped("prop43_nonsep", None, flipped).unwrap();
            if f.signature(flipped).unwrap() == -1 {
                ok = false;
                detail.push_str("flipped convention also matches; ");
            }
        }
        Err(e) => {
            ok = false;
            detail.push_str(&format!("calibration failed: {e}; "));
        }
    }

    // the full reproduction run succeeds under the calibrated convention
    match reproduce::reproduce(TwistSign::Plus) {
        Ok(report) => {
            if !report.all_match {
                ok = false;
                for c in report.claims.iter().filter(|c| !c.matched) {
                    detail.push_str(&format!(
                        "{}: expected {} got {}; ",
                        c.id, c.expected, c.computed
                    ));
                }
            } else {
                detail.push_str(&format!(
                    "all {} reproduction rows match",
                    report.claims.len()
                ));
            }
        }
        Err(e) => {
            ok = false;
            detail.push_str(&format!("reproduce failed: {e}"));
        }
    }
    verdict("11 (calibration determinism and full reproduction)", ok, &detail);
}

#[test]
fn shipped_pipeline_file_checks_its_own_expectations() {
    let outcome = run_pipeline(THM11_PIPELINE, Some(3), SIGN, None).unwrap();
    assert!(outcome.all_expects_passed());
    let result = outcome.result().unwrap();
    assert!(result.is_bundle());
    assert_eq!((result.h, result.base_genus, result.sigma), (3, 9, 4));
    assert!(result.section.is_some());
}

#[test]
fn subtraction_of_incompatible_mu_vectors_is_rejected() {
    let p44 = load_shipped("prop44", None, SIGN)
        .unwrap()
        .summarize(SIGN)
        .unwrap();
    let sep = load_shipped("prop43_sep", None, SIGN)
        .unwrap()
        .summarize(SIGN)
        .unwrap();
    // full subtraction with a type mismatch inside the single group
    let groups = vec![(vec![0], vec![0])];
    let err = subtract(&p44, &sep, &groups, &SubtractOptions::default()).unwrap_err();
    assert!(matches!(
        err,
        Error::IncompatibleGrouping(_) | Error::CombinatorialMismatch(_)
    ));
}

#[test]
fn every_produced_bundle_respects_the_lower_bound() {
    for h in [3usize, 5, 8] {
        let c = bounds::build_yh(h, SIGN).unwrap();
        c.validate().unwrap();
        let n = (c.sigma / 4).unsigned_abs() as i64;
        assert!((c.g as i64 - 1) * (c.h as i64 - 1) >= 2 * n);
    }
}

#[test]
fn fibration_reports_echo_the_convention() {
    let f = load_shipped("prop45", None, SIGN).unwrap();
    let report = f.sig_report(SIGN).unwrap();
    assert_eq!(report.convention.twist_sign, "plus");
    assert_eq!(report.convention.word_order, "left-to-right");
    assert_eq!(report.signature, -4);
    assert_eq!(report.euler, 20);
    assert_eq!(report.mu_comb, vec![4, 0]);
    let serialized = serde_json::to_string(&report).unwrap();
    assert!(serialized.contains("\"signature\":-4"));
}
