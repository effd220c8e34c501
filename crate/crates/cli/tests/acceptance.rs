//! Acceptance suite: one test per criterion, each printing its pass line.
//! Run with `cargo test -p dialg-cli --test acceptance -- --nocapture`.

use dialg::composition::{composition_poly, inclusion_ambiguities, intersection_ambiguities};
use dialg::rewrite::{irr_enumerate, normal_form, substitute, Constraint, PlacementKind, Presentation};
use dialg::{Alphabet, DiOp, DiPolynomial, Field, NormalDiword, Normedness, Scalar};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::time::{Duration, Instant};

const SEED: u64 = 0x_d1a1_6eb5;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn dialg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dialg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("json output")
}

/// leibniz-env on a fixture into a temp file; returns the presentation path.
fn envelope(dir: &Path, name: &str) -> PathBuf {
    let out_path = dir.join(format!("{name}.pres.json"));
    let out = dialg(&[
        "leibniz-env",
        fixture(name).to_str().unwrap(),
        "--output",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "leibniz-env {name}");
    out_path
}

fn clifford(dir: &Path, name: &str) -> PathBuf {
    let out_path = dir.join(format!("{name}.pres.json"));
    let out = dialg(&[
        "clifford",
        fixture(name).to_str().unwrap(),
        "--output",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "clifford {name}");
    out_path
}

fn load(path: &Path) -> Presentation {
    dialg::io::PresentationFile::from_json(&std::fs::read_to_string(path).unwrap())
        .unwrap()
        .to_presentation()
        .unwrap()
}

#[test]
fn criterion_1_gsb_verification_of_the_enveloping_presentations() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["leibniz_2dim.json", "heisenberg.json", "sl2.json"] {
        let started = Instant::now();
        let pres = envelope(dir.path(), name);
        let out = dialg(&["check-gsb", pres.to_str().unwrap()]);
        assert_eq!(code(&out), 0, "check-gsb {name}");
        let elapsed = started.elapsed();
        assert!(elapsed < Duration::from_secs(30), "{name} took {elapsed:?}");
    }
    println!("criterion 1: PASS - leibniz-env + check-gsb exit 0 for 2-dim, Heisenberg, sl2");
}

#[test]
fn criterion_2_cd_lemma_oracle_agreement() {
    let dir = tempfile::tempdir().unwrap();
    let mut presentations: Vec<PathBuf> = ["leibniz_2dim.json", "heisenberg.json", "sl2.json"]
        .iter()
        .map(|n| envelope(dir.path(), n))
        .collect();
    let cliffords = [
        ("clifford1.json", 4u64),
        ("clifford2.json", 12),
        ("clifford3.json", 32),
    ];
    for (name, total) in cliffords {
        let path = clifford(dir.path(), name);
        let out = dialg(&["dim", path.to_str().unwrap(), "--max-deg", "5", "--json"]);
        assert_eq!(code(&out), 0);
        assert_eq!(json(&out)["total"], serde_json::json!(total), "{name} total dim");
        presentations.push(path);
    }
    for path in &presentations {
        let out = dialg(&[
            "cross-check",
            path.to_str().unwrap(),
            "--max-deg",
            "5",
            "--json",
        ]);
        assert_eq!(code(&out), 0, "cross-check {path:?}");
        let v = json(&out);
        assert_eq!(v["agree"], serde_json::json!(true));
        for d in v["per_degree"].as_array().unwrap() {
            assert_eq!(d["agree"], serde_json::json!(true), "{path:?} degree {}", d["degree"]);
        }
    }
    println!(
        "criterion 2: PASS - cross-check agrees to degree 5; Clifford dims 4, 12, 32"
    );
}

#[test]
fn criterion_3_counterexample_fidelity() {
    let s1 = fixture("s1_remark.json");
    let out = dialg(&["check-gsb", s1.to_str().unwrap()]);
    assert_eq!(code(&out), 1, "S1 must fail the GSB check");

    let out = dialg(&["cross-check", s1.to_str().unwrap(), "--max-deg", "5", "--json"]);
    assert_eq!(code(&out), 0, "S1 still passes the basis cross-check");
    let s1_check = json(&out);
    assert_eq!(s1_check["agree"], serde_json::json!(true));

    // Degree by degree, S1 matches the full enveloping presentation.
    let dir = tempfile::tempdir().unwrap();
    let t2 = envelope(dir.path(), "leibniz_2dim.json");
    let out = dialg(&["cross-check", t2.to_str().unwrap(), "--max-deg", "5", "--json"]);
    let t2_check = json(&out);
    assert_eq!(s1_check["per_degree"], t2_check["per_degree"]);
    println!("criterion 3: PASS - check-gsb rejects S1 while its Irr set stays a basis");
}

#[test]
fn criterion_4_pbw_corollary_count() {
    let dir = tempfile::tempdir().unwrap();
    let t2 = envelope(dir.path(), "leibniz_2dim.json");
    let out = dialg(&["dim", t2.to_str().unwrap(), "--max-deg", "5", "--json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let cumulative = v["cumulative"].as_array().unwrap();
    let mut prev = 0;
    for (i, entry) in cumulative.iter().enumerate() {
        let dim = entry["dim"].as_u64().unwrap();
        assert_eq!(dim - prev, 2, "length {} quotient dimension", i + 1);
        prev = dim;
    }
    println!("criterion 4: PASS - length-d quotient dimension is 2 for every d <= 5");
}

#[test]
fn criterion_5_bar_extension() {
    let dir = tempfile::tempdir().unwrap();
    let pres_path = dir.path().join("pq.pres.json");
    let out = dialg(&[
        "bar-extend",
        fixture("table_pq.json").to_str().unwrap(),
        "--output",
        pres_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let out = dialg(&["check-gsb", pres_path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);

    let pres = load(&pres_path);
    let al = pres.alphabet();
    let gen = |n: &str| DiPolynomial::generator(pres.field(), al.index_of(n).unwrap());
    let zero_cases = [
        gen("e").product(DiOp::Vdash, &gen("p")) - gen("p"),
        gen("p").product(DiOp::Dashv, &gen("e")) - gen("p"),
        gen("e").product(DiOp::Dashv, &gen("q")),
        gen("q").product(DiOp::Vdash, &gen("e")),
    ];
    for f in zero_cases {
        assert!(normal_form(&f, &pres, Constraint::Any, None).reduced_to_zero());
    }
    println!("criterion 5: PASS - bar extension is a GSB and e is a bar unit");
}

#[test]
fn criterion_6_free_product() {
    let dir = tempfile::tempdir().unwrap();
    let pres_path = dir.path().join("fp.pres.json");
    let out = dialg(&[
        "free-product",
        fixture("table_x.json").to_str().unwrap(),
        fixture("table_y.json").to_str().unwrap(),
        "--output",
        pres_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let out = dialg(&["check-gsb", pres_path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);

    let pres = load(&pres_path);
    let irr = irr_enumerate(&pres, 5);
    for d in 1..=5 {
        assert_eq!(irr.iter().filter(|u| u.len() == d).count(), 2 * d, "degree {d}");
    }
    // The basis predicate: neither two consecutive letters from X nor two
    // from Y (here X and Y are singletons, so letters strictly alternate),
    // and no interior letter from the ideal parts (both empty here).
    for u in &irr {
        for w in u.word().windows(2) {
            assert_ne!(w[0], w[1], "consecutive letters from one factor in {u:?}");
        }
    }
    println!("criterion 6: PASS - free product is a GSB with 2d alternating diwords per degree");
}

#[test]
fn criterion_7_completion_soundness() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("completed.json");
    let out = dialg(&[
        "complete",
        fixture("defining_2dim.json").to_str().unwrap(),
        "--max-deg",
        "4",
        "--json",
        "--output",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "completion must finish");
    assert_eq!(json(&out)["status"], serde_json::json!("complete"));

    let completed = load(&out_path);
    let t2 = load(&envelope(dir.path(), "leibniz_2dim.json"));
    for d in 1..=4 {
        assert_eq!(
            irr_enumerate(&completed, d),
            irr_enumerate(&t2, d),
            "degree {d}"
        );
    }
    println!("criterion 7: PASS - completion of the defining relations reproduces the basis");
}

// ---------------------------------------------------------------------------
// Criterion 8: randomized, seed-fixed property suites (>= 1000 cases each).

fn rand_diword(rng: &mut ChaCha8Rng, q: u32, max_len: usize) -> NormalDiword {
    let len = rng.gen_range(1..=max_len);
    let word: Vec<u32> = (0..len).map(|_| rng.gen_range(0..q)).collect();
    let center = rng.gen_range(0..len);
    NormalDiword::new(word, center)
}

fn rand_normed_diword(
    rng: &mut ChaCha8Rng,
    q: u32,
    max_len: usize,
    norm: Normedness,
) -> NormalDiword {
    let len = rng.gen_range(1..=max_len);
    let word: Vec<u32> = (0..len).map(|_| rng.gen_range(0..q)).collect();
    let center = match norm {
        Normedness::Left => len - 1,
        Normedness::Right => 0,
        _ => rng.gen_range(0..len),
    };
    NormalDiword::new(word, center)
}

fn rand_scalar(rng: &mut ChaCha8Rng, field: Field) -> Scalar {
    loop {
        let c = field.integer(rng.gen_range(-5..=5));
        if !c.is_zero() {
            return c;
        }
    }
}

fn rand_poly(rng: &mut ChaCha8Rng, field: Field, q: u32, max_len: usize) -> DiPolynomial {
    loop {
        let terms = rng.gen_range(1..=3);
        let mut p = DiPolynomial::zero(field);
        for _ in 0..terms {
            p.add_term(rand_diword(rng, q, max_len), rand_scalar(rng, field));
        }
        if !p.is_zero() {
            return p;
        }
    }
}

fn suite_dialgebra_axioms(rng: &mut ChaCha8Rng) -> usize {
    let field = Field::Rational;
    let cases = 1000;
    for _ in 0..cases {
        let a = rand_poly(rng, field, 3, 3);
        let b = rand_poly(rng, field, 3, 3);
        let c = rand_poly(rng, field, 3, 3);
        let v = DiOp::Vdash;
        let d = DiOp::Dashv;
        assert_eq!(a.product(v, &b).product(v, &c), a.product(v, &b.product(v, &c)));
        assert_eq!(a.product(d, &b).product(d, &c), a.product(d, &b.product(d, &c)));
        assert_eq!(a.product(d, &b.product(v, &c)), a.product(d, &b).product(d, &c));
        assert_eq!(a.product(d, &b).product(v, &c), a.product(v, &b.product(v, &c)));
        assert_eq!(a.product(v, &b.product(d, &c)), a.product(v, &b).product(d, &c));
    }
    cases
}

fn suite_bracketing_independence(rng: &mut ChaCha8Rng) -> usize {
    fn eval_random(
        factors: &[NormalDiword],
        ops: &[DiOp],
        rng: &mut ChaCha8Rng,
    ) -> NormalDiword {
        if factors.len() == 1 {
            return factors[0].clone();
        }
        let k = rng.gen_range(0..ops.len());
        let left = eval_random(&factors[..=k], &ops[..k], rng);
        let right = eval_random(&factors[k + 1..], &ops[k + 1..], rng);
        left.product(ops[k], &right)
    }
    let cases = 1000;
    for _ in 0..cases {
        let m = rng.gen_range(0..=3);
        let n = rng.gen_range(0..=3);
        let count = m + n + 1;
        let factors: Vec<NormalDiword> =
            (0..count).map(|_| rand_diword(rng, 3, 2)).collect();
        let mut ops = vec![DiOp::Vdash; m];
        ops.extend(vec![DiOp::Dashv; n]);
        let reference = {
            let mut acc = factors[0].clone();
            for (op, f) in ops.iter().zip(&factors[1..]) {
                acc = acc.product(*op, f);
            }
            acc
        };
        for _ in 0..3 {
            assert_eq!(eval_random(&factors, &ops, rng), reference);
        }
    }
    cases
}

fn suite_leading_term_lemma(rng: &mut ChaCha8Rng) -> usize {
    let field = Field::Rational;
    let cases = 1000;
    for _ in 0..cases {
        // Draw a polynomial with a chosen normedness flavor so every
        // substitution kind gets exercised.
        let flavor = match rng.gen_range(0..3) {
            0 => Normedness::Left,
            1 => Normedness::Right,
            _ => Normedness::Neither,
        };
        let s = loop {
            let mut p = DiPolynomial::zero(field);
            for _ in 0..rng.gen_range(1..=3) {
                p.add_term(rand_normed_diword(rng, 3, 3, flavor), rand_scalar(rng, field));
            }
            if !p.is_zero() {
                break p;
            }
        };
        let norm = s.normedness().unwrap();
        let mut kinds = vec![PlacementKind::Center];
        if norm.is_left() {
            kinds.push(PlacementKind::Left);
        }
        if norm.is_right() {
            kinds.push(PlacementKind::Right);
        }
        let kind = kinds[rng.gen_range(0..kinds.len())];
        let min_a = usize::from(kind == PlacementKind::Right);
        let min_b = usize::from(kind == PlacementKind::Left);
        let a: Vec<u32> = (0..rng.gen_range(min_a..=2)).map(|_| rng.gen_range(0..3)).collect();
        let b: Vec<u32> = (0..rng.gen_range(min_b..=2)).map(|_| rng.gen_range(0..3)).collect();
        let off = match kind {
            PlacementKind::Center => 0,
            PlacementKind::Left => rng.gen_range(0..b.len()),
            PlacementKind::Right => rng.gen_range(0..a.len()),
        };
        let sub = substitute(&s, &a, &b, kind, off);
        let lead = s.leading().unwrap().0;
        let mut word = a.clone();
        word.extend_from_slice(lead.word());
        word.extend_from_slice(&b);
        let center = match kind {
            PlacementKind::Center => a.len() + lead.center(),
            PlacementKind::Left => a.len() + lead.len() + off,
            PlacementKind::Right => off,
        };
        let expected = NormalDiword::new(word, center);
        assert_eq!(sub.leading().unwrap().0, &expected);
    }
    cases
}

fn suite_composition_below_ambiguity(rng: &mut ChaCha8Rng) -> usize {
    let field = Field::Rational;
    let al = Alphabet::new(["a", "b"]).unwrap();
    let mut cases = 0;
    let mut rounds = 0;
    while cases < 1000 {
        rounds += 1;
        assert!(rounds < 100_000, "ambiguities are too rare");
        let flavor = |rng: &mut ChaCha8Rng| match rng.gen_range(0..3) {
            0 => Normedness::Left,
            1 => Normedness::Right,
            _ => Normedness::Neither,
        };
        let mk = |rng: &mut ChaCha8Rng| {
            let fl = flavor(rng);
            loop {
                let mut p = DiPolynomial::zero(field);
                for _ in 0..rng.gen_range(1..=3) {
                    p.add_term(rand_normed_diword(rng, 2, 3, fl), rand_scalar(rng, field));
                }
                if !p.is_zero() {
                    break p.monic();
                }
            }
        };
        let f = mk(rng);
        let g = mk(rng);
        let relations = if f == g { vec![f] } else { vec![f, g] };
        let Ok(pres) = Presentation::new(al.clone(), field, relations) else {
            continue;
        };
        for i in 0..pres.len() {
            for j in 0..pres.len() {
                let mut ambs = inclusion_ambiguities(&pres, i, j);
                ambs.extend(intersection_ambiguities(&pres, i, j));
                for amb in ambs {
                    let comp = composition_poly(&amb, &pres);
                    if let Some((lead, _)) = comp.leading() {
                        assert!(lead < &amb.word, "leading {lead:?} not below {:?}", amb.word);
                    }
                    cases += 1;
                }
            }
        }
    }
    cases
}

fn gsb_presentations() -> Vec<Presentation> {
    use dialg::constructions::{LeibnizAlgebra, SymmetricForm};
    let field = Field::Rational;
    let q = |n: i64| field.integer(n);
    let zeros = |n: usize| vec![field.zero(); n];

    let mut bracket = vec![vec![zeros(2); 2]; 2];
    bracket[0][0] = vec![q(0), q(1)];
    let two_dim = LeibnizAlgebra::new(vec!["a".into(), "b".into()], field, &[1], bracket)
        .unwrap()
        .enveloping(false)
        .unwrap();

    let mut bracket = vec![vec![zeros(3); 3]; 3];
    bracket[0][1] = vec![q(0), q(0), q(1)];
    bracket[1][0] = vec![q(0), q(0), q(-1)];
    let heis = LeibnizAlgebra::new(
        vec!["x".into(), "y".into(), "z".into()],
        field,
        &[],
        bracket,
    )
    .unwrap()
    .enveloping(false)
    .unwrap();

    let matrix = vec![vec![q(1), q(0)], vec![q(0), q(1)]];
    let cl2 = SymmetricForm::new(field, matrix).unwrap().clifford().unwrap();
    vec![two_dim, heis, cl2]
}

fn suite_ideal_membership(rng: &mut ChaCha8Rng) -> usize {
    let presentations = gsb_presentations();
    let cases = 1002;
    for i in 0..cases {
        let pres = &presentations[i % presentations.len()];
        let field = pres.field();
        let q = pres.alphabet().len() as u32;
        let mut element = DiPolynomial::zero(field);
        for _ in 0..rng.gen_range(1..=6) {
            let r = pres.relation(rng.gen_range(0..pres.len()));
            let mut t = r.clone();
            for _ in 0..rng.gen_range(0..=2) {
                let ctx = DiPolynomial::monomial(field, rand_diword(rng, q, 2), field.one());
                let op = if rng.gen() { DiOp::Vdash } else { DiOp::Dashv };
                t = if rng.gen() { ctx.product(op, &t) } else { t.product(op, &ctx) };
            }
            element = &element + &t.scaled(&rand_scalar(rng, field));
        }
        let red = normal_form(&element, pres, Constraint::Any, None);
        assert!(red.reduced_to_zero(), "ideal element left a remainder");
    }
    cases
}

fn suite_ordering_laws(rng: &mut ChaCha8Rng) -> usize {
    let cases = 1000;
    for _ in 0..cases {
        let u = rand_diword(rng, 3, 4);
        let v = rand_diword(rng, 3, 4);
        let w = rand_diword(rng, 3, 4);
        // Totality and consistency with equality.
        assert_eq!(u == v, u.cmp(&v) == std::cmp::Ordering::Equal);
        // Transitivity on the sampled triple.
        if u <= v && v <= w {
            assert!(u <= w);
        }
        // Partial monomiality: left product by a letter, right by a letter.
        if u < v {
            let x = NormalDiword::single(rng.gen_range(0..3));
            assert!(x.product(DiOp::Vdash, &u) < x.product(DiOp::Vdash, &v));
            assert!(u.product(DiOp::Dashv, &x) < v.product(DiOp::Dashv, &x));
        }
        // Normed monotonicity in all four positions.
        for norm in [Normedness::Left, Normedness::Right] {
            let a = rand_normed_diword(rng, 3, 4, norm);
            let b = rand_normed_diword(rng, 3, 4, norm);
            if a < b {
                for op in DiOp::BOTH {
                    assert!(a.product(op, &w) < b.product(op, &w));
                    assert!(w.product(op, &a) < w.product(op, &b));
                }
            }
        }
    }
    cases
}

#[test]
fn criterion_8_property_suites() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let suites: [(&str, fn(&mut ChaCha8Rng) -> usize); 6] = [
        ("dialgebra axioms", suite_dialgebra_axioms),
        ("bracketing independence", suite_bracketing_independence),
        ("leading-term lemma", suite_leading_term_lemma),
        ("composition below ambiguity", suite_composition_below_ambiguity),
        ("ideal membership", suite_ideal_membership),
        ("ordering laws", suite_ordering_laws),
    ];
    for (name, suite) in suites {
        let ran = suite(&mut rng);
        assert!(ran >= 1000, "{name} ran only {ran} cases");
        println!("  suite `{name}`: {ran} cases");
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(300), "suites took {elapsed:?}");
    println!("criterion 8: PASS - six property suites, seed {SEED:#x}, in {elapsed:?}");
}
