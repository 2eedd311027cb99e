//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
//! all comparisons are exact.

use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hypersym::aut_solver::{compute_g_c, e_is_member, monomial_basis, AutReport};
use hypersym::chains::{annihilator_dim, extract_chains, kernel_filtration, recover_rotation, synthesize_model, verify_pair, Decomposition};
use hypersym::classify::{classify_two_jet, is_holomorphically_degenerate, VerdictTag};
use hypersym::corpus::{self, embedding_holds, real_ratio, CorpusConfig, CorpusModel};
use hypersym::parser::{parse_field, parse_model_file, parse_real_poly};
use hypersym::report::{self, Report};
use hypersym::{rat, GaussRational, Model, Monomial, Poly, RealPoly, VectorField, Weight};

const CORPUS_SEED: u64 = 1;
const CORPUS_SIZE: usize = 210;

struct Outcome {
    name: &'static str,
    pass: bool,
    detail: String,
}

fn line(o: &Outcome) {
    println!("[{}] {}: {}", if o.pass { "PASS" } else { "FAIL" }, o.name, o.detail);
}

fn secs(d: Duration) -> String {
    format!("{:.3}s", d.as_secs_f64())
}

fn shear_family() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    for l in 2..=5u32 {
        let p = parse_real_poly(&format!("Re(z1*conj(z2)^{l})")).unwrap();
        let m = match Model::validate(p, None) {
            Ok(m) => m,
            Err(e) => {
                failures.push(format!("l={l}: {e}"));
                continue;
            }
        };
        let expected_w = Weight::from_ratios(1, l as i64 + 1, 1, l as i64 + 1);
        if m.weight() != &expected_w {
            failures.push(format!("l={l}: weight {}", m.weight()));
        }
        let r = compute_g_c(&m).unwrap();
        let y = VectorField::new(Poly::term(Monomial::holo(0, l), GaussRational::i()), Poly::zero(), Poly::zero()).unwrap();
        let mu = rat(l as i64 - 1, l as i64 + 1);
        let spans = r.component(&mu).is_some_and(|c| c.basis.len() == 1 && real_ratio(&c.basis[0], &y).is_some());
        if r.dim_g_c() != 1 || !spans {
            failures.push(format!("l={l}: dim g_c {} spans={spans}", r.dim_g_c()));
        }
    }
    let elapsed = start.elapsed();
    let pass = failures.is_empty() && elapsed < Duration::from_secs(5);
    Outcome { name: "1 shear family l=2..5", pass, detail: format!("{} failures {:?}, {} (< 5s)", failures.len(), failures, secs(elapsed)) }
}

fn quadric_control() -> Outcome {
    let start = Instant::now();
    let m = Model::validate(parse_real_poly("z1*conj(z1) + z2*conj(z2)").unwrap(), None).unwrap();
    let dim = compute_g_c(&m).unwrap().dim_g_c();
    let tag = classify_two_jet(&m).unwrap().tag;
    let elapsed = start.elapsed();
    let pass = dim == 0 && tag == VerdictTag::TwoJetDetermination && elapsed < Duration::from_secs(1);
    Outcome { name: "2 quadric control", pass, detail: format!("dim g_c = {dim}, verdict {}, {} (< 1s)", tag.as_str(), secs(elapsed)) }
}

/// Per corpus entry: parsed model, solver report and decomposition.
struct Analyzed {
    model: Model,
    aut: AutReport,
    nondegenerate: bool,
    decomposition: Option<Decomposition>,
}

fn analyze(corpus: &[CorpusModel]) -> (Vec<Analyzed>, Duration) {
    let start = Instant::now();
    let out = corpus
        .iter()
        .map(|c| {
            let f = parse_model_file(&c.text).unwrap();
            let model = Model::validate(f.poly, f.weight).unwrap();
            let aut = compute_g_c(&model).unwrap();
            let nondegenerate = is_holomorphically_degenerate(&model).unwrap().is_none();
            let decomposition = aut.generalized_rotations().first().and_then(|(_, y)| extract_chains(&model, y).ok());
            Analyzed { model, aut, nondegenerate, decomposition }
        })
        .collect();
    (out, start.elapsed())
}

fn dimension_bound(all: &[Analyzed], elapsed: Duration) -> Outcome {
    let nondeg: Vec<_> = all.iter().filter(|a| a.nondegenerate).collect();
    let over = nondeg.iter().filter(|a| a.aut.dim_g_c() > 1).count();
    let with_g = all.iter().flat_map(|a| a.aut.generalized_rotations()).filter(|(_, y)| !y.g.is_zero()).count();
    let pass = all.len() >= 200 && over == 0 && elapsed < Duration::from_secs(60);
    Outcome {
        name: "3 dim g_c <= 1",
        pass,
        detail: format!(
            "{} models, {} nondegenerate, {} with dim > 1, {} rotations with nonzero g, {} (< 60s)",
            all.len(),
            nondeg.len(),
            over,
            with_g,
            secs(elapsed)
        ),
    }
}

fn round_trip(all: &[Analyzed]) -> Outcome {
    let mut bad = 0;
    for a in all {
        let ok = a.decomposition.as_ref().is_some_and(|d| {
            synthesize_model(&d.pairs, a.model.weight()).is_ok_and(|m| m.poly() == a.model.poly())
                && d.pairs.iter().all(|p| verify_pair(&d.rotation, p) && p.is_symmetric())
        });
        bad += usize::from(!ok);
    }
    Outcome { name: "4 extract/synthesize round trip", pass: bad == 0, detail: format!("{} of {} failed", bad, all.len()) }
}

fn recovery(all: &[Analyzed]) -> Outcome {
    let mut checked = 0;
    let mut bad = 0;
    for a in all.iter().filter(|a| a.aut.dim_g_c() == 1) {
        checked += 1;
        let y = &a.aut.generalized_rotations()[0].1;
        let ok = a.decomposition.as_ref().and_then(|d| recover_rotation(d).ok()).and_then(|z| real_ratio(&z, y)).is_some();
        bad += usize::from(!ok);
    }
    Outcome { name: "5 rotation recovery", pass: bad == 0 && checked > 0, detail: format!("{checked} checked, {bad} failed") }
}

fn embedding(all: &[Analyzed]) -> Outcome {
    let mut checked = 0;
    let mut bad = 0;
    let mut max_dim = 0;
    for a in all.iter().filter(|a| a.aut.dim_g_c() > 0) {
        checked += 1;
        match &a.decomposition {
            Some(d) if embedding_holds(d, &a.model) => {
                max_dim = max_dim.max(hypersym::embedding::build_embedding(d).ambient_dim);
            }
            _ => bad += 1,
        }
    }
    Outcome { name: "6 hyperquadric embedding", pass: bad == 0 && checked > 0, detail: format!("{checked} checked, {bad} failed, largest ambient dimension {max_dim}") }
}

fn filtrations(all: &[Analyzed]) -> Outcome {
    let mut degrees = 0;
    let mut bad = Vec::new();
    let mut gapped = 0;
    for (k, a) in all.iter().enumerate() {
        let Some(d) = &a.decomposition else {
            bad.push(format!("#{k}: no rotation"));
            continue;
        };
        let w = a.model.weight();
        let top = a.model.bihomogeneous_expansion().iter().map(|(c, _)| c.clone()).max().unwrap_or_else(BigRational::one);
        let den = w.common_denominator();
        for num in 1.. {
            let kappa = BigRational::new(num.into(), den.clone());
            if kappa > top {
                break;
            }
            let size = monomial_basis(w, &kappa).len();
            if size == 0 {
                continue;
            }
            degrees += 1;
            let kernel = annihilator_dim(&d.rotation, w, &kappa).unwrap();
            let f = kernel_filtration(&d.rotation, w, &kappa, size + 1).unwrap();
            let strict = f.levels.iter().map(|l| l.is_adapted_at_dimension(&d.rotation)).collect::<Vec<_>>();
            gapped += strict.iter().filter(|s| s.is_none()).count();
            let ok = kernel <= 1 && f.dimension_bound_holds() && f.is_increasing() && f.all_adapted() && strict.iter().all(|s| *s != Some(false));
            if !ok {
                bad.push(format!("#{k} degree {kappa}"));
            }
        }
    }
    Outcome {
        name: "7 kernel filtrations",
        pass: bad.is_empty() && degrees > 0,
        detail: format!("{degrees} degrees checked, {} failed {:?}, {gapped} levels with non-consecutive heights", bad.len(), bad.iter().take(5).collect::<Vec<_>>()),
    }
}

fn universal_members(all: &[Analyzed]) -> Outcome {
    let bad = all
        .iter()
        .filter(|a| {
            let w_ok = VectorField::shift_w().tangency_residual(&a.model).is_ok_and(|r| r.is_zero());
            !(w_ok && e_is_member(&a.model) && a.aut.w_member && a.aut.e_member)
        })
        .count();
    Outcome { name: "8 W and E members", pass: bad == 0, detail: format!("{} of {} failed", bad, all.len()) }
}

fn random_poly(rng: &mut ChaCha8Rng) -> RealPoly {
    let mut p = Poly::zero();
    for _ in 0..rng.gen_range(0..6) {
        let m = Monomial::mixed(rng.gen_range(0..3), rng.gen_range(0..3), rng.gen_range(0..3), rng.gen_range(0..3));
        let c = GaussRational::complex(rng.gen_range(-9..=9), rng.gen_range(1..=6), rng.gen_range(-9..=9), rng.gen_range(1..=6));
        p = &p + &Poly::term(m, c);
    }
    RealPoly::try_from(&p + &p.conj()).unwrap()
}

fn random_field(rng: &mut ChaCha8Rng) -> VectorField {
    let mut comp = || {
        let mut p = Poly::zero();
        for _ in 0..rng.gen_range(0..4) {
            let m = Monomial::new(rng.gen_range(0..3), rng.gen_range(0..3), 0, 0, 0, rng.gen_range(0..2));
            let c = GaussRational::complex(rng.gen_range(-9..=9), rng.gen_range(1..=6), rng.gen_range(-9..=9), rng.gen_range(1..=6));
            p = &p + &Poly::term(m, c);
        }
        p
    };
    VectorField::new(comp(), comp(), comp()).unwrap()
}

fn round_trips(all: &[Analyzed], corpus: &[CorpusModel]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut text_failures = 0;
    for _ in 0..1000 {
        let p = random_poly(&mut rng);
        let s = p.to_string();
        if !parse_real_poly(&s).is_ok_and(|q| q == p && q.to_string() == s) {
            text_failures += 1;
        }
        let x = random_field(&mut rng);
        let s = x.to_string();
        if !parse_field(&s).is_ok_and(|y| y == x && y.to_string() == s) {
            text_failures += 1;
        }
    }

    let mut json_failures = 0;
    for a in all.iter().take(30) {
        let mut r = Report::new("acceptance");
        r.model = Some(report::model_section(&a.model));
        r.algebra = Some(report::algebra_section(&a.aut));
        if let Some(d) = &a.decomposition {
            r.decomposition = Some(report::decomposition_section(d, &a.model));
            r.embedding = Some(report::embedding_section(&hypersym::embedding::build_embedding(d), &a.model, &d.rotation));
        }
        r.verdict = Some(report::verdict_section(&classify_two_jet(&a.model).unwrap(), Some(&a.model)));
        if Report::from_json(&r.to_json()).ok().as_ref() != Some(&r) {
            json_failures += 1;
        }
    }

    let config = CorpusConfig::new(CORPUS_SEED, corpus.len(), None);
    let again = corpus::generate(&config).unwrap();
    let identical = again.len() == corpus.len() && again.iter().zip(corpus).all(|(a, b)| a.file_name == b.file_name && a.text.as_bytes() == b.text.as_bytes());

    Outcome {
        name: "9 parser/report/corpus round trips",
        pass: text_failures == 0 && json_failures == 0 && identical,
        detail: format!("2000 print/parse cases, {text_failures} failed; {json_failures} JSON failures; corpus regeneration identical: {identical}"),
    }
}

#[test]
fn acceptance() {
    let mut outcomes = vec![shear_family(), quadric_control()];
    let corpus = corpus::generate(&CorpusConfig::new(CORPUS_SEED, CORPUS_SIZE, None)).unwrap();
    let (all, elapsed) = analyze(&corpus);
    outcomes.push(dimension_bound(&all, elapsed));
    outcomes.push(round_trip(&all));
    outcomes.push(recovery(&all));
    outcomes.push(embedding(&all));
    outcomes.push(filtrations(&all));
    outcomes.push(universal_members(&all));
    outcomes.push(round_trips(&all, &corpus));
    for o in &outcomes {
        line(o);
    }
    let failed: Vec<_> = outcomes.iter().filter(|o| !o.pass).map(|o| o.name).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
