//! Seeded corpora of models with a known generalized rotation.
//!
//! Entry `k` draws from a ChaCha8 stream keyed by the seed and `k`, so each
//! model depends only on `(seed, k, family)` and regenerating a corpus is
//! byte-identical. Every entry is checked end to end: the written file is
//! parsed back, the solver is run, chains are extracted and resynthesized,
//! the rotation is recovered from them, and the embedding is verified.

use num_rational::BigRational;
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::aut_solver::compute_g_c;
use crate::chains::{extract_chains, random_model, recover_rotation, ChainError, ChainFamily, Decomposition, GeneratedModel};
use crate::embedding::{build_embedding, verify_f_related, verify_maps_into, verify_quadric_symmetry};
use crate::fields::VectorField;
use crate::grading::Model;
use crate::parser::parse_model_file;
use crate::report::{CorpusEntry, CorpusSummary};

pub const DEFAULT_BUDGET: u32 = 13;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusConfig {
    pub seed: u64,
    pub count: usize,
    /// Families cycle through all three when absent.
    pub family: Option<ChainFamily>,
    pub budget: u32,
}

impl CorpusConfig {
    pub fn new(seed: u64, count: usize, family: Option<ChainFamily>) -> Self {
        Self { seed, count, family, budget: DEFAULT_BUDGET }
    }

    pub fn family_at(&self, index: usize) -> ChainFamily {
        self.family.unwrap_or(ChainFamily::ALL[index % ChainFamily::ALL.len()])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusModel {
    pub index: usize,
    pub file_name: String,
    pub text: String,
    pub generated: GeneratedModel,
}

pub fn generate_one(config: &CorpusConfig, index: usize) -> Result<CorpusModel, ChainError> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(index as u64);
    let generated = random_model(config.family_at(index), config.budget, &mut rng)?;
    Ok(CorpusModel { index, file_name: format!("model_{index:04}.txt"), text: model_file_text(&generated), generated })
}

pub fn generate(config: &CorpusConfig) -> Result<Vec<CorpusModel>, ChainError> {
    (0..config.count).map(|k| generate_one(config, k)).collect()
}

pub fn model_file_text(g: &GeneratedModel) -> String {
    let w = g.model.weight();
    format!("# family: {}\n# rotation: {}\nweights: {}, {}\n{}\n", g.family, g.rotation, w.l1(), w.l2(), g.model.poly())
}

/// The real rational `t ≠ 0` with `a = t·b`, if there is one.
pub fn real_ratio(a: &VectorField, b: &VectorField) -> Option<BigRational> {
    let (m, cb) = [&b.f1, &b.f2, &b.g].into_iter().find_map(|p| p.leading_term())?;
    let ca = [&a.f1, &a.f2, &a.g].into_iter().zip([&b.f1, &b.f2, &b.g]).find(|(_, q)| !q.is_zero()).map(|(p, _)| p.coeff(m))?;
    let t = &ca / cb;
    if t.is_zero() || !t.is_real() {
        return None;
    }
    (*a == b.scale(&t)).then(|| t.re().clone())
}

/// `2ΣN_j + 1` plus all three embedding checks.
pub fn embedding_holds(d: &Decomposition, m: &Model) -> bool {
    let e = build_embedding(d);
    let expected = 2 * d.pairs.iter().map(|p| p.len()).sum::<usize>() + 1;
    e.ambient_dim == expected && e.ambient_dim >= 3 && verify_maps_into(&e, m) && verify_f_related(&e, &d.rotation) && verify_quadric_symmetry(&e)
}

/// Checks one written model file end to end.
pub fn verify_entry(index: usize, file: &str, family: ChainFamily, text: &str) -> CorpusEntry {
    let mut entry = CorpusEntry {
        index,
        file: file.to_string(),
        family: family.to_string(),
        weight: String::new(),
        polynomial: String::new(),
        g_c_dim: 0,
        round_trip: false,
        recovery: false,
        embedding: false,
        error: None,
    };
    if let Err(e) = check(text, &mut entry) {
        entry.error = Some(e);
    }
    entry
}

fn check(text: &str, entry: &mut CorpusEntry) -> Result<(), String> {
    let file = parse_model_file(text).map_err(|e| e.to_string())?;
    let m = Model::validate(file.poly, file.weight).map_err(|e| e.to_string())?;
    entry.weight = m.weight().to_string();
    entry.polynomial = m.poly().to_string();
    let report = compute_g_c(&m).map_err(|e| e.to_string())?;
    entry.g_c_dim = report.dim_g_c();
    let (_, y) = report.generalized_rotations().into_iter().next().ok_or("no generalized rotation")?;
    let d = extract_chains(&m, &y).map_err(|e| e.to_string())?;
    entry.round_trip = d.verify() && d.pairs.iter().all(|p| p.is_symmetric()) && &d.synthesize() == m.poly().as_poly();
    entry.recovery = recover_rotation(&d).ok().and_then(|z| real_ratio(&z, &y)).is_some();
    entry.embedding = embedding_holds(&d, &m);
    Ok(())
}

pub fn summarize(config: &CorpusConfig, entries: Vec<CorpusEntry>) -> CorpusSummary {
    let passed = entries.iter().filter(|e| e.passed()).count();
    CorpusSummary {
        seed: config.seed,
        count: config.count,
        family: config.family.map(|f| f.to_string()),
        failed: entries.len() - passed,
        passed,
        entries,
    }
}

/// Generates and verifies a whole corpus.
pub fn run(config: &CorpusConfig) -> Result<(Vec<CorpusModel>, CorpusSummary), ChainError> {
    let models = generate(config)?;
    let entries = models.iter().map(|c| verify_entry(c.index, &c.file_name, c.generated.family, &c.text)).collect();
    Ok((models, summarize(config, entries)))
}
