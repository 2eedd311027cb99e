//! Serializable reports for the command-line tool.
//!
//! Every rational is carried as a string `p/q` and every polynomial or field
//! in its printed form, so a report survives a JSON round trip unchanged.

use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::aut_solver::AutReport;
use crate::chains::Decomposition;
use crate::classify::{Verdict, Witness};
use crate::embedding::QuadricEmbedding;
use crate::grading::Model;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub model: Option<ModelSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub warnings: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<DecompositionSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub embedding: Option<EmbeddingSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<VerdictSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub corpus: Option<CorpusSummary>,
    /// Wall-clock time per stage in microseconds; only present on request.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<Vec<Timing>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelSection {
    pub polynomial: String,
    pub weight: String,
    pub multitype: [String; 2],
    pub pluriharmonic_free: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentSection {
    pub weight: String,
    /// `shift`, `rotation` or `generalized_rotation`.
    pub kind: String,
    pub dim: usize,
    pub basis: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSection {
    pub components: Vec<ComponentSection>,
    pub g_c_dim: usize,
    pub w_member: bool,
    pub e_member: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainSection {
    pub polys: Vec<String>,
    pub consts: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairSection {
    pub length: usize,
    pub u: ChainSection,
    pub v: ChainSection,
    pub block: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionSection {
    pub rotation: String,
    pub rotation_weight: String,
    pub pairs: Vec<PairSection>,
    pub resynthesis_exact: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub recovered_rotation: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoordinateSection {
    pub name: String,
    pub pullback: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingSection {
    pub ambient_dim: usize,
    pub coordinates: Vec<CoordinateSection>,
    /// Pairs `(ζ, ζ')` entering the Hermitian form.
    pub pairing: Vec<[String; 2]>,
    /// Terms `coefficient*source*d/dtarget`.
    pub z_field: Vec<String>,
    pub maps_into: bool,
    pub f_related: bool,
    pub quadric_symmetry: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictSection {
    pub tag: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degeneracy_witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rotation_weight: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<DecompositionSection>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub index: usize,
    pub file: String,
    pub family: String,
    pub weight: String,
    pub polynomial: String,
    pub g_c_dim: usize,
    pub round_trip: bool,
    pub recovery: bool,
    pub embedding: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl CorpusEntry {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.g_c_dim == 1 && self.round_trip && self.recovery && self.embedding
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSummary {
    pub seed: u64,
    pub count: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    pub entries: Vec<CorpusEntry>,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub stage: String,
    pub micros: u64,
}

fn kind_of(mu: &BigRational) -> &'static str {
    if mu.is_negative() {
        "shift"
    } else if mu.is_zero() {
        "rotation"
    } else if *mu < BigRational::one() {
        "generalized_rotation"
    } else {
        "higher"
    }
}

impl Report {
    pub fn new(command: &str) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            model: None,
            warnings: None,
            algebra: None,
            decomposition: None,
            embedding: None,
            verdict: None,
            corpus: None,
            timings: None,
        }
    }

    pub fn warn(&mut self, message: impl Into<String>) {
        self.warnings.get_or_insert_with(Vec::new).push(message.into());
    }

    pub fn time(&mut self, stage: &str, micros: u64) {
        self.timings.get_or_insert_with(Vec::new).push(Timing { stage: stage.to_string(), micros });
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    /// A plain-text rendering for terminals.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(m) = &self.model {
            let _ = writeln!(out, "model: Im w = {}", m.polynomial);
            let _ = writeln!(out, "weight: {}", m.weight);
            let _ = writeln!(out, "multitype: ({}, {})", m.multitype[0], m.multitype[1]);
            let _ = writeln!(out, "pluriharmonic-free: {}", m.pluriharmonic_free);
        }
        for w in self.warnings.iter().flatten() {
            let _ = writeln!(out, "warning: {w}");
        }
        if let Some(a) = &self.algebra {
            let _ = writeln!(out, "rigid components:");
            for c in &a.components {
                let _ = writeln!(out, "  weight {} ({}): dim {}", c.weight, c.kind, c.dim);
                for b in &c.basis {
                    let _ = writeln!(out, "    {b}");
                }
            }
            let _ = writeln!(out, "W in algebra: {}", a.w_member);
            let _ = writeln!(out, "E in algebra: {}", a.e_member);
            let _ = writeln!(out, "dim g_c = {}", a.g_c_dim);
        }
        if let Some(d) = &self.decomposition {
            render_decomposition(&mut out, d);
        }
        if let Some(e) = &self.embedding {
            let _ = writeln!(out, "ambient dimension: {}", e.ambient_dim);
            for c in &e.coordinates {
                let _ = writeln!(out, "  {} = {}", c.name, c.pullback);
            }
            let _ = writeln!(out, "  eta = w");
            let pairs: Vec<String> = e.pairing.iter().map(|[a, b]| format!("{a}*conj({b})")).collect();
            let _ = writeln!(out, "target: Im eta = Re({})", pairs.join(" + "));
            let _ = writeln!(out, "Z = {}", if e.z_field.is_empty() { "0".to_string() } else { e.z_field.join(" + ") });
            let _ = writeln!(out, "maps into quadric: {}", e.maps_into);
            let _ = writeln!(out, "Y and Z f-related: {}", e.f_related);
            let _ = writeln!(out, "Z + conj(Z) preserves the form: {}", e.quadric_symmetry);
        }
        if let Some(v) = &self.verdict {
            let _ = writeln!(out, "verdict: {}", v.tag);
            if let Some(w) = &v.degeneracy_witness {
                let _ = writeln!(out, "annihilating field: {w}");
            }
            if let Some(mu) = &v.rotation_weight {
                let _ = writeln!(out, "generalized rotation of weight {mu}");
            }
            if let Some(d) = &v.decomposition {
                render_decomposition(&mut out, d);
            }
        }
        if let Some(c) = &self.corpus {
            let _ = writeln!(out, "corpus: seed {}, {} models, {} passed, {} failed", c.seed, c.count, c.passed, c.failed);
            for e in &c.entries {
                let status = if e.passed() { "ok" } else { "FAILED" };
                let _ = writeln!(out, "  {} [{}] {} weight {}: {}", e.file, e.family, status, e.weight, e.polynomial);
                if let Some(err) = &e.error {
                    let _ = writeln!(out, "    error: {err}");
                }
            }
        }
        for t in self.timings.iter().flatten() {
            let _ = writeln!(out, "time {}: {} us", t.stage, t.micros);
        }
        out
    }
}

fn render_decomposition(out: &mut String, d: &DecompositionSection) {
    let _ = writeln!(out, "rotation Y = {} (weight {})", d.rotation, d.rotation_weight);
    for (j, p) in d.pairs.iter().enumerate() {
        let _ = writeln!(out, "pair {} (length {}): block {}", j + 1, p.length, p.block);
        for (k, u) in p.u.polys.iter().enumerate() {
            let _ = writeln!(out, "  U{} = {}", k + 1, u);
        }
        for (k, v) in p.v.polys.iter().enumerate() {
            let _ = writeln!(out, "  V{} = {}", k + 1, v);
        }
        let _ = writeln!(out, "  c = [{}], d = [{}]", p.u.consts.join(", "), p.v.consts.join(", "));
    }
    let _ = writeln!(out, "resynthesis exact: {}", d.resynthesis_exact);
    if let Some(r) = &d.recovered_rotation {
        let _ = writeln!(out, "recovered rotation: {r}");
    }
}

pub fn model_section(m: &Model) -> ModelSection {
    let t = m.multitype();
    ModelSection {
        polynomial: m.poly().to_string(),
        weight: m.weight().to_string(),
        multitype: [t.m1.to_string(), t.m2.to_string()],
        pluriharmonic_free: m.poly().is_pluriharmonic_free(),
    }
}

pub fn algebra_section(r: &AutReport) -> AlgebraSection {
    let components = r
        .components
        .iter()
        .map(|c| ComponentSection {
            weight: c.mu.to_string(),
            kind: kind_of(&c.mu).to_string(),
            dim: c.dim_real(),
            basis: c.basis.iter().map(ToString::to_string).collect(),
        })
        .collect();
    AlgebraSection { components, g_c_dim: r.dim_g_c(), w_member: r.w_member, e_member: r.e_member }
}

pub fn decomposition_section(d: &Decomposition, model: &Model) -> DecompositionSection {
    let chain = |c: &crate::chains::Chain| ChainSection {
        polys: c.polys().iter().map(ToString::to_string).collect(),
        consts: c.consts().iter().map(ToString::to_string).collect(),
    };
    let pairs = d
        .pairs
        .iter()
        .map(|p| PairSection { length: p.len(), u: chain(&p.u), v: chain(&p.v), block: p.block().to_string() })
        .collect();
    let rotation_weight = d.rotation.weight(model.weight()).map(|mu| mu.to_string()).unwrap_or_else(|_| "?".into());
    DecompositionSection {
        rotation: d.rotation.to_string(),
        rotation_weight,
        pairs,
        resynthesis_exact: &d.synthesize() == model.poly().as_poly(),
        recovered_rotation: crate::chains::recover_rotation(d).ok().map(|y| y.to_string()),
    }
}

pub fn embedding_section(e: &QuadricEmbedding, model: &Model, y: &crate::fields::VectorField) -> EmbeddingSection {
    EmbeddingSection {
        ambient_dim: e.ambient_dim,
        coordinates: e.components.iter().map(|(c, p)| CoordinateSection { name: c.to_string(), pullback: p.to_string() }).collect(),
        pairing: e.pairing.iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect(),
        z_field: e.z_field.iter().map(|(c, s, t)| format!("({c})*{s}*d/d{t}")).collect(),
        maps_into: crate::embedding::verify_maps_into(e, model),
        f_related: crate::embedding::verify_f_related(e, y),
        quadric_symmetry: crate::embedding::verify_quadric_symmetry(e),
    }
}

pub fn verdict_section(v: &Verdict, model: Option<&Model>) -> VerdictSection {
    let mut s = VerdictSection { tag: v.tag.as_str().to_string(), degeneracy_witness: None, rotation_weight: None, decomposition: None };
    match &v.witness {
        Some(Witness::Degeneracy(x)) => s.degeneracy_witness = Some(x.to_string()),
        Some(Witness::Rotation { mu, decomposition }) => {
            s.rotation_weight = Some(mu.to_string());
            s.decomposition = model.map(|m| decomposition_section(decomposition, m));
        }
        None => {}
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aut_solver::compute_g_c;
    use crate::chains::extract_chains;
    use crate::classify::classify_two_jet;
    use crate::embedding::build_embedding;
    use crate::parser::parse_real_poly;

    fn full_report() -> Report {
        let m = Model::validate(parse_real_poly("Re(z1*zb2^2)").unwrap(), None).unwrap();
        let a = compute_g_c(&m).unwrap();
        let y = a.generalized_rotations()[0].1.clone();
        let d = extract_chains(&m, &y).unwrap();
        let e = build_embedding(&d);
        let mut r = Report::new("all");
        r.model = Some(model_section(&m));
        r.algebra = Some(algebra_section(&a));
        r.decomposition = Some(decomposition_section(&d, &m));
        r.embedding = Some(embedding_section(&e, &m, &y));
        r.verdict = Some(verdict_section(&classify_two_jet(&m).unwrap(), Some(&m)));
        r.warn("example warning");
        r.time("solve", 12);
        r.corpus = Some(CorpusSummary { seed: 3, count: 0, family: Some("shear".into()), entries: vec![], passed: 0, failed: 0 });
        r
    }

    #[test]
    fn json_round_trip() {
        let r = full_report();
        let text = r.to_json();
        assert_eq!(Report::from_json(&text).unwrap(), r);
        let minimal = Report::new("check");
        assert_eq!(Report::from_json(&minimal.to_json()).unwrap(), minimal);
        assert!(!minimal.to_json().contains("timings"));
    }

    #[test]
    fn contents() {
        let r = full_report();
        let m = r.model.as_ref().unwrap();
        assert_eq!(m.weight, "1/3,1/3");
        assert_eq!(m.multitype, ["3".to_string(), "3".to_string()]);
        let a = r.algebra.as_ref().unwrap();
        assert_eq!(a.g_c_dim, 1);
        let gc: Vec<_> = a.components.iter().filter(|c| c.kind == "generalized_rotation" && c.dim > 0).collect();
        assert_eq!(gc.len(), 1);
        assert_eq!(gc[0].weight, "1/3");
        let d = r.decomposition.as_ref().unwrap();
        assert!(d.resynthesis_exact);
        assert_eq!(r.embedding.as_ref().unwrap().ambient_dim, 5);
        assert_eq!(r.verdict.as_ref().unwrap().tag, "HIGHER_ORDER_POSSIBLE");
        assert!(r.to_text().contains("dim g_c = 1"));
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["schema_version"], 1);
        assert!(v["model"]["weight"].is_string());
    }
}
